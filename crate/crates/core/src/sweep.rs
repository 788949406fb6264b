//! Corpus construction and the (graph, α) sweep that evaluates every
//! selected bound.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    default_polynomials, energy_bounds, estrada_bounds, poly_rowsum_bound,
    quotient_interlacing_check, radius_bounds, spread_bound, weighted_transmission_bounds, BoundId,
    BoundResult, Side, Tolerance,
};
use crate::closed_forms::{complete_spectrum, star_spectrum};
use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::{generate_family, generate_random_connected, Family, Graph};
use crate::linalg::DEFAULT_EIG_TOL;
use crate::spectrum::{
    alpha_spectrum, build_alpha_matrix, graph_invariants, moment_identities, GraphInvariants,
};

/// `{0, 0.1, …, 0.9, 0.99}`
pub fn default_alpha_grid() -> Vec<f64> {
    let mut g: Vec<f64> = (0..10).map(|i| i as f64 / 10.0).collect();
    g.push(0.99);
    g
}

/// A graph with a stable identifier.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedGraph {
    pub id: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Corpus {
    Graphs(Vec<NamedGraph>),
    Family {
        family: Family,
        n_min: usize,
        n_max: usize,
    },
    Random {
        n_min: usize,
        n_max: usize,
        extra_min: usize,
        extra_max: usize,
        seeds: Vec<u64>,
    },
}

impl Corpus {
    /// Materializes the corpus. Family sizes that the family does not admit
    /// are skipped; an inverted range is an error.
    pub fn build(&self) -> Result<Vec<NamedGraph>> {
        match self {
            Corpus::Graphs(gs) => Ok(gs.clone()),
            Corpus::Family {
                family,
                n_min,
                n_max,
            } => {
                check_range("n", *n_min, *n_max)?;
                Ok((*n_min..=*n_max)
                    .filter_map(|n| {
                        generate_family(*family, n).ok().map(|graph| NamedGraph {
                            id: format!("{family}-{n}"),
                            graph,
                        })
                    })
                    .collect())
            }
            Corpus::Random {
                n_min,
                n_max,
                extra_min,
                extra_max,
                seeds,
            } => {
                check_range("n", *n_min, *n_max)?;
                check_range("extra edges", *extra_min, *extra_max)?;
                if *n_min == 0 {
                    return Err(Error::Config("random graphs need n >= 1".into()));
                }
                let mut out = Vec::new();
                for n in *n_min..=*n_max {
                    for &seed in seeds {
                        let graph = random_corpus_graph(n, *extra_min, *extra_max, seed)?;
                        out.push(NamedGraph {
                            id: format!("random-n{n}-s{seed}"),
                            graph,
                        });
                    }
                }
                Ok(out)
            }
        }
    }
}

fn check_range(what: &str, lo: usize, hi: usize) -> Result<()> {
    if lo > hi {
        Err(Error::Config(format!("empty {what} range {lo}..{hi}")))
    } else {
        Ok(())
    }
}

/// The random corpus member for `(n, seed)`: the number of extra edges is
/// drawn uniformly from the requested range, capped at what `n` allows.
pub fn random_corpus_graph(
    n: usize,
    extra_min: usize,
    extra_max: usize,
    seed: u64,
) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32));
    let room = (n * n.saturating_sub(1) / 2).saturating_sub(n.saturating_sub(1));
    let hi = extra_max.min(room);
    let lo = extra_min.min(hi);
    let extra = rng.gen_range(lo..=hi);
    generate_random_connected(n, extra, rng.gen())
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum BoundSelection {
    #[default]
    All,
    Only(BTreeSet<BoundId>),
}

impl BoundSelection {
    pub fn includes(&self, id: BoundId) -> bool {
        match self {
            BoundSelection::All => true,
            BoundSelection::Only(ids) => ids.contains(&id),
        }
    }

    /// `"all"` or a comma list of bound ids.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim() == "all" {
            return Ok(BoundSelection::All);
        }
        let ids = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<BTreeSet<BoundId>>>()?;
        if ids.is_empty() {
            return Err(Error::Config("empty bound selection".into()));
        }
        Ok(BoundSelection::Only(ids))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub alpha_grid: Vec<f64>,
    pub tolerance: Tolerance,
    pub corpus: Corpus,
    pub bounds: BoundSelection,
    /// Compare spectra of stars and complete graphs with their closed forms.
    pub closed_forms: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl SweepConfig {
    pub fn new(corpus: Corpus) -> Self {
        SweepConfig {
            alpha_grid: default_alpha_grid(),
            tolerance: Tolerance::default(),
            corpus,
            bounds: BoundSelection::All,
            closed_forms: false,
            threads: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha_grid.is_empty() {
            return Err(Error::Config("alpha grid is empty".into()));
        }
        if let Some(&a) = self.alpha_grid.iter().find(|a| !(0.0..=1.0).contains(*a)) {
            return Err(Error::AlphaOutOfRange(a));
        }
        if !(self.tolerance.abs > 0.0 && self.tolerance.abs.is_finite()) {
            return Err(Error::Config(format!(
                "tolerance must be positive, got {}",
                self.tolerance.abs
            )));
        }
        Ok(())
    }

    /// Grid sorted ascending with duplicates removed.
    fn grid(&self) -> Vec<f64> {
        let mut g = self.alpha_grid.clone();
        g.sort_by(f64::total_cmp);
        g.dedup();
        g
    }
}

/// Results for one graph at one α.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaRecord {
    pub alpha: f64,
    pub radius: f64,
    pub smallest: f64,
    pub energy: f64,
    /// `None` when `e^{σ_1}` overflows.
    pub estrada: Option<f64>,
    /// Largest relative residual of the two trace identities.
    pub moment_residual: f64,
    pub closed_form_deviation: Option<f64>,
    pub bounds: Vec<BoundResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphRecord {
    pub index: usize,
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub s_sum: u64,
    pub tr_min: u64,
    pub tr_max: u64,
    pub tr_avg: f64,
    /// α-independent bounds.
    pub structural_bounds: Vec<BoundResult>,
    pub alphas: Vec<AlphaRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph_id: String,
    pub alpha: Option<f64>,
    pub bound_id: BoundId,
    pub side: Side,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub evaluations: usize,
    pub holds: usize,
    pub violations: usize,
    pub inapplicable: usize,
    pub tight: usize,
    /// Most negative slack among applicable results, if any is negative.
    pub max_negative_slack: Option<f64>,
    /// Per bound id, how often the alternative closed-form value differs
    /// from the evaluated one (or is undefined).
    pub formula_discrepancies: BTreeMap<String, usize>,
    pub max_closed_form_deviation: Option<f64>,
    pub max_moment_residual: Option<f64>,
    pub violation_list: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub alpha_grid: Vec<f64>,
    pub tolerance: f64,
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn has_violations(&self) -> bool {
        self.summary.violations > 0
    }

    /// Every bound result with its graph id and α (`None` for structural
    /// bounds), in report order.
    pub fn results(&self) -> impl Iterator<Item = (&GraphRecord, Option<f64>, &BoundResult)> {
        self.records.iter().flat_map(|r| {
            r.structural_bounds.iter().map(move |b| (r, None, b)).chain(
                r.alphas
                    .iter()
                    .flat_map(move |a| a.bounds.iter().map(move |b| (r, Some(a.alpha), b))),
            )
        })
    }
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && g.m() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

fn closed_form_values(g: &Graph, alpha: f64) -> Option<Vec<f64>> {
    if is_star(g) {
        star_spectrum(g.n(), alpha).ok().map(|s| s.expanded())
    } else if g.n() >= 2 && g.is_complete() {
        complete_spectrum(g.n(), alpha).ok().map(|s| s.expanded())
    } else {
        None
    }
}

fn relative_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / (1.0 + rhs.abs())
}

fn evaluate_alpha(
    g: &Graph,
    d: &DistanceData,
    alpha: f64,
    cfg: &SweepConfig,
) -> Result<AlphaRecord> {
    let tol = cfg.tolerance;
    let s = alpha_spectrum(d, alpha, DEFAULT_EIG_TOL)?;
    let mc = moment_identities(d, &s);
    let moment_residual =
        relative_residual(mc.lhs1, mc.rhs1).max(relative_residual(mc.lhs2, mc.rhs2));
    let closed_form_deviation = if cfg.closed_forms {
        closed_form_values(g, alpha).map(|want| {
            want.iter()
                .zip(s.values())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    } else {
        None
    };

    let (inv, estrada) = match graph_invariants(&s) {
        Ok(inv) => (inv, Some(inv.estrada)),
        Err(Error::Overflow { .. }) => {
            let values = s.values();
            let inv = GraphInvariants {
                energy: crate::spectrum::alpha_energy(&s),
                estrada: f64::INFINITY,
                moment1: values.iter().sum(),
                moment2: values.iter().map(|v| v * v).sum(),
            };
            (inv, None)
        }
        Err(e) => return Err(e),
    };

    let mut bounds = Vec::new();
    if d.n() >= 2 {
        bounds.extend(radius_bounds(d, &s, tol)?);
        bounds.extend(energy_bounds(d, &s, &inv, tol)?);
        if estrada.is_some() {
            bounds.extend(estrada_bounds(d, &s, &inv, tol)?);
        } else {
            for (id, side) in [
                (BoundId::EstradaOmega, Side::Upper),
                (BoundId::EstradaAmGm, Side::Lower),
                (BoundId::EstradaAverageTransmission, Side::Lower),
                (BoundId::EstradaRegular, Side::Lower),
                (BoundId::EstradaEnergy, Side::Upper),
            ] {
                bounds.push(BoundResult::not_applicable(
                    id,
                    side,
                    "estrada index overflows",
                ));
            }
        }
        for (id, p) in default_polynomials(d, alpha) {
            if cfg.bounds.includes(id) {
                bounds.extend(poly_rowsum_bound(d, &s, &p, id, tol)?);
            }
        }
        if cfg.bounds.includes(BoundId::QuotientInterlacing) {
            let m = build_alpha_matrix(d, alpha)?;
            let n = d.n();
            for v in 0..n {
                let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                bounds.push(quotient_interlacing_check(&m, &s, &[vec![v], rest], tol)?);
            }
            if n >= 4 {
                let even: Vec<usize> = (0..n).step_by(2).collect();
                let odd: Vec<usize> = (1..n).step_by(2).collect();
                bounds.push(quotient_interlacing_check(&m, &s, &[even, odd], tol)?);
            }
        }
    }
    if d.n() >= 3 && cfg.bounds.includes(BoundId::SpreadQuotient) {
        for v in 0..d.n() {
            bounds.push(spread_bound(d, &s, v, tol)?);
        }
    }
    bounds.retain(|b| cfg.bounds.includes(b.bound_id));
    sort_bounds(&mut bounds);

    Ok(AlphaRecord {
        alpha,
        radius: s.radius(),
        smallest: s.smallest(),
        energy: inv.energy,
        estrada,
        moment_residual,
        closed_form_deviation,
        bounds,
    })
}

/// Stable sort by (bound id, side); results sharing both keep their
/// generation order (vertex index, partition).
fn sort_bounds(bounds: &mut [BoundResult]) {
    bounds.sort_by_key(|b| (b.bound_id, b.side));
}

fn structural_bounds(d: &DistanceData, cfg: &SweepConfig) -> Result<Vec<BoundResult>> {
    let mut out = Vec::new();
    if cfg.bounds.includes(BoundId::WeightedTransmission) {
        for v in 0..d.n() {
            out.extend(weighted_transmission_bounds(d, v, cfg.tolerance)?);
        }
    }
    sort_bounds(&mut out);
    Ok(out)
}

fn formula_discrepancy(b: &BoundResult, tol: Tolerance) -> bool {
    match b.details.get("printed_value") {
        Some(&p) if b.applicable => {
            p.is_nan() || (p - b.bound_value).abs() > tol.scaled(b.bound_value)
        }
        _ => false,
    }
}

fn summarize(records: &[GraphRecord], tol: Tolerance) -> Summary {
    let mut s = Summary {
        graphs: records.len(),
        evaluations: 0,
        holds: 0,
        violations: 0,
        inapplicable: 0,
        tight: 0,
        max_negative_slack: None,
        formula_discrepancies: BTreeMap::new(),
        max_closed_form_deviation: None,
        max_moment_residual: None,
        violation_list: Vec::new(),
    };
    let mut visit = |graph_id: &str, alpha: Option<f64>, b: &BoundResult| {
        s.evaluations += 1;
        match b.holds {
            None => s.inapplicable += 1,
            Some(true) => s.holds += 1,
            Some(false) => {
                s.violations += 1;
                s.violation_list.push(Violation {
                    graph_id: graph_id.to_string(),
                    alpha,
                    bound_id: b.bound_id,
                    side: b.side,
                    slack: b.slack,
                });
            }
        }
        if b.is_tight(tol) {
            s.tight += 1;
        }
        if b.applicable && b.slack < 0.0 {
            s.max_negative_slack = Some(
                s.max_negative_slack
                    .map_or(b.slack, |m: f64| m.min(b.slack)),
            );
        }
        if formula_discrepancy(b, tol) {
            *s.formula_discrepancies
                .entry(b.bound_id.to_string())
                .or_insert(0) += 1;
        }
    };
    for r in records {
        for b in &r.structural_bounds {
            visit(&r.id, None, b);
        }
        for a in &r.alphas {
            for b in &a.bounds {
                visit(&r.id, Some(a.alpha), b);
            }
        }
    }
    for a in records.iter().flat_map(|r| &r.alphas) {
        if let Some(dev) = a.closed_form_deviation {
            s.max_closed_form_deviation =
                Some(s.max_closed_form_deviation.map_or(dev, |m: f64| m.max(dev)));
        }
        s.max_moment_residual = Some(
            s.max_moment_residual
                .map_or(a.moment_residual, |m: f64| m.max(a.moment_residual)),
        );
    }
    s
}

/// Evaluates every selected bound over corpus × grid. Work items run in
/// parallel; the report order depends only on the configuration.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Report> {
    cfg.validate()?;
    match cfg.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(|| sweep_inner(cfg)),
        None => sweep_inner(cfg),
    }
}

fn sweep_inner(cfg: &SweepConfig) -> Result<Report> {
    let graphs = cfg.corpus.build()?;
    let grid = cfg.grid();
    let distances: Vec<DistanceData> = graphs
        .par_iter()
        .map(|g| all_pairs_distances(&g.graph))
        .collect::<Result<_>>()?;

    let items: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|gi| (0..grid.len()).map(move |ai| (gi, ai)))
        .collect();
    let mut evaluated: Vec<((usize, usize), AlphaRecord)> = items
        .par_iter()
        .map(|&(gi, ai)| {
            evaluate_alpha(&graphs[gi].graph, &distances[gi], grid[ai], cfg).map(|r| ((gi, ai), r))
        })
        .collect::<Result<_>>()?;
    evaluated.sort_by_key(|(k, _)| *k);

    let mut per_graph: Vec<Vec<AlphaRecord>> = vec![Vec::new(); graphs.len()];
    for ((gi, _), rec) in evaluated {
        per_graph[gi].push(rec);
    }

    let records = graphs
        .iter()
        .zip(&distances)
        .zip(per_graph)
        .enumerate()
        .map(|(index, ((g, d), alphas))| {
            Ok(GraphRecord {
                index,
                id: g.id.clone(),
                n: d.n(),
                m: g.graph.m(),
                wiener: d.wiener(),
                s_sum: d.s_sum(),
                tr_min: d.min_tr(),
                tr_max: d.max_tr(),
                tr_avg: d.avg_tr(),
                structural_bounds: structural_bounds(d, cfg)?,
                alphas,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let summary = summarize(&records, cfg.tolerance);
    Ok(Report {
        alpha_grid: grid,
        tolerance: cfg.tolerance.abs,
        records,
        summary,
    })
}
