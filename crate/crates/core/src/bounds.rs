//! Inequalities on the spectral radius, energy, Estrada index and spread of
//! `D_α`, each evaluated against the computed spectrum as a [`BoundResult`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distance::{is_transmission_regular, DistanceData};
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_2x2, frobenius_norm, quotient_matrix, QuotientMatrix, SymMatrix};
use crate::spectrum::{build_alpha_matrix, GraphInvariants, Spectrum};

/// Absolute inequality tolerance, scaled by `1 + |actual|`.
pub const DEFAULT_BOUND_TOL: f64 = 1e-8;

macro_rules! bound_ids {
    ($($variant:ident => $name:literal,)*) => {
        /// Identifier of one evaluated inequality.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(rename_all = "snake_case")]
        pub enum BoundId {
            $($variant,)*
        }

        impl BoundId {
            pub const ALL: &'static [BoundId] = &[$(BoundId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(BoundId::$variant => $name,)*
                }
            }
        }

        impl FromStr for BoundId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($name => Ok(BoundId::$variant),)*
                    other => Err(Error::Config(format!("unknown bound id '{other}'"))),
                }
            }
        }
    };
}

bound_ids! {
    RadiusAverageTransmission => "radius_average_transmission",
    RadiusRowSum => "radius_row_sum",
    RadiusQuadratic => "radius_quadratic",
    RadiusFrobenius => "radius_frobenius",
    EnergyCompleteLower => "energy_complete_lower",
    EnergyDeviation => "energy_deviation",
    EnergyMoment => "energy_moment",
    EnergyHalfRadius => "energy_half_radius",
    FrobeniusTransmission => "frobenius_transmission",
    EstradaOmega => "estrada_omega",
    EstradaAmGm => "estrada_am_gm",
    EstradaAverageTransmission => "estrada_average_transmission",
    EstradaRegular => "estrada_regular",
    EstradaEnergy => "estrada_energy",
    SpreadQuotient => "spread_quotient",
    PolyRowSumLinear => "poly_row_sum_linear",
    PolyRowSumSquare => "poly_row_sum_square",
    PolyRowSumShifted => "poly_row_sum_shifted",
    WeightedTransmission => "weighted_transmission",
    QuotientInterlacing => "quotient_interlacing",
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

/// Inequality tolerance: slack `≥ −abs·(1 + |actual|)` counts as holding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: DEFAULT_BOUND_TOL,
        }
    }
}

impl Tolerance {
    pub fn new(abs: f64) -> Self {
        Tolerance { abs }
    }

    pub fn scaled(&self, actual: f64) -> f64 {
        self.abs * (1.0 + actual.abs())
    }
}

/// One inequality instance evaluated on one (graph, α).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult {
    pub bound_id: BoundId,
    pub side: Side,
    pub bound_value: f64,
    pub actual_value: f64,
    /// Positive when satisfied: `actual − bound` for lower bounds,
    /// `bound − actual` for upper bounds.
    pub slack: f64,
    /// `None` when not applicable.
    pub holds: Option<bool>,
    pub applicable: bool,
    /// Whether the structural equality condition is met, for bounds that
    /// characterise their equality case.
    pub equality_structural: Option<bool>,
    /// The inequality is claimed strict.
    pub strict: bool,
    /// The bound value overflowed to infinity.
    pub overflow: bool,
    pub details: BTreeMap<String, f64>,
    pub note: Option<String>,
}

impl BoundResult {
    fn evaluate(id: BoundId, side: Side, bound: f64, actual: f64, tol: Tolerance) -> Self {
        let slack = match side {
            Side::Lower => actual - bound,
            Side::Upper => bound - actual,
        };
        let holds = !slack.is_nan() && slack >= -tol.scaled(actual);
        BoundResult {
            bound_id: id,
            side,
            bound_value: bound,
            actual_value: actual,
            slack,
            holds: Some(holds),
            applicable: true,
            equality_structural: None,
            strict: false,
            overflow: bound.is_infinite(),
            details: BTreeMap::new(),
            note: None,
        }
    }

    pub fn lower(id: BoundId, bound: f64, actual: f64, tol: Tolerance) -> Self {
        Self::evaluate(id, Side::Lower, bound, actual, tol)
    }

    pub fn upper(id: BoundId, bound: f64, actual: f64, tol: Tolerance) -> Self {
        Self::evaluate(id, Side::Upper, bound, actual, tol)
    }

    /// Placeholder for a bound whose α-range or graph-class precondition
    /// fails.
    pub fn not_applicable(id: BoundId, side: Side, reason: impl Into<String>) -> Self {
        BoundResult {
            bound_id: id,
            side,
            bound_value: f64::NAN,
            actual_value: f64::NAN,
            slack: f64::NAN,
            holds: None,
            applicable: false,
            equality_structural: None,
            strict: false,
            overflow: false,
            details: BTreeMap::new(),
            note: Some(reason.into()),
        }
    }

    fn with_equality(mut self, structural: bool) -> Self {
        self.equality_structural = Some(structural);
        self
    }

    fn strict(mut self) -> Self {
        self.strict = true;
        self
    }

    fn detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }

    /// Applicable and violated beyond tolerance.
    pub fn is_violation(&self) -> bool {
        self.holds == Some(false)
    }

    /// `|slack|` within the scaled tolerance.
    pub fn is_tight(&self, tol: Tolerance) -> bool {
        self.applicable && self.slack.abs() < tol.scaled(self.actual_value)
    }
}

/// Real polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::Precondition(
                "polynomial coefficients must be finite".into(),
            ));
        }
        Ok(Polynomial { coefficients })
    }

    /// `p(x) = x`
    pub fn identity() -> Self {
        Polynomial {
            coefficients: vec![0.0, 1.0],
        }
    }

    /// `p(x) = x²`
    pub fn square() -> Self {
        Polynomial {
            coefficients: vec![0.0, 0.0, 1.0],
        }
    }

    /// `p(x) = x² − shift·x`
    pub fn shifted_square(shift: f64) -> Self {
        Polynomial {
            coefficients: vec![0.0, -shift, 1.0],
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .rposition(|&c| c != 0.0)
            .unwrap_or(0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c)
    }

    /// Row sums of `p(M)`, i.e. `p(M)·1`, by Horner's rule with repeated
    /// matrix-vector products.
    pub fn matrix_row_sums(&self, m: &SymMatrix) -> Vec<f64> {
        let n = m.n();
        let mut acc = vec![0.0; n];
        for &c in self.coefficients.iter().rev() {
            acc = m.mul_vec(&acc);
            for v in &mut acc {
                *v += c;
            }
        }
        acc
    }
}

fn require_n(d: &DistanceData, min: usize) -> Result<()> {
    if d.n() < min {
        Err(Error::Precondition(format!(
            "bound needs n >= {min}, got n = {}",
            d.n()
        )))
    } else {
        Ok(())
    }
}

fn in_half_open_upper(alpha: f64) -> bool {
    (0.5..1.0).contains(&alpha)
}

/// Exact test for `G ≅ K_n` from distance data: all distances equal 1.
pub fn is_complete(d: &DistanceData) -> bool {
    let n = d.n() as u64;
    d.wiener() == n * (n - 1) / 2
}

/// `‖D_α‖_F² = α² Σ Tr² + 2(1 − α)² S`, from the integer data.
fn alpha_frobenius_sq(d: &DistanceData, alpha: f64) -> f64 {
    let b = 1.0 - alpha;
    alpha * alpha * d.tr_sq_sum() as f64 + 2.0 * b * b * d.s_sum() as f64
}

/// Quadratic-root bound `(b + √(b² + 4C))/2` with `b = (1 − α)(x − 1)` and
/// `C = αx² + 2(1 − α)W − (1 − α)(n − 1)x`, where `x` is the minimum
/// (lower bound) or maximum (upper bound) transmission. Returns the bound,
/// the radicand and the alternative with `− 4C` under the root.
fn quadratic_radius(d: &DistanceData, alpha: f64, x: f64) -> (f64, f64, f64, f64) {
    let beta = 1.0 - alpha;
    let n = d.n() as f64;
    let w = d.wiener() as f64;
    let b = beta * (x - 1.0);
    let c = alpha * x * x + 2.0 * beta * w - beta * (n - 1.0) * x;
    let radicand = b * b + 4.0 * c;
    let printed_radicand = b * b - 4.0 * c;
    let printed = if printed_radicand >= 0.0 {
        (b + printed_radicand.sqrt()) / 2.0
    } else {
        f64::NAN
    };
    (
        (b + radicand.max(0.0).sqrt()) / 2.0,
        c,
        printed,
        printed_radicand,
    )
}

/// Bounds on the spectral radius `σ_1`.
pub fn radius_bounds(d: &DistanceData, s: &Spectrum, tol: Tolerance) -> Result<Vec<BoundResult>> {
    require_n(d, 2)?;
    let alpha = s.alpha();
    let n = d.n() as f64;
    let w = d.wiener() as f64;
    let rho = s.radius();
    let regular = is_transmission_regular(d);
    let mut out = Vec::with_capacity(6);

    out.push(
        BoundResult::lower(BoundId::RadiusAverageTransmission, 2.0 * w / n, rho, tol)
            .with_equality(regular),
    );
    out.push(
        BoundResult::lower(BoundId::RadiusRowSum, d.min_tr() as f64, rho, tol)
            .with_equality(regular),
    );
    out.push(
        BoundResult::upper(BoundId::RadiusRowSum, d.max_tr() as f64, rho, tol)
            .with_equality(regular),
    );

    if in_half_open_upper(alpha) {
        for (side, x) in [
            (Side::Lower, d.min_tr() as f64),
            (Side::Upper, d.max_tr() as f64),
        ] {
            let (bound, c, printed, printed_radicand) = quadratic_radius(d, alpha, x);
            let r = match side {
                Side::Lower => BoundResult::lower(BoundId::RadiusQuadratic, bound, rho, tol),
                Side::Upper => BoundResult::upper(BoundId::RadiusQuadratic, bound, rho, tol),
            };
            out.push(
                r.detail("constant_term", c)
                    .detail("printed_value", printed)
                    .detail("printed_radicand", printed_radicand),
            );
        }
    } else {
        for side in [Side::Lower, Side::Upper] {
            out.push(BoundResult::not_applicable(
                BoundId::RadiusQuadratic,
                side,
                "requires alpha in [1/2, 1)",
            ));
        }
    }

    let center = 2.0 * alpha * w / n;
    let deviation = (alpha_frobenius_sq(d, alpha) - 4.0 * alpha * alpha * w * w / n).max(0.0);
    let bound = center + ((n - 1.0) / n * deviation).sqrt();
    out.push(
        BoundResult::upper(BoundId::RadiusFrobenius, bound, rho, tol).with_equality(is_complete(d)),
    );
    Ok(out)
}

/// Bounds on the α-distance energy, plus the strict Frobenius-norm bound.
pub fn energy_bounds(
    d: &DistanceData,
    s: &Spectrum,
    inv: &GraphInvariants,
    tol: Tolerance,
) -> Result<Vec<BoundResult>> {
    require_n(d, 2)?;
    let alpha = s.alpha();
    let beta = 1.0 - alpha;
    let nn = d.n();
    let n = nn as f64;
    let w = d.wiener() as f64;
    let energy = inv.energy;
    let mut out = Vec::with_capacity(5);

    if in_half_open_upper(alpha) {
        out.push(
            BoundResult::lower(
                BoundId::EnergyCompleteLower,
                2.0 * beta * (n - 1.0),
                energy,
                tol,
            )
            .with_equality(is_complete(d)),
        );
    } else {
        out.push(BoundResult::not_applicable(
            BoundId::EnergyCompleteLower,
            Side::Lower,
            "requires alpha in [1/2, 1)",
        ));
    }

    let avg = 2.0 * w / n;
    let spread: f64 = d
        .transmissions()
        .iter()
        .map(|&t| (t as f64 - avg).powi(2))
        .sum();
    let z = beta * beta * 2.0 * d.s_sum() as f64 + alpha * alpha * spread;
    out.push(
        BoundResult::upper(BoundId::EnergyDeviation, (n * z).sqrt(), energy, tol).detail("z", z),
    );

    let radicand = (alpha * alpha * d.tr_sq_sum() as f64 + 2.0 * beta * beta * d.s_sum() as f64)
        * n
        - 4.0 * alpha * alpha * w * w;
    out.push(BoundResult::upper(
        BoundId::EnergyMoment,
        radicand.max(0.0).sqrt(),
        energy,
        tol,
    ));

    if in_half_open_upper(alpha) {
        out.push(
            BoundResult::upper(BoundId::EnergyHalfRadius, n * s.radius() / 2.0, energy, tol)
                .strict()
                .detail("smallest_eigenvalue", s.smallest()),
        );
    } else {
        out.push(BoundResult::not_applicable(
            BoundId::EnergyHalfRadius,
            Side::Upper,
            "requires alpha in [1/2, 1)",
        ));
    }

    let actual_norm = frobenius_norm(&build_alpha_matrix(d, alpha)?);
    let total_tr = 2.0 * w;
    let bound =
        (alpha * alpha * d.tr_sq_sum() as f64 + beta * beta * total_tr * total_tr / n).sqrt();
    out.push(BoundResult::upper(BoundId::FrobeniusTransmission, bound, actual_norm, tol).strict());
    Ok(out)
}

/// Bounds on the α-distance Estrada index.
pub fn estrada_bounds(
    d: &DistanceData,
    s: &Spectrum,
    inv: &GraphInvariants,
    tol: Tolerance,
) -> Result<Vec<BoundResult>> {
    require_n(d, 2)?;
    let alpha = s.alpha();
    let beta = 1.0 - alpha;
    let n = d.n() as f64;
    let w = d.wiener() as f64;
    let estrada = inv.estrada;
    let mut out = Vec::with_capacity(5);

    let omega =
        (alpha * alpha * d.tr_sq_sum() as f64 + 2.0 * beta * beta * d.s_sum() as f64).sqrt();
    let bound = n + 2.0 * alpha * w - 1.0 - omega + omega.exp();
    out.push(BoundResult::upper(BoundId::EstradaOmega, bound, estrada, tol).detail("omega", omega));

    let bound = (n + 4.0 * alpha * w + n * (n - 1.0) * (4.0 * alpha * w / n).exp()).sqrt();
    out.push(BoundResult::lower(
        BoundId::EstradaAmGm,
        bound,
        estrada,
        tol,
    ));

    let avg = 2.0 * w / n;
    let bound = avg.exp() + (n - 1.0) + 2.0 * alpha * w - avg;
    out.push(BoundResult::lower(
        BoundId::EstradaAverageTransmission,
        bound,
        estrada,
        tol,
    ));

    if is_transmission_regular(d) {
        let r = d.min_tr() as f64;
        let bound = r.exp() + (n - 1.0) + 2.0 * alpha * r - r;
        out.push(BoundResult::lower(BoundId::EstradaRegular, bound, estrada, tol).detail("r", r));
    } else {
        out.push(BoundResult::not_applicable(
            BoundId::EstradaRegular,
            Side::Lower,
            "requires a transmission regular graph",
        ));
    }

    let energy = inv.energy;
    let bound = s.center().exp() * (n - 1.0 - energy + energy.exp());
    out.push(BoundResult::upper(
        BoundId::EstradaEnergy,
        bound,
        estrada,
        tol,
    ));
    Ok(out)
}

/// The 2×2 quotient of `D_α` for the partition `{vertex}`, `V ∖ {vertex}`,
/// written out entrywise from the transmission data.
pub fn vertex_split_quotient(d: &DistanceData, alpha: f64, vertex: usize) -> QuotientMatrix {
    let n1 = d.n() as f64 - 1.0;
    let tr = d.tr(vertex) as f64;
    let w = d.wiener() as f64;
    QuotientMatrix::from_entries_2x2([
        [alpha * tr, (1.0 - alpha) * tr],
        [(1.0 - alpha) * tr / n1, (2.0 * w - (2.0 - alpha) * tr) / n1],
    ])
}

/// Closed-form spread value with the `αn·Tr²` term inside the first square,
/// kept for comparison with the quotient-derived gap.
pub fn spread_printed_value(d: &DistanceData, alpha: f64, vertex: usize) -> f64 {
    let n = d.n() as f64;
    let tr = d.tr(vertex) as f64;
    let w = d.wiener() as f64;
    let first = 2.0 * w - 2.0 * tr + alpha * n * tr * tr;
    let radicand = first * first - 4.0 * (n - 1.0) * (2.0 * alpha * tr * w - tr * tr);
    if radicand >= 0.0 {
        radicand.sqrt() / (n - 1.0)
    } else {
        f64::NAN
    }
}

/// Lower bound on `σ_1 − σ_n` from the eigenvalue gap of the vertex-split
/// quotient matrix.
pub fn spread_bound(
    d: &DistanceData,
    s: &Spectrum,
    vertex: usize,
    tol: Tolerance,
) -> Result<BoundResult> {
    require_n(d, 3)?;
    if vertex >= d.n() {
        return Err(Error::VertexOutOfRange { vertex, n: d.n() });
    }
    let alpha = s.alpha();
    let q = vertex_split_quotient(d, alpha, vertex);
    let (mu1, mu2) = eigenvalues_2x2(&q)?;
    let gap = mu1 - mu2;
    let actual = s.radius() - s.smallest();
    Ok(
        BoundResult::lower(BoundId::SpreadQuotient, gap, actual, tol)
            .detail("vertex", vertex as f64)
            .detail("b11", q.get(0, 0))
            .detail("b12", q.get(0, 1))
            .detail("b21", q.get(1, 0))
            .detail("b22", q.get(1, 1))
            .detail("printed_value", spread_printed_value(d, alpha, vertex)),
    )
}

/// Row-sum bracket `min R_i(p(D_α)) ≤ p(σ_1) ≤ max R_i(p(D_α))`, returned as
/// a lower and an upper result. The structural equality flag records
/// whether all row sums coincide (otherwise both sides are strict).
pub fn poly_rowsum_bound(
    d: &DistanceData,
    s: &Spectrum,
    p: &Polynomial,
    id: BoundId,
    tol: Tolerance,
) -> Result<Vec<BoundResult>> {
    require_n(d, 2)?;
    let alpha = s.alpha();
    if !in_half_open_upper(alpha) {
        return Ok(vec![
            BoundResult::not_applicable(id, Side::Lower, "requires alpha in [1/2, 1)"),
            BoundResult::not_applicable(id, Side::Upper, "requires alpha in [1/2, 1)"),
        ]);
    }
    let m = build_alpha_matrix(d, alpha)?;
    let sums = p.matrix_row_sums(&m);
    let lo = sums.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let all_equal = hi - lo <= 1e-12 * (1.0 + hi.abs().max(lo.abs()));
    let actual = p.eval(s.radius());
    let strict = !all_equal;
    let mut lower = BoundResult::lower(id, lo, actual, tol).with_equality(all_equal);
    let mut upper = BoundResult::upper(id, hi, actual, tol).with_equality(all_equal);
    lower.strict = strict;
    upper.strict = strict;
    lower = lower.detail("degree", p.degree() as f64);
    upper = upper.detail("degree", p.degree() as f64);
    Ok(vec![lower, upper])
}

/// The three polynomials checked by default: `x`, `x²` and
/// `x² − (1 − α)(t − 1)x` with `t` the minimum transmission.
pub fn default_polynomials(d: &DistanceData, alpha: f64) -> [(BoundId, Polynomial); 3] {
    [
        (BoundId::PolyRowSumLinear, Polynomial::identity()),
        (BoundId::PolyRowSumSquare, Polynomial::square()),
        (
            BoundId::PolyRowSumShifted,
            Polynomial::shifted_square((1.0 - alpha) * (d.min_tr() as f64 - 1.0)),
        ),
    ]
}

/// Floor on the row sums of `p(D_α)` for `p(x) = x² − (1 − α)(t − 1)x`:
/// `αt² + 2(1 − α)W − (1 − α)(n − 1)t`.
pub fn shifted_rowsum_floor(d: &DistanceData, alpha: f64) -> f64 {
    let beta = 1.0 - alpha;
    let t = d.min_tr() as f64;
    alpha * t * t + 2.0 * beta * d.wiener() as f64 - beta * (d.n() as f64 - 1.0) * t
}

/// Bracket on `Σ_{v≠u} d(u, v) Tr(v)` in terms of `Tr(u)`, `W` and the
/// extreme transmissions. Computed in exact integer arithmetic.
pub fn weighted_transmission_bounds(
    d: &DistanceData,
    vertex: usize,
    tol: Tolerance,
) -> Result<Vec<BoundResult>> {
    if vertex >= d.n() {
        return Err(Error::VertexOutOfRange { vertex, n: d.n() });
    }
    let actual = d.weighted_transmission(vertex) as i128;
    let two_w = 2 * d.wiener() as i128;
    let tr_u = d.tr(vertex) as i128;
    let n1 = d.n() as i128 - 1;
    let t = d.min_tr() as i128;
    let big_t = d.max_tr() as i128;
    let lower = two_w + (t - 1) * tr_u - n1 * t;
    let upper = two_w + (big_t - 1) * tr_u - n1 * big_t;
    Ok(vec![
        BoundResult::lower(
            BoundId::WeightedTransmission,
            lower as f64,
            actual as f64,
            tol,
        )
        .detail("vertex", vertex as f64),
        BoundResult::upper(
            BoundId::WeightedTransmission,
            upper as f64,
            actual as f64,
            tol,
        )
        .detail("vertex", vertex as f64),
    ])
}

/// Interlacing of a 2-block quotient: `σ_1 ≥ μ_1 ≥ σ_{n−1}` and
/// `σ_2 ≥ μ_2 ≥ σ_n`. The result's actual value is the smallest of the
/// four differences (bound value 0).
pub fn quotient_interlacing_check(
    m: &SymMatrix,
    s: &Spectrum,
    partition: &[Vec<usize>],
    tol: Tolerance,
) -> Result<BoundResult> {
    if partition.len() != 2 {
        return Err(Error::InvalidPartition(format!(
            "expected 2 blocks, got {}",
            partition.len()
        )));
    }
    if m.n() != s.n() {
        return Err(Error::Precondition(
            "matrix and spectrum sizes differ".into(),
        ));
    }
    let q = quotient_matrix(m, partition)?;
    let (mu1, mu2) = eigenvalues_2x2(&q)?;
    let sigma = s.values();
    let n = sigma.len();
    let margin = [
        sigma[0] - mu1,
        mu1 - sigma[n - 2],
        sigma[1] - mu2,
        mu2 - sigma[n - 1],
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min);
    Ok(BoundResult::lower(
        BoundId::QuotientInterlacing,
        0.0,
        margin,
        Tolerance::new(tol.abs),
    )
    .detail("mu1", mu1)
    .detail("mu2", mu2)
    .detail("block1_size", partition[0].len() as f64))
}
