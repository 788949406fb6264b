//! Closed-form α-distance spectra (stars, complete graphs), the star energy
//! and radius formulas, and eigenvalues forced by twin-vertex subsets.

use serde::Serialize;

use crate::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormSource {
    Star,
    Complete,
    IndependentSubset,
    CliqueSubset,
}

/// Eigenvalues with multiplicities. Entries with bit-identical values are
/// merged.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormSpectrum {
    values_with_multiplicity: Vec<(f64, usize)>,
    source: ClosedFormSource,
}

impl ClosedFormSpectrum {
    fn new(source: ClosedFormSource, entries: impl IntoIterator<Item = (f64, usize)>) -> Self {
        let mut merged: Vec<(f64, usize)> = Vec::new();
        for (v, k) in entries {
            if k == 0 {
                continue;
            }
            match merged.iter_mut().find(|(w, _)| *w == v) {
                Some(slot) => slot.1 += k,
                None => merged.push((v, k)),
            }
        }
        merged.sort_by(|a, b| b.0.total_cmp(&a.0));
        ClosedFormSpectrum {
            values_with_multiplicity: merged,
            source,
        }
    }

    pub fn values_with_multiplicity(&self) -> &[(f64, usize)] {
        &self.values_with_multiplicity
    }

    pub fn source(&self) -> ClosedFormSource {
        self.source
    }

    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.values_with_multiplicity.iter().map(|(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.values_with_multiplicity.is_empty()
    }

    /// The full list, descending, each value repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<f64> {
        self.values_with_multiplicity
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
            .collect()
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

fn star_discriminant(n: f64, alpha: f64) -> f64 {
    (alpha - 2.0).powi(2) * n * n + 8.0 * alpha * n - 12.0 * n - 8.0 * alpha + 12.0
}

/// Spectrum of the star `S_n`: `(2n − 1)α − 2` with multiplicity `n − 2`
/// plus the two roots `(αn + 2n − 4 ± √Δ)/2`.
pub fn star_spectrum(n: usize, alpha: f64) -> Result<ClosedFormSpectrum> {
    check_alpha(alpha)?;
    if n < 3 {
        return Err(Error::Precondition(format!(
            "star spectrum needs n >= 3, got {n}"
        )));
    }
    let nf = n as f64;
    let root = star_discriminant(nf, alpha).sqrt();
    let mid = alpha * nf + 2.0 * nf - 4.0;
    Ok(ClosedFormSpectrum::new(
        ClosedFormSource::Star,
        [
            ((mid + root) / 2.0, 1),
            ((2.0 * nf - 1.0) * alpha - 2.0, n - 2),
            ((mid - root) / 2.0, 1),
        ],
    ))
}

/// Spectral radius of `S_n`, the larger root of
/// `x² − ((α + 2)n − 4)x − (n − 1)(2α − 2nα + 1) = 0`.
pub fn star_radius(n: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if n < 4 {
        return Err(Error::Precondition(format!(
            "star radius formula needs n >= 4, got {n}"
        )));
    }
    let nf = n as f64;
    let b = (alpha + 2.0) * nf - 4.0;
    let c = (nf - 1.0) * (2.0 * alpha - 2.0 * nf * alpha + 1.0);
    Ok((b + (b * b + 4.0 * c).sqrt()) / 2.0)
}

/// α-distance energy of `S_n`, term for term as the three-part closed form:
/// the large-root term (no absolute value), the small-root term and
/// `|3α − 2 − 2α/n|·(n − 2)`.
pub fn star_energy(n: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if n < 3 {
        return Err(Error::Precondition(format!(
            "star energy needs n >= 3, got {n}"
        )));
    }
    let nf = n as f64;
    let common = alpha * (-3.0 * nf * nf + 8.0 * nf - 4.0) + 2.0 * nf * nf - 4.0 * nf;
    let root = nf * star_discriminant(nf, alpha).sqrt();
    let first = (common + root) / (2.0 * nf);
    let second = ((common - root) / (2.0 * nf)).abs();
    let third = (3.0 * alpha - 2.0 - 2.0 * alpha / nf).abs() * (nf - 2.0);
    Ok(first + second + third)
}

/// Spectrum of `K_n`: `n − 1` once and `αn − 1` with multiplicity `n − 1`.
pub fn complete_spectrum(n: usize, alpha: f64) -> Result<ClosedFormSpectrum> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::Precondition(format!(
            "complete spectrum needs n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    Ok(ClosedFormSpectrum::new(
        ClosedFormSource::Complete,
        [(nf - 1.0, 1), (alpha * nf - 1.0, n - 1)],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetKind {
    Independent,
    Clique,
}

/// An eigenvalue forced by a set of twin vertices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SubsetEigenvalue {
    pub eigenvalue: f64,
    pub min_multiplicity: usize,
    pub kind: SubsetKind,
    /// Common transmission of the subset's vertices.
    pub transmission: u64,
}

/// For a subset whose vertices share the same neighbours outside the
/// subset and which is independent (resp. a clique), returns
/// `α(h + 2) − 2` (resp. `α(h + 1) − 1`) with multiplicity at least
/// `|subset| − 1`, where `h` is the common transmission.
///
/// Neighbourhoods are compared as sets, after removing subset members.
pub fn subset_eigenvalue(g: &Graph, subset: &[usize], alpha: f64) -> Result<SubsetEigenvalue> {
    check_alpha(alpha)?;
    let n = g.n();
    if subset.len() < 2 {
        return Err(Error::Precondition(
            "subset needs at least two vertices".into(),
        ));
    }
    let mut in_subset = vec![false; n];
    for &v in subset {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if in_subset[v] {
            return Err(Error::Precondition(format!(
                "vertex {v} repeated in subset"
            )));
        }
        in_subset[v] = true;
    }

    let outside = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !in_subset[u])
            .collect()
    };
    let reference = outside(subset[0]);
    for &v in &subset[1..] {
        if outside(v) != reference {
            return Err(Error::SubsetPrecondition {
                first: subset[0],
                second: v,
                reason: "different neighbourhoods outside the subset".into(),
            });
        }
    }

    let first_adjacent = g.has_edge(subset[0], subset[1]);
    for (a, &x) in subset.iter().enumerate() {
        for &y in &subset[a + 1..] {
            if g.has_edge(x, y) != first_adjacent {
                return Err(Error::SubsetPrecondition {
                    first: x,
                    second: y,
                    reason: "subset is neither independent nor a clique".into(),
                });
            }
        }
    }

    let d = all_pairs_distances(g)?;
    let h = d.tr(subset[0]);
    if let Some(&v) = subset.iter().find(|&&v| d.tr(v) != h) {
        return Err(Error::SubsetPrecondition {
            first: subset[0],
            second: v,
            reason: "transmissions differ".into(),
        });
    }
    let hf = h as f64;
    let (eigenvalue, kind) = if first_adjacent {
        (alpha * (hf + 1.0) - 1.0, SubsetKind::Clique)
    } else {
        (alpha * (hf + 2.0) - 2.0, SubsetKind::Independent)
    };
    Ok(SubsetEigenvalue {
        eigenvalue,
        min_multiplicity: subset.len() - 1,
        kind,
        transmission: h,
    })
}

/// Number of eigenvalue clusters: consecutive sorted values closer than
/// `cluster_tol` are joined.
pub fn distinct_eigenvalue_count(s: &Spectrum, cluster_tol: f64) -> usize {
    let v = s.values();
    1 + v.windows(2).filter(|w| w[0] - w[1] > cluster_tol).count()
}

/// How many of `values` lie within `tol` of `target`.
pub fn multiplicity_near(values: &[f64], target: f64, tol: f64) -> usize {
    values
        .iter()
        .filter(|&&v| (v - target).abs() <= tol)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::graph::{generate_family, Family};
    use crate::spectrum::alpha_spectrum;
    use approx::assert_abs_diff_eq;

    fn numeric(f: Family, n: usize, alpha: f64) -> Spectrum {
        let d = all_pairs_distances(&generate_family(f, n).unwrap()).unwrap();
        alpha_spectrum(&d, alpha, 1e-12).unwrap()
    }

    #[test]
    fn star_examples() {
        let s7 = 7f64.sqrt();
        let s = star_spectrum(4, 0.0).unwrap();
        assert_eq!(s.len(), 4);
        let vm = s.values_with_multiplicity();
        assert_abs_diff_eq!(vm[0].0, 2.0 + s7, epsilon = 1e-14);
        assert_abs_diff_eq!(vm[1].0, 2.0 - s7, epsilon = 1e-14);
        assert_eq!(vm[2], (-2.0, 2));

        let s3 = 3f64.sqrt();
        let p3 = star_spectrum(3, 0.0).unwrap().expanded();
        for (got, want) in p3.iter().zip([1.0 + s3, 1.0 - s3, -2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }

        for n in 3..12 {
            let s = star_spectrum(n, 1.0).unwrap();
            assert_eq!(
                s.values_with_multiplicity(),
                &[((2 * n - 3) as f64, n - 1), ((n - 1) as f64, 1)]
            );
        }
        assert!(star_spectrum(2, 0.5).is_err());
        assert!(star_spectrum(5, 1.2).is_err());
    }

    #[test]
    fn star_radius_examples() {
        assert_abs_diff_eq!(
            star_radius(4, 0.0).unwrap(),
            2.0 + 7f64.sqrt(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(star_radius(4, 0.0).unwrap(), 4.6457513, epsilon = 1e-7);
        assert_abs_diff_eq!(
            star_radius(5, 0.5).unwrap(),
            numeric(Family::Star, 5, 0.5).radius(),
            epsilon = 1e-9
        );
        for n in 4..20 {
            for k in 0..=10 {
                let a = k as f64 / 10.0;
                let nf = n as f64;
                let x = star_radius(n, a).unwrap();
                let q = x * x
                    - ((a + 2.0) * nf - 4.0) * x
                    - (nf - 1.0) * (2.0 * a - 2.0 * nf * a + 1.0);
                assert!(q.abs() < 1e-9 * (1.0 + x * x), "n={n} a={a} q={q}");
                assert_abs_diff_eq!(
                    x,
                    star_spectrum(n, a).unwrap().expanded()[0],
                    epsilon = 1e-12
                );
            }
        }
        assert!(star_radius(3, 0.5).is_err());
    }

    #[test]
    fn star_energy_examples() {
        assert_abs_diff_eq!(
            star_energy(3, 0.0).unwrap(),
            2.0 + 2.0 * 3f64.sqrt(),
            epsilon = 1e-12
        );
        let direct = crate::spectrum::alpha_energy(&numeric(Family::Star, 4, 0.0));
        assert_abs_diff_eq!(star_energy(4, 0.0).unwrap(), direct, epsilon = 1e-9);
        // Straddle the kink of |3α − 2 − 2α/n| at α = 2n/(3n − 2).
        for n in [4usize, 7, 12] {
            let kink = 2.0 * n as f64 / (3.0 * n as f64 - 2.0);
            for a in [kink - 1e-3, kink, kink + 1e-3, 2.0 / 3.0 + 1e-3] {
                let a = a.min(1.0);
                let want = crate::spectrum::alpha_energy(&numeric(Family::Star, n, a));
                assert_abs_diff_eq!(star_energy(n, a).unwrap(), want, epsilon = 1e-8);
            }
        }
        assert!(star_energy(2, 0.0).is_err());
    }

    #[test]
    fn complete_examples() {
        let k3 = complete_spectrum(3, 0.0).unwrap();
        assert_eq!(k3.values_with_multiplicity(), &[(2.0, 1), (-1.0, 2)]);
        for n in 2..10 {
            assert_eq!(
                complete_spectrum(n, 1.0)
                    .unwrap()
                    .values_with_multiplicity(),
                &[((n - 1) as f64, n)]
            );
        }
        let k4 = complete_spectrum(4, 0.5).unwrap();
        assert_eq!(k4.values_with_multiplicity(), &[(3.0, 1), (1.0, 3)]);
        let num = numeric(Family::Complete, 4, 0.5);
        for (got, want) in num.values().iter().zip(k4.expanded()) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        assert!(complete_spectrum(1, 0.5).is_err());
    }

    #[test]
    fn subset_examples() {
        let star = generate_family(Family::Star, 4).unwrap();
        let a = 0.3;
        let r = subset_eigenvalue(&star, &[1, 2, 3], a).unwrap();
        assert_eq!(r.kind, SubsetKind::Independent);
        assert_eq!(r.transmission, 5);
        assert_eq!(r.min_multiplicity, 2);
        assert_abs_diff_eq!(r.eigenvalue, 7.0 * a - 2.0, epsilon = 1e-15);

        let k4 = generate_family(Family::Complete, 4).unwrap();
        let r = subset_eigenvalue(&k4, &[0, 1, 2, 3], a).unwrap();
        assert_eq!(
            (r.kind, r.transmission, r.min_multiplicity),
            (SubsetKind::Clique, 3, 3)
        );
        assert_abs_diff_eq!(r.eigenvalue, 4.0 * a - 1.0, epsilon = 1e-15);

        let p3 = generate_family(Family::Path, 3).unwrap();
        let r = subset_eigenvalue(&p3, &[0, 2], 0.5).unwrap();
        assert_eq!(
            (r.kind, r.transmission, r.min_multiplicity),
            (SubsetKind::Independent, 3, 1)
        );
        assert_abs_diff_eq!(r.eigenvalue, 0.5, epsilon = 1e-15);
        let spectrum = numeric(Family::Path, 3, 0.5);
        assert_eq!(multiplicity_near(spectrum.values(), r.eigenvalue, 1e-7), 1);
    }

    #[test]
    fn subset_errors() {
        let p4 = generate_family(Family::Path, 4).unwrap();
        // 0 and 3 have neighbours {1} and {2}.
        assert!(matches!(
            subset_eigenvalue(&p4, &[0, 3], 0.5),
            Err(Error::SubsetPrecondition {
                first: 0,
                second: 3,
                ..
            })
        ));
        // In C_4, {0, 1, 2} mixes adjacent and non-adjacent pairs.
        let c4 = generate_family(Family::Cycle, 4).unwrap();
        assert!(subset_eigenvalue(&c4, &[0, 1, 2], 0.5).is_err());
        assert!(subset_eigenvalue(&c4, &[0], 0.5).is_err());
        assert!(subset_eigenvalue(&c4, &[0, 7], 0.5).is_err());
        assert!(subset_eigenvalue(&c4, &[0, 0], 0.5).is_err());
        // Opposite vertices of C_4 are twins.
        assert!(subset_eigenvalue(&c4, &[0, 2], 0.5).is_ok());
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(
            distinct_eigenvalue_count(&numeric(Family::Complete, 5, 0.3), 1e-7),
            2
        );
        assert_eq!(
            distinct_eigenvalue_count(&numeric(Family::Path, 3, 0.0), 1e-7),
            3
        );
        assert_eq!(
            distinct_eigenvalue_count(&numeric(Family::Path, 1, 0.4), 1e-7),
            1
        );
    }

    #[test]
    fn two_eigenvalue_stars() {
        // At α = 3/(2n − 1), D_α(S_n) is a multiple of the identity plus a
        // rank-one matrix, so only two distinct eigenvalues remain.
        for n in 3..12 {
            let a = 3.0 / (2.0 * n as f64 - 1.0);
            assert_eq!(
                distinct_eigenvalue_count(&numeric(Family::Star, n, a), 1e-7),
                2,
                "n={n}"
            );
        }
    }
}
