//! The α-distance matrix `α·Tr(G) + (1 − α)·D(G)` and the invariants read
//! off its spectrum: spectral radius, α-distance energy, α-distance Estrada
//! index and the trace moments.

use serde::Serialize;

use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{sym_eigenvalues, SymMatrix};

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// `D_α`: diagonal `α·Tr(v_i)`, off-diagonal `(1 − α)·d(v_i, v_j)`.
pub fn build_alpha_matrix(d: &DistanceData, alpha: f64) -> Result<SymMatrix> {
    check_alpha(alpha)?;
    let beta = 1.0 - alpha;
    Ok(SymMatrix::from_upper_fn(d.n(), |i, j| {
        if i == j {
            alpha * d.tr(i) as f64
        } else {
            beta * d.dist(i, j) as f64
        }
    }))
}

/// `Tr(G) + D(G)`, built directly from the integer data.
pub fn distance_signless_laplacian(d: &DistanceData) -> SymMatrix {
    SymMatrix::from_upper_fn(d.n(), |i, j| {
        if i == j {
            d.tr(i) as f64
        } else {
            d.dist(i, j) as f64
        }
    })
}

/// Eigenvalues of `D_α` for one α, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    alpha: f64,
    values: Vec<f64>,
    centered: Vec<f64>,
    wiener: u64,
}

impl Spectrum {
    /// Wraps an already computed eigenvalue list (sorted here).
    pub fn from_values(alpha: f64, mut values: Vec<f64>, wiener: u64) -> Result<Self> {
        check_alpha(alpha)?;
        if values.is_empty() {
            return Err(Error::Precondition(
                "spectrum needs at least one value".into(),
            ));
        }
        values.sort_by(|a, b| b.total_cmp(a));
        let center = 2.0 * alpha * wiener as f64 / values.len() as f64;
        let centered = values.iter().map(|s| s - center).collect();
        Ok(Spectrum {
            alpha,
            values,
            centered,
            wiener,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    /// `σ_1 ≥ … ≥ σ_n`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `η_i = σ_i − 2αW/n`.
    pub fn centered(&self) -> &[f64] {
        &self.centered
    }

    /// `2αW/n`, the mean eigenvalue.
    pub fn center(&self) -> f64 {
        2.0 * self.alpha * self.wiener as f64 / self.n() as f64
    }

    /// Spectral radius `σ_1`.
    pub fn radius(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().expect("nonempty")
    }
}

pub fn alpha_spectrum(d: &DistanceData, alpha: f64, tol: f64) -> Result<Spectrum> {
    let m = build_alpha_matrix(d, alpha)?;
    let values = sym_eigenvalues(&m, tol)?;
    Spectrum::from_values(alpha, values, d.wiener())
}

/// α-distance energy `Σ |σ_i − 2αW/n|`.
pub fn alpha_energy(s: &Spectrum) -> f64 {
    s.centered.iter().map(|x| x.abs()).sum()
}

/// Largest argument `exp` accepts without overflowing to infinity.
const EXP_LIMIT: f64 = 709.782712893384;

/// α-distance Estrada index `Σ e^{σ_i}`.
pub fn alpha_estrada(s: &Spectrum) -> Result<f64> {
    if s.radius() > EXP_LIMIT {
        return Err(Error::Overflow { value: s.radius() });
    }
    let total: f64 = s.values.iter().map(|v| v.exp()).sum();
    if total.is_finite() {
        Ok(total)
    } else {
        Err(Error::Overflow { value: s.radius() })
    }
}

/// Spectrum-derived invariants shared by every bound at one α.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphInvariants {
    pub energy: f64,
    pub estrada: f64,
    pub moment1: f64,
    pub moment2: f64,
}

pub fn graph_invariants(s: &Spectrum) -> Result<GraphInvariants> {
    Ok(GraphInvariants {
        energy: alpha_energy(s),
        estrada: alpha_estrada(s)?,
        moment1: s.values.iter().sum(),
        moment2: s.values.iter().map(|v| v * v).sum(),
    })
}

/// Both sides of the two trace identities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentCheck {
    /// `Σ σ_i`
    pub lhs1: f64,
    /// `2αW`
    pub rhs1: f64,
    /// `Σ σ_i²`
    pub lhs2: f64,
    /// `α² Σ Tr² + 2(1 − α)² S`
    pub rhs2: f64,
}

impl MomentCheck {
    /// Both identities hold to relative tolerance `rel`, scaled by
    /// `1 + |rhs|`.
    pub fn holds(&self, rel: f64) -> bool {
        (self.lhs1 - self.rhs1).abs() <= rel * (1.0 + self.rhs1.abs())
            && (self.lhs2 - self.rhs2).abs() <= rel * (1.0 + self.rhs2.abs())
    }
}

pub fn moment_identities(d: &DistanceData, s: &Spectrum) -> MomentCheck {
    let a = s.alpha();
    let b = 1.0 - a;
    MomentCheck {
        lhs1: s.values.iter().sum(),
        rhs1: 2.0 * a * d.wiener() as f64,
        lhs2: s.values.iter().map(|v| v * v).sum(),
        rhs2: a * a * d.tr_sq_sum() as f64 + 2.0 * b * b * d.s_sum() as f64,
    }
}

/// Determinant of the distance matrix (as the product of its eigenvalues)
/// and the count of eigenvalues above `tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeDistanceCheck {
    pub det: f64,
    pub positive_count: usize,
}

pub fn tree_distance_checks(g: &Graph, tol: f64) -> Result<TreeDistanceCheck> {
    if !g.is_tree() {
        return Err(Error::Precondition(format!(
            "expected a tree, got n = {} with m = {}",
            g.n(),
            g.m()
        )));
    }
    let d = all_pairs_distances(g)?;
    let s = alpha_spectrum(&d, 0.0, crate::linalg::DEFAULT_EIG_TOL)?;
    Ok(TreeDistanceCheck {
        det: s.values.iter().product(),
        positive_count: s.values.iter().filter(|&&v| v > tol).count(),
    })
}
