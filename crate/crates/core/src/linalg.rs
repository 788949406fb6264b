//! Dense symmetric matrices, a tridiagonal-QL eigensolver and block
//! quotient matrices.

use crate::error::{Error, Result};

/// Default relative convergence tolerance of [`sym_eigenvalues`].
pub const DEFAULT_EIG_TOL: f64 = 1e-12;

/// A dense real symmetric matrix, row-major.
///
/// Every constructor writes `(i, j)` and `(j, i)` from the same value, so
/// the stored matrix is exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds the matrix from its upper triangle: `f(i, j)` is called for
    /// `i <= j` only.
    pub fn from_upper_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymMatrix { n, data }
    }

    /// Builds from explicit rows, which must be square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix rows must form a square".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            for j in 0..i {
                if row[j] != rows[j][i] {
                    return Err(Error::Precondition(format!(
                        "matrix not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SymMatrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_upper_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_upper_fn(n, |_, _| 0.0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// `self · x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `P · self · Pᵀ` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Self::from_upper_fn(self.n, |i, j| self.get(inv[i], inv[j]))
    }
}

/// `‖m‖_F²`, summed in row-major order.
pub fn frobenius_norm_sq(m: &SymMatrix) -> f64 {
    m.data.iter().map(|v| v * v).sum()
}

pub fn frobenius_norm(m: &SymMatrix) -> f64 {
    frobenius_norm_sq(m).sqrt()
}

/// Eigenvalues of a symmetric matrix in descending order.
///
/// Householder reduction to tridiagonal form followed by implicit-shift QL.
/// `tol` is the relative deflation threshold for off-diagonal entries; the
/// total number of QL iterations is capped at `100 n`.
pub fn sym_eigenvalues(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    if m.n == 0 {
        return Err(Error::Precondition("eigenvalues of an empty matrix".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (mut diag, mut off) = tridiagonalize(m);
    tridiagonal_ql(&mut diag, &mut off, tol.max(f64::EPSILON))?;
    diag.sort_by(|a, b| b.total_cmp(a));
    Ok(diag)
}

/// Householder tridiagonalisation without accumulating transformations.
/// Returns the diagonal and the subdiagonal (`off[i]` couples `i` and
/// `i + 1`; the last entry is zero).
#[allow(clippy::needless_range_loop)]
fn tridiagonalize(m: &SymMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.n;
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..=l].iter().map(|v| v.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    // Shift so that off[i] couples i and i + 1.
    let mut off = vec![0.0; n];
    off[..n - 1].copy_from_slice(&e[1..n]);
    (d, off)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues are
/// left in `d` (unsorted).
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], tol: f64) -> Result<()> {
    let n = d.len();
    let cap = 100 * n.max(1);
    let mut iterations = 0usize;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= tol * dd || e[m] == 0.0 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > cap {
                return Err(Error::NoConvergence {
                    index: l,
                    residual: e[l].abs(),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Block-averaged quotient of a partitioned matrix:
/// `entries[i][j] = (1/|K_i|) Σ_{l∈K_i} Σ_{k∈K_j} M[l][k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    m: usize,
    entries: Vec<f64>,
    partition: Vec<Vec<usize>>,
}

impl QuotientMatrix {
    /// Number of blocks.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.m + j]
    }

    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }

    pub fn from_entries_2x2(entries: [[f64; 2]; 2]) -> Self {
        QuotientMatrix {
            m: 2,
            entries: entries.iter().flatten().copied().collect(),
            partition: Vec::new(),
        }
    }
}

fn validate_partition(n: usize, partition: &[Vec<usize>]) -> Result<()> {
    let mut owner = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::InvalidPartition(format!("block {b} is empty")));
        }
        for &v in block {
            if v >= n {
                return Err(Error::InvalidPartition(format!(
                    "index {v} out of range 0..{n}"
                )));
            }
            if owner[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!(
                    "index {v} appears in blocks {} and {b}",
                    owner[v]
                )));
            }
            owner[v] = b;
        }
    }
    if let Some(missing) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::InvalidPartition(format!(
            "index {missing} not covered"
        )));
    }
    Ok(())
}

pub fn quotient_matrix(mat: &SymMatrix, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    validate_partition(mat.n, partition)?;
    let m = partition.len();
    let mut entries = vec![0.0; m * m];
    for (i, bi) in partition.iter().enumerate() {
        for (j, bj) in partition.iter().enumerate() {
            let total: f64 = bi
                .iter()
                .map(|&l| bj.iter().map(|&k| mat.get(l, k)).sum::<f64>())
                .sum();
            entries[i * m + j] = total / bi.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        m,
        entries,
        partition: partition.to_vec(),
    })
}

/// Real eigenvalues `(λ₁, λ₂)`, `λ₁ ≥ λ₂`, of a 2×2 quotient matrix.
///
/// The discriminant is formed as `(a − d)² + 4bc`, which equals
/// `trace² − 4 det` without the cancellation. Slightly negative values
/// (above `−1e−10 (1 + trace²)`) are clamped to zero.
pub fn eigenvalues_2x2(q: &QuotientMatrix) -> Result<(f64, f64)> {
    if q.m != 2 {
        return Err(Error::Precondition(format!(
            "expected a 2x2 quotient matrix, got {0}x{0}",
            q.m
        )));
    }
    let (a, b, c, d) = (q.get(0, 0), q.get(0, 1), q.get(1, 0), q.get(1, 1));
    let trace = a + d;
    let mut disc = (a - d) * (a - d) + 4.0 * b * c;
    if disc < 0.0 {
        if disc >= -1e-10 * (1.0 + trace * trace) {
            disc = 0.0;
        } else {
            return Err(Error::ComplexEigenvalues { discriminant: disc });
        }
    }
    let half_gap = 0.5 * disc.sqrt();
    let mid = 0.5 * trace;
    Ok((mid + half_gap, mid - half_gap))
}
