//! Shortest-path distances and the transmission-derived scalars.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact distance data of a connected graph.
///
/// Everything here is integral; conversion to floating point happens only
/// where matrices are assembled for eigensolving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    tr: Vec<u64>,
    wiener: u64,
    s_sum: u64,
    max_tr: u64,
    min_tr: u64,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.n + j]
    }

    /// Row `i` of the distance matrix.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    /// Transmissions `Tr(v_i)`.
    pub fn transmissions(&self) -> &[u64] {
        &self.tr
    }

    pub fn tr(&self, i: usize) -> u64 {
        self.tr[i]
    }

    /// Wiener index: sum of distances over unordered pairs.
    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    /// Sum of squared distances over unordered pairs.
    pub fn s_sum(&self) -> u64 {
        self.s_sum
    }

    /// Average transmission `2W / n`.
    pub fn avg_tr(&self) -> f64 {
        2.0 * self.wiener as f64 / self.n as f64
    }

    pub fn max_tr(&self) -> u64 {
        self.max_tr
    }

    pub fn min_tr(&self) -> u64 {
        self.min_tr
    }

    /// `Σ Tr(v_i)²`, exact.
    pub fn tr_sq_sum(&self) -> u128 {
        self.tr.iter().map(|&t| (t as u128) * (t as u128)).sum()
    }

    /// `Σ_{v ≠ u} d(u, v) Tr(v)`, exact.
    pub fn weighted_transmission(&self, u: usize) -> u128 {
        self.row(u)
            .iter()
            .zip(&self.tr)
            .map(|(&d, &t)| d as u128 * t as u128)
            .sum()
    }
}

/// One BFS per vertex. Fails on disconnected input rather than inventing an
/// infinite-distance sentinel.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if let Some(unreached) = row.iter().position(|&d| d == u32::MAX) {
            return Err(Error::Disconnected { unreached });
        }
    }

    let tr: Vec<u64> = (0..n)
        .map(|i| dist[i * n..(i + 1) * n].iter().map(|&d| d as u64).sum())
        .collect();
    let total: u64 = tr.iter().sum();
    let s_sum: u64 = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let d = dist[i * n + j] as u64;
            d * d
        })
        .sum();
    let max_tr = *tr.iter().max().expect("n >= 1");
    let min_tr = *tr.iter().min().expect("n >= 1");
    Ok(DistanceData {
        n,
        dist,
        tr,
        wiener: total / 2,
        s_sum,
        max_tr,
        min_tr,
    })
}

/// All transmissions equal.
pub fn is_transmission_regular(d: &DistanceData) -> bool {
    d.max_tr == d.min_tr
}
