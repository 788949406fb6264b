//! Isomorph-free enumeration of small connected graphs.
//!
//! Graphs are grown one vertex at a time (every neighbourhood of the new
//! vertex) and deduplicated by a canonical code: the lexicographically
//! largest upper-triangle bit string over all vertex orders that respect a
//! degree-based refinement. Practical up to about `n = 8`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 9;

fn degree_key(adj: &[u32], v: usize) -> (u32, Vec<u32>) {
    let mut nd: Vec<u32> = (0..adj.len())
        .filter(|&u| adj[v] >> u & 1 == 1)
        .map(|u| adj[u].count_ones())
        .collect();
    nd.sort_unstable();
    (adj[v].count_ones(), nd)
}

fn code_for(adj: &[u32], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

/// Canonical code of a graph given by adjacency bitmasks.
fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    let mut verts: Vec<usize> = (0..n).collect();
    let keys: Vec<_> = (0..n).map(|v| degree_key(adj, v)).collect();
    verts.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || keys[verts[i]] != keys[verts[start]] {
            classes.push((start, i));
            start = i;
        }
    }
    let mut best = 0u64;
    permute_classes(adj, &mut verts, &classes, 0, &mut best);
    best
}

fn permute_classes(
    adj: &[u32],
    order: &mut Vec<usize>,
    classes: &[(usize, usize)],
    c: usize,
    best: &mut u64,
) {
    if c == classes.len() {
        *best = (*best).max(code_for(adj, order));
        return;
    }
    let (lo, hi) = classes[c];
    permute_range(adj, order, classes, c, lo, hi, best);
}

fn permute_range(
    adj: &[u32],
    order: &mut Vec<usize>,
    classes: &[(usize, usize)],
    c: usize,
    k: usize,
    hi: usize,
    best: &mut u64,
) {
    if k + 1 >= hi {
        permute_classes(adj, order, classes, c + 1, best);
        return;
    }
    for i in k..hi {
        order.swap(k, i);
        permute_range(adj, order, classes, c, k + 1, hi, best);
        order.swap(k, i);
    }
}

fn decode(code: u64, n: usize) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    let total = n * (n - 1) / 2;
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|i| {
        ((i + 1)..n)
            .filter(move |&j| adj[i] >> j & 1 == 1)
            .map(move |j| (i, j))
    });
    Graph::from_edges(n, edges).expect("valid bitmask graph")
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices, in a fixed order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::Precondition(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(code, k);
            for mask in 0u32..(1 << k) {
                let mut adj = base.clone();
                for (u, row) in adj.iter_mut().enumerate() {
                    if mask >> u & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                adj.push(mask);
                next.insert(canonical_code(&adj));
            }
        }
        level = next;
    }
    Ok(level
        .iter()
        .map(|&code| to_graph(&decode(code, n)))
        .filter(is_connected)
        .collect())
}
