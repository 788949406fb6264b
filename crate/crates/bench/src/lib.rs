//! Fixed graph inputs shared by the benchmarks.

use alphadist::{
    all_pairs_distances, generate_family, generate_random_connected, DistanceData, Family,
};

/// Distance data for a named family at size `n`.
pub fn family_distances(family: Family, n: usize) -> DistanceData {
    all_pairs_distances(&generate_family(family, n).expect("valid family size"))
        .expect("families are connected")
}

/// Distance data for a seeded random connected graph with `n` vertices and
/// `n` edges beyond a spanning tree.
pub fn random_distances(n: usize, seed: u64) -> DistanceData {
    let g = generate_random_connected(n, n, seed).expect("valid size");
    all_pairs_distances(&g).expect("generator output is connected")
}
