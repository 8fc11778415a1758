// SPDX-License-Identifier: MIT
//! Fixed workloads shared by the benchmarks.

use chaingraph::generate::random_chain_graph;
use chaingraph::{HybridGraph, NodeSet, Triplet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random chain graphs on `n` nodes, reproducible from `seed`.
pub fn graphs(n: usize, count: usize, edge_prob: f64, seed: u64) -> Vec<HybridGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_chain_graph(n, edge_prob, &mut rng).unwrap())
        .collect()
}

/// Pair triplets `<u, v | Z>` with each other node in `Z` with probability
/// one half.
pub fn pair_triplets(n: usize, count: usize, seed: u64) -> Vec<Triplet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u = rng.random_range(0..n);
            let v = (u + rng.random_range(1..n)) % n;
            let z: NodeSet = (0..n)
                .filter(|&w| w != u && w != v && rng.random_bool(0.5))
                .collect();
            Triplet::pair(u, v, z).unwrap()
        })
        .collect()
}
