// SPDX-License-Identifier: MIT
#![allow(dead_code)]

use chaingraph::generate::{all_chain_graphs, random_chain_graph};
use chaingraph::{parse_graph, HybridGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const GE: &str =
    "nodes a b c d e f g\nc -- d\nd -- e\na -> c\nb -> e\nb -> g\nd -> f\nd -> g\n";
pub const GA: &str = "nodes a b c d\nb -> a\nb -> c\na -> d\nc -> d\n";
pub const GC: &str = "nodes p q u v\nu -> p\np -- q\nv -> q\n";

pub fn ge() -> HybridGraph {
    parse_graph(GE).unwrap()
}

pub fn ga() -> HybridGraph {
    parse_graph(GA).unwrap()
}

pub fn gc() -> HybridGraph {
    parse_graph(GC).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every chain graph on 1 to `max` nodes.
pub fn exhaustive(max: usize) -> Vec<HybridGraph> {
    (1..=max)
        .flat_map(|n| all_chain_graphs(n).unwrap())
        .collect()
}

/// `count` random chain graphs whose node counts cycle through `sizes`.
pub fn random(count: usize, sizes: &[usize], edge_prob: f64, seed: u64) -> Vec<HybridGraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| random_chain_graph(sizes[i % sizes.len()], edge_prob, &mut r).unwrap())
        .collect()
}

/// Chain check straight from the definition: some ordered partition puts
/// every line inside a block and every arrow from an earlier block to a
/// later one. Tries every assignment of nodes to block positions.
pub fn has_chain_brute_force(g: &HybridGraph) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    loop {
        let ok = g.edges().all(|(u, v, kind)| match kind {
            chaingraph::EdgeKind::Line => pos[u] == pos[v],
            chaingraph::EdgeKind::ArrowForward => pos[u] < pos[v],
            chaingraph::EdgeKind::ArrowBackward => pos[u] > pos[v],
        });
        if ok {
            return true;
        }
        let mut i = 0;
        while i < n && pos[i] == n - 1 {
            pos[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        pos[i] += 1;
    }
}
