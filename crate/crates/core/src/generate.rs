// SPDX-License-Identifier: MIT
//! Graph generators for exhaustive sweeps and random sampling.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{default_labels, EdgeKind, HybridGraph};

/// Largest node count [`all_hybrid_graphs`] accepts.
pub const EXHAUSTIVE_NODE_BOUND: usize = 6;

/// Every hybrid graph on `n` nodes labelled by [`default_labels`]: each of
/// the `n(n-1)/2` pairs is absent, a line, or an arrow either way.
pub fn all_hybrid_graphs(n: usize) -> Result<impl Iterator<Item = HybridGraph>> {
    if n == 0 {
        return Err(Error::EmptyNodeSet);
    }
    if n > EXHAUSTIVE_NODE_BOUND {
        return Err(Error::BoundExceeded {
            what: "node",
            actual: n,
            bound: EXHAUSTIVE_NODE_BOUND,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << (2 * pairs.len());
    let base = HybridGraph::edgeless(default_labels(n))?;
    Ok((0..total).map(move |code| {
        let mut g = base.clone();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let kind = match (code >> (2 * i)) & 3 {
                0 => None,
                1 => Some(EdgeKind::Line),
                2 => Some(EdgeKind::ArrowForward),
                _ => Some(EdgeKind::ArrowBackward),
            };
            g.set_edge(u, v, kind);
        }
        g
    }))
}

/// Every chain graph on `n` nodes.
pub fn all_chain_graphs(n: usize) -> Result<impl Iterator<Item = HybridGraph>> {
    Ok(all_hybrid_graphs(n)?.filter(HybridGraph::is_chain_graph))
}

/// A random chain graph on `n` nodes. Nodes are shuffled into a random
/// chain of blocks; each pair is joined with probability `edge_prob`, by a
/// line inside a block and by an arrow from the earlier block otherwise.
pub fn random_chain_graph<R: Rng + ?Sized>(
    n: usize,
    edge_prob: f64,
    rng: &mut R,
) -> Result<HybridGraph> {
    if n == 0 {
        return Err(Error::EmptyNodeSet);
    }
    if n > crate::MAX_NODES {
        return Err(Error::TooManyNodes(n));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut block = vec![0usize; n];
    let mut current = 0;
    for (i, &u) in order.iter().enumerate() {
        if i > 0 && rng.random_bool(0.5) {
            current += 1;
        }
        block[u] = current;
    }
    let mut g = HybridGraph::edgeless(default_labels(n))?;
    for u in 0..n {
        for v in u + 1..n {
            if !rng.random_bool(edge_prob) {
                continue;
            }
            let kind = match block[u].cmp(&block[v]) {
                std::cmp::Ordering::Equal => EdgeKind::Line,
                std::cmp::Ordering::Less => EdgeKind::ArrowForward,
                std::cmp::Ordering::Greater => EdgeKind::ArrowBackward,
            };
            g.set_edge(u, v, Some(kind));
        }
    }
    Ok(g)
}
