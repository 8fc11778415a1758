// SPDX-License-Identifier: MIT
//! Moral graphs and the three-step moralization criterion.

use crate::complexes::for_each_complex_within;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, HybridGraph};
use crate::nodeset::{NodeSet, MAX_NODES};
use crate::triplet::Triplet;

/// Underlying graph plus a line between the parents of every complex.
pub fn moral_graph(g: &HybridGraph) -> Result<HybridGraph> {
    g.require_chain_graph()?;
    let mut m = g.underlying();
    for_each_complex_within(g, g.nodes(), |u, _, v| {
        m.set_edge(u, v, Some(EdgeKind::Line));
    });
    Ok(m)
}

/// Underlying graph plus lines joining all parents of each connectivity component.
pub fn moral_graph_component_variant(g: &HybridGraph) -> Result<HybridGraph> {
    g.require_chain_graph()?;
    let mut m = g.underlying();
    for comp in g.components() {
        let parents: Vec<usize> = comp
            .iter()
            .fold(NodeSet::EMPTY, |acc, c| acc | g.parents(c))
            .iter()
            .collect();
        for (i, &p) in parents.iter().enumerate() {
            for &q in &parents[i + 1..] {
                m.set_edge(p, q, Some(EdgeKind::Line));
            }
        }
    }
    Ok(m)
}

/// Separation in an undirected graph: every path from X to Y meets Z.
pub fn ug_separated(u: &HybridGraph, t: &Triplet) -> Result<bool> {
    if !u.is_undirected() {
        return Err(Error::HypothesisViolated("graph has arrows".into()));
    }
    t.check_universe(u.n())?;
    let adj: Vec<NodeSet> = (0..u.n()).map(|i| u.siblings(i)).collect();
    Ok(separated(&adj, u.nodes() - t.z(), t.x(), t.y()))
}

/// Breadth-first reachability from `from` inside `allowed`.
fn separated(adj: &[NodeSet], allowed: NodeSet, from: NodeSet, to: NodeSet) -> bool {
    let mut reached = from;
    let mut frontier = from;
    while !frontier.is_empty() {
        let mut next = NodeSet::EMPTY;
        for v in frontier.iter() {
            next |= adj[v];
        }
        next = (next & allowed) - reached;
        if next.intersects(to) {
            return false;
        }
        reached |= next;
        frontier = next;
    }
    true
}

/// Restrict to the ancestral set of `X ∪ Y ∪ Z`, moralize, then separate.
pub fn moralization_represented(g: &HybridGraph, t: &Triplet) -> Result<bool> {
    g.require_chain_graph()?;
    t.check_universe(g.n())?;
    Ok(moralization_unchecked(g, t))
}

pub(crate) fn moralization_unchecked(g: &HybridGraph, t: &Triplet) -> bool {
    let anc = g.ancestral_set(t.support());
    let mut adj = [NodeSet::EMPTY; MAX_NODES];
    for u in anc.iter() {
        adj[u] = g.neighbors(u) & anc;
    }
    for_each_complex_within(g, anc, |u, _, v| {
        adj[u].insert(v);
        adj[v].insert(u);
    });
    separated(&adj[..g.n()], anc - t.z(), t.x(), t.y())
}
