// SPDX-License-Identifier: MIT
//! Hybrid graphs: nodes joined by lines and arrows.
//!
//! Nodes are addressed by their index in label order. Every edge is stored
//! once, keyed by the ordered pair `(lo, hi)` with `lo < hi`, together with
//! an [`EdgeKind`] relative to that pair. Per-node parent, child and sibling
//! masks are kept alongside so neighbourhood queries are constant time.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::nodeset::{NodeSet, MAX_NODES};

/// Kind of an edge relative to an ordered node pair `(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// `u -- v`
    Line,
    /// `u -> v`
    ArrowForward,
    /// `u <- v`
    ArrowBackward,
}

impl EdgeKind {
    /// The same edge seen from the pair `(v, u)`.
    #[inline]
    pub fn reversed(self) -> EdgeKind {
        match self {
            EdgeKind::Line => EdgeKind::Line,
            EdgeKind::ArrowForward => EdgeKind::ArrowBackward,
            EdgeKind::ArrowBackward => EdgeKind::ArrowForward,
        }
    }

    #[inline]
    pub fn is_arrow(self) -> bool {
        self != EdgeKind::Line
    }
}

/// Labels are `[A-Za-z0-9_]+`.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Labels `a, b, c, ...` for small graphs, zero-padded `v00, v01, ...` otherwise.
/// Either way the labels sort in index order.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("v{i:02}")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HybridGraph {
    labels: Vec<String>,
    edges: BTreeMap<(usize, usize), EdgeKind>,
    parents: Vec<NodeSet>,
    children: Vec<NodeSet>,
    siblings: Vec<NodeSet>,
}

impl HybridGraph {
    /// Validates and builds a graph. Edge kinds are relative to the pair as
    /// written, so `("a", "b", ArrowForward)` is `a -> b`.
    pub fn new<L: AsRef<str>>(nodes: &[L], edges: &[(L, L, EdgeKind)]) -> Result<Self> {
        let labels: Vec<String> = nodes.iter().map(|l| l.as_ref().to_string()).collect();
        let mut graph = HybridGraph::edgeless(labels)?;
        for (u, v, kind) in edges {
            let u = graph.node(u.as_ref())?;
            let v = graph.node(v.as_ref())?;
            graph.add_edge(u, v, *kind)?;
        }
        Ok(graph)
    }

    /// A graph with no edges. Labels are sorted; indices follow label order.
    pub fn edgeless(mut labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        if labels.len() > MAX_NODES {
            return Err(Error::TooManyNodes(labels.len()));
        }
        if let Some(bad) = labels.iter().find(|l| !is_valid_label(l)) {
            return Err(Error::InvalidLabel(bad.clone()));
        }
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateNode(w[0].clone()));
        }
        let n = labels.len();
        Ok(HybridGraph {
            labels,
            edges: BTreeMap::new(),
            parents: vec![NodeSet::EMPTY; n],
            children: vec![NodeSet::EMPTY; n],
            siblings: vec![NodeSet::EMPTY; n],
        })
    }

    /// Builds a graph from index-addressed edges over already sorted labels.
    pub fn from_indexed<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, EdgeKind)>,
    {
        if labels.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidLabel(
                "labels must be given in sorted order".into(),
            ));
        }
        let mut graph = HybridGraph::edgeless(labels)?;
        for (u, v, kind) in edges {
            if u >= graph.n() || v >= graph.n() {
                return Err(Error::UnknownNode(format!("#{}", u.max(v))));
            }
            graph.add_edge(u, v, kind)?;
        }
        Ok(graph)
    }

    fn add_edge(&mut self, u: usize, v: usize, kind: EdgeKind) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        let (key, kind) = canonical(u, v, kind);
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(
                self.labels[key.0].clone(),
                self.labels[key.1].clone(),
            ));
        }
        self.set_edge(key.0, key.1, Some(kind));
        Ok(())
    }

    /// Sets, replaces or (with `None`) removes the edge `{lo, hi}`; `kind`
    /// is relative to `(lo, hi)`.
    pub(crate) fn set_edge(&mut self, lo: usize, hi: usize, kind: Option<EdgeKind>) {
        debug_assert!(lo < hi);
        if let Some(old) = self.edges.remove(&(lo, hi)) {
            match old {
                EdgeKind::Line => {
                    self.siblings[lo].remove(hi);
                    self.siblings[hi].remove(lo);
                }
                EdgeKind::ArrowForward => {
                    self.children[lo].remove(hi);
                    self.parents[hi].remove(lo);
                }
                EdgeKind::ArrowBackward => {
                    self.children[hi].remove(lo);
                    self.parents[lo].remove(hi);
                }
            }
        }
        if let Some(kind) = kind {
            match kind {
                EdgeKind::Line => {
                    self.siblings[lo].insert(hi);
                    self.siblings[hi].insert(lo);
                }
                EdgeKind::ArrowForward => {
                    self.children[lo].insert(hi);
                    self.parents[hi].insert(lo);
                }
                EdgeKind::ArrowBackward => {
                    self.children[hi].insert(lo);
                    self.parents[lo].insert(hi);
                }
            }
            self.edges.insert((lo, hi), kind);
        }
    }

    /// Copy of the graph with the edge `{u, v}` set to `kind` (relative to
    /// `(u, v)`), inserting it if absent.
    pub fn with_edge(&self, u: usize, v: usize, kind: EdgeKind) -> Result<Self> {
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        let ((lo, hi), kind) = canonical(u, v, kind);
        let mut g = self.clone();
        g.set_edge(lo, hi, Some(kind));
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// All nodes as a set.
    #[inline]
    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// Resolves a label, failing with [`Error::UnknownNode`].
    pub fn node(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    /// Resolves a list of labels into a set.
    pub fn node_set<L: AsRef<str>>(&self, labels: &[L]) -> Result<NodeSet> {
        labels.iter().map(|l| self.node(l.as_ref())).collect()
    }

    pub fn labels_of(&self, set: NodeSet) -> Vec<&str> {
        set.iter().map(|i| self.label(i)).collect()
    }

    /// Kind of the edge `{u, v}` relative to `(u, v)`.
    #[inline]
    pub fn edge(&self, u: usize, v: usize) -> Option<EdgeKind> {
        if u < v {
            self.edges.get(&(u, v)).copied()
        } else {
            self.edges.get(&(v, u)).map(|k| k.reversed())
        }
    }

    /// Edges as `(lo, hi, kind)` with `lo < hi`, in pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeKind)> + '_ {
        self.edges.iter().map(|(&(u, v), &k)| (u, v, k))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Lines as `(lo, hi)`.
    pub fn lines(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges()
            .filter(|e| e.2 == EdgeKind::Line)
            .map(|(u, v, _)| (u, v))
    }

    /// Arrows as `(tail, head)`, ordered by pair.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges().filter_map(|(u, v, k)| match k {
            EdgeKind::Line => None,
            EdgeKind::ArrowForward => Some((u, v)),
            EdgeKind::ArrowBackward => Some((v, u)),
        })
    }

    pub fn line_count(&self) -> usize {
        self.lines().count()
    }

    pub fn arrow_count(&self) -> usize {
        self.edge_count() - self.line_count()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).contains(v)
    }

    #[inline]
    pub fn is_arrow(&self, tail: usize, head: usize) -> bool {
        self.children[tail].contains(head)
    }

    #[inline]
    pub fn is_line(&self, u: usize, v: usize) -> bool {
        self.siblings[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> NodeSet {
        self.parents[u] | self.children[u] | self.siblings[u]
    }

    #[inline]
    pub fn parents(&self, u: usize) -> NodeSet {
        self.parents[u]
    }

    #[inline]
    pub fn children(&self, u: usize) -> NodeSet {
        self.children[u]
    }

    #[inline]
    pub fn siblings(&self, u: usize) -> NodeSet {
        self.siblings[u]
    }

    /// Parents and siblings of `u`.
    #[inline]
    pub fn boundary(&self, u: usize) -> NodeSet {
        self.parents[u] | self.siblings[u]
    }

    pub fn is_undirected(&self) -> bool {
        self.edges.values().all(|k| *k == EdgeKind::Line)
    }

    /// True when both graphs have the same labels and the same edge pairs.
    pub fn same_skeleton(&self, other: &HybridGraph) -> bool {
        self.labels == other.labels && self.edges.keys().eq(other.edges.keys())
    }

    /// Every edge turned into a line.
    pub fn underlying(&self) -> HybridGraph {
        let mut g = HybridGraph {
            labels: self.labels.clone(),
            edges: BTreeMap::new(),
            parents: vec![NodeSet::EMPTY; self.n()],
            children: vec![NodeSet::EMPTY; self.n()],
            siblings: vec![NodeSet::EMPTY; self.n()],
        };
        for &(u, v) in self.edges.keys() {
            g.set_edge(u, v, Some(EdgeKind::Line));
        }
        g
    }

    /// Subgraph induced on `subset`; node indices are renumbered in label order.
    pub fn induced_subgraph(&self, subset: NodeSet) -> Result<HybridGraph> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !subset.is_subset(self.nodes()) {
            return Err(Error::UnknownNode(format!(
                "#{}",
                (subset - self.nodes()).first().unwrap_or(0)
            )));
        }
        let keep: Vec<usize> = subset.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut g = HybridGraph::edgeless(labels)?;
        for (&(u, v), &k) in &self.edges {
            if subset.contains(u) && subset.contains(v) {
                g.set_edge(index[u], index[v], Some(k));
            }
        }
        Ok(g)
    }

    /// Connectivity components of the line-only subgraph, ordered by smallest member.
    pub fn components(&self) -> Vec<NodeSet> {
        self.components_within(self.nodes())
    }

    /// Line components of the subgraph induced on `within`.
    pub(crate) fn components_within(&self, within: NodeSet) -> Vec<NodeSet> {
        let mut seen = NodeSet::EMPTY;
        let mut out = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = NodeSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = NodeSet::EMPTY;
                for u in frontier.iter() {
                    next |= self.siblings[u];
                }
                next = (next & within) - comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// No arrow lies inside a component and the component condensation is acyclic.
    pub fn is_chain_graph(&self) -> bool {
        self.component_order().is_some()
    }

    /// Components in a topological order of the condensation, ties broken by
    /// the smallest member label.
    fn component_order(&self) -> Option<Vec<NodeSet>> {
        let comps = self.components();
        let mut comp_of = vec![0usize; self.n()];
        for (ci, c) in comps.iter().enumerate() {
            for u in c.iter() {
                comp_of[u] = ci;
            }
        }
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
        let mut indegree = vec![0usize; comps.len()];
        for (tail, head) in self.arrows() {
            let (a, b) = (comp_of[tail], comp_of[head]);
            if a == b {
                return None;
            }
            if !succ[a].contains(&b) {
                succ[a].push(b);
                indegree[b] += 1;
            }
        }
        let mut ready: BinaryHeap<Reverse<usize>> = (0..comps.len())
            .filter(|&c| indegree[c] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(comps.len());
        while let Some(Reverse(c)) = ready.pop() {
            order.push(comps[c]);
            for &d in &succ[c] {
                indegree[d] -= 1;
                if indegree[d] == 0 {
                    ready.push(Reverse(d));
                }
            }
        }
        (order.len() == comps.len()).then_some(order)
    }

    /// The chain made of connectivity components.
    pub fn component_chain(&self) -> Result<Chain> {
        match self.component_order() {
            Some(blocks) => Ok(Chain { blocks }),
            None => Err(self.not_chain_graph()),
        }
    }

    /// [`Error::NotChainGraph`] carrying a witness cycle.
    pub(crate) fn not_chain_graph(&self) -> Error {
        let cycle = self
            .directed_pseudocycle()
            .unwrap_or_default()
            .into_iter()
            .map(|u| self.labels[u].clone())
            .collect();
        Error::NotChainGraph { cycle }
    }

    pub(crate) fn require_chain_graph(&self) -> Result<()> {
        if self.is_chain_graph() {
            Ok(())
        } else {
            Err(self.not_chain_graph())
        }
    }

    /// A directed pseudocycle `u, v, ..., u` starting with an arrow, if any.
    pub fn directed_pseudocycle(&self) -> Option<Vec<usize>> {
        for (tail, head) in self.arrows() {
            if let Some(mut route) = self.descending_route(head, tail) {
                route.insert(0, tail);
                return Some(route);
            }
        }
        None
    }

    /// Shortest descending route from `from` to `to`.
    fn descending_route(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut pred = vec![usize::MAX; self.n()];
        let mut seen = NodeSet::singleton(from);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut route = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = pred[cur];
                    route.push(cur);
                }
                route.reverse();
                return Some(route);
            }
            for v in (self.children[u] | self.siblings[u]) - seen {
                seen.insert(v);
                pred[v] = u;
                queue.push_back(v);
            }
        }
        None
    }

    /// All ancestors of nodes in `set`, including `set` itself.
    pub fn ancestral_set(&self, set: NodeSet) -> NodeSet {
        let mut reached = set;
        let mut frontier = set;
        while !frontier.is_empty() {
            let mut next = NodeSet::EMPTY;
            for u in frontier.iter() {
                next |= self.parents[u] | self.siblings[u];
            }
            next -= reached;
            reached |= next;
            frontier = next;
        }
        reached
    }

    /// All descendants of `u`, including `u`.
    pub fn descendants(&self, u: usize) -> NodeSet {
        let mut reached = NodeSet::singleton(u);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let mut next = NodeSet::EMPTY;
            for v in frontier.iter() {
                next |= self.children[v] | self.siblings[v];
            }
            next -= reached;
            reached |= next;
            frontier = next;
        }
        reached
    }
}

#[inline]
pub(crate) fn canonical(u: usize, v: usize, kind: EdgeKind) -> ((usize, usize), EdgeKind) {
    if u < v {
        ((u, v), kind)
    } else {
        ((v, u), kind.reversed())
    }
}

/// Ordered partition of the nodes into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    blocks: Vec<NodeSet>,
}

impl Chain {
    /// Accepts any ordered list of blocks; use [`Chain::validate`] to check
    /// it against a graph.
    pub fn new(blocks: Vec<NodeSet>) -> Self {
        Chain { blocks }
    }

    pub fn blocks(&self) -> &[NodeSet] {
        &self.blocks
    }

    /// Index of the block containing `u`.
    pub fn block_of(&self, u: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(u))
    }

    /// Blocks must partition the nodes, lines must stay inside a block and
    /// arrows must point from an earlier block to a later one.
    pub fn validate(&self, g: &HybridGraph) -> Result<()> {
        let mut seen = NodeSet::EMPTY;
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::InvalidChain("empty block".into()));
            }
            if b.intersects(seen) {
                return Err(Error::InvalidChain("blocks overlap".into()));
            }
            seen |= *b;
        }
        if seen != g.nodes() {
            return Err(Error::InvalidChain(
                "blocks do not cover the node set".into(),
            ));
        }
        let mut block = vec![0usize; g.n()];
        for (i, b) in self.blocks.iter().enumerate() {
            for u in b.iter() {
                block[u] = i;
            }
        }
        for (u, v, k) in g.edges() {
            let ok = match k {
                EdgeKind::Line => block[u] == block[v],
                EdgeKind::ArrowForward => block[u] < block[v],
                EdgeKind::ArrowBackward => block[v] < block[u],
            };
            if !ok {
                return Err(Error::InvalidChain(format!(
                    "edge {} {} violates the block order",
                    g.label(u),
                    g.label(v)
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeKind::*;

    fn ga() -> HybridGraph {
        HybridGraph::new(
            &["a", "b", "c", "d"],
            &[
                ("b", "a", ArrowForward),
                ("b", "c", ArrowForward),
                ("a", "d", ArrowForward),
                ("c", "d", ArrowForward),
            ],
        )
        .unwrap()
    }

    fn ge() -> HybridGraph {
        HybridGraph::new(
            &["a", "b", "c", "d", "e", "f", "g"],
            &[
                ("a", "c", ArrowForward),
                ("c", "d", Line),
                ("d", "e", Line),
                ("b", "e", ArrowForward),
                ("b", "g", ArrowForward),
                ("d", "g", ArrowForward),
                ("d", "f", ArrowForward),
            ],
        )
        .unwrap()
    }

    fn set(g: &HybridGraph, labels: &[&str]) -> NodeSet {
        g.node_set(labels).unwrap()
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            HybridGraph::new(&["a", "b"], &[("a", "b", ArrowForward), ("a", "b", Line)]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            HybridGraph::new(&["a", "b"], &[("a", "b", Line), ("b", "a", ArrowForward)]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            HybridGraph::new(&["a", "a"], &[]),
            Err(Error::DuplicateNode(_))
        ));
        assert!(matches!(
            HybridGraph::new(&["a"], &[("a", "a", Line)]),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            HybridGraph::new(&["a"], &[("a", "z", Line)]),
            Err(Error::UnknownNode(_))
        ));
        assert!(matches!(
            HybridGraph::new::<&str>(&[], &[]),
            Err(Error::EmptyNodeSet)
        ));
        assert!(matches!(
            HybridGraph::new(&["a-b"], &[]),
            Err(Error::InvalidLabel(_))
        ));
        let single = HybridGraph::new(&["a"], &[]).unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.edge_count(), 0);
    }

    #[test]
    fn edge_kinds_are_relative_to_the_pair() {
        let g = ga();
        let (a, b) = (g.node("a").unwrap(), g.node("b").unwrap());
        assert_eq!(g.edge(b, a), Some(ArrowForward));
        assert_eq!(g.edge(a, b), Some(ArrowBackward));
        assert!(g.is_arrow(b, a));
        assert!(!g.is_arrow(a, b));
        assert_eq!(g.arrow_count(), 4);
    }

    #[test]
    fn underlying_graph() {
        let u = ga().underlying();
        assert!(u.is_undirected());
        assert_eq!(u.edge_count(), 4);
        assert_eq!(u.underlying(), u);
        let single = HybridGraph::new(&["u", "v"], &[("u", "v", ArrowForward)]).unwrap();
        assert!(single.underlying().is_line(0, 1));
    }

    #[test]
    fn induced_subgraph() {
        let g = ga();
        let h = g.induced_subgraph(set(&g, &["a", "c", "d"])).unwrap();
        assert_eq!(h.labels(), &["a", "c", "d"]);
        assert_eq!(h.arrows().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert!(!h.adjacent(0, 1));
        assert_eq!(g.induced_subgraph(g.nodes()).unwrap(), g);
        let s = g.induced_subgraph(set(&g, &["a"])).unwrap();
        assert_eq!((s.n(), s.edge_count()), (1, 0));
        assert!(matches!(
            g.induced_subgraph(NodeSet::EMPTY),
            Err(Error::EmptySubset)
        ));
        assert!(g.induced_subgraph(NodeSet::singleton(9)).is_err());
    }

    #[test]
    fn components() {
        let g = ga();
        assert_eq!(g.components().len(), 4);
        let g = ge();
        let comps: Vec<Vec<&str>> = g.components().into_iter().map(|c| g.labels_of(c)).collect();
        assert_eq!(
            comps,
            vec![
                vec!["a"],
                vec!["b"],
                vec!["c", "d", "e"],
                vec!["f"],
                vec!["g"]
            ]
        );
        let path =
            HybridGraph::new(&["a", "b", "c"], &[("a", "b", Line), ("b", "c", Line)]).unwrap();
        assert_eq!(path.components(), vec![path.nodes()]);
    }

    #[test]
    fn chain_graph_recognition() {
        assert!(ga().is_chain_graph());
        let tri = HybridGraph::new(
            &["a", "b", "c"],
            &[
                ("a", "b", ArrowForward),
                ("b", "c", ArrowForward),
                ("c", "a", ArrowForward),
            ],
        )
        .unwrap();
        assert!(!tri.is_chain_graph());
        let pseudo = HybridGraph::new(
            &["a", "b", "c"],
            &[
                ("a", "b", Line),
                ("b", "c", ArrowForward),
                ("c", "a", ArrowForward),
            ],
        )
        .unwrap();
        assert!(!pseudo.is_chain_graph());
        let cyc = pseudo.directed_pseudocycle().unwrap();
        assert_eq!(cyc.first(), cyc.last());
        assert!(matches!(
            pseudo.component_chain(),
            Err(Error::NotChainGraph { .. })
        ));
        // arrow inside a component
        let inner = HybridGraph::new(
            &["a", "b", "c"],
            &[("a", "b", Line), ("b", "c", Line), ("a", "c", ArrowForward)],
        )
        .unwrap();
        assert!(!inner.is_chain_graph());
    }

    #[test]
    fn component_chain_is_deterministic() {
        let g = ge();
        let chain = g.component_chain().unwrap();
        let blocks: Vec<Vec<&str>> = chain.blocks().iter().map(|b| g.labels_of(*b)).collect();
        assert_eq!(
            blocks,
            vec![
                vec!["a"],
                vec!["b"],
                vec!["c", "d", "e"],
                vec!["f"],
                vec!["g"]
            ]
        );
        chain.validate(&g).unwrap();

        let g = ga();
        let blocks: Vec<Vec<&str>> = g
            .component_chain()
            .unwrap()
            .blocks()
            .iter()
            .map(|b| g.labels_of(*b))
            .collect();
        assert_eq!(blocks, vec![vec!["b"], vec!["a"], vec!["c"], vec!["d"]]);

        let two = HybridGraph::new(&["a", "b"], &[]).unwrap();
        assert_eq!(two.component_chain().unwrap().blocks().len(), 2);
        let ug = HybridGraph::new(&["a", "b"], &[("a", "b", Line)]).unwrap();
        assert_eq!(ug.component_chain().unwrap().blocks(), &[ug.nodes()]);
    }

    #[test]
    fn chain_validation_rejects_bad_orders() {
        let g = ga();
        let backwards = Chain::new(
            g.component_chain()
                .unwrap()
                .blocks()
                .iter()
                .rev()
                .copied()
                .collect(),
        );
        assert!(backwards.validate(&g).is_err());
        assert!(Chain::new(vec![g.nodes()]).validate(&g).is_err());
        assert!(Chain::new(vec![set(&g, &["a", "b"])]).validate(&g).is_err());
    }

    #[test]
    fn boundaries() {
        let g = ga();
        let d = g.node("d").unwrap();
        assert_eq!(g.parents(d), set(&g, &["a", "c"]));
        assert_eq!(g.siblings(d), NodeSet::EMPTY);
        assert_eq!(g.boundary(d), set(&g, &["a", "c"]));
        let g = ge();
        let d = g.node("d").unwrap();
        assert_eq!(g.parents(d), NodeSet::EMPTY);
        assert_eq!(g.boundary(d), set(&g, &["c", "e"]));
        assert_eq!(g.children(d), set(&g, &["f", "g"]));
        let iso = HybridGraph::new(&["a"], &[]).unwrap();
        assert!(iso.boundary(0).is_empty());
    }

    #[test]
    fn ancestors_and_descendants() {
        let g = ga();
        assert_eq!(g.ancestral_set(set(&g, &["d"])), g.nodes());
        assert_eq!(g.descendants(g.node("b").unwrap()), g.nodes());
        let g = ge();
        assert_eq!(
            g.ancestral_set(set(&g, &["a", "f", "c", "e", "g"])),
            g.nodes()
        );
        assert_eq!(
            g.descendants(g.node("c").unwrap()),
            set(&g, &["c", "d", "e", "f", "g"])
        );
        let iso = HybridGraph::new(&["a", "b"], &[]).unwrap();
        assert_eq!(iso.descendants(0), NodeSet::singleton(0));
    }
}
