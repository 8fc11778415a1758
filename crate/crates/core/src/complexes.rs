// SPDX-License-Identifier: MIT
//! Complexes, patterns and Markov equivalence.
//!
//! A complex is an induced path `u -> w1 -- ... -- wr <- v` with no edges
//! among its nodes other than the path edges. Two chain graphs are Markov
//! equivalent exactly when they share the underlying graph and the complexes,
//! which makes the pattern (skeleton plus complex arrows) a class fingerprint.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, HybridGraph};
use crate::nodeset::NodeSet;

/// Default edge bound for [`equivalence_class`].
pub const CLASS_EDGE_BOUND: usize = 12;

/// A complex, stored with the smaller parent first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    path: Vec<usize>,
}

impl Complex {
    /// `path` is `u, w1, .., wr, v`; it is flipped if needed so `u < v`.
    pub(crate) fn from_path(mut path: Vec<usize>) -> Self {
        debug_assert!(path.len() >= 3);
        if path[0] > path[path.len() - 1] {
            path.reverse();
        }
        Complex { path }
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn parents(&self) -> (usize, usize) {
        (self.path[0], self.path[self.path.len() - 1])
    }

    pub fn region(&self) -> &[usize] {
        &self.path[1..self.path.len() - 1]
    }

    pub fn region_set(&self) -> NodeSet {
        self.region().iter().collect()
    }

    pub fn degree(&self) -> usize {
        self.path.len() - 2
    }

    /// The two arrows of the complex as `(tail, head)`.
    pub fn arrows(&self) -> [(usize, usize); 2] {
        let k = self.path.len();
        [
            (self.path[0], self.path[1]),
            (self.path[k - 1], self.path[k - 2]),
        ]
    }

    /// `a -> c -- d -- e <- b`
    pub fn display(&self, g: &HybridGraph) -> String {
        let k = self.path.len();
        let mut out = format!("{} -> {}", g.label(self.path[0]), g.label(self.path[1]));
        for &w in &self.path[2..k - 1] {
            out.push_str(" -- ");
            out.push_str(g.label(w));
        }
        out.push_str(" <- ");
        out.push_str(g.label(self.path[k - 1]));
        out
    }
}

impl Ord for Complex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parents()
            .cmp(&other.parents())
            .then_with(|| self.region().cmp(other.region()))
    }
}

impl PartialOrd for Complex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Calls `f(u, region, v)` once for every complex of the subgraph induced on
/// `within`, with `u < v`.
pub(crate) fn for_each_complex_within<F>(g: &HybridGraph, within: NodeSet, mut f: F)
where
    F: FnMut(usize, &[usize], usize),
{
    let mut region = Vec::with_capacity(within.len());
    for u in within.iter() {
        for w in (g.children(u) & within).iter() {
            region.clear();
            region.push(w);
            extend_region(g, within, u, &mut region, NodeSet::singleton(w), &mut f);
        }
    }
}

fn extend_region<F>(
    g: &HybridGraph,
    within: NodeSet,
    u: usize,
    region: &mut Vec<usize>,
    region_set: NodeSet,
    f: &mut F,
) where
    F: FnMut(usize, &[usize], usize),
{
    let x = *region.last().unwrap();
    let seen = region_set.with(u);
    let only_x = NodeSet::singleton(x);
    // closing parent: adjacent to x and to nothing else on the path
    for v in (g.parents(x) & within) - seen {
        if v > u && g.neighbors(v) & seen == only_x {
            f(u, region, v);
        }
    }
    for y in (g.siblings(x) & within) - seen {
        if g.neighbors(y) & seen == only_x {
            region.push(y);
            extend_region(g, within, u, region, region_set.with(y), f);
            region.pop();
        }
    }
}

/// All complexes, canonically oriented and sorted by parents then region.
pub fn enumerate_complexes(g: &HybridGraph) -> Vec<Complex> {
    let mut out = Vec::new();
    for_each_complex_within(g, g.nodes(), |u, region, v| {
        let mut path = Vec::with_capacity(region.len() + 2);
        path.push(u);
        path.extend_from_slice(region);
        path.push(v);
        out.push(Complex::from_path(path));
    });
    out.sort();
    out.dedup();
    out
}

/// Underlying graph with the arrows of every complex restored.
pub fn pattern_of(g: &HybridGraph) -> Result<HybridGraph> {
    g.require_chain_graph()?;
    Ok(pattern_unchecked(g))
}

pub(crate) fn pattern_unchecked(g: &HybridGraph) -> HybridGraph {
    let mut p = g.underlying();
    for c in enumerate_complexes(g) {
        for (t, h) in c.arrows() {
            let ((lo, hi), kind) = crate::graph::canonical(t, h, EdgeKind::ArrowForward);
            p.set_edge(lo, hi, Some(kind));
        }
    }
    p
}

/// Same underlying graph and same complexes.
pub fn markov_equivalent(g: &HybridGraph, h: &HybridGraph) -> Result<bool> {
    if g.labels() != h.labels() {
        return Err(Error::NodeSetMismatch);
    }
    g.require_chain_graph()?;
    h.require_chain_graph()?;
    Ok(g.same_skeleton(h) && enumerate_complexes(g) == enumerate_complexes(h))
}

/// True when `g` is larger than `h`: every arrow of `g` is an arrow of `h`
/// with the same orientation.
pub fn is_larger(h: &HybridGraph, g: &HybridGraph) -> Result<bool> {
    if !h.same_skeleton(g) {
        return Err(Error::SkeletonMismatch);
    }
    Ok(g.arrows().all(|(t, hd)| h.is_arrow(t, hd)))
}

/// Every chain graph Markov equivalent to `g`, found by trying all
/// orientations of the edges outside the pattern's complex arrows.
pub fn equivalence_class(g: &HybridGraph, edge_bound: usize) -> Result<Vec<HybridGraph>> {
    g.require_chain_graph()?;
    if g.edge_count() > edge_bound {
        return Err(Error::BoundExceeded {
            what: "edge",
            actual: g.edge_count(),
            bound: edge_bound,
        });
    }
    let complexes = enumerate_complexes(g);
    let pattern = pattern_unchecked(g);
    let free: Vec<(usize, usize)> = pattern.lines().collect();
    const KINDS: [EdgeKind; 3] = [
        EdgeKind::Line,
        EdgeKind::ArrowForward,
        EdgeKind::ArrowBackward,
    ];

    let mut members = Vec::new();
    let mut digits = vec![0usize; free.len()];
    let mut candidate = pattern.clone();
    loop {
        for (&(u, v), &d) in free.iter().zip(&digits) {
            candidate.set_edge(u, v, Some(KINDS[d]));
        }
        if candidate.is_chain_graph() && enumerate_complexes(&candidate) == complexes {
            members.push(candidate.clone());
        }
        let mut i = 0;
        while i < digits.len() && digits[i] == 2 {
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            break;
        }
        digits[i] += 1;
    }
    Ok(members)
}

/// The largest chain graph of `g`'s class by brute force: the member whose
/// arrows are exactly the edges oriented the same way in every member.
///
/// Panics if that graph is not a class member larger than all others, which
/// would contradict the existence of a largest member.
pub fn largest_cg_oracle(g: &HybridGraph, edge_bound: usize) -> Result<HybridGraph> {
    let class = equivalence_class(g, edge_bound)?;
    Ok(largest_of_class(&class))
}

/// Largest member of an already enumerated class.
pub fn largest_of_class(class: &[HybridGraph]) -> HybridGraph {
    let first = &class[0];
    let mut largest = first.underlying();
    for (t, h) in first.arrows() {
        if class.iter().all(|m| m.is_arrow(t, h)) {
            let ((lo, hi), kind) = crate::graph::canonical(t, h, EdgeKind::ArrowForward);
            largest.set_edge(lo, hi, Some(kind));
        }
    }
    assert!(
        class.contains(&largest),
        "arrow intersection of the class is not a class member"
    );
    largest
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;

    fn g(text: &str) -> HybridGraph {
        parse_graph(text).unwrap()
    }

    fn ga() -> HybridGraph {
        g("nodes a b c d\nb -> a\nb -> c\na -> d\nc -> d\n")
    }

    fn ge() -> HybridGraph {
        g("nodes a b c d e f g\nc -- d\nd -- e\na -> c\nb -> e\nb -> g\nd -> f\nd -> g\n")
    }

    fn show(g: &HybridGraph) -> Vec<String> {
        enumerate_complexes(g)
            .iter()
            .map(|c| c.display(g))
            .collect()
    }

    #[test]
    fn complexes_of_fixtures() {
        assert_eq!(show(&ga()), vec!["a -> d <- c"]);
        let e = ge();
        assert_eq!(show(&e), vec!["a -> c -- d -- e <- b", "b -> g <- d"]);
        let c = &enumerate_complexes(&e)[0];
        assert_eq!(c.degree(), 3);
        assert_eq!(c.parents(), (0, 1));
        assert!(show(&g("nodes a b c\na -- b\nb -- c\n")).is_empty());
    }

    #[test]
    fn chords_disqualify_complexes() {
        // a -> b <- c with a -- c is no complex
        assert!(show(&g("nodes a b c\na -> b\nc -> b\na -- c\n")).is_empty());
        // region chord: a -> p -- q -- r <- b with p -- r
        let h = g("nodes a b p q r\na -> p\np -- q\nq -- r\np -- r\nb -> r\n");
        assert_eq!(show(&h), vec!["a -> p -- r <- b"]);
    }

    #[test]
    fn pattern_keeps_only_complex_arrows() {
        assert_eq!(
            pattern_of(&ga()).unwrap(),
            g("nodes a b c d\na -- b\nb -- c\na -> d\nc -> d\n")
        );
        let ug = g("nodes a b c\na -- b\nb -- c\n");
        assert_eq!(pattern_of(&ug).unwrap(), ug);
        assert_eq!(
            pattern_of(&ge()).unwrap(),
            g("nodes a b c d e f g\nc -- d\nd -- e\nd -- f\na -> c\nb -> e\nb -> g\nd -> g\n")
        );
        let cyclic = g("nodes a b c\na -> b\nb -> c\nc -> a\n");
        assert!(matches!(
            pattern_of(&cyclic),
            Err(Error::NotChainGraph { .. })
        ));
    }

    #[test]
    fn equivalence() {
        let lines = g("nodes a b c d\na -- b\nb -- c\na -> d\nc -> d\n");
        assert!(markov_equivalent(&ga(), &lines).unwrap());
        assert!(markov_equivalent(&ga(), &ga()).unwrap());
        let ab = g("nodes a b\na -> b\n");
        assert!(markov_equivalent(&ab, &g("nodes a b\na -- b\n")).unwrap());
        let collider = g("nodes a b c\na -> b\nc -> b\n");
        assert!(!markov_equivalent(&collider, &g("nodes a b c\na -- b\nb -- c\n")).unwrap());
        assert!(matches!(
            markov_equivalent(&ab, &g("nodes a c\na -> c\n")),
            Err(Error::NodeSetMismatch)
        ));
    }

    #[test]
    fn larger_relation() {
        let lines = g("nodes a b c d\na -- b\nb -- c\na -> d\nc -> d\n");
        assert!(is_larger(&ga(), &lines).unwrap());
        assert!(!is_larger(&lines, &ga()).unwrap());
        assert!(is_larger(&ga(), &ga()).unwrap());
        let ab = g("nodes a b\na -> b\n");
        let ba = g("nodes a b\nb -> a\n");
        assert!(!is_larger(&ab, &ba).unwrap());
        assert!(!is_larger(&ba, &ab).unwrap());
        assert!(matches!(
            is_larger(&ab, &g("nodes a b\n")),
            Err(Error::SkeletonMismatch)
        ));
    }

    #[test]
    fn classes() {
        // a-b and b-c take any of three kinds except the new complex a -> b <- c
        let class = equivalence_class(&ga(), CLASS_EDGE_BOUND).unwrap();
        assert_eq!(class.len(), 8);
        assert!(class.contains(&ga()));
        let ug = g("nodes a b\na -- b\n");
        assert_eq!(equivalence_class(&ug, CLASS_EDGE_BOUND).unwrap().len(), 3);
        let collider = g("nodes a b c\na -> b\nc -> b\n");
        assert_eq!(
            equivalence_class(&collider, CLASS_EDGE_BOUND).unwrap(),
            vec![collider.clone()]
        );
        assert!(matches!(
            equivalence_class(&ga(), 3),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn largest_members() {
        let lines = g("nodes a b c d\na -- b\nb -- c\na -> d\nc -> d\n");
        assert_eq!(largest_cg_oracle(&ga(), CLASS_EDGE_BOUND).unwrap(), lines);
        let ug = g("nodes a b c\na -- b\nb -- c\n");
        assert_eq!(largest_cg_oracle(&ug, CLASS_EDGE_BOUND).unwrap(), ug);
        let collider = g("nodes a b c\na -> b\nc -> b\n");
        assert_eq!(
            largest_cg_oracle(&collider, CLASS_EDGE_BOUND).unwrap(),
            collider
        );
    }
}
