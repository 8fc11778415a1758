// SPDX-License-Identifier: MIT
//! Recovery of the pattern from a dependency model.
//!
//! Level 0 joins every pair dependent given all conditioning sets. Level 1
//! directs `u -> w <- v` for nonadjacent `u`, `v` that stay dependent
//! whenever `w` is conditioned on. Level `l` looks at chordless sequences
//! `w1, .., w(l+2)` whose interior is a run of lines and directs both ends
//! inwards when `w1` and `w(l+2)` stay dependent given either inner end. All
//! directings of a level are computed against the previous level and applied
//! together.

use std::collections::{BTreeSet, HashMap};

use crate::depmodel::{dep_all, dep_plus, DependencyModel};
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, HybridGraph};
use crate::nodeset::NodeSet;

/// Memoized `dep_all` / `dep_plus` answers for one model.
struct Predicates<'m, M: ?Sized> {
    model: &'m M,
    plus: HashMap<(usize, usize, usize), bool>,
}

impl<M: DependencyModel + ?Sized> Predicates<'_, M> {
    fn plus(&mut self, u: usize, v: usize, w: usize) -> Result<bool> {
        let key = (u.min(v), u.max(v), w);
        if let Some(&hit) = self.plus.get(&key) {
            return Ok(hit);
        }
        let answer = dep_plus(self.model, key.0, key.1, w)?;
        self.plus.insert(key, answer);
        Ok(answer)
    }
}

/// The pattern of the chain graph inducing `m`.
pub fn recover_pattern<M: DependencyModel + ?Sized>(m: &M) -> Result<HybridGraph> {
    Ok(recover_pattern_levels(m)?
        .pop()
        .expect("level 0 always exists"))
}

/// Every level `H0, H1, .., H(n-2)`; for fewer than four nodes the list
/// stops at `H1` (or `H0` for a single node).
pub fn recover_pattern_levels<M: DependencyModel + ?Sized>(m: &M) -> Result<Vec<HybridGraph>> {
    let n = m.n();
    let mut h0 = HybridGraph::edgeless(m.labels().to_vec())?;
    for u in 0..n {
        for v in u + 1..n {
            if dep_all(m, u, v)? {
                h0.set_edge(u, v, Some(EdgeKind::Line));
            }
        }
    }
    let mut levels = vec![h0];
    if n < 2 {
        return Ok(levels);
    }
    let mut preds = Predicates {
        model: m,
        plus: HashMap::new(),
    };

    let h0 = &levels[0];
    let mut demands = BTreeSet::new();
    for w in 0..n {
        let nb: Vec<usize> = h0.siblings(w).iter().collect();
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                if !h0.adjacent(u, v) && preds.plus(u, v, w)? {
                    demands.insert((u, w));
                    demands.insert((v, w));
                }
            }
        }
    }
    let h1 = apply_demands(h0, &demands)?;
    levels.push(h1);

    for l in 2..n.saturating_sub(1) {
        let prev = levels.last().unwrap();
        let mut demands = BTreeSet::new();
        for seq in chordless_sequences(prev, l + 2) {
            let (first, last) = (seq[0], seq[l + 1]);
            if preds.plus(first, last, seq[1])? && preds.plus(first, last, seq[l])? {
                demands.insert((first, seq[1]));
                demands.insert((last, seq[l]));
            }
        }
        let next = apply_demands(prev, &demands)?;
        levels.push(next);
    }
    Ok(levels)
}

/// Sequences `w1, .., wk` of distinct nodes with `w1 -> w2` or `w1 -- w2`,
/// `w(k-1) <- wk` or `w(k-1) -- wk`, lines in between, and no other edges
/// among them. Each sequence is reported once per direction.
fn chordless_sequences(h: &HybridGraph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(k);
    for w1 in h.nodes() {
        for w2 in h.children(w1) | h.siblings(w1) {
            seq.clear();
            seq.push(w1);
            seq.push(w2);
            extend_sequence(h, k, &mut seq, NodeSet::singleton(w1).with(w2), &mut out);
        }
    }
    out
}

fn extend_sequence(
    h: &HybridGraph,
    k: usize,
    seq: &mut Vec<usize>,
    on: NodeSet,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *seq.last().unwrap();
    let only_last = NodeSet::singleton(last);
    if seq.len() + 1 == k {
        for w in (h.parents(last) | h.siblings(last)) - on {
            if h.neighbors(w) & on == only_last {
                seq.push(w);
                out.push(seq.clone());
                seq.pop();
            }
        }
        return;
    }
    for w in h.siblings(last) - on {
        if h.neighbors(w) & on == only_last {
            seq.push(w);
            extend_sequence(h, k, seq, on.with(w), out);
            seq.pop();
        }
    }
}

/// Directs every demanded `(tail, head)` at once.
fn apply_demands(prev: &HybridGraph, demands: &BTreeSet<(usize, usize)>) -> Result<HybridGraph> {
    let mut next = prev.clone();
    for &(t, h) in demands {
        if demands.contains(&(h, t)) || prev.is_arrow(h, t) {
            return Err(Error::OrientationConflict(
                prev.label(t).to_string(),
                prev.label(h).to_string(),
            ));
        }
        if prev.is_line(t, h) {
            let ((lo, hi), kind) = crate::graph::canonical(t, h, EdgeKind::ArrowForward);
            next.set_edge(lo, hi, Some(kind));
        }
    }
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::pattern_of;
    use crate::depmodel::{CgModel, ExplicitModel};
    use crate::format::parse_graph;

    fn g(text: &str) -> HybridGraph {
        parse_graph(text).unwrap()
    }

    #[test]
    fn fixture_patterns() {
        let ga = g("nodes a b c d\nb -> a\nb -> c\na -> d\nc -> d\n");
        let m = CgModel::new(ga.clone()).unwrap();
        assert_eq!(
            recover_pattern(&m).unwrap(),
            g("nodes a b c d\na -- b\nb -- c\na -> d\nc -> d\n")
        );
        assert_eq!(recover_pattern(&m).unwrap(), pattern_of(&ga).unwrap());

        let ug = g("nodes a b c d\na -- b\nb -- c\nc -- d\nd -- a\n");
        let levels = recover_pattern_levels(&CgModel::new(ug.clone()).unwrap()).unwrap();
        assert_eq!(levels.len(), 3);
        assert!(levels.iter().all(|h| *h == ug));
    }

    #[test]
    fn degree_two_complex_needs_level_two() {
        let gc = g("nodes p q u v\nu -> p\np -- q\nv -> q\n");
        let levels = recover_pattern_levels(&CgModel::new(gc.clone()).unwrap()).unwrap();
        assert_eq!(levels[0], gc.underlying());
        assert_eq!(levels[1], gc.underlying());
        assert_eq!(levels[2], gc);
    }

    #[test]
    fn small_node_counts() {
        let one = ExplicitModel::new(vec!["a".into()], []).unwrap();
        assert_eq!(recover_pattern_levels(&one).unwrap().len(), 1);
        let two = ExplicitModel::new(vec!["a".into(), "b".into()], []).unwrap();
        let levels = recover_pattern_levels(&two).unwrap();
        assert_eq!(levels.len(), 2);
        assert!(levels[1].is_line(0, 1));
    }

    #[test]
    fn conflicting_demands_are_errors() {
        // only a, c and b, d are independent, and only marginally: the square
        // a -- b -- c -- d -- a gets a complex at every corner
        let labels: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let mut indep = Vec::new();
        for (u, v) in [(0, 2), (1, 3)] {
            let t = crate::Triplet::pair(u, v, NodeSet::EMPTY).unwrap();
            indep.push(t);
            indep.push(t.mirrored());
        }
        let m = ExplicitModel::new(labels, indep).unwrap();
        assert!(matches!(
            recover_pattern(&m),
            Err(Error::OrientationConflict(..))
        ));
    }
}
