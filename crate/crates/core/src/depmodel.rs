// SPDX-License-Identifier: MIT
//! Dependency models and the predicates the recovery algorithms consume.
//!
//! A dependency model splits the triplets over its nodes into an independency
//! part and a dependency part. Models are either backed by a chain graph, in
//! which case queries go to a separation criterion and are memoized, or
//! listed explicitly, in which case every unlisted triplet is dependent.

use std::collections::{BTreeSet, HashMap};
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::format::ModelFile;
use crate::graph::{Chain, HybridGraph};
use crate::nodeset::NodeSet;
use crate::separation::{represented_unchecked, Criterion};
use crate::triplet::Triplet;

pub trait DependencyModel {
    /// Node labels in index order.
    fn labels(&self) -> &[String];

    /// Membership in the independency part. The triplet must lie within the
    /// model's nodes.
    fn independent(&self, t: &Triplet) -> bool;

    fn n(&self) -> usize {
        self.labels().len()
    }

    fn is_independent(&self, t: &Triplet) -> Result<bool> {
        t.check_universe(self.n())?;
        Ok(self.independent(t))
    }
}

impl<M: DependencyModel + ?Sized> DependencyModel for &M {
    fn labels(&self) -> &[String] {
        (**self).labels()
    }

    fn independent(&self, t: &Triplet) -> bool {
        (**self).independent(t)
    }
}

/// The model induced by a chain graph.
#[derive(Debug)]
pub struct CgModel {
    graph: HybridGraph,
    criterion: Criterion,
    memo: RwLock<HashMap<Triplet, bool>>,
}

impl CgModel {
    pub fn new(graph: HybridGraph) -> Result<Self> {
        CgModel::with_criterion(graph, Criterion::default())
    }

    pub fn with_criterion(graph: HybridGraph, criterion: Criterion) -> Result<Self> {
        graph.require_chain_graph()?;
        Ok(CgModel {
            graph,
            criterion,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn graph(&self) -> &HybridGraph {
        &self.graph
    }

    pub fn criterion(&self) -> Criterion {
        self.criterion
    }

    /// Number of distinct triplets answered so far.
    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap_or_else(|e| e.into_inner()).len()
    }
}

impl DependencyModel for CgModel {
    fn labels(&self) -> &[String] {
        self.graph.labels()
    }

    fn independent(&self, t: &Triplet) -> bool {
        if let Some(&hit) = self.memo.read().unwrap_or_else(|e| e.into_inner()).get(t) {
            return hit;
        }
        let answer = represented_unchecked(&self.graph, t, self.criterion);
        self.memo
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .insert(*t, answer);
        answer
    }
}

/// A model given by its full independency part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitModel {
    labels: Vec<String>,
    independent: BTreeSet<Triplet>,
}

impl ExplicitModel {
    /// `labels` must be sorted and distinct.
    pub fn new<I>(labels: Vec<String>, independent: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triplet>,
    {
        if labels.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        if labels.len() > crate::MAX_NODES {
            return Err(Error::TooManyNodes(labels.len()));
        }
        if let Some(w) = labels.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::DuplicateNode(w[1].clone()));
        }
        let independent: BTreeSet<Triplet> = independent.into_iter().collect();
        for t in &independent {
            t.check_universe(labels.len())?;
        }
        Ok(ExplicitModel {
            labels,
            independent,
        })
    }

    pub fn from_file(file: ModelFile) -> Result<Self> {
        ExplicitModel::new(file.labels, file.independent)
    }

    pub fn independencies(&self) -> &BTreeSet<Triplet> {
        &self.independent
    }

    /// Triplets the semigraphoid axioms derive from the listed ones but
    /// which are not listed. Empty when the model is semigraphoid closed.
    pub fn semigraphoid_gaps(&self) -> Result<Vec<Triplet>> {
        let closure = graphoid_closure(self.independent.iter().copied(), self.labels.len(), false)?;
        Ok(closure.difference(&self.independent).copied().collect())
    }
}

impl DependencyModel for ExplicitModel {
    fn labels(&self) -> &[String] {
        &self.labels
    }

    fn independent(&self, t: &Triplet) -> bool {
        self.independent.contains(t)
    }
}

/// Which conditioning sets the predicates range over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Conditioning {
    /// Every `Z ⊆ N ∖ {u, v}`, the full remainder included.
    #[default]
    Inclusive,
    /// Proper subsets of `N ∖ {u, v}` only.
    Strict,
}

fn check_nodes<M: DependencyModel + ?Sized>(m: &M, nodes: &[usize]) -> Result<()> {
    for (i, &u) in nodes.iter().enumerate() {
        if u >= m.n() {
            return Err(Error::UnknownNode(format!("#{u}")));
        }
        if nodes[..i].contains(&u) {
            return Err(Error::NodesNotDistinct);
        }
    }
    Ok(())
}

fn dependent_for_all<M: DependencyModel + ?Sized>(
    m: &M,
    u: usize,
    v: usize,
    required: NodeSet,
    cond: Conditioning,
) -> bool {
    let rest = NodeSet::full(m.n()).without(u).without(v);
    let free = rest - required;
    free.subsets().all(|s| {
        let z = s | required;
        (cond == Conditioning::Strict && z == rest)
            || !m.independent(&Triplet::new_unchecked(
                NodeSet::singleton(u),
                NodeSet::singleton(v),
                z,
            ))
    })
}

/// `u` and `v` are dependent given every `Z ⊆ N ∖ {u, v}`.
pub fn dep_all<M: DependencyModel + ?Sized>(m: &M, u: usize, v: usize) -> Result<bool> {
    dep_all_with(m, u, v, Conditioning::default())
}

pub fn dep_all_with<M: DependencyModel + ?Sized>(
    m: &M,
    u: usize,
    v: usize,
    cond: Conditioning,
) -> Result<bool> {
    check_nodes(m, &[u, v])?;
    Ok(dependent_for_all(m, u, v, NodeSet::EMPTY, cond))
}

/// `u` and `v` are dependent given every `Z ⊆ N ∖ {u, v}` containing `w`.
pub fn dep_plus<M: DependencyModel + ?Sized>(m: &M, u: usize, v: usize, w: usize) -> Result<bool> {
    dep_plus_with(m, u, v, w, Conditioning::default())
}

pub fn dep_plus_with<M: DependencyModel + ?Sized>(
    m: &M,
    u: usize,
    v: usize,
    w: usize,
    cond: Conditioning,
) -> Result<bool> {
    check_nodes(m, &[u, v, w])?;
    Ok(dependent_for_all(m, u, v, NodeSet::singleton(w), cond))
}

fn check_graph_nodes(g: &HybridGraph, nodes: &[usize]) -> Result<()> {
    g.require_chain_graph()?;
    for (i, &u) in nodes.iter().enumerate() {
        if u >= g.n() {
            return Err(Error::UnknownNode(format!("#{u}")));
        }
        if nodes[..i].contains(&u) {
            return Err(Error::NodesNotDistinct);
        }
    }
    Ok(())
}

/// Graphical shortcut for [`dep_all`] on the model of a chain graph: the
/// predicate holds exactly for adjacent pairs.
pub fn cg_fast_dep_all(g: &HybridGraph, u: usize, v: usize) -> Result<bool> {
    check_graph_nodes(g, &[u, v])?;
    Ok(g.adjacent(u, v))
}

/// Graphical shortcut for [`dep_plus`] on the model of a chain graph when
/// `u`, `v` are nonadjacent with common neighbour `w`: the predicate holds
/// exactly when `u -> w <- v`.
pub fn cg_fast_complex_test(g: &HybridGraph, u: usize, w: usize, v: usize) -> Result<bool> {
    check_graph_nodes(g, &[u, w, v])?;
    if !g.adjacent(u, w) || !g.adjacent(v, w) {
        return Err(Error::HypothesisViolated(format!(
            "{} must be adjacent to both {} and {}",
            g.label(w),
            g.label(u),
            g.label(v)
        )));
    }
    if g.adjacent(u, v) {
        return Err(Error::HypothesisViolated(format!(
            "{} and {} must be nonadjacent",
            g.label(u),
            g.label(v)
        )));
    }
    Ok(g.is_arrow(u, w) && g.is_arrow(v, w))
}

/// `<u, B1 ∪ .. ∪ Bk(u) ∖ (bd(u) ∪ {u}) | bd(u)>` for every node `u` whose
/// middle set is nonempty, in node order.
pub fn input_list(g: &HybridGraph, chain: &Chain) -> Result<Vec<Triplet>> {
    chain.validate(g)?;
    let mut earlier = vec![NodeSet::EMPTY; g.n()];
    let mut acc = NodeSet::EMPTY;
    for block in chain.blocks() {
        acc |= *block;
        for u in *block {
            earlier[u] = acc;
        }
    }
    let mut out = Vec::new();
    for u in g.nodes() {
        let bd = g.boundary(u);
        let rest = earlier[u] - bd.with(u);
        if !rest.is_empty() {
            out.push(Triplet::new_unchecked(NodeSet::singleton(u), rest, bd));
        }
    }
    Ok(out)
}

/// Default node bound for [`graphoid_closure`].
pub const CLOSURE_NODE_BOUND: usize = 6;

/// Least set containing `list` closed under symmetry, decomposition, weak
/// union and contraction, and under intersection when requested.
pub fn graphoid_closure<I>(list: I, n: usize, with_intersection: bool) -> Result<BTreeSet<Triplet>>
where
    I: IntoIterator<Item = Triplet>,
{
    graphoid_closure_bounded(list, n, with_intersection, CLOSURE_NODE_BOUND)
}

pub fn graphoid_closure_bounded<I>(
    list: I,
    n: usize,
    with_intersection: bool,
    bound: usize,
) -> Result<BTreeSet<Triplet>>
where
    I: IntoIterator<Item = Triplet>,
{
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "node",
            actual: n,
            bound,
        });
    }
    let mut closure = Closure::new(n);
    for t in list {
        t.check_universe(n)?;
        closure.add(t);
    }
    closure.run(with_intersection);
    Ok(closure.into_set())
}

/// Dense membership table over all triplets on `n` nodes, indexed by the
/// three masks side by side.
struct Closure {
    n: usize,
    present: Vec<bool>,
    members: Vec<Triplet>,
    queue: Vec<Triplet>,
}

impl Closure {
    fn new(n: usize) -> Self {
        Closure {
            n,
            present: vec![false; 1 << (3 * n)],
            members: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn index(&self, x: NodeSet, y: NodeSet, z: NodeSet) -> usize {
        (x.bits() | y.bits() << self.n | z.bits() << (2 * self.n)) as usize
    }

    fn has(&self, x: NodeSet, y: NodeSet, z: NodeSet) -> bool {
        self.present[self.index(x, y, z)]
    }

    fn add(&mut self, t: Triplet) {
        let i = self.index(t.x(), t.y(), t.z());
        if !self.present[i] {
            self.present[i] = true;
            self.members.push(t);
            self.queue.push(t);
        }
    }

    fn run(&mut self, with_intersection: bool) {
        let all = NodeSet::full(self.n);
        while let Some(t) = self.queue.pop() {
            let (x, y, z) = (t.x(), t.y(), t.z());
            self.add(t.mirrored());
            for w in y.subsets() {
                if w.is_empty() || w == y {
                    continue;
                }
                // decomposition and weak union
                self.add(Triplet::new_unchecked(x, y - w, z));
                self.add(Triplet::new_unchecked(x, y - w, z | w));
            }
            // contraction, t as <X, Y | Z>: needs <X, W | Y ∪ Z>
            for w in (all - x - y - z).subsets() {
                if !w.is_empty() && self.has(x, w, y | z) {
                    self.add(Triplet::new_unchecked(x, y | w, z));
                }
            }
            // contraction, t as <X, W | Z'> with Z' = Y' ∪ Z: needs <X, Y' | Z>
            for y2 in z.subsets() {
                if !y2.is_empty() && self.has(x, y2, z - y2) {
                    self.add(Triplet::new_unchecked(x, y | y2, z - y2));
                }
            }
            if with_intersection {
                // <X, Y | Z ∪ W> and <X, W | Z ∪ Y> give <X, Y ∪ W | Z>
                for w in z.subsets() {
                    if !w.is_empty() && self.has(x, w, (z - w) | y) {
                        self.add(Triplet::new_unchecked(x, y | w, z - w));
                    }
                }
            }
        }
    }

    fn into_set(self) -> BTreeSet<Triplet> {
        self.members.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_graph, parse_triplet};

    fn g(text: &str) -> HybridGraph {
        parse_graph(text).unwrap()
    }

    fn ga() -> HybridGraph {
        g("nodes a b c d\nb -> a\nb -> c\na -> d\nc -> d\n")
    }

    fn ge() -> HybridGraph {
        g("nodes a b c d e f g\nc -- d\nd -- e\na -> c\nb -> e\nb -> g\nd -> f\nd -> g\n")
    }

    #[test]
    fn cg_backed_queries() {
        let e = CgModel::new(ge()).unwrap();
        let t = parse_triplet("a | f | c,e,g", e.labels()).unwrap();
        assert!(!e.is_independent(&t).unwrap());
        assert_eq!(e.memo_len(), 1);
        assert!(!e.is_independent(&t).unwrap());
        assert_eq!(e.memo_len(), 1);
        let c = CgModel::with_criterion(ge(), Criterion::CSeparation).unwrap();
        assert!(!c.is_independent(&t).unwrap());

        let a = CgModel::new(ga()).unwrap();
        let t = |s: &str| parse_triplet(s, a.labels()).unwrap();
        assert!(a.is_independent(&t("a | c | b")).unwrap());
        // b is a common parent of a and c
        assert!(!a.is_independent(&t("a | c |")).unwrap());
        let bad = Triplet::pair(0, 9, NodeSet::EMPTY).unwrap();
        assert!(a.is_independent(&bad).is_err());
        let cycle = g("nodes a b c\na -> b\nb -- c\nc -> a\n");
        assert!(matches!(
            CgModel::new(cycle),
            Err(Error::NotChainGraph { .. })
        ));
    }

    #[test]
    fn explicit_models() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let empty = ExplicitModel::new(labels.clone(), []).unwrap();
        for t in crate::all_triplets(3, 12).unwrap() {
            assert!(!empty.is_independent(&t).unwrap());
        }
        assert!(empty.semigraphoid_gaps().unwrap().is_empty());

        let t = parse_triplet("a | b,c |", &labels).unwrap();
        let m = ExplicitModel::new(labels.clone(), [t]).unwrap();
        assert!(m.is_independent(&t).unwrap());
        assert!(!m.is_independent(&t.mirrored()).unwrap());
        assert!(m.semigraphoid_gaps().unwrap().contains(&t.mirrored()));

        let unsorted: Vec<String> = ["b", "a"].iter().map(|s| s.to_string()).collect();
        assert!(ExplicitModel::new(unsorted, []).is_err());
    }

    #[test]
    fn predicates_on_fixtures() {
        let a = CgModel::new(ga()).unwrap();
        let n = |l: &str| a.graph().node(l).unwrap();
        assert!(dep_all(&a, n("a"), n("d")).unwrap());
        assert!(!dep_all(&a, n("a"), n("c")).unwrap());
        assert!(dep_plus(&a, n("a"), n("c"), n("d")).unwrap());
        assert!(!dep_plus(&a, n("a"), n("c"), n("b")).unwrap());
        assert!(matches!(dep_all(&a, 1, 1), Err(Error::NodesNotDistinct)));
        assert!(dep_plus(&a, 0, 1, 0).is_err());

        let gc = CgModel::new(g("nodes p q u v\nu -> p\np -- q\nv -> q\n")).unwrap();
        let n = |l: &str| gc.graph().node(l).unwrap();
        assert!(dep_plus(&gc, n("u"), n("v"), n("p")).unwrap());
        assert!(dep_plus(&gc, n("u"), n("v"), n("q")).unwrap());
        assert!(!dep_all(&gc, n("u"), n("v")).unwrap());
    }

    #[test]
    fn two_node_models_use_only_the_empty_set() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let t = Triplet::pair(0, 1, NodeSet::EMPTY).unwrap();
        let indep = ExplicitModel::new(labels.clone(), [t]).unwrap();
        assert!(!dep_all(&indep, 0, 1).unwrap());
        assert!(dep_all(&indep, 1, 0).unwrap());
        // the only Z is the full remainder, which the strict reading skips
        assert!(dep_all_with(&indep, 0, 1, Conditioning::Strict).unwrap());
        let dep = ExplicitModel::new(labels, []).unwrap();
        assert!(dep_all(&dep, 0, 1).unwrap());
    }

    #[test]
    fn fast_paths() {
        let a = ga();
        let n = |l: &str| a.node(l).unwrap();
        assert!(cg_fast_dep_all(&a, n("a"), n("d")).unwrap());
        assert!(!cg_fast_dep_all(&a, n("a"), n("c")).unwrap());
        assert!(cg_fast_complex_test(&a, n("a"), n("d"), n("c")).unwrap());
        assert!(!cg_fast_complex_test(&a, n("a"), n("b"), n("c")).unwrap());
        assert!(matches!(
            cg_fast_complex_test(&a, n("a"), n("b"), n("d")),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            cg_fast_complex_test(&a, n("b"), n("a"), n("c")),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn input_lists() {
        let a = ga();
        let chain = a.component_chain().unwrap();
        let list = input_list(&a, &chain).unwrap();
        let shown: Vec<String> = list.iter().map(|t| t.display(a.labels())).collect();
        assert!(shown.contains(&"d | b | a,c".to_string()));
        assert_eq!(
            input_list(&g("nodes a\n"), &g("nodes a\n").component_chain().unwrap()).unwrap(),
            vec![]
        );

        let ug = g("nodes a b c\na -- b\nb -- c\n");
        let list = input_list(&ug, &Chain::new(vec![ug.nodes()])).unwrap();
        let shown: Vec<String> = list.iter().map(|t| t.display(ug.labels())).collect();
        assert_eq!(shown, vec!["a | c | b", "c | a | b"]);

        let bad = Chain::new(vec![NodeSet::singleton(0)]);
        assert!(input_list(&ug, &bad).is_err());
    }

    #[test]
    fn closure_basics() {
        assert!(graphoid_closure([], 3, true).unwrap().is_empty());
        let labels = ["a", "b", "c"];
        let t = |s: &str| parse_triplet(s, &labels).unwrap();
        let c = graphoid_closure([t("a | b,c |")], 3, false).unwrap();
        for s in [
            "a | b |",
            "a | c |",
            "a | b | c",
            "a | c | b",
            "b | a |",
            "b,c | a |",
            "c | a | b",
        ] {
            assert!(c.contains(&t(s)), "{s}");
        }
        assert_eq!(c.len(), 10);
        assert!(graphoid_closure([t("a | b |")], 7, false).is_err());
        assert!(
            graphoid_closure([Triplet::pair(0, 5, NodeSet::EMPTY).unwrap()], 3, false).is_err()
        );
    }

    #[test]
    fn contraction_and_intersection() {
        let labels = ["a", "b", "c"];
        let t = |s: &str| parse_triplet(s, &labels).unwrap();
        let c = graphoid_closure([t("a | b |"), t("a | c | b")], 3, false).unwrap();
        assert!(c.contains(&t("a | b,c |")));
        let without = graphoid_closure([t("a | b | c"), t("a | c | b")], 3, false).unwrap();
        assert!(!without.contains(&t("a | b,c |")));
        let with = graphoid_closure([t("a | b | c"), t("a | c | b")], 3, true).unwrap();
        assert!(with.contains(&t("a | b,c |")));
    }
}
