// SPDX-License-Identifier: MIT
//! Direct separation over trails.
//!
//! A trail is a route that uses no arrow twice and whose sections (maximal
//! runs of lines) have distinct nodes. A section is blocked by `Z` when it is
//! head-to-head with no descendant in `Z`, or when it is not head-to-head,
//! meets `Z`, and has a tail-terminal node all of whose slides meet `Z`.
//!
//! [`c_represented`] does not materialize trails: it extends them depth
//! first and prunes as soon as a closed section is blocked, since every
//! extension keeps that section.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::HybridGraph;
use crate::nodeset::NodeSet;
use crate::triplet::Triplet;

/// How a trail moves from one node to the next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Line,
    /// `v_i -> v_{i+1}`
    Forward,
    /// `v_i <- v_{i+1}`
    Backward,
}

/// What bounds a section on one side, seen from the section's terminal node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Delimiter {
    /// The delimiting arrow points into the section.
    Incoming,
    /// The delimiting arrow emanates from the section.
    Outgoing,
    /// The trail ends here.
    TrailEnd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SectionKind {
    HeadToHead,
    HeadToTail,
    TailToTail,
}

/// Whether the terminal node counts when asking if a slide meets `Z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SlideRule {
    #[default]
    AllNodes,
    ExcludeTerminal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trail {
    nodes: Vec<usize>,
    steps: Vec<Step>,
}

fn pair_id(n: usize, u: usize, v: usize) -> usize {
    if u < v {
        u * n + v
    } else {
        v * n + u
    }
}

impl Trail {
    /// Validates a node sequence as a trail of `g`.
    pub fn from_nodes(g: &HybridGraph, nodes: Vec<usize>) -> Result<Trail> {
        if nodes.is_empty() {
            return Err(Error::InvalidTrail("empty route"));
        }
        if nodes.iter().any(|&u| u >= g.n()) {
            return Err(Error::InvalidTrail("unknown node"));
        }
        let mut steps = Vec::with_capacity(nodes.len() - 1);
        let mut used = vec![false; g.n() * g.n()];
        let mut section = NodeSet::singleton(nodes[0]);
        for w in nodes.windows(2) {
            let (u, v) = (w[0], w[1]);
            let step = if g.is_line(u, v) {
                Step::Line
            } else if g.is_arrow(u, v) {
                Step::Forward
            } else if g.is_arrow(v, u) {
                Step::Backward
            } else {
                return Err(Error::InvalidTrail("consecutive nodes are not adjacent"));
            };
            if step == Step::Line {
                if section.contains(v) {
                    return Err(Error::InvalidTrail("section repeats a node"));
                }
                section.insert(v);
            } else {
                let id = pair_id(g.n(), u, v);
                if used[id] {
                    return Err(Error::InvalidTrail("arrow used twice"));
                }
                used[id] = true;
                section = NodeSet::singleton(v);
            }
            steps.push(step);
        }
        Ok(Trail { nodes, steps })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `a -> c -- d <- b`
    pub fn display(&self, g: &HybridGraph) -> String {
        let mut out = g.label(self.nodes[0]).to_string();
        for (step, &v) in self.steps.iter().zip(&self.nodes[1..]) {
            let op = match step {
                Step::Line => "--",
                Step::Forward => "->",
                Step::Backward => "<-",
            };
            let _ = write!(out, " {op} {}", g.label(v));
        }
        out
    }
}

/// A maximal run of line steps within a trail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    start: usize,
    nodes: Vec<usize>,
    left: Delimiter,
    right: Delimiter,
}

impl Section {
    /// Position of the first node within the trail.
    pub fn start(&self) -> usize {
        self.start
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn node_set(&self) -> NodeSet {
        self.nodes.iter().collect()
    }

    pub fn left(&self) -> Delimiter {
        self.left
    }

    pub fn right(&self) -> Delimiter {
        self.right
    }

    pub fn kind(&self) -> SectionKind {
        match (self.left, self.right) {
            (Delimiter::Incoming, Delimiter::Incoming) => SectionKind::HeadToHead,
            (Delimiter::Incoming, _) | (_, Delimiter::Incoming) => SectionKind::HeadToTail,
            _ => SectionKind::TailToTail,
        }
    }

    /// Terminal nodes whose delimiter is the trail end or an outgoing arrow.
    pub fn tail_terminals(&self) -> NodeSet {
        let mut out = NodeSet::EMPTY;
        if self.left != Delimiter::Incoming {
            out.insert(self.nodes[0]);
        }
        if self.right != Delimiter::Incoming {
            out.insert(self.nodes[self.nodes.len() - 1]);
        }
        out
    }
}

/// Splits a trail into its sections, left to right.
pub fn sections_of(trail: &Trail) -> Vec<Section> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut left = Delimiter::TrailEnd;
    for (i, step) in trail.steps.iter().enumerate() {
        let (right, next_left) = match step {
            Step::Line => continue,
            Step::Forward => (Delimiter::Outgoing, Delimiter::Incoming),
            Step::Backward => (Delimiter::Incoming, Delimiter::Outgoing),
        };
        out.push(Section {
            start,
            nodes: trail.nodes[start..=i].to_vec(),
            left,
            right,
        });
        start = i + 1;
        left = next_left;
    }
    out.push(Section {
        start,
        nodes: trail.nodes[start..].to_vec(),
        left,
        right: Delimiter::TrailEnd,
    });
    out
}

/// A path `v1 -> v2 -- v3 -- ... -- vk`; the last node is the slide's target.
/// Only the first step is an arrow, so a slide enters the target's
/// component and then runs inside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slide {
    path: Vec<usize>,
}

impl Slide {
    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn node_set(&self) -> NodeSet {
        self.path.iter().collect()
    }

    /// Whether the slide has a node in `z`, counting its target only under
    /// [`SlideRule::AllNodes`].
    pub fn meets(&self, z: NodeSet, rule: SlideRule) -> bool {
        let mut nodes = self.node_set();
        if rule == SlideRule::ExcludeTerminal {
            nodes.remove(self.path[self.path.len() - 1]);
        }
        nodes.intersects(z)
    }
}

/// Every slide ending at `u`.
pub fn slides_to(g: &HybridGraph, u: usize) -> Result<Vec<Slide>> {
    if u >= g.n() {
        return Err(Error::UnknownNode(format!("#{u}")));
    }
    let mut out = Vec::new();
    let mut path = vec![u];
    collect_slides(g, &mut path, NodeSet::singleton(u), &mut out);
    Ok(out)
}

// `path` is a path of lines u -- p1 -- ... -- pm; every parent of pm closes
// a slide.
fn collect_slides(g: &HybridGraph, path: &mut Vec<usize>, on_path: NodeSet, out: &mut Vec<Slide>) {
    let end = *path.last().unwrap();
    for v in g.parents(end) {
        let mut slide = Vec::with_capacity(path.len() + 1);
        slide.push(v);
        slide.extend(path.iter().rev());
        out.push(Slide { path: slide });
    }
    for c in g.siblings(end) - on_path {
        path.push(c);
        collect_slides(g, path, on_path.with(c), out);
        path.pop();
    }
}

/// Whether section `s` of `trail` is blocked by `z`.
pub fn section_blocked(g: &HybridGraph, trail: &Trail, s: &Section, z: NodeSet) -> Result<bool> {
    section_blocked_with(g, trail, s, z, SlideRule::default())
}

pub fn section_blocked_with(
    g: &HybridGraph,
    trail: &Trail,
    s: &Section,
    z: NodeSet,
    rule: SlideRule,
) -> Result<bool> {
    if !sections_of(trail).contains(s) {
        return Err(Error::SectionNotInTrail);
    }
    let nodes = s.node_set();
    if s.kind() == SectionKind::HeadToHead {
        return Ok(nodes.iter().all(|n| !g.descendants(n).intersects(z)));
    }
    if !nodes.intersects(z) {
        return Ok(false);
    }
    for u in s.tail_terminals() {
        if slides_to(g, u)?.iter().all(|sl| sl.meets(z, rule)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every trail from `x` to `y`, in depth-first order with neighbours visited
/// lines first, then children, then parents, each ascending.
pub fn enumerate_trails(g: &HybridGraph, x: usize, y: usize) -> Result<Vec<Trail>> {
    if x == y {
        return Err(Error::NodesNotDistinct);
    }
    if x >= g.n() || y >= g.n() {
        return Err(Error::UnknownNode(format!("#{}", x.max(y))));
    }
    let mut walk = TrailWalk {
        g,
        target: y,
        used: vec![false; g.n() * g.n()],
        nodes: vec![x],
        steps: Vec::new(),
        out: Vec::new(),
    };
    walk.extend(NodeSet::singleton(x));
    Ok(walk.out)
}

struct TrailWalk<'g> {
    g: &'g HybridGraph,
    target: usize,
    used: Vec<bool>,
    nodes: Vec<usize>,
    steps: Vec<Step>,
    out: Vec<Trail>,
}

impl TrailWalk<'_> {
    fn extend(&mut self, section: NodeSet) {
        let g = self.g;
        let cur = *self.nodes.last().unwrap();
        if cur == self.target {
            self.out.push(Trail {
                nodes: self.nodes.clone(),
                steps: self.steps.clone(),
            });
        }
        for v in g.siblings(cur) - section {
            self.push(v, Step::Line);
            self.extend(section.with(v));
            self.pop();
        }
        for (step, next) in [
            (Step::Forward, g.children(cur)),
            (Step::Backward, g.parents(cur)),
        ] {
            for v in next {
                let id = pair_id(g.n(), cur, v);
                if self.used[id] {
                    continue;
                }
                self.used[id] = true;
                self.push(v, step);
                self.extend(NodeSet::singleton(v));
                self.pop();
                self.used[id] = false;
            }
        }
    }

    fn push(&mut self, v: usize, step: Step) {
        self.nodes.push(v);
        self.steps.push(step);
    }

    fn pop(&mut self) {
        self.nodes.pop();
        self.steps.pop();
    }
}

/// Every trail from a node of X to a node of Y is blocked by Z.
pub fn c_represented(g: &HybridGraph, t: &Triplet) -> Result<bool> {
    c_represented_with(g, t, SlideRule::default())
}

pub fn c_represented_with(g: &HybridGraph, t: &Triplet, rule: SlideRule) -> Result<bool> {
    g.require_chain_graph()?;
    t.check_universe(g.n())?;
    Ok(active_trail_unchecked(g, t, rule).is_none())
}

/// A trail from X to Y that is active with respect to Z, if one exists.
pub fn active_trail(g: &HybridGraph, t: &Triplet, rule: SlideRule) -> Result<Option<Trail>> {
    g.require_chain_graph()?;
    t.check_universe(g.n())?;
    Ok(active_trail_unchecked(g, t, rule)
        .map(|nodes| Trail::from_nodes(g, nodes).expect("search produces valid trails")))
}

pub(crate) fn c_represented_unchecked(g: &HybridGraph, t: &Triplet, rule: SlideRule) -> bool {
    active_trail_unchecked(g, t, rule).is_none()
}

fn active_trail_unchecked(g: &HybridGraph, t: &Triplet, rule: SlideRule) -> Option<Vec<usize>> {
    let mut search = ActiveSearch {
        g,
        z: t.z(),
        targets: t.y(),
        has_desc_in_z: g.ancestral_set(t.z()),
        rule,
        slide_ok: vec![SlideState::Unknown; g.n()],
        used: vec![false; g.n() * g.n()],
        nodes: Vec::new(),
    };
    for x in t.x() {
        search.nodes.clear();
        search.nodes.push(x);
        if search.extend(x, Delimiter::TrailEnd, NodeSet::singleton(x)) {
            return Some(search.nodes);
        }
    }
    None
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SlideState {
    Unknown,
    AllMeetZ,
    SomeAvoidZ,
}

struct ActiveSearch<'g> {
    g: &'g HybridGraph,
    z: NodeSet,
    targets: NodeSet,
    /// nodes with a descendant in Z, i.e. the ancestral set of Z
    has_desc_in_z: NodeSet,
    rule: SlideRule,
    slide_ok: Vec<SlideState>,
    used: Vec<bool>,
    nodes: Vec<usize>,
}

impl ActiveSearch<'_> {
    /// Extends the trail held in `self.nodes`, whose open section started at
    /// `first` with delimiter `left` and holds `section`. Returns true (with
    /// the trail left in `self.nodes`) once an active trail reaches Y.
    fn extend(&mut self, first: usize, left: Delimiter, section: NodeSet) -> bool {
        let g = self.g;
        let cur = *self.nodes.last().unwrap();
        if self.targets.contains(cur)
            && !self.blocked(first, left, cur, Delimiter::TrailEnd, section)
        {
            return true;
        }
        for v in g.siblings(cur) - section {
            self.nodes.push(v);
            if self.extend(first, left, section.with(v)) {
                return true;
            }
            self.nodes.pop();
        }
        for (right, next_left, next) in [
            (Delimiter::Outgoing, Delimiter::Incoming, g.children(cur)),
            (Delimiter::Incoming, Delimiter::Outgoing, g.parents(cur)),
        ] {
            if next.is_empty() || self.blocked(first, left, cur, right, section) {
                continue;
            }
            for v in next {
                let id = pair_id(g.n(), cur, v);
                if self.used[id] {
                    continue;
                }
                self.used[id] = true;
                self.nodes.push(v);
                if self.extend(v, next_left, NodeSet::singleton(v)) {
                    return true;
                }
                self.nodes.pop();
                self.used[id] = false;
            }
        }
        false
    }

    fn blocked(
        &mut self,
        first: usize,
        left: Delimiter,
        last: usize,
        right: Delimiter,
        section: NodeSet,
    ) -> bool {
        if left == Delimiter::Incoming && right == Delimiter::Incoming {
            return !section.intersects(self.has_desc_in_z);
        }
        section.intersects(self.z)
            && ((left != Delimiter::Incoming && self.all_slides_meet_z(first))
                || (right != Delimiter::Incoming && self.all_slides_meet_z(last)))
    }

    fn all_slides_meet_z(&mut self, u: usize) -> bool {
        match self.slide_ok[u] {
            SlideState::AllMeetZ => return true,
            SlideState::SomeAvoidZ => return false,
            SlideState::Unknown => {}
        }
        let ok = match self.rule {
            SlideRule::AllNodes if self.z.contains(u) => true,
            _ => !self.slide_avoids_z(u, NodeSet::singleton(u)),
        };
        self.slide_ok[u] = if ok {
            SlideState::AllMeetZ
        } else {
            SlideState::SomeAvoidZ
        };
        ok
    }

    // Is there a slide to the path's origin through `end` whose nodes,
    // other than the origin, all avoid Z?
    fn slide_avoids_z(&self, end: usize, on_path: NodeSet) -> bool {
        let g = self.g;
        if !(g.parents(end) - self.z).is_empty() {
            return true;
        }
        for c in (g.siblings(end) - on_path) - self.z {
            if self.slide_avoids_z(c, on_path.with(c)) {
                return true;
            }
        }
        false
    }
}
