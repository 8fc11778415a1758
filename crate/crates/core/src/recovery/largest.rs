// SPDX-License-Identifier: MIT
//! Recovery of the largest chain graph from a pattern.
//!
//! The working state is a hybrid graph whose lines may carry orientation
//! bans. A ban `(u, v)` forbids directing the line as `u <- v`, which lets
//! feasible semislides step from `u` to `v` along it. Bans are added by the
//! transitivity principle until nothing changes; then a single line is
//! directed by the necessity or the doublecycle principle and the bans are
//! brought up to date again.
//!
//! Semislides and pseudocycles are routes, so node repeats are allowed and
//! every search below is plain reachability over the step relation: an arrow
//! `u -> v`, or a line `u -- v` banned as `u <- v`.

use std::collections::VecDeque;
use std::fmt;

use crate::complexes::pattern_unchecked;
use crate::error::{Error, Result};
use crate::graph::{canonical, EdgeKind, HybridGraph};
use crate::nodeset::NodeSet;

/// A pattern whose lines carry orientation bans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedPattern {
    graph: HybridGraph,
    /// `banned[u]` holds every `v` with `u <- v` forbidden
    banned: Vec<NodeSet>,
}

impl AnnotatedPattern {
    pub fn new(graph: HybridGraph) -> Self {
        let banned = vec![NodeSet::EMPTY; graph.n()];
        AnnotatedPattern { graph, banned }
    }

    pub fn graph(&self) -> &HybridGraph {
        &self.graph
    }

    pub fn into_graph(self) -> HybridGraph {
        self.graph
    }

    /// Whether `u <- v` is forbidden.
    pub fn is_banned(&self, u: usize, v: usize) -> bool {
        self.banned[u].contains(v)
    }

    /// Every ban `(u, v)` in ascending order.
    pub fn bans(&self) -> Vec<(usize, usize)> {
        (0..self.graph.n())
            .flat_map(|u| self.banned[u].iter().map(move |v| (u, v)))
            .collect()
    }

    pub fn ban_count(&self) -> usize {
        self.banned.iter().map(|s| s.len()).sum()
    }

    /// Forbids `u <- v` on the line `u -- v`.
    pub fn ban(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.graph.n() || v >= self.graph.n() || !self.graph.is_line(u, v) {
            return Err(Error::InvalidBan(self.name(u), self.name(v)));
        }
        self.banned[u].insert(v);
        Ok(())
    }

    /// Turns the line `tail -- head` into `tail -> head`, dropping its bans.
    pub fn direct(&mut self, tail: usize, head: usize) -> Result<()> {
        if !self.graph.is_line(tail, head) {
            return Err(Error::InvalidPattern(format!(
                "{} -- {} is not a line",
                self.name(tail),
                self.name(head)
            )));
        }
        if self.is_banned(head, tail) {
            return Err(Error::BannedOrientation {
                head: self.name(head),
                tail: self.name(tail),
            });
        }
        let ((lo, hi), kind) = canonical(tail, head, EdgeKind::ArrowForward);
        self.graph.set_edge(lo, hi, Some(kind));
        self.banned[tail].remove(head);
        Ok(())
    }

    fn name(&self, u: usize) -> String {
        self.graph
            .labels()
            .get(u)
            .cloned()
            .unwrap_or_else(|| format!("#{u}"))
    }

    /// Feasible semislide steps out of `u`.
    fn steps(&self, u: usize) -> NodeSet {
        self.graph.children(u) | self.banned[u]
    }

    /// Nodes with a step into `u`.
    fn steps_into(&self, u: usize) -> NodeSet {
        let mut out = self.graph.parents(u);
        for v in self.graph.siblings(u) {
            if self.banned[v].contains(u) {
                out.insert(v);
            }
        }
        out
    }

    /// Shortest step route from some node of `from` to `to` through
    /// `allowed` (the endpoints included); `to` itself need not be allowed.
    fn step_route(&self, from: NodeSet, to: usize, allowed: NodeSet) -> Option<Vec<usize>> {
        let n = self.graph.n();
        let mut pred = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut seen = NodeSet::EMPTY;
        for s in from & allowed.with(to) {
            seen.insert(s);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut route = vec![u];
                let mut cur = u;
                while pred[cur] != usize::MAX {
                    cur = pred[cur];
                    route.push(cur);
                }
                route.reverse();
                return Some(route);
            }
            for v in self.steps(u) - seen {
                if allowed.contains(v) || v == to {
                    seen.insert(v);
                    pred[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Nodes that reach `to` by zero or more steps through `allowed`.
    fn reaching(&self, to: usize, allowed: NodeSet) -> NodeSet {
        let mut reached = NodeSet::singleton(to);
        let mut frontier = reached;
        while let Some(u) = frontier.first() {
            frontier.remove(u);
            let new = (self.steps_into(u) & allowed) - reached;
            reached |= new;
            frontier |= new;
        }
        reached
    }

    /// Nodes reached from `from` by zero or more steps.
    fn reachable(&self, from: NodeSet) -> NodeSet {
        let mut reached = from;
        let mut frontier = from;
        while let Some(u) = frontier.first() {
            frontier.remove(u);
            let new = self.steps(u) - reached;
            reached |= new;
            frontier |= new;
        }
        reached
    }
}

/// A feasible semislide ending at `target` none of whose other nodes is
/// `excluded` or adjacent to it. `target -- excluded` must be a line.
pub fn feasible_semislide(
    a: &AnnotatedPattern,
    target: usize,
    excluded: usize,
) -> Result<Option<Vec<usize>>> {
    let g = a.graph();
    if target >= g.n() || excluded >= g.n() {
        return Err(Error::UnknownNode(format!("#{}", target.max(excluded))));
    }
    if target == excluded {
        return Err(Error::NodesNotDistinct);
    }
    if !g.is_line(target, excluded) {
        return Err(Error::HypothesisViolated(format!(
            "{} -- {} must be a line",
            g.label(target),
            g.label(excluded)
        )));
    }
    Ok(semislide_route(a, target, excluded))
}

pub fn feasible_semislide_exists(
    a: &AnnotatedPattern,
    target: usize,
    excluded: usize,
) -> Result<bool> {
    Ok(feasible_semislide(a, target, excluded)?.is_some())
}

fn semislide_route(a: &AnnotatedPattern, target: usize, excluded: usize) -> Option<Vec<usize>> {
    let g = a.graph();
    let allowed = g.nodes() - g.neighbors(excluded) - NodeSet::singleton(excluded);
    let reach = a.reaching(target, allowed);
    // first node: an allowed node with an arrow into `reach`
    let first = allowed.iter().find(|&w| g.children(w).intersects(reach))?;
    let second = (g.children(first) & reach).first()?;
    let mut route = vec![first];
    route.extend(a.step_route(NodeSet::singleton(second), target, allowed)?);
    Some(route)
}

/// Which principle produced a trace event.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Transitivity,
    Necessity,
    Doublecycle,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Transitivity => "transitivity",
            Rule::Necessity => "necessity",
            Rule::Doublecycle => "doublecycle",
        })
    }
}

/// A line directed as `tail -> head`, with the routes justifying it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directing {
    pub tail: usize,
    pub head: usize,
    pub rule: Rule,
    pub witness: Vec<Vec<usize>>,
}

/// One step of a recovery run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// `u <- v` forbidden on the line `u -- v`.
    Ban {
        u: usize,
        v: usize,
        witness: Vec<usize>,
    },
    Direct(Directing),
}

impl TraceEvent {
    pub fn rule(&self) -> Rule {
        match self {
            TraceEvent::Ban { .. } => Rule::Transitivity,
            TraceEvent::Direct(d) => d.rule,
        }
    }

    /// `transitivity ban b <- c via a,b,c`, `necessity direct a -> c via a,b,c,a`
    pub fn display(&self, g: &HybridGraph) -> String {
        let route = |r: &[usize]| r.iter().map(|&u| g.label(u)).collect::<Vec<_>>().join(",");
        match self {
            TraceEvent::Ban { u, v, witness } => format!(
                "transitivity ban {} <- {} via {}",
                g.label(*u),
                g.label(*v),
                route(witness)
            ),
            TraceEvent::Direct(d) => {
                let routes: Vec<String> = d.witness.iter().map(|r| route(r)).collect();
                format!(
                    "{} direct {} -> {} via {}",
                    d.rule,
                    g.label(d.tail),
                    g.label(d.head),
                    routes.join(" / ")
                )
            }
        }
    }
}

/// Adds transitivity bans until none applies; returns them in order.
pub fn transitivity_fixpoint(a: &mut AnnotatedPattern) -> Vec<TraceEvent> {
    let mut events = Vec::new();
    let lines: Vec<(usize, usize)> = a.graph().lines().collect();
    loop {
        let before = events.len();
        for &(p, q) in &lines {
            for (x, y) in [(p, q), (q, p)] {
                if a.is_banned(x, y) || !a.graph().is_line(x, y) {
                    continue;
                }
                if let Some(mut witness) = semislide_route(a, x, y) {
                    a.banned[x].insert(y);
                    witness.push(y);
                    events.push(TraceEvent::Ban {
                        u: x,
                        v: y,
                        witness,
                    });
                }
            }
        }
        if events.len() == before {
            return events;
        }
    }
}

/// Steps only ever follow orientations the largest chain graph keeps, so a
/// step route from `r0 -> r1` back to `r0` would be a directed pseudocycle
/// in it.
fn forced_cycle(a: &AnnotatedPattern, r0: usize, from_r1: NodeSet) -> Result<()> {
    if from_r1.contains(r0) {
        return Err(Error::InvalidPattern(format!(
            "bans force a directed pseudocycle through {}",
            a.graph().label(r0)
        )));
    }
    Ok(())
}

/// A pseudocycle `r0 -> r1 => .. => p -- q => .. => r0` demanding `p <- q`.
pub fn necessity_step(a: &AnnotatedPattern) -> Result<Option<Directing>> {
    let g = a.graph();
    let all = g.nodes();
    for (r0, r1) in g.arrows() {
        let from_r1 = a.reachable(NodeSet::singleton(r1));
        forced_cycle(a, r0, from_r1)?;
        let to_r0 = a.reaching(r0, all);
        for (lo, hi) in g.lines() {
            for (p, q) in [(lo, hi), (hi, lo)] {
                if !from_r1.contains(p) || !to_r0.contains(q) {
                    continue;
                }
                if a.is_banned(p, q) {
                    return Err(Error::BannedOrientation {
                        head: g.label(p).to_string(),
                        tail: g.label(q).to_string(),
                    });
                }
                let mut cycle = vec![r0];
                cycle.extend(
                    a.step_route(NodeSet::singleton(r1), p, all)
                        .expect("p is reachable"),
                );
                cycle.extend(
                    a.step_route(NodeSet::singleton(q), r0, all)
                        .expect("r0 is reachable"),
                );
                return Ok(Some(Directing {
                    tail: q,
                    head: p,
                    rule: Rule::Necessity,
                    witness: vec![cycle],
                }));
            }
        }
    }
    Ok(None)
}

/// A pseudocycle `r0 -> r1 => .. => a -- b -- r0` together with a feasible
/// semislide `s0, .., sm = r1` whose prefix `s0, .., sn` avoids `r0` and its
/// neighbours while `sn` is adjacent to `b`, demanding `a <- b`.
pub fn doublecycle_step(a: &AnnotatedPattern) -> Result<Option<Directing>> {
    let g = a.graph();
    let all = g.nodes();
    for (r0, r1) in g.arrows() {
        let from_r1 = a.reachable(NodeSet::singleton(r1));
        forced_cycle(a, r0, from_r1)?;
        let far = all - g.neighbors(r0) - NodeSet::singleton(r0);
        let to_r1 = a.reaching(r1, all);
        // one or more steps to r1
        let to_r1_plus = all
            .iter()
            .filter(|&u| a.steps(u).intersects(to_r1))
            .collect::<NodeSet>();
        // ends sn (n >= 1) of semislide prefixes lying inside `far`
        let starts = far
            .iter()
            .fold(NodeSet::EMPTY, |acc, s0| acc | (g.children(s0) & far));
        let prefix_ends = reachable_within(a, starts, far);
        for b in g.siblings(r0) {
            let near_b = g.neighbors(b);
            let s_ok = (prefix_ends & near_b).intersects(to_r1_plus)
                || (far & near_b)
                    .iter()
                    .any(|s0| g.children(s0).intersects(to_r1));
            if !s_ok {
                continue;
            }
            let Some(x) = (g.siblings(b) & from_r1).first() else {
                continue;
            };
            if a.is_banned(x, b) {
                return Err(Error::BannedOrientation {
                    head: g.label(x).to_string(),
                    tail: g.label(b).to_string(),
                });
            }
            let mut cycle = vec![r0];
            cycle.extend(
                a.step_route(NodeSet::singleton(r1), x, all)
                    .expect("x is reachable"),
            );
            cycle.push(b);
            cycle.push(r0);
            let slide = doublecycle_slide(a, r1, b, far, prefix_ends, to_r1_plus, to_r1);
            return Ok(Some(Directing {
                tail: b,
                head: x,
                rule: Rule::Doublecycle,
                witness: vec![cycle, slide],
            }));
        }
    }
    Ok(None)
}

fn reachable_within(a: &AnnotatedPattern, from: NodeSet, allowed: NodeSet) -> NodeSet {
    let mut reached = from & allowed;
    let mut frontier = reached;
    while let Some(u) = frontier.first() {
        frontier.remove(u);
        let new = (a.steps(u) & allowed) - reached;
        reached |= new;
        frontier |= new;
    }
    reached
}

fn doublecycle_slide(
    a: &AnnotatedPattern,
    r1: usize,
    b: usize,
    far: NodeSet,
    prefix_ends: NodeSet,
    to_r1_plus: NodeSet,
    to_r1: NodeSet,
) -> Vec<usize> {
    let g = a.graph();
    let all = g.nodes();
    let near_b = g.neighbors(b);
    if let Some(s0) = (far & near_b)
        .iter()
        .find(|&s0| g.children(s0).intersects(to_r1))
    {
        let s1 = (g.children(s0) & to_r1).first().unwrap();
        let mut route = vec![s0];
        route.extend(a.step_route(NodeSet::singleton(s1), r1, all).unwrap());
        return route;
    }
    let sn = (prefix_ends & near_b & to_r1_plus).first().unwrap();
    let s0 = far
        .iter()
        .find(|&s0| {
            let starts = g.children(s0) & far;
            a.step_route(starts, sn, far).is_some()
        })
        .unwrap();
    let mut route = vec![s0];
    route.extend(a.step_route(g.children(s0) & far, sn, far).unwrap());
    let next = (a.steps(sn) & to_r1).first().unwrap();
    route.extend(a.step_route(NodeSet::singleton(next), r1, all).unwrap());
    route
}

/// Which directing principle is tried first when both apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RuleOrder {
    #[default]
    NecessityFirst,
    DoublecycleFirst,
}

/// The largest chain graph together with the events that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargestRecovery {
    pub graph: HybridGraph,
    pub trace: Vec<TraceEvent>,
}

/// The largest chain graph of the class whose pattern is `pattern`.
pub fn recover_largest(pattern: &HybridGraph) -> Result<HybridGraph> {
    Ok(recover_largest_with(pattern, RuleOrder::default())?.graph)
}

pub fn recover_largest_with(pattern: &HybridGraph, order: RuleOrder) -> Result<LargestRecovery> {
    let mut a = AnnotatedPattern::new(pattern.clone());
    let mut trace = Vec::new();
    loop {
        trace.extend(transitivity_fixpoint(&mut a));
        let step = match order {
            RuleOrder::NecessityFirst => match necessity_step(&a)? {
                Some(d) => Some(d),
                None => doublecycle_step(&a)?,
            },
            RuleOrder::DoublecycleFirst => match doublecycle_step(&a)? {
                Some(d) => Some(d),
                None => necessity_step(&a)?,
            },
        };
        let Some(d) = step else { break };
        a.direct(d.tail, d.head)?;
        trace.push(TraceEvent::Direct(d));
    }
    let graph = a.into_graph();
    if !graph.is_chain_graph() {
        return Err(Error::InvalidPattern(
            "the result has a directed pseudocycle".into(),
        ));
    }
    if pattern_unchecked(&graph) != *pattern {
        return Err(Error::InvalidPattern(
            "the result has a different pattern".into(),
        ));
    }
    Ok(LargestRecovery { graph, trace })
}
