//! Branch-and-reduce enumeration of all unique response Roman dominating
//! functions on graphs without isolated vertices.
//!
//! A search-tree node is a partition of `V` into five slots: undecided
//! (`A`), excluded from value 2 but otherwise open (`V2bar`), and the three
//! decided values. The measure `|A| + 3/5 · |V2bar|` drops along every
//! branch by at least the amounts below; with these the tree has
//! `O*(sqrt(3)^n)` nodes.
//!
//! | rule | children                                   | drop          |
//! |------|--------------------------------------------|---------------|
//! | BR1  | `v -> 2, N(v) -> 0` / `v -> V2bar`           | `3`, `2/5`    |
//! | BR2  | `v -> 2` / `u -> 2` / `v, u -> 1`            | `2`, `2`, `2` |
//! | BR3  | `v -> 2, N(v) -> 0` / `v -> 1`               | `8/5`, `1`    |
//!
//! Every surviving node has a solution leaf below it (set all remaining
//! open vertices to 1), so the delay between outputs is polynomial.

use std::fmt;

use serde::Serialize;

use super::{collect_traced, Enumeration, Enumerator, StepCounter};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::roman::RomanFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Undecided,
    NotTwo,
    Zero,
    One,
    Two,
}

/// The five-set branching state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialState {
    slots: Vec<Slot>,
}

impl PartialState {
    /// Every vertex undecided.
    pub fn initial(n: usize) -> Self {
        PartialState {
            slots: vec![Slot::Undecided; n],
        }
    }

    pub fn from_slots(slots: Vec<Slot>) -> Self {
        PartialState { slots }
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn count(&self, slot: Slot) -> usize {
        self.slots.iter().filter(|&&s| s == slot).count()
    }

    pub fn measure(&self) -> Measure {
        measure(self)
    }
}

/// Branching measure in exact fifths: `|A| + 3/5 · |V2bar|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Measure {
    fifths: u64,
}

impl Measure {
    pub const fn from_fifths(fifths: u64) -> Self {
        Measure { fifths }
    }

    pub fn fifths(self) -> u64 {
        self.fifths
    }

    pub fn as_f64(self) -> f64 {
        self.fifths as f64 / 5.0
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fifths.is_multiple_of(5) {
            write!(f, "{}", self.fifths / 5)
        } else {
            write!(f, "{}/5", self.fifths)
        }
    }
}

pub fn measure(state: &PartialState) -> Measure {
    Measure::from_fifths(
        5 * state.count(Slot::Undecided) as u64 + 3 * state.count(Slot::NotTwo) as u64,
    )
}

struct Frame {
    slots: Vec<Slot>,
    /// Set when placing a 2 collided with an existing 0 or 2 (RR1).
    dead: bool,
    /// Parent measure and the minimum drop promised by the branching rule.
    #[cfg_attr(not(debug_assertions), allow(dead_code))]
    expected: Option<(Measure, u64)>,
}

/// Streaming enumerator; see the module docs for the rules.
pub struct UrrdfEnumerator<'g> {
    graph: &'g Graph,
    stack: Vec<Frame>,
    counter: StepCounter,
    nodes: u64,
}

impl<'g> UrrdfEnumerator<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if let Some(v) = graph.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(UrrdfEnumerator {
            graph,
            stack: vec![Frame {
                slots: vec![Slot::Undecided; graph.order()],
                dead: false,
                expected: None,
            }],
            counter: StepCounter::default(),
            nodes: 0,
        })
    }

    /// Search-tree nodes visited so far, including pruned ones.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn undecided_neighbors(&self, slots: &[Slot], v: Vertex) -> usize {
        self.graph
            .neighbors(v)
            .iter()
            .filter(|&&u| slots[u] == Slot::Undecided)
            .count()
    }

    /// Applies RR2 then RR3 until neither fires.
    fn reduce(&mut self, slots: &mut [Slot]) -> bool {
        let g = self.graph;
        loop {
            let rr2 = g.vertices().find(|&v| {
                slots[v] == Slot::Undecided
                    && g.neighbors(v)
                        .iter()
                        .all(|&u| !matches!(slots[u], Slot::Undecided | Slot::NotTwo))
            });
            if let Some(v) = rr2 {
                slots[v] = Slot::NotTwo;
                if !self.counter.tick() {
                    return false;
                }
                continue;
            }
            let rr3 = g.vertices().find(|&v| {
                slots[v] == Slot::NotTwo
                    && g.neighbors(v).iter().all(|&u| slots[u] != Slot::Undecided)
            });
            if let Some(v) = rr3 {
                slots[v] = Slot::One;
                if !self.counter.tick() {
                    return false;
                }
                continue;
            }
            return true;
        }
    }

    /// `v -> 2`, `N(v) -> 0`. Returns the child and whether RR1 fires.
    fn place_two(&self, slots: &[Slot], v: Vertex) -> (Vec<Slot>, bool) {
        let mut child = slots.to_vec();
        let mut dead = false;
        for &u in self.graph.neighbors(v) {
            match child[u] {
                Slot::Zero | Slot::Two => dead = true,
                Slot::One => {
                    debug_assert!(false, "a 1-vertex never neighbors an undecided vertex");
                    dead = true;
                }
                Slot::Undecided | Slot::NotTwo => child[u] = Slot::Zero,
            }
        }
        child[v] = Slot::Two;
        (child, dead)
    }

    fn emit(slots: &[Slot]) -> RomanFunction {
        RomanFunction::from_raw(
            slots
                .iter()
                .map(|s| match s {
                    Slot::Zero => 0,
                    Slot::One => 1,
                    Slot::Two => 2,
                    other => unreachable!("open slot {other:?} at a leaf"),
                })
                .collect(),
        )
    }

    /// Pushes children so that the first listed is explored first.
    fn push_children(&mut self, parent: Measure, children: Vec<(Vec<Slot>, bool, u64)>) {
        for (slots, dead, drop) in children.into_iter().rev() {
            self.stack.push(Frame {
                slots,
                dead,
                expected: Some((parent, drop)),
            });
        }
    }

    fn branch(&mut self, slots: Vec<Slot>) {
        let g = self.graph;
        let parent = measure(&PartialState::from_slots(slots.clone()));
        let undecided = |v: Vertex| slots[v] == Slot::Undecided;

        // BR1: an undecided vertex with at least two undecided neighbors.
        if let Some(v) = g
            .vertices()
            .find(|&v| undecided(v) && self.undecided_neighbors(&slots, v) >= 2)
        {
            let (two, dead) = self.place_two(&slots, v);
            let mut out = slots.clone();
            out[v] = Slot::NotTwo;
            self.push_children(parent, vec![(two, dead, 15), (out, false, 2)]);
            return;
        }

        // BR2: two undecided vertices that are each other's only undecided neighbor.
        let pendant = g.vertices().find_map(|v| {
            if !undecided(v) {
                return None;
            }
            let mut open = g.neighbors(v).iter().copied().filter(|&u| undecided(u));
            let u = open.next()?;
            (open.next().is_none() && self.undecided_neighbors(&slots, u) == 1).then_some((v, u))
        });
        if let Some((v, u)) = pendant {
            let (v_two, v_dead) = self.place_two(&slots, v);
            let (u_two, u_dead) = self.place_two(&slots, u);
            let mut ones = slots.clone();
            ones[v] = Slot::One;
            ones[u] = Slot::One;
            self.push_children(
                parent,
                vec![(v_two, v_dead, 10), (u_two, u_dead, 10), (ones, false, 10)],
            );
            return;
        }

        // BR3: an undecided vertex without undecided neighbors.
        let v = g
            .vertices()
            .find(|&v| undecided(v) && self.undecided_neighbors(&slots, v) == 0)
            .expect("some branching rule applies while undecided vertices remain");
        let (two, dead) = self.place_two(&slots, v);
        let mut one = slots;
        one[v] = Slot::One;
        self.push_children(parent, vec![(two, dead, 8), (one, false, 5)]);
    }
}

impl Iterator for UrrdfEnumerator<'_> {
    type Item = RomanFunction;

    fn next(&mut self) -> Option<RomanFunction> {
        while let Some(Frame {
            mut slots,
            dead,
            expected,
        }) = self.stack.pop()
        {
            if !self.counter.tick() {
                self.stack.clear();
                return None;
            }
            self.nodes += 1;
            #[cfg(debug_assertions)]
            if let Some((parent, drop)) = expected {
                let now = measure(&PartialState::from_slots(slots.clone()));
                assert!(
                    parent.fifths() >= now.fifths() + drop,
                    "measure dropped from {parent} to {now}, expected at least {drop}/5"
                );
            }
            #[cfg(not(debug_assertions))]
            let _ = expected;
            if dead {
                continue;
            }
            if !self.reduce(&mut slots) {
                self.stack.clear();
                return None;
            }
            if slots.iter().all(|&s| s != Slot::Undecided) {
                debug_assert!(slots.iter().all(|&s| s != Slot::NotTwo));
                return Some(Self::emit(&slots));
            }
            self.branch(slots);
        }
        None
    }
}

impl Enumerator for UrrdfEnumerator<'_> {
    fn steps(&self) -> u64 {
        self.counter.steps()
    }

    fn set_step_budget(&mut self, budget: Option<u64>) {
        self.counter.set_budget(budget);
    }

    fn budget_exhausted(&self) -> bool {
        self.counter.exhausted()
    }
}

/// All urRDFs of a graph without isolated vertices, with the delay trace.
pub fn enumerate_urrdf(g: &Graph) -> Result<Enumeration> {
    Ok(collect_traced(UrrdfEnumerator::new(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{matching, path, split_family};
    use crate::roman::is_urrdf;
    use std::collections::BTreeSet;

    fn strings(e: &Enumeration) -> BTreeSet<String> {
        e.solutions.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn p2_has_three() {
        let e = enumerate_urrdf(&path(2)).unwrap();
        assert_eq!(
            strings(&e),
            ["20", "02", "11"].iter().map(|s| s.to_string()).collect()
        );
    }

    #[test]
    fn family_counts() {
        for (t, count) in [(1, 4), (2, 11), (3, 30)] {
            assert_eq!(enumerate_urrdf(&split_family(t)).unwrap().solutions.len(), count);
        }
        for t in 1..=3 {
            assert_eq!(
                enumerate_urrdf(&matching(t)).unwrap().solutions.len(),
                3usize.pow(t as u32)
            );
        }
    }

    #[test]
    fn every_output_is_a_urrdf_and_distinct() {
        let g = path(7);
        let e = enumerate_urrdf(&g).unwrap();
        assert!(e.solutions.iter().all(|f| is_urrdf(&g, f).unwrap()));
        assert_eq!(strings(&e).len(), e.solutions.len());
        assert_eq!(e.trace.gaps.len(), e.solutions.len() + 1);
        assert!(e.trace.complete);
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(UrrdfEnumerator::new(&g), Err(Error::IsolatedVertex(2))));
    }

    #[test]
    fn empty_graph_has_the_empty_function() {
        let e = enumerate_urrdf(&Graph::empty(0)).unwrap();
        assert_eq!(e.solutions, vec![RomanFunction::default()]);
    }

    #[test]
    fn measure_examples() {
        assert_eq!(PartialState::initial(3).measure().to_string(), "3");
        assert_eq!(PartialState::from_slots(vec![Slot::Zero, Slot::Two]).measure().fifths(), 0);
        let mut slots = vec![Slot::Undecided; 2];
        slots.extend([Slot::NotTwo; 5]);
        assert_eq!(PartialState::from_slots(slots).measure(), Measure::from_fifths(25));
        assert_eq!(Measure::from_fifths(8).to_string(), "8/5");
    }

    #[test]
    fn step_budget_truncates() {
        let g = matching(6);
        let mut e = UrrdfEnumerator::new(&g).unwrap();
        e.set_step_budget(Some(50));
        let got = collect_traced(e);
        assert!(!got.trace.complete);
        assert!(got.solutions.len() < 729);
    }
}
