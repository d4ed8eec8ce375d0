//! urRDF enumeration on connected split graphs through 2-packings.
//!
//! A 2-packing meeting the clique is a single clique vertex, since every
//! vertex is within distance 2 of it. The remaining packings live in the
//! independent side and are found by in/out branching on independent
//! vertices of highest residual degree. Every node has a leaf below it and
//! every leaf is a distinct packing, so the delay is polynomial.

use super::{collect_traced, rdf_from_v2, Enumeration, Enumerator, StepCounter};
use crate::error::{Error, Result};
use crate::graph::{Graph, SplitPartition, Vertex};
use crate::roman::RomanFunction;

struct Frame {
    alive: Vec<bool>,
    packing: Vec<Vertex>,
}

pub struct SplitUrrdfEnumerator<'g> {
    graph: &'g Graph,
    clique: Vec<Vertex>,
    in_clique: Vec<bool>,
    next_clique: usize,
    stack: Vec<Frame>,
    counter: StepCounter,
}

impl<'g> SplitUrrdfEnumerator<'g> {
    pub fn new(graph: &'g Graph, partition: &SplitPartition) -> Result<Self> {
        partition.validate(graph)?;
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut in_clique = vec![false; graph.order()];
        for &c in &partition.clique {
            in_clique[c] = true;
        }
        let mut root = Frame {
            alive: vec![true; graph.order()],
            packing: Vec::new(),
        };
        prune_clique(graph, &in_clique, &mut root.alive);
        Ok(SplitUrrdfEnumerator {
            graph,
            clique: partition.clique.clone(),
            in_clique,
            next_clique: 0,
            stack: vec![root],
            counter: StepCounter::default(),
        })
    }
}

/// Drops clique vertices without a live independent neighbor.
fn prune_clique(g: &Graph, in_clique: &[bool], alive: &mut [bool]) {
    for c in g.vertices() {
        if in_clique[c]
            && alive[c]
            && !g.neighbors(c).iter().any(|&u| !in_clique[u] && alive[u])
        {
            alive[c] = false;
        }
    }
}

impl Iterator for SplitUrrdfEnumerator<'_> {
    type Item = RomanFunction;

    fn next(&mut self) -> Option<RomanFunction> {
        let g = self.graph;
        if let Some(&c) = self.clique.get(self.next_clique) {
            if !self.counter.tick() {
                return None;
            }
            self.next_clique += 1;
            return Some(rdf_from_v2(g, &[c]));
        }
        while let Some(Frame { alive, packing }) = self.stack.pop() {
            if !self.counter.tick() {
                self.stack.clear();
                return None;
            }
            let pick = g
                .vertices()
                .filter(|&v| !self.in_clique[v] && alive[v])
                .map(|v| {
                    let degree = g.neighbors(v).iter().filter(|&&u| alive[u]).count();
                    (degree, std::cmp::Reverse(v))
                })
                .max();
            let Some((_, std::cmp::Reverse(v))) = pick else {
                return Some(rdf_from_v2(g, &packing));
            };

            let mut out = alive.clone();
            out[v] = false;
            prune_clique(g, &self.in_clique, &mut out);

            let mut taken = alive;
            taken[v] = false;
            for &u in g.neighbors(v) {
                taken[u] = false;
                for &w in g.neighbors(u) {
                    if !self.in_clique[w] {
                        taken[w] = false;
                    }
                }
            }
            prune_clique(g, &self.in_clique, &mut taken);
            let mut with_v = packing.clone();
            with_v.push(v);

            self.stack.push(Frame { alive: out, packing });
            self.stack.push(Frame {
                alive: taken,
                packing: with_v,
            });
        }
        None
    }
}

impl Enumerator for SplitUrrdfEnumerator<'_> {
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

/// All urRDFs of a connected split graph, clique singletons first.
pub fn enumerate_urrdf_split(g: &Graph, partition: &SplitPartition) -> Result<Enumeration> {
    Ok(collect_traced(SplitUrrdfEnumerator::new(g, partition)?))
}
