//! Minimal Roman dominating functions via their 2-sets.
//!
//! A minimal RDF is determined by `S = V2`: `V1 = V \ N[S]` and
//! `V0 = N(S) \ S`. Such an `S` is admissible when every `s ∈ S` has a
//! neighbor `u ∉ S` with `N(u) ∩ S = {s}`. Admissible sets are closed under
//! taking subsets, so branching on `v ∈ S / v ∉ S` in index order and
//! pruning inadmissible prefixes leaves a solution below every node.

use super::{collect_traced, Enumeration, Enumerator, StepCounter};
use crate::graph::{Graph, Vertex};
use crate::roman::{bijection_b_unchecked, RomanFunction};

/// The function with `V2 = S`, `V0 = N(S) \ S` and 1 everywhere else.
pub fn rdf_from_v2(g: &Graph, set: &[Vertex]) -> RomanFunction {
    let mut values = vec![1u8; g.order()];
    for &s in set {
        for &u in g.neighbors(s) {
            values[u] = 0;
        }
    }
    for &s in set {
        values[s] = 2;
    }
    RomanFunction::from_raw(values)
}

/// Whether `s ∈ set` keeps an external private neighbor.
fn has_witness(g: &Graph, in_set: &[bool], s: Vertex) -> bool {
    g.neighbors(s).iter().any(|&u| {
        !in_set[u] && g.neighbors(u).iter().all(|&w| w == s || !in_set[w])
    })
}

/// Adding `v` can only break `v` itself and members within distance 2.
fn admissible_after_adding(g: &Graph, in_set: &[bool], v: Vertex) -> bool {
    if !has_witness(g, in_set, v) {
        return false;
    }
    g.neighbors(v).iter().all(|&u| {
        (!in_set[u] || has_witness(g, in_set, u))
            && g.neighbors(u)
                .iter()
                .all(|&w| w == v || !in_set[w] || has_witness(g, in_set, w))
    })
}

struct Node {
    depth: usize,
    in_set: Vec<bool>,
}

pub struct MinimalRdfEnumerator<'g> {
    graph: &'g Graph,
    stack: Vec<Node>,
    counter: StepCounter,
}

impl<'g> MinimalRdfEnumerator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        MinimalRdfEnumerator {
            graph,
            stack: vec![Node {
                depth: 0,
                in_set: vec![false; graph.order()],
            }],
            counter: StepCounter::default(),
        }
    }
}

impl Iterator for MinimalRdfEnumerator<'_> {
    type Item = RomanFunction;

    fn next(&mut self) -> Option<RomanFunction> {
        let g = self.graph;
        while let Some(Node { depth, in_set }) = self.stack.pop() {
            if !self.counter.tick() {
                self.stack.clear();
                return None;
            }
            if depth == g.order() {
                let set: Vec<Vertex> = g.vertices().filter(|&v| in_set[v]).collect();
                return Some(rdf_from_v2(g, &set));
            }
            let mut with_v = in_set.clone();
            with_v[depth] = true;
            if admissible_after_adding(g, &with_v, depth) {
                self.stack.push(Node {
                    depth: depth + 1,
                    in_set: with_v,
                });
            }
            self.stack.push(Node {
                depth: depth + 1,
                in_set,
            });
        }
        None
    }
}

impl Enumerator for MinimalRdfEnumerator<'_> {
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

/// Images of the minimal RDFs under the bijection onto minimal pRDFs.
pub struct MinimalPrdfEnumerator<'g> {
    inner: MinimalRdfEnumerator<'g>,
}

impl<'g> MinimalPrdfEnumerator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        MinimalPrdfEnumerator {
            inner: MinimalRdfEnumerator::new(graph),
        }
    }
}

impl Iterator for MinimalPrdfEnumerator<'_> {
    type Item = RomanFunction;

    fn next(&mut self) -> Option<RomanFunction> {
        let f = self.inner.next()?;
        Some(bijection_b_unchecked(self.inner.graph, &f))
    }
}

impl Enumerator for MinimalPrdfEnumerator<'_> {
    fn steps(&self) -> u64 {
        self.inner.steps()
    }

    fn set_step_budget(&mut self, budget: Option<u64>) {
        self.inner.set_step_budget(budget);
    }

    fn budget_exhausted(&self) -> bool {
        self.inner.budget_exhausted()
    }
}

pub fn enumerate_minimal_rdf(g: &Graph) -> Enumeration {
    collect_traced(MinimalRdfEnumerator::new(g))
}

pub fn enumerate_minimal_prdf(g: &Graph) -> Enumeration {
    collect_traced(MinimalPrdfEnumerator::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, matching, path, remark_graph};
    use crate::oracle::brute_enumerate;
    use crate::roman::Property;
    use std::collections::BTreeSet;

    fn as_set(fs: &[RomanFunction]) -> BTreeSet<RomanFunction> {
        fs.iter().cloned().collect()
    }

    #[test]
    fn rdf_from_v2_examples() {
        let p3 = path(3);
        assert_eq!(rdf_from_v2(&p3, &[1]).to_string(), "020");
        assert_eq!(rdf_from_v2(&p3, &[]).to_string(), "111");
        assert_eq!(rdf_from_v2(&p3, &[0]).to_string(), "201");
    }

    #[test]
    fn small_graphs_match_oracle() {
        for g in [path(3), path(5), complete(3), remark_graph()] {
            let rdf = enumerate_minimal_rdf(&g).solutions;
            assert_eq!(as_set(&rdf), as_set(&brute_enumerate(&g, Property::MinimalRdf).unwrap()));
            assert_eq!(as_set(&rdf).len(), rdf.len());
            let prdf = enumerate_minimal_prdf(&g).solutions;
            assert_eq!(
                as_set(&prdf),
                as_set(&brute_enumerate(&g, Property::MinimalPrdf).unwrap())
            );
        }
        assert_eq!(enumerate_minimal_rdf(&complete(3)).solutions.len(), 4);
    }

    #[test]
    fn empty_graph_has_one_solution() {
        let e = enumerate_minimal_rdf(&Graph::empty(0));
        assert_eq!(e.solutions, vec![RomanFunction::default()]);
    }

    #[test]
    fn remark_graph_contains_the_image_of_the_minimum() {
        let e = enumerate_minimal_prdf(&remark_graph());
        let image: RomanFunction = "00211200".parse().unwrap();
        assert!(e.solutions.contains(&image));
        assert_eq!(e.solutions.iter().map(|f| f.weight()).min(), Some(5));
    }

    #[test]
    fn matching_products() {
        for t in 1..=4 {
            assert_eq!(
                enumerate_minimal_prdf(&matching(t)).solutions.len(),
                3usize.pow(t as u32)
            );
        }
    }
}
