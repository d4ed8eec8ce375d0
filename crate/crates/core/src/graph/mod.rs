//! Simple undirected graphs on dense vertex indices `0..n`.

mod classes;
pub mod families;
mod io;

pub use classes::{
    is_bipartite, recognize_cobipartite, recognize_split, CobipartitePartition, SplitPartition,
};
pub use families::{generate_family, Family};
pub use io::{parse_graph, to_edge_list};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple undirected graph stored as sorted adjacency lists.
///
/// Immutable after construction; every constructor enforces symmetric,
/// sorted, duplicate-free neighbor lists without self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Open neighborhood, sorted.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N(v)` or `N[v]` as a sorted vertex list.
    pub fn neighborhood(&self, v: Vertex, closed: bool) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        let mut out = self.adj[v].clone();
        if closed {
            let pos = out.partition_point(|&u| u < v);
            out.insert(pos, v);
        }
        Ok(out)
    }

    /// Closed neighborhood of a vertex set, as a membership mask.
    pub fn closed_neighborhood_mask(&self, set: &[Vertex]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        for &v in set {
            mask[v] = true;
            for &u in &self.adj[v] {
                mask[u] = true;
            }
        }
        mask
    }

    /// `P_{G,A}(v) = N[v] \ N[A \ {v}]`.
    pub fn private_neighborhood(&self, set: &[Vertex], v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        for &a in set {
            self.check_vertex(a)?;
        }
        if !set.contains(&v) {
            return Err(Error::Precondition(format!(
                "vertex {v} is not a member of the set"
            )));
        }
        let others: Vec<Vertex> = set.iter().copied().filter(|&a| a != v).collect();
        let covered = self.closed_neighborhood_mask(&others);
        Ok(self
            .neighborhood(v, true)?
            .into_iter()
            .filter(|&u| !covered[u])
            .collect())
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        self.vertices().find(|&v| self.adj[v].is_empty())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| u != v && !self.adjacent(u, v))
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// True iff every pair of distinct members is adjacent.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| u == v || self.adjacent(u, v))
        })
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adjacent(u, v)))
    }

    /// Re-checks the structural invariants. Only fails for graphs built by
    /// hand through unsafe paths; exposed for tests.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        for (v, list) in self.adj.iter().enumerate() {
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Precondition(format!(
                        "neighbors of {v} not strictly sorted"
                    )));
                }
            }
            for &u in list {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, order: n });
                }
                if u == v {
                    return Err(Error::SelfLoop(v));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(Error::Precondition(format!(
                        "edge {v}-{u} is not symmetric"
                    )));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }
}

/// Builds a membership mask of length `n` for a vertex list.
pub(crate) fn mask_of(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in set {
        mask[v] = true;
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn neighborhoods() {
        let g = p3();
        assert_eq!(g.neighborhood(1, false).unwrap(), vec![0, 2]);
        assert_eq!(g.neighborhood(0, true).unwrap(), vec![0, 1]);
        let k1 = Graph::empty(1);
        assert!(k1.neighborhood(0, false).unwrap().is_empty());
        assert!(g.neighborhood(3, false).is_err());
    }

    #[test]
    fn private_neighborhoods() {
        let g = p3();
        assert_eq!(g.private_neighborhood(&[0, 2], 0).unwrap(), vec![0]);
        assert_eq!(g.private_neighborhood(&[1], 1).unwrap(), vec![0, 1, 2]);
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3.private_neighborhood(&[0, 1], 0).unwrap().is_empty());
        assert!(matches!(
            g.private_neighborhood(&[1], 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn construction_rejects_loops_and_collapses_duplicates() {
        assert_eq!(
            Graph::from_edges(2, [(0, 0)]).unwrap_err(),
            Error::SelfLoop(0)
        );
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        g.validate().unwrap();
    }

    #[test]
    fn connectivity_and_complement() {
        assert!(p3().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(0).is_connected());
        let c = p3().complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }
}
