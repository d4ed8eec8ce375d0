use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A partition of `V` into a clique and an independent set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

impl SplitPartition {
    pub fn new(mut clique: Vec<Vertex>, mut independent: Vec<Vertex>) -> Self {
        clique.sort_unstable();
        independent.sort_unstable();
        SplitPartition {
            clique,
            independent,
        }
    }

    /// Checks that the sets partition `V`, the clique side is complete and
    /// the independent side is edgeless. Maximality is not required here.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_cover(g, &self.clique, &self.independent)?;
        if !g.is_clique(&self.clique) {
            return Err(Error::InvalidPartition("clique side is not a clique".into()));
        }
        if !g.is_independent(&self.independent) {
            return Err(Error::InvalidPartition(
                "independent side contains an edge".into(),
            ));
        }
        Ok(())
    }

    /// No independent vertex is adjacent to the whole clique.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        self.independent
            .iter()
            .all(|&v| !self.clique.iter().all(|&c| g.adjacent(v, c)))
    }

    /// Moves independent vertices adjacent to all of the clique into it,
    /// smallest index first, until the clique is inclusion-wise maximal.
    pub fn normalize(mut self, g: &Graph) -> Self {
        while let Some(pos) = self
            .independent
            .iter()
            .position(|&v| self.clique.iter().all(|&c| g.adjacent(v, c)))
        {
            let v = self.independent.remove(pos);
            let at = self.clique.partition_point(|&c| c < v);
            self.clique.insert(at, v);
        }
        self
    }
}

/// A partition of `V` into two cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobipartitePartition {
    pub clique_a: Vec<Vertex>,
    pub clique_b: Vec<Vertex>,
}

impl CobipartitePartition {
    pub fn new(mut clique_a: Vec<Vertex>, mut clique_b: Vec<Vertex>) -> Self {
        clique_a.sort_unstable();
        clique_b.sort_unstable();
        CobipartitePartition { clique_a, clique_b }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_cover(g, &self.clique_a, &self.clique_b)?;
        if !g.is_clique(&self.clique_a) || !g.is_clique(&self.clique_b) {
            return Err(Error::InvalidPartition("a side is not a clique".into()));
        }
        Ok(())
    }
}

fn check_cover(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<()> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in a.iter().chain(b) {
        if v >= n {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} out of range"
            )));
        }
        if seen[v] {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} appears twice"
            )));
        }
        seen[v] = true;
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
    }
    Ok(())
}

/// Recognizes split graphs through the degree-sequence characterization and
/// returns a partition whose clique is inclusion-wise maximal.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

    // m = max { i : d_i >= i - 1 } with 1-based i
    let m = (1..=n).filter(|&i| degrees[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let partition = SplitPartition::new(order[..m].to_vec(), order[m..].to_vec());
    debug_assert!(partition.validate(g).is_ok());
    Some(partition.normalize(g))
}

/// Two-colors the graph; returns per-vertex sides (`false` for the side of
/// the smallest vertex of each component) or `None` on an odd cycle.
pub fn is_bipartite(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// Recognizes cobipartite graphs by two-coloring the complement.
pub fn recognize_cobipartite(g: &Graph) -> Option<CobipartitePartition> {
    let sides = is_bipartite(&g.complement())?;
    let (a, b): (Vec<Vertex>, Vec<Vertex>) = g.vertices().partition(|&v| !sides[v]);
    let p = CobipartitePartition::new(a, b);
    debug_assert!(p.validate(g).is_ok());
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle, star};

    /// Exhaustive: does some 2-coloring give a clique / independent split?
    fn brute_is_split(g: &Graph) -> bool {
        let n = g.order();
        (0u32..1 << n).any(|mask| {
            let c: Vec<_> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let i: Vec<_> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            g.is_clique(&c) && g.is_independent(&i)
        })
    }

    #[test]
    fn star_is_split_with_maximal_clique() {
        let g = star(3);
        let p = recognize_split(&g).unwrap();
        p.validate(&g).unwrap();
        assert!(p.is_maximal(&g));
        assert!(p.clique.contains(&0));
        // center plus the smallest leaf after normalization
        assert_eq!(p.clique, vec![0, 1]);
    }

    #[test]
    fn cycle4_is_not_split() {
        assert!(recognize_split(&cycle(4)).is_none());
        assert!(!brute_is_split(&cycle(4)));
    }

    #[test]
    fn triangle_is_all_clique() {
        let p = recognize_split(&complete(3)).unwrap();
        assert_eq!(p.clique, vec![0, 1, 2]);
        assert!(p.independent.is_empty());
    }

    #[test]
    fn split_recognition_matches_brute_force() {
        // every labeled graph on up to 6 vertices
        for n in 0..=6 {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                )
                .unwrap();
                let got = recognize_split(&g);
                assert_eq!(got.is_some(), brute_is_split(&g), "{g:?}");
                if let Some(p) = got {
                    p.validate(&g).unwrap();
                    assert!(p.is_maximal(&g));
                }
            }
        }
    }

    #[test]
    fn cobipartite_examples() {
        // K4 minus a perfect matching is C4: complement is 2K2
        let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let p = recognize_cobipartite(&g).unwrap();
        p.validate(&g).unwrap();
        assert_eq!(p.clique_a.len(), 2);
        assert_eq!(p.clique_b.len(), 2);

        assert!(recognize_cobipartite(&cycle(5)).is_none());

        let p = recognize_cobipartite(&Graph::empty(1)).unwrap();
        assert_eq!(p.clique_a, vec![0]);
        assert!(p.clique_b.is_empty());
    }

    #[test]
    fn partition_validation_errors() {
        let g = cycle(4);
        assert!(SplitPartition::new(vec![0, 1], vec![2]).validate(&g).is_err());
        assert!(SplitPartition::new(vec![0, 1], vec![2, 3]).validate(&g).is_err());
        assert!(CobipartitePartition::new(vec![0, 2], vec![1, 3])
            .validate(&g)
            .is_err());
        assert!(CobipartitePartition::new(vec![0, 1], vec![2, 3])
            .validate(&g)
            .is_ok());
    }
}
