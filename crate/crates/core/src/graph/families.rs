//! Named instance families and seeded random corpora.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Clique `c_1..c_t` plus independent `v_1..v_2t`, `c_i ~ v_{2i-1}, v_{2i}`.
    SplitFamily,
    /// `t` disjoint edges.
    Matching,
    /// Two disjoint copies of `K_t` (the complement of `K_{t,t}`).
    CocompleteBipartite,
    /// The fixed 8-vertex graph where a minimum RDF does not map to a
    /// minimum perfect RDF.
    RemarkGraph,
    Path,
    Cycle,
    /// `K_{1,t}`: center 0 and leaves `1..=t`.
    Star,
    Complete,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::SplitFamily,
        Family::Matching,
        Family::CocompleteBipartite,
        Family::RemarkGraph,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SplitFamily => "split-family",
            Family::Matching => "matching",
            Family::CocompleteBipartite => "cocomplete-bipartite",
            Family::RemarkGraph => "remark-graph",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Builds a member of a named family. `t` is ignored for `remark-graph`.
pub fn generate_family(family: Family, t: usize) -> Result<Graph> {
    let need = |min: usize| {
        if t < min {
            Err(Error::Precondition(format!(
                "{family} needs a size parameter of at least {min}"
            )))
        } else {
            Ok(())
        }
    };
    match family {
        Family::SplitFamily => {
            need(1)?;
            Ok(split_family(t))
        }
        Family::Matching => Ok(matching(t)),
        Family::CocompleteBipartite => Ok(cocomplete_bipartite(t)),
        Family::RemarkGraph => Ok(remark_graph()),
        Family::Path => Ok(path(t)),
        Family::Cycle => {
            need(3)?;
            Ok(cycle(t))
        }
        Family::Star => Ok(star(t)),
        Family::Complete => Ok(complete(t)),
    }
}

pub fn split_family(t: usize) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..t)
        .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
        .collect();
    for i in 0..t {
        edges.push((i, t + 2 * i));
        edges.push((i, t + 2 * i + 1));
    }
    Graph::from_edges(3 * t, edges).expect("valid construction")
}

pub fn matching(t: usize) -> Graph {
    Graph::from_edges(2 * t, (0..t).map(|i| (2 * i, 2 * i + 1))).expect("valid construction")
}

pub fn cocomplete_bipartite(t: usize) -> Graph {
    let mut edges = Vec::new();
    for side in 0..2 {
        let base = side * t;
        for i in 0..t {
            for j in i + 1..t {
                edges.push((base + i, base + j));
            }
        }
    }
    Graph::from_edges(2 * t, edges).expect("valid construction")
}

/// `v_1..v_8` mapped to `0..7`.
pub fn remark_graph() -> Graph {
    let edges = [
        (1, 3),
        (2, 3),
        (4, 3),
        (5, 3),
        (4, 6),
        (5, 6),
        (7, 6),
        (8, 6),
    ];
    Graph::from_edges(8, edges.iter().map(|&(u, v)| (u - 1, v - 1))).expect("valid construction")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid construction")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid construction")
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid construction")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        .expect("valid construction")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid construction")
}

/// Random graph without isolated vertices: every isolated vertex of a
/// `G(n, p)` sample is joined to a random other vertex. Needs `n >= 2`.
pub fn random_isolate_free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 2);
    let g = random_graph(n, p, rng);
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for v in 0..n {
        if g.degree(v) == 0 {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            edges.push((v, u));
        }
    }
    Graph::from_edges(n, edges).expect("valid construction")
}

/// Random connected split graph on `n >= 1` vertices: a clique of random
/// size, each independent vertex attached to a random non-empty clique
/// subset. Vertex labels are shuffled.
pub fn random_connected_split<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    let clique_size = rng.gen_range(1..=n);
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..clique_size {
        for j in i + 1..clique_size {
            edges.push((labels[i], labels[j]));
        }
    }
    for &v in &labels[clique_size..] {
        let mut attached = false;
        for &c in &labels[..clique_size] {
            if rng.gen_bool(0.4) {
                edges.push((v, c));
                attached = true;
            }
        }
        if !attached {
            edges.push((v, labels[rng.gen_range(0..clique_size)]));
        }
    }
    Graph::from_edges(n, edges).expect("valid construction")
}

/// Random cobipartite graph: two cliques of random sizes with random edges
/// between them. Vertex labels are shuffled.
pub fn random_cobipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let split = rng.gen_range(0..=n);
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let same_side = (i < split) == (j < split);
            if same_side || rng.gen_bool(p) {
                edges.push((labels[i], labels[j]));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid construction")
}

fn vertex_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled graph on `n` vertices (2^(n choose 2) of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = vertex_pairs(n);
    assert!(pairs.len() < 32, "too many labeled graphs");
    (0u32..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("valid construction")
    })
}

/// One representative per isomorphism class of graphs on `n <= 9`
/// vertices, built by vertex extension and canonical-form deduplication.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "isomorphism classes only supported up to 9 vertices");
    let mut classes = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for base in &classes {
            let base_edges: Vec<_> = base.edges().collect();
            for subset in 0u32..1 << (k - 1) {
                let edges = base_edges.iter().copied().chain(
                    (0..k - 1)
                        .filter(|&u| subset >> u & 1 == 1)
                        .map(|u| (u, k - 1)),
                );
                let g = Graph::from_edges(k, edges).expect("valid construction");
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        classes = next;
    }
    classes
}

/// Lexicographically smallest upper-triangle adjacency code over all vertex
/// orderings consistent with non-increasing degree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n * n.saturating_sub(1) / 2 <= 64);
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    for v in by_degree {
        match blocks.last_mut() {
            Some(b) if g.degree(b[0]) == g.degree(v) => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    permute_blocks(g, &blocks, 0, &mut vec![false; n], &mut order, &mut best);
    best
}

fn permute_blocks(
    g: &Graph,
    blocks: &[Vec<Vertex>],
    block: usize,
    used: &mut Vec<bool>,
    order: &mut Vec<Vertex>,
    best: &mut u64,
) {
    if block == blocks.len() {
        let n = order.len();
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | g.adjacent(order[i], order[j]) as u64;
            }
        }
        *best = (*best).min(code);
        return;
    }
    let members = &blocks[block];
    let placed_here = order.len() - blocks[..block].iter().map(Vec::len).sum::<usize>();
    if placed_here == members.len() {
        permute_blocks(g, blocks, block + 1, used, order, best);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            order.push(v);
            permute_blocks(g, blocks, block, used, order, best);
            order.pop();
            used[v] = false;
        }
    }
}
