//! Hardness gadgets as instance generators, plus brute-force deciders for
//! their source problems.
//!
//! Vertex numbering is fixed: blocks derived from source vertices come
//! first, apparatus vertices last. The `annotation` map records where each
//! block starts.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::roman::RomanFunction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetOutput {
    pub graph: Graph,
    /// Pre-solution, for extension targets.
    pub presolution: Option<RomanFunction>,
    /// Weight budget, for optimization targets.
    pub budget: Option<usize>,
    pub annotation: BTreeMap<String, usize>,
}

fn annotate(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Perfect code of size at most `k` to perfect Roman domination on split
/// graphs with budget `k + |V| + 4`.
///
/// Layout with `n = |V|`, `t = 3n + 4`: `v'` at `v`; copy `v_i` at
/// `n + v·t + (i - 1)`; then `x`, `y`, the `a_i` block and the `b_i` block.
pub fn gadget_perfectdom_to_split_prd(g: &Graph, k: usize) -> Result<GadgetOutput> {
    let n = g.order();
    if k > n {
        return Err(Error::Precondition(format!(
            "budget {k} exceeds the order {n} of the source graph"
        )));
    }
    let t = 3 * n + 4;
    let copy = |v: Vertex, i: usize| n + v * t + i;
    let x = n + n * t;
    let y = x + 1;
    let a = y + 1;
    let b = a + t;
    let order = b + t;

    let mut edges = Vec::new();
    for i in 0..t {
        edges.push((x, a + i));
        edges.push((y, b + i));
    }
    for v in g.vertices() {
        for u in g.neighbors(v).iter().copied().chain([v]) {
            for i in 0..t {
                edges.push((v, copy(u, i)));
            }
        }
    }
    let clique: Vec<Vertex> = (0..n).chain([x, y]).collect();
    for (i, &p) in clique.iter().enumerate() {
        for &q in &clique[i + 1..] {
            edges.push((p, q));
        }
    }
    Ok(GadgetOutput {
        graph: Graph::from_edges(order, edges)?,
        presolution: None,
        budget: Some(k + n + 4),
        annotation: annotate(&[
            ("t", t),
            ("v_prime", 0),
            ("copies", n),
            ("x", x),
            ("y", y),
            ("a", a),
            ("b", b),
        ]),
    })
}

/// Irredundant set of size `k` to extension perfect Roman domination on
/// bipartite graphs.
///
/// Layout with `n = |V|`: `v_i` at `(i - 1)·n + v` for `i` in `1..=k+1`;
/// then `u_1..u_k`, then `a`, `b`, `c`, `d`.
pub fn gadget_irredundant_to_extprd(g: &Graph, k: usize) -> Result<GadgetOutput> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let n = g.order();
    let layer = |i: usize, v: Vertex| (i - 1) * n + v;
    let u = (k + 1) * n;
    let a = u + k;
    let (b, c, d) = (a + 1, a + 2, a + 3);
    let order = d + 1;

    let mut edges = vec![(a, b), (c, d)];
    for i in 1..=k {
        edges.push((a, u + i - 1));
        for v in g.vertices() {
            edges.push((layer(i, v), u + i - 1));
            edges.push((layer(i, v), c));
            for w in g.neighbors(v).iter().copied().chain([v]) {
                edges.push((layer(i, v), layer(k + 1, w)));
            }
        }
    }
    let zeros: Vec<Vertex> = (0..u).chain([b, d]).collect();
    Ok(GadgetOutput {
        graph: Graph::from_edges(order, edges)?,
        presolution: Some(RomanFunction::from_classes(order, &zeros, &[a, c])),
        budget: None,
        annotation: annotate(&[
            ("layers", 0),
            ("u", u),
            ("a", a),
            ("b", b),
            ("c", c),
            ("d", d),
        ]),
    })
}

/// Multicolored dominating set to extension perfect Roman domination with
/// `|V0|` as parameter.
///
/// Layout with `n = |V|` and `k` colour classes: `v_1` at `v`, `v_2` at
/// `n + v`, `x_j` at `2n + j`, then `a`, `b`.
pub fn gadget_multicolored_ds_to_extprd(
    g: &Graph,
    partition: &[Vec<Vertex>],
) -> Result<GadgetOutput> {
    let colour = colour_classes(g, partition)?;
    let n = g.order();
    let k = partition.len();
    let x = 2 * n;
    let a = x + k;
    let b = a + 1;
    let order = b + 1;

    let mut edges = vec![(a, b)];
    for v in g.vertices() {
        edges.push((a, n + v));
        edges.push((v, x + colour[v]));
        for w in g.neighbors(v).iter().copied().chain([v]) {
            edges.push((v, n + w));
        }
    }
    let zeros: Vec<Vertex> = (x..a).chain([b]).collect();
    Ok(GadgetOutput {
        graph: Graph::from_edges(order, edges)?,
        presolution: Some(RomanFunction::from_classes(order, &zeros, &[a])),
        budget: None,
        annotation: annotate(&[("first", 0), ("second", n), ("x", x), ("a", a), ("b", b)]),
    })
}

/// Colour index of every vertex; parts must be non-empty and partition `V`.
fn colour_classes(g: &Graph, partition: &[Vec<Vertex>]) -> Result<Vec<usize>> {
    let mut colour = vec![usize::MAX; g.order()];
    for (j, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidPartition(format!("colour class {j} is empty")));
        }
        for &v in part {
            g.check_vertex(v)
                .map_err(|_| Error::InvalidPartition(format!("vertex {v} out of range")))?;
            if colour[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            colour[v] = j;
        }
    }
    if let Some(v) = colour.iter().position(|&c| c == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
    }
    Ok(colour)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<Vertex>> {
    assert!(n < 32, "subset enumeration limited to fewer than 32 vertices");
    (0u32..1 << n).map(move |bits| (0..n).filter(|&v| bits >> v & 1 == 1).collect())
}

/// Is there `D` with `|D| <= k` and `|N[v] ∩ D| = 1` for every vertex?
pub fn has_perfect_code(g: &Graph, k: usize) -> bool {
    subsets(g.order()).filter(|d| d.len() <= k).any(|d| {
        let mask = crate::graph::mask_of(g.order(), &d);
        g.vertices().all(|v| {
            g.neighbors(v).iter().chain([&v]).filter(|&&u| mask[u]).count() == 1
        })
    })
}

/// Every member keeps a vertex of its closed neighborhood that no other
/// member dominates.
pub fn is_irredundant(g: &Graph, set: &[Vertex]) -> bool {
    set.iter().all(|&w| {
        let others: Vec<Vertex> = set.iter().copied().filter(|&s| s != w).collect();
        let covered = g.closed_neighborhood_mask(&others);
        g.neighbors(w).iter().chain([&w]).any(|&p| !covered[p])
    })
}

/// Is there an irredundant set of size exactly `k`?
pub fn has_irredundant_set(g: &Graph, k: usize) -> bool {
    subsets(g.order()).any(|s| s.len() == k && is_irredundant(g, &s))
}

/// Is there a dominating set meeting every colour class exactly once?
pub fn has_multicolored_dominating_set(g: &Graph, partition: &[Vec<Vertex>]) -> Result<bool> {
    let colour = colour_classes(g, partition)?;
    Ok(subsets(g.order()).any(|d| {
        let mut hits = vec![0usize; partition.len()];
        for &v in &d {
            hits[colour[v]] += 1;
        }
        hits.iter().all(|&h| h == 1) && g.closed_neighborhood_mask(&d).iter().all(|&c| c)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, path};
    use crate::graph::{is_bipartite, recognize_split};

    #[test]
    fn perfect_domination_gadget_shape() {
        let out = gadget_perfectdom_to_split_prd(&path(2), 1).unwrap();
        assert_eq!(out.graph.order(), 44);
        assert_eq!(out.budget, Some(7));
        assert!(recognize_split(&out.graph).is_some());
        assert!(gadget_perfectdom_to_split_prd(&path(2), 3).is_err());
    }

    #[test]
    fn irredundant_gadget_shape() {
        for k in 1..=3 {
            let out = gadget_irredundant_to_extprd(&path(3), k).unwrap();
            assert_eq!(out.presolution.as_ref().unwrap().weight(), k + 4);
            assert!(is_bipartite(&out.graph).is_some());
            assert_eq!(out.graph.order(), (k + 1) * 3 + k + 4);
        }
        assert!(gadget_irredundant_to_extprd(&path(3), 0).is_err());
    }

    #[test]
    fn multicolored_gadget_shape() {
        let g = path(4);
        for partition in [vec![vec![0, 1, 2, 3]], vec![vec![0, 2], vec![1, 3]]] {
            let out = gadget_multicolored_ds_to_extprd(&g, &partition).unwrap();
            let k = partition.len();
            assert_eq!(out.presolution.as_ref().unwrap().class(0).len(), k + 1);
            assert_eq!(out.graph.order(), 2 * 4 + k + 2);
            assert!(is_bipartite(&out.graph).is_some());
        }
        assert!(gadget_multicolored_ds_to_extprd(&g, &[vec![0, 1], vec![2]]).is_err());
        assert!(gadget_multicolored_ds_to_extprd(&g, &[vec![0, 1, 2, 3], vec![]]).is_err());
    }

    #[test]
    fn source_deciders() {
        assert!(has_perfect_code(&path(2), 1));
        assert!(!has_perfect_code(&path(4), 1));
        assert!(has_perfect_code(&path(4), 2));
        assert!(has_irredundant_set(&path(4), 2));
        assert!(!has_irredundant_set(&complete(3), 2));
        assert!(has_multicolored_dominating_set(&path(3), &[vec![1], vec![0, 2]]).unwrap());
        assert!(!has_multicolored_dominating_set(&Graph::empty(2), &[vec![0, 1]]).unwrap());
        assert!(has_multicolored_dominating_set(&path(3), &[vec![0, 1, 2]]).unwrap());
    }
}
