//! Solvers on split graphs.

use super::{complete_perfect, keep_best, mask, SolveResult};
use crate::enumerate::rdf_from_v2;
use crate::error::{Error, Result};
use crate::graph::{Graph, SplitPartition, Vertex};
use crate::roman::RomanFunction;

/// Minimum urRDF weight on a connected split graph.
///
/// With a maximal clique the optimum is a single clique vertex at 2 or the
/// constant 1; the partition is normalized first, so any valid partition is
/// accepted.
pub fn solve_ur_split(g: &Graph, partition: &SplitPartition) -> Result<SolveResult> {
    partition.validate(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = partition.clone().normalize(g);
    let in_clique = mask(g.order(), &p.clique);
    let mut best: Option<(usize, Vertex)> = None;
    for &c in &p.clique {
        let outside = g.order()
            - p.clique.len()
            - g.neighbors(c).iter().filter(|&&u| !in_clique[u]).count();
        let score = 2 + outside;
        if best.is_none_or(|(b, _)| score < b) {
            best = Some((score, c));
        }
    }
    let witness = match best {
        Some((score, c)) if score <= g.order() => rdf_from_v2(g, &[c]),
        _ => RomanFunction::constant(g.order(), 1),
    };
    Ok(SolveResult::of(witness))
}

/// A minimum-weight perfect RDF of weight at most `k`, if there is one.
///
/// Either all 2s lie in the independent side, which then has at most `k`
/// vertices and is branched over `{1, 2}`; or some clique vertex is 2. A
/// single clique 2 is best completed without further 2s. With two or more
/// clique 2s every other clique vertex is 1 and independent 2s never help,
/// so the 2-set is a clique subset and `|C| + |V2| <= k`.
pub fn solve_prdf_split_fpt(
    g: &Graph,
    partition: &SplitPartition,
    k: usize,
) -> Result<Option<RomanFunction>> {
    partition.validate(g)?;
    let n = g.order();
    let clique = &partition.clique;
    let independent = &partition.independent;
    let mut best = None;

    if independent.len() <= k {
        let mut twos = vec![false; n];
        branch_independent(g, independent, 0, 0, k, &mut twos, &mut best);
    }

    for &c in clique {
        let f = complete_perfect(g, &mask(n, &[c]));
        if f.weight() <= k {
            keep_best(&mut best, f);
        }
    }

    if clique.len() + 2 <= k && clique.len() < 64 {
        for bits in 0u64..1 << clique.len() {
            let size = bits.count_ones() as usize;
            if size < 2 || clique.len() + size > k {
                continue;
            }
            let twos: Vec<Vertex> = clique
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            let f = complete_perfect(g, &mask(n, &twos));
            if f.weight() <= k {
                keep_best(&mut best, f);
            }
        }
    }
    Ok(best)
}

/// Assigns 1 or 2 to each independent vertex, pruning once the vertices
/// still to assign cannot fit into the budget.
fn branch_independent(
    g: &Graph,
    independent: &[Vertex],
    index: usize,
    spent: usize,
    k: usize,
    twos: &mut [bool],
    best: &mut Option<RomanFunction>,
) {
    if spent + (independent.len() - index) > k {
        return;
    }
    let Some(&v) = independent.get(index) else {
        let f = complete_perfect(g, twos);
        if f.weight() <= k {
            keep_best(best, f);
        }
        return;
    };
    branch_independent(g, independent, index + 1, spent + 1, k, twos, best);
    twos[v] = true;
    branch_independent(g, independent, index + 1, spent + 2, k, twos, best);
    twos[v] = false;
}
