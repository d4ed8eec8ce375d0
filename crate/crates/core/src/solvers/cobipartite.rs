//! Solvers on cobipartite graphs. Two 2s in the same clique are never
//! needed, which leaves `O(n^2)` candidate 2-sets.

use super::{complete_perfect, keep_best, mask, SolveResult};
use crate::enumerate::rdf_from_v2;
use crate::error::Result;
use crate::graph::{CobipartitePartition, Graph, Vertex};
use crate::roman::is_two_packing;

/// Candidate 2-sets with at most one vertex from each clique, `∅` first.
fn candidates(p: &CobipartitePartition) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    let a = p.clique_a.iter().map(Some).chain([None]);
    a.flat_map(move |x| {
        p.clique_b
            .iter()
            .map(Some)
            .chain([None])
            .map(move |y| x.into_iter().chain(y).copied().collect())
    })
}

/// Minimum perfect RDF weight.
pub fn solve_prdf_cobipartite(g: &Graph, p: &CobipartitePartition) -> Result<SolveResult> {
    p.validate(g)?;
    let mut best = None;
    for twos in candidates(p) {
        keep_best(&mut best, complete_perfect(g, &mask(g.order(), &twos)));
    }
    Ok(SolveResult::of(best.expect("the empty 2-set is a candidate")))
}

/// Minimum urRDF weight via 2-packings, which meet each clique at most once.
pub fn solve_ur_cobipartite(g: &Graph, p: &CobipartitePartition) -> Result<SolveResult> {
    p.validate(g)?;
    let mut best = None;
    for set in candidates(p).filter(|s| is_two_packing(g, s)) {
        keep_best(&mut best, rdf_from_v2(g, &set));
    }
    Ok(SolveResult::of(best.expect("the empty set is a 2-packing")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cocomplete_bipartite, complete};
    use crate::graph::recognize_cobipartite;
    use crate::oracle::brute_min_weight;
    use crate::roman::{is_prdf, is_urrdf, Property};

    fn both(g: &Graph) -> (SolveResult, SolveResult) {
        let p = recognize_cobipartite(g).unwrap();
        (
            solve_prdf_cobipartite(g, &p).unwrap(),
            solve_ur_cobipartite(g, &p).unwrap(),
        )
    }

    #[test]
    fn examples() {
        let (prdf, ur) = both(&complete(4));
        assert_eq!((prdf.optimum, ur.optimum), (2, 2));
        let (_, ur) = both(&cocomplete_bipartite(3));
        assert_eq!(ur.optimum, 4);
        let (prdf, ur) = both(&complete(1));
        assert_eq!((prdf.optimum, ur.optimum), (1, 1));
    }

    #[test]
    fn witnesses_are_valid_and_optimal() {
        for g in [cocomplete_bipartite(2), cocomplete_bipartite(3), complete(3)] {
            let (prdf, ur) = both(&g);
            assert!(is_prdf(&g, &prdf.witness).unwrap());
            assert!(is_urrdf(&g, &ur.witness).unwrap());
            assert_eq!(prdf.optimum, brute_min_weight(&g, Property::Prdf).unwrap());
            assert_eq!(ur.optimum, brute_min_weight(&g, Property::Urrdf).unwrap());
        }
    }

    #[test]
    fn candidate_count() {
        let p = CobipartitePartition::new(vec![0, 1], vec![2, 3, 4]);
        assert_eq!(candidates(&p).count(), 3 * 4);
    }
}
