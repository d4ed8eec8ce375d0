//! Class-specific optimization solvers and extension solvers for perfect
//! Roman domination.

mod cobipartite;
mod extension;
mod split;

pub use cobipartite::{solve_prdf_cobipartite, solve_ur_cobipartite};
pub use extension::{
    extend_prdf, extend_prdf_bounded, extend_prdf_fixed_v2, ExtensionInstance,
    DEFAULT_BOUNDED_CAP,
};
pub use split::{solve_prdf_split_fpt, solve_ur_split};

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::roman::RomanFunction;

/// An optimum value together with a function attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: RomanFunction,
}

impl SolveResult {
    fn of(witness: RomanFunction) -> Self {
        SolveResult {
            optimum: witness.weight(),
            witness,
        }
    }
}

/// The cheapest perfect RDF with the given 2-set: every other vertex is 0
/// exactly when it has a single 2-neighbor.
pub(crate) fn complete_perfect(g: &Graph, twos: &[bool]) -> RomanFunction {
    let values = g
        .vertices()
        .map(|v| {
            if twos[v] {
                2
            } else if g.neighbors(v).iter().filter(|&&u| twos[u]).count() == 1 {
                0
            } else {
                1
            }
        })
        .collect();
    RomanFunction::from_raw(values)
}

/// Keeps the lighter function; ties go to the lexicographically smaller.
pub(crate) fn keep_best(best: &mut Option<RomanFunction>, candidate: RomanFunction) {
    let better = match best {
        None => true,
        Some(b) => (candidate.weight(), &candidate) < (b.weight(), &*b),
    };
    if better {
        *best = Some(candidate);
    }
}

pub(crate) fn mask(n: usize, set: &[Vertex]) -> Vec<bool> {
    crate::graph::mask_of(n, set)
}
