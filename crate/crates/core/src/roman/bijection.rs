//! The weight-nondecreasing bijection between minimal Roman dominating
//! functions and minimal perfect Roman dominating functions.
//!
//! Both directions keep `V2` fixed and only move vertices between values 0
//! and 1 according to how many 2-neighbors they see.

use super::{is_minimal_prdf, is_minimal_rdf, RomanFunction};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn two_neighbors(g: &Graph, f: &RomanFunction, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| f.get(u) == 2).count()
}

/// 0-vertices with at least two 2-neighbors are raised to 1.
pub fn bijection_b(g: &Graph, f: &RomanFunction) -> Result<RomanFunction> {
    if !is_minimal_rdf(g, f)? {
        return Err(Error::Precondition(
            "function is not a minimal Roman dominating function".into(),
        ));
    }
    Ok(bijection_b_unchecked(g, f))
}

pub(crate) fn bijection_b_unchecked(g: &Graph, f: &RomanFunction) -> RomanFunction {
    let values = g
        .vertices()
        .map(|v| match f.get(v) {
            0 if two_neighbors(g, f, v) >= 2 => 1,
            x => x,
        })
        .collect();
    RomanFunction::from_raw(values)
}

/// 1-vertices with at least two 2-neighbors are lowered to 0.
pub fn bijection_b_inverse(g: &Graph, f: &RomanFunction) -> Result<RomanFunction> {
    if !is_minimal_prdf(g, f)? {
        return Err(Error::Precondition(
            "function is not a minimal perfect Roman dominating function".into(),
        ));
    }
    let values = g
        .vertices()
        .map(|v| match f.get(v) {
            1 if two_neighbors(g, f, v) >= 2 => 0,
            x => x,
        })
        .collect();
    Ok(RomanFunction::from_raw(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{path, remark_graph};

    fn f(s: &str) -> RomanFunction {
        s.parse().unwrap()
    }

    #[test]
    fn remark_graph_pair() {
        let g = remark_graph();
        let minimum_rdf = f("00200200");
        let image = bijection_b(&g, &minimum_rdf).unwrap();
        assert_eq!(image, f("00211200"));
        assert_eq!(image.weight(), 6);
        assert_eq!(bijection_b_inverse(&g, &image).unwrap(), minimum_rdf);

        let minimum_prdf = f("00200111");
        assert_eq!(bijection_b_inverse(&g, &minimum_prdf).unwrap(), minimum_prdf);
    }

    #[test]
    fn fixed_points() {
        let p3 = path(3);
        assert_eq!(bijection_b(&p3, &f("020")).unwrap(), f("020"));
        assert_eq!(bijection_b_inverse(&p3, &f("020")).unwrap(), f("020"));
        let ones = RomanFunction::constant(5, 1);
        assert_eq!(bijection_b(&path(5), &ones).unwrap(), ones);
    }

    #[test]
    fn rejects_non_minimal_inputs() {
        let p3 = path(3);
        assert!(bijection_b(&p3, &f("222")).is_err());
        assert!(bijection_b_inverse(&p3, &f("120")).is_err());
    }
}
