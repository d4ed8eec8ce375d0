use serde::{Deserialize, Serialize};

use super::{is_urrdf, RomanFunction};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A vertex set with pairwise distance at least 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoPacking(Vec<Vertex>);

impl TwoPacking {
    pub fn new(g: &Graph, mut members: Vec<Vertex>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        for &v in &members {
            g.check_vertex(v)?;
        }
        if let Some((u, v)) = conflict(g, &members) {
            return Err(Error::Precondition(format!(
                "vertices {u} and {v} are within distance 2"
            )));
        }
        Ok(TwoPacking(members))
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_members(self) -> Vec<Vertex> {
        self.0
    }

    /// `2|S| + |V \ N[S]|`, the weight of the matching urRDF.
    pub fn score(&self, g: &Graph) -> usize {
        let covered = g.closed_neighborhood_mask(&self.0);
        2 * self.0.len() + covered.iter().filter(|&&c| !c).count()
    }
}

/// First pair of members with intersecting closed neighborhoods.
fn conflict(g: &Graph, members: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let mut owner: Vec<Option<Vertex>> = vec![None; g.order()];
    for &v in members {
        for u in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if let Some(w) = owner[u] {
                return Some((w, v));
            }
            owner[u] = Some(v);
        }
    }
    None
}

pub fn is_two_packing(g: &Graph, set: &[Vertex]) -> bool {
    set.iter().all(|&v| v < g.order()) && conflict(g, set).is_none()
}

/// `ψ_G(S)`: 2 on `S`, 0 on `N(S) \ S`, 1 elsewhere. `S` is validated.
pub fn psi(g: &Graph, set: &[Vertex]) -> Result<RomanFunction> {
    let packing = TwoPacking::new(g, set.to_vec())?;
    Ok(psi_of(g, &packing))
}

fn psi_of(g: &Graph, packing: &TwoPacking) -> RomanFunction {
    let mut values = vec![1u8; g.order()];
    for &s in packing.members() {
        for &u in g.neighbors(s) {
            values[u] = 0;
        }
    }
    for &s in packing.members() {
        values[s] = 2;
    }
    RomanFunction::from_raw(values)
}

/// Inverse of `ψ_G`: the 2-vertices of a urRDF.
pub fn psi_inverse(g: &Graph, f: &RomanFunction) -> Result<TwoPacking> {
    if !is_urrdf(g, f)? {
        return Err(Error::Precondition(
            "function is not a unique response Roman dominating function".into(),
        ));
    }
    Ok(TwoPacking(f.class(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{matching, path};

    #[test]
    fn psi_examples() {
        let p3 = path(3);
        assert_eq!(psi(&p3, &[]).unwrap().to_string(), "111");
        assert_eq!(psi(&p3, &[1]).unwrap().to_string(), "020");
        assert_eq!(psi(&p3, &[0]).unwrap().to_string(), "201");
        assert!(psi(&p3, &[0, 2]).is_err());
        assert!(psi(&p3, &[5]).is_err());
    }

    #[test]
    fn psi_inverse_examples() {
        let f = |s: &str| s.parse::<RomanFunction>().unwrap();
        assert_eq!(psi_inverse(&path(2), &f("20")).unwrap().members(), &[0]);
        assert_eq!(psi_inverse(&path(3), &f("020")).unwrap().members(), &[1]);
        assert_eq!(psi_inverse(&matching(2), &f("2011")).unwrap().members(), &[0]);
        assert!(psi_inverse(&path(3), &f("212")).is_err());
    }

    #[test]
    fn packing_checks() {
        let p5 = path(5);
        assert!(is_two_packing(&p5, &[0, 3]));
        assert!(!is_two_packing(&p5, &[0, 2]));
        assert!(is_two_packing(&p5, &[]));
        assert_eq!(TwoPacking::new(&p5, vec![4, 0]).unwrap().score(&p5), 5);
    }
}
