//! Validity and minimality predicates.
//!
//! Every predicate has an `explain` form returning the first violated
//! condition together with a witness vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::RomanFunction;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Rdf,
    Prdf,
    Urrdf,
    MinimalRdf,
    MinimalPrdf,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Rdf,
        Property::Prdf,
        Property::Urrdf,
        Property::MinimalRdf,
        Property::MinimalPrdf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Rdf => "rdf",
            Property::Prdf => "prdf",
            Property::Urrdf => "urrdf",
            Property::MinimalRdf => "minimal-rdf",
            Property::MinimalPrdf => "minimal-prdf",
        }
    }

    pub fn check(self, g: &Graph, f: &RomanFunction) -> Result<bool> {
        Ok(self.explain(g, f)?.is_none())
    }

    pub fn explain(self, g: &Graph, f: &RomanFunction) -> Result<Option<Violation>> {
        f.check_against(g)?;
        let values = f.values();
        Ok(match self {
            Property::Rdf => rdf_violation(g, values),
            Property::Prdf => prdf_violation(g, values),
            Property::Urrdf => urrdf_violation(g, values),
            Property::MinimalRdf => minimal_rdf_violation(g, values),
            Property::MinimalPrdf => minimal_prdf_violation(g, values),
        })
    }

    /// Check on raw values without the length test; for hot loops.
    pub(crate) fn holds_raw(self, g: &Graph, values: &[u8]) -> bool {
        match self {
            Property::Rdf => rdf_violation(g, values).is_none(),
            Property::Prdf => prdf_violation(g, values).is_none(),
            Property::Urrdf => urrdf_violation(g, values).is_none(),
            Property::MinimalRdf => minimal_rdf_violation(g, values).is_none(),
            Property::MinimalPrdf => minimal_prdf_violation(g, values).is_none(),
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown property {s:?}")))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first condition a function fails, with a witness vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "kebab-case")]
pub enum Violation {
    /// A 0-vertex without a 2-neighbor.
    Undominated(Vertex),
    /// A 0-vertex with two or more 2-neighbors.
    MultiplyDominated(Vertex),
    /// A vertex of value at least 1 next to a 2-vertex.
    PositiveNextToTwo(Vertex),
    /// A 1-vertex with exactly one 2-neighbor.
    OneWithSingleTwoNeighbor(Vertex),
    /// A 2-vertex without a 0-neighbor.
    TwoWithoutZeroNeighbor(Vertex),
    /// A 1-vertex inside the closed neighborhood of the 2-vertices.
    OneNearTwo(Vertex),
    /// A 2-vertex whose private neighborhood in `G[V0 ∪ V2]` is within itself.
    NoExternalPrivateNeighbor(Vertex),
    /// A vertex of `G[V0 ∪ V2]` not dominated by the 2-vertices.
    NotDominatedInSubgraph(Vertex),
    /// A 2-vertex that is redundant in the dominating set of `G[V0 ∪ V2]`.
    RedundantTwo(Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Undominated(v) => write!(f, "vertex {v} has value 0 but no neighbor of value 2"),
            Violation::MultiplyDominated(v) => {
                write!(f, "vertex {v} has value 0 and several neighbors of value 2")
            }
            Violation::PositiveNextToTwo(v) => {
                write!(f, "vertex {v} has positive value and a neighbor of value 2")
            }
            Violation::OneWithSingleTwoNeighbor(v) => {
                write!(f, "vertex {v} has value 1 and exactly one neighbor of value 2")
            }
            Violation::TwoWithoutZeroNeighbor(v) => {
                write!(f, "vertex {v} has value 2 but no neighbor of value 0")
            }
            Violation::OneNearTwo(v) => {
                write!(f, "vertex {v} has value 1 and a neighbor of value 2")
            }
            Violation::NoExternalPrivateNeighbor(v) => {
                write!(f, "vertex {v} has value 2 but no private neighbor other than itself")
            }
            Violation::NotDominatedInSubgraph(v) => {
                write!(f, "vertex {v} is not dominated by the value-2 vertices")
            }
            Violation::RedundantTwo(v) => {
                write!(f, "vertex {v} is redundant among the value-2 vertices")
            }
        }
    }
}

fn twos_around(g: &Graph, values: &[u8], v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&u| values[u] == 2).count()
}

fn rdf_violation(g: &Graph, values: &[u8]) -> Option<Violation> {
    (0..values.len())
        .find(|&v| values[v] == 0 && twos_around(g, values, v) == 0)
        .map(Violation::Undominated)
}

fn prdf_violation(g: &Graph, values: &[u8]) -> Option<Violation> {
    for v in 0..values.len() {
        if values[v] == 0 {
            match twos_around(g, values, v) {
                0 => return Some(Violation::Undominated(v)),
                1 => {}
                _ => return Some(Violation::MultiplyDominated(v)),
            }
        }
    }
    None
}

fn urrdf_violation(g: &Graph, values: &[u8]) -> Option<Violation> {
    prdf_violation(g, values).or_else(|| {
        (0..values.len())
            .find(|&v| values[v] >= 1 && twos_around(g, values, v) > 0)
            .map(Violation::PositiveNextToTwo)
    })
}

/// Three local conditions: 0-vertices see exactly one 2, 1-vertices do not
/// see exactly one 2, 2-vertices see some 0.
fn minimal_prdf_violation(g: &Graph, values: &[u8]) -> Option<Violation> {
    for v in 0..values.len() {
        if values[v] == 0 {
            match twos_around(g, values, v) {
                0 => return Some(Violation::Undominated(v)),
                1 => {}
                _ => return Some(Violation::MultiplyDominated(v)),
            }
        }
    }
    for v in 0..values.len() {
        if values[v] == 1 && twos_around(g, values, v) == 1 {
            return Some(Violation::OneWithSingleTwoNeighbor(v));
        }
    }
    for v in 0..values.len() {
        if values[v] == 2 && !g.neighbors(v).iter().any(|&u| values[u] == 0) {
            return Some(Violation::TwoWithoutZeroNeighbor(v));
        }
    }
    None
}

/// Minimal RDF test on `G' = G[V0 ∪ V2]`: no 1-vertex in `N[V2]`, every
/// 2-vertex has a private neighbor in `G'` other than itself, and `V2` is a
/// minimal dominating set of `G'`.
fn minimal_rdf_violation(g: &Graph, values: &[u8]) -> Option<Violation> {
    let n = values.len();
    let in_sub = |v: Vertex| values[v] != 1;
    let twos: Vec<Vertex> = (0..n).filter(|&v| values[v] == 2).collect();

    for v in 0..n {
        if values[v] == 1 && twos_around(g, values, v) > 0 {
            return Some(Violation::OneNearTwo(v));
        }
    }

    // closed neighborhood within G' of a vertex
    let sub_closed = |v: Vertex| {
        std::iter::once(v).chain(g.neighbors(v).iter().copied().filter(|&u| in_sub(u)))
    };
    let private_in_sub = |s: Vertex| -> Vec<Vertex> {
        let mut covered = vec![false; n];
        for &t in twos.iter().filter(|&&t| t != s) {
            for u in sub_closed(t) {
                covered[u] = true;
            }
        }
        sub_closed(s).filter(|&u| !covered[u]).collect()
    };

    let privates: Vec<Vec<Vertex>> = twos.iter().map(|&s| private_in_sub(s)).collect();
    for (&s, private) in twos.iter().zip(&privates) {
        if private.iter().all(|&u| u == s) {
            return Some(Violation::NoExternalPrivateNeighbor(s));
        }
    }

    let mut dominated = vec![false; n];
    for &s in &twos {
        for u in sub_closed(s) {
            dominated[u] = true;
        }
    }
    if let Some(v) = (0..n).find(|&v| in_sub(v) && !dominated[v]) {
        return Some(Violation::NotDominatedInSubgraph(v));
    }
    for (&s, private) in twos.iter().zip(&privates) {
        if private.is_empty() {
            return Some(Violation::RedundantTwo(s));
        }
    }
    None
}

pub fn is_rdf(g: &Graph, f: &RomanFunction) -> Result<bool> {
    Property::Rdf.check(g, f)
}

pub fn is_prdf(g: &Graph, f: &RomanFunction) -> Result<bool> {
    Property::Prdf.check(g, f)
}

pub fn is_urrdf(g: &Graph, f: &RomanFunction) -> Result<bool> {
    Property::Urrdf.check(g, f)
}

pub fn is_minimal_prdf(g: &Graph, f: &RomanFunction) -> Result<bool> {
    Property::MinimalPrdf.check(g, f)
}

pub fn is_minimal_rdf(g: &Graph, f: &RomanFunction) -> Result<bool> {
    Property::MinimalRdf.check(g, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle, path, remark_graph};

    fn f(s: &str) -> RomanFunction {
        s.parse().unwrap()
    }

    #[test]
    fn rdf_examples() {
        let p3 = path(3);
        assert!(is_rdf(&p3, &f("020")).unwrap());
        assert_eq!(
            Property::Rdf.explain(&p3, &f("011")).unwrap(),
            Some(Violation::Undominated(0))
        );
        assert!(is_rdf(&path(2), &f("11")).unwrap());
        assert!(matches!(
            is_rdf(&p3, &f("02")),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn prdf_examples() {
        let c4 = cycle(4);
        assert!(is_prdf(&c4, &f("0201")).unwrap());
        assert_eq!(
            Property::Prdf.explain(&c4, &f("0202")).unwrap(),
            Some(Violation::MultiplyDominated(0))
        );
        assert!(is_prdf(&remark_graph(), &RomanFunction::constant(8, 1)).unwrap());
    }

    #[test]
    fn urrdf_examples() {
        assert!(is_urrdf(&path(2), &f("20")).unwrap());
        assert_eq!(
            Property::Urrdf.explain(&path(3), &f("212")).unwrap(),
            Some(Violation::PositiveNextToTwo(1))
        );
        assert!(is_urrdf(&path(3), &f("020")).unwrap());
    }

    #[test]
    fn minimal_prdf_examples() {
        let p3 = path(3);
        assert!(is_minimal_prdf(&p3, &f("020")).unwrap());
        assert_eq!(
            Property::MinimalPrdf.explain(&p3, &f("120")).unwrap(),
            Some(Violation::OneWithSingleTwoNeighbor(0))
        );
        assert!(is_minimal_prdf(&remark_graph(), &f("00200111")).unwrap());
    }

    #[test]
    fn minimal_rdf_examples() {
        let p3 = path(3);
        assert!(is_minimal_rdf(&p3, &f("020")).unwrap());
        assert!(is_minimal_rdf(&p3, &f("201")).unwrap());
        assert_eq!(
            Property::MinimalRdf.explain(&complete(3), &f("220")).unwrap(),
            Some(Violation::NoExternalPrivateNeighbor(0))
        );
        assert_eq!(
            Property::MinimalRdf.explain(&p3, &f("210")).unwrap(),
            Some(Violation::OneNearTwo(1))
        );
        assert!(is_minimal_rdf(&remark_graph(), &f("00200200")).unwrap());
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
    }
}
