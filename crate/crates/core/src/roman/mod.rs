//! Roman functions, the validity and minimality predicates, and the two
//! structural bijections (2-packings to urRDFs, minimal RDFs to minimal
//! perfect RDFs).

mod bijection;
mod checks;
mod function;
mod packing;

pub use bijection::{bijection_b, bijection_b_inverse};
pub(crate) use bijection::bijection_b_unchecked;
pub use checks::{
    is_minimal_prdf, is_minimal_rdf, is_prdf, is_rdf, is_urrdf, Property, Violation,
};
pub use function::{pointwise_le, RomanFunction};
pub use packing::{is_two_packing, psi, psi_inverse, TwoPacking};

/// `|N(v) ∩ V2(f)|` on raw values.
pub(crate) fn count_two_neighbors(g: &crate::graph::Graph, values: &[u8], v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| values[u] == 2).count()
}
