//! Extension to minimal perfect Roman dominating functions: given `f`, is
//! there a minimal perfect RDF `g >= f`?

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::roman::{count_two_neighbors, is_minimal_prdf, RomanFunction};

/// Default cap on `|V0(f) ∪ V1(f)|` for [`extend_prdf_bounded`].
pub const DEFAULT_BOUNDED_CAP: usize = 20;

/// A graph paired with a pre-solution of matching length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionInstance {
    pub graph: Graph,
    pub f: RomanFunction,
}

impl ExtensionInstance {
    pub fn new(graph: Graph, f: RomanFunction) -> Result<Self> {
        f.check_against(&graph)?;
        Ok(ExtensionInstance { graph, f })
    }

    pub fn solve(&self) -> Result<Option<RomanFunction>> {
        extend_prdf(&self.graph, &self.f)
    }
}

/// Every 2-vertex has a 0-neighbor whose only 2-neighbor it is.
fn twos_have_private_zero(g: &Graph, values: &[u8]) -> bool {
    g.vertices().filter(|&v| values[v] == 2).all(|v| {
        g.neighbors(v)
            .iter()
            .any(|&w| values[w] == 0 && count_two_neighbors(g, values, w) == 1)
    })
}

/// Decides the extension problem and returns a witness.
///
/// While some 1-vertex `u` has exactly one 2-neighbor, some vertex of
/// `N[u]` outside `V2` must become 2 in every extension, so each choice is
/// tried in index order. Afterwards `V2` stays fixed and 0-vertices without
/// a unique 2-neighbor are raised to 1. Each round settles one 1-vertex for
/// good, so a witness has at most `|V2(f)| + |V1(f)|` 2-vertices.
pub fn extend_prdf(g: &Graph, f: &RomanFunction) -> Result<Option<RomanFunction>> {
    f.check_against(g)?;
    let mut values = f.values().to_vec();
    let found = extend_rec(g, &mut values);
    debug_assert!(found
        .as_ref()
        .is_none_or(|h| is_minimal_prdf(g, h).unwrap() && f.le(h)));
    Ok(found)
}

fn extend_rec(g: &Graph, values: &mut [u8]) -> Option<RomanFunction> {
    if !twos_have_private_zero(g, values) {
        return None;
    }
    let pending = g
        .vertices()
        .find(|&u| values[u] == 1 && count_two_neighbors(g, values, u) == 1);
    let Some(u) = pending else {
        let completed = g
            .vertices()
            .map(|v| match values[v] {
                0 if count_two_neighbors(g, values, v) != 1 => 1,
                x => x,
            })
            .collect();
        return Some(RomanFunction::from_raw(completed));
    };
    let mut closed: Vec<usize> = g.neighbors(u).to_vec();
    closed.push(u);
    closed.sort_unstable();
    for x in closed {
        if values[x] == 2 {
            continue;
        }
        let old = values[x];
        values[x] = 2;
        let found = extend_rec(g, values);
        values[x] = old;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Whether `f` extends to a minimal perfect RDF with the same 2-set.
pub fn extend_prdf_fixed_v2(g: &Graph, f: &RomanFunction) -> Result<bool> {
    f.check_against(g)?;
    let values = f.values();
    Ok(twos_have_private_zero(g, values)
        && g.vertices()
            .filter(|&u| values[u] == 1)
            .all(|u| count_two_neighbors(g, values, u) != 1))
}

/// Exhaustive search over all `g >= f` in lexicographic order; the first
/// minimal perfect RDF found is returned. Errors when more than `cap`
/// vertices have value below 2.
pub fn extend_prdf_bounded(
    g: &Graph,
    f: &RomanFunction,
    cap: usize,
) -> Result<Option<RomanFunction>> {
    f.check_against(g)?;
    let free: Vec<usize> = g.vertices().filter(|&v| f.get(v) < 2).collect();
    if free.len() > cap {
        return Err(Error::OracleLimit {
            order: free.len(),
            limit: cap,
        });
    }
    let mut values = f.values().to_vec();
    loop {
        let h = RomanFunction::from_raw(values.clone());
        if is_minimal_prdf(g, &h)? {
            return Ok(Some(h));
        }
        // Odometer over the free vertices, last vertex fastest.
        let mut carried = true;
        for &v in free.iter().rev() {
            if values[v] < 2 {
                values[v] += 1;
                carried = false;
                break;
            }
            values[v] = f.get(v);
        }
        if carried {
            return Ok(None);
        }
    }
}
