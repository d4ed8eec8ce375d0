//! Exhaustive ground truth over all `3^n` assignments (or all `2^n` vertex
//! subsets for 2-packings).
//!
//! Assignments are indexed as base-3 numbers with vertex 0 as the most
//! significant digit, so increasing index order is lexicographic order of
//! the digit string. Index ranges are evaluated in parallel; results are
//! merged in index order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::roman::{is_two_packing, Property, RomanFunction, TwoPacking};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleProperty {
    Function(Property),
    TwoPacking,
}

impl FromStr for OracleProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "2-packing" {
            Ok(OracleProperty::TwoPacking)
        } else {
            s.parse().map(OracleProperty::Function)
        }
    }
}

impl fmt::Display for OracleProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleProperty::Function(p) => p.fmt(f),
            OracleProperty::TwoPacking => f.write_str("2-packing"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMode {
    Enumerate,
    Count,
    MinWeight,
}

impl FromStr for OracleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumerate" => Ok(OracleMode::Enumerate),
            "count" => Ok(OracleMode::Count),
            "min-weight" => Ok(OracleMode::MinWeight),
            _ => Err(Error::Precondition(format!("unknown oracle mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleQuery {
    pub property: OracleProperty,
    pub mode: OracleMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleAnswer {
    Functions(Vec<RomanFunction>),
    Sets(Vec<Vec<Vertex>>),
    Count(usize),
    MinWeight(usize),
}

/// Size limits. Oracle cost is `3^n · poly(n)`, so these are configuration
/// rather than hard constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    /// Maximum graph order for function enumeration.
    pub function_limit: usize,
    /// Maximum graph order for 2-packing enumeration.
    pub packing_limit: usize,
    /// Maximum graph order for extension queries.
    pub extension_limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            function_limit: 12,
            packing_limit: 20,
            extension_limit: 20,
        }
    }
}

impl Oracle {
    pub fn with_limit(limit: usize) -> Self {
        Oracle {
            function_limit: limit,
            ..Oracle::default()
        }
    }

    pub fn run(&self, g: &Graph, query: OracleQuery) -> Result<OracleAnswer> {
        match (query.property, query.mode) {
            (OracleProperty::Function(p), OracleMode::Enumerate) => {
                self.enumerate(g, p).map(OracleAnswer::Functions)
            }
            (OracleProperty::Function(p), OracleMode::Count) => {
                self.enumerate(g, p).map(|v| OracleAnswer::Count(v.len()))
            }
            (OracleProperty::Function(p), OracleMode::MinWeight) => {
                self.min_weight(g, p).map(OracleAnswer::MinWeight)
            }
            (OracleProperty::TwoPacking, OracleMode::Enumerate) => {
                self.two_packings(g).map(OracleAnswer::Sets)
            }
            (OracleProperty::TwoPacking, OracleMode::Count) => {
                self.two_packings(g).map(|v| OracleAnswer::Count(v.len()))
            }
            (OracleProperty::TwoPacking, OracleMode::MinWeight) => {
                self.packing_min_score(g).map(OracleAnswer::MinWeight)
            }
        }
    }

    fn check_limit(&self, g: &Graph, limit: usize) -> Result<()> {
        if g.order() > limit {
            Err(Error::OracleLimit {
                order: g.order(),
                limit,
            })
        } else {
            Ok(())
        }
    }

    /// All functions with the property, in lexicographic order.
    pub fn enumerate(&self, g: &Graph, property: Property) -> Result<Vec<RomanFunction>> {
        self.check_limit(g, self.function_limit)?;
        let n = g.order();
        let indices = match property {
            Property::MinimalRdf => minimal_indices(g, Property::Rdf),
            Property::MinimalPrdf => minimal_indices(g, Property::Prdf),
            base => satisfying_indices(g, base),
        };
        Ok(indices.into_iter().map(|i| function_at(n, i)).collect())
    }

    pub fn count(&self, g: &Graph, property: Property) -> Result<usize> {
        self.enumerate(g, property).map(|v| v.len())
    }

    pub fn min_weight(&self, g: &Graph, property: Property) -> Result<usize> {
        self.enumerate(g, property)?
            .iter()
            .map(RomanFunction::weight)
            .min()
            .ok_or_else(|| Error::Precondition(format!("no {property} exists")))
    }

    /// All 2-packings as sorted vertex lists, in lexicographic order.
    pub fn two_packings(&self, g: &Graph) -> Result<Vec<Vec<Vertex>>> {
        self.check_limit(g, self.packing_limit)?;
        let n = g.order();
        let mut sets: Vec<Vec<Vertex>> = (0u64..1 << n)
            .into_par_iter()
            .filter_map(|mask| {
                let set: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                is_two_packing(g, &set).then_some(set)
            })
            .collect();
        sets.sort();
        Ok(sets)
    }

    /// `min 2|S| + |V \ N[S]|` over all 2-packings `S`.
    pub fn packing_min_score(&self, g: &Graph) -> Result<usize> {
        Ok(self
            .two_packings(g)?
            .into_iter()
            .map(|s| TwoPacking::new(g, s).expect("enumerated packing").score(g))
            .min()
            .expect("the empty set is always a 2-packing"))
    }

    /// Is there a minimal perfect RDF `h >= f`? Tries every `h >= f`.
    pub fn extension(&self, g: &Graph, f: &RomanFunction) -> Result<bool> {
        self.prepare_extension(g, f)?;
        let n = g.order();
        let floor = f.values();
        Ok((0..upward_count(floor))
            .into_par_iter()
            .map_init(
                || vec![0u8; n],
                |buf, i| {
                    upward_decode(floor, i, buf);
                    Property::MinimalPrdf.holds_raw(g, buf)
                },
            )
            .any(|hit| hit))
    }

    /// Every minimal perfect RDF `h >= f`, in lexicographic order.
    pub fn minimal_prdf_extensions(
        &self,
        g: &Graph,
        f: &RomanFunction,
    ) -> Result<Vec<RomanFunction>> {
        self.prepare_extension(g, f)?;
        let n = g.order();
        let floor = f.values();
        Ok((0..upward_count(floor))
            .into_par_iter()
            .map_init(
                || vec![0u8; n],
                |buf, i| {
                    upward_decode(floor, i, buf);
                    Property::MinimalPrdf
                        .holds_raw(g, buf)
                        .then(|| RomanFunction::from_raw(buf.clone()))
                },
            )
            .flatten()
            .collect())
    }

    fn prepare_extension(&self, g: &Graph, f: &RomanFunction) -> Result<()> {
        f.check_against(g)?;
        self.check_limit(g, self.extension_limit)
    }
}

pub fn brute_enumerate(g: &Graph, property: Property) -> Result<Vec<RomanFunction>> {
    Oracle::default().enumerate(g, property)
}

pub fn brute_count(g: &Graph, property: Property) -> Result<usize> {
    Oracle::default().count(g, property)
}

pub fn brute_min_weight(g: &Graph, property: Property) -> Result<usize> {
    Oracle::default().min_weight(g, property)
}

pub fn brute_two_packings(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    Oracle::default().two_packings(g)
}

pub fn brute_extension(g: &Graph, f: &RomanFunction) -> Result<bool> {
    Oracle::default().extension(g, f)
}

fn pow3(n: usize) -> u64 {
    3u64.pow(n as u32)
}

fn decode(i: u64, buf: &mut [u8]) {
    let mut rest = i;
    for slot in buf.iter_mut().rev() {
        *slot = (rest % 3) as u8;
        rest /= 3;
    }
}

fn function_at(n: usize, i: u64) -> RomanFunction {
    let mut buf = vec![0u8; n];
    decode(i, &mut buf);
    RomanFunction::from_raw(buf)
}

fn satisfying_indices(g: &Graph, property: Property) -> Vec<u64> {
    let n = g.order();
    (0..pow3(n))
        .into_par_iter()
        .map_init(
            || vec![0u8; n],
            |buf, i| {
                decode(i, buf);
                property.holds_raw(g, buf).then_some(i)
            },
        )
        .flatten()
        .collect()
}

/// Functions with `base` such that no strictly smaller function (pointwise)
/// has `base`. Scans the whole down-set of every candidate.
fn minimal_indices(g: &Graph, base: Property) -> Vec<u64> {
    let n = g.order();
    let total = pow3(n);
    let holds: Vec<bool> = (0..total)
        .into_par_iter()
        .map_init(
            || vec![0u8; n],
            |buf, i| {
                decode(i, buf);
                base.holds_raw(g, buf)
            },
        )
        .collect();
    let weights: Vec<u64> = (0..n).map(|v| pow3(n - 1 - v)).collect();
    (0..total)
        .into_par_iter()
        .filter(|&i| holds[i as usize])
        .map_init(
            || (vec![0u8; n], vec![0u8; n]),
            |(top, cur), i| {
                decode(i, top);
                let smaller_exists = down_set_any(top, cur, &weights, |j| j != i && holds[j as usize]);
                (!smaller_exists).then_some(i)
            },
        )
        .flatten()
        .collect()
}

/// Odometer over every `cur <= top`; true if `pred` holds for some index.
fn down_set_any(top: &[u8], cur: &mut [u8], weights: &[u64], mut pred: impl FnMut(u64) -> bool) -> bool {
    cur.iter_mut().for_each(|x| *x = 0);
    let mut index = 0u64;
    loop {
        if pred(index) {
            return true;
        }
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            if cur[pos] < top[pos] {
                cur[pos] += 1;
                index += weights[pos];
                break;
            }
            index -= cur[pos] as u64 * weights[pos];
            cur[pos] = 0;
        }
    }
}

fn upward_count(floor: &[u8]) -> u64 {
    floor.iter().map(|&x| (3 - x) as u64).product()
}

/// The `i`-th function `>= floor` in lexicographic order.
fn upward_decode(floor: &[u8], i: u64, buf: &mut [u8]) {
    let mut rest = i;
    for v in (0..floor.len()).rev() {
        let radix = (3 - floor[v]) as u64;
        buf[v] = floor[v] + (rest % radix) as u8;
        rest /= radix;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle, path, remark_graph, star};

    fn f(s: &str) -> RomanFunction {
        s.parse().unwrap()
    }

    fn strings(fs: &[RomanFunction]) -> Vec<String> {
        fs.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn p2_urrdfs_in_lexicographic_order() {
        let got = brute_enumerate(&path(2), Property::Urrdf).unwrap();
        assert_eq!(strings(&got), ["02", "11", "20"]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(brute_count(&path(3), Property::Urrdf).unwrap(), 4);
        assert_eq!(brute_count(&complete(3), Property::MinimalRdf).unwrap(), 4);
    }

    #[test]
    fn min_weights() {
        assert_eq!(brute_min_weight(&star(3), Property::Urrdf).unwrap(), 2);
        let r = remark_graph();
        assert_eq!(brute_min_weight(&r, Property::MinimalRdf).unwrap(), 4);
        assert_eq!(brute_min_weight(&r, Property::MinimalPrdf).unwrap(), 5);
    }

    #[test]
    fn extension_examples() {
        assert!(brute_extension(&path(4), &f("0000")).unwrap());
        assert!(!brute_extension(&path(3), &f("202")).unwrap());
        assert!(brute_extension(&cycle(4), &f("0200")).unwrap());
        let all = Oracle::default()
            .minimal_prdf_extensions(&cycle(4), &f("0200"))
            .unwrap();
        assert!(all.contains(&f("0201")));
        assert!(all.iter().all(|h| f("0200").le(h)));
    }

    #[test]
    fn limits_are_enforced() {
        let oracle = Oracle::with_limit(3);
        assert!(matches!(
            oracle.enumerate(&path(4), Property::Rdf),
            Err(Error::OracleLimit { order: 4, limit: 3 })
        ));
        assert!(oracle.two_packings(&path(4)).is_ok());
    }

    #[test]
    fn packings_and_query_dispatch() {
        let sets = brute_two_packings(&path(4)).unwrap();
        assert_eq!(sets, vec![vec![], vec![0], vec![0, 3], vec![1], vec![2], vec![3]]);
        let q = OracleQuery {
            property: "2-packing".parse().unwrap(),
            mode: OracleMode::MinWeight,
        };
        assert_eq!(
            Oracle::default().run(&path(4), q).unwrap(),
            OracleAnswer::MinWeight(3)
        );
    }

    #[test]
    fn output_is_strictly_increasing() {
        for p in Property::ALL {
            let fs = brute_enumerate(&cycle(5), p).unwrap();
            assert!(fs.windows(2).all(|w| w[0].to_string() < w[1].to_string()));
        }
    }
}
