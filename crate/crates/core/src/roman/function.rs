use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A total assignment `V -> {0, 1, 2}`, vertex `i` at position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RomanFunction(Vec<u8>);

impl RomanFunction {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(Error::InvalidValue(bad.to_string()));
        }
        Ok(RomanFunction(values))
    }

    pub fn constant(n: usize, value: u8) -> Self {
        assert!(value <= 2);
        RomanFunction(vec![value; n])
    }

    /// Builds a function from its three classes; vertices not listed get 1.
    pub fn from_classes(n: usize, zeros: &[Vertex], twos: &[Vertex]) -> Self {
        let mut values = vec![1; n];
        for &v in zeros {
            values[v] = 0;
        }
        for &v in twos {
            values[v] = 2;
        }
        RomanFunction(values)
    }

    pub(crate) fn from_raw(values: Vec<u8>) -> Self {
        debug_assert!(values.iter().all(|&x| x <= 2));
        RomanFunction(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> u8 {
        self.0[v]
    }

    pub fn set(&mut self, v: Vertex, value: u8) {
        assert!(value <= 2);
        self.0[v] = value;
    }

    /// `V_i(f)`, sorted.
    pub fn class(&self, value: u8) -> Vec<Vertex> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == value)
            .map(|(v, _)| v)
            .collect()
    }

    /// `ω(f)`, the sum of all values.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &RomanFunction) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `f + χ_A`; panics if some member of `set` already has value 2.
    pub fn add_indicator(&self, set: &[Vertex]) -> RomanFunction {
        let mut values = self.0.clone();
        for &v in set {
            assert!(values[v] < 2, "vertex {v} already at value 2");
            values[v] += 1;
        }
        RomanFunction(values)
    }

    /// `f - χ_A`; panics if some member of `set` already has value 0.
    pub fn subtract_indicator(&self, set: &[Vertex]) -> RomanFunction {
        let mut values = self.0.clone();
        for &v in set {
            assert!(values[v] > 0, "vertex {v} already at value 0");
            values[v] -= 1;
        }
        RomanFunction(values)
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.len() == g.order() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.order(),
                found: self.len(),
            })
        }
    }
}

/// Pointwise comparison helper: `f <= g` on every vertex.
pub fn pointwise_le(f: &RomanFunction, g: &RomanFunction) -> bool {
    f.le(g)
}

impl fmt::Display for RomanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Accepts either a digit string (`"020"`) or whitespace/newline separated
/// `v value` pairs covering every vertex exactly once.
impl FromStr for RomanFunction {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if lines.len() == 1 && !lines[0].contains(char::is_whitespace) {
            let values = lines[0]
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    '2' => Ok(2),
                    other => Err(Error::InvalidValue(other.to_string())),
                })
                .collect::<Result<Vec<u8>>>()?;
            return Ok(RomanFunction(values));
        }

        let mut pairs = Vec::with_capacity(lines.len());
        for (i, line) in lines.iter().enumerate() {
            let parse_err = || Error::Parse {
                line: i + 1,
                message: format!("expected \"vertex value\", got {line:?}"),
            };
            let mut fields = line.split_whitespace();
            let (Some(v), Some(x), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(parse_err());
            };
            let v: usize = v.parse().map_err(|_| parse_err())?;
            let x: u8 = x.parse().map_err(|_| Error::InvalidValue(x.to_string()))?;
            if x > 2 {
                return Err(Error::InvalidValue(x.to_string()));
            }
            pairs.push((v, x));
        }
        let n = pairs.len();
        let mut values = vec![None; n];
        for (v, x) in pairs {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if values[v].replace(x).is_some() {
                return Err(Error::Precondition(format!("vertex {v} assigned twice")));
            }
        }
        Ok(RomanFunction(values.into_iter().map(Option::unwrap).collect()))
    }
}

impl Serialize for RomanFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RomanFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
