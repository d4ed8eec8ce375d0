use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Parses the edge-list format: a header line `n m`, followed by `m` lines
/// `u v`. Lines starting with `#` and blank lines are skipped. The number
/// of edge lines must equal `m`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let [u, v] = parse_pair(line, content)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {w} out of range for order {n}"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {m} edges but {} were listed", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let mut fields = content.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid integer {tok:?}"),
        })
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing tokens".into(),
        });
    }
    Ok(pair)
}

/// Serializes in the edge-list format with edges sorted lexicographically.
pub fn to_edge_list(g: &Graph) -> String {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// JSON shape: `{"order": n, "edges": [[u, v], ...]}`.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<(Vertex, Vertex)> = self.edges().collect();
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paths_and_cycles() {
        let p3 = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.neighbors(1), &[0, 2]);

        let p2 = parse_graph("2 1\n0 1").unwrap();
        assert_eq!(p2.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let c4 = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# a path\n\n3 2\n# edges\n0 1\n\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_graph("2 2\n0 1\n1 0").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_graph("3 2\n0 1\n1 3").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_graph("3 1\n1 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("3 1\n1 x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(parse_graph("3 2\n0 1").is_err());
    }

    #[test]
    fn serialization_is_inverse() {
        let g = parse_graph("4 3\n3 2\n0 1\n2 0").unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n0 2\n2 3\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }
}
