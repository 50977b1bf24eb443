//! Line-oriented edge-list format: a header `n <count>`, then one `u v`
//! pair per line; `#` starts a comment, duplicate edges are idempotent.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        match &mut graph {
            None => {
                let tag = fields.next();
                let count = fields.next();
                if tag != Some("n") || fields.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected header \"n <count>\", found {line:?}"),
                    });
                }
                let n: usize = count
                    .and_then(|c| c.parse().ok())
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: format!("invalid vertex count {count:?}"),
                    })?;
                graph = Some(Graph::new(n)?);
            }
            Some(g) => {
                let parse_vertex = |field: Option<&str>| -> Result<usize> {
                    field.and_then(|f| f.parse().ok()).ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: format!("expected \"u v\", found {line:?}"),
                    })
                };
                let u = parse_vertex(fields.next())?;
                let v = parse_vertex(fields.next())?;
                if fields.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("trailing fields after \"u v\" in {line:?}"),
                    });
                }
                g.add_edge(u, v)?;
            }
        }
    }
    graph.ok_or_else(|| Error::Parse { line: 0, msg: "missing \"n <count>\" header".into() })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
