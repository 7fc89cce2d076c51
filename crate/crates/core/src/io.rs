//! Plain-text tree formats.
//!
//! Edge lists hold one `u v` pair per line, 0-indexed. Lines starting with
//! `#` are comments, except `# order <n>`, which fixes the vertex count (the
//! only way to write the one-vertex tree). Without it the order is one more
//! than the largest label. A file may hold several trees separated by blank
//! lines. Prüfer sequences are comma-separated integers.

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::{Graph, Tree};

/// Parses a single edge-list record into a graph.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut records = parse_records(text)?;
    match records.len() {
        1 => Ok(records.pop().expect("one record")),
        0 => Err(Error::Parse {
            line: 1,
            msg: "no edges and no `# order` header".into(),
        }),
        k => Err(Error::Parse {
            line: 1,
            msg: format!("expected one record, found {k}"),
        }),
    }
}

/// Parses a single edge-list record into a tree.
pub fn parse_edge_list(text: &str) -> Result<Tree> {
    Tree::try_from(parse_graph(text)?)
}

/// Parses every blank-line-separated record into a tree.
pub fn parse_edge_list_records(text: &str) -> Result<Vec<Tree>> {
    parse_records(text)?.into_iter().map(Tree::try_from).collect()
}

#[derive(Default)]
struct Pending {
    order: Option<usize>,
    edges: Vec<(usize, usize)>,
    first_line: usize,
}

impl Pending {
    fn is_empty(&self) -> bool {
        self.order.is_none() && self.edges.is_empty()
    }

    fn finish(self) -> Result<Graph> {
        let inferred = self
            .edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0);
        let n = self.order.unwrap_or(inferred);
        if inferred > n {
            return Err(Error::Parse {
                line: self.first_line,
                msg: format!("edge endpoint {} exceeds declared order {n}", inferred - 1),
            });
        }
        Graph::from_edges(n, self.edges).map_err(|e| Error::Parse {
            line: self.first_line,
            msg: e.to_string(),
        })
    }
}

fn parse_records(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut cur = Pending::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur).finish()?);
            }
            continue;
        }
        if cur.is_empty() {
            cur.first_line = line_no;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("order") {
                let n = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: "`# order` needs a non-negative integer".into(),
                    })?;
                if cur.order.is_some() || !cur.edges.is_empty() {
                    // a second header starts a new record
                    out.push(std::mem::take(&mut cur).finish()?);
                    cur.first_line = line_no;
                }
                cur.order = Some(n);
            }
            continue;
        }
        let mut words = line.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let w = words.next().ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "expected two vertex labels".into(),
            })?;
            w.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("`{w}` is not a vertex label"),
            })
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if words.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing tokens after edge".into(),
            });
        }
        cur.edges.push((u, v));
    }
    if !cur.is_empty() {
        out.push(cur.finish()?);
    }
    Ok(out)
}

/// Writes a graph as an edge list with an `# order` header.
pub fn format_edge_list(g: &Graph) -> String {
    let mut s = format!("# order {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Like [`format_edge_list`], with the canonical code as an extra comment.
pub fn format_tree_record(t: &Tree) -> String {
    let mut s = format!("# code {}\n", CanonicalCode::of(t));
    s.push_str(&format_edge_list(t));
    s
}

/// Parses `"1,2,3"` (spaces allowed) into a Prüfer sequence.
pub fn parse_pruefer(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|w| {
            let w = w.trim();
            w.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("`{w}` is not a vertex label"),
            })
        })
        .collect()
}

pub fn format_pruefer(seq: &[usize]) -> String {
    seq.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
