//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line: line_no,
            reason: format!("missing {what}"),
        })?;
        field.parse().map_err(|_| Error::Parse {
            line: line_no,
            reason: format!("{what} {field:?} is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            reason: "trailing fields".into(),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing header".into(),
    })?;
    let (n, m) = parse_pair(header, header_no)?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line_no, line) in lines {
        let (a, b) = parse_pair(line, line_no)?;
        if count == m {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("more than {m} edges"),
            });
        }
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        if g.has_edge(a, b) {
            return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
        }
        g.add_edge(a, b);
        count += 1;
    }
    if count != m {
        return Err(Error::Parse {
            line: header_no,
            reason: format!("header declares {m} edges, found {count}"),
        });
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}
