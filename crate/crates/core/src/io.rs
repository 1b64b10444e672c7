//! Plain-text edge-list format:
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1-based ids)
//! ```

use std::fmt::Write as _;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses a graph. Comment lines start with `c`; blank lines are skipped;
/// trailing whitespace and CR line endings are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = FxHashSet::default();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim_end();
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("second header line".into()));
                }
                if tokens.next() != Some("edge") {
                    return Err(err("expected \"p edge <n> <m>\"".into()));
                }
                let n = number(tokens.next(), "vertex count").map_err(err)?;
                let m = number(tokens.next(), "edge count").map_err(err)?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens after header".into()));
                }
                header = Some((n, m, line_no));
                edges.reserve(m);
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(err("edge line before header".into()));
                };
                let u = number(tokens.next(), "endpoint").map_err(err)?;
                let v = number(tokens.next(), "endpoint").map_err(err)?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens after edge".into()));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop on vertex {u}")));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if !seen.insert(key) {
                    return Err(err(format!("duplicate edge {u} {v}")));
                }
                edges.push(key);
            }
            Some(other) => return Err(err(format!("unknown line type {other:?}"))),
            None => unreachable!("blank lines are skipped"),
        }
    }

    let Some((n, m, header_line)) = header else {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: "missing \"p edge\" header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

fn number(token: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let token = token.ok_or_else(|| format!("missing {what}"))?;
    token
        .parse()
        .map_err(|_| format!("{what} {token:?} is not a non-negative integer"))
}

/// Writes `g` in canonical form (edges in lexicographic order), followed by
/// one `c <line>` comment per trailer entry.
pub fn write_graph(g: &Graph, trailer: &[String]) -> String {
    let mut out = String::with_capacity(16 * (g.m() + trailer.len() + 1));
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    for line in trailer {
        writeln!(out, "c {line}").unwrap();
    }
    out
}
