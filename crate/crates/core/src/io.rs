//! Plain-text graph files: `p <n> <m>` followed by `e <u> <v>` lines with
//! 1-based ids. Blank lines and lines starting with `c` are ignored.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let err = |msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(&format!("bad integer {s:?}")))
        };
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("repeated header"));
                }
                // accept both `p n m` and the DIMACS `p edge n m`
                let nums = match fields.len() {
                    3 => &fields[1..],
                    4 => &fields[2..],
                    _ => return Err(err("header must be `p <n> <m>`")),
                };
                header = Some((num(nums[0])?, num(nums[1])?));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("edge before header"))?;
                if fields.len() != 3 {
                    return Err(err("edge must be `e <u> <v>`"));
                }
                let (u, v) = (num(fields[1])?, num(fields[2])?);
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(err(&format!("vertex {id} outside 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(err(&format!("unknown line kind {other:?}"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    if m != edges.len() {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

/// Canonical text form: edges sorted, each written `e u v` with `u < v`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// One 1-based id per line; blanks and `c`/`#` comments ignored.
pub fn parse_id_list(text: &str, universe: usize) -> Result<Vec<usize>> {
    let mut ids = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') || t.starts_with('#') {
            continue;
        }
        for tok in t
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
        {
            let id: usize = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                msg: format!("bad vertex id {tok:?}"),
            })?;
            if id == 0 || id > universe {
                return Err(Error::IdOutOfRange { id, n: universe });
            }
            ids.push(id - 1);
        }
    }
    Ok(ids)
}
