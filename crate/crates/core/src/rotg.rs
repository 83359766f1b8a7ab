//! ROTG: the line-oriented rotation-system text format.
//!
//! ```text
//! # optional comments
//! n m
//! v: u1 u2 ... uk
//! ```
//!
//! One rotation line per vertex (clockwise neighbor order), `#` starts a
//! comment, blank lines are ignored. Writing is canonical: vertices in
//! ascending id order, single spaces, no comments.

use std::collections::BTreeMap;

use crate::planegraph::{GraphError, PlaneGraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotgError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: declared m={declared} but rotations describe {actual} edges")]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        actual: usize,
    },
    #[error("trailing junk at line {line}")]
    TrailingJunk { line: usize },
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
}

impl RotgError {
    /// Line number the error points at, when it has one.
    pub fn line(&self) -> Option<usize> {
        match self {
            RotgError::Syntax { line, .. }
            | RotgError::EdgeCountMismatch { line, .. }
            | RotgError::TrailingJunk { line } => Some(*line),
            RotgError::Graph(_) => None,
        }
    }
}

pub fn parse(input: &str) -> Result<PlaneGraph, RotgError> {
    let mut content = input.lines().enumerate().filter_map(|(i, raw)| {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    });

    let (hdr_line, header) = content.next().ok_or(RotgError::Syntax {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let mut hdr = header.split_whitespace();
    let n: usize = parse_num(hdr.next(), hdr_line, "n")?;
    let m: usize = parse_num(hdr.next(), hdr_line, "m")?;
    if hdr.next().is_some() {
        return Err(RotgError::Syntax {
            line: hdr_line,
            msg: "header must be exactly `n m`".into(),
        });
    }

    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut last_line = hdr_line;
    for _ in 0..n {
        let (lineno, line) = content.next().ok_or(RotgError::Syntax {
            line: last_line,
            msg: format!("expected {n} rotation lines"),
        })?;
        last_line = lineno;
        let (v_str, rest) = line.split_once(':').ok_or(RotgError::Syntax {
            line: lineno,
            msg: "rotation line must look like `v: u1 u2 ...`".into(),
        })?;
        let v: VertexId = parse_num(Some(v_str.trim()), lineno, "vertex id")?;
        let mut nbrs = Vec::new();
        for tok in rest.split_whitespace() {
            nbrs.push(parse_num(Some(tok), lineno, "neighbor id")?);
        }
        if rotation.insert(v, nbrs).is_some() {
            return Err(RotgError::Graph(GraphError::DuplicateVertex(v)));
        }
    }
    if let Some((lineno, _)) = content.next() {
        return Err(RotgError::TrailingJunk { line: lineno });
    }

    let actual = rotation.values().map(Vec::len).sum::<usize>() / 2;
    let g = PlaneGraph::build_from_rotation(rotation)?;
    if actual != m || g.num_edges() != m {
        return Err(RotgError::EdgeCountMismatch {
            line: hdr_line,
            declared: m,
            actual: g.num_edges(),
        });
    }
    Ok(g)
}

pub fn write(g: &PlaneGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.num_vertices(), g.num_edges()));
    for v in g.vertices() {
        out.push_str(&format!("{v}:"));
        for u in g.rotation_of(v) {
            out.push_str(&format!(" {u}"));
        }
        out.push('\n');
    }
    out
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, RotgError> {
    tok.filter(|t| !t.is_empty())
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| RotgError::Syntax {
            line,
            msg: format!("expected {what}"),
        })
}
