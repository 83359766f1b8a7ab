//! 2-distance coloring: the constructive reduce-and-extend colorer, an
//! exact branch-and-bound solver on the square graph, a greedy colorer,
//! and the validity checker.
//!
//! Every certificate handed out by this module has been re-checked against
//! the square graph; `valid` is never asserted by construction alone.

use std::collections::{BTreeMap, BTreeSet};

use crate::analysis::{self, DeltaCase, SimpleGraph};
use crate::catalog;
use crate::planegraph::{PlaneGraph, VertexId};
use thiserror::Error;

/// Default vertex cap for the exact solver.
pub const EXACT_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMethod {
    Constructive,
    Exact,
    Greedy,
}

impl ColorMethod {
    pub fn name(self) -> &'static str {
        match self {
            ColorMethod::Constructive => "constructive",
            ColorMethod::Exact => "exact",
            ColorMethod::Greedy => "greedy",
        }
    }
}

/// One step of the constructive recursion, or a note about a bail-out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    Reduce {
        config: String,
        deleted: VertexId,
        chords: Vec<(VertexId, VertexId)>,
    },
    Diagnostic(String),
}

impl TraceStep {
    pub fn line(&self) -> String {
        match self {
            TraceStep::Reduce {
                config,
                deleted,
                chords,
            } => {
                let cs = if chords.is_empty() {
                    "-".to_string()
                } else {
                    chords
                        .iter()
                        .map(|(a, b)| format!("{a}-{b}"))
                        .collect::<Vec<_>>()
                        .join(",")
                };
                format!("reduce {config} delete={deleted} chords={cs}")
            }
            TraceStep::Diagnostic(msg) => format!("note {msg}"),
        }
    }
}

/// A vertex coloring with its palette size, validity verdict, and the
/// reduction trace that produced it (empty for non-constructive paths).
#[derive(Debug, Clone)]
pub struct ColoringCertificate {
    pub assignment: BTreeMap<VertexId, usize>,
    pub palette_size: usize,
    pub valid: bool,
    pub method: ColorMethod,
    pub trace: Vec<TraceStep>,
}

#[derive(Debug, Error, Clone)]
pub enum ColorError {
    #[error("no strategy stayed within {bound} colors (reached {palette})")]
    PaletteExceeded {
        palette: usize,
        bound: usize,
        trace: Vec<TraceStep>,
    },
    #[error("graph has {n} vertices, exact solver capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("assignment misses vertex {0}")]
    PartialAssignment(VertexId),
}

/// True iff the assignment is total and proper on the square graph;
/// otherwise the first violating pair in vertex order.
pub fn validate(
    g: &PlaneGraph,
    assignment: &BTreeMap<VertexId, usize>,
) -> Result<(bool, Option<(VertexId, VertexId)>), ColorError> {
    for v in g.vertices() {
        if !assignment.contains_key(&v) {
            return Err(ColorError::PartialAssignment(v));
        }
    }
    let sq = analysis::square(g);
    for v in sq.vertices() {
        for u in sq.neighbors(v) {
            if u > v && assignment[&v] == assignment[&u] {
                return Ok((false, Some((v, u))));
            }
        }
    }
    Ok((true, None))
}

fn palette_of(assignment: &BTreeMap<VertexId, usize>) -> usize {
    assignment.values().collect::<BTreeSet<_>>().len()
}

fn finish_certificate(
    g: &PlaneGraph,
    assignment: BTreeMap<VertexId, usize>,
    method: ColorMethod,
    trace: Vec<TraceStep>,
) -> ColoringCertificate {
    let valid = validate(g, &assignment)
        .map(|(ok, _)| ok)
        .unwrap_or(false);
    ColoringCertificate {
        palette_size: palette_of(&assignment),
        assignment,
        valid,
        method,
        trace,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderHint {
    Degeneracy,
    DescendingD2,
    Input,
}

impl OrderHint {
    pub fn parse(s: &str) -> Option<OrderHint> {
        match s {
            "degeneracy" => Some(OrderHint::Degeneracy),
            "descending-d2" => Some(OrderHint::DescendingD2),
            "input" => Some(OrderHint::Input),
            _ => None,
        }
    }
}

/// Greedy 2-distance coloring under an elimination order; always valid,
/// palette unbounded.
pub fn greedy(g: &PlaneGraph, order: OrderHint) -> ColoringCertificate {
    let sq = analysis::square(g);
    let order = match order {
        OrderHint::Input => sq.vertices().collect::<Vec<_>>(),
        OrderHint::DescendingD2 => {
            let mut vs: Vec<VertexId> = sq.vertices().collect();
            vs.sort_by_key(|&v| (usize::MAX - sq.degree(v), v));
            vs
        }
        OrderHint::Degeneracy => degeneracy_order(&sq),
    };
    let assignment = greedy_on_square(&sq, &order);
    finish_certificate(g, assignment, ColorMethod::Greedy, Vec::new())
}

fn greedy_on_square(sq: &SimpleGraph, order: &[VertexId]) -> BTreeMap<VertexId, usize> {
    let mut assignment: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &v in order {
        let used: BTreeSet<usize> = sq
            .neighbors(v)
            .filter_map(|u| assignment.get(&u).copied())
            .collect();
        let color = (0..).find(|c| !used.contains(c)).unwrap();
        assignment.insert(v, color);
    }
    assignment
}

/// Smallest-last order: repeatedly strip a minimum-degree vertex, color in
/// reverse removal order.
fn degeneracy_order(sq: &SimpleGraph) -> Vec<VertexId> {
    let mut deg: BTreeMap<VertexId, usize> =
        sq.vertices().map(|v| (v, sq.degree(v))).collect();
    let mut removed: BTreeSet<VertexId> = BTreeSet::new();
    let mut stack = Vec::with_capacity(deg.len());
    while removed.len() < sq.num_vertices() {
        let (&v, _) = deg
            .iter()
            .filter(|(v, _)| !removed.contains(v))
            .min_by_key(|(&v, &d)| (d, v))
            .unwrap();
        removed.insert(v);
        stack.push(v);
        for u in sq.neighbors(v) {
            if !removed.contains(&u) {
                *deg.get_mut(&u).unwrap() -= 1;
            }
        }
    }
    stack.reverse();
    stack
}

/// Exact 2-distance chromatic number via branch and bound with
/// saturation-degree ordering and a greedy clique lower bound.
pub fn exact_chi2(g: &PlaneGraph) -> Result<(usize, ColoringCertificate), ColorError> {
    exact_chi2_capped(g, EXACT_CAP)
}

pub fn exact_chi2_capped(
    g: &PlaneGraph,
    cap: usize,
) -> Result<(usize, ColoringCertificate), ColorError> {
    let sq = analysis::square(g);
    let assignment = exact_on_square(&sq, cap)?;
    let cert = finish_certificate(g, assignment, ColorMethod::Exact, Vec::new());
    Ok((cert.palette_size, cert))
}

/// Exact chromatic number of an abstract graph (used on square graphs).
pub fn exact_on_square(
    sq: &SimpleGraph,
    cap: usize,
) -> Result<BTreeMap<VertexId, usize>, ColorError> {
    let n = sq.num_vertices();
    if n > cap || n > 64 {
        return Err(ColorError::TooLarge {
            n,
            cap: cap.min(64),
        });
    }
    let ids: Vec<VertexId> = sq.vertices().collect();
    let index: BTreeMap<VertexId, usize> =
        ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<u64> = ids
        .iter()
        .map(|&v| {
            sq.neighbors(v)
                .map(|u| 1u64 << index[&u])
                .fold(0u64, |a, b| a | b)
        })
        .collect();

    // Greedy clique on descending degree gives the lower bound.
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&i| (usize::MAX - adj[i].count_ones() as usize, i));
    let mut clique: Vec<usize> = Vec::new();
    for &i in &by_degree {
        if clique.iter().all(|&j| adj[i] & (1 << j) != 0) {
            clique.push(i);
        }
    }
    let lower = clique.len().max(usize::from(n > 0));

    // Greedy DSATUR coloring gives the upper bound and first incumbent.
    let greedy_order: Vec<VertexId> = ids.clone();
    let greedy_assign = greedy_on_square(sq, &greedy_order);
    let mut best: Vec<usize> = ids.iter().map(|v| greedy_assign[v]).collect();
    let mut best_k = best.iter().collect::<BTreeSet<_>>().len();

    if best_k > lower {
        let mut colors: Vec<Option<usize>> = vec![None; n];
        // Seed the clique with distinct colors; any exact coloring can be
        // renamed to match, so this loses no solutions.
        for (c, &i) in clique.iter().enumerate() {
            colors[i] = Some(c);
        }
        let seeded = clique.len();
        branch(
            &adj,
            &mut colors,
            seeded,
            seeded,
            lower,
            &mut best_k,
            &mut best,
        );
    }

    Ok(ids
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, best[i]))
        .collect())
}

fn branch(
    adj: &[u64],
    colors: &mut Vec<Option<usize>>,
    colored: usize,
    used: usize,
    lower: usize,
    best_k: &mut usize,
    best: &mut Vec<usize>,
) {
    let n = adj.len();
    if used >= *best_k {
        return;
    }
    if colored == n {
        *best_k = used;
        *best = colors.iter().map(|c| c.unwrap()).collect();
        return;
    }
    // Most saturated uncolored vertex; ties by degree, then index.
    let pick = (0..n)
        .filter(|&i| colors[i].is_none())
        .max_by_key(|&i| {
            let sat: BTreeSet<usize> = (0..n)
                .filter(|&j| adj[i] & (1 << j) != 0)
                .filter_map(|j| colors[j])
                .collect();
            (sat.len(), adj[i].count_ones(), usize::MAX - i)
        })
        .unwrap();
    let forbidden: BTreeSet<usize> = (0..n)
        .filter(|&j| adj[pick] & (1 << j) != 0)
        .filter_map(|j| colors[j])
        .collect();
    let limit = (used + 1).min(*best_k - 1).max(lower);
    for c in 0..limit {
        if forbidden.contains(&c) {
            continue;
        }
        colors[pick] = Some(c);
        branch(
            adj,
            colors,
            colored + 1,
            used.max(c + 1),
            lower,
            best_k,
            best,
        );
        colors[pick] = None;
        if *best_k == lower {
            return;
        }
    }
}

/// Reduce with the catalog while the maximum degree stays in 6..=8, color
/// the base exactly, then extend back up one deleted vertex at a time.
///
/// Any failure along the way (no configuration, a reduction that raises
/// the maximum degree, an extension without a free color) falls back to
/// the exact solver on small graphs and to greedy otherwise; the
/// diagnostic is recorded in the trace. The result is always re-validated
/// and must stay within `2Δ+7` colors.
pub fn color_constructive(g: &PlaneGraph) -> Result<ColoringCertificate, ColorError> {
    let delta = g.max_degree();
    let bound = 2 * delta + 7;

    struct Frame {
        host: PlaneGraph,
        config_id: String,
        deleted: VertexId,
        chords: Vec<(VertexId, VertexId)>,
    }

    let mut frames: Vec<Frame> = Vec::new();
    let mut trace: Vec<TraceStep> = Vec::new();
    let mut current = g.clone();
    let mut bail: Option<String> = None;

    while current.num_vertices() > 12 {
        let Some(case) = DeltaCase::from_delta(current.max_degree()) else {
            break;
        };
        let first = catalog::detect_first(&current, case).expect("delta matches case");
        let Some(config) = first else {
            bail = Some(format!(
                "no configuration on {} vertices at delta {}",
                current.num_vertices(),
                current.max_degree()
            ));
            break;
        };
        let outcome = match current.apply_surgery(&config.recipe) {
            Ok(o) => o,
            Err(e) => {
                bail = Some(format!("surgery failed for {}: {e}", config.id));
                break;
            }
        };
        if outcome.graph.max_degree() > current.max_degree() {
            bail = Some(format!("{} raised the maximum degree", config.id));
            break;
        }
        trace.push(TraceStep::Reduce {
            config: config.id.to_string(),
            deleted: config.center,
            chords: outcome.inserted.clone(),
        });
        frames.push(Frame {
            host: current,
            config_id: config.id.to_string(),
            deleted: config.center,
            chords: outcome.inserted,
        });
        current = outcome.graph;
    }

    if let Some(msg) = bail {
        trace.push(TraceStep::Diagnostic(msg));
        return fallback(g, bound, trace);
    }

    // Base coloring: exact on a small remainder, greedy when the loop ended
    // early because the maximum degree fell below 6.
    let base = if current.num_vertices() <= 12 {
        match exact_on_square(&analysis::square(&current), 12) {
            Ok(a) => a,
            Err(e) => {
                trace.push(TraceStep::Diagnostic(format!("base solver: {e}")));
                return fallback(g, bound, trace);
            }
        }
    } else {
        let sq = analysis::square(&current);
        greedy_on_square(&sq, &degeneracy_order(&sq))
    };
    if palette_of(&base) > bound {
        trace.push(TraceStep::Diagnostic(format!(
            "base coloring needs {} colors",
            palette_of(&base)
        )));
        return fallback(g, bound, trace);
    }

    // Extend: each deleted vertex takes the smallest color free in its
    // second neighborhood of the host graph.
    let mut assignment = base;
    for frame in frames.into_iter().rev() {
        let forbidden: BTreeSet<usize> = frame
            .host
            .ball2(frame.deleted)
            .expect("deleted vertex is in its host")
            .iter()
            .map(|u| assignment[u])
            .collect();
        let Some(color) = (0..bound).find(|c| !forbidden.contains(c)) else {
            trace.push(TraceStep::Diagnostic(format!(
                "no free color for {} after {} (chords {:?})",
                frame.deleted, frame.config_id, frame.chords
            )));
            return fallback(g, bound, trace);
        };
        assignment.insert(frame.deleted, color);
    }

    let cert = finish_certificate(g, assignment, ColorMethod::Constructive, trace);
    debug_assert!(cert.valid);
    if !cert.valid || cert.palette_size > bound {
        return Err(ColorError::PaletteExceeded {
            palette: cert.palette_size,
            bound,
            trace: cert.trace,
        });
    }
    Ok(cert)
}

fn fallback(
    g: &PlaneGraph,
    bound: usize,
    trace: Vec<TraceStep>,
) -> Result<ColoringCertificate, ColorError> {
    if g.num_vertices() <= 20 {
        if let Ok(assignment) = exact_on_square(&analysis::square(g), 20) {
            if palette_of(&assignment) <= bound {
                return Ok(finish_certificate(g, assignment, ColorMethod::Exact, trace));
            }
        }
    }
    let mut best: Option<BTreeMap<VertexId, usize>> = None;
    for order in [OrderHint::Degeneracy, OrderHint::DescendingD2, OrderHint::Input] {
        let cert = greedy(g, order);
        if best
            .as_ref()
            .is_none_or(|b| cert.palette_size < palette_of(b))
        {
            best = Some(cert.assignment);
        }
    }
    let assignment = best.expect("greedy always succeeds");
    if palette_of(&assignment) > bound {
        return Err(ColorError::PaletteExceeded {
            palette: palette_of(&assignment),
            bound,
            trace,
        });
    }
    Ok(finish_certificate(g, assignment, ColorMethod::Greedy, trace))
}
