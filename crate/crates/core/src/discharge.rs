//! Exact-rational discharging: initial charges, the three rule sets
//! (maximum degree 6, 7, 8), rule application, and negativity reporting.
//!
//! Vertices start at `d(v) - 4` and faces at `len(f) - 4`; on a connected
//! plane graph both sums together come to exactly -8. Rules move rational
//! amounts between elements; every transfer is materialized so the ledger
//! can be audited. No floating point is used anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use crate::analysis::{self, DeltaCase, VertexProfile};
use crate::planegraph::{PlaneGraph, VertexId};

/// Exact rational charge.
pub type Charge = BigRational;

pub fn charge(num: i64, den: i64) -> Charge {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Render a charge the way the CLI prints it: `p/q`, or just `p` for integers.
pub fn render_charge(c: &Charge) -> String {
    if c.denom() == &BigInt::from(1) {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// A chargeable element: a vertex or a face (by face index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Face(i) => write!(f, "face {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: String,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

/// Initial charges, the full transfer list, and final charges.
#[derive(Debug, Clone)]
pub struct ChargeLedger {
    pub initial: BTreeMap<Element, Charge>,
    pub transfers: Vec<Transfer>,
    pub fin: BTreeMap<Element, Charge>,
}

impl ChargeLedger {
    pub fn total_initial(&self) -> Charge {
        self.initial.values().sum()
    }

    pub fn total_final(&self) -> Charge {
        self.fin.values().sum()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("rule set is for maximum degree {expected}, graph has {actual}")]
    UnsupportedDelta { expected: usize, actual: usize },
    #[error("cannot parse rule set: {0}")]
    Parse(String),
}

/// Vertex-side predicate of a rule, evaluated against frozen profiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexDesc {
    Any,
    /// Degree in `lo..=hi`.
    Degree { lo: usize, hi: usize },
    /// `degree`-vertex with m3 in `lo..=hi`.
    Class { degree: usize, lo: usize, hi: usize },
    Bad4,
    Bad5,
    /// Has no neighbor of degree 4.
    NoFourNeighbor,
    AnyOf(Vec<VertexDesc>),
    AllOf(Vec<VertexDesc>),
}

impl VertexDesc {
    fn matches(&self, p: &VertexProfile) -> bool {
        match self {
            VertexDesc::Any => true,
            VertexDesc::Degree { lo, hi } => (*lo..=*hi).contains(&p.degree),
            VertexDesc::Class { degree, lo, hi } => {
                p.degree == *degree && (*lo..=*hi).contains(&p.m3)
            }
            VertexDesc::Bad4 => p.class.bad4,
            VertexDesc::Bad5 => p.class.bad5,
            VertexDesc::NoFourNeighbor => p.n_of_degree(4) == 0,
            VertexDesc::AnyOf(ds) => ds.iter().any(|d| d.matches(p)),
            VertexDesc::AllOf(ds) => ds.iter().all(|d| d.matches(p)),
        }
    }

    fn render(&self) -> String {
        fn bound(hi: usize) -> String {
            if hi == usize::MAX {
                "inf".into()
            } else {
                hi.to_string()
            }
        }
        match self {
            VertexDesc::Any => "any".into(),
            VertexDesc::Degree { lo, hi } => format!("deg({lo},{})", bound(*hi)),
            VertexDesc::Class { degree, lo, hi } => {
                format!("class({degree},{lo},{})", bound(*hi))
            }
            VertexDesc::Bad4 => "bad4".into(),
            VertexDesc::Bad5 => "bad5".into(),
            VertexDesc::NoFourNeighbor => "no4nb".into(),
            VertexDesc::AnyOf(ds) => format!(
                "any_of({})",
                ds.iter().map(VertexDesc::render).collect::<Vec<_>>().join("|")
            ),
            VertexDesc::AllOf(ds) => format!(
                "all_of({})",
                ds.iter().map(VertexDesc::render).collect::<Vec<_>>().join("&")
            ),
        }
    }

    fn parse(s: &str) -> Result<VertexDesc, DischargeError> {
        let err = || DischargeError::Parse(format!("bad vertex descriptor `{s}`"));
        let parse_bound = |t: &str| -> Result<usize, DischargeError> {
            if t == "inf" {
                Ok(usize::MAX)
            } else {
                t.parse().map_err(|_| err())
            }
        };
        match s {
            "any" => return Ok(VertexDesc::Any),
            "bad4" => return Ok(VertexDesc::Bad4),
            "bad5" => return Ok(VertexDesc::Bad5),
            "no4nb" => return Ok(VertexDesc::NoFourNeighbor),
            _ => {}
        }
        if let Some(body) = s.strip_prefix("deg(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 2 {
                return Err(err());
            }
            return Ok(VertexDesc::Degree {
                lo: parse_bound(parts[0])?,
                hi: parse_bound(parts[1])?,
            });
        }
        if let Some(body) = s.strip_prefix("class(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 3 {
                return Err(err());
            }
            return Ok(VertexDesc::Class {
                degree: parts[0].parse().map_err(|_| err())?,
                lo: parse_bound(parts[1])?,
                hi: parse_bound(parts[2])?,
            });
        }
        if let Some(body) = s.strip_prefix("any_of(").and_then(|r| r.strip_suffix(')')) {
            let ds = body
                .split('|')
                .map(VertexDesc::parse)
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(VertexDesc::AnyOf(ds));
        }
        if let Some(body) = s.strip_prefix("all_of(").and_then(|r| r.strip_suffix(')')) {
            let ds = body
                .split('&')
                .map(VertexDesc::parse)
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(VertexDesc::AllOf(ds));
        }
        Err(err())
    }
}

/// Face length range `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceDesc {
    pub lo: usize,
    pub hi: usize,
}

impl FaceDesc {
    fn matches(&self, len: usize) -> bool {
        (self.lo..=self.hi).contains(&len)
    }

    fn render(&self) -> String {
        let hi = if self.hi == usize::MAX {
            "inf".into()
        } else {
            self.hi.to_string()
        };
        format!("face({},{hi})", self.lo)
    }

    fn parse(s: &str) -> Result<FaceDesc, DischargeError> {
        let err = || DischargeError::Parse(format!("bad face descriptor `{s}`"));
        let body = s
            .strip_prefix("face(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 2 {
            return Err(err());
        }
        let hi = if parts[1] == "inf" {
            usize::MAX
        } else {
            parts[1].parse().map_err(|_| err())?
        };
        Ok(FaceDesc {
            lo: parts[0].parse().map_err(|_| err())?,
            hi,
        })
    }
}

/// Extra condition on the sender-receiver edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeQual {
    None,
    Special,
    NotSpecial,
}

impl EdgeQual {
    fn render(&self) -> &'static str {
        match self {
            EdgeQual::None => "-",
            EdgeQual::Special => "special",
            EdgeQual::NotSpecial => "not_special",
        }
    }

    fn parse(s: &str) -> Result<EdgeQual, DischargeError> {
        match s {
            "-" => Ok(EdgeQual::None),
            "special" => Ok(EdgeQual::Special),
            "not_special" => Ok(EdgeQual::NotSpecial),
            _ => Err(DischargeError::Parse(format!("bad edge qualifier `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleKind {
    /// Each incident vertex pays the matching face, once per incidence slot.
    VertexToFace { face: FaceDesc },
    /// The matching face pays each matching vertex, once per incidence slot.
    FaceToVertex { face: FaceDesc, receiver: VertexDesc },
    /// Each matching vertex pays each matching neighbor.
    VertexToNeighbor {
        sender: VertexDesc,
        receiver: VertexDesc,
        edge: EdgeQual,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: String,
    pub amount: Charge,
    pub kind: RuleKind,
}

/// Ordered discharging rules for one delta case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DischargingRuleSet {
    pub delta_case: DeltaCase,
    pub rules: Vec<Rule>,
}

fn rule(id: &str, num: i64, den: i64, kind: RuleKind) -> Rule {
    Rule {
        id: id.to_string(),
        amount: charge(num, den),
        kind,
    }
}

fn v2f(id: &str, num: i64, den: i64, lo: usize, hi: usize) -> Rule {
    rule(id, num, den, RuleKind::VertexToFace {
        face: FaceDesc { lo, hi },
    })
}

fn f2v(id: &str, num: i64, den: i64, lo: usize, hi: usize, receiver: VertexDesc) -> Rule {
    rule(id, num, den, RuleKind::FaceToVertex {
        face: FaceDesc { lo, hi },
        receiver,
    })
}

fn v2n(id: &str, num: i64, den: i64, sender: VertexDesc, receiver: VertexDesc) -> Rule {
    v2n_edge(id, num, den, sender, receiver, EdgeQual::None)
}

fn v2n_edge(
    id: &str,
    num: i64,
    den: i64,
    sender: VertexDesc,
    receiver: VertexDesc,
    edge: EdgeQual,
) -> Rule {
    rule(id, num, den, RuleKind::VertexToNeighbor {
        sender,
        receiver,
        edge,
    })
}

fn deg(lo: usize, hi: usize) -> VertexDesc {
    VertexDesc::Degree { lo, hi }
}

fn class(degree: usize, lo: usize, hi: usize) -> VertexDesc {
    VertexDesc::Class { degree, lo, hi }
}

const INF: usize = usize::MAX;

/// The discharging rules for the given case.
pub fn rule_set(case: DeltaCase) -> DischargingRuleSet {
    let rules = match case {
        DeltaCase::D6 => vec![
            v2f("R1", 1, 3, 3, 3),
            f2v("R2a", 1, 3, 5, INF, VertexDesc::AnyOf(vec![deg(3, 3), VertexDesc::Bad4])),
            f2v("R2b", 1, 5, 5, INF, class(5, 4, 4)),
            f2v(
                "R2c",
                1,
                5,
                5,
                INF,
                VertexDesc::AllOf(vec![class(6, 5, 5), VertexDesc::NoFourNeighbor]),
            ),
            v2n("R3", 1, 6, class(6, 0, 3), VertexDesc::Any),
            v2n(
                "R4a",
                1,
                12,
                class(6, 4, 4),
                VertexDesc::AnyOf(vec![deg(4, 4), class(6, 5, 5)]),
            ),
            v2n(
                "R4b",
                1,
                9,
                class(6, 4, 4),
                VertexDesc::AnyOf(vec![deg(3, 3), class(5, 4, 4)]),
            ),
            v2n_edge("R4c", 1, 6, class(6, 4, 4), class(5, 5, 5), EdgeQual::Special),
            v2n_edge("R4d", 1, 9, class(6, 4, 4), class(5, 5, 5), EdgeQual::NotSpecial),
            v2n("R5a", 1, 12, class(6, 5, 5), VertexDesc::Bad4),
            v2n("R5b", 1, 9, class(6, 5, 5), VertexDesc::Bad5),
        ],
        DeltaCase::D7 => vec![
            v2f("R1", 1, 3, 3, 3),
            f2v("R2", 1, 5, 5, INF, VertexDesc::Any),
            v2n("R3", 1, 6, class(6, 0, 3), VertexDesc::Any),
            v2n("R4", 1, 9, class(6, 4, 4), VertexDesc::Any),
            v2n("R5", 1, 9, class(6, 5, 5), VertexDesc::Bad5),
            v2n("R6", 2, 7, class(7, 0, 3), VertexDesc::Any),
            v2n("R7a", 1, 5, class(7, 4, 5), deg(3, 3)),
            v2n("R7b", 1, 4, class(7, 4, 5), VertexDesc::Bad4),
            v2n("R7c", 2, 9, class(7, 4, 5), class(5, 5, 5)),
            v2n("R7d", 1, 9, class(7, 4, 5), class(5, 4, 4)),
            v2n("R7e", 1, 18, class(7, 4, 5), class(6, 5, 5)),
            v2n("R8a", 1, 6, class(7, 6, 6), class(5, 5, 5)),
            v2n("R8b", 1, 9, class(7, 6, 6), class(5, 4, 4)),
            v2n("R8c", 1, 6, class(7, 6, 6), VertexDesc::Bad4),
            v2n("R9a", 1, 6, class(7, 7, 7), class(5, 5, 5)),
            v2n("R9b", 1, 12, class(7, 7, 7), class(5, 4, 4)),
        ],
        DeltaCase::D8 => vec![
            v2f("R1", 1, 3, 3, 3),
            f2v("R2", 1, 5, 5, INF, VertexDesc::Any),
            v2n("R3", 1, 5, class(8, 0, 6), deg(3, 3)),
            v2n("R4", 1, 3, class(7, 0, 5), class(4, 4, 4)),
            v2n("R5", 1, 18, class(8, 0, 6), class(6, 5, 5)),
            v2n("R6", 1, 9, class(6, 0, 5), VertexDesc::Bad5),
            v2n("R7a", 1, 6, class(7, 0, 6), class(4, 1, 3)),
            v2n("R7b", 1, 9, class(7, 0, 6), class(5, 4, 4)),
            v2n("R7c", 2, 9, class(7, 0, 6), class(5, 5, 5)),
            v2n("R8", 1, 9, class(7, 7, 7), VertexDesc::Bad5),
            v2n("R9a", 1, 6, class(8, 0, 7), class(4, 1, 1)),
            v2n("R9b", 1, 4, class(8, 0, 7), class(4, 2, 2)),
            v2n("R9c", 1, 3, class(8, 0, 7), class(4, 3, INF)),
            v2n("R9d", 1, 9, class(8, 0, 7), class(5, 4, 4)),
            v2n("R9e", 2, 9, class(8, 0, 7), class(5, 5, 5)),
            v2n(
                "R10a",
                1,
                9,
                class(8, 8, 8),
                VertexDesc::AnyOf(vec![class(4, 3, 3), class(5, 4, 4)]),
            ),
            v2n("R10b", 2, 9, class(8, 8, 8), class(5, 5, 5)),
        ],
    };
    DischargingRuleSet {
        delta_case: case,
        rules,
    }
}

/// Charge `d(v)-4` on vertices and `len(f)-4` on faces; no transfers yet.
/// On a connected plane graph the total is exactly -8.
pub fn initial_charges(g: &PlaneGraph) -> ChargeLedger {
    let mut initial = BTreeMap::new();
    for v in g.vertices() {
        initial.insert(Element::Vertex(v), charge(g.degree(v) as i64 - 4, 1));
    }
    for (i, f) in g.faces().iter().enumerate() {
        initial.insert(Element::Face(i), charge(f.length() as i64 - 4, 1));
    }
    let fin = initial.clone();
    ChargeLedger {
        initial,
        transfers: Vec::new(),
        fin,
    }
}

/// Run every rule of `rs` over `g`, materializing one transfer per matching
/// incidence. Descriptors are evaluated against frozen profiles of the input
/// graph; discharging never mutates the graph.
pub fn apply_rules(
    g: &PlaneGraph,
    rs: &DischargingRuleSet,
) -> Result<ChargeLedger, DischargeError> {
    if g.max_degree() != rs.delta_case.delta() {
        return Err(DischargeError::UnsupportedDelta {
            expected: rs.delta_case.delta(),
            actual: g.max_degree(),
        });
    }
    let profiles = analysis::profile_all(g);
    let mut ledger = initial_charges(g);

    for r in &rs.rules {
        match &r.kind {
            RuleKind::VertexToFace { face } => {
                for (i, f) in g.faces().iter().enumerate() {
                    if !face.matches(f.length()) {
                        continue;
                    }
                    for &w in f.walk() {
                        ledger.transfers.push(Transfer {
                            rule: r.id.clone(),
                            from: Element::Vertex(w),
                            to: Element::Face(i),
                            amount: r.amount.clone(),
                        });
                    }
                }
            }
            RuleKind::FaceToVertex { face, receiver } => {
                for (i, f) in g.faces().iter().enumerate() {
                    if !face.matches(f.length()) {
                        continue;
                    }
                    for &w in f.walk() {
                        if receiver.matches(&profiles[&w]) {
                            ledger.transfers.push(Transfer {
                                rule: r.id.clone(),
                                from: Element::Face(i),
                                to: Element::Vertex(w),
                                amount: r.amount.clone(),
                            });
                        }
                    }
                }
            }
            RuleKind::VertexToNeighbor {
                sender,
                receiver,
                edge,
            } => {
                for (&u, pu) in &profiles {
                    if !sender.matches(pu) {
                        continue;
                    }
                    let mut nbrs: Vec<VertexId> = g.rotation_of(u).to_vec();
                    nbrs.sort_unstable();
                    for w in nbrs {
                        if !receiver.matches(&profiles[&w]) {
                            continue;
                        }
                        let ok = match edge {
                            EdgeQual::None => true,
                            EdgeQual::Special => analysis::is_special_edge(g, u, w),
                            EdgeQual::NotSpecial => !analysis::is_special_edge(g, u, w),
                        };
                        if ok {
                            ledger.transfers.push(Transfer {
                                rule: r.id.clone(),
                                from: Element::Vertex(u),
                                to: Element::Vertex(w),
                                amount: r.amount.clone(),
                            });
                        }
                    }
                }
            }
        }
    }

    for t in &ledger.transfers {
        *ledger.fin.get_mut(&t.from).unwrap() -= &t.amount;
        *ledger.fin.get_mut(&t.to).unwrap() += &t.amount;
    }
    debug_assert_eq!(ledger.total_initial(), ledger.total_final());
    Ok(ledger)
}

/// Elements whose final charge is negative, sorted, with their charges.
pub fn negativity_report(ledger: &ChargeLedger) -> Vec<(Element, Charge)> {
    ledger
        .fin
        .iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(e, c)| (*e, c.clone()))
        .collect()
}

/// One line per rule; `serialize` then [`parse_rule_set`] reproduces the
/// same transfers on the same graphs.
pub fn serialize_rule_set(rs: &DischargingRuleSet) -> String {
    let mut out = format!("delta {}\n", rs.delta_case.delta());
    for r in &rs.rules {
        let amount = format!("{}/{}", r.amount.numer(), r.amount.denom());
        let line = match &r.kind {
            RuleKind::VertexToFace { face } => {
                format!("{} v->f {} {amount}", r.id, face.render())
            }
            RuleKind::FaceToVertex { face, receiver } => {
                format!("{} f->v {} {} {amount}", r.id, face.render(), receiver.render())
            }
            RuleKind::VertexToNeighbor {
                sender,
                receiver,
                edge,
            } => format!(
                "{} v->n {} {} {} {amount}",
                r.id,
                sender.render(),
                receiver.render(),
                edge.render()
            ),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn parse_rule_set(text: &str) -> Result<DischargingRuleSet, DischargeError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| DischargeError::Parse("empty rule set".into()))?;
    let delta: usize = header
        .strip_prefix("delta ")
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| DischargeError::Parse("bad `delta` header".into()))?;
    let delta_case = DeltaCase::from_delta(delta)
        .ok_or_else(|| DischargeError::Parse(format!("unsupported delta {delta}")))?;
    let mut rules = Vec::new();
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let parse_amount = |s: &str| -> Result<Charge, DischargeError> {
            let (n, d) = s
                .split_once('/')
                .ok_or_else(|| DischargeError::Parse(format!("bad amount `{s}`")))?;
            let n: i64 = n
                .parse()
                .map_err(|_| DischargeError::Parse(format!("bad amount `{s}`")))?;
            let d: i64 = d
                .parse()
                .map_err(|_| DischargeError::Parse(format!("bad amount `{s}`")))?;
            Ok(charge(n, d))
        };
        let kind_err = || DischargeError::Parse(format!("bad rule line `{line}`"));
        let (id, rest) = toks.split_first().ok_or_else(kind_err)?;
        let r = match rest {
            ["v->f", face, amount] => Rule {
                id: id.to_string(),
                amount: parse_amount(amount)?,
                kind: RuleKind::VertexToFace {
                    face: FaceDesc::parse(face)?,
                },
            },
            ["f->v", face, receiver, amount] => Rule {
                id: id.to_string(),
                amount: parse_amount(amount)?,
                kind: RuleKind::FaceToVertex {
                    face: FaceDesc::parse(face)?,
                    receiver: VertexDesc::parse(receiver)?,
                },
            },
            ["v->n", sender, receiver, edge, amount] => Rule {
                id: id.to_string(),
                amount: parse_amount(amount)?,
                kind: RuleKind::VertexToNeighbor {
                    sender: VertexDesc::parse(sender)?,
                    receiver: VertexDesc::parse(receiver)?,
                    edge: EdgeQual::parse(edge)?,
                },
            },
            _ => return Err(kind_err()),
        };
        rules.push(r);
    }
    Ok(DischargingRuleSet { delta_case, rules })
}

/// Amounts that may legally appear in transfers for each case.
pub fn allowed_amounts(case: DeltaCase) -> Vec<Charge> {
    let pairs: &[(i64, i64)] = match case {
        DeltaCase::D6 => &[(1, 3), (1, 5), (1, 6), (1, 9), (1, 12)],
        DeltaCase::D7 => &[
            (1, 3),
            (1, 5),
            (1, 6),
            (1, 9),
            (2, 7),
            (1, 4),
            (2, 9),
            (1, 18),
            (1, 12),
        ],
        DeltaCase::D8 => &[(1, 3), (1, 5), (1, 18), (1, 9), (1, 6), (2, 9), (1, 4)],
    };
    pairs.iter().map(|&(n, d)| charge(n, d)).collect()
}
