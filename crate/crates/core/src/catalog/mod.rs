//! The reducible-configuration catalog.
//!
//! Each entry pairs a structural trigger (a predicate over vertex profiles
//! and edge flags around a center vertex) with a reduction recipe: delete
//! the center and embed a specific chord list in the hole. Detection is
//! purely structural; the accompanying certificate re-checks on the concrete
//! instance that the reduction shrinks the graph, preserves all distance-2
//! relations among surviving vertices, keeps the maximum degree, and that
//! the center has at most `2Δ+6` second neighbors (so a coloring of the
//! reduced graph always extends).
//!
//! Entries only fire when that second-neighborhood condition already holds;
//! without it the pattern is not reducible and the certificate could not
//! pass.
//!
//! Witness labelings follow the rotation convention: `v1..vk` are the
//! neighbors of the center in cyclic order, slot `i` is the face between
//! `v_i` and `v_{i+1}`. Detectors realize the symmetry of the trigger by
//! trying every rotation and both orientations of the labeling; recipe
//! alternatives are tried in a fixed order and the first one that is
//! guard-satisfying and embeddable wins.

mod delta6;
mod delta7;
mod delta8;

use std::collections::BTreeMap;
use std::fmt;

use crate::analysis::{self, DeltaCase, VertexProfile};
use crate::planegraph::{PlaneGraph, Surgery, SurgeryError, VertexId};
use thiserror::Error;

/// Catalog entry id, shown as e.g. `C6.2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EntryId {
    pub case: DeltaCase,
    pub index: usize,
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}.{}", self.case.delta(), self.index)
    }
}

/// A detected pattern together with its reduction recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleConfiguration {
    pub id: EntryId,
    pub delta_case: DeltaCase,
    pub center: VertexId,
    /// The labeled neighbors `v1..vk` of the center used by the recipe.
    pub witnesses: Vec<VertexId>,
    pub recipe: Surgery,
}

impl ReducibleConfiguration {
    /// Serialization used by the CLI:
    /// `id center [witnesses...] delete=.. chords=a-b,c-d`.
    pub fn line(&self) -> String {
        let wit = self
            .witnesses
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let chords = if self.recipe.chords.is_empty() {
            "-".to_string()
        } else {
            self.recipe
                .chords
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "{} {} [{}] delete={} chords={}",
            self.id, self.center, wit, self.recipe.delete, chords
        )
    }
}

/// Machine-checked evidence that a detected configuration reduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducibilityCertificate {
    /// All surviving pairs at distance <= 2 in the host stay at distance <= 2.
    pub proper: bool,
    /// `|V|+|E|` strictly decreased.
    pub shrinks: bool,
    /// `(2Δ+6) - d2(center)` in the host graph; nonnegative means a coloring
    /// of the reduced graph leaves a free color for the center.
    pub headroom: i64,
    /// The reduction did not raise the maximum degree.
    pub delta_ok: bool,
}

impl ReducibilityCertificate {
    pub fn passes(&self) -> bool {
        self.proper && self.shrinks && self.headroom >= 0 && self.delta_ok
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("catalog case is for maximum degree {expected}, graph has {actual}")]
    UnsupportedDelta { expected: usize, actual: usize },
}

/// Candidate produced by an entry matcher: witnesses plus chord list.
pub(crate) struct Candidate {
    pub witnesses: Vec<VertexId>,
    pub chords: Vec<(VertexId, VertexId)>,
}

pub(crate) struct Entry {
    pub index: usize,
    pub matcher: fn(&Ctx, VertexId) -> Option<Candidate>,
}

/// Shared state handed to entry matchers.
pub(crate) struct Ctx<'a> {
    pub g: &'a PlaneGraph,
    pub profiles: &'a BTreeMap<VertexId, VertexProfile>,
}

impl<'a> Ctx<'a> {
    pub fn p(&self, v: VertexId) -> &VertexProfile {
        &self.profiles[&v]
    }

    pub fn deg(&self, v: VertexId) -> usize {
        self.p(v).degree
    }

    /// Neighbor profiles of `v`.
    pub fn nb_profiles(&self, v: VertexId) -> impl Iterator<Item = &VertexProfile> + '_ {
        self.g.rotation_of(v).iter().map(move |&u| self.p(u))
    }

    pub fn count_nbs(&self, v: VertexId, pred: impl Fn(&VertexProfile) -> bool) -> usize {
        self.nb_profiles(v).filter(|p| pred(p)).count()
    }

    pub fn has_nb(&self, v: VertexId, pred: impl Fn(&VertexProfile) -> bool) -> bool {
        self.nb_profiles(v).any(pred)
    }

    /// Slots of length >= 5 around `v`.
    pub fn big_face_slots(&self, v: VertexId) -> usize {
        self.p(v)
            .mk
            .iter()
            .filter(|(&len, _)| len >= 5)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Can the chord list be embedded in the hole left by deleting `center`?
    pub fn embeddable(&self, center: VertexId, chords: &[(VertexId, VertexId)]) -> bool {
        self.g
            .apply_surgery(&Surgery::new(center, chords.to_vec()))
            .is_ok()
    }

    /// All rotation labelings of the neighbors of `v`: every cyclic offset
    /// in both orientations.
    pub fn labelings(&self, v: VertexId) -> Vec<Labeling<'_>> {
        let rot = self.g.rotation_of(v);
        let d = rot.len();
        let mut out = Vec::with_capacity(2 * d);
        for s in 0..d {
            let verts: Vec<VertexId> = (0..d).map(|i| rot[(s + i) % d]).collect();
            let slots: Vec<usize> = (0..d)
                .map(|i| {
                    self.g
                        .face_of_directed_edge(v, verts[(i + 1) % d])
                        .expect("edge exists")
                })
                .collect();
            out.push(Labeling { verts, slots, g: self.g });
        }
        for s in 0..d {
            let verts: Vec<VertexId> = (0..d).map(|i| rot[(s + d - i) % d]).collect();
            let slots: Vec<usize> = (0..d)
                .map(|i| {
                    self.g
                        .face_of_directed_edge(v, verts[i])
                        .expect("edge exists")
                })
                .collect();
            out.push(Labeling { verts, slots, g: self.g });
        }
        out
    }
}

/// One labeling `v1..vk` of a center's neighbors. `verts[i]` is `v_{i+1}`;
/// slot `i` is the face between `verts[i]` and `verts[i+1]`.
pub(crate) struct Labeling<'a> {
    pub verts: Vec<VertexId>,
    slots: Vec<usize>,
    g: &'a PlaneGraph,
}

impl Labeling<'_> {
    pub fn slot_len(&self, i: usize) -> usize {
        self.g.face_record(self.slots[i]).length()
    }

    pub fn slot_is_triangle(&self, i: usize) -> bool {
        self.slot_len(i) == 3
    }

    /// First `k` slots are triangles.
    pub fn triangles_at_start(&self, k: usize) -> bool {
        (0..k).all(|i| self.slot_is_triangle(i))
    }

    pub fn v(&self, i: usize) -> VertexId {
        self.verts[i]
    }
}

/// Fan chords from `verts[anchor]` to every other label except its two
/// rotation neighbors.
pub(crate) fn fan_chords(lab: &Labeling, anchor: usize) -> Vec<(VertexId, VertexId)> {
    let d = lab.verts.len();
    (0..d)
        .filter(|&j| j != anchor && j != (anchor + 1) % d && j != (anchor + d - 1) % d)
        .map(|j| (lab.verts[anchor], lab.verts[j]))
        .collect()
}

pub(crate) fn kd(p: &VertexProfile, k: usize, lo: usize, hi: usize) -> bool {
    p.degree == k && (lo..=hi).contains(&p.m3)
}

/// Chords from one label to every other label (existing edges get skipped
/// by the surgery).
pub(crate) fn chords_to_all(lab: &Labeling, anchor: usize) -> Vec<(VertexId, VertexId)> {
    (0..lab.verts.len())
        .filter(|&j| j != anchor)
        .map(|j| (lab.verts[anchor], lab.verts[j]))
        .collect()
}

/// Shared entry: vertex of degree at most 2; delete it and chord its
/// neighbors together.
pub(crate) fn min_degree(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let d = ctx.deg(v);
    if d > 2 {
        return None;
    }
    let nbrs = ctx.g.rotation_of(v).to_vec();
    let chords = if d == 2 {
        vec![(nbrs[0], nbrs[1])]
    } else {
        Vec::new()
    };
    if !ctx.embeddable(v, &chords) {
        return None;
    }
    Some(Candidate {
        witnesses: nbrs,
        chords,
    })
}

/// Shared entry body: 3-vertex with a triangle at slot 0; chord v1-v3.
pub(crate) fn three_vertex_with_triangle(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 3 || p.m3 < 1 {
        return None;
    }
    for lab in ctx.labelings(v) {
        if lab.slot_is_triangle(0) {
            let chords = vec![(lab.v(0), lab.v(2))];
            if ctx.embeddable(v, &chords) {
                return Some(Candidate {
                    witnesses: lab.verts,
                    chords,
                });
            }
        }
    }
    None
}

/// Shared entry body: 3-vertex on two 4-faces (always consecutive slots);
/// the 4-face midpoints carry the broken distances, one chord suffices.
pub(crate) fn three_vertex_with_two_quads(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 3 || p.m4 < 2 {
        return None;
    }
    for lab in ctx.labelings(v) {
        if lab.slot_len(0) == 4 && lab.slot_len(1) == 4 {
            let chords = vec![(lab.v(0), lab.v(2))];
            if ctx.embeddable(v, &chords) {
                return Some(Candidate {
                    witnesses: lab.verts,
                    chords,
                });
            }
        }
    }
    None
}

/// Delete a 3-vertex and chord one low-degree neighbor to the other two.
pub(crate) fn anchored_double_chord(
    ctx: &Ctx,
    v: VertexId,
    anchor_max_degree: usize,
) -> Option<Candidate> {
    for lab in ctx.labelings(v) {
        if ctx.deg(lab.v(0)) <= anchor_max_degree {
            let chords = vec![(lab.v(0), lab.v(1)), (lab.v(0), lab.v(2))];
            if ctx.embeddable(v, &chords) {
                return Some(Candidate {
                    witnesses: lab.verts,
                    chords,
                });
            }
        }
    }
    None
}

/// Close the rim of a vertex whose first `tri` slots are triangles by
/// chording v1 to the last label.
pub(crate) fn rim_close(ctx: &Ctx, v: VertexId, tri: usize) -> Option<Candidate> {
    let d = ctx.deg(v);
    for lab in ctx.labelings(v) {
        if lab.triangles_at_start(tri) {
            let chords = vec![(lab.v(0), lab.v(d - 1))];
            if ctx.embeddable(v, &chords) {
                return Some(Candidate {
                    witnesses: lab.verts,
                    chords,
                });
            }
        }
    }
    None
}

/// Delete the center with no chords (used when the rim is already a cycle).
pub(crate) fn delete_only(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    if !ctx.embeddable(v, &[]) {
        return None;
    }
    Some(Candidate {
        witnesses: ctx.g.rotation_of(v).to_vec(),
        chords: Vec::new(),
    })
}

/// Fan all chords from a neighbor of the given degree.
pub(crate) fn fan_from_degree(
    ctx: &Ctx,
    v: VertexId,
    anchor_degree: usize,
) -> Option<Candidate> {
    for lab in ctx.labelings(v) {
        if ctx.deg(lab.v(0)) == anchor_degree {
            let chords = chords_to_all(&lab, 0);
            if ctx.embeddable(v, &chords) {
                return Some(Candidate {
                    witnesses: lab.verts,
                    chords,
                });
            }
        }
    }
    None
}

/// The chord family for an overloaded 6(5)-vertex (labels with slots 0..4
/// triangles, slot 5 the non-triangle). Alternatives in proof order: a hub
/// fan from an interior 4-neighbor (Δ=6 only), then the two three-chord
/// patterns anchored at v1.
pub(crate) fn six5_chord_recipes(
    ctx: &Ctx,
    v: VertexId,
    with_hub_fan: bool,
) -> Option<Candidate> {
    let aligned: Vec<Labeling> = ctx
        .labelings(v)
        .into_iter()
        .filter(|lab| lab.triangles_at_start(5))
        .collect();
    if with_hub_fan {
        for lab in &aligned {
            for k in 1..=4 {
                if ctx.deg(lab.v(k)) == 4 {
                    let chords = fan_chords(lab, k);
                    if ctx.embeddable(v, &chords) {
                        return Some(Candidate {
                            witnesses: lab.verts.clone(),
                            chords,
                        });
                    }
                }
            }
        }
        for lab in &aligned {
            if ctx.deg(lab.v(0)) == 4
                && ctx.deg(lab.v(1)) == 5
                && ctx.deg(lab.v(5)) <= 5
            {
                let chords = vec![
                    (lab.v(0), lab.v(5)),
                    (lab.v(1), lab.v(3)),
                    (lab.v(1), lab.v(5)),
                ];
                if ctx.embeddable(v, &chords) {
                    return Some(Candidate {
                        witnesses: lab.verts.clone(),
                        chords,
                    });
                }
            }
        }
    }
    let anchor_ok = |d: usize| {
        if with_hub_fan {
            d == 4 || d == 5
        } else {
            d == 5
        }
    };
    for lab in &aligned {
        if !anchor_ok(ctx.deg(lab.v(0))) {
            continue;
        }
        for w in [2usize, 4] {
            if ctx.deg(lab.v(w)) == 5 {
                let other = 6 - w;
                let chords = vec![
                    (lab.v(0), lab.v(5)),
                    (lab.v(w), lab.v(0)),
                    (lab.v(w), lab.v(other)),
                ];
                if ctx.embeddable(v, &chords) {
                    return Some(Candidate {
                        witnesses: lab.verts.clone(),
                        chords,
                    });
                }
            }
        }
    }
    None
}

/// The entry tables per case.
fn entries_for(case: DeltaCase) -> Vec<Entry> {
    match case {
        DeltaCase::D6 => delta6::entries(),
        DeltaCase::D7 => delta7::entries(),
        DeltaCase::D8 => delta8::entries(),
    }
}

/// Number of catalog entries for a case.
pub fn entry_count(case: DeltaCase) -> usize {
    entries_for(case).len()
}

/// Run every entry over every vertex. Results are ordered by
/// (entry index, center id); at most one configuration is reported per
/// entry and center.
pub fn detect(
    g: &PlaneGraph,
    case: DeltaCase,
) -> Result<Vec<ReducibleConfiguration>, CatalogError> {
    if g.max_degree() != case.delta() {
        return Err(CatalogError::UnsupportedDelta {
            expected: case.delta(),
            actual: g.max_degree(),
        });
    }
    let profiles = analysis::profile_all(g);
    let ctx = Ctx {
        g,
        profiles: &profiles,
    };
    let headroom_limit = 2 * case.delta() + 6;
    let mut out = Vec::new();
    for entry in entries_for(case) {
        for v in g.vertices() {
            if profiles[&v].d2 > headroom_limit {
                continue;
            }
            if let Some(c) = (entry.matcher)(&ctx, v) {
                out.push(ReducibleConfiguration {
                    id: EntryId {
                        case,
                        index: entry.index,
                    },
                    delta_case: case,
                    center: v,
                    witnesses: c.witnesses,
                    recipe: Surgery::new(v, c.chords),
                });
            }
        }
    }
    Ok(out)
}

/// The first configuration in (entry index, center id) order, without
/// scanning the rest of the catalog; agrees with `detect(..).first()`.
pub fn detect_first(
    g: &PlaneGraph,
    case: DeltaCase,
) -> Result<Option<ReducibleConfiguration>, CatalogError> {
    if g.max_degree() != case.delta() {
        return Err(CatalogError::UnsupportedDelta {
            expected: case.delta(),
            actual: g.max_degree(),
        });
    }
    let profiles = analysis::profile_all(g);
    let ctx = Ctx {
        g,
        profiles: &profiles,
    };
    let headroom_limit = 2 * case.delta() + 6;
    for entry in entries_for(case) {
        for v in g.vertices() {
            if profiles[&v].d2 > headroom_limit {
                continue;
            }
            if let Some(c) = (entry.matcher)(&ctx, v) {
                return Ok(Some(ReducibleConfiguration {
                    id: EntryId {
                        case,
                        index: entry.index,
                    },
                    delta_case: case,
                    center: v,
                    witnesses: c.witnesses,
                    recipe: Surgery::new(v, c.chords),
                }));
            }
        }
    }
    Ok(None)
}

/// Apply the configuration's surgery and fill the certificate from exact
/// distances on the concrete instance.
pub fn certify(
    g: &PlaneGraph,
    c: &ReducibleConfiguration,
) -> Result<ReducibilityCertificate, SurgeryError> {
    let outcome = g.apply_surgery(&c.recipe)?;
    let reduced = &outcome.graph;

    // Deleting `center` can only break distance-2 pairs whose every short
    // path ran through it, and chords join former neighbors, so it suffices
    // to check all pairs of former neighbors (each was at distance <= 2 via
    // the center). Tests cross-check this against a full quadratic scan.
    let nbrs = g.rotation_of(c.center);
    let mut proper = true;
    'outer: for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !reduced.within_two(x, y) {
                proper = false;
                break 'outer;
            }
        }
    }

    let shrinks = reduced.num_vertices() + reduced.num_edges()
        < g.num_vertices() + g.num_edges();
    let headroom = (2 * g.max_degree() + 6) as i64
        - analysis::d2_exact(g, c.center).expect("center exists") as i64;
    let delta_ok = reduced.max_degree() <= g.max_degree();
    Ok(ReducibilityCertificate {
        proper,
        shrinks,
        headroom,
        delta_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixture;

    /// Independent oracle for the certificate's properness field: check
    /// every surviving pair by BFS.
    fn proper_oracle(g: &PlaneGraph, c: &ReducibleConfiguration) -> bool {
        let reduced = g.apply_surgery(&c.recipe).unwrap().graph;
        let survivors: Vec<VertexId> =
            g.vertices().filter(|&v| v != c.center).collect();
        for (i, &x) in survivors.iter().enumerate() {
            for &y in &survivors[i + 1..] {
                if g.within_two(x, y) && !reduced.within_two(x, y) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn w6_detects_six_rim_configurations() {
        let g = fixture("W6").unwrap();
        let found = detect(&g, DeltaCase::D6).unwrap();
        assert_eq!(found.len(), 6, "{:?}", found.iter().map(|c| c.line()).collect::<Vec<_>>());
        for (c, rim) in found.iter().zip(1..=6) {
            assert_eq!(c.id.to_string(), "C6.2");
            assert_eq!(c.center, rim);
        }
    }

    #[test]
    fn w7_detects_seven_rim_configurations() {
        let g = fixture("W7").unwrap();
        let found = detect(&g, DeltaCase::D7).unwrap();
        assert_eq!(found.len(), 7, "{:?}", found.iter().map(|c| c.line()).collect::<Vec<_>>());
        for (c, rim) in found.iter().zip(1..=7) {
            assert_eq!(c.id.to_string(), "C7.2");
            assert_eq!(c.center, rim);
        }
    }

    #[test]
    fn octahedron_is_unsupported_for_case6() {
        let g = fixture("octahedron").unwrap();
        assert_eq!(
            detect(&g, DeltaCase::D6).unwrap_err(),
            CatalogError::UnsupportedDelta {
                expected: 6,
                actual: 4
            }
        );
    }

    #[test]
    fn w6_rim_configuration_certifies() {
        let g = fixture("W6").unwrap();
        let found = detect(&g, DeltaCase::D6).unwrap();
        let c = &found[0];
        let cert = certify(&g, c).unwrap();
        assert!(cert.proper);
        assert!(cert.shrinks);
        assert_eq!(cert.headroom, 12);
        assert!(cert.delta_ok);
        assert!(cert.passes());
        assert!(proper_oracle(&g, c));
    }

    #[test]
    fn tampered_recipe_fails_properness() {
        // Deleting a degree-2 vertex of C5 without the reconnecting chord
        // pushes its neighbors to distance 3.
        let g = fixture("C5").unwrap();
        let bad = ReducibleConfiguration {
            id: EntryId {
                case: DeltaCase::D6,
                index: 1,
            },
            delta_case: DeltaCase::D6,
            center: 0,
            witnesses: vec![4, 1],
            recipe: Surgery::new(0, vec![]),
        };
        let cert = certify(&g, &bad).unwrap();
        assert!(!cert.proper);
        assert!(!proper_oracle(&g, &bad));
    }

    #[test]
    fn min_degree_reduction_on_c4_like_graph() {
        // Degree-2 vertex with the chord: proper.
        let g = PlaneGraph::build_from_rotation(vec![
            (0, vec![1, 3]),
            (1, vec![2, 3, 0]),
            (2, vec![1, 3]),
            (3, vec![0, 1, 2]),
        ])
        .unwrap();
        let c = ReducibleConfiguration {
            id: EntryId {
                case: DeltaCase::D6,
                index: 1,
            },
            delta_case: DeltaCase::D6,
            center: 2,
            witnesses: vec![1, 3],
            recipe: Surgery::new(2, vec![(1, 3)]),
        };
        let cert = certify(&g, &c).unwrap();
        assert!(cert.proper);
        assert!(proper_oracle(&g, &c));
    }

    /// Build a graph, assert the entry fires at the center, certify it.
    fn assert_entry_fires(
        rot: Vec<(VertexId, Vec<VertexId>)>,
        case: DeltaCase,
        want: &str,
        center: VertexId,
    ) {
        let g = PlaneGraph::build_from_rotation(rot).unwrap();
        assert_eq!(g.max_degree(), case.delta());
        let configs = detect(&g, case).unwrap();
        let hit = configs
            .iter()
            .find(|c| c.id.to_string() == want && c.center == center)
            .unwrap_or_else(|| {
                panic!(
                    "{want} did not fire at {center}; got {:?}",
                    configs.iter().map(|c| c.line()).collect::<Vec<_>>()
                )
            });
        let cert = certify(&g, hit).unwrap();
        assert!(cert.passes(), "{want}: {cert:?}");
        assert!(proper_oracle(&g, hit), "{want} oracle");
    }

    /// 5(4)-vertex with two non-adjacent 5(4)-neighbors (2 and 4).
    #[test]
    fn entry_c6_14_fires() {
        assert_entry_fires(
            vec![
                (0, vec![5, 4, 3, 2, 1]),
                (1, vec![6, 0, 2]),
                (2, vec![7, 6, 1, 0, 3]),
                (3, vec![8, 2, 0, 4]),
                (4, vec![9, 8, 3, 0, 5]),
                (5, vec![0, 4]),
                (6, vec![1, 2, 7]),
                (7, vec![13, 12, 11, 10, 6, 2]),
                (8, vec![3, 4, 9]),
                (9, vec![4, 8]),
                (10, vec![7]),
                (11, vec![7]),
                (12, vec![7]),
                (13, vec![7]),
            ],
            DeltaCase::D6,
            "C6.14",
            0,
        );
    }

    /// A 6(5)-hub ringed by six bad 5-vertices: a near-antiprism cap with
    /// one ring edge replaced by the extra vertex 13; pendants on one outer
    /// vertex set the maximum degree (7 without, 8 with the extra pendant).
    fn overloaded_six5(extra_pendant: bool) -> Vec<(VertexId, Vec<VertexId>)> {
        let o = |k: usize| 7 + (k % 6);
        let mut rot: Vec<(VertexId, Vec<VertexId>)> = vec![(0, (1..=6).collect())];
        for i in 2..=5usize {
            rot.push((i, vec![i + 1, 0, i - 1, o(i - 1), o(i)]));
        }
        rot.push((1, vec![2, 0, 13, o(0), o(1)]));
        rot.push((6, vec![13, 0, 5, o(5), o(0)]));
        for k in 0..6usize {
            let me = o(k);
            let r_hi = k + 1;
            let r_lo = if k == 0 { 6 } else { k };
            let mut r = vec![o(k + 1), r_hi, r_lo, o(k + 5)];
            if me == o(0) {
                r = vec![o(1), 1, 13, 6, o(5)];
            }
            if me == 10 {
                r.extend([14, 15, 16]);
                if extra_pendant {
                    r.push(17);
                }
            }
            rot.push((me, r));
        }
        rot.push((13, vec![1, 6, o(0)]));
        for p in 14..=16 {
            rot.push((p, vec![10]));
        }
        if extra_pendant {
            rot.push((17, vec![10]));
        }
        rot
    }

    #[test]
    fn entry_c7_13_fires() {
        assert_entry_fires(overloaded_six5(false), DeltaCase::D7, "C7.13", 0);
    }

    #[test]
    fn entry_c8_12_fires() {
        assert_entry_fires(overloaded_six5(true), DeltaCase::D8, "C8.12", 0);
    }

    /// 7-vertex whose seven neighbors are all 4-vertices, with a support
    /// neighbor on the triangle fan; vertex 8 closes the outside.
    #[test]
    fn entry_c7_14_fires() {
        assert_entry_fires(
            vec![
                (0, vec![1, 2, 3, 4, 5, 6, 7]),
                (1, vec![2, 0, 9, 8]),
                (2, vec![3, 0, 1, 8]),
                (3, vec![4, 0, 2, 8]),
                (4, vec![5, 0, 3, 8]),
                (5, vec![6, 0, 4, 8]),
                (6, vec![8, 10, 0, 5]),
                (7, vec![10, 8, 9, 0]),
                (8, vec![7, 6, 5, 4, 3, 2, 1]),
                (9, vec![1, 7]),
                (10, vec![6, 7]),
            ],
            DeltaCase::D7,
            "C7.14",
            0,
        );
    }

    /// 7(7)-vertex ringed by seven 5(5)-vertices inside a Δ=8 graph
    /// (antiprism cap; pendants on one outer vertex raise the maximum).
    #[test]
    fn entry_c8_13_fires() {
        let o = |k: usize| 8 + (k % 7);
        let mut rot: Vec<(VertexId, Vec<VertexId>)> = vec![(0, (1..=7).collect())];
        for i in 1..=7usize {
            let next = 1 + (i % 7);
            let prev = 1 + ((i + 5) % 7);
            rot.push((i, vec![next, 0, prev, o(i - 1), o(i)]));
        }
        for k in 0..7usize {
            let me = o(k);
            let y_hi = 1 + k;
            let y_lo = 1 + ((k + 6) % 7);
            let mut r = vec![o(k + 1), y_hi, y_lo, o(k + 6)];
            if me == 11 {
                r.extend([15, 16, 17, 18]);
            }
            rot.push((me, r));
        }
        for p in 15..=18 {
            rot.push((p, vec![11]));
        }
        assert_entry_fires(rot, DeltaCase::D8, "C8.13", 0);
    }

    #[test]
    fn certificates_pass_on_small_corpus() {
        use crate::gen::{GenMode, GenSpec, GraphStream};
        let mut spec = GenSpec::new(3, 24, GenMode::Subsampled);
        spec.delta_filter = Some([6, 7, 8].into());
        let mut stream = GraphStream::new(spec);
        let mut certified = 0usize;
        for _ in 0..12 {
            let g = stream.next_graph().unwrap();
            let case = DeltaCase::from_delta(g.max_degree()).unwrap();
            for c in detect(&g, case).unwrap() {
                let cert = certify(&g, &c).unwrap();
                assert!(cert.passes(), "{} on graph Δ={}", c.line(), g.max_degree());
                assert_eq!(cert.proper, proper_oracle(&g, &c), "{}", c.line());
                certified += 1;
            }
        }
        assert!(certified > 0);
    }
}
