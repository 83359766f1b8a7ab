//! Catalog entries for the Δ=6 case (ids C6.1 - C6.17).

use super::*;
use crate::analysis::is_special_edge;

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry { index: 1, matcher: min_degree },
        Entry { index: 2, matcher: three_with_triangle },
        Entry { index: 3, matcher: three_with_two_quads },
        Entry { index: 4, matcher: three_with_low_neighbor },
        Entry { index: 5, matcher: four_three_triangles },
        Entry { index: 6, matcher: four_with_kk_neighbor },
        Entry { index: 7, matcher: four1_with_four_neighbor },
        Entry { index: 8, matcher: four1_six_count },
        Entry { index: 9, matcher: four2_two_quads },
        Entry { index: 10, matcher: four2_six_count },
        Entry { index: 11, matcher: four2_bad_neighbor },
        Entry { index: 12, matcher: five4_bad_pair },
        Entry { index: 13, matcher: five4_light_six_count },
        Entry { index: 14, matcher: five4_nonadjacent_five4 },
        Entry { index: 15, matcher: five5_bad_neighbor },
        Entry { index: 16, matcher: five5_special_pattern },
        Entry { index: 17, matcher: six5_overloaded },
    ]
}

/// C6.2: 3-vertex on a triangle; chord around it.
fn three_with_triangle(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    three_vertex_with_triangle(ctx, v)
}

/// C6.3: 3-vertex on two 4-faces.
fn three_with_two_quads(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    three_vertex_with_two_quads(ctx, v)
}

/// C6.4: triangle-free 3-vertex with a 5-minus neighbor; chord from it to
/// the other two.
fn three_with_low_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 3 || p.m3 != 0 {
        return None;
    }
    anchored_double_chord(ctx, v, 5)
}

/// C6.5: 4-vertex on three or more triangles; close the rim.
fn four_three_triangles(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 < 3 {
        return None;
    }
    rim_close(ctx, v, 3)
}

/// C6.6: 4-vertex next to a k(k)-vertex (k <= 6); both faces at that edge
/// are triangles, so a single chord to the opposite neighbor suffices.
fn four_with_kk_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    if ctx.deg(v) != 4 {
        return None;
    }
    for lab in ctx.labelings(v) {
        let u = ctx.p(lab.v(1));
        if u.degree <= 6
            && u.m3 == u.degree
            && lab.slot_is_triangle(0)
            && lab.slot_is_triangle(1)
        {
            let chords = vec![(lab.v(1), lab.v(3))];
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

/// C6.7: 4(1)-vertex with a 4-neighbor and another neighbor that is a
/// 4-vertex or bad 5-vertex; fan from the 4-neighbor.
fn four1_with_four_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 1 {
        return None;
    }
    let n4 = p.n_of_degree(4);
    if !(n4 >= 2 || (n4 >= 1 && ctx.has_nb(v, |q| q.class.bad5))) {
        return None;
    }
    fan_from_degree(ctx, v, 4)
}

/// C6.8: 4(1)-vertex incident to r 4-faces but with at most r 6-neighbors.
fn four1_six_count(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 1 {
        return None;
    }
    if p.n_of_degree(6) > p.m4 {
        return None;
    }
    let low = |q: &VertexProfile| q.degree <= 5;
    let low_count = ctx.count_nbs(v, low);
    // A low neighbor on the triangle anchors two chords across.
    if low_count >= 2 {
        for lab in ctx.labelings(v) {
            if lab.slot_is_triangle(0) && ctx.deg(lab.v(0)) <= 5 {
                let chords = vec![(lab.v(0), lab.v(2)), (lab.v(0), lab.v(3))];
                if ctx.embeddable(v, &chords) {
                    return Some(Candidate {
                        witnesses: lab.verts,
                        chords,
                    });
                }
            }
        }
        // Both low neighbors off the triangle.
        for lab in ctx.labelings(v) {
            if lab.slot_is_triangle(0)
                && ctx.deg(lab.v(2)) <= 5
                && ctx.deg(lab.v(3)) <= 5
            {
                let chords = vec![
                    (lab.v(2), lab.v(3)),
                    (lab.v(2), lab.v(1)),
                    (lab.v(3), lab.v(0)),
                ];
                if ctx.embeddable(v, &chords) {
                    return Some(Candidate {
                        witnesses: lab.verts,
                        chords,
                    });
                }
            }
        }
    }
    // Three 4-faces: their middle vertices carry the distances.
    if p.m4 == 3 {
        for lab in ctx.labelings(v) {
            if lab.slot_is_triangle(0) {
                let chords = vec![(lab.v(1), lab.v(2)), (lab.v(0), lab.v(3))];
                if ctx.embeddable(v, &chords) {
                    return Some(Candidate {
                        witnesses: lab.verts,
                        chords,
                    });
                }
            }
        }
    }
    None
}

/// The two 4(2) recipes, keyed on whether the triangles share an edge.
fn four2_recipes(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    for lab in ctx.labelings(v) {
        if lab.slot_is_triangle(0) && lab.slot_is_triangle(1) {
            let chords = vec![(lab.v(1), lab.v(3))];
            if ctx.embeddable(v, &chords) {
                return Some(Candidate {
                    witnesses: lab.verts,
                    chords,
                });
            }
        }
    }
    for lab in ctx.labelings(v) {
        if lab.slot_is_triangle(0) && lab.slot_is_triangle(2) {
            let chords = vec![(lab.v(0), lab.v(3)), (lab.v(1), lab.v(2))];
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

/// C6.9: 4(2)-vertex on two or more 4-faces.
fn four2_two_quads(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 2 || p.m4 < 2 {
        return None;
    }
    four2_recipes(ctx, v)
}

/// C6.10: 4(2)-vertex with too few 6-neighbors for its 4-face count.
fn four2_six_count(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 2 || p.m4 > 1 {
        return None;
    }
    if p.n_of_degree(6) >= p.m4 + 3 {
        return None;
    }
    four2_recipes(ctx, v)
}

/// C6.11: 4(2)-vertex with a 4-neighbor or a bad 5-neighbor.
fn four2_bad_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 2 {
        return None;
    }
    if ctx.has_nb(v, |q| q.degree == 4) {
        if let Some(c) = fan_from_degree(ctx, v, 4) {
            return Some(c);
        }
    }
    // Bad 5-neighbor u whose edge to another neighbor w lies in two
    // triangles; chord u to the remaining two.
    let nbrs = ctx.g.rotation_of(v).to_vec();
    for &u in &nbrs {
        if !ctx.p(u).class.bad5 {
            continue;
        }
        for &w in &nbrs {
            if w == u || !ctx.g.has_edge(u, w) || !ctx.g.edge_in_two_triangles(u, w) {
                continue;
            }
            let rest: Vec<VertexId> =
                nbrs.iter().copied().filter(|&x| x != u && x != w).collect();
            let chords = vec![(u, rest[0]), (u, rest[1])];
            if ctx.embeddable(v, &chords) {
                return Some(Candidate {
                    witnesses: nbrs.clone(),
                    chords,
                });
            }
        }
    }
    None
}

/// C6.12: 5(4)-vertex with a 4-neighbor and another 4- or 5(4)-neighbor.
fn five4_bad_pair(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 4 {
        return None;
    }
    let n4 = p.n_of_degree(4);
    if !(n4 >= 2 || (n4 >= 1 && ctx.has_nb(v, |q| kd(q, 5, 4, 4)))) {
        return None;
    }
    rim_close(ctx, v, 4)
}

/// C6.13: 5(4)-vertex with too few 6(5-)-neighbors.
fn five4_light_six_count(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 4 {
        return None;
    }
    let light6 = ctx.count_nbs(v, |q| kd(q, 6, 0, 5));
    let trigger = (p.m4 == 0 && light6 < 2) || (p.m4 == 1 && light6 < 3);
    if !trigger {
        return None;
    }
    rim_close(ctx, v, 4)
}

/// C6.14: 5(4)-vertex with two non-adjacent 5(4)-neighbors.
fn five4_nonadjacent_five4(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 4 {
        return None;
    }
    let five4s: Vec<VertexId> = ctx
        .g
        .rotation_of(v)
        .iter()
        .copied()
        .filter(|&u| kd(ctx.p(u), 5, 4, 4))
        .collect();
    let pair = five4s.iter().enumerate().any(|(i, &a)| {
        five4s[i + 1..].iter().any(|&b| !ctx.g.has_edge(a, b))
    });
    if !pair {
        return None;
    }
    rim_close(ctx, v, 4)
}

/// C6.15: 5(5)-vertex with a 4-neighbor, bad 5-neighbor, 6(6)-neighbor, or
/// two 5-neighbors; plain deletion (its rim is a 5-cycle).
fn five5_bad_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 5 {
        return None;
    }
    let trigger = p.n_of_degree(4) >= 1
        || ctx.has_nb(v, |q| q.class.bad5)
        || ctx.has_nb(v, |q| kd(q, 6, 6, 6))
        || p.n_of_degree(5) >= 2;
    if !trigger {
        return None;
    }
    delete_only(ctx, v)
}

/// C6.16: 5(5)-vertex whose neighborhood breaks the special-edge pattern.
fn five5_special_pattern(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 5 {
        return None;
    }
    let nbrs = ctx.g.rotation_of(v);
    let rim_two_tri: Vec<bool> = (0..5)
        .map(|i| ctx.g.edge_in_two_triangles(nbrs[i], nbrs[(i + 1) % 5]))
        .collect();

    let mut trigger = false;
    for (i, &two_tri) in rim_two_tri.iter().enumerate() {
        if !two_tri {
            continue;
        }
        let not_light6 = ctx.has_nb(v, |q| !kd(q, 6, 0, 5));
        let nonspecial_spoke = (0..5)
            .filter(|&j| j != i && j != (i + 1) % 5)
            .any(|j| !is_special_edge(ctx.g, v, nbrs[j]));
        if not_light6 || nonspecial_spoke {
            trigger = true;
            break;
        }
    }
    if !trigger && rim_two_tri.iter().all(|&b| !b) {
        // No rim edge in two triangles: every spoke is special by face
        // adjacency, so the pattern demands four 6(4-)-neighbors.
        trigger = ctx.count_nbs(v, |q| kd(q, 6, 0, 4)) < 4;
    }
    if !trigger {
        return None;
    }
    delete_only(ctx, v)
}

/// C6.17: 6(5)-vertex carrying too many needy neighbors for its rule
/// income.
fn six5_overloaded(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 6 || p.m3 != 5 {
        return None;
    }
    let n4 = p.n_of_degree(4);
    let bad5 = ctx.count_nbs(v, |q| q.class.bad5);
    let n64minus = ctx.count_nbs(v, |q| kd(q, 6, 0, 4));
    let trigger = n4 >= 4
        || (n4 == 3 && bad5 >= 1)
        || (n4 == 2 && bad5 >= 3)
        || (n4 == 2 && bad5 == 2 && n64minus < 2)
        || (n4 == 1 && bad5 >= 4)
        || (n4 == 1 && bad5 == 3 && n64minus < 1)
        || (n4 == 0 && bad5 >= 5)
        || (n4 == 0 && p.m4 == 1 && bad5 == 4 && n64minus < 2);
    if !trigger {
        return None;
    }
    six5_chord_recipes(ctx, v, true)
}
