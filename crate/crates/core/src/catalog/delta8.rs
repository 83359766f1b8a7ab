//! Catalog entries for the Δ=8 case (ids C8.1 - C8.13).

use super::*;

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry { index: 1, matcher: min_degree },
        Entry { index: 2, matcher: three_with_triangle },
        Entry { index: 3, matcher: three_with_two_quads },
        Entry { index: 4, matcher: three_with_weak_support },
        Entry { index: 5, matcher: four_low_neighbors },
        Entry { index: 6, matcher: four1_quads },
        Entry { index: 7, matcher: four2_neighbors },
        Entry { index: 8, matcher: four3_neighbors },
        Entry { index: 9, matcher: four4_neighbors },
        Entry { index: 10, matcher: five4_neighbors },
        Entry { index: 11, matcher: five5_neighbors },
        Entry { index: 12, matcher: six5_overloaded },
        Entry { index: 13, matcher: seven_plus_vertex },
    ]
}

fn three_with_triangle(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    three_vertex_with_triangle(ctx, v)
}

fn three_with_two_quads(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    three_vertex_with_two_quads(ctx, v)
}

/// C8.4: triangle-free 3-vertex with a 7-minus neighbor, or with too few
/// 8(6-)-neighbors for its 4-face count; anchor the double chord at a
/// low-degree neighbor.
fn three_with_weak_support(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 3 || p.m3 != 0 {
        return None;
    }
    let n86m = ctx.count_nbs(v, |q| kd(q, 8, 0, 6));
    let trigger = ctx.has_nb(v, |q| q.degree <= 6)
        || (p.m4 == 0 && n86m < 2)
        || (p.m4 == 1 && n86m < 3);
    if !trigger {
        return None;
    }
    // A degree-6 anchor if present, otherwise degree 7 still keeps the
    // maximum degree at 8.
    anchored_double_chord(ctx, v, 6).or_else(|| anchored_double_chord(ctx, v, 7))
}

/// C8.5: 4-vertex (with triangles) next to too many low vertices; fan from
/// one of them.
fn four_low_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 < 1 {
        return None;
    }
    let n4 = p.n_of_degree(4);
    let low5 = ctx.count_nbs(v, |q| q.degree <= 5);
    if p.m3 == 1 && n4 >= 2 {
        if let Some(c) = fan_from_degree(ctx, v, 4) {
            return Some(c);
        }
    }
    if p.m3 == 2 && low5 >= 2 {
        for d in [4usize, 5] {
            if let Some(c) = fan_from_degree(ctx, v, d) {
                return Some(c);
            }
        }
    }
    if p.m3 >= 3 && (n4 >= 1 || ctx.has_nb(v, |q| kd(q, 5, 4, 5))) {
        if let Some(c) = fan_from_degree(ctx, v, 4) {
            return Some(c);
        }
        for lab in ctx.labelings(v) {
            if kd(ctx.p(lab.v(0)), 5, 4, 5) {
                let chords = chords_to_all(&lab, 0);
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

/// C8.6: 4(1)-vertex on two or more 4-faces without two 7-plus neighbors;
/// double chord from a low corner of its triangle.
fn four1_quads(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 1 || p.m4 < 2 {
        return None;
    }
    if ctx.count_nbs(v, |q| q.degree >= 7) >= 2 {
        return None;
    }
    for lab in ctx.labelings(v) {
        if lab.slot_is_triangle(0) && ctx.deg(lab.v(0)) <= 6 {
            let chords = vec![(lab.v(0), lab.v(2)), (lab.v(0), lab.v(3))];
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
            let chords = vec![(lab.v(1), lab.v(2)), (lab.v(0), lab.v(3))];
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

/// C8.7: 4(2)-vertex with too few heavy neighbors for its 4-face count.
fn four2_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 2 {
        return None;
    }
    let sturdy7 = ctx.count_nbs(v, |q| {
        q.degree >= 7 && !kd(q, 7, 7, 7) && !kd(q, 8, 8, 8)
    });
    let a = ctx.count_nbs(v, |q| kd(q, 8, 0, 7));
    let b = ctx.count_nbs(v, |q| kd(q, 7, 0, 6));
    let ok = match p.m4 {
        0 => sturdy7 >= 2,
        1 => a >= 2 || sturdy7 >= 3,
        2 => a >= 3 || (a == 2 && b >= 1) || (a == 1 && b >= 3),
        _ => true,
    };
    if ok {
        return None;
    }
    four2_recipes(ctx, v)
}

/// C8.8: 4(3)-vertex outside the allowed neighborhood patterns.
fn four3_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 3 {
        return None;
    }
    let a = ctx.count_nbs(v, |q| kd(q, 8, 0, 7));
    let b = ctx.count_nbs(v, |q| kd(q, 7, 0, 6));
    let c = ctx.count_nbs(v, |q| kd(q, 8, 8, 8));
    let ok = match p.m4 {
        0 => a >= 3 || (a == 2 && (b >= 1 || c >= 2)) || (a == 1 && b >= 3),
        1 => a >= 3 || (a >= 2 && b >= 2),
        _ => true,
    };
    if ok {
        return None;
    }
    rim_close(ctx, v, 3)
}

/// C8.9: 4(4)-vertex without its full complement of 8(7-)-neighbors.
fn four4_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 4 {
        return None;
    }
    let a = ctx.count_nbs(v, |q| kd(q, 8, 0, 7));
    let ok = a >= 4 || (a >= 3 && ctx.has_nb(v, |q| kd(q, 7, 0, 5)));
    if ok {
        return None;
    }
    delete_only(ctx, v)
}

/// C8.10: 5(4)-vertex with too few sturdy 6-plus neighbors.
fn five4_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 4 {
        return None;
    }
    let sturdy = ctx.count_nbs(v, |q| q.degree >= 6 && !kd(q, 6, 6, 6));
    let trigger = (p.m4 == 0 && sturdy < 2) || (p.m4 == 1 && sturdy < 3);
    if !trigger {
        return None;
    }
    rim_close(ctx, v, 4)
}

/// C8.11: 5(5)-vertex breaking the adjacency or neighborhood constraints.
fn five5_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 5 {
        return None;
    }
    let n4 = p.n_of_degree(4);
    let n5 = p.n_of_degree(5);
    let n55 = ctx.count_nbs(v, |q| kd(q, 5, 5, 5));
    let n54 = ctx.count_nbs(v, |q| kd(q, 5, 4, 4));
    let poorish = ctx.count_nbs(v, |q| q.degree == 4 || kd(q, 5, 5, 5));
    let sturdy7 = ctx.count_nbs(v, |q| q.degree >= 7 && !kd(q, 7, 7, 7));
    let sturdy6 = ctx.count_nbs(v, |q| q.degree >= 6 && !kd(q, 6, 6, 6));
    let a = ctx.count_nbs(v, |q| kd(q, 8, 0, 7));
    let n65m = ctx.count_nbs(v, |q| kd(q, 6, 0, 5));
    let trigger = (n55 >= 1 && (n4 >= 1 || n54 >= 1))
        || poorish >= 2
        || (n4 == 1 && sturdy7 < 3)
        || (n4 == 0 && n5 == 0 && !(a >= 3 || (sturdy6 >= 4 && sturdy7 >= 2)))
        || (n4 == 0 && n5 == 1 && !(sturdy7 >= 3 || (n65m >= 2 && sturdy7 >= 2)))
        || (n4 == 0 && n5 == 2 && sturdy7 < 3);
    if !trigger {
        return None;
    }
    delete_only(ctx, v)
}

/// C8.12: 6(5)-vertex with five bad 5-neighbors, or four of them next to a
/// 4-face without two 8(6-)-neighbors.
fn six5_overloaded(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 6 || p.m3 != 5 {
        return None;
    }
    let bad5 = ctx.count_nbs(v, |q| kd(q, 5, 4, 5));
    let n86m = ctx.count_nbs(v, |q| kd(q, 8, 0, 6));
    let trigger = bad5 >= 5 || (p.m4 == 1 && bad5 == 4 && n86m < 2);
    if !trigger {
        return None;
    }
    six5_chord_recipes(ctx, v, false)
}

/// C8.13: 7-plus vertex with a support neighbor and too many needy
/// neighbors; fan from the support neighbor. Support means degree at most
/// 5 under a 7-vertex and at most 4 under an 8-vertex, with the edge in
/// two triangles, which keeps the fan within the degree bound.
fn seven_plus_vertex(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree < 7 {
        return None;
    }
    let anchor_max = if p.degree == 7 { 5 } else { 4 };
    let has_support = ctx.g.rotation_of(v).iter().any(|&u| {
        ctx.deg(u) <= anchor_max && ctx.g.edge_in_two_triangles(v, u)
    });
    if !has_support {
        return None;
    }
    let n4 = p.n_of_degree(4);
    let n5 = p.n_of_degree(5);
    let n41p = ctx.count_nbs(v, |q| kd(q, 4, 1, 4));
    let n55 = ctx.count_nbs(v, |q| kd(q, 5, 5, 5));
    let n54p = ctx.count_nbs(v, |q| kd(q, 5, 4, 5));
    let four_or_54 = ctx.count_nbs(v, |q| q.degree == 4 || kd(q, 5, 4, 4));
    let weak = ctx.count_nbs(v, |q| kd(q, 4, 0, 2) || kd(q, 5, 5, 5));
    let trigger = if p.degree == 7 {
        (p.m3 == 6 && n41p >= 5 && n5 >= 1)
            || (p.m3 == 6 && n55 >= 1 && four_or_54 >= 5)
            || (p.m3 == 6 && n55 >= 2 && four_or_54 >= 4)
            || (p.m3 == 6 && n55 >= 3 && (n4 >= 2 || four_or_54 >= 3))
            || (p.m3 == 7 && n54p >= 6)
    } else {
        p.m3 == 7 && weak >= 7
    };
    if !trigger {
        return None;
    }
    for lab in ctx.labelings(v) {
        if ctx.deg(lab.v(0)) <= anchor_max && ctx.g.edge_in_two_triangles(v, lab.v(0)) {
            let chords = fan_chords(&lab, 0);
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
