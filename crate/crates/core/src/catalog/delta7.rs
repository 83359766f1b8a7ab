//! Catalog entries for the Δ=7 case (ids C7.1 - C7.14).

use super::*;

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry { index: 1, matcher: min_degree },
        Entry { index: 2, matcher: three_with_triangle },
        Entry { index: 3, matcher: three_with_two_quads },
        Entry { index: 4, matcher: three_with_low_neighbor },
        Entry { index: 5, matcher: four_all_triangles },
        Entry { index: 6, matcher: four_with_five5_neighbor },
        Entry { index: 7, matcher: four_with_four_neighbor },
        Entry { index: 8, matcher: four1_quads },
        Entry { index: 9, matcher: four2_neighbors },
        Entry { index: 10, matcher: four3_neighbors },
        Entry { index: 11, matcher: five4_neighbors },
        Entry { index: 12, matcher: five5_neighbors },
        Entry { index: 13, matcher: six5_overloaded },
        Entry { index: 14, matcher: seven_vertex },
    ]
}

fn three_with_triangle(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    three_vertex_with_triangle(ctx, v)
}

fn three_with_two_quads(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    three_vertex_with_two_quads(ctx, v)
}

/// C7.4: triangle-free 3-vertex with a 6-minus neighbor.
fn three_with_low_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 3 || p.m3 != 0 {
        return None;
    }
    anchored_double_chord(ctx, v, 6)
}

/// C7.5: 4-vertex on four triangles; its rim is already a 4-cycle.
fn four_all_triangles(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 4 {
        return None;
    }
    delete_only(ctx, v)
}

/// C7.6: 4-vertex next to a 5(5)-vertex; both faces at that edge are
/// triangles.
fn four_with_five5_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    if ctx.deg(v) != 4 {
        return None;
    }
    for lab in ctx.labelings(v) {
        if kd(ctx.p(lab.v(1)), 5, 5, 5)
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

/// C7.7: 4-vertex on a triangle with two 4-neighbors, or with both a
/// 4-neighbor and a 5(4)-neighbor; fan from the 4-neighbor.
fn four_with_four_neighbor(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 < 1 {
        return None;
    }
    let n4 = p.n_of_degree(4);
    let trigger = n4 >= 2 || (n4 >= 1 && ctx.has_nb(v, |q| kd(q, 5, 4, 4)));
    if !trigger {
        return None;
    }
    fan_from_degree(ctx, v, 4)
}

/// C7.8: 4(1)-vertex whose 4-face count is not matched by heavy neighbors.
fn four1_quads(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 1 {
        return None;
    }
    let n75m = ctx.count_nbs(v, |q| kd(q, 7, 0, 5));
    let n76 = ctx.count_nbs(v, |q| kd(q, 7, 6, 6));
    let n76m = ctx.count_nbs(v, |q| kd(q, 7, 0, 6));
    if p.m4 == 2 && !(n75m >= 1 || n76 >= 2) {
        for lab in ctx.labelings(v) {
            if lab.slot_is_triangle(0) {
                let chords = vec![
                    (lab.v(1), lab.v(2)),
                    (lab.v(2), lab.v(3)),
                    (lab.v(0), lab.v(3)),
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
    if p.m4 == 3 && n76m < 2 {
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

/// The two 4(2) recipes keyed on triangle adjacency.
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

/// C7.9: 4(2)-vertex with too few heavy neighbors for its 4-face count.
fn four2_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 2 {
        return None;
    }
    let n75m = ctx.count_nbs(v, |q| kd(q, 7, 0, 5));
    let n76 = ctx.count_nbs(v, |q| kd(q, 7, 6, 6));
    let n76m = ctx.count_nbs(v, |q| kd(q, 7, 0, 6));
    let n64m = ctx.count_nbs(v, |q| kd(q, 6, 0, 4));
    let ok = match p.m4 {
        0 => (n75m >= 1 && n64m >= 1) || n76m >= 2,
        1 => (n76m >= 2 && n64m >= 2) || n76m >= 3,
        2 => (n75m >= 2 && n76 >= 2) || n75m >= 3,
        _ => true,
    };
    if ok {
        return None;
    }
    four2_recipes(ctx, v)
}

/// C7.10: 4(3)-vertex outside the allowed neighborhood patterns.
fn four3_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 4 || p.m3 != 3 {
        return None;
    }
    let n75m = ctx.count_nbs(v, |q| kd(q, 7, 0, 5));
    let n76 = ctx.count_nbs(v, |q| kd(q, 7, 6, 6));
    let n64m = ctx.count_nbs(v, |q| kd(q, 6, 0, 4));
    let ok = match p.m4 {
        0 => {
            n75m >= 4
                || (n75m >= 3 && n76 >= 1)
                || (n75m >= 3 && n64m >= 1)
                || (n75m >= 2 && n76 >= 2)
        }
        1 => n75m == 4,
        _ => true,
    };
    if ok {
        return None;
    }
    rim_close(ctx, v, 3)
}

/// C7.11: 5(4)-vertex breaking one of the neighbor constraints.
fn five4_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 4 {
        return None;
    }
    let n55 = ctx.count_nbs(v, |q| kd(q, 5, 5, 5));
    let n4 = p.n_of_degree(4);
    let sturdy = ctx.count_nbs(v, |q| q.degree >= 6 && !kd(q, 6, 6, 6));
    let trigger = n55 >= 2
        || (n55 >= 1 && n4 >= 1)
        || (ctx.has_nb(v, |q| kd(q, 7, 6, 6)) && n4 >= 2)
        || (p.m4 == 0 && sturdy < 2)
        || (p.m4 == 1 && sturdy < 3)
        || (p.m4 == 1 && ctx.has_nb(v, |q| kd(q, 7, 7, 7)) && sturdy < 4);
    if !trigger {
        return None;
    }
    rim_close(ctx, v, 4)
}

/// C7.12: 5(5)-vertex breaking one of the neighbor constraints; plain
/// deletion (its rim is a 5-cycle).
fn five5_neighbors(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 5 || p.m3 != 5 {
        return None;
    }
    let n4 = p.n_of_degree(4);
    let n5 = p.n_of_degree(5);
    let n6 = p.n_of_degree(6);
    let n7 = p.n_of_degree(7);
    let heavyish = ctx.count_nbs(v, |q| kd(q, 5, 4, 5) || kd(q, 6, 6, 6));
    let n75m = ctx.count_nbs(v, |q| kd(q, 7, 0, 5));
    let n66 = ctx.count_nbs(v, |q| kd(q, 6, 6, 6));
    let n65m = ctx.count_nbs(v, |q| kd(q, 6, 0, 5));
    let trigger = (n4 >= 1 || n5 >= 3)
        || (heavyish >= 2 || n7 == 0)
        || (n6 == 4 && n75m == 0)
        || (n5 == 0 && n65m >= 1 && n66 >= 1 && !(n7 >= 3 && n75m >= 1))
        || (n5 == 1 && (n66 >= 1 || n6 >= 3))
        || (n5 == 1 && n65m == 1 && n75m == 0)
        || (n5 == 1 && n65m == 2 && n75m < 2)
        || (n5 == 2 && n75m < 3);
    if !trigger {
        return None;
    }
    delete_only(ctx, v)
}

/// C7.13: 6(5)-vertex with five bad 5-neighbors, or four of them next to a
/// 4-face without the compensating 7(5-)-neighbors.
fn six5_overloaded(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 6 || p.m3 != 5 {
        return None;
    }
    let bad5 = ctx.count_nbs(v, |q| q.class.bad5);
    let n75m = ctx.count_nbs(v, |q| kd(q, 7, 0, 5));
    let trigger = bad5 >= 5 || (p.m4 == 1 && bad5 == 4 && n75m < 2);
    if !trigger {
        return None;
    }
    six5_chord_recipes(ctx, v, false)
}

/// C7.14: 7-vertex with a support 4-neighbor carrying too many poor
/// neighbors; fan from the support neighbor.
fn seven_vertex(ctx: &Ctx, v: VertexId) -> Option<Candidate> {
    let p = ctx.p(v);
    if p.degree != 7 {
        return None;
    }
    let has_support = ctx.g.rotation_of(v).iter().any(|&u| {
        ctx.deg(u) == 4 && ctx.g.edge_in_two_triangles(v, u)
    });
    if !has_support {
        return None;
    }
    let n4 = p.n_of_degree(4);
    let poor = ctx.count_nbs(v, |q| q.degree == 4 || kd(q, 5, 5, 5));
    let n55 = ctx.count_nbs(v, |q| kd(q, 5, 5, 5));
    let n54 = ctx.count_nbs(v, |q| kd(q, 5, 4, 4));
    let n65 = ctx.count_nbs(v, |q| kd(q, 6, 5, 5));
    let n7 = p.n_of_degree(7);
    let big_faces = ctx.big_face_slots(v);
    let trigger = ((4..=5).contains(&p.m3) && n4 == 7)
        || (p.m3 == 5 && n4 <= 2 && poor >= 5)
        || (p.m3 == 6 && poor >= 6)
        || (n4 == 3 && n55 >= 3)
        || (n4 == 4 && n55 >= 2)
        || (p.m3 == 5 && n4 == 4 && n54 >= 1 && n55 >= 1 && n7 == 0)
        || (p.m3 == 5 && n4 >= 3 && p.n_of_degree(3) >= 1 && poor >= 5)
        || (p.m3 == 5 && n4 == 5 && (n54 >= 2 || ((n54 >= 1 || n65 >= 2) && big_faces < 2)))
        || (p.m3 == 5 && n4 == 6 && (big_faces < 2 || ctx.has_nb(v, |q| q.class.bad5)));
    if !trigger {
        return None;
    }
    for lab in ctx.labelings(v) {
        if ctx.deg(lab.v(0)) == 4 && ctx.g.edge_in_two_triangles(v, lab.v(0)) {
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
