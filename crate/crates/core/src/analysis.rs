//! Per-vertex and per-edge statistics of a plane graph: face incidence
//! counts by length, boundary edges between consecutive neighbors, exact
//! second neighborhoods, degree classes, and the square graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::planegraph::{PlaneGraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
}

/// Which of the three discharging cases a graph falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeltaCase {
    D6,
    D7,
    D8,
}

impl DeltaCase {
    pub fn from_delta(delta: usize) -> Option<DeltaCase> {
        match delta {
            6 => Some(DeltaCase::D6),
            7 => Some(DeltaCase::D7),
            8 => Some(DeltaCase::D8),
            _ => None,
        }
    }

    pub fn delta(self) -> usize {
        match self {
            DeltaCase::D6 => 6,
            DeltaCase::D7 => 7,
            DeltaCase::D8 => 8,
        }
    }

    /// Palette bound 2Δ+7 for this case.
    pub fn palette_bound(self) -> usize {
        2 * self.delta() + 7
    }
}

/// Degree/triangle class of a vertex, plus the case-specific tags.
///
/// A vertex of degree `k` incident to exactly `d` triangles is a
/// `k(d)`-vertex. `bad4`/`bad5`/`poor` depend on the delta case:
/// bad 4-vertices are 4(1)/4(2) at Δ=6 and 4(1)/4(2)/4(3) at Δ=7,
/// bad 5-vertices are 5(4)/5(5), and poor vertices (Δ=7 only) are
/// 4-vertices and 5(5)-vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassTag {
    pub kd: (usize, usize),
    pub bad4: bool,
    pub bad5: bool,
    pub poor: bool,
}

impl ClassTag {
    pub fn for_case(degree: usize, m3: usize, case: Option<DeltaCase>) -> ClassTag {
        let bad4 = match case {
            Some(DeltaCase::D6) => degree == 4 && (1..=2).contains(&m3),
            Some(DeltaCase::D7) => degree == 4 && (1..=3).contains(&m3),
            _ => false,
        };
        let bad5 = case.is_some() && degree == 5 && m3 >= 4;
        let poor = case == Some(DeltaCase::D7) && (degree == 4 || (degree == 5 && m3 == 5));
        ClassTag {
            kd: (degree, m3),
            bad4,
            bad5,
            poor,
        }
    }

    pub fn render(&self) -> String {
        let mut s = format!("{}({})", self.kd.0, self.kd.1);
        let mut tags = Vec::new();
        if self.bad4 {
            tags.push("bad4");
        }
        if self.bad5 {
            tags.push("bad5");
        }
        if self.poor {
            tags.push("poor");
        }
        if !tags.is_empty() {
            s.push('[');
            s.push_str(&tags.join(","));
            s.push(']');
        }
        s
    }
}

/// Everything the structural lemmas quantify over for one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexProfile {
    pub vertex: VertexId,
    pub degree: usize,
    pub m3: usize,
    pub m4: usize,
    /// Face length -> number of incidence slots of that length around `v`.
    pub mk: BTreeMap<usize, usize>,
    /// E(v): existing edges between rotation-consecutive neighbors.
    pub boundary_edges: BTreeSet<(VertexId, VertexId)>,
    /// Edges of E(v) whose both sides are triangles.
    pub t: usize,
    /// Neighbor degree -> count (n_i(v)).
    pub n_by_degree: BTreeMap<usize, usize>,
    /// Exact |N2(v)|.
    pub d2: usize,
    pub class: ClassTag,
}

impl VertexProfile {
    pub fn n_of_degree(&self, i: usize) -> usize {
        self.n_by_degree.get(&i).copied().unwrap_or(0)
    }

    /// Is this a `k(d)`-vertex with `d` in `lo..=hi`?
    pub fn is_class(&self, k: usize, lo: usize, hi: usize) -> bool {
        self.degree == k && (lo..=hi).contains(&self.m3)
    }

    /// Serialization used by the CLI: `v d m3 m4 t d2 class`.
    pub fn line(&self) -> String {
        format!(
            "{} {} {} {} {} {} {}",
            self.vertex,
            self.degree,
            self.m3,
            self.m4,
            self.t,
            self.d2,
            self.class.render()
        )
    }
}

/// Edge classification under a given delta case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeFlag {
    /// Δ=6: one endpoint is a 5(5)-vertex, the edge lies in two triangles,
    /// and each of those triangles borders a face of length at least 4.
    pub special: bool,
    /// Δ=7/Δ=8: a high-degree vertex with a low-degree neighbor sharing two
    /// common neighbors (the edge lies in two triangles). The low-degree
    /// threshold is 5 under a 7-vertex and 4 under an 8-vertex.
    pub support: bool,
}

/// Exact |N2(v)| by breadth-limited search.
pub fn d2_exact(g: &PlaneGraph, v: VertexId) -> Result<usize, AnalysisError> {
    g.ball2(v)
        .map(|s| s.len())
        .map_err(|_| AnalysisError::UnknownVertex(v))
}

/// The counting upper bound `sum of neighbor degrees - 2*m3 - m4 - t`.
///
/// Diagnostic only: in degenerate overlaps (K4 is the witness) the result
/// can drop below the exact value, so certification never uses it.
pub fn d2_bound(g: &PlaneGraph, v: VertexId) -> Result<i64, AnalysisError> {
    let p = profile(g, v)?;
    let nbr_deg_sum: i64 = g
        .rotation_of(v)
        .iter()
        .map(|&u| g.degree(u) as i64)
        .sum();
    Ok(nbr_deg_sum - 2 * p.m3 as i64 - p.m4 as i64 - p.t as i64)
}

pub fn profile(g: &PlaneGraph, v: VertexId) -> Result<VertexProfile, AnalysisError> {
    if !g.contains(v) {
        return Err(AnalysisError::UnknownVertex(v));
    }
    let nbrs = g.rotation_of(v);
    let degree = nbrs.len();

    let mut mk: BTreeMap<usize, usize> = BTreeMap::new();
    for f in g.faces_incident(v).expect("vertex checked") {
        *mk.entry(f.length()).or_insert(0) += 1;
    }
    let m3 = mk.get(&3).copied().unwrap_or(0);
    let m4 = mk.get(&4).copied().unwrap_or(0);

    let mut boundary_edges = BTreeSet::new();
    if degree >= 2 {
        for i in 0..degree {
            let a = nbrs[i];
            let b = nbrs[(i + 1) % degree];
            if a != b && g.has_edge(a, b) {
                boundary_edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    let t = boundary_edges
        .iter()
        .filter(|&&(a, b)| g.edge_in_two_triangles(a, b))
        .count();

    let mut n_by_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &u in nbrs {
        *n_by_degree.entry(g.degree(u)).or_insert(0) += 1;
    }

    let d2 = g.ball2(v).expect("vertex checked").len();
    let class = ClassTag::for_case(degree, m3, DeltaCase::from_delta(g.max_degree()));

    Ok(VertexProfile {
        vertex: v,
        degree,
        m3,
        m4,
        mk,
        boundary_edges,
        t,
        n_by_degree,
        d2,
        class,
    })
}

/// Profiles of every vertex, keyed by id.
pub fn profile_all(g: &PlaneGraph) -> BTreeMap<VertexId, VertexProfile> {
    g.vertices()
        .map(|v| (v, profile(g, v).expect("vertex exists")))
        .collect()
}

/// Abstract simple graph (no embedding); the output type of [`square`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl SimpleGraph {
    pub fn from_adjacency(adj: BTreeMap<VertexId, BTreeSet<VertexId>>) -> SimpleGraph {
        SimpleGraph { adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn num_edges(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }
}

/// The square graph: same vertices, edges between all pairs at distance
/// at most 2. The degree of `v` in the output equals `d2_exact(v)`.
pub fn square(g: &PlaneGraph) -> SimpleGraph {
    let adj = g
        .vertices()
        .map(|v| (v, g.ball2(v).expect("vertex exists")))
        .collect();
    SimpleGraph { adj }
}

/// Classify the edge `u-v` under the given delta case.
pub fn edge_flags(
    g: &PlaneGraph,
    u: VertexId,
    v: VertexId,
    case: DeltaCase,
) -> Result<EdgeFlag, AnalysisError> {
    if !g.has_edge(u, v) {
        return Err(AnalysisError::NotAnEdge(u, v));
    }
    let special = case == DeltaCase::D6 && is_special_edge(g, u, v);
    let support = match case {
        DeltaCase::D6 => false,
        DeltaCase::D7 => is_support_edge(g, u, v, &[(7, 5)]),
        DeltaCase::D8 => is_support_edge(g, u, v, &[(7, 5), (8, 4)]),
    };
    Ok(EdgeFlag { special, support })
}

pub(crate) fn is_special_edge(g: &PlaneGraph, u: VertexId, v: VertexId) -> bool {
    let five_five =
        |w: VertexId| g.degree(w) == 5 && count_triangles_at(g, w) == 5;
    if !(five_five(u) || five_five(v)) {
        return false;
    }
    if !g.edge_in_two_triangles(u, v) {
        return false;
    }
    let f1 = g.face_of_directed_edge(u, v).unwrap();
    let f2 = g.face_of_directed_edge(v, u).unwrap();
    triangle_borders_big_face(g, f1) && triangle_borders_big_face(g, f2)
}

fn count_triangles_at(g: &PlaneGraph, v: VertexId) -> usize {
    g.faces_incident(v)
        .map(|fs| fs.iter().filter(|f| f.length() == 3).count())
        .unwrap_or(0)
}

fn triangle_borders_big_face(g: &PlaneGraph, fidx: usize) -> bool {
    g.face_record(fidx).directed_edges().any(|(a, b)| {
        g.face_of_directed_edge(b, a)
            .is_some_and(|other| g.face_record(other).length() >= 4)
    })
}

/// High/low degree pairs: `(high, low_max)`.
fn is_support_edge(
    g: &PlaneGraph,
    u: VertexId,
    v: VertexId,
    thresholds: &[(usize, usize)],
) -> bool {
    let fits = |hi: VertexId, lo: VertexId| {
        thresholds
            .iter()
            .any(|&(h, l)| g.degree(hi) == h && g.degree(lo) <= l)
    };
    (fits(u, v) || fits(v, u)) && g.edge_in_two_triangles(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixture;

    /// Independent oracle: all-pairs BFS distances.
    fn bfs_dist(g: &PlaneGraph, from: VertexId) -> BTreeMap<VertexId, usize> {
        let mut dist = BTreeMap::from([(from, 0usize)]);
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &u in g.rotation_of(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(u) {
                    e.insert(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    fn d2_oracle(g: &PlaneGraph, v: VertexId) -> usize {
        bfs_dist(g, v)
            .values()
            .filter(|&&d| d == 1 || d == 2)
            .count()
    }

    #[test]
    fn w6_rim_profile() {
        let g = fixture("W6").unwrap();
        let p = profile(&g, 1).unwrap();
        assert_eq!(p.degree, 3);
        assert_eq!(p.m3, 2);
        assert_eq!(p.m4, 0);
        assert_eq!(p.t, 2);
        assert_eq!(p.d2, 6);
        assert_eq!(p.d2, d2_oracle(&g, 1));
    }

    #[test]
    fn w6_hub_profile() {
        let g = fixture("W6").unwrap();
        let p = profile(&g, 0).unwrap();
        assert_eq!(p.degree, 6);
        assert_eq!(p.m3, 6);
        assert_eq!(p.class.kd, (6, 6));
        assert_eq!(d2_exact(&g, 0).unwrap(), 6);
    }

    #[test]
    fn c5_profile() {
        let g = fixture("C5").unwrap();
        let p = profile(&g, 0).unwrap();
        assert_eq!((p.degree, p.m3, p.t), (2, 0, 0));
        assert_eq!(p.d2, 4);
        assert_eq!(d2_bound(&g, 0).unwrap(), 4);
    }

    #[test]
    fn w6_rim_bound_matches_exact() {
        let g = fixture("W6").unwrap();
        // 6 + 3 + 3 neighbors, minus 2*2 triangles, minus t=2.
        assert_eq!(d2_bound(&g, 1).unwrap(), 6);
        assert_eq!(d2_exact(&g, 1).unwrap(), 6);
    }

    #[test]
    fn k4_bound_under_counts() {
        let g = fixture("K4").unwrap();
        assert_eq!(d2_bound(&g, 0).unwrap(), 0);
        assert_eq!(d2_exact(&g, 0).unwrap(), 3);
    }

    #[test]
    fn mk_sums_to_degree() {
        for name in crate::gen::FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            for v in g.vertices() {
                let p = profile(&g, v).unwrap();
                assert_eq!(p.mk.values().sum::<usize>(), p.degree, "{name}/{v}");
                assert!(p.t <= p.boundary_edges.len());
                assert!(p.boundary_edges.len() <= p.degree);
                let sum_deg: usize =
                    g.rotation_of(v).iter().map(|&u| g.degree(u)).sum();
                assert!(p.d2 <= sum_deg, "{name}/{v}");
                assert_eq!(p.d2, d2_oracle(&g, v), "{name}/{v}");
            }
        }
    }

    #[test]
    fn square_of_c5_is_k5() {
        let sq = square(&fixture("C5").unwrap());
        assert_eq!(sq.num_edges(), 10);
        assert!(sq.vertices().all(|v| sq.degree(v) == 4));
    }

    #[test]
    fn square_of_k4_is_k4() {
        let sq = square(&fixture("K4").unwrap());
        assert_eq!(sq.num_edges(), 6);
    }

    #[test]
    fn square_of_c6_misses_antipodes() {
        // Oracle: brute-force distance table.
        let g = fixture("C6").unwrap();
        let sq = square(&g);
        for v in 0..6usize {
            assert!(!sq.has_edge(v, (v + 3) % 6), "{v}");
            assert_eq!(sq.degree(v), 4);
        }
        assert_eq!(sq.num_edges(), 12);
    }

    #[test]
    fn square_degrees_match_d2() {
        let g = fixture("icosahedron").unwrap();
        let sq = square(&g);
        for v in g.vertices() {
            assert_eq!(sq.degree(v), d2_exact(&g, v).unwrap());
        }
    }

    #[test]
    fn figure1_has_special_edge() {
        let g = fixture("figure1").unwrap();
        let flags = edge_flags(&g, 1, 0, DeltaCase::D6).unwrap();
        assert!(flags.special);
        // Same edge is not special outside the Δ=6 reading.
        assert!(!edge_flags(&g, 1, 0, DeltaCase::D7).unwrap().special);
    }

    #[test]
    fn k4_edges_not_special() {
        let g = fixture("K4").unwrap();
        assert!(!edge_flags(&g, 0, 1, DeltaCase::D6).unwrap().special);
    }

    #[test]
    fn w6_hub_rim_not_support_under_d7() {
        let g = fixture("W6").unwrap();
        let flags = edge_flags(&g, 0, 1, DeltaCase::D7).unwrap();
        assert!(!flags.support);
    }

    #[test]
    fn w7_hub_rim_support_under_d7() {
        let g = fixture("W7").unwrap();
        assert!(edge_flags(&g, 0, 1, DeltaCase::D7).unwrap().support);
    }

    #[test]
    fn not_an_edge_error() {
        let g = fixture("C5").unwrap();
        assert_eq!(
            edge_flags(&g, 0, 2, DeltaCase::D6).unwrap_err(),
            AnalysisError::NotAnEdge(0, 2)
        );
    }

    #[test]
    fn profile_is_pure() {
        let g = fixture("icosahedron").unwrap();
        assert_eq!(profile(&g, 3).unwrap(), profile(&g, 3).unwrap());
    }
}
