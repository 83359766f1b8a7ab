//! Plane graphs as rotation systems.
//!
//! A graph is stored as the clockwise cyclic neighbor order around every
//! vertex. Faces are the orbits of the next-edge-in-face traversal (from a
//! directed edge `u -> v`, the walk continues to the neighbor following `u`
//! in the rotation of `v`) and are derived once at construction. The Euler
//! count `n - m + f = 2` rejects rotation data that does not describe a
//! sphere embedding.
//!
//! Graphs are immutable. The only mutation primitive is [`PlaneGraph::apply_surgery`],
//! which returns a new graph with one vertex deleted and a list of chords
//! embedded in the face left by the deletion.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

pub type VertexId = usize;

/// One face of the embedding, stored as its closed boundary walk.
///
/// `walk[i] -> walk[i+1]` (cyclically) are the directed edges of the face.
/// A bridge appears twice on its face walk, so vertices may repeat. The
/// edgeless single-vertex graph carries one empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRecord {
    walk: Vec<VertexId>,
}

impl FaceRecord {
    /// Face length: the number of edge slots on the boundary walk.
    pub fn length(&self) -> usize {
        self.walk.len()
    }

    /// The boundary walk as a vertex sequence.
    pub fn walk(&self) -> &[VertexId] {
        &self.walk
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.walk.contains(&v)
    }

    /// Directed edges of the boundary walk.
    pub fn directed_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.walk.len();
        (0..n).map(move |i| (self.walk[i], self.walk[(i + 1) % n]))
    }

    /// Undirected boundary edges, normalized `(min, max)`. A bridge shows up twice.
    pub fn undirected_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.directed_edges()
            .map(|(a, b)| (a.min(b), a.max(b)))
    }
}

/// A reduction step: delete one vertex, then embed chords between former
/// neighbors inside the merged face the deletion leaves behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surgery {
    pub delete: VertexId,
    pub chords: Vec<(VertexId, VertexId)>,
}

impl Surgery {
    pub fn new(delete: VertexId, chords: Vec<(VertexId, VertexId)>) -> Self {
        Surgery { delete, chords }
    }
}

/// Result of a surgery: the new graph plus which chords were actually
/// inserted and which were skipped because the edge already existed.
#[derive(Debug, Clone)]
pub struct SurgeryOutcome {
    pub graph: PlaneGraph,
    pub inserted: Vec<(VertexId, VertexId)>,
    pub skipped: Vec<(VertexId, VertexId)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is listed more than once")]
    DuplicateVertex(VertexId),
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    Duplicate { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {vertex} lists {neighbor}, which is not a vertex of the graph")]
    UnknownNeighbor { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {0} lists {1} but {1} does not list {0}")]
    AsymmetricAdjacency(VertexId, VertexId),
    #[error("graph is empty or not connected")]
    NotConnected,
    #[error("rotation system is not a sphere embedding (Euler count {euler}, expected 2)")]
    NotSphere { euler: i64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("chord endpoint {endpoint} is not a neighbor of deleted vertex {center}")]
    ChordEndpointNotNeighbor { center: VertexId, endpoint: VertexId },
    #[error("chord has equal endpoints at vertex {0}")]
    DegenerateChord(VertexId),
    #[error("deleting vertex {0} disconnects the graph")]
    Disconnects(VertexId),
    #[error("chord {0}-{1} cannot be embedded without crossing")]
    CrossingChords(VertexId, VertexId),
}

/// Immutable simple connected plane graph.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
    faces: Vec<FaceRecord>,
    /// Directed edge -> index into `faces`.
    face_at: BTreeMap<(VertexId, VertexId), usize>,
    max_degree: usize,
    num_edges: usize,
}

impl PlaneGraph {
    /// Build from per-vertex clockwise neighbor lists. Validates simplicity,
    /// symmetry, connectivity and the sphere-embedding Euler count.
    pub fn build_from_rotation<I>(spec: I) -> Result<PlaneGraph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, Vec<VertexId>)>,
    {
        let mut rotation = BTreeMap::new();
        for (v, nbrs) in spec {
            if rotation.insert(v, nbrs).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        Self::from_rotation_map(rotation)
    }

    pub(crate) fn from_rotation_map(
        rotation: BTreeMap<VertexId, Vec<VertexId>>,
    ) -> Result<PlaneGraph, GraphError> {
        if rotation.is_empty() {
            return Err(GraphError::NotConnected);
        }
        let mut degree_sum = 0usize;
        for (&v, nbrs) in &rotation {
            let mut seen = BTreeSet::new();
            for &u in nbrs {
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if !seen.insert(u) {
                    return Err(GraphError::Duplicate {
                        vertex: v,
                        neighbor: u,
                    });
                }
                match rotation.get(&u) {
                    None => {
                        return Err(GraphError::UnknownNeighbor {
                            vertex: v,
                            neighbor: u,
                        })
                    }
                    Some(back) => {
                        if !back.contains(&v) {
                            return Err(GraphError::AsymmetricAdjacency(v, u));
                        }
                    }
                }
            }
            degree_sum += nbrs.len();
        }
        if !is_connected(&rotation) {
            return Err(GraphError::NotConnected);
        }
        let num_edges = degree_sum / 2;
        let (faces, face_at) = derive_faces(&rotation);
        let euler =
            rotation.len() as i64 - num_edges as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(GraphError::NotSphere { euler });
        }
        debug_assert_eq!(
            faces.iter().map(FaceRecord::length).sum::<usize>(),
            2 * num_edges
        );
        let max_degree = rotation.values().map(Vec::len).max().unwrap_or(0);
        Ok(PlaneGraph {
            rotation,
            faces,
            face_at,
            max_degree,
            num_edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.rotation.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation.keys().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation.get(&v).map_or(0, Vec::len)
    }

    /// Clockwise neighbor order around `v`.
    pub fn rotation_of(&self, v: VertexId) -> &[VertexId] {
        self.rotation
            .get(&v)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rotation.get(&u).is_some_and(|nbrs| nbrs.contains(&v))
    }

    /// Undirected edges, normalized `(min, max)`, in sorted order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.num_edges);
        for (&v, nbrs) in &self.rotation {
            for &u in nbrs {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn faces(&self) -> &[FaceRecord] {
        &self.faces
    }

    pub fn face_record(&self, idx: usize) -> &FaceRecord {
        &self.faces[idx]
    }

    /// Index of the face lying along the directed edge `u -> v`.
    pub fn face_of_directed_edge(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.face_at.get(&(u, v)).copied()
    }

    /// Face indices of the `d(v)` face slots around `v`, in rotation order.
    /// Slot `i` is the face along the directed edge `v -> rotation(v)[i]`;
    /// a face incident to `v` more than once appears once per incidence.
    pub fn face_slots(&self, v: VertexId) -> Result<Vec<usize>, SurgeryError> {
        let nbrs = self
            .rotation
            .get(&v)
            .ok_or(SurgeryError::UnknownVertex(v))?;
        Ok(nbrs.iter().map(|&u| self.face_at[&(v, u)]).collect())
    }

    /// The face records around `v` in rotation order (see [`Self::face_slots`]).
    pub fn faces_incident(&self, v: VertexId) -> Result<Vec<&FaceRecord>, SurgeryError> {
        Ok(self
            .face_slots(v)?
            .into_iter()
            .map(|i| &self.faces[i])
            .collect())
    }

    /// Both faces bounding the undirected edge `u-v` have length 3.
    pub fn edge_in_two_triangles(&self, u: VertexId, v: VertexId) -> bool {
        match (self.face_at.get(&(u, v)), self.face_at.get(&(v, u))) {
            (Some(&f1), Some(&f2)) => {
                self.faces[f1].length() == 3 && self.faces[f2].length() == 3
            }
            _ => false,
        }
    }

    /// Delete `s.delete` and embed `s.chords` (in order) inside the face the
    /// deletion merges. Chords whose edge already exists are skipped and
    /// recorded. Vertex ids are stable across surgery.
    pub fn apply_surgery(&self, s: &Surgery) -> Result<SurgeryOutcome, SurgeryError> {
        let center = s.delete;
        let center_nbrs: Vec<VertexId> = self
            .rotation
            .get(&center)
            .ok_or(SurgeryError::UnknownVertex(center))?
            .clone();
        for &(a, b) in &s.chords {
            if a == b {
                return Err(SurgeryError::DegenerateChord(a));
            }
            for e in [a, b] {
                if !center_nbrs.contains(&e) {
                    return Err(SurgeryError::ChordEndpointNotNeighbor {
                        center,
                        endpoint: e,
                    });
                }
            }
        }
        if self.rotation.len() == 1 {
            return Err(SurgeryError::Disconnects(center));
        }

        // Directed edges of the faces around `center` that survive deletion;
        // they all land on the single merged face.
        let mut markers: Vec<(VertexId, VertexId)> = Vec::new();
        let mut seen_faces = BTreeSet::new();
        for &u in &center_nbrs {
            let fidx = self.face_at[&(center, u)];
            if seen_faces.insert(fidx) {
                for (x, y) in self.faces[fidx].directed_edges() {
                    if x != center && y != center {
                        markers.push((x, y));
                    }
                }
            }
        }

        let mut rotation = self.rotation.clone();
        rotation.remove(&center);
        for nbrs in rotation.values_mut() {
            nbrs.retain(|&u| u != center);
        }
        if !is_connected(&rotation) {
            return Err(SurgeryError::Disconnects(center));
        }

        let mut inserted = Vec::new();
        let mut skipped = Vec::new();
        if !s.chords.is_empty() {
            let (faces, face_at) = derive_faces(&rotation);
            let merged_idx = markers
                .first()
                .map(|de| face_at[de])
                .expect("merged face has surviving boundary edges");
            debug_assert!(markers.iter().all(|de| face_at[de] == merged_idx));
            // Fragments of the merged face produced by successive chords.
            let mut fragments: Vec<Vec<VertexId>> =
                vec![faces[merged_idx].walk.clone()];
            for &(a, b) in &s.chords {
                if rotation[&a].contains(&b) {
                    skipped.push((a, b));
                    continue;
                }
                let frag = fragments
                    .iter()
                    .position(|w| w.contains(&a) && w.contains(&b))
                    .ok_or(SurgeryError::CrossingChords(a, b))?;
                let walk = fragments.swap_remove(frag);
                let len = walk.len();
                let i = walk.iter().position(|&x| x == a).unwrap();
                let j = walk.iter().position(|&x| x == b).unwrap();
                // Insert each endpoint into the other's rotation just after
                // the walk predecessor at that corner, i.e. inside this face.
                let pred_a = walk[(i + len - 1) % len];
                let pred_b = walk[(j + len - 1) % len];
                insert_after(rotation.get_mut(&a).unwrap(), pred_a, b);
                insert_after(rotation.get_mut(&b).unwrap(), pred_b, a);
                let (lo, hi) = (i.min(j), i.max(j));
                let w1: Vec<VertexId> = walk[lo..=hi].to_vec();
                let mut w2: Vec<VertexId> = walk[hi..].to_vec();
                w2.extend_from_slice(&walk[..=lo]);
                fragments.push(w1);
                fragments.push(w2);
                inserted.push((a, b));
            }
        }

        let graph = PlaneGraph::from_rotation_map(rotation).map_err(|e| match e {
            GraphError::NotSphere { .. } => {
                let &(a, b) = inserted.last().unwrap_or(&(center, center));
                SurgeryError::CrossingChords(a, b)
            }
            _ => unreachable!("surgery produced invalid graph: {e}"),
        })?;
        Ok(SurgeryOutcome {
            graph,
            inserted,
            skipped,
        })
    }

    /// Exact set of vertices at distance 1 or 2 from `v`.
    pub fn ball2(&self, v: VertexId) -> Result<BTreeSet<VertexId>, SurgeryError> {
        let nbrs = self
            .rotation
            .get(&v)
            .ok_or(SurgeryError::UnknownVertex(v))?;
        let mut out = BTreeSet::new();
        for &u in nbrs {
            out.insert(u);
            for &w in &self.rotation[&u] {
                if w != v {
                    out.insert(w);
                }
            }
        }
        Ok(out)
    }

    /// Distance between `u` and `v` is at most 2 (u != v).
    pub fn within_two(&self, u: VertexId, v: VertexId) -> bool {
        if self.has_edge(u, v) {
            return true;
        }
        let (small, other) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.rotation_of(small)
            .iter()
            .any(|&w| self.has_edge(w, other))
    }
}

fn insert_after(rot: &mut Vec<VertexId>, anchor: VertexId, new: VertexId) {
    let pos = rot
        .iter()
        .position(|&x| x == anchor)
        .expect("anchor neighbor present");
    rot.insert(pos + 1, new);
}

fn is_connected(rotation: &BTreeMap<VertexId, Vec<VertexId>>) -> bool {
    let Some((&start, _)) = rotation.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &u in &rotation[&v] {
            if seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen.len() == rotation.len()
}

/// Face orbits of the rotation system. Deterministic: each face starts at its
/// smallest directed edge and faces are listed in order of those edges.
fn derive_faces(
    rotation: &BTreeMap<VertexId, Vec<VertexId>>,
) -> (Vec<FaceRecord>, BTreeMap<(VertexId, VertexId), usize>) {
    let mut pos: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for (&v, nbrs) in rotation {
        for (i, &u) in nbrs.iter().enumerate() {
            pos.insert((v, u), i);
        }
    }
    let mut faces = Vec::new();
    let mut face_at = BTreeMap::new();
    let keys: Vec<(VertexId, VertexId)> = pos.keys().copied().collect();
    for &start in &keys {
        if face_at.contains_key(&start) {
            continue;
        }
        let idx = faces.len();
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            face_at.insert(cur, idx);
            walk.push(cur.0);
            let (u, v) = cur;
            let nbrs = &rotation[&v];
            let next = nbrs[(pos[&(v, u)] + 1) % nbrs.len()];
            cur = (v, next);
            if cur == start {
                break;
            }
        }
        faces.push(FaceRecord { walk });
    }
    if faces.is_empty() && rotation.len() == 1 {
        // Single vertex on the sphere: one face with an empty boundary.
        faces.push(FaceRecord { walk: Vec::new() });
    }
    (faces, face_at)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlaneGraph {
        // Tetrahedron: vertex 0 inside triangle 1-2-3.
        PlaneGraph::build_from_rotation(vec![
            (0, vec![1, 2, 3]),
            (1, vec![0, 3, 2]),
            (2, vec![0, 1, 3]),
            (3, vec![0, 2, 1]),
        ])
        .unwrap()
    }

    fn w6() -> PlaneGraph {
        crate::gen::fixture("W6").unwrap()
    }

    #[test]
    fn k4_counts() {
        let g = k4();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 6);
        assert_eq!(g.num_faces(), 4);
        assert!(g.faces().iter().all(|f| f.length() == 3));
    }

    #[test]
    fn w6_counts() {
        let g = w6();
        assert_eq!(g.num_vertices(), 7);
        assert_eq!(g.num_edges(), 12);
        assert_eq!(g.num_faces(), 7);
        let mut lens: Vec<usize> = g.faces().iter().map(FaceRecord::length).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 3, 3, 3, 3, 6]);
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let err = PlaneGraph::build_from_rotation(vec![
            (1, vec![2]),
            (2, vec![]),
        ])
        .unwrap_err();
        assert_eq!(err, GraphError::AsymmetricAdjacency(1, 2));
    }

    #[test]
    fn self_loop_and_duplicate_rejected() {
        assert_eq!(
            PlaneGraph::build_from_rotation(vec![(0, vec![0])]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            PlaneGraph::build_from_rotation(vec![(0, vec![1, 1]), (1, vec![0])])
                .unwrap_err(),
            GraphError::Duplicate {
                vertex: 0,
                neighbor: 1
            }
        );
    }

    #[test]
    fn disconnected_rejected() {
        let err = PlaneGraph::build_from_rotation(vec![
            (0, vec![1]),
            (1, vec![0]),
            (2, vec![3]),
            (3, vec![2]),
        ])
        .unwrap_err();
        assert_eq!(err, GraphError::NotConnected);
    }

    #[test]
    fn bad_orientation_rejected() {
        // K4 with one rotation flipped is not a sphere embedding.
        let err = PlaneGraph::build_from_rotation(vec![
            (0, vec![1, 2, 3]),
            (1, vec![0, 3, 2]),
            (2, vec![0, 1, 3]),
            (3, vec![0, 1, 2]),
        ])
        .unwrap_err();
        assert!(matches!(err, GraphError::NotSphere { .. }));
    }

    #[test]
    fn single_vertex_graph() {
        let g = PlaneGraph::build_from_rotation(vec![(7, vec![])]).unwrap();
        assert_eq!(g.num_vertices(), 1);
        assert_eq!(g.num_faces(), 1);
        assert_eq!(g.faces()[0].length(), 0);
    }

    #[test]
    fn w6_face_slots() {
        let g = w6();
        // Hub 0: six triangles.
        let hub = g.faces_incident(0).unwrap();
        assert_eq!(hub.len(), 6);
        assert!(hub.iter().all(|f| f.length() == 3));
        // Rim vertex: two triangles and the hexagon.
        let rim = g.faces_incident(1).unwrap();
        let mut lens: Vec<usize> = rim.iter().map(|f| f.length()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 6]);
    }

    #[test]
    fn c5_face_slots() {
        let g = crate::gen::fixture("C5").unwrap();
        let fs = g.faces_incident(0).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|f| f.length() == 5));
    }

    #[test]
    fn surgery_delete_hub() {
        let g = w6();
        let out = g.apply_surgery(&Surgery::new(0, vec![])).unwrap();
        assert_eq!(out.graph.num_vertices(), 6);
        assert_eq!(out.graph.num_edges(), 6);
        assert_eq!(out.graph.num_faces(), 2);
        assert!(out.inserted.is_empty());
    }

    #[test]
    fn surgery_chord_c4_to_c3() {
        let c4 = PlaneGraph::build_from_rotation(vec![
            (0, vec![1, 3]),
            (1, vec![0, 2]),
            (2, vec![1, 3]),
            (3, vec![2, 0]),
        ])
        .unwrap();
        let out = c4.apply_surgery(&Surgery::new(0, vec![(1, 3)])).unwrap();
        assert_eq!(out.graph.num_vertices(), 3);
        assert_eq!(out.graph.num_edges(), 3);
        assert_eq!(out.inserted, vec![(1, 3)]);
    }

    #[test]
    fn surgery_skips_existing_chord() {
        // C4 plus the diagonal 1-3: deleting 0 and chording 1-3 is a no-op chord.
        let g = PlaneGraph::build_from_rotation(vec![
            (0, vec![1, 3]),
            (1, vec![2, 3, 0]),
            (2, vec![1, 3]),
            (3, vec![0, 1, 2]),
        ])
        .unwrap();
        let out = g.apply_surgery(&Surgery::new(0, vec![(1, 3)])).unwrap();
        assert_eq!(out.skipped, vec![(1, 3)]);
        assert!(out.inserted.is_empty());
        assert_eq!(out.graph.num_vertices(), 3);
        assert_eq!(out.graph.num_edges(), 3);
    }

    #[test]
    fn surgery_disconnect_detected() {
        // Path 0-1-2: deleting the middle vertex disconnects.
        let p3 = PlaneGraph::build_from_rotation(vec![
            (0, vec![1]),
            (1, vec![0, 2]),
            (2, vec![1]),
        ])
        .unwrap();
        assert_eq!(
            p3.apply_surgery(&Surgery::new(1, vec![])).unwrap_err(),
            SurgeryError::Disconnects(1)
        );
    }

    #[test]
    fn surgery_crossing_chords_detected() {
        // Wheel on 4 rim vertices; chords 1-3 and 2-4 inside the hole cross.
        let w4 = PlaneGraph::build_from_rotation(vec![
            (0, vec![1, 2, 3, 4]),
            (1, vec![0, 4, 2]),
            (2, vec![0, 1, 3]),
            (3, vec![0, 2, 4]),
            (4, vec![0, 3, 1]),
        ])
        .unwrap();
        let err = w4
            .apply_surgery(&Surgery::new(0, vec![(1, 3), (2, 4)]))
            .unwrap_err();
        assert_eq!(err, SurgeryError::CrossingChords(2, 4));
    }

    #[test]
    fn surgery_fan_is_noncrossing() {
        let g = crate::gen::fixture("W7").unwrap();
        // Fan all chords from one rim vertex across the hole.
        let rot = g.rotation_of(0).to_vec();
        assert_eq!(rot.len(), 7);
        let anchor = rot[0];
        let chords: Vec<(VertexId, VertexId)> =
            rot[2..6].iter().map(|&u| (anchor, u)).collect();
        let out = g.apply_surgery(&Surgery::new(0, chords)).unwrap();
        // anchor was adjacent to its two rim neighbors already
        assert_eq!(out.inserted.len(), 4);
        assert_eq!(out.graph.degree(anchor), 6);
    }

    #[test]
    fn vertex_ids_stable_across_surgery() {
        let g = w6();
        let out = g.apply_surgery(&Surgery::new(3, vec![])).unwrap();
        let mut expect: Vec<VertexId> = g.vertices().filter(|&v| v != 3).collect();
        expect.sort_unstable();
        assert_eq!(out.graph.vertices().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn face_derivation_deterministic() {
        let a = w6();
        let b = w6();
        assert_eq!(a.faces(), b.faces());
    }
}
