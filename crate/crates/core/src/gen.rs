//! Deterministic plane-graph generation: named fixtures, random maximal
//! triangulations grown by vertex insertion plus diagonal flips, and edge
//! subsampling.
//!
//! All randomness comes from a splitmix-style 64-bit generator fixed by its
//! update constants (see [`SplitMix64`]), so identical specs produce byte
//! identical graphs on every platform.

use std::collections::BTreeSet;

use crate::planegraph::{GraphError, PlaneGraph, VertexId};
use thiserror::Error;

/// 64-bit splitmix generator.
///
/// State update: `s += 0x9E3779B97F4A7C15`; output mixing:
/// `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
/// `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`, `z ^ (z >> 31)`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` (modulo reduction; `bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform draw from `[0, 1)` using the top 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenMode {
    Triangulation,
    Subsampled,
}

/// Specification for one deterministic generator stream.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub seed: u64,
    pub n_target: usize,
    pub mode: GenMode,
    pub delta_filter: Option<BTreeSet<usize>>,
    pub edge_keep_probability: f64,
    /// Diagonal flips per edge after growth.
    pub flips_per_edge: usize,
}

impl GenSpec {
    pub fn new(seed: u64, n_target: usize, mode: GenMode) -> Self {
        GenSpec {
            seed,
            n_target,
            mode,
            delta_filter: None,
            edge_keep_probability: 0.8,
            flips_per_edge: 10,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("bad generator spec: {0}")]
    BadSpec(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("delta filter not satisfied after {0} attempts")]
    FilterExhausted(usize),
    #[error("generator produced an invalid graph: {0}")]
    Invalid(#[from] GraphError),
}

/// Maximal planar graph on `spec.n_target` vertices: grow from K4 by
/// inserting each new vertex into a uniformly random face, then apply
/// `flips_per_edge * m` random diagonal flips.
pub fn random_triangulation(spec: &GenSpec) -> Result<PlaneGraph, GenError> {
    let mut rng = SplitMix64::new(spec.seed);
    triangulation_with(&mut rng, spec.n_target, spec.flips_per_edge)
}

pub(crate) fn triangulation_with(
    rng: &mut SplitMix64,
    n_target: usize,
    flips_per_edge: usize,
) -> Result<PlaneGraph, GenError> {
    if n_target < 4 {
        return Err(GenError::BadSpec(format!(
            "triangulation needs n >= 4, got {n_target}"
        )));
    }
    // Tetrahedron seed graph.
    let mut rot: Vec<Vec<VertexId>> = vec![
        vec![1, 2, 3],
        vec![0, 3, 2],
        vec![0, 1, 3],
        vec![0, 2, 1],
    ];
    for w in 4..n_target {
        let (a, b) = random_directed_edge(rng, &rot);
        // The face along a->b is the triangle a -> b -> c.
        let c = face_third(&rot, a, b);
        insert_in_triangle(&mut rot, a, b, c, w);
    }
    let m = rot.iter().map(Vec::len).sum::<usize>() / 2;
    for _ in 0..flips_per_edge * m {
        let (u, v) = random_directed_edge(rng, &rot);
        try_flip(&mut rot, u, v);
    }
    let g = PlaneGraph::build_from_rotation(
        rot.into_iter().enumerate().collect::<Vec<_>>(),
    )?;
    debug_assert_eq!(g.num_edges(), 3 * g.num_vertices() - 6);
    Ok(g)
}

fn random_directed_edge(rng: &mut SplitMix64, rot: &[Vec<VertexId>]) -> (VertexId, VertexId) {
    let total: usize = rot.iter().map(Vec::len).sum();
    let mut r = rng.below(total);
    for (v, nbrs) in rot.iter().enumerate() {
        if r < nbrs.len() {
            return (v, nbrs[r]);
        }
        r -= nbrs.len();
    }
    unreachable!()
}

fn succ(rot: &[Vec<VertexId>], v: VertexId, u: VertexId) -> VertexId {
    let nbrs = &rot[v];
    let i = nbrs.iter().position(|&x| x == u).unwrap();
    nbrs[(i + 1) % nbrs.len()]
}

/// Third corner of the triangle along the directed edge `a -> b`.
fn face_third(rot: &[Vec<VertexId>], a: VertexId, b: VertexId) -> VertexId {
    succ(rot, b, a)
}

fn insert_after_vec(rot: &mut [Vec<VertexId>], v: VertexId, anchor: VertexId, new: VertexId) {
    let nbrs = &mut rot[v];
    let i = nbrs.iter().position(|&x| x == anchor).unwrap();
    nbrs.insert(i + 1, new);
}

fn insert_in_triangle(
    rot: &mut Vec<Vec<VertexId>>,
    a: VertexId,
    b: VertexId,
    c: VertexId,
    w: VertexId,
) {
    debug_assert_eq!(rot.len(), w);
    // New vertex sees the face walk reversed; each corner gets `w` spliced
    // in right after its walk predecessor.
    rot.push(vec![c, b, a]);
    insert_after_vec(rot, a, c, w);
    insert_after_vec(rot, b, a, w);
    insert_after_vec(rot, c, b, w);
}

fn try_flip(rot: &mut [Vec<VertexId>], u: VertexId, v: VertexId) {
    if rot[u].len() <= 3 || rot[v].len() <= 3 {
        return;
    }
    let x = face_third(rot, u, v);
    let y = face_third(rot, v, u);
    if x == y || rot[x].contains(&y) {
        return;
    }
    rot[u].retain(|&z| z != v);
    rot[v].retain(|&z| z != u);
    // Merged quadrilateral walk is v -> x -> u -> y.
    insert_after_vec(rot, x, v, y);
    insert_after_vec(rot, y, u, x);
}

/// Delete each edge independently with probability
/// `1 - spec.edge_keep_probability`, skipping deletions that would
/// disconnect the graph. The rotation system is inherited.
pub fn subsample(g: &PlaneGraph, spec: &GenSpec) -> PlaneGraph {
    let mut rng = SplitMix64::new(spec.seed);
    subsample_with(g, &mut rng, spec.edge_keep_probability)
}

pub(crate) fn subsample_with(
    g: &PlaneGraph,
    rng: &mut SplitMix64,
    keep_probability: f64,
) -> PlaneGraph {
    let mut rot: std::collections::BTreeMap<VertexId, Vec<VertexId>> = g
        .vertices()
        .map(|v| (v, g.rotation_of(v).to_vec()))
        .collect();
    for (a, b) in g.edges() {
        if rng.unit() < keep_probability {
            continue;
        }
        let mut trial = rot.clone();
        trial.get_mut(&a).unwrap().retain(|&z| z != b);
        trial.get_mut(&b).unwrap().retain(|&z| z != a);
        if connected(&trial) {
            rot = trial;
        }
    }
    PlaneGraph::from_rotation_map(rot).expect("edge deletion keeps the embedding valid")
}

fn connected(rot: &std::collections::BTreeMap<VertexId, Vec<VertexId>>) -> bool {
    let Some((&start, _)) = rot.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in &rot[&v] {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == rot.len()
}

/// Stream of generated graphs driven by a single RNG stream; applies the
/// delta filter by rejection (triangulation mode) or by extra subsampling
/// rounds followed by rejection (subsampled mode).
pub struct GraphStream {
    spec: GenSpec,
    rng: SplitMix64,
}

impl GraphStream {
    pub fn new(spec: GenSpec) -> Self {
        let rng = SplitMix64::new(spec.seed);
        GraphStream { spec, rng }
    }

    pub fn next_graph(&mut self) -> Result<PlaneGraph, GenError> {
        const ATTEMPTS: usize = 2000;
        for _ in 0..ATTEMPTS {
            let tri = triangulation_with(
                &mut self.rng,
                self.spec.n_target,
                self.spec.flips_per_edge,
            )?;
            let mut g = match self.spec.mode {
                GenMode::Triangulation => tri,
                GenMode::Subsampled => {
                    subsample_with(&tri, &mut self.rng, self.spec.edge_keep_probability)
                }
            };
            let Some(filter) = &self.spec.delta_filter else {
                return Ok(g);
            };
            if self.spec.mode == GenMode::Subsampled {
                let max_delta = filter.iter().max().copied().unwrap_or(0);
                let mut rounds = 0;
                while g.max_degree() > max_delta && rounds < 40 {
                    g = subsample_with(&g, &mut self.rng, 0.92);
                    rounds += 1;
                }
            }
            if filter.contains(&g.max_degree()) {
                return Ok(g);
            }
        }
        Err(GenError::FilterExhausted(ATTEMPTS))
    }
}

/// Canonical named fixtures with fixed rotations.
///
/// Names: `K4`, `C5`, `C6`, `W6`, `W7`, `octahedron`, `icosahedron`,
/// `figure1`, `grid_{a}x{b}`.
pub fn fixture(name: &str) -> Result<PlaneGraph, GenError> {
    if let Some(dims) = name.strip_prefix("grid_") {
        let (a, b) = dims
            .split_once('x')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
            .ok_or_else(|| GenError::UnknownFixture(name.to_string()))?;
        return grid(a, b);
    }
    let rot: Vec<(VertexId, Vec<VertexId>)> = match name {
        "K4" => vec![
            (0, vec![1, 2, 3]),
            (1, vec![0, 3, 2]),
            (2, vec![0, 1, 3]),
            (3, vec![0, 2, 1]),
        ],
        "C5" => cycle(5),
        "C6" => cycle(6),
        "W6" => wheel(6),
        "W7" => wheel(7),
        "octahedron" => {
            let ring = |k: usize| -> Vec<VertexId> {
                let next = 1 + (k % 4);
                let prev = 1 + ((k + 2) % 4);
                vec![next, 0, prev, 5]
            };
            vec![
                (0, vec![1, 2, 3, 4]),
                (1, ring(1)),
                (2, ring(2)),
                (3, ring(3)),
                (4, ring(4)),
                (5, vec![4, 3, 2, 1]),
            ]
        }
        "icosahedron" => icosahedron(),
        "figure1" => figure1(),
        _ => return Err(GenError::UnknownFixture(name.to_string())),
    };
    Ok(PlaneGraph::build_from_rotation(rot)?)
}

pub const FIXTURE_NAMES: &[&str] = &[
    "K4",
    "C5",
    "C6",
    "W6",
    "W7",
    "octahedron",
    "icosahedron",
    "figure1",
    "grid_2x3",
    "grid_3x3",
];

fn cycle(n: usize) -> Vec<(VertexId, Vec<VertexId>)> {
    (0..n)
        .map(|i| (i, vec![(i + n - 1) % n, (i + 1) % n]))
        .collect()
}

fn wheel(rim: usize) -> Vec<(VertexId, Vec<VertexId>)> {
    let mut rot = vec![(0, (1..=rim).collect::<Vec<_>>())];
    for k in 1..=rim {
        let next = 1 + (k % rim);
        let prev = 1 + ((k + rim - 2) % rim);
        rot.push((k, vec![next, 0, prev]));
    }
    rot
}

fn icosahedron() -> Vec<(VertexId, Vec<VertexId>)> {
    // Top 0, upper ring 1..=5, lower ring 6..=10, bottom 11. Upper vertex
    // 1+k sits over lower vertices 6+((k+4)%5) and 6+k.
    let up = |k: usize| 1 + (k % 5);
    let lo = |k: usize| 6 + (k % 5);
    let mut rot: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    rot.push((0, (1..=5).collect()));
    for k in 0..5 {
        rot.push((
            up(k),
            vec![up(k + 1), 0, up(k + 4), lo(k + 4), lo(k)],
        ));
    }
    for k in 0..5 {
        rot.push((
            lo(k),
            vec![lo(k + 1), up(k + 1), up(k), lo(k + 4), 11],
        ));
    }
    rot.push((11, vec![10, 9, 8, 7, 6]));
    rot
}

fn figure1() -> Vec<(VertexId, Vec<VertexId>)> {
    // Closed plane graph around one special edge: vertex 0 is the 5(5)
    // endpoint, vertex 1 its degree-6 partner; the two triangles on edge
    // 0-1 each border a 4-face (8 and 9 close those quads), and 10 is a
    // pendant that pushes the maximum degree to 6.
    vec![
        (0, vec![5, 3, 1, 2, 4]),      // v: u4 u2 u u1 u3
        (1, vec![0, 3, 7, 10, 6, 2]),  // u: v u2 v3 v2 v1 u1
        (2, vec![4, 0, 1, 8]),         // u1: u3 v u t
        (3, vec![9, 1, 0, 5]),         // u2: s u v u4
        (4, vec![0, 2, 5]),            // u3: v u1 u4
        (5, vec![3, 0, 4]),            // u4: u2 v u3
        (6, vec![8, 1]),               // v1: t u
        (7, vec![1, 9]),               // v3: u s
        (8, vec![2, 6]),               // t: u1 v1
        (9, vec![7, 3]),               // s: v3 u2
        (10, vec![1]),                 // v2: u
    ]
}

fn grid(a: usize, b: usize) -> Result<PlaneGraph, GenError> {
    if a < 1 || b < 1 || a * b < 2 {
        return Err(GenError::BadSpec(format!("grid_{a}x{b} too small")));
    }
    let id = |r: usize, c: usize| r * b + c;
    let mut rot = Vec::new();
    for r in 0..a {
        for c in 0..b {
            // Clockwise: north, east, south, west.
            let mut nbrs = Vec::new();
            if r > 0 {
                nbrs.push(id(r - 1, c));
            }
            if c + 1 < b {
                nbrs.push(id(r, c + 1));
            }
            if r + 1 < a {
                nbrs.push(id(r + 1, c));
            }
            if c > 0 {
                nbrs.push(id(r, c - 1));
            }
            rot.push((id(r, c), nbrs));
        }
    }
    Ok(PlaneGraph::build_from_rotation(rot)?)
}
