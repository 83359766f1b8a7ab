//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The shared corpus mixes unfiltered triangulations with subsampled
//! graphs filtered to maximum degree 6, 7 and 8, up to 300 vertices.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use d2tk_core::analysis::{self, DeltaCase};
use d2tk_core::catalog;
use d2tk_core::color;
use d2tk_core::discharge::{self, charge, Element};
use d2tk_core::gen::{self, GenMode, GenSpec, GraphStream};
use d2tk_core::planegraph::{PlaneGraph, VertexId};
use d2tk_core::rotg;

struct Corpus {
    /// Unfiltered triangulations, 10..=60 vertices.
    triangulations: Vec<PlaneGraph>,
    /// Subsampled graphs with maximum degree exactly 6, 7 or 8.
    filtered: Vec<PlaneGraph>,
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut triangulations = Vec::new();
        for i in 0..400u64 {
            let n = 10 + (i as usize * 7) % 51;
            let spec = GenSpec::new(100_000 + i, n, GenMode::Triangulation);
            triangulations.push(gen::random_triangulation(&spec).unwrap());
        }
        let mut filtered = Vec::new();
        for delta in [6usize, 7, 8] {
            let batches = [
                (20usize, 140usize, 0.75f64),
                (40, 120, 0.8),
                (80, 60, 0.85),
                (150, 12, 0.88),
                (250, 3, 0.9),
            ];
            for (bi, &(n, count, keep)) in batches.iter().enumerate() {
                let mut spec = GenSpec::new(
                    200_000 + delta as u64 * 1000 + bi as u64,
                    n,
                    GenMode::Subsampled,
                );
                spec.edge_keep_probability = keep;
                spec.delta_filter = Some([delta].into());
                let mut stream = GraphStream::new(spec);
                for _ in 0..count {
                    filtered.push(stream.next_graph().unwrap());
                }
            }
        }
        Corpus {
            triangulations,
            filtered,
        }
    })
}

fn case_of(g: &PlaneGraph) -> Option<DeltaCase> {
    DeltaCase::from_delta(g.max_degree())
}

/// Criterion 1: exact charge identity and conservation over 1000+ graphs.
#[test]
fn criterion_1_charge_identity_and_conservation() {
    let start = Instant::now();
    let c = corpus();
    let minus_eight = charge(-8, 1);
    let mut graphs = 0usize;
    let mut discharged = 0usize;
    for g in c.triangulations.iter().chain(&c.filtered) {
        assert!(g.num_vertices() <= 300);
        graphs += 1;
        let initial = discharge::initial_charges(g);
        assert_eq!(initial.total_initial(), minus_eight, "initial sum");
        if let Some(case) = case_of(g) {
            let ledger = discharge::apply_rules(g, &discharge::rule_set(case)).unwrap();
            assert_eq!(ledger.total_initial(), minus_eight);
            assert_eq!(ledger.total_final(), minus_eight);
            discharged += 1;
        }
    }
    assert!(graphs >= 1000, "corpus has {graphs} graphs");
    assert!(discharged >= 1000, "{discharged} graphs were discharged");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 30,
        "conservation sweep took {elapsed:?}"
    );
    println!(
        "[PASS] criterion 1: charge identity -8 and conservation on {graphs} graphs \
         ({discharged} discharged) in {elapsed:?}"
    );
}

/// Criterion 2: the worked W6 ledger, exactly.
#[test]
fn criterion_2_worked_w6_ledger() {
    let g = gen::fixture("W6").unwrap();
    let ledger = discharge::apply_rules(&g, &discharge::rule_set(DeltaCase::D6)).unwrap();
    assert_eq!(ledger.fin[&Element::Vertex(0)], charge(0, 1), "hub");
    for v in 1..=6usize {
        assert_eq!(ledger.fin[&Element::Vertex(v)], charge(-4, 3), "rim {v}");
    }
    for (i, f) in g.faces().iter().enumerate() {
        assert_eq!(
            ledger.fin[&Element::Face(i)],
            charge(0, 1),
            "face {i} of length {}",
            f.length()
        );
        // Every 3-face collects exactly 3 * 1/3 on top of its -1.
        if f.length() == 3 {
            let collected: discharge::Charge = ledger
                .transfers
                .iter()
                .filter(|t| t.rule == "R1" && t.to == Element::Face(i))
                .map(|t| t.amount.clone())
                .sum();
            assert_eq!(collected, charge(1, 1));
            assert_eq!(ledger.initial[&Element::Face(i)], charge(-1, 1));
        }
    }
    assert_eq!(ledger.total_final(), charge(-8, 1));
    println!("[PASS] criterion 2: W6 ledger reproduces hub 0, faces 0, rim -4/3 exactly");
}

/// Criterion 3: a configuration fires on every filtered graph, and negative
/// charge never occurs without one.
#[test]
fn criterion_3_detector_completeness() {
    let c = corpus();
    assert!(c.filtered.len() >= 1000, "filtered corpus: {}", c.filtered.len());
    let mut exceptions = Vec::new();
    for (i, g) in c.filtered.iter().enumerate() {
        let case = case_of(g).expect("filtered corpus");
        let configs = catalog::detect(g, case).unwrap();
        let ledger = discharge::apply_rules(g, &discharge::rule_set(case)).unwrap();
        let negatives = discharge::negativity_report(&ledger);
        if configs.is_empty() {
            exceptions.push((i, "no configuration", g));
        }
        if !negatives.is_empty() && configs.is_empty() {
            exceptions.push((i, "negative charge without configuration", g));
        }
    }
    for (i, why, g) in &exceptions {
        let path = format!("{}/completeness_{i}.rotg", persist_dir());
        std::fs::write(&path, rotg::write(g)).unwrap();
        eprintln!("exception: graph {i}: {why} (saved to {path})");
    }
    assert!(exceptions.is_empty(), "{} exceptions", exceptions.len());
    println!(
        "[PASS] criterion 3: detect fired on all {} filtered graphs; \
         negativity always implied a configuration",
        c.filtered.len()
    );
}

/// Criterion 4: every detected configuration certifies.
#[test]
fn criterion_4_reducibility_certificates() {
    let c = corpus();
    let mut checked = 0usize;
    let mut exceptions = Vec::new();
    for (i, g) in c.filtered.iter().enumerate() {
        let case = case_of(g).expect("filtered corpus");
        for config in catalog::detect(g, case).unwrap() {
            checked += 1;
            match catalog::certify(g, &config) {
                Ok(cert)
                    if cert.proper && cert.shrinks && cert.headroom >= 0 && cert.delta_ok => {}
                Ok(cert) => exceptions.push((i, config.line(), format!("{cert:?}"))),
                Err(e) => exceptions.push((i, config.line(), e.to_string())),
            }
        }
    }
    for (i, line, why) in &exceptions {
        let path = format!("{}/certificate_{i}.rotg", persist_dir());
        std::fs::write(&path, rotg::write(&c.filtered[*i])).unwrap();
        eprintln!("exception: graph {i}: {line}: {why} (saved to {path})");
    }
    assert!(exceptions.is_empty(), "{} exceptions", exceptions.len());
    println!(
        "[PASS] criterion 4: all {checked} detected configurations certify \
         (proper, shrinking, headroom >= 0, degree kept)"
    );
}

/// Criterion 5: constructive coloring stays within 2Δ+7 on 200 graphs.
#[test]
fn criterion_5_constructive_coloring() {
    let c = corpus();
    let eligible: Vec<&PlaneGraph> = c
        .filtered
        .iter()
        .filter(|g| g.num_vertices() <= 200)
        .collect();
    // Interleave the three delta batches for a mixed sample.
    let mut sample = Vec::new();
    let third = eligible.len() / 3;
    for i in 0..third {
        for part in 0..3 {
            if let Some(g) = eligible.get(part * third + i) {
                sample.push(*g);
            }
        }
        if sample.len() >= 200 {
            break;
        }
    }
    assert!(sample.len() >= 200, "sample: {}", sample.len());
    for (i, g) in sample.iter().take(200).enumerate() {
        let bound = 2 * g.max_degree() + 7;
        let t = Instant::now();
        let cert = color::color_constructive(g)
            .unwrap_or_else(|e| panic!("graph {i}: {e}"));
        let elapsed = t.elapsed();
        assert!(cert.valid, "graph {i} invalid coloring");
        let (ok, _) = color::validate(g, &cert.assignment).unwrap();
        assert!(ok, "graph {i} failed revalidation");
        assert!(
            cert.palette_size <= bound,
            "graph {i}: palette {} > {bound}",
            cert.palette_size
        );
        assert!(elapsed.as_secs() < 60, "graph {i} took {elapsed:?}");
    }
    println!(
        "[PASS] criterion 5: 200 corpus graphs colored and machine-validated \
         within 2Δ+7, each well under 60s"
    );
}

/// Independent oracle: smallest k admitting a proper coloring of the square
/// graph, by full enumeration of assignments.
fn chi2_bruteforce(g: &PlaneGraph) -> usize {
    let sq = analysis::square(g);
    let ids: Vec<VertexId> = sq.vertices().collect();
    let n = ids.len();
    'k: for k in 1..=n {
        let mut counter = vec![0usize; n];
        loop {
            let ok = (0..n).all(|i| {
                (i + 1..n).all(|j| counter[i] != counter[j] || !sq.has_edge(ids[i], ids[j]))
            });
            if ok {
                return k;
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    continue 'k;
                }
                counter[pos] += 1;
                if counter[pos] < k {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
        }
    }
    unreachable!()
}

/// Criterion 6: the exact solver equals brute-force enumeration on every
/// fixture with at most 8 vertices.
#[test]
fn criterion_6_oracle_equivalence() {
    let fixtures = [
        "K4",
        "C5",
        "C6",
        "W6",
        "W7",
        "octahedron",
        "grid_2x3",
        "grid_2x4",
        "grid_1x5",
    ];
    // The enumeration oracle fixes the three named values first.
    assert_eq!(chi2_bruteforce(&gen::fixture("C5").unwrap()), 5);
    assert_eq!(chi2_bruteforce(&gen::fixture("K4").unwrap()), 4);
    assert_eq!(chi2_bruteforce(&gen::fixture("C6").unwrap()), 3);
    for name in fixtures {
        let g = gen::fixture(name).unwrap();
        assert!(g.num_vertices() <= 8, "{name}");
        let (chi, cert) = color::exact_chi2(&g).unwrap();
        assert!(cert.valid, "{name}");
        assert_eq!(chi, chi2_bruteforce(&g), "{name}");
    }
    println!(
        "[PASS] criterion 6: exact solver matches enumeration on {} fixtures \
         (chi2: C5=5, K4=4, C6=3)",
        fixtures.len()
    );
}

/// Criterion 7: the counting bound never under-counts on triangle- and
/// quad-free neighborhoods; its unconditional violation rate is reported.
#[test]
fn criterion_7_counting_bound_diagnostic() {
    let g = gen::fixture("K4").unwrap();
    assert_eq!(analysis::d2_bound(&g, 0).unwrap(), 0);
    assert_eq!(analysis::d2_exact(&g, 0).unwrap(), 3);

    let c = corpus();
    let mut clean = 0usize;
    let mut total = 0usize;
    let mut violations = 0usize;
    for g in c.triangulations.iter().chain(&c.filtered) {
        for v in g.vertices() {
            let p = analysis::profile(g, v).unwrap();
            let bound = analysis::d2_bound(g, v).unwrap();
            let exact = analysis::d2_exact(g, v).unwrap() as i64;
            total += 1;
            if p.m3 == 0 && p.m4 == 0 && p.t == 0 {
                clean += 1;
                assert!(
                    bound >= exact,
                    "bound {bound} < exact {exact} at {v} with m3=m4=t=0"
                );
            }
            if bound < exact {
                violations += 1;
            }
        }
    }
    assert!(clean > 0);
    println!(
        "[PASS] criterion 7: bound >= exact on all {clean} clean vertices; \
         unconditional violation rate {violations}/{total} = {:.4}%; \
         K4 witness (0 vs 3) reproduced",
        100.0 * violations as f64 / total as f64
    );
}

fn persist_dir() -> String {
    let dir = std::env::var("D2TK_FINDINGS_DIR").unwrap_or_else(|_| "findings".into());
    std::fs::create_dir_all(&dir).ok();
    dir
}

/// Extension-step invariant: along the constructive recursion, the colors
/// forbidden to a deleted vertex never exceed 2Δ+6.
#[test]
fn extension_step_headroom() {
    let mut spec = GenSpec::new(77, 60, GenMode::Subsampled);
    spec.delta_filter = Some([6, 7, 8].into());
    let mut stream = GraphStream::new(spec);
    for _ in 0..10 {
        let g = stream.next_graph().unwrap();
        let delta = g.max_degree();
        let mut current = g.clone();
        while current.num_vertices() > 12 {
            let Some(case) = DeltaCase::from_delta(current.max_degree()) else {
                break;
            };
            let Some(config) = catalog::detect_first(&current, case).unwrap() else {
                break;
            };
            let d2 = analysis::d2_exact(&current, config.center).unwrap();
            assert!(d2 <= 2 * delta + 6, "extension headroom violated");
            current = current.apply_surgery(&config.recipe).unwrap().graph;
            assert!(current.max_degree() <= delta);
        }
    }
}

/// The negativity report is sorted and only lists negative finals.
#[test]
fn negativity_report_shape() {
    let g = gen::fixture("W6").unwrap();
    let ledger = discharge::apply_rules(&g, &discharge::rule_set(DeltaCase::D6)).unwrap();
    let report = discharge::negativity_report(&ledger);
    let keys: Vec<Element> = report.iter().map(|(e, _)| *e).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let negatives: BTreeMap<Element, discharge::Charge> = report.into_iter().collect();
    for (e, c) in &ledger.fin {
        use num_traits::Signed;
        assert_eq!(negatives.contains_key(e), c.is_negative());
    }
}
