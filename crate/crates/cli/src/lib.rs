//! Implementation of the `d2tk` subcommands. The binary in `main.rs` only
//! parses arguments and forwards here; everything returns the stdout text
//! so tests can drive the same paths.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use d2tk_core::analysis::{self, DeltaCase};
use d2tk_core::catalog::{self, ReducibleConfiguration};
use d2tk_core::color::{self, OrderHint};
use d2tk_core::discharge::{self, render_charge, Element};
use d2tk_core::gen::{self, GenMode, GenSpec, GraphStream};
use d2tk_core::planegraph::PlaneGraph;
use d2tk_core::rotg;

use rayon::prelude::*;

/// Exit codes: 0 ok, 1 invariant violation found, 2 usage or parse error.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    fn violation(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: 1,
        }
    }
}

pub type CliResult = Result<(String, i32), CliError>;

fn load_graph(path: &Path) -> Result<PlaneGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::usage(format!("cannot read {}: {e}", path.display()))
    })?;
    rotg::parse(&text).map_err(|e| {
        let loc = e
            .line()
            .map(|l| format!("{}:{l}", path.display()))
            .unwrap_or_else(|| path.display().to_string());
        CliError::usage(format!("{loc}: {e}"))
    })
}

fn resolve_case(g: &PlaneGraph, delta: &str) -> Result<DeltaCase, CliError> {
    let delta_value = match delta {
        "auto" => g.max_degree(),
        d => d
            .parse::<usize>()
            .map_err(|_| CliError::usage(format!("bad --delta value `{d}`")))?,
    };
    DeltaCase::from_delta(delta_value).ok_or_else(|| {
        CliError::usage(format!(
            "maximum degree {delta_value} is outside the supported range 6..=8"
        ))
    })
}

/// `analyze <file>`: one profile line per vertex.
pub fn analyze(file: &Path) -> CliResult {
    let g = load_graph(file)?;
    let mut out = String::new();
    writeln!(out, "# v d m3 m4 t d2 class").unwrap();
    for v in g.vertices() {
        let p = analysis::profile(&g, v).expect("vertex exists");
        writeln!(out, "{}", p.line()).unwrap();
    }
    Ok((out, 0))
}

/// `detect <file> --delta auto|6|7|8 [--json]`.
pub fn detect(file: &Path, delta: &str, json: bool) -> CliResult {
    let g = load_graph(file)?;
    let case = resolve_case(&g, delta)?;
    let configs = catalog::detect(&g, case).map_err(|e| CliError::usage(e.to_string()))?;
    let out = if json {
        render_configs_json(&configs)
    } else {
        let mut out = String::new();
        for c in &configs {
            writeln!(out, "{}", c.line()).unwrap();
        }
        out
    };
    Ok((out, 0))
}

fn render_configs_json(configs: &[ReducibleConfiguration]) -> String {
    let arr: Vec<serde_json::Value> = configs
        .iter()
        .map(|c| {
            serde_json::json!({
                "id": c.id.to_string(),
                "center": c.center,
                "witnesses": c.witnesses,
                "delete": c.recipe.delete,
                "chords": c.recipe.chords,
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&serde_json::Value::Array(arr)).unwrap();
    s.push('\n');
    s
}

/// `discharge <file> --delta auto|6|7|8 [--transfers]`.
pub fn discharge_cmd(file: &Path, delta: &str, transfers: bool) -> CliResult {
    let g = load_graph(file)?;
    let case = resolve_case(&g, delta)?;
    let ledger = discharge::apply_rules(&g, &discharge::rule_set(case))
        .map_err(|e| CliError::usage(e.to_string()))?;
    let mut out = String::new();
    writeln!(out, "# kind id initial final").unwrap();
    for (e, init) in &ledger.initial {
        let fin = &ledger.fin[e];
        let (kind, id) = match e {
            Element::Vertex(v) => ("vertex", *v),
            Element::Face(i) => ("face", *i),
        };
        writeln!(
            out,
            "{kind} {id} {} {}",
            render_charge(init),
            render_charge(fin)
        )
        .unwrap();
    }
    writeln!(
        out,
        "# total initial={} final={}",
        render_charge(&ledger.total_initial()),
        render_charge(&ledger.total_final())
    )
    .unwrap();
    if transfers {
        writeln!(out, "# transfers: rule from -> to amount").unwrap();
        for t in &ledger.transfers {
            writeln!(
                out,
                "{} {} -> {} {}",
                t.rule,
                t.from,
                t.to,
                render_charge(&t.amount)
            )
            .unwrap();
        }
    }
    Ok((out, 0))
}

/// `color <file> --method constructive|exact|greedy [--trace]`.
pub fn color_cmd(file: &Path, method: &str, trace: bool) -> CliResult {
    let g = load_graph(file)?;
    let bound = 2 * g.max_degree() + 7;
    let cert = match method {
        "constructive" => color::color_constructive(&g)
            .map_err(|e| CliError::violation(e.to_string()))?,
        "exact" => {
            let (_, cert) =
                color::exact_chi2(&g).map_err(|e| CliError::violation(e.to_string()))?;
            cert
        }
        "greedy" => color::greedy(&g, OrderHint::Degeneracy),
        other => return Err(CliError::usage(format!("unknown method `{other}`"))),
    };
    let mut out = String::new();
    for (v, c) in &cert.assignment {
        writeln!(out, "{v} {c}").unwrap();
    }
    writeln!(
        out,
        "palette={} bound={bound} method={}",
        cert.palette_size,
        cert.method.name()
    )
    .unwrap();
    if trace {
        for step in &cert.trace {
            writeln!(out, "# {}", step.line()).unwrap();
        }
    }
    let code = if cert.valid && cert.palette_size <= bound {
        0
    } else {
        1
    };
    Ok((out, code))
}

fn parse_delta_filter(delta: &Option<String>) -> Result<Option<BTreeSet<usize>>, CliError> {
    match delta {
        None => Ok(None),
        Some(list) => {
            let mut set = BTreeSet::new();
            for tok in list.split(',') {
                let d: usize = tok
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad --delta entry `{tok}`")))?;
                set.insert(d);
            }
            Ok(Some(set))
        }
    }
}

/// `gen --seed --n --mode --keep --delta --count`: ROTG on stdout; with
/// `--count` above one, each graph gets a `# graph i` comment header.
pub fn gen_cmd(
    seed: u64,
    n: usize,
    mode: &str,
    keep: f64,
    delta: &Option<String>,
    count: usize,
) -> CliResult {
    if let Some(name) = mode.strip_prefix("fixture:") {
        let g = gen::fixture(name).map_err(|e| CliError::usage(e.to_string()))?;
        return Ok((rotg::write(&g), 0));
    }
    let mode = match mode {
        "triangulation" => GenMode::Triangulation,
        "subsampled" => GenMode::Subsampled,
        other => return Err(CliError::usage(format!("unknown mode `{other}`"))),
    };
    let mut spec = GenSpec::new(seed, n, mode);
    spec.edge_keep_probability = keep;
    spec.delta_filter = parse_delta_filter(delta)?;
    let mut stream = GraphStream::new(spec);
    let mut out = String::new();
    for i in 0..count {
        let g = stream
            .next_graph()
            .map_err(|e| CliError::violation(e.to_string()))?;
        if count > 1 {
            writeln!(out, "# graph {i}").unwrap();
        }
        out.push_str(&rotg::write(&g));
        if i + 1 < count {
            out.push('\n');
        }
    }
    Ok((out, 0))
}

/// Everything `falsify` checks about one graph.
struct GraphReport {
    index: usize,
    n: usize,
    delta: usize,
    configs: usize,
    certs_ok: usize,
    negatives: usize,
    palette: usize,
    bound: usize,
    method: &'static str,
    failures: Vec<String>,
    rotg: String,
}

fn check_graph(index: usize, g: &PlaneGraph) -> GraphReport {
    let mut failures = Vec::new();
    let case = DeltaCase::from_delta(g.max_degree()).expect("filtered");
    let bound = case.palette_bound();

    let ledger =
        discharge::apply_rules(g, &discharge::rule_set(case)).expect("delta matches");
    let minus_eight = discharge::charge(-8, 1);
    if ledger.total_initial() != minus_eight || ledger.total_final() != minus_eight {
        failures.push(format!(
            "charge sums initial={} final={}",
            render_charge(&ledger.total_initial()),
            render_charge(&ledger.total_final())
        ));
    }
    let negatives = discharge::negativity_report(&ledger).len();

    let configs = catalog::detect(g, case).expect("delta matches");
    if configs.is_empty() {
        failures.push("no configuration detected".into());
    }
    let mut certs_ok = 0usize;
    for c in &configs {
        match catalog::certify(g, c) {
            Ok(cert) if cert.passes() => certs_ok += 1,
            Ok(cert) => {
                failures.push(format!("certificate failed for {}: {cert:?}", c.line()))
            }
            Err(e) => failures.push(format!("surgery failed for {}: {e}", c.line())),
        }
    }

    let (palette, method, valid) = match color::color_constructive(g) {
        Ok(cert) => (cert.palette_size, cert.method.name(), cert.valid),
        Err(e) => {
            failures.push(format!("coloring failed: {e}"));
            (0, "failed", false)
        }
    };
    if method != "failed" && (!valid || palette > bound) {
        failures.push(format!(
            "coloring palette={palette} bound={bound} valid={valid}"
        ));
    }

    GraphReport {
        index,
        n: g.num_vertices(),
        delta: g.max_degree(),
        configs: configs.len(),
        certs_ok,
        negatives,
        palette,
        bound,
        method,
        failures,
        rotg: rotg::write(g),
    }
}

fn findings_dir() -> PathBuf {
    std::env::var_os("D2TK_FINDINGS_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("findings"))
}

/// `falsify --seed --count --n --keep`: generate a corpus with maximum
/// degree in 6..=8 and run every check on every graph. Failing graphs are
/// persisted as ROTG plus a description and the run continues.
pub fn falsify(seed: u64, count: usize, n: usize, keep: f64) -> CliResult {
    let mut spec = GenSpec::new(seed, n, GenMode::Subsampled);
    spec.edge_keep_probability = keep;
    spec.delta_filter = Some([6, 7, 8].into());
    let mut stream = GraphStream::new(spec);
    let mut graphs = Vec::with_capacity(count);
    for _ in 0..count {
        let g = stream
            .next_graph()
            .map_err(|e| CliError::violation(e.to_string()))?;
        graphs.push(g);
    }

    let mut reports: Vec<GraphReport> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| check_graph(i, g))
        .collect();
    reports.sort_by_key(|r| r.index);

    let mut out = String::new();
    let mut failing = 0usize;
    for r in &reports {
        let status = if r.failures.is_empty() { "ok" } else { "FAIL" };
        writeln!(
            out,
            "graph {}: n={} delta={} configs={} certs={}/{} negatives={} palette={} bound={} method={} {}",
            r.index, r.n, r.delta, r.configs, r.certs_ok, r.configs, r.negatives,
            r.palette, r.bound, r.method, status
        )
        .unwrap();
        if !r.failures.is_empty() {
            failing += 1;
            for f in &r.failures {
                writeln!(out, "  failure: {f}").unwrap();
            }
            let dir = findings_dir();
            if std::fs::create_dir_all(&dir).is_ok() {
                let base = dir.join(format!("graph_{}_{}", seed, r.index));
                let _ = std::fs::write(base.with_extension("rotg"), &r.rotg);
                let _ =
                    std::fs::write(base.with_extension("txt"), r.failures.join("\n") + "\n");
            }
        }
    }
    writeln!(
        out,
        "summary: graphs={} passing={} failing={failing}",
        reports.len(),
        reports.len() - failing
    )
    .unwrap();
    Ok((out, if failing == 0 { 0 } else { 1 }))
}
