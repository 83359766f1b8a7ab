use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "d2tk",
    about = "Plane-graph toolkit: reducible configurations, exact discharging, 2-distance coloring",
    version
)]
struct Cli {
    /// Print elapsed wall time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Per-vertex profile table of a ROTG graph.
    Analyze { file: PathBuf },
    /// Reducible configurations of a ROTG graph.
    Detect {
        file: PathBuf,
        /// Rule-set case: auto, 6, 7 or 8.
        #[arg(long, default_value = "auto")]
        delta: String,
        /// Emit JSON instead of lines.
        #[arg(long)]
        json: bool,
    },
    /// Exact-rational charge ledger of a ROTG graph.
    Discharge {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        delta: String,
        /// Also dump the transfer audit list.
        #[arg(long)]
        transfers: bool,
    },
    /// 2-distance coloring of a ROTG graph.
    Color {
        file: PathBuf,
        /// constructive, exact or greedy.
        #[arg(long, default_value = "constructive")]
        method: String,
        /// Dump the reduction log.
        #[arg(long)]
        trace: bool,
    },
    /// Generate plane graphs as ROTG.
    Gen {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Target vertex count.
        #[arg(long, default_value_t = 30)]
        n: usize,
        /// triangulation, subsampled, or `fixture:<name>`.
        #[arg(long, default_value = "subsampled")]
        mode: String,
        /// Edge keep probability for subsampling.
        #[arg(long, default_value_t = 0.8)]
        keep: f64,
        /// Comma-separated acceptable maximum degrees, e.g. 6,7,8.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Generate a corpus and run every invariant check on every graph.
    Falsify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 60)]
        n: usize,
        #[arg(long, default_value_t = 0.85)]
        keep: f64,
    },
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.cmd {
        Cmd::Analyze { file } => d2tk_cli::analyze(file),
        Cmd::Detect { file, delta, json } => d2tk_cli::detect(file, delta, *json),
        Cmd::Discharge {
            file,
            delta,
            transfers,
        } => d2tk_cli::discharge_cmd(file, delta, *transfers),
        Cmd::Color {
            file,
            method,
            trace,
        } => d2tk_cli::color_cmd(file, method, *trace),
        Cmd::Gen {
            seed,
            n,
            mode,
            keep,
            delta,
            count,
        } => d2tk_cli::gen_cmd(*seed, *n, mode, *keep, delta, *count),
        Cmd::Falsify {
            seed,
            count,
            n,
            keep,
        } => d2tk_cli::falsify(*seed, *count, *n, *keep),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            if cli.timing {
                eprintln!("elapsed: {:?}", start.elapsed());
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
