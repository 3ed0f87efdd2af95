mod config;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;
use zfgrundy::enumeration::{cross_validate, CENSUS_PROPERTIES};
use zfgrundy::par::{with_jobs, Execution};
use zfgrundy::sequences::{grundy_number_with, SearchLimits};
use zfgrundy::zero_forcing::{zero_forcing_number_with, ZfSearch};
use zfgrundy::{path_cover, recognizers, Graph, Property, SequenceKind};

use config::{Input, Output};

const DEFAULT_LIMIT_N: usize = 18;
const DEFAULT_CENSUS_N: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "zfgrundy", version, about = "Zero forcing and Grundy domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print basic structure, Z, P and the four Grundy domination numbers.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Largest order for the exhaustive searches.
        #[arg(long, env = "ZFGRUNDY_LIMIT_N", default_value_t = DEFAULT_LIMIT_N)]
        limit_n: usize,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        out: Output,
    },
    /// Decide a property and print its certificate. Exit 0 = yes, 1 = no.
    Recognize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        property: Property,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        out: Output,
    },
    /// Compare a recognizer against its oracle on every instance up to a size.
    CrossValidate {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(CENSUS_PROPERTIES))]
        property: String,
        /// Largest instance order.
        #[arg(long, env = "ZFGRUNDY_LIMIT_N", default_value_t = DEFAULT_CENSUS_N)]
        limit_n: usize,
        /// Worker threads; 1 runs sequentially, 0 picks the default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Stop starting new sizes after this many seconds.
        #[arg(long, default_value_t = 1800)]
        budget_secs: u64,
        /// Write mismatching instances as graph6 lines to this file.
        #[arg(long)]
        dump_mismatches: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        out: Output,
    },
}

#[derive(Debug, Serialize)]
struct Analysis {
    n: usize,
    edges: usize,
    isolated: usize,
    components: Vec<Vec<usize>>,
    leaves: Vec<usize>,
    supports: Vec<usize>,
    strong_supports: Vec<usize>,
    forest: bool,
    zero_forcing: Option<usize>,
    path_cover: Option<usize>,
    grundy: BTreeMap<SequenceKind, usize>,
    /// Values not computed, with the reason.
    skipped: BTreeMap<String, String>,
}

fn analyze(g: &Graph, limit_n: usize) -> Analysis {
    let cls = g.classify_vertices();
    let pick = |flags: &[bool]| (0..flags.len()).filter(|&v| flags[v]).collect::<Vec<_>>();
    let mut skipped = BTreeMap::new();

    let zf = ZfSearch { number_n: limit_n, family_n: limit_n, forest_bound: true };
    let zero_forcing = zero_forcing_number_with(g, &zf).map_err(|e| skipped.insert("zero_forcing".into(), e.to_string())).ok();
    let path_cover = g.is_forest().then(|| path_cover::path_cover_number(g).ok()).flatten();

    let limits = SearchLimits { grundy_n: limit_n, family_n: limit_n };
    let mut grundy = BTreeMap::new();
    for kind in SequenceKind::ALL {
        match grundy_number_with(g, kind, &limits) {
            Ok(r) => {
                grundy.insert(kind, r.value);
            }
            Err(e) => {
                skipped.insert(format!("grundy_{kind}"), e.to_string());
            }
        }
    }

    Analysis {
        n: g.n(),
        edges: g.edge_count(),
        isolated: cls.isolated_count,
        components: g.components(),
        leaves: pick(&cls.leaf),
        supports: pick(&cls.support),
        strong_supports: cls.strong_supports(),
        forest: g.is_forest(),
        zero_forcing,
        path_cover,
        grundy,
        skipped,
    }
}

fn print_analysis(a: &Analysis) {
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    println!("n = {}, m = {}, i(G) = {}", a.n, a.edges, a.isolated);
    println!("components: {}", a.components.len());
    println!("leaves: {:?}", a.leaves);
    println!("support vertices: {:?} (strong: {:?})", a.supports, a.strong_supports);
    println!("Z = {}", opt(a.zero_forcing));
    if a.forest {
        println!("P = {}", opt(a.path_cover));
    }
    for (kind, label) in [
        (SequenceKind::Closed, "gamma_gr"),
        (SequenceKind::Open, "gamma_gr^t"),
        (SequenceKind::Z, "gamma_gr^Z"),
        (SequenceKind::L, "gamma_gr^L"),
    ] {
        println!("{label} = {}", opt(a.grundy.get(&kind).copied()));
    }
    for (what, why) in &a.skipped {
        println!("skipped {what}: {why}");
    }
}

/// Prints a line; a closed stdout (e.g. piped into `head`) is not an error.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Analyze { input, limit_n, out } => {
            let a = analyze(&input.load()?, limit_n);
            match out {
                Output::Json => emit(&serde_json::to_string_pretty(&a)?),
                Output::Text => print_analysis(&a),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Recognize { input, property, out } => {
            let cert = recognizers::recognize(&input.load()?, property)?;
            match out {
                Output::Json => emit(&serde_json::to_string_pretty(&cert)?),
                Output::Text => emit(&format!("{}: {} ({})", cert.property, cert.verdict, cert.witness.type_name())),
            }
            Ok(if cert.is_yes() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::CrossValidate { property, limit_n, jobs, budget_secs, dump_mismatches, out } => {
            let exec = if jobs == 1 { Execution::Sequential } else { Execution::Parallel };
            let budget = Duration::from_secs(budget_secs);
            let report = with_jobs(jobs, || cross_validate(&property, limit_n, budget, exec))?;
            match out {
                Output::Json => emit(&serde_json::to_string_pretty(&report)?),
                Output::Text => emit(report.summary_table().trim_end()),
            }
            if let Some(path) = dump_mismatches {
                let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                report.write_mismatch_corpus(BufWriter::new(file))?;
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
