use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pointfree::corpus::{self, Entry};
use pointfree::suites::{self, Outcome, Suite};
use pointfree::{dot, format, report};
use pointfree_core::calculus::{Filter, Host};
use pointfree_core::{Lattice, Limits, Workbench};
use rayon::prelude::*;

/// Writes to stdout; a closed pipe ends the process quietly.
macro_rules! out {
    ($($arg:tt)*) => {
        emit(format_args!($($arg)*))
    };
}

fn emit(args: std::fmt::Arguments) {
    let mut stdout = io::stdout().lock();
    if let Err(e) = stdout.write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

#[derive(Parser)]
#[command(name = "pointfree", version, about = "Sublocales, subcolocales and the fit/Δ adjunction on finite frames")]
struct Cli {
    /// Seed for sampled four-point topologies.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest host coframe for brute-force subcolocale enumeration.
    #[arg(long, global = true, default_value_t = 16)]
    limit: usize,
    /// Require `bottom`/`top` lines and genuine covering pairs in input files.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// JSON report for one frame.
    Analyze { file: PathBuf },
    /// List S(L), or S_o(L) with --fitted.
    Sublocales {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        fitted: bool,
    },
    /// List subcolocales of S(L) or S_o(L).
    Subcolocales {
        file: PathBuf,
        #[arg(long, value_enum)]
        host: HostArg,
        #[arg(long, value_enum, default_value = "all")]
        filter: FilterArg,
    },
    /// Run a check suite on a file or on the corpus.
    Check {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Run on the built-in corpus instead of a file.
        #[arg(long)]
        corpus: bool,
        /// Number of sampled four-point topologies added to the corpus.
        #[arg(long, default_value_t = 0)]
        sample: usize,
        /// Emit the outcomes as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Parse, print in canonical form and verify the round trip.
    Roundtrip { file: PathBuf },
    /// List the corpus, or write it as lattice files.
    Corpus {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        sample: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum HostArg {
    #[value(name = "SL")]
    Sl,
    #[value(name = "SoL")]
    Sol,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    Codense,
    Proper,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Laws,
    Adjunction,
    Correspondence,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Laws => Suite::Laws,
            SuiteArg::Adjunction => Suite::Adjunction,
            SuiteArg::Correspondence => Suite::Correspondence,
        }
    }
}

/// Input problems exit with status 2, violations with status 1.
enum Failure {
    Input(String),
    Violation,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn load(path: &Path, strict: bool) -> Result<Lattice, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    format::parse(&text, strict).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn bench(lattice: Lattice, limits: Limits) -> Result<Workbench, Failure> {
    Ok(Workbench::from_lattice(lattice, limits)?)
}

fn name_of(path: &Path) -> String {
    path.file_stem().map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned())
}

fn print_outcome(o: &Outcome) {
    if o.passed() {
        out!("PASS {} ({} checks)\n", o.frame, o.checks.len());
    } else {
        out!("FAIL {}\n", o.frame);
        for c in o.failures() {
            out!("  {}: {}\n", c.name, c.counterexample.as_deref().unwrap_or(""));
        }
    }
    for s in &o.skipped {
        out!("  skipped {s}\n");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits { max_subcolocale_host: cli.limit, ..Limits::default() };
    match cli.command {
        Command::Analyze { file } => {
            let w = bench(load(&file, cli.strict)?, limits)?;
            let r = report::analyze(&name_of(&file), &w)?;
            out!("{}\n", serde_json::to_string_pretty(&r)?);
        }
        Command::Sublocales { file, dot: as_dot, fitted } => {
            let w = bench(load(&file, cli.strict)?, limits)?;
            let coframe = if fitted { w.so() } else { w.sl() };
            if as_dot {
                out!("{}", dot::hasse(coframe, &name_of(&file)));
            } else {
                let l = w.frame().lattice();
                for k in 0..coframe.len() {
                    let mut tags = Vec::new();
                    tags.extend(l.elements().filter(|&a| coframe.open(a) == k).map(|a| format!("o({a})")));
                    tags.extend(l.elements().filter(|&a| coframe.closed(a) == Some(k)).map(|a| format!("c({a})")));
                    if coframe.is_fitted(k) {
                        tags.push("fitted".into());
                    }
                    out!("S{k} {} {}\n", coframe.get(k), tags.join(" "));
                }
            }
        }
        Command::Subcolocales { file, host, filter } => {
            let w = bench(load(&file, cli.strict)?, limits)?;
            let host = match host {
                HostArg::Sl => Host::Sublocales,
                HostArg::Sol => Host::Fitted,
            };
            let filter = match filter {
                FilterArg::All => Filter::All,
                FilterArg::Codense => Filter::Codense,
                FilterArg::Proper => Filter::Proper,
            };
            for d in w.enumerate(host, filter)? {
                let coframe = if host == Host::Sublocales { w.sl().coframe() } else { w.so().coframe() };
                let mut tags = Vec::new();
                if d.is_codense(coframe) {
                    tags.push("codense");
                    if host == Host::Sublocales && w.is_essential(&d)? {
                        tags.push("essential");
                    }
                }
                if host == Host::Fitted && w.is_proper(&d) {
                    tags.push("proper");
                }
                out!("{} {}\n", d.members(), tags.join(" "));
            }
        }
        Command::Check { file, suite, corpus: use_corpus, sample, json } => {
            let entries: Vec<Entry> = match (file, use_corpus) {
                (Some(f), false) => vec![Entry { name: name_of(&f), lattice: load(&f, cli.strict)? }],
                (None, true) => corpus::with_sample(cli.seed, sample),
                _ => return Err(Failure::Input("give exactly one of FILE or --corpus".into())),
            };
            let suite = Suite::from(suite);
            let results: Vec<Result<Outcome, String>> = entries
                .par_iter()
                .map(|e| suites::run(suite, &e.name, &e.lattice, limits).map_err(|err| format!("{}: {err}", e.name)))
                .collect();
            let mut outcomes = Vec::new();
            for r in results {
                outcomes.push(r.map_err(Failure::Input)?);
            }
            if json {
                out!("{}\n", serde_json::to_string_pretty(&outcomes)?);
            } else {
                outcomes.iter().for_each(print_outcome);
            }
            if !outcomes.iter().all(Outcome::passed) {
                return Err(Failure::Violation);
            }
        }
        Command::Roundtrip { file } => {
            let lattice = load(&file, cli.strict)?;
            let canonical = format::serialize(&lattice);
            let again = format::parse(&canonical, true)?;
            out!("{canonical}");
            if again != lattice || format::serialize(&again) != canonical {
                eprintln!("round trip changed the lattice");
                return Err(Failure::Violation);
            }
        }
        Command::Corpus { out, sample } => {
            let entries = corpus::with_sample(cli.seed, sample);
            if let Some(dir) = &out {
                fs::create_dir_all(dir)?;
            }
            for e in &entries {
                out!("{} {}\n", e.name, e.lattice.len());
                if let Some(dir) = &out {
                    fs::write(dir.join(format!("{}.lat", e.name)), format::serialize(&e.lattice))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
