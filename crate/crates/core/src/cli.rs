//! Command-line front end.
//!
//! [`run`] parses arguments and returns what the process should print and
//! its exit status, so the binary is a thin shell and every subcommand can
//! be tested in-process.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 input graph is not a
//! cograph, 3 an internal invariant failed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::Rng;

use crate::analysis::{verify_conjecture, AnalysisError};
use crate::cotree::Cotree;
use crate::diagonalize::{count_relative, spectrum, DiagonalizeError};
use crate::families::{build_g, build_h, cospectral_family, family_pair, FamilyError};
use crate::generate::{random_cotree, rng_from_seed};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::twins::{are_equivalent, reduction, twin_partition_from_cotree, TwinPartition};

#[derive(Debug, Parser)]
#[command(name = "cograph", about = "Laplacian eigenvalues of cographs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Input cographs. `-e` takes a cotree expression or `G:<n>` / `H:<n>`;
/// `-f` takes an edge-list file. Two-input commands read every `-e` before
/// every `-f`.
#[derive(Debug, Args)]
struct Inputs {
    #[arg(short = 'e', long = "expr", value_name = "EXPR")]
    exprs: Vec<String>,
    #[arg(short = 'f', long = "file", value_name = "FILE")]
    files: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Laplacian spectrum as `eigenvalue:multiplicity`, largest first
    Spectrum(Inputs),
    /// Eigenvalues greater than, equal to and less than a point
    Count {
        #[command(flatten)]
        input: Inputs,
        #[arg(long, value_name = "P[/Q]", allow_hyphen_values = true)]
        at: String,
    },
    /// Twin classes with sizes and types
    Twins(Inputs),
    /// Twin reduction
    Reduce(Inputs),
    /// Whether two cographs have the same labelled reduction
    Equivalent(Inputs),
    /// Shared eigenvalues of two equivalent cographs against the bound
    Verify(Inputs),
    /// A cospectral nonisomorphic pair on 2n+1 vertices, optionally joined with a prefix
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "EXPR")]
        prefix: Option<String>,
    },
    /// Seeded random cotree expression
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time count queries on a random cotree
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a finished invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    stdout: String,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: 1,
            stdout: String::new(),
            message: message.to_string(),
        }
    }

    fn internal(message: impl ToString) -> Self {
        Failure {
            code: 3,
            stdout: String::new(),
            message: message.to_string(),
        }
    }
}

impl From<DiagonalizeError> for Failure {
    fn from(e: DiagonalizeError) -> Self {
        match e {
            DiagonalizeError::EmptyTree => Failure::usage(e),
            _ => Failure::internal(e),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::NTooSmall(_) | FamilyError::OrderMismatch { .. } => Failure::usage(e),
            FamilyError::Spectrum(inner) => inner.into(),
            _ => Failure::internal(e),
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::NotEquivalent => Failure::usage(e),
            AnalysisError::Spectrum(inner) => inner.into(),
            AnalysisError::RelationViolated { .. } => Failure::internal(e),
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help and --version
                CliOutcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => CliOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(f) => CliOutcome {
            code: f.code,
            stdout: f.stdout,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Spectrum(input) => {
            let t = single(&input)?;
            Ok(format!("{}\n", spectrum(&t)?))
        }
        Command::Count { input, at } => {
            let t = single(&input)?;
            let x: Rational = at.parse().map_err(Failure::usage)?;
            Ok(format!("{}\n", count_relative(&t, &x)?))
        }
        Command::Twins(input) => {
            let t = single(&input)?;
            Ok(describe_partition(&twin_partition_from_cotree(&t)))
        }
        Command::Reduce(input) => {
            let t = single(&input)?;
            let r = reduction(&t);
            let mut out = describe_partition(&r.partition);
            let reps: Vec<String> = r.representatives.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "representatives={}", reps.join(" "));
            let _ = writeln!(out, "reduced={}", r.cotree.render());
            Ok(out)
        }
        Command::Equivalent(input) => {
            let (g, h) = pair(&input)?;
            Ok(match are_equivalent(&g, &h) {
                None => "equivalent=no\n".to_string(),
                Some(m) => {
                    let map: Vec<String> = m
                        .class_map
                        .iter()
                        .enumerate()
                        .map(|(i, j)| format!("{i}->{j}"))
                        .collect();
                    format!(
                        "equivalent=yes k={} bound={}\nclasses={}\n",
                        m.k(),
                        m.bound(),
                        map.join(" ")
                    )
                }
            })
        }
        Command::Verify(input) => {
            let (g, h) = pair(&input)?;
            match verify_conjecture(&g, &h) {
                Err(AnalysisError::NotEquivalent) => Ok("equivalent=no\n".to_string()),
                Err(e) => Err(e.into()),
                Ok(r) => Ok(format!(
                    "equivalent=yes k={} bound={} common={} holds={}\n",
                    r.k,
                    r.bound,
                    r.common,
                    if r.holds { "yes" } else { "no" }
                )),
            }
        }
        Command::Family { n, prefix } => {
            let p = match prefix {
                None => family_pair(n)?,
                Some(text) => {
                    let prefix = Cotree::parse(&text).map_err(Failure::usage)?;
                    cospectral_family(&prefix, n)?
                }
            };
            Ok(format!(
                "first={}\nsecond={}\nspectrum={}\n",
                p.first.render(),
                p.second.render(),
                p.spectrum
            ))
        }
        Command::Random { n, seed } => {
            if n == 0 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            Ok(format!("{}\n", random_cotree(&mut rng_from_seed(seed), n).render()))
        }
        Command::Bench { n, queries, seed } => bench(n, queries, seed),
    }
}

fn bench(n: usize, queries: usize, seed: u64) -> Result<String, Failure> {
    if n == 0 || queries == 0 {
        return Err(Failure::usage("--n and --queries must be at least 1"));
    }
    let mut rng = rng_from_seed(seed);
    let t = random_cotree(&mut rng, n);
    let mut times = Vec::with_capacity(queries);
    for _ in 0..queries {
        let x = Rational::new(rng.gen_range(0..=2 * n as i64), 2);
        let start = Instant::now();
        count_relative(&t, &x)?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
    }
    let mean = times.iter().sum::<f64>() / queries as f64;
    let max = times.iter().cloned().fold(0.0, f64::max);
    Ok(format!(
        "n={n} queries={queries} mean_ms={mean:.3} max_ms={max:.3}\n"
    ))
}

fn describe_partition(p: &TwinPartition) -> String {
    let sizes: Vec<String> = p.twin_numbers().iter().map(usize::to_string).collect();
    let mut out = format!("k={} t=({})\n", p.len(), sizes.join(","));
    for (i, class) in p.classes().iter().enumerate() {
        let members: Vec<String> = class.members.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "class={i} type={} members={}", class.kind, members.join(" "));
    }
    out
}

fn single(input: &Inputs) -> Result<Cotree, Failure> {
    let mut trees = load(input)?;
    if trees.len() != 1 {
        return Err(Failure::usage(format!(
            "expected exactly one input, got {}",
            trees.len()
        )));
    }
    Ok(trees.remove(0))
}

fn pair(input: &Inputs) -> Result<(Cotree, Cotree), Failure> {
    let mut trees = load(input)?;
    if trees.len() != 2 {
        return Err(Failure::usage(format!(
            "expected exactly two inputs, got {}",
            trees.len()
        )));
    }
    let h = trees.pop().expect("two trees");
    let g = trees.pop().expect("two trees");
    Ok((g, h))
}

fn load(input: &Inputs) -> Result<Vec<Cotree>, Failure> {
    let mut trees = Vec::new();
    for e in &input.exprs {
        trees.push(parse_expr(e)?);
    }
    for path in &input.files {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let g = Graph::parse_edge_list(&text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        if g.n() == 0 {
            return Err(Failure::usage(format!("{}: graph has no vertices", path.display())));
        }
        let t = Cotree::from_graph(&g).map_err(|e| Failure {
            code: 2,
            stdout: format!(
                "witness {} {} {} {}\n",
                e.witness[0], e.witness[1], e.witness[2], e.witness[3]
            ),
            message: format!("{}: {e}", path.display()),
        })?;
        trees.push(t);
    }
    Ok(trees)
}

fn parse_expr(text: &str) -> Result<Cotree, Failure> {
    let family = |n: &str, build: fn(usize) -> Result<Cotree, FamilyError>| {
        let n: usize = n
            .parse()
            .map_err(|_| Failure::usage(format!("invalid family size {n:?}")))?;
        build(n).map_err(Failure::from)
    };
    match text.trim().split_once(':') {
        Some(("G", n)) => family(n, build_g),
        Some(("H", n)) => family(n, build_h),
        _ => Cotree::parse(text).map_err(Failure::usage),
    }
}
