use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ftmd::bench::{self, MAX_EXPONENT};
use ftmd::format::{format_weight, parse_edge_list, parse_vertex_set, parse_weights, write_edge_list};
use ftmd::oracle::{self, MAX_VERTICES};
use ftmd::resolving::{fault_tolerance_violation, resolving_violation, two_nr_violation};
use ftmd::{build_cotree, random_cotree, realize, solve, Error, Graph, WeightMap};

/// Minimum-weight fault-tolerant resolving sets of cographs.
#[derive(Parser, Debug)]
#[command(name = "ftmd", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a weighted cograph given as an edge list ("-" reads stdin).
    Solve {
        graph: PathBuf,
        /// Lines "v w"; unlisted vertices weigh 1.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Re-check the set for fault tolerance.
        #[arg(long)]
        verify: bool,
        /// Cross-check the weight by brute force (only for small graphs).
        #[arg(long)]
        oracle: bool,
        /// Also print the cotree.
        #[arg(long)]
        cotree: bool,
    },
    /// Test a vertex set against one of the resolving predicates.
    Check {
        graph: PathBuf,
        /// Vertex ids separated by commas or spaces.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value_t = Mode::Ft)]
        mode: Mode,
    },
    /// Brute-force optimum, for graphs with at most 20 vertices.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Ft)]
        mode: Mode,
    },
    /// Emit a random cograph as an edge list, followed by its cotree as a comment.
    Gen { n: usize, seed: u64 },
    /// Time the DP on random cotrees with 2^10 ..= 2^k leaves.
    Bench {
        k: u32,
        seed: u64,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Resolving,
    Ft,
    #[value(name = "2nr")]
    TwoNr,
}

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_NOT_COGRAPH: u8 = 2;
const EXIT_NO: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

enum Failure {
    Io(PathBuf, io::Error),
    Lib(Error),
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::NotCograph { .. }) => EXIT_NOT_COGRAPH,
            Failure::Mismatch(_) => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        }
    }
}

struct Report {
    text: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    match run(cli.command) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if out.write_all(report.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(EXIT_INPUT);
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            match &f {
                Failure::Io(path, e) => eprintln!("error: {}: {e}", path.display()),
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Usage(msg) | Failure::Mismatch(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Solve { graph, weights, verify, oracle, cotree } => {
            cmd_solve(&graph, weights.as_deref(), verify, oracle, cotree)
        }
        Command::Check { graph, set, mode } => cmd_check(&graph, &set, mode),
        Command::Oracle { graph, weights, mode } => cmd_oracle(&graph, weights.as_deref(), mode),
        Command::Gen { n, seed } => cmd_gen(n, seed),
        Command::Bench { k, seed, repeats } => cmd_bench(k, seed, repeats),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map(|_| text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load(graph: &Path, weights: Option<&Path>) -> Result<(Graph, WeightMap), Failure> {
    let g = parse_edge_list(&read_input(graph)?)?;
    let w = match weights {
        Some(p) => parse_weights(&read_input(p)?, g.n())?,
        None => WeightMap::uniform(g.n()),
    };
    Ok((g, w))
}

fn join(set: &[usize]) -> String {
    set.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn ok(text: String) -> Result<Report, Failure> {
    Ok(Report { text, code: EXIT_OK })
}

fn cmd_solve(
    graph: &Path,
    weights: Option<&Path>,
    verify: bool,
    oracle: bool,
    cotree: bool,
) -> Result<Report, Failure> {
    let (g, w) = load(graph, weights)?;
    let sol = solve(&g, &w)?;
    let mut out = format!("{}\n{}\n", format_weight(sol.weight), join(&sol.set));
    if cotree {
        writeln!(out, "cotree: {}", build_cotree(&g)?).unwrap();
    }
    if verify {
        if !sol.verify(&g) {
            return Err(Failure::Mismatch(format!("set {{{}}} is not fault tolerant", join(&sol.set))));
        }
        out.push_str("verify: ok\n");
    }
    if oracle {
        if g.n() > MAX_VERTICES {
            writeln!(out, "oracle: skipped (n > {MAX_VERTICES})").unwrap();
        } else {
            let best = oracle::oracle_min_ft(&g, &w)?;
            if best.weight != sol.weight {
                return Err(Failure::Mismatch(format!(
                    "solver weight {} differs from brute force {}",
                    format_weight(sol.weight),
                    format_weight(best.weight)
                )));
            }
            out.push_str("oracle: ok\n");
        }
    }
    ok(out)
}

fn cmd_check(graph: &Path, set: &str, mode: Mode) -> Result<Report, Failure> {
    let g = parse_edge_list(&read_input(graph)?)?;
    let r = parse_vertex_set(set, g.n())?;
    let violation = match mode {
        Mode::Resolving => resolving_violation(&g, &r),
        Mode::Ft => fault_tolerance_violation(&g, &r),
        Mode::TwoNr => two_nr_violation(&g, &r),
    };
    Ok(match violation {
        None => Report { text: "YES\n".into(), code: EXIT_OK },
        Some((u, v)) => Report { text: format!("NO: {u} {v}\n"), code: EXIT_NO },
    })
}

fn cmd_oracle(graph: &Path, weights: Option<&Path>, mode: Mode) -> Result<Report, Failure> {
    let (g, w) = load(graph, weights)?;
    let best = match mode {
        Mode::Resolving => oracle::oracle_min_resolving(&g, &w)?,
        Mode::Ft => oracle::oracle_min_ft(&g, &w)?,
        Mode::TwoNr => oracle::oracle_min_2nr(&g, &w)?,
    };
    ok(format!("{}\n{}\noptimal sets: {}\n", format_weight(best.weight), join(&best.witness), best.optimal_count))
}

fn cmd_gen(n: usize, seed: u64) -> Result<Report, Failure> {
    let tree = random_cotree(n, seed)?;
    ok(format!("{}# cotree: {tree}\n", write_edge_list(&realize(&tree))))
}

fn cmd_bench(k: u32, seed: u64, repeats: usize) -> Result<Report, Failure> {
    if k > MAX_EXPONENT {
        return Err(Failure::Usage(format!("exponent {k} exceeds {MAX_EXPONENT}")));
    }
    let mut out = String::from("n nodes elapsed_s\n");
    for row in bench::scaling(k, seed, repeats)? {
        writeln!(out, "{} {} {:.6}", row.n, row.nodes, row.elapsed.as_secs_f64()).unwrap();
    }
    ok(out)
}
