//! Command-line front end: construct codes, verify them in the cube or
//! in a run-avoidance subgraph, search small instances exhaustively,
//! and scan (n, s) rectangles for conjecture counterexamples.
//!
//! Exit codes: 0 verified/complete, 1 negative verification, 2 input
//! error, 3 capacity exceeded or undecided cells.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fibcube::avoidance::{vertex_count, AvoidanceGraph};
use fibcube::codes::{
    example_gamma7_code, guaranteed_run_bound, hamming_code, run_avoiding_code,
    run_avoiding_stream,
};
use fibcube::search::{conjecture_scan, min_s, search_perfect_codes, SCAN_NODE_BUDGET};
use fibcube::{Code, Error};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(name = "fibcube", version, about = "Perfect codes in hypercubes and run-constrained Fibonacci cubes", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Run-suppressing construction: length 2^p - 1, no codeword
    /// carries a run of 3 * 2^(p-2) ones (p in 2..=5; p = 5 streams).
    Theorem2,
    /// Plain Hamming code of length 2^p - 1 (p in 1..=4).
    Hamming,
    /// The worked 16-word code of length 7 avoiding 11111.
    Gamma7Example,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Verify in the whole hypercube.
    Qn,
    /// Verify in the subgraph avoiding a run of s ones (needs -s).
    Gamma,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it as a code file.
    Construct {
        #[arg(long, value_enum)]
        variant: Variant,
        /// Construction parameter; required for theorem2 and hamming.
        #[arg(short)]
        p: Option<u32>,
        /// Output path (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a code file; prints the verification report.
    Verify {
        /// Code file: one word per line, '#' lines ignored.
        code: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Forbidden run length for --mode gamma.
        #[arg(short)]
        s: Option<u32>,
    },
    /// Exhaustively search one (n, s) instance for perfect codes.
    Search {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        s: u32,
        /// Stop after this many solutions.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Smallest s in 2..=s-max admitting a perfect code at length n.
    MinS {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        s_max: u32,
    },
    /// Enumerate perfect codes over an (n, s) rectangle and check each
    /// against the expected pattern; ranges are "lo..hi" (inclusive) or
    /// a single value.
    Scan {
        #[arg(short, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        #[arg(short, value_parser = parse_range)]
        s: RangeInclusive<u32>,
        /// Per-cell search-node budget before a cell is left undecided.
        #[arg(long, default_value_t = SCAN_NODE_BUDGET)]
        max_nodes: u64,
    },
    /// Vertex count of the run-avoidance graph, from the recurrence.
    Count {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        s: u32,
    },
}

fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let parse = |t: &str| {
        t.parse::<u32>()
            .map_err(|_| format!("invalid number {t:?}"))
    };
    match text.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(format!("empty range {text:?}"));
            }
            Ok(lo..=hi)
        }
        None => {
            let v = parse(text)?;
            Ok(v..=v)
        }
    }
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_for(&err))
        }
    }
}

fn io_err(err: io::Error) -> Error {
    Error::ParamRange {
        name: "io",
        value: err.raw_os_error().unwrap_or(0) as u64,
        range: "(see stderr)",
    }
}

/// Construction output sink: file or stdout, buffered.
fn open_sink(out: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Construct { variant, p, out } => cmd_construct(variant, p, out),
        Command::Verify { code, mode, s } => cmd_verify(&code, mode, s),
        Command::Search { n, s, limit } => cmd_search(n, s, limit),
        Command::MinS { n, s_max } => cmd_min_s(n, s_max),
        Command::Scan { n, s, max_nodes } => cmd_scan(n, s, max_nodes),
        Command::Count { n, s } => cmd_count(n, s),
    }
}

fn require_p(p: Option<u32>, range: &'static str) -> Result<u32, Error> {
    p.ok_or(Error::ParamRange {
        name: "p",
        value: 0,
        range,
    })
}

fn cmd_construct(variant: Variant, p: Option<u32>, out: Option<PathBuf>) -> Result<u8, Error> {
    match variant {
        Variant::Theorem2 => {
            let p = require_p(p, "2..=5 (required)")?;
            if !(2..=5).contains(&p) {
                return Err(Error::ParamRange {
                    name: "p",
                    value: p as u64,
                    range: "2..=5",
                });
            }
            let n = (1u32 << p) - 1;
            let s = guaranteed_run_bound(p);
            let header = format!("# variant=theorem2 p={p} n={n} s={s}\n");
            if p <= 4 {
                let code = run_avoiding_code(p, None)?;
                write_code_file(out.as_ref(), &header, &code)?;
                eprintln!("n={n} s={s} size={} max_run={}", code.len(), code.max_run_ones());
            } else {
                // 2^26 words: stream, run-checking on the fly.
                let stream = run_avoiding_stream(p, None)?;
                let expected = stream.expected_len();
                let mut sink = open_sink(out.as_ref()).map_err(io_err)?;
                let mut count = 0u64;
                let mut max_run = 0u32;
                for word in stream {
                    let run = word.max_run_ones();
                    if run >= s {
                        eprintln!("error: emitted word {word} carries a run of {run} ones");
                        return Ok(EXIT_NEGATIVE);
                    }
                    max_run = max_run.max(run);
                    count += 1;
                    writeln!(sink, "{word}").map_err(io_err)?;
                }
                sink.flush().map_err(io_err)?;
                debug_assert_eq!(count, expected);
                eprintln!("n={n} s={s} size={count} max_run={max_run}");
            }
            Ok(EXIT_OK)
        }
        Variant::Hamming => {
            let p = require_p(p, "1..=4 (required)")?;
            let code = hamming_code(p)?;
            let n = code.n();
            let header = format!("# variant=hamming p={p} n={n}\n");
            write_code_file(out.as_ref(), &header, &code)?;
            eprintln!("n={n} size={} max_run={}", code.len(), code.max_run_ones());
            Ok(EXIT_OK)
        }
        Variant::Gamma7Example => {
            if let Some(p) = p {
                return Err(Error::ParamRange {
                    name: "p",
                    value: p as u64,
                    range: "(not accepted for gamma7-example)",
                });
            }
            let code = example_gamma7_code();
            let header = "# variant=gamma7-example n=7 s=5\n".to_string();
            write_code_file(out.as_ref(), &header, &code)?;
            eprintln!("n=7 s=5 size={} max_run={}", code.len(), code.max_run_ones());
            Ok(EXIT_OK)
        }
    }
}

fn write_code_file(out: Option<&PathBuf>, header: &str, code: &Code) -> Result<(), Error> {
    let mut sink = open_sink(out).map_err(io_err)?;
    sink.write_all(header.as_bytes())
        .and_then(|_| sink.write_all(code.render_lines().as_bytes()))
        .and_then(|_| sink.flush())
        .map_err(io_err)
}

fn cmd_verify(path: &PathBuf, mode: Mode, s: Option<u32>) -> Result<u8, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read {}: {e}", path.display());
        io_err(e)
    })?;
    let code = Code::parse(&text)?;
    let report = match mode {
        Mode::Qn => code.verify_perfect_qn()?,
        Mode::Gamma => {
            let s = s.ok_or(Error::ParamRange {
                name: "s",
                value: 0,
                range: "1.. (required for --mode gamma)",
            })?;
            let graph = AvoidanceGraph::ones_run(code.n(), s as u64)?;
            graph.verify_perfect(&code)?
        }
    };
    print!("{}", report.render_kv());
    Ok(if report.is_perfect() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_search(n: u32, s: u32, limit: Option<usize>) -> Result<u8, Error> {
    let outcome = search_perfect_codes(n, s, limit)?;
    print!(
        "exists: {}\nexhausted: {}\nsolution_count: {}\nnodes_expanded: {}\n",
        outcome.exists, outcome.exhausted, outcome.solution_count, outcome.nodes_expanded
    );
    for code in &outcome.solutions {
        let words: Vec<String> = code.iter().map(|w| w.to_string()).collect();
        println!("solution: {}", words.join(" "));
    }
    Ok(EXIT_OK)
}

fn cmd_min_s(n: u32, s_max: u32) -> Result<u8, Error> {
    match min_s(n, s_max)? {
        Some(s) => println!("min_s: {s}"),
        None => println!("min_s: none"),
    }
    Ok(EXIT_OK)
}

fn cmd_scan(
    n_range: RangeInclusive<u32>,
    s_range: RangeInclusive<u32>,
    max_nodes: u64,
) -> Result<u8, Error> {
    let report = conjecture_scan(n_range, s_range, Some(max_nodes));
    print!("{}", report.render_table());
    Ok(if report.fully_decided() {
        EXIT_OK
    } else {
        EXIT_CAPACITY
    })
}

fn cmd_count(n: u32, s: u32) -> Result<u8, Error> {
    println!("vertices: {}", vertex_count(n, s)?);
    Ok(EXIT_OK)
}
