//! Command-line front end.
//!
//! Graphs travel as graph6, one per line. `-` in place of a graph reads lines
//! from standard input. Exit codes: 0 success or claim holds, 1 counterexample
//! found, 2 usage or input error.

use std::fs;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};

use crate::counting::{count_cliques, count_triangles};
use crate::covering::tau_triangle;
use crate::enumeration::{enumerate_labeled, run_shards, EnumerationTask, Filters};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use crate::verify::{run_claim, CheckOptions, ClaimId, Params};

/// Environment variable supplying the default worker thread count.
pub const THREADS_ENV: &str = "EXTREMAL_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "extremal",
    version,
    about = "Triangle counts, triangle covers and extremal graph checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the graph6 encoding of a family member, e.g. `kminus:3,4`.
    Gen {
        spec: FamilySpec,
        /// Print the closed-form invariants instead, in `count` format.
        #[arg(long)]
        predict: bool,
    },
    /// Count edges, triangles and optionally k-cliques.
    Count {
        graph: String,
        #[arg(long)]
        cliques: Option<usize>,
    },
    /// Exact triangle covering number with a minimum cover and a packing.
    Tau { graph: String },
    /// Decide whether two graphs are isomorphic.
    Iso { first: String, second: String },
    /// List every labelled graph with `n` vertices and `m` edges.
    Enumerate {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Run only this shard.
        #[arg(long)]
        shard: Option<usize>,
        #[arg(long)]
        min_triangles: Option<u64>,
        #[arg(long)]
        max_triangles: Option<u64>,
        #[arg(long)]
        min_tau: Option<usize>,
        #[arg(long)]
        max_tau: Option<usize>,
        #[command(flatten)]
        threads: Threads,
    },
    /// Exhaustively check a claim and print a report.
    Verify {
        claim: ClaimId,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Grid bound for the first coordinate of the inequality claim.
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Write the JSON report to this file, or to stdout with `-`.
        #[arg(long)]
        json: Option<String>,
        #[arg(long, default_value_t = 64)]
        shards: usize,
        #[command(flatten)]
        threads: Threads,
    },
}

#[derive(Args, Debug)]
struct Threads {
    /// Worker threads; defaults to $EXTREMAL_THREADS, then the CPU count.
    #[arg(long)]
    threads: Option<usize>,
}

impl Threads {
    fn resolve(&self) -> usize {
        self.threads
            .or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
            .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
            .unwrap_or(1)
            .max(1)
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let first = text.lines().next().unwrap_or("invalid arguments");
                let _ = writeln!(stderr, "{first}");
            }
            return code;
        }
    };
    let outcome = dispatch(cli.command, stdin, stdout, stderr);
    let _ = stdout.flush();
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// The graphs named by `arg`: one graph6 string, or every non-empty stdin
/// line for `-`.
fn graphs(arg: &str, stdin: &mut dyn BufRead) -> std::result::Result<Vec<Graph>, Failure> {
    if arg != "-" {
        return Ok(vec![Graph::from_graph6(arg)?]);
    }
    let mut out = Vec::new();
    for line in stdin.lines() {
        let line = line?;
        let line = line.trim();
        if !line.is_empty() {
            out.push(Graph::from_graph6(line)?);
        }
    }
    Ok(out)
}

fn dispatch(
    cmd: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    match cmd {
        Command::Gen { spec, predict } => {
            if predict {
                let p = spec.predict()?;
                let mut line = format!("n={} edges={}", p.vertices, p.edges);
                if let Some(t) = p.triangles {
                    line += &format!(" triangles={t}");
                }
                if let Some((k, c)) = p.kcliques {
                    line += &format!(" k{k}={c}");
                }
                if let Some(claim) = p.tau_expected {
                    line += &format!(" tau={} tau_valid={}", claim.tau, claim.valid);
                }
                writeln!(out, "{line}")?;
            } else {
                writeln!(out, "{}", spec.build()?.to_graph6()?)?;
            }
            Ok(0)
        }
        Command::Count { graph, cliques } => {
            for g in graphs(&graph, stdin)? {
                let mut line = format!(
                    "n={} edges={} triangles={}",
                    g.n(),
                    g.edge_count(),
                    count_triangles(&g)
                );
                if let Some(k) = cliques {
                    line += &format!(" k{k}={}", count_cliques(&g, k));
                }
                writeln!(out, "{line}")?;
            }
            Ok(0)
        }
        Command::Tau { graph } => {
            for g in graphs(&graph, stdin)? {
                let cert = tau_triangle(&g);
                let packing: Vec<String> = cert
                    .packing
                    .iter()
                    .map(|t| format!("{}-{}-{}", t.i, t.j, t.k))
                    .collect();
                writeln!(
                    out,
                    "tau={} cover={} packing={}",
                    cert.tau,
                    cert.cover,
                    packing.join(",")
                )?;
            }
            Ok(0)
        }
        Command::Iso { first, second } => {
            let g = Graph::from_graph6(&first)?;
            let h = Graph::from_graph6(&second)?;
            writeln!(out, "{}", are_isomorphic(&g, &h))?;
            Ok(0)
        }
        Command::Enumerate {
            n,
            m,
            shards,
            shard,
            min_triangles,
            max_triangles,
            min_tau,
            max_tau,
            threads,
        } => {
            let filters = Filters {
                min_triangles,
                max_triangles,
                min_tau,
                max_tau,
            };
            enumerate(n, m, shards, shard, filters, threads.resolve(), out, err)
        }
        Command::Verify {
            claim,
            n,
            t,
            s,
            k,
            a,
            b,
            json,
            shards,
            threads,
        } => {
            let params = Params {
                n,
                t,
                s,
                k,
                a_max: a,
                b_max: b,
            };
            let opts = CheckOptions {
                shards: shards.max(1),
                threads: threads.resolve(),
                ..CheckOptions::default()
            };
            let report = run_claim(claim, &params, &opts)?;
            match json.as_deref() {
                Some("-") => writeln!(out, "{}", report.to_json())?,
                Some(path) => {
                    fs::write(path, report.to_json() + "\n")?;
                    writeln!(out, "{}", report.summary())?;
                }
                None => writeln!(out, "{}", report.summary())?,
            }
            Ok(if report.holds { 0 } else { 1 })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    n: usize,
    m: usize,
    shards: usize,
    shard: Option<usize>,
    filters: Filters,
    threads: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let ids: Vec<usize> = match shard {
        Some(id) => vec![id],
        None => (0..shards).collect(),
    };
    let tasks: Vec<EnumerationTask> = ids
        .iter()
        .map(|&id| {
            Ok(EnumerationTask::new(n, m)?
                .with_shard(shards, id)?
                .with_filters(filters))
        })
        .collect::<Result<_>>()?;

    if threads <= 1 || tasks.len() == 1 {
        for task in &tasks {
            let mut io = Ok(());
            let stats = enumerate_labeled(task, |g| {
                if io.is_ok() {
                    io = writeln!(
                        out,
                        "{}",
                        g.to_graph6().expect("enumerated graphs fit graph6")
                    );
                }
            })?;
            io?;
            writeln!(
                err,
                "{}",
                serde_json::to_string(&stats).expect("stats serialize")
            )?;
        }
        return Ok(0);
    }

    let results = run_shards(
        n,
        m,
        shards,
        threads,
        |_| Vec::new(),
        |found: &mut Vec<String>, g| {
            if filters.accepts(g) {
                found.push(g.to_graph6().expect("enumerated graphs fit graph6"));
            }
        },
    )?;
    for (mut stats, found) in results {
        stats.passed = found.len() as u64;
        for code in found {
            writeln!(out, "{code}")?;
        }
        writeln!(
            err,
            "{}",
            serde_json::to_string(&stats).expect("stats serialize")
        )?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["extremal"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_k4() {
        let (code, out, _) = call(&["count", "C~", "--cliques", "4"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "n=4 edges=6 triangles=4 k4=1\n");
    }

    #[test]
    fn gen_and_predict_agree() {
        let (_, g6, _) = call(&["gen", "kminus:3,3"], "");
        let (_, counted, _) = call(&["count", "-"], &g6);
        let (_, predicted, _) = call(&["gen", "kminus:3,3", "--predict"], "");
        assert_eq!(counted, "n=6 edges=10 triangles=3\n");
        assert!(predicted.starts_with(counted.trim_end()));
    }

    #[test]
    fn tau_and_iso() {
        let (_, out, _) = call(&["tau", "C~"], "");
        assert!(out.starts_with("tau=2 cover="));
        let (_, out, _) = call(&["iso", "C~", "C~"], "");
        assert_eq!(out, "true\n");
    }

    #[test]
    fn enumerate_threads_match_serial() {
        let args = [
            "enumerate",
            "5",
            "6",
            "--shards",
            "3",
            "--min-triangles",
            "1",
        ];
        let serial = call(&[&args[..], &["--threads", "1"]].concat(), "");
        let parallel = call(&[&args[..], &["--threads", "3"]].concat(), "");
        assert_eq!(serial, parallel);
        assert_eq!(serial.2.lines().count(), 3);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["count", "C~~~"], "").0, 2);
        assert_eq!(call(&["gen", "kminus:1,3"], "").0, 2);
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["verify", "main", "--n", "12"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }
}
