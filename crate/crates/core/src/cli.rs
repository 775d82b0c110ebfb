//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and reports through the given streams.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{
    bound_table, classify_paired_vs_pencil, default_rows, delta, lp_bound, m1_bruteforce, table_csv, table_json,
};
use crate::combinatorics::Block;
use crate::degree::{degree_via_span, verify_paired_theorem};
use crate::designs::{hartman_anticomplementary_check, is_design, search_designs, DesignParams};
use crate::error::{Error, Result};
use crate::rational::{round_2dp, to_pq};
use crate::scheme::degree_via_dual;
use crate::slice_fn::{basic, paired, recover_paired_legs, BasicSpec, PairedSpec, SliceFunction};

#[derive(Debug, Parser)]
#[command(name = "slice", version, about = "Degrees, designs and minimal sizes on the slice")]
struct Cli {
    /// Write stdout output to FILE instead.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree of a function given as JSON.
    Degree {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Span)]
        method: Method,
    },
    /// Build a basic or paired function.
    #[command(subcommand)]
    Construct(Construct),
    /// Recover the legs of a paired function.
    Recover {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// Bound table for one t.
    Table {
        #[arg(long)]
        t: usize,
        /// n:k pairs, comma separated.
        #[arg(long, value_parser = parse_rows)]
        rows: Option<Rows>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Linear programming bound, exact and rounded.
    Lp(Nkt),
    /// Divisibility bound.
    Delta(Nkt),
    /// Compare span degrees of paired functions with the closed form.
    VerifyTheorem {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Design predicates and search.
    #[command(subcommand)]
    Design(DesignCmd),
    /// Exact minimal size by exhaustive search.
    SearchM1 {
        #[command(flatten)]
        nkt: Nkt,
        #[arg(long)]
        cap: u64,
    },
    /// Size of p_{I,J} with #I = i, #J = j against a t-pencil.
    Classify {
        #[command(flatten)]
        nkt: Nkt,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
}

#[derive(Debug, Args)]
struct Nkt {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    t: usize,
}

#[derive(Debug, Args)]
struct Legs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// 1-based labels, comma separated.
    #[arg(long, value_parser = parse_labels, default_value = "")]
    i: Labels,
    #[arg(long, value_parser = parse_labels, default_value = "")]
    j: Labels,
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// f_{I,J}, the blocks K with I ⊆ K ⊆ J.
    Basic(Legs),
    /// p_{I,J} = f_{I,J^∁} + f_{J,I^∁}.
    Paired(Legs),
}

#[derive(Debug, Subcommand)]
enum DesignCmd {
    /// Report λ if the block set is a t-design.
    Check {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long)]
        t: usize,
        /// Also test anti-complementarity.
        #[arg(long)]
        hartman: bool,
    },
    /// All t-(v,k,λ) designs, as a JSON list.
    Search {
        #[arg(long)]
        t: usize,
        #[arg(long, alias = "n")]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Span,
    Dual,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
struct Labels(Vec<usize>);

#[derive(Debug, Clone)]
struct Rows(Vec<(usize, usize)>);

/// Comma-separated 1-based labels; `0` entries are placeholders and skipped.
fn parse_labels(s: &str) -> std::result::Result<Labels, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| format!("bad label {part:?}"))?;
        if v != 0 {
            out.push(v);
        }
    }
    Ok(Labels(out))
}

fn parse_rows(s: &str) -> std::result::Result<Rows, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (n, k) = part.split_once(':').ok_or_else(|| format!("expected n:k, got {part:?}"))?;
        let n = n.trim().parse().map_err(|_| format!("bad n in {part:?}"))?;
        let k = k.trim().parse().map_err(|_| format!("bad k in {part:?}"))?;
        out.push((n, k));
    }
    Ok(Rows(out))
}

fn read_function(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<SliceFunction> {
    let text = match input {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    SliceFunction::from_json(&text)
}

fn legs(l: &Legs) -> Result<(Block, Block)> {
    Ok((Block::from_labels(&l.i.0, l.n)?, Block::from_labels(&l.j.0, l.n)?))
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> Result<(String, i32)> {
    let text = match cmd {
        Command::Degree { input, method } => {
            let f = read_function(&input, stdin)?;
            match method {
                Method::Span => format!("{}\n", degree_via_span(&f)?),
                Method::Dual => format!("{}\n", degree_via_dual(&f)?),
                Method::Both => {
                    let (s, d) = (degree_via_span(&f)?, degree_via_dual(&f)?);
                    let code = if s == d { 0 } else { 1 };
                    return Ok((format!("span {s}\ndual {d}\n"), code));
                }
            }
        }
        Command::Construct(Construct::Basic(l)) => {
            let (i, j) = legs(&l)?;
            basic(BasicSpec::new(i, j)?, l.n, l.k)?.to_json() + "\n"
        }
        Command::Construct(Construct::Paired(l)) => {
            let (i, j) = legs(&l)?;
            paired(PairedSpec::new(i, j)?, l.n, l.k)?.to_json() + "\n"
        }
        Command::Recover { input } => {
            let g = read_function(&input, stdin)?;
            let doc = match recover_paired_legs(&g)? {
                Some((i, j)) => json!({"paired": true, "I": i.labels(), "J": j.labels()}),
                None => json!({"paired": false}),
            };
            doc.to_string() + "\n"
        }
        Command::Table { t, rows, format } => {
            let rows = rows.map_or_else(|| default_rows(t), |r| r.0);
            if rows.is_empty() {
                return Err(Error::Precondition(format!("no default rows for t = {t}; pass --rows")));
            }
            let table = bound_table(t, &rows)?;
            match format {
                Format::Csv => table_csv(&table),
                Format::Json => table_json(&table) + "\n",
            }
        }
        Command::Lp(Nkt { n, k, t }) => {
            let v = lp_bound(n, k, t)?;
            format!("{} {}\n", to_pq(&v), round_2dp(&v))
        }
        Command::Delta(Nkt { n, k, t }) => format!("{}\n", delta(n, k, t)?),
        Command::VerifyTheorem { max_n } => {
            let report = verify_paired_theorem(max_n)?;
            if report.is_ok() {
                "OK 0 mismatches\n".to_string()
            } else {
                let mut s = format!("FAIL {} mismatches\n", report.mismatches.len());
                for c in &report.mismatches {
                    s += &format!(
                        "n={} k={} i={} j={} span={} formula={}\n",
                        c.n, c.k, c.i, c.j, c.by_span, c.by_formula
                    );
                }
                return Ok((s, 1));
            }
        }
        Command::Design(DesignCmd::Check { input, t, hartman }) => {
            let d = read_function(&input, stdin)?;
            let mut s = match is_design(&d, t)? {
                Some(lambda) => format!("design lambda {lambda}\n"),
                None => "not a design\n".to_string(),
            };
            if hartman {
                let ok = hartman_anticomplementary_check(&d)?;
                s += if ok { "anticomplementary\n" } else { "not anticomplementary\n" };
            }
            s
        }
        Command::Design(DesignCmd::Search { t, v, k, lambda }) => {
            let found = search_designs(&DesignParams::new(t, v, k, lambda)?)?;
            let docs: Vec<serde_json::Value> = found
                .iter()
                .map(|d| serde_json::from_str(&d.to_json()).expect("own output parses"))
                .collect();
            serde_json::to_string(&docs)? + "\n"
        }
        Command::SearchM1 { nkt: Nkt { n, k, t }, cap } => match m1_bruteforce(n, k, t, cap)? {
            Some(r) => format!("{}\n{}\n", r.size, r.witness.to_json()),
            None => format!("none <= {cap}\n"),
        },
        Command::Classify { nkt: Nkt { n, k, t }, i, j } => {
            format!("{}\n", classify_paired_vs_pencil(n, k, t, i, j)?)
        }
    };
    Ok((text, 0))
}

/// Applies `SLICE_THREADS` to the global worker pool, once.
fn configure_threads() -> std::result::Result<(), String> {
    let Ok(v) = std::env::var("SLICE_THREADS") else {
        return Ok(());
    };
    let threads: usize = v.trim().parse().map_err(|_| format!("SLICE_THREADS: bad value {v:?}"))?;
    // A pool that already exists keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Runs one invocation with explicit streams and returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    match execute(cli.command, stdin) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, text.as_bytes()),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("slice").chain(args.iter().copied());
        let code = run_with(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn label_parsing() {
        assert_eq!(parse_labels("1,0").unwrap().0, vec![1]);
        assert_eq!(parse_labels("").unwrap().0, Vec::<usize>::new());
        assert_eq!(parse_labels(" 6, 7 ").unwrap().0, vec![6, 7]);
        assert!(parse_labels("x").is_err());
        assert_eq!(parse_rows("6:3,7:3").unwrap().0, vec![(6, 3), (7, 3)]);
        assert!(parse_rows("6-3").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["lp", "--n", "8", "--k", "4", "--t", "2"], "").1, "20/3 6.67\n");
        let (code, _, err) = call(&["lp", "--n", "6", "--k", "4", "--t", "2"], "");
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        assert_eq!(call(&["lp", "--n", "6"], "").0, 2);
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn degree_from_stdin() {
        let doc = r#"{"n":6,"k":3,"blocks":[[1,2,3],[4,5,6]]}"#;
        assert_eq!(call(&["degree"], doc).1, "2\n");
        assert_eq!(call(&["degree", "--method", "both"], doc).1, "span 2\ndual 2\n");
    }

    #[test]
    fn construct_then_recover() {
        let (code, built, _) = call(&["construct", "paired", "--n", "7", "--k", "3", "--i", "1,0", "--j", "6,7"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["recover"], &built);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"I\":[1],\"J\":[6,7],\"paired\":true}\n");
    }
}
