use std::process::ExitCode;

use andre_core::seidel::{joint_distribution, twin_seidel, Pair};
use andre_core::series::{lhs_series, rhs_series, SeriesData};
use andre_core::suites::{Params, Suite};
use andre_core::{
    enumerate, evaluate_stat, parse_permutation, Bijection, CountMatrix, Direction, EntringerTable,
    Family, IdentityId, Perm, Stat, SuiteReport, TruncatedSeries, BRUTE_FORCE_CUTOFF,
};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

/// André permutations, Entringer numbers and twin Seidel matrices.
#[derive(Parser)]
#[command(name = "andre", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Lines,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Recurrence,
    Bruteforce,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Lhs,
    Rhs,
}

#[derive(Subcommand)]
enum Cmd {
    /// List a family of permutations of 1..n in lexicographic order.
    Enum {
        #[arg(long, value_parser = parse_family)]
        kind: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
    /// Evaluate statistics on one permutation.
    Stats {
        #[arg(long)]
        perm: String,
        /// Comma-separated: F, L, NL, grn, spi, pit.
        #[arg(long, default_value = "F,L,NL,grn,spi,pit")]
        stats: String,
    },
    /// Apply a bijection.
    Map {
        #[arg(long, value_parser = parse_bijection)]
        bijection: Bijection,
        #[arg(long)]
        perm: String,
        #[arg(long, value_parser = parse_direction, default_value = "forward")]
        direction: Direction,
        /// Also check and print the statistic-transfer contract.
        #[arg(long)]
        check: bool,
    },
    /// Dump a twin matrix, from the recurrence or by enumeration.
    Matrices {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "a", ignore_case = true)]
        which: Which,
        #[arg(long, value_enum, default_value = "recurrence")]
        source: Source,
        /// Compare both sources cell by cell.
        #[arg(long)]
        diff: bool,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
    /// Print the Entringer table.
    Entringer {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
    /// Run verification suites; exit status 1 if any check fails.
    Verify {
        /// entringer, theorem-1.1, theorem-1.2, bijections, tables-6, gf, sts or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        degree: u32,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
    /// Export one side of a generating-function identity as JSON.
    ExportSeries {
        /// Identity label, e.g. 1.15 or 7.4.
        #[arg(long, value_parser = parse_identity)]
        id: IdentityId,
        #[arg(long, value_enum, default_value = "rhs")]
        side: Side,
        #[arg(long, default_value_t = 12)]
        degree: u32,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_bijection(s: &str) -> Result<Bijection, String> {
    s.parse()
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    match s {
        "forward" => Ok(Direction::Forward),
        "inverse" => Ok(Direction::Inverse),
        _ => Err(format!("unknown direction {s:?} (forward, inverse)")),
    }
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse()
        .map_err(|e: andre_core::SeriesError| e.to_string())
}

/// Exhaustive enumeration bound, overridable from the environment.
fn brute_bound() -> Result<usize> {
    match std::env::var("ANDRE_BRUTE_BOUND") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("ANDRE_BRUTE_BOUND={v:?} is not a size")),
        Err(_) => Ok(BRUTE_FORCE_CUTOFF),
    }
}

/// Words with one-digit letters print without separators; `e` is the empty word.
fn show_word(w: &Perm) -> String {
    if w.iter().all(|&x| x < 10) {
        w.compact()
    } else {
        w.to_string()
    }
}

fn num(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn bracket_rows(m: &CountMatrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn print_matrix(m: &CountMatrix, format: Format) {
    match format {
        Format::Lines => println!("{}", bracket_rows(m)),
        Format::Csv => {
            for r in m.rows() {
                println!(
                    "{}",
                    r.iter()
                        .map(BigInt::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
        }
        Format::Json => {
            let out = MatrixOut {
                n: m.n,
                kind: m.kind.to_string(),
                entries: m
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(num).collect())
                    .collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
    }
}

fn recurrence_matrix(n: usize, which: Which) -> Result<CountMatrix> {
    if n < 2 {
        bail!("twin matrices start at n = 2");
    }
    let mut twin = twin_seidel(n)?;
    let (a, b) = twin.pop().expect("n >= 2");
    Ok(match which {
        Which::A => a,
        Which::B => b,
    })
}

fn brute_matrix(n: usize, which: Which, bound: usize) -> Result<CountMatrix> {
    if n < 2 {
        bail!("twin matrices start at n = 2");
    }
    let (fam, pair) = match which {
        Which::A => (Family::Andre1, Pair::FNl),
        Which::B => (Family::Andre2, Pair::LGrn),
    };
    Ok(joint_distribution(n, fam, pair, bound)?)
}

#[derive(Serialize)]
struct CheckOut<'a> {
    name: &'a str,
    status: &'static str,
    detail: &'a str,
}

#[derive(Serialize)]
struct SuiteOut<'a> {
    suite: &'a str,
    passed: bool,
    checks: Vec<CheckOut<'a>>,
}

fn suite_json(r: &SuiteReport) -> SuiteOut<'_> {
    SuiteOut {
        suite: &r.suite,
        passed: r.passed(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckOut {
                name: &c.name,
                status: if c.passed { "pass" } else { "fail" },
                detail: &c.detail,
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct MatrixOut {
    n: usize,
    kind: String,
    entries: Vec<Vec<Value>>,
}

#[derive(Serialize)]
struct TermOut {
    exp: Vec<u32>,
    num: String,
    den: String,
}

#[derive(Serialize)]
struct SeriesOut {
    vars: usize,
    degree: u32,
    terms: Vec<TermOut>,
}

fn series_out(s: &TruncatedSeries) -> SeriesOut {
    SeriesOut {
        vars: s.vars(),
        degree: s.degree(),
        terms: s
            .terms()
            .into_iter()
            .map(|(e, c)| TermOut {
                exp: e[..s.vars()].to_vec(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect(),
    }
}

/// `Ok(true)` on success, `Ok(false)` when a check failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Enum { kind, n, format } => {
            let cap = brute_bound()? + 2;
            if n > cap {
                bail!("n = {n} exceeds the enumeration bound {cap} (ANDRE_BRUTE_BOUND + 2)");
            }
            let words = enumerate(kind, n);
            match format {
                Format::Lines => words.iter().for_each(|w| println!("{}", show_word(w))),
                Format::Csv => words.iter().for_each(|w| {
                    println!(
                        "{}",
                        w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                    )
                }),
                Format::Json => {
                    let all: Vec<&[u32]> = words.iter().map(Perm::letters).collect();
                    println!("{}", serde_json::to_string(&all)?);
                }
            }
        }
        Cmd::Stats { perm, stats } => {
            let w = parse_permutation(&perm)?;
            let mut out = Vec::new();
            for name in stats.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let st: Stat = name.parse()?;
                let v = evaluate_stat(&w, st).with_context(|| format!("{name} on {w}"))?;
                out.push(format!("{}={v}", st.name()));
            }
            println!("{}", out.join(" "));
        }
        Cmd::Map {
            bijection,
            perm,
            direction,
            check,
        } => {
            let w = parse_permutation(&perm)?;
            let image = bijection.apply(&w, direction)?;
            println!("{image}");
            if check {
                let mut ok = true;
                for (clause, holds) in bijection.contract(&w, &image, direction) {
                    ok &= holds;
                    println!("[{}] {clause}", if holds { "pass" } else { "FAIL" });
                }
                return Ok(ok);
            }
        }
        Cmd::Matrices {
            n,
            which,
            source,
            diff,
            format,
        } => {
            let bound = brute_bound()?;
            if diff {
                let rec = recurrence_matrix(n, which)?;
                let bf = brute_matrix(n, which, bound)?;
                let cells = rec.diff(&bf);
                if cells.is_empty() {
                    println!("identical");
                    return Ok(true);
                }
                for (m, k, r, b) in cells {
                    println!("({m},{k}): recurrence {r}, bruteforce {b}");
                }
                return Ok(false);
            }
            let m = match source {
                Source::Recurrence => recurrence_matrix(n, which)?,
                Source::Bruteforce => brute_matrix(n, which, bound)?,
            };
            print_matrix(&m, format);
        }
        Cmd::Entringer { max_n, format } => {
            let t = EntringerTable::new(max_n);
            match format {
                Format::Lines => {
                    for n in 1..=max_n {
                        let row: Vec<String> = t.row(n).iter().map(BigInt::to_string).collect();
                        println!("{}", row.join(" "));
                    }
                }
                Format::Csv => {
                    println!("n,m,value");
                    for n in 1..=max_n {
                        for m in 1..=n {
                            println!("{n},{m},{}", t.get(n, m));
                        }
                    }
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct TableOut {
                        max_n: usize,
                        rows: Vec<Vec<Value>>,
                    }
                    let rows = (1..=max_n)
                        .map(|n| t.row(n).iter().map(num).collect())
                        .collect();
                    println!("{}", serde_json::to_string(&TableOut { max_n, rows })?);
                }
            }
        }
        Cmd::Verify {
            suite,
            max_n,
            degree,
            format,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(anyhow::Error::msg)?]
            };
            let params = Params {
                max_n,
                degree,
                bound: brute_bound()?,
            };
            let reports: Vec<SuiteReport> = std::thread::scope(|s| {
                let hs: Vec<_> = suites
                    .iter()
                    .map(|&x| s.spawn(move || x.run(&params)))
                    .collect();
                hs.into_iter()
                    .map(|h| h.join().expect("suite panicked"))
                    .collect()
            });
            let passed = reports.iter().all(SuiteReport::passed);
            match format {
                Format::Json => {
                    let out: Vec<SuiteOut> = reports.iter().map(suite_json).collect();
                    #[derive(Serialize)]
                    struct VerifyOut<'a> {
                        passed: bool,
                        suites: Vec<SuiteOut<'a>>,
                    }
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&VerifyOut {
                            passed,
                            suites: out
                        })?
                    );
                }
                Format::Lines | Format::Csv => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
            }
            return Ok(passed);
        }
        Cmd::ExportSeries { id, side, degree } => {
            let s = match side {
                Side::Rhs => rhs_series(id, degree)?,
                Side::Lhs => {
                    let size = id.required_size(degree);
                    let twin = twin_seidel(size.max(2))?;
                    let table = EntringerTable::new(size);
                    lhs_series(
                        id,
                        SeriesData {
                            twin: &twin,
                            table: &table,
                        },
                        degree,
                    )?
                }
            };
            println!("{}", serde_json::to_string(&series_out(&s))?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
