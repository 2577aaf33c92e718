//! Command-line front end.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::csp::{verify_csp_for_content, CspReport};
use crate::liemodules::{higher_lie, kw_series, schocker, stembridge_series, wreath_char, wreath_dim, Kind};
use crate::symfunc::{set_cache_dir, CACHE_DIR_ENV};
use crate::verify::{self, Caps, Suite, MAX_AB, MAX_N};
use crate::words::{descent_set, flex, maj, Composition};
use crate::{CycleType, Error, Partition, PartitionTuple, Result, Scalar, SymFunc, Q};

#[derive(Parser, Debug)]
#[command(name = "cyclesieve", version, about = "Schur expansions of induced characters and cyclic sieving checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Directory for cached Kostka and character tables.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Trivial,
    Sign,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Trivial => Kind::Trivial,
            KindArg::Sign => Kind::Sign,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    Maj,
    Flex,
    /// Number of descents; not a sieving statistic in general.
    Des,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Characters induced from the cyclic group generated by an n-cycle.
    Kw {
        #[arg(long)]
        n: usize,
    },
    /// Characters induced from a cyclic group of given cycle type.
    Stembridge {
        /// Cycle type, e.g. "[2,1]".
        #[arg(long)]
        nu: String,
    },
    /// One-dimensional characters of C_a ≀ S_b induced to S_ab.
    Schocker {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Trivial)]
        kind: KindArg,
    },
    /// An irreducible of C_a ≀ S_b induced to S_ab.
    Wreath {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Partition tuple as nested arrays, e.g. "[[1],[]]".
        #[arg(long)]
        ul: String,
    },
    /// Higher Lie module.
    Lie {
        /// Partition, e.g. "[2,1]".
        #[arg(long)]
        lambda: String,
    },
    /// Cyclic sieving for maj or flex on all words of a content.
    Csp {
        /// Content, e.g. "[2,0,1]".
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = StatArg::Maj)]
        stat: StatArg,
    },
    /// Run verification suites.
    Verify {
        /// A suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = MAX_AB)]
        max_ab: usize,
        #[arg(long, default_value_t = 200)]
        random_sets: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

/// Outcome of a command: printed text plus exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn usage(message: impl Into<String>) -> Output {
    Output {
        stdout: String::new(),
        stderr: format!("error: {}\n\nFor more information, try '--help'.\n", message.into()),
        code: 2,
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    Partition::parse(s)
}

fn parse_json_list(s: &str) -> Result<Vec<usize>> {
    serde_json::from_str(s).map_err(|e| Error::OutOfRange(format!("{s:?}: {e}")))
}

fn parse_tuple(s: &str) -> Result<PartitionTuple> {
    let raw: Vec<Vec<usize>> = serde_json::from_str(s).map_err(|e| Error::OutOfRange(format!("{s:?}: {e}")))?;
    Ok(PartitionTuple::new(raw.into_iter().map(Partition::new).collect::<Result<_>>()?))
}

fn check_cap(what: &str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        return Err(Error::OutOfRange(format!("{what} = {value} exceeds the cap {cap}")));
    }
    Ok(())
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn schur_json(f: &SymFunc<Q>) -> Result<Value> {
    let mut m = Map::new();
    for (p, c) in f.to_schur().terms_desc() {
        let v = c
            .to_i64_exact()
            .ok_or_else(|| Error::NonIntegral(format!("coefficient {c} of s{p}")))?;
        m.insert(p.to_bracket_string(), json!(v));
    }
    Ok(Value::Object(m))
}

/// `(3,1):1 (2,1,1):1`, or `0`.
pub fn schur_row(f: &SymFunc<Q>) -> String {
    let s = f.to_schur();
    if s.is_zero() {
        return "0".into();
    }
    s.terms_desc()
        .map(|(p, c)| format!("{p}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

struct Series {
    command: &'static str,
    params: Value,
    entries: Vec<(Value, String, SymFunc<Q>)>,
    extra_rows: Vec<String>,
}

impl Series {
    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let series = self
                    .entries
                    .iter()
                    .map(|(index, _, f)| Ok(json!({"index": index, "schur": schur_json(f)?})))
                    .collect::<Result<Vec<_>>>()?;
                let doc = json!({"command": self.command, "params": self.params, "series": series});
                Ok(format!("{doc}\n"))
            }
            Format::Table => {
                let mut out = String::new();
                for row in &self.extra_rows {
                    out.push_str(row);
                    out.push('\n');
                }
                for (_, label, f) in &self.entries {
                    if label.is_empty() {
                        out.push_str(&format!("{}\n", schur_row(f)));
                    } else {
                        out.push_str(&format!("{label}: {}\n", schur_row(f)));
                    }
                }
                Ok(out)
            }
        }
    }
}

fn indexed_series(command: &'static str, params: Value, series: BTreeMap<usize, SymFunc<Q>>) -> Series {
    Series {
        command,
        params,
        entries: series.into_iter().map(|(r, f)| (json!(r), format!("r={r}"), f)).collect(),
        extra_rows: Vec::new(),
    }
}

fn single(command: &'static str, params: Value, index: Value, f: SymFunc<Q>) -> Series {
    Series {
        command,
        params,
        entries: vec![(index, String::new(), f)],
        extra_rows: Vec::new(),
    }
}

fn csp_output(alpha: &Composition, stat: StatArg, report: &CspReport, format: Format) -> String {
    let stat_name = match stat {
        StatArg::Maj => "maj",
        StatArg::Flex => "flex",
        StatArg::Des => "des",
    };
    match format {
        Format::Json => {
            let profile: Map<String, Value> = report
                .orbit_profile
                .iter()
                .map(|(size, count)| (size.to_string(), json!(count)))
                .collect();
            let witness = report
                .witness
                .as_ref()
                .map(|w| json!({"r": w.r, "fixed_points": w.fixed_points, "value": format!("{:?}", w.value)}))
                .unwrap_or(Value::Null);
            let doc = json!({
                "command": "csp",
                "params": {"alpha": alpha.parts(), "stat": stat_name},
                "csp": {
                    "holds": report.holds,
                    "order": report.order,
                    "orbit_profile": profile,
                    "evaluation_agrees": report.evaluation_agrees,
                    "witness": witness,
                },
            });
            format!("{doc}\n")
        }
        Format::Table => {
            let profile: Vec<String> = report
                .orbit_profile
                .iter()
                .map(|(size, count)| format!("{size}x{count}"))
                .collect();
            let mut out = format!(
                "holds: {}\norder: {}\norbits: {}\nevaluation_agrees: {}\n",
                report.holds,
                report.order,
                profile.join(" "),
                report.evaluation_agrees
            );
            if let Some(w) = &report.witness {
                out.push_str(&format!("witness: r={} fixed_points={} value={:?}\n", w.r, w.fixed_points, w.value));
            }
            out
        }
    }
}

fn run_verify(suite: &str, caps: &Caps, format: Format) -> Result<Output> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let mut rows = Vec::new();
    let mut json_suites = Vec::new();
    let mut first_failure = None;
    for s in suites {
        let report = verify::run(s, caps)?;
        if first_failure.is_none() {
            first_failure = report.failures.first().map(|f| format!("{s}: {f}"));
        }
        rows.push(format!(
            "{} {s}: {} checks, {} failures",
            if report.passed() { "PASS" } else { "FAIL" },
            report.checks,
            report.failures.len()
        ));
        json_suites.push(json!({
            "suite": s.name(),
            "checks": report.checks,
            "passed": report.passed(),
            "failures": report.failures,
        }));
    }
    let stdout = match format {
        Format::Json => {
            let doc = json!({
                "command": "verify",
                "params": {"suite": suite, "max_n": caps.max_n, "max_ab": caps.max_ab,
                           "random_sets": caps.random_sets, "seed": caps.seed},
                "suites": json_suites,
            });
            format!("{doc}\n")
        }
        Format::Table => rows.iter().map(|r| format!("{r}\n")).collect(),
    };
    Ok(match first_failure {
        None => Output {
            stdout,
            stderr: String::new(),
            code: 0,
        },
        Some(w) => Output {
            stdout,
            stderr: format!("identity failure: {w}\n"),
            code: 1,
        },
    })
}

fn execute(cli: Cli) -> Result<Output> {
    if let Some(dir) = &cli.cache_dir {
        set_cache_dir(Some(dir.clone()));
    }
    let format = cli.format;
    let series = match cli.command {
        Command::Kw { n } => {
            if n == 0 {
                return Err(Error::OutOfRange("n must be positive".into()));
            }
            check_cap("n", n, MAX_N)?;
            indexed_series("kw", json!({"n": n}), kw_series(n)?)
        }
        Command::Stembridge { nu } => {
            let nu = parse_partition(&nu)?;
            if nu.is_empty() {
                return Err(Error::OutOfRange("ν must be nonempty".into()));
            }
            check_cap("|ν|", nu.size(), MAX_N)?;
            let params = json!({"nu": partition_json(&nu)});
            indexed_series("stembridge", params, stembridge_series(&CycleType::new(nu))?)
        }
        Command::Schocker { a, b, r, kind } => {
            check_cap("ab", a * b, MAX_AB)?;
            let kind = Kind::from(kind);
            let f = schocker(a, b, r, kind)?;
            let params = json!({"a": a, "b": b, "r": r, "kind": kind.name()});
            single("schocker", params, json!(r), f)
        }
        Command::Wreath { a, b, ul } => {
            check_cap("ab", a * b, MAX_AB)?;
            let tuple = parse_tuple(&ul)?;
            let f = wreath_char(a, b, &tuple)?;
            let dim = wreath_dim(&tuple);
            let index: Vec<Value> = tuple.entries().iter().map(partition_json).collect();
            let params = json!({"a": a, "b": b, "ul": index.clone(), "dim": dim});
            let mut s = single("wreath", params, Value::Array(index), f);
            s.extra_rows.push(format!("dim={dim}"));
            s
        }
        Command::Lie { lambda } => {
            let lam = parse_partition(&lambda)?;
            check_cap("|λ|", lam.size(), MAX_AB)?;
            let params = json!({"lambda": partition_json(&lam)});
            let index = partition_json(&lam);
            single("lie", params, index, higher_lie(&lam)?)
        }
        Command::Csp { alpha, stat } => {
            let alpha = Composition::new(parse_json_list(&alpha)?);
            if alpha.size() == 0 {
                return Err(Error::OutOfRange("α must have positive size".into()));
            }
            check_cap("|α|", alpha.size(), MAX_N)?;
            let report = match stat {
                StatArg::Maj => verify_csp_for_content(&alpha, maj),
                StatArg::Flex => verify_csp_for_content(&alpha, |w| flex(w).expect("nonempty")),
                StatArg::Des => verify_csp_for_content(&alpha, |w| descent_set(w).len()),
            };
            let stdout = csp_output(&alpha, stat, &report, format);
            let stderr = match &report.witness {
                Some(w) if !report.holds => format!(
                    "identity failure: {} fixed points under rotation by {}, generating function gives {:?}\n",
                    w.fixed_points, w.r, w.value
                ),
                _ => String::new(),
            };
            return Ok(Output {
                stdout,
                stderr,
                code: if report.holds { 0 } else { 1 },
            });
        }
        Command::Verify {
            suite,
            max_n,
            max_ab,
            random_sets,
            seed,
        } => {
            let caps = Caps {
                random_sets,
                seed,
                ..Caps::new(max_n, max_ab)?
            };
            return run_verify(&suite, &caps, format);
        }
    };
    Ok(Output {
        stdout: series.render(format)?,
        stderr: String::new(),
        code: 0,
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    match execute(cli) {
        Ok(out) => out,
        Err(e) => usage(e.to_string()),
    }
}

/// Runs with the process arguments, writing to the standard streams.
pub fn main() -> ExitCode {
    let out = run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
