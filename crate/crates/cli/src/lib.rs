//! Command-line front end. [`run`] does all the work and returns what would
//! be printed, so tests can drive it without spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use pexlab::bijections::{des2_decompose, free_square_grid, Bijection, Image};
use pexlab::enumeration::{
    des2_recurrence, egf_a2_coefficients, harmonic_popularity, oeis_terms, stirling_table,
    DistributionTable, EnumConfig, JointTable, OeisSequence, Triangle, HARD_LIMIT,
};
use pexlab::verify::{run_check_with, CheckId, VerificationReport};
use pexlab::{pex_positions, statistic, Permutation, StatisticName};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pexlab",
    version,
    about = "Permutation statistics, bijections and exhaustive checks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumeration cap; for `check`, also the largest length examined.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Number of parallel prefix shards used by enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    shards: usize,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableSource {
    /// Exhaustive enumeration.
    Enum,
    /// Stirling recurrence (des0, des1, pdes, cyc) or the p₂ recurrence (des2).
    Recurrence,
    /// Coefficients of the bivariate EGF (des2 only).
    Egf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PopularitySource {
    Enum,
    /// `n!(H_n − 1)`, the common value for des0, des1, des2, pdes and pex.
    Harmonic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Every statistic of a permutation.
    Stats {
        /// The permutation, e.g. "3 1 2", "3,1,2" or 312.
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Distribution of one statistic over S_n.
    Table {
        stat: String,
        n: usize,
        #[arg(long, value_enum, default_value_t = TableSource::Enum)]
        source: TableSource,
    },
    /// Joint distribution of two statistics over S_n.
    Joint { a: String, b: String, n: usize },
    /// Applies a named bijection.
    Map {
        /// phi, phi-inv, lambda, lambda-inv, psi, psi-phi, psi-bar or foata.
        bijection: String,
        /// A permutation, or a transposition array for lambda-inv.
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        /// Also print the decomposition or free-square grid behind the image.
        #[arg(long)]
        trace: bool,
    },
    /// Total of a statistic over S_n.
    Popularity {
        stat: String,
        n: usize,
        #[arg(long, value_enum, default_value_t = PopularitySource::Enum)]
        source: PopularitySource,
    },
    /// Terms of A001705, A132393 or A136394 computed locally.
    Oeis { sequence: String, count: usize },
    /// Runs verification checks; `all` runs every one.
    Check {
        #[arg(required = true, num_args = 1..)]
        ids: Vec<String>,
        /// Include wall time in the reports.
        #[arg(long)]
        timing: bool,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (code, body) = match execute(&cli) {
        Ok(done) => done,
        Err(message) => return Outcome::usage(format!("error: {message}")),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

type Run = Result<(i32, String), String>;

fn execute(cli: &Cli) -> Run {
    let cap = cli.max_n.unwrap_or(EnumConfig::DEFAULT_CAP);
    if cap > HARD_LIMIT {
        return Err(format!("--max-n {cap} exceeds the hard limit {HARD_LIMIT}"));
    }
    if cli.shards == 0 {
        return Err("--shards must be at least 1".into());
    }
    let config = EnumConfig::new(cap, cli.shards).map_err(|e| e.to_string())?;
    let f = cli.format;
    match &cli.command {
        Command::Stats { perm } => ok(stats(&parse_perm(perm)?, f)),
        Command::Table { stat, n, source } => {
            ok(table(&config, parse_stat(stat)?, *n, *source, f)?)
        }
        Command::Joint { a, b, n } => {
            let (a, b) = (parse_stat(a)?, parse_stat(b)?);
            let table = config
                .joint_distribution(a, b, *n)
                .map_err(|e| e.to_string())?;
            ok(render_joint(a, b, &table, f))
        }
        Command::Map {
            bijection,
            input,
            trace,
        } => {
            let b: Bijection = bijection
                .parse()
                .map_err(|e: pexlab::Error| e.to_string())?;
            ok(map(b, &input.join(" "), *trace, f)?)
        }
        Command::Popularity { stat, n, source } => {
            ok(popularity(&config, parse_stat(stat)?, *n, *source, f)?)
        }
        Command::Oeis { sequence, count } => {
            let seq: OeisSequence = sequence.parse().map_err(|e: pexlab::Error| e.to_string())?;
            ok(render_oeis(seq, &oeis_terms(seq, *count), f))
        }
        Command::Check { ids, timing } => check(&config, cli.max_n, ids, *timing, f),
    }
}

fn ok(body: String) -> Run {
    Ok((EXIT_OK, body))
}

fn parse_perm(tokens: &[String]) -> Result<Permutation, String> {
    tokens
        .join(" ")
        .parse()
        .map_err(|e: pexlab::Error| e.to_string())
}

fn parse_stat(name: &str) -> Result<StatisticName, String> {
    name.parse().map_err(|e: pexlab::Error| e.to_string())
}

fn csv_string(rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
}

fn json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn words(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn stats(p: &Permutation, f: Format) -> String {
    let values: Vec<(StatisticName, usize)> = StatisticName::ALL
        .iter()
        .map(|&s| (s, statistic(s, p)))
        .collect();
    let positions = pex_positions(p);
    match f {
        Format::Text => {
            let mut out = format!("permutation    {p}\n");
            for (s, v) in &values {
                let _ = writeln!(out, "{:<14} {v}", s.as_str());
            }
            let _ = writeln!(out, "{:<14} {}", "pex_positions", words(&positions));
            out
        }
        Format::Json => {
            let stats: Map<String, Value> = values
                .iter()
                .map(|(s, v)| (s.as_str().to_owned(), json!(v)))
                .collect();
            json_string(&json!({
                "permutation": p.as_slice(),
                "statistics": stats,
                "pex_positions": positions,
            }))
        }
        Format::Csv => {
            let mut rows = vec![vec!["statistic".to_owned(), "value".to_owned()]];
            rows.extend(
                values
                    .iter()
                    .map(|(s, v)| vec![s.as_str().to_owned(), v.to_string()]),
            );
            rows.push(vec!["pex_positions".into(), words(&positions)]);
            csv_string(&rows)
        }
    }
}

/// The distribution of `stat` over `S_n` computed from `source`.
pub fn table_from_source(
    config: &EnumConfig,
    stat: StatisticName,
    n: usize,
    source: TableSource,
) -> Result<DistributionTable, String> {
    use StatisticName::*;
    let unsupported = || format!("no {source:?} source for {stat}").to_lowercase();
    match source {
        TableSource::Enum => config.distribution(stat, n).map_err(|e| e.to_string()),
        TableSource::Recurrence => {
            let (triangle, shift): (Triangle<BigUint>, usize) = match stat {
                Des2 => (des2_recurrence(n), 0),
                Cyc => (stirling_table(n), 0),
                Des0 | Des1 | Pdes => (stirling_table(n), 1),
                _ => return Err(unsupported()),
            };
            Ok(triangle.distribution(n, shift))
        }
        TableSource::Egf => match stat {
            Des2 => Ok(egf_a2_coefficients(n).distribution(n, 0)),
            _ => Err(unsupported()),
        },
    }
}

fn table(
    config: &EnumConfig,
    stat: StatisticName,
    n: usize,
    source: TableSource,
    f: Format,
) -> Result<String, String> {
    let t = table_from_source(config, stat, n, source)?;
    let source_name = format!("{source:?}").to_lowercase();
    Ok(match f {
        Format::Text => {
            let mut out = format!("{stat} over S_{n} ({source_name})\n");
            for (k, c) in t.iter() {
                let _ = writeln!(out, "{k:>4}  {c}");
            }
            out
        }
        Format::Json => {
            let counts: Map<String, Value> = t
                .iter()
                .map(|(k, c)| (k.to_string(), json!(c.to_string())))
                .collect();
            json_string(&json!({
                "statistic": stat.as_str(),
                "n": n,
                "source": source_name,
                "counts": counts,
            }))
        }
        Format::Csv => {
            let mut rows = vec![vec!["n".to_owned(), "k".to_owned(), "count".to_owned()]];
            rows.extend(
                t.iter()
                    .map(|(k, c)| vec![n.to_string(), k.to_string(), c.to_string()]),
            );
            csv_string(&rows)
        }
    })
}

fn render_joint(a: StatisticName, b: StatisticName, t: &JointTable, f: Format) -> String {
    let n = t.n();
    match f {
        Format::Text => {
            let mut out = format!("({a},{b}) over S_{n}\n");
            for ((x, y), c) in t.iter() {
                let _ = writeln!(out, "{x:>4} {y:>4}  {c}");
            }
            out
        }
        Format::Json => {
            let mut counts: Map<String, Value> = Map::new();
            for ((x, y), c) in t.iter() {
                let row = counts.entry(x.to_string()).or_insert_with(|| json!({}));
                row.as_object_mut()
                    .expect("object")
                    .insert(y.to_string(), json!(c.to_string()));
            }
            json_string(&json!({
                "statistics": [a.as_str(), b.as_str()],
                "n": n,
                "counts": counts,
            }))
        }
        Format::Csv => {
            let mut rows = vec![vec!["n".into(), "a".into(), "b".into(), "count".into()]];
            rows.extend(t.iter().map(|((x, y), c)| {
                vec![n.to_string(), x.to_string(), y.to_string(), c.to_string()]
            }));
            csv_string(&rows)
        }
    }
}

fn trace(b: Bijection, input: &str, image: &Image) -> Result<String, String> {
    let err = |e: pexlab::Error| e.to_string();
    Ok(match (b, image) {
        (Bijection::Phi, _) => des2_decompose(&input.parse().map_err(err)?).to_string(),
        (Bijection::PhiInv, Image::Permutation(q)) => des2_decompose(q).to_string(),
        (Bijection::Lambda | Bijection::Psi | Bijection::PsiPhi, _) => {
            free_square_grid(&input.parse().map_err(err)?)
                .map_err(err)?
                .to_string()
        }
        (Bijection::PsiBar, _) => {
            let p: Permutation = input.parse().map_err(err)?;
            let (core, fixed) = p.strip_fixed_points();
            format!(
                "fixed points: {}\nderangement: {core}\n{}",
                words(&fixed),
                free_square_grid(&core).map_err(err)?
            )
        }
        (Bijection::LambdaInv, Image::Permutation(q)) => {
            free_square_grid(q).map_err(err)?.to_string()
        }
        (Bijection::Foata, Image::Permutation(q)) => {
            format!("cycles of foata image: {}", q.cycle_decomposition())
        }
        _ => String::new(),
    })
}

fn map(b: Bijection, input: &str, with_trace: bool, f: Format) -> Result<String, String> {
    let image = b.apply_str(input).map_err(|e| e.to_string())?;
    let trace = if with_trace {
        Some(trace(b, input, &image)?)
    } else {
        None
    };
    Ok(match f {
        Format::Text => {
            let mut out = format!("{image}\n");
            if let Some(t) = &trace {
                let _ = writeln!(out, "{t}");
            }
            out
        }
        Format::Json => {
            let image_values = match &image {
                Image::Permutation(p) => p.as_slice().to_vec(),
                Image::Array(t) => t.as_slice().to_vec(),
            };
            let input_values: Vec<usize> = input
                .parse::<Permutation>()
                .map(Permutation::into_vec)
                .or_else(|_| {
                    input
                        .parse::<pexlab::TranspositionArray>()
                        .map(|t| t.as_slice().to_vec())
                })
                .map_err(|e| e.to_string())?;
            let mut value = json!({
                "bijection": b.as_str(),
                "input": input_values,
                "image": image_values,
            });
            if let Some(t) = trace {
                value["trace"] = json!(t);
            }
            json_string(&value)
        }
        Format::Csv => {
            let mut rows = vec![
                vec![
                    "bijection".to_owned(),
                    "input".to_owned(),
                    "image".to_owned(),
                ],
                vec![
                    b.as_str().to_owned(),
                    input.split_whitespace().collect::<Vec<_>>().join(" "),
                    image.to_string(),
                ],
            ];
            if let Some(t) = trace {
                rows[0].push("trace".into());
                rows[1].push(t);
            }
            csv_string(&rows)
        }
    })
}

fn popularity(
    config: &EnumConfig,
    stat: StatisticName,
    n: usize,
    source: PopularitySource,
    f: Format,
) -> Result<String, String> {
    use StatisticName::*;
    let value: BigUint = match source {
        PopularitySource::Enum => config.popularity(stat, n).map_err(|e| e.to_string())?,
        PopularitySource::Harmonic => match stat {
            Des0 | Des1 | Des2 | Pdes | Pex => harmonic_popularity(n),
            _ => return Err(format!("no harmonic source for {stat}")),
        },
    };
    Ok(match f {
        Format::Text => format!("{value}\n"),
        Format::Json => json_string(&json!({
            "statistic": stat.as_str(),
            "n": n,
            "popularity": value.to_string(),
        })),
        Format::Csv => csv_string(&[
            vec!["n".into(), "popularity".into()],
            vec![n.to_string(), value.to_string()],
        ]),
    })
}

fn render_oeis(seq: OeisSequence, terms: &[BigUint], f: Format) -> String {
    let strings: Vec<String> = terms.iter().map(BigUint::to_string).collect();
    match f {
        Format::Text => format!("{}\n", strings.join(", ")),
        Format::Json => json_string(&json!({ "sequence": seq.as_str(), "terms": strings })),
        Format::Csv => {
            let mut rows = vec![vec!["index".to_owned(), "term".to_owned()]];
            rows.extend(
                strings
                    .into_iter()
                    .enumerate()
                    .map(|(i, t)| vec![i.to_string(), t]),
            );
            csv_string(&rows)
        }
    }
}

fn check(
    config: &EnumConfig,
    max_n: Option<usize>,
    ids: &[String],
    timing: bool,
    f: Format,
) -> Run {
    let mut selected = Vec::new();
    for id in ids {
        if id == "all" {
            selected.extend(CheckId::ALL);
        } else {
            selected.push(id.parse::<CheckId>().map_err(|e| e.to_string())?);
        }
    }
    let mut reports = Vec::with_capacity(selected.len());
    for id in selected {
        let n_max = max_n.unwrap_or(id.default_n_max());
        reports.push(run_check_with(id, n_max, config).map_err(|e| e.to_string())?);
    }
    let all_ok = reports.iter().all(|r| r.status.is_acceptable());
    let code = if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok((code, render_reports(&reports, timing, f)))
}

fn millis(d: Duration) -> String {
    format!("{:.1}", d.as_secs_f64() * 1e3)
}

fn render_reports(reports: &[VerificationReport], timing: bool, f: Format) -> String {
    match f {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(out, "{r}");
                if timing {
                    let _ = writeln!(out, "{:<16} elapsed {} ms", "", millis(r.elapsed));
                }
            }
            let failed = reports.iter().filter(|r| !r.status.is_acceptable()).count();
            let _ = writeln!(out, "{} checks, {failed} failed", reports.len());
            out
        }
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("serializable");
                    if timing {
                        v["elapsed_ms"] = json!(millis(r.elapsed));
                    }
                    v
                })
                .collect();
            let ok = reports.iter().all(|r| r.status.is_acceptable());
            json_string(&json!({ "ok": ok, "reports": items }))
        }
        Format::Csv => {
            let mut header: Vec<String> = [
                "id",
                "status",
                "n_min",
                "n_max",
                "summary",
                "counterexample",
            ]
            .map(String::from)
            .into();
            if timing {
                header.push("elapsed_ms".into());
            }
            let mut rows = vec![header];
            for r in reports {
                let mut row = vec![
                    r.id.to_string(),
                    r.status.to_string(),
                    r.n_min.to_string(),
                    r.n_max.to_string(),
                    r.summary.clone(),
                    r.counterexample
                        .as_ref()
                        .map(ToString::to_string)
                        .unwrap_or_default(),
                ];
                if timing {
                    row.push(millis(r.elapsed));
                }
                rows.push(row);
            }
            csv_string(&rows)
        }
    }
}
