use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hoggatt_hankel::hankel::{d, HankelParams};
use hoggatt_hankel::hoggatt::triangle;
use hoggatt_hankel::poly::gamma_report;
use hoggatt_hankel::report::CheckId;
use hoggatt_hankel::sweep::{sweep, GridSpec};
use hoggatt_hankel::{Poly, Rational, Status, VerificationReport};
use serde::Serialize;

mod range;

use range::{format_range, parse_range};

const THREADS_ENV: &str = "HOGGATT_HANKEL_THREADS";

#[derive(Parser)]
#[command(
    name = "hoggatt-hankel",
    version,
    about = "Hoggatt triangles, binomial Hankel determinants and identity sweeps"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print rows 0..rows-1 of the r-Hoggatt triangle.
    Triangle {
        #[arg(long, default_value_t = 3)]
        r: u64,
        #[arg(long, default_value_t = 8)]
        rows: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hankel determinants d_k of the column C(n, m)^(s) for each k in range.
    Hankel {
        #[arg(long, default_value_t = 1)]
        s: u64,
        #[arg(long)]
        m: u64,
        /// Matrix size.
        #[arg(long)]
        r: usize,
        #[arg(long = "k-range", default_value = "0..10")]
        k_range: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity checks over a parameter grid and write a report.
    Verify {
        #[arg(long, default_value = "1")]
        s: String,
        #[arg(long, default_value = "0..8")]
        m: String,
        #[arg(long, default_value = "1..3")]
        r: String,
        #[arg(long = "k-range", default_value = "0..12")]
        k_range: String,
        /// Comma separated check ids, or "all". An empty list runs nothing.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = hoggatt_hankel::narayana::DEFAULT_MARGIN)]
        margin: usize,
        /// Largest determinant degree attempted by the polynomial checks.
        #[arg(long, default_value_t = hoggatt_hankel::conjectures::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gamma vector of a palindromic polynomial given by its coefficients.
    Gamma {
        /// Coefficients from the constant term up, e.g. "1,3,1". Rationals as p/q.
        coeffs: String,
        /// Center of symmetry (defaults to the number of coefficients minus one).
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Bad arguments; always exit code 2.
#[derive(Debug)]
struct ConfigError(String);

impl From<String> for ConfigError {
    fn from(s: String) -> Self {
        ConfigError(s)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(Failure::Config(e)) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum Failure {
    Config(ConfigError),
    Io(io::Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Failure> {
    match cmd {
        Cmd::Triangle {
            r,
            rows,
            format,
            out,
        } => {
            if r == 0 {
                return Err(ConfigError("--r must be at least 1".into()).into());
            }
            let t = triangle(r, rows);
            let body = match format {
                Format::Csv => triangle_csv(&t)?,
                Format::Json => {
                    let rows: Vec<Vec<String>> = t
                        .iter()
                        .map(|row| row.iter().map(|v| v.to_string()).collect())
                        .collect();
                    json_line(&serde_json::json!({ "r": r, "rows": rows }))?
                }
            };
            emit(out, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hankel {
            s,
            m,
            r,
            k_range,
            format,
            out,
        } => {
            let ks = parse_range(&k_range)?;
            let base = HankelParams::new(0, m, r, s).map_err(|e| ConfigError(e.to_string()))?;
            let values: Vec<(u64, String)> = ks.map(|k| (k, d(base.at(k)).to_string())).collect();
            let body = match format {
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["k", "d"])?;
                    for (k, v) in &values {
                        w.write_record([k.to_string(), v.clone()])?;
                    }
                    into_string(w)?
                }
                Format::Json => {
                    let values: Vec<_> = values
                        .iter()
                        .map(|(k, v)| serde_json::json!({ "k": k, "d": v }))
                        .collect();
                    json_line(&serde_json::json!({ "s": s, "m": m, "r": r, "values": values }))?
                }
            };
            emit(out, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            s,
            m,
            r,
            k_range,
            checks,
            margin,
            budget,
            format,
            out,
        } => {
            if margin == 0 {
                return Err(ConfigError("--margin must be at least 1".into()).into());
            }
            let grid = GridSpec {
                s: parse_range(&s)?,
                m: parse_range(&m)?,
                r: parse_range(&r)?,
                k: parse_range(&k_range)?,
                checks: parse_checks(&checks)?,
                margin,
                budget,
            };
            let pool = thread_pool()?;
            let results = pool.install(|| sweep(&grid));
            let body = match format {
                Format::Json => report_json(&grid, format, &results)?,
                Format::Csv => report_csv(&results)?,
            };
            emit(out, &body)?;
            let count = |st: Status| results.iter().filter(|r| r.status == st).count();
            eprintln!(
                "{} results: {} pass, {} fail, {} mismatch, {} skipped",
                results.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Mismatch),
                count(Status::Skipped)
            );
            Ok(ExitCode::from(verify_exit_code(&results)))
        }
        Cmd::Gamma { coeffs, n } => {
            let cs = parse_coeffs(&coeffs)?;
            let n = n.unwrap_or(cs.len() - 1);
            println!("{}", gamma_line(&Poly::from_coeffs(cs), n));
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// 1 if anything failed or mismatched; skips are not failures.
fn verify_exit_code(results: &[VerificationReport]) -> u8 {
    u8::from(results.iter().any(|r| r.status.is_failure()))
}

fn thread_pool() -> Result<rayon::ThreadPool, ConfigError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| ConfigError(format!("{THREADS_ENV}={v:?} is not a thread count")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| ConfigError(e.to_string()))
}

fn parse_checks(s: &str) -> Result<Vec<CheckId>, ConfigError> {
    let s = s.trim();
    if s == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<CheckId>().map_err(ConfigError))
        .collect()
}

fn parse_coeffs(s: &str) -> Result<Vec<Rational>, ConfigError> {
    let cs: Vec<Rational> = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Rational>()
                .map_err(|_| ConfigError(format!("bad coefficient `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    if cs.is_empty() {
        return Err(ConfigError("no coefficients".into()));
    }
    Ok(cs)
}

fn gamma_line(p: &Poly, n: usize) -> String {
    let rep = gamma_report(p, n);
    match rep.gamma {
        Some(g) => {
            let gs: Vec<String> = g.gammas.iter().map(|v| v.to_string()).collect();
            let verdict = if rep.positive {
                "gamma-positive"
            } else {
                "not gamma-positive"
            };
            format!("{}; {verdict}", gs.join(","))
        }
        None => format!("not palindromic about n={n}"),
    }
}

fn triangle_csv(t: &[Vec<hoggatt_hankel::Integer>]) -> Result<String, Failure> {
    let width = t.len();
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    let mut header = vec!["n".to_string()];
    header.extend((0..width).map(|k| format!("k{k}")));
    w.write_record(&header)?;
    for (n, row) in t.iter().enumerate() {
        let mut rec = vec![n.to_string()];
        rec.extend(row.iter().map(|v| v.to_string()));
        w.write_record(&rec)?;
    }
    into_string(w)
}

#[derive(Serialize)]
struct ConfigEcho<'a> {
    s: String,
    m: String,
    r: String,
    k: String,
    checks: &'a [CheckId],
    margin: usize,
    budget: u64,
    format: Format,
}

#[derive(Serialize)]
struct Report<'a> {
    version: &'static str,
    config: ConfigEcho<'a>,
    results: &'a [VerificationReport],
}

fn report_json(
    grid: &GridSpec,
    format: Format,
    results: &[VerificationReport],
) -> Result<String, Failure> {
    let report = Report {
        version: env!("CARGO_PKG_VERSION"),
        config: ConfigEcho {
            s: format_range(&grid.s),
            m: format_range(&grid.m),
            r: format_range(&grid.r),
            k: format_range(&grid.k),
            checks: &grid.checks,
            margin: grid.margin,
            budget: grid.budget,
            format,
        },
        results,
    };
    let mut s = serde_json::to_string_pretty(&report)?;
    s.push('\n');
    Ok(s)
}

fn report_csv(results: &[VerificationReport]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "s", "m", "r", "k", "status", "lhs", "rhs", "notes"])?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in results {
        w.write_record([
            r.id.as_str().to_string(),
            opt(r.params.s.map(|v| v.to_string())),
            opt(r.params.m.map(|v| v.to_string())),
            opt(r.params.r.map(|v| v.to_string())),
            opt(r.params.k.map(|v| v.to_string())),
            r.status.as_str().to_string(),
            r.lhs.clone(),
            r.rhs.clone(),
            r.notes.join("; "),
        ])?;
    }
    into_string(w)
}

fn json_line<T: Serialize>(v: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String, Failure> {
    let bytes = w
        .into_inner()
        .map_err(|e| io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn emit(out: Option<PathBuf>, body: &str) -> io::Result<()> {
    match out {
        Some(p) => File::create(p)?.write_all(body.as_bytes()),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}
