//! `linchord`: counting tables, polynomials, series and verification
//! reports on the command line.
//!
//! Exit status: 0 on success, 1 when a verification or internal identity
//! fails, 2 on usage errors and exceeded caps.

mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linchord::arith::{self, Integer, Rational};
use linchord::asymptotics;
use linchord::diagram::{ChordDiagram, PartialDiagram};
use linchord::genfunc::{self, theorem};
use linchord::oracle::{EnumerationCaps, Oracle};
use linchord::recurrences;
use linchord::table::GenusTable;
use linchord::verify::{self, Suite, VerifyOptions};

const MAX_ORDER_ENV: &str = "LINCHORD_MAX_ORDER";
const DEFAULT_MAX_ORDER: usize = 1000;

#[derive(Parser, Debug)]
#[command(name = "linchord", version, about = "Exact counts of linear chord diagrams by genus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count table by genus and size.
    Table(TableArgs),
    /// Exact polynomial coefficients.
    Poly(PolyArgs),
    /// Run cross-check suites; exits 1 if any identity fails.
    Verify(VerifyArgs),
    /// Power series coefficients.
    Series(SeriesArgs),
    /// Growth rates and leading constants.
    Asymptotics {
        #[command(subcommand)]
        what: AsymptoticsCommand,
    },
    /// Statistics of one diagram given as `n;p(1),…,p(n)` (0 = unmatched).
    Diagram { encoding: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    /// c_g(n): diagrams with n chords.
    Cg,
    /// c_g(n, m): refined by the number m of 1-chords.
    CgM,
    /// s_g(n): shapes with n chords.
    Shapes,
    /// d_{g,σ}(n): macromolecular diagrams on n backbone vertices.
    Mm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    Oracle,
    Formula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct TableArgs {
    kind: TableKind,
    #[arg(long)]
    n_max: usize,
    /// Largest genus; defaults to the largest possible for `n_max`.
    #[arg(long)]
    g_max: Option<usize>,
    /// Emit only this genus.
    #[arg(long, conflicts_with = "g_max")]
    g: Option<usize>,
    /// Minimum stack size (mm only).
    #[arg(long)]
    sigma: Option<usize>,
    #[arg(long, value_enum, default_value = "formula")]
    source: Source,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    /// P_g(z), the numerator of C_g(z) over (1−4z)^{3g−1/2}.
    Pg,
    /// R_g(z) = P_g(z)/z^{2g}.
    Rg,
    /// Q_g(z), the intermediate polynomial of the P_g recursion.
    Qg,
    /// p(n, x), the genus polynomial of n chords.
    Hz,
}

#[derive(Args, Debug)]
struct PolyArgs {
    kind: PolyKind,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// oracle, hz, theorem3, shapes, mm, asymptotics or all.
    suite: String,
    /// Size limit of the selected suite.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    g_max: Option<usize>,
    /// Index at which empirical growth ratios are taken.
    #[arg(long)]
    growth_n: Option<usize>,
    /// Corrupt one value per comparison to exercise the failure path.
    #[arg(long)]
    inject_fault: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// C_g(z).
    Cg,
    /// D_{g,σ}(z).
    Dg,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    kind: SeriesKind,
    #[arg(long)]
    g: usize,
    #[arg(long)]
    sigma: Option<usize>,
    #[arg(long)]
    order: usize,
}

#[derive(Subcommand, Debug)]
enum AsymptoticsCommand {
    /// Leading constant of c_g(n), with a check against c_g(n) itself.
    Constant {
        #[arg(long)]
        g: usize,
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
    /// Dominant singularity of D_{g,σ}(z).
    Singularity {
        #[arg(long)]
        sigma: usize,
    },
    /// d_{g,σ}(n+1)/d_{g,σ}(n) against the exact growth rate.
    Growth {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        sigma: usize,
        #[arg(long, default_value_t = 400)]
        n: usize,
    },
}

enum Failure {
    /// Exit status 2.
    Usage(String),
    /// Exit status 1.
    Mismatch(String),
}

impl From<linchord::Error> for Failure {
    fn from(e: linchord::Error) -> Self {
        match e {
            linchord::Error::InvariantViolation { .. } => Failure::Mismatch(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a command produced: the JSON payload, or CSV text, and whether every
/// check passed.
struct Output {
    parameters: Value,
    payload: Value,
    csv: Option<String>,
    passed: bool,
}

impl Output {
    fn new(parameters: Value, payload: Value) -> Self {
        Output { parameters, payload, csv: None, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let name = command_name(&cli.command);
    match run(cli.command) {
        Ok(out) => {
            if let Some(csv) = out.csv {
                emit(&csv);
            } else {
                let doc = json!({
                    "metadata": {
                        "command": name,
                        "parameters": out.parameters,
                        "version": linchord::VERSION,
                        "runtime_ms": start.elapsed().as_millis() as u64,
                    },
                    "payload": out.payload,
                });
                emit(&(serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"));
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Table(_) => "table",
        Command::Poly(_) => "poly",
        Command::Verify(_) => "verify",
        Command::Series(_) => "series",
        Command::Asymptotics { .. } => "asymptotics",
        Command::Diagram { .. } => "diagram",
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Table(a) => cmd_table(&a),
        Command::Poly(a) => cmd_poly(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Series(a) => cmd_series(&a),
        Command::Asymptotics { what } => cmd_asymptotics(&what),
        Command::Diagram { encoding } => cmd_diagram(&encoding),
    }
}

fn max_order() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_ORDER_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn check_order(what: &str, value: usize) -> Result<(), Failure> {
    let cap = max_order()?;
    if value > cap {
        return Err(Failure::Usage(format!("{what} = {value} exceeds the cap {cap}; raise it with {MAX_ORDER_ENV}")));
    }
    Ok(())
}

fn oracle() -> Result<Oracle, Failure> {
    Ok(Oracle::new(EnumerationCaps::from_env()?))
}

fn require_sigma(sigma: Option<usize>) -> Result<usize, Failure> {
    match sigma {
        Some(0) => Err(Failure::Usage("--sigma must be at least 1".into())),
        Some(s) => Ok(s),
        None => Err(Failure::Usage("--sigma is required here".into())),
    }
}

/// Rational coefficients that must be integers (counts).
fn integral(r: &Rational, context: impl FnOnce() -> String) -> Result<Integer, Failure> {
    if arith::is_integral(r) {
        Ok(r.to_integer())
    } else {
        Err(Failure::Mismatch(format!("{} is not an integer: {}", context(), arith::format_rational(r))))
    }
}

fn table_row(t: &GenusTable, g: usize, n_max: usize) -> Vec<Integer> {
    (0..=n_max)
        .map(|n| if g <= t.g_max() && n <= t.n_max() { t.get(g, n).clone() } else { Integer::from(0) })
        .collect()
}

fn cmd_table(a: &TableArgs) -> Result<Output, Failure> {
    if a.kind == TableKind::Mm {
        require_sigma(a.sigma)?;
    } else if a.sigma.is_some() {
        return Err(Failure::Usage("--sigma only applies to mm tables".into()));
    }
    if a.source == Source::Formula {
        check_order("--n-max", a.n_max)?;
    }
    let natural_g_max = if a.kind == TableKind::Mm { a.n_max / 4 } else { a.n_max / 2 };
    let genera: Vec<usize> = match (a.g, a.g_max) {
        (Some(g), _) => vec![g],
        (None, Some(gm)) => (0..=gm).collect(),
        (None, None) => (0..=natural_g_max).collect(),
    };
    let rows = match a.kind {
        TableKind::Cg => cg_rows(a, &genera)?,
        TableKind::CgM => cg_m_rows(a, &genera)?,
        TableKind::Shapes => shape_rows(a, &genera)?,
        TableKind::Mm => mm_rows(a, &genera, a.sigma.expect("checked"))?,
    };
    let kind = a.kind.to_possible_value().expect("named").get_name().to_string();
    let source = a.source.to_possible_value().expect("named").get_name().to_string();
    let parameters = json!({
        "kind": kind,
        "n_max": a.n_max,
        "genera": genera,
        "sigma": a.sigma,
        "source": source,
    });
    let mut out = Output::new(parameters, json!({ "kind": kind, "source": source, "n_max": a.n_max, "rows": rows }));
    if a.format == Format::Csv {
        out.csv = Some(render::table_csv(&rows).map_err(|e| Failure::Usage(e.to_string()))?);
    }
    Ok(out)
}

fn count_row(g: usize, counts: &[Integer]) -> Value {
    json!({ "g": g, "counts": render::ints(counts) })
}

fn cg_rows(a: &TableArgs, genera: &[usize]) -> Result<Vec<Value>, Failure> {
    let g_top = genera.iter().copied().max().unwrap_or(0);
    let t = match a.source {
        Source::Oracle => oracle()?.cg(a.n_max)?,
        Source::Formula => recurrences::cg_table(g_top, a.n_max),
    };
    Ok(genera.iter().map(|&g| count_row(g, &table_row(&t, g, a.n_max))).collect())
}

/// Counts of one genus refined by 1-chords, indexed `[n][m]`.
type RefinedRow = (usize, Vec<Vec<Integer>>);

fn refined_rows(a: &TableArgs, genera: &[usize], shapes: bool) -> Result<Vec<RefinedRow>, Failure> {
    let n_max = a.n_max;
    let mut out = Vec::new();
    match a.source {
        Source::Oracle => {
            let o = oracle()?;
            let t = if shapes { o.shapes(n_max)? } else { o.cg_onechords(n_max)? };
            for &g in genera {
                let by_m = (0..=n_max)
                    .map(|n| (0..=n).map(|m| if g <= t.g_max() { t.get_m(g, n, m) } else { Integer::from(0) }).collect())
                    .collect();
                out.push((g, by_m));
            }
        }
        Source::Formula => {
            for &g in genera {
                let bi = if shapes {
                    genfunc::sg_bivariate(g, (n_max, n_max))?
                } else {
                    genfunc::cg_bivariate(g, (n_max, n_max))?
                };
                let by_m = (0..=n_max)
                    .map(|n| {
                        (0..=n)
                            .map(|m| integral(bi.coeff(n, m), || format!("coefficient ({g},{n},{m})")))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                out.push((g, by_m));
            }
        }
    }
    Ok(out)
}

fn cg_m_rows(a: &TableArgs, genera: &[usize]) -> Result<Vec<Value>, Failure> {
    Ok(refined_rows(a, genera, false)?
        .into_iter()
        .map(|(g, by_m)| {
            let totals: Vec<Integer> = by_m.iter().map(|row| row.iter().sum()).collect();
            let cells: Vec<Value> = by_m
                .iter()
                .enumerate()
                .map(|(n, row)| json!({ "n": n, "counts": render::ints(row) }))
                .collect();
            json!({ "g": g, "counts": render::ints(&totals), "by_one_chords": cells })
        })
        .collect())
}

fn shape_rows(a: &TableArgs, genera: &[usize]) -> Result<Vec<Value>, Failure> {
    Ok(refined_rows(a, genera, true)?
        .into_iter()
        .map(|(g, by_m)| {
            let totals: Vec<Integer> = by_m.iter().map(|row| row.iter().sum()).collect();
            count_row(g, &totals)
        })
        .collect())
}

fn mm_rows(a: &TableArgs, genera: &[usize], sigma: usize) -> Result<Vec<Value>, Failure> {
    match a.source {
        Source::Oracle => {
            let t = oracle()?.macromolecular(a.n_max, sigma)?;
            Ok(genera.iter().map(|&g| count_row(g, &table_row(&t, g, a.n_max))).collect())
        }
        Source::Formula => {
            let mut rows = Vec::new();
            for &g in genera {
                if g == 0 {
                    // genus 0 has no closed form here; the oracle covers it
                    continue;
                }
                let s = genfunc::dg_sigma_series(g, sigma, a.n_max)?;
                let counts = (0..=a.n_max)
                    .map(|n| integral(s.coeff(n), || format!("d_{{{g},{sigma}}}({n})")))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(count_row(g, &counts));
            }
            Ok(rows)
        }
    }
}

fn cmd_poly(a: &PolyArgs) -> Result<Output, Failure> {
    let need_g = || match a.g {
        Some(0) | None => Err(Failure::Usage("--g must be given and at least 1".into())),
        Some(g) => Ok(g),
    };
    let (parameters, p) = match a.kind {
        PolyKind::Pg => {
            let g = need_g()?;
            (json!({ "kind": "pg", "g": g }), theorem::pg_pipeline(g)?.pop().expect("non-empty").p)
        }
        PolyKind::Rg => {
            let g = need_g()?;
            (json!({ "kind": "rg", "g": g }), theorem::rg(g)?)
        }
        PolyKind::Qg => {
            let g = need_g()?;
            let p = theorem::pg_pipeline(g)?.pop().expect("non-empty").p;
            (json!({ "kind": "qg", "g": g }), theorem::qg(&p, g))
        }
        PolyKind::Hz => {
            let n = a.n.ok_or_else(|| Failure::Usage("--n is required for hz".into()))?;
            check_order("--n", n)?;
            (json!({ "kind": "hz", "n": n }), recurrences::hz_polys(n).get(n).clone())
        }
    };
    let payload = json!({
        "coefficients": render::poly(&p),
        "text": p.to_string(),
    });
    Ok(Output::new(parameters, payload))
}

fn cmd_verify(a: &VerifyArgs) -> Result<Output, Failure> {
    let suites: Vec<Suite> = if a.suite == "all" {
        if a.n_max.is_some() {
            return Err(Failure::Usage("--n-max needs a single suite".into()));
        }
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse::<Suite>()?]
    };
    let mut opts = VerifyOptions { caps: EnumerationCaps::from_env()?, inject_fault: a.inject_fault, ..Default::default() };
    if let Some(n) = a.n_max {
        match suites[0] {
            Suite::Oracle => opts.oracle_n_max = n,
            Suite::Hz => opts.hz_n_max = n,
            Suite::Shapes => opts.shapes_n_max = n,
            Suite::Mm => opts.mm_n_max = n,
            Suite::Theorem3 | Suite::Asymptotics => {
                return Err(Failure::Usage(format!("--n-max does not apply to {}", suites[0].name())));
            }
        }
    }
    if let Some(g) = a.g_max {
        opts.g_max = g;
    }
    if let Some(n) = a.growth_n {
        check_order("--growth-n", n)?;
        opts.growth_n = n;
    }
    let reports: Vec<verify::Report> = suites.iter().map(|&s| verify::run(s, &opts)).collect();
    let passed = reports.iter().all(|r| r.passed());
    for r in &reports {
        eprint!("{r}");
    }
    let rendered: Vec<Value> = reports
        .iter()
        .map(|r| {
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed,
                        "gating": c.gating,
                        "detail": c.detail,
                        "counterexample": c.counterexample,
                    })
                })
                .collect();
            json!({ "suite": r.suite.name(), "passed": r.passed(), "checks": checks })
        })
        .collect();
    let parameters = json!({
        "suite": a.suite,
        "oracle_n_max": opts.oracle_n_max,
        "hz_n_max": opts.hz_n_max,
        "g_max": opts.g_max,
        "shapes_n_max": opts.shapes_n_max,
        "mm_n_max": opts.mm_n_max,
        "growth_n": opts.growth_n,
        "inject_fault": opts.inject_fault,
    });
    let mut out = Output::new(parameters, json!({ "passed": passed, "reports": rendered }));
    out.passed = passed;
    Ok(out)
}

fn cmd_series(a: &SeriesArgs) -> Result<Output, Failure> {
    check_order("--order", a.order)?;
    let (parameters, s) = match a.kind {
        SeriesKind::Cg => {
            if a.sigma.is_some() {
                return Err(Failure::Usage("--sigma only applies to dg".into()));
            }
            (json!({ "kind": "cg", "g": a.g, "order": a.order }), genfunc::cg_series(a.g, a.order))
        }
        SeriesKind::Dg => {
            let sigma = require_sigma(a.sigma)?;
            let s = genfunc::dg_sigma_series(a.g, sigma, a.order)?;
            (json!({ "kind": "dg", "g": a.g, "sigma": sigma, "order": a.order }), s)
        }
    };
    Ok(Output::new(parameters, json!({ "coefficients": render::series(&s) })))
}

fn cmd_asymptotics(what: &AsymptoticsCommand) -> Result<Output, Failure> {
    match *what {
        AsymptoticsCommand::Constant { g, n } => {
            check_order("--n", n)?;
            let tol = arith::rat(1, 1_000_000_000_000_000);
            let est = asymptotics::cg_leading_constant(g, &tol)?;
            let check = asymptotics::cg_constant_check(g, n)?;
            let payload = json!({
                "exponent": render::rat(&est.exponent),
                "growth_rate": render::interval(&est.growth_rate),
                "constant": render::interval(&est.constant),
                "constant_times_sqrt_pi": est.constant_over_inv_sqrt_pi.as_ref().map(render::rat),
                "check": {
                    "n": check.n,
                    "ratio": render::interval(&check.ratio),
                    "relative_error": render::interval(&check.relative_error),
                },
            });
            Ok(Output::new(json!({ "what": "constant", "g": g, "n": n }), payload))
        }
        AsymptoticsCommand::Singularity { sigma } => {
            let iso = asymptotics::dominant_singularity(sigma, &asymptotics::default_width())?;
            let payload = json!({
                "polynomial": render::poly(&iso.polynomial),
                "singularity": render::interval(&iso.interval),
                "growth_rate": render::interval(&iso.growth_rate()),
                "sign_change": iso.sign_change,
                "roots_below": iso.roots_below,
            });
            Ok(Output::new(json!({ "what": "singularity", "sigma": sigma }), payload))
        }
        AsymptoticsCommand::Growth { g, sigma, n } => {
            check_order("--n", n)?;
            let emp = asymptotics::empirical_growth(g, sigma, n)?;
            let iso = asymptotics::dominant_singularity(sigma, &asymptotics::default_width())?;
            let growth = iso.growth_rate();
            let payload = json!({
                "n": emp.n,
                "ratio": render::rat(&emp.ratio),
                "ratio_decimal": render::decimal(&emp.ratio),
                "growth_rate": render::interval(&growth),
                "relative_difference": render::decimal(&(&emp.ratio / &growth.midpoint() - Rational::from_integer(1.into()))),
            });
            Ok(Output::new(json!({ "what": "growth", "g": g, "sigma": sigma, "n": n }), payload))
        }
    }
}

fn cmd_diagram(encoding: &str) -> Result<Output, Failure> {
    let d: PartialDiagram = encoding.parse()?;
    let s = d.stats();
    let shape = d.project_shape();
    let full = ChordDiagram::try_from(d.clone()).ok();
    let min_stack = s.stack_sizes.iter().copied().min();
    let payload = json!({
        "encoding": d.to_string(),
        "vertices": d.vertex_count(),
        "chords": s.chord_count,
        "genus": s.genus,
        "boundary_components": s.boundary_components,
        "one_chords": s.one_chord_count,
        "stack_sizes": s.stack_sizes,
        "full": full.is_some(),
        "shape": full.is_some_and(|c| c.is_shape()),
        "macromolecular_sigma": if s.one_chord_count == 0 { min_stack } else { None },
        "projected_shape": shape.to_string(),
    });
    Ok(Output::new(json!({ "encoding": encoding }), payload))
}
