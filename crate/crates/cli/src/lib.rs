//! Command-line front end for `lyabound`.
//!
//! Parsing and execution live here so that tests can drive them without a
//! subprocess; `main.rs` only forwards `argv` and the exit code.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lyabound::selfcheck::{self, CheckOutcome};
use lyabound::{
    bounds, spectra, AbelianStratum, BoundMode, BoundReport, Error, QuadraticSignature, Rational,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ModeArg {
    #[default]
    Generic,
    NonHyp,
    HypExact,
}

impl ModeArg {
    fn as_str(&self) -> &'static str {
        match self {
            ModeArg::Generic => "generic",
            ModeArg::NonHyp => "non-hyp",
            ModeArg::HypExact => "hyp-exact",
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "lyabound",
    version,
    about = "Exact bounds on Lyapunov exponents of Teichmüller curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Per-exponent and sum bounds for a stratum.
    Bound {
        /// Zero orders, e.g. `2,2,1,1` or `4:odd`.
        #[arg(long)]
        zeros: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Generic)]
        mode: ModeArg,
        /// Quadratic signature of the locus, required by `--mode hyp-exact`.
        #[arg(long, allow_hyphen_values = true)]
        quadratic: Option<String>,
    },
    /// Spectrum and sum on the hyperelliptic locus of a genus-0 quadratic signature.
    Hyp {
        #[arg(long, allow_hyphen_values = true)]
        quadratic: String,
    },
    /// Abelian stratum and genus of the canonical double cover.
    Cover {
        #[arg(long, allow_hyphen_values = true)]
        quadratic: String,
    },
    /// Genus of the square-tiled cyclic cover M_N(a1, a2, a3, a4).
    Cyclic {
        #[arg(long = "n")]
        n: u32,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        a: Vec<u32>,
    },
    /// Non-varying table for genus 3, 4 or 5.
    Table { genus: u32 },
    /// Bound on the sum of the first k exponents.
    Partial {
        #[arg(long)]
        zeros: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Generic)]
        mode: ModeArg,
        #[arg(long, allow_hyphen_values = true)]
        quadratic: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Run every consistency sweep.
    Check,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Bound {
        stratum: AbelianStratum,
        mode: ModeArg,
        quadratic: Option<QuadraticSignature>,
    },
    Hyp(QuadraticSignature),
    Cover(QuadraticSignature),
    Cyclic {
        n: u32,
        a: [u32; 4],
    },
    Table(u32),
    Partial {
        stratum: AbelianStratum,
        mode: ModeArg,
        quadratic: Option<QuadraticSignature>,
        k: usize,
    },
    Check,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub command: Command,
    pub format: Format,
}

/// A parse failure, or a help/version request (exit code 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub code: i32,
    pub message: String,
}

impl UsageError {
    fn new(message: impl Into<String>) -> Self {
        UsageError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError::new(format!("error: {e}"))
    }
}

/// Parses `argv` (program name first) into a validated invocation.
pub fn parse_args<I, T>(argv: I) -> Result<Invocation, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError {
        code: e.exit_code(),
        message: e.render().to_string(),
    })?;
    let command = match cli.command {
        Sub::Bound {
            zeros,
            mode,
            quadratic,
        } => {
            let (stratum, quadratic) = parse_mode_inputs(&zeros, mode, quadratic.as_deref())?;
            Command::Bound {
                stratum,
                mode,
                quadratic,
            }
        }
        Sub::Partial {
            zeros,
            mode,
            quadratic,
            k,
        } => {
            let (stratum, quadratic) = parse_mode_inputs(&zeros, mode, quadratic.as_deref())?;
            let g = stratum.genus() as usize;
            if k < 1 || k > g {
                return Err(Error::IndexOutOfRange { index: k, max: g }.into());
            }
            Command::Partial {
                stratum,
                mode,
                quadratic,
                k,
            }
        }
        Sub::Hyp { quadratic } => {
            let q = QuadraticSignature::parse(&quadratic)?;
            q.hyperelliptic_locus()?;
            Command::Hyp(q)
        }
        Sub::Cover { quadratic } => {
            let q = QuadraticSignature::parse(&quadratic)?;
            q.induced_abelian()?;
            Command::Cover(q)
        }
        Sub::Cyclic { n, a } => {
            let a: [u32; 4] = a.try_into().map_err(|a: Vec<u32>| {
                UsageError::new(format!("error: --a takes four integers, got {}", a.len()))
            })?;
            spectra::cyclic_cover_genus(n, a)?;
            Command::Cyclic { n, a }
        }
        Sub::Table { genus } => {
            spectra::nonvarying_table(genus)?;
            Command::Table(genus)
        }
        Sub::Check => Command::Check,
    };
    Ok(Invocation {
        command,
        format: cli.format,
    })
}

fn parse_mode_inputs(
    zeros: &str,
    mode: ModeArg,
    quadratic: Option<&str>,
) -> Result<(AbelianStratum, Option<QuadraticSignature>), UsageError> {
    let stratum = AbelianStratum::parse(zeros)?;
    let quadratic = match (mode, quadratic) {
        (ModeArg::HypExact, Some(text)) => {
            let q = QuadraticSignature::parse(text)?;
            let locus = q.hyperelliptic_locus()?;
            if !locus.induces(&stratum) {
                return Err(Error::ModeMismatch {
                    locus: locus.induced().signature().to_vec(),
                    stratum: stratum.signature().to_vec(),
                }
                .into());
            }
            Some(q)
        }
        (ModeArg::HypExact, None) => {
            return Err(UsageError::new(
                "error: --mode hyp-exact requires --quadratic",
            ));
        }
        (_, Some(_)) => {
            return Err(UsageError::new(
                "error: --quadratic is only used with --mode hyp-exact",
            ));
        }
        (_, None) => None,
    };
    Ok((stratum, quadratic))
}

impl Invocation {
    /// Arguments that parse back to this invocation (program name first).
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec!["lyabound".to_string()];
        if self.format == Format::Json {
            args.extend(["--format".into(), "json".into()]);
        }
        let mode_args = |args: &mut Vec<String>,
                         stratum: &AbelianStratum,
                         mode: &ModeArg,
                         q: &Option<QuadraticSignature>| {
            args.extend([
                "--zeros".into(),
                stratum.to_string(),
                "--mode".into(),
                mode.as_str().into(),
            ]);
            if let Some(q) = q {
                args.extend(["--quadratic".into(), q.to_string()]);
            }
        };
        match &self.command {
            Command::Bound {
                stratum,
                mode,
                quadratic,
            } => {
                args.push("bound".into());
                mode_args(&mut args, stratum, mode, quadratic);
            }
            Command::Partial {
                stratum,
                mode,
                quadratic,
                k,
            } => {
                args.push("partial".into());
                mode_args(&mut args, stratum, mode, quadratic);
                args.extend(["--k".into(), k.to_string()]);
            }
            Command::Hyp(q) => args.extend(["hyp".into(), "--quadratic".into(), q.to_string()]),
            Command::Cover(q) => args.extend(["cover".into(), "--quadratic".into(), q.to_string()]),
            Command::Cyclic { n, a } => {
                let a = a
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                args.extend([
                    "cyclic".into(),
                    "--n".into(),
                    n.to_string(),
                    "--a".into(),
                    a,
                ]);
            }
            Command::Table(g) => args.extend(["table".into(), g.to_string()]),
            Command::Check => args.push("check".into()),
        }
        args
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// JSON form of a [`BoundReport`]; field order is the output key order.
#[derive(Debug, Serialize)]
pub struct BoundJson {
    pub stratum: Vec<u32>,
    pub genus: u32,
    pub mode: String,
    pub w_upper: Vec<String>,
    pub sum_upper: String,
    pub theorem_cap: String,
    pub effective_sum: String,
    pub kappa_lower: String,
    pub equality_case: String,
    #[serde(rename = "H_used")]
    pub h_used: Vec<usize>,
    pub assumption_required: bool,
}

impl From<&BoundReport> for BoundJson {
    fn from(r: &BoundReport) -> Self {
        BoundJson {
            stratum: r.stratum.signature().to_vec(),
            genus: r.stratum.genus(),
            mode: r.mode.name().to_string(),
            w_upper: strings(&r.w_upper),
            sum_upper: r.sum_upper.to_string(),
            theorem_cap: r.theorem_cap.to_string(),
            effective_sum: r.effective_sum.to_string(),
            kappa_lower: r.kappa_lower.to_string(),
            equality_case: r.equality_case.to_string(),
            h_used: r.h_used.clone(),
            assumption_required: r.assumption_required,
        }
    }
}

#[derive(Debug, Serialize)]
struct HypJson {
    quadratic: String,
    stratum: Vec<u32>,
    genus: u32,
    w: Vec<String>,
    sum: String,
    max_sum: bool,
    connectivity_assumed: bool,
}

#[derive(Debug, Serialize)]
struct CoverJson {
    quadratic: String,
    base_genus: u32,
    stratum: Vec<u32>,
    genus: u32,
    branch_points: usize,
    connectivity_assumed: bool,
}

#[derive(Debug, Serialize)]
struct CyclicJson {
    n: u32,
    a: [u32; 4],
    genus: u32,
    spectrum: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
struct TableRowJson {
    zeros: Vec<u32>,
    component: String,
    w: Vec<String>,
    w_printed: Vec<String>,
    sum: String,
    sum_printed: String,
    sum_is_bound: bool,
    quadratic: Option<String>,
}

#[derive(Debug, Serialize)]
struct TableJson {
    genus: u32,
    rows: Vec<TableRowJson>,
}

#[derive(Debug, Serialize)]
struct PartialJson {
    stratum: Vec<u32>,
    genus: u32,
    mode: String,
    k: usize,
    partial_sum: String,
    w_upper: Vec<String>,
}

#[derive(Debug, Serialize)]
struct CheckJson {
    name: String,
    cases: usize,
    passed: bool,
    counterexample: Option<String>,
}

/// Compact JSON with keys in declaration order.
pub fn emit_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn build_mode(mode: ModeArg, quadratic: &Option<QuadraticSignature>) -> Result<BoundMode, Error> {
    Ok(match mode {
        ModeArg::Generic => BoundMode::Generic,
        ModeArg::NonHyp => BoundMode::NonHyperelliptic,
        ModeArg::HypExact => {
            let q = quadratic.as_ref().ok_or_else(|| {
                Error::InvalidParameter("hyp-exact mode needs a quadratic signature".into())
            })?;
            BoundMode::HyperellipticExact(q.hyperelliptic_locus()?)
        }
    })
}

/// Result of running a command: exit code and the text for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn run(inv: &Invocation) -> Outcome {
    match execute(inv) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: EXIT_USAGE,
            stdout: format!("error: {e}\n"),
        },
    }
}

fn execute(inv: &Invocation) -> Result<Outcome, Error> {
    let json = inv.format == Format::Json;
    let ok = |stdout: String| {
        Ok(Outcome {
            code: EXIT_OK,
            stdout,
        })
    };
    match &inv.command {
        Command::Bound {
            stratum,
            mode,
            quadratic,
        } => {
            let report = bounds::sum_upper_bound(stratum, &build_mode(*mode, quadratic)?)?;
            if json {
                return ok(emit_json(&BoundJson::from(&report)) + "\n");
            }
            ok(render_bound(&report))
        }
        Command::Partial {
            stratum,
            mode,
            quadratic,
            k,
        } => {
            let mode = build_mode(*mode, quadratic)?;
            let w = bounds::w_upper_bounds(stratum, &mode)?;
            let partial = bounds::partial_sum_bound(stratum, &mode, *k)?;
            if json {
                return ok(emit_json(&PartialJson {
                    stratum: stratum.signature().to_vec(),
                    genus: stratum.genus(),
                    mode: mode.name().into(),
                    k: *k,
                    partial_sum: partial.to_string(),
                    w_upper: strings(&w),
                }) + "\n");
            }
            ok(format!(
                "stratum ({stratum}), genus {}, mode {mode}\nw_upper: {}\nsum of first {k}: {partial}\n",
                stratum.genus(),
                strings(&w).join(", ")
            ))
        }
        Command::Hyp(q) => {
            let locus = q.hyperelliptic_locus()?;
            let w = spectra::hyperelliptic_w(&locus)?;
            let sum = spectra::hyperelliptic_sum(&locus)?;
            if json {
                return ok(emit_json(&HypJson {
                    quadratic: q.to_string(),
                    stratum: locus.induced().signature().to_vec(),
                    genus: locus.cover_genus(),
                    w: strings(w.values()),
                    sum: sum.to_string(),
                    max_sum: locus.is_max_sum(),
                    connectivity_assumed: true,
                }) + "\n");
            }
            ok(format!(
                "Q({q}) -> ({}) hyp, genus {}\nw: {}\nsum: {sum}{}\n",
                join(locus.induced().signature()),
                locus.cover_genus(),
                strings(w.values()).join(", "),
                if locus.is_max_sum() { " = (g+1)/2" } else { "" }
            ))
        }
        Command::Cover(q) => {
            let (stratum, genus) = q.induced_abelian()?;
            if json {
                return ok(emit_json(&CoverJson {
                    quadratic: q.to_string(),
                    base_genus: q.base_genus(),
                    stratum: stratum.signature().to_vec(),
                    genus,
                    branch_points: q.branch_count(),
                    connectivity_assumed: true,
                }) + "\n");
            }
            ok(format!(
                "Q({q}), base genus {} -> ({}), genus {genus}, {} branch points (cover assumed connected)\n",
                q.base_genus(),
                join(stratum.signature()),
                q.branch_count()
            ))
        }
        Command::Cyclic { n, a } => {
            let genus = spectra::cyclic_cover_genus(*n, *a)?;
            let spectrum = if *a == [n - 1, 1, n - 1, 1] && n % 2 == 0 && *n >= 4 {
                Some(spectra::mn_spectrum(*n)?)
            } else {
                None
            };
            if json {
                return ok(emit_json(&CyclicJson {
                    n: *n,
                    a: *a,
                    genus,
                    spectrum: spectrum.map(|s| strings(s.values())),
                }) + "\n");
            }
            let mut out = format!("M_{n}({}) genus {genus}\n", join(a));
            if let Some(s) = spectrum {
                let _ = writeln!(out, "spectrum: {}", strings(s.values()).join(", "));
            }
            ok(out)
        }
        Command::Table(genus) => {
            if json {
                let rows = spectra::nonvarying_table(*genus)?
                    .iter()
                    .map(|row| TableRowJson {
                        zeros: row.zeros.to_vec(),
                        component: row.component.to_string(),
                        w: strings(&row.w()),
                        w_printed: row.w_text.iter().map(|s| s.to_string()).collect(),
                        sum: row.sum().to_string(),
                        sum_printed: row.sum_text.to_string(),
                        sum_is_bound: row.sum_is_bound,
                        quadratic: row.quadratic.map(str::to_string),
                    })
                    .collect();
                return ok(emit_json(&TableJson {
                    genus: *genus,
                    rows,
                }) + "\n");
            }
            ok(spectra::render_table(*genus)?)
        }
        Command::Check => Ok(run_checks(json)),
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn render_bound(r: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "stratum ({}), genus {}, mode {}",
        r.stratum,
        r.stratum.genus(),
        r.mode
    );
    let _ = writeln!(
        out,
        "H: {}",
        r.h_used
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    let _ = writeln!(out, "w_upper: {}", strings(&r.w_upper).join(", "));
    let _ = writeln!(out, "sum_upper: {}", r.sum_upper);
    let _ = writeln!(out, "theorem_cap: {}", r.theorem_cap);
    let _ = writeln!(out, "effective_sum: {}", r.effective_sum);
    let _ = writeln!(out, "kappa_lower: {}", r.kappa_lower);
    let _ = writeln!(out, "equality_case: {}", r.equality_case);
    out
}

/// CLI-level invariants: argument round trip and byte-stable JSON.
fn cli_check() -> CheckOutcome {
    let samples = [
        vec![
            "lyabound", "bound", "--zeros", "2,2,1,1", "--mode", "non-hyp",
        ],
        vec![
            "lyabound",
            "--format",
            "json",
            "bound",
            "--zeros",
            "4,4",
            "--mode",
            "hyp-exact",
            "--quadratic",
            "8,-1x12",
        ],
        vec!["lyabound", "hyp", "--quadratic", "4,4,-1x12"],
        vec![
            "lyabound",
            "--format",
            "json",
            "cover",
            "--quadratic",
            "2,-1,-1",
        ],
        vec!["lyabound", "cyclic", "--n", "8", "--a", "7,1,7,1"],
        vec!["lyabound", "--format", "json", "table", "5"],
        vec!["lyabound", "partial", "--zeros", "6:even", "--k", "2"],
    ];
    let mut counterexample = None;
    for argv in &samples {
        let ok = parse_args(argv.iter()).ok().is_some_and(|inv| {
            parse_args(inv.to_args()).as_ref() == Ok(&inv)
                && run(&inv) == run(&inv)
                && run(&inv).code == EXIT_OK
        });
        if !ok && counterexample.is_none() {
            counterexample = Some(argv.join(" "));
        }
    }
    CheckOutcome {
        name: "cli: parse(render(cmd)) = cmd, output byte-stable",
        cases: samples.len(),
        counterexample,
    }
}

/// Runs every sweep on worker threads; results keep the fixed check order.
pub fn run_checks(json: bool) -> Outcome {
    let mut outcomes: Vec<CheckOutcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = selfcheck::CHECKS
            .iter()
            .map(|check| scope.spawn(check))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread"))
            .collect()
    });
    outcomes.push(cli_check());
    let failed = outcomes.iter().any(|o| !o.passed());
    let mut stdout = String::new();
    for o in &outcomes {
        if json {
            stdout += &emit_json(&CheckJson {
                name: o.name.to_string(),
                cases: o.cases,
                passed: o.passed(),
                counterexample: o.counterexample.clone(),
            });
            stdout.push('\n');
        } else {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            let _ = write!(stdout, "{status} {:>6} cases  {}", o.cases, o.name);
            if let Some(c) = &o.counterexample {
                let _ = write!(stdout, "\n     counterexample: {c}");
            }
            stdout.push('\n');
        }
    }
    Outcome {
        code: if failed { EXIT_CHECK_FAILED } else { EXIT_OK },
        stdout,
    }
}
