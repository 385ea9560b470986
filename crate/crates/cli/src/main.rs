//! Command-line surface for the deformed-fermion toolkit: ordering
//! tables, verification suites, spectra, coherent-state diagnostics,
//! and the published-table audit.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use bkappa::analytic::{bargmann_monomial, coherent_state, generalized_derivative, multiply_by_z};
use bkappa::exact::Rational;
use bkappa::fock::{algebraic_spectrum, gap_analysis, spectrum_to_json, LadderProduct};
use bkappa::ordering::{bell, stirling, stirling_published_recurrence, StirlingTable};
use bkappa::spectral::{cs_verify, PotentialFamily};
use bkappa::suites;

use output::Sink;

#[derive(Parser)]
#[command(
    name = "bkappa",
    version,
    about = "Exact calculus and spectral checks for the deformed fermion algebra {f-, f+} = 1 + 2κN"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format (default: text; verify defaults to json).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Shorthand for --format json.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print progress notes to standard error.
    #[arg(short, long)]
    verbose: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        self.format_or(Format::Text)
    }

    fn format_or(&self, default: Format) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format.unwrap_or(default)
        }
    }

    fn sink(&self) -> Sink {
        Sink::new(self.output.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scheme {
    /// Left-multiplication recurrence validated by the Wick identity.
    Wick,
    /// The published recurrence exactly as printed (audit use).
    Published,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the ordering table S(r, k, N) for one order.
    Stirling {
        /// Table order (r >= 1).
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = Scheme::Wick)]
        scheme: Scheme,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit Bell operators B_r for r = 1..=max_r.
    Bell {
        #[arg(long = "max-r")]
        max_r: u32,
        /// Optional exact rational kappa to substitute, e.g. 1/3 or 0.
        #[arg(long)]
        kappa: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Entry-by-entry audit of computed tables against the published ones.
    Audit {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact eigenvalues and gaps of a diagonal ladder product.
    Spectrum {
        /// Exact rational kappa, e.g. 4/5.
        #[arg(long)]
        kappa: String,
        /// Which product: f+f- or f-f+.
        #[arg(long)]
        operator: String,
        #[arg(long)]
        levels: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coherent-state diagnostics: truncation, residual, coefficients.
    Coherent {
        /// Kappa as p/q or decimal (> 0).
        #[arg(long)]
        kappa: String,
        /// Complex label, re,im (or just re).
        #[arg(long)]
        z: String,
        /// Tail tolerance for the adaptive truncation.
        #[arg(long, default_value_t = 1e-24)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Ladder-action checks in the polynomial realization.
    BargmannCheck {
        #[arg(long = "max-degree", default_value_t = 60)]
        max_degree: u32,
        /// Kappa as p/q or decimal (> 0).
        #[arg(long, default_value = "1/3")]
        kappa: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Finite-difference verification of the partner-potential spectra.
    Calogero {
        /// v0 or v1.
        #[arg(long)]
        potential: String,
        /// Kappa as a decimal (> 0).
        #[arg(long)]
        kappa: f64,
        #[arg(long, default_value_t = 5)]
        levels: usize,
        /// Comma-separated interior point counts, e.g. 2000,4000,8000.
        #[arg(long, default_value = "2000,4000,8000", value_delimiter = ',')]
        grids: Vec<usize>,
        /// Domain length L.
        #[arg(long, default_value_t = 40.0)]
        length: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run a named verification suite (or all of them).
    Verify {
        /// all, algebra, ordering, analytic, or spectral.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Run independent suites on separate threads.
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn parse_exact_kappa(text: &str) -> Result<Rational, String> {
    Rational::parse(text).map_err(|e| e.to_string())
}

fn parse_complex(text: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = text.split(',').collect();
    match parts.as_slice() {
        [re] => re
            .trim()
            .parse::<f64>()
            .map(|r| Complex64::new(r, 0.0))
            .map_err(|e| e.to_string()),
        [re, im] => {
            let re = re.trim().parse::<f64>().map_err(|e| e.to_string())?;
            let im = im.trim().parse::<f64>().map_err(|e| e.to_string())?;
            Ok(Complex64::new(re, im))
        }
        _ => Err(format!("expected re or re,im, got '{text}'")),
    }
}

/// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn table_text(table: &StirlingTable) -> String {
    let mut out = String::new();
    for (k, entry) in table.entries() {
        out.push_str(&format!("S({}, {}) = {}\n", table.order(), k, entry));
    }
    out.trim_end().to_string()
}

fn run_stirling(r: u32, scheme: Scheme, out: &OutputArgs) -> u8 {
    let table = match scheme {
        Scheme::Wick => stirling(r),
        Scheme::Published => stirling_published_recurrence(r),
    };
    let table = match table {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    let sink = out.sink();
    let result = match out.format() {
        Format::Json => sink.emit_json(json!({
            "scheme": match scheme { Scheme::Wick => "wick", Scheme::Published => "published" },
            "table": table.to_json(),
        })),
        Format::Text => sink.emit(&table_text(&table)),
        Format::Csv => return usage_error("stirling has no CSV form; use --format json or text"),
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    EXIT_OK
}

fn run_bell(max_r: u32, kappa: Option<&str>, out: &OutputArgs) -> u8 {
    if max_r < 1 {
        return usage_error("--max-r must be at least 1");
    }
    let kappa0 = match kappa.map(parse_exact_kappa).transpose() {
        Ok(k) => k,
        Err(e) => return usage_error(&e),
    };
    let mut rows = Vec::new();
    for r in 1..=max_r {
        let b = match bell(r) {
            Ok(b) => b,
            Err(e) => return usage_error(&e.to_string()),
        };
        let value = match &kappa0 {
            Some(k) => b.substitute_kappa(k),
            None => b,
        };
        rows.push((r, value));
    }
    let sink = out.sink();
    let result = match out.format() {
        Format::Json => sink.emit_json(json!({
            "kappa": kappa0.as_ref().map(|k| k.to_string()),
            "bell": rows.iter().map(|(r, v)| json!({
                "r": r,
                "operator": v.to_json(),
                "text": v.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let lines: Vec<String> = rows.iter().map(|(r, v)| format!("B_{r} = {v}")).collect();
            sink.emit(&lines.join("\n"))
        }
        Format::Csv => return usage_error("bell has no CSV form; use --format json or text"),
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    EXIT_OK
}

fn run_audit(out: &OutputArgs) -> u8 {
    let report = suites::audit();
    let sink = out.sink();
    let result = match out.format() {
        Format::Json => sink.emit_json(report.to_json()),
        Format::Text => sink.emit(&report.to_string()),
        Format::Csv => return usage_error("audit has no CSV form; use --format json or text"),
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    EXIT_OK
}

fn run_spectrum(kappa: &str, operator: &str, levels: u32, out: &OutputArgs) -> u8 {
    let kappa0 = match parse_exact_kappa(kappa) {
        Ok(k) => k,
        Err(e) => return usage_error(&e),
    };
    let which = match LadderProduct::parse(operator) {
        Ok(w) => w,
        Err(e) => return usage_error(&e.to_string()),
    };
    let eigenvalues = match algebraic_spectrum(which, &kappa0, levels) {
        Ok(v) => v,
        Err(e) => return usage_error(&e.to_string()),
    };
    let sink = out.sink();
    let result = match out.format() {
        Format::Json => sink.emit_json(spectrum_to_json(&kappa0, which, &eigenvalues)),
        Format::Text => {
            let values: Vec<String> = eigenvalues.iter().map(|v| v.to_string()).collect();
            let gaps: Vec<String> = gap_analysis(&eigenvalues)
                .iter()
                .map(|v| v.to_string())
                .collect();
            sink.emit(&format!(
                "spectrum({}, kappa = {}): {}\ngaps: {}",
                which.as_str(),
                kappa0,
                values.join(", "),
                gaps.join(", ")
            ))
        }
        Format::Csv => {
            let mut csv = String::from("n,eigenvalue\n");
            for (n, v) in eigenvalues.iter().enumerate() {
                csv.push_str(&format!("{n},{v}\n"));
            }
            sink.emit(csv.trim_end())
        }
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    EXIT_OK
}

fn run_coherent(kappa: &str, z: &str, tol: f64, out: &OutputArgs) -> u8 {
    let kappa0 = match parse_exact_kappa(kappa) {
        Ok(k) => k,
        Err(e) => return usage_error(&e),
    };
    let z = match parse_complex(z) {
        Ok(z) => z,
        Err(e) => return usage_error(&e),
    };
    let state = match coherent_state(&kappa0, z, tol) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    if out.verbose {
        eprintln!(
            "truncated at D = {} states for tail tolerance {tol:e}",
            state.truncation()
        );
    }
    let sink = out.sink();
    let result = match out.format() {
        Format::Json => sink.emit_json(state.to_json()),
        Format::Text => sink.emit(&format!(
            "coherent state: kappa = {}, z = {} + {}i\nD = {}, residual = {:.3e}, norm error = {:.3e}",
            state.kappa,
            state.z.re,
            state.z.im,
            state.truncation(),
            state.residual(),
            state.norm_error(),
        )),
        Format::Csv => return usage_error("coherent has no CSV form; use --format json or text"),
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    EXIT_OK
}

fn run_bargmann_check(max_degree: u32, kappa: &str, out: &OutputArgs) -> u8 {
    let kappa0 = match parse_exact_kappa(kappa) {
        Ok(k) if k.is_positive() => k,
        Ok(k) => return usage_error(&format!("kappa must be > 0, got {k}")),
        Err(e) => return usage_error(&e),
    };
    let mut worst_raise = 0.0f64;
    let mut worst_lower = 0.0f64;
    for n in 0..=max_degree {
        let f_n = bargmann_monomial(&kappa0, n);
        let up = multiply_by_z(&f_n);
        let f_up = bkappa::algebra::structure_function_value(&kappa0, n + 1)
            .expect("kappa validated")
            .to_f64()
            .sqrt();
        let expect = bargmann_monomial(&kappa0, n + 1).scale(Complex64::new(f_up, 0.0));
        worst_raise = worst_raise.max(up.max_abs_diff(&expect));
        if n > 0 {
            let f_dn = bkappa::algebra::structure_function_value(&kappa0, n)
                .expect("kappa validated")
                .to_f64()
                .sqrt();
            let expect = bargmann_monomial(&kappa0, n - 1).scale(Complex64::new(f_dn, 0.0));
            worst_lower =
                worst_lower.max(generalized_derivative(&kappa0, &f_n).max_abs_diff(&expect));
        }
    }
    let passed = worst_raise <= 1e-12 && worst_lower <= 1e-12;
    let sink = out.sink();
    let result = match out.format() {
        Format::Json => sink.emit_json(json!({
            "kappa": kappa0.to_string(),
            "max_degree": max_degree,
            "worst_raise_error": worst_raise,
            "worst_lower_error": worst_lower,
            "tolerance": 1e-12,
            "passed": passed,
        })),
        Format::Text => sink.emit(&format!(
            "ladder checks to degree {max_degree} at kappa = {kappa0}:\n  worst z·f_n error: \
             {worst_raise:.3e}\n  worst D^κ f_n error: {worst_lower:.3e}\n  {}",
            if passed {
                "PASS (tolerance 1e-12)"
            } else {
                "FAIL (tolerance 1e-12)"
            }
        )),
        Format::Csv => {
            return usage_error("bargmann-check has no CSV form; use --format json or text")
        }
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn run_calogero(
    potential: &str,
    kappa: f64,
    levels: usize,
    grids: &[usize],
    length: f64,
    out: &OutputArgs,
) -> u8 {
    let family = match PotentialFamily::parse(potential) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    if out.verbose {
        eprintln!("solving {} grids for {} levels ...", grids.len(), levels);
    }
    let report = match cs_verify(family, kappa, levels, grids, length) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let sink = out.sink();
    let result = match out.format() {
        Format::Json => sink.emit_json(report.to_json()),
        Format::Text => {
            let mut text = format!(
                "{} at kappa = {kappa}, L = {length}, grids {:?}\n",
                family.as_str(),
                report.grids
            );
            for level in &report.levels {
                text.push_str(&format!(
                    "  level {}: extrapolated {:.12} target {:.12} rel error {:.3e}\n",
                    level.level, level.extrapolated, level.target, level.rel_error
                ));
            }
            text.push_str(&format!(
                "  max relative error {:.3e}",
                report.max_rel_error()
            ));
            sink.emit(&text)
        }
        Format::Csv => {
            let mut csv = String::from("level,extrapolated,target,rel_error\n");
            for level in &report.levels {
                csv.push_str(&format!(
                    "{},{:.14e},{:.14e},{:.3e}\n",
                    level.level, level.extrapolated, level.target, level.rel_error
                ));
            }
            sink.emit(csv.trim_end())
        }
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    EXIT_OK
}

fn run_verify(suite: &str, parallel: bool, out: &OutputArgs) -> u8 {
    let names: Vec<&str> = if suite == "all" {
        suites::SUITE_NAMES.to_vec()
    } else if suites::SUITE_NAMES.contains(&suite) {
        vec![suite]
    } else {
        return usage_error(&format!(
            "unknown suite '{suite}'; expected all, {}",
            suites::SUITE_NAMES.join(", ")
        ));
    };
    if out.verbose {
        eprintln!(
            "running suites {:?}{}",
            names,
            if parallel { " in parallel" } else { "" }
        );
    }
    let reports: Vec<bkappa::Report> = if parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = names
                .iter()
                .map(|name| scope.spawn(move || suites::run_suite(name).expect("known suite")))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("suite panicked"))
                .collect()
        })
    } else {
        names
            .iter()
            .map(|name| suites::run_suite(name).expect("known suite"))
            .collect()
    };
    let passed = reports.iter().all(|r| r.passed());
    let sink = out.sink();
    // the verify surface is machine-readable unless text is requested
    let result = match out.format_or(Format::Json) {
        Format::Json => sink.emit_json(json!({
            "passed": passed,
            "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut text = String::new();
            for report in &reports {
                text.push_str(&report.to_string());
                text.push('\n');
            }
            text.push_str(&format!(
                "verify: {}",
                if passed {
                    "all suites passed"
                } else {
                    "FAILURES PRESENT"
                }
            ));
            sink.emit(&text)
        }
        Format::Csv => return usage_error("verify has no CSV form; use --format json or text"),
    };
    if result.is_err() {
        return usage_error("could not write output");
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Stirling { r, scheme, out } => run_stirling(*r, *scheme, out),
        Command::Bell { max_r, kappa, out } => run_bell(*max_r, kappa.as_deref(), out),
        Command::Audit { out } => run_audit(out),
        Command::Spectrum {
            kappa,
            operator,
            levels,
            out,
        } => run_spectrum(kappa, operator, *levels, out),
        Command::Coherent { kappa, z, tol, out } => run_coherent(kappa, z, *tol, out),
        Command::BargmannCheck {
            max_degree,
            kappa,
            out,
        } => run_bargmann_check(*max_degree, kappa, out),
        Command::Calogero {
            potential,
            kappa,
            levels,
            grids,
            length,
            out,
        } => run_calogero(potential, *kappa, *levels, grids, *length, out),
        Command::Verify {
            suite,
            parallel,
            out,
        } => run_verify(suite, *parallel, out),
    };
    ExitCode::from(code)
}
