//! Command-line front end for the certifier.
//!
//! Five commands over one input pipeline: parse (or load) a polynomial,
//! run the requested search or check, and render the result as text, JSON,
//! or LaTeX. Exit codes are part of the contract: 0 for success, 1 for a
//! mathematically negative result (a failed verdict or verification), 2 for
//! unusable input. [`run`] is pure string-in/string-out so tests can drive
//! it in-process; the binary in `main.rs` only maps [`Outcome`] to streams
//! and exit codes.

pub mod json;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polycert::{
    bounds, certify_at, certify_minimal, lagrange_bound, minimal_integer_shift, optimal_threshold,
    parse, render, render_rat, search, verify, BigInt, Certificate, LagrangeBound, Poly,
    PositivityVerdict, Rat, ShiftMode, Style, ThresholdBracket, VerifyOutcome,
};

use crate::json::{
    rat_to_pair, BoundBodyDoc, BoundDoc, CertificateDoc, ThresholdDoc, VerifyDoc, BOUND_SCHEMA,
    VERIFY_SCHEMA,
};

#[derive(Debug, Parser)]
#[command(
    name = "polycert",
    version,
    about = "Exact positivity certificates for univariate polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for the minimal shift and emit a positivity certificate
    Certify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Shift search mode
        #[arg(long, value_enum, default_value_t = Mode::Integer)]
        mode: Mode,
        /// Bracket width for real mode, a positive rational (default 1/2^20)
        #[arg(long, value_name = "R")]
        epsilon: Option<String>,
    },
    /// Divide by x - b at a given shift and report the verdict
    CertifyAt {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// The shift b, a nonnegative rational
        #[arg(long, value_name = "R")]
        shift: String,
    },
    /// Bracket the optimal threshold and the minimal integer shift
    Threshold {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Bracket width, a positive rational (default 1/2^20)
        #[arg(long, value_name = "R")]
        epsilon: Option<String>,
    },
    /// Lagrange's upper bound on the positive roots
    Bound {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Enclosure width for the k-th root, a positive rational (default 1/2^32)
        #[arg(long, value_name = "R")]
        epsilon: Option<String>,
    },
    /// Re-check a JSON certificate from scratch
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Inline input: a polynomial expression (JSON certificate for verify)
    #[arg(value_name = "EXPR", conflicts_with = "input")]
    pub expr: Option<String>,
    /// Read the input from a file instead
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Variable name to use in rendered output
    #[arg(long, value_name = "NAME")]
    pub var: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Integer,
    Real,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// What a run produced, tagged with how the process should end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Exit 0; the payload goes to stdout.
    Success(String),
    /// Exit 1: the mathematics came back negative. Payload to stdout.
    MathNegative(String),
    /// Exit 2: the request itself was unusable. Message to stderr.
    Usage(String),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Success(_) => 0,
            Outcome::MathNegative(_) => 1,
            Outcome::Usage(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Outcome::Success(s) | Outcome::MathNegative(s) | Outcome::Usage(s) => s,
        }
    }
}

/// Executes a parsed command line.
pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Certify {
            input,
            output,
            mode,
            epsilon,
        } => run_certify(&input, &output, mode, epsilon.as_deref()),
        Command::CertifyAt {
            input,
            output,
            shift,
        } => run_certify_at(&input, &output, &shift),
        Command::Threshold {
            input,
            output,
            epsilon,
        } => run_threshold(&input, &output, epsilon.as_deref()),
        Command::Bound {
            input,
            output,
            epsilon,
        } => run_bound(&input, &output, epsilon.as_deref()),
        Command::Verify { input, output } => run_verify(&input, &output),
    };
    match result {
        Ok(outcome) | Err(outcome) => outcome,
    }
}

fn usage<E: std::fmt::Display>(err: E) -> Outcome {
    Outcome::Usage(err.to_string())
}

fn load_text(input: &InputArgs) -> Result<String, Outcome> {
    match (&input.input, &input.expr) {
        (Some(path), None) => fs::read_to_string(path)
            .map_err(|err| Outcome::Usage(format!("cannot read {}: {err}", path.display()))),
        (None, Some(expr)) => Ok(expr.clone()),
        (None, None) => Err(Outcome::Usage(
            "an inline expression or --input FILE is required".to_string(),
        )),
        (Some(_), Some(_)) => Err(Outcome::Usage(
            "give an inline expression or --input FILE, not both".to_string(),
        )),
    }
}

fn load_poly(input: &InputArgs) -> Result<Poly, Outcome> {
    let text = load_text(input)?;
    let parsed = parse(text.trim()).map_err(usage)?;
    Ok(match &input.var {
        Some(name) => parsed.poly.with_variable(name),
        None => parsed.poly,
    })
}

fn parse_rat_flag(value: &str, flag: &str) -> Result<Rat, Outcome> {
    value
        .parse::<Rat>()
        .map_err(|err| Outcome::Usage(format!("invalid {flag}: {err}")))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

fn run_certify(
    input: &InputArgs,
    output: &OutputArgs,
    mode: Mode,
    epsilon: Option<&str>,
) -> Result<Outcome, Outcome> {
    let f = load_poly(input)?;
    let mode = match (mode, epsilon) {
        (Mode::Integer, None) => ShiftMode::Integer,
        (Mode::Integer, Some(_)) => {
            return Err(Outcome::Usage(
                "--epsilon applies only to --mode real".to_string(),
            ))
        }
        (Mode::Real, eps) => ShiftMode::Real {
            epsilon: match eps {
                Some(e) => parse_rat_flag(e, "--epsilon")?,
                None => search::default_epsilon(),
            },
        },
    };
    let cert = certify_minimal(&f, &mode).map_err(usage)?;
    Ok(Outcome::Success(render_certificate(&cert, output.format)))
}

fn run_certify_at(
    input: &InputArgs,
    output: &OutputArgs,
    shift: &str,
) -> Result<Outcome, Outcome> {
    let f = load_poly(input)?;
    let b = parse_rat_flag(shift, "--shift")?;
    let cert = certify_at(&f, &b).map_err(usage)?;
    let rendered = render_certificate(&cert, output.format);
    Ok(match cert.verdict() {
        PositivityVerdict::AllNonnegative => Outcome::Success(rendered),
        PositivityVerdict::HasNegative(_) => Outcome::MathNegative(rendered),
    })
}

fn run_threshold(
    input: &InputArgs,
    output: &OutputArgs,
    epsilon: Option<&str>,
) -> Result<Outcome, Outcome> {
    let f = load_poly(input)?;
    let epsilon = match epsilon {
        Some(e) => parse_rat_flag(e, "--epsilon")?,
        None => search::default_epsilon(),
    };
    let bracket = optimal_threshold(&f, &epsilon).map_err(usage)?;
    let minimal = minimal_integer_shift(&f).map_err(usage)?;
    Ok(Outcome::Success(render_threshold(
        &f,
        &bracket,
        &minimal,
        output.format,
    )))
}

fn run_bound(
    input: &InputArgs,
    output: &OutputArgs,
    epsilon: Option<&str>,
) -> Result<Outcome, Outcome> {
    let f = load_poly(input)?;
    let epsilon = match epsilon {
        Some(e) => parse_rat_flag(e, "--epsilon")?,
        None => bounds::default_epsilon(),
    };
    let result = lagrange_bound(&f, &epsilon).map_err(usage)?;
    Ok(Outcome::Success(render_bound(
        &f,
        &epsilon,
        &result,
        output.format,
    )))
}

fn run_verify(input: &InputArgs, output: &OutputArgs) -> Result<Outcome, Outcome> {
    let text = load_text(input)?;
    let doc: CertificateDoc = serde_json::from_str(&text)
        .map_err(|err| Outcome::Usage(format!("invalid certificate JSON: {err}")))?;
    let cert = doc.into_certificate().map_err(Outcome::Usage)?;
    let cert = match &input.var {
        Some(name) => Certificate::from_parts(
            cert.input_poly().clone().with_variable(name),
            cert.shift().clone(),
            cert.quotient_coefficients().to_vec(),
            cert.remainder().clone(),
            cert.verdict().clone(),
        ),
        None => cert,
    };
    let outcome = verify(&cert);
    let rendered = render_verify(&cert, outcome, output.format);
    Ok(match outcome {
        VerifyOutcome::Valid => Outcome::Success(rendered),
        _ => Outcome::MathNegative(rendered),
    })
}

fn verdict_line(cert: &Certificate) -> String {
    let var = cert.input_poly().variable_name();
    match cert.verdict() {
        PositivityVerdict::AllNonnegative => format!(
            "all shifted values nonnegative; f({var}) > 0 for all {var} > {}",
            cert.shift()
        ),
        PositivityVerdict::HasNegative(k) => {
            let n = cert.quotient_coefficients().len();
            if *k < n {
                format!(
                    "negative quotient coefficient at index {k}: {}",
                    cert.quotient_coefficients()[*k]
                )
            } else {
                format!("negative remainder at index {k}: {}", cert.remainder())
            }
        }
    }
}

fn render_certificate_text(cert: &Certificate) -> String {
    let var = cert.input_poly().variable_name();
    format!(
        "input: f({var}) = {}\nshift: b = {}\nidentity: f({var}) = {cert}\nverdict: {}",
        render(cert.input_poly(), Style::Plain),
        cert.shift(),
        verdict_line(cert),
    )
}

/// The certificate identity as a LaTeX line, quotient in descending powers
/// with zero terms omitted.
pub fn render_certificate_latex(cert: &Certificate) -> String {
    let var = cert.input_poly().variable_name();
    let quotient = render(&cert.quotient_poly(), Style::Latex);
    let linear = if cert.shift().is_zero() {
        var.to_string()
    } else {
        format!("{var} - {}", render_rat(cert.shift(), Style::Latex))
    };
    format!(
        "f({var}) \\equiv ({quotient})({linear}) + {}",
        render_rat(cert.remainder(), Style::Latex)
    )
}

fn render_certificate(cert: &Certificate, format: Format) -> String {
    match format {
        Format::Text => render_certificate_text(cert),
        Format::Json => to_json(&CertificateDoc::from_certificate(cert)),
        Format::Latex => render_certificate_latex(cert),
    }
}

fn render_threshold(
    f: &Poly,
    bracket: &ThresholdBracket,
    minimal: &BigInt,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let var = f.variable_name();
            let exact = match bracket.exact() {
                Some(e) => format!("exact: b* = {e}"),
                None => "exact: none (bracket only)".to_string(),
            };
            let witness = match bracket.witness_index() {
                Some(p) => format!("witness index: p = {p}"),
                None => "witness index: none".to_string(),
            };
            format!(
                "input: f({var}) = {}\nepsilon: {}\nbracket: lo = {} (P fails), hi = {} (P holds)\n{exact}\n{witness}\nminimal integer shift: {minimal}",
                render(f, Style::Plain),
                bracket.epsilon(),
                bracket.lo(),
                bracket.hi(),
            )
        }
        Format::Json => to_json(&ThresholdDoc::new(f, bracket, minimal)),
        Format::Latex => {
            let b_star = match bracket.exact() {
                Some(e) => format!("b^{{*}} = {}", render_rat(e, Style::Latex)),
                None => format!(
                    "b^{{*}} \\in \\left({}, {}\\right]",
                    render_rat(bracket.lo(), Style::Latex),
                    render_rat(bracket.hi(), Style::Latex)
                ),
            };
            format!("{b_star}, \\quad m_{{\\min}} = {minimal}")
        }
    }
}

fn render_bound(f: &Poly, epsilon: &Rat, result: &LagrangeBound, format: Format) -> String {
    let var = f.variable_name();
    match format {
        Format::Text => match result {
            LagrangeBound::NoNegativeCoefficients => format!(
                "input: f({var}) = {}\nno negative coefficients: f has no positive root; f({var}) > 0 for all {var} > 0",
                render(f, Style::Plain)
            ),
            LagrangeBound::Bound(report) => format!(
                "input: f({var}) = {}\nfirst negative index: k = {}\nmagnitude: B = {}\nbound: f({var}) > 0 for all {var} > {}\nslack: at most {}",
                render(f, Style::Plain),
                report.first_negative_index,
                report.magnitude,
                report.bound_overestimate,
                report.slack,
            ),
        },
        Format::Json => {
            let body = match result {
                LagrangeBound::NoNegativeCoefficients => None,
                LagrangeBound::Bound(report) => Some(BoundBodyDoc {
                    first_negative_index_k: report.first_negative_index.to_string(),
                    magnitude_b: rat_to_pair(&report.magnitude),
                    bound_overestimate: rat_to_pair(&report.bound_overestimate),
                    slack: rat_to_pair(&report.slack),
                }),
            };
            let doc = BoundDoc {
                schema: BOUND_SCHEMA.to_string(),
                variable: var.to_string(),
                input: json::poly_to_pairs(f),
                epsilon: rat_to_pair(epsilon),
                bound: body,
            };
            to_json(&doc)
        }
        Format::Latex => match result {
            LagrangeBound::NoNegativeCoefficients => {
                format!("{var} > 0 \\implies f({var}) > 0")
            }
            LagrangeBound::Bound(report) => format!(
                "{var} > {} \\implies f({var}) > 0",
                render_rat(&report.bound_overestimate, Style::Latex)
            ),
        },
    }
}

fn render_verify(cert: &Certificate, outcome: VerifyOutcome, format: Format) -> String {
    let word = match outcome {
        VerifyOutcome::Valid => "valid",
        VerifyOutcome::IdentityMismatch => "identity-mismatch",
        VerifyOutcome::NegativeCoefficientClaimed => "negative-coefficient-claimed",
    };
    match format {
        Format::Text => {
            let detail = match outcome {
                VerifyOutcome::Valid => "valid".to_string(),
                VerifyOutcome::IdentityMismatch => {
                    "identity mismatch: (x - b)*quotient + remainder does not re-expand to the input"
                        .to_string()
                }
                VerifyOutcome::NegativeCoefficientClaimed => {
                    "verdict mismatch: the stored verdict disagrees with a fresh scan".to_string()
                }
            };
            format!("certificate: f = {cert}\nverify: {detail}")
        }
        Format::Json => to_json(&VerifyDoc {
            schema: VERIFY_SCHEMA.to_string(),
            outcome: word.to_string(),
        }),
        Format::Latex => match outcome {
            VerifyOutcome::Valid => render_certificate_latex(cert),
            _ => format!("\\text{{{word}}}"),
        },
    }
}
