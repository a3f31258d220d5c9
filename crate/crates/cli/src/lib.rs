//! Command-line front end: parsing, algebra commands and verification suites.

pub mod format;
pub mod parse;

use clap::{Parser, Subcommand, ValueEnum};
use superhopf::action::{act, verify_module_algebra};
use superhopf::bicross::classical::classical_check;
use superhopf::bicross::scheme::verify_scheme;
use superhopf::bicross::{verify_compatibility, verify_h_hopf, Bicross};
use superhopf::coaction::{coact, verify_comodule};
use superhopf::ffun::{verify_f_hopf, FHopf, DEFAULT_MAX_INDEX};
use superhopf::jets::oracle::{verify_jets, verify_oracles, OracleCheck};
use superhopf::report::Report;
use superhopf::uenv::verify_u;
use superhopf::{Leg, SuperPoly};
use thiserror::Error;

use crate::format::{render_report, render_value, Format};
use crate::parse::{parse, ParseError, Value};

#[derive(Debug, Parser)]
#[command(name = "superhopf", version, about = "Exact computations in the super Connes-Moscovici Hopf algebra")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse an expression and print its normal form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct of an element of F, U or H.
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode of an element of F, U or H.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Action of an element of U on an element of F.
    Act {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Coaction of an element of U.
    Coact {
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Product of two elements of H.
    Hmul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_index: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Compare closed forms with the jet-group oracle.
    Oracle {
        #[arg(long, value_enum)]
        check: OracleKind,
        #[arg(long, default_value_t = 6)]
        max_index: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    F,
    U,
    Action,
    Coaction,
    Compat,
    Hopf,
    Classical,
    Jets,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Coproduct,
    Action,
    Antipode,
    Factorization,
}

impl From<OracleKind> for OracleCheck {
    fn from(k: OracleKind) -> Self {
        match k {
            OracleKind::Coproduct => OracleCheck::Coproduct,
            OracleKind::Action => OracleCheck::Action,
            OracleKind::Antipode => OracleCheck::Antipode,
            OracleKind::Factorization => OracleCheck::Factorization,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("expected {expected}, got a {got}")]
    Kind { expected: &'static str, got: &'static str },
    #[error(transparent)]
    Algebra(#[from] superhopf::AlgebraError),
}

/// Output of a command and whether it counts as success.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

fn kind_error(expected: &'static str, v: &Value) -> CliError {
    CliError::Kind { expected, got: v.kind() }
}

/// Largest generator index appearing in a value, used to size the F tables.
fn max_index(v: &Value) -> u32 {
    let poly = |p: &SuperPoly| p.terms().flat_map(|(m, _)| m.factors()).map(|(g, _)| g.index).max().unwrap_or(0);
    match v {
        Value::Scalar(_) | Value::U(_) => 0,
        Value::F(p) => poly(p),
        Value::H(h) => h.as_tensor().terms().flat_map(|(l, _)| l.iter().map(leg_index)).max().unwrap_or(0),
        Value::Tensor(t) => t.terms().flat_map(|(l, _)| l.iter().map(leg_index)).max().unwrap_or(0),
    }
}

fn leg_index(l: &Leg) -> u32 {
    match l {
        Leg::F(m) => m.factors().iter().map(|(g, _)| g.index).max().unwrap_or(0),
        Leg::U(_) => 0,
    }
}

fn bound(v: &Value) -> u32 {
    DEFAULT_MAX_INDEX.max(max_index(v) + 2)
}

fn coproduct(v: Value) -> Result<Value, CliError> {
    let b = bound(&v);
    Ok(Value::Tensor(match v {
        Value::Scalar(_) | Value::F(_) => FHopf::new(b).coproduct(&v.into_f().expect("F-like"))?,
        Value::U(u) => u.coproduct(),
        Value::H(h) => Bicross::new(b).coproduct(&h),
        Value::Tensor(_) => return Err(kind_error("an element of F, U or H", &v)),
    }))
}

fn antipode(v: Value) -> Result<Value, CliError> {
    let b = bound(&v);
    Ok(match v {
        Value::Scalar(_) | Value::F(_) => Value::F(FHopf::new(b).antipode(&v.into_f().expect("F-like"))?),
        Value::U(u) => Value::U(u.antipode()),
        Value::H(h) => Value::H(Bicross::new(b).antipode(&h)),
        Value::Tensor(_) => return Err(kind_error("an element of F, U or H", &v)),
    })
}

fn expect_u(v: Value) -> Result<superhopf::UEnvElement, CliError> {
    let got = v.kind();
    v.into_u().ok_or(CliError::Kind { expected: "an element of U", got })
}

fn expect_f(v: Value) -> Result<SuperPoly, CliError> {
    let got = v.kind();
    v.into_f().ok_or(CliError::Kind { expected: "an element of F", got })
}

fn expect_h(v: Value) -> Result<superhopf::bicross::HElement, CliError> {
    let got = v.kind();
    v.into_h().ok_or(CliError::Kind { expected: "an element of H", got })
}

pub fn suite_report(suite: Suite, max_index: u32, samples: usize, seed: u64) -> Report {
    match suite {
        Suite::F => {
            let mut r = verify_f_hopf(max_index, samples, seed);
            r.extend(verify_scheme(max_index));
            r
        }
        Suite::U => verify_u(samples, seed),
        Suite::Action => verify_module_algebra(max_index, samples, seed),
        Suite::Coaction => verify_comodule(3, samples, seed),
        Suite::Compat => verify_compatibility(max_index, samples, seed),
        Suite::Hopf => verify_h_hopf(max_index, samples, seed),
        Suite::Classical => classical_check(4),
        Suite::Jets => verify_jets(max_index),
        Suite::All => {
            let mut r = Report::new("all").with_seed(seed);
            for s in [
                Suite::F,
                Suite::U,
                Suite::Action,
                Suite::Coaction,
                Suite::Compat,
                Suite::Hopf,
                Suite::Classical,
                Suite::Jets,
            ] {
                r.extend(suite_report(s, max_index, samples, seed));
            }
            r
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let f = cli.format;
    let value = |v: Value| Outcome { text: render_value(&v, f), ok: true };
    let report = |r: Report| Outcome { ok: r.passed(), text: render_report(&r, f) };
    Ok(match cli.command {
        Command::Normalize { expr } => value(parse(&expr)?),
        Command::Coproduct { expr } => value(coproduct(parse(&expr)?)?),
        Command::Antipode { expr } => value(antipode(parse(&expr)?)?),
        Command::Act { u, f: x } => {
            let h = expect_u(parse(&u)?)?;
            value(Value::F(act(&h, &expect_f(parse(&x)?)?)))
        }
        Command::Coact { u } => value(Value::Tensor(coact(&expect_u(parse(&u)?)?))),
        Command::Hmul { x, y } => {
            let (x, y) = (expect_h(parse(&x)?)?, expect_h(parse(&y)?)?);
            value(Value::H(x.mul(&y)))
        }
        Command::Verify { suite, max_index, samples, seed } => report(suite_report(suite, max_index, samples, seed)),
        Command::Oracle { check, max_index } => report(verify_oracles(check.into(), max_index)),
    })
}
