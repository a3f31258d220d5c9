//! Text, JSON and LaTeX rendering of elements and reports.

use std::fmt::Write;

use clap::ValueEnum;
use num_traits::{One, Signed};
use serde_json::{json, Value as Json};
use superhopf::bicross::HElement;
use superhopf::poly::Rational;
use superhopf::report::Report;
use superhopf::{GradedTensor, Leg, LieGenerator, PbwMonomial, SuperMonomial, SuperPoly, UEnvElement};

use crate::parse::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn coeff_json(c: &Rational) -> Json {
    Json::String(format!("{}/{}", c.numer(), c.denom()))
}

fn f_leg_json(m: &SuperMonomial) -> Json {
    let even: Vec<Json> =
        m.even_part().iter().map(|(g, e)| json!([g.family.name(), g.index, e])).collect();
    let odd: Vec<Json> = m.odd_part().iter().map(|g| json!([g.family.name(), g.index])).collect();
    json!({ "even": even, "odd": odd })
}

fn u_leg_json(m: &PbwMonomial) -> Json {
    let pbw: Vec<Json> = LieGenerator::ALL
        .iter()
        .filter(|g| m.exponent(**g) > 0)
        .map(|g| json!([g.name(), m.exponent(*g)]))
        .collect();
    json!({ "pbw": pbw })
}

fn leg_json(l: &Leg) -> Json {
    match l {
        Leg::F(m) => f_leg_json(m),
        Leg::U(m) => u_leg_json(m),
    }
}

fn with_coeff(c: &Rational, body: Json) -> Json {
    let mut obj = body.as_object().cloned().unwrap_or_default();
    obj.insert("coeff".into(), coeff_json(c));
    Json::Object(obj)
}

pub fn poly_json(p: &SuperPoly) -> Json {
    let terms: Vec<Json> = p.sorted_terms().into_iter().map(|(m, c)| with_coeff(c, f_leg_json(m))).collect();
    json!({ "algebra": "F", "terms": terms })
}

pub fn u_json(u: &UEnvElement) -> Json {
    let terms: Vec<Json> = u.sorted_terms().into_iter().map(|(m, c)| with_coeff(c, u_leg_json(m))).collect();
    json!({ "algebra": "U", "terms": terms })
}

pub fn tensor_json(t: &GradedTensor) -> Json {
    let terms: Vec<Json> = t
        .sorted_terms()
        .into_iter()
        .map(|(legs, c)| json!({ "coeff": coeff_json(c), "legs": legs.iter().map(leg_json).collect::<Vec<_>>() }))
        .collect();
    json!({ "algebra": "tensor", "arity": t.arity(), "terms": terms })
}

pub fn h_json(h: &HElement) -> Json {
    let terms: Vec<Json> = h
        .as_tensor()
        .sorted_terms()
        .into_iter()
        .map(|(legs, c)| json!({ "coeff": coeff_json(c), "f": leg_json(&legs[0]), "u": leg_json(&legs[1]) }))
        .collect();
    json!({ "algebra": "H", "terms": terms })
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Scalar(c) => json!({ "algebra": "scalar", "coeff": coeff_json(c) }),
        Value::F(p) => poly_json(p),
        Value::U(u) => u_json(u),
        Value::H(h) => h_json(h),
        Value::Tensor(t) => tensor_json(t),
    }
}

fn latex_f(m: &SuperMonomial) -> String {
    let mut out = Vec::new();
    for (g, e) in m.factors() {
        let base = format!("{}_{{{}}}", g.family.name(), g.index);
        out.push(if e == 1 { base } else { format!("{base}^{{{e}}}") });
    }
    out.join(" ")
}

fn latex_u(m: &PbwMonomial) -> String {
    let mut out = Vec::new();
    for g in LieGenerator::ALL {
        match m.exponent(g) {
            0 => {}
            1 => out.push(g.name().to_string()),
            e => out.push(format!("{}^{{{e}}}", g.name())),
        }
    }
    out.join(" ")
}

fn latex_leg(l: &Leg) -> String {
    match l {
        Leg::F(m) if m.is_one() => "1".into(),
        Leg::U(m) if m.is_one() => "1".into(),
        Leg::F(m) => latex_f(m),
        Leg::U(m) => latex_u(m),
    }
}

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Join `(coefficient, body)` terms; `None` bodies are scalars.
fn latex_sum(terms: Vec<(Rational, Option<String>)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        match body {
            None => out.push_str(&latex_coeff(&a)),
            Some(b) if a.is_one() => out.push_str(&b),
            Some(b) => {
                let _ = write!(out, "{} {b}", latex_coeff(&a));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn unit_body(s: String) -> Option<String> {
    if s == "1" {
        None
    } else {
        Some(s)
    }
}

pub fn value_latex(v: &Value) -> String {
    match v {
        Value::Scalar(c) => latex_sum(vec![(c.clone(), None)]),
        Value::F(p) => latex_sum(
            p.sorted_terms().into_iter().map(|(m, c)| (c.clone(), unit_body(latex_leg(&Leg::F(m.clone()))))).collect(),
        ),
        Value::U(u) => {
            latex_sum(u.sorted_terms().into_iter().map(|(m, c)| (c.clone(), unit_body(latex_leg(&Leg::U(*m))))).collect())
        }
        Value::H(h) => latex_sum(
            h.as_tensor()
                .sorted_terms()
                .into_iter()
                .map(|(legs, c)| (c.clone(), Some(format!("{} \\# {}", latex_leg(&legs[0]), latex_leg(&legs[1])))))
                .collect(),
        ),
        Value::Tensor(t) => latex_sum(
            t.sorted_terms()
                .into_iter()
                .map(|(legs, c)| (c.clone(), Some(legs.iter().map(latex_leg).collect::<Vec<_>>().join(" \\ot "))))
                .collect(),
        ),
    }
}

pub fn value_text(v: &Value) -> String {
    match v {
        Value::Scalar(c) => SuperPoly::constant(c.clone()).to_string(),
        Value::F(p) => p.to_string(),
        Value::U(u) => u.to_string(),
        Value::H(h) => h.to_string(),
        Value::Tensor(t) => t.to_string(),
    }
}

pub fn render_value(v: &Value, format: Format) -> String {
    match format {
        Format::Text => value_text(v),
        Format::Json => serde_json::to_string_pretty(&value_json(v)).expect("plain JSON values"),
        Format::Latex => value_latex(v),
    }
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '#' | '_' | '&' | '%' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            _ => out.push(c),
        }
    }
    out
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => r.to_string().trim_end().to_string(),
        Format::Json => serde_json::to_string_pretty(&json!({ "passed": r.passed(), "report": r })).expect("serializable"),
        Format::Latex => {
            let mut out = String::new();
            let _ = writeln!(out, "\\paragraph{{Suite {}: {}}}", latex_escape(&r.suite), if r.passed() { "pass" } else { "fail" });
            out.push_str("\\begin{itemize}\n");
            for c in &r.checks {
                let _ = writeln!(
                    out,
                    "  \\item[{}] {} ({} cases)",
                    if c.passed { "ok" } else { "FAIL" },
                    latex_escape(&c.name),
                    c.cases
                );
                if let Some(note) = &c.note {
                    let _ = writeln!(out, "    \\\\ \\emph{{{}}}", latex_escape(note));
                }
                if let Some(ce) = &c.counterexample {
                    let _ = writeln!(out, "    \\\\ input: \\verb|{}|, lhs: \\verb|{}|, rhs: \\verb|{}|", ce.input, ce.lhs, ce.rhs);
                }
            }
            out.push_str("\\end{itemize}");
            out
        }
    }
}
