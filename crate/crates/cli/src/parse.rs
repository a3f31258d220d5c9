//! Expression parser.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum    := tensor (("+" | "-") tensor)*
//! tensor := pair ("(x)" pair)*
//! pair   := prod ("#" prod)?
//! prod   := unary ("*" unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" integer)?
//! atom   := integer ("/" integer)? | generator | "(" sum ")"
//! ```
//!
//! Generators are `a2, b1, …` (function algebra) and `X … W` (enveloping
//! algebra). Degenerate indices resolve to constants: `a0 = b0 = c0 = c1 = 0`,
//! `a1 = d0 = 1`.

use num_traits::{One, Zero};
use superhopf::bicross::{h_tensor, HElement};
use superhopf::poly::{Family, Rational};
use superhopf::tensor::LegElement;
use superhopf::{GeneratorId, GradedTensor, LieGenerator, SuperPoly, UEnvElement};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{name}` at position {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("type error at position {pos}: {msg}")]
    Type { pos: usize, msg: String },
}

/// A parsed element, in the smallest algebra containing it.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Rational),
    F(SuperPoly),
    U(UEnvElement),
    H(HElement),
    Tensor(GradedTensor),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::F(_) => "function-algebra element",
            Value::U(_) => "enveloping-algebra element",
            Value::H(_) => "bicrossproduct element",
            Value::Tensor(_) => "tensor",
        }
    }

    pub fn into_f(self) -> Option<SuperPoly> {
        match self {
            Value::Scalar(c) => Some(SuperPoly::constant(c)),
            Value::F(p) => Some(p),
            _ => None,
        }
    }

    pub fn into_u(self) -> Option<UEnvElement> {
        match self {
            Value::Scalar(c) => Some(UEnvElement::scalar(c)),
            Value::U(u) => Some(u),
            _ => None,
        }
    }

    pub fn into_h(self) -> Option<HElement> {
        match self {
            Value::Scalar(c) => Some(HElement::f(SuperPoly::constant(c))),
            Value::F(p) => Some(HElement::f(p)),
            Value::U(u) => Some(HElement::u(u)),
            Value::H(h) => Some(h),
            Value::Tensor(_) => None,
        }
    }

    fn into_leg(self) -> Option<Leg> {
        match self {
            Value::Scalar(c) => Some(Leg::Plain(LegElement::F(SuperPoly::constant(c)))),
            Value::F(p) => Some(Leg::Plain(LegElement::F(p))),
            Value::U(u) => Some(Leg::Plain(LegElement::U(u))),
            Value::H(h) => Some(Leg::H(h)),
            Value::Tensor(_) => None,
        }
    }
}

enum Leg {
    Plain(LegElement),
    H(HElement),
}

fn tensor_of(legs: Vec<Leg>) -> GradedTensor {
    if legs.iter().any(|l| matches!(l, Leg::H(_))) {
        let hs: Vec<HElement> = legs
            .into_iter()
            .map(|l| match l {
                Leg::H(h) => h,
                Leg::Plain(LegElement::F(p)) => HElement::f(p),
                Leg::Plain(LegElement::U(u)) => HElement::u(u),
            })
            .collect();
        h_tensor(&hs.iter().collect::<Vec<_>>())
    } else {
        let plain: Vec<LegElement> = legs
            .into_iter()
            .map(|l| match l {
                Leg::Plain(e) => e,
                Leg::H(_) => unreachable!(),
            })
            .collect();
        GradedTensor::pure(&plain)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Hash,
    Otimes,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c.is_ascii_alphabetic() {
            let start = i;
            let digit = c.is_ascii_digit();
            while i < chars.len() && (chars[i].1.is_ascii_digit() || (!digit && chars[i].1.is_ascii_alphabetic())) {
                i += 1;
            }
            // identifiers are letters followed by digits
            if !digit {
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
            }
            let s: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            out.push((pos, if digit { Tok::Num(s) } else { Tok::Ident(s) }));
            continue;
        }
        let rest: String = chars[i..].iter().take(3).map(|(_, c)| *c).collect();
        if rest == "(x)" {
            out.push((pos, Tok::Otimes));
            i += 3;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '#' => Tok::Hash,
            '⊗' => Tok::Otimes,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ParseError::Syntax { pos, msg: format!("unexpected character `{c}`") }),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

fn type_error(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Type { pos, msg: msg.into() }
}

fn add(pos: usize, x: Value, y: Value, negate: bool) -> Result<Value, ParseError> {
    let s = if negate { -Rational::one() } else { Rational::one() };
    Ok(match (x, y) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b * s),
        (Value::Tensor(a), Value::Tensor(b)) => {
            if a.arity() != b.arity() {
                return Err(type_error(pos, format!("tensor arities differ: {} vs {}", a.arity(), b.arity())));
            }
            let mut out = a;
            out.add_scaled(&b, &s);
            Value::Tensor(out)
        }
        (x @ Value::Tensor(_), y) | (x, y @ Value::Tensor(_)) => {
            return Err(type_error(pos, format!("cannot add a {} and a {}", x.kind(), y.kind())))
        }
        (x @ (Value::Scalar(_) | Value::F(_)), y @ (Value::Scalar(_) | Value::F(_))) => {
            let (a, b) = (x.into_f().expect("F-like"), y.into_f().expect("F-like"));
            Value::F(&a + &b.scale(&s))
        }
        (x @ (Value::Scalar(_) | Value::U(_)), y @ (Value::Scalar(_) | Value::U(_))) => {
            let (a, b) = (x.into_u().expect("U-like"), y.into_u().expect("U-like"));
            Value::U(a.add(&b.scale(&s)))
        }
        (x, y) => {
            let (a, b) = (x.into_h().expect("H-like"), y.into_h().expect("H-like"));
            Value::H(a.add(&b.scale(&s)))
        }
    })
}

fn mul(pos: usize, x: Value, y: Value) -> Result<Value, ParseError> {
    Ok(match (x, y) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
        (Value::Scalar(a), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(a)) => Value::Tensor(t.scale(&a)),
        (Value::Tensor(a), Value::Tensor(b)) => {
            Value::Tensor(a.tensor_mul(&b).map_err(|e| type_error(pos, e.to_string()))?)
        }
        (x @ Value::Tensor(_), y) | (x, y @ Value::Tensor(_)) => {
            return Err(type_error(pos, format!("cannot multiply a {} and a {}", x.kind(), y.kind())))
        }
        (x @ (Value::Scalar(_) | Value::F(_)), y @ (Value::Scalar(_) | Value::F(_))) => {
            Value::F(&x.into_f().expect("F-like") * &y.into_f().expect("F-like"))
        }
        (x @ (Value::Scalar(_) | Value::U(_)), y @ (Value::Scalar(_) | Value::U(_))) => {
            Value::U(x.into_u().expect("U-like").mul(&y.into_u().expect("U-like")))
        }
        (x, y) => Value::H(x.into_h().expect("H-like").mul(&y.into_h().expect("H-like"))),
    })
}

fn neg(x: Value) -> Value {
    match x {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::F(p) => Value::F(-p),
        Value::U(u) => Value::U(u.scale(&-Rational::one())),
        Value::H(h) => Value::H(h.scale(&-Rational::one())),
        Value::Tensor(t) => Value::Tensor(t.scale(&-Rational::one())),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Value, ParseError> {
        // a leading minus negates the whole first tensor, not just its first leg
        let mut acc = if self.eat(&Tok::Minus) { neg(self.tensor()?) } else { self.tensor()? };
        loop {
            let pos = self.pos();
            let negate = if self.eat(&Tok::Plus) {
                false
            } else if self.eat(&Tok::Minus) {
                true
            } else {
                return Ok(acc);
            };
            let rhs = self.tensor()?;
            acc = add(pos, acc, rhs, negate)?;
        }
    }

    fn tensor(&mut self) -> Result<Value, ParseError> {
        let first = self.pair()?;
        if self.peek() != Some(&Tok::Otimes) {
            return Ok(first);
        }
        let mut legs = Vec::new();
        let mut next = Some(first);
        loop {
            let pos = self.pos();
            let v = next.take().expect("set before use");
            let kind = v.kind();
            legs.push(v.into_leg().ok_or_else(|| type_error(pos, format!("a {kind} cannot be a tensor leg")))?);
            if !self.eat(&Tok::Otimes) {
                break;
            }
            next = Some(self.pair()?);
        }
        Ok(Value::Tensor(tensor_of(legs)))
    }

    fn pair(&mut self) -> Result<Value, ParseError> {
        let left = self.prod()?;
        let pos = self.pos();
        if !self.eat(&Tok::Hash) {
            return Ok(left);
        }
        let right = self.prod()?;
        let lk = left.kind();
        let a = left.into_f().ok_or_else(|| type_error(pos, format!("left of `#` must be in F, got a {lk}")))?;
        let rk = right.kind();
        let h = right.into_u().ok_or_else(|| type_error(pos, format!("right of `#` must be in U, got a {rk}")))?;
        Ok(Value::H(HElement::pure(a, h)))
    }

    fn prod(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            if !self.eat(&Tok::Star) {
                return Ok(acc);
            }
            let rhs = self.unary()?;
            acc = mul(pos, acc, rhs)?;
        }
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(neg(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        let e = match self.toks.get(self.at) {
            Some((_, Tok::Num(s))) => s.parse::<u32>().map_err(|_| ParseError::Syntax { pos, msg: "exponent too large".into() })?,
            _ => return Err(ParseError::Syntax { pos, msg: "expected a non-negative integer exponent".into() }),
        };
        self.at += 1;
        let mut acc = Value::Scalar(Rational::one());
        for _ in 0..e {
            acc = mul(pos, acc, base.clone())?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<Rational, ParseError> {
        let pos = self.pos();
        match self.toks.get(self.at) {
            Some((_, Tok::Num(s))) => {
                let n: num_bigint::BigInt =
                    s.parse().map_err(|_| ParseError::Syntax { pos, msg: format!("bad integer `{s}`") })?;
                self.at += 1;
                Ok(Rational::from_integer(n))
            }
            _ => Err(ParseError::Syntax { pos, msg: "expected an integer".into() }),
        }
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(_)) => {
                let n = self.integer()?;
                if self.eat(&Tok::Slash) {
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(ParseError::Syntax { pos, msg: "zero denominator".into() });
                    }
                    return Ok(Value::Scalar(n / d));
                }
                Ok(Value::Scalar(n))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                generator(pos, &name)
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let v = self.sum()?;
                if !self.eat(&Tok::RParen) {
                    return Err(ParseError::Syntax { pos: self.pos(), msg: "expected `)`".into() });
                }
                Ok(v)
            }
            Some(t) => Err(ParseError::Syntax { pos, msg: format!("unexpected token {t:?}") }),
            None => Err(ParseError::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

fn generator(pos: usize, name: &str) -> Result<Value, ParseError> {
    if let Some(g) = LieGenerator::from_name(name) {
        return Ok(Value::U(UEnvElement::generator(g)));
    }
    let unknown = || ParseError::UnknownGenerator { pos, name: name.to_string() };
    let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
    let family = match &name[..split] {
        "a" => Family::A,
        "b" => Family::B,
        "c" => Family::C,
        "d" => Family::D,
        _ => return Err(unknown()),
    };
    let index: u32 = name[split..].parse().map_err(|_| unknown())?;
    let id = GeneratorId::new(family, index);
    Ok(match id.degenerate_value() {
        Some(v) => Value::Scalar(Rational::from_integer(v.into())),
        None => Value::F(SuperPoly::generator(id)),
    })
}

pub fn parse(text: &str) -> Result<Value, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let v = p.sum()?;
    if p.at != p.toks.len() {
        return Err(ParseError::Syntax { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(text: &str) -> String {
        match parse(text).unwrap() {
            Value::Scalar(c) => c.to_string(),
            Value::F(p) => p.to_string(),
            Value::U(u) => u.to_string(),
            Value::H(h) => h.to_string(),
            Value::Tensor(t) => t.to_string(),
        }
    }

    #[test]
    fn polynomial_with_two_terms() {
        match parse("a2*b1 + 3/2").unwrap() {
            Value::F(p) => assert_eq!(p.len(), 2),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn degenerate_generators() {
        assert_eq!(parse("a1").unwrap(), Value::Scalar(Rational::one()));
        assert_eq!(parse("c1").unwrap(), Value::Scalar(Rational::zero()));
        assert_eq!(parse("d0").unwrap(), Value::Scalar(Rational::one()));
    }

    #[test]
    fn pbw_normalization() {
        assert_eq!(show("V*U"), "-U*V - Y - Z");
        assert_eq!(show("Y*X"), "X*Y + X");
    }

    #[test]
    fn odd_anticommute() {
        assert_eq!(show("c2*b1"), "-b1*c2");
        assert_eq!(show("b1^2"), "0");
    }

    #[test]
    fn leading_minus_on_tensor() {
        assert_eq!(show("-1 (x) c2 - c2 (x) 1"), "-1 (x) c2 - c2 (x) 1");
        assert_eq!(show("-a2 # X"), "-a2 # X");
    }

    #[test]
    fn tensors_and_pairs() {
        assert_eq!(show("a2 (x) 1 + 1 (x) a2"), parse("1 (x) a2 + a2 (x) 1").map(|v| match v {
            Value::Tensor(t) => t.to_string(),
            _ => String::new(),
        }).unwrap());
        assert_eq!(show("a2 # X"), "a2 # X");
        // (1#X)(a2#1) = (X▷a2)#1 + a2#X
        assert_eq!(show("(1 # X) * (a2 # 1)"), "a2 # X - b1*c2 # 1 + 3*a3 # 1 - 2*a2^2 # 1");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("a2 + e3"), Err(ParseError::UnknownGenerator { pos: 5, name: "e3".into() }));
        assert!(matches!(parse("a2 +"), Err(ParseError::Syntax { pos: 4, .. })));
        assert!(matches!(parse("X # a2"), Err(ParseError::Type { .. })));
        assert!(matches!(parse("a2 ! 3"), Err(ParseError::Syntax { pos: 3, .. })));
    }
}
