//! Antipode of the function algebra rebuilt from the action of `X`.
//!
//! The identity `S(g ▷ a) = ± (g^(1) ▷ S(a)) S(g^(2))`, with `∇(g) = Σ g^(1) ⊗ g^(2)`,
//! is tested for every Koszul sign built from the parities of `g^(1)`, `g^(2)`
//! and `a`. Starting from `S = -id` on `a_2, b_1, c_2, d_1`, the relation
//! `X ▷ e_n = (n+1) e_{n+1} + (lower terms)` then determines `S(e_{n+1})`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::action::{act, act_on_generator};
use crate::coaction::coact_generator;
use crate::ffun::{generators, FHopf};
use crate::poly::{rat, Family, GeneratorId, Parity, Rational, SuperPoly};
use crate::report::{CheckResult, Report};
use crate::tensor::Leg;
use crate::uenv::{LieGenerator, UEnvElement};

/// Sign `(-1)^{x|g1||g2| + y|g1||a| + z|g2||a|}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SignRule {
    pub g1_g2: bool,
    pub g1_a: bool,
    pub g2_a: bool,
}

impl SignRule {
    pub const NONE: SignRule = SignRule { g1_g2: false, g1_a: false, g2_a: false };

    pub fn all() -> Vec<SignRule> {
        (0..8u8).map(|b| SignRule { g1_g2: b & 1 != 0, g1_a: b & 2 != 0, g2_a: b & 4 != 0 }).collect()
    }

    pub fn negates(self, g1: Parity, g2: Parity, a: Parity) -> bool {
        let (g1, g2, a) = (g1.is_odd(), g2.is_odd(), a.is_odd());
        (self.g1_g2 && g1 && g2) ^ (self.g1_a && g1 && a) ^ (self.g2_a && g2 && a)
    }
}

impl fmt::Display for SignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.g1_g2 {
            parts.push("|g1||g2|");
        }
        if self.g1_a {
            parts.push("|g1||a|");
        }
        if self.g2_a {
            parts.push("|g2||a|");
        }
        if parts.is_empty() {
            write!(f, "no sign")
        } else {
            write!(f, "(-1)^({})", parts.join(" + "))
        }
    }
}

/// `Σ ± (g^(1) ▷ s_a) · S(g^(2))` where `s_a` stands for `S(a)`.
pub fn twisted_rhs(rule: SignRule, f: &FHopf, g: LieGenerator, s_a: &SuperPoly, a_parity: Parity) -> SuperPoly {
    let mut out = SuperPoly::zero();
    for (legs, c) in coact_generator(g).terms() {
        let (Leg::U(g1), Leg::F(g2)) = (&legs[0], &legs[1]) else { unreachable!() };
        let g2p = SuperPoly::monomial(g2.clone(), Rational::one());
        let moved = act(&UEnvElement::from_monomial(*g1, Rational::one()), s_a);
        let term = &moved * &f.antipode(&g2p).expect("within bound");
        let c = if rule.negates(g1.parity(), g2.parity(), a_parity) { -c.clone() } else { c.clone() };
        out += &term.scale(&c);
    }
    out
}

fn test_inputs(max_index: u32) -> Vec<SuperPoly> {
    let mut out: Vec<SuperPoly> = generators(max_index).into_iter().map(SuperPoly::generator).collect();
    let (a2, b1, c2, d1) =
        (SuperPoly::gen(Family::A, 2), SuperPoly::gen(Family::B, 1), SuperPoly::gen(Family::C, 2), SuperPoly::gen(Family::D, 1));
    out.push(&a2 * &b1);
    out.push(&b1 * &c2);
    out.push(&c2 * &d1);
    out.push(&a2 * &d1);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SignScan {
    pub rule: SignRule,
    pub result: CheckResult,
}

/// Test every sign rule on all six generators acting on generators and a few
/// products of index ≤ `max_index`.
pub fn scan_sign_rules(max_index: u32) -> Vec<SignScan> {
    let f = FHopf::new(max_index + 1);
    let inputs = test_inputs(max_index);
    SignRule::all()
        .into_iter()
        .map(|rule| {
            let mut result = CheckResult::new(format!("S(g▷a) = Σ ± (g1▷S(a)) S(g2), sign {rule}"));
            for g in LieGenerator::ALL {
                for a in &inputs {
                    let parity = a.parity().unwrap_or(Parity::Even);
                    let lhs = f.antipode(&act(&UEnvElement::generator(g), a)).expect("within bound");
                    let s_a = f.antipode(a).expect("within bound");
                    let rhs = twisted_rhs(rule, &f, g, &s_a, parity);
                    result.compare(format!("g={g}, a={a}"), &lhs, &rhs);
                }
            }
            SignScan { rule, result }
        })
        .collect()
}

/// Rules that pass [`scan_sign_rules`].
pub fn valid_sign_rules(max_index: u32) -> Vec<SignRule> {
    scan_sign_rules(max_index).into_iter().filter(|s| s.result.passed).map(|s| s.rule).collect()
}

/// `S` on generators up to `max_index`, built from the base values and the
/// action of `X` under the given sign rule.
pub fn inductive_antipode(rule: SignRule, max_index: u32) -> BTreeMap<GeneratorId, SuperPoly> {
    let f = FHopf::new(max_index + 1);
    let mut table: BTreeMap<GeneratorId, SuperPoly> = BTreeMap::new();
    for (fam, n) in [(Family::A, 2), (Family::B, 1), (Family::C, 2), (Family::D, 1)] {
        table.insert(GeneratorId::new(fam, n), -SuperPoly::gen(fam, n));
    }
    for n in 1..max_index {
        for fam in Family::FUNCTION_FAMILIES {
            let src = GeneratorId::new(fam, n);
            let dst = GeneratorId::new(fam, n + 1);
            if table.contains_key(&dst) || !table.contains_key(&src) {
                continue;
            }
            let lead = rat(n as i64 + 1);
            let rest = &act_on_generator(LieGenerator::X, src) - &SuperPoly::generator(dst).scale(&lead);
            let s_x = twisted_rhs(rule, &f, LieGenerator::X, &table[&src], src.parity());
            let s_rest = rest.substitute(&mut |id| table.get(&id).cloned().expect("lower terms already solved"));
            table.insert(dst, (&s_x - &s_rest).scale(&(Rational::one() / lead)));
        }
    }
    table
}

/// Scan the sign rules and compare the inductive antipode with the one
/// solved from the coproduct.
pub fn verify_scheme(max_index: u32) -> Report {
    let mut report = Report::new("scheme");
    let scans = scan_sign_rules(max_index.saturating_sub(1).max(2));
    let valid: Vec<SignRule> = scans.iter().filter(|s| s.result.passed).map(|s| s.rule).collect();
    let mut found = CheckResult::new("some sign rule satisfies S(g▷a) = Σ ± (g1▷S(a)) S(g2)");
    found.assert("scan", !valid.is_empty(), || "no rule passes".to_string());
    let names: Vec<String> = valid.iter().map(|r| r.to_string()).collect();
    report.push(found.with_note(format!("valid: {}", names.join(", "))));
    for s in scans {
        if !s.result.passed {
            let mut rejected = CheckResult::new(format!("sign {} rejected", s.rule));
            rejected.assert("scan", true, String::new);
            report.push(rejected.with_note(s.result.counterexample.map(|c| c.input).unwrap_or_default()));
        }
    }
    let f = FHopf::new(max_index);
    for rule in valid {
        let mut agree = CheckResult::new(format!("inductive S agrees with solved S, sign {rule}"));
        for (id, s) in inductive_antipode(rule, max_index) {
            if id.index <= max_index {
                agree.compare(id.to_string(), &s, &f.antipode(&SuperPoly::generator(id)).expect("within bound"));
            }
        }
        report.push(agree);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_rule_display() {
        assert_eq!(SignRule::NONE.to_string(), "no sign");
        assert_eq!(SignRule { g1_g2: false, g1_a: true, g2_a: false }.to_string(), "(-1)^(|g1||a|)");
        assert_eq!(SignRule::all().len(), 8);
    }

    #[test]
    fn only_the_g2_a_sign_survives() {
        assert_eq!(valid_sign_rules(4), vec![SignRule { g1_g2: false, g1_a: false, g2_a: true }]);
    }

    #[test]
    fn scheme_reproduces_antipode() {
        let r = verify_scheme(6);
        assert!(r.passed(), "{r}");
    }
}
