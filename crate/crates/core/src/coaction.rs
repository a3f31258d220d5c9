//! Right coaction `∇: U → U ⊗ F`.
//!
//! Defined on generators by a table and extended to words by peeling the
//! leftmost generator `g` off `gh`:
//! `∇(gh) = (-1)^{|h^(1)|(|g_(1)^(2)| + |g_(2)|)} g_(1)^(1) h^(1) ⊗ g_(1)^(2) (g_(2) ▷ h^(2))`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::action::act_generator;
use crate::ffun::FHopf;
use crate::poly::{koszul, rat, Family, Rational, SuperPoly};
use crate::report::{CheckResult, Report};
use crate::sample::{random_u_element, rng};
use crate::tensor::{GradedTensor, Leg, LegElement, LegKind};
use crate::uenv::{bracket, monomials_up_to, pbw_normalize, LieGenerator, PbwMonomial, UEnvElement};

fn uf(u: UEnvElement, f: SuperPoly) -> GradedTensor {
    GradedTensor::pure(&[LegElement::U(u), LegElement::F(f)])
}

/// `∇(g)` for a single generator.
pub fn coact_generator(gen: LieGenerator) -> GradedTensor {
    use LieGenerator::*;
    let u = UEnvElement::generator;
    let f = SuperPoly::gen;
    let one = SuperPoly::one;
    let mut t = uf(u(gen), one());
    match gen {
        X => {
            t.add_assign(&uf(u(Y), f(Family::A, 2)).scale(&rat(2)));
            t.add_assign(&uf(u(Z), f(Family::D, 1)));
            t.add_assign(&uf(u(U), f(Family::B, 1)));
            t.add_assign(&uf(u(V), f(Family::C, 2)).scale(&rat(2)));
        }
        W => {
            t.add_assign(&uf(u(Y), f(Family::B, 1)));
            t.add_assign(&uf(u(V), f(Family::D, 1)));
        }
        _ => {}
    }
    t
}

/// The six generator coactions.
#[derive(Clone, Debug)]
pub struct CoactionTable {
    entries: Vec<(LieGenerator, GradedTensor)>,
}

impl CoactionTable {
    pub fn new() -> Self {
        CoactionTable { entries: LieGenerator::ALL.iter().map(|&g| (g, coact_generator(g))).collect() }
    }

    pub fn get(&self, gen: LieGenerator) -> &GradedTensor {
        &self.entries[gen as usize].1
    }
}

impl Default for CoactionTable {
    fn default() -> Self {
        Self::new()
    }
}

thread_local! {
    static WORDS: RefCell<HashMap<Vec<LieGenerator>, GradedTensor>> = RefCell::new(HashMap::new());
}

/// `∇` of an arbitrary (not necessarily normal-ordered) word.
pub fn coact_word(word: &[LieGenerator]) -> GradedTensor {
    let Some((&g, rest)) = word.split_first() else {
        return GradedTensor::unit(&[LegKind::U, LegKind::F]);
    };
    if rest.is_empty() {
        return coact_generator(g);
    }
    if let Some(hit) = WORDS.with(|m| m.borrow().get(word).cloned()) {
        return hit;
    }
    let tail = coact_word(rest);
    let head = coact_generator(g);
    let mut out = GradedTensor::zero(2);
    for (hl, c) in tail.terms() {
        let (Leg::U(h1), Leg::F(h2)) = (&hl[0], &hl[1]) else { unreachable!() };
        let h1e = UEnvElement::from_monomial(*h1, Rational::one());
        let h2p = SuperPoly::monomial(h2.clone(), Rational::one());
        // g_(1) ⊗ g_(2) = g ⊗ 1
        for (gl, d) in head.terms() {
            let (Leg::U(g1), Leg::F(g2)) = (&gl[0], &gl[1]) else { unreachable!() };
            let s = if koszul(h1.parity(), g2.parity()) { -(c * d) } else { c * d };
            let left = UEnvElement::from_monomial(*g1, Rational::one()).mul(&h1e);
            let right = &SuperPoly::monomial(g2.clone(), Rational::one()) * &h2p;
            out.add_scaled(&uf(left, right), &s);
        }
        // g_(1) ⊗ g_(2) = 1 ⊗ g
        let s = if koszul(h1.parity(), g.parity()) { -c.clone() } else { c.clone() };
        out.add_scaled(&uf(h1e, act_generator(g, &h2p)), &s);
    }
    WORDS.with(|m| m.borrow_mut().insert(word.to_vec(), out.clone()));
    out
}

pub fn coact_monomial(m: &PbwMonomial) -> GradedTensor {
    coact_word(&m.word())
}

/// `∇(h)`, linear in `h`.
pub fn coact(h: &UEnvElement) -> GradedTensor {
    let mut out = GradedTensor::zero(2);
    for (m, c) in h.terms() {
        out.add_scaled(&coact_monomial(m), c);
    }
    out
}

fn coact_leg(l: &Leg) -> GradedTensor {
    match l {
        Leg::U(m) => coact_monomial(m),
        Leg::F(_) => panic!("coaction applies to U legs"),
    }
}

/// `Σ h_(1)^(1) ⊗ h_(2)^(1) ⊗ (-1)^{|h_(2)^(1)||h_(1)^(2)|} h_(1)^(2) h_(2)^(2)`.
pub fn coalgebra_rhs(h: &UEnvElement) -> GradedTensor {
    let mut out = GradedTensor::zero(3);
    for (legs, c) in h.coproduct().terms() {
        let (Leg::U(x), Leg::U(y)) = (&legs[0], &legs[1]) else { unreachable!() };
        for (xl, d) in coact_monomial(x).terms() {
            for (yl, e) in coact_monomial(y).terms() {
                let (Leg::U(p), Leg::F(q)) = (&xl[0], &xl[1]) else { unreachable!() };
                let (Leg::U(r), Leg::F(s)) = (&yl[0], &yl[1]) else { unreachable!() };
                let coeff = c * d * e;
                let coeff = if koszul(r.parity(), q.parity()) { -coeff } else { coeff };
                let f = &SuperPoly::monomial(q.clone(), Rational::one()) * &SuperPoly::monomial(s.clone(), Rational::one());
                let t = GradedTensor::pure(&[
                    LegElement::U(UEnvElement::from_monomial(*p, Rational::one())),
                    LegElement::U(UEnvElement::from_monomial(*r, Rational::one())),
                    LegElement::F(f),
                ]);
                out.add_scaled(&t, &coeff);
            }
        }
    }
    out
}

fn word_string(w: &[LieGenerator]) -> String {
    w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
}

/// Comodule, comodule-coalgebra and bracket-consistency checks.
pub fn verify_comodule(max_degree: u32, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("coaction").with_seed(seed);
    let f = FHopf::new(max_degree + 2);
    let mut inputs: Vec<UEnvElement> =
        monomials_up_to(max_degree).into_iter().map(|m| UEnvElement::from_monomial(m, Rational::one())).collect();
    let mut r = rng(seed);
    for _ in 0..samples {
        inputs.push(random_u_element(&mut r, max_degree));
    }

    let mut unit = CheckResult::new("∇(1) = 1 ⊗ 1");
    unit.compare("1", &coact(&UEnvElement::one()), &GradedTensor::unit(&[LegKind::U, LegKind::F]));
    report.push(unit);

    let mut coassoc = CheckResult::new("(∇⊗id)∇ = (id⊗Δ)∇");
    let mut counit = CheckResult::new("(id⊗ε)∇ = id");
    let mut coalg = CheckResult::new("comodule-coalgebra condition");
    let mut eps = CheckResult::new("ε(h^(1)) h^(2) = ε(h)");
    for h in &inputs {
        let n = coact(h);
        let lhs = n.expand_leg(0, coact_leg);
        let rhs = n.expand_leg(1, |l| match l {
            Leg::F(m) => f.coproduct_monomial(m).expect("within bound"),
            Leg::U(_) => unreachable!(),
        });
        coassoc.compare(h, &lhs, &rhs);
        let mut back = UEnvElement::zero();
        let mut scalar = SuperPoly::zero();
        for (legs, c) in n.terms() {
            let (Leg::U(u), Leg::F(p)) = (&legs[0], &legs[1]) else { unreachable!() };
            if p.is_one() {
                back.add_term(*u, c.clone());
            }
            scalar += &SuperPoly::monomial(p.clone(), c * UEnvElement::from_monomial(*u, Rational::one()).counit());
        }
        counit.compare(h, &back, h);
        eps.compare(h, &scalar, &SuperPoly::constant(h.counit()));
        let lhs = n.expand_leg(0, |l| match l {
            Leg::U(m) => UEnvElement::from_monomial(*m, Rational::one()).coproduct(),
            Leg::F(_) => unreachable!(),
        });
        coalg.compare(h, &lhs, &coalgebra_rhs(h));
    }
    report.push(coassoc);
    report.push(counit);
    report.push(eps);
    report.push(coalg);

    let mut brackets = CheckResult::new("∇ respects all 21 brackets");
    for (i, &p) in LieGenerator::ALL.iter().enumerate() {
        for &q in &LieGenerator::ALL[i..] {
            let s = if koszul(p.parity(), q.parity()) { rat(-1) } else { rat(1) };
            let mut rhs = coact_word(&[p, q]);
            rhs.add_scaled(&coact_word(&[q, p]), &-s);
            brackets.compare(format!("∇([{p},{q}])"), &coact(&UEnvElement::linear(&bracket(p, q))), &rhs);
        }
    }
    report.push(brackets);

    let mut vw = CheckResult::new("∇(VW) + ∇(WV) = 0");
    let mut sum = coact_word(&[LieGenerator::V, LieGenerator::W]);
    sum.add_assign(&coact_word(&[LieGenerator::W, LieGenerator::V]));
    vw.compare("VW + WV", &sum, &GradedTensor::zero(2));
    report.push(vw);

    let mut well_defined = CheckResult::new("∇ of a word equals ∇ of its normal form");
    for _ in 0..samples {
        let len = 2 + (rand::Rng::gen_range(&mut r, 0..3usize));
        let w: Vec<LieGenerator> = (0..len).map(|_| LieGenerator::ALL[rand::Rng::gen_range(&mut r, 0..6)]).collect();
        well_defined.compare(word_string(&w), &coact_word(&w), &coact(&pbw_normalize(&w)));
    }
    report.push(well_defined);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use LieGenerator::*;

    #[test]
    fn generator_table() {
        assert_eq!(coact_generator(Y), uf(UEnvElement::generator(Y), SuperPoly::one()));
        assert_eq!(coact_generator(X).len(), 5);
        assert_eq!(coact_generator(W).to_string(), "Y (x) b1 + V (x) d1 + W (x) 1");
    }

    #[test]
    fn vw_example() {
        // VW⊗1 + VY⊗b1 - V⊗b1, with VY = YV + V in normal form
        let u = UEnvElement::generator;
        let mut expected = uf(u(V).mul(&u(W)), SuperPoly::one());
        expected.add_assign(&uf(u(V).mul(&u(Y)), SuperPoly::gen(Family::B, 1)));
        expected.add_assign(&uf(u(V), SuperPoly::gen(Family::B, 1)).scale(&rat(-1)));
        assert_eq!(coact(&u(V).mul(&u(W))), expected);
        let mut sum = coact_word(&[V, W]);
        sum.add_assign(&coact_word(&[W, V]));
        assert!(sum.is_zero());
    }

    #[test]
    fn verify_passes() {
        let r = verify_comodule(3, 30, 42);
        assert!(r.passed(), "{r}");
    }
}
