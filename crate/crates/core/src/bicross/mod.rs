//! The bicrossproduct `F ⋈ U`: elements `a # h` with
//!
//! - `(a#h)(b#g) = (-1)^{|h_(2)||b|} a(h_(1)▷b) # h_(2)g`
//! - `Δ(a#h) = (-1)^{|h_(1)^(1)||a_(2)|} a_(1)#h_(1)^(1) ⊗ a_(2)h_(1)^(2)#h_(2)`
//! - `ε(a#h) = ε(a)ε(h)`
//! - `S(a#h) = (-1)^{|h^(1)||a|} (1#S(h^(1)))(S(a h^(2))#1)`

pub mod classical;
pub mod scheme;

use std::fmt;

use num_traits::One;

use crate::action::act;
use crate::coaction::{coact, coact_monomial};
use crate::ffun::{generators, FHopf};
use crate::poly::{fmt_signed_terms, koszul, rat, Parity, Rational, SuperMonomial, SuperPoly};
use crate::report::{CheckResult, Checkable, Report};
use crate::sample::{random_f_element, random_u_element, rng};
use crate::tensor::{GradedTensor, Leg, LegElement, LegKind};
use crate::uenv::{LieGenerator, PbwMonomial, UEnvElement};

fn fpoly(m: &SuperMonomial) -> SuperPoly {
    SuperPoly::monomial(m.clone(), Rational::one())
}

fn umono(m: &PbwMonomial) -> UEnvElement {
    UEnvElement::from_monomial(*m, Rational::one())
}

/// Element of the bicrossproduct: a sum of `F-monomial # PBW-monomial`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HElement(GradedTensor);

impl HElement {
    pub fn zero() -> Self {
        HElement(GradedTensor::zero(2))
    }

    pub fn one() -> Self {
        HElement(GradedTensor::unit(&[LegKind::F, LegKind::U]))
    }

    pub fn pure(a: SuperPoly, h: UEnvElement) -> Self {
        HElement(GradedTensor::pure(&[LegElement::F(a), LegElement::U(h)]))
    }

    /// `a # 1`
    pub fn f(a: SuperPoly) -> Self {
        HElement::pure(a, UEnvElement::one())
    }

    /// `1 # h`
    pub fn u(h: UEnvElement) -> Self {
        HElement::pure(SuperPoly::one(), h)
    }

    pub fn lie(g: LieGenerator) -> Self {
        HElement::u(UEnvElement::generator(g))
    }

    pub fn from_tensor(t: GradedTensor) -> Self {
        assert_eq!(t.arity(), 2);
        HElement(t)
    }

    pub fn as_tensor(&self) -> &GradedTensor {
        &self.0
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &PbwMonomial, &Rational)> {
        self.0.terms().map(|(legs, c)| match (&legs[0], &legs[1]) {
            (Leg::F(a), Leg::U(h)) => (a, h, c),
            _ => panic!("malformed bicrossproduct term"),
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &HElement) -> HElement {
        let mut t = self.0.clone();
        t.add_assign(&other.0);
        HElement(t)
    }

    pub fn add_scaled(&mut self, other: &HElement, s: &Rational) {
        self.0.add_scaled(&other.0, s);
    }

    pub fn sub(&self, other: &HElement) -> HElement {
        HElement(self.0.sub(&other.0))
    }

    pub fn scale(&self, s: &Rational) -> HElement {
        HElement(self.0.scale(s))
    }

    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms().map(|(a, h, _)| a.parity() + h.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Bicrossproduct multiplication.
    pub fn mul(&self, other: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (a, h, c1) in self.terms() {
            let dh = umono(h).coproduct();
            for (b, g, c2) in other.terms() {
                let bp = fpoly(b);
                for (legs, c3) in dh.terms() {
                    let (Leg::U(h1), Leg::U(h2)) = (&legs[0], &legs[1]) else { unreachable!() };
                    let coeff = c1 * c2 * c3;
                    let coeff = if koszul(h2.parity(), b.parity()) { -coeff } else { coeff };
                    let left = &fpoly(a) * &act(&umono(h1), &bp);
                    if left.is_zero() {
                        continue;
                    }
                    let right = UEnvElement::mul_monomials(h2, g);
                    out.add_scaled(&HElement::pure(left, right), &coeff);
                }
            }
        }
        out
    }

    /// `xy - (-1)^{|x||y|} yx`.
    pub fn commutator(&self, other: &HElement) -> HElement {
        let p = self.parity().unwrap_or(Parity::Even);
        let q = other.parity().unwrap_or(Parity::Even);
        let yx = other.mul(self);
        let s = if koszul(p, q) { rat(1) } else { rat(-1) };
        let mut out = self.mul(other);
        out.add_scaled(&yx, &s);
        out
    }

    pub fn counit(&self) -> Rational {
        let mut out = Rational::from_integer(0.into());
        for (a, h, c) in self.terms() {
            if a.is_one() && h.is_one() {
                out += c;
            }
        }
        out
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Body<'a>(&'a SuperMonomial, &'a PbwMonomial);
        impl fmt::Display for Body<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{} # {}", self.0, self.1)
            }
        }
        let terms = self.0.sorted_terms().into_iter().map(|(legs, c)| match (&legs[0], &legs[1]) {
            (Leg::F(a), Leg::U(h)) => (c.clone(), Body(a, h), false),
            _ => unreachable!(),
        });
        fmt_signed_terms(f, terms)
    }
}

impl Checkable for HElement {
    fn difference(&self, other: &Self) -> String {
        self.sub(other).to_string()
    }
}

/// Split an arity-4 tensor `F,U,F,U` into its two H factors per term.
pub fn h_pairs(t: &GradedTensor) -> Vec<(HElement, HElement, Rational)> {
    t.terms()
        .map(|(legs, c)| {
            let l = HElement(GradedTensor::from_terms(2, [(legs[..2].to_vec(), Rational::one())]));
            let r = HElement(GradedTensor::from_terms(2, [(legs[2..].to_vec(), Rational::one())]));
            (l, r, c.clone())
        })
        .collect()
}

/// Join H elements into a tensor of arity `2k`.
pub fn h_tensor(parts: &[&HElement]) -> GradedTensor {
    let mut acc = GradedTensor::from_terms(0, [(vec![], Rational::one())]);
    for p in parts {
        let mut next = GradedTensor::zero(acc.arity() + 2);
        for (prefix, c) in acc.terms() {
            for (legs, d) in p.0.terms() {
                let mut l = prefix.clone();
                l.extend(legs.iter().cloned());
                next.add_term(l, c * d);
            }
        }
        acc = next;
    }
    acc
}

fn h_parity_of(legs: &[Leg]) -> Parity {
    legs.iter().fold(Parity::Even, |p, l| p + l.parity())
}

/// Product in `H ⊗ H`: `(p1⊗p2)(q1⊗q2) = (-1)^{|p2||q1|} p1q1 ⊗ p2q2`.
pub fn hh_mul(x: &GradedTensor, y: &GradedTensor) -> GradedTensor {
    let mut out = GradedTensor::zero(4);
    for (xl, c) in x.terms() {
        for (yl, d) in y.terms() {
            let s = if koszul(h_parity_of(&xl[2..]), h_parity_of(&yl[..2])) { -(c * d) } else { c * d };
            let h = |l: &[Leg]| HElement(GradedTensor::from_terms(2, [(l.to_vec(), Rational::one())]));
            let first = h(&xl[..2]).mul(&h(&yl[..2]));
            let second = h(&xl[2..]).mul(&h(&yl[2..]));
            out.add_scaled(&h_tensor(&[&first, &second]), &s);
        }
    }
    out
}

/// The bicrossproduct Hopf structure, backed by precomputed antipode tables.
#[derive(Clone, Debug)]
pub struct Bicross {
    f: FHopf,
}

impl Bicross {
    pub fn new(max_index: u32) -> Self {
        Bicross { f: FHopf::new(max_index) }
    }

    pub fn f_hopf(&self) -> &FHopf {
        &self.f
    }

    pub fn coproduct(&self, x: &HElement) -> GradedTensor {
        let mut out = GradedTensor::zero(4);
        for (a, h, c) in x.terms() {
            let da = self.f.coproduct_monomial(a).expect("within bound");
            let dh = umono(h).coproduct();
            for (al, c1) in da.terms() {
                let (Leg::F(a1), Leg::F(a2)) = (&al[0], &al[1]) else { unreachable!() };
                for (hl, c2) in dh.terms() {
                    let (Leg::U(h1), Leg::U(h2)) = (&hl[0], &hl[1]) else { unreachable!() };
                    for (nl, c3) in coact_monomial(h1).terms() {
                        let (Leg::U(p), Leg::F(q)) = (&nl[0], &nl[1]) else { unreachable!() };
                        let coeff = c * c1 * c2 * c3;
                        let coeff = if koszul(p.parity(), a2.parity()) { -coeff } else { coeff };
                        let t = GradedTensor::pure(&[
                            LegElement::F(fpoly(a1)),
                            LegElement::U(umono(p)),
                            LegElement::F(&fpoly(a2) * &fpoly(q)),
                            LegElement::U(umono(h2)),
                        ]);
                        out.add_scaled(&t, &coeff);
                    }
                }
            }
        }
        out
    }

    pub fn counit(&self, x: &HElement) -> Rational {
        x.counit()
    }

    pub fn antipode(&self, x: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (a, h, c) in x.terms() {
            for (nl, d) in coact_monomial(h).terms() {
                let (Leg::U(p), Leg::F(q)) = (&nl[0], &nl[1]) else { unreachable!() };
                let coeff = c * d;
                let coeff = if koszul(p.parity(), a.parity()) { -coeff } else { coeff };
                let su = HElement::u(umono(p).antipode());
                let sf = HElement::f(self.f.antipode(&(&fpoly(a) * &fpoly(q))).expect("within bound"));
                out.add_scaled(&su.mul(&sf), &coeff);
            }
        }
        out
    }

    /// Apply Δ to H-factor `k` (legs `2k, 2k+1`) of an even-arity tensor.
    pub fn coproduct_on_factor(&self, t: &GradedTensor, k: usize) -> GradedTensor {
        let mut out = GradedTensor::zero(t.arity() + 2);
        for (legs, c) in t.terms() {
            let x = HElement(GradedTensor::from_terms(2, [(legs[2 * k..2 * k + 2].to_vec(), Rational::one())]));
            for (mid, d) in self.coproduct(&x).terms() {
                let mut l = legs[..2 * k].to_vec();
                l.extend(mid.iter().cloned());
                l.extend_from_slice(&legs[2 * k + 2..]);
                out.add_term(l, c * d);
            }
        }
        out
    }

    /// `Σ f(x') g(x'')` over an arity-4 tensor.
    pub fn contract(
        &self,
        t: &GradedTensor,
        left: impl Fn(&HElement) -> HElement,
        right: impl Fn(&HElement) -> HElement,
    ) -> HElement {
        let mut out = HElement::zero();
        for (l, r, c) in h_pairs(t) {
            out.add_scaled(&left(&l).mul(&right(&r)), &c);
        }
        out
    }
}

/// Condition: `Δ(h▷a) = (-1)^{|a_(1)|(|h_(1)^(2)|+|h_(2)|)} h_(1)^(1)▷a_(1) ⊗ h_(1)^(2)(h_(2)▷a_(2))`.
pub fn coproduct_of_action_rhs(f: &FHopf, h: &UEnvElement, a: &SuperPoly) -> GradedTensor {
    let mut out = GradedTensor::zero(2);
    let da = f.coproduct(a).expect("within bound");
    for (hl, c1) in h.coproduct().terms() {
        let (Leg::U(h1), Leg::U(h2)) = (&hl[0], &hl[1]) else { unreachable!() };
        for (nl, c2) in coact_monomial(h1).terms() {
            let (Leg::U(p), Leg::F(q)) = (&nl[0], &nl[1]) else { unreachable!() };
            for (al, c3) in da.terms() {
                let (Leg::F(a1), Leg::F(a2)) = (&al[0], &al[1]) else { unreachable!() };
                let coeff = c1 * c2 * c3;
                let coeff = if koszul(a1.parity(), q.parity() + h2.parity()) { -coeff } else { coeff };
                let left = act(&umono(p), &fpoly(a1));
                let right = &fpoly(q) * &act(&umono(h2), &fpoly(a2));
                out.add_scaled(&GradedTensor::pure(&[LegElement::F(left), LegElement::F(right)]), &coeff);
            }
        }
    }
    out
}

/// Condition: `∇(gh) = (-1)^{|h^(1)|(|g_(1)^(2)|+|g_(2)|)} g_(1)^(1)h^(1) ⊗ g_(1)^(2)(g_(2)▷h^(2))`.
pub fn coaction_of_product_rhs(g: &UEnvElement, h: &UEnvElement) -> GradedTensor {
    let mut out = GradedTensor::zero(2);
    let nh = coact(h);
    for (gl, c1) in g.coproduct().terms() {
        let (Leg::U(g1), Leg::U(g2)) = (&gl[0], &gl[1]) else { unreachable!() };
        for (nl, c2) in coact_monomial(g1).terms() {
            let (Leg::U(p), Leg::F(q)) = (&nl[0], &nl[1]) else { unreachable!() };
            for (hl, c3) in nh.terms() {
                let (Leg::U(h1), Leg::F(h2)) = (&hl[0], &hl[1]) else { unreachable!() };
                let coeff = c1 * c2 * c3;
                let coeff = if koszul(h1.parity(), q.parity() + g2.parity()) { -coeff } else { coeff };
                let left = UEnvElement::mul_monomials(p, h1);
                let right = &fpoly(q) * &act(&umono(g2), &fpoly(h2));
                out.add_scaled(&GradedTensor::pure(&[LegElement::U(left), LegElement::F(right)]), &coeff);
            }
        }
    }
    out
}

/// Both sides of the mixed condition
/// `(-1)^{|h_(1)||h_(2)^(1)| + |a||h_(2)^(2)|} h_(2)^(1) ⊗ (h_(1)▷a)h_(2)^(2) = h_(1)^(1) ⊗ h_(1)^(2)(h_(2)▷a)`.
pub fn mixed_condition(h: &UEnvElement, a: &SuperPoly) -> (GradedTensor, GradedTensor) {
    let pa = a.parity().expect("homogeneous");
    let mut lhs = GradedTensor::zero(2);
    let mut rhs = GradedTensor::zero(2);
    for (hl, c1) in h.coproduct().terms() {
        let (Leg::U(h1), Leg::U(h2)) = (&hl[0], &hl[1]) else { unreachable!() };
        let h1a = act(&umono(h1), a);
        for (nl, c2) in coact_monomial(h2).terms() {
            let (Leg::U(r), Leg::F(s)) = (&nl[0], &nl[1]) else { unreachable!() };
            let negate = koszul(h1.parity(), r.parity()) ^ koszul(pa, s.parity());
            let coeff = if negate { -(c1 * c2) } else { c1 * c2 };
            let t = GradedTensor::pure(&[LegElement::U(umono(r)), LegElement::F(&h1a * &fpoly(s))]);
            lhs.add_scaled(&t, &coeff);
        }
        let h2a = act(&umono(h2), a);
        for (nl, c2) in coact_monomial(h1).terms() {
            let (Leg::U(p), Leg::F(q)) = (&nl[0], &nl[1]) else { unreachable!() };
            let t = GradedTensor::pure(&[LegElement::U(umono(p)), LegElement::F(&fpoly(q) * &h2a)]);
            rhs.add_scaled(&t, &(c1 * c2));
        }
    }
    (lhs, rhs)
}

fn u_inputs(samples: usize, r: &mut impl rand::Rng) -> Vec<UEnvElement> {
    let mut hs: Vec<UEnvElement> = LieGenerator::ALL.iter().map(|&g| UEnvElement::generator(g)).collect();
    for _ in 0..samples {
        hs.push(random_u_element(r, 2));
    }
    hs
}

/// The five compatibility conditions between action and coaction.
pub fn verify_compatibility(max_index: u32, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("compat").with_seed(seed);
    let f = FHopf::new(max_index + 3);
    let mut r = rng(seed);
    let us = u_inputs(samples.min(20), &mut r);
    let gen_fs: Vec<SuperPoly> = generators(max_index).into_iter().map(SuperPoly::generator).collect();

    // (generator, generator) pairs exhaustively, then random homogeneous pairs
    let mut pairs: Vec<(UEnvElement, SuperPoly)> = Vec::new();
    for g in &us[..6] {
        for a in &gen_fs {
            pairs.push((g.clone(), a.clone()));
        }
    }
    for _ in 0..samples {
        let h = random_u_element(&mut r, 2);
        let a = random_f_element(&mut r, 3);
        pairs.push((h, a));
    }

    let mut c1 = CheckResult::new("Δ(h▷a) = ±h_(1)^(1)▷a_(1) ⊗ h_(1)^(2)(h_(2)▷a_(2))");
    let mut c2 = CheckResult::new("ε(h▷a) = ε(h)ε(a)");
    let mut c5 = CheckResult::new("mixed action/coaction condition");
    for (h, a) in &pairs {
        let input = format!("h = {h}, a = {a}");
        let ha = act(h, a);
        c1.compare(&input, &f.coproduct(&ha).expect("within bound"), &coproduct_of_action_rhs(&f, h, a));
        c2.compare(&input, &SuperPoly::constant(ha.constant_term()), &SuperPoly::constant(h.counit() * a.constant_term()));
        let (lhs, rhs) = mixed_condition(h, a);
        c5.compare(&input, &lhs, &rhs);
    }

    let mut c3 = CheckResult::new("∇(gh) = ±g_(1)^(1)h^(1) ⊗ g_(1)^(2)(g_(2)▷h^(2))");
    for g in &us {
        for h in &us {
            c3.compare(format!("g = {g}, h = {h}"), &coact(&g.mul(h)), &coaction_of_product_rhs(g, h));
        }
    }
    let mut c4 = CheckResult::new("∇(1) = 1 ⊗ 1");
    c4.compare("1", &coact(&UEnvElement::one()), &GradedTensor::unit(&[LegKind::U, LegKind::F]));
    report.push(c1);
    report.push(c2);
    report.push(c3);
    report.push(c4);
    report.push(c5);
    report
}

/// Every `a#1` and `1#g` with index ≤ `max_index`.
pub fn h_generators(max_index: u32) -> Vec<HElement> {
    let mut xs: Vec<HElement> = generators(max_index).into_iter().map(|g| HElement::f(SuperPoly::generator(g))).collect();
    xs.extend(LieGenerator::ALL.iter().map(|&g| HElement::lie(g)));
    xs
}

/// Random homogeneous `a#h` with `a` of weight ≤ 3 and `h` of degree ≤ 2.
pub fn random_h_element(r: &mut impl rand::Rng) -> HElement {
    let a = random_f_element(r, 3);
    let h = random_u_element(r, 2);
    HElement::pure(a, h)
}

/// Super-Hopf axioms of the bicrossproduct.
pub fn verify_h_hopf(max_index: u32, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("hopf").with_seed(seed);
    let b = Bicross::new(max_index + 3);
    let mut r = rng(seed);
    let gens = h_generators(max_index);
    let randoms: Vec<HElement> = (0..samples.max(2)).map(|_| random_h_element(&mut r)).collect();
    let singles: Vec<HElement> = gens.iter().chain(randoms.iter()).cloned().collect();
    let mut pairs: Vec<(HElement, HElement)> = Vec::new();
    for x in &gens {
        for y in &gens {
            pairs.push((x.clone(), y.clone()));
        }
    }
    for w in randoms.chunks(2) {
        if let [x, y] = w {
            pairs.push((x.clone(), y.clone()));
        }
    }
    for i in 0..samples {
        pairs.push((randoms[i % randoms.len()].clone(), gens[(7 * i) % gens.len()].clone()));
    }

    let mut unit = CheckResult::new("unit 1#1");
    let mut assoc = CheckResult::new("associativity");
    for (i, (x, y)) in pairs.iter().enumerate() {
        if i % 5 == 0 {
            unit.compare(x, &x.mul(&HElement::one()), x);
            unit.compare(x, &HElement::one().mul(x), x);
        }
        let z = &singles[(3 * i + 1) % singles.len()];
        if i % 3 == 0 {
            assoc.compare(format!("({x})({y})({z})"), &x.mul(y).mul(z), &x.mul(&y.mul(z)));
        }
    }
    report.push(unit);
    report.push(assoc);

    let mut coassoc = CheckResult::new("coassociativity");
    let mut counit = CheckResult::new("counit axioms");
    let mut antipode = CheckResult::new("antipode axioms");
    for x in &singles {
        let d = b.coproduct(x);
        coassoc.compare(x, &b.coproduct_on_factor(&d, 0), &b.coproduct_on_factor(&d, 1));
        let eps = |h: &HElement| HElement::f(SuperPoly::constant(h.counit()));
        counit.compare(format!("(ε⊗id)Δ({x})"), &b.contract(&d, eps, |h| h.clone()), x);
        counit.compare(format!("(id⊗ε)Δ({x})"), &b.contract(&d, |h| h.clone(), eps), x);
        let unit = HElement::f(SuperPoly::constant(x.counit()));
        antipode.compare(format!("m(S⊗id)Δ({x})"), &b.contract(&d, |h| b.antipode(h), |h| h.clone()), &unit);
        antipode.compare(format!("m(id⊗S)Δ({x})"), &b.contract(&d, |h| h.clone(), |h| b.antipode(h)), &unit);
    }
    report.push(coassoc);
    report.push(counit);
    report.push(antipode);

    let mut mult = CheckResult::new("Δ is multiplicative into the Koszul-signed H⊗H");
    let mut anti = CheckResult::new("S(xy) = (-1)^{|x||y|} S(y)S(x)");
    let mut counit_mult = CheckResult::new("ε(xy) = ε(x)ε(y)");
    for (x, y) in &pairs {
        let xy = x.mul(y);
        mult.compare(format!("x = {x}, y = {y}"), &b.coproduct(&xy), &hh_mul(&b.coproduct(x), &b.coproduct(y)));
        let s = if koszul(x.parity().unwrap_or(Parity::Even), y.parity().unwrap_or(Parity::Even)) { rat(-1) } else { rat(1) };
        anti.compare(format!("x = {x}, y = {y}"), &b.antipode(&xy), &b.antipode(y).mul(&b.antipode(x)).scale(&s));
        counit_mult.compare(
            format!("x = {x}, y = {y}"),
            &HElement::f(SuperPoly::constant(xy.counit())),
            &HElement::f(SuperPoly::constant(x.counit() * y.counit())),
        );
    }
    report.push(mult);
    report.push(anti);
    report.push(counit_mult);
    report
}

#[cfg(test)]
mod tests;
