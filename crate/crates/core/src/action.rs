//! Left action of the enveloping superalgebra on the function algebra.
//!
//! Generators act as super-derivations, `g ▷ (ab) = (g▷a)b + (-1)^{|a||g|} a(g▷b)`,
//! and words act right to left, `(gh) ▷ a = g ▷ (h ▷ a)`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::ffun::generators;
use crate::poly::{koszul, rat, Family, GeneratorId, Rational, SuperPoly};
use crate::report::{CheckResult, Report};
use crate::sample::{random_f_element, random_u_element, rng};
use crate::uenv::{bracket, monomials_up_to, LieGenerator, UEnvElement};

fn g(family: Family, n: i64) -> SuperPoly {
    if n < 0 {
        return SuperPoly::zero();
    }
    SuperPoly::gen(family, n as u32)
}

/// `gen ▷ family_n` straight from the table.
pub fn act_on_generator(gen: LieGenerator, id: GeneratorId) -> SuperPoly {
    use LieGenerator::*;
    let (a, b, c, d) = (Family::A, Family::B, Family::C, Family::D);
    let n = id.index as i64;
    let k = |x: i64| SuperPoly::integer(x);
    let this = g(id.family, n);
    match (gen, id.family) {
        (X, f) if f == a => &(&k(n + 1) * &g(a, n + 1)) - &(&(&k(2) * &g(a, n)) * &g(a, 2)) - (&g(b, 1) * &g(c, n)),
        (X, f) if f == b => &(&k(n + 1) * &g(b, n + 1)) - &(&(&k(2) * &g(b, n)) * &g(a, 2)) - (&g(b, 1) * &g(d, n)),
        (X, f) if f == c => &(&(&k(-2) * &g(c, 2)) * &g(a, n)) + &(&k(n + 1) * &g(c, n + 1)) - (&g(c, n) * &g(d, 1)),
        (X, _) => &(&(&k(-2) * &g(c, 2)) * &g(b, n)) + &(&k(n + 1) * &g(d, n + 1)) - (&g(d, n) * &g(d, 1)),
        (Y, f) if f == a || f == b => this.scale(&rat(n - 1)),
        (Y, _) => this.scale(&rat(n)),
        (Z, f) if f == b => this,
        (Z, f) if f == c => -&this,
        (Z, _) => SuperPoly::zero(),
        (U, f) if f == a => g(c, n),
        (U, f) if f == b => &(&k(-(n + 1)) * &g(a, n + 1)) + &g(d, n),
        (U, f) if f == c => SuperPoly::zero(),
        (U, _) => &k(n + 1) * &g(c, n + 1),
        (V, f) if f == a => g(b, n - 1),
        (V, f) if f == b => SuperPoly::zero(),
        (V, f) if f == c => &g(a, n) - &g(d, n - 1),
        (V, _) => g(b, n),
        (W, f) if f == a => &-&(&g(b, 1) * &g(a, n)) + &g(b, n),
        (W, f) if f == b => -&(&g(b, 1) * &g(b, n)),
        (W, f) if f == c => &(&g(d, 1) * &g(a, n)) - &g(d, n),
        (W, _) => &g(d, 1) * &g(b, n),
    }
}

/// The 24 table entries, instantiated up to an index bound.
#[derive(Clone, Debug)]
pub struct ActionTable {
    entries: BTreeMap<(LieGenerator, GeneratorId), SuperPoly>,
}

impl ActionTable {
    pub fn new(max_index: u32) -> Self {
        let mut entries = BTreeMap::new();
        for gen in LieGenerator::ALL {
            for id in generators(max_index) {
                entries.insert((gen, id), act_on_generator(gen, id));
            }
        }
        ActionTable { entries }
    }

    pub fn get(&self, gen: LieGenerator, id: GeneratorId) -> SuperPoly {
        self.entries.get(&(gen, id)).cloned().unwrap_or_else(|| act_on_generator(gen, id))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A single generator acting as a super-derivation.
pub fn act_generator(gen: LieGenerator, x: &SuperPoly) -> SuperPoly {
    let mut out = SuperPoly::zero();
    for (m, c) in x.terms() {
        let factors: Vec<GeneratorId> = m
            .factors()
            .into_iter()
            .flat_map(|(id, e)| {
                assert!(e >= 0, "the action is only defined on polynomials");
                std::iter::repeat_n(id, e as usize)
            })
            .collect();
        let mut prefix_odd = false;
        for (i, &id) in factors.iter().enumerate() {
            let mut term = SuperPoly::constant(if prefix_odd && gen.parity().is_odd() { -c.clone() } else { c.clone() });
            for (j, &other) in factors.iter().enumerate() {
                let f = if i == j { act_on_generator(gen, id) } else { SuperPoly::generator(other) };
                term = &term * &f;
                if term.is_zero() {
                    break;
                }
            }
            out += &term;
            prefix_odd ^= id.parity().is_odd();
        }
    }
    out
}

pub fn act_word(word: &[LieGenerator], x: &SuperPoly) -> SuperPoly {
    word.iter().rev().fold(x.clone(), |acc, &gen| act_generator(gen, &acc))
}

/// `h ▷ x`, linear in both arguments.
pub fn act(h: &UEnvElement, x: &SuperPoly) -> SuperPoly {
    let mut out = SuperPoly::zero();
    for (m, c) in h.terms() {
        out += &act_word(&m.word(), x).scale(c);
    }
    out
}

/// `Σ (-1)^{|x||h_(2)|} (h_(1)▷x)(h_(2)▷y)`.
pub fn act_on_product_via_coproduct(h: &UEnvElement, x: &SuperPoly, y: &SuperPoly) -> SuperPoly {
    let px = x.parity().expect("homogeneous");
    let mut out = SuperPoly::zero();
    for (legs, c) in h.coproduct().terms() {
        let (crate::tensor::Leg::U(h1), crate::tensor::Leg::U(h2)) = (&legs[0], &legs[1]) else { unreachable!() };
        let s = if koszul(px, h2.parity()) { -c.clone() } else { c.clone() };
        let l = act(&UEnvElement::from_monomial(*h1, Rational::one()), x);
        let r = act(&UEnvElement::from_monomial(*h2, Rational::one()), y);
        out += &(&l * &r).scale(&s);
    }
    out
}

fn lie(gen: LieGenerator) -> UEnvElement {
    UEnvElement::generator(gen)
}

/// Bracket consistency, module-algebra law, gradings and counit compatibility.
pub fn verify_module_algebra(max_index: u32, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("action").with_seed(seed);
    let gens = generators(max_index);

    let mut brackets = CheckResult::new("bracket consistency on all 21 generator pairs");
    for (i, &p) in LieGenerator::ALL.iter().enumerate() {
        for &q in &LieGenerator::ALL[i..] {
            let table = UEnvElement::linear(&bracket(p, q));
            let s = if koszul(p.parity(), q.parity()) { rat(-1) } else { rat(1) };
            for &id in &gens {
                let x = SuperPoly::generator(id);
                let lhs = act(&table, &x);
                let rhs = &act_word(&[p, q], &x) - &act_word(&[q, p], &x).scale(&s);
                brackets.compare(format!("[{p},{q}] ▷ {id}"), &lhs, &rhs);
            }
        }
    }
    report.push(brackets);

    let mut worked = CheckResult::new("worked cases [Y,X]▷a_n = X▷a_n and [U,W]▷d_n = -X▷d_n");
    for n in 2..=max_index.max(2) {
        let a_n = SuperPoly::gen(Family::A, n);
        let yx = &act_word(&[LieGenerator::Y, LieGenerator::X], &a_n) - &act_word(&[LieGenerator::X, LieGenerator::Y], &a_n);
        worked.compare(format!("[Y,X] ▷ a{n}"), &yx, &act_generator(LieGenerator::X, &a_n));
        let d_n = SuperPoly::gen(Family::D, n - 1);
        let uw = &act_word(&[LieGenerator::U, LieGenerator::W], &d_n) + &act_word(&[LieGenerator::W, LieGenerator::U], &d_n);
        worked.compare(format!("[U,W] ▷ d{}", n - 1), &uw, &-&act_generator(LieGenerator::X, &d_n));
    }
    report.push(worked);

    let mut grading = CheckResult::new("Y acts by weight, Z by bc-charge");
    for &id in &gens {
        let x = SuperPoly::generator(id);
        grading.compare(format!("Y ▷ {id}"), &act(&lie(LieGenerator::Y), &x), &x.scale(&rat(id.weight())));
        grading.compare(format!("Z ▷ {id}"), &act(&lie(LieGenerator::Z), &x), &x.scale(&rat(id.bc_charge())));
    }
    report.push(grading);

    let mut r = rng(seed);
    let mut module_alg = CheckResult::new("h▷(xy) = ±(h_(1)▷x)(h_(2)▷y) on random elements");
    let mut counit = CheckResult::new("ε(h▷x) = ε(h)ε(x)");
    let words = monomials_up_to(2);
    for i in 0..samples {
        let h = if i < words.len() {
            UEnvElement::from_monomial(words[i], Rational::one())
        } else {
            random_u_element(&mut r, 3)
        };
        let x = random_f_element(&mut r, 3);
        let y = random_f_element(&mut r, 3);
        module_alg.compare(format!("h = {h}, x = {x}, y = {y}"), &act(&h, &(&x * &y)), &act_on_product_via_coproduct(&h, &x, &y));
        let xy = &x * &y;
        counit.compare(
            format!("h = {h}, x = {xy}"),
            &SuperPoly::constant(act(&h, &xy).constant_term()),
            &SuperPoly::constant(h.counit() * xy.constant_term()),
        );
    }
    report.push(module_alg);
    report.push(counit);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use LieGenerator::*;

    type Terms<'a> = &'a [(i64, &'a [(Family, u32, i32)])];

    fn p(s: Terms) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (c, fs) in s {
            let f: Vec<_> = fs.iter().map(|&(fam, n, e)| (GeneratorId::new(fam, n), e)).collect();
            out += &SuperPoly::from_factors(&f).scale(&rat(*c));
        }
        out
    }

    #[test]
    fn table_examples() {
        let a = |n| SuperPoly::gen(Family::A, n);
        assert_eq!(act(&lie(Y), &a(5)), a(5).scale(&rat(4)));
        assert_eq!(
            act(&lie(X), &a(2)),
            p(&[(3, &[(Family::A, 3, 1)]), (-2, &[(Family::A, 2, 2)]), (-1, &[(Family::B, 1, 1), (Family::C, 2, 1)])])
        );
        assert_eq!(
            act(&lie(U), &SuperPoly::gen(Family::B, 2)),
            p(&[(-3, &[(Family::A, 3, 1)]), (1, &[(Family::D, 2, 1)])])
        );
        // W▷(a2·a2) = 2(-b1 a2² + a2 b2)
        assert_eq!(
            act(&lie(W), &a(2).pow(2)),
            p(&[(-2, &[(Family::A, 2, 2), (Family::B, 1, 1)]), (2, &[(Family::A, 2, 1), (Family::B, 2, 1)])])
        );
    }

    #[test]
    fn constants_are_killed() {
        assert!(act(&lie(X), &SuperPoly::one()).is_zero());
        assert_eq!(act(&UEnvElement::one(), &SuperPoly::gen(Family::C, 3)), SuperPoly::gen(Family::C, 3));
    }

    #[test]
    fn odd_derivation_sign() {
        // U▷(b1 c2) = (U▷b1) c2 - b1 (U▷c2) = (-2a2 + d1) c2
        let x = &SuperPoly::gen(Family::B, 1) * &SuperPoly::gen(Family::C, 2);
        let expected = &(&SuperPoly::gen(Family::D, 1) - &SuperPoly::gen(Family::A, 2).scale(&rat(2))) * &SuperPoly::gen(Family::C, 2);
        assert_eq!(act(&lie(U), &x), expected);
    }

    #[test]
    fn vw_bracket_kills_c() {
        for n in 2..=6 {
            let c = SuperPoly::gen(Family::C, n);
            assert!((&act_word(&[V, W], &c) + &act_word(&[W, V], &c)).is_zero());
        }
    }

    #[test]
    fn verify_passes() {
        let r = verify_module_algebra(6, 40, 42);
        assert!(r.passed(), "{r}");
    }
}
