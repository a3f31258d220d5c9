//! The supercommutative Hopf algebra of functions on the super jet group,
//! generated by `a_n, d_n` (even) and `b_n, c_n` (odd).

use std::collections::HashMap;

use num_traits::One;

use crate::error::AlgebraError;
use crate::poly::{koszul, rat, Family, GeneratorId, Rational, SuperMonomial, SuperPoly};
use crate::report::{CheckResult, Report};
use crate::sample::random_f_element;
use crate::tensor::{GradedTensor, Leg, LegElement, LegKind};

pub const DEFAULT_MAX_INDEX: u32 = 8;

fn g(family: Family, n: u32) -> SuperPoly {
    SuperPoly::gen(family, n)
}

/// `P[k][i]`: coefficient of `x^i` in `(Σ_{l≥1} a_l x^l)^k`, for `k, i ≤ n`.
pub fn a_power_coefficients(n: u32) -> Vec<Vec<SuperPoly>> {
    let n = n as usize;
    let mut p = vec![vec![SuperPoly::zero(); n + 1]; n + 1];
    p[0][0] = SuperPoly::one();
    for k in 1..=n {
        for i in k..=n {
            let mut acc = SuperPoly::zero();
            for l in 1..=i - (k - 1) {
                acc += &(&g(Family::A, l as u32) * &p[k - 1][i - l]);
            }
            p[k][i] = acc;
        }
    }
    p
}

fn ff(left: SuperPoly, right: SuperPoly) -> GradedTensor {
    GradedTensor::pure(&[LegElement::F(left), LegElement::F(right)])
}

/// Closed-form coproduct of a single generator.
#[allow(clippy::needless_range_loop)]
pub fn coproduct_generator(family: Family, n: u32, bound: u32) -> Result<GradedTensor, AlgebraError> {
    if !family.is_function_family() {
        return Err(AlgebraError::UnknownFamily(family.name().to_string()));
    }
    if n > bound {
        return Err(AlgebraError::IndexOutOfRange { index: n, bound });
    }
    let p = a_power_coefficients(n);
    let mut out = GradedTensor::zero(2);
    let mut add = |c: i64, l: SuperPoly, r: SuperPoly| {
        if !l.is_zero() && !r.is_zero() {
            out.add_scaled(&ff(l, r), &rat(c));
        }
    };
    let nu = n as usize;
    // Σ_{i=1}^n Σ_{k=1}^i  left_k ⊗ P_k^i · tail_{n-i}
    let double_sum = |add: &mut dyn FnMut(i64, SuperPoly, SuperPoly), coeff: &dyn Fn(usize) -> i64, left: Family, shift: u32, tail: Family| {
        for i in 1..=nu {
            for k in 1..=i {
                let right = &p[k][i] * &g(tail, (nu - i) as u32);
                add(coeff(k), g(left, k as u32 + shift), right);
            }
        }
    };
    match family {
        Family::A | Family::C => {
            let head = if family == Family::A { Family::A } else { Family::C };
            let tail_left = if family == Family::A { Family::B } else { Family::D };
            if family == Family::C {
                add(1, SuperPoly::one(), g(Family::C, n));
            }
            for k in 1..=nu {
                add(1, g(head, k as u32), p[k][nu].clone());
            }
            double_sum(&mut add, &|_| 1, tail_left, 0, Family::C);
        }
        Family::B | Family::D => {
            let (shifted, plain, lone) =
                if family == Family::B { (Family::A, Family::B, Family::B) } else { (Family::C, Family::D, Family::D) };
            add(1, SuperPoly::one(), g(family, n));
            double_sum(&mut add, &|k| k as i64 + 1, shifted, 1, Family::B);
            double_sum(&mut add, &|_| 1, plain, 0, Family::D);
            for i in 1..=nu {
                let c_tail = g(Family::C, (nu - i) as u32);
                add(-1, g(lone, 1), &g(Family::B, i as u32) * &c_tail);
                for j in 1..=i {
                    for k in 1..=j {
                        let right = &(&p[k][j] * &g(Family::B, (i - j) as u32)) * &c_tail;
                        add(-(k as i64 + 1), g(plain, k as u32 + 1), right);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}

pub fn counit(x: &SuperPoly) -> Rational {
    x.constant_term()
}

/// Memoized antipode on generators, `(family, index) ↦ S(gen)`.
#[derive(Clone, Debug, Default)]
pub struct AntipodeTable {
    values: HashMap<GeneratorId, SuperPoly>,
}

impl AntipodeTable {
    pub fn get(&self, id: GeneratorId) -> Option<&SuperPoly> {
        self.values.get(&id)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeneratorId, &SuperPoly)> {
        self.values.iter()
    }
}

/// Non-degenerate generators of the function algebra with index ≤ `max_index`.
pub fn generators(max_index: u32) -> Vec<GeneratorId> {
    let mut out = Vec::new();
    for n in 0..=max_index {
        for family in Family::FUNCTION_FAMILIES {
            let id = GeneratorId::new(family, n);
            if id.degenerate_value().is_none() {
                out.push(id);
            }
        }
    }
    out
}

/// Hopf structure with coproducts and antipodes precomputed up to a bound.
#[derive(Clone, Debug)]
pub struct FHopf {
    max_index: u32,
    coproducts: HashMap<GeneratorId, GradedTensor>,
    antipodes: AntipodeTable,
}

impl FHopf {
    pub fn new(max_index: u32) -> Self {
        let mut h = FHopf { max_index, coproducts: HashMap::new(), antipodes: AntipodeTable::default() };
        for id in generators(max_index) {
            let d = coproduct_generator(id.family, id.index, max_index).expect("within bound");
            h.coproducts.insert(id, d);
        }
        for id in generators(max_index) {
            let s = h.solve_antipode(id);
            h.antipodes.values.insert(id, s);
        }
        h
    }

    pub fn max_index(&self) -> u32 {
        self.max_index
    }

    pub fn antipode_table(&self) -> &AntipodeTable {
        &self.antipodes
    }

    fn check_generator(&self, id: GeneratorId) -> Result<(), AlgebraError> {
        if !id.family.is_function_family() {
            return Err(AlgebraError::UnknownFamily(id.family.name().to_string()));
        }
        if id.index > self.max_index {
            return Err(AlgebraError::IndexOutOfRange { index: id.index, bound: self.max_index });
        }
        Ok(())
    }

    pub fn coproduct_of_generator(&self, id: GeneratorId) -> Result<GradedTensor, AlgebraError> {
        self.check_generator(id)?;
        Ok(self.coproducts[&id].clone())
    }

    pub fn coproduct_monomial(&self, m: &SuperMonomial) -> Result<GradedTensor, AlgebraError> {
        let mut acc = GradedTensor::unit(&[LegKind::F, LegKind::F]);
        for (id, e) in m.factors() {
            self.check_generator(id)?;
            if e < 0 {
                return Err(AlgebraError::NotInvertible(id.to_string()));
            }
            for _ in 0..e {
                acc = acc.tensor_mul(&self.coproducts[&id])?;
            }
        }
        Ok(acc)
    }

    /// Superalgebra morphism extending the generator coproducts.
    pub fn coproduct(&self, x: &SuperPoly) -> Result<GradedTensor, AlgebraError> {
        let mut out = GradedTensor::zero(2);
        for (m, c) in x.terms() {
            out.add_scaled(&self.coproduct_monomial(m)?, c);
        }
        Ok(out)
    }

    pub fn counit(&self, x: &SuperPoly) -> Rational {
        counit(x)
    }

    /// `S` is anti-multiplicative with the Koszul sign, which on a
    /// supercommutative algebra makes it multiplicative.
    pub fn antipode(&self, x: &SuperPoly) -> Result<SuperPoly, AlgebraError> {
        for (m, _) in x.terms() {
            for (id, e) in m.factors() {
                self.check_generator(id)?;
                if e < 0 {
                    return Err(AlgebraError::NotInvertible(id.to_string()));
                }
            }
        }
        Ok(x.substitute(&mut |id| self.antipodes.values[&id].clone()))
    }

    /// Solve `m(S⊗id)Δ(gen) = 0`: every left leg other than `gen ⊗ 1` only
    /// involves generators of strictly smaller index.
    fn solve_antipode(&self, id: GeneratorId) -> SuperPoly {
        let gen = SuperPoly::generator(id);
        let mut rest = SuperPoly::zero();
        for (legs, c) in self.coproducts[&id].terms() {
            let (Leg::F(x), Leg::F(y)) = (&legs[0], &legs[1]) else { unreachable!() };
            if y.is_one() && SuperPoly::monomial(x.clone(), Rational::one()) == gen {
                debug_assert!(c.is_one());
                continue;
            }
            let sx = SuperPoly::monomial(x.clone(), Rational::one())
                .substitute(&mut |k| self.antipodes.values.get(&k).cloned().expect("smaller index solved first"));
            rest += &(&sx * &SuperPoly::monomial(y.clone(), c.clone()));
        }
        -&rest
    }
}

/// `Σ f(x') g(x'')` over the terms of an F⊗F tensor.
pub fn contract(
    t: &GradedTensor,
    mut left: impl FnMut(&SuperPoly) -> SuperPoly,
    mut right: impl FnMut(&SuperPoly) -> SuperPoly,
) -> SuperPoly {
    let mut out = SuperPoly::zero();
    for (legs, c) in t.terms() {
        let (Leg::F(x), Leg::F(y)) = (&legs[0], &legs[1]) else { panic!("expected F⊗F") };
        let lx = left(&SuperPoly::monomial(x.clone(), Rational::one()));
        let ry = right(&SuperPoly::monomial(y.clone(), Rational::one()));
        out += &(&lx * &ry).scale(c);
    }
    out
}

/// Apply a parity-preserving map to every F leg of a tensor.
pub fn map_f_legs(t: &GradedTensor, mut map: impl FnMut(usize, &SuperPoly) -> SuperPoly) -> GradedTensor {
    let mut out = GradedTensor::zero(t.arity());
    for (legs, c) in t.terms() {
        let elems: Vec<LegElement> = legs
            .iter()
            .enumerate()
            .map(|(i, l)| match l {
                Leg::F(m) => LegElement::F(map(i, &SuperPoly::monomial(m.clone(), Rational::one()))),
                Leg::U(m) => LegElement::U(crate::uenv::UEnvElement::from_monomial(*m, Rational::one())),
            })
            .collect();
        out.add_scaled(&GradedTensor::pure(&elems), c);
    }
    out
}

/// Swap the two legs of an arity-2 tensor with the Koszul sign.
pub fn flip(t: &GradedTensor) -> GradedTensor {
    let mut out = GradedTensor::zero(2);
    for (legs, c) in t.terms() {
        let s = if koszul(legs[0].parity(), legs[1].parity()) { -c.clone() } else { c.clone() };
        out.add_term(vec![legs[1].clone(), legs[0].clone()], s);
    }
    out
}

fn coproduct_on_f_leg(h: &FHopf, t: &GradedTensor, i: usize) -> GradedTensor {
    t.expand_leg(i, |l| match l {
        Leg::F(m) => h.coproduct_monomial(m).expect("within bound"),
        Leg::U(_) => panic!("leg {i} is not in F"),
    })
}

/// Hopf axioms on generators up to `max_index` and on random products.
pub fn verify_f_hopf(max_index: u32, samples: usize, seed: u64) -> Report {
    let h = FHopf::new(max_index.max(5));
    let mut report = Report::new("f").with_seed(seed);
    let mut inputs: Vec<SuperPoly> = generators(max_index).into_iter().map(SuperPoly::generator).collect();
    let mut rng = crate::sample::rng(seed);
    for _ in 0..samples {
        // products stay within total weight 5
        let x = random_f_element(&mut rng, 5);
        let wx = x.terms().next().map_or(0, |(m, _)| m.weight());
        let y = random_f_element(&mut rng, 5 - wx);
        inputs.push(&x * &y);
    }

    let mut coassoc = CheckResult::new("coassociativity");
    let mut counit_ax = CheckResult::new("counit axioms");
    let mut antipode_ax = CheckResult::new("antipode axioms");
    let mut anti_coalg = CheckResult::new("S is an anti-coalgebra map");
    let mut grading = CheckResult::new("coproduct preserves weight and bc-charge");
    for x in &inputs {
        let d = h.coproduct(x).expect("within bound");
        coassoc.compare(x, &coproduct_on_f_leg(&h, &d, 0), &coproduct_on_f_leg(&h, &d, 1));
        counit_ax.compare(format!("(ε⊗id)Δ({x})"), &contract(&d, |p| SuperPoly::constant(counit(p)), |p| p.clone()), x);
        counit_ax.compare(format!("(id⊗ε)Δ({x})"), &contract(&d, |p| p.clone(), |p| SuperPoly::constant(counit(p))), x);
        let unit = SuperPoly::constant(counit(x));
        let s = |p: &SuperPoly| h.antipode(p).expect("within bound");
        antipode_ax.compare(format!("m(S⊗id)Δ({x})"), &contract(&d, s, |p| p.clone()), &unit);
        antipode_ax.compare(format!("m(id⊗S)Δ({x})"), &contract(&d, |p| p.clone(), s), &unit);
        let sx = h.antipode(x).expect("within bound");
        let lhs = h.coproduct(&sx).expect("within bound");
        let rhs = map_f_legs(&flip(&d), |_, p| s(p));
        anti_coalg.compare(format!("Δ(S({x}))"), &lhs, &rhs);
        for (m, _) in x.terms() {
            let single = h.coproduct_monomial(m).expect("within bound");
            for (legs, _) in single.terms() {
                let (Leg::F(l), Leg::F(r)) = (&legs[0], &legs[1]) else { unreachable!() };
                let ok = l.weight() + r.weight() == m.weight() && l.bc_charge() + r.bc_charge() == m.bc_charge();
                grading.assert(format!("{m}"), ok, || format!("term {l} (x) {r}"));
            }
        }
    }
    report.push(coassoc);
    report.push(counit_ax);
    report.push(antipode_ax);
    report.push(anti_coalg);
    report.push(grading);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, SuperPoly, SuperPoly)]) -> GradedTensor {
        let mut out = GradedTensor::zero(2);
        for (c, l, r) in terms {
            out.add_scaled(&ff(l.clone(), r.clone()), &rat(*c));
        }
        out
    }

    fn a(n: u32) -> SuperPoly {
        g(Family::A, n)
    }
    fn b(n: u32) -> SuperPoly {
        g(Family::B, n)
    }
    fn c(n: u32) -> SuperPoly {
        g(Family::C, n)
    }
    fn d(n: u32) -> SuperPoly {
        g(Family::D, n)
    }
    fn one() -> SuperPoly {
        SuperPoly::one()
    }

    fn delta(family: Family, n: u32) -> GradedTensor {
        coproduct_generator(family, n, 8).unwrap()
    }

    #[test]
    fn low_degree_coproducts() {
        assert_eq!(delta(Family::A, 1), t(&[(1, one(), one())]));
        assert_eq!(delta(Family::A, 2), t(&[(1, one(), a(2)), (1, a(2), one())]));
        assert_eq!(
            delta(Family::A, 3),
            t(&[(1, one(), a(3)), (1, a(3), one()), (2, a(2), a(2)), (1, b(1), c(2))])
        );
        assert_eq!(delta(Family::D, 1), t(&[(1, one(), d(1)), (1, d(1), one())]));
        assert_eq!(
            delta(Family::B, 2),
            t(&[(1, one(), b(2)), (1, b(2), one()), (2, a(2), b(1)), (1, b(1), d(1)), (1, b(1), a(2))])
        );
    }

    #[test]
    fn index_bound_is_enforced() {
        assert_eq!(
            coproduct_generator(Family::A, 9, 8),
            Err(AlgebraError::IndexOutOfRange { index: 9, bound: 8 })
        );
    }

    #[test]
    fn products_and_counit() {
        let h = FHopf::new(4);
        assert_eq!(h.coproduct(&one()).unwrap(), t(&[(1, one(), one())]));
        assert_eq!(
            h.coproduct(&a(2).pow(2)).unwrap(),
            t(&[(1, one(), a(2).pow(2)), (2, a(2), a(2)), (1, a(2).pow(2), one())])
        );
        assert_eq!(
            h.coproduct(&(&b(1) * &c(2))).unwrap(),
            t(&[(1, &b(1) * &c(2), one()), (1, b(1), c(2)), (-1, c(2), b(1)), (1, one(), &b(1) * &c(2))])
        );
        assert_eq!(counit(&one()), rat(1));
        assert_eq!(counit(&a(3)), rat(0));
        let x = &SuperPoly::constant(crate::poly::ratio(3, 2)) + &(&a(2) * &b(1));
        assert_eq!(counit(&x), crate::poly::ratio(3, 2));
    }

    #[test]
    fn antipode_examples() {
        let h = FHopf::new(4);
        for x in [a(2), b(1), c(2), d(1)] {
            assert_eq!(h.antipode(&x).unwrap(), -&x);
        }
        let expected = &(&-&a(3) + &a(2).pow(2).scale(&rat(2))) + &(&b(1) * &c(2));
        assert_eq!(h.antipode(&a(3)).unwrap(), expected);
    }

    #[test]
    fn antipode_right_axiom_on_d3() {
        let h = FHopf::new(4);
        let dd = h.coproduct(&d(3)).unwrap();
        let r = contract(&dd, |p| p.clone(), |p| h.antipode(p).unwrap());
        assert!(r.is_zero(), "{r}");
    }

    #[test]
    fn b4_weights() {
        for (legs, _) in delta(Family::B, 4).terms() {
            let (Leg::F(l), Leg::F(r)) = (&legs[0], &legs[1]) else { unreachable!() };
            assert_eq!(l.weight() + r.weight(), 3);
        }
    }

    #[test]
    fn verify_passes() {
        let r = verify_f_hopf(5, 20, 7);
        assert!(r.passed(), "{r}");
    }
}
