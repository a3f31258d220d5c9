//! The enveloping superalgebra of the affine super Lie algebra with even
//! generators `X, Y, Z` and odd generators `U, V, W`.
//!
//! Elements are kept in PBW normal form `X^i Y^j Z^k U^ε V^ζ W^η` with
//! `ε, ζ, η ∈ {0, 1}`. Out-of-order words are rewritten by adjacent
//! transpositions `gh ↦ (-1)^{|g||h|} hg + [g, h]`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{fmt_signed_terms, koszul, rat, Parity, Rational};
use crate::report::{CheckResult, Report};
use crate::tensor::{GradedTensor, Leg, LegKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum LieGenerator {
    X,
    Y,
    Z,
    U,
    V,
    W,
}

pub use LieGenerator::*;

impl LieGenerator {
    pub const ALL: [LieGenerator; 6] = [X, Y, Z, U, V, W];

    pub fn parity(self) -> Parity {
        Parity::of_bit(matches!(self, U | V | W))
    }

    pub fn name(self) -> &'static str {
        match self {
            X => "X",
            Y => "Y",
            Z => "Z",
            U => "U",
            V => "V",
            W => "W",
        }
    }

    pub fn from_name(s: &str) -> Option<LieGenerator> {
        LieGenerator::ALL.into_iter().find(|g| g.name() == s)
    }

    /// Y-eigenvalue under the adjoint action.
    pub fn weight(self) -> i64 {
        match self {
            X | U => 1,
            V => -1,
            Y | Z | W => 0,
        }
    }
}

impl fmt::Display for LieGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Super bracket of two generators as a list of `(generator, coefficient)`.
pub fn bracket(g: LieGenerator, h: LieGenerator) -> Vec<(LieGenerator, i64)> {
    if g == h {
        return vec![];
    }
    if g > h {
        // [g,h] = -(-1)^{|g||h|} [h,g]
        let s = if koszul(g.parity(), h.parity()) { 1 } else { -1 };
        return bracket(h, g).into_iter().map(|(k, c)| (k, s * c)).collect();
    }
    match (g, h) {
        (X, Y) => vec![(X, -1)],
        (X, V) => vec![(W, -1)],
        (Y, U) => vec![(U, 1)],
        (Y, V) => vec![(V, -1)],
        (Z, U) => vec![(U, -1)],
        (Z, V) => vec![(V, 1)],
        (Z, W) => vec![(W, 1)],
        (U, V) => vec![(Y, -1), (Z, -1)],
        (U, W) => vec![(X, -1)],
        _ => vec![],
    }
}

/// Bracket table as a map from ordered generator pairs to elements.
pub struct BracketTable {
    entries: BTreeMap<(LieGenerator, LieGenerator), UEnvElement>,
}

impl BracketTable {
    pub fn new() -> Self {
        let mut entries = BTreeMap::new();
        for g in LieGenerator::ALL {
            for h in LieGenerator::ALL {
                entries.insert((g, h), UEnvElement::linear(&bracket(g, h)));
            }
        }
        BracketTable { entries }
    }

    pub fn get(&self, g: LieGenerator, h: LieGenerator) -> &UEnvElement {
        &self.entries[&(g, h)]
    }
}

impl Default for BracketTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Normal-ordered PBW monomial. Ordered by descending degree, then
/// lexicographically on the underlying word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PbwMonomial {
    even: [u32; 3],
    /// bit 0 = U, bit 1 = V, bit 2 = W
    odd: u8,
}

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial::default()
    }

    pub fn generator(g: LieGenerator) -> Self {
        let mut m = PbwMonomial::one();
        match g {
            X | Y | Z => m.even[g as usize] = 1,
            _ => m.odd = 1 << (g as usize - 3),
        }
        m
    }

    pub fn new(x: u32, y: u32, z: u32, u: bool, v: bool, w: bool) -> Self {
        PbwMonomial { even: [x, y, z], odd: u as u8 | (v as u8) << 1 | (w as u8) << 2 }
    }

    pub fn is_one(&self) -> bool {
        *self == PbwMonomial::one()
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().sum::<u32>() + self.odd.count_ones()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_bit(self.odd.count_ones() % 2 == 1)
    }

    pub fn exponent(&self, g: LieGenerator) -> u32 {
        match g {
            X | Y | Z => self.even[g as usize],
            _ => ((self.odd >> (g as usize - 3)) & 1) as u32,
        }
    }

    /// Adjoint Y-weight.
    pub fn weight(&self) -> i64 {
        LieGenerator::ALL.iter().map(|&g| g.weight() * self.exponent(g) as i64).sum()
    }

    pub fn contains(&self, g: LieGenerator) -> bool {
        self.exponent(g) > 0
    }

    pub fn word(&self) -> Vec<LieGenerator> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for g in LieGenerator::ALL {
            for _ in 0..self.exponent(g) {
                w.push(g);
            }
        }
        w
    }

    fn from_normal_word(word: &[LieGenerator]) -> Self {
        let mut m = PbwMonomial::one();
        for &g in word {
            match g {
                X | Y | Z => m.even[g as usize] += 1,
                _ => m.odd |= 1 << (g as usize - 3),
            }
        }
        m
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.degree().cmp(&self.degree()).then_with(|| self.word().cmp(&other.word()))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for g in LieGenerator::ALL {
            let e = self.exponent(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Which out-of-order pair the rewriting step picks first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

thread_local! {
    static NORMAL_FORMS: RefCell<HashMap<(Strategy, Vec<LieGenerator>), UEnvElement>> = RefCell::new(HashMap::new());
}

fn out_of_order(g: LieGenerator, h: LieGenerator) -> bool {
    g > h || (g == h && g.parity().is_odd())
}

/// Rewrite a word into PBW normal form.
pub fn pbw_normalize(word: &[LieGenerator]) -> UEnvElement {
    pbw_normalize_with(word, Strategy::Leftmost)
}

pub fn pbw_normalize_with(word: &[LieGenerator], strategy: Strategy) -> UEnvElement {
    let pos = match strategy {
        Strategy::Leftmost => (0..word.len().saturating_sub(1)).find(|&i| out_of_order(word[i], word[i + 1])),
        Strategy::Rightmost => (0..word.len().saturating_sub(1)).rev().find(|&i| out_of_order(word[i], word[i + 1])),
    };
    let Some(i) = pos else {
        return UEnvElement::from_monomial(PbwMonomial::from_normal_word(word), Rational::one());
    };
    let key = (strategy, word.to_vec());
    if let Some(hit) = NORMAL_FORMS.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let (g, h) = (word[i], word[i + 1]);
    let mut out = UEnvElement::zero();
    // gg = ½[g,g] = 0 for odd g
    if g != h {
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let s = if koszul(g.parity(), h.parity()) { -1 } else { 1 };
        out.add_scaled(&pbw_normalize_with(&swapped, strategy), &rat(s));
        for (k, c) in bracket(g, h) {
            let mut w = Vec::with_capacity(word.len() - 1);
            w.extend_from_slice(&word[..i]);
            w.push(k);
            w.extend_from_slice(&word[i + 2..]);
            out.add_scaled(&pbw_normalize_with(&w, strategy), &rat(c));
        }
    }
    NORMAL_FORMS.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

/// Element of the enveloping superalgebra in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UEnvElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl UEnvElement {
    pub fn zero() -> Self {
        UEnvElement::default()
    }

    pub fn one() -> Self {
        UEnvElement::from_monomial(PbwMonomial::one(), Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        UEnvElement::from_monomial(PbwMonomial::one(), c)
    }

    pub fn generator(g: LieGenerator) -> Self {
        UEnvElement::from_monomial(PbwMonomial::generator(g), Rational::one())
    }

    pub fn from_monomial(m: PbwMonomial, c: Rational) -> Self {
        let mut u = UEnvElement::zero();
        u.add_term(m, c);
        u
    }

    pub fn linear(combo: &[(LieGenerator, i64)]) -> Self {
        let mut u = UEnvElement::zero();
        for &(g, c) in combo {
            u.add_term(PbwMonomial::generator(g), rat(c));
        }
        u
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UEnvElement, s: &Rational) {
        for (m, c) in &other.terms {
            self.add_term(*m, c * s);
        }
    }

    pub fn add(&self, other: &UEnvElement) -> UEnvElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &UEnvElement) -> UEnvElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, s: &Rational) -> UEnvElement {
        let mut out = UEnvElement::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (PbwMonomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(PbwMonomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn sorted_terms(&self) -> Vec<(&PbwMonomial, &Rational)> {
        self.terms.iter().collect()
    }

    pub fn mul_monomials(x: &PbwMonomial, y: &PbwMonomial) -> UEnvElement {
        if x.is_one() {
            return UEnvElement::from_monomial(*y, Rational::one());
        }
        if y.is_one() {
            return UEnvElement::from_monomial(*x, Rational::one());
        }
        let mut w = x.word();
        w.extend(y.word());
        pbw_normalize(&w)
    }

    pub fn mul(&self, other: &UEnvElement) -> UEnvElement {
        let mut out = UEnvElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_scaled(&UEnvElement::mul_monomials(m1, m2), &(c1 * c2));
            }
        }
        out
    }

    /// Super commutator `xy - (-1)^{|x||y|} yx` of homogeneous elements.
    pub fn super_bracket(&self, other: &UEnvElement) -> UEnvElement {
        let p = self.parity().unwrap_or(Parity::Even);
        let q = other.parity().unwrap_or(Parity::Even);
        let s = if koszul(p, q) { rat(-1) } else { rat(1) };
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &-s);
        out
    }

    pub fn counit(&self) -> Rational {
        self.coefficient(&PbwMonomial::one())
    }

    /// Primitive coproduct extended multiplicatively with Koszul signs.
    pub fn coproduct(&self) -> GradedTensor {
        let mut out = GradedTensor::zero(2);
        for (m, c) in &self.terms {
            for (legs, s) in monomial_coproduct(m) {
                out.add_term(legs, c * rat(s));
            }
        }
        out
    }

    /// `S(g) = -g`, `S(xy) = (-1)^{|x||y|} S(y)S(x)`.
    pub fn antipode(&self) -> UEnvElement {
        let mut out = UEnvElement::zero();
        for (m, c) in &self.terms {
            let mut w = m.word();
            let k = w.len();
            let odd = w.iter().filter(|g| g.parity().is_odd()).count();
            // (-1)^k from S(g) = -g, and the Koszul sign of reversing the odd letters
            let negate = (k % 2 == 1) ^ ((odd * odd.saturating_sub(1) / 2) % 2 == 1);
            w.reverse();
            let s = if negate { -c.clone() } else { c.clone() };
            out.add_scaled(&pbw_normalize(&w), &s);
        }
        out
    }

    pub fn contains(&self, g: LieGenerator) -> bool {
        self.terms.keys().any(|m| m.contains(g))
    }
}

/// `Δ(g_1 ... g_k) = Σ_S ± g_S ⊗ g_{S^c}`; subwords of a normal word stay normal.
fn monomial_coproduct(m: &PbwMonomial) -> Vec<(Vec<Leg>, i64)> {
    let w = m.word();
    let k = w.len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut negate = false;
        let mut odd_right = 0;
        for (i, &g) in w.iter().enumerate() {
            if mask & (1 << i) != 0 {
                if g.parity().is_odd() && odd_right % 2 == 1 {
                    negate = !negate;
                }
                left.push(g);
            } else {
                if g.parity().is_odd() {
                    odd_right += 1;
                }
                right.push(g);
            }
        }
        out.push((
            vec![Leg::U(PbwMonomial::from_normal_word(&left)), Leg::U(PbwMonomial::from_normal_word(&right))],
            if negate { -1 } else { 1 },
        ));
    }
    out
}

impl fmt::Display for UEnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_signed_terms(f, self.sorted_terms().into_iter().map(|(m, c)| (c.clone(), m, m.is_one())))
    }
}

/// Contract a U⊗U tensor as `Σ f(x') g(x'')`.
pub fn multiply_legs(
    t: &GradedTensor,
    left: impl Fn(&UEnvElement) -> UEnvElement,
    right: impl Fn(&UEnvElement) -> UEnvElement,
) -> UEnvElement {
    let mut out = UEnvElement::zero();
    for (legs, c) in t.terms() {
        let (Leg::U(x), Leg::U(y)) = (&legs[0], &legs[1]) else { panic!("expected U⊗U") };
        let lx = left(&UEnvElement::from_monomial(*x, Rational::one()));
        let ry = right(&UEnvElement::from_monomial(*y, Rational::one()));
        out.add_scaled(&lx.mul(&ry), c);
    }
    out
}

/// Apply Δ to leg `i` of a tensor whose leg `i` lies in U.
pub fn coproduct_on_leg(t: &GradedTensor, i: usize) -> GradedTensor {
    t.expand_leg(i, |l| match l {
        Leg::U(m) => UEnvElement::from_monomial(*m, Rational::one()).coproduct(),
        Leg::F(_) => panic!("leg {i} is not in U"),
    })
}

/// All PBW monomials of total degree at most `max_degree`.
pub fn monomials_up_to(max_degree: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for x in 0..=max_degree {
        for y in 0..=max_degree - x {
            for z in 0..=max_degree - x - y {
                for odd in 0u8..8 {
                    let m = PbwMonomial { even: [x, y, z], odd };
                    if m.degree() <= max_degree {
                        out.push(m);
                    }
                }
            }
        }
    }
    out.sort_by_key(|m| (m.degree(), m.word()));
    out
}

pub fn unit_tensor() -> GradedTensor {
    GradedTensor::unit(&[LegKind::U, LegKind::U])
}

fn jacobi_sum(g: LieGenerator, h: LieGenerator, k: LieGenerator) -> UEnvElement {
    let e = UEnvElement::generator;
    let sign = |p: LieGenerator, q: LieGenerator| if koszul(p.parity(), q.parity()) { rat(-1) } else { rat(1) };
    let mut out = e(g).super_bracket(&e(h).super_bracket(&e(k))).scale(&sign(g, k));
    out.add_scaled(&e(h).super_bracket(&e(k).super_bracket(&e(g))), &sign(h, g));
    out.add_scaled(&e(k).super_bracket(&e(g).super_bracket(&e(h))), &sign(k, h));
    out
}

fn random_word(rng: &mut impl Rng, len: usize) -> Vec<LieGenerator> {
    (0..len).map(|_| LieGenerator::ALL[rng.gen_range(0..6)]).collect()
}

fn word_string(w: &[LieGenerator]) -> String {
    w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
}

/// Bracket table axioms, PBW confluence and the Hopf axioms on low degrees.
pub fn verify_u(samples: usize, seed: u64) -> Report {
    let mut report = Report::new("u").with_seed(seed);
    let table = BracketTable::new();

    let mut anti = CheckResult::new("super-antisymmetry");
    let mut commutator = CheckResult::new("commutator matches bracket table");
    for g in LieGenerator::ALL {
        for h in LieGenerator::ALL {
            let s = if koszul(g.parity(), h.parity()) { rat(1) } else { rat(-1) };
            anti.compare(format!("[{g},{h}]"), table.get(g, h), &table.get(h, g).scale(&s));
            let c = UEnvElement::generator(g).super_bracket(&UEnvElement::generator(h));
            commutator.compare(format!("{g}{h} - ±{h}{g}"), &c, table.get(g, h));
        }
    }
    report.push(anti);
    report.push(commutator);

    let mut jacobi = CheckResult::new("super Jacobi on all generator triples");
    for (i, &g) in LieGenerator::ALL.iter().enumerate() {
        for (j, &h) in LieGenerator::ALL.iter().enumerate().skip(i) {
            for &k in &LieGenerator::ALL[j..] {
                jacobi.compare(format!("({g},{h},{k})"), &jacobi_sum(g, h, k), &UEnvElement::zero());
            }
        }
    }
    report.push(jacobi);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut confluence = CheckResult::new("PBW confluence (leftmost vs rightmost rewriting)");
    for _ in 0..samples {
        let w = random_word(&mut rng, 8);
        confluence.compare(
            word_string(&w),
            &pbw_normalize_with(&w, Strategy::Leftmost),
            &pbw_normalize_with(&w, Strategy::Rightmost),
        );
    }
    report.push(confluence);

    let mut assoc = CheckResult::new("associativity on random words");
    for _ in 0..samples {
        let (a, b, c) = (random_word(&mut rng, 3), random_word(&mut rng, 2), random_word(&mut rng, 3));
        let (a, b, c) = (pbw_normalize(&a), pbw_normalize(&b), pbw_normalize(&c));
        assoc.compare(format!("({a})({b})({c})"), &a.mul(&b).mul(&c), &a.mul(&b.mul(&c)));
    }
    report.push(assoc);

    let mut coassoc = CheckResult::new("coassociativity, degree <= 4");
    let mut hom = CheckResult::new("coproduct is multiplicative, degree <= 4");
    let mut counit = CheckResult::new("counit axioms, degree <= 4");
    let mut antipode = CheckResult::new("antipode axioms, degree <= 4");
    for m in monomials_up_to(4) {
        let x = UEnvElement::from_monomial(m, Rational::one());
        let d = x.coproduct();
        coassoc.compare(m, &coproduct_on_leg(&d, 0), &coproduct_on_leg(&d, 1));
        let mut prod = unit_tensor();
        for g in m.word() {
            prod = prod.tensor_mul(&UEnvElement::generator(g).coproduct()).expect("arity 2");
        }
        hom.compare(m, &d, &prod);
        let eps = |u: &UEnvElement| UEnvElement::scalar(u.counit());
        counit.compare(format!("(ε⊗id)Δ({m})"), &multiply_legs(&d, eps, |u| u.clone()), &x);
        counit.compare(format!("(id⊗ε)Δ({m})"), &multiply_legs(&d, |u| u.clone(), eps), &x);
        let unit = UEnvElement::scalar(x.counit());
        antipode.compare(format!("m(S⊗id)Δ({m})"), &multiply_legs(&d, UEnvElement::antipode, |u| u.clone()), &unit);
        antipode.compare(format!("m(id⊗S)Δ({m})"), &multiply_legs(&d, |u| u.clone(), UEnvElement::antipode), &unit);
    }
    report.push(coassoc);
    report.push(hom);
    report.push(counit);
    report.push(antipode);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Vec<LieGenerator> {
        s.chars().map(|c| LieGenerator::from_name(&c.to_string()).unwrap()).collect()
    }

    #[test]
    fn normalize_examples() {
        // X < Y in PBW order, so XY is already normal and YX = XY + X
        assert_eq!(pbw_normalize(&word("XY")).to_string(), "X*Y");
        assert_eq!(pbw_normalize(&word("YX")).to_string(), "X*Y + X");
        assert_eq!(pbw_normalize(&word("VU")).to_string(), "-U*V - Y - Z");
        assert!(pbw_normalize(&word("VV")).is_zero());
    }

    #[test]
    fn xy_equals_yx_minus_x() {
        let yx = pbw_normalize(&word("YX"));
        let x = UEnvElement::generator(X);
        assert_eq!(yx.sub(&x), pbw_normalize(&word("XY")));
    }

    #[test]
    fn multiplication_examples() {
        let yx = pbw_normalize(&word("YX"));
        assert_eq!(yx.mul(&UEnvElement::one()), yx);
        let wu = UEnvElement::generator(W).mul(&UEnvElement::generator(U));
        assert_eq!(wu.to_string(), "-U*W - X");
        let (u, v, w) = (UEnvElement::generator(U), UEnvElement::generator(V), UEnvElement::generator(W));
        assert_eq!(u.mul(&v.mul(&w)), u.mul(&v).mul(&w));
    }

    #[test]
    fn coproduct_examples() {
        let x = UEnvElement::generator(X);
        assert_eq!(x.coproduct().to_string(), "X (x) 1 + 1 (x) X");
        let xy = pbw_normalize(&word("XY"));
        assert_eq!(xy.coproduct().to_string(), "X*Y (x) 1 + X (x) Y + Y (x) X + 1 (x) X*Y");
        let uv = pbw_normalize(&word("UV"));
        assert_eq!(uv.coproduct().to_string(), "U*V (x) 1 + U (x) V - V (x) U + 1 (x) U*V");
    }

    #[test]
    fn coproduct_matches_tensor_product_of_generators() {
        for m in monomials_up_to(4) {
            let mut acc = unit_tensor();
            for g in m.word() {
                acc = acc.tensor_mul(&UEnvElement::generator(g).coproduct()).unwrap();
            }
            assert_eq!(acc, UEnvElement::from_monomial(m, Rational::one()).coproduct(), "{m}");
        }
    }

    #[test]
    fn counit_and_antipode_examples() {
        assert_eq!(UEnvElement::one().counit(), rat(1));
        assert_eq!(pbw_normalize(&word("XZW")).counit(), rat(0));
        assert_eq!(UEnvElement::generator(Y).antipode(), UEnvElement::generator(Y).scale(&rat(-1)));
        let xy = pbw_normalize(&word("XY"));
        assert_eq!(xy.antipode().to_string(), "X*Y + X");
    }

    #[test]
    fn bracket_table_antisymmetry() {
        let t = BracketTable::new();
        for g in LieGenerator::ALL {
            for h in LieGenerator::ALL {
                let s = if koszul(g.parity(), h.parity()) { 1 } else { -1 };
                assert_eq!(*t.get(g, h), t.get(h, g).scale(&rat(s)), "[{g},{h}]");
                let lhs = UEnvElement::generator(g).super_bracket(&UEnvElement::generator(h));
                assert_eq!(lhs, *t.get(g, h), "[{g},{h}] in U");
            }
        }
    }

    #[test]
    fn verify_u_passes() {
        let r = verify_u(50, 42);
        assert!(r.passed(), "{r}");
        assert_eq!(r.check("super Jacobi on all generator triples").unwrap().cases, 56);
    }
}
