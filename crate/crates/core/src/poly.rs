//! Supercommutative polynomials over exact rationals.
//!
//! A [`SuperPoly`] is a finite sum of [`SuperMonomial`]s. Even generators commute
//! with everything; odd generators anticommute among themselves and square to
//! zero. Every monomial is stored in a unique canonical form so that equality of
//! polynomials is structural equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Exact rational coefficient.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Z/2 degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u32 {
        self as u32
    }
}

// parities add mod 2
impl Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::of_bit(self.is_odd() ^ rhs.is_odd())
    }
}

/// `(-1)^(p*q)` as a boolean "negate" flag.
pub fn koszul(p: Parity, q: Parity) -> bool {
    p.is_odd() && q.is_odd()
}

#[derive(Clone, Copy, Debug)]
enum WeightRule {
    IndexMinusOne,
    Index,
    Zero,
}

struct FamilyInfo {
    name: &'static str,
    odd: bool,
    /// Exponents at or above this value vanish (0 means no truncation).
    nil: i32,
    weight: WeightRule,
}

const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo { name: "a", odd: false, nil: 0, weight: WeightRule::IndexMinusOne },
    FamilyInfo { name: "b", odd: true, nil: 0, weight: WeightRule::IndexMinusOne },
    FamilyInfo { name: "c", odd: true, nil: 0, weight: WeightRule::Index },
    FamilyInfo { name: "d", odd: false, nil: 0, weight: WeightRule::Index },
    FamilyInfo { name: "a'", odd: false, nil: 0, weight: WeightRule::IndexMinusOne },
    FamilyInfo { name: "b'", odd: true, nil: 0, weight: WeightRule::IndexMinusOne },
    FamilyInfo { name: "c'", odd: true, nil: 0, weight: WeightRule::Index },
    FamilyInfo { name: "d'", odd: false, nil: 0, weight: WeightRule::Index },
    FamilyInfo { name: "t", odd: false, nil: 2, weight: WeightRule::Zero },
    FamilyInfo { name: "τ", odd: true, nil: 0, weight: WeightRule::Zero },
    FamilyInfo { name: "α", odd: false, nil: 0, weight: WeightRule::Zero },
    FamilyInfo { name: "β", odd: true, nil: 0, weight: WeightRule::Zero },
    FamilyInfo { name: "γ", odd: true, nil: 0, weight: WeightRule::Zero },
    FamilyInfo { name: "δ", odd: false, nil: 0, weight: WeightRule::Zero },
    FamilyInfo { name: "p", odd: false, nil: 0, weight: WeightRule::Zero },
    FamilyInfo { name: "q", odd: true, nil: 0, weight: WeightRule::Zero },
    FamilyInfo { name: "e", odd: false, nil: 4, weight: WeightRule::Zero },
];

/// A family of generators sharing a name and a parity.
///
/// The four families `a`, `b`, `c`, `d` generate the function algebra. The
/// remaining families are auxiliary symbols used by the jet oracle: a primed
/// copy of the generators, deformation parameters, and generic jet and affine
/// coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family(u8);

impl Family {
    pub const A: Family = Family(0);
    pub const B: Family = Family(1);
    pub const C: Family = Family(2);
    pub const D: Family = Family(3);
    pub const A_PRIME: Family = Family(4);
    pub const B_PRIME: Family = Family(5);
    pub const C_PRIME: Family = Family(6);
    pub const D_PRIME: Family = Family(7);
    /// Even deformation parameter, `t² = 0`.
    pub const T: Family = Family(8);
    /// Odd deformation parameter.
    pub const TAU: Family = Family(9);
    pub const ALPHA: Family = Family(10);
    pub const BETA: Family = Family(11);
    pub const GAMMA: Family = Family(12);
    pub const DELTA: Family = Family(13);
    pub const AFF_EVEN: Family = Family(14);
    pub const AFF_ODD: Family = Family(15);
    /// Formal even translation parameter, `e⁴ = 0`.
    pub const TRANSLATION: Family = Family(16);

    /// The generator families of the function algebra, in canonical order.
    pub const FUNCTION_FAMILIES: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    fn info(self) -> &'static FamilyInfo {
        &FAMILIES[self.0 as usize]
    }

    pub fn name(self) -> &'static str {
        self.info().name
    }

    pub fn parity(self) -> Parity {
        Parity::of_bit(self.info().odd)
    }

    pub fn is_odd(self) -> bool {
        self.info().odd
    }

    pub fn nil_exponent(self) -> Option<i32> {
        match self.info().nil {
            0 => None,
            n => Some(n),
        }
    }

    pub fn is_function_family(self) -> bool {
        self.0 < 4
    }

    /// Copy between the unprimed and primed function families.
    pub fn primed(self) -> Family {
        match self.0 {
            0..=3 => Family(self.0 + 4),
            _ => self,
        }
    }

    pub fn unprimed(self) -> Family {
        match self.0 {
            4..=7 => Family(self.0 - 4),
            _ => self,
        }
    }

    pub fn from_name(name: &str) -> Result<Family, AlgebraError> {
        FAMILIES
            .iter()
            .position(|f| f.name == name)
            .map(|i| Family(i as u8))
            .ok_or_else(|| AlgebraError::UnknownFamily(name.to_string()))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single generator, e.g. `b_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub family: Family,
    pub index: u32,
}

impl GeneratorId {
    pub const fn new(family: Family, index: u32) -> Self {
        GeneratorId { family, index }
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    /// Y-eigenvalue: `n-1` for `a_n, b_n`, `n` for `c_n, d_n`.
    pub fn weight(&self) -> i64 {
        let n = self.index as i64;
        match self.family.info().weight {
            WeightRule::IndexMinusOne => n - 1,
            WeightRule::Index => n,
            WeightRule::Zero => 0,
        }
    }

    /// Z-eigenvalue: `+1` on `b`, `-1` on `c`.
    pub fn bc_charge(&self) -> i64 {
        match self.family.unprimed() {
            Family::B => 1,
            Family::C => -1,
            _ => 0,
        }
    }

    /// Constant value of a degenerate function generator:
    /// `a_0 = 0`, `a_1 = 1`, `d_0 = 1`, `b_0 = c_0 = c_1 = 0`.
    pub fn degenerate_value(&self) -> Option<i64> {
        match (self.family.unprimed(), self.index) {
            (Family::A, 0) => Some(0),
            (Family::A, 1) => Some(1),
            (Family::D, 0) => Some(1),
            (Family::B, 0) | (Family::C, 0) | (Family::C, 1) => Some(0),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

/// Canonical monomial: sorted even part with nonzero exponents and a strictly
/// ascending list of odd generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SuperMonomial {
    even: Vec<(GeneratorId, i32)>,
    odd: Vec<GeneratorId>,
}

/// Canonicalize a product of generator powers taken in the given order.
///
/// Returns `None` when the product vanishes (repeated odd generator or a
/// nilpotent family raised past its order), otherwise the sign picked up by
/// sorting the odd factors and the canonical monomial.
pub fn normalize_monomial(factors: &[(GeneratorId, i32)]) -> Option<(bool, SuperMonomial)> {
    let mut even: BTreeMap<GeneratorId, i32> = BTreeMap::new();
    let mut odd: Vec<GeneratorId> = Vec::new();
    for &(g, e) in factors {
        if e == 0 {
            continue;
        }
        if g.family.is_odd() {
            if e != 1 {
                return None;
            }
            odd.push(g);
        } else {
            *even.entry(g).or_insert(0) += e;
        }
    }
    // insertion sort, counting transpositions
    let mut negate = false;
    for i in 1..odd.len() {
        let mut j = i;
        while j > 0 && odd[j - 1] > odd[j] {
            odd.swap(j - 1, j);
            negate = !negate;
            j -= 1;
        }
    }
    if odd.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut ev = Vec::with_capacity(even.len());
    for (g, e) in even {
        if e == 0 {
            continue;
        }
        if let Some(nil) = g.family.nil_exponent() {
            if e >= nil {
                return None;
            }
        }
        ev.push((g, e));
    }
    Some((negate, SuperMonomial { even: ev, odd }))
}

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial::default()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn even_part(&self) -> &[(GeneratorId, i32)] {
        &self.even
    }

    pub fn odd_part(&self) -> &[GeneratorId] {
        &self.odd
    }

    pub fn parity(&self) -> Parity {
        Parity::of_bit(self.odd.len() % 2 == 1)
    }

    pub fn weight(&self) -> i64 {
        self.even.iter().map(|(g, e)| g.weight() * *e as i64).sum::<i64>()
            + self.odd.iter().map(GeneratorId::weight).sum::<i64>()
    }

    pub fn bc_charge(&self) -> i64 {
        self.odd.iter().map(GeneratorId::bc_charge).sum()
    }

    /// Sum of `index * exponent` over all factors.
    pub fn index_degree(&self) -> i64 {
        self.even.iter().map(|(g, e)| g.index as i64 * *e as i64).sum::<i64>()
            + self.odd.iter().map(|g| g.index as i64).sum::<i64>()
    }

    pub fn factor_count(&self) -> usize {
        self.even.iter().map(|(_, e)| e.unsigned_abs() as usize).sum::<usize>() + self.odd.len()
    }

    /// The factors in canonical order, even part first.
    pub fn factors(&self) -> Vec<(GeneratorId, i32)> {
        self.even.iter().copied().chain(self.odd.iter().map(|&g| (g, 1))).collect()
    }

    pub fn exponent(&self, g: GeneratorId) -> i32 {
        if g.family.is_odd() {
            self.odd.contains(&g) as i32
        } else {
            self.even.iter().find(|(h, _)| *h == g).map_or(0, |(_, e)| *e)
        }
    }

    pub fn contains_family(&self, family: Family) -> bool {
        self.even.iter().any(|(g, _)| g.family == family) || self.odd.iter().any(|g| g.family == family)
    }

    /// Product of two canonical monomials. `None` when it vanishes; otherwise
    /// the Koszul sign and the canonical product.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(bool, SuperMonomial)> {
        let mut even = Vec::with_capacity(self.even.len() + other.even.len());
        let (mut i, mut j) = (0, 0);
        while i < self.even.len() || j < other.even.len() {
            let ord = match (self.even.get(i), other.even.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    even.push(self.even[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    even.push(other.even[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let g = self.even[i].0;
                    let e = self.even[i].1 + other.even[j].1;
                    if let Some(nil) = g.family.nil_exponent() {
                        if e >= nil {
                            return None;
                        }
                    }
                    if e != 0 {
                        even.push((g, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let mut negate = false;
        let (mut i, mut j) = (0, 0);
        while i < self.odd.len() || j < other.odd.len() {
            match (self.odd.get(i), other.odd.get(j)) {
                (Some(x), Some(y)) if x == y => return None,
                (Some(x), Some(y)) if x > y => {
                    // y jumps over the remaining factors of self
                    if (self.odd.len() - i) % 2 == 1 {
                        negate = !negate;
                    }
                    odd.push(*y);
                    j += 1;
                }
                (Some(x), _) => {
                    odd.push(*x);
                    i += 1;
                }
                (None, Some(y)) => {
                    odd.push(*y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Some((negate, SuperMonomial { even, odd }))
    }

    /// Key used for deterministic output order.
    pub fn display_key(&self) -> (i64, i64, &SuperMonomial) {
        (self.index_degree(), self.weight(), self)
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, e) in self.factors() {
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

/// Per-term grading information.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TermGrading {
    pub monomial: String,
    pub parity: Parity,
    pub weight: i64,
    pub bc_charge: i64,
}

/// Element of a supercommutative polynomial ring with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SuperPoly {
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperPoly {
    pub fn zero() -> Self {
        SuperPoly::default()
    }

    pub fn one() -> Self {
        SuperPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SuperPoly::monomial(SuperMonomial::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        SuperPoly::constant(rat(n))
    }

    pub fn monomial(m: SuperMonomial, c: Rational) -> Self {
        let mut p = SuperPoly::zero();
        p.add_term(m, c);
        p
    }

    /// A generator, with degenerate function generators replaced by constants.
    pub fn generator(g: GeneratorId) -> Self {
        if let Some(v) = g.degenerate_value() {
            return SuperPoly::integer(v);
        }
        SuperPoly::raw_generator(g)
    }

    /// A generator without degenerate-index resolution (auxiliary symbols).
    pub fn raw_generator(g: GeneratorId) -> Self {
        let m = SuperMonomial { even: if g.family.is_odd() { vec![] } else { vec![(g, 1)] }, odd: if g.family.is_odd() { vec![g] } else { vec![] } };
        SuperPoly::monomial(m, Rational::one())
    }

    pub fn gen(family: Family, index: u32) -> Self {
        SuperPoly::generator(GeneratorId::new(family, index))
    }

    /// Ordered product of generator powers, signs from sorting odd factors.
    pub fn from_factors(factors: &[(GeneratorId, i32)]) -> Self {
        let mut p = SuperPoly::one();
        for &(g, e) in factors {
            let x = SuperPoly::generator(g);
            p = &p * &x.pow_signed(e);
        }
        p
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Rational) {
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

    pub fn is_one(&self) -> bool {
        *self == SuperPoly::one()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (SuperMonomial, Rational)> {
        self.terms.into_iter()
    }

    /// Terms in deterministic display order.
    pub fn sorted_terms(&self) -> Vec<(&SuperMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_key().cmp(&b.0.display_key()));
        v
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&SuperMonomial::one())
    }

    pub fn scale(&self, c: &Rational) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero();
        }
        SuperPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> SuperPoly {
        let mut acc = SuperPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn pow_signed(&self, e: i32) -> SuperPoly {
        if e >= 0 {
            self.pow(e as u32)
        } else {
            self.try_inverse().expect("negative power of a non-invertible element").pow((-e) as u32)
        }
    }

    /// Parity of a homogeneous element; `None` for zero or mixed parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(SuperMonomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn parity_component(&self, p: Parity) -> SuperPoly {
        self.filter(|m| m.parity() == p)
    }

    pub fn weight_component(&self, w: i64) -> SuperPoly {
        self.filter(|m| m.weight() == w)
    }

    pub fn filter(&self, keep: impl Fn(&SuperMonomial) -> bool) -> SuperPoly {
        SuperPoly { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn grading(&self) -> Vec<TermGrading> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, _)| TermGrading { monomial: m.to_string(), parity: m.parity(), weight: m.weight(), bc_charge: m.bc_charge() })
            .collect()
    }

    pub fn contains_family(&self, family: Family) -> bool {
        self.terms.keys().any(|m| m.contains_family(family))
    }

    /// Algebra morphism given by the images of generators. Factors are
    /// substituted in canonical order, so the map must preserve parity.
    pub fn substitute(&self, image: &mut impl FnMut(GeneratorId) -> SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            let mut p = SuperPoly::constant(c.clone());
            for (g, e) in m.factors() {
                let x = image(g);
                let xe = if e >= 0 { x.pow(e as u32) } else { x.try_inverse().expect("substituted inverse").pow((-e) as u32) };
                p = &p * &xe;
                if p.is_zero() {
                    break;
                }
            }
            out += &p;
        }
        out
    }

    /// Rename generator families (parity-preserving).
    pub fn rename_families(&self, map: impl Fn(Family) -> Family) -> SuperPoly {
        self.substitute(&mut |g| SuperPoly::raw_generator(GeneratorId::new(map(g.family), g.index)))
    }

    /// Split `self = body + soul` where the soul collects every term with a
    /// nilpotent factor (odd generator or truncated even family).
    fn body_and_soul(&self) -> (SuperPoly, SuperPoly) {
        let nilpotent =
            |m: &SuperMonomial| !m.odd.is_empty() || m.even.iter().any(|(g, e)| g.family.nil_exponent().is_some() && *e > 0);
        (self.filter(|m| !nilpotent(m)), self.filter(nilpotent))
    }

    /// Inverse of an even element whose body is a single (Laurent) monomial.
    pub fn try_inverse(&self) -> Result<SuperPoly, AlgebraError> {
        let (body, soul) = self.body_and_soul();
        if body.len() != 1 {
            return Err(AlgebraError::NotInvertible(self.to_string()));
        }
        let (m, c) = body.terms.iter().next().unwrap();
        if !m.odd.is_empty() {
            return Err(AlgebraError::NotInvertible(self.to_string()));
        }
        let inv_m = SuperMonomial { even: m.even.iter().map(|&(g, e)| (g, -e)).collect(), odd: vec![] };
        let body_inv = SuperPoly::monomial(inv_m, c.recip());
        // (body (1 + n))^{-1} = body^{-1} Σ (-n)^k
        let n = &body_inv * &soul;
        let minus_n = -&n;
        let mut sum = SuperPoly::one();
        let mut power = SuperPoly::one();
        loop {
            power = &power * &minus_n;
            if power.is_zero() {
                break;
            }
            sum += &power;
        }
        Ok(&body_inv * &sum)
    }

    /// Coefficient of a degree-one occurrence of the parameter generator `p`.
    ///
    /// With `left == true` the coefficient `q` is defined by `term = p * q`,
    /// otherwise by `term = q * p`. Terms of higher degree in `p` are ignored.
    pub fn linear_coefficient(&self, p: GeneratorId, left: bool) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(p) != 1 {
                continue;
            }
            let mut rest = m.clone();
            if p.family.is_odd() {
                let pos = rest.odd.iter().position(|&g| g == p).unwrap();
                rest.odd.remove(pos);
                // p sits at position `pos` in canonical order
                let negate = if left { pos % 2 == 1 } else { (m.odd.len() - 1 - pos) % 2 == 1 };
                out.add_term(rest, if negate { -c.clone() } else { c.clone() });
            } else {
                rest.even.retain(|(g, _)| *g != p);
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Terms that do not involve `p` at all.
    pub fn without(&self, p: GeneratorId) -> SuperPoly {
        self.filter(|m| m.exponent(p) == 0)
    }
}

impl<'a> Add<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::AddAssign<&SuperPoly> for SuperPoly {
    fn add_assign(&mut self, rhs: &SuperPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&SuperPoly> for SuperPoly {
    fn sub_assign(&mut self, rhs: &SuperPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        SuperPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<'a> Mul<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                if let Some((negate, m)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if negate { -c } else { c });
                }
            }
        }
        out
    }
}

// owned and mixed operands delegate to the reference impls
macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<SuperPoly> for SuperPoly {
            type Output = SuperPoly;
            fn $f(self, rhs: SuperPoly) -> SuperPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&SuperPoly> for SuperPoly {
            type Output = SuperPoly;
            fn $f(self, rhs: &SuperPoly) -> SuperPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<SuperPoly> for &SuperPoly {
            type Output = SuperPoly;
            fn $f(self, rhs: SuperPoly) -> SuperPoly {
                self.$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        -&self
    }
}

pub(crate) fn fmt_signed_terms<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (Rational, T, bool)>,
) -> fmt::Result {
    // (coefficient, body, body_is_unit)
    let mut first = true;
    for (c, body, unit) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if unit {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{body}")?;
        } else {
            write!(f, "{a}*{body}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_signed_terms(f, self.sorted_terms().into_iter().map(|(m, c)| (c.clone(), m, m.is_one())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, i: u32) -> GeneratorId {
        GeneratorId::new(f, i)
    }

    #[test]
    fn normalize_examples() {
        let (neg, m) = normalize_monomial(&[(g(Family::B, 2), 1), (g(Family::B, 1), 1)]).unwrap();
        assert!(neg);
        assert_eq!(m.to_string(), "b1*b2");
        assert!(normalize_monomial(&[(g(Family::B, 1), 1), (g(Family::B, 1), 1)]).is_none());
        let (neg, m) = normalize_monomial(&[(g(Family::A, 2), 1), (g(Family::B, 1), 1), (g(Family::A, 2), 1)]).unwrap();
        assert!(!neg);
        assert_eq!(m.to_string(), "a2^2*b1");
    }

    #[test]
    fn normalize_is_idempotent() {
        let (_, m) = normalize_monomial(&[(g(Family::C, 3), 1), (g(Family::A, 2), 2), (g(Family::B, 4), 1)]).unwrap();
        let (neg, m2) = normalize_monomial(&m.factors()).unwrap();
        assert!(!neg);
        assert_eq!(m, m2);
    }

    #[test]
    fn anticommutation() {
        let b1 = SuperPoly::gen(Family::B, 1);
        let c2 = SuperPoly::gen(Family::C, 2);
        assert_eq!((&b1 * &c2).to_string(), "b1*c2");
        assert_eq!((&c2 * &b1).to_string(), "-b1*c2");
        let s = &b1 + &c2;
        assert!((&s * &s).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a2 = SuperPoly::gen(Family::A, 2);
        let one = SuperPoly::one();
        let p = &(&one + &a2) * &(&one - &a2);
        assert_eq!(p.to_string(), "1 - a2^2");
    }

    #[test]
    fn degenerate_generators() {
        assert_eq!(SuperPoly::gen(Family::A, 1), SuperPoly::one());
        assert_eq!(SuperPoly::gen(Family::D, 0), SuperPoly::one());
        for (f, i) in [(Family::A, 0), (Family::B, 0), (Family::C, 0), (Family::C, 1)] {
            assert!(SuperPoly::gen(f, i).is_zero());
        }
    }

    #[test]
    fn grading_examples() {
        let a3 = SuperPoly::gen(Family::A, 3);
        assert_eq!(a3.grading()[0].weight, 2);
        let d2 = SuperPoly::gen(Family::D, 2);
        assert_eq!(d2.grading()[0].weight, 2);
        let bc = &SuperPoly::gen(Family::B, 1) * &SuperPoly::gen(Family::C, 2);
        let gr = &bc.grading()[0];
        assert_eq!(gr.parity, Parity::Even);
        assert_eq!(gr.bc_charge, 0);
    }

    #[test]
    fn inverse_with_nilpotent_soul() {
        // (2 + b1 c2)^{-1} = 1/2 - 1/4 b1 c2
        let x = &SuperPoly::integer(2) + &(&SuperPoly::gen(Family::B, 1) * &SuperPoly::gen(Family::C, 2));
        let y = x.try_inverse().unwrap();
        assert_eq!(&x * &y, SuperPoly::one());
        let alpha = SuperPoly::raw_generator(GeneratorId::new(Family::ALPHA, 1));
        let z = &alpha + &SuperPoly::raw_generator(GeneratorId::new(Family::T, 0));
        assert_eq!(&z * &z.try_inverse().unwrap(), SuperPoly::one());
        assert!((&SuperPoly::one() + &SuperPoly::gen(Family::A, 2)).try_inverse().is_err());
    }

    #[test]
    fn linear_coefficient_placement() {
        let tau = GeneratorId::new(Family::TAU, 0);
        let t = SuperPoly::raw_generator(tau);
        let b1 = SuperPoly::gen(Family::B, 1);
        let c2 = SuperPoly::gen(Family::C, 2);
        let x = &(&b1 * &t) * &c2; // b1 τ c2
        // b1 τ c2 = τ (-b1 c2)... moving τ left past b1 costs one sign
        assert_eq!(x.linear_coefficient(tau, true), -&(&b1 * &c2));
        // b1 τ c2 = -b1 c2 τ
        assert_eq!(x.linear_coefficient(tau, false), -&(&b1 * &c2));
        let y = &t * &b1;
        assert_eq!(y.linear_coefficient(tau, true), b1);
        assert_eq!(y.linear_coefficient(tau, false), -&b1);
    }
}
