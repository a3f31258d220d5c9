//! Parity-graded tensor products with Koszul-signed multiplication.
//!
//! A [`GradedTensor`] of arity `n` is a rational combination of pure tensors
//! whose legs are basis monomials of either the function algebra or the
//! enveloping algebra. Basis monomials are parity-homogeneous, so every stored
//! term has definite leg parities.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::poly::{fmt_signed_terms, koszul, Parity, Rational, SuperMonomial, SuperPoly};
use crate::uenv::{PbwMonomial, UEnvElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum LegKind {
    F,
    U,
}

/// A basis monomial sitting in one tensor leg.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Leg {
    F(SuperMonomial),
    U(PbwMonomial),
}

impl Leg {
    pub fn one(kind: LegKind) -> Leg {
        match kind {
            LegKind::F => Leg::F(SuperMonomial::one()),
            LegKind::U => Leg::U(PbwMonomial::one()),
        }
    }

    pub fn kind(&self) -> LegKind {
        match self {
            Leg::F(_) => LegKind::F,
            Leg::U(_) => LegKind::U,
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            Leg::F(m) => m.parity(),
            Leg::U(m) => m.parity(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Leg::F(m) => m.is_one(),
            Leg::U(m) => m.is_one(),
        }
    }

    fn display_key(&self) -> (u8, i64, i64, &Leg) {
        match self {
            Leg::F(m) => (0, m.index_degree(), m.weight(), self),
            Leg::U(_) => (1, 0, 0, self),
        }
    }

    /// Leg-wise product as a linear combination of legs.
    fn mul(&self, other: &Leg, idx: usize) -> Result<Vec<(Leg, Rational)>, AlgebraError> {
        match (self, other) {
            (Leg::F(x), Leg::F(y)) => Ok(x
                .mul(y)
                .map(|(neg, m)| vec![(Leg::F(m), if neg { -Rational::one() } else { Rational::one() })])
                .unwrap_or_default()),
            (Leg::U(x), Leg::U(y)) => {
                Ok(UEnvElement::mul_monomials(x, y).into_terms().map(|(m, c)| (Leg::U(m), c)).collect())
            }
            _ => Err(AlgebraError::LegKindMismatch(idx)),
        }
    }
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leg::F(m) => write!(f, "{m}"),
            Leg::U(m) => write!(f, "{m}"),
        }
    }
}

/// An element of an algebra, used to build pure tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LegElement {
    F(SuperPoly),
    U(UEnvElement),
}

impl LegElement {
    fn terms(&self) -> Vec<(Leg, Rational)> {
        match self {
            LegElement::F(p) => p.terms().map(|(m, c)| (Leg::F(m.clone()), c.clone())).collect(),
            LegElement::U(u) => u.terms().map(|(m, c)| (Leg::U(*m), c.clone())).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedTensor {
    arity: usize,
    terms: BTreeMap<Vec<Leg>, Rational>,
}

impl GradedTensor {
    pub fn zero(arity: usize) -> Self {
        GradedTensor { arity, terms: BTreeMap::new() }
    }

    pub fn unit(kinds: &[LegKind]) -> Self {
        let mut t = GradedTensor::zero(kinds.len());
        t.add_term(kinds.iter().map(|k| Leg::one(*k)).collect(), Rational::one());
        t
    }

    /// `x_1 ⊗ ... ⊗ x_n`, expanded multilinearly.
    pub fn pure(legs: &[LegElement]) -> Self {
        let mut acc: Vec<(Vec<Leg>, Rational)> = vec![(vec![], Rational::one())];
        for leg in legs {
            let terms = leg.terms();
            let mut next = Vec::with_capacity(acc.len() * terms.len());
            for (prefix, c) in &acc {
                for (l, d) in &terms {
                    let mut p = prefix.clone();
                    p.push(l.clone());
                    next.push((p, c * d));
                }
            }
            acc = next;
        }
        let mut t = GradedTensor::zero(legs.len());
        for (l, c) in acc {
            t.add_term(l, c);
        }
        t
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<Leg>, Rational)>) -> Self {
        let mut t = GradedTensor::zero(arity);
        for (l, c) in terms {
            t.add_term(l, c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, legs: Vec<Leg>, c: Rational) {
        debug_assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(legs) {
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

    pub fn add_assign(&mut self, other: &GradedTensor) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &GradedTensor, s: &Rational) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * s);
        }
    }

    pub fn sub(&self, other: &GradedTensor) -> GradedTensor {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, s: &Rational) -> GradedTensor {
        let mut out = GradedTensor::zero(self.arity);
        out.add_scaled(self, s);
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Leg>, &Rational)> {
        self.terms.iter()
    }

    pub fn sorted_terms(&self) -> Vec<(&Vec<Leg>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let ka: Vec<_> = a.0.iter().map(Leg::display_key).collect();
            let kb: Vec<_> = b.0.iter().map(Leg::display_key).collect();
            ka.cmp(&kb)
        });
        v
    }

    /// Koszul-signed product: `(x⊗y)(x'⊗y') = (-1)^{|y||x'|} xx'⊗yy'`,
    /// extended to any arity.
    pub fn tensor_mul(&self, other: &GradedTensor) -> Result<GradedTensor, AlgebraError> {
        if self.arity != other.arity {
            return Err(AlgebraError::ArityMismatch(self.arity, other.arity));
        }
        let mut out = GradedTensor::zero(self.arity);
        for (xs, c1) in &self.terms {
            for (ys, c2) in &other.terms {
                // y_j moves past x_i for every i > j
                let mut negate = false;
                let mut odd_x_after = 0usize;
                for j in (0..self.arity).rev() {
                    if ys[j].parity().is_odd() && odd_x_after % 2 == 1 {
                        negate = !negate;
                    }
                    if xs[j].parity().is_odd() {
                        odd_x_after += 1;
                    }
                }
                let mut acc: Vec<(Vec<Leg>, Rational)> = vec![(Vec::with_capacity(self.arity), c1 * c2)];
                for j in 0..self.arity {
                    let prod = xs[j].mul(&ys[j], j)?;
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (prefix, c) in &acc {
                        for (l, d) in &prod {
                            let mut p = prefix.clone();
                            p.push(l.clone());
                            next.push((p, c * d));
                        }
                    }
                    acc = next;
                    if acc.is_empty() {
                        break;
                    }
                }
                for (l, c) in acc {
                    out.add_term(l, if negate { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Apply a parity-preserving linear map to leg `i`, replacing it with the
    /// `m` legs the map produces.
    pub fn expand_leg(&self, i: usize, mut map: impl FnMut(&Leg) -> GradedTensor) -> GradedTensor {
        let mut out: Option<GradedTensor> = None;
        for (legs, c) in &self.terms {
            let image = map(&legs[i]);
            let out = out.get_or_insert_with(|| GradedTensor::zero(self.arity - 1 + image.arity));
            for (mid, d) in &image.terms {
                let mut l = Vec::with_capacity(out.arity);
                l.extend_from_slice(&legs[..i]);
                l.extend(mid.iter().cloned());
                l.extend_from_slice(&legs[i + 1..]);
                out.add_term(l, c * d);
            }
        }
        out.unwrap_or_else(|| GradedTensor::zero(self.arity))
    }

    /// Parity of each leg of the unique term, for single-term tensors.
    pub fn leg_parities(legs: &[Leg]) -> Vec<Parity> {
        legs.iter().map(Leg::parity).collect()
    }

    /// Sum of leg parities.
    pub fn term_parity(legs: &[Leg]) -> Parity {
        legs.iter().fold(Parity::Even, |p, l| p + l.parity())
    }

    /// Koszul sign for reordering the legs of one term by `perm`
    /// (`perm[k]` is the old position of the new leg `k`).
    pub fn permutation_sign(legs: &[Leg], perm: &[usize]) -> bool {
        let mut negate = false;
        for a in 0..perm.len() {
            for b in a + 1..perm.len() {
                if perm[a] > perm[b] && koszul(legs[perm[a]].parity(), legs[perm[b]].parity()) {
                    negate = !negate;
                }
            }
        }
        negate
    }
}

impl fmt::Display for GradedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Body<'a>(&'a [Leg]);
        impl fmt::Display for Body<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, l) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" (x) ")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
        fmt_signed_terms(f, self.sorted_terms().into_iter().map(|(l, c)| (c.clone(), Body(l), false)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Family;

    fn f(p: SuperPoly) -> LegElement {
        LegElement::F(p)
    }

    #[test]
    fn koszul_sign_across_odd_pair() {
        let one = SuperPoly::one();
        let b1 = SuperPoly::gen(Family::B, 1);
        let c2 = SuperPoly::gen(Family::C, 2);
        let x = GradedTensor::pure(&[f(one.clone()), f(b1)]);
        let y = GradedTensor::pure(&[f(c2.clone()), f(one.clone())]);
        let expect = GradedTensor::pure(&[f(-&c2), f(SuperPoly::gen(Family::B, 1))]);
        assert_eq!(x.tensor_mul(&y).unwrap(), expect);
    }

    #[test]
    fn even_legs_no_sign() {
        let one = SuperPoly::one();
        let a2 = SuperPoly::gen(Family::A, 2);
        let x = GradedTensor::pure(&[f(a2.clone()), f(one.clone())]);
        let y = GradedTensor::pure(&[f(one), f(a2.clone())]);
        assert_eq!(x.tensor_mul(&y).unwrap(), GradedTensor::pure(&[f(a2.clone()), f(a2)]));
    }

    #[test]
    fn odd_square_in_leg_vanishes() {
        let b1 = SuperPoly::gen(Family::B, 1);
        let x = GradedTensor::pure(&[f(b1.clone()), f(b1.clone())]);
        let y = GradedTensor::pure(&[f(b1), f(SuperPoly::one())]);
        assert!(x.tensor_mul(&y).unwrap().is_zero());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let x = GradedTensor::unit(&[LegKind::F, LegKind::F]);
        let y = GradedTensor::unit(&[LegKind::F]);
        assert_eq!(x.tensor_mul(&y), Err(AlgebraError::ArityMismatch(2, 1)));
        let z = GradedTensor::unit(&[LegKind::F, LegKind::U]);
        assert!(matches!(x.tensor_mul(&z), Err(AlgebraError::LegKindMismatch(1))));
    }
}
