//! Truncated super jets of diffeomorphisms of the superline, the affine
//! subgroup and the factorization `G = G_1 G_2`.
//!
//! A jet `Φ(x, θ) = (A(x) + B(x)θ, C(x) + D(x)θ)` of order `N` stores the
//! Taylor coefficients with coefficients in the supercommutative ring
//! (`A, D` even, `B, C` odd), truncated in total degree with
//! `deg x = deg θ = 1`: `A, C` up to `x^N`, `B, D` up to `x^{N-1}`. With an
//! inner jet fixing the origin this truncation commutes with composition.

pub mod oracle;

use std::fmt;

use crate::error::AlgebraError;
use crate::poly::{Family, GeneratorId, Parity, SuperPoly};
use crate::uenv::LieGenerator;

/// Negate the odd part: `θ q = involution(q) θ`.
fn involution(q: &SuperPoly) -> SuperPoly {
    &q.parity_component(Parity::Even) - &q.parity_component(Parity::Odd)
}

/// `Σ_k plain_k x^k + Σ_k theta_k x^k θ`, truncated in total degree `N`.
///
/// `theta` keeps the vector length of `plain`; its last entry is always zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperFunction {
    pub plain: Vec<SuperPoly>,
    pub theta: Vec<SuperPoly>,
}

impl SuperFunction {
    pub fn zero(order: usize) -> Self {
        SuperFunction { plain: vec![SuperPoly::zero(); order + 1], theta: vec![SuperPoly::zero(); order + 1] }
    }

    pub fn constant(c: SuperPoly, order: usize) -> Self {
        let mut f = Self::zero(order);
        f.plain[0] = c;
        f
    }

    pub fn x(order: usize) -> Self {
        let mut f = Self::zero(order);
        if order >= 1 {
            f.plain[1] = SuperPoly::one();
        }
        f
    }

    pub fn theta(order: usize) -> Self {
        let mut f = Self::zero(order);
        if order >= 1 {
            f.theta[0] = SuperPoly::one();
        }
        f
    }

    pub fn order(&self) -> usize {
        self.plain.len() - 1
    }

    pub fn add(&self, other: &SuperFunction) -> SuperFunction {
        let zip = |p: &[SuperPoly], q: &[SuperPoly]| p.iter().zip(q).map(|(x, y)| x + y).collect();
        SuperFunction { plain: zip(&self.plain, &other.plain), theta: zip(&self.theta, &other.theta) }
    }

    pub fn sub(&self, other: &SuperFunction) -> SuperFunction {
        self.add(&other.left_mul(&SuperPoly::integer(-1)))
    }

    /// `c · f` with the constant on the left.
    pub fn left_mul(&self, c: &SuperPoly) -> SuperFunction {
        let m = |v: &[SuperPoly]| v.iter().map(|x| c * x).collect();
        SuperFunction { plain: m(&self.plain), theta: m(&self.theta) }
    }

    /// `f · c` with the constant on the right.
    pub fn right_mul(&self, c: &SuperPoly) -> SuperFunction {
        self.mul(&SuperFunction::constant(c.clone(), self.order()))
    }

    pub fn mul(&self, other: &SuperFunction) -> SuperFunction {
        let n = self.order();
        let conv = |p: &[SuperPoly], q: &[SuperPoly]| {
            let mut out = vec![SuperPoly::zero(); n + 1];
            for (i, x) in p.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in q.iter().enumerate().take(n + 1 - i) {
                    if !y.is_zero() {
                        out[i + j] += &(x * y);
                    }
                }
            }
            out
        };
        let plain = conv(&self.plain, &other.plain);
        let moved: Vec<SuperPoly> = other.plain.iter().map(involution).collect();
        let t1 = conv(&self.plain, &other.theta);
        let t2 = conv(&self.theta, &moved);
        SuperFunction { plain, theta: t1.iter().zip(&t2).map(|(x, y)| x + y).collect() }.truncated()
    }

    fn truncated(mut self) -> SuperFunction {
        if let Some(top) = self.theta.last_mut() {
            *top = SuperPoly::zero();
        }
        self
    }

    /// `Σ_k c_k f^k` for a power series with coefficients `c` placed on the left.
    pub fn substitute_into(coeffs: &[SuperPoly], f: &SuperFunction) -> SuperFunction {
        let n = f.order();
        let mut out = SuperFunction::zero(n);
        let mut power = SuperFunction::constant(SuperPoly::one(), n);
        for (k, c) in coeffs.iter().enumerate() {
            if k > 0 {
                power = power.mul(f);
            }
            if !c.is_zero() {
                out = out.add(&power.left_mul(c));
            }
        }
        out
    }

    /// Apply a coefficient-wise linear map.
    pub fn map(&self, mut m: impl FnMut(&SuperPoly) -> SuperPoly) -> SuperFunction {
        SuperFunction { plain: self.plain.iter().map(&mut m).collect(), theta: self.theta.iter().map(&mut m).collect() }
    }

    /// Truncate (or zero-extend) to another order.
    pub fn with_order(&self, order: usize) -> SuperFunction {
        let fit = |v: &[SuperPoly]| (0..=order).map(|k| v.get(k).cloned().unwrap_or_else(SuperPoly::zero)).collect();
        SuperFunction { plain: fit(&self.plain), theta: fit(&self.theta) }.truncated()
    }
}

impl fmt::Display for SuperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mono = |k: usize, theta: bool| {
            let x = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (x.is_empty(), theta) {
                (true, false) => String::new(),
                (true, true) => "θ".to_string(),
                (false, false) => x,
                (false, true) => format!("{x}θ"),
            }
        };
        for (theta, v) in [(false, &self.plain), (true, &self.theta)] {
            for (k, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let m = mono(k, theta);
                parts.push(match (m.is_empty(), c.len() == 1) {
                    (true, _) => c.to_string(),
                    (false, _) if c.is_one() => m,
                    (false, true) => format!("{c}*{m}"),
                    (false, false) => format!("({c})*{m}"),
                });
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Truncated super jet `(A + Bθ, C + Dθ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperJet {
    pub a: Vec<SuperPoly>,
    pub b: Vec<SuperPoly>,
    pub c: Vec<SuperPoly>,
    pub d: Vec<SuperPoly>,
}

impl SuperJet {
    pub fn identity(order: usize) -> Self {
        SuperJet::from_components(&SuperFunction::x(order), &SuperFunction::theta(order))
    }

    /// Coefficients given by a closure on `(family slot 0..4, k)`.
    pub fn from_fn(order: usize, mut coeff: impl FnMut(usize, usize) -> SuperPoly) -> Self {
        // slots 1 and 3 are θ-coefficients, kept below x^N
        let mut col = |s: usize| {
            (0..=order).map(|k| if s.is_multiple_of(2) || k < order { coeff(s, k) } else { SuperPoly::zero() }).collect()
        };
        SuperJet { a: col(0), b: col(1), c: col(2), d: col(3) }
    }

    /// Generic element of `G_2` whose coefficients are the generators of the
    /// given families (degenerate indices resolved), i.e. `a_n(φ) = a_n`.
    pub fn generic_g2(order: usize, families: [Family; 4]) -> Self {
        SuperJet::from_fn(order, |s, k| SuperPoly::generator(GeneratorId::new(families[s], k as u32)))
    }

    /// Generic jet with independent symbols `α_k, β_k, γ_k, δ_k`.
    pub fn generic(order: usize) -> Self {
        let fam = [Family::ALPHA, Family::BETA, Family::GAMMA, Family::DELTA];
        SuperJet::from_fn(order, |s, k| SuperPoly::raw_generator(GeneratorId::new(fam[s], k as u32)))
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    pub fn components(&self) -> (SuperFunction, SuperFunction) {
        (
            SuperFunction { plain: self.a.clone(), theta: self.b.clone() },
            SuperFunction { plain: self.c.clone(), theta: self.d.clone() },
        )
    }

    pub fn from_components(even: &SuperFunction, odd: &SuperFunction) -> Self {
        SuperJet { a: even.plain.clone(), b: even.theta.clone(), c: odd.plain.clone(), d: odd.theta.clone() }
    }

    /// Coefficient of `x^n` in the component of the given function family,
    /// i.e. the value of the generator `family_n` on this jet.
    pub fn coefficient(&self, family: Family, n: usize) -> Result<SuperPoly, AlgebraError> {
        let (col, needed) = match family.unprimed() {
            Family::A => (&self.a, n),
            Family::B => (&self.b, n + 1),
            Family::C => (&self.c, n),
            Family::D => (&self.d, n + 1),
            _ => return Err(AlgebraError::UnknownFamily(family.name().to_string())),
        };
        if needed > self.order() {
            return Err(AlgebraError::InsufficientOrder { order: self.order(), needed });
        }
        Ok(col[n].clone())
    }

    /// `φ(0,0) = 0` and `Jφ(0,0) = 1`.
    pub fn is_in_g2(&self) -> bool {
        self.a[0].is_zero()
            && self.b[0].is_zero()
            && self.c[0].is_zero()
            && self.order() >= 1
            && self.c[1].is_zero()
            && self.a[1].is_one()
            && self.d[0].is_one()
    }

    pub fn map(&self, mut m: impl FnMut(&SuperPoly) -> SuperPoly) -> SuperJet {
        let mut col = |v: &[SuperPoly]| v.iter().map(&mut m).collect();
        SuperJet { a: col(&self.a), b: col(&self.b), c: col(&self.c), d: col(&self.d) }
    }

    pub fn with_order(&self, order: usize) -> SuperJet {
        let (e, o) = self.components();
        SuperJet::from_components(&e.with_order(order), &o.with_order(order))
    }

    /// `JΦ(0,0)`.
    pub fn jacobian0(&self) -> SuperMatrix {
        SuperMatrix {
            a: self.a.get(1).cloned().unwrap_or_else(SuperPoly::zero),
            b: self.b[0].clone(),
            c: self.c.get(1).cloned().unwrap_or_else(SuperPoly::zero),
            d: self.d[0].clone(),
        }
    }
}

impl fmt::Display for SuperJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, o) = self.components();
        write!(f, "({e}, {o})")
    }
}

/// `φ ∘ ψ`: `(A(f) + B(f)g, C(f) + D(f)g)` with `(f, g) = ψ`.
pub fn compose(phi: &SuperJet, psi: &SuperJet) -> Result<SuperJet, AlgebraError> {
    if phi.order() != psi.order() {
        return Err(AlgebraError::OrderMismatch(phi.order(), psi.order()));
    }
    let (f, g) = psi.components();
    let even = SuperFunction::substitute_into(&phi.a, &f).add(&SuperFunction::substitute_into(&phi.b, &f).mul(&g));
    let odd = SuperFunction::substitute_into(&phi.c, &f).add(&SuperFunction::substitute_into(&phi.d, &f).mul(&g));
    Ok(SuperJet::from_components(&even, &odd))
}

/// Inverse of a jet fixing the origin, solved degree by degree.
pub fn invert(phi: &SuperJet) -> Result<SuperJet, AlgebraError> {
    if !phi.a[0].is_zero() || !phi.c[0].is_zero() {
        return Err(AlgebraError::NotOriginFixing);
    }
    let n = phi.order();
    let (linear, g2) = factorize(phi)?;
    // φ = id + h on G_2, so φ ∘ ψ = id reads ψ = id − h ∘ ψ; each pass fixes
    // one more degree in the grading deg x = deg θ = 1.
    let id = SuperJet::identity(n);
    let (ie, io) = id.components();
    let (ge, go) = g2.components();
    let h = SuperJet::from_components(&ge.sub(&ie), &go.sub(&io));
    let mut psi = id.clone();
    for _ in 0..=n + 1 {
        let (he, ho) = compose(&h, &psi)?.components();
        let next = SuperJet::from_components(&ie.sub(&he), &io.sub(&ho));
        if next == psi {
            break;
        }
        psi = next;
    }
    compose(&psi, &linear.inverse()?.to_jet(n))
}

/// Even-even / odd block 2×2 supermatrix `(a b; c d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperMatrix {
    pub a: SuperPoly,
    pub b: SuperPoly,
    pub c: SuperPoly,
    pub d: SuperPoly,
}

impl SuperMatrix {
    pub fn identity() -> Self {
        SuperMatrix { a: SuperPoly::one(), b: SuperPoly::zero(), c: SuperPoly::zero(), d: SuperPoly::one() }
    }

    pub fn mul(&self, o: &SuperMatrix) -> SuperMatrix {
        SuperMatrix {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    /// `(1/da) (d + bc/a, −b; −c, a + cb/d)`.
    pub fn inverse(&self) -> Result<SuperMatrix, AlgebraError> {
        let ia = self.a.try_inverse()?;
        let id = self.d.try_inverse()?;
        let s = &ia * &id;
        Ok(SuperMatrix {
            a: &s * &(&self.d + &(&(&self.b * &self.c) * &ia)),
            b: -&(&s * &self.b),
            c: -&(&s * &self.c),
            d: &s * &(&self.a + &(&(&self.c * &self.b) * &id)),
        })
    }

    /// `M (u, v)ᵀ` for a column of super functions.
    pub fn apply(&self, u: &SuperFunction, v: &SuperFunction) -> (SuperFunction, SuperFunction) {
        (u.left_mul(&self.a).add(&v.left_mul(&self.b)), u.left_mul(&self.c).add(&v.left_mul(&self.d)))
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}; {}, {}]", self.a, self.b, self.c, self.d)
    }
}

/// Affine map `σ(x, θ) = M (x, θ)ᵀ + (e, f)ᵀ`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSuper {
    pub matrix: SuperMatrix,
    pub e: SuperPoly,
    pub f: SuperPoly,
}

impl AffineSuper {
    pub fn identity() -> Self {
        AffineSuper { matrix: SuperMatrix::identity(), e: SuperPoly::zero(), f: SuperPoly::zero() }
    }

    /// Generic affine map with symbols from the affine families; the
    /// translation `e` is a formal nilpotent so that compositions with
    /// truncated jets stay exact.
    pub fn generic() -> Self {
        let even = |i| SuperPoly::raw_generator(GeneratorId::new(Family::AFF_EVEN, i));
        let odd = |i| SuperPoly::raw_generator(GeneratorId::new(Family::AFF_ODD, i));
        AffineSuper {
            matrix: SuperMatrix { a: even(1), b: odd(1), c: odd(2), d: even(2) },
            e: SuperPoly::raw_generator(GeneratorId::new(Family::TRANSLATION, 1)),
            f: odd(3),
        }
    }

    pub fn to_jet(&self, order: usize) -> SuperJet {
        let (e, o) = self.components(order);
        SuperJet::from_components(&e, &o)
    }

    pub fn components(&self, order: usize) -> (SuperFunction, SuperFunction) {
        let (u, v) = self.matrix.apply(&SuperFunction::x(order), &SuperFunction::theta(order));
        (
            u.add(&SuperFunction::constant(self.e.clone(), order)),
            v.add(&SuperFunction::constant(self.f.clone(), order)),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineSuper) -> AffineSuper {
        let m = &self.matrix;
        AffineSuper {
            matrix: m.mul(&other.matrix),
            e: &(&(&m.a * &other.e) + &(&m.b * &other.f)) + &self.e,
            f: &(&(&m.c * &other.e) + &(&m.d * &other.f)) + &self.f,
        }
    }

    pub fn inverse(&self) -> Result<AffineSuper, AlgebraError> {
        let inv = self.matrix.inverse()?;
        let e = -&(&(&inv.a * &self.e) + &(&inv.b * &self.f));
        let f = -&(&(&inv.c * &self.e) + &(&inv.d * &self.f));
        Ok(AffineSuper { matrix: inv, e, f })
    }

    pub fn map(&self, mut m: impl FnMut(&SuperPoly) -> SuperPoly) -> AffineSuper {
        AffineSuper {
            matrix: SuperMatrix { a: m(&self.matrix.a), b: m(&self.matrix.b), c: m(&self.matrix.c), d: m(&self.matrix.d) },
            e: m(&self.e),
            f: m(&self.f),
        }
    }
}

impl fmt::Display for AffineSuper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, o) = self.components(1);
        write!(f, "({e}, {o})")
    }
}

/// `Φ = π_1(Φ) ∘ π_2(Φ)` with `π_1(Φ) = (JΦ(0,0), Φ(0,0))` and
/// `π_2(Φ) = JΦ(0,0)^{-1} (Φ − Φ(0,0))`.
pub fn factorize(phi: &SuperJet) -> Result<(AffineSuper, SuperJet), AlgebraError> {
    let n = phi.order();
    let j = phi.jacobian0();
    let sigma = AffineSuper { matrix: j.clone(), e: phi.a[0].clone(), f: phi.c[0].clone() };
    let (u, v) = phi.components();
    let u = u.sub(&SuperFunction::constant(sigma.e.clone(), n));
    let v = v.sub(&SuperFunction::constant(sigma.f.clone(), n));
    let (pu, pv) = j.inverse()?.apply(&u, &v);
    Ok((sigma, SuperJet::from_components(&pu, &pv)))
}

/// `φ ▷ σ = π_1(φσ)` and `φ ◁ σ = π_2(φσ)`.
pub fn group_actions(phi: &SuperJet, sigma: &AffineSuper) -> Result<(AffineSuper, SuperJet), AlgebraError> {
    factorize(&compose(phi, &sigma.to_jet(phi.order()))?)
}

/// `e^{p g}` for a deformation parameter `p` with `p² = 0`.
pub fn exp_affine(g: LieGenerator, param: &SuperPoly) -> Result<AffineSuper, AlgebraError> {
    if param.parity() != Some(g.parity()) {
        return Err(AlgebraError::ParityMismatch(g.name().to_string()));
    }
    let one = SuperPoly::one();
    let mut s = AffineSuper::identity();
    match g {
        LieGenerator::X => s.e = param.clone(),
        LieGenerator::Y => s.matrix.a = &one + param,
        LieGenerator::Z => s.matrix.d = &one + param,
        // x + θτ: the parameter sits to the right of θ
        LieGenerator::U => s.matrix.b = -param,
        LieGenerator::V => s.matrix.c = -param,
        LieGenerator::W => s.f = -param,
    }
    Ok(s)
}

/// The even and odd deformation parameters `t` and `τ`.
pub fn parameter(parity: Parity) -> GeneratorId {
    match parity {
        Parity::Even => GeneratorId::new(Family::T, 1),
        Parity::Odd => GeneratorId::new(Family::TAU, 1),
    }
}

/// Where the odd parameter is moved before its coefficient is read off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Placement {
    Left,
    Right,
}

/// `d/dp|_{p=0}`: coefficient of the first-order term in `p`.
pub fn derivative(x: &SuperPoly, p: GeneratorId, placement: Placement) -> SuperPoly {
    x.linear_coefficient(p, placement == Placement::Left)
}

#[cfg(test)]
mod tests;
