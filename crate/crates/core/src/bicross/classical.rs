//! Comparison with the classical (non-super) Hopf algebra in the quotient
//! killing `b_n, c_n, d_n (n ≥ 1)` and `Z, U, V, W`.
//!
//! The U-side kernel is only a coideal: `[U, V] = -(Y + Z)` puts `Y` in any
//! two-sided ideal containing `U, V, Z`. The projection is therefore applied
//! linearly, term by term, and only coalgebra statements are asserted for it.

use num_traits::{One, Zero};

use super::{h_tensor, Bicross, HElement};
use crate::ffun::{a_power_coefficients, generators, FHopf};
use crate::poly::{rat, Family, GeneratorId, Rational, SuperMonomial, SuperPoly};
use crate::report::{CheckResult, Report};
use crate::tensor::{GradedTensor, Leg, LegElement};
use crate::uenv::{LieGenerator, PbwMonomial, UEnvElement};

pub fn in_kernel_f(m: &SuperMonomial) -> bool {
    [Family::B, Family::C, Family::D].iter().any(|&f| m.contains_family(f))
}

pub fn in_kernel_u(m: &PbwMonomial) -> bool {
    [LieGenerator::Z, LieGenerator::U, LieGenerator::V, LieGenerator::W].iter().any(|&g| m.contains(g))
}

fn leg_in_kernel(l: &Leg) -> bool {
    match l {
        Leg::F(m) => in_kernel_f(m),
        Leg::U(m) => in_kernel_u(m),
    }
}

pub fn project_f(x: &SuperPoly) -> SuperPoly {
    x.filter(|m| !in_kernel_f(m))
}

/// Drop every term with a kernel factor in some leg.
pub fn project_tensor(t: &GradedTensor) -> GradedTensor {
    GradedTensor::from_terms(
        t.arity(),
        t.terms().filter(|(legs, _)| !legs.iter().any(leg_in_kernel)).map(|(l, c)| (l.clone(), c.clone())),
    )
}

pub fn project_h(x: &HElement) -> HElement {
    HElement::from_tensor(project_tensor(x.as_tensor()))
}

fn factorial(n: u64) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * rat(k as i64))
}

/// Tuples `(c_1, …, c_{n+1})` with `Σ c_j = n` and `Σ j c_j = 2n`.
pub fn lambda_set(n: usize) -> Vec<Vec<usize>> {
    fn go(j: usize, len: usize, count: usize, weight: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j > len {
            if count == 0 && weight == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..=count.min(weight / j) {
            cur.push(c);
            go(j + 1, len, count - c, weight - j * c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n + 1, n, 2 * n, &mut Vec::new(), &mut out);
    out
}

/// The classical closed formula for `S(a_{n+1})`.
pub fn lambda_antipode(n: usize) -> SuperPoly {
    let mut out = SuperPoly::zero();
    for c in lambda_set(n) {
        let c1 = c[0];
        let mut coeff = factorial((2 * n - c1) as u64) * factorial(c1 as u64) / factorial(n as u64 + 1);
        for &cj in &c {
            coeff /= factorial(cj as u64);
        }
        if (n - c1) % 2 == 1 {
            coeff = -coeff;
        }
        let factors: Vec<(GeneratorId, i32)> = c
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &cj)| cj > 0)
            .map(|(j, &cj)| (GeneratorId::new(Family::A, j as u32 + 1), cj as i32))
            .collect();
        out += &SuperPoly::from_factors(&factors).scale(&coeff);
    }
    out
}

fn pair(x: &HElement, y: &HElement) -> GradedTensor {
    h_tensor(&[x, y])
}

/// Lifted `δ_1 = 2a_2 # 1` and `δ_{n+1} = [X̂, δ_n]`.
pub fn deltas(max_n: usize) -> Vec<HElement> {
    let x = HElement::lie(LieGenerator::X);
    let mut out = vec![HElement::f(SuperPoly::gen(Family::A, 2).scale(&rat(2)))];
    while out.len() < max_n + 1 {
        let next = x.commutator(out.last().expect("non-empty"));
        out.push(next);
    }
    out
}

#[allow(clippy::needless_range_loop)]
pub fn classical_check(max_n: usize) -> Report {
    let max_n = max_n.max(2);
    let mut report = Report::new("classical");
    let b = Bicross::new(max_n as u32 + 3);
    let x = HElement::lie(LieGenerator::X);
    let y = HElement::lie(LieGenerator::Y);
    let one = HElement::one();
    let ds = deltas(max_n);

    let mut rel = CheckResult::new("[Ŷ,X̂] = X̂, [Ŷ,δ_n] = nδ_n, [δ_m,δ_n] = 0");
    rel.compare("[Y,X]", &y.commutator(&x), &x);
    for (i, d) in ds.iter().enumerate().take(max_n) {
        let n = i + 1;
        rel.compare(format!("[Y,δ{n}]"), &y.commutator(d), &d.scale(&rat(n as i64)));
        for (j, e) in ds.iter().enumerate().take(max_n) {
            rel.compare(format!("[δ{n},δ{}]", j + 1), &d.commutator(e), &HElement::zero());
        }
    }
    report.push(rel);

    let mut cop = CheckResult::new("quotient coproducts of X̂, Ŷ, δ_1");
    let mut expected = pair(&x, &one);
    expected.add_assign(&pair(&one, &x));
    expected.add_assign(&pair(&y, &ds[0]));
    cop.compare("Δ(X)", &project_tensor(&b.coproduct(&x)), &expected);
    let mut prim = pair(&y, &one);
    prim.add_assign(&pair(&one, &y));
    cop.compare("Δ(Y)", &project_tensor(&b.coproduct(&y)), &prim);
    let mut prim = pair(&ds[0], &one);
    prim.add_assign(&pair(&one, &ds[0]));
    cop.compare("Δ(δ1)", &project_tensor(&b.coproduct(&ds[0])), &prim);
    report.push(cop);

    let mut s_x = CheckResult::new("quotient S(X̂) = -X̂ + Ŷδ_1");
    s_x.compare("S(X)", &project_h(&b.antipode(&x)), &project_h(&y.mul(&ds[0]).sub(&x)));
    report.push(s_x);

    let f = b.f_hopf();
    let mut fdb = CheckResult::new("quotient Δ(a_n) = Σ_k a_k ⊗ (a-power sum), the classical formula with legs swapped");
    for n in 2..=max_n as u32 + 1 {
        let p = a_power_coefficients(n);
        let mut classical = GradedTensor::zero(2);
        for k in 1..=n as usize {
            let t = GradedTensor::pure(&[LegElement::F(p[k][n as usize].clone()), LegElement::F(SuperPoly::gen(Family::A, k as u32))]);
            classical.add_assign(&t);
        }
        let swapped = crate::ffun::flip(&classical);
        fdb.compare(format!("Δ(a{n})"), &project_tensor(&f.coproduct(&SuperPoly::gen(Family::A, n)).expect("bound")), &swapped);
    }
    report.push(fdb);

    let mut lambda = CheckResult::new("quotient S(a_{n+1}) equals the Λ-sum formula");
    for n in 1..=max_n {
        let s = f.antipode(&SuperPoly::gen(Family::A, n as u32 + 1)).expect("within bound");
        lambda.compare(format!("S(a{})", n + 1), &project_f(&s), &lambda_antipode(n));
    }
    report.push(lambda);

    let mut ideal = CheckResult::new("kernel is a coideal: Δ of kernel generators has a kernel leg, ε vanishes");
    let kernel_f: Vec<GeneratorId> =
        generators(max_n as u32 + 1).into_iter().filter(|g| g.family != Family::A).collect();
    for g in kernel_f {
        let h = HElement::f(SuperPoly::generator(g));
        check_coideal(&mut ideal, &b, &h, &format!("{g}"));
    }
    for g in [LieGenerator::Z, LieGenerator::U, LieGenerator::V, LieGenerator::W] {
        check_coideal(&mut ideal, &b, &HElement::lie(g), g.name());
    }
    report.push(ideal.with_note("U-side kernel is a coideal only; [U,V] = -(Y+Z) puts Y in the two-sided ideal"));
    report
}

fn check_coideal(check: &mut CheckResult, b: &Bicross, h: &HElement, name: &str) {
    let d = b.coproduct(h);
    let ok = d.terms().all(|(legs, _)| legs.iter().any(leg_in_kernel));
    check.assert(format!("Δ({name})"), ok, || d.to_string());
    check.assert(format!("ε({name})"), h.counit().is_zero(), || h.counit().to_string());
}

/// Quotient of a U element.
pub fn project_u(x: &UEnvElement) -> UEnvElement {
    let mut out = UEnvElement::zero();
    for (m, c) in x.terms() {
        if !in_kernel_u(m) {
            out.add_term(*m, c.clone());
        }
    }
    out
}

/// `FHopf` restricted to the quotient, for oracle comparisons.
pub fn quotient_antipode(f: &FHopf, n: u32) -> SuperPoly {
    project_f(&f.antipode(&SuperPoly::gen(Family::A, n)).expect("within bound"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: u32) -> SuperPoly {
        SuperPoly::gen(Family::A, n)
    }

    #[test]
    fn lambda_sets() {
        assert_eq!(lambda_set(1), vec![vec![0, 1]]);
        let mut l2 = lambda_set(2);
        l2.sort();
        assert_eq!(l2, vec![vec![0, 2, 0], vec![1, 0, 1]]);
        assert_eq!(lambda_set(3).len(), 3);
    }

    #[test]
    fn lambda_formula_values() {
        assert_eq!(lambda_antipode(1), -a(2));
        assert_eq!(lambda_antipode(2), &-a(3) + &a(2).pow(2).scale(&rat(2)));
        let expected = &(&-a(4) + &(&a(2) * &a(3)).scale(&rat(5))) - &a(2).pow(3).scale(&rat(5));
        assert_eq!(lambda_antipode(3), expected);
    }

    #[test]
    fn classical_check_passes() {
        let r = classical_check(4);
        assert!(r.passed(), "{r}");
    }
}
