use super::*;
use crate::poly::ratio;

fn poly_jet(order: usize, a: &[i64]) -> SuperJet {
    let mut j = SuperJet::identity(order);
    for (k, &c) in a.iter().enumerate() {
        j.a[k] = SuperPoly::integer(c);
    }
    j
}

fn ints(v: &[SuperPoly]) -> Vec<SuperPoly> {
    v.to_vec()
}

#[test]
fn compose_polynomial_example() {
    let phi = poly_jet(4, &[0, 1, 1]);
    let sq = compose(&phi, &phi).unwrap();
    let expected: Vec<SuperPoly> = [0, 1, 2, 2, 1].iter().map(|&c| SuperPoly::integer(c)).collect();
    assert_eq!(ints(&sq.a), expected);
    assert_eq!(sq.d[0], SuperPoly::one());
}

#[test]
fn invert_polynomial_example() {
    let phi = poly_jet(4, &[0, 1, 1]);
    let inv = invert(&phi).unwrap();
    let expected: Vec<SuperPoly> = [0, 1, -1, 2, -5].iter().map(|&c| SuperPoly::integer(c)).collect();
    assert_eq!(inv.a, expected);
    assert_eq!(invert(&SuperJet::identity(4)).unwrap(), SuperJet::identity(4));
}

#[test]
fn compose_with_identity() {
    let phi = SuperJet::generic_g2(4, Family::FUNCTION_FAMILIES);
    let id = SuperJet::identity(4);
    assert_eq!(compose(&id, &phi).unwrap(), phi);
    assert_eq!(compose(&phi, &id).unwrap(), phi);
    assert!(phi.is_in_g2());
    assert_eq!(phi.jacobian0(), SuperMatrix::identity());
    assert_eq!(compose(&phi, &SuperJet::identity(5)), Err(AlgebraError::OrderMismatch(4, 5)));
}

#[test]
fn generic_inverse_is_two_sided() {
    let phi = SuperJet::generic_g2(5, Family::FUNCTION_FAMILIES);
    let inv = invert(&phi).unwrap();
    assert_eq!(compose(&phi, &inv).unwrap(), SuperJet::identity(5));
    assert_eq!(compose(&inv, &phi).unwrap(), SuperJet::identity(5));
}

#[test]
fn inverse_of_generic_jet_through_origin() {
    let mut phi = SuperJet::generic(3);
    phi.a[0] = SuperPoly::zero();
    phi.c[0] = SuperPoly::zero();
    let inv = invert(&phi).unwrap();
    assert_eq!(compose(&phi, &inv).unwrap(), SuperJet::identity(3));
    assert_eq!(invert(&SuperJet::generic(3)), Err(AlgebraError::NotOriginFixing));
}

#[test]
fn compose_is_associative() {
    let p = SuperJet::generic_g2(4, Family::FUNCTION_FAMILIES);
    let q = SuperJet::generic_g2(4, [Family::A_PRIME, Family::B_PRIME, Family::C_PRIME, Family::D_PRIME]);
    let r = poly_jet(4, &[0, 1, 3, 0, -2]);
    let lhs = compose(&compose(&p, &q).unwrap(), &r).unwrap();
    let rhs = compose(&p, &compose(&q, &r).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn supermatrix_inverse() {
    assert_eq!(SuperMatrix::identity().inverse().unwrap(), SuperMatrix::identity());
    let m = AffineSuper::generic().matrix;
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv), SuperMatrix::identity());
    assert_eq!(inv.mul(&m), SuperMatrix::identity());
    let numeric = SuperMatrix {
        a: SuperPoly::constant(ratio(3, 2)),
        b: SuperPoly::gen(Family::B, 1),
        c: SuperPoly::gen(Family::C, 2),
        d: SuperPoly::integer(2),
    };
    assert_eq!(numeric.mul(&numeric.inverse().unwrap()), SuperMatrix::identity());
    let singular = SuperMatrix { a: SuperPoly::gen(Family::B, 1), ..SuperMatrix::identity() };
    assert!(singular.inverse().is_err());
}

#[test]
fn affine_jets_compose_like_supermatrices() {
    let s = AffineSuper::generic();
    let t = s.map(|p| p.rename_families(|f| if f == Family::AFF_EVEN { Family::DELTA } else { f }));
    let t = AffineSuper { f: SuperPoly::gen(Family::B, 1), ..t };
    let via_jets = compose(&s.to_jet(2), &t.to_jet(2)).unwrap();
    assert_eq!(via_jets, s.compose(&t).to_jet(2));
    let inv = s.inverse().unwrap();
    assert_eq!(s.compose(&inv), AffineSuper::identity());
}

#[test]
fn factorization_examples() {
    let phi = SuperJet::generic_g2(4, Family::FUNCTION_FAMILIES);
    assert_eq!(factorize(&phi).unwrap(), (AffineSuper::identity(), phi.clone()));
    let s = AffineSuper::generic();
    assert_eq!(factorize(&s.to_jet(4)).unwrap(), (s.clone(), SuperJet::identity(4)));
    let generic = SuperJet::generic(5);
    let (sigma, g2) = factorize(&generic).unwrap();
    assert!(g2.is_in_g2());
    assert_eq!(compose(&sigma.to_jet(5), &g2).unwrap(), generic);
}

#[test]
fn group_action_trivial_cases() {
    let phi = SuperJet::generic_g2(3, Family::FUNCTION_FAMILIES);
    assert_eq!(group_actions(&phi, &AffineSuper::identity()).unwrap(), (AffineSuper::identity(), phi.clone()));
    let s = AffineSuper::generic();
    assert_eq!(group_actions(&SuperJet::identity(3), &s).unwrap(), (s, SuperJet::identity(3)));
}

#[test]
fn exponentials() {
    let t = SuperPoly::raw_generator(parameter(Parity::Even));
    let tau = SuperPoly::raw_generator(parameter(Parity::Odd));
    assert_eq!(exp_affine(LieGenerator::X, &t).unwrap().to_string(), "(t1 + x, θ)");
    assert_eq!(exp_affine(LieGenerator::W, &tau).unwrap().to_string(), "(x, -τ1 + θ)");
    // x + θτ = x - τθ
    let u = exp_affine(LieGenerator::U, &tau).unwrap().to_jet(2);
    let theta_tau = SuperFunction::theta(2).right_mul(&tau);
    assert_eq!(u.components().0, SuperFunction::x(2).add(&theta_tau));
    assert_eq!(exp_affine(LieGenerator::U, &t), Err(AlgebraError::ParityMismatch("U".into())));
}
