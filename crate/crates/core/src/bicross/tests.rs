use super::*;
use crate::poly::Family;
use LieGenerator::*;

fn a(n: u32) -> SuperPoly {
    SuperPoly::gen(Family::A, n)
}

fn hf(n: u32, fam: Family) -> HElement {
    HElement::f(SuperPoly::gen(fam, n))
}

#[test]
fn product_examples() {
    assert_eq!(hf(2, Family::A).mul(&hf(3, Family::A)), HElement::f(&a(2) * &a(3)));
    let y = HElement::lie(Y);
    let expected = HElement::f(a(2)).add(&HElement::pure(a(2), UEnvElement::generator(Y)));
    assert_eq!(y.mul(&hf(2, Family::A)), expected);
    assert_eq!(y.commutator(&hf(2, Family::A)), HElement::f(a(2)));
    // (1#U)(b1#1) = (-2a2 + d1)#1 - b1#U
    let lhs = HElement::lie(U).mul(&hf(1, Family::B));
    let mut expected = HElement::f(&SuperPoly::gen(Family::D, 1) - &a(2).scale(&rat(2)));
    expected.add_scaled(&HElement::pure(SuperPoly::gen(Family::B, 1), UEnvElement::generator(U)), &rat(-1));
    assert_eq!(lhs, expected);
}

#[test]
fn coproduct_examples() {
    let b = Bicross::new(4);
    let one = HElement::one();
    let a2 = hf(2, Family::A);
    let expected = h_tensor(&[&a2, &one]).sub(&h_tensor(&[&one, &a2]).scale(&rat(-1)));
    assert_eq!(b.coproduct(&a2), expected);
    let y = HElement::lie(Y);
    assert_eq!(b.coproduct(&y), h_tensor(&[&y, &one]).sub(&h_tensor(&[&one, &y]).scale(&rat(-1))));
    let x = HElement::lie(X);
    let mut expected = h_tensor(&[&x, &one]);
    expected.add_assign(&h_tensor(&[&one, &x]));
    expected.add_assign(&h_tensor(&[&y, &hf(2, Family::A)]).scale(&rat(2)));
    expected.add_assign(&h_tensor(&[&HElement::lie(Z), &hf(1, Family::D)]));
    expected.add_assign(&h_tensor(&[&HElement::lie(U), &hf(1, Family::B)]));
    expected.add_assign(&h_tensor(&[&HElement::lie(V), &hf(2, Family::C)]).scale(&rat(2)));
    assert_eq!(b.coproduct(&x), expected);
}

#[test]
fn antipode_examples() {
    let b = Bicross::new(4);
    assert_eq!(b.antipode(&hf(2, Family::A)), hf(2, Family::A).scale(&rat(-1)));
    assert_eq!(b.antipode(&HElement::lie(Z)), HElement::lie(Z).scale(&rat(-1)));
    let x = HElement::lie(X);
    let d = b.coproduct(&x);
    assert!(b.contract(&d, |h| b.antipode(h), |h| h.clone()).is_zero());
}

#[test]
fn compatibility_examples() {
    let f = FHopf::new(6);
    let x = UEnvElement::generator(X);
    let ha = act(&x, &a(2));
    assert_eq!(f.coproduct(&ha).unwrap(), coproduct_of_action_rhs(&f, &x, &a(2)));
    let (u, w) = (UEnvElement::generator(U), UEnvElement::generator(W));
    assert_eq!(coact(&u.mul(&w)), coaction_of_product_rhs(&u, &w));
    let (lhs, rhs) = mixed_condition(&w, &SuperPoly::gen(Family::B, 1));
    assert_eq!(lhs, rhs);
}

#[test]
fn display_uses_hash_separator() {
    let x = HElement::pure(a(2).scale(&rat(2)), UEnvElement::generator(Y));
    assert_eq!(x.to_string(), "2*a2 # Y");
}

#[test]
fn verify_small() {
    let r = verify_compatibility(3, 10, 42);
    assert!(r.passed(), "{r}");
    let r = verify_h_hopf(2, 6, 42);
    assert!(r.passed(), "{r}");
}
