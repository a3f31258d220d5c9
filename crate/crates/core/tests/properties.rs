use proptest::prelude::*;

use superhopf::action::act;
use superhopf::ffun::{contract, FHopf};
use superhopf::jets::{compose, invert, SuperJet};
use superhopf::poly::{rat, Family, GeneratorId, Parity};
use superhopf::sample::{random_f_element, random_u_element, rng};
use superhopf::{SuperPoly, UEnvElement};

const BOUND: u32 = 6;

fn f_elements(n: usize, max_weight: i64) -> impl Strategy<Value = Vec<SuperPoly>> {
    any::<u64>().prop_map(move |seed| {
        let mut r = rng(seed);
        (0..n).map(|_| random_f_element(&mut r, max_weight)).collect()
    })
}

fn u_elements(n: usize, max_degree: u32) -> impl Strategy<Value = Vec<UEnvElement>> {
    any::<u64>().prop_map(move |seed| {
        let mut r = rng(seed);
        (0..n).map(|_| random_u_element(&mut r, max_degree)).collect()
    })
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn both_odd(p: Option<Parity>, q: Option<Parity>) -> bool {
    p.is_some_and(|p| p.is_odd()) && q.is_some_and(|q| q.is_odd())
}

/// A point of `G_2` with small integer coefficients; odd slots carry one
/// Grassmann symbol each.
fn g2_jet(order: usize) -> impl Strategy<Value = SuperJet> {
    prop::collection::vec(-3i64..=3, 4 * (order + 1)).prop_map(move |cs| {
        SuperJet::from_fn(order, |s, k| {
            let c = rat(cs[s * (order + 1) + k]);
            let odd = |f: Family| SuperPoly::raw_generator(GeneratorId::new(f, k as u32)).scale(&c);
            match (s, k) {
                (0, 0) | (1, 0) | (2, 0) | (2, 1) => SuperPoly::zero(),
                (0, 1) | (3, 0) => SuperPoly::one(),
                (0, _) | (3, _) => SuperPoly::constant(c),
                (1, _) => odd(Family::BETA),
                _ => odd(Family::GAMMA),
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn f_is_associative_and_distributive(v in f_elements(3, 4)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(&(x * y) * z, x * &(y * z));
        prop_assert_eq!(x * &(y + z), &(x * y) + &(x * z));
    }

    #[test]
    fn f_is_supercommutative(v in f_elements(2, 4)) {
        let (x, y) = (&v[0], &v[1]);
        let s = sign(both_odd(x.parity(), y.parity()));
        prop_assert_eq!(x * y, (y * x).scale(&rat(s)));
    }

    #[test]
    fn f_coproduct_is_multiplicative(v in f_elements(2, 3)) {
        let h = FHopf::new(BOUND);
        let (x, y) = (&v[0], &v[1]);
        let lhs = h.coproduct(&(x * y)).unwrap();
        let rhs = h.coproduct(x).unwrap().tensor_mul(&h.coproduct(y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_antipode_axiom(v in f_elements(1, 4)) {
        let h = FHopf::new(BOUND);
        let x = &v[0];
        let d = h.coproduct(x).unwrap();
        let eps = SuperPoly::constant(h.counit(x));
        let s = |p: &SuperPoly| h.antipode(p).unwrap();
        prop_assert_eq!(contract(&d, s, |p| p.clone()), eps.clone());
        prop_assert_eq!(contract(&d, |p| p.clone(), s), eps);
    }

    #[test]
    fn u_is_associative(v in u_elements(3, 3)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
    }

    #[test]
    fn u_antipode_reverses_products(v in u_elements(2, 3)) {
        let (x, y) = (&v[0], &v[1]);
        let s = sign(both_odd(x.parity(), y.parity()));
        prop_assert_eq!(x.mul(y).antipode(), y.antipode().mul(&x.antipode()).scale(&rat(s)));
    }

    #[test]
    fn u_coproduct_is_multiplicative(v in u_elements(2, 3)) {
        let (x, y) = (&v[0], &v[1]);
        prop_assert_eq!(x.mul(y).coproduct(), x.coproduct().tensor_mul(&y.coproduct()).unwrap());
    }

    #[test]
    fn action_is_a_module(u in u_elements(2, 2), f in f_elements(1, 3)) {
        let (h, k, x) = (&u[0], &u[1], &f[0]);
        prop_assert_eq!(act(&h.mul(k), x), act(h, &act(k, x)));
    }

    #[test]
    fn jet_composition_is_associative(p in g2_jet(4), q in g2_jet(4), r in g2_jet(4)) {
        let left = compose(&compose(&p, &q).unwrap(), &r).unwrap();
        let right = compose(&p, &compose(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn jet_inverse_is_two_sided(p in g2_jet(4)) {
        let inv = invert(&p).unwrap();
        let id = SuperJet::identity(4);
        prop_assert!(inv.is_in_g2());
        prop_assert_eq!(compose(&p, &inv).unwrap(), id.clone());
        prop_assert_eq!(compose(&inv, &p).unwrap(), id);
    }
}
