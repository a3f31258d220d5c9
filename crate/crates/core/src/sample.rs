//! Seeded random homogeneous elements for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{rat, Family, GeneratorId, Parity, SuperMonomial, SuperPoly};
use crate::uenv::{monomials_up_to, PbwMonomial, UEnvElement};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All monomials in `a, b, c, d` of the given weight and parity.
pub fn f_monomials(weight: i64, parity: Parity) -> Vec<SuperMonomial> {
    let gens: Vec<GeneratorId> = (0..=weight as u32 + 1)
        .flat_map(|n| Family::FUNCTION_FAMILIES.map(|f| GeneratorId::new(f, n)))
        .filter(|g| g.degenerate_value().is_none() && g.weight() <= weight)
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(gens: &[GeneratorId], left: i64, stack: &mut Vec<(GeneratorId, i32)>, out: &mut Vec<SuperMonomial>) {
        if left == 0 {
            if let Some((_, m)) = crate::poly::normalize_monomial(stack) {
                out.push(m);
            }
        }
        let Some((&g, rest)) = gens.split_first() else { return };
        // exponent of g, then recurse on the remaining generators
        let max_e = if g.parity().is_odd() { 1 } else if g.weight() == 0 { 0 } else { left / g.weight() };
        for e in 1..=max_e {
            if g.weight() * e > left {
                break;
            }
            stack.push((g, e as i32));
            go(rest, left - g.weight() * e, stack, out);
            stack.pop();
        }
        go(rest, left, stack, out);
    }
    go(&gens, weight, &mut stack, &mut out);
    out.sort();
    out.dedup();
    out.retain(|m| m.parity() == parity);
    out
}

fn coefficient(rng: &mut impl Rng) -> i64 {
    *[-2, -1, 1, 2].choose(rng).expect("non-empty")
}

/// A homogeneous element of weight at most `max_weight` with one to three
/// terms and coefficients in `{-2, …, 2}`.
pub fn random_f_element(rng: &mut impl Rng, max_weight: i64) -> SuperPoly {
    loop {
        let weight = rng.gen_range(0..=max_weight);
        let parity = Parity::of_bit(rng.gen_bool(0.5));
        let pool = f_monomials(weight, parity);
        if pool.is_empty() {
            continue;
        }
        let mut x = SuperPoly::zero();
        let k = rng.gen_range(1..=3);
        let picked: Vec<SuperMonomial> = pool.choose_multiple(rng, k).cloned().collect();
        for m in picked {
            x.add_term(m, rat(coefficient(rng)));
        }
        return x;
    }
}

/// A homogeneous (parity and Y-weight) PBW element of degree at most `max_degree`.
pub fn random_u_element(rng: &mut impl Rng, max_degree: u32) -> UEnvElement {
    let all = monomials_up_to(max_degree);
    let seed: PbwMonomial = *all.choose(rng).expect("non-empty");
    let pool: Vec<_> = all.into_iter().filter(|m| m.parity() == seed.parity() && m.weight() == seed.weight()).collect();
    let mut x = UEnvElement::zero();
    let k = rng.gen_range(1..=2);
    let picked: Vec<PbwMonomial> = pool.choose_multiple(rng, k).copied().collect();
    for m in picked {
        x.add_term(m, rat(coefficient(rng)));
    }
    x
}
