#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tsc_core::{normalize, Formula, Ordinal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

/// An ordinal below `ω^ω` with up to three terms, exponents below 4 and
/// coefficients below 4. Zero with small probability.
pub fn ordinal(rng: &mut impl Rng) -> Ordinal {
    if rng.gen_ratio(1, 10) {
        return Ordinal::zero();
    }
    let mut exponents: Vec<u64> = (0..4).collect();
    exponents.shuffle(rng);
    let mut exponents: Vec<u64> = exponents[..rng.gen_range(1..=3)].to_vec();
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    exponents
        .into_iter()
        .map(|e| Ordinal::monomial(Ordinal::nat(e), rng.gen_range(1u64..4)))
        .fold(Ordinal::zero(), |acc, t| acc + t)
}

pub fn positive_ordinal(rng: &mut impl Rng) -> Ordinal {
    loop {
        let a = ordinal(rng);
        if !a.is_zero() {
            return a;
        }
    }
}

/// A random ordinal `≤ a`: a prefix of its terms, with the last kept
/// coefficient possibly lowered.
pub fn at_most(rng: &mut impl Rng, a: &Ordinal) -> Ordinal {
    let terms = a.terms();
    if terms.is_empty() {
        return Ordinal::zero();
    }
    let keep = rng.gen_range(0..=terms.len());
    let mut out = Ordinal::zero();
    for (i, t) in terms[..keep].iter().enumerate() {
        let c = if i + 1 == keep {
            let c = u64::try_from(t.coefficient().clone()).unwrap();
            rng.gen_range(1..=c)
        } else {
            u64::try_from(t.coefficient().clone()).unwrap()
        };
        out = out + Ordinal::monomial(t.exponent().clone(), c);
    }
    out
}

/// A random ordinal strictly below `a > 0`.
pub fn below(rng: &mut impl Rng, a: &Ordinal) -> Ordinal {
    loop {
        let b = at_most(rng, a);
        if b < *a {
            return b;
        }
    }
}

/// A formula of depth at most `depth` over bases `0..=max_base`.
pub fn formula(rng: &mut impl Rng, depth: usize, max_base: usize) -> Formula {
    formula_with(rng, depth, max_base, &mut |r| positive_ordinal(r))
}

pub fn formula_with<R: Rng>(
    rng: &mut R,
    depth: usize,
    max_base: usize,
    exponent: &mut impl FnMut(&mut R) -> Ordinal,
) -> Formula {
    let choice = if depth == 0 { 0 } else { rng.gen_range(0..5) };
    match choice {
        0 => Formula::Top,
        1 => Formula::conj(
            formula_with(rng, depth - 1, max_base, exponent),
            formula_with(rng, depth - 1, max_base, exponent),
        ),
        _ => {
            let base = rng.gen_range(0..=max_base);
            let a = exponent(rng);
            let body = formula_with(rng, depth - 1, max_base, exponent);
            Formula::diamond(base, a, body)
        }
    }
}

/// A formula implied by `f`: some monomials of its normal form, each with a
/// lowered exponent, in random order.
pub fn weaken(rng: &mut impl Rng, f: &Formula) -> Formula {
    let mut parts = Vec::new();
    for m in normalize(f).monomials() {
        if rng.gen_bool(0.6) {
            parts.push(Formula::monomial(m.base, at_most(rng, &m.exponent)));
        }
    }
    parts.shuffle(rng);
    Formula::conj_all(parts)
}
