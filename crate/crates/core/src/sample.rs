//! Seeded sampling helpers shared by the property and acceptance suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{MPoly, Monomial, Ring};
use crate::{ratio, Poly, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with small numerator and denominator.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-9..=9);
    }
    ratio(num, rng.gen_range(1..=4))
}

fn monomial_of_degree<R: Rng>(rng: &mut R, nvars: usize, max_degree: i64) -> Monomial {
    let mut exps = vec![0i64; nvars];
    let mut budget = rng.gen_range(0..=max_degree);
    for e in exps.iter_mut() {
        *e = rng.gen_range(0..=budget);
        budget -= *e;
    }
    Monomial(exps)
}

/// Random polynomial with total degree at most `max_degree` and at most
/// `max_terms` monomials. May still collapse to fewer terms (or zero)
/// through cancellation.
pub fn poly<R: Rng>(rng: &mut R, ring: &Ring, max_degree: i64, max_terms: usize) -> Poly {
    let mut f = Poly::zero(ring);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let m = monomial_of_degree(rng, ring.nvars(), max_degree);
        f = &f + &MPoly::monomial(ring, m, rational(rng)).expect("nonnegative exponents");
    }
    f
}

pub fn nonzero_poly<R: Rng>(rng: &mut R, ring: &Ring, max_degree: i64, max_terms: usize) -> Poly {
    loop {
        let f = poly(rng, ring, max_degree, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random Laurent polynomial with each exponent in `-bound..=bound`.
pub fn laurent_poly<R: Rng>(rng: &mut R, ring: &Ring, bound: i64, max_terms: usize) -> Poly {
    let mut f = Poly::zero(ring);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let exps: Vec<i64> = (0..ring.nvars())
            .map(|_| rng.gen_range(-bound..=bound))
            .collect();
        f = &f + &MPoly::monomial(ring, Monomial(exps), rational(rng)).expect("laurent ring");
    }
    f
}

pub fn nonzero_laurent_poly<R: Rng>(
    rng: &mut R,
    ring: &Ring,
    bound: i64,
    max_terms: usize,
) -> Poly {
    loop {
        let f = laurent_poly(rng, ring, bound, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random point with small integer coordinates.
pub fn point<R: Rng>(rng: &mut R, nvars: usize) -> Vec<Rational> {
    (0..nvars).map(|_| ratio(rng.gen_range(-5..=5), 1)).collect()
}
