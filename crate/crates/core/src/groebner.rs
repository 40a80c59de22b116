//! Buchberger's algorithm with reduced output and membership certificates.
//!
//! Pairs are processed by normal selection (smallest pair lcm first).
//! Intermediate polynomials are cleared to primitive integer form to keep
//! rational coefficients small; the final basis is monic. Every basis
//! element carries a representation in terms of the original generators,
//! recorded through every S-polynomial, reduction, and normalization step,
//! so `verify_certificates` can re-check both inclusions of the computed
//! basis and the input ideal.

use num::{BigInt, BigRational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::order::{leading_term, MonomialOrder};
use crate::poly::{MPoly, Monomial, Ring};
use crate::Rational;

type Poly = MPoly<Rational>;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("generators must live in one polynomial-mode ring")]
    MixedRings,
    #[error("Laurent rings have no well-ordered monomials for division")]
    LaurentAmbient,
    #[error("the chosen order is not a well-order")]
    NotWellOrder,
}

/// Reduced basis of an ideal under a fixed order, with certificates.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<Poly>,
    basis: Vec<Poly>,
    /// `basis[i] = sum_j reps[i][j] * generators[j]`.
    reps: Vec<Vec<Poly>>,
}

fn content_and_sign(f: &Poly, ord: &MonomialOrder) -> Rational {
    // rational content: gcd of numerators over lcm of denominators, signed
    // so that dividing by it makes the leading coefficient positive
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for (_, c) in f.terms() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    if num_gcd.is_zero() {
        return Rational::one();
    }
    let mut content = BigRational::new(num_gcd, den_lcm);
    if let Some((_, lc)) = leading_term(f, ord) {
        if lc.is_negative() {
            content = -content;
        }
    }
    content
}

/// Multi-divisor division with cofactors: `f = sum_i q_i basis_i + r`, no
/// monomial of `r` divisible by a basis leading monomial. The first basis
/// element whose leading monomial divides the current leading monomial is
/// used, which makes the result deterministic for a fixed basis order.
pub fn divide_multi(
    f: &Poly,
    basis: &[Poly],
    ord: &MonomialOrder,
) -> (Vec<Poly>, Poly) {
    let ring = f.ring().clone();
    let leads: Vec<(Monomial, Rational)> = basis
        .iter()
        .map(|b| {
            leading_term(b, ord)
                .map(|(m, c)| (m.clone(), c.clone()))
                .expect("division basis contains zero polynomial")
        })
        .collect();
    let mut q = vec![MPoly::zero(&ring); basis.len()];
    let mut r = MPoly::zero(&ring);
    let mut p = f.clone();
    'outer: while let Some((m, c)) = leading_term(&p, ord).map(|(m, c)| (m.clone(), c.clone())) {
        for (i, (lm, lc)) in leads.iter().enumerate() {
            if lm.divides(&m) {
                let t = MPoly::monomial(&ring, m.quotient(lm), c / lc.clone())
                    .expect("valid quotient term");
                q[i] = &q[i] + &t;
                p = &p - &(&t * &basis[i]);
                continue 'outer;
            }
        }
        let t = MPoly::monomial(&ring, m, c).expect("existing term is valid");
        r = &r + &t;
        p = &p - &t;
    }
    (q, r)
}

struct Work {
    poly: Poly,
    rep: Vec<Poly>,
}

fn scale_work(w: &mut Work, factor: &Rational) {
    w.poly = w.poly.scale(factor);
    for r in &mut w.rep {
        *r = r.scale(factor);
    }
}

fn make_primitive(w: &mut Work, ord: &MonomialOrder) {
    let content = content_and_sign(&w.poly, ord);
    if !content.is_one() {
        let inv = Rational::one() / content;
        scale_work(w, &inv);
    }
}

pub fn buchberger(
    generators: &[Poly],
    order: &MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    let nonzero: Vec<&Poly> = generators.iter().filter(|g| !g.is_zero()).collect();
    let ring = match nonzero.first() {
        Some(g) => g.ring().clone(),
        None => {
            // zero ideal: empty basis over whatever ring the zeros carry
            let ring = generators
                .first()
                .map(|g| g.ring().clone())
                .unwrap_or_else(|| Ring::poly(&[]));
            return Ok(GroebnerBasis {
                ring,
                order: order.clone(),
                generators: generators.to_vec(),
                basis: Vec::new(),
                reps: Vec::new(),
            });
        }
    };
    if ring.is_laurent() {
        return Err(GroebnerError::LaurentAmbient);
    }
    if nonzero.iter().any(|g| g.ring() != &ring) {
        return Err(GroebnerError::MixedRings);
    }
    if !order.is_well_order() {
        return Err(GroebnerError::NotWellOrder);
    }

    let unit = |j: usize| -> Vec<Poly> {
        (0..generators.len())
            .map(|k| {
                if k == j {
                    MPoly::one(&ring)
                } else {
                    MPoly::zero(&ring)
                }
            })
            .collect()
    };

    let mut work: Vec<Work> = Vec::new();
    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut w = Work {
            poly: g.clone(),
            rep: unit(j),
        };
        make_primitive(&mut w, order);
        work.push(w);
    }

    let lead = |w: &Work| -> (Monomial, Rational) {
        leading_term(&w.poly, order)
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("work polynomials are nonzero")
    };

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..work.len() {
        for j in (i + 1)..work.len() {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm of leading monomials first
        let mut best = 0;
        let mut best_lcm = {
            let (i, j) = pairs[0];
            lead(&work[i]).0.lcm(&lead(&work[j]).0)
        };
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lead(&work[i]).0.lcm(&lead(&work[j]).0);
            if order.compare(&l, &best_lcm) == std::cmp::Ordering::Less {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        let (mi, ci) = lead(&work[i]);
        let (mj, cj) = lead(&work[j]);
        let l = mi.lcm(&mj);
        // product criterion: coprime leading monomials reduce to zero
        if l == mi.try_mul(&mj).expect("lcm fits") {
            continue;
        }
        let ring_ref = &ring;
        let ui = MPoly::monomial(ring_ref, l.quotient(&mi), Rational::one() / ci)
            .expect("valid cofactor");
        let uj = MPoly::monomial(ring_ref, l.quotient(&mj), Rational::one() / cj)
            .expect("valid cofactor");
        let spoly = &(&ui * &work[i].poly) - &(&uj * &work[j].poly);
        if spoly.is_zero() {
            continue;
        }
        let srep: Vec<Poly> = (0..generators.len())
            .map(|k| &(&ui * &work[i].rep[k]) - &(&uj * &work[j].rep[k]))
            .collect();
        let basis_polys: Vec<Poly> = work.iter().map(|w| w.poly.clone()).collect();
        let (cofs, rem) = divide_multi(&spoly, &basis_polys, order);
        if rem.is_zero() {
            continue;
        }
        let mut rep = srep;
        for (k, cof) in cofs.iter().enumerate() {
            if cof.is_zero() {
                continue;
            }
            for (slot, r) in rep.iter_mut().enumerate() {
                *r = &*r - &(cof * &work[k].rep[slot]);
            }
        }
        let mut w = Work { poly: rem, rep };
        make_primitive(&mut w, order);
        let new_index = work.len();
        work.push(w);
        for t in 0..new_index {
            pairs.push((t, new_index));
        }
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another retained leading monomial
    let mut keep: Vec<bool> = vec![true; work.len()];
    for i in 0..work.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = lead(&work[i]);
        for j in 0..work.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = lead(&work[j]);
            if mj.divides(&mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Work> = work
        .into_iter()
        .zip(keep)
        .filter_map(|(w, k)| k.then_some(w))
        .collect();

    // inter-reduce to the unique reduced basis
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, w)| (j != i).then(|| w.poly.clone()))
                .collect();
            let (cofs, rem) = divide_multi(&minimal[i].poly, &others, order);
            if rem == minimal[i].poly {
                continue;
            }
            changed = true;
            let mut rep = minimal[i].rep.clone();
            let other_reps: Vec<Vec<Poly>> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, w)| (j != i).then(|| w.rep.clone()))
                .collect();
            for (k, cof) in cofs.iter().enumerate() {
                if cof.is_zero() {
                    continue;
                }
                for (slot, r) in rep.iter_mut().enumerate() {
                    *r = &*r - &(cof * &other_reps[k][slot]);
                }
            }
            minimal[i] = Work { poly: rem, rep };
            make_primitive(&mut minimal[i], order);
        }
        if !changed {
            break;
        }
    }

    // monic normalization and deterministic ordering by leading monomial
    for w in &mut minimal {
        let (_, lc) = leading_term(&w.poly, order)
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("reduced basis has no zero elements");
        let inv = Rational::one() / lc;
        scale_work(w, &inv);
    }
    minimal.sort_by(|a, b| {
        let (ma, _) = leading_term(&a.poly, order).expect("nonzero");
        let (mb, _) = leading_term(&b.poly, order).expect("nonzero");
        order.compare(ma, mb)
    });

    let (basis, reps) = minimal.into_iter().map(|w| (w.poly, w.rep)).unzip();
    Ok(GroebnerBasis {
        ring,
        order: order.clone(),
        generators: generators.to_vec(),
        basis,
        reps,
    })
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|b| {
                leading_term(b, &self.order)
                    .expect("basis elements are nonzero")
                    .0
                    .clone()
            })
            .collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        assert!(f.ring() == &self.ring, "normal form across rings");
        divide_multi(f, &self.basis, &self.order).1
    }

    /// Ideal membership: zero normal form.
    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Certificate check, three parts: every original generator reduces to
    /// zero against the basis; every recorded representation reproduces its
    /// basis element from the generators exactly; and every S-polynomial of
    /// basis pairs reduces to zero (Buchberger's criterion).
    pub fn verify_certificates(&self) -> bool {
        for g in &self.generators {
            if !self.contains(g) {
                return false;
            }
        }
        for (b, rep) in self.basis.iter().zip(&self.reps) {
            let mut acc = MPoly::zero(&self.ring);
            for (r, g) in rep.iter().zip(&self.generators) {
                acc = &acc + &(r * g);
            }
            if &acc != b {
                return false;
            }
        }
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let (mi, ci) = leading_term(&self.basis[i], &self.order)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .expect("nonzero");
                let (mj, cj) = leading_term(&self.basis[j], &self.order)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .expect("nonzero");
                let l = mi.lcm(&mj);
                let ui = MPoly::monomial(&self.ring, l.quotient(&mi), Rational::one() / ci)
                    .expect("valid cofactor");
                let uj = MPoly::monomial(&self.ring, l.quotient(&mj), Rational::one() / cj)
                    .expect("valid cofactor");
                let s = &(&ui * &self.basis[i]) - &(&uj * &self.basis[j]);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}
