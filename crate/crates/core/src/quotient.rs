//! Quotients of a polynomial ring by a principal ideal, with canonical
//! representatives computed by single-divisor division.
//!
//! The normal form of `f` modulo `m` under a monomial order is the unique
//! remainder whose monomials avoid multiples of the leading monomial of
//! `m`; for a principal ideal the single generator is already a full
//! division basis, so the normal form is a canonical coset representative
//! and equality of cosets is equality of normal forms.

use crate::order::{leading_term, MonomialOrder};
use crate::poisson::PoissonStructure;
use crate::poly::{MPoly, Monomial, Ring};
use crate::scalar::Scalar;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("quotient ambient ring must be in polynomial mode")]
    LaurentAmbient,
    #[error("modulus must be nonzero and nonconstant")]
    TrivialModulus,
    #[error("the chosen order is not a well-order, division may not terminate")]
    NotWellOrder,
    #[error("element lies outside the ambient ring")]
    ForeignElement,
    #[error("the structure is not presented by a potential")]
    NoPotential,
    #[error("modulus minus the potential must be a constant")]
    PotentialMismatch,
}

/// `k[x1..xn] / (modulus)` together with the order defining normal forms.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientRing<S> {
    ring: Ring,
    modulus: MPoly<S>,
    order: MonomialOrder,
    lead: Monomial,
    lead_coeff: S,
}

impl<S: Scalar> QuotientRing<S> {
    pub fn new(
        modulus: MPoly<S>,
        order: MonomialOrder,
    ) -> Result<QuotientRing<S>, QuotientError> {
        let ring = modulus.ring().clone();
        if ring.is_laurent() {
            return Err(QuotientError::LaurentAmbient);
        }
        if modulus.as_constant().is_some() {
            return Err(QuotientError::TrivialModulus);
        }
        if !order.is_well_order() {
            return Err(QuotientError::NotWellOrder);
        }
        assert_eq!(order.nvars(), ring.nvars(), "order arity mismatch");
        let (lead, lead_coeff) = leading_term(&modulus, &order)
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero modulus has a leading term");
        Ok(QuotientRing {
            ring,
            modulus,
            order,
            lead,
            lead_coeff,
        })
    }

    /// Default order: lex with the last declared variable highest.
    pub fn with_default_order(modulus: MPoly<S>) -> Result<QuotientRing<S>, QuotientError> {
        let ord = MonomialOrder::default_quotient(modulus.ring());
        QuotientRing::new(modulus, ord)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modulus(&self) -> &MPoly<S> {
        &self.modulus
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn leading_monomial(&self) -> &Monomial {
        &self.lead
    }

    /// Canonical coset representative of `f`.
    pub fn normal_form(&self, f: &MPoly<S>) -> Result<MPoly<S>, QuotientError> {
        if f.ring() != &self.ring {
            return Err(QuotientError::ForeignElement);
        }
        let (_, r) = divide_single(f, &self.modulus, &self.order);
        Ok(r)
    }

    pub fn is_zero_class(&self, f: &MPoly<S>) -> Result<bool, QuotientError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Bracket induced on the quotient by a potential structure whose
    /// potential differs from the modulus by a constant (so the modulus is
    /// a Casimir and the bracket descends).
    pub fn quotient_bracket(
        &self,
        structure: &PoissonStructure<S>,
        f: &MPoly<S>,
        g: &MPoly<S>,
    ) -> Result<MPoly<S>, QuotientError> {
        if structure.ring() != &self.ring {
            return Err(QuotientError::ForeignElement);
        }
        let potential = structure.potential().ok_or(QuotientError::NoPotential)?;
        if (&self.modulus - potential).as_constant().is_none() {
            return Err(QuotientError::PotentialMismatch);
        }
        self.normal_form(&structure.bracket(f, g))
    }

    /// Monomials of total degree at most `bound` outside the leading-term
    /// ideal of the modulus, sorted ascending under the quotient order.
    /// These are linearly independent in the quotient and span every coset
    /// that admits a representative of degree at most `bound`.
    pub fn basis_monomials(&self, bound: i64) -> Vec<Monomial> {
        let n = self.ring.nvars();
        let mut out: Vec<Monomial> = Vec::new();
        let mut stack = vec![(Vec::<i64>::new(), bound)];
        while let Some((prefix, rest)) = stack.pop() {
            if prefix.len() == n {
                let m = Monomial(prefix);
                if !self.lead.divides(&m) {
                    out.push(m);
                }
                continue;
            }
            for e in 0..=rest {
                let mut next = prefix.clone();
                next.push(e);
                stack.push((next, rest - e));
            }
        }
        out.sort_by(|a, b| self.order.compare(a, b));
        out
    }
}

/// Division of `f` by a single `divisor`: returns `(q, r)` with
/// `f = q * divisor + r` and no monomial of `r` divisible by the leading
/// monomial of the divisor. Requires a well-order for termination.
pub fn divide_single<S: Scalar>(
    f: &MPoly<S>,
    divisor: &MPoly<S>,
    ord: &MonomialOrder,
) -> (MPoly<S>, MPoly<S>) {
    let ring = f.ring().clone();
    assert!(divisor.ring() == &ring, "division across rings");
    let (dm, dc) = leading_term(divisor, ord)
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("division by zero polynomial");
    let mut p = f.clone();
    let mut q = MPoly::zero(&ring);
    let mut r = MPoly::zero(&ring);
    while let Some((m, c)) = leading_term(&p, ord).map(|(m, c)| (m.clone(), c.clone())) {
        if dm.divides(&m) {
            let factor_m = m.quotient(&dm);
            let factor_c = c / dc.clone();
            let t = MPoly::monomial(&ring, factor_m, factor_c)
                .expect("quotient monomial of divisible monomials is valid");
            q = &q + &t;
            p = &p - &(&t * divisor);
        } else {
            let t = MPoly::monomial(&ring, m, c).expect("existing term is valid");
            r = &r + &t;
            p = &p - &t;
        }
    }
    (q, r)
}

/// `Some(f / g)` when `g` divides `f` exactly, `None` otherwise.
pub fn exact_quotient<S: Scalar>(f: &MPoly<S>, g: &MPoly<S>) -> Option<MPoly<S>> {
    let ord = MonomialOrder::default_groebner(f.ring());
    let (q, r) = divide_single(f, g, &ord);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational, Ring};

    fn fermat_quotient(d: i64, xi: i64) -> QuotientRing<Rational> {
        let r = Ring::poly(&["x", "y", "z"]);
        let m = Poly::parse(&r, &format!("x^{d} + y^{d} + z^{d} - {xi}")).unwrap();
        QuotientRing::with_default_order(m).unwrap()
    }

    #[test]
    fn normal_form_replaces_the_top_power() {
        let q = fermat_quotient(3, 1);
        let r = q.ring().clone();
        let z3 = Poly::parse(&r, "z^3").unwrap();
        assert_eq!(q.normal_form(&z3).unwrap().to_string(), "-y^3 - x^3 + 1");
        let low = Poly::parse(&r, "x*y*z^2 + 7").unwrap();
        assert_eq!(q.normal_form(&low).unwrap(), low);
    }

    #[test]
    fn normal_form_is_a_coset_invariant() {
        let q = fermat_quotient(4, 2);
        let r = q.ring().clone();
        let f = Poly::parse(&r, "x*z^5 - y").unwrap();
        let shifted = &f + &(&Poly::parse(&r, "x^2 - z").unwrap() * q.modulus());
        assert_eq!(q.normal_form(&f).unwrap(), q.normal_form(&shifted).unwrap());
        let nf = q.normal_form(&f).unwrap();
        assert!(q
            .is_zero_class(&(&f - &nf))
            .unwrap());
    }

    #[test]
    fn quotient_bracket_reduces_and_validates() {
        let q = fermat_quotient(3, 1);
        let r = q.ring().clone();
        let w = Poly::parse(&r, "x^3 + y^3 + z^3").unwrap();
        let s = crate::poisson::PoissonStructure::from_potential(&w).unwrap();
        let x = Poly::named_var(&r, "x");
        let y = Poly::named_var(&r, "y");
        let z = Poly::named_var(&r, "z");
        assert_eq!(q.quotient_bracket(&s, &x, &y).unwrap().to_string(), "3*z^2");
        // z^2 * {x, y} = 3 z^4 reduces
        let z2 = &z * &z;
        let b = q.quotient_bracket(&s, &(&x * &z2), &y).unwrap();
        assert_eq!(
            b,
            q.normal_form(&s.bracket(&(&x * &z2), &y)).unwrap()
        );
        // a structure from an unrelated potential is rejected
        let other = crate::poisson::PoissonStructure::from_potential(
            &Poly::parse(&r, "x^4 + y^4 + z^4").unwrap(),
        )
        .unwrap();
        assert_eq!(
            q.quotient_bracket(&other, &x, &y).unwrap_err(),
            QuotientError::PotentialMismatch
        );
    }

    #[test]
    fn basis_monomial_counts_for_fermat_quotients() {
        assert_eq!(fermat_quotient(3, 1).basis_monomials(2).len(), 10);
        assert_eq!(fermat_quotient(3, 1).basis_monomials(3).len(), 19);
        assert_eq!(fermat_quotient(5, 1).basis_monomials(4).len(), 35);
    }

    #[test]
    fn basis_monomials_are_sorted_and_reduced() {
        let q = fermat_quotient(3, 1);
        let basis = q.basis_monomials(4);
        for m in &basis {
            assert!(!q.leading_monomial().divides(m));
        }
        for w in basis.windows(2) {
            assert_eq!(
                q.order().compare(&w[0], &w[1]),
                std::cmp::Ordering::Less
            );
        }
    }

    #[test]
    fn construction_errors() {
        let r = Ring::laurent(&["x", "y", "z"]);
        let m = Poly::parse(&r, "x^3 - 1").unwrap();
        assert_eq!(
            QuotientRing::new(m, MonomialOrder::lex(vec![2, 1, 0])).unwrap_err(),
            QuotientError::LaurentAmbient
        );
        let r = Ring::poly(&["x", "y", "z"]);
        let c = Poly::parse(&r, "5").unwrap();
        assert_eq!(
            QuotientRing::with_default_order(c).unwrap_err(),
            QuotientError::TrivialModulus
        );
        let m = Poly::parse(&r, "x^3 - 1").unwrap();
        let bad = MonomialOrder::weighted(vec![-1, 1, 1], vec![0, 1, 2]);
        assert_eq!(
            QuotientRing::new(m, bad).unwrap_err(),
            QuotientError::NotWellOrder
        );
        let q = fermat_quotient(3, 1);
        let foreign = Poly::parse(&Ring::poly(&["a"]), "a").unwrap();
        assert_eq!(
            q.normal_form(&foreign).unwrap_err(),
            QuotientError::ForeignElement
        );
    }

    #[test]
    fn exact_quotient_detects_divisibility() {
        let r = Ring::poly(&["x", "y"]);
        let f = Poly::parse(&r, "x^2 - y^2").unwrap();
        let g = Poly::parse(&r, "x + y").unwrap();
        let q = exact_quotient(&f, &g).unwrap();
        assert_eq!(q.to_string(), "-y + x");
        assert!(exact_quotient(&g, &f).is_none());
    }
}
