//! Monomial orders: lexicographic, graded, graded-reverse, and weighted,
//! each over an explicit variable precedence.
//!
//! A precedence is a permutation of the ring's variable indices, highest
//! first. Orders are total and multiplicative; `is_well_order` reports
//! whether polynomial-mode division terminates under the order (always for
//! lex and the graded orders, only for strictly positive weights in the
//! weighted case).

use std::cmp::Ordering;

use crate::poly::{MPoly, Monomial, Ring};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
    /// Weighted degree first, lexicographic tie-break.
    Weighted(Vec<i64>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// Variable indices, highest precedence first.
    precedence: Vec<usize>,
}

fn check_precedence(precedence: &[usize]) {
    let n = precedence.len();
    let mut seen = vec![false; n];
    for &v in precedence {
        assert!(v < n, "precedence index {v} out of range");
        assert!(!seen[v], "duplicate precedence index {v}");
        seen[v] = true;
    }
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> MonomialOrder {
        check_precedence(&precedence);
        if let OrderKind::Weighted(w) = &kind {
            assert_eq!(
                w.len(),
                precedence.len(),
                "weight vector length must match variable count"
            );
        }
        MonomialOrder { kind, precedence }
    }

    pub fn lex(precedence: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, precedence)
    }

    pub fn grlex(precedence: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::GrLex, precedence)
    }

    pub fn grevlex(precedence: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::GrevLex, precedence)
    }

    pub fn weighted(weights: Vec<i64>, precedence: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Weighted(weights), precedence)
    }

    /// Precedence built from variable names, highest first.
    pub fn precedence_of(ring: &Ring, names_high_to_low: &[&str]) -> Vec<usize> {
        assert_eq!(
            names_high_to_low.len(),
            ring.nvars(),
            "precedence must list every variable"
        );
        names_high_to_low
            .iter()
            .map(|n| {
                ring.var_index(n)
                    .unwrap_or_else(|| panic!("no variable named {n:?}"))
            })
            .collect()
    }

    /// Declared order as precedence: first declared variable highest.
    pub fn declared(ring: &Ring) -> Vec<usize> {
        (0..ring.nvars()).collect()
    }

    /// Reverse-declared precedence: last declared variable highest.
    pub fn reverse_declared(ring: &Ring) -> Vec<usize> {
        (0..ring.nvars()).rev().collect()
    }

    /// Default normal-form order for quotients of `k[x, y, z]`: lex with the
    /// last declared variable highest, so for `x, y, z` the power `z^d`
    /// leads a monic modulus of degree `d` in `z`.
    pub fn default_quotient(ring: &Ring) -> MonomialOrder {
        MonomialOrder::lex(Self::reverse_declared(ring))
    }

    /// Default basis order: graded reverse lexicographic, first declared
    /// variable highest.
    pub fn default_groebner(ring: &Ring) -> MonomialOrder {
        MonomialOrder::grevlex(Self::declared(ring))
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn is_well_order(&self) -> bool {
        match &self.kind {
            OrderKind::Lex | OrderKind::GrLex | OrderKind::GrevLex => true,
            OrderKind::Weighted(w) => w.iter().all(|&x| x > 0),
        }
    }

    fn lex_tie(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.precedence {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.0.len(), self.precedence.len(), "monomial arity mismatch");
        assert_eq!(b.0.len(), self.precedence.len(), "monomial arity mismatch");
        match &self.kind {
            OrderKind::Lex => self.lex_tie(a, b),
            OrderKind::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.lex_tie(a, b)),
            OrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.precedence.iter().rev() {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        // smaller exponent in the least variable wins
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
            OrderKind::Weighted(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| self.lex_tie(a, b)),
        }
    }
}

pub fn leading_term<'a, S: Scalar>(
    f: &'a MPoly<S>,
    ord: &MonomialOrder,
) -> Option<(&'a Monomial, &'a S)> {
    f.terms().max_by(|(m, _), (n, _)| ord.compare(m, n))
}

pub fn leading_monomial<'a, S: Scalar>(
    f: &'a MPoly<S>,
    ord: &MonomialOrder,
) -> Option<&'a Monomial> {
    leading_term(f, ord).map(|(m, _)| m)
}

/// Terms of `f` sorted descending under `ord`.
pub fn sorted_terms<'a, S: Scalar>(
    f: &'a MPoly<S>,
    ord: &MonomialOrder,
) -> Vec<(&'a Monomial, &'a S)> {
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by(|(m, _), (n, _)| ord.compare(n, m));
    terms
}
