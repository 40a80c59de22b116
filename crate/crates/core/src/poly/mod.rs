//! Sparse multivariate polynomial and Laurent polynomial arithmetic.
//!
//! A [`Ring`] fixes the variable names and the mode (ordinary or Laurent);
//! a [`MPoly`] is an ordered map from exponent vectors to nonzero
//! coefficients over such a ring. All arithmetic is exact for exact scalar
//! types; nothing here ever rounds.
//!
//! Canonical printing orders terms by total degree (descending), breaking
//! ties by the exponents of the later-declared variables first. For the
//! declared list `x, y, z` this prints `3*z^2 + x*y`, and univariate
//! polynomials come out highest power first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;

pub mod parse;

pub use parse::{parse, ParseError};

/// Ring mode: exponents are nonnegative, or arbitrary integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    Poly,
    Laurent,
}

#[derive(Debug)]
struct RingInner {
    names: Vec<String>,
    mode: Mode,
}

/// Shared descriptor of a polynomial ring: variable names plus mode.
///
/// Cheap to clone; two rings compare equal when their names and mode agree,
/// so independently constructed descriptors of the same ring interoperate.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.names == other.0.names && self.0.mode == other.0.mode)
    }
}

impl Eq for Ring {}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(names: Vec<S>, mode: Mode) -> Ring {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for n in &names {
            assert!(valid_ident(n), "invalid variable name {n:?}");
        }
        for (i, n) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(n),
                "duplicate variable name {n:?}"
            );
        }
        Ring(Arc::new(RingInner { names, mode }))
    }

    pub fn poly(names: &[&str]) -> Ring {
        Ring::new(names.to_vec(), Mode::Poly)
    }

    pub fn laurent(names: &[&str]) -> Ring {
        Ring::new(names.to_vec(), Mode::Laurent)
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.0.names[var]
    }

    pub fn mode(&self) -> Mode {
        self.0.mode
    }

    pub fn is_laurent(&self) -> bool {
        self.0.mode == Mode::Laurent
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }
}

/// Exponent vector of one monomial. Entries may be negative only when the
/// owning ring is in Laurent mode; the `MPoly` constructors enforce that.
///
/// The derived `Ord` is a structural (element-wise) order used only for map
/// keys; the mathematically meaningful orders live in [`crate::order`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, var: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        assert_eq!(weights.len(), self.0.len(), "weight vector length mismatch");
        self.0.iter().zip(weights).map(|(&e, &w)| e * w).sum()
    }

    pub fn exp(&self, var: usize) -> i64 {
        self.0[var]
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        let exps = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<_, _>>()?;
        Ok(Monomial(exps))
    }

    /// Divisibility in the polynomial-mode sense: every exponent of `self`
    /// is at most the matching exponent of `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    pub fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&divisor.0)
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    fn has_negative(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("negative exponent {exp} for {var} outside Laurent mode")]
    NegativeExponent { var: String, exp: i64 },
    #[error("negative power of a polynomial that is not a single invertible term")]
    NonInvertiblePower,
    #[error("exponent arithmetic overflow")]
    ExponentOverflow,
    #[error("substitution supplied {given} images for {expected} variables")]
    ImageCount { given: usize, expected: usize },
    #[error("variable {0} is absent from the target ring")]
    MissingVariable(String),
    #[error("evaluation raises zero to the negative power {exp} of {var}")]
    ZeroToNegativePower { var: String, exp: i64 },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("expected a ring with exactly three variables, found {0}")]
    NotThreeVariables(usize),
}

/// Sparse polynomial: ordered term map over a shared [`Ring`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<S> {
    ring: Ring,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> MPoly<S> {
    pub fn zero(ring: &Ring) -> MPoly<S> {
        MPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> MPoly<S> {
        MPoly::constant(ring, S::one())
    }

    pub fn constant(ring: &Ring, c: S) -> MPoly<S> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        MPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, var: usize) -> MPoly<S> {
        assert!(var < ring.nvars(), "variable index out of range");
        MPoly::monomial(ring, Monomial::var(ring.nvars(), var), S::one())
            .expect("a bare variable is valid in every mode")
    }

    /// Variable looked up by name; panics if absent (callers that accept user
    /// input resolve names through [`Ring::var_index`] first).
    pub fn named_var(ring: &Ring, name: &str) -> MPoly<S> {
        let i = ring
            .var_index(name)
            .unwrap_or_else(|| panic!("no variable named {name:?}"));
        MPoly::var(ring, i)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: S) -> Result<MPoly<S>, PolyError> {
        assert_eq!(m.0.len(), ring.nvars(), "exponent vector length mismatch");
        if !ring.is_laurent() {
            if let Some(var) = m.0.iter().position(|&e| e < 0) {
                return Err(PolyError::NegativeExponent {
                    var: ring.name(var).to_string(),
                    exp: m.0[var],
                });
            }
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Ok(MPoly {
            ring: ring.clone(),
            terms,
        })
    }

    /// Normalizing constructor: sums duplicate monomials, drops zeros.
    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, S)>,
    ) -> Result<MPoly<S>, PolyError> {
        let mut acc = MPoly::zero(ring);
        for (m, c) in terms {
            acc.add_term(m, c)?;
        }
        Ok(acc)
    }

    fn add_term(&mut self, m: Monomial, c: S) -> Result<(), PolyError> {
        assert_eq!(m.0.len(), self.ring.nvars(), "exponent vector length mismatch");
        if !self.ring.is_laurent() && m.has_negative() {
            let var = m.0.iter().position(|&e| e < 0).unwrap();
            return Err(PolyError::NegativeExponent {
                var: self.ring.name(var).to_string(),
                exp: m.0[var],
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn parse(ring: &Ring, input: &str) -> Result<MPoly<S>, ParseError> {
        parse(ring, input)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&S> {
        self.terms.get(m)
    }

    pub fn constant_term(&self) -> S {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The single term of a monomial polynomial, if it is one.
    pub fn as_single_term(&self) -> Option<(&Monomial, &S)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn min_weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(weights))
            .min()
    }

    pub fn max_weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(weights))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn assert_same_ring(&self, other: &MPoly<S>, op: &str) {
        assert!(
            self.ring == other.ring,
            "{op} over different rings: {:?} vs {:?}",
            self.ring.names(),
            other.ring.names()
        );
    }

    pub fn scale(&self, c: &S) -> MPoly<S> {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &S) -> MPoly<S> {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, b)| {
                let prod = a.try_mul(m).expect("exponent overflow in term product");
                (prod, b.clone() * c.clone())
            })
            .filter(|(_, a)| !a.is_zero())
            .collect();
        MPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, k: i64) -> Result<MPoly<S>, PolyError> {
        if k == 0 {
            return Ok(MPoly::one(&self.ring));
        }
        if k < 0 {
            let (m, c) = self
                .as_single_term()
                .ok_or(PolyError::NonInvertiblePower)?;
            let inv = S::one() / c.clone();
            let exps: Vec<i64> = m
                .0
                .iter()
                .map(|&e| e.checked_mul(k).ok_or(PolyError::ExponentOverflow))
                .collect::<Result<_, _>>()?;
            // c^k for negative k is inv^(-k)
            let mut coeff = S::one();
            for _ in 0..(-k) {
                coeff = coeff * inv.clone();
            }
            return MPoly::monomial(&self.ring, Monomial(exps), coeff);
        }
        let mut acc = MPoly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn derivative(&self, var: usize) -> MPoly<S> {
        assert!(var < self.ring.nvars(), "variable index out of range");
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] = e - 1;
            let coeff = c.clone() * S::from_int(e);
            out.add_term(Monomial(exps), coeff)
                .expect("derivative cannot create a fresh negative exponent");
        }
        out
    }

    /// Total substitution: variable `i` of this ring is replaced by
    /// `images[i]`, a polynomial over `target`. Negative source exponents
    /// require the matching image to be a single invertible term.
    pub fn substitute(
        &self,
        target: &Ring,
        images: &[MPoly<S>],
    ) -> Result<MPoly<S>, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::ImageCount {
                given: images.len(),
                expected: self.ring.nvars(),
            });
        }
        for img in images {
            if img.ring() != target {
                return Err(PolyError::RingMismatch(
                    "substitution image lies in a different ring".into(),
                ));
            }
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = images[var].pow(e)?;
                term = &term * &p;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Embeds into a (super)ring, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<MPoly<S>, PolyError> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.names() {
            let idx = target
                .var_index(name)
                .ok_or_else(|| PolyError::MissingVariable(name.clone()))?;
            map.push(idx);
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0i64; target.nvars()];
            for (src, &e) in m.0.iter().enumerate() {
                exps[map[src]] = e;
            }
            out.add_term(Monomial(exps), c.clone())?;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[S]) -> Result<S, PolyError> {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension mismatch");
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = if e > 0 {
                    point[var].clone()
                } else {
                    if point[var].is_zero() {
                        return Err(PolyError::ZeroToNegativePower {
                            var: self.ring.name(var).to_string(),
                            exp: e,
                        });
                    }
                    S::one() / point[var].clone()
                };
                for _ in 0..e.unsigned_abs() {
                    v = v * base.clone();
                }
            }
            acc = acc + v;
        }
        Ok(acc)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MPoly<T> {
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

impl<S: Scalar> std::ops::Neg for &MPoly<S> {
    type Output = MPoly<S>;
    fn neg(self) -> MPoly<S> {
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<S: Scalar> std::ops::Add for &MPoly<S> {
    type Output = MPoly<S>;
    fn add(self, rhs: &MPoly<S>) -> MPoly<S> {
        self.assert_same_ring(rhs, "addition");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone())
                .expect("sum of valid terms stays valid");
        }
        out
    }
}

impl<S: Scalar> std::ops::Sub for &MPoly<S> {
    type Output = MPoly<S>;
    fn sub(self, rhs: &MPoly<S>) -> MPoly<S> {
        self.assert_same_ring(rhs, "subtraction");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone())
                .expect("difference of valid terms stays valid");
        }
        out
    }
}

impl<S: Scalar> std::ops::Mul for &MPoly<S> {
    type Output = MPoly<S>;
    fn mul(self, rhs: &MPoly<S>) -> MPoly<S> {
        self.assert_same_ring(rhs, "multiplication");
        let mut out = MPoly::zero(&self.ring);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                let prod = m.try_mul(n).expect("exponent overflow in product");
                out.add_term(prod, a.clone() * b.clone())
                    .expect("product of valid terms stays valid");
            }
        }
        out
    }
}

/// Determinant of the Jacobian of `(f, g, h)` with respect to the three
/// variables `vars`, over any shared ring containing them.
pub fn jacobian_det3<S: Scalar>(
    f: &MPoly<S>,
    g: &MPoly<S>,
    h: &MPoly<S>,
    vars: [usize; 3],
) -> MPoly<S> {
    f.assert_same_ring(g, "jacobian");
    f.assert_same_ring(h, "jacobian");
    let row = |p: &MPoly<S>| vars.map(|v| p.derivative(v));
    let [fx, fy, fz] = row(f);
    let [gx, gy, gz] = row(g);
    let [hx, hy, hz] = row(h);
    let minor = |a: &MPoly<S>, b: &MPoly<S>, c: &MPoly<S>, d: &MPoly<S>| &(a * d) - &(b * c);
    let m1 = minor(&gy, &gz, &hy, &hz);
    let m2 = minor(&gx, &gz, &hx, &hz);
    let m3 = minor(&gx, &gy, &hx, &hy);
    &(&(&fx * &m1) - &(&fy * &m2)) + &(&fz * &m3)
}

/// Jacobian determinant over a ring with exactly three variables.
pub fn jacobian_det<S: Scalar>(
    f: &MPoly<S>,
    g: &MPoly<S>,
    h: &MPoly<S>,
) -> Result<MPoly<S>, PolyError> {
    let n = f.ring().nvars();
    if n != 3 {
        return Err(PolyError::NotThreeVariables(n));
    }
    Ok(jacobian_det3(f, g, h, [0, 1, 2]))
}

/// Canonical printing comparator: total degree first, ties broken by the
/// exponent vector read from the last declared variable backwards. Returns
/// `Greater` for the monomial printed earlier.
pub fn print_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

fn write_monomial(f: &mut impl fmt::Write, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (var, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(ring.name(var))?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl<S: Scalar> fmt::Display for MPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<&Monomial> = self.terms.keys().collect();
        order.sort_by(|a, b| print_cmp(b, a));
        for (i, m) in order.iter().enumerate() {
            let c = &self.terms[*m];
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_monomial(f, &self.ring, m)?;
            } else {
                write!(f, "{mag}*")?;
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = MPoly<Rational>;

    fn xyz() -> Ring {
        Ring::poly(&["x", "y", "z"])
    }

    fn p(ring: &Ring, s: &str) -> P {
        P::parse(ring, s).unwrap()
    }

    #[test]
    fn printing_matches_expected_strings() {
        let r = xyz();
        assert_eq!(p(&r, "3*z^2 + x*y").to_string(), "3*z^2 + x*y");
        assert_eq!(p(&r, "x*y + 3*z^2").to_string(), "3*z^2 + x*y");
        assert_eq!(p(&r, "0").to_string(), "0");
        assert_eq!(p(&r, "x - x").to_string(), "0");
        assert_eq!(p(&r, "-x + 2").to_string(), "-x + 2");
        assert_eq!(p(&r, "y - 1/2").to_string(), "y - 1/2");
        let u = Ring::poly(&["x"]);
        let sq = p(&u, "x + 1").pow(2).unwrap();
        assert_eq!(sq.to_string(), "x^2 + 2*x + 1");
    }

    #[test]
    fn laurent_negative_exponents_print_and_parse() {
        let r = Ring::laurent(&["x", "y"]);
        let f = p(&r, "x^-1*y");
        assert_eq!(f.to_string(), "x^-1*y");
        assert_eq!(f.pow(-2).unwrap().to_string(), "x^2*y^-2");
    }

    #[test]
    fn polynomial_mode_rejects_negative_exponents() {
        let r = Ring::poly(&["x"]);
        let err = P::var(&r, 0).pow(-1).unwrap_err();
        assert_eq!(
            err,
            PolyError::NegativeExponent {
                var: "x".into(),
                exp: -1
            }
        );
        let l = Ring::laurent(&["x"]);
        let inv = P::var(&l, 0).pow(-1).unwrap();
        assert_eq!(inv.to_string(), "x^-1");
    }

    #[test]
    fn arithmetic_basics() {
        let r = xyz();
        let f = p(&r, "x + y");
        let g = p(&r, "x - y");
        assert_eq!((&f * &g).to_string(), "-y^2 + x^2");
        assert_eq!((&f - &f).to_string(), "0");
        let h = p(&r, "2*x^2 + 1/3");
        assert_eq!((&h + &h).to_string(), "4*x^2 + 2/3");
    }

    #[test]
    fn derivative_power_rule() {
        let r = xyz();
        let omega = p(&r, "x^3 + y^3 + z^3 + x*y*z");
        assert_eq!(omega.derivative(2).to_string(), "3*z^2 + x*y");
        assert_eq!(omega.derivative(0).to_string(), "y*z + 3*x^2");
    }

    #[test]
    fn derivative_laurent() {
        let r = Ring::laurent(&["x"]);
        let f = p(&r, "x^-1");
        assert_eq!(f.derivative(0).to_string(), "-x^-2");
    }

    #[test]
    fn substitution_shifts_and_mixes() {
        let r = xyz();
        let two = Ring::poly(&["u", "v"]);
        let f = p(&r, "x^2 + y + z");
        let images = vec![p(&two, "u + 1"), p(&two, "v"), p(&two, "u*v")];
        let g = f.substitute(&two, &images).unwrap();
        assert_eq!(g.to_string(), "u*v + u^2 + v + 2*u + 1");
    }

    #[test]
    fn substitution_rejects_negative_on_non_monomial() {
        let r = Ring::laurent(&["x"]);
        let f = p(&r, "x^-1");
        let target = Ring::laurent(&["u"]);
        let images = vec![p(&target, "u + 1")];
        assert_eq!(
            f.substitute(&target, &images).unwrap_err(),
            PolyError::NonInvertiblePower
        );
    }

    #[test]
    fn jacobian_of_simple_triple() {
        let r = xyz();
        let f = p(&r, "x^2");
        let g = p(&r, "y");
        let h = p(&r, "z");
        assert_eq!(jacobian_det(&f, &g, &h).unwrap().to_string(), "2*x");
    }

    #[test]
    fn jacobian_requires_three_variables() {
        let r = Ring::poly(&["x", "y"]);
        let f = P::var(&r, 0);
        assert_eq!(
            jacobian_det(&f, &f, &f).unwrap_err(),
            PolyError::NotThreeVariables(2)
        );
    }

    #[test]
    fn embed_into_larger_ring() {
        let small = xyz();
        let big = Ring::laurent(&["t", "x", "y", "z"]);
        let f = p(&small, "x*y - z^3");
        let g = f.embed(&big).unwrap();
        assert_eq!(g.to_string(), "-z^3 + x*y");
        assert_eq!(g.ring(), &big);
    }

    #[test]
    fn eval_rational_points() {
        let r = xyz();
        let f = p(&r, "x^2 + y*z - 1/2");
        let val = f
            .eval(&[
                Rational::from_int(2),
                Rational::from_int(1),
                Rational::from_int(3),
            ])
            .unwrap();
        assert_eq!(val.to_string(), "13/2");
    }
}
