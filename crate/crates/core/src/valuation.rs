//! Discrete valuations and filtrations induced by generator weights.
//!
//! A `FilteredContext` packages a carrier (weighted polynomial or Laurent
//! ring, weighted quotient, change of generators, point shift, or divisor
//! order), an optional Poisson structure on the source ring, a declared
//! weight `w`, and a label naming the construction. Values extend to
//! fractions by subtraction, leading forms realize the associated graded
//! ring, and the generator-level quantities `min_weight_w` and
//! `is_classical_on_generators` test the bracket inequality
//! `v({a,b}) >= v(a) + v(b) - w` and its strict form.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::poisson::{PoissonError, PoissonStructure};
use crate::poly::{MPoly, Monomial, Ring};
use crate::quotient::{exact_quotient, QuotientError, QuotientRing};
use crate::{Poly, Rational};

/// Value of an element under a valuation: an integer, or infinity exactly
/// for the zero element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ValuationValue {
    Finite(i64),
    Infinity,
}

impl ValuationValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ValuationValue::Infinity)
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            ValuationValue::Finite(v) => Some(*v),
            ValuationValue::Infinity => None,
        }
    }

    pub fn plus(self, other: ValuationValue) -> ValuationValue {
        match (self, other) {
            (ValuationValue::Finite(a), ValuationValue::Finite(b)) => ValuationValue::Finite(a + b),
            _ => ValuationValue::Infinity,
        }
    }

    /// Difference for fraction values; the subtrahend must be finite.
    fn minus_finite(self, den: i64) -> ValuationValue {
        match self {
            ValuationValue::Finite(a) => ValuationValue::Finite(a - den),
            ValuationValue::Infinity => ValuationValue::Infinity,
        }
    }

    fn scaled(self, d: i64) -> ValuationValue {
        match self {
            ValuationValue::Finite(a) => ValuationValue::Finite(a * d),
            ValuationValue::Infinity => ValuationValue::Infinity,
        }
    }
}

impl fmt::Display for ValuationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationValue::Finite(v) => write!(f, "{v}"),
            ValuationValue::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum ValuationError {
    #[error("element lives in a different ring than this context")]
    RingMismatch,
    #[error("weight vector length must match the variable count")]
    WeightArity,
    #[error("the zero element has no leading form")]
    ZeroElement,
    #[error("denominator is zero in the carrier")]
    ZeroDenominator,
    #[error("this context has no attached Poisson structure")]
    MissingStructure,
    #[error("every generator bracket vanishes; no least admissible weight exists")]
    NoBracketConstraint,
    #[error("w = {w} is below the minimal admissible weight {min_w}")]
    WNotAdmissible { min_w: i64, w: i64 },
    #[error("declared weight {declared} is below the generator minimum {min_w}")]
    DeclaredWeightTooSmall { min_w: i64, declared: i64 },
    #[error("divisor must be a nonconstant polynomial")]
    ConstantDivisor,
    #[error("this family is only defined for weights w <= 0")]
    PositiveWeightRejected,
    #[error("scale factor must be a positive integer")]
    ScaleNotPositive,
    #[error("point coordinate count must match the variable count")]
    PointArity,
    #[error("leading forms are not defined for divisor-order carriers")]
    UnsupportedLeadingForm,
    #[error("potential must be homogeneous and nonconstant")]
    BadPotential,
    #[error("parameter must be nonzero; the zero shift is the plain Adams case")]
    ZeroShift,
    #[error(
        "modulus must be c*t^D plus a t-free part of degree >= D, t the last variable"
    )]
    ModulusShape,
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Poisson(#[from] PoissonError),
}

/// Which named construction produced a context.
#[derive(Clone, Debug, PartialEq)]
pub enum ContextLabel {
    Induced,
    AdamsId,
    AdamsNegId,
    NuC { xi: Rational },
    WeylNuXi { xi: Rational },
    TorusLattice { v: Vec<i64> },
    GAdic,
    Point { p: Vec<Rational> },
}

impl fmt::Display for ContextLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextLabel::Induced => write!(f, "induced"),
            ContextLabel::AdamsId => write!(f, "adams-id"),
            ContextLabel::AdamsNegId => write!(f, "adams-neg-id"),
            ContextLabel::NuC { xi } => write!(f, "nu-c(xi={xi})"),
            ContextLabel::WeylNuXi { xi } => write!(f, "nu-xi(xi={xi})"),
            ContextLabel::TorusLattice { v } => {
                write!(f, "torus-lattice(v=[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "])")
            }
            ContextLabel::GAdic => write!(f, "g-adic"),
            ContextLabel::Point { p } => {
                write!(f, "point(")?;
                for (i, x) in p.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Carrier {
    /// Minimal weighted degree over the monomials of the element itself.
    Weighted { ring: Ring, weights: Vec<i64> },
    /// Minimal weighted degree of the normal form in a principal quotient.
    /// Sound because the quotient order puts the modulus's leading monomial
    /// at maximal total degree, so reduction never increases the relevant
    /// weighted degree and the normal form realizes the filtration.
    QuotientNF {
        q: QuotientRing<Rational>,
        weights: Vec<i64>,
    },
    /// Order of vanishing along the last variable in a principal quotient
    /// whose modulus is `c*t^D + m0(rest)`: the filtration induced by
    /// weight 1 on `t` and weight 0 elsewhere. Computed by peeling: the
    /// value exceeds `k` exactly when, after writing the representative as
    /// `f0 + t*r`, the `t`-free part `f0` is divisible by `m0`.
    TopPower {
        q: QuotientRing<Rational>,
        var: usize,
        degree: i64,
        coeff: Rational,
        zfree: Poly,
    },
    /// Evaluate through a change of generators into a weighted target ring.
    Substituted {
        source: Ring,
        target: Ring,
        images: Vec<Poly>,
        weights: Vec<i64>,
        eff_gens: Vec<Poly>,
    },
    /// Minimal total degree after recentering at a rational point.
    PointShift { ring: Ring, point: Vec<Rational> },
    /// Largest power of a fixed divisor; irreducibility of the divisor is
    /// the caller's responsibility (no factorization here).
    GAdic { divisor: Poly },
}

/// A valuation-style filtration with its carrier, structure, and label.
#[derive(Clone, Debug)]
pub struct FilteredContext {
    structure: Option<PoissonStructure<Rational>>,
    carrier: Carrier,
    declared_w: i64,
    scale: i64,
    label: ContextLabel,
}

fn min_weight_part(f: &Poly, weights: &[i64]) -> Option<(Poly, i64)> {
    let min = f.min_weighted_degree(weights)?;
    let ring = f.ring().clone();
    let mut form = MPoly::zero(&ring);
    for (m, c) in f.terms() {
        if m.weighted_degree(weights) == min {
            form = &form
                + &MPoly::monomial(&ring, m.clone(), c.clone()).expect("existing term is valid");
        }
    }
    Some((form, min))
}

/// Minimal weighted degree over the monomials of `f`; infinity for zero.
pub fn value_poly(weights: &[i64], f: &Poly) -> ValuationValue {
    assert_eq!(weights.len(), f.ring().nvars(), "weight vector arity");
    match f.min_weighted_degree(weights) {
        Some(v) => ValuationValue::Finite(v),
        None => ValuationValue::Infinity,
    }
}

/// How a point sits relative to a two- or three-variable structure:
/// `Classical` when every generator bracket vanishes there; otherwise
/// `WeylType` for two variables and `Nonclassical` for three.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    Classical,
    WeylType,
    Nonclassical,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointClass::Classical => write!(f, "classical"),
            PointClass::WeylType => write!(f, "weyl-type"),
            PointClass::Nonclassical => write!(f, "nonclassical"),
        }
    }
}

pub fn classify_point(
    structure: &PoissonStructure<Rational>,
    p: &[Rational],
) -> Result<PointClass, ValuationError> {
    let n = structure.ring().nvars();
    if structure.ring().is_laurent() {
        return Err(ValuationError::RingMismatch);
    }
    if p.len() != n {
        return Err(ValuationError::PointArity);
    }
    let mut all_vanish = true;
    for i in 0..n {
        for j in (i + 1)..n {
            let b = structure.generator_bracket(i, j);
            let at_p = b.eval(p).map_err(PoissonError::from)?;
            if !at_p.is_zero() {
                all_vanish = false;
            }
        }
    }
    Ok(if all_vanish {
        PointClass::Classical
    } else if n == 2 {
        PointClass::WeylType
    } else {
        PointClass::Nonclassical
    })
}

fn check_quotient_shape(q: &QuotientRing<Rational>) -> Result<(), ValuationError> {
    // the leading monomial must attain the maximal total degree of the
    // modulus, so reduction can only push weighted degrees inward
    let lm = crate::order::leading_monomial(q.modulus(), q.order())
        .expect("modulus is nonzero by construction");
    if Some(lm.degree()) != q.modulus().total_degree() {
        return Err(ValuationError::ModulusShape);
    }
    Ok(())
}

fn homogeneous_degree(omega: &Poly) -> Result<i64, ValuationError> {
    if !omega.is_homogeneous() {
        return Err(ValuationError::BadPotential);
    }
    match omega.total_degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(ValuationError::BadPotential),
    }
}

impl FilteredContext {
    /// Plain induced filtration from one integer weight per variable.
    pub fn induced(ring: &Ring, weights: Vec<i64>, declared_w: i64) -> Result<Self, ValuationError> {
        if weights.len() != ring.nvars() {
            return Err(ValuationError::WeightArity);
        }
        Ok(FilteredContext {
            structure: None,
            carrier: Carrier::Weighted {
                ring: ring.clone(),
                weights,
            },
            declared_w,
            scale: 1,
            label: ContextLabel::Induced,
        })
    }

    /// Attach a Poisson structure on the source ring, checking the declared
    /// weight against the generator minimum.
    pub fn attach_structure(
        mut self,
        structure: PoissonStructure<Rational>,
    ) -> Result<Self, ValuationError> {
        if structure.ring() != self.source_ring() {
            return Err(ValuationError::RingMismatch);
        }
        self.structure = Some(structure);
        match self.min_weight_w() {
            Ok(min_w) if min_w > self.declared_w => {
                Err(ValuationError::DeclaredWeightTooSmall {
                    min_w,
                    declared: self.declared_w,
                })
            }
            Ok(_) | Err(ValuationError::NoBracketConstraint) => Ok(self),
            Err(e) => Err(e),
        }
    }

    fn quotient_context(
        omega: &Poly,
        xi: &Rational,
        sign: i64,
        declared_w: i64,
        label: ContextLabel,
    ) -> Result<Self, ValuationError> {
        let structure = PoissonStructure::from_potential(omega)?;
        let modulus = omega - &Poly::constant(omega.ring(), xi.clone());
        let q = QuotientRing::with_default_order(modulus)?;
        check_quotient_shape(&q)?;
        let weights = vec![sign; omega.ring().nvars()];
        Ok(FilteredContext {
            structure: Some(structure),
            carrier: Carrier::QuotientNF { q, weights },
            declared_w,
            scale: 1,
            label,
        })
    }

    /// Weight `+1` per variable on the graded quotient by a homogeneous
    /// potential: values are minimal total degrees of normal forms.
    pub fn adams_id(omega: &Poly) -> Result<Self, ValuationError> {
        let d = homogeneous_degree(omega)?;
        Self::quotient_context(omega, &Rational::zero(), 1, 3 - d, ContextLabel::AdamsId)
    }

    /// Weight `-1` per variable on the same graded quotient: values are
    /// negated maximal total degrees of normal forms.
    pub fn adams_neg_id(omega: &Poly) -> Result<Self, ValuationError> {
        let d = homogeneous_degree(omega)?;
        Self::quotient_context(omega, &Rational::zero(), -1, d - 3, ContextLabel::AdamsNegId)
    }

    /// The filtration on the quotient by `omega - xi` (nonzero `xi`) whose
    /// associated graded ring is the graded quotient by `omega` itself.
    pub fn nu_c(omega: &Poly, xi: Rational) -> Result<Self, ValuationError> {
        let d = homogeneous_degree(omega)?;
        if xi.is_zero() {
            return Err(ValuationError::ZeroShift);
        }
        Self::quotient_context(omega, &xi.clone(), -1, d - 3, ContextLabel::NuC { xi })
    }

    /// Induced filtration with weight 1 on the last variable and 0 on the
    /// others, on the quotient by `omega - xi`. Requires the modulus to be
    /// `c*t^D` plus a `t`-free part of degree at least `D` in the other
    /// variables, `t` the last variable; the value counts how many factors
    /// of `t` the class absorbs through the relation.
    pub fn induced_top_variable(omega: &Poly, xi: Rational) -> Result<Self, ValuationError> {
        let structure = PoissonStructure::from_potential(omega)?;
        let ring = omega.ring().clone();
        let var = ring.nvars() - 1;
        let modulus = omega - &Poly::constant(&ring, xi);
        let mut coeff: Option<(i64, Rational)> = None;
        let mut zfree = Poly::zero(&ring);
        for (m, c) in modulus.terms() {
            if m.exp(var) == 0 {
                zfree = &zfree
                    + &MPoly::monomial(&ring, m.clone(), c.clone()).expect("term is valid");
            } else if m.exp(var) == m.degree() {
                if coeff.is_some() {
                    return Err(ValuationError::ModulusShape);
                }
                coeff = Some((m.exp(var), c.clone()));
            } else {
                return Err(ValuationError::ModulusShape);
            }
        }
        let Some((degree, coeff)) = coeff else {
            return Err(ValuationError::ModulusShape);
        };
        if degree < 1 || zfree.as_constant().is_some() {
            return Err(ValuationError::ModulusShape);
        }
        // termination of the peeling loop needs the replaced part to have
        // no larger degree than what it replaces
        if zfree.total_degree() < Some(degree) {
            return Err(ValuationError::ModulusShape);
        }
        let q = QuotientRing::with_default_order(modulus)?;
        Ok(FilteredContext {
            structure: Some(structure),
            carrier: Carrier::TopPower {
                q,
                var,
                degree,
                coeff,
                zfree,
            },
            declared_w: 1,
            scale: 1,
            label: ContextLabel::Induced,
        })
    }

    /// Lattice-weight valuation on a Laurent torus structure.
    pub fn torus_lattice(
        structure: PoissonStructure<Rational>,
        v: Vec<i64>,
    ) -> Result<Self, ValuationError> {
        let ring = structure.ring().clone();
        if !ring.is_laurent() {
            return Err(ValuationError::RingMismatch);
        }
        if v.len() != ring.nvars() {
            return Err(ValuationError::WeightArity);
        }
        Ok(FilteredContext {
            structure: Some(structure),
            carrier: Carrier::Weighted {
                ring,
                weights: v.clone(),
            },
            declared_w: 0,
            scale: 1,
            label: ContextLabel::TorusLattice { v },
        })
    }

    /// The two-variable family on `{x,y} = 1` built from `f = x + y + xi*y^2`:
    /// elements are rewritten in the generators `(f, y)` with weights
    /// `(1, w-1)`, via the substitution `x -> F - y - xi*y^2`.
    pub fn weyl_nu_xi(xi: Rational, w: i64) -> Result<Self, ValuationError> {
        if w > 0 {
            return Err(ValuationError::PositiveWeightRejected);
        }
        let structure = PoissonStructure::weyl();
        let source = structure.ring().clone();
        let target = Ring::poly(&["F", "y"]);
        let cap_f = Poly::var(&target, 0);
        let ty = Poly::var(&target, 1);
        let x_image = &(&cap_f - &ty) - &(&ty * &ty).scale(&xi);
        let images = vec![x_image, ty];
        let sx = Poly::var(&source, 0);
        let sy = Poly::var(&source, 1);
        let f_xi = &(&sx + &sy) + &(&sy * &sy).scale(&xi);
        Ok(FilteredContext {
            structure: Some(structure),
            carrier: Carrier::Substituted {
                source,
                target,
                images,
                weights: vec![1, w - 1],
                eff_gens: vec![f_xi, sy],
            },
            declared_w: w,
            scale: 1,
            label: ContextLabel::WeylNuXi { xi },
        })
    }

    /// Divisor-order valuation for a nonconstant `divisor` on the ring of
    /// the given structure. Irreducibility of the divisor is the caller's
    /// contract; the declared weight 1 is what a principal prime provides.
    pub fn gadic(
        structure: PoissonStructure<Rational>,
        divisor: Poly,
    ) -> Result<Self, ValuationError> {
        if divisor.ring() != structure.ring() {
            return Err(ValuationError::RingMismatch);
        }
        if divisor.ring().is_laurent() {
            return Err(ValuationError::RingMismatch);
        }
        if divisor.as_constant().is_some() {
            return Err(ValuationError::ConstantDivisor);
        }
        Ok(FilteredContext {
            structure: Some(structure),
            carrier: Carrier::GAdic { divisor },
            declared_w: 1,
            scale: 1,
            label: ContextLabel::GAdic,
        })
    }

    /// Order-of-vanishing valuation at a rational point: minimal total
    /// degree after recentering. Declared weight 2, the generic value for
    /// a maximal ideal at a smooth point.
    pub fn point(
        structure: PoissonStructure<Rational>,
        p: Vec<Rational>,
    ) -> Result<Self, ValuationError> {
        let ring = structure.ring().clone();
        if ring.is_laurent() {
            return Err(ValuationError::RingMismatch);
        }
        if p.len() != ring.nvars() {
            return Err(ValuationError::PointArity);
        }
        Ok(FilteredContext {
            structure: Some(structure),
            carrier: Carrier::PointShift {
                ring,
                point: p.clone(),
            },
            declared_w: 2,
            scale: 1,
            label: ContextLabel::Point { p },
        })
    }

    /// Multiply all values and the declared weight by a positive integer.
    pub fn scale_valuation(&self, d: i64) -> Result<Self, ValuationError> {
        if d < 1 {
            return Err(ValuationError::ScaleNotPositive);
        }
        let mut out = self.clone();
        out.scale *= d;
        out.declared_w *= d;
        Ok(out)
    }

    /// Ring whose elements this context evaluates.
    pub fn source_ring(&self) -> &Ring {
        match &self.carrier {
            Carrier::Weighted { ring, .. } | Carrier::PointShift { ring, .. } => ring,
            Carrier::QuotientNF { q, .. } | Carrier::TopPower { q, .. } => q.ring(),
            Carrier::Substituted { source, .. } => source,
            Carrier::GAdic { divisor } => divisor.ring(),
        }
    }

    pub fn structure(&self) -> Option<&PoissonStructure<Rational>> {
        self.structure.as_ref()
    }

    pub fn declared_w(&self) -> i64 {
        self.declared_w
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn label(&self) -> &ContextLabel {
        &self.label
    }

    fn raw_value(&self, f: &Poly) -> Result<ValuationValue, ValuationError> {
        if f.ring() != self.source_ring() {
            return Err(ValuationError::RingMismatch);
        }
        match &self.carrier {
            Carrier::Weighted { weights, .. } => Ok(value_poly(weights, f)),
            Carrier::QuotientNF { q, weights } => {
                let nf = q.normal_form(f)?;
                Ok(value_poly(weights, &nf))
            }
            Carrier::TopPower {
                var,
                degree,
                coeff,
                zfree,
                ..
            } => Ok(top_power_value(f, *var, *degree, coeff, zfree)),
            Carrier::Substituted {
                target,
                images,
                weights,
                ..
            } => {
                let image = f
                    .substitute(target, images)
                    .expect("substitution images cover every variable");
                Ok(value_poly(weights, &image))
            }
            Carrier::PointShift { ring, point } => {
                let shifted = shift_to_origin(f, ring, point);
                Ok(value_poly(&vec![1; ring.nvars()], &shifted))
            }
            Carrier::GAdic { divisor } => Ok(divisor_order(f, divisor)),
        }
    }

    /// Value of a polynomial element of the carrier.
    pub fn value(&self, f: &Poly) -> Result<ValuationValue, ValuationError> {
        Ok(self.raw_value(f)?.scaled(self.scale))
    }

    /// Value of the fraction `num/den`, independent of the representative.
    pub fn value_fraction(
        &self,
        num: &Poly,
        den: &Poly,
    ) -> Result<ValuationValue, ValuationError> {
        let dv = match self.value(den)? {
            ValuationValue::Finite(v) => v,
            ValuationValue::Infinity => return Err(ValuationError::ZeroDenominator),
        };
        Ok(self.value(num)?.minus_finite(dv))
    }

    /// Monomials achieving the minimal weighted value, with that value.
    /// For quotient carriers the form is taken on the normal form; for
    /// substituted and point carriers it lives in the carrier's own
    /// coordinates.
    pub fn leading_form(&self, f: &Poly) -> Result<(Poly, i64), ValuationError> {
        if f.ring() != self.source_ring() {
            return Err(ValuationError::RingMismatch);
        }
        let part = match &self.carrier {
            Carrier::Weighted { weights, .. } => min_weight_part(f, weights),
            Carrier::QuotientNF { q, weights } => min_weight_part(&q.normal_form(f)?, weights),
            Carrier::Substituted {
                target,
                images,
                weights,
                ..
            } => {
                let image = f
                    .substitute(target, images)
                    .expect("substitution images cover every variable");
                min_weight_part(&image, weights)
            }
            Carrier::PointShift { ring, point } => {
                min_weight_part(&shift_to_origin(f, ring, point), &vec![1; ring.nvars()])
            }
            Carrier::TopPower { .. } | Carrier::GAdic { .. } => {
                return Err(ValuationError::UnsupportedLeadingForm)
            }
        };
        match part {
            Some((form, deg)) => Ok((form, deg * self.scale)),
            None => Err(ValuationError::ZeroElement),
        }
    }

    /// Generators through which the filtration is expressed: the raw
    /// variables for most carriers, the recentered variables for point
    /// carriers, and the defining pair for the substituted family.
    pub fn effective_generators(&self) -> Vec<Poly> {
        match &self.carrier {
            Carrier::Weighted { ring, .. } => ring_vars(ring),
            Carrier::QuotientNF { q, .. } | Carrier::TopPower { q, .. } => ring_vars(q.ring()),
            Carrier::Substituted { eff_gens, .. } => eff_gens.clone(),
            Carrier::PointShift { ring, point } => (0..ring.nvars())
                .map(|i| &Poly::var(ring, i) - &Poly::constant(ring, point[i].clone()))
                .collect(),
            Carrier::GAdic { divisor } => ring_vars(divisor.ring()),
        }
    }

    /// Value of the structure bracket of two elements.
    pub fn bracket_value(&self, a: &Poly, b: &Poly) -> Result<ValuationValue, ValuationError> {
        let s = self.structure.as_ref().ok_or(ValuationError::MissingStructure)?;
        if a.ring() != self.source_ring() || b.ring() != self.source_ring() {
            return Err(ValuationError::RingMismatch);
        }
        self.value(&s.bracket(a, b))
    }

    /// The least `w` making the induced filtration a `w`-filtration on
    /// generators: the maximum of `v(a) + v(b) - v({a,b})` over effective
    /// generator pairs with nonvanishing bracket.
    pub fn min_weight_w(&self) -> Result<i64, ValuationError> {
        if self.structure.is_none() {
            return Err(ValuationError::MissingStructure);
        }
        let gens = self.effective_generators();
        let mut best: Option<i64> = None;
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let vb = match self.bracket_value(&gens[i], &gens[j])? {
                    ValuationValue::Finite(v) => v,
                    ValuationValue::Infinity => continue,
                };
                let vi = self.value(&gens[i])?.finite().expect("generators are nonzero");
                let vj = self.value(&gens[j])?.finite().expect("generators are nonzero");
                let w = vi + vj - vb;
                best = Some(best.map_or(w, |b| b.max(w)));
            }
        }
        best.ok_or(ValuationError::NoBracketConstraint)
    }

    /// Strict form of the `w`-inequality on every generator pair; true
    /// exactly when the induced graded bracket vanishes on generators.
    pub fn is_classical_on_generators(&self, w: i64) -> Result<bool, ValuationError> {
        let min_w = self.min_weight_w()?;
        if min_w > w {
            return Err(ValuationError::WNotAdmissible { min_w, w });
        }
        let gens = self.effective_generators();
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let vb = match self.bracket_value(&gens[i], &gens[j])? {
                    ValuationValue::Finite(v) => v,
                    ValuationValue::Infinity => continue,
                };
                let vi = self.value(&gens[i])?.finite().expect("generators are nonzero");
                let vj = self.value(&gens[j])?.finite().expect("generators are nonzero");
                if vb <= vi + vj - w {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Generator-level faithfulness data: whether the generator values
    /// already generate all of the integers, and whether the context is
    /// nonclassical at its declared weight. Residue dimensions are never
    /// computed here; they belong to recorded catalog facts.
    pub fn faithfulness_flags(&self) -> Result<FaithfulnessFlags, ValuationError> {
        let mut g: i64 = 0;
        for gen in self.effective_generators() {
            if let ValuationValue::Finite(v) = self.value(&gen)? {
                g = g.gcd(&v);
            }
        }
        Ok(FaithfulnessFlags {
            image_is_all_of_z: g == 1,
            nonclassical: !self.is_classical_on_generators(self.declared_w)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaithfulnessFlags {
    pub image_is_all_of_z: bool,
    pub nonclassical: bool,
}

fn ring_vars(ring: &Ring) -> Vec<Poly> {
    (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect()
}

fn shift_to_origin(f: &Poly, ring: &Ring, point: &[Rational]) -> Poly {
    let images: Vec<Poly> = (0..ring.nvars())
        .map(|i| &Poly::var(ring, i) + &Poly::constant(ring, point[i].clone()))
        .collect();
    f.substitute(ring, &images)
        .expect("shift substitution covers every variable")
}

fn divisor_order(f: &Poly, divisor: &Poly) -> ValuationValue {
    if f.is_zero() {
        return ValuationValue::Infinity;
    }
    let mut k = 0i64;
    let mut cur = f.clone();
    while let Some(q) = exact_quotient(&cur, divisor) {
        k += 1;
        cur = q;
    }
    ValuationValue::Finite(k)
}

fn top_power_value(
    f: &Poly,
    var: usize,
    degree: i64,
    coeff: &Rational,
    zfree: &Poly,
) -> ValuationValue {
    if f.is_zero() {
        return ValuationValue::Infinity;
    }
    let ring = f.ring().clone();
    let mut count = 0i64;
    let mut cur = f.clone();
    loop {
        if cur.is_zero() {
            return ValuationValue::Infinity;
        }
        // split cur = f0 + t*rest with f0 free of the top variable
        let mut f0 = Poly::zero(&ring);
        let mut rest = Poly::zero(&ring);
        for (m, c) in cur.terms() {
            let term = MPoly::monomial(&ring, m.clone(), c.clone()).expect("term is valid");
            if m.exp(var) == 0 {
                f0 = &f0 + &term;
            } else {
                let mut stripped = m.clone();
                stripped.0[var] -= 1;
                rest = &rest
                    + &MPoly::monomial(&ring, stripped, c.clone()).expect("term is valid");
            }
        }
        let g0 = if f0.is_zero() {
            Poly::zero(&ring)
        } else {
            match exact_quotient(&f0, zfree) {
                Some(g0) => g0,
                None => return ValuationValue::Finite(count),
            }
        };
        // f0 = m0*g0 and m0 = modulus - c*t^D, so f0 contributes
        // -c * t^D * g0 modulo the relation; one factor of t peels off
        let mut top = Monomial(vec![0; ring.nvars()]);
        top.0[var] = degree - 1;
        let correction =
            MPoly::monomial(&ring, top, coeff.clone()).expect("pure power is valid");
        cur = &rest - &(&correction * &g0);
        count += 1;
    }
}
