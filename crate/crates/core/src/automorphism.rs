//! Polynomial maps, determinant invariants, and the finite symmetry
//! groups of Fermat potentials.
//!
//! A potential map is judged through three scalars: the factor `c` with
//! `phi(W) = c*W`, the Jacobian determinant `J`, and their ratio
//! `e = c/J`, which is 1 exactly when the map respects the bracket.
//! Monomial symmetries `x_i -> zeta^(e_i) * x_sigma(i)` are stored as
//! exponent classes modulo an even root order `N`, with `-1` represented
//! by the exponent `N/2`; this keeps all arithmetic exact. They can be
//! materialized as polynomial maps over the ring extended by a root
//! variable `t` subject to `t^(N/2) = -1`, so the generic substitution
//! and Jacobian machinery applies to them unchanged.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::{jacobian_det3, MPoly, Monomial, PolyError, Ring};
use crate::{Poly, Rational};

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum AutomorphismError {
    #[error("this operation needs a three-variable polynomial ring")]
    WrongArity,
    #[error("map images must live in the same polynomial-mode ring")]
    RingMismatch,
    #[error("root order must be even so that -1 is representable")]
    OddRootOrder,
    #[error("enumeration needs degree at least 4")]
    DegreeTooSmall,
    #[error("image of the potential is not a scalar multiple of it")]
    NotScalarMultiple,
    #[error("Jacobian determinant is not a nonzero scalar")]
    BadJacobian,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A polynomial endomorphism given by one image per variable.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMap {
    ring: Ring,
    images: Vec<Poly>,
}

impl PolyMap {
    pub fn new(ring: &Ring, images: Vec<Poly>) -> Result<PolyMap, AutomorphismError> {
        if ring.is_laurent() {
            return Err(AutomorphismError::RingMismatch);
        }
        if images.len() != ring.nvars() || images.iter().any(|f| f.ring() != ring) {
            return Err(AutomorphismError::RingMismatch);
        }
        Ok(PolyMap {
            ring: ring.clone(),
            images,
        })
    }

    pub fn identity(ring: &Ring) -> PolyMap {
        PolyMap {
            ring: ring.clone(),
            images: (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly, AutomorphismError> {
        if f.ring() != &self.ring {
            return Err(AutomorphismError::RingMismatch);
        }
        Ok(f.substitute(&self.ring, &self.images)?)
    }

    /// `self` after `other`: the image of each variable under `other`,
    /// pushed through `self`.
    pub fn compose(&self, other: &PolyMap) -> Result<PolyMap, AutomorphismError> {
        if self.ring != other.ring {
            return Err(AutomorphismError::RingMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|f| self.apply(f))
            .collect::<Result<Vec<_>, _>>()?;
        PolyMap::new(&self.ring, images)
    }
}

/// Jacobian determinant of a three-variable map.
pub fn map_jacobian(phi: &PolyMap) -> Result<Poly, AutomorphismError> {
    if phi.ring.nvars() != 3 {
        return Err(AutomorphismError::WrongArity);
    }
    Ok(jacobian_det3(
        &phi.images[0],
        &phi.images[1],
        &phi.images[2],
        [0, 1, 2],
    ))
}

/// The three scalars attached to a potential-preserving map.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonReport {
    /// `c` with `phi(W) = c*W`.
    pub hdet: Rational,
    /// Constant Jacobian determinant `J`.
    pub jacobian: Rational,
    /// `e = c / J`; the map respects the bracket exactly when `e = 1`.
    pub pdet: Rational,
    pub poisson: bool,
}

/// Check `phi(W) = c*W`, extract the constant Jacobian, and report
/// `(c, J, e)` with `e = c/J`, confirming the identity `c = e*J`.
pub fn epsilon_check(phi: &PolyMap, omega: &Poly) -> Result<EpsilonReport, AutomorphismError> {
    if omega.ring() != &phi.ring {
        return Err(AutomorphismError::RingMismatch);
    }
    if phi.ring.nvars() != 3 {
        return Err(AutomorphismError::WrongArity);
    }
    if omega.is_zero() {
        return Err(AutomorphismError::NotScalarMultiple);
    }
    let image = phi.apply(omega)?;
    let (m, a) = omega.terms().next().expect("omega is nonzero");
    let c = match image.coeff(m) {
        Some(b) => b / a,
        None if image.is_zero() => Rational::zero(),
        None => return Err(AutomorphismError::NotScalarMultiple),
    };
    if &image - &omega.scale(&c) != MPoly::zero(&phi.ring) {
        return Err(AutomorphismError::NotScalarMultiple);
    }
    let j = map_jacobian(phi)?
        .as_constant()
        .ok_or(AutomorphismError::BadJacobian)?;
    if j.is_zero() {
        return Err(AutomorphismError::BadJacobian);
    }
    let pdet = &c / &j;
    let poisson = pdet.is_one();
    debug_assert_eq!(c, &pdet * &j);
    Ok(EpsilonReport {
        hdet: c,
        jacobian: j,
        pdet,
        poisson,
    })
}

/// A permutation of three indices, stored as its image list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm3(pub [usize; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    /// All six permutations in a fixed deterministic order.
    pub const ALL: [Perm3; 6] = [
        Perm3([0, 1, 2]),
        Perm3([0, 2, 1]),
        Perm3([1, 0, 2]),
        Perm3([1, 2, 0]),
        Perm3([2, 0, 1]),
        Perm3([2, 1, 0]),
    ];

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3([
            self.0[other.0[0]],
            self.0[other.0[1]],
            self.0[other.0[2]],
        ])
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0usize; 3];
        for i in 0..3 {
            inv[self.0[i]] = i;
        }
        Perm3(inv)
    }

    pub fn is_even(&self) -> bool {
        let mut inversions = 0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }
}

/// `x_i -> zeta^(e_i) * x_sigma(i)` with `zeta` a primitive `n`-th root
/// of unity; `n` is even and exponents are reduced modulo `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialSymmetry {
    pub sigma: Perm3,
    pub exps: [u64; 3],
    pub n: u64,
}

impl MonomialSymmetry {
    pub fn new(sigma: Perm3, exps: [u64; 3], n: u64) -> Result<MonomialSymmetry, AutomorphismError> {
        if n == 0 || n % 2 != 0 {
            return Err(AutomorphismError::OddRootOrder);
        }
        Ok(MonomialSymmetry {
            sigma,
            exps: [exps[0] % n, exps[1] % n, exps[2] % n],
            n,
        })
    }

    pub fn identity(n: u64) -> Result<MonomialSymmetry, AutomorphismError> {
        MonomialSymmetry::new(Perm3::IDENTITY, [0, 0, 0], n)
    }

    pub fn is_identity(&self) -> bool {
        self.sigma == Perm3::IDENTITY && self.exps == [0, 0, 0]
    }

    /// `self` after `other`, matching composition of materialized maps.
    pub fn compose(&self, other: &MonomialSymmetry) -> MonomialSymmetry {
        assert_eq!(self.n, other.n, "root orders must agree");
        let mut exps = [0u64; 3];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = (other.exps[i] + self.exps[other.sigma.apply(i)]) % self.n;
        }
        MonomialSymmetry {
            sigma: self.sigma.compose(&other.sigma),
            exps,
            n: self.n,
        }
    }

    pub fn inverse(&self) -> MonomialSymmetry {
        let inv = self.sigma.inverse();
        let mut exps = [0u64; 3];
        for (j, e) in exps.iter_mut().enumerate() {
            *e = (self.n - self.exps[inv.apply(j)]) % self.n;
        }
        MonomialSymmetry {
            sigma: inv,
            exps,
            n: self.n,
        }
    }

    /// Materialize over the ring `(t, x, y, z)` where `t` stands for a
    /// primitive `n`-th root of unity via `t^(n/2) = -1`; see
    /// [`reduce_root_powers`].
    pub fn to_poly_map(&self) -> PolyMap {
        let ring = cyclotomic_ring();
        let mut images = vec![Poly::var(&ring, 0)];
        for i in 0..3 {
            let mut m = Monomial(vec![0; 4]);
            m.0[0] = self.exps[i] as i64;
            m.0[1 + self.sigma.apply(i)] = 1;
            images.push(
                MPoly::monomial(&ring, m, Rational::one()).expect("monomial image is valid"),
            );
        }
        PolyMap::new(&ring, images).expect("materialized images are well formed")
    }
}

impl fmt::Display for MonomialSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(perm={}{}{}, exps=[{},{},{}], n={})",
            self.sigma.0[0],
            self.sigma.0[1],
            self.sigma.0[2],
            self.exps[0],
            self.exps[1],
            self.exps[2],
            self.n
        )
    }
}

/// The shared ring for materialized symmetries: a root variable `t`
/// followed by `x, y, z`.
pub fn cyclotomic_ring() -> Ring {
    Ring::poly(&["t", "x", "y", "z"])
}

/// Reduce every power of the root variable modulo `t^half = -1`,
/// flipping the coefficient sign once per wrap. This is the quotient map
/// onto the ring where `t` is a primitive `2*half`-th root of unity.
pub fn reduce_root_powers(f: &Poly, t_var: usize, half: i64) -> Poly {
    assert!(half >= 1, "root order must be positive");
    let ring = f.ring().clone();
    let mut out = MPoly::zero(&ring);
    for (m, c) in f.terms() {
        let e = m.exp(t_var);
        let (q, r) = (e.div_euclid(half), e.rem_euclid(half));
        let mut reduced = m.clone();
        reduced.0[t_var] = r;
        let coeff = if q % 2 == 0 { c.clone() } else { -c.clone() };
        out = &out + &MPoly::monomial(&ring, reduced, coeff).expect("reduced term is valid");
    }
    out
}

/// A root-of-unity scalar `±t^k`, stored as the exponent class of
/// `zeta^exp` modulo `n` (with `-1` contributing `n/2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootScalar {
    pub exp: u64,
    pub n: u64,
}

impl RootScalar {
    pub fn is_one(&self) -> bool {
        self.exp == 0
    }
}

impl fmt::Display for RootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            0 => write!(f, "1"),
            e if e == self.n / 2 => write!(f, "-1"),
            e => write!(f, "zeta^{e} (order {})", self.n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EpsilonReportRoots {
    pub hdet: RootScalar,
    pub jacobian: RootScalar,
    pub pdet: RootScalar,
    pub poisson: bool,
}

fn extract_root_scalar(
    f: &Poly,
    relative_to: &Poly,
    half: i64,
    n: u64,
) -> Result<RootScalar, AutomorphismError> {
    // f must equal (±t^k) * relative_to after reduction
    let reduced = reduce_root_powers(f, 0, half);
    for k in 0..half {
        let ring = reduced.ring().clone();
        let mut m = Monomial(vec![0; ring.nvars()]);
        m.0[0] = k;
        let tk = MPoly::monomial(&ring, m, Rational::one()).expect("pure power is valid");
        let shifted = reduce_root_powers(&(&tk * relative_to), 0, half);
        if reduced == shifted {
            return Ok(RootScalar { exp: k as u64, n });
        }
        if &reduced + &shifted == MPoly::zero(&ring) {
            return Ok(RootScalar {
                exp: k as u64 + n / 2,
                n,
            });
        }
    }
    Err(AutomorphismError::NotScalarMultiple)
}

/// Exact determinant data for a materialized monomial symmetry against
/// the Fermat potential of degree `d`, with scalars in the root-of-unity
/// group of the symmetry.
pub fn epsilon_check_symmetry(
    s: &MonomialSymmetry,
    d: i64,
) -> Result<EpsilonReportRoots, AutomorphismError> {
    let n = s.n;
    let half = (n / 2) as i64;
    let phi = s.to_poly_map();
    let ring = phi.ring().clone();
    let omega = fermat_in(&ring, d);
    let image = phi.apply(&omega)?;
    let hdet = extract_root_scalar(&image, &omega, half, n)?;
    let jac = jacobian_det3(&phi.images()[1], &phi.images()[2], &phi.images()[3], [1, 2, 3]);
    let one = Poly::one(&ring);
    let jacobian = extract_root_scalar(&jac, &one, half, n).map_err(|_| AutomorphismError::BadJacobian)?;
    let pdet = RootScalar {
        exp: (hdet.exp + n - jacobian.exp % n) % n,
        n,
    };
    Ok(EpsilonReportRoots {
        hdet,
        jacobian,
        pdet,
        poisson: pdet.is_one(),
    })
}

fn fermat_in(ring: &Ring, d: i64) -> Poly {
    let mut omega = Poly::zero(ring);
    let offset = ring.nvars() - 3;
    for i in 0..3 {
        let mut m = Monomial(vec![0; ring.nvars()]);
        m.0[offset + i] = d;
        omega = &omega + &MPoly::monomial(ring, m, Rational::one()).expect("pure power");
    }
    omega
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Scale the potential by a root of unity: the full graded symmetry
    /// group of the quotient by the potential.
    Graded,
    /// Fix the potential exactly and have Jacobian 1: the symmetries
    /// surviving on the quotient by `potential - xi` for nonzero `xi`.
    Fiber,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Graded => write!(f, "graded"),
            Variant::Fiber => write!(f, "fiber"),
        }
    }
}

/// Subgroup of the permutation group reached by the enumerated elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientImage {
    Trivial,
    C3,
    S3,
}

impl QuotientImage {
    pub fn order(&self) -> usize {
        match self {
            QuotientImage::Trivial => 1,
            QuotientImage::C3 => 3,
            QuotientImage::S3 => 6,
        }
    }
}

impl fmt::Display for QuotientImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientImage::Trivial => write!(f, "1"),
            QuotientImage::C3 => write!(f, "C3"),
            QuotientImage::S3 => write!(f, "S3"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupReport {
    pub d: i64,
    pub variant: Variant,
    pub n: u64,
    pub elements: Vec<MonomialSymmetry>,
    pub order: usize,
    pub identity_sigma_order: usize,
    pub quotient: QuotientImage,
    pub split: bool,
}

/// Exponent-arithmetic membership test. `Graded` asks for the three
/// congruences `e_i + e_j = sgn + (d-1)*e_k` over cyclic `(i,j,k)`;
/// `Fiber` asks for `d*e_i = 0` and `e_1+e_2+e_3 = sgn`, all modulo `n`,
/// where `sgn` is `0` for even permutations and `n/2` for odd ones.
pub fn symmetry_satisfies(
    s: &MonomialSymmetry,
    d: i64,
    variant: Variant,
) -> Result<bool, AutomorphismError> {
    if s.n % 2 != 0 || s.n == 0 {
        return Err(AutomorphismError::OddRootOrder);
    }
    Ok(satisfies_mod(s.sigma, s.exps, s.n, d as u64, variant))
}

fn satisfies_mod(sigma: Perm3, e: [u64; 3], n: u64, d: u64, variant: Variant) -> bool {
    let sgn = if sigma.is_even() { 0 } else { n / 2 };
    match variant {
        Variant::Graded => {
            let pow = (d - 1) % n;
            for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                if (e[i] + e[j]) % n != (sgn + pow * e[k]) % n {
                    return false;
                }
            }
            true
        }
        Variant::Fiber => {
            e.iter().all(|&x| (d * x) % n == 0) && (e[0] + e[1] + e[2]) % n == sgn
        }
    }
}

fn thread_cap() -> usize {
    match std::env::var("POISSONVAL_THREADS") {
        Ok(v) => v.parse::<usize>().ok().filter(|&t| t >= 1).unwrap_or(1),
        Err(_) => std::thread::available_parallelism()
            .map(|t| t.get())
            .unwrap_or(1),
    }
    .min(Perm3::ALL.len())
}

fn enumerate_elements(d: u64, n: u64, variant: Variant) -> Vec<MonomialSymmetry> {
    let cap = thread_cap();
    let mut per_sigma: Vec<Vec<MonomialSymmetry>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in Perm3::ALL.chunks(Perm3::ALL.len().div_ceil(cap)) {
            handles.push(scope.spawn(move || {
                let mut found: Vec<Vec<MonomialSymmetry>> = Vec::new();
                for &sigma in chunk {
                    let mut list = Vec::new();
                    for e0 in 0..n {
                        for e1 in 0..n {
                            for e2 in 0..n {
                                let e = [e0, e1, e2];
                                if satisfies_mod(sigma, e, n, d, variant) {
                                    list.push(MonomialSymmetry {
                                        sigma,
                                        exps: e,
                                        n,
                                    });
                                }
                            }
                        }
                    }
                    found.push(list);
                }
                found
            }));
        }
        for h in handles {
            per_sigma.extend(h.join().expect("enumeration worker panicked"));
        }
    });
    // chunks preserve the fixed permutation order, and each inner loop
    // emits exponents ascending, so the concatenation is already sorted
    let mut elements: Vec<MonomialSymmetry> = per_sigma.into_iter().flatten().collect();
    elements.sort();
    elements
}

fn find_split(elements: &[MonomialSymmetry], quotient: QuotientImage) -> bool {
    match quotient {
        QuotientImage::Trivial => true,
        QuotientImage::C3 => {
            // any three-cycle element of order three generates a section
            elements.iter().any(|r| {
                r.sigma != Perm3::IDENTITY
                    && r.sigma.is_even()
                    && r.compose(&r.compose(r)).is_identity()
            })
        }
        QuotientImage::S3 => {
            let rotations: Vec<&MonomialSymmetry> = elements
                .iter()
                .filter(|r| r.sigma != Perm3::IDENTITY && r.sigma.is_even())
                .collect();
            let flips: Vec<&MonomialSymmetry> = elements
                .iter()
                .filter(|t| !t.sigma.is_even())
                .collect();
            for r in &rotations {
                if !r.compose(&r.compose(r)).is_identity() {
                    continue;
                }
                for t in &flips {
                    if !t.compose(t).is_identity() {
                        continue;
                    }
                    let tr = t.compose(r);
                    if tr.compose(&tr).is_identity() {
                        return true;
                    }
                }
            }
            false
        }
    }
}

fn quotient_image(elements: &[MonomialSymmetry]) -> QuotientImage {
    let mut seen: HashSet<Perm3> = HashSet::new();
    for s in elements {
        seen.insert(s.sigma);
    }
    match seen.len() {
        1 => QuotientImage::Trivial,
        3 => QuotientImage::C3,
        6 => QuotientImage::S3,
        other => unreachable!("permutation image of size {other} is not a subgroup here"),
    }
}

/// Root order for the exhaustive search: every solution of the graded
/// congruences has entries in the roots of unity of this order. Pairwise
/// ratios of the scalars are d-th roots, and each scalar satisfies
/// `t^(d(d-3)) = sgn^d`, so order `2d(d-3)` suffices; the fiber variant
/// only needs `d`-th roots and the sign.
pub fn canonical_root_order(d: i64, variant: Variant) -> u64 {
    let d = d as u64;
    match variant {
        Variant::Graded => 2 * d * (d - 3),
        Variant::Fiber => num_integer::lcm(2, d),
    }
}

/// Exhaustive search for all monomial symmetries of the degree-`d`
/// Fermat potential, in the given variant.
pub fn enumerate_fermat(d: i64, variant: Variant) -> Result<GroupReport, AutomorphismError> {
    if d < 4 {
        return Err(AutomorphismError::DegreeTooSmall);
    }
    let n = canonical_root_order(d, variant);
    let elements = enumerate_elements(d as u64, n, variant);
    let order = elements.len();
    let identity_sigma_order = elements
        .iter()
        .filter(|s| s.sigma == Perm3::IDENTITY)
        .count();
    let quotient = quotient_image(&elements);
    let split = find_split(&elements, quotient);
    Ok(GroupReport {
        d,
        variant,
        n,
        elements,
        order,
        identity_sigma_order,
        quotient,
        split,
    })
}

/// Re-run the enumeration with the root order doubled and report whether
/// the element count is unchanged — the guard that the canonical order
/// already captures every solution.
pub fn doubling_guard(d: i64, variant: Variant) -> Result<bool, AutomorphismError> {
    if d < 4 {
        return Err(AutomorphismError::DegreeTooSmall);
    }
    let n = canonical_root_order(d, variant);
    let base = enumerate_elements(d as u64, n, variant).len();
    let doubled = enumerate_elements(d as u64, 2 * n, variant).len();
    Ok(base == doubled)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub counterexample: Option<String>,
}

fn fail(msg: String) -> VerifyOutcome {
    VerifyOutcome {
        ok: false,
        counterexample: Some(msg),
    }
}

/// Finite re-verification of a reported group: distinctness, identity,
/// closure, inverses, normality of the fiber-condition subgroup, and the
/// quotient bookkeeping `order = identity-sigma order × quotient order`.
pub fn group_verify(report: &GroupReport) -> VerifyOutcome {
    let set: HashSet<MonomialSymmetry> = report.elements.iter().copied().collect();
    if set.len() != report.elements.len() || report.order != report.elements.len() {
        return fail("element list has duplicates or a wrong order field".to_string());
    }
    let identity = MonomialSymmetry {
        sigma: Perm3::IDENTITY,
        exps: [0, 0, 0],
        n: report.n,
    };
    if !set.contains(&identity) {
        return fail("identity element missing".to_string());
    }
    for a in &report.elements {
        if !set.contains(&a.inverse()) {
            return fail(format!("inverse of {a} missing"));
        }
        for b in &report.elements {
            let c = a.compose(b);
            if !set.contains(&c) {
                return fail(format!("composition {a} * {b} = {c} escapes the set"));
            }
        }
    }
    let fiber: Vec<&MonomialSymmetry> = report
        .elements
        .iter()
        .filter(|s| satisfies_mod(s.sigma, s.exps, s.n, report.d as u64, Variant::Fiber))
        .collect();
    for g in &report.elements {
        let ginv = g.inverse();
        for h in &fiber {
            let conj = g.compose(&h.compose(&ginv));
            if !satisfies_mod(conj.sigma, conj.exps, conj.n, report.d as u64, Variant::Fiber) {
                return fail(format!("conjugate of {h} by {g} leaves the fiber subgroup"));
            }
        }
    }
    if report.identity_sigma_order * report.quotient.order() != report.order {
        return fail("identity-sigma subgroup index does not match the quotient".to_string());
    }
    VerifyOutcome {
        ok: true,
        counterexample: None,
    }
}

/// Curve genus of a smooth degree-`d` plane curve, the classical `84(g-1)`
/// symmetry cap, and the derived order bound `42 d (d-3)^2`; the latter is
/// `(d-3)` times the former.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusBounds {
    pub genus: i64,
    pub hurwitz: i64,
    pub order_bound: i64,
}

pub fn genus_and_bounds(d: i64) -> Result<GenusBounds, AutomorphismError> {
    if d < 4 {
        return Err(AutomorphismError::DegreeTooSmall);
    }
    let genus = (d - 1) * (d - 2) / 2;
    Ok(GenusBounds {
        genus,
        hurwitz: 84 * (genus - 1),
        order_bound: 42 * d * (d - 3) * (d - 3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn xyz() -> Ring {
        Ring::poly(&["x", "y", "z"])
    }

    fn p(r: &Ring, s: &str) -> Poly {
        Poly::parse(r, s).unwrap()
    }

    #[test]
    fn jacobians_of_simple_maps() {
        let r = xyz();
        assert_eq!(map_jacobian(&PolyMap::identity(&r)).unwrap().to_string(), "1");
        let swap = PolyMap::new(&r, vec![p(&r, "y"), p(&r, "x"), p(&r, "z")]).unwrap();
        assert_eq!(map_jacobian(&swap).unwrap().to_string(), "-1");
        let shear = PolyMap::new(&r, vec![p(&r, "x + y"), p(&r, "y"), p(&r, "z")]).unwrap();
        assert_eq!(map_jacobian(&shear).unwrap().to_string(), "1");
    }

    #[test]
    fn epsilon_check_reference_cases() {
        let r = xyz();
        let omega = p(&r, "x^5 + y^5 + z^5");
        let id = epsilon_check(&PolyMap::identity(&r), &omega).unwrap();
        assert_eq!((id.hdet, id.jacobian, id.pdet, id.poisson), (rat(1), rat(1), rat(1), true));

        let swap = PolyMap::new(&r, vec![p(&r, "y"), p(&r, "x"), p(&r, "z")]).unwrap();
        let rep = epsilon_check(&swap, &omega).unwrap();
        assert_eq!(rep.hdet, rat(1));
        assert_eq!(rep.jacobian, rat(-1));
        assert_eq!(rep.pdet, rat(-1));
        assert!(!rep.poisson);

        let shear = PolyMap::new(&r, vec![p(&r, "x + y"), p(&r, "y"), p(&r, "z")]).unwrap();
        assert_eq!(
            epsilon_check(&shear, &omega).unwrap_err(),
            AutomorphismError::NotScalarMultiple
        );
    }

    #[test]
    fn symmetry_membership_examples() {
        // u of multiplicative order 5 inside the order-20 roots: exponent 4
        let s = MonomialSymmetry::new(Perm3::IDENTITY, [4, 16, 0], 20).unwrap();
        assert_eq!(symmetry_satisfies(&s, 5, Variant::Graded), Ok(true));
        let bad = MonomialSymmetry::new(Perm3::IDENTITY, [4, 0, 0], 20).unwrap();
        assert_eq!(symmetry_satisfies(&bad, 5, Variant::Graded), Ok(false));
        let id = MonomialSymmetry::identity(20).unwrap();
        assert_eq!(symmetry_satisfies(&id, 5, Variant::Graded), Ok(true));
        assert_eq!(symmetry_satisfies(&id, 5, Variant::Fiber), Ok(true));
        assert_eq!(
            MonomialSymmetry::new(Perm3::IDENTITY, [0, 0, 0], 15).unwrap_err(),
            AutomorphismError::OddRootOrder
        );
    }

    #[test]
    fn composition_matches_materialized_maps() {
        let a = MonomialSymmetry::new(Perm3([1, 2, 0]), [3, 7, 11], 20).unwrap();
        let b = MonomialSymmetry::new(Perm3([0, 2, 1]), [5, 0, 13], 20).unwrap();
        let ab = a.compose(&b);
        let left = a.to_poly_map().compose(&b.to_poly_map()).unwrap();
        let right = ab.to_poly_map();
        for (l, r) in left.images().iter().zip(right.images()) {
            assert_eq!(reduce_root_powers(l, 0, 10), reduce_root_powers(r, 0, 10));
        }
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn fiber_group_at_degree_five() {
        let report = enumerate_fermat(5, Variant::Fiber).unwrap();
        assert_eq!(report.order, 75);
        assert_eq!(report.identity_sigma_order, 25);
        assert_eq!(report.quotient, QuotientImage::C3);
        assert!(report.split);
        assert!(group_verify(&report).ok);
    }

    #[test]
    fn graded_group_at_degree_five() {
        let report = enumerate_fermat(5, Variant::Graded).unwrap();
        assert_eq!(report.order, 300);
        assert_eq!(report.identity_sigma_order, 50);
        assert_eq!(report.quotient, QuotientImage::S3);
        assert!(!report.split);
        assert!(group_verify(&report).ok);
    }

    #[test]
    fn broken_reports_are_rejected() {
        let mut report = enumerate_fermat(5, Variant::Fiber).unwrap();
        let removed = report
            .elements
            .iter()
            .position(|s| !s.is_identity())
            .unwrap();
        report.elements.remove(removed);
        report.order -= 1;
        let outcome = group_verify(&report);
        assert!(!outcome.ok);
        assert!(outcome.counterexample.is_some());
    }

    #[test]
    fn enumerated_elements_have_trivial_pdet() {
        let report = enumerate_fermat(5, Variant::Graded).unwrap();
        for s in report.elements.iter().step_by(37) {
            let rep = epsilon_check_symmetry(s, 5).unwrap();
            assert!(rep.poisson, "element {s} must respect the bracket");
            assert_eq!(
                rep.hdet.exp,
                (rep.pdet.exp + rep.jacobian.exp) % rep.hdet.n
            );
        }
        let fiber = enumerate_fermat(5, Variant::Fiber).unwrap();
        for s in fiber.elements.iter().step_by(11) {
            let lifted = MonomialSymmetry::new(s.sigma, s.exps.map(|e| e * 2), 20).unwrap();
            let rep = epsilon_check_symmetry(&lifted, 5).unwrap();
            assert!(rep.jacobian.is_one(), "fiber elements have Jacobian one");
            assert!(rep.hdet.is_one(), "fiber elements fix the potential");
        }
    }

    #[test]
    fn doubling_the_root_order_finds_nothing_new() {
        assert_eq!(doubling_guard(5, Variant::Fiber), Ok(true));
        assert_eq!(doubling_guard(5, Variant::Graded), Ok(true));
    }

    #[test]
    fn genus_arithmetic() {
        assert_eq!(
            genus_and_bounds(5),
            Ok(GenusBounds {
                genus: 6,
                hurwitz: 420,
                order_bound: 840
            })
        );
        assert_eq!(
            genus_and_bounds(4),
            Ok(GenusBounds {
                genus: 3,
                hurwitz: 168,
                order_bound: 168
            })
        );
        for d in 4..=12 {
            let g = genus_and_bounds(d).unwrap();
            assert_eq!((d - 3) * g.hurwitz, g.order_bound);
        }
        assert_eq!(genus_and_bounds(3), Err(AutomorphismError::DegreeTooSmall));
    }

    #[test]
    fn degree_and_arity_validation() {
        assert_eq!(
            enumerate_fermat(3, Variant::Graded).unwrap_err(),
            AutomorphismError::DegreeTooSmall
        );
        let two = Ring::poly(&["x", "y"]);
        let phi = PolyMap::identity(&two);
        assert_eq!(map_jacobian(&phi).unwrap_err(), AutomorphismError::WrongArity);
    }
}
