//! Singularity tests for homogeneous surface potentials.
//!
//! For a homogeneous `W` in three variables the origin is an isolated
//! singularity of `W = 0` exactly when the leading-term ideal of the
//! Jacobian ideal contains a pure power of every variable. The Milnor
//! number is the count of standard monomials under that staircase, and
//! `linear_syzygy_kernel` solves for all relations with linear
//! coefficients among the three partial derivatives.

use num_traits::{One, Zero};

use crate::groebner::{buchberger, GroebnerBasis, GroebnerError};
use crate::order::MonomialOrder;
use crate::poly::Monomial;
use crate::{Poly, Rational};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SingularityError {
    #[error("potential must live in a three-variable polynomial ring")]
    NotThreeVariables,
    #[error("potential must be homogeneous")]
    NonHomogeneous,
    #[error("potential must be nonconstant")]
    DegeneratePotential,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

fn validate(w: &Poly) -> Result<(), SingularityError> {
    if w.ring().is_laurent() || w.ring().nvars() != 3 {
        return Err(SingularityError::NotThreeVariables);
    }
    if !w.is_homogeneous() {
        return Err(SingularityError::NonHomogeneous);
    }
    match w.total_degree() {
        None | Some(0) => Err(SingularityError::DegeneratePotential),
        Some(_) => Ok(()),
    }
}

/// The three partial derivatives of `w`.
pub fn partials(w: &Poly) -> Result<[Poly; 3], SingularityError> {
    validate(w)?;
    Ok([w.derivative(0), w.derivative(1), w.derivative(2)])
}

fn jacobian_basis(w: &Poly) -> Result<GroebnerBasis, SingularityError> {
    let p = partials(w)?;
    let ord = MonomialOrder::default_groebner(w.ring());
    Ok(buchberger(&p, &ord)?)
}

/// Smallest `e` with the pure power `x_v^e` in the leading-term ideal, if
/// any. A constant leading monomial counts as the zero power, so the unit
/// ideal bounds every variable at zero.
fn pure_power_bound(lms: &[Monomial], v: usize) -> Option<i64> {
    lms.iter()
        .filter(|m| m.degree() == m.exp(v))
        .map(|m| m.exp(v))
        .min()
}

/// Whether `w = 0` has (at worst) an isolated singular point at the origin.
pub fn is_isolated_singularity(w: &Poly) -> Result<bool, SingularityError> {
    let gb = jacobian_basis(w)?;
    let lms = gb.leading_monomials();
    Ok((0..3).all(|v| pure_power_bound(&lms, v).is_some()))
}

/// Milnor number of the origin: the dimension of the Jacobian quotient.
/// `None` when the singularity is not isolated (infinite dimension).
pub fn milnor_number(w: &Poly) -> Result<Option<u64>, SingularityError> {
    let gb = jacobian_basis(w)?;
    let lms = gb.leading_monomials();
    let mut bounds = [0i64; 3];
    for v in 0..3 {
        match pure_power_bound(&lms, v) {
            Some(e) => bounds[v] = e,
            None => return Ok(None),
        }
    }
    // standard monomials all sit inside the box cut out by the pure powers
    let mut count = 0u64;
    for a in 0..bounds[0] {
        for b in 0..bounds[1] {
            for c in 0..bounds[2] {
                let m = Monomial(vec![a, b, c]);
                if !lms.iter().any(|lm| lm.divides(&m)) {
                    count += 1;
                }
            }
        }
    }
    Ok(Some(count))
}

/// Basis of the kernel of a rational matrix given by rows; vectors have
/// `ncols` entries. Reduced row echelon form with one basis vector per
/// free column, free columns taken in ascending order.
fn kernel_basis(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rational::one() / rows[rank][col].clone();
        for x in &mut rows[rank] {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in 0..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rows[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// All triples of linear forms `(f_0, f_1, f_2)` with
/// `f_0 w_x + f_1 w_y + f_2 w_z = 0`, as a basis of the solution space.
pub fn linear_syzygy_kernel(w: &Poly) -> Result<Vec<[Poly; 3]>, SingularityError> {
    let p = partials(w)?;
    let ring = w.ring().clone();
    // column 3i + j carries the coefficient of x_j inside f_i
    let mut columns: Vec<Poly> = Vec::with_capacity(9);
    for pi in &p {
        for j in 0..3 {
            columns.push(&Poly::var(&ring, j) * pi);
        }
    }
    let mut monomials: Vec<Monomial> = Vec::new();
    for c in &columns {
        for (m, _) in c.terms() {
            if !monomials.contains(m) {
                monomials.push(m.clone());
            }
        }
    }
    monomials.sort();
    let rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| {
            columns
                .iter()
                .map(|c| c.coeff(m).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let kernel = kernel_basis(rows, 9);
    let triples = kernel
        .into_iter()
        .map(|v| {
            std::array::from_fn(|i| {
                let mut f = Poly::zero(&ring);
                for j in 0..3 {
                    f = &f + &Poly::var(&ring, j).scale(&v[3 * i + j]);
                }
                f
            })
        })
        .collect();
    Ok(triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Ring;

    fn xyz() -> Ring {
        Ring::poly(&["x", "y", "z"])
    }

    fn p(r: &Ring, s: &str) -> Poly {
        Poly::parse(r, s).unwrap()
    }

    #[test]
    fn fermat_cubic_is_isolated_with_milnor_eight() {
        let r = xyz();
        let w = p(&r, "x^3 + y^3 + z^3");
        assert_eq!(is_isolated_singularity(&w), Ok(true));
        assert_eq!(milnor_number(&w), Ok(Some(8)));
    }

    #[test]
    fn fermat_milnor_numbers_grow_as_a_cube() {
        let r = xyz();
        for d in 3..=6i64 {
            let w = p(&r, &format!("x^{d} + y^{d} + z^{d}"));
            let expected = ((d - 1) * (d - 1) * (d - 1)) as u64;
            assert_eq!(milnor_number(&w), Ok(Some(expected)), "degree {d}");
        }
    }

    #[test]
    fn generic_elliptic_cubic_is_isolated() {
        let r = xyz();
        let w = p(&r, "x^3 + y^3 + z^3 + x*y*z");
        assert_eq!(is_isolated_singularity(&w), Ok(true));
        assert_eq!(milnor_number(&w), Ok(Some(8)));
    }

    #[test]
    fn degenerate_elliptic_parameter_is_not_isolated() {
        let r = xyz();
        let w = p(&r, "x^3 + y^3 + z^3 - 3*x*y*z");
        assert_eq!(is_isolated_singularity(&w), Ok(false));
        assert_eq!(milnor_number(&w), Ok(None));
    }

    #[test]
    fn monomial_potentials_have_line_singularities() {
        let r = xyz();
        for s in ["x^3", "x*y*z", "x^2*y"] {
            let w = p(&r, s);
            assert_eq!(is_isolated_singularity(&w), Ok(false), "{s}");
            assert_eq!(milnor_number(&w), Ok(None), "{s}");
        }
    }

    #[test]
    fn quadric_cone_is_the_simplest_isolated_case() {
        let r = xyz();
        let w = p(&r, "x^2 + y^2 + z^2");
        assert_eq!(is_isolated_singularity(&w), Ok(true));
        assert_eq!(milnor_number(&w), Ok(Some(1)));
    }

    #[test]
    fn syzygy_kernel_of_triple_product_is_two_dimensional() {
        let r = xyz();
        let w = p(&r, "x*y*z");
        let kernel = linear_syzygy_kernel(&w).unwrap();
        assert_eq!(kernel.len(), 2);
        for [f0, f1, f2] in &kernel {
            let parts = partials(&w).unwrap();
            let combo = &(&(f0 * &parts[0]) + &(f1 * &parts[1])) + &(f2 * &parts[2]);
            assert!(combo.is_zero());
        }
        // the visible relation x w_x - y w_y = 0 lies in the span
        let visible = [p(&r, "x"), p(&r, "-1*y"), Poly::zero(&r)];
        assert!(in_span(&kernel, &visible));
    }

    fn in_span(kernel: &[[Poly; 3]], target: &[Poly; 3]) -> bool {
        // solve for rational multipliers over the finitely many coefficients
        let r = target[0].ring().clone();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for slot in 0..3 {
            for j in 0..3 {
                let m = crate::poly::Monomial::var(r.nvars(), j);
                let get = |f: &Poly| f.coeff(&m).cloned().unwrap_or_else(Rational::zero);
                rows.push(kernel.iter().map(|k| get(&k[slot])).collect());
                rhs.push(get(&target[slot]));
            }
        }
        // row reduce [rows | rhs] and demand consistency
        let n = kernel.len();
        let mut aug: Vec<Vec<Rational>> = rows
            .into_iter()
            .zip(rhs)
            .map(|(mut row, b)| {
                row.push(b);
                row
            })
            .collect();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(pivot) = (rank..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(rank, pivot);
            let inv = Rational::one() / aug[rank][col].clone();
            for x in &mut aug[rank] {
                *x = &*x * &inv;
            }
            for rr in 0..aug.len() {
                if rr != rank && !aug[rr][col].is_zero() {
                    let f = aug[rr][col].clone();
                    for cc in 0..=n {
                        let delta = &f * &aug[rank][cc];
                        aug[rr][cc] = &aug[rr][cc] - &delta;
                    }
                }
            }
            rank += 1;
        }
        aug.iter().all(|row| {
            row[..n].iter().any(|x| !x.is_zero()) || row[n].is_zero()
        })
    }

    #[test]
    fn syzygy_kernel_of_a_pure_cube_is_six_dimensional() {
        let r = xyz();
        let kernel = linear_syzygy_kernel(&p(&r, "x^3")).unwrap();
        assert_eq!(kernel.len(), 6);
    }

    #[test]
    fn isolated_potentials_admit_no_linear_syzygies() {
        let r = xyz();
        for s in ["x^3 + y^3 + z^3", "x^4 + y^4 + z^4", "x^3 + y^3 + z^3 + x*y*z"] {
            let kernel = linear_syzygy_kernel(&p(&r, s)).unwrap();
            assert!(kernel.is_empty(), "{s}");
        }
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        let r = xyz();
        assert_eq!(
            is_isolated_singularity(&p(&r, "x^2 + y")).unwrap_err(),
            SingularityError::NonHomogeneous
        );
        assert_eq!(
            milnor_number(&p(&r, "7")).unwrap_err(),
            SingularityError::DegeneratePotential
        );
        let two = Ring::poly(&["x", "y"]);
        assert_eq!(
            linear_syzygy_kernel(&p(&two, "x^2")).unwrap_err(),
            SingularityError::NotThreeVariables
        );
    }
}
