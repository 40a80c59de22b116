//! Poisson structures presented by their generator bracket table, with the
//! bracket of arbitrary elements obtained by the biderivation formula
//!
//! ```text
//! {f, g} = sum over i < j of (df/dxi * dg/dxj - df/dxj * dg/dxi) * {xi, xj}
//! ```
//!
//! which is the unique bilinear, antisymmetric, Leibniz extension of the
//! table, in both polynomial and Laurent mode. Three constructions are
//! privileged: the bracket of a potential on `k[x, y, z]` (`{x,y} = dW/dz`
//! and cyclic shifts, equivalently the Jacobian determinant against `W`),
//! the log-canonical torus bracket `{xi, xj} = p_ij xi xj` on a Laurent
//! ring, and the Weyl bracket `{x, y} = 1` on `k[x, y]`.

use crate::poly::{MPoly, PolyError, Ring};
use crate::scalar::Scalar;

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum PoissonError {
    #[error("a potential needs a polynomial ring in exactly three variables, found {0}")]
    PotentialRing(usize),
    #[error("bracket table needs {expected} entries, found {given}")]
    TableShape { expected: usize, given: usize },
    #[error("table entry lies in a different ring")]
    TableRing,
    #[error("Jacobi identity fails on generators ({0}, {1}, {2}); residual {3}")]
    JacobiFails(String, String, String, String),
    #[error("rescaling factor must be nonzero")]
    ZeroRescale,
    #[error("torus coefficient matrix must be antisymmetric with zero diagonal")]
    NotAntisymmetric,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Provenance<S> {
    /// Bracket of a potential; the payload is the potential itself.
    Potential(MPoly<S>),
    Torus,
    Weyl,
    Custom { verified: bool },
}

/// A Poisson bracket on a polynomial or Laurent ring, stored as the values
/// `{xi, xj}` for `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonStructure<S> {
    ring: Ring,
    /// Pair entries in row-major order over `i < j`.
    table: Vec<MPoly<S>>,
    provenance: Provenance<S>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl<S: Scalar> PoissonStructure<S> {
    /// `{x, y} = dW/dz`, `{y, z} = dW/dx`, `{z, x} = dW/dy` on `k[x, y, z]`.
    pub fn from_potential(potential: &MPoly<S>) -> Result<PoissonStructure<S>, PoissonError> {
        let ring = potential.ring().clone();
        if ring.nvars() != 3 || ring.is_laurent() {
            return Err(PoissonError::PotentialRing(ring.nvars()));
        }
        let table = vec![
            potential.derivative(2),        // {x, y}
            -&potential.derivative(1),      // {x, z} = -{z, x}
            potential.derivative(0),        // {y, z}
        ];
        Ok(PoissonStructure {
            ring,
            table,
            provenance: Provenance::Potential(potential.clone()),
        })
    }

    /// Log-canonical torus bracket on the Laurent ring with the given
    /// variable names: `{xi, xj} = p[i][j] xi xj`.
    pub fn torus(names: &[&str], p: &[Vec<S>]) -> Result<PoissonStructure<S>, PoissonError> {
        let m = names.len();
        if p.len() != m || p.iter().any(|row| row.len() != m) {
            return Err(PoissonError::TableShape {
                expected: m * m,
                given: p.iter().map(Vec::len).sum(),
            });
        }
        for i in 0..m {
            if !p[i][i].is_zero() {
                return Err(PoissonError::NotAntisymmetric);
            }
            for j in 0..m {
                if p[i][j].clone() + p[j][i].clone() != S::zero() {
                    return Err(PoissonError::NotAntisymmetric);
                }
            }
        }
        let ring = Ring::laurent(names);
        let mut table = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let xi = MPoly::var(&ring, i);
                let xj = MPoly::var(&ring, j);
                table.push((&xi * &xj).scale(&p[i][j]));
            }
        }
        Ok(PoissonStructure {
            ring,
            table,
            provenance: Provenance::Torus,
        })
    }

    /// The rank-one torus case `{x1, x2} = q x1 x2`.
    pub fn skew_torus(q: S) -> Result<PoissonStructure<S>, PoissonError> {
        let z = S::zero();
        let p = vec![vec![z.clone(), q.clone()], vec![-q, z]];
        PoissonStructure::torus(&["x1", "x2"], &p)
    }

    /// `{x, y} = 1` on `k[x, y]`.
    pub fn weyl() -> PoissonStructure<S> {
        let ring = Ring::poly(&["x", "y"]);
        PoissonStructure {
            table: vec![MPoly::one(&ring)],
            ring,
            provenance: Provenance::Weyl,
        }
    }

    /// The polynomial skew bracket `{x, y} = q x y` on `k[x, y]` (the
    /// coordinate-ring version of the torus bracket).
    pub fn skew_polynomial(q: S) -> PoissonStructure<S> {
        let ring = Ring::poly(&["x", "y"]);
        let xy = &MPoly::var(&ring, 0) * &MPoly::var(&ring, 1);
        PoissonStructure {
            table: vec![xy.scale(&q)],
            ring,
            provenance: Provenance::Custom { verified: true },
        }
    }

    /// Arbitrary generator table, entries for pairs `i < j` in row-major
    /// order. Unless `skip_jacobi_check`, the Jacobi identity is verified on
    /// every generator triple and a failure is an error.
    pub fn custom(
        ring: &Ring,
        entries: Vec<MPoly<S>>,
        skip_jacobi_check: bool,
    ) -> Result<PoissonStructure<S>, PoissonError> {
        let n = ring.nvars();
        let expected = n * (n - 1) / 2;
        if entries.len() != expected {
            return Err(PoissonError::TableShape {
                expected,
                given: entries.len(),
            });
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(PoissonError::TableRing);
        }
        let s = PoissonStructure {
            ring: ring.clone(),
            table: entries,
            provenance: Provenance::Custom {
                verified: !skip_jacobi_check,
            },
        };
        if !skip_jacobi_check {
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        let xi = MPoly::var(ring, i);
                        let xj = MPoly::var(ring, j);
                        let xk = MPoly::var(ring, k);
                        let res = s.jacobi_residual(&xi, &xj, &xk);
                        if !res.is_zero() {
                            return Err(PoissonError::JacobiFails(
                                ring.name(i).into(),
                                ring.name(j).into(),
                                ring.name(k).into(),
                                res.to_string(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn provenance(&self) -> &Provenance<S> {
        &self.provenance
    }

    pub fn potential(&self) -> Option<&MPoly<S>> {
        match &self.provenance {
            Provenance::Potential(w) => Some(w),
            _ => None,
        }
    }

    /// `{xi, xj}` for any pair, antisymmetry applied as needed.
    pub fn generator_bracket(&self, i: usize, j: usize) -> MPoly<S> {
        let n = self.ring.nvars();
        assert!(i < n && j < n, "generator index out of range");
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => MPoly::zero(&self.ring),
            Less => self.table[pair_index(n, i, j)].clone(),
            Greater => -&self.table[pair_index(n, j, i)],
        }
    }

    pub fn bracket(&self, f: &MPoly<S>, g: &MPoly<S>) -> MPoly<S> {
        assert!(
            f.ring() == &self.ring && g.ring() == &self.ring,
            "bracket arguments must lie in the structure ring"
        );
        let n = self.ring.nvars();
        let df: Vec<MPoly<S>> = (0..n).map(|v| f.derivative(v)).collect();
        let dg: Vec<MPoly<S>> = (0..n).map(|v| g.derivative(v)).collect();
        let mut acc = MPoly::zero(&self.ring);
        for i in 0..n {
            for j in (i + 1)..n {
                let t = &self.table[pair_index(n, i, j)];
                if t.is_zero() {
                    continue;
                }
                let skew = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
                if skew.is_zero() {
                    continue;
                }
                acc = &acc + &(&skew * t);
            }
        }
        acc
    }

    /// `{f, {g, h}} + {g, {h, f}} + {h, {f, g}}`; identically zero exactly
    /// when the structure is Poisson on the subalgebra generated by the
    /// three arguments.
    pub fn jacobi_residual(&self, f: &MPoly<S>, g: &MPoly<S>, h: &MPoly<S>) -> MPoly<S> {
        let a = self.bracket(f, &self.bracket(g, h));
        let b = self.bracket(g, &self.bracket(h, f));
        let c = self.bracket(h, &self.bracket(f, g));
        &(&a + &b) + &c
    }

    /// The rescaled bracket `{f, g}_e = e {f, g}`, again Poisson for any
    /// nonzero `e`.
    pub fn rescale(&self, e: &S) -> Result<PoissonStructure<S>, PoissonError> {
        if e.is_zero() {
            return Err(PoissonError::ZeroRescale);
        }
        Ok(PoissonStructure {
            ring: self.ring.clone(),
            table: self.table.iter().map(|t| t.scale(e)).collect(),
            provenance: Provenance::Custom { verified: true },
        })
    }
}
