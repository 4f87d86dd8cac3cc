//! The trace form of a representation and dual-lattice computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{local_elementary_valuations, valuation_int, Valuation};
use crate::chevalley::{ChevalleyAlgebra, StandardRep};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Integers, Matrix, MatrixOps, Rationals};

/// Symmetric form with Gram matrix `tr(rep(e_a) rep(e_b))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: IntMatrix,
}

impl BilinearForm {
    pub fn determinant(&self) -> BigInt {
        self.gram.determinant()
    }

    /// Perfect over `Z_(p)`: the determinant is a p-adic unit.
    pub fn is_perfect_at(&self, p: u64) -> bool {
        valuation_int(&self.determinant(), p) == Valuation::Finite(0)
    }

    pub fn require_perfect(&self, p: u64) -> Result<()> {
        if self.is_perfect_at(p) {
            Ok(())
        } else {
            Err(Error::FormNotPerfect(p))
        }
    }

    pub fn pair(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let g = Rationals.lift(&self.gram);
        let gy = Rationals.mat_vec(&g, y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    /// `<[a,b],c> + <b,[a,c]> = 0` on all basis triples.
    pub fn is_ad_invariant(&self, algebra: &ChevalleyAlgebra) -> bool {
        let n = algebra.dim();
        let g = &self.gram;
        let contract = |v: &[(usize, i64)], c: usize| -> BigInt {
            v.iter().map(|&(k, x)| BigInt::from(x) * &g[(k, c)]).sum()
        };
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    contract(algebra.basis_bracket(a, b), c) + contract(algebra.basis_bracket(a, c), b)
                        == BigInt::zero()
                })
            })
        })
    }

    /// Gram matrix of the alternating form `<x, [e_a, e_b]>`.
    pub fn twisted(&self, algebra: &ChevalleyAlgebra, x: &[BigRational]) -> Matrix<BigRational> {
        let n = algebra.dim();
        let g = Rationals.lift(&self.gram);
        let gx = Rationals.mat_vec(&g, x);
        let mut out = Matrix::filled(n, n, BigRational::zero());
        for a in 0..n {
            for b in 0..n {
                out[(a, b)] = algebra
                    .basis_bracket(a, b)
                    .iter()
                    .map(|&(k, c)| &gx[k] * BigRational::from_integer(c.into()))
                    .sum();
            }
        }
        out
    }
}

pub fn trace_form(algebra: &ChevalleyAlgebra, rep: &StandardRep) -> BilinearForm {
    let ring = Integers;
    let n = algebra.dim();
    let mut gram = Matrix::filled(n, n, BigInt::zero());
    for a in 0..n {
        for b in a..n {
            let t = ring.trace(&ring.mat_mul(rep.matrix(a), rep.matrix(b)));
            gram[(a, b)] = t.clone();
            gram[(b, a)] = t;
        }
    }
    BilinearForm { gram }
}

/// Valuations of the nonzero elementary divisors of the pairing matrix
/// `[B(l_i, r_j)]` between two lattices, after quotienting by `t_x`, which
/// must lie in the radical of `B`.
pub fn dual_lattice_levels(
    left: &[Vec<BigRational>],
    right: &[Vec<BigRational>],
    form: &Matrix<BigRational>,
    t_x: &[Vec<BigRational>],
    p: u64,
) -> Result<Vec<i64>> {
    let ring = Rationals;
    for t in t_x {
        let bt = ring.mat_vec(form, t);
        let tb = ring.mat_vec(&form.transpose(), t);
        if bt.iter().chain(&tb).any(|x| !x.is_zero()) {
            return Err(Error::Dimension("t_X is not in the radical of the form".into()));
        }
    }
    let l = Matrix::from_columns(form.rows(), left);
    let r = Matrix::from_columns(form.rows(), right);
    let gram = ring.mat_mul(&ring.mat_mul(&l.transpose(), form), &r);
    let levels = local_elementary_valuations(&gram, p);
    let expected = left.len().min(right.len()).saturating_sub(t_x.len());
    if levels.len() != expected {
        return Err(Error::Dimension(format!(
            "pairing has rank {} on the quotient, expected {expected}",
            levels.len()
        )));
    }
    Ok(levels)
}
