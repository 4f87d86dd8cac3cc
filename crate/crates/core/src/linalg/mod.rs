//! Exact linear algebra: rings, dense matrices, Smith normal form and
//! characteristic polynomials.

pub mod charpoly;
pub mod matrix;
pub mod ring;
pub mod smith;

pub use charpoly::{char_poly, char_poly_q, eigen_symmetric, is_squarefree};
pub use matrix::{IntMatrix, Matrix, MatrixOps};
pub use ring::{
    int_valuation, is_prime, prime_factors, primes_up_to, FromRational, Integers, PrimeField, Rationals, Ring,
};
pub use smith::{elementary_divisors, smith_normal_form, SmithForm};
