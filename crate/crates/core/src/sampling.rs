//! Seeded generation of section points and conjugated instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chevalley::{ChevalleyAlgebra, StandardRep};
use crate::error::{Error, Result};
use crate::linalg::{char_poly_q, is_squarefree, Matrix, MatrixOps, Rationals};

/// Deterministic generator for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Coefficients in `p Z / p^precision Z`, uniformly.
pub fn random_section_coefficients<G: Rng>(rng: &mut G, rank: usize, p: u64, precision: u32) -> Vec<BigInt> {
    (0..rank)
        .map(|_| {
            // base-p digits 1..precision
            (1..precision)
                .rev()
                .fold(BigInt::zero(), |acc, _| (acc + rng.random_range(0..p)) * p)
        })
        .collect()
}

/// `exp(m)` for nilpotent `m`, summed exactly.
pub fn nilpotent_exp(m: &Matrix<BigRational>) -> Matrix<BigRational> {
    let ring = Rationals;
    let n = m.rows();
    let mut out = ring.identity(n);
    let mut term = ring.identity(n);
    for k in 1..=n {
        term = ring.mat_scale(
            &BigRational::new(BigInt::one(), BigInt::from(k)),
            &ring.mat_mul(&term, m),
        );
        if ring.is_zero_mat(&term) {
            break;
        }
        out = ring.mat_add(&out, &term);
    }
    out
}

/// A product of root-group elements `x_alpha(p t)` over every root, with its
/// inverse; congruent to 1 modulo `p`.
pub fn random_conjugator<G: Rng>(
    rng: &mut G,
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    p: u64,
) -> (Matrix<BigRational>, Matrix<BigRational>) {
    let ring = Rationals;
    let n = rep.size();
    let mut g = ring.identity(n);
    let mut g_inv = ring.identity(n);
    let p = p as i64;
    for b in algebra.rank()..algebra.dim() {
        let t = rng.random_range(-p..=p) * p;
        if t == 0 {
            continue;
        }
        let x = ring.lift(rep.matrix(b));
        let s = BigRational::from_integer(t.into());
        g = ring.mat_mul(&nilpotent_exp(&ring.mat_scale(&s, &x)), &g);
        g_inv = ring.mat_mul(&g_inv, &nilpotent_exp(&ring.mat_scale(&-s, &x)));
    }
    (g, g_inv)
}

/// `Ad(g_0)(Y + xi_0)` with its section coefficients `xi_0`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub xi_coefficients: Vec<BigInt>,
    pub z: Vec<BigRational>,
}

pub fn conjugated_instance<G: Rng>(
    rng: &mut G,
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    section: &crate::sections::KostantSection,
    p: u64,
    precision: u32,
) -> Result<Instance> {
    let ring = Rationals;
    let xi_coefficients = random_section_coefficients(rng, section.rank(), p, precision);
    let point = section_point(algebra, section, &xi_coefficients)?;
    let (g, g_inv) = random_conjugator(rng, algebra, rep, p);
    let conj = ring.mat_mul(&ring.mat_mul(&g, &rep.image(&ring, &point)), &g_inv);
    let z = rep
        .coordinates(&conj)
        .ok_or_else(|| Error::Internal("conjugate left the image of the representation".into()))?;
    Ok(Instance { xi_coefficients, z })
}

/// `Y + sum u_i xi_i` in Chevalley coordinates.
pub fn section_point(
    algebra: &ChevalleyAlgebra,
    section: &crate::sections::KostantSection,
    u: &[BigInt],
) -> Result<Vec<BigRational>> {
    let u: Vec<BigRational> = u.iter().cloned().map(BigRational::from_integer).collect();
    let xi = section.combine(&Rationals, &u)?;
    Ok(xi
        .into_iter()
        .zip(&algebra.principal_nilpotent().coordinates)
        .map(|(x, &y)| x + BigRational::from_integer(y.into()))
        .collect())
}

/// A section point with squarefree characteristic polynomial in `rep`;
/// gives up after 64 draws.
pub fn random_regular_semisimple<G: Rng>(
    rng: &mut G,
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    section: &crate::sections::KostantSection,
    p: u64,
    precision: u32,
) -> Result<Vec<BigRational>> {
    for _ in 0..64 {
        let u = random_section_coefficients(rng, section.rank(), p, precision);
        let x = section_point(algebra, section, &u)?;
        if is_squarefree(&char_poly_q(&rep.image(&Rationals, &x))) {
            return Ok(x);
        }
    }
    Err(Error::Internal(
        "no regular semisimple draw in 64 attempts".into(),
    ))
}
