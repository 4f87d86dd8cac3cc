//! The integral Kostant section `Y + Xi`, its excluded primes, the good-prime
//! classifiers and the inverse of the section map.

pub mod closed_form;
mod invariants;

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chevalley::{graded_ad_y, rank_mod_p, ChevalleyAlgebra, GradedAdY, RepFamily, StandardRep};
use crate::error::{Error, Result};
use crate::linalg::{
    prime_factors, smith_normal_form, FromRational, IntMatrix, Matrix, MatrixOps, Rationals, SmithForm,
};
use crate::padic::PadicIntegers;
use crate::rootdata::RootDatum;

pub use invariants::InvariantSystem;

/// Smith forms of the blocks `M_j : g(j) -> g(j+2)` for `j < 0`.
#[derive(Clone, Debug)]
pub struct SmithData {
    pub forms: BTreeMap<i64, SmithForm>,
}

impl SmithData {
    pub fn divisors(&self, j: i64) -> Vec<BigInt> {
        self.forms.get(&j).map(SmithForm::divisors).unwrap_or_default()
    }

    pub fn all_divisors(&self) -> impl Iterator<Item = BigInt> + '_ {
        self.forms.values().flat_map(SmithForm::divisors)
    }
}

pub fn smith_decompose(graded: &GradedAdY) -> SmithData {
    let forms = graded
        .blocks
        .iter()
        .filter(|(j, _)| **j < 0)
        .map(|(&j, m)| (j, smith_normal_form(m)))
        .collect();
    SmithData { forms }
}

/// Square-free `N`: primes dividing a negative-degree elementary divisor or
/// the order of `pi_1(G_der)`.
pub fn excluded_primes(smith: &SmithData, datum: &RootDatum) -> u64 {
    let mut primes: Vec<u64> = smith.all_divisors().flat_map(|d| prime_factors(&d)).collect();
    primes.extend(prime_factors(&BigInt::from(datum.fundamental_group_order())));
    primes.sort_unstable();
    primes.dedup();
    primes.iter().product()
}

pub fn prime_list(n: u64) -> Vec<u64> {
    prime_factors(&BigInt::from(n))
}

/// `ad Y` restricted to `n^-` has full rank over `F_p`.
pub fn is_n_good(algebra: &ChevalleyAlgebra, p: u64) -> Result<bool> {
    let full = algebra.full_ad_y();
    let neg = algebra.negative_part();
    let rows: Vec<usize> = (0..algebra.dim()).collect();
    Ok(rank_mod_p(&full.submatrix(&rows, &neg), p)? == neg.len())
}

/// `ad Y` has rank `dim G - rk G` over `F_p`.
pub fn is_g_good(algebra: &ChevalleyAlgebra, p: u64) -> Result<bool> {
    Ok(rank_mod_p(&algebra.full_ad_y(), p)? == algebra.dim() - algebra.rank())
}

/// Basis of a `lambda`-stable complement `Xi` to `[Y, n^-]` in `b^-`, valid
/// over `Z[1/N]`.
#[derive(Clone, Debug, Serialize)]
pub struct KostantSection {
    pub excluded_n: u64,
    /// Chevalley coordinates; each vector is homogeneous.
    #[serde(serialize_with = "serialize_rational_vectors")]
    pub xi_basis: Vec<Vec<BigRational>>,
    /// Degree of each basis vector, nonincreasing.
    pub weights: Vec<i64>,
}

fn serialize_rational_vectors<S: serde::Serializer>(
    v: &[Vec<BigRational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        let strings: Vec<String> = row.iter().map(crate::padic::rational_string).collect();
        seq.serialize_element(&strings)?;
    }
    seq.end()
}

impl KostantSection {
    pub fn rank(&self) -> usize {
        self.xi_basis.len()
    }

    pub fn is_defined_at(&self, p: u64) -> bool {
        !self.excluded_n.is_multiple_of(p)
    }

    /// `sum_i u_i xi_i` in Chevalley coordinates.
    pub fn combine<R: FromRational>(&self, ring: &R, u: &[R::Elem]) -> Result<Vec<R::Elem>> {
        let basis = self.basis_in(ring)?;
        let dim = basis.first().map_or(0, Vec::len);
        let mut out = vec![ring.zero(); dim];
        for (ui, xi) in u.iter().zip(&basis) {
            if ring.is_zero(ui) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(xi) {
                *o = ring.add(o, &ring.mul(ui, x));
            }
        }
        Ok(out)
    }

    pub fn basis_in<R: FromRational>(&self, ring: &R) -> Result<Vec<Vec<R::Elem>>> {
        self.xi_basis
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| ring.from_rational(x))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| {
                        Error::NotInDomain("section basis has a non-invertible denominator".into())
                    })
            })
            .collect()
    }
}

pub fn build_section(algebra: &ChevalleyAlgebra) -> KostantSection {
    let graded = graded_ad_y(algebra);
    let smith = smith_decompose(&graded);
    build_section_from(algebra, &graded, &smith)
}

pub fn build_section_from(
    algebra: &ChevalleyAlgebra,
    graded: &GradedAdY,
    smith: &SmithData,
) -> KostantSection {
    let n = excluded_primes(smith, algebra.datum());
    let allowed = prime_list(n);
    let mut xi_basis = Vec::new();
    let mut weights = Vec::new();
    for (&k, target) in graded.pieces.iter().rev() {
        if k > 0 {
            continue;
        }
        let m = target.len();
        let block = graded
            .blocks
            .get(&(k - 2))
            .cloned()
            .unwrap_or_else(|| Matrix::filled(m, 0, BigInt::zero()));
        let r = Rationals.rank(&Rationals.lift(&block));
        let corank = m - r;
        if corank == 0 {
            continue;
        }
        let chosen = coordinate_complement(&block, corank, &allowed)
            .map(|t| {
                t.into_iter()
                    .map(|i| {
                        (0..m)
                            .map(|l| {
                                if l == i {
                                    BigRational::one()
                                } else {
                                    BigRational::zero()
                                }
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            })
            .unwrap_or_else(|| {
                // Columns of L^{-1} dual to the zero rows of the diagonal form.
                let sf = smith_normal_form(&block);
                (r..m)
                    .map(|c| {
                        (0..m)
                            .map(|l| BigRational::from_integer(sf.left_inv[(l, c)].clone()))
                            .collect()
                    })
                    .collect()
            });
        for local in chosen {
            let mut v = vec![BigRational::zero(); algebra.dim()];
            for (l, &b) in target.iter().enumerate() {
                v[b] = local[l].clone();
            }
            xi_basis.push(v);
            weights.push(k);
        }
    }
    KostantSection {
        excluded_n: n,
        xi_basis,
        weights,
    }
}

/// Target basis vectors `T`, preferring later indices, such that the rows of
/// `block` outside `T` form a square minor whose primes all divide `N`.
fn coordinate_complement(block: &IntMatrix, corank: usize, allowed: &[u64]) -> Option<Vec<usize>> {
    let m = block.rows();
    let cols: Vec<usize> = (0..block.cols()).collect();
    for t in (0..m).rev().combinations(corank) {
        let rows: Vec<usize> = (0..m).filter(|i| !t.contains(i)).collect();
        if rows.len() != cols.len() {
            return None;
        }
        let det = if rows.is_empty() {
            BigInt::one()
        } else {
            block.submatrix(&rows, &cols).determinant()
        };
        if !det.is_zero() && prime_factors(&det).iter().all(|q| allowed.contains(q)) {
            let mut t = t;
            t.sort_unstable();
            return Some(t);
        }
    }
    None
}

/// Coefficients `u` with `chi(Y + sum u_i xi_i) = c`, by a triangular solve
/// in the weights `2 - deg(xi_i)` against the invariant weights `2k`.
pub fn section_invert<R: FromRational>(
    ring: &R,
    algebra: &ChevalleyAlgebra,
    section: &KostantSection,
    rep: &StandardRep,
    invariants: &InvariantSystem,
    c: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    if invariants.family == RepFamily::Adjoint {
        return Err(Error::UnsupportedFamily(
            "section inversion needs a defining representation".into(),
        ));
    }
    if c.len() != invariants.len() {
        return Err(Error::Dimension(format!(
            "expected {} invariants, got {}",
            invariants.len(),
            c.len()
        )));
    }
    let basis = section.basis_in(ring)?;
    let rk = basis.len();
    let y: Vec<R::Elem> = algebra
        .principal_nilpotent()
        .coordinates
        .iter()
        .map(|&v| ring.from_i64(v))
        .collect();
    let add = |a: &[R::Elem], b: &[R::Elem]| -> Vec<R::Elem> {
        a.iter().zip(b).map(|(x, z)| ring.add(x, z)).collect()
    };

    let xi_weight: Vec<i64> = section.weights.iter().map(|d| 2 - d).collect();
    let inv_weight: Vec<i64> = invariants.degrees.iter().map(|&k| 2 * k as i64).collect();
    let mut groups: Vec<i64> = xi_weight.clone();
    groups.sort_unstable();
    groups.dedup();
    let mut u = vec![ring.zero(); rk];
    let mut matched = 0;
    for w in groups {
        let xs: Vec<usize> = (0..rk).filter(|&i| xi_weight[i] == w).collect();
        let ts: Vec<usize> = (0..inv_weight.len()).filter(|&t| inv_weight[t] == w).collect();
        if xs.len() != ts.len() {
            return Err(Error::Internal(format!(
                "weight {w}: {} section vectors, {} invariants",
                xs.len(),
                ts.len()
            )));
        }
        matched += ts.len();
        let mut jac = Matrix::filled(ts.len(), xs.len(), ring.zero());
        for (col, &i) in xs.iter().enumerate() {
            let vals = invariants.evaluate(ring, rep, &add(&y, &basis[i]));
            for (row, &t) in ts.iter().enumerate() {
                jac[(row, col)] = vals[t].clone();
            }
        }
        let current = section.combine(ring, &u)?;
        let vals = invariants.evaluate(ring, rep, &add(&y, &current));
        let rhs: Vec<R::Elem> = ts.iter().map(|&t| ring.sub(&c[t], &vals[t])).collect();
        let sol = ring.solve(&jac, &rhs).ok_or_else(|| {
            Error::NotInDomain(format!(
                "linear part of the invariants at weight {w} is not invertible"
            ))
        })?;
        for (&i, s) in xs.iter().zip(sol) {
            u[i] = s;
        }
    }
    if matched != invariants.len() {
        return Err(Error::Internal(
            "invariants left unmatched by section weights".into(),
        ));
    }
    Ok(u)
}

/// `section_invert` over `Z / p^precision`, defined only when `p` does not divide `N`.
pub fn section_invert_padic(
    algebra: &ChevalleyAlgebra,
    section: &KostantSection,
    rep: &StandardRep,
    invariants: &InvariantSystem,
    c: &[BigInt],
    p: u64,
    precision: u32,
) -> Result<Vec<BigInt>> {
    if !crate::linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !section.is_defined_at(p) {
        return Err(Error::SectionUndefined {
            p,
            n: section.excluded_n,
        });
    }
    let ring = PadicIntegers::new(p, precision);
    let c: Vec<BigInt> = c
        .iter()
        .map(|x| crate::linalg::Ring::from_int(&ring, x))
        .collect();
    section_invert(&ring, algebra, section, rep, invariants, &c)
}

/// Invariants of `x` in `b^-` agree with those of its Cartan part.
pub fn chi_projection_check(
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    invariants: &InvariantSystem,
    x: &[BigRational],
) -> Result<bool> {
    if (0..algebra.dim()).any(|b| algebra.degree(b) > 0 && !x[b].is_zero()) {
        return Err(Error::NotInDomain(
            "element has a positive-degree component".into(),
        ));
    }
    let cartan: Vec<BigRational> = (0..algebra.dim())
        .map(|b| {
            if algebra.degree(b) == 0 {
                x[b].clone()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    Ok(invariants.evaluate(&Rationals, rep, x) == invariants.evaluate(&Rationals, rep, &cartan))
}
