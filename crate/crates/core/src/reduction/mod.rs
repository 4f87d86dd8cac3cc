//! Topological nilpotence, the mock exponential, and conjugation of
//! `Y + g_{x,0+}` into the Kostant section.

mod selfdual;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, RepFamily, StandardRep};
use crate::error::{Error, Result};
use crate::linalg::{FromRational, Matrix, MatrixOps, PrimeField, Rationals, Ring};
use crate::padic::{min_valuation, to_residue, valuation_rational, PadicIntegers, Valuation};
use crate::sections::{is_g_good, InvariantSystem, KostantSection};

pub use selfdual::{check_selfdual, constants, d_g, OrbitalConstants, SelfDualReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotenceVerdict {
    pub is_topologically_nilpotent: bool,
    /// `(k, v_p(e_k(X)))` for every nonconstant coefficient.
    pub witness: Vec<(usize, Valuation)>,
}

/// Verdict from the valuations of all characteristic-polynomial coefficients
/// of `rep(x)`; requires a representation faithful on the torus.
pub fn is_topologically_nilpotent(
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    x: &[BigRational],
    p: u64,
) -> Result<NilpotenceVerdict> {
    if !crate::linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if rep.family() == RepFamily::Adjoint && !algebra.datum().roots_span_characters() {
        return Err(Error::UnsupportedFamily(format!(
            "adjoint representation does not detect characters of {}",
            algebra.datum()
        )));
    }
    Ok(nilpotence_of_matrix(&rep.image(&Rationals, x), p))
}

pub fn nilpotence_of_matrix(m: &Matrix<BigRational>, p: u64) -> NilpotenceVerdict {
    let coeffs = crate::linalg::eigen_symmetric(&Rationals, m);
    let witness: Vec<(usize, Valuation)> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (i + 1, valuation_rational(c, p)))
        .collect();
    NilpotenceVerdict {
        is_topologically_nilpotent: witness.iter().all(|(_, v)| v.at_least(1)),
        witness,
    }
}

fn factorial_split(k: u64, p: u64) -> (u32, BigInt) {
    let mut v = 0;
    let mut unit = BigInt::one();
    for i in 1..=k {
        let mut j = i;
        while j % p == 0 {
            j /= p;
            v += 1;
        }
        unit *= j;
    }
    (v, unit)
}

/// `exp(p^level b)` modulo `p^N`, summed exactly: the `k`-th term is
/// `p^{level k - v(k!)} b^k / unit(k!)`.
pub fn mock_exp(ring: &PadicIntegers, b: &Matrix<BigInt>, level: u32) -> Result<Matrix<BigInt>> {
    let p = ring.prime();
    if p == 2 {
        return Err(Error::PrimeTooSmall(p));
    }
    if level == 0 {
        return Err(Error::NotInDomain("mock exponential needs level >= 1".into()));
    }
    let n = ring.precision() as u64;
    let n_rows = b.rows();
    let b = b.map(|x| ring.from_int(x));
    let mut out = ring.identity(n_rows);
    let mut power = ring.identity(n_rows);
    // level k - v(k!) >= k (level - 1/(p-1)) >= k/2
    let k_max = 2 * n / level as u64 + 2;
    for k in 1..=k_max {
        power = ring.mat_mul(&power, &b);
        if ring.is_zero_mat(&power) {
            break;
        }
        let (v, unit) = factorial_split(k, p);
        let e = level as u64 * k - v as u64;
        if e >= n {
            continue;
        }
        let scale = ring.mul(&ring.p_power(e as u32), &ring.inv(&ring.from_int(&unit)).unwrap());
        out = ring.mat_add(&out, &ring.mat_scale(&scale, &power));
    }
    Ok(out)
}

/// Witness that `Ad(g) Z = Y + xi` modulo `p^precision`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionCertificate {
    pub p: u64,
    pub precision: u32,
    /// Residues modulo `p^precision`, congruent to 1 modulo `p`.
    #[serde(serialize_with = "decimal_rows")]
    pub conjugator: Vec<Vec<BigInt>>,
    /// Coefficients in the section basis.
    #[serde(serialize_with = "decimal_vec")]
    pub xi_coefficients: Vec<BigInt>,
    /// Chevalley coordinates of `xi`.
    #[serde(serialize_with = "decimal_vec")]
    pub xi: Vec<BigInt>,
    /// Valuation of the final defect, capped at the precision.
    pub residual: i64,
    /// Defect valuation at the start of each iteration.
    pub levels: Vec<i64>,
    /// Measures are normalized so the lattice volume factors are 1.
    pub measure_normalization: &'static str,
}

fn decimal_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn decimal_rows<S: serde::Serializer>(v: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        v.iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
    )
}

/// Outcome of re-deriving a certificate's claims by direct multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub conjugator_congruent_to_identity: bool,
    pub conjugation_holds: bool,
    pub invariants_match: bool,
    pub residual_reaches_precision: bool,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.conjugator_congruent_to_identity
            && self.conjugation_holds
            && self.invariants_match
            && self.residual_reaches_precision
    }
}

impl ReductionCertificate {
    pub fn conjugator_matrix(&self) -> Matrix<BigInt> {
        Matrix::from_rows(self.conjugator.clone())
    }

    /// Checks `g Z == (Y + xi) g`, `g == 1 mod p` and `chi(Y + xi) == chi(Z)`.
    pub fn verify(
        &self,
        algebra: &ChevalleyAlgebra,
        rep: &StandardRep,
        invariants: &InvariantSystem,
        z: &[BigRational],
    ) -> Result<CertificateCheck> {
        let ring = PadicIntegers::new(self.p, self.precision);
        let z: Vec<BigInt> = z.iter().map(|x| to_residue(&ring, x)).collect::<Result<_>>()?;
        let y = y_residues(&ring, algebra);
        let section_point: Vec<BigInt> = y.iter().zip(&self.xi).map(|(a, b)| ring.add(a, b)).collect();
        let g = self.conjugator_matrix();
        let lhs = ring.mat_mul(&g, &rep.image(&ring, &z));
        let rhs = ring.mat_mul(&rep.image(&ring, &section_point), &g);
        Ok(CertificateCheck {
            conjugator_congruent_to_identity: ring.is_identity_mod_p(&g),
            conjugation_holds: lhs == rhs,
            invariants_match: invariants.evaluate(&ring, rep, &z)
                == invariants.evaluate(&ring, rep, &section_point),
            residual_reaches_precision: self.residual >= self.precision as i64,
        })
    }
}

fn y_residues(ring: &PadicIntegers, algebra: &ChevalleyAlgebra) -> Vec<BigInt> {
    algebra
        .principal_nilpotent()
        .coordinates
        .iter()
        .map(|&v| ring.from_i64(v))
        .collect()
}

/// Precomputed data for reducing many elements at one prime and precision.
#[derive(Clone, Debug)]
pub struct Reducer<'a> {
    algebra: &'a ChevalleyAlgebra,
    rep: &'a StandardRep,
    section: &'a KostantSection,
    ring: PadicIntegers,
    field: PrimeField,
    y: Vec<BigInt>,
    xi_basis: Vec<Vec<BigInt>>,
    pivots: Vec<(usize, usize)>,
    coordinate_inverse: Matrix<BigInt>,
    /// Columns of `[Xi | -ad Y]` used in the level solve, and the inverse of
    /// that square block over `F_p`.
    solve_columns: Vec<usize>,
    solve_inverse: Matrix<u64>,
}

impl<'a> Reducer<'a> {
    pub fn new(
        algebra: &'a ChevalleyAlgebra,
        rep: &'a StandardRep,
        section: &'a KostantSection,
        p: u64,
        precision: u32,
    ) -> Result<Self> {
        if !crate::linalg::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::PrimeTooSmall(p));
        }
        if precision == 0 {
            return Err(Error::NotInDomain("precision must be positive".into()));
        }
        if !is_g_good(algebra, p)? {
            return Err(Error::NotGood(p));
        }
        let ring = PadicIntegers::new(p, precision);
        let field = PrimeField::new(p);
        let (pivots, inv_q) = rep
            .coordinate_map()
            .ok_or_else(|| Error::UnsupportedFamily("representation is not faithful".into()))?;
        let coordinate_inverse = inv_q
            .to_rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| ring.from_rational(x))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()
            .map(Matrix::from_rows)
            .ok_or_else(|| Error::UnsupportedFamily(format!("coordinate map is not {p}-integral")))?;
        let xi_basis = section.basis_in(&ring)?;

        let dim = algebra.dim();
        let rk = section.rank();
        let ad_y = field.lift(&algebra.full_ad_y());
        let mut system = field.zeros(dim, rk + dim);
        let xi_mod_p = section.basis_in(&field)?;
        for (i, xi) in xi_mod_p.iter().enumerate() {
            for (r, x) in xi.iter().enumerate() {
                system[(r, i)] = *x;
            }
        }
        for r in 0..dim {
            for c in 0..dim {
                system[(r, rk + c)] = field.neg(&ad_y[(r, c)]);
            }
        }
        let mut reduced = system.clone();
        let solve_columns = field.row_reduce(&mut reduced);
        if solve_columns.len() != dim {
            return Err(Error::Internal("Xi and [Y, g] do not span g modulo p".into()));
        }
        let square = system.submatrix(&(0..dim).collect::<Vec<_>>(), &solve_columns);
        let solve_inverse = field
            .inverse(&square)
            .ok_or_else(|| Error::Internal("level-solve block is singular".into()))?;
        Ok(Reducer {
            algebra,
            rep,
            section,
            y: y_residues(&ring, algebra),
            ring,
            field,
            xi_basis,
            pivots: pivots.to_vec(),
            coordinate_inverse,
            solve_columns,
            solve_inverse,
        })
    }

    pub fn ring(&self) -> &PadicIntegers {
        &self.ring
    }

    fn coordinates(&self, m: &Matrix<BigInt>) -> Vec<BigInt> {
        let entries: Vec<BigInt> = self.pivots.iter().map(|&(i, j)| m[(i, j)].clone()).collect();
        self.ring.mat_vec(&self.coordinate_inverse, &entries)
    }

    fn xi_of(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let ring = &self.ring;
        let mut out = vec![ring.zero(); self.algebra.dim()];
        for (c, xi) in coeffs.iter().zip(&self.xi_basis) {
            for (o, x) in out.iter_mut().zip(xi) {
                *o = ring.add(o, &ring.mul(c, x));
            }
        }
        out
    }

    /// Residues of `z`, after checking `z` lies in `Y + g_{x,0+}`.
    pub fn admit(&self, z: &[BigRational]) -> Result<Vec<BigInt>> {
        let p = self.ring.prime();
        if z.len() != self.algebra.dim() {
            return Err(Error::Dimension(format!(
                "expected {} coordinates",
                self.algebra.dim()
            )));
        }
        let diff: Vec<BigRational> = z
            .iter()
            .zip(&self.y)
            .map(|(a, b)| a - BigRational::from_integer(b.clone()))
            .collect();
        if !min_valuation(&diff, p).at_least(1) {
            return Err(Error::NotInDomain("element is not in Y + g_{x,0+}".into()));
        }
        z.iter().map(|x| to_residue(&self.ring, x)).collect()
    }

    pub fn reduce(&self, z: &[BigRational]) -> Result<ReductionCertificate> {
        let ring = &self.ring;
        let field = &self.field;
        let p = ring.prime();
        let n = ring.precision();
        let dim = self.algebra.dim();
        let rk = self.section.rank();
        let w = self.rep.image(ring, &self.admit(z)?);
        let size = self.rep.size();
        let mut g = ring.identity(size);
        let mut g_inv = ring.identity(size);
        let mut coeffs = vec![ring.zero(); rk];
        let mut levels = Vec::new();
        let cap = 4 * n as usize;
        let residual = loop {
            let current = ring.mat_mul(&ring.mat_mul(&g, &w), &g_inv);
            let coords = self.coordinates(&current);
            let xi = self.xi_of(&coeffs);
            let defect: Vec<BigInt> = (0..dim)
                .map(|b| ring.sub(&ring.sub(&coords[b], &self.y[b]), &xi[b]))
                .collect();
            let v = match ring.min_valuation(&defect) {
                Valuation::Finite(v) => v,
                Valuation::Infinite => n as i64,
            };
            if let Some(&last) = levels.last() {
                if v <= last {
                    return Err(Error::Internal(format!("defect valuation stalled at {v}")));
                }
            }
            if v >= n as i64 {
                break v.min(n as i64);
            }
            if levels.len() >= cap {
                return Err(Error::NonConvergence(levels.len()));
            }
            levels.push(v);
            let level = v as u32;
            let rhs: Vec<u64> = defect
                .iter()
                .map(|d| field.from_int(&ring.shift_down(d, level)))
                .collect();
            let sol = field.mat_vec(&self.solve_inverse, &rhs);
            let mut p_bar = vec![BigInt::zero(); dim];
            for (&col, s) in self.solve_columns.iter().zip(&sol) {
                if col < rk {
                    coeffs[col] = ring.add(&coeffs[col], &ring.mul(&ring.p_power(level), &BigInt::from(*s)));
                } else {
                    p_bar[col - rk] = BigInt::from(*s);
                }
            }
            // Ad(h) X = h X h^{-1}; the defect [P, Y] + C pairs with h = exp(-p^l P).
            let p_mat = self.rep.image(&crate::linalg::Integers, &p_bar);
            let neg = p_mat.map(|x| -x);
            let h = mock_exp(ring, &neg, level)?;
            let h_inv = mock_exp(ring, &p_mat, level)?;
            g = ring.mat_mul(&h, &g);
            g_inv = ring.mat_mul(&g_inv, &h_inv);
        };
        debug_assert!(ring.is_identity_mod_p(&g));
        Ok(ReductionCertificate {
            p,
            precision: n,
            conjugator: g.to_rows(),
            xi: self.xi_of(&coeffs),
            xi_coefficients: coeffs,
            residual,
            levels,
            measure_normalization: "unit",
        })
    }
}

/// Conjugates `z` in `Y + g_{x,0+}` into the section.
pub fn reduce_to_section(
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    section: &KostantSection,
    z: &[BigRational],
    p: u64,
    precision: u32,
) -> Result<ReductionCertificate> {
    Reducer::new(algebra, rep, section, p, precision)?.reduce(z)
}

/// Both elements reduce to the same section point.
pub fn same_orbit(reducer: &Reducer<'_>, z1: &[BigRational], z2: &[BigRational]) -> Result<bool> {
    Ok(reducer.reduce(z1)?.xi == reducer.reduce(z2)?.xi)
}

/// For `z` in `Y + g_{x,m}`, all retained invariants have valuation `>= m`.
pub fn check_level_image(
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    invariants: &InvariantSystem,
    z: &[BigRational],
    m: i64,
    p: u64,
) -> Result<bool> {
    if m < 1 {
        return Err(Error::NotInDomain("level must be at least 1".into()));
    }
    let diff: Vec<BigRational> = z
        .iter()
        .zip(&algebra.principal_nilpotent().coordinates)
        .map(|(a, &b)| a - BigRational::from_integer(b.into()))
        .collect();
    if !min_valuation(&diff, p).at_least(m) {
        return Err(Error::NotInDomain(format!("element is not in Y + g_{{x,{m}}}")));
    }
    let values = invariants.evaluate(&Rationals, rep, z);
    Ok(values.iter().all(|c| valuation_rational(c, p).at_least(m)))
}
