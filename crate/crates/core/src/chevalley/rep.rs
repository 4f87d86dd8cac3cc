//! Faithful matrix representations of the classical Chevalley algebras.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Integers, Matrix, MatrixOps, Rationals, Ring};
use crate::rootdata::{CartanType, Isogeny};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepFamily {
    Gl,
    Sl,
    Sp,
    Adjoint,
}

impl RepFamily {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "gl" => RepFamily::Gl,
            "sl" => RepFamily::Sl,
            "sp" => RepFamily::Sp,
            "ad" | "adjoint" => RepFamily::Adjoint,
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        })
    }
}

impl fmt::Display for RepFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepFamily::Gl => "gl",
            RepFamily::Sl => "sl",
            RepFamily::Sp => "sp",
            RepFamily::Adjoint => "adjoint",
        };
        f.write_str(s)
    }
}

/// `matrices[b]` is the image of the `b`-th Chevalley basis vector.
#[derive(Clone, Debug)]
pub struct StandardRep {
    family: RepFamily,
    size: usize,
    matrices: Vec<IntMatrix>,
    /// Matrix entries `(i, j)` whose values determine the coordinates.
    pivots: Vec<(usize, usize)>,
    /// Inverse of the coordinate map restricted to `pivots`, when faithful.
    pivot_inverse: Option<Matrix<BigRational>>,
}

fn unit_matrix(n: usize, i: usize, j: usize) -> IntMatrix {
    let mut m = Matrix::filled(n, n, BigInt::zero());
    m[(i, j)] = BigInt::one();
    m
}

impl StandardRep {
    pub fn new(algebra: &ChevalleyAlgebra, family: RepFamily) -> Result<Self> {
        let datum = algebra.datum();
        let factors = datum.root_system().factors();
        let single = |t: CartanType| factors.len() == 1 && factors[0].cartan_type == t;
        let unsupported = || Error::UnsupportedFamily(format!("{family} standard representation of {datum}"));
        let matrices = match family {
            RepFamily::Adjoint => (0..algebra.dim()).map(|b| algebra.ad_basis(b)).collect(),
            RepFamily::Gl if datum.isogeny() == Isogeny::GeneralLinear => {
                let n = datum.character_lattice_rank();
                let cartan = (0..n).map(|k| unit_matrix(n, k, k)).collect();
                classical(algebra, n, cartan, chain_generators(n))?
            }
            RepFamily::Sl if datum.isogeny() == Isogeny::SimplyConnected && single(CartanType::A) => {
                let n = datum.semisimple_rank() + 1;
                let cartan = (0..n - 1)
                    .map(|k| {
                        let mut h = unit_matrix(n, k, k);
                        h[(k + 1, k + 1)] = -BigInt::one();
                        h
                    })
                    .collect();
                classical(algebra, n, cartan, chain_generators(n))?
            }
            RepFamily::Sp if datum.isogeny() == Isogeny::SimplyConnected && single(CartanType::C) => {
                let r = datum.semisimple_rank();
                let gens = symplectic_generators(r);
                let ring = Integers;
                let cartan = gens.iter().map(|(x, y)| ring.commutator(x, y)).collect();
                classical(algebra, 2 * r, cartan, gens)?
            }
            _ => return Err(unsupported()),
        };
        let size = matrices[0].rows();
        let mut rep = StandardRep {
            family,
            size,
            matrices,
            pivots: Vec::new(),
            pivot_inverse: None,
        };
        rep.verify_brackets(algebra)?;
        if family == RepFamily::Sp && !rep.preserves_symplectic_form() {
            return Err(Error::Internal("sp generators leave the symplectic form".into()));
        }
        rep.prepare_coordinates();
        Ok(rep)
    }

    /// Default family for a datum: the defining representation when one is
    /// designated, the adjoint representation otherwise.
    pub fn for_algebra(algebra: &ChevalleyAlgebra) -> Result<Self> {
        let datum = algebra.datum();
        let factors = datum.root_system().factors();
        let family = match (datum.isogeny(), factors) {
            (Isogeny::GeneralLinear, _) => RepFamily::Gl,
            (Isogeny::SimplyConnected, [f]) if f.cartan_type == CartanType::A => RepFamily::Sl,
            (Isogeny::SimplyConnected, [f]) if f.cartan_type == CartanType::C => RepFamily::Sp,
            _ => RepFamily::Adjoint,
        };
        StandardRep::new(algebra, family)
    }

    pub fn family(&self) -> RepFamily {
        self.family
    }

    /// Side length of the representing matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self, b: usize) -> &IntMatrix {
        &self.matrices[b]
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.matrices
    }

    pub fn is_faithful(&self) -> bool {
        self.pivot_inverse.is_some()
    }

    /// `sum_b x_b rep(e_b)` over any ring.
    pub fn image<R: Ring>(&self, ring: &R, x: &[R::Elem]) -> Matrix<R::Elem> {
        assert_eq!(x.len(), self.matrices.len());
        let mut out = ring.zeros(self.size, self.size);
        for (c, m) in x.iter().zip(&self.matrices) {
            if ring.is_zero(c) {
                continue;
            }
            for i in 0..self.size {
                for j in 0..self.size {
                    let e = &m[(i, j)];
                    if !e.is_zero() {
                        out[(i, j)] = ring.add(&out[(i, j)], &ring.mul(&ring.from_int(e), c));
                    }
                }
            }
        }
        out
    }

    /// The rational linear left inverse of `image`: entries at the pivot
    /// positions determine the coordinates.
    pub fn coordinate_map(&self) -> Option<(&[(usize, usize)], &Matrix<BigRational>)> {
        self.pivot_inverse
            .as_ref()
            .map(|inv| (self.pivots.as_slice(), inv))
    }

    /// Chevalley coordinates of a matrix in the image, or `None` if the
    /// matrix is not in the image.
    pub fn coordinates(&self, m: &Matrix<BigRational>) -> Option<Vec<BigRational>> {
        let inv = self.pivot_inverse.as_ref()?;
        if m.rows() != self.size || m.cols() != self.size {
            return None;
        }
        let entries: Vec<BigRational> = self.pivots.iter().map(|&(i, j)| m[(i, j)].clone()).collect();
        let x = Rationals.mat_vec(inv, &entries);
        (self.image(&Rationals, &x) == *m).then_some(x)
    }

    fn verify_brackets(&self, algebra: &ChevalleyAlgebra) -> Result<()> {
        let ring = Integers;
        let n = algebra.dim();
        for a in 0..n {
            for b in a + 1..n {
                let mut expect = ring.zeros(self.size, self.size);
                for &(c, k) in algebra.basis_bracket(a, b) {
                    expect = ring.mat_add(&expect, &ring.mat_scale(&BigInt::from(k), &self.matrices[c]));
                }
                if ring.commutator(&self.matrices[a], &self.matrices[b]) != expect {
                    return Err(Error::Internal(format!(
                        "representation is not a homomorphism on ({}, {})",
                        algebra.label(a),
                        algebra.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `X^T J + J X = 0` for every basis image.
    pub fn preserves_symplectic_form(&self) -> bool {
        let ring = Integers;
        let j = symplectic_form(self.size / 2);
        self.matrices.iter().all(|x| {
            let lhs = ring.mat_add(&ring.mat_mul(&x.transpose(), &j), &ring.mat_mul(&j, x));
            lhs.is_zero_matrix()
        })
    }

    fn prepare_coordinates(&mut self) {
        let dim = self.matrices.len();
        let n = self.size;
        // Row b of `coord` is the flattened image of basis vector b.
        let mut coord = Matrix::filled(dim, n * n, BigRational::zero());
        for (b, m) in self.matrices.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    coord[(b, i * n + j)] = BigRational::from_integer(m[(i, j)].clone());
                }
            }
        }
        let mut reduced = coord.clone();
        let pivots = Rationals.row_reduce(&mut reduced);
        if pivots.len() < dim {
            return;
        }
        let square = coord
            .submatrix(&(0..dim).collect::<Vec<_>>(), &pivots)
            .transpose();
        self.pivot_inverse = Rationals.inverse(&square);
        self.pivots = pivots.iter().map(|&k| (k / n, k % n)).collect();
    }
}

/// `J` antidiagonal, `+1` in the first `n` rows and `-1` in the last `n`.
pub fn symplectic_form(n: usize) -> IntMatrix {
    let mut j = Matrix::filled(2 * n, 2 * n, BigInt::zero());
    for i in 0..2 * n {
        j[(i, 2 * n - 1 - i)] = if i < n { BigInt::one() } else { -BigInt::one() };
    }
    j
}

fn chain_generators(n: usize) -> Vec<(IntMatrix, IntMatrix)> {
    (0..n.saturating_sub(1))
        .map(|i| (unit_matrix(n, i, i + 1), unit_matrix(n, i + 1, i)))
        .collect()
}

fn symplectic_generators(r: usize) -> Vec<(IntMatrix, IntMatrix)> {
    let n = 2 * r;
    (0..r)
        .map(|i| {
            let x = if i + 1 < r {
                let mut x = unit_matrix(n, i, i + 1);
                x[(n - 2 - i, n - 1 - i)] = -BigInt::one();
                x
            } else {
                unit_matrix(n, i, i + 1)
            };
            let y = x.transpose();
            (x, y)
        })
        .collect()
}

/// Extends images of the Cartan basis and of `X_{+-alpha_i}` to every root
/// vector through extraspecial pairs.
fn classical(
    algebra: &ChevalleyAlgebra,
    n: usize,
    cartan: Vec<IntMatrix>,
    generators: Vec<(IntMatrix, IntMatrix)>,
) -> Result<Vec<IntMatrix>> {
    let ring = Integers;
    let np = algebra.num_positive_roots();
    let mut pos: Vec<Option<IntMatrix>> = vec![None; np];
    let mut neg: Vec<Option<IntMatrix>> = vec![None; np];
    for (i, (x, y)) in generators.into_iter().enumerate() {
        pos[i] = Some(x);
        neg[i] = Some(y);
    }
    let exact_div = |m: IntMatrix, k: i64| -> Result<IntMatrix> {
        let k = BigInt::from(k);
        if m.entries().any(|e| !e.is_multiple_of(&k)) {
            return Err(Error::Internal("root vector image is not integral".into()));
        }
        Ok(m.map(|e| e / &k))
    };
    for xi in 0..np {
        if pos[xi].is_some() {
            continue;
        }
        let (a, b) = algebra
            .extraspecial_pair(xi)
            .ok_or_else(|| Error::Internal("non-simple root without extraspecial pair".into()))?;
        let nab = algebra.structure_constant(a, b).unwrap();
        let (pa, pb) = (pos[a].as_ref().unwrap(), pos[b].as_ref().unwrap());
        pos[xi] = Some(exact_div(ring.commutator(pa, pb), nab)?);
        let (na, nb) = (neg[a].as_ref().unwrap(), neg[b].as_ref().unwrap());
        neg[xi] = Some(exact_div(ring.commutator(na, nb), -nab)?);
    }
    let mut out = cartan;
    debug_assert!(out.iter().all(|h| h.rows() == n));
    out.extend(pos.into_iter().map(Option::unwrap));
    out.extend(neg.into_iter().map(Option::unwrap));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_algebra;
    use crate::rootdata::{DatumSpec, RootDatum};

    fn rep_of(datum: RootDatum, family: RepFamily) -> (ChevalleyAlgebra, StandardRep) {
        let g = build_algebra(&datum).unwrap();
        let r = StandardRep::new(&g, family).unwrap();
        (g, r)
    }

    fn power(m: &IntMatrix, k: usize) -> IntMatrix {
        let ring = Integers;
        (0..k).fold(ring.identity(m.rows()), |acc, _| ring.mat_mul(&acc, m))
    }

    #[test]
    fn sl2_images() {
        let (g, r) = rep_of(
            DatumSpec::new(CartanType::A, 1, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
            RepFamily::Sl,
        );
        assert_eq!(r.matrix(0), &IntMatrix::from_i64_rows(&[vec![1, 0], vec![0, -1]]));
        let y: Vec<BigInt> = g
            .principal_nilpotent()
            .coordinates
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(
            r.image(&Integers, &y),
            IntMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]])
        );
        assert_eq!(r.matrix(2), &IntMatrix::from_i64_rows(&[vec![0, 0], vec![1, 0]]));
    }

    #[test]
    fn principal_nilpotent_is_regular_in_reps() {
        let cases = [
            (RootDatum::general_linear(4).unwrap(), RepFamily::Gl),
            (
                DatumSpec::new(CartanType::A, 3, Isogeny::SimplyConnected)
                    .build()
                    .unwrap(),
                RepFamily::Sl,
            ),
            (
                DatumSpec::new(CartanType::C, 2, Isogeny::SimplyConnected)
                    .build()
                    .unwrap(),
                RepFamily::Sp,
            ),
            (
                DatumSpec::new(CartanType::C, 3, Isogeny::SimplyConnected)
                    .build()
                    .unwrap(),
                RepFamily::Sp,
            ),
        ];
        for (datum, family) in cases {
            let (g, r) = rep_of(datum, family);
            let y: Vec<BigInt> = g
                .principal_nilpotent()
                .coordinates
                .into_iter()
                .map(BigInt::from)
                .collect();
            let ym = r.image(&Integers, &y);
            let n = r.size();
            assert!(power(&ym, n).is_zero_matrix());
            assert!(!power(&ym, n - 1).is_zero_matrix());
            assert!(r.is_faithful());
        }
    }

    #[test]
    fn gl_principal_nilpotent_is_superdiagonal() {
        let (g, r) = rep_of(RootDatum::general_linear(3).unwrap(), RepFamily::Gl);
        let y: Vec<BigInt> = g
            .principal_nilpotent()
            .coordinates
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(
            r.image(&Integers, &y),
            IntMatrix::from_i64_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]])
        );
    }

    #[test]
    fn symplectic_constraint() {
        let (_, r) = rep_of(
            DatumSpec::new(CartanType::C, 2, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
            RepFamily::Sp,
        );
        assert!(r.preserves_symplectic_form());
        assert_eq!(r.matrices().len(), 10);
    }

    #[test]
    fn unsupported_families() {
        let g = build_algebra(
            &DatumSpec::new(CartanType::G, 2, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
        )
        .unwrap();
        assert!(matches!(
            StandardRep::new(&g, RepFamily::Sl),
            Err(Error::UnsupportedFamily(_))
        ));
        let ad = StandardRep::new(&g, RepFamily::Adjoint).unwrap();
        assert!(ad.is_faithful());
    }

    #[test]
    fn coordinates_round_trip() {
        let (g, r) = rep_of(
            DatumSpec::new(CartanType::C, 2, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
            RepFamily::Sp,
        );
        let x: Vec<BigRational> = (0..g.dim())
            .map(|b| BigRational::new((b as i64 - 3).into(), 2.into()))
            .collect();
        let m = r.image(&Rationals, &x);
        assert_eq!(r.coordinates(&m).unwrap(), x);
        let mut off = m.clone();
        off[(0, 0)] += BigRational::one();
        assert!(r.coordinates(&off).is_none());
    }
}
