//! Integral Chevalley Lie algebras, the principal nilpotent `Y` and the
//! grading by the cocharacter `lambda`.
//!
//! Basis order: the standard basis `H_1..H_d` of `X_*(T)`, then `X_alpha` for
//! the positive roots in stored order, then `X_{-alpha}` in the same order.

mod rep;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Matrix, MatrixOps, PrimeField, Ring};
use crate::rootdata::{RootDatum, RootSystem};

pub use rep::{symplectic_form, RepFamily, StandardRep};

/// Sparse integer vector in basis coordinates, sorted by index.
pub type SparseVec = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    datum: RootDatum,
    /// `table[a][b] = [e_a, e_b]`.
    table: Vec<Vec<SparseVec>>,
    /// Root of each basis element in simple-root coordinates (zero on the Cartan).
    weights: Vec<Vec<i64>>,
    degrees: Vec<i64>,
    /// Extraspecial pair `(alpha, beta)` of each non-simple positive root.
    extraspecial: Vec<Option<(usize, usize)>>,
    constants: HashMap<(usize, usize), i64>,
}

impl ChevalleyAlgebra {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn root_system(&self) -> &RootSystem {
        self.datum.root_system()
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    /// Rank of `G`: the dimension of the Cartan subalgebra.
    pub fn rank(&self) -> usize {
        self.datum.character_lattice_rank()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.root_system().num_positive_roots()
    }

    pub fn cartan_index(&self, k: usize) -> usize {
        k
    }

    /// Basis index of `X_alpha` for the `i`-th positive root.
    pub fn positive_index(&self, i: usize) -> usize {
        self.rank() + i
    }

    /// Basis index of `X_{-alpha}` for the `i`-th positive root.
    pub fn negative_index(&self, i: usize) -> usize {
        self.rank() + self.num_positive_roots() + i
    }

    /// Basis index of `X_root` for a root in simple-root coordinates.
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        let rs = self.root_system();
        if let Some(i) = rs.positive_root_index(root) {
            return Some(self.positive_index(i));
        }
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        rs.positive_root_index(&neg).map(|i| self.negative_index(i))
    }

    pub fn weight(&self, b: usize) -> &[i64] {
        &self.weights[b]
    }

    /// Degree `<weight, lambda>`: 0 on the Cartan, `2 ht(alpha)` on `X_alpha`.
    pub fn degree(&self, b: usize) -> i64 {
        self.degrees[b]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn label(&self, b: usize) -> String {
        let d = self.rank();
        if b < d {
            return format!("H{}", b + 1);
        }
        let w: Vec<String> = self.weights[b].iter().map(ToString::to_string).collect();
        format!("X[{}]", w.join(","))
    }

    /// Basis indices of `g(j)`, in basis order.
    pub fn graded_piece(&self, j: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.degrees[b] == j).collect()
    }

    /// `dim g(j)` for every `j` with `g(j) != 0`.
    pub fn grading_dims(&self) -> BTreeMap<i64, usize> {
        let mut dims = BTreeMap::new();
        for &j in &self.degrees {
            *dims.entry(j).or_insert(0) += 1;
        }
        dims
    }

    /// Indices spanning `n^-`, the negative-degree part.
    pub fn negative_part(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.degrees[b] < 0).collect()
    }

    pub fn basis_bracket(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a][b]
    }

    /// `N_{alpha,beta}` for positive roots given by index, when `alpha + beta` is a root.
    pub fn structure_constant(&self, alpha: usize, beta: usize) -> Option<i64> {
        self.constants.get(&(alpha, beta)).copied()
    }

    pub fn extraspecial_pair(&self, xi: usize) -> Option<(usize, usize)> {
        self.extraspecial[xi]
    }

    /// Bracket of two coordinate vectors over any ring.
    pub fn bracket<R: Ring>(&self, ring: &R, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        let mut out = vec![ring.zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if ring.is_zero(xa) {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if ring.is_zero(yb) {
                    continue;
                }
                let prod = ring.mul(xa, yb);
                for &(c, n) in &self.table[a][b] {
                    out[c] = ring.add(&out[c], &ring.mul(&ring.from_i64(n), &prod));
                }
            }
        }
        out
    }

    /// Matrix of `ad x` in the basis, columns indexed by the argument.
    pub fn ad_matrix<R: Ring>(&self, ring: &R, x: &[R::Elem]) -> Matrix<R::Elem> {
        let n = self.dim();
        let mut m = ring.zeros(n, n);
        for (a, xa) in x.iter().enumerate() {
            if ring.is_zero(xa) {
                continue;
            }
            for b in 0..n {
                for &(c, k) in &self.table[a][b] {
                    m[(c, b)] = ring.add(&m[(c, b)], &ring.mul(&ring.from_i64(k), xa));
                }
            }
        }
        m
    }

    /// Integer matrix of `ad e_a`.
    pub fn ad_basis(&self, a: usize) -> IntMatrix {
        let n = self.dim();
        let mut m = Matrix::filled(n, n, BigInt::zero());
        for b in 0..n {
            for &(c, k) in &self.table[a][b] {
                m[(c, b)] = BigInt::from(k);
            }
        }
        m
    }

    /// The principal nilpotent `Y = sum_{alpha simple} X_alpha`.
    pub fn principal_nilpotent(&self) -> PrincipalNilpotent {
        let mut coordinates = vec![0i64; self.dim()];
        for i in 0..self.root_system().rank() {
            coordinates[self.positive_index(i)] = 1;
        }
        PrincipalNilpotent { coordinates }
    }

    pub fn full_ad_y(&self) -> IntMatrix {
        let y = self.principal_nilpotent().coordinates;
        let y: Vec<BigInt> = y.into_iter().map(BigInt::from).collect();
        self.ad_matrix(&crate::linalg::Integers, &y)
    }

    /// Bracket table as JSON: basis labels and every nonzero `[e_a, e_b]`, `a < b`.
    pub fn bracket_table_json(&self) -> serde_json::Value {
        let labels: Vec<String> = (0..self.dim()).map(|b| self.label(b)).collect();
        let mut entries = Vec::new();
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                let v = &self.table[a][b];
                if !v.is_empty() {
                    entries.push(json!({"a": a, "b": b, "bracket": v}));
                }
            }
        }
        json!({"basis": labels, "degrees": self.degrees, "brackets": entries})
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let r = self.root_system().rank();
        for a in 0..n {
            for b in a..n {
                let ab = &self.table[a][b];
                let ba = &self.table[b][a];
                if ab.len() != ba.len() || ab.iter().zip(ba).any(|(x, y)| x.0 != y.0 || x.1 != -y.1) {
                    return Err(Error::JacobiFailure(a, b, b));
                }
            }
        }
        let mut acc: Vec<i64> = vec![0; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut sum = vec![0i64; r];
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    // Every term has weight w_a + w_b + w_c, so the identity is
                    // vacuous unless that weight is zero or a root.
                    for k in 0..r {
                        sum[k] = self.weights[a][k] + self.weights[b][k] + self.weights[c][k];
                    }
                    if sum.iter().any(|&x| x != 0) && !self.root_system().is_root(&sum) {
                        continue;
                    }
                    for &(x, y, z) in &[(a, b, c), (b, c, a), (c, a, b)] {
                        for &(m, k) in &self.table[x][y] {
                            for &(o, l) in &self.table[m][z] {
                                if acc[o] == 0 {
                                    touched.push(o);
                                }
                                acc[o] += k * l;
                            }
                        }
                    }
                    let bad = touched.iter().any(|&o| acc[o] != 0);
                    for &o in &touched {
                        acc[o] = 0;
                    }
                    touched.clear();
                    if bad {
                        return Err(Error::JacobiFailure(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalNilpotent {
    pub coordinates: Vec<i64>,
}

/// Structure constants for positive pairs, from extraspecial pairs.
fn positive_constants(rs: &RootSystem) -> (HashMap<(usize, usize), i64>, Vec<Option<(usize, usize)>>) {
    let roots = rs.positive_roots();
    let np = roots.len();
    let mut table: HashMap<(usize, usize), i64> = HashMap::new();
    let mut extraspecial = vec![None; np];
    let sub = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(a, b)| a - b).collect() };
    let norm = |v: &[i64]| rs.inner(v, v);

    // N_{a,-b} for positive a != b, from positive constants of smaller height.
    let mixed = |table: &HashMap<(usize, usize), i64>, a: usize, b: usize| -> Ratio<i64> {
        let d = sub(&roots[a], &roots[b]);
        if let Some(eta) = rs.positive_root_index(&d) {
            // a - b = eta
            Ratio::new(-norm(&d) * table[&(b, eta)], norm(&roots[a]))
        } else {
            let nd: Vec<i64> = d.iter().map(|x| -x).collect();
            match rs.positive_root_index(&nd) {
                // b - a = eta
                Some(eta) => Ratio::new(norm(&nd) * table[&(eta, a)], norm(&roots[b])),
                None => Ratio::zero(),
            }
        }
    };

    for (xi, root) in roots.iter().enumerate() {
        let pairs: Vec<(usize, usize)> = (0..np)
            .filter_map(|g| rs.positive_root_index(&sub(root, &roots[g])).map(|d| (g, d)))
            .filter(|&(g, d)| g < d)
            .collect();
        let Some(&(alpha, beta)) = pairs.first() else {
            continue;
        };
        extraspecial[xi] = Some((alpha, beta));
        let mut p = 0;
        loop {
            let v: Vec<i64> = roots[beta]
                .iter()
                .zip(&roots[alpha])
                .map(|(b, a)| b - (p + 1) * a)
                .collect();
            if rs.is_root(&v) {
                p += 1;
            } else {
                break;
            }
        }
        let n_ab = p + 1;
        table.insert((alpha, beta), n_ab);
        table.insert((beta, alpha), -n_ab);
        for &(gamma, delta) in &pairs[1..] {
            let t1 = mixed(&table, delta, alpha) * mixed(&table, gamma, beta);
            let t1 = if t1.is_zero() {
                t1
            } else {
                t1 / norm(&sub(&roots[delta], &roots[alpha]))
            };
            let t2 = mixed(&table, gamma, alpha) * mixed(&table, delta, beta);
            let t2 = if t2.is_zero() {
                t2
            } else {
                t2 / norm(&sub(&roots[gamma], &roots[alpha]))
            };
            let n = Ratio::from_integer(norm(root)) / n_ab * (t1 - t2);
            assert!(n.is_integer(), "non-integral structure constant");
            let n = n.to_integer();
            table.insert((gamma, delta), n);
            table.insert((delta, gamma), -n);
        }
    }
    (table, extraspecial)
}

pub fn build_algebra(datum: &RootDatum) -> Result<ChevalleyAlgebra> {
    let rs = datum.root_system();
    let d = datum.character_lattice_rank();
    let r = rs.rank();
    let np = rs.num_positive_roots();
    let dim = d + 2 * np;
    let (pos, extraspecial) = positive_constants(rs);

    let mut weights = vec![vec![0i64; r]; d];
    for root in rs.positive_roots() {
        weights.push(root.clone());
    }
    for root in rs.positive_roots() {
        weights.push(root.iter().map(|x| -x).collect());
    }
    let degrees: Vec<i64> = weights.iter().map(|w| 2 * RootSystem::height(w)).collect();

    // Signed-root index: i < np positive, i >= np negative of i - np.
    let signed_root = |s: usize| -> Vec<i64> { weights[d + s].clone() };
    let index_of = |v: &[i64]| -> Option<usize> {
        if let Some(i) = rs.positive_root_index(v) {
            return Some(i);
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        rs.positive_root_index(&neg).map(|i| np + i)
    };
    let norm = |v: &[i64]| rs.inner(v, v);
    let mixed = |a: usize, b: usize| -> i64 {
        // N_{a,-b}, a and b positive indices, a - b a nonzero root.
        let diff: Vec<i64> = rs.positive_roots()[a]
            .iter()
            .zip(&rs.positive_roots()[b])
            .map(|(x, y)| x - y)
            .collect();
        let ra = &rs.positive_roots()[a];
        let rb = &rs.positive_roots()[b];
        let v = if let Some(eta) = rs.positive_root_index(&diff) {
            Ratio::new(-norm(&diff) * pos[&(b, eta)], norm(ra))
        } else {
            let nd: Vec<i64> = diff.iter().map(|x| -x).collect();
            let eta = rs.positive_root_index(&nd).expect("difference is a root");
            Ratio::new(norm(&nd) * pos[&(eta, a)], norm(rb))
        };
        assert!(v.is_integer(), "non-integral mixed structure constant");
        v.to_integer()
    };
    let signed_constant = |s: usize, t: usize| -> i64 {
        match (s < np, t < np) {
            (true, true) => pos[&(s, t)],
            (false, false) => -pos[&(s - np, t - np)],
            (true, false) => mixed(s, t - np),
            (false, true) => -mixed(t, s - np),
        }
    };

    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for s in 0..2 * np {
        let root = signed_root(s);
        let character = datum.root_character(&root);
        for (k, &c) in character.iter().enumerate() {
            if c != 0 {
                table[k][d + s] = vec![(d + s, c)];
                table[d + s][k] = vec![(d + s, -c)];
            }
        }
    }
    for i in 0..np {
        let h = datum.coroot_cocharacter(rs.coroot(i));
        let hv: SparseVec = h
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| (k, *c))
            .collect();
        table[d + i][d + np + i] = hv.clone();
        table[d + np + i][d + i] = hv.into_iter().map(|(k, c)| (k, -c)).collect();
    }
    for s in 0..2 * np {
        for t in 0..2 * np {
            let sum: Vec<i64> = signed_root(s)
                .iter()
                .zip(&signed_root(t))
                .map(|(a, b)| a + b)
                .collect();
            if let Some(u) = index_of(&sum) {
                table[d + s][d + t] = vec![(d + u, signed_constant(s, t))];
            }
        }
    }

    let algebra = ChevalleyAlgebra {
        datum: datum.clone(),
        table,
        weights,
        degrees,
        extraspecial,
        constants: pos,
    };
    algebra.check_jacobi()?;
    Ok(algebra)
}

/// Blocks `M_j : g(j) -> g(j+2)` of `ad Y`.
#[derive(Clone, Debug)]
pub struct GradedAdY {
    pub blocks: BTreeMap<i64, IntMatrix>,
    pub pieces: BTreeMap<i64, Vec<usize>>,
}

impl GradedAdY {
    pub fn block(&self, j: i64) -> Option<&IntMatrix> {
        self.blocks.get(&j)
    }

    /// Reassembles the full `ad Y` from its blocks.
    pub fn assemble(&self, dim: usize) -> IntMatrix {
        let mut m = Matrix::filled(dim, dim, BigInt::zero());
        for (j, block) in &self.blocks {
            let src = &self.pieces[j];
            let Some(dst) = self.pieces.get(&(j + 2)) else {
                continue;
            };
            for (c, &b) in src.iter().enumerate() {
                for (r, &a) in dst.iter().enumerate() {
                    m[(a, b)] = block[(r, c)].clone();
                }
            }
        }
        m
    }
}

pub fn graded_ad_y(algebra: &ChevalleyAlgebra) -> GradedAdY {
    let full = algebra.full_ad_y();
    let pieces: BTreeMap<i64, Vec<usize>> = algebra
        .grading_dims()
        .keys()
        .map(|&j| (j, algebra.graded_piece(j)))
        .collect();
    let blocks = pieces
        .iter()
        .map(|(&j, src)| {
            let dst = pieces.get(&(j + 2)).cloned().unwrap_or_default();
            (j, full.submatrix(&dst, src))
        })
        .collect();
    GradedAdY { blocks, pieces }
}

/// Rank over `F_p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    if !crate::linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let field = PrimeField::new(p);
    Ok(field.rank(&field.lift(m)))
}
