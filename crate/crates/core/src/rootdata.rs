//! Root systems and split root data for the built-in catalog.
//!
//! Roots are integer vectors in the basis of simple roots; coroots are integer
//! vectors in the basis of simple coroots. A [`RootDatum`] embeds both into the
//! character lattice `X*(T)` and cocharacter lattice `X_*(T)` of a split
//! maximal torus, which fixes the isogeny type.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{elementary_divisors, IntMatrix, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => CartanType::A,
            "B" => CartanType::B,
            "C" => CartanType::C,
            "D" => CartanType::D,
            "E" => CartanType::E,
            "F" => CartanType::F,
            "G" => CartanType::G,
            other => return Err(Error::InvalidType(other.to_string())),
        })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple (irreducible) factor of a root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let ok = match cartan_type {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if ok && rank <= 8 {
            Ok(SimpleType { cartan_type, rank })
        } else {
            Err(Error::InvalidType(format!("{cartan_type}{rank}")))
        }
    }

    /// Cartan matrix with `C[i][j] = <alpha_j, alpha_i^vee>`, Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.cartan_type {
            CartanType::A | CartanType::B | CartanType::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            CartanType::E => {
                for &(i, j) in &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                    if i < n && j < n {
                        link(i, j);
                    }
                }
            }
            CartanType::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            CartanType::G => link(0, 1),
        }
        match self.cartan_type {
            // last simple root short
            CartanType::B => c[n - 1][n - 2] = -2,
            // last simple root long
            CartanType::C => c[n - 2][n - 1] = -2,
            CartanType::F => c[2][1] = -2,
            // alpha_1 short, alpha_2 long
            CartanType::G => c[0][1] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cartan_type, self.rank)
    }
}

/// A (possibly reducible, possibly empty) root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    factors: Vec<SimpleType>,
    cartan: Vec<Vec<i64>>,
    /// Half squared lengths: `(alpha_i, alpha_i) = 2 d_i`.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// The empty root system (the root system of a torus).
    pub fn empty() -> Self {
        Self::from_factors(Vec::new())
    }

    fn from_factors(factors: Vec<SimpleType>) -> Self {
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        for f in &factors {
            let block = f.cartan_matrix();
            for i in 0..f.rank {
                for j in 0..f.rank {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            offset += f.rank;
        }
        let symmetrizer = symmetrize(&cartan);
        let positive_roots = enumerate_positive_roots(&cartan);
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let mut rs = RootSystem {
            factors,
            cartan,
            symmetrizer,
            positive_roots,
            coroots: Vec::new(),
            index,
        };
        rs.coroots = rs.positive_roots.iter().map(|r| rs.coroot_of(r)).collect();
        rs
    }

    pub fn direct_sum(parts: &[RootSystem]) -> Self {
        Self::from_factors(parts.iter().flat_map(|p| p.factors.clone()).collect())
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank()).map(|i| unit(self.rank(), i)).collect()
    }

    /// Positive roots in nondecreasing height; ties broken by descending
    /// coordinates, so the simple roots come out as `alpha_1, alpha_2, ...`.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Coroot of the `i`-th positive root in the simple-coroot basis.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_root_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// Invariant inner product with `(alpha_i, alpha_i) = 2 d_i`.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * yj * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        acc
    }

    /// `<beta, alpha_i^vee>` for a root-lattice vector `beta`.
    pub fn pair_with_simple_coroot(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan[i]).map(|(b, c)| b * c).sum()
    }

    fn coroot_of(&self, root: &[i64]) -> Vec<i64> {
        let norm = self.inner(root, root);
        root.iter()
            .enumerate()
            .map(|(j, c)| {
                let num = 2 * c * self.symmetrizer[j];
                assert_eq!(num % norm, 0, "non-integral coroot");
                num / norm
            })
            .collect()
    }

    /// Is `v` (simple-root coordinates) a root, positive or negative?
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "T");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("xx"))
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn symmetrize(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::one());
        let mut stack = vec![start];
        let mut component = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    d[j] = Some(d[i].unwrap() * Ratio::new(cartan[i][j], cartan[j][i]));
                    stack.push(j);
                    component.push(j);
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i64, |acc, &i| num_integer::lcm(acc, *d[i].unwrap().denom()));
        for &i in &component {
            d[i] = Some(d[i].unwrap() * lcm);
        }
    }
    d.into_iter().map(|x| x.unwrap().to_integer()).collect()
}

/// Closure of the simple roots under root strings, layer by height.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i)).collect();
    let mut seen: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                if *beta == unit(r, i) {
                    continue;
                }
                // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta.iter().zip(&cartan[i]).map(|(b, c)| b * c).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

pub fn build_root_system(cartan_type: CartanType, rank: usize) -> Result<RootSystem> {
    Ok(RootSystem::from_factors(vec![SimpleType::new(
        cartan_type,
        rank,
    )?]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Isogeny {
    #[serde(rename = "simply_connected", alias = "sc")]
    SimplyConnected,
    #[serde(rename = "adjoint", alias = "ad")]
    Adjoint,
    #[serde(rename = "GL_n", alias = "gl", alias = "GL")]
    GeneralLinear,
    /// Direct sums and explicitly supplied lattices.
    #[serde(rename = "mixed")]
    Mixed,
}

impl Isogeny {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "sc" | "simply_connected" | "simply-connected" => Isogeny::SimplyConnected,
            "ad" | "adjoint" => Isogeny::Adjoint,
            "gl" | "gl_n" => Isogeny::GeneralLinear,
            "mixed" => Isogeny::Mixed,
            other => return Err(Error::InvalidDatum(format!("unknown isogeny label {other}"))),
        })
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            Isogeny::SimplyConnected => "sc",
            Isogeny::Adjoint => "ad",
            Isogeny::GeneralLinear => "gl",
            Isogeny::Mixed => "mixed",
        }
    }
}

/// Split root datum `(X*, Phi, X_*, Phi^vee)`.
///
/// `root_embedding` has the images of the simple roots in `X*(T)` as columns,
/// `coroot_embedding` the images of the simple coroots in `X_*(T)`; the two
/// lattices are dual via the standard dot product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    root_system: RootSystem,
    isogeny: Isogeny,
    root_embedding: IntMatrix,
    coroot_embedding: IntMatrix,
}

impl RootDatum {
    pub fn new(
        root_system: RootSystem,
        isogeny: Isogeny,
        root_embedding: IntMatrix,
        coroot_embedding: IntMatrix,
    ) -> Result<Self> {
        let r = root_system.rank();
        let d = root_embedding.rows();
        if root_embedding.cols() != r || coroot_embedding.cols() != r || coroot_embedding.rows() != d {
            return Err(Error::InvalidDatum(
                "embedding shapes do not match the rank".into(),
            ));
        }
        if d < r {
            return Err(Error::InvalidDatum(
                "character lattice smaller than the root system".into(),
            ));
        }
        let datum = RootDatum {
            root_system,
            isogeny,
            root_embedding,
            coroot_embedding,
        };
        for i in 0..r {
            for j in 0..r {
                let pairing: BigInt = (0..d)
                    .map(|k| &datum.root_embedding[(k, j)] * &datum.coroot_embedding[(k, i)])
                    .sum();
                if pairing != BigInt::from(datum.root_system.cartan[i][j]) {
                    return Err(Error::InvalidDatum(format!(
                        "pairing <alpha_{j}, alpha_{i}^vee> = {pairing} disagrees with the Cartan matrix"
                    )));
                }
            }
        }
        Ok(datum)
    }

    pub fn general_linear(n: usize) -> Result<Self> {
        if n == 0 || n > 9 {
            return Err(Error::InvalidType(format!("GL{n}")));
        }
        let rs = if n == 1 {
            RootSystem::empty()
        } else {
            build_root_system(CartanType::A, n - 1)?
        };
        build_root_datum(&rs, Isogeny::GeneralLinear)
    }

    pub fn direct_sum(parts: &[RootDatum]) -> Result<Self> {
        let rs = RootSystem::direct_sum(&parts.iter().map(|p| p.root_system.clone()).collect::<Vec<_>>());
        let d: usize = parts.iter().map(|p| p.character_lattice_rank()).sum();
        let r = rs.rank();
        let mut re = Matrix::filled(d, r, BigInt::zero());
        let mut ce = Matrix::filled(d, r, BigInt::zero());
        let (mut row, mut col) = (0, 0);
        for p in parts {
            for i in 0..p.character_lattice_rank() {
                for j in 0..p.root_system.rank() {
                    re[(row + i, col + j)] = p.root_embedding[(i, j)].clone();
                    ce[(row + i, col + j)] = p.coroot_embedding[(i, j)].clone();
                }
            }
            row += p.character_lattice_rank();
            col += p.root_system.rank();
        }
        let isogeny = match parts {
            [single] => single.isogeny,
            _ => Isogeny::Mixed,
        };
        RootDatum::new(rs, isogeny, re, ce)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn isogeny(&self) -> Isogeny {
        self.isogeny
    }

    pub fn character_lattice_rank(&self) -> usize {
        self.root_embedding.rows()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.root_system.rank()
    }

    pub fn root_embedding(&self) -> &IntMatrix {
        &self.root_embedding
    }

    pub fn coroot_embedding(&self) -> &IntMatrix {
        &self.coroot_embedding
    }

    /// A root (simple-root coordinates, either sign) as a character.
    pub fn root_character(&self, root: &[i64]) -> Vec<i64> {
        embed(&self.root_embedding, root)
    }

    /// A coroot (simple-coroot coordinates) as a cocharacter.
    pub fn coroot_cocharacter(&self, coroot: &[i64]) -> Vec<i64> {
        embed(&self.coroot_embedding, coroot)
    }

    /// Order of `pi_1(G_der)`: torsion of `X_* / Z Phi^vee`.
    pub fn fundamental_group_order(&self) -> u64 {
        torsion_order(&self.coroot_embedding)
    }

    /// Order of the component group of the center: torsion of `X* / Z Phi`.
    pub fn center_component_order(&self) -> u64 {
        torsion_order(&self.root_embedding)
    }

    /// Is `X*(T)` spanned by the roots? Then the adjoint representation is
    /// faithful on the torus and detects eigenvalues of every character.
    pub fn roots_span_characters(&self) -> bool {
        self.character_lattice_rank() == self.semisimple_rank() && self.center_component_order() == 1
    }

    pub fn to_document(&self) -> DatumDocument {
        DatumDocument {
            factors: self
                .root_system
                .factors
                .iter()
                .map(|f| DatumSpec {
                    cartan_type: f.cartan_type,
                    rank: f.rank,
                    isogeny: self.isogeny,
                })
                .collect(),
            isogeny: self.isogeny,
            character_lattice_rank: self.character_lattice_rank(),
            root_embedding: Some(to_i64_rows(&self.root_embedding)),
            coroot_embedding: Some(to_i64_rows(&self.coroot_embedding)),
        }
    }

    pub fn from_document(doc: &DatumDocument) -> Result<Self> {
        let base = if doc.factors.is_empty() {
            if doc.isogeny != Isogeny::GeneralLinear && doc.character_lattice_rank == 0 {
                return Err(Error::InvalidDatum("empty datum".into()));
            }
            let rs = RootSystem::empty();
            let d = doc.character_lattice_rank.max(1);
            RootDatum::new(
                rs,
                doc.isogeny,
                Matrix::filled(d, 0, BigInt::zero()),
                Matrix::filled(d, 0, BigInt::zero()),
            )?
        } else {
            let parts = doc
                .factors
                .iter()
                .map(DatumSpec::build)
                .collect::<Result<Vec<_>>>()?;
            RootDatum::direct_sum(&parts)?
        };
        match (&doc.root_embedding, &doc.coroot_embedding) {
            (Some(re), Some(ce)) => {
                let re = IntMatrix::from_i64_rows(re);
                let ce = IntMatrix::from_i64_rows(ce);
                if re == base.root_embedding && ce == base.coroot_embedding {
                    Ok(base)
                } else {
                    RootDatum::new(base.root_system, Isogeny::Mixed, re, ce)
                }
            }
            (None, None) => Ok(base),
            _ => Err(Error::InvalidDatum(
                "root_embedding and coroot_embedding must be given together".into(),
            )),
        }
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.isogeny {
            Isogeny::GeneralLinear => write!(f, "GL{}", self.character_lattice_rank()),
            other => write!(f, "{} ({})", self.root_system, other.short_name()),
        }
    }
}

fn embed(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    (0..m.rows())
        .map(|k| {
            v.iter()
                .enumerate()
                .map(|(j, c)| c * m[(k, j)].to_i64().unwrap())
                .sum()
        })
        .collect()
}

fn torsion_order(m: &IntMatrix) -> u64 {
    elementary_divisors(m)
        .iter()
        .fold(BigInt::one(), |acc, d| acc * d)
        .to_u64()
        .expect("torsion order overflows u64")
}

fn to_i64_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect())
        .collect()
}

pub fn build_root_datum(root_system: &RootSystem, isogeny: Isogeny) -> Result<RootDatum> {
    let r = root_system.rank();
    let cartan = IntMatrix::from_i64_rows(root_system.cartan_matrix());
    let incompatible = || Error::IncompatibleIsogeny {
        label: isogeny.short_name().into(),
        root_system: root_system.to_string(),
    };
    match isogeny {
        // X* = weight lattice (fundamental weights), X_* = coroot lattice.
        Isogeny::SimplyConnected => {
            if r == 0 {
                return Err(incompatible());
            }
            RootDatum::new(root_system.clone(), isogeny, cartan, IntMatrix::int_identity(r))
        }
        // X* = root lattice, X_* = coweight lattice (fundamental coweights).
        Isogeny::Adjoint => {
            if r == 0 {
                return Err(incompatible());
            }
            RootDatum::new(
                root_system.clone(),
                isogeny,
                IntMatrix::int_identity(r),
                cartan.transpose(),
            )
        }
        Isogeny::GeneralLinear => {
            let n = match root_system.factors() {
                [] => 1,
                [f] if f.cartan_type == CartanType::A => f.rank + 1,
                _ => return Err(incompatible()),
            };
            // alpha_j = e_j - e_{j+1} on both sides.
            let mut m = Matrix::filled(n, n - 1, BigInt::zero());
            for j in 0..n - 1 {
                m[(j, j)] = BigInt::one();
                m[(j + 1, j)] = -BigInt::one();
            }
            RootDatum::new(root_system.clone(), isogeny, m.clone(), m)
        }
        Isogeny::Mixed => Err(incompatible()),
    }
}

/// `{"type":"C","rank":2,"isogeny":"simply_connected"}`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumSpec {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
    pub isogeny: Isogeny,
}

impl DatumSpec {
    pub fn new(cartan_type: CartanType, rank: usize, isogeny: Isogeny) -> Self {
        DatumSpec {
            cartan_type,
            rank,
            isogeny,
        }
    }

    /// `GL_n` is written as type `A`, rank `n - 1`.
    pub fn build(&self) -> Result<RootDatum> {
        if self.isogeny == Isogeny::GeneralLinear {
            if self.cartan_type != CartanType::A {
                return Err(Error::IncompatibleIsogeny {
                    label: "gl".into(),
                    root_system: format!("{}{}", self.cartan_type, self.rank),
                });
            }
            return RootDatum::general_linear(self.rank + 1);
        }
        let rs = build_root_system(self.cartan_type, self.rank)?;
        build_root_datum(&rs, self.isogeny)
    }
}

/// Extended datum document with explicit lattice matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumDocument {
    pub factors: Vec<DatumSpec>,
    pub isogeny: Isogeny,
    pub character_lattice_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_embedding: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coroot_embedding: Option<Vec<Vec<i64>>>,
}

/// Parses either the short form `{"type","rank","isogeny"}` or the extended
/// document form.
pub fn datum_from_json(text: &str) -> Result<RootDatum> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidDatum(e.to_string()))?;
    if value.get("factors").is_some() {
        let doc: DatumDocument =
            serde_json::from_value(value).map_err(|e| Error::InvalidDatum(e.to_string()))?;
        RootDatum::from_document(&doc)
    } else {
        let spec: DatumSpec =
            serde_json::from_value(value).map_err(|e| Error::InvalidDatum(e.to_string()))?;
        spec.build()
    }
}

/// The cocharacter `lambda`: the sum of all positive coroots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaCocharacter {
    pub coordinates: Vec<i64>,
}

impl LambdaCocharacter {
    pub fn pair(&self, character: &[i64]) -> i64 {
        self.coordinates.iter().zip(character).map(|(a, b)| a * b).sum()
    }
}

pub fn lambda_cocharacter(datum: &RootDatum) -> LambdaCocharacter {
    let rs = datum.root_system();
    let mut sum = vec![0i64; rs.rank()];
    for i in 0..rs.num_positive_roots() {
        for (s, c) in sum.iter_mut().zip(rs.coroot(i)) {
            *s += c;
        }
    }
    LambdaCocharacter {
        coordinates: datum.coroot_cocharacter(&sum),
    }
}

pub fn fundamental_group_order(datum: &RootDatum) -> u64 {
    datum.fundamental_group_order()
}
