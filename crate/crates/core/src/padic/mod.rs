//! p-adic scalars, truncated p-adic integers and Moy–Prasad lattices at the
//! hyperspecial point of a split group.
//!
//! At that point `g_{x,r} = p^{ceil(r)} g(Z_p)` in Chevalley coordinates, so
//! lattice questions reduce to coordinate valuations.

mod form;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{int_valuation, FromRational, Matrix, Ring};

pub use form::{dual_lattice_levels, trace_form, BilinearForm};

/// `v_p(x)`, with `Infinite` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }

    /// Is `v >= level`?
    pub fn at_least(self, level: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= level,
            Valuation::Infinite => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Valuation::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(Valuation::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad valuation {s}"))),
        }
    }
}

pub fn valuation_int(n: &BigInt, p: u64) -> Valuation {
    match int_valuation(n, p) {
        Some(v) => Valuation::Finite(v as i64),
        None => Valuation::Infinite,
    }
}

pub fn valuation_rational(x: &BigRational, p: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let num = int_valuation(x.numer(), p).unwrap() as i64;
    let den = int_valuation(x.denom(), p).unwrap() as i64;
    Valuation::Finite(num - den)
}

/// Minimum coordinate valuation of a rational vector.
pub fn min_valuation(xs: &[BigRational], p: u64) -> Valuation {
    xs.iter()
        .map(|x| valuation_rational(x, p))
        .min()
        .unwrap_or(Valuation::Infinite)
}

/// A p-adic number: an exact rational, or `p^val * unit` known modulo
/// `p^precision` (absolute precision).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PadicScalar {
    Exact {
        p: u64,
        value: BigRational,
    },
    Truncated {
        p: u64,
        value: BigRational,
        precision: i64,
    },
}

impl PadicScalar {
    pub fn exact(p: u64, value: BigRational) -> Self {
        PadicScalar::Exact { p, value }
    }

    pub fn from_int(p: u64, n: i64) -> Self {
        PadicScalar::Exact {
            p,
            value: BigRational::from_integer(n.into()),
        }
    }

    /// `value` is reduced to a canonical representative when it is p-integral.
    pub fn truncated(p: u64, value: BigRational, precision: i64) -> Self {
        let value = if value.is_integer() && precision >= 0 {
            let m = BigInt::from(p).pow(precision as u32);
            BigRational::from_integer(value.to_integer().mod_floor(&m))
        } else {
            value
        };
        PadicScalar::Truncated { p, value, precision }
    }

    pub fn prime(&self) -> u64 {
        match self {
            PadicScalar::Exact { p, .. } | PadicScalar::Truncated { p, .. } => *p,
        }
    }

    pub fn value(&self) -> &BigRational {
        match self {
            PadicScalar::Exact { value, .. } | PadicScalar::Truncated { value, .. } => value,
        }
    }

    pub fn precision(&self) -> Option<i64> {
        match self {
            PadicScalar::Exact { .. } => None,
            PadicScalar::Truncated { precision, .. } => Some(*precision),
        }
    }

    /// Exact on rationals; on truncated values, an error if the value is
    /// zero to the available precision.
    pub fn valuation(&self) -> Result<Valuation> {
        match self {
            PadicScalar::Exact { p, value } => Ok(valuation_rational(value, *p)),
            PadicScalar::Truncated { p, value, precision } => {
                let v = valuation_rational(value, *p);
                if v.at_least(*precision) {
                    Err(Error::PrecisionExhausted(format!(
                        "value is 0 modulo p^{precision}"
                    )))
                } else {
                    Ok(v)
                }
            }
        }
    }

    /// Normalized absolute value `p^{-v}`; zero for an exact zero.
    pub fn abs(&self) -> Result<BigRational> {
        Ok(match self.valuation()? {
            Valuation::Infinite => BigRational::zero(),
            Valuation::Finite(v) => {
                let q = BigRational::from_integer(BigInt::from(self.prime()));
                if v >= 0 {
                    q.pow(-(v as i32))
                } else {
                    q.pow((-v) as i32)
                }
            }
        })
    }

    fn combine(&self, other: &Self, value: BigRational, shift: fn(i64, Valuation, Valuation) -> i64) -> Self {
        let p = self.prime();
        assert_eq!(p, other.prime(), "mixing primes");
        let vs = valuation_rational(self.value(), p);
        let vo = valuation_rational(other.value(), p);
        match (self.precision(), other.precision()) {
            (None, None) => PadicScalar::Exact { p, value },
            (Some(a), None) => PadicScalar::truncated(p, value, shift(a, vo, vs)),
            (None, Some(b)) => PadicScalar::truncated(p, value, shift(b, vs, vo)),
            (Some(a), Some(b)) => PadicScalar::truncated(p, value, shift(a, vo, vs).min(shift(b, vs, vo))),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, self.value() + other.value(), |prec, _, _| prec)
    }

    pub fn mul(&self, other: &Self) -> Self {
        // An error term p^prec times y contributes at p^{prec + v(y)}.
        self.combine(
            other,
            self.value() * other.value(),
            |prec, v_other, _| match v_other {
                Valuation::Finite(v) => prec + v,
                Valuation::Infinite => i64::MAX / 4,
            },
        )
    }

    /// JSON form: `"num/den"` for exact values, `[val, unit, precision]` for
    /// truncated ones (`unit` modulo `p^(precision - val)`).
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            PadicScalar::Exact { value, .. } => serde_json::Value::String(rational_string(value)),
            PadicScalar::Truncated { p, value, precision } => match valuation_rational(value, *p) {
                Valuation::Finite(v) if v < *precision => {
                    let unit = value / BigRational::from_integer(BigInt::from(*p)).pow(v as i32);
                    serde_json::json!([v, rational_string(&unit), precision])
                }
                _ => serde_json::json!(["inf", "0", precision]),
            },
        }
    }

    pub fn from_json(p: u64, v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::NotInDomain(format!("malformed p-adic scalar {v}"));
        match v {
            serde_json::Value::String(s) => Ok(PadicScalar::exact(p, parse_rational(s)?)),
            serde_json::Value::Number(n) => Ok(PadicScalar::from_int(p, n.as_i64().ok_or_else(bad)?)),
            serde_json::Value::Array(items) if items.len() == 3 => {
                let precision = items[2].as_i64().ok_or_else(bad)?;
                if items[0].as_str() == Some("inf") {
                    return Ok(PadicScalar::truncated(p, BigRational::zero(), precision));
                }
                let val = items[0].as_i64().ok_or_else(bad)?;
                let unit = match &items[1] {
                    serde_json::Value::String(s) => parse_rational(s)?,
                    serde_json::Value::Number(n) => {
                        BigRational::from_integer(n.as_i64().ok_or_else(bad)?.into())
                    }
                    _ => return Err(bad()),
                };
                let scale = BigRational::from_integer(BigInt::from(p)).pow(val as i32);
                Ok(PadicScalar::truncated(p, unit * scale, precision))
            }
            _ => Err(bad()),
        }
    }
}

pub fn rational_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::NotInDomain(format!("cannot parse {s:?} as a rational"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `Z / p^precision Z`, a stand-in for `Z_p` at finite precision.
#[derive(Clone, Debug)]
pub struct PadicIntegers {
    p: u64,
    precision: u32,
    modulus: BigInt,
}

impl PadicIntegers {
    pub fn new(p: u64, precision: u32) -> Self {
        assert!(precision >= 1);
        PadicIntegers {
            p,
            precision,
            modulus: BigInt::from(p).pow(precision),
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Valuation of a residue, `Infinite` when it is 0 mod `p^precision`.
    pub fn valuation(&self, a: &BigInt) -> Valuation {
        valuation_int(a, self.p)
    }

    /// `a / p^k` for `a` divisible by `p^k`.
    pub fn shift_down(&self, a: &BigInt, k: u32) -> BigInt {
        let pk = BigInt::from(self.p).pow(k);
        debug_assert!((a % &pk).is_zero());
        a / pk
    }

    pub fn p_power(&self, k: u32) -> BigInt {
        if k >= self.precision {
            BigInt::zero()
        } else {
            BigInt::from(self.p).pow(k)
        }
    }

    /// Smallest coordinate valuation of a vector of residues.
    pub fn min_valuation(&self, xs: &[BigInt]) -> Valuation {
        xs.iter()
            .map(|x| self.valuation(x))
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    pub fn is_identity_mod_p(&self, m: &Matrix<BigInt>) -> bool {
        let p = BigInt::from(self.p);
        (0..m.rows()).all(|i| {
            (0..m.cols()).all(|j| {
                let expect = if i == j { BigInt::one() } else { BigInt::zero() };
                (&m[(i, j)] - expect).mod_floor(&p).is_zero()
            })
        })
    }
}

impl Ring for PadicIntegers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one().mod_floor(&self.modulus)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a + b).mod_floor(&self.modulus)
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a - b).mod_floor(&self.modulus)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b).mod_floor(&self.modulus)
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        (-a).mod_floor(&self.modulus)
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.mod_floor(&self.modulus)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        let g = a.extended_gcd(&self.modulus);
        if g.gcd.is_one() {
            Some(g.x.mod_floor(&self.modulus))
        } else {
            None
        }
    }
}

impl FromRational for PadicIntegers {}

/// A Lie algebra element in Chevalley coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    pub coordinates: Vec<PadicScalar>,
}

impl LieElement {
    pub fn from_rationals(p: u64, xs: &[BigRational]) -> Self {
        LieElement {
            coordinates: xs.iter().map(|x| PadicScalar::exact(p, x.clone())).collect(),
        }
    }

    pub fn from_ints(p: u64, xs: &[i64]) -> Self {
        LieElement {
            coordinates: xs.iter().map(|&x| PadicScalar::from_int(p, x)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn rationals(&self) -> Vec<BigRational> {
        self.coordinates.iter().map(|c| c.value().clone()).collect()
    }
}

/// Level `r` or `r+` of the Moy–Prasad filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPLevel {
    pub r: BigRational,
    pub plus: bool,
}

impl MPLevel {
    pub fn at(r: i64) -> Self {
        MPLevel {
            r: BigRational::from_integer(r.into()),
            plus: false,
        }
    }

    pub fn plus(r: i64) -> Self {
        MPLevel {
            r: BigRational::from_integer(r.into()),
            plus: true,
        }
    }

    /// Filtration jumps sit at the integers: `g_{x,r} = p^{ceil r} g(Z_p)`,
    /// `g_{x,r+} = p^{floor r + 1} g(Z_p)`.
    pub fn effective(&self) -> i64 {
        let k = if self.plus {
            self.r.floor().to_integer() + 1
        } else {
            self.r.ceil().to_integer()
        };
        k.to_i64().expect("level out of range")
    }
}

/// Is `x` in `g_{x,r}` (or `g_{x,r+}`)?
pub fn lattice_membership(x: &LieElement, level: &MPLevel) -> Result<bool> {
    let k = level.effective();
    for c in &x.coordinates {
        match c {
            PadicScalar::Exact { p, value } => {
                if !valuation_rational(value, *p).at_least(k) {
                    return Ok(false);
                }
            }
            PadicScalar::Truncated { p, value, precision } => {
                let v = valuation_rational(value, *p);
                if v.at_least(*precision) {
                    if *precision < k {
                        return Err(Error::PrecisionExhausted(format!(
                            "coordinate known only modulo p^{precision}, level {k} requested"
                        )));
                    }
                } else if !v.at_least(k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Valuations of the nonzero elementary divisors of a rational matrix over
/// `Z_(p)`, ascending.
pub fn local_elementary_valuations(m: &Matrix<BigRational>, p: u64) -> Vec<i64> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut out = Vec::new();
    let mut live_rows: Vec<usize> = (0..rows).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    loop {
        let mut best: Option<(usize, usize, i64)> = None;
        for (ri, &i) in live_rows.iter().enumerate() {
            for (ci, &j) in live_cols.iter().enumerate() {
                if let Valuation::Finite(v) = valuation_rational(&a[(i, j)], p) {
                    if best.is_none_or(|b| v < b.2) {
                        best = Some((ri, ci, v));
                    }
                }
            }
        }
        let Some((ri, ci, v)) = best else { break };
        let (pi, pj) = (live_rows[ri], live_cols[ci]);
        out.push(v);
        let pivot = a[(pi, pj)].clone();
        for &i in &live_rows {
            if i == pi || a[(i, pj)].is_zero() {
                continue;
            }
            let f = &a[(i, pj)] / &pivot;
            for &j in &live_cols {
                let t = &f * &a[(pi, j)];
                a[(i, j)] = &a[(i, j)] - t;
            }
        }
        live_rows.remove(ri);
        live_cols.remove(ci);
    }
    out.sort_unstable();
    out
}

/// Reduces a p-integral rational into `Z / p^N`.
pub fn to_residue(ring: &PadicIntegers, x: &BigRational) -> Result<BigInt> {
    ring.from_rational(x)
        .ok_or_else(|| Error::NotInDomain(format!("{} is not {}-integral", rational_string(x), ring.prime())))
}

/// Signed representative of a residue in `(-p^N/2, p^N/2]`.
pub fn balanced(ring: &PadicIntegers, x: &BigInt) -> BigInt {
    let half = ring.modulus() / 2;
    if x > &half {
        x - ring.modulus()
    } else {
        x.clone()
    }
}

/// True iff `x` is p-integral.
pub fn is_integral(x: &BigRational, p: u64) -> bool {
    !(x.denom() % BigInt::from(p)).is_zero()
}
