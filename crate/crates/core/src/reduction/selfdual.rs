//! Self-duality of `g_{x,0+}` under the twisted form, the discriminant
//! valuation, and the orbital-integral constants.

use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use serde::Serialize;

use crate::chevalley::{rank_mod_p, ChevalleyAlgebra, StandardRep};
use crate::error::{Error, Result};
use crate::linalg::{char_poly_q, is_prime, is_squarefree, MatrixOps, Rationals};
use crate::padic::{dual_lattice_levels, BilinearForm};
use crate::padic::{is_integral, local_elementary_valuations, min_valuation, valuation_rational, Valuation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualReport {
    /// Elementary-divisor valuations of `B_X` between `p g(O)` and `p^{-1} g(O)`,
    /// modulo `t_X`.
    pub dual_levels: Vec<i64>,
    pub torus_dim: usize,
    /// `rank(ad X mod p) == dim - rank`.
    pub ad_rank_mod_p: usize,
    pub selfdual: bool,
    pub reduction_regular: bool,
}

impl SelfDualReport {
    pub fn holds(&self) -> bool {
        self.selfdual && self.reduction_regular
    }
}

/// Requires `X` regular semisimple with `X - Y` in `g_{x,0+}` and the form
/// perfect at `p`.
pub fn check_selfdual(
    algebra: &ChevalleyAlgebra,
    rep: &StandardRep,
    form: &BilinearForm,
    x: &[BigRational],
    p: u64,
) -> Result<SelfDualReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let dim = algebra.dim();
    if x.len() != dim {
        return Err(Error::Dimension(format!("expected {dim} coordinates")));
    }
    let y = algebra.principal_nilpotent().coordinates;
    let diff: Vec<BigRational> = x
        .iter()
        .zip(&y)
        .map(|(a, &b)| a - BigRational::from_integer(b.into()))
        .collect();
    if !min_valuation(&diff, p).at_least(1) {
        return Err(Error::NotInDomain("X is not in Y + g_{x,0+}".into()));
    }
    form.require_perfect(p)?;
    if !is_squarefree(&char_poly_q(&rep.image(&Rationals, x))) {
        return Err(Error::NotRegularSemisimple);
    }
    let ad_x = algebra.ad_matrix(&Rationals, x);
    let t_x = Rationals.kernel(&ad_x);
    let rk = algebra.rank();
    if t_x.len() != rk {
        return Err(Error::NotRegularSemisimple);
    }
    let b_x = form.twisted(algebra, x);
    let scale = BigRational::from_integer(p.into());
    let basis = |s: &BigRational| -> Vec<Vec<BigRational>> {
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { s.clone() } else { BigRational::zero() })
                    .collect()
            })
            .collect()
    };
    let left = basis(&scale);
    let right = basis(&scale.recip());
    let dual_levels = dual_lattice_levels(&left, &right, &b_x, &t_x, p)?;
    let selfdual = dual_levels.len() == dim - rk && dual_levels.iter().all(|&v| v == 0);

    debug_assert!(x.iter().all(|c| is_integral(c, p)));
    let ad_int = ad_x.map(|c| c.to_integer());
    let ad_rank_mod_p = rank_mod_p(&ad_int, p)?;
    let local = local_elementary_valuations(&ad_x, p);
    let reduction_regular = ad_rank_mod_p == dim - rk && local.iter().all(|&v| v == 0);
    Ok(SelfDualReport {
        dual_levels,
        torus_dim: t_x.len(),
        ad_rank_mod_p,
        selfdual,
        reduction_regular,
    })
}

/// `v_p det(ad X ; g / t_X)`, read off the lowest nonzero coefficient of the
/// characteristic polynomial of `ad X`.
pub fn d_g(algebra: &ChevalleyAlgebra, x: &[BigRational], p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let poly = char_poly_q(&algebra.ad_matrix(&Rationals, x));
    let lowest = poly.iter().position(|c| !c.is_zero()).unwrap_or(poly.len());
    if lowest != algebra.rank() {
        return Err(Error::NotRegularSemisimple);
    }
    Ok(valuation_rational(&poly[lowest], p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalConstants {
    /// `rank(ad Y mod p)`.
    pub m: usize,
    pub q: u64,
    /// `c_G = q^exponent`.
    pub exponent: Ratio<i64>,
    pub d_valuation: Option<Valuation>,
}

impl OrbitalConstants {
    pub fn to_json(&self) -> serde_json::Value {
        let exp = if self.exponent.is_integer() {
            serde_json::json!(self.exponent.to_integer())
        } else {
            serde_json::json!(*self.exponent.numer() as f64 / *self.exponent.denom() as f64)
        };
        let mut out = serde_json::json!({ "m": self.m, "c_G": { "q": self.q, "exp": exp } });
        if let Some(v) = self.d_valuation {
            out["D_valuation"] = serde_json::to_value(v).expect("valuation serializes");
        }
        out
    }
}

/// `m = rank(ad Y mod p)` and `c_G = q^{-(dim - rank + m)/2}` with `q = p`.
pub fn constants(algebra: &ChevalleyAlgebra, p: u64) -> Result<OrbitalConstants> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = rank_mod_p(&algebra.full_ad_y(), p)?;
    let total = (algebra.dim() - algebra.rank() + m) as i64;
    Ok(OrbitalConstants {
        m,
        q: p,
        exponent: Ratio::new(-total, 2),
        d_valuation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{build_algebra, RepFamily};
    use crate::padic::trace_form;
    use crate::rootdata::{CartanType, DatumSpec, Isogeny, RootDatum};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn sl2() -> (ChevalleyAlgebra, StandardRep) {
        let g = build_algebra(
            &DatumSpec::new(CartanType::A, 1, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
        )
        .unwrap();
        let rep = StandardRep::new(&g, RepFamily::Sl).unwrap();
        (g, rep)
    }

    #[test]
    fn sl2_selfdual_and_discriminant() {
        let (g, rep) = sl2();
        let form = trace_form(&g, &rep);
        let x = vec![q(0), q(1), q(25)];
        let report = check_selfdual(&g, &rep, &form, &x, 5).unwrap();
        assert!(report.holds());
        assert_eq!(report.dual_levels, vec![0, 0]);
        assert_eq!(d_g(&g, &x, 5).unwrap(), Valuation::Finite(2));
        let split = vec![q(1), q(0), q(0)];
        assert!(matches!(
            check_selfdual(&g, &rep, &form, &split, 5),
            Err(Error::NotInDomain(_))
        ));
        let y = vec![q(0), q(1), q(0)];
        assert!(matches!(
            check_selfdual(&g, &rep, &form, &y, 5),
            Err(Error::NotRegularSemisimple)
        ));
    }

    #[test]
    fn constants_examples() {
        let (g, _) = sl2();
        let c = constants(&g, 5).unwrap();
        assert_eq!(
            c.to_json(),
            serde_json::json!({"m": 2, "c_G": {"q": 5, "exp": -2}})
        );
        let gl3 = build_algebra(&RootDatum::general_linear(3).unwrap()).unwrap();
        assert_eq!(constants(&gl3, 5).unwrap().exponent, Ratio::from_integer(-6));
        let sp4 = build_algebra(
            &DatumSpec::new(CartanType::C, 2, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
        )
        .unwrap();
        assert_eq!(constants(&sp4, 5).unwrap().exponent, Ratio::from_integer(-8));
    }
}
