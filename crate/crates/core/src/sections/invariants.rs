//! Characteristic-polynomial invariants of a representation.

use serde::Serialize;

use crate::chevalley::{RepFamily, StandardRep};
use crate::linalg::{eigen_symmetric, Ring};

/// Retained coefficients `e_k` of `det(t - rep(X))`, written as elementary
/// symmetric functions of the eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSystem {
    pub family: RepFamily,
    pub size: usize,
    /// The retained `k`, ascending.
    pub degrees: Vec<usize>,
}

impl InvariantSystem {
    pub fn new(rep: &StandardRep) -> Self {
        let n = rep.size();
        let degrees = match rep.family() {
            RepFamily::Gl | RepFamily::Adjoint => (1..=n).collect(),
            // trace vanishes identically
            RepFamily::Sl => (2..=n).collect(),
            // odd coefficients vanish identically
            RepFamily::Sp => (2..=n).step_by(2).collect(),
        };
        InvariantSystem {
            family: rep.family(),
            size: n,
            degrees,
        }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// All `e_1, ..., e_n` of `rep(x)`.
    pub fn all_coefficients<R: Ring>(&self, ring: &R, rep: &StandardRep, x: &[R::Elem]) -> Vec<R::Elem> {
        eigen_symmetric(ring, &rep.image(ring, x))
    }

    /// The retained coefficients, lowest degree first.
    pub fn evaluate<R: Ring>(&self, ring: &R, rep: &StandardRep, x: &[R::Elem]) -> Vec<R::Elem> {
        let all = self.all_coefficients(ring, rep, x);
        self.degrees.iter().map(|&k| all[k - 1].clone()).collect()
    }
}
