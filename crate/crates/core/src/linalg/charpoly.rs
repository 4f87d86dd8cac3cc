//! Division-free characteristic polynomials and small polynomial utilities.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::ring::{Rationals, Ring};

/// Coefficients `c_0, ..., c_n` of `det(t I - a)`, lowest degree first, so
/// `c_n = 1`. Uses the Samuelson–Berkowitz bordering recursion, which needs no
/// divisions and therefore runs over any commutative ring.
pub fn char_poly<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    assert!(a.is_square());
    let n = a.rows();
    let mut poly = vec![ring.one()];
    for k in 1..=n {
        let m = k - 1;
        let diag = a[(m, m)].clone();
        // s_j = r B^j c for the leading m x m block B.
        let mut s = Vec::with_capacity(m);
        if m > 0 {
            let mut v: Vec<R::Elem> = (0..m).map(|i| a[(i, m)].clone()).collect();
            for j in 0..m {
                if j > 0 {
                    v = (0..m)
                        .map(|i| {
                            let mut acc = ring.zero();
                            for (l, vl) in v.iter().enumerate() {
                                if !ring.is_zero(vl) {
                                    acc = ring.add(&acc, &ring.mul(&a[(i, l)], vl));
                                }
                            }
                            acc
                        })
                        .collect();
                }
                let mut acc = ring.zero();
                for (l, vl) in v.iter().enumerate() {
                    acc = ring.add(&acc, &ring.mul(&a[(m, l)], vl));
                }
                s.push(acc);
            }
        }
        // next = (t - diag) * poly - sum_k t^k sum_{i=k+1}^{m} c_i s_{i-k-1}
        let mut next = vec![ring.zero(); k + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = ring.add(&next[i + 1], c);
            next[i] = ring.sub(&next[i], &ring.mul(&diag, c));
        }
        for (kk, slot) in next.iter_mut().enumerate().take(m) {
            let mut acc = ring.zero();
            for i in kk + 1..=m {
                acc = ring.add(&acc, &ring.mul(&poly[i], &s[i - kk - 1]));
            }
            *slot = ring.sub(slot, &acc);
        }
        poly = next;
    }
    poly
}

/// Elementary symmetric functions `e_1, ..., e_n` of the eigenvalues, i.e.
/// `e_k = (-1)^k c_{n-k}`.
pub fn eigen_symmetric<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let c = char_poly(ring, a);
    let n = a.rows();
    (1..=n)
        .map(|k| {
            let x = c[n - k].clone();
            if k % 2 == 1 {
                ring.neg(&x)
            } else {
                x
            }
        })
        .collect()
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn poly_derivative(p: &[BigRational]) -> Vec<BigRational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(i.into()))
        .collect()
}

/// Monic gcd over the rationals; coefficients lowest degree first.
pub fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &lead;
        }
    }
    x
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &f * c;
        }
        trim(&mut r);
    }
    r
}

/// True iff the polynomial has no repeated root over an algebraic closure.
pub fn is_squarefree(p: &[BigRational]) -> bool {
    let g = poly_gcd(p, &poly_derivative(p));
    g.len() == 1 && g[0].is_one()
}

/// Characteristic polynomial over the rationals.
pub fn char_poly_q(a: &Matrix<BigRational>) -> Vec<BigRational> {
    char_poly(&Rationals, a)
}

/// Division-free determinant, read off the constant term.
pub fn determinant<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let c = char_poly(ring, a);
    if a.rows() % 2 == 0 {
        c[0].clone()
    } else {
        ring.neg(&c[0])
    }
}
