//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, Matrix};

/// `left * m * right == diag`, with `left`, `right` unimodular and the
/// nonzero diagonal entries forming a divisibility chain of positive integers.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diag: IntMatrix,
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Nonzero elementary divisors `d_1 | d_2 | ...`.
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.diag.rows().min(self.diag.cols());
        (0..n)
            .map(|i| self.diag[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::int_identity(rows);
    let mut left_inv = IntMatrix::int_identity(rows);
    let mut right = IntMatrix::int_identity(cols);

    // row_i += q * row_t, mirrored on the transforms.
    let row_add =
        |a: &mut IntMatrix, l: &mut IntMatrix, li: &mut IntMatrix, i: usize, t: usize, q: &BigInt| {
            for j in 0..a.cols() {
                let v = &a[(t, j)] * q;
                a[(i, j)] += v;
            }
            for j in 0..l.cols() {
                let v = &l[(t, j)] * q;
                l[(i, j)] += v;
            }
            // L^{-1} <- L^{-1} E^{-1}: col_t -= q * col_i
            for r in 0..li.rows() {
                let v = &li[(r, i)] * q;
                li[(r, t)] -= v;
            }
        };
    let col_add = |a: &mut IntMatrix, r: &mut IntMatrix, j: usize, t: usize, q: &BigInt| {
        for i in 0..a.rows() {
            let v = &a[(i, t)] * q;
            a[(i, j)] += v;
        }
        for i in 0..r.rows() {
            let v = &r[(i, t)] * q;
            r[(i, j)] += v;
        }
    };

    let n = rows.min(cols);
    for t in 0..n {
        // Smallest nonzero entry of the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        left_inv.swap_cols(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut clean = true;
            // Column t below the pivot.
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_add(&mut a, &mut left, &mut left_inv, i, t, &-q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                    a.swap_rows(t, i);
                    left.swap_rows(t, i);
                    left_inv.swap_cols(t, i);
                }
            }
            // Row t right of the pivot.
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_add(&mut a, &mut right, j, t, &-q);
                if !a[(t, j)].is_zero() {
                    clean = false;
                    a.swap_cols(t, j);
                    right.swap_cols(t, j);
                }
            }
            if !clean {
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[(i, j)] % &a[(t, t)]).is_zero());
            match offender {
                Some((i, _)) => {
                    row_add(&mut a, &mut left, &mut left_inv, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            for j in 0..cols {
                a[(t, j)] = -&a[(t, j)];
            }
            for j in 0..rows {
                left[(t, j)] = -&left[(t, j)];
            }
            for r in 0..rows {
                left_inv[(r, t)] = -&left_inv[(r, t)];
            }
        }
    }

    SmithForm {
        diag: a,
        left,
        left_inv,
        right,
    }
}

/// Elementary divisors only.
pub fn elementary_divisors(m: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(m).divisors()
}

/// `left * m * right`
pub fn apply_transforms(sf: &SmithForm, m: &IntMatrix) -> IntMatrix {
    let mul = |a: &IntMatrix, b: &IntMatrix| {
        let mut out = Matrix::filled(a.rows(), b.cols(), BigInt::zero());
        for i in 0..a.rows() {
            for k in 0..a.cols() {
                if a[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..b.cols() {
                    let v = &a[(i, k)] * &b[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    };
    mul(&mul(&sf.left, m), &sf.right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) {
        let sf = smith_normal_form(m);
        assert_eq!(apply_transforms(&sf, m), sf.diag, "L M R != D for {m:?}");
        assert!(sf.left.determinant().abs().is_one());
        assert!(sf.right.determinant().abs().is_one());
        let id = IntMatrix::int_identity(m.rows());
        let prod = {
            let mut out = Matrix::filled(m.rows(), m.rows(), BigInt::zero());
            for i in 0..m.rows() {
                for k in 0..m.rows() {
                    for j in 0..m.rows() {
                        let v = &sf.left[(i, k)] * &sf.left_inv[(k, j)];
                        out[(i, j)] += v;
                    }
                }
            }
            out
        };
        assert_eq!(prod, id);
        // Off-diagonal zero, divisibility chain.
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    assert!(sf.diag[(i, j)].is_zero());
                }
            }
        }
        let d = sf.divisors();
        for w in d.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert!(d.iter().all(|x| x.is_positive()));
    }

    #[test]
    fn small_examples() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        check(&m);
        let d: Vec<i64> = elementary_divisors(&m)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![2, 6, 12]);

        let cartan_a2 = IntMatrix::from_i64_rows(&[vec![2, -1], vec![-1, 2]]);
        check(&cartan_a2);
        assert_eq!(
            elementary_divisors(&cartan_a2),
            vec![BigInt::from(1), BigInt::from(3)]
        );

        let empty = IntMatrix::from_vec(0, 0, vec![]);
        assert!(elementary_divisors(&empty).is_empty());
        let tall = IntMatrix::from_i64_rows(&[vec![0], vec![0], vec![4]]);
        check(&tall);
        assert_eq!(elementary_divisors(&tall), vec![BigInt::from(4)]);
    }

    proptest! {
        #[test]
        fn transforms_diagonalize(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-9i64..10, 16)) {
            let data: Vec<BigInt> = (0..rows * cols).map(|k| BigInt::from(seed[k % seed.len()] * (1 + (k as i64 % 3)))).collect();
            let m = Matrix::from_vec(rows, cols, data);
            check(&m);
        }
    }
}
