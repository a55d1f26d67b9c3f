use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, the nonzero
/// diagonal entries forming a divisibility chain followed by zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal of `D` (length `min(rows, cols)`), all nonnegative.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().iter().filter(|d| !d.is_zero()).count()
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form with the smallest-absolute-value pivot rule.
///
/// Ties are broken by scanning order (row-major), so `U` and `V` are
/// reproducible for a given input.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(a.get(t, t));
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(a.get(t, t));
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                // A remainder strictly smaller than the pivot survived; move it in.
                let mut best: Option<(usize, usize)> = None;
                let cands = (t + 1..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                for (i, j) in cands {
                    let x = a.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
                let (bi, bj) = best.expect("dirty implies a nonzero remainder");
                a.swap_rows(t, bi);
                u.swap_rows(t, bi);
                a.swap_cols(t, bj);
                v.swap_cols(t, bj);
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(a.get(t, t)));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition { u, d: a, v }
}

/// Number of `y` in `(Z/n)^r` with `M y = 0 mod n`, for square `M`.
///
/// Equals the product of `gcd(d_i, n)` over the elementary divisors, with
/// `gcd(0, n) = n`.
pub fn solution_count_mod_n(m: &IntMatrix, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus n must be at least 1".into()));
    }
    if !m.is_square() {
        return Err(Error::InvalidArgument("solution counts need a square matrix".into()));
    }
    let snf = smith_normal_form(m);
    Ok(count_from_divisors(&snf.elementary_divisors(), n))
}

/// `prod gcd(d_i, n)` for precomputed elementary divisors.
pub fn count_from_divisors(divisors: &[BigInt], n: u64) -> BigUint {
    let n_big = BigInt::from(n);
    divisors
        .iter()
        .map(|d| d.gcd(&n_big).magnitude().clone())
        .product()
}
