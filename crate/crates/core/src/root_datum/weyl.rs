use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;

use super::RootDatum;
use crate::error::{Error, Result};
use crate::exact_algebra::IntMatrix;

/// Default cap on the size of a fully enumerated Weyl group.
pub const DEFAULT_WEYL_CAP: u64 = 1_000_000;

/// Element of the finite Weyl group acting on `Y` in the coroot basis.
///
/// Equality, hashing and ordering only look at the matrix; the cached length
/// is a function of it.
#[derive(Clone, Debug)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
    length: u32,
}

impl WeylElement {
    pub(crate) fn from_parts(rank: usize, matrix: Vec<i64>, length: u32) -> Self {
        debug_assert_eq!(matrix.len(), rank * rank);
        Self { rank, matrix, length }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Row-major `rank x rank` matrix.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.rank + j]
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64(self.rank, self.rank, &self.matrix).expect("square matrix")
    }

    /// Coxeter length in the finite simple reflections.
    pub fn length(&self) -> u32 {
        self.length
    }

    /// Sign character `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// `w(y)` for `y` in the coroot basis.
    pub fn apply(&self, y: &[i64]) -> Vec<i64> {
        let r = self.rank;
        (0..r)
            .map(|i| (0..r).map(|j| self.matrix[i * r + j] * y[j]).sum())
            .collect()
    }

    pub fn apply_big(&self, y: &[BigInt]) -> Vec<BigInt> {
        let r = self.rank;
        (0..r)
            .map(|i| (0..r).map(|j| self.matrix[i * r + j] * &y[j]).sum())
            .collect()
    }

    /// `f o w` for a functional `f` on `Y`, i.e. the row vector `f * M`.
    /// For a root `a` this is the functional of `w^{-1}(a)`.
    pub fn pull_back(&self, f: &[i64]) -> Vec<i64> {
        let r = self.rank;
        (0..r)
            .map(|j| (0..r).map(|i| f[i] * self.matrix[i * r + j]).sum())
            .collect()
    }

    /// `w - 1`, the matrix whose kernel mod `n` is the fixed-point set on `Y/nY`.
    pub fn minus_identity(&self) -> IntMatrix {
        let r = self.rank;
        let entries: Vec<i64> = (0..r * r)
            .map(|k| self.matrix[k] - i64::from(k / r == k % r))
            .collect();
        IntMatrix::from_i64(r, r, &entries).expect("square matrix")
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.matrix.cmp(&other.matrix))
    }
}

pub(crate) fn mat_mul(r: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += x * b[k * r + j];
            }
        }
    }
    out
}

/// Every element of `W` exactly once, in breadth-first order of length.
///
/// Refuses up front when `|W|` exceeds `cap`.
pub fn enumerate_weyl_group(datum: &RootDatum, cap: u64) -> Result<Vec<WeylElement>> {
    let order = datum.weyl_order();
    if order > cap {
        return Err(Error::CapExceeded { order, cap });
    }
    let r = datum.rank();
    let gens: Vec<Vec<i64>> = (0..r).map(|i| datum.simple_reflection(i).matrix).collect();
    let id = WeylElement::from_parts(r, identity(r), 0);
    let mut seen: HashSet<Vec<i64>> = HashSet::with_capacity(order as usize);
    seen.insert(id.matrix.clone());
    let mut out = Vec::with_capacity(order as usize);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let m = mat_mul(r, &w.matrix, g);
            if !seen.insert(m.clone()) {
                continue;
            }
            queue.push_back(WeylElement::from_parts(r, m, w.length + 1));
        }
        out.push(w);
    }
    debug_assert_eq!(out.len() as u64, order);
    Ok(out)
}

pub(crate) fn identity(r: usize) -> Vec<i64> {
    (0..r * r).map(|k| i64::from(k / r == k % r)).collect()
}
