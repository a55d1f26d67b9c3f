use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{hermite_normal_form, IntMatrix};
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// Full-rank sublattice of `Z^r`, stored by its Hermite-normal-form basis so
/// that equality is a plain comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    /// Lattice spanned by the rows of `generators`; must have full rank.
    pub fn from_generators(generators: &IntMatrix) -> Result<Self> {
        let basis = hermite_normal_form(generators);
        if basis.len() != generators.cols() {
            return Err(Error::InvalidArgument(format!(
                "generators span a rank {} lattice in dimension {}",
                basis.len(),
                generators.cols()
            )));
        }
        Ok(Self { basis })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_generators(&IntMatrix::from_rows(rows)?)
    }

    /// `n Z^r`
    pub fn scaled_standard(rank: usize, n: u64) -> Self {
        let basis = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| if i == j { BigInt::from(n) } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        Self { basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// HNF basis rows (upper triangular, positive diagonal).
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        let r = self.rank();
        IntMatrix::new(r, r, self.basis.iter().flatten().cloned().collect())
            .expect("basis is square")
    }

    pub fn basis_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.basis
            .iter()
            .map(|row| row.iter().map(|x| x.to_i64().expect("basis entry fits i64")).collect())
            .collect()
    }

    /// Index `[Z^r : L]`.
    pub fn index(&self) -> BigInt {
        (0..self.rank()).map(|i| self.basis[i][i].clone()).product()
    }

    /// Integer coordinates of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let r = self.rank();
        if v.len() != r {
            return None;
        }
        let mut x = vec![BigInt::zero(); r];
        for j in 0..r {
            let mut rem = v[j].clone();
            for i in 0..j {
                rem -= &x[i] * &self.basis[i][j];
            }
            let (q, m) = rem.div_mod_floor(&self.basis[j][j]);
            if !m.is_zero() {
                return None;
            }
            x[j] = q;
        }
        Some(x)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
        self.contains(&v)
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// `{y : M y = 0 mod n}` for a square integer matrix `M`, computed from
    /// the Smith form `U M V = D`: in `z = V^{-1} y` the condition splits
    /// into `d_i z_i = 0 mod n`.
    pub fn kernel_mod_n(m: &IntMatrix, n: u64) -> Result<Self> {
        if !m.is_square() || n == 0 {
            return Err(Error::InvalidArgument("kernel_mod_n needs a square matrix and n >= 1".into()));
        }
        let r = m.rows();
        let snf = smith_normal_form(m);
        let n_big = BigInt::from(n);
        let mut gens = IntMatrix::zeros(r, r);
        for (i, d) in snf.elementary_divisors().iter().enumerate() {
            let step = &n_big / d.gcd(&n_big);
            // generator: step * (column i of V), written as a row
            for k in 0..r {
                gens.set(i, k, &step * snf.v.get(k, i));
            }
        }
        Self::from_generators(&gens)
    }

    /// Invariant factors (each >= 2, dividing the next) of `self / sub`,
    /// where `sub` is given by generators (rows).
    pub fn quotient_invariants(&self, sub_generators: &IntMatrix) -> Result<Vec<BigInt>> {
        let r = self.rank();
        let mut coords = Vec::with_capacity(sub_generators.rows() * r);
        for i in 0..sub_generators.rows() {
            let c = self.coordinates(sub_generators.row(i)).ok_or_else(|| {
                Error::Integrality(format!("generator {i} does not lie in the lattice"))
            })?;
            coords.extend(c);
        }
        let m = IntMatrix::new(sub_generators.rows(), r, coords)?;
        let divisors = smith_normal_form(&m).elementary_divisors();
        if divisors.len() < r || divisors.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("sublattice does not have full rank".into()));
        }
        Ok(divisors.into_iter().filter(|d| !d.is_one()).collect())
    }
}
