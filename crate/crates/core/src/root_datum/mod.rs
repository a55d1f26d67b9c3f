//! Simply-connected root data of irreducible Cartan types and the finite
//! Weyl group acting on the cocharacter lattice `Y`.
//!
//! `Y` is the coroot lattice with the simple coroots as standard basis. A
//! root is stored as the functional it defines on `Y`, so the simple roots
//! are the rows of the Cartan matrix `cartan[i][j] = <alpha_i, alpha_j^vee>`.

mod cartan;
mod weyl;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use cartan::{CartanSpec, TypeLetter};
pub use weyl::{enumerate_weyl_group, WeylElement, DEFAULT_WEYL_CAP};

use crate::error::Result;
use crate::exact_algebra::IntMatrix;
use weyl::{identity, mat_mul};

/// A positive root with its coroot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    /// Coefficients in the simple roots.
    pub coeffs: Vec<i64>,
    /// Values `<alpha, e_j>` on the coroot basis of `Y`.
    pub functional: Vec<i64>,
    /// The coroot in the coroot basis.
    pub coroot: Vec<i64>,
    /// Squared length, short roots normalized to 2.
    pub norm: i64,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn pair(&self, y: &[i64]) -> i64 {
        self.functional.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    pub fn pair_big(&self, y: &[BigInt]) -> BigInt {
        self.functional.iter().zip(y).map(|(a, b)| a * b).sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    spec: CartanSpec,
    cartan: Vec<Vec<i64>>,
    norms: Vec<i64>,
    positive_roots: Vec<Root>,
    exponents: Vec<u64>,
    weyl_order: u64,
    two_rho_check: Vec<i64>,
    two_rho: Vec<i64>,
}

impl RootDatum {
    pub fn new(spec: CartanSpec) -> Self {
        let r = spec.rank();
        let cartan = spec.cartan_matrix();
        let norms = spec.node_norms();

        // Closure of the simple roots under simple reflections, in root coordinates.
        let mut found: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|k| i64::from(i == k)).collect())
            .collect();
        let mut k = 0;
        while k < found.len() {
            let beta = found[k].clone();
            for i in 0..r {
                let p: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                let mut image = beta.clone();
                image[i] -= p;
                if image.iter().all(|&c| c >= 0) && !found.contains(&image) {
                    found.push(image);
                }
            }
            k += 1;
        }

        let mut positive_roots: Vec<Root> = found
            .into_iter()
            .map(|coeffs| {
                let norm: i64 = (0..r)
                    .flat_map(|a| (0..r).map(move |b| (a, b)))
                    .map(|(a, b)| coeffs[a] * coeffs[b] * cartan[a][b] * norms[b])
                    .sum::<i64>()
                    / 2;
                let functional = (0..r).map(|j| (0..r).map(|a| coeffs[a] * cartan[a][j]).sum()).collect();
                let coroot = (0..r).map(|a| coeffs[a] * norms[a] / norm).collect();
                Root {
                    coeffs,
                    functional,
                    coroot,
                    norm,
                }
            })
            .collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs.cmp(&a.coeffs)));

        let two_rho_check = (0..r)
            .map(|j| positive_roots.iter().map(|a| a.coroot[j]).sum())
            .collect();
        let two_rho = (0..r)
            .map(|j| positive_roots.iter().map(|a| a.functional[j]).sum())
            .collect();
        let exponents = spec.exponents();
        let weyl_order = exponents.iter().map(|m| m + 1).product();

        Self {
            spec,
            cartan,
            norms,
            positive_roots,
            exponents,
            weyl_order,
            two_rho_check,
            two_rho,
        }
    }

    pub fn from_type(letter: char, rank: usize) -> Result<Self> {
        Ok(Self::new(CartanSpec::from_parts(letter, rank)?))
    }

    pub fn spec(&self) -> CartanSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.cartan).expect("cartan matrix is square")
    }

    /// Squared lengths of the simple roots (short = 2).
    pub fn node_norms(&self) -> &[i64] {
        &self.norms
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_coroots(&self) -> Vec<Vec<i64>> {
        self.positive_roots.iter().map(|a| a.coroot.clone()).collect()
    }

    /// Functional of the `i`-th simple root.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.cartan[i]
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// Sum of the positive coroots; a root functional `f` is positive iff `f(2 rho^vee) > 0`.
    pub fn two_rho_check(&self) -> &[i64] {
        &self.two_rho_check
    }

    /// Sum of the positive roots, as a functional on `Y`.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// The unique highest root.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("at least one root")
    }

    pub fn max_norm(&self) -> i64 {
        *self.norms.iter().max().expect("rank >= 1")
    }

    pub fn is_positive_functional(&self, f: &[i64]) -> bool {
        f.iter().zip(&self.two_rho_check).map(|(a, b)| a * b).sum::<i64>() > 0
    }

    /// `<y, rho>` as an exact rational.
    pub fn rho_pairing(&self, y: &[i64]) -> BigRational {
        BigRational::new(BigInt::from(self.two_rho_pairing(y)), BigInt::from(2))
    }

    /// `<y, 2 rho> = sum over positive roots of <alpha, y>`.
    pub fn two_rho_pairing(&self, y: &[i64]) -> i64 {
        self.two_rho.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::from_parts(self.rank(), identity(self.rank()), 0)
    }

    /// `s_i(y) = y - <alpha_i, y> alpha_i^vee`.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let r = self.rank();
        let mut m = identity(r);
        for j in 0..r {
            m[i * r + j] -= self.cartan[i][j];
        }
        WeylElement::from_parts(r, m, 1)
    }

    /// Number of positive coroots sent to negative coroots.
    fn length_of_matrix(&self, m: &[i64]) -> u32 {
        let r = self.rank();
        self.positive_roots
            .iter()
            .filter(|a| {
                (0..r).any(|i| (0..r).map(|j| m[i * r + j] * a.coroot[j]).sum::<i64>() < 0)
            })
            .count() as u32
    }

    /// Wraps a matrix known to lie in `W`, computing its length.
    pub fn element_from_matrix(&self, m: Vec<i64>) -> WeylElement {
        let l = self.length_of_matrix(&m);
        WeylElement::from_parts(self.rank(), m, l)
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element_from_matrix(mat_mul(self.rank(), a.matrix(), b.matrix()))
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        let r = self.rank();
        let mut m = identity(r);
        for &i in word {
            m = mat_mul(r, &m, self.simple_reflection(i).matrix());
        }
        self.element_from_matrix(m)
    }

    /// Whether `l(w s_i) < l(w)`, i.e. `w(alpha_i^vee)` is negative.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        let r = self.rank();
        (0..r).any(|k| w.entry(k, i) < 0)
    }

    /// A reduced word `w = s_{i_1} ... s_{i_k}`, found by stripping right descents.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length() as usize);
        let mut cur = w.clone();
        while !cur.is_identity() {
            let i = (0..self.rank())
                .find(|&i| self.is_right_descent(&cur, i))
                .expect("nontrivial element has a right descent");
            cur = self.multiply(&cur, &self.simple_reflection(i));
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word)
    }
}
