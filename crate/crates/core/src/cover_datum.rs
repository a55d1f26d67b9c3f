//! Combinatorial data of an `n`-fold cover: the quadratic form `Q`, its
//! bilinear form `B_Q`, the lattice `Y_{Q,n}`, the rescaled coroots
//! `n_alpha alpha^vee` and the finite groups built from them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact_algebra::{smith_normal_form, IntMatrix, Lattice};
use crate::root_datum::{RootDatum, TypeLetter};

/// Finite abelian group given by invariant factors `d_1 | d_2 | ...`, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    pub fn new(mut invariant_factors: Vec<BigInt>) -> Result<Self> {
        invariant_factors.retain(|d| !d.is_one());
        if invariant_factors.iter().any(|d| d < &BigInt::from(2)) {
            return Err(Error::InvalidArgument("invariant factors must be positive".into()));
        }
        if invariant_factors.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidArgument("invariant factors must form a divisibility chain".into()));
        }
        Ok(Self { invariant_factors })
    }

    pub fn trivial() -> Self {
        Self {
            invariant_factors: Vec::new(),
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// An `n`-fold cover of a simply-connected group, with `Q = q_short` on short coroots.
#[derive(Clone, Debug)]
pub struct CoverDatum {
    base: RootDatum,
    n: u64,
    q_short: u64,
    gram: Vec<Vec<i64>>,
    /// `Q(alpha^vee)` per positive root, in the order of `base.positive_roots()`.
    q_values: Vec<i64>,
    /// `n_alpha` per positive root.
    n_alpha: Vec<i64>,
    y_qn: Lattice,
    affine_root: usize,
}

impl CoverDatum {
    pub fn new(base: RootDatum, n: u64, q_short: u64) -> Result<Self> {
        if n == 0 || q_short == 0 {
            return Err(Error::InvalidArgument("n and q_short must be at least 1".into()));
        }
        let r = base.rank();
        let max_norm = base.max_norm();
        let q_of = |norm: i64| q_short as i64 * max_norm / norm;
        let q_nodes: Vec<i64> = base.node_norms().iter().map(|&m| q_of(m)).collect();

        // B_Q(alpha_i^vee, alpha_j^vee) = Q(alpha_j^vee) <alpha_j, alpha_i^vee>
        let cartan = base.cartan();
        let gram: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| q_nodes[j] * cartan[j][i]).collect())
            .collect();
        for i in 0..r {
            for j in 0..r {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Integrality(format!("B_Q is not symmetric at ({i}, {j})")));
                }
            }
        }

        let q_values: Vec<i64> = base.positive_roots().iter().map(|a| q_of(a.norm)).collect();
        let n_i = n as i64;
        let n_alpha: Vec<i64> = q_values.iter().map(|&q| n_i / n_i.gcd(&q)).collect();

        let y_qn = Lattice::kernel_mod_n(&IntMatrix::from_rows(&gram)?, n)?;

        // Highest root of the rescaled system: maximize sum c_i n_{alpha_i} / n_alpha.
        let simple_n: Vec<i64> = (0..r)
            .map(|i| {
                let k = base
                    .positive_roots()
                    .iter()
                    .position(|a| a.coeffs.iter().enumerate().all(|(j, &c)| c == i64::from(i == j)))
                    .expect("simple root present");
                n_alpha[k]
            })
            .collect();
        let rescaled_height = |k: usize| -> i64 {
            let a = &base.positive_roots()[k];
            let h: i64 = a.coeffs.iter().zip(&simple_n).map(|(c, m)| c * m).sum();
            debug_assert_eq!(h % n_alpha[k], 0);
            h / n_alpha[k]
        };
        let affine_root = (0..base.num_positive_roots())
            .max_by_key(|&k| rescaled_height(k))
            .expect("nonempty root system");

        let cover = Self {
            base,
            n,
            q_short,
            gram,
            q_values,
            n_alpha,
            y_qn,
            affine_root,
        };
        cover.check_invariants()?;
        Ok(cover)
    }

    pub fn from_type(letter: char, rank: usize, n: u64) -> Result<Self> {
        Self::new(RootDatum::from_type(letter, rank)?, n, 1)
    }

    fn check_invariants(&self) -> Result<()> {
        let r = self.rank();
        for b in self.y_qn.basis() {
            for i in 0..r {
                let v: BigInt = (0..r).map(|j| &b[j] * self.gram[j][i]).sum();
                if !v.is_multiple_of(&BigInt::from(self.n)) {
                    return Err(Error::Integrality("Y_{Q,n} basis vector fails B_Q(y, e_i) = 0 mod n".into()));
                }
            }
            for i in 0..r {
                let s = self.base.simple_reflection(i);
                if !self.y_qn.contains(&s.apply_big(b)) {
                    return Err(Error::Integrality("Y_{Q,n} is not W-stable".into()));
                }
            }
        }
        if !self.y_qn.contains_lattice(&Lattice::scaled_standard(r, self.n)) {
            return Err(Error::Integrality("nY is not contained in Y_{Q,n}".into()));
        }
        for c in self.rescaled_coroots() {
            if !self.y_qn.contains_i64(&c) {
                return Err(Error::Integrality("rescaled coroot outside Y_{Q,n}".into()));
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &RootDatum {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q_short(&self) -> u64 {
        self.q_short
    }

    /// Gram matrix `B_Q(e_i, e_j)` on the coroot basis.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `Q(y) = B_Q(y, y) / 2`.
    pub fn quadratic_form(&self, y: &[i64]) -> i64 {
        let r = self.rank();
        let b: i64 = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .map(|(i, j)| y[i] * self.gram[i][j] * y[j])
            .sum();
        b / 2
    }

    pub fn q_values(&self) -> &[i64] {
        &self.q_values
    }

    /// `n_alpha` for each positive root, in the order of `base().positive_roots()`.
    pub fn n_alpha(&self) -> &[i64] {
        &self.n_alpha
    }

    /// `n_alpha` for each simple root.
    pub fn n_alpha_simple(&self) -> Vec<i64> {
        (0..self.rank())
            .map(|i| {
                let k = self.simple_root_index(i);
                self.n_alpha[k]
            })
            .collect()
    }

    pub(crate) fn simple_root_index(&self, i: usize) -> usize {
        self.base
            .positive_roots()
            .iter()
            .position(|a| a.coeffs.iter().enumerate().all(|(j, &c)| c == i64::from(i == j)))
            .expect("simple root present")
    }

    /// `Y_{Q,n}` with its Hermite basis.
    pub fn y_qn(&self) -> &Lattice {
        &self.y_qn
    }

    /// `n_alpha alpha^vee` for every positive root.
    pub fn rescaled_coroots(&self) -> Vec<Vec<i64>> {
        self.base
            .positive_roots()
            .iter()
            .zip(&self.n_alpha)
            .map(|(a, &m)| a.coroot.iter().map(|x| x * m).collect())
            .collect()
    }

    /// `n_{alpha_i} alpha_i^vee`, the simple coroots of the rescaled system.
    pub fn rescaled_simple_coroots(&self) -> Vec<Vec<i64>> {
        let all = self.rescaled_coroots();
        (0..self.rank()).map(|i| all[self.simple_root_index(i)].clone()).collect()
    }

    /// Index (into `base().positive_roots()`) of the root whose rescaled
    /// version is the highest root of the rescaled system.
    pub fn affine_root_index(&self) -> usize {
        self.affine_root
    }

    /// `<alpha / n_alpha, y>`, or an integrality error if `y` is not in `Y_{Q,n}`.
    pub fn rescaled_pairing(&self, root: usize, y: &[i64]) -> Result<i64> {
        let p = self.base.positive_roots()[root].pair(y);
        let m = self.n_alpha[root];
        if p % m != 0 {
            return Err(Error::Integrality(format!(
                "<alpha, y> = {p} is not divisible by n_alpha = {m}"
            )));
        }
        Ok(p / m)
    }

    /// `<y, 2 rho_{Q,n}>`, the sum of `<alpha / n_alpha, y>` over positive roots.
    pub fn two_rho_qn_pairing(&self, y: &[i64]) -> Result<i64> {
        (0..self.base.num_positive_roots())
            .map(|k| self.rescaled_pairing(k, y))
            .sum()
    }

    /// `Y_{Q,n} = nY` together with `n` prime to the bad primes of the type.
    pub fn is_oasitic(&self) -> bool {
        self.y_qn == Lattice::scaled_standard(self.rank(), self.n)
            && self.base.spec().bad_primes().iter().all(|p| !self.n.is_multiple_of(*p))
    }

    /// The gcd condition on `n` that makes a cover of this type oasitic, for error messages.
    pub fn oasitic_condition(&self) -> String {
        let spec = self.base.spec();
        match spec.letter() {
            TypeLetter::A => format!("gcd(n, {}) = 1", spec.rank() + 1),
            TypeLetter::B | TypeLetter::C | TypeLetter::D => "n odd".into(),
            _ => {
                let ps: Vec<String> = spec.bad_primes().iter().map(u64::to_string).collect();
                format!("n prime to {}", ps.join(", "))
            }
        }
    }

    pub fn require_oasitic(&self) -> Result<()> {
        if self.is_oasitic() {
            Ok(())
        } else {
            Err(Error::NotOasitic {
                cover: format!("{} with n = {}", self.base.spec(), self.n),
                condition: self.oasitic_condition(),
            })
        }
    }

    fn rescaled_coroot_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rescaled_coroots()).expect("rectangular coroot matrix")
    }

    /// `Y_{Q,n} / Y_{Q,n}^{sc}`; its dual is the center of the dual group.
    pub fn center_group(&self) -> FiniteAbelianGroup {
        let inv = self
            .y_qn
            .quotient_invariants(&self.rescaled_coroot_matrix())
            .expect("rescaled coroots span a full-rank sublattice of Y_{Q,n}");
        FiniteAbelianGroup::new(inv).expect("Smith invariants form a chain")
    }

    /// `Y_{Q,n} / (nY + Y_{Q,n}^{sc})`.
    pub fn heart_center_group(&self) -> FiniteAbelianGroup {
        let r = self.rank();
        let mut rows = self.rescaled_coroots();
        for i in 0..r {
            rows.push((0..r).map(|j| if i == j { self.n as i64 } else { 0 }).collect());
        }
        let gens = IntMatrix::from_rows(&rows).expect("rectangular generator matrix");
        let inv = self
            .y_qn
            .quotient_invariants(&gens)
            .expect("nY + Y^sc is a full-rank sublattice of Y_{Q,n}");
        FiniteAbelianGroup::new(inv).expect("Smith invariants form a chain")
    }

    /// One representative in `Y_{Q,n}` for each class of `Y_{Q,n} / Y_{Q,n}^{sc}`.
    pub fn center_coset_representatives(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let coroots = self.rescaled_coroots();
        let mut coords = Vec::new();
        for c in &coroots {
            let big: Vec<BigInt> = c.iter().map(|&x| x.into()).collect();
            coords.extend(self.y_qn.coordinates(&big).expect("coroot lies in Y_{Q,n}"));
        }
        let m = IntMatrix::new(coroots.len(), r, coords).expect("shape");
        let snf = smith_normal_form(&m);
        let v_inv = snf.v.unimodular_inverse().expect("V is unimodular");
        let divisors = snf.elementary_divisors();
        let basis = self.y_qn.basis();

        let mut reps = vec![vec![BigInt::from(0); r]];
        for (i, d) in divisors.iter().enumerate() {
            let d = d.to_i64().expect("small divisor");
            if d <= 1 {
                continue;
            }
            // generator of the i-th cyclic factor, in Y coordinates
            let g: Vec<BigInt> = (0..r)
                .map(|k| (0..r).map(|j| v_inv.get(i, j) * &basis[j][k]).sum())
                .collect();
            let mut next = Vec::with_capacity(reps.len() * d as usize);
            for rep in &reps {
                for t in 0..d {
                    next.push(rep.iter().zip(&g).map(|(a, b)| a + b * t).collect::<Vec<BigInt>>());
                }
            }
            reps = next;
        }
        reps.into_iter()
            .map(|v| v.iter().map(|x| x.to_i64().expect("small representative")).collect())
            .collect()
    }
}

/// Whether `n` passes the tabulated gcd conditions for oasitic covers.
pub fn table_oasitic_condition(letter: TypeLetter, rank: usize, n: u64) -> bool {
    let coprime = |m: u64| n.gcd(&m) == 1;
    match letter {
        TypeLetter::A => coprime(rank as u64 + 1),
        TypeLetter::B | TypeLetter::C | TypeLetter::D => n % 2 == 1,
        TypeLetter::E if rank == 8 => coprime(30),
        TypeLetter::E | TypeLetter::F | TypeLetter::G => coprime(6),
    }
}
