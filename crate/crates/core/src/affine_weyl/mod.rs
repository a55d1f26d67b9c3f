//! The extended affine Weyl group `Y_{Q,n} x| W` of a cover, its two length
//! functions and its Coxeter structure.
//!
//! Generator `0` is the affine reflection; generator `i >= 1` is the finite
//! simple reflection of Bourbaki node `i`. The fundamental alcove is the
//! antidominant one, so the affine reflection is `(-n_theta theta^vee, s_theta)`.

mod ball;

use std::fmt;

use crate::cover_datum::CoverDatum;
use crate::error::{Error, Result};
use crate::root_datum::{RootDatum, WeylElement};

pub use ball::{enumerate_ball, graded_counts, BallElement, LengthKind};

/// `(y, s)`, acting by `x -> y + s(x)`. The translation is in the coroot basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    y: Vec<i64>,
    s: WeylElement,
}

impl AffineElement {
    pub fn new(y: Vec<i64>, s: WeylElement) -> Self {
        assert_eq!(y.len(), s.rank(), "translation and Weyl element ranks differ");
        Self { y, s }
    }

    pub fn translation(&self) -> &[i64] {
        &self.y
    }

    pub fn finite_part(&self) -> &WeylElement {
        &self.s
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_identity() && self.y.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let y: Vec<String> = self.y.iter().map(i64::to_string).collect();
        let s: Vec<String> = self.s.matrix().iter().map(i64::to_string).collect();
        write!(f, "(({}), [{}])", y.join(","), s.join(","))
    }
}

/// `W~_ex = Y_{Q,n} x| W` for a fixed cover.
#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    cover: CoverDatum,
    generators: Vec<AffineElement>,
    omega: Vec<AffineElement>,
}

impl AffineWeylGroup {
    pub fn new(cover: CoverDatum) -> Result<Self> {
        let datum = cover.base();
        let r = datum.rank();
        let k = cover.affine_root_index();
        let theta = &datum.positive_roots()[k];
        let m = cover.n_alpha()[k];
        let mut refl = datum.identity().matrix().to_vec();
        for i in 0..r {
            for j in 0..r {
                refl[i * r + j] -= theta.coroot[i] * theta.functional[j];
            }
        }
        let s_theta = datum.element_from_matrix(refl);
        let mut generators = vec![AffineElement::new(
            theta.coroot.iter().map(|c| -c * m).collect(),
            s_theta,
        )];
        for i in 0..r {
            generators.push(AffineElement::new(vec![0; r], datum.simple_reflection(i)));
        }
        let mut group = Self {
            cover,
            generators,
            omega: Vec::new(),
        };
        group.omega = group.compute_omega()?;
        Ok(group)
    }

    pub fn cover(&self) -> &CoverDatum {
        &self.cover
    }

    pub fn datum(&self) -> &RootDatum {
        self.cover.base()
    }

    pub fn rank(&self) -> usize {
        self.cover.rank()
    }

    /// Affine reflection first, then the finite simple reflections.
    pub fn generators(&self) -> &[AffineElement] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Length-zero elements, one per class of `Y_{Q,n} / Y_{Q,n}^{sc}`; the identity comes first.
    pub fn omega(&self) -> &[AffineElement] {
        &self.omega
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::new(vec![0; self.rank()], self.datum().identity())
    }

    pub fn translation(&self, y: Vec<i64>) -> AffineElement {
        AffineElement::new(y, self.datum().identity())
    }

    /// Checks membership of the translation part in `Y_{Q,n}`.
    pub fn element(&self, y: Vec<i64>, s: WeylElement) -> Result<AffineElement> {
        if !self.cover.y_qn().contains_i64(&y) {
            return Err(Error::Integrality(format!("{y:?} is not in Y_{{Q,n}}")));
        }
        Ok(AffineElement::new(y, s))
    }

    pub fn multiply(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let sy = a.s.apply(&b.y);
        let y = a.y.iter().zip(&sy).map(|(p, q)| p + q).collect();
        AffineElement::new(y, self.datum().multiply(&a.s, &b.s))
    }

    pub fn inverse(&self, a: &AffineElement) -> AffineElement {
        let s_inv = self.datum().inverse(&a.s);
        let y = s_inv.apply(&a.y).into_iter().map(|x| -x).collect();
        AffineElement::new(y, s_inv)
    }

    /// Sums `f(<alpha, y>, s^{-1} alpha > 0)` over positive roots.
    fn root_sum<F: Fn(usize, i64, bool) -> Result<u64>>(&self, w: &AffineElement, f: F) -> Result<u64> {
        let datum = self.datum();
        let mut total = 0u64;
        for (k, a) in datum.positive_roots().iter().enumerate() {
            let pulled = w.s.pull_back(&a.functional);
            total += f(k, a.pair(&w.y), datum.is_positive_functional(&pulled))?;
        }
        Ok(total)
    }

    /// Length in the ambient `Y x| W`:
    /// `sum_{s^{-1}a > 0} |<a, y>| + sum_{s^{-1}a < 0} |<a, y> + 1|`.
    pub fn length_g(&self, w: &AffineElement) -> u64 {
        self.root_sum(w, |_, p, pos| Ok(if pos { p.unsigned_abs() } else { (p + 1).unsigned_abs() }))
            .expect("infallible")
    }

    /// Length in `W~_ex` itself, with `<a / n_a, y>` in place of `<a, y>`.
    pub fn length_gqn(&self, w: &AffineElement) -> Result<u64> {
        let n_alpha = self.cover.n_alpha();
        self.root_sum(w, |k, p, pos| {
            if p % n_alpha[k] != 0 {
                return Err(Error::Integrality(format!(
                    "<alpha, y> = {p} not divisible by n_alpha = {}",
                    n_alpha[k]
                )));
            }
            let m = p / n_alpha[k];
            Ok(if pos { m.unsigned_abs() } else { (m + 1).unsigned_abs() })
        })
    }

    /// Coxeter length of `W~_ex`; panics on elements outside the group.
    pub fn length(&self, w: &AffineElement) -> u64 {
        self.length_gqn(w).expect("element of W~_ex")
    }

    /// Left multiplication by generator `i`.
    pub fn left_mul_generator(&self, i: usize, w: &AffineElement) -> AffineElement {
        self.multiply(&self.generators[i], w)
    }

    pub fn right_mul_generator(&self, w: &AffineElement, i: usize) -> AffineElement {
        self.multiply(w, &self.generators[i])
    }

    /// `w = g_{i_1} ... g_{i_k} omega` with `k = length(w)`; returns the word and the index into `omega()`.
    pub fn decompose(&self, w: &AffineElement) -> (Vec<usize>, usize) {
        let mut word = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let (i, next, l) = (0..self.num_generators())
                .map(|i| {
                    let next = self.left_mul_generator(i, &cur);
                    let l = self.length(&next);
                    (i, next, l)
                })
                .find(|(_, _, l)| *l < len)
                .expect("positive length element has a left descent");
            word.push(i);
            cur = next;
            len = l;
        }
        let idx = self
            .omega
            .iter()
            .position(|o| o == &cur)
            .expect("length-zero elements are listed in omega");
        (word, idx)
    }

    pub fn from_word(&self, word: &[usize], omega: usize) -> AffineElement {
        word.iter()
            .rev()
            .fold(self.omega[omega].clone(), |acc, &i| self.left_mul_generator(i, &acc))
    }

    fn compute_omega(&self) -> Result<Vec<AffineElement>> {
        let mut out: Vec<AffineElement> = Vec::new();
        for y in self.cover.center_coset_representatives() {
            let mut cur = self.translation(y);
            let mut len = self.length_gqn(&cur)?;
            while len > 0 {
                let (next, l) = (0..self.num_generators())
                    .map(|i| {
                        let next = self.left_mul_generator(i, &cur);
                        let l = self.length(&next);
                        (next, l)
                    })
                    .find(|(_, l)| *l < len)
                    .expect("positive length element has a left descent");
                cur = next;
                len = l;
            }
            out.push(cur);
        }
        out.sort_by_key(|o| !o.is_identity());
        Ok(out)
    }

    /// Order of `g_i g_j`, or `None` when it is infinite.
    pub fn braid_order(&self, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return Some(1);
        }
        let prod = self.multiply(&self.generators[i], &self.generators[j]);
        let mut p = prod.clone();
        for k in 1..=6u32 {
            if p.is_identity() {
                return Some(k);
            }
            if p.s.is_identity() {
                return None;
            }
            p = self.multiply(&p, &prod);
        }
        None
    }

    /// Classes of generators joined by odd braid orders, each sorted, ordered by first member.
    pub fn odd_braid_classes(&self) -> Vec<Vec<usize>> {
        let g = self.num_generators();
        let mut parent: Vec<usize> = (0..g).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..g {
            for j in i + 1..g {
                if self.braid_order(i, j).is_some_and(|m| m % 2 == 1) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..g {
            let root = find(&mut parent, i);
            match classes.iter_mut().find(|c| c[0] == root) {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        classes
    }
}
