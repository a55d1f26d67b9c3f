//! The affine Hecke algebra of `W~_ex` over `Q[v, v^{-1}]`, `q = v^2`, in the
//! basis `E_w`, with the Bernstein elements `t_y` and one-dimensional characters.

mod character;

use std::collections::BTreeMap;
use std::fmt;


use crate::affine_weyl::{AffineElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::exact_algebra::LaurentPoly;

pub use character::{discrete_series_characters, xi_classes, GeneratorValue, HeckeCharacter};

/// Finitely supported map `W~_ex -> Q[v, v^{-1}]`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<AffineElement, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: AffineElement) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: AffineElement, c: LaurentPoly) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &c);
        h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &AffineElement) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: AffineElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(x) => &x + c,
            None => c.clone(),
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}) E{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Multiplication in the Hecke algebra of a fixed affine Weyl group.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    group: AffineWeylGroup,
}

impl HeckeAlgebra {
    pub fn new(group: AffineWeylGroup) -> Self {
        Self { group }
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.group
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::basis(self.group.identity())
    }

    pub fn t_basis_element(&self, w: AffineElement) -> HeckeElement {
        HeckeElement::basis(w)
    }

    pub fn generator(&self, i: usize) -> HeckeElement {
        HeckeElement::basis(self.group.generators()[i].clone())
    }

    /// `x * E_{g_i}`: `E_{ws}` if the length goes up, else `q E_{ws} + (q - 1) E_w`.
    pub fn mul_generator_right(&self, x: &HeckeElement, i: usize) -> HeckeElement {
        let q = LaurentPoly::q();
        let q_minus_one = &q - &LaurentPoly::one();
        let mut out = HeckeElement::zero();
        for (w, c) in &x.terms {
            let ws = self.group.right_mul_generator(w, i);
            if self.group.length(&ws) > self.group.length(w) {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, &(c * &q));
                out.add_term(w.clone(), &(c * &q_minus_one));
            }
        }
        out
    }

    /// `x * E_g^{-1}` with `E_g^{-1} = q^{-1} E_g + (q^{-1} - 1)`.
    pub fn mul_generator_inverse_right(&self, x: &HeckeElement, i: usize) -> HeckeElement {
        let q_inv = LaurentPoly::q_pow(-1);
        let shifted = self.mul_generator_right(x, i).scale(&q_inv);
        shifted.add(&x.scale(&(&q_inv - &LaurentPoly::one())))
    }

    /// `x * E_o` for a length-zero element `o`.
    fn mul_length_zero_right(&self, x: &HeckeElement, o: &AffineElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in &x.terms {
            out.add_term(self.group.multiply(w, o), c);
        }
        out
    }

    /// `x * E_w`, along a reduced word of `w`.
    pub fn mul_basis_right(&self, x: &HeckeElement, w: &AffineElement) -> HeckeElement {
        let (word, o) = self.group.decompose(w);
        let mut acc = x.clone();
        for &i in &word {
            acc = self.mul_generator_right(&acc, i);
        }
        self.mul_length_zero_right(&acc, &self.group.omega()[o])
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in &b.terms {
            let prod = self.mul_basis_right(a, w).scale(c);
            out = out.add(&prod);
        }
        out
    }

    /// `E_w^{-1} = E_o^{-1} E_{g_k}^{-1} ... E_{g_1}^{-1}` for `w = g_1 ... g_k o`.
    pub fn invert_basis_element(&self, w: &AffineElement) -> HeckeElement {
        let (word, o) = self.group.decompose(w);
        let o_inv = self.group.inverse(&self.group.omega()[o]);
        let mut acc = HeckeElement::basis(o_inv);
        for &i in word.iter().rev() {
            acc = self.mul_generator_inverse_right(&acc, i);
        }
        acc
    }

    pub fn is_dominant(&self, y: &[i64]) -> bool {
        let datum = self.group.datum();
        (0..datum.rank()).all(|i| {
            datum.simple_root(i).iter().zip(y).map(|(a, b)| a * b).sum::<i64>() >= 0
        })
    }

    /// `t_y = v^{-<y, 2 rho_{Q,n}>} E_{y1} E_{y2}^{-1}` for a given decomposition
    /// `y = y1 - y2` into dominant elements of `Y_{Q,n}`.
    pub fn bernstein_t_with(&self, y1: &[i64], y2: &[i64]) -> Result<HeckeElement> {
        let lattice = self.group.cover().y_qn();
        for z in [y1, y2] {
            if !lattice.contains_i64(z) {
                return Err(Error::Integrality(format!("{z:?} is not in Y_{{Q,n}}")));
            }
            if !self.is_dominant(z) {
                return Err(Error::InvalidArgument(format!("{z:?} is not dominant")));
            }
        }
        let y: Vec<i64> = y1.iter().zip(y2).map(|(a, b)| a - b).collect();
        let shift = self.group.cover().two_rho_qn_pairing(&y)?;
        let e1 = HeckeElement::basis(self.group.translation(y1.to_vec()));
        let inv = self.invert_basis_element(&self.group.translation(y2.to_vec()));
        Ok(self.multiply(&e1, &inv).scale(&LaurentPoly::v_pow(-shift)))
    }

    /// `t_y`, using a short dominant `y2` with `y + y2` dominant.
    pub fn bernstein_t(&self, y: &[i64]) -> Result<HeckeElement> {
        let y2 = self.dominant_shift(y)?;
        let y1: Vec<i64> = y.iter().zip(&y2).map(|(a, b)| a + b).collect();
        self.bernstein_t_with(&y1, &y2)
    }

    /// A dominant `z` in `Y_{Q,n}` with `y + z` dominant, of small length.
    pub fn dominant_shift(&self, y: &[i64]) -> Result<Vec<i64>> {
        let cover = self.group.cover();
        if !cover.y_qn().contains_i64(y) {
            return Err(Error::Integrality(format!("{y:?} is not in Y_{{Q,n}}")));
        }
        if self.is_dominant(y) {
            return Ok(vec![0; y.len()]);
        }
        let basis = cover.y_qn().basis_i64();
        let r = y.len();
        let mut best: Option<(u64, Vec<i64>)> = None;
        if r <= 4 {
            let bound = 3i64;
            let mut coeffs = vec![-bound; r];
            loop {
                let z: Vec<i64> = (0..r)
                    .map(|k| (0..r).map(|j| coeffs[j] * basis[j][k]).sum())
                    .collect();
                let yz: Vec<i64> = y.iter().zip(&z).map(|(a, b)| a + b).collect();
                if self.is_dominant(&z) && self.is_dominant(&yz) {
                    let l = self.group.length(&self.group.translation(z.clone()));
                    if best.as_ref().is_none_or(|(bl, _)| l < *bl) {
                        best = Some((l, z));
                    }
                }
                let mut k = 0;
                while k < r {
                    coeffs[k] += 1;
                    if coeffs[k] <= bound {
                        break;
                    }
                    coeffs[k] = -bound;
                    k += 1;
                }
                if k == r {
                    break;
                }
            }
        }
        if let Some((_, z)) = best {
            return Ok(z);
        }
        // n * 2 rho^vee pairs to 2n with every simple root
        let n = cover.n() as i64;
        let d: Vec<i64> = cover.base().two_rho_check().iter().map(|c| c * n).collect();
        let mut z = d.clone();
        loop {
            let yz: Vec<i64> = y.iter().zip(&z).map(|(a, b)| a + b).collect();
            if self.is_dominant(&yz) {
                return Ok(z);
            }
            z = z.iter().zip(&d).map(|(a, b)| a + b).collect();
        }
    }

    /// Evaluates a one-dimensional character on an algebra element.
    pub fn apply_character(&self, chi: &HeckeCharacter, h: &HeckeElement) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (w, c) in &h.terms {
            out += &(c * &chi.value(&self.group, w));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover_datum::CoverDatum;

    fn algebra(l: char, r: usize, n: u64) -> HeckeAlgebra {
        HeckeAlgebra::new(AffineWeylGroup::new(CoverDatum::from_type(l, r, n).unwrap()).unwrap())
    }

    #[test]
    fn quadratic_relation() {
        let h = algebra('A', 1, 1);
        let s = h.generator(1);
        let q = LaurentPoly::q();
        let expected = h
            .one()
            .scale(&q)
            .add(&s.scale(&(&q - &LaurentPoly::one())));
        assert_eq!(h.multiply(&s, &s), expected);
    }

    #[test]
    fn unit_and_inverse() {
        let h = algebra('B', 2, 1);
        let w = h.group().from_word(&[0, 2, 1], 0);
        let e = h.t_basis_element(w.clone());
        assert_eq!(h.multiply(&h.one(), &e), e);
        assert_eq!(h.multiply(&h.invert_basis_element(&w), &e), h.one());
        assert_eq!(h.multiply(&e, &h.invert_basis_element(&w)), h.one());
        assert_eq!(h.invert_basis_element(&h.group().identity()), h.one());
    }

    #[test]
    fn bernstein_zero_is_unit() {
        let h = algebra('A', 1, 3);
        assert_eq!(h.bernstein_t(&[0]).unwrap(), h.one());
    }
}
