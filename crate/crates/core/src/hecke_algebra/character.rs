//! One-dimensional characters of the affine Hecke algebra.

use std::fmt;

use crate::affine_weyl::{AffineElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::exact_algebra::LaurentPoly;
use crate::root_datum::TypeLetter;

/// The two roots of `(x - q)(x + 1)`, the possible images of `E_s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorValue {
    Q,
    MinusOne,
}

impl GeneratorValue {
    pub fn as_poly(self) -> LaurentPoly {
        match self {
            GeneratorValue::Q => LaurentPoly::q(),
            GeneratorValue::MinusOne => LaurentPoly::from_int(-1),
        }
    }

    /// `1` for `q`, `-1` for `-1`.
    pub fn sign(self) -> i64 {
        match self {
            GeneratorValue::Q => 1,
            GeneratorValue::MinusOne => -1,
        }
    }

    fn from_sign(s: i64) -> Result<Self> {
        match s {
            1 => Ok(GeneratorValue::Q),
            -1 => Ok(GeneratorValue::MinusOne),
            _ => Err(Error::InvalidCharacter(format!("sign {s} is neither 1 nor -1"))),
        }
    }
}

/// Odd-braid classes of generators in labelling order `xi_1, xi_2, ...`.
///
/// With three classes (affine type C) the order is: the class bonded to the
/// affine node, the remaining finite class, the affine node. With two classes
/// the class of the affine node comes first.
pub fn xi_classes(group: &AffineWeylGroup) -> Vec<Vec<usize>> {
    let classes = group.odd_braid_classes();
    let affine = classes.iter().position(|c| c.contains(&0)).expect("generator 0 is classified");
    match classes.len() {
        3 => {
            let adjacent = (0..3)
                .find(|&k| k != affine && classes[k].iter().any(|&j| group.braid_order(0, j) != Some(2)))
                .expect("the affine node is bonded to a finite node");
            let end = (0..3).find(|&k| k != affine && k != adjacent).expect("three classes");
            vec![classes[adjacent].clone(), classes[end].clone(), classes[affine].clone()]
        }
        _ => {
            let mut out = vec![classes[affine].clone()];
            out.extend(classes.iter().enumerate().filter(|(k, _)| *k != affine).map(|(_, c)| c.clone()));
            out
        }
    }
}

/// A one-dimensional character, trivial on the length-zero elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeckeCharacter {
    values: Vec<GeneratorValue>,
    xi: Vec<i64>,
}

impl HeckeCharacter {
    /// Checks that the values are constant on odd-braid classes and on orbits of
    /// the length-zero elements acting by conjugation.
    pub fn from_generator_values(group: &AffineWeylGroup, values: Vec<GeneratorValue>) -> Result<Self> {
        if values.len() != group.num_generators() {
            return Err(Error::InvalidCharacter(format!(
                "{} values for {} generators",
                values.len(),
                group.num_generators()
            )));
        }
        let classes = xi_classes(group);
        for c in &classes {
            if c.iter().any(|&i| values[i] != values[c[0]]) {
                return Err(Error::InvalidCharacter(format!(
                    "values differ on generators {c:?} joined by odd braid relations"
                )));
            }
        }
        for o in group.omega() {
            let o_inv = group.inverse(o);
            for (i, g) in group.generators().iter().enumerate() {
                let conj = group.multiply(&group.multiply(o, g), &o_inv);
                let j = group
                    .generators()
                    .iter()
                    .position(|h| h == &conj)
                    .expect("length-zero elements permute the generators");
                if values[i] != values[j] {
                    return Err(Error::InvalidCharacter(format!(
                        "values differ on generators {i} and {j}, conjugate under a length-zero element"
                    )));
                }
            }
        }
        let xi = classes.iter().map(|c| values[c[0]].sign()).collect();
        Ok(Self { values, xi })
    }

    /// From one sign per class in `xi_classes` order; `1` means `q`.
    pub fn from_xi(group: &AffineWeylGroup, xi: &[i64]) -> Result<Self> {
        let classes = xi_classes(group);
        if xi.len() != classes.len() {
            return Err(Error::InvalidCharacter(format!(
                "{} signs for {} braid classes",
                xi.len(),
                classes.len()
            )));
        }
        let mut values = vec![GeneratorValue::Q; group.num_generators()];
        for (c, &s) in classes.iter().zip(xi) {
            let v = GeneratorValue::from_sign(s)?;
            for &i in c {
                values[i] = v;
            }
        }
        Self::from_generator_values(group, values)
    }

    /// `E_s -> -1` for every generator.
    pub fn steinberg(group: &AffineWeylGroup) -> Self {
        Self::from_generator_values(group, vec![GeneratorValue::MinusOne; group.num_generators()])
            .expect("constant values are a character")
    }

    /// `E_s -> q` for every generator.
    pub fn trivial(group: &AffineWeylGroup) -> Self {
        Self::from_generator_values(group, vec![GeneratorValue::Q; group.num_generators()])
            .expect("constant values are a character")
    }

    pub fn generator_values(&self) -> &[GeneratorValue] {
        &self.values
    }

    pub fn value_on_generator(&self, i: usize) -> LaurentPoly {
        self.values[i].as_poly()
    }

    /// Signs per class in `xi_classes` order.
    pub fn xi(&self) -> &[i64] {
        &self.xi
    }

    pub fn is_steinberg(&self) -> bool {
        self.values.iter().all(|v| *v == GeneratorValue::MinusOne)
    }

    /// Signs on the finite generators `s_1, ..., s_r`.
    pub fn finite_signs(&self) -> Vec<i64> {
        self.values[1..].iter().map(|v| v.sign()).collect()
    }

    /// `(a, b)` with `sigma(E_w) = (-1)^a q^b`.
    pub fn value_exponents(&self, group: &AffineWeylGroup, w: &AffineElement) -> (u64, u64) {
        let (word, _) = group.decompose(w);
        let b = word.iter().filter(|&&i| self.values[i] == GeneratorValue::Q).count() as u64;
        (word.len() as u64 - b, b)
    }

    pub fn value(&self, group: &AffineWeylGroup, w: &AffineElement) -> LaurentPoly {
        let (a, b) = self.value_exponents(group, w);
        LaurentPoly::q_pow(b as i64).scale(&num_rational::BigRational::from_integer(
            if a % 2 == 0 { 1 } else { -1 }.into(),
        ))
    }

    /// `steinberg`, `trivial`, or the sign pattern such as `xi(-1,1,-1)`.
    pub fn name(&self) -> String {
        if self.is_steinberg() {
            "steinberg".into()
        } else if self.values.iter().all(|v| *v == GeneratorValue::Q) {
            "trivial".into()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for HeckeCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.xi.iter().map(i64::to_string).collect();
        write!(f, "xi({})", parts.join(","))
    }
}

/// The one-dimensional discrete-series characters of an oasitic cover,
/// Steinberg first.
pub fn discrete_series_characters(group: &AffineWeylGroup) -> Result<Vec<HeckeCharacter>> {
    group.cover().require_oasitic()?;
    let spec = group.datum().spec();
    let classes = xi_classes(group).len();
    let patterns: Vec<Vec<i64>> = match classes {
        1 => vec![],
        2 if spec.letter() == TypeLetter::A => vec![],
        2 => vec![vec![-1, 1]],
        3 => {
            let mut p = vec![vec![-1, -1, 1], vec![-1, 1, -1]];
            if spec.rank() >= 4 {
                p.push(vec![-1, 1, 1]);
            }
            p
        }
        k => return Err(Error::UnsupportedCharacter(format!("{k} braid classes"))),
    };
    let mut out = vec![HeckeCharacter::steinberg(group)];
    for p in patterns {
        out.push(HeckeCharacter::from_xi(group, &p)?);
    }
    Ok(out)
}
