//! Whittaker dimensions of one-dimensional discrete series: the permutation
//! character of `W` on `Y / nY`, linear characters of `W`, and the closed forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::affine_weyl::AffineWeylGroup;
use crate::cover_datum::CoverDatum;
use crate::error::{Error, Result};
use crate::exact_algebra::{count_from_divisors, smith_normal_form};
use crate::hecke_algebra::{discrete_series_characters, HeckeCharacter};
use crate::root_datum::{enumerate_weyl_group, RootDatum, TypeLetter, WeylElement, DEFAULT_WEYL_CAP};

/// A character `W -> {1, -1}`, given by its values on simple reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearWeylCharacter {
    signs: Vec<i64>,
    label: String,
}

impl LinearWeylCharacter {
    /// Checks `+-1` values that agree on nodes joined by a simple bond.
    pub fn from_signs(datum: &RootDatum, signs: Vec<i64>) -> Result<Self> {
        let r = datum.rank();
        if signs.len() != r || signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::InvalidCharacter(format!("{signs:?} is not one sign per simple reflection")));
        }
        let c = datum.cartan();
        for i in 0..r {
            for j in 0..r {
                if c[i][j] * c[j][i] == 1 && signs[i] != signs[j] {
                    return Err(Error::InvalidCharacter(format!(
                        "nodes {} and {} are joined by a simple bond but get different signs",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let label = Self::label_for(datum, &signs);
        Ok(Self { signs, label })
    }

    pub fn trivial(datum: &RootDatum) -> Self {
        Self::from_signs(datum, vec![1; datum.rank()]).expect("constant signs")
    }

    pub fn sign(datum: &RootDatum) -> Self {
        Self::from_signs(datum, vec![-1; datum.rank()]).expect("constant signs")
    }

    /// Every linear character: one sign per root length.
    pub fn all(datum: &RootDatum) -> Vec<Self> {
        let long: Vec<bool> = datum.node_norms().iter().map(|&m| m == datum.max_norm()).collect();
        let two_lengths = long.iter().any(|&l| !l);
        let mut out = Vec::new();
        for a in [-1i64, 1] {
            for b in [-1i64, 1] {
                if !two_lengths && a != b {
                    continue;
                }
                let signs = long.iter().map(|&l| if l { a } else { b }).collect();
                out.push(Self::from_signs(datum, signs).expect("constant on root lengths"));
            }
        }
        out
    }

    fn label_for(datum: &RootDatum, signs: &[i64]) -> String {
        if signs.iter().all(|&s| s == 1) {
            return "trivial".into();
        }
        if signs.iter().all(|&s| s == -1) {
            return "sign".into();
        }
        let long_negative = datum
            .node_norms()
            .iter()
            .zip(signs)
            .any(|(&m, &s)| m == datum.max_norm() && s == -1);
        if long_negative { "sign_long" } else { "sign_short" }.into()
    }

    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    /// `trivial`, `sign`, or `sign_long` / `sign_short` for the character that is
    /// `-1` exactly on the simple reflections of that root length.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn value(&self, datum: &RootDatum, w: &WeylElement) -> i64 {
        datum.reduced_word(w).iter().map(|&i| self.signs[i]).product()
    }

    /// The same character with the values on long and short simple reflections exchanged.
    pub fn swap_lengths(&self, datum: &RootDatum) -> Self {
        let long: Vec<bool> = datum.node_norms().iter().map(|&m| m == datum.max_norm()).collect();
        let on_long = long.iter().zip(&self.signs).find(|(l, _)| **l).map_or(1, |(_, s)| *s);
        let on_short = long.iter().zip(&self.signs).find(|(l, _)| !**l).map_or(on_long, |(_, s)| *s);
        let signs = long.iter().map(|&l| if l { on_short } else { on_long }).collect();
        Self::from_signs(datum, signs).expect("constant on root lengths")
    }
}

impl fmt::Display for LinearWeylCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// `|{y in Y/nY : w y = y}|`, from the Smith form of `w - 1`.
pub fn fixed_point_count(w: &WeylElement, n: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let snf = smith_normal_form(&w.minus_identity());
    let mut divisors: Vec<BigInt> = snf.elementary_divisors();
    divisors.resize(w.rank(), BigInt::from(0));
    count_from_divisors(&divisors, n)
        .to_u128()
        .ok_or_else(|| Error::InvalidArgument("fixed-point count overflows u128".into()))
}

/// Per-element data for Burnside sums over `W`, independent of `n`.
#[derive(Clone, Debug)]
pub struct BurnsideData {
    divisors: Vec<Vec<BigInt>>,
    words: Vec<Vec<usize>>,
}

impl BurnsideData {
    pub fn new(datum: &RootDatum, cap: u64) -> Result<Self> {
        let elements = enumerate_weyl_group(datum, cap)?;
        let mut divisors = Vec::with_capacity(elements.len());
        let mut words = Vec::with_capacity(elements.len());
        for w in &elements {
            let mut d = smith_normal_form(&w.minus_identity()).elementary_divisors();
            d.resize(w.rank(), BigInt::from(0));
            divisors.push(d);
            words.push(datum.reduced_word(w));
        }
        Ok(Self { divisors, words })
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    /// `(1/|W|) sum_w Fix_n(w) eps(w) chi(w)` for each character; errors unless integral.
    pub fn multiplicities(&self, n: u64, characters: &[LinearWeylCharacter]) -> Result<Vec<u64>> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let mut sums = vec![0i128; characters.len()];
        for (d, word) in self.divisors.iter().zip(&self.words) {
            let fix = count_from_divisors(d, n)
                .to_i128()
                .ok_or_else(|| Error::InvalidArgument("fixed-point count overflows i128".into()))?;
            let eps: i128 = if word.len() % 2 == 0 { 1 } else { -1 };
            for (sum, chi) in sums.iter_mut().zip(characters) {
                let x: i64 = word.iter().map(|&i| chi.signs[i]).product();
                *sum += fix * eps * x as i128;
            }
        }
        let order = self.order() as i128;
        sums.into_iter()
            .map(|s| {
                if s < 0 || s % order != 0 {
                    return Err(Error::NonIntegral {
                        num: s.to_string(),
                        den: order.to_string(),
                    });
                }
                Ok((s / order) as u64)
            })
            .collect()
    }
}

/// Multiplicities of several characters in `eta_X (x) eps_W` for an oasitic cover.
pub fn whittaker_multiplicities(
    cover: &CoverDatum,
    characters: &[LinearWeylCharacter],
    cap: u64,
) -> Result<Vec<u64>> {
    cover.require_oasitic()?;
    BurnsideData::new(cover.base(), cap)?.multiplicities(cover.n(), characters)
}

/// Multiplicity of `chi_W` in `eta_X (x) eps_W`, by a Burnside sum over `W`.
pub fn whittaker_dimension_bruteforce(cover: &CoverDatum, chi_w: &LinearWeylCharacter) -> Result<u64> {
    whittaker_dimension_bruteforce_with_cap(cover, chi_w, DEFAULT_WEYL_CAP)
}

pub fn whittaker_dimension_bruteforce_with_cap(
    cover: &CoverDatum,
    chi_w: &LinearWeylCharacter,
    cap: u64,
) -> Result<u64> {
    Ok(whittaker_multiplicities(cover, std::slice::from_ref(chi_w), cap)?[0])
}

/// Which closed-form polynomial applies to a discrete-series character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `prod_j (n + m_j) / |W|`.
    Steinberg,
    /// `(n - 1) prod_{j=1}^{r-1} (n + 2j - 1) / |W|`.
    Hyperoctahedral,
    /// `(n - 1)(n - 5)(n + 1)(n + 5) / 1152`.
    F4,
    /// `(n - 1)(n + 1) / 12`.
    G2,
}

pub fn closed_form_kind(cover: &CoverDatum, sigma: &HeckeCharacter) -> Result<ClosedForm> {
    let letter = cover.base().spec().letter();
    let xi = sigma.xi();
    if sigma.is_steinberg() {
        return Ok(ClosedForm::Steinberg);
    }
    let unsupported = || Error::UnsupportedCharacter(sigma.name());
    match (letter, xi.get(..2).ok_or_else(unsupported)?) {
        (_, [-1, -1]) => Ok(ClosedForm::Steinberg),
        (TypeLetter::B | TypeLetter::C, [-1, 1]) => Ok(ClosedForm::Hyperoctahedral),
        (TypeLetter::F, [-1, 1]) => Ok(ClosedForm::F4),
        (TypeLetter::G, [-1, 1]) => Ok(ClosedForm::G2),
        _ => Err(unsupported()),
    }
}

/// The closed-form polynomial for `sigma`, divided by `|W|` exactly.
pub fn whittaker_dimension_closed_form(cover: &CoverDatum, sigma: &HeckeCharacter) -> Result<u64> {
    let group = AffineWeylGroup::new(cover.clone())?;
    let listed = discrete_series_characters(&group)?;
    if !listed.contains(sigma) {
        return Err(Error::UnsupportedCharacter(sigma.name()));
    }
    let datum = cover.base();
    let n = BigInt::from(cover.n());
    let r = datum.rank() as i64;
    let numerator: BigInt = match closed_form_kind(cover, sigma)? {
        ClosedForm::Steinberg => datum.exponents().iter().map(|&m| &n + m).product(),
        ClosedForm::Hyperoctahedral => (1..r).map(|j| &n + (2 * j - 1)).product::<BigInt>() * (&n - 1),
        ClosedForm::F4 => (&n - 1) * (&n - 5) * (&n + 1) * (&n + 5),
        ClosedForm::G2 => (&n - 1) * (&n + 1),
    };
    let order = BigInt::from(datum.weyl_order());
    if &numerator % &order != BigInt::from(0) || numerator < BigInt::from(0) {
        return Err(Error::NonIntegral {
            num: numerator.to_string(),
            den: order.to_string(),
        });
    }
    (numerator / order)
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("closed form exceeds u64".into()))
}

/// Restriction of `sigma` to the finite generators at `q = 1`: `-1` where `xi = -1`, `+1` where `xi = q`.
pub fn restricted_signs(cover: &CoverDatum, sigma: &HeckeCharacter) -> Result<LinearWeylCharacter> {
    LinearWeylCharacter::from_signs(cover.base(), sigma.finite_signs())
}

/// Largest `n` probed when calibrating a character convention.
pub const CALIBRATION_LIMIT: u64 = 30;

/// The linear character of `W` attached to `sigma`.
///
/// The two candidates are the restriction itself and the restriction with the
/// long and short values exchanged. They are told apart by comparing Burnside
/// sums with the closed form at the smallest oasitic `n > 1` of the type where
/// exactly one candidate matches; a candidate that never matches is an error.
pub fn resolve_character_convention(cover: &CoverDatum, sigma: &HeckeCharacter) -> Result<LinearWeylCharacter> {
    let direct = restricted_signs(cover, sigma)?;
    if direct == direct.swap_lengths(cover.base()) {
        return Ok(direct);
    }
    resolve_with(&BurnsideData::new(cover.base(), DEFAULT_WEYL_CAP)?, cover, sigma)
}

fn resolve_with(data: &BurnsideData, cover: &CoverDatum, sigma: &HeckeCharacter) -> Result<LinearWeylCharacter> {
    let direct = restricted_signs(cover, sigma)?;
    let swapped = direct.swap_lengths(cover.base());
    if direct == swapped {
        return Ok(direct);
    }
    let mut tied = false;
    for n in 2..=CALIBRATION_LIMIT {
        let probe = CoverDatum::new(cover.base().clone(), n, cover.q_short())?;
        if !probe.is_oasitic() {
            continue;
        }
        let probe_sigma = HeckeCharacter::from_xi(&AffineWeylGroup::new(probe.clone())?, sigma.xi())?;
        let target = whittaker_dimension_closed_form(&probe, &probe_sigma)?;
        let m = data.multiplicities(n, &[direct.clone(), swapped.clone()])?;
        match (m[0] == target, m[1] == target) {
            (true, true) => tied = true,
            (true, false) => return Ok(direct),
            (false, true) => return Ok(swapped),
            (false, false) => {
                return Err(Error::Calibration(format!(
                    "{} on {} at n = {n}: candidates give {} and {}, closed form {target}",
                    sigma.name(),
                    cover.base().spec(),
                    m[0],
                    m[1]
                )))
            }
        }
    }
    if tied {
        // both candidates reproduce the closed form at every probed n
        return Ok(direct);
    }
    Err(Error::Calibration(format!(
        "{} on {}: no oasitic n <= {CALIBRATION_LIMIT}",
        sigma.name(),
        cover.base().spec()
    )))
}

/// One row of a Whittaker table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerReport {
    pub cover: String,
    pub character: String,
    pub weyl_character: String,
    /// `None` when `|W|` exceeds the enumeration cap.
    pub brute_force_dimension: Option<u64>,
    pub closed_form_dimension: u64,
}

impl WhittakerReport {
    pub fn agrees(&self) -> Option<bool> {
        self.brute_force_dimension.map(|b| b == self.closed_form_dimension)
    }
}

/// Rows for every discrete-series character of an oasitic cover.
pub fn whittaker_table(cover: &CoverDatum, cap: u64) -> Result<Vec<WhittakerReport>> {
    cover.require_oasitic()?;
    let group = AffineWeylGroup::new(cover.clone())?;
    let data = if cover.base().weyl_order() <= cap {
        Some(BurnsideData::new(cover.base(), cap)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    for sigma in discrete_series_characters(&group)? {
        let closed = whittaker_dimension_closed_form(cover, &sigma)?;
        let (weyl_character, brute) = if let Some(data) = &data {
            let chi = resolve_with(data, cover, &sigma)?;
            let b = data.multiplicities(cover.n(), std::slice::from_ref(&chi))?[0];
            (chi.label().to_string(), Some(b))
        } else {
            (restricted_signs(cover, &sigma)?.label().to_string(), None)
        };
        rows.push(WhittakerReport {
            cover: format!("{} n={}", cover.base().spec(), cover.n()),
            character: sigma.name(),
            weyl_character,
            brute_force_dimension: brute,
            closed_form_dimension: closed,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_points_in_rank_one() {
        let d = RootDatum::from_type('A', 1).unwrap();
        let s = d.simple_reflection(0);
        assert_eq!(fixed_point_count(&s, 5).unwrap(), 1);
        assert_eq!(fixed_point_count(&s, 4).unwrap(), 2);
        assert_eq!(fixed_point_count(&d.identity(), 5).unwrap(), 5);
    }

    #[test]
    fn g2_values() {
        let c = CoverDatum::from_type('G', 2, 5).unwrap();
        let d = c.base();
        assert_eq!(whittaker_dimension_bruteforce(&c, &LinearWeylCharacter::sign(d)).unwrap(), 5);
        let rows = whittaker_table(&c, DEFAULT_WEYL_CAP).unwrap();
        let dims: Vec<(u64, Option<u64>)> =
            rows.iter().map(|r| (r.closed_form_dimension, r.brute_force_dimension)).collect();
        assert_eq!(dims, vec![(5, Some(5)), (2, Some(2))]);
    }

    #[test]
    fn characters_respect_bonds() {
        let d = RootDatum::from_type('A', 2).unwrap();
        assert!(LinearWeylCharacter::from_signs(&d, vec![1, -1]).is_err());
        assert_eq!(LinearWeylCharacter::all(&d).len(), 2);
        assert_eq!(LinearWeylCharacter::all(&RootDatum::from_type('F', 4).unwrap()).len(), 4);
    }
}
