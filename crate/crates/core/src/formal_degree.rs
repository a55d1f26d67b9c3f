//! Formal degrees of one-dimensional discrete-series characters as weighted
//! Poincaré series over `W~_ex`, with convergence certificates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::affine_weyl::{enumerate_ball, AffineElement, AffineWeylGroup, LengthKind};
use crate::error::{Error, Result};
use crate::exact_algebra::{rational_pow, LaurentPoly};
use crate::hecke_algebra::{GeneratorValue, HeckeCharacter};
use crate::root_datum::RootDatum;

/// Default relative tolerance `10^-8` for the last contribution.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(100_000_000))
}

/// Truncated series `sum_{l(w) <= L} prod_{letters s} xi_s^2 / q`, grouped by length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSeries {
    pub q: BigRational,
    pub truncation: usize,
    /// `c_l`, the sum of the terms of length `l`.
    pub contributions: Vec<BigRational>,
    /// `S_l = c_0 + ... + c_l`.
    pub partial_sums: Vec<BigRational>,
    /// The same truncation accumulated on the cover side, term by term from
    /// `cover_side_term`.
    pub cover_side_partial_sums: Vec<BigRational>,
    /// Cover-side terms of the truncation grouped by `l_G` instead of the Coxeter length.
    pub g_graded_contributions: Vec<BigRational>,
}

impl DegreeSeries {
    /// `c_L / c_{L-1}`, once two contributions exist.
    pub fn last_ratio(&self) -> Option<BigRational> {
        let l = self.truncation;
        if l == 0 || self.contributions[l - 1].is_zero() {
            return None;
        }
        Some(&self.contributions[l] / &self.contributions[l - 1])
    }

    pub fn last_partial_sum(&self) -> &BigRational {
        &self.partial_sums[self.truncation]
    }

    /// `S_L + c_L r / (1 - r)` with `r` the last ratio, or `S_L` when `r >= 1` or undefined.
    pub fn limit_estimate(&self) -> BigRational {
        let s = self.last_partial_sum().clone();
        match self.last_ratio() {
            Some(r) if r < BigRational::one() => {
                let tail = &self.contributions[self.truncation] * &r / (BigRational::one() - &r);
                s + tail
            }
            _ => s,
        }
    }

    /// `c_L / S_L < tol` and `c_L / c_{L-1} < 1`.
    pub fn is_converged(&self, tol: &BigRational) -> bool {
        let c = &self.contributions[self.truncation];
        let relative = c / self.last_partial_sum();
        relative < *tol && self.last_ratio().is_some_and(|r| r < BigRational::one())
    }

    /// Both accumulations agree at every truncation.
    pub fn gradings_agree(&self) -> bool {
        self.partial_sums == self.cover_side_partial_sums
    }
}

/// `2 b - l` for `t_y`, `y` the primitive multiple in `Y_{Q,n}` of each fundamental
/// coweight, where `sigma(E_{t_y}) = (-1)^{l - b} q^b`.
///
/// The term of `t_{ky}` in the series is `q^{k (2b - l)}`, and the exponent is
/// additive on the dominant cone, so the series converges exactly when every
/// entry is negative.
pub fn ray_exponents(group: &AffineWeylGroup, chi: &HeckeCharacter) -> Result<Vec<i64>> {
    let datum = group.datum();
    let inv = datum.cartan_matrix().rational_inverse()?;
    let r = datum.rank();
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        // column i of the inverse Cartan matrix pairs to delta_{ij} with alpha_j
        let col: Vec<&BigRational> = (0..r).map(|k| &inv[k][i]).collect();
        let den = col.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let base: Vec<i64> = col
            .iter()
            .map(|x| {
                let v = (*x * BigRational::from_integer(den.clone())).to_integer();
                i64::try_from(v).expect("coweight coordinates fit in i64")
            })
            .collect();
        let mut y = base.clone();
        while !group.cover().y_qn().contains_i64(&y) {
            y = y.iter().zip(&base).map(|(a, b)| a + b).collect();
        }
        let (a, b) = chi.value_exponents(group, &group.translation(y));
        out.push(2 * b as i64 - (a + b) as i64);
    }
    Ok(out)
}

pub fn is_discrete_series(group: &AffineWeylGroup, chi: &HeckeCharacter) -> Result<bool> {
    Ok(ray_exponents(group, chi)?.iter().all(|&e| e < 0))
}

/// The truncated series for any character, without a convergence check.
pub fn weighted_poincare_series(
    group: &AffineWeylGroup,
    chi: &HeckeCharacter,
    q: &BigRational,
    truncation: usize,
) -> Result<DegreeSeries> {
    if *q <= BigRational::one() {
        return Err(Error::InvalidArgument(format!("q = {q} must exceed 1")));
    }
    let ball = enumerate_ball(group, truncation as u64, LengthKind::GQn);
    let mut q_letters = vec![0i64; ball.len()];
    let mut contributions = vec![BigRational::zero(); truncation + 1];
    let mut cover_contributions = vec![BigRational::zero(); truncation + 1];
    let max_lg = ball.iter().map(|e| e.length_g).max().unwrap_or(0) as usize;
    let mut g_graded = vec![BigRational::zero(); max_lg + 1];
    for (k, e) in ball.iter().enumerate() {
        if let Some((p, g)) = e.parent {
            q_letters[k] = q_letters[p] + i64::from(chi.generator_values()[g] == GeneratorValue::Q);
        }
        let l = e.length_gqn as usize;
        contributions[l] += rational_pow(q, 2 * q_letters[k] - l as i64);
        let cover_term = cover_side_term(group, chi, q, &e.element)?;
        g_graded[e.length_g as usize] += &cover_term;
        cover_contributions[l] += cover_term;
    }
    let running = |c: &[BigRational]| -> Vec<BigRational> {
        c.iter()
            .scan(BigRational::zero(), |acc, x| {
                *acc += x;
                Some(acc.clone())
            })
            .collect()
    };
    Ok(DegreeSeries {
        q: q.clone(),
        truncation,
        partial_sums: running(&contributions),
        cover_side_partial_sums: running(&cover_contributions),
        contributions,
        g_graded_contributions: g_graded,
    })
}

/// `sigma(e_w)` as `(sign, k)` meaning `sign * v^k`, computed on the cover side.
///
/// Left multiplication by finite simple reflections `s_a` with `<a, y> < 0` reaches
/// `s' w = z s''` with `z` dominant. Then
/// `sigma(e_w) = sigma(e_{s'})^{-1} sigma(e_z) sigma(e_{s''})`, where
/// `sigma(e_s) = sigma(E_s)` on `W` and `sigma(e_z) = v^{l_G(z) - l_GQn(z)} sigma(E_z)`
/// for dominant `z`. The `l_G` additivity this factorization needs is checked.
pub fn cover_side_value(
    group: &AffineWeylGroup,
    chi: &HeckeCharacter,
    w: &AffineElement,
) -> Result<(i64, i64)> {
    let datum = group.datum();
    let finite = |i: usize| chi.generator_values()[i + 1];
    let mut sign = 1i64;
    let mut v_exp = 0i64;
    let mut cur = w.clone();
    let mut letters = 0u64;
    while let Some(i) = (0..datum.rank()).find(|&i| {
        datum.simple_root(i).iter().zip(cur.translation()).map(|(a, b)| a * b).sum::<i64>() < 0
    }) {
        cur = group.left_mul_generator(i + 1, &cur);
        letters += 1;
        match finite(i) {
            GeneratorValue::Q => v_exp -= 2,
            GeneratorValue::MinusOne => sign = -sign,
        }
    }
    if group.length_g(&cur) != group.length_g(w) + letters {
        return Err(Error::Integrality(format!("l_G is not additive on s' w for {w}")));
    }
    let z = group.translation(cur.translation().to_vec());
    let s2 = cur.finite_part();
    if group.length_g(&cur) != group.length_g(&z) + u64::from(s2.length()) {
        return Err(Error::Integrality(format!("l_G is not additive on z s'' for {w}")));
    }
    for i in datum.reduced_word(s2) {
        match finite(i) {
            GeneratorValue::Q => v_exp += 2,
            GeneratorValue::MinusOne => sign = -sign,
        }
    }
    let (a, b) = chi.value_exponents(group, &z);
    if a % 2 == 1 {
        sign = -sign;
    }
    v_exp += 2 * b as i64 + group.length_g(&z) as i64 - group.length(&z) as i64;
    Ok((sign, v_exp))
}

/// `q^{-l_G(w)} sigma(e_w) sigma(e_{w^{-1}})`, the cover-side term of the series.
pub fn cover_side_term(
    group: &AffineWeylGroup,
    chi: &HeckeCharacter,
    q: &BigRational,
    w: &AffineElement,
) -> Result<BigRational> {
    let (s1, k1) = cover_side_value(group, chi, w)?;
    let (s2, k2) = cover_side_value(group, chi, &group.inverse(w))?;
    let k = k1 + k2 - 2 * group.length_g(w) as i64;
    if k % 2 != 0 {
        return Err(Error::Integrality(format!("odd power of v in the term of {w}")));
    }
    let term = rational_pow(q, k / 2);
    Ok(if s1 * s2 < 0 { -term } else { term })
}

/// `deg(pi_sigma)^{-1}` for the measure giving the Iwahori subgroup volume 1,
/// truncated at Coxeter length `L`. Characters whose series diverges are refused.
pub fn formal_degree_inverse(
    group: &AffineWeylGroup,
    chi: &HeckeCharacter,
    q: &BigRational,
    truncation: usize,
) -> Result<DegreeSeries> {
    if *q <= BigRational::one() {
        return Err(Error::InvalidArgument(format!("q = {q} must exceed 1")));
    }
    let rays = ray_exponents(group, chi)?;
    if let Some((i, e)) = rays.iter().enumerate().find(|(_, &e)| e >= 0) {
        return Err(Error::Divergent(format!(
            "{} is not square integrable: the translation along fundamental coweight {} has term q^{e} >= 1",
            chi.name(),
            i + 1
        )));
    }
    weighted_poincare_series(group, chi, q, truncation)
}

/// `q^{-|Phi+|} (1 - q^{-1})^r`.
pub fn canonical_measure_constant(datum: &RootDatum, q: &BigRational) -> Result<BigRational> {
    if *q <= BigRational::one() {
        return Err(Error::InvalidArgument(format!("q = {q} must exceed 1")));
    }
    let one = BigRational::one();
    let factor = &one - q.recip();
    Ok(rational_pow(q, -(datum.num_positive_roots() as i64)) * rational_pow(&factor, datum.rank() as i64))
}

/// `v^{-2|Phi+|} (1 - v^{-2})^r`, the same constant with `q = v^2` left formal.
pub fn canonical_measure_laurent(datum: &RootDatum) -> LaurentPoly {
    let factor = &LaurentPoly::one() - &LaurentPoly::q_pow(-1);
    &LaurentPoly::v_pow(-2 * datum.num_positive_roots() as i64) * &factor.pow(datum.rank() as u32)
}

/// `constant^{-1} * limit^{-1}`, refused unless the series has converged to `tol`.
pub fn degree_with_canonical_measure(
    series: &DegreeSeries,
    constant: &BigRational,
    tol: &BigRational,
) -> Result<BigRational> {
    if !series.is_converged(tol) {
        return Err(Error::NotConverged {
            truncation: series.truncation,
            ratio: series.last_ratio().map_or_else(|| "undefined".into(), |r| r.to_string()),
        });
    }
    if constant.is_zero() {
        return Err(Error::InvalidArgument("measure constant must be nonzero".into()));
    }
    Ok((constant * series.limit_estimate()).recip())
}
