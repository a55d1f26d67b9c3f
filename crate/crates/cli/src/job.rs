//! Parsed and validated job specifications.

use std::str::FromStr;

use hecke_covers::affine_weyl::AffineWeylGroup;
use hecke_covers::cover_datum::CoverDatum;
use hecke_covers::hecke_algebra::HeckeCharacter;
use hecke_covers::root_datum::{CartanSpec, RootDatum};
use hecke_covers::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The cover every command starts from.
#[derive(Clone, Debug)]
pub struct CoverSpec {
    pub spec: CartanSpec,
    pub n: u64,
    pub q_short: u64,
}

impl CoverSpec {
    pub fn new(letter: char, rank: usize, n: u64, q_short: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("--n must be at least 1".into()));
        }
        if q_short == 0 {
            return Err(Error::InvalidArgument("--q-short must be at least 1".into()));
        }
        let spec = CartanSpec::from_parts(letter.to_ascii_uppercase(), rank)?;
        Ok(Self { spec, n, q_short })
    }

    pub fn cover(&self) -> Result<CoverDatum> {
        CoverDatum::new(RootDatum::new(self.spec), self.n, self.q_short)
    }
}

/// Which Hecke character `--sigma` names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaSpec {
    Steinberg,
    Trivial,
    Xi(Vec<i64>),
}

impl SigmaSpec {
    pub fn resolve(&self, group: &AffineWeylGroup) -> Result<HeckeCharacter> {
        match self {
            SigmaSpec::Steinberg => Ok(HeckeCharacter::steinberg(group)),
            SigmaSpec::Trivial => Ok(HeckeCharacter::trivial(group)),
            SigmaSpec::Xi(xi) => HeckeCharacter::from_xi(group, xi),
        }
    }
}

impl FromStr for SigmaSpec {
    type Err = Error;

    /// `steinberg`, `trivial`, or signs such as `-1,1,-1` or `xi(-1,1,-1)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "steinberg" | "st" => return Ok(SigmaSpec::Steinberg),
            "trivial" => return Ok(SigmaSpec::Trivial),
            _ => {}
        }
        let inner = t.strip_prefix("xi(").and_then(|r| r.strip_suffix(')')).unwrap_or(&t);
        let signs = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidCharacter(format!("cannot parse sigma {s:?}")))?;
        if signs.is_empty() || signs.iter().any(|x| x.abs() != 1) {
            return Err(Error::InvalidCharacter(format!("sigma {s:?} must be a list of 1 and -1")));
        }
        Ok(SigmaSpec::Xi(signs))
    }
}

/// An exact rational from `7/2`, `4`, `0.25` or `1e-8`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("cannot parse {s:?} as a rational number"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = if digits == "-" || digits == "+" { return Err(bad()) } else { digits };
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let scale = BigRational::from_integer(ten.pow(shift.unsigned_abs()));
    let value = BigRational::from_integer(num);
    Ok(if shift >= 0 { value * scale } else { value / scale })
}

/// Inputs of `formal-degree`, checked for consistency.
#[derive(Clone, Debug)]
pub struct DegreeJob {
    pub q: BigRational,
    pub truncation: usize,
    pub tol: BigRational,
    pub sigma: SigmaSpec,
}

impl DegreeJob {
    pub fn new(q: Option<&str>, truncation: Option<usize>, tol: Option<&str>, sigma: &str) -> Result<Self> {
        let q = q.ok_or_else(|| Error::InvalidArgument("formal-degree requires --q".into()))?;
        let q = parse_rational(q)?;
        if q <= BigRational::one() {
            return Err(Error::InvalidArgument(format!("--q {q} must exceed 1")));
        }
        let truncation = truncation.ok_or_else(|| Error::InvalidArgument("formal-degree requires --L".into()))?;
        let tol = match tol {
            Some(t) => parse_rational(t)?,
            None => hecke_covers::formal_degree::default_tolerance(),
        };
        if tol <= BigRational::zero() {
            return Err(Error::InvalidArgument("--tol must be positive".into()));
        }
        Ok(Self { q, truncation, tol, sigma: sigma.parse()? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rational("4").unwrap(), rat(4, 1));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("1e-8").unwrap(), rat(1, 100_000_000));
        assert_eq!(parse_rational("2.5E1").unwrap(), rat(25, 1));
        for bad in ["", "1/0", "x", ".", "1e", "-"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn sigmas() {
        assert_eq!("Steinberg".parse::<SigmaSpec>().unwrap(), SigmaSpec::Steinberg);
        assert_eq!("xi(-1,1,-1)".parse::<SigmaSpec>().unwrap(), SigmaSpec::Xi(vec![-1, 1, -1]));
        assert_eq!("-1, 1".parse::<SigmaSpec>().unwrap(), SigmaSpec::Xi(vec![-1, 1]));
        assert!("2,1".parse::<SigmaSpec>().is_err());
    }

    #[test]
    fn degree_jobs_need_q_and_truncation() {
        assert!(DegreeJob::new(None, Some(4), None, "steinberg").is_err());
        assert!(DegreeJob::new(Some("4"), None, None, "steinberg").is_err());
        assert!(DegreeJob::new(Some("1"), Some(4), None, "steinberg").is_err());
        assert!(DegreeJob::new(Some("4"), Some(4), Some("0"), "steinberg").is_err());
        assert!(DegreeJob::new(Some("4"), Some(4), None, "steinberg").is_ok());
    }
}
