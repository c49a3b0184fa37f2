//! Exact rational helpers shared by every engine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_i128(v: i128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn to_f64(r: &Rational) -> f64 {
    // Ratio<BigInt>::to_f64 scales correctly even when numerator and denominator overflow f64.
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders as `p/q`, always with an explicit denominator.
pub fn render(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, `p`, or a finite decimal literal such as `-2.5`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, digits)) = s.split_once('.') {
        let neg = whole.starts_with('-');
        let whole_abs = whole.trim_start_matches(['-', '+']);
        let whole_abs = if whole_abs.is_empty() { "0" } else { whole_abs };
        if !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let w: BigInt = whole_abs.parse().map_err(|_| bad())?;
        let d: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10), digits.len());
        let v = Rational::new(w * &scale + d, scale);
        return Ok(if neg { -v } else { v });
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Values of a size function rescaled to integers over a common denominator.
///
/// The fast exact engines accumulate `i128` numerators and divide once at the end.
#[derive(Debug, Clone)]
pub struct ScaledTable {
    pub numerators: Vec<i128>,
    pub denominator: BigInt,
}

impl ScaledTable {
    pub fn new(values: &[Rational]) -> Result<Self> {
        let denominator = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let numerators = values
            .iter()
            .map(|v| {
                (v * Rational::from_integer(denominator.clone()))
                    .to_integer()
                    .to_i128()
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScaledTable {
            numerators,
            denominator,
        })
    }

    /// Largest absolute numerator.
    pub fn max_abs(&self) -> i128 {
        self.numerators.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Fails unless `terms` additions of values up to `factor * max_abs` stay well inside `i128`.
    pub fn check_headroom(&self, terms_log2: u32, factor: i128) -> Result<()> {
        let bound = self.max_abs().saturating_mul(factor.max(1));
        let bits = 128 - bound.leading_zeros();
        if bits + terms_log2 + 2 >= 127 {
            return Err(Error::Overflow);
        }
        Ok(())
    }

    pub fn to_rational(&self, numerator: &BigInt) -> Rational {
        Rational::new(numerator.clone(), self.denominator.clone())
    }
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse("-2.25").unwrap(), frac(-9, 4));
        assert_eq!(parse("0.5").unwrap(), frac(1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn render_always_has_denominator() {
        assert_eq!(render(&int(3)), "3/1");
        assert_eq!(render(&frac(-6, 4)), "-3/2");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn scaled_table_common_denominator() {
        let t = ScaledTable::new(&[int(0), frac(1, 2), frac(2, 3)]).unwrap();
        assert_eq!(t.denominator, BigInt::from(6));
        assert_eq!(t.numerators, vec![0, 3, 4]);
    }
}
