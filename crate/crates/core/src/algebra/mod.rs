//! Exact arithmetic: rationals, factorials, polynomials and rational
//! functions in `t`, truncated power series in `z`, hypergeometric terms.

mod difference;
mod factorial;
mod hyper;
mod poly;
mod ratfunc;
mod series;

pub use difference::{finite_difference, Direction};
pub use factorial::{binom, binom_rat, factorial, falling, gen_factorial, rising, FactorialDir};
pub use hyper::{gauss_2f1_series, hyp_term, HypTermSpec};
pub use poly::PolyT;
pub use ratfunc::RatFuncT;
pub use series::{Coeff, Series};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub type SeriesQ = Series<Rat>;
pub type SeriesP = Series<PolyT>;
pub type SeriesR = Series<RatFuncT>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or a bare integer, allowing a leading sign on `p`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let err = |pos| Error::Parse {
        input: s.to_string(),
        pos,
    };
    let (num, den) = match s.find('/') {
        Some(i) => (&s[..i], Some((&s[i + 1..], i + 1))),
        None => (s, None),
    };
    let parse_int = |txt: &str, offset: usize, signed: bool| -> Result<BigInt> {
        let digits = if signed {
            txt.strip_prefix(['-', '+']).unwrap_or(txt)
        } else {
            txt
        };
        if digits.is_empty() {
            return Err(err(offset + txt.len()));
        }
        if let Some(bad) = digits.bytes().position(|b| !b.is_ascii_digit()) {
            return Err(err(offset + txt.len() - digits.len() + bad));
        }
        txt.parse::<BigInt>().map_err(|_| err(offset))
    };
    let p = parse_int(num, 0, true)?;
    let q = match den {
        Some((d, off)) => parse_int(d, off, false)?,
        None => BigInt::from(1),
    };
    if q == BigInt::from(0) {
        return Err(err(s.len()));
    }
    Ok(Rat::new(p, q))
}

/// Parses a comma-separated list of rationals.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        let trimmed = part.trim();
        let lead = part.len() - part.trim_start().len();
        out.push(parse_rat(trimmed).map_err(|e| match e {
            Error::Parse { pos, .. } => Error::Parse {
                input: s.to_string(),
                pos: offset + lead + pos,
            },
            other => other,
        })?);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// `x` as an `i64` when it is an integer that fits.
pub fn to_i64(x: &Rat) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// `(-1)^n` for a signed exponent.
pub fn sign(n: i64) -> Rat {
    if n.rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Integer power with a possibly negative exponent; `0^0 = 1`.
pub fn powi(x: &Rat, n: i64) -> Rat {
    num_traits::pow::Pow::pow(x, n as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("-3").unwrap(), rat(-3));
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat("-1/2").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            parse_rat("1/x").unwrap_err(),
            Error::Parse {
                input: "1/x".into(),
                pos: 2
            }
        );
        match parse_rat_list("1, 2, 3a").unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 7),
            e => panic!("{e}"),
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(ratio(6, -4).to_string(), "-3/2");
        assert_eq!(rat(5).to_string(), "5");
    }
}
