use num_traits::{One, Zero};

use super::{rat, Rat, Series};
use crate::error::{Error, Result};

/// A hypergeometric term `Π (A_i)^{k̄} / Π (C_i)^{k̄}`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HypTermSpec {
    pub upper: Vec<Rat>,
    pub lower: Vec<Rat>,
}

impl HypTermSpec {
    pub fn new(upper: Vec<Rat>, lower: Vec<Rat>) -> Self {
        HypTermSpec { upper, lower }
    }
}

/// Evaluates the term at `k`. A vanishing upper factor terminates the
/// product (giving 0) even if a lower factor vanishes later.
pub fn hyp_term(spec: &HypTermSpec, k: usize) -> Result<Rat> {
    let mut num = Rat::one();
    let mut den = Rat::one();
    for i in 0..k {
        let shift = rat(i as i64);
        let up: Rat = spec.upper.iter().map(|a| a + &shift).product();
        if up.is_zero() {
            return Ok(Rat::zero());
        }
        let low: Rat = spec.lower.iter().map(|c| c + &shift).product();
        if low.is_zero() {
            return Err(Error::SingularTerm { step: i });
        }
        num *= up;
        den *= low;
    }
    Ok(num / den)
}

/// Maclaurin series of `₂F₁(A, B; C | w)` truncated to `n` terms.
pub fn gauss_2f1_series(a: &Rat, b: &Rat, c: &Rat, n: usize) -> Result<Series<Rat>> {
    let spec = HypTermSpec::new(vec![a.clone(), b.clone()], vec![c.clone(), rat(1)]);
    let coeffs = (0..n)
        .map(|k| {
            hyp_term(&spec, k).map_err(|_| {
                Error::Param(format!(
                    "2F1 lower parameter {c} is a non-positive integer and the series does not terminate first"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn spec(u: &[i64], l: &[i64]) -> HypTermSpec {
        HypTermSpec::new(u.iter().map(|&x| rat(x)).collect(), l.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn spec_values() {
        assert_eq!(hyp_term(&spec(&[-2, 3], &[1, 1]), 1).unwrap(), rat(-6));
        assert_eq!(hyp_term(&spec(&[7, 3], &[-4]), 0).unwrap(), rat(1));
        assert_eq!(hyp_term(&spec(&[-3, 5], &[2]), 4).unwrap(), rat(0));
    }

    #[test]
    fn singular_and_terminating() {
        assert_eq!(
            hyp_term(&spec(&[1], &[-1]), 3),
            Err(Error::SingularTerm { step: 1 })
        );
        // Upper -1 vanishes at step 1, lower -1 at the same step: terminates.
        assert_eq!(hyp_term(&spec(&[-1], &[-1]), 3).unwrap(), rat(0));
    }

    #[test]
    fn log_series() {
        let s = gauss_2f1_series(&rat(1), &rat(1), &rat(2), 4).unwrap();
        assert_eq!(s.coeffs(), &[rat(1), ratio(1, 2), ratio(1, 3), ratio(1, 4)]);
        let one = gauss_2f1_series(&ratio(2, 3), &rat(5), &rat(7), 1).unwrap();
        assert_eq!(one.coeffs(), &[rat(1)]);
        assert!(gauss_2f1_series(&rat(1), &rat(1), &rat(-2), 5).is_err());
        assert!(gauss_2f1_series(&rat(-1), &rat(1), &rat(-2), 5).is_ok());
    }

    #[test]
    fn arcsine_quotient() {
        // f = asin(√t)/√(t(1-t)) is the unique series with f(0) = 1 and
        // (1-2t) f + 2t(1-t) f' = 1, i.e. (2k+1) f_k = 2k f_{k-1}.
        let n = 8;
        let f = gauss_2f1_series(&rat(1), &rat(1), &ratio(3, 2), n).unwrap();
        let c = f.coeffs();
        assert_eq!(c[0], rat(1));
        for k in 1..n {
            let k_ = rat(k as i64);
            assert_eq!((rat(2) * &k_ + rat(1)) * &c[k], rat(2) * &k_ * &c[k - 1]);
        }
    }
}
