//! Bivariate power series in `t` and `z`, truncated below `t^ot` and
//! `z^oz`, with exact rational coefficients.

use num_traits::{One, Zero};

use crate::algebra::{binom_rat, Rat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct BiSeries {
    ot: usize,
    oz: usize,
    /// `c[i][j]` is the coefficient of `t^i z^j`.
    c: Vec<Vec<Rat>>,
}

impl BiSeries {
    pub fn zero(ot: usize, oz: usize) -> Self {
        BiSeries {
            ot,
            oz,
            c: vec![vec![Rat::zero(); oz]; ot],
        }
    }

    pub fn constant(x: Rat, ot: usize, oz: usize) -> Self {
        let mut s = Self::zero(ot, oz);
        if ot > 0 && oz > 0 {
            s.c[0][0] = x;
        }
        s
    }

    pub fn one(ot: usize, oz: usize) -> Self {
        Self::constant(Rat::one(), ot, oz)
    }

    /// `x t^i z^j`.
    pub fn monomial(x: Rat, i: usize, j: usize, ot: usize, oz: usize) -> Self {
        let mut s = Self::zero(ot, oz);
        if i < ot && j < oz {
            s.c[i][j] = x;
        }
        s
    }

    /// A series in `t` alone.
    pub fn from_t(coeffs: &[Rat], ot: usize, oz: usize) -> Self {
        let mut s = Self::zero(ot, oz);
        for (i, x) in coeffs.iter().enumerate().take(ot) {
            if oz > 0 {
                s.c[i][0] = x.clone();
            }
        }
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.ot, self.oz)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rat {
        &self.c[i][j]
    }

    fn zip(&self, o: &Self, f: impl Fn(&Rat, &Rat) -> Rat) -> Self {
        let (ot, oz) = (self.ot.min(o.ot), self.oz.min(o.oz));
        let mut s = Self::zero(ot, oz);
        for i in 0..ot {
            for j in 0..oz {
                s.c[i][j] = f(&self.c[i][j], &o.c[i][j]);
            }
        }
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, x: &Rat) -> Self {
        let mut s = self.clone();
        s.c.iter_mut().flatten().for_each(|v| *v *= x);
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (ot, oz) = (self.ot.min(o.ot), self.oz.min(o.oz));
        let mut s = Self::zero(ot, oz);
        for i1 in 0..ot {
            for j1 in 0..oz {
                let a = &self.c[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..ot - i1 {
                    for j2 in 0..oz - j1 {
                        let b = &o.c[i2][j2];
                        if !b.is_zero() {
                            s.c[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        s
    }

    /// Multiplicative inverse, solved coefficient by coefficient in
    /// lexicographic order.
    pub fn inverse(&self) -> Result<Self> {
        let a00 = self.c.first().and_then(|r| r.first()).cloned().unwrap_or_else(Rat::zero);
        if a00.is_zero() {
            return Err(Error::ConstantTerm {
                op: "inverse",
                needed: "nonzero",
                found: "0".into(),
            });
        }
        let inv00 = a00.recip();
        let mut r = Self::zero(self.ot, self.oz);
        for i in 0..self.ot {
            for j in 0..self.oz {
                if i == 0 && j == 0 {
                    r.c[0][0] = inv00.clone();
                    continue;
                }
                let mut acc = Rat::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if (p, q) != (0, 0) && !self.c[p][q].is_zero() {
                            acc += &self.c[p][q] * &r.c[i - p][j - q];
                        }
                    }
                }
                r.c[i][j] = -acc * &inv00;
            }
        }
        Ok(r)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    fn constant_term(&self) -> Rat {
        self.c.first().and_then(|r| r.first()).cloned().unwrap_or_else(Rat::zero)
    }

    /// `self^q` for constant term 1, by the binomial series in `self - 1`.
    pub fn pow_rat(&self, q: &Rat) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTerm {
                op: "pow",
                needed: "1",
                found: self.constant_term().to_string(),
            });
        }
        let v = self.sub(&Self::one(self.ot, self.oz));
        let mut acc = Self::one(self.ot, self.oz);
        let mut vp = Self::one(self.ot, self.oz);
        for m in 1..self.ot + self.oz {
            vp = vp.mul(&v);
            acc = acc.add(&vp.scale(&binom_rat(q, m as i64)));
        }
        Ok(acc)
    }

    /// `f(self)` for a univariate `f = Σ f_m x^m`, where `self` has no
    /// `t^0` terms, so only `m < ot` contribute.
    pub fn compose_t(&self, f: &[Rat]) -> Result<Self> {
        if self.c.first().is_some_and(|r| r.iter().any(|x| !x.is_zero())) {
            return Err(Error::ConstantTerm {
                op: "compose",
                needed: "no t^0 terms",
                found: "a t^0 term".into(),
            });
        }
        let mut acc = Self::zero(self.ot, self.oz);
        for fm in f.iter().take(self.ot).rev() {
            acc = acc.mul(self).add(&Self::constant(fm.clone(), self.ot, self.oz));
        }
        Ok(acc)
    }

    /// `t · self`.
    pub fn times_t(&self) -> Self {
        let mut s = Self::zero(self.ot, self.oz);
        for i in 1..self.ot {
            s.c[i] = self.c[i - 1].clone();
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn sample() -> BiSeries {
        let mut s = BiSeries::one(4, 4);
        s.c[1][0] = rat(2);
        s.c[0][1] = ratio(-1, 3);
        s.c[2][1] = rat(5);
        s
    }

    #[test]
    fn inverse_and_powers() {
        let s = sample();
        assert_eq!(s.mul(&s.inverse().unwrap()), BiSeries::one(4, 4));
        let h = s.pow_rat(&ratio(1, 2)).unwrap();
        assert_eq!(h.mul(&h), s);
        assert_eq!(s.pow_rat(&rat(-1)).unwrap(), s.inverse().unwrap());
    }

    #[test]
    fn compose_geometric() {
        // 1/(1 - t(1+z)) through f = Σ x^m.
        let x = BiSeries::monomial(rat(1), 1, 0, 5, 3).add(&BiSeries::monomial(rat(1), 1, 1, 5, 3));
        let f = vec![rat(1); 5];
        let direct = BiSeries::one(5, 3).sub(&x).inverse().unwrap();
        assert_eq!(x.compose_t(&f).unwrap(), direct);
        assert!(BiSeries::one(2, 2).compose_t(&f).is_err());
    }
}
