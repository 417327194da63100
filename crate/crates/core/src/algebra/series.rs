use std::fmt::{self, Debug, Display};

use num_traits::{One, Zero};

use super::{binom_rat, factorial, rat, PolyT, Rat, RatFuncT};
use crate::error::{Error, Result};

/// Coefficient ring of a truncated series.
pub trait Coeff: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rat) -> Self;
    fn from_rat(c: Rat) -> Self;
    /// Multiplicative inverse inside the ring, if it exists.
    fn inv(&self) -> Option<Self>;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
    fn from_rat(c: Rat) -> Self {
        c
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Coeff for PolyT {
    fn zero() -> Self {
        PolyT::zero()
    }
    fn one() -> Self {
        PolyT::one()
    }
    fn is_zero(&self) -> bool {
        PolyT::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rat) -> Self {
        PolyT::scale(self, c)
    }
    fn from_rat(c: Rat) -> Self {
        PolyT::constant(c)
    }
    fn inv(&self) -> Option<Self> {
        self.as_constant()
            .filter(|c| !Zero::is_zero(c))
            .map(|c| PolyT::constant(c.recip()))
    }
}

impl Coeff for RatFuncT {
    fn zero() -> Self {
        RatFuncT::zero()
    }
    fn one() -> Self {
        RatFuncT::one()
    }
    fn is_zero(&self) -> bool {
        RatFuncT::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rat) -> Self {
        RatFuncT::scale(self, c)
    }
    fn from_rat(c: Rat) -> Self {
        RatFuncT::from_rat(c)
    }
    fn inv(&self) -> Option<Self> {
        RatFuncT::inv(self)
    }
}

/// Power series in `z` truncated below `z^order`; `order == coeffs.len()`.
/// Binary operations truncate to the smaller order.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// `c z`.
    pub fn monomial_z(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    fn constant_term(&self) -> C {
        self.coeffs.first().cloned().unwrap_or_else(C::zero)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Series {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Series {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(C::neg)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![C::zero(); n];
        if k < n {
            out[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Series { coeffs: out }
    }

    /// Replaces `z` by `c z`.
    pub fn dilate(&self, c: &C) -> Self {
        let mut f = C::one();
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            out.push(a.mul(&f));
            f = f.mul(c);
        }
        Series { coeffs: out }
    }

    pub fn derivative_z(&self) -> Self {
        let n = self.order();
        // One order is lost: the top coefficient is unknown.
        Series {
            coeffs: (1..n).map(|i| self.coeffs[i].scale(&rat(i as i64))).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let c0 = self.constant_term();
        let inv0 = c0.inv().ok_or_else(|| Error::ConstantTerm {
            op: "inverse",
            needed: "a unit",
            found: c0.to_string(),
        })?;
        let mut out = vec![C::zero(); n];
        if n == 0 {
            return Ok(Series { coeffs: out });
        }
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = C::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc = acc.add(&a.mul(&out[k - j]));
                }
            }
            out[k] = acc.mul(&inv0).neg();
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    fn require_constant(&self, op: &'static str, one: bool) -> Result<()> {
        let c0 = self.constant_term();
        let ok = if one { c0.is_one() } else { c0.is_zero() };
        if ok {
            Ok(())
        } else {
            Err(Error::ConstantTerm {
                op,
                needed: if one { "1" } else { "0" },
                found: c0.to_string(),
            })
        }
    }

    /// `Σ_j f_j u^j` for `u` with zero constant term.
    fn sum_powers(u: &Self, f: impl Fn(usize) -> Rat) -> Self {
        let n = u.order();
        let mut acc = Self::zero(n);
        // Horner in u: only powers below n survive since u = O(z).
        for j in (0..n).rev() {
            acc = acc.mul(u);
            if n > 0 {
                acc.coeffs[0] = acc.coeffs[0].add(&C::from_rat(f(j)));
            }
        }
        acc
    }

    /// `self^q` for constant term 1 via the binomial series.
    pub fn pow_rat(&self, q: &Rat) -> Result<Self> {
        self.require_constant("pow", true)?;
        let u = self.sub(&Self::one(self.order()));
        Ok(Self::sum_powers(&u, |j| binom_rat(q, j as i64)))
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn pow_int(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn sqrt(&self) -> Result<Self> {
        self.require_constant("sqrt", true)
            .and_then(|_| self.pow_rat(&Rat::new(1.into(), 2.into())))
    }

    pub fn exp(&self) -> Result<Self> {
        self.require_constant("exp", false)?;
        Ok(Self::sum_powers(self, |j| factorial(j).recip()))
    }

    /// `self(inner)` for `inner` with zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        inner.require_constant("compose", false)?;
        let n = self.order().min(inner.order());
        let mut acc = Self::zero(n);
        for j in (0..n).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[j]);
        }
        Ok(acc)
    }
}

impl<C: Coeff> Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn q(v: &[Rat]) -> Series<Rat> {
        Series::from_coeffs(v.to_vec())
    }

    #[test]
    fn binomial_sqrt() {
        let s = q(&[rat(1), rat(1), rat(0), rat(0)]);
        let r = s.pow_rat(&ratio(1, 2)).unwrap();
        assert_eq!(r.coeffs(), &[rat(1), ratio(1, 2), ratio(-1, 8), ratio(1, 16)]);
        assert_eq!(s.sqrt().unwrap(), r);
        assert_eq!(r.mul(&r), s);
    }

    #[test]
    fn exp_and_log_free_checks() {
        assert_eq!(Series::<Rat>::zero(5).exp().unwrap(), Series::one(5));
        let z = Series::monomial_z(rat(1), 5);
        let e = z.exp().unwrap();
        assert_eq!(e.coeffs()[4], ratio(1, 24));
        // e^z e^{-z} = 1
        assert_eq!(e.mul(&z.neg().exp().unwrap()), Series::one(5));
    }

    #[test]
    fn inverse_is_inverse() {
        let s = q(&[rat(2), rat(-1), ratio(3, 5), rat(7), rat(0)]);
        assert_eq!(s.mul(&s.inverse().unwrap()), Series::one(5));
    }

    #[test]
    fn precondition_errors() {
        let s = q(&[rat(2), rat(1)]);
        assert!(matches!(s.pow_rat(&ratio(1, 3)), Err(Error::ConstantTerm { op: "pow", .. })));
        assert!(matches!(s.exp(), Err(Error::ConstantTerm { op: "exp", .. })));
        assert!(s.compose(&s).is_err());
        assert!(Series::<Rat>::zero(3).inverse().is_err());
        let p = Series::<PolyT>::constant(PolyT::t(), 3);
        assert!(p.inverse().is_err());
    }

    #[test]
    fn compose_exp_into_log_series() {
        // exp(z) composed into (w - w^2/2 + w^3/3 - ...) of (e^z - 1) gives z.
        let n = 6;
        let z = Series::monomial_z(rat(1), n);
        let em1 = z.exp().unwrap().sub(&Series::one(n));
        let log1p = Series::from_coeffs(
            (0..n)
                .map(|k| if k == 0 { rat(0) } else { ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64) })
                .collect(),
        );
        assert_eq!(log1p.compose(&em1).unwrap(), z);
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = Series::<Rat>::one(5);
        let b = Series::<Rat>::one(3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
    }
}
