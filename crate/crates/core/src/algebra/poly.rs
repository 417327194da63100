use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, Rat};
use crate::error::{Error, Result};

/// Polynomial in `t` with rational coefficients, lowest degree first.
/// Trailing zeros are always stripped, so `==` is structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyT {
    coeffs: Vec<Rat>,
}

impl PolyT {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyT { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        PolyT { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `a + b t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, t0: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t0 + c)
    }

    pub fn derive(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &PolyT) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(PolyT::zero(), |acc, c| &(&acc * inner) + &PolyT::constant(c.clone()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Rat::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        PolyT { coeffs: v }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PolyT::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &PolyT) -> (PolyT, PolyT) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (PolyT::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (PolyT::new(quot), PolyT::new(rem))
    }

    pub fn divexact(&self, d: &PolyT) -> Result<PolyT> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rat::one() / self.leading()))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyT) -> PolyT {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            // Keep the remainder sequence monic so coefficients stay small.
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl fmt::Display for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyT {
    type Output = PolyT;
    fn sub(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        if self.is_zero() || rhs.is_zero() {
            return PolyT::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        PolyT::new(v)
    }
}

impl Neg for &PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(PolyT, Add add, Sub sub, Mul mul);

impl Neg for PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn spec_values() {
        assert_eq!(PolyT::from_ints(&[0, 3, 1]).derive(), PolyT::from_ints(&[3, 2]));
        assert_eq!(PolyT::from_ints(&[1, 0, 1]).eval(&rat(2)), rat(5));
        assert_eq!(
            PolyT::from_ints(&[-1, 0, 1]).divexact(&PolyT::from_ints(&[-1, 1])).unwrap(),
            PolyT::from_ints(&[1, 1])
        );
        assert_eq!(
            PolyT::from_ints(&[1, 0, 1]).divexact(&PolyT::from_ints(&[-1, 1])),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn canonical_form() {
        assert_eq!(PolyT::from_ints(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(PolyT::from_ints(&[0, 0]).is_zero());
        let p = PolyT::from_ints(&[1, 1]);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn compose_and_gcd() {
        let p = PolyT::from_ints(&[0, 0, 1]);
        let q = PolyT::from_ints(&[1, 1]);
        assert_eq!(p.compose(&q), PolyT::from_ints(&[1, 2, 1]));
        let a = &PolyT::from_ints(&[-1, 1]) * &PolyT::from_ints(&[2, 3]);
        let b = &PolyT::from_ints(&[-1, 1]) * &PolyT::from_ints(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), PolyT::from_ints(&[-1, 1]));
        assert_eq!(PolyT::from_ints(&[2, 4]).gcd(&PolyT::from_ints(&[3])), PolyT::one());
    }

    #[test]
    fn display() {
        let p = PolyT::new(vec![rat(1), rat(-4), ratio(1, 2), rat(0), rat(1)]);
        assert_eq!(p.to_string(), "1 - 4*t + 1/2*t^2 + t^4");
        assert_eq!(PolyT::from_ints(&[0, -1]).to_string(), "-t");
        assert_eq!(PolyT::zero().to_string(), "0");
    }
}
