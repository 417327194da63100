use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::forward_owned;
use super::{PolyT, Rat};

/// Quotient of polynomials in `t`, kept in lowest terms with a monic
/// denominator so that `==` is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFuncT {
    num: PolyT,
    den: PolyT,
}

impl RatFuncT {
    /// Panics if `den` is zero.
    pub fn new(num: PolyT, den: PolyT) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.divexact(&g).unwrap(), den.divexact(&g).unwrap())
        } else {
            (num, den)
        };
        Self::normalized(num, den)
    }

    /// Makes the denominator monic; the caller guarantees coprimality.
    fn normalized(num: PolyT, den: PolyT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lead = den.leading();
        if lead.is_one() {
            RatFuncT { num, den }
        } else {
            let inv = Rat::one() / lead;
            RatFuncT {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFuncT {
            num: PolyT::zero(),
            den: PolyT::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(PolyT::one())
    }

    pub fn t() -> Self {
        Self::from_poly(PolyT::t())
    }

    pub fn from_poly(p: PolyT) -> Self {
        RatFuncT {
            num: p,
            den: PolyT::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(PolyT::constant(c))
    }

    pub fn num(&self) -> &PolyT {
        &self.num
    }

    pub fn den(&self) -> &PolyT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&PolyT> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncT {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        RatFuncT {
            num: base.num.pow(n.unsigned_abs()),
            den: base.den.pow(n.unsigned_abs()),
        }
    }

    /// Value at `t0`, or `None` at a pole.
    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        (!d.is_zero()).then(|| self.num.eval(t0) / d)
    }

    /// `self(x(t))` for a rational function `x`.
    pub fn substitute(&self, x: &RatFuncT) -> RatFuncT {
        // p(n/d) = (Σ p_i n^i d^(m-i)) / d^m with m = max degree.
        let m = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let homog = |p: &PolyT| {
            let mut acc = PolyT::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = &x.num.pow(i as u32) * &x.den.pow((m - i) as u32);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        RatFuncT::new(homog(&self.num), homog(&self.den))
    }
}

impl fmt::Display for RatFuncT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl From<PolyT> for RatFuncT {
    fn from(p: PolyT) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RatFuncT {
    type Output = RatFuncT;
    fn add(self, rhs: &RatFuncT) -> RatFuncT {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: with g = gcd(b, d), only g can share factors with the sum.
        let g = self.den.gcd(&rhs.den);
        let b1 = self.den.divexact(&g).unwrap();
        let d1 = rhs.den.divexact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFuncT::zero();
        }
        let den = &self.den * &d1;
        let h = num.gcd(&g);
        if h.degree().unwrap_or(0) > 0 {
            RatFuncT::normalized(num.divexact(&h).unwrap(), den.divexact(&h).unwrap())
        } else {
            RatFuncT::normalized(num, den)
        }
    }
}

impl Sub for &RatFuncT {
    type Output = RatFuncT;
    fn sub(self, rhs: &RatFuncT) -> RatFuncT {
        self + &(-rhs)
    }
}

impl Mul for &RatFuncT {
    type Output = RatFuncT;
    fn mul(self, rhs: &RatFuncT) -> RatFuncT {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncT::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.divexact(&g1).unwrap() * &rhs.num.divexact(&g2).unwrap();
        let den = &self.den.divexact(&g2).unwrap() * &rhs.den.divexact(&g1).unwrap();
        RatFuncT::normalized(num, den)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &RatFuncT {
    type Output = RatFuncT;
    fn div(self, rhs: &RatFuncT) -> RatFuncT {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

impl Neg for &RatFuncT {
    type Output = RatFuncT;
    fn neg(self) -> RatFuncT {
        RatFuncT {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(RatFuncT, Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFuncT {
    type Output = RatFuncT;
    fn neg(self) -> RatFuncT {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn rf(n: &[i64], d: &[i64]) -> RatFuncT {
        RatFuncT::new(PolyT::from_ints(n), PolyT::from_ints(d))
    }

    #[test]
    fn lowest_terms_monic() {
        let x = rf(&[-2, 2], &[-3, 0, 3]);
        assert_eq!(x.num(), &PolyT::new(vec![ratio(2, 3)]));
        assert_eq!(x.den(), &PolyT::from_ints(&[1, 1]));
    }

    #[test]
    fn field_ops() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[0, 1], &[1, -1]);
        assert_eq!(&a - &b, RatFuncT::one());
        assert_eq!(&(&a * &b) / &b, a);
        assert!(RatFuncT::zero().inv().is_none());
        assert_eq!(a.pow(-2), rf(&[1, -2, 1], &[1]));
    }

    #[test]
    fn substitution() {
        // t/(1-t) at t -> 1/t is 1/(t-1).
        let x = rf(&[0, 1], &[1, -1]);
        let inv_t = rf(&[1], &[0, 1]);
        assert_eq!(x.substitute(&inv_t), rf(&[1], &[-1, 1]));
        assert_eq!(x.eval(&rat(2)), Some(rat(-2)));
        assert_eq!(x.eval(&rat(1)), None);
    }
}
