use num_traits::{One, Zero};

use super::{rat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorialDir {
    Rising,
    Falling,
}

/// `x (x ± step) ... (x ± (n-1) step)`, with `+` for rising.
pub fn gen_factorial(x: &Rat, n: usize, step: &Rat, dir: FactorialDir) -> Rat {
    let mut acc = Rat::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        match dir {
            FactorialDir::Rising => f += step,
            FactorialDir::Falling => f -= step,
        }
    }
    acc
}

/// Rising factorial with step `a`.
pub fn rising(x: &Rat, n: usize, a: &Rat) -> Rat {
    gen_factorial(x, n, a, FactorialDir::Rising)
}

/// Falling factorial with step `a`.
pub fn falling(x: &Rat, n: usize, a: &Rat) -> Rat {
    gen_factorial(x, n, a, FactorialDir::Falling)
}

pub fn factorial(n: usize) -> Rat {
    rising(&rat(1), n, &rat(1))
}

/// Binomial coefficient with rational upper argument; zero for `k < 0`.
pub fn binom_rat(x: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let k = k as usize;
    falling(x, k, &rat(1)) / factorial(k)
}

/// Binomial coefficient `C(n, k)` for any integer `n`; zero for `k < 0`.
pub fn binom(n: i64, k: i64) -> Rat {
    binom_rat(&rat(n), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn spec_values() {
        assert_eq!(falling(&rat(5), 3, &rat(1)), rat(60));
        assert_eq!(rising(&ratio(7, 3), 0, &rat(2)), rat(1));
        assert_eq!(falling(&ratio(7, 3), 0, &rat(2)), rat(1));
        assert_eq!(rising(&rat(1), 4, &rat(2)), rat(105));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), rat(10));
        assert_eq!(binom(3, 5), rat(0));
        assert_eq!(binom(-2, 3), rat(-4));
        assert_eq!(binom(4, -1), rat(0));
        assert_eq!(binom_rat(&ratio(1, 2), 2), ratio(-1, 8));
    }
}
