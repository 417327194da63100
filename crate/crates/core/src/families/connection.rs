//! Connection-coefficient identities: each triangle row expresses one
//! polynomial basis in another. Both sides are expanded in powers of `x`
//! and compared coefficientwise.

use num_traits::Zero;

use super::{EulerianParams, StirlingParams};
use crate::algebra::{factorial, powi, rat, rising, FactorialDir, PolyT, Rat};
use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectionKind {
    /// `x^{n̲,a} = Σ S_{n,k}(a,b;r) (x-r)^{k̲,b}`; params `(a, b, r)`.
    Stirling,
    /// `(c0+c∞)^{n̄,b} x^{n̲,a} = Σ E_{n,k} (x-c0)^{k̲,b} (x+c∞)^{(n-k)̄,b}`;
    /// params `(a, b, c0, c∞)`.
    WorpitzkyGeneral,
    /// `b^n x^{n̲,a} = (1/n!) Σ E_{n,k}(a,b;c0,b-c0) [x-c0+b(n-k)]^{n̲,b}`;
    /// params `(a, b, c0)`.
    WorpitzkySingle,
    /// `(bx+c∞)^{n̲} = Σ (1/n!) E_{n,k}(-1,b;b-c∞,c∞) (x+k)^{n̲}`;
    /// params `(b, c∞)`.
    SymmetricApplicable,
}

impl ConnectionKind {
    pub const ALL: [ConnectionKind; 4] = [
        ConnectionKind::Stirling,
        ConnectionKind::WorpitzkyGeneral,
        ConnectionKind::WorpitzkySingle,
        ConnectionKind::SymmetricApplicable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConnectionKind::Stirling => "stirling",
            ConnectionKind::WorpitzkyGeneral => "worpitzky_general",
            ConnectionKind::WorpitzkySingle => "worpitzky_single",
            ConnectionKind::SymmetricApplicable => "symmetric_applicable",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            ConnectionKind::Stirling | ConnectionKind::WorpitzkySingle => 3,
            ConnectionKind::WorpitzkyGeneral => 4,
            ConnectionKind::SymmetricApplicable => 2,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }
}

/// `Π_{i<m} (base ± i·step)` as a polynomial in `x`.
pub(crate) fn poly_factorial(base: &PolyT, m: usize, step: &Rat, dir: FactorialDir) -> PolyT {
    let mut acc = PolyT::one();
    for i in 0..m {
        let off = step * rat(i as i64);
        let off = match dir {
            FactorialDir::Rising => off,
            FactorialDir::Falling => -off,
        };
        acc = &acc * &(base + &PolyT::constant(off));
    }
    acc
}

/// `c x + d`.
pub(crate) fn lin(c: Rat, d: Rat) -> PolyT {
    PolyT::new(vec![d, c])
}

fn compare(rep: &mut Report, n: usize, lhs: &PolyT, rhs: &PolyT) {
    rep.check(lhs == rhs, || {
        let i = (0..=lhs.degree().max(rhs.degree()).unwrap_or(0))
            .find(|&i| lhs.coeff(i) != rhs.coeff(i))
            .unwrap_or(0);
        format!("row {n}: coefficient of x^{i} is {} vs {}", lhs.coeff(i), rhs.coeff(i))
    });
}

/// Checks rows `0..=n` of the identity named by `kind`.
pub fn connection_check(kind: ConnectionKind, params: &[Rat], n: usize) -> Result<Report> {
    if params.len() != kind.arity() {
        return Err(Error::Param(format!(
            "{} takes {} parameters, got {}",
            kind.name(),
            kind.arity(),
            params.len()
        )));
    }
    let p = params;
    let x = PolyT::t();
    let one = rat(1);
    let mut rep = Report::new(format!("connection {}", kind.name()));
    use FactorialDir::{Falling, Rising};
    match kind {
        ConnectionKind::Stirling => {
            let s = StirlingParams::new(p[0].clone(), p[1].clone(), p[2].clone());
            let tri = s.triangle(n);
            for m in 0..=n {
                let lhs = poly_factorial(&x, m, &s.a, Falling);
                let shifted = lin(one.clone(), -&s.r);
                let rhs = (0..=m).fold(PolyT::zero(), |acc, k| {
                    &acc + &poly_factorial(&shifted, k, &s.b, Falling).scale(&tri.get(m, k as i64))
                });
                compare(&mut rep, m, &lhs, &rhs);
            }
        }
        ConnectionKind::WorpitzkyGeneral => {
            let e = EulerianParams::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone());
            let tri = e.triangle(n);
            let c = &e.c0 + &e.c_inf;
            for m in 0..=n {
                let lead = rising(&c, m, &e.b);
                if lead.is_zero() {
                    continue;
                }
                let lhs = poly_factorial(&x, m, &e.a, Falling).scale(&lead);
                let left = lin(one.clone(), -&e.c0);
                let right = lin(one.clone(), e.c_inf.clone());
                let rhs = (0..=m).fold(PolyT::zero(), |acc, k| {
                    let basis = &poly_factorial(&left, k, &e.b, Falling) * &poly_factorial(&right, m - k, &e.b, Rising);
                    &acc + &basis.scale(&tri.get(m, k as i64))
                });
                compare(&mut rep, m, &lhs, &rhs);
            }
        }
        ConnectionKind::WorpitzkySingle => {
            let (a, b, c0) = (&p[0], &p[1], &p[2]);
            let e = EulerianParams::new(a.clone(), b.clone(), c0.clone(), b - c0);
            let tri = e.triangle(n);
            for m in 0..=n {
                let lhs = poly_factorial(&x, m, a, Falling).scale(&powi(b, m as i64));
                let rhs = (0..=m).fold(PolyT::zero(), |acc, k| {
                    let base = lin(one.clone(), b * rat((m - k) as i64) - c0);
                    &acc + &poly_factorial(&base, m, b, Falling).scale(&tri.get(m, k as i64))
                });
                compare(&mut rep, m, &lhs, &rhs.scale(&factorial(m).recip()));
            }
        }
        ConnectionKind::SymmetricApplicable => {
            let (b, c_inf) = (&p[0], &p[1]);
            let e = EulerianParams::new(rat(-1), b.clone(), b - c_inf, c_inf.clone());
            let tri = e.triangle(n);
            for m in 0..=n {
                let lhs = poly_factorial(&lin(b.clone(), c_inf.clone()), m, &one, Falling);
                let rhs = (0..=m).fold(PolyT::zero(), |acc, k| {
                    let base = lin(one.clone(), rat(k as i64));
                    &acc + &poly_factorial(&base, m, &one, Falling).scale(&(tri.get(m, k as i64) / factorial(m)))
                });
                compare(&mut rep, m, &lhs, &rhs);
            }
        }
    }
    Ok(rep)
}

/// The single-progression identity in its `c∞`-indexed form
/// `n! b^n x^{n̲,a} = Σ E_{n,k}(a,b;b-c∞,c∞) (x+c∞-bk)^{n̄,b}`, compared
/// row by row with the `c0`-indexed form at `c0 = b - c∞`.
pub fn rewritten_worpitzky_check(a: &Rat, b: &Rat, c_inf: &Rat, n: usize) -> Report {
    let x = PolyT::t();
    let e = EulerianParams::new(a.clone(), b.clone(), b - c_inf, c_inf.clone());
    let tri = e.triangle(n);
    let mut rep = Report::new("connection rewritten single-progression");
    for m in 0..=n {
        let lhs = poly_factorial(&x, m, a, FactorialDir::Falling).scale(&(factorial(m) * powi(b, m as i64)));
        let rising_form = (0..=m).fold(PolyT::zero(), |acc, k| {
            let base = lin(rat(1), c_inf - b * rat(k as i64));
            &acc + &poly_factorial(&base, m, b, FactorialDir::Rising).scale(&tri.get(m, k as i64))
        });
        let falling_form = (0..=m).fold(PolyT::zero(), |acc, k| {
            let base = lin(rat(1), b * rat((m - k) as i64) - &e.c0);
            &acc + &poly_factorial(&base, m, b, FactorialDir::Falling).scale(&tri.get(m, k as i64))
        });
        compare(&mut rep, m, &lhs, &rising_form);
        compare(&mut rep, m, &rising_form, &falling_form);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::sample::{nonzero_rat, rng, small_rat};

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn classical_instances() {
        assert!(connection_check(ConnectionKind::Stirling, &ints(&[0, 1, 0]), 6).unwrap().passed());
        assert!(connection_check(ConnectionKind::WorpitzkyGeneral, &ints(&[0, 1, 1, 0]), 7).unwrap().passed());
        assert!(connection_check(ConnectionKind::WorpitzkyGeneral, &ints(&[0, 2, 1, 1]), 7).unwrap().passed());
        assert!(connection_check(ConnectionKind::WorpitzkySingle, &ints(&[0, 1, 1]), 7).unwrap().passed());
        assert!(connection_check(ConnectionKind::SymmetricApplicable, &ints(&[2, 1]), 7).unwrap().passed());
    }

    #[test]
    fn random_instances() {
        let mut g = rng(21);
        for _ in 0..4 {
            let (a, b, c0, ci) = (small_rat(&mut g), nonzero_rat(&mut g), small_rat(&mut g), small_rat(&mut g));
            for (kind, p) in [
                (ConnectionKind::Stirling, vec![a.clone(), b.clone(), c0.clone()]),
                (ConnectionKind::WorpitzkyGeneral, vec![a.clone(), b.clone(), c0.clone(), ci.clone()]),
                (ConnectionKind::WorpitzkySingle, vec![a.clone(), b.clone(), c0.clone()]),
                (ConnectionKind::SymmetricApplicable, vec![b.clone(), ci.clone()]),
            ] {
                let rep = connection_check(kind, &p, 6).unwrap();
                assert!(rep.passed(), "{rep}");
            }
            assert!(rewritten_worpitzky_check(&a, &b, &ci, 6).passed());
        }
    }

    #[test]
    fn case_count_and_arity() {
        let rep = connection_check(ConnectionKind::WorpitzkySingle, &[rat(0), rat(1), ratio(1, 2)], 3).unwrap();
        assert!(rep.passed());
        let rep = connection_check(ConnectionKind::WorpitzkyGeneral, &ints(&[0, 1, 1, 0]), 3).unwrap();
        assert_eq!(rep.cases, 4);
        assert!(connection_check(ConnectionKind::Stirling, &ints(&[0, 1]), 3).is_err());
    }
}
