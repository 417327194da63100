//! Row-wise binomial transform pairs linking the generalized Eulerian and
//! Stirling numbers. Each pair is checked in both directions through the
//! generic transforms of [`crate::transforms`].

use super::{EulerianParams, StirlingParams};
use crate::algebra::{factorial, falling, powi, rat, rising, Rat};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::transforms::{generalized_lbt, lower_binomial_transform, upper_binomial_transform, LbtDir};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `E_{n,·}` and `(c0+c∞)^{(n-k)̄,b} S_{n,n-k}(-a,b;c∞)` are an upper
    /// binomial transform pair; params `(a, b, c0, c∞)`.
    UbtPair,
    /// `b^k k! E_{n,k}` and `(c0+c∞)^{k̄,b} (bk+c0)^{n̲,a}` are a
    /// generalized lower binomial pair with `A = bn + c0 + c∞`.
    Rephrased,
    /// `b^k k! S_{n,k}(a,b;r)` and `(bk+r)^{n̲,a}` are a lower binomial
    /// pair; params `(a, b, r)`.
    LbtPair,
}

impl PairKind {
    pub const ALL: [PairKind; 3] = [PairKind::UbtPair, PairKind::Rephrased, PairKind::LbtPair];

    pub fn name(self) -> &'static str {
        match self {
            PairKind::UbtPair => "ubtpair",
            PairKind::Rephrased => "rephrased",
            PairKind::LbtPair => "lbtpair",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            PairKind::LbtPair => 3,
            _ => 4,
        }
    }
}

fn compare_rows(rep: &mut Report, n: usize, what: &str, got: &[Rat], want: &[Rat]) {
    for (k, (g, w)) in got.iter().zip(want).enumerate() {
        rep.check(g == w, || format!("row {n}, k = {k}, {what}: {g} vs {w}"));
    }
}

/// Checks both directions of the pair for every row `0..=n`.
pub fn transform_pair_check(kind: PairKind, params: &[Rat], n: usize) -> Result<Report> {
    if params.len() != kind.arity() {
        return Err(Error::Param(format!(
            "{} takes {} parameters, got {}",
            kind.name(),
            kind.arity(),
            params.len()
        )));
    }
    let mut rep = Report::new(format!("transform pair {}", kind.name()));
    match kind {
        PairKind::UbtPair | PairKind::Rephrased => {
            let e = EulerianParams::new(params[0].clone(), params[1].clone(), params[2].clone(), params[3].clone());
            let c = &e.c0 + &e.c_inf;
            let et = e.triangle(n);
            let st = StirlingParams::new(-&e.a, e.b.clone(), e.c_inf.clone()).triangle(n);
            for m in 0..=n {
                let (u, v, fwd, inv): (Vec<Rat>, Vec<Rat>, Vec<Rat>, Vec<Rat>);
                if kind == PairKind::UbtPair {
                    u = (0..=m)
                        .map(|j| rising(&c, m - j, &e.b) * st.get(m, (m - j) as i64))
                        .collect();
                    v = et.row(m).to_vec();
                    fwd = upper_binomial_transform(&u, false);
                    inv = upper_binomial_transform(&v, true);
                } else {
                    let big_a = &e.b * rat(m as i64) + &c;
                    u = (0..=m)
                        .map(|j| rising(&c, j, &e.b) * falling(&(&e.b * rat(j as i64) + &e.c0), m, &e.a))
                        .collect();
                    v = (0..=m)
                        .map(|k| powi(&e.b, k as i64) * factorial(k) * et.get(m, k as i64))
                        .collect();
                    fwd = generalized_lbt(&u, &big_a, &e.b, LbtDir::Forward);
                    inv = generalized_lbt(&v, &big_a, &e.b, LbtDir::Inverse);
                }
                compare_rows(&mut rep, m, "forward", &fwd, &v);
                compare_rows(&mut rep, m, "inverse", &inv, &u);
            }
        }
        PairKind::LbtPair => {
            let s = StirlingParams::new(params[0].clone(), params[1].clone(), params[2].clone());
            let st = s.triangle(n);
            for m in 0..=n {
                let u: Vec<Rat> = (0..=m)
                    .map(|j| falling(&(&s.b * rat(j as i64) + &s.r), m, &s.a))
                    .collect();
                let v: Vec<Rat> = (0..=m)
                    .map(|k| powi(&s.b, k as i64) * factorial(k) * st.get(m, k as i64))
                    .collect();
                compare_rows(&mut rep, m, "forward", &lower_binomial_transform(&u, false), &v);
                compare_rows(&mut rep, m, "inverse", &lower_binomial_transform(&v, true), &u);
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{rng, small_rat};

    #[test]
    fn classical_eulerian() {
        let p: Vec<Rat> = [0, 1, 1, 0].iter().map(|&x| rat(x)).collect();
        for kind in [PairKind::UbtPair, PairKind::Rephrased] {
            assert!(transform_pair_check(kind, &p, 8).unwrap().passed());
        }
        let s: Vec<Rat> = [0, 1, 0].iter().map(|&x| rat(x)).collect();
        assert!(transform_pair_check(PairKind::LbtPair, &s, 8).unwrap().passed());
    }

    #[test]
    fn random_parameters() {
        let mut g = rng(31);
        for _ in 0..5 {
            let p: Vec<Rat> = (0..4).map(|_| small_rat(&mut g)).collect();
            for kind in PairKind::ALL {
                let rep = transform_pair_check(kind, &p[..kind.arity()], 7).unwrap();
                assert!(rep.passed(), "{rep}");
            }
        }
    }
}
