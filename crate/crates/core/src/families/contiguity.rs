//! Contiguity relations: identities linking a family at neighbouring
//! parameter values, in the spirit of Gauss's contiguous relations.
//! Entries outside `0 ≤ k ≤ n` (and rows `n < 0`) are zero.

use super::{EulerianParams, StirlingParams};
use crate::algebra::{binom, falling, rat, sign, Rat};
use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContigFamily {
    /// Parameters `(a, b, r)`.
    S,
    /// Parameters per relation: (i) `(a, b, c0, c∞)`, (ii) `(a, b, c0)`,
    /// (iii) `(a, b, c∞)`, (iv) `(a, b, c0)`, (v) `(a, b, c)`.
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContigRelation {
    I,
    II,
    III,
    IV,
    V,
}

impl ContigRelation {
    pub const ALL: [ContigRelation; 5] = [
        ContigRelation::I,
        ContigRelation::II,
        ContigRelation::III,
        ContigRelation::IV,
        ContigRelation::V,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ContigRelation::I => "i",
            ContigRelation::II => "ii",
            ContigRelation::III => "iii",
            ContigRelation::IV => "iv",
            ContigRelation::V => "v",
        }
    }

    /// Whether `k = -1` is part of the relation's index range.
    pub fn allows_minus_one(self, family: ContigFamily) -> bool {
        match family {
            ContigFamily::S => matches!(self, ContigRelation::II | ContigRelation::V),
            ContigFamily::E => matches!(self, ContigRelation::II | ContigRelation::III | ContigRelation::V),
        }
    }

    pub fn arity(self, family: ContigFamily) -> usize {
        match (family, self) {
            (ContigFamily::S, _) => 3,
            (ContigFamily::E, ContigRelation::I) => 4,
            (ContigFamily::E, _) => 3,
        }
    }
}

fn s_at(a: &Rat, b: &Rat, r: &Rat, n: i64, k: i64) -> Rat {
    if n < 0 {
        return rat(0);
    }
    StirlingParams::new(a.clone(), b.clone(), r.clone())
        .triangle(n as usize)
        .get(n as usize, k)
}

fn e_at(a: &Rat, b: &Rat, c0: &Rat, ci: &Rat, n: i64, k: i64) -> Rat {
    if n < 0 {
        return rat(0);
    }
    EulerianParams::new(a.clone(), b.clone(), c0.clone(), ci.clone())
        .triangle(n as usize)
        .get(n as usize, k)
}

/// Both sides of the relation at `(n, k)`.
pub fn contiguity_sides(
    family: ContigFamily,
    rel: ContigRelation,
    p: &[Rat],
    n: usize,
    k: i64,
) -> Result<(Rat, Rat)> {
    if p.len() != rel.arity(family) {
        return Err(Error::Param(format!(
            "relation {} takes {} parameters, got {}",
            rel.name(),
            rel.arity(family),
            p.len()
        )));
    }
    let lo = if rel.allows_minus_one(family) { -1 } else { 0 };
    if k < lo || k > n as i64 {
        return Err(Error::Param(format!("k = {k} outside {lo}..={n}")));
    }
    let ni = n as i64;
    let nr = rat(ni);
    use ContigRelation::*;
    Ok(match family {
        ContigFamily::S => {
            let (a, b, r) = (&p[0], &p[1], &p[2]);
            match rel {
                I => (
                    s_at(a, b, &(r + a), ni, k),
                    s_at(a, b, r, ni, k) + a * &nr * s_at(a, b, r, ni - 1, k),
                ),
                II => (
                    s_at(a, b, &(r + b), ni, k),
                    s_at(a, b, r, ni, k) + b * rat(k + 1) * s_at(a, b, r, ni, k + 1),
                ),
                III => (s_at(&-a, b, r, ni, k), s_at(a, b, &(r + a * rat(ni - 1)), ni, k)),
                IV => (s_at(a, &-b, r, ni, k), s_at(a, b, &(r - b * rat(k)), ni, k)),
                V => (s_at(a, b, &(b - a), ni, k), s_at(a, b, &rat(0), ni + 1, k + 1)),
            }
        }
        ContigFamily::E => match rel {
            I => {
                let (a, b, c0, ci) = (&p[0], &p[1], &p[2], &p[3]);
                (
                    e_at(a, b, &(c0 + a), &(ci - a), ni, k),
                    e_at(a, b, c0, ci, ni, k)
                        + a * &nr * (e_at(a, b, c0, ci, ni - 1, k) - e_at(a, b, c0, ci, ni - 1, k - 1)),
                )
            }
            II => {
                let (a, b, c0) = (&p[0], &p[1], &p[2]);
                (
                    e_at(a, b, &(c0 + b), &-c0, ni, k),
                    e_at(a, b, c0, &(b - c0), ni, k + 1)
                        + sign(k) * falling(c0, n, a) * binom(ni + 1, k + 1),
                )
            }
            III => {
                let (a, b, ci) = (&p[0], &p[1], &p[2]);
                (
                    ci * e_at(a, b, &(b - a), &(ci + a), ni, k),
                    e_at(a, b, &rat(0), ci, ni + 1, k + 1),
                )
            }
            IV => {
                let (a, b, c0) = (&p[0], &p[1], &p[2]);
                (
                    c0 * e_at(a, b, &(c0 - a), &(a + b), ni, k),
                    e_at(a, b, c0, &rat(0), ni + 1, k),
                )
            }
            V => {
                let (a, b, c) = (&p[0], &p[1], &p[2]);
                let (c0, ci) = (c - a, a - c);
                (
                    c * (e_at(a, b, &c0, &ci, ni, k + 1) - e_at(a, b, &c0, &ci, ni, k)),
                    e_at(a, b, c, &-c, ni + 1, k + 1),
                )
            }
        },
    })
}

/// Checks the relation at the single index pair `(n, k)`.
pub fn contiguity_check(family: ContigFamily, rel: ContigRelation, p: &[Rat], n: usize, k: i64) -> Result<Report> {
    let fam = match family {
        ContigFamily::S => "S",
        ContigFamily::E => "E",
    };
    let mut rep = Report::new(format!("contiguity {fam}({})", rel.name()));
    let (lhs, rhs) = contiguity_sides(family, rel, p, n, k)?;
    rep.check(lhs == rhs, || format!("n = {n}, k = {k}: {lhs} vs {rhs}"));
    Ok(rep)
}

/// Checks the relation on every admissible `(n, k)` with `n ≤ n_max`.
pub fn contiguity_check_all(family: ContigFamily, rel: ContigRelation, p: &[Rat], n_max: usize) -> Result<Report> {
    let lo = if rel.allows_minus_one(family) { -1 } else { 0 };
    let mut rep = contiguity_check(family, rel, p, 0, lo)?;
    for n in 0..=n_max {
        for k in lo..=n as i64 {
            if n == 0 && k == lo {
                continue;
            }
            rep.absorb_quiet(contiguity_check(family, rel, p, n, k)?);
        }
    }
    Ok(rep)
}

/// `δ^{k̲,b} S_{n,k}(a,-b;r+δ) = Σ_{j≥k} C(j,k) δ^{j̲,b} S_{n,j}(a,b;r)`:
/// the Stirling family is closed under upper binomial transformation.
pub fn ubt_closure_check(a: &Rat, b: &Rat, r: &Rat, delta: &Rat, n_max: usize) -> Report {
    let lhs_t = StirlingParams::new(a.clone(), -b, r + delta).triangle(n_max);
    let rhs_t = StirlingParams::new(a.clone(), b.clone(), r.clone()).triangle(n_max);
    let mut rep = Report::new("stirling UBT closure");
    for n in 0..=n_max {
        for k in 0..=n {
            let lhs = falling(delta, k, b) * lhs_t.get(n, k as i64);
            let rhs: Rat = (k..=n)
                .map(|j| binom(j as i64, k as i64) * falling(delta, j, b) * rhs_t.get(n, j as i64))
                .sum();
            rep.check(lhs == rhs, || format!("n = {n}, k = {k}: {lhs} vs {rhs}"));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{rng, small_rat};

    #[test]
    fn spec_examples() {
        let p = [rat(-1), rat(0), rat(2)];
        assert!(contiguity_check_all(ContigFamily::S, ContigRelation::I, &p, 8).unwrap().passed());
        let (l, r) = contiguity_sides(ContigFamily::S, ContigRelation::V, &[rat(1), rat(2), rat(0)], 4, -1).unwrap();
        assert_eq!((l, r), (rat(0), rat(0)));
        assert!(contiguity_check(ContigFamily::S, ContigRelation::I, &p, 3, -1).is_err());
    }

    #[test]
    fn all_relations_on_random_parameters() {
        let mut g = rng(41);
        for _ in 0..3 {
            let p: Vec<Rat> = (0..4).map(|_| small_rat(&mut g)).collect();
            for fam in [ContigFamily::S, ContigFamily::E] {
                for rel in ContigRelation::ALL {
                    let rep = contiguity_check_all(fam, rel, &p[..rel.arity(fam)], 6).unwrap();
                    assert!(rep.passed(), "{rep}");
                }
            }
            assert!(ubt_closure_check(&p[0], &p[1], &p[2], &p[3], 7).passed());
        }
    }
}
