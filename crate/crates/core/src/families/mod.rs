//! Named parametric families: generalized Stirling numbers `S_{n,k}(a,b;r)`,
//! generalized Eulerian numbers `E_{n,k}(a,b;c0,c∞)`, and the three-way
//! Narayana and secant–tangent families, together with their closed forms
//! and the identities connecting them.

mod conjecture;
mod connection;
mod contiguity;
mod jacobi;
mod matrix;
mod pairs;
pub mod registry;
mod riordan;

pub use conjecture::{conjecture_check, conjecture_rhs, conjecture_scan};
pub use connection::{connection_check, rewritten_worpitzky_check, ConnectionKind};
pub use contiguity::{
    contiguity_check, contiguity_check_all, contiguity_sides, ubt_closure_check, ContigFamily, ContigRelation,
};
pub use jacobi::{boros_moll, jacobi_identity_check, jacobi_p, jacobi_recurrence_check, jacobi_trim_check};
pub use matrix::{
    char_poly, connection_matrix, connection_matrix_eigencheck, connection_matrix_extends_check,
    connection_matrix_b2_check, connection_matrix_identity_check, connection_matrix_inverse_check, ConnectionMatrix,
};
pub use pairs::{transform_pair_check, PairKind};
pub use registry::{
    bessel_cross_check, bessel_support_check, closed_form_eval, cross_check, registry_check, FormulaId,
};
pub use riordan::{
    riordan_asym_convolution_check, riordan_convolution_check, riordan_inverse_check, riordan_matrix,
    matrix_product, riordan_product_check, stirling_riordan, RiordanSpec,
};

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{binom, factorial, falling, parse_rat_list, rat, ratio, rising, sign, Rat};
use crate::error::{Error, Result};
use crate::gkp::{triangle_from_recurrence, GkpParams, Triangle};

#[derive(Debug, Clone, PartialEq)]
pub struct StirlingParams {
    pub a: Rat,
    pub b: Rat,
    pub r: Rat,
}

impl StirlingParams {
    pub fn new(a: Rat, b: Rat, r: Rat) -> Self {
        StirlingParams { a, b, r }
    }

    pub fn from_ints(a: i64, b: i64, r: i64) -> Self {
        Self::new(rat(a), rat(b), rat(r))
    }

    /// `(-a, b, r; 0, 0, 1)`.
    pub fn gkp(&self) -> GkpParams {
        GkpParams::new(-&self.a, self.b.clone(), self.r.clone(), Rat::zero(), Rat::zero(), Rat::one())
    }

    pub fn triangle(&self, n_max: usize) -> Triangle {
        triangle_from_recurrence(&self.gkp(), n_max)
    }
}

impl fmt::Display for StirlingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{};{})", self.a, self.b, self.r)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EulerianParams {
    pub a: Rat,
    pub b: Rat,
    pub c0: Rat,
    pub c_inf: Rat,
}

impl EulerianParams {
    pub fn new(a: Rat, b: Rat, c0: Rat, c_inf: Rat) -> Self {
        EulerianParams { a, b, c0, c_inf }
    }

    pub fn from_ints(a: i64, b: i64, c0: i64, c_inf: i64) -> Self {
        Self::new(rat(a), rat(b), rat(c0), rat(c_inf))
    }

    /// `(-a, b, c0; a+b, -b, c∞)`.
    pub fn gkp(&self) -> GkpParams {
        GkpParams::new(
            -&self.a,
            self.b.clone(),
            self.c0.clone(),
            &self.a + &self.b,
            -&self.b,
            self.c_inf.clone(),
        )
    }

    pub fn triangle(&self, n_max: usize) -> Triangle {
        triangle_from_recurrence(&self.gkp(), n_max)
    }

    /// `E_{n,n-k}(a,b;c0,c∞) = E_{n,k}(-a,b;c∞,c0)`.
    pub fn reflected(&self) -> Self {
        Self::new(-&self.a, self.b.clone(), self.c_inf.clone(), self.c0.clone())
    }
}

impl fmt::Display for EulerianParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{};{},{})", self.a, self.b, self.c0, self.c_inf)
    }
}

fn need_nonzero_b(b: &Rat) -> Result<()> {
    if b.is_zero() {
        Err(Error::Param("b = 0: the alternating-sum formula divides by b; use the recurrence".into()))
    } else {
        Ok(())
    }
}

/// `S_{n,k}(a,b;r) = (1/(b^k k!)) Σ_j (-1)^{k-j} C(k,j) (bj + r)^{n̲,a}`.
pub fn stirling_rank1(p: &StirlingParams, n: usize, k: usize) -> Result<Rat> {
    need_nonzero_b(&p.b)?;
    if k > n {
        return Ok(Rat::zero());
    }
    let sum: Rat = (0..=k)
        .map(|j| {
            sign((k - j) as i64) * binom(k as i64, j as i64) * falling(&(&p.b * rat(j as i64) + &p.r), n, &p.a)
        })
        .sum();
    Ok(sum / (crate::algebra::powi(&p.b, k as i64) * factorial(k)))
}

/// `E_{n,k}(a,b;c0,c∞) = (1/(b^k k!)) Σ_j (-1)^{k-j} C(k,j)
/// (bn + c0 + c∞)^{(k-j)̲,b} (c0 + c∞)^{j̄,b} (bj + c0)^{n̲,a}`.
pub fn eulerian_rank1(p: &EulerianParams, n: usize, k: usize) -> Result<Rat> {
    need_nonzero_b(&p.b)?;
    if k > n {
        return Ok(Rat::zero());
    }
    let c = &p.c0 + &p.c_inf;
    let top = &p.b * rat(n as i64) + &c;
    let sum: Rat = (0..=k)
        .map(|j| {
            sign((k - j) as i64)
                * binom(k as i64, j as i64)
                * falling(&top, k - j, &p.b)
                * rising(&c, j, &p.b)
                * falling(&(&p.b * rat(j as i64) + &p.c0), n, &p.a)
        })
        .sum();
    Ok(sum / (crate::algebra::powi(&p.b, k as i64) * factorial(k)))
}

pub fn stirling_rank1_triangle(p: &StirlingParams, n_max: usize) -> Result<Triangle> {
    Triangle::try_from_fn(n_max, Some(p.gkp()), |n, k| stirling_rank1(p, n, k))
}

pub fn eulerian_rank1_triangle(p: &EulerianParams, n_max: usize) -> Result<Triangle> {
    Triangle::try_from_fn(n_max, Some(p.gkp()), |n, k| eulerian_rank1(p, n, k))
}

/// The six three-parameter families of the Narayana and secant–tangent
/// cases: Stirling, reversed-Stirling and Eulerian type of each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    NarayanaS,
    NarayanaRS,
    NarayanaE,
    SecTanS,
    SecTanRS,
    SecTanE,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::NarayanaS,
        FamilyKind::NarayanaRS,
        FamilyKind::NarayanaE,
        FamilyKind::SecTanS,
        FamilyKind::SecTanRS,
        FamilyKind::SecTanE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::NarayanaS => "narayana-s",
            FamilyKind::NarayanaRS => "narayana-rs",
            FamilyKind::NarayanaE => "narayana-e",
            FamilyKind::SecTanS => "sectan-s",
            FamilyKind::SecTanRS => "sectan-rs",
            FamilyKind::SecTanE => "sectan-e",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }

    /// `(α, α')` as multiples of `b`; always `β = b`, `β' = -b`.
    fn alpha_pair(self) -> (Rat, Rat) {
        match self {
            FamilyKind::NarayanaS => (ratio(1, 2), rat(-1)),
            FamilyKind::NarayanaRS => (rat(-2), ratio(3, 2)),
            FamilyKind::NarayanaE => (ratio(1, 2), ratio(3, 2)),
            FamilyKind::SecTanS => (ratio(-1, 2), rat(1)),
            FamilyKind::SecTanRS => (rat(0), ratio(1, 2)),
            FamilyKind::SecTanE => (ratio(-1, 2), ratio(1, 2)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NamedFamily {
    pub kind: FamilyKind,
    pub b: Rat,
    pub c0: Rat,
    pub c_inf: Rat,
}

impl NamedFamily {
    pub fn new(kind: FamilyKind, b: Rat, c0: Rat, c_inf: Rat) -> Self {
        NamedFamily { kind, b, c0, c_inf }
    }

    pub fn gkp(&self) -> GkpParams {
        let (x, xp) = self.kind.alpha_pair();
        GkpParams::new(
            x * &self.b,
            self.b.clone(),
            self.c0.clone(),
            xp * &self.b,
            -&self.b,
            self.c_inf.clone(),
        )
    }
}

pub fn family_triangle(f: &NamedFamily, n_max: usize) -> Triangle {
    triangle_from_recurrence(&f.gkp(), n_max)
}

/// Family parameters accepted by name, e.g. `("eulerian", "0,1,1,0")`.
/// Names: `stirling` (a,b,r), `eulerian` (a,b,c0,c∞) and the six
/// [`FamilyKind`] names (b,c0,c∞).
pub fn family_params(name: &str, args: &str) -> Result<GkpParams> {
    let v = parse_rat_list(args)?;
    let want = |n: usize| {
        if v.len() == n {
            Ok(())
        } else {
            Err(Error::Param(format!("family {name} takes {n} arguments, got {}", v.len())))
        }
    };
    match name {
        "stirling" => {
            want(3)?;
            Ok(StirlingParams::new(v[0].clone(), v[1].clone(), v[2].clone()).gkp())
        }
        "eulerian" => {
            want(4)?;
            Ok(EulerianParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).gkp())
        }
        other => {
            let kind = FamilyKind::parse(other)?;
            want(3)?;
            Ok(NamedFamily::new(kind, v[0].clone(), v[1].clone(), v[2].clone()).gkp())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{nonzero_rat, rng, small_rat};

    #[test]
    fn rank1_spec_values() {
        assert_eq!(stirling_rank1(&StirlingParams::from_ints(0, 1, 0), 4, 2).unwrap(), rat(7));
        assert_eq!(stirling_rank1(&StirlingParams::from_ints(1, 1, 2), 3, 2).unwrap(), rat(6));
        assert_eq!(eulerian_rank1(&EulerianParams::from_ints(0, 1, 1, 0), 3, 1).unwrap(), rat(4));
        let row: Vec<Rat> = (0..=2)
            .map(|k| eulerian_rank1(&EulerianParams::from_ints(0, 2, 1, 1), 2, k).unwrap())
            .collect();
        assert_eq!(row, [rat(1), rat(6), rat(1)]);
        assert!(stirling_rank1(&StirlingParams::from_ints(1, 0, 1), 2, 1).is_err());
    }

    #[test]
    fn rank1_matches_recurrence() {
        let mut g = rng(11);
        for _ in 0..6 {
            let s = StirlingParams::new(small_rat(&mut g), nonzero_rat(&mut g), small_rat(&mut g));
            assert!(stirling_rank1_triangle(&s, 8).unwrap().same_entries(&s.triangle(8)), "{s}");
            let e = EulerianParams::new(small_rat(&mut g), nonzero_rat(&mut g), small_rat(&mut g), small_rat(&mut g));
            assert!(eulerian_rank1_triangle(&e, 8).unwrap().same_entries(&e.triangle(8)), "{e}");
        }
    }

    #[test]
    fn reflection_and_homogeneity() {
        let mut g = rng(12);
        for _ in 0..5 {
            let e = EulerianParams::new(small_rat(&mut g), small_rat(&mut g), small_rat(&mut g), small_rat(&mut g));
            let t = e.triangle(8);
            let r = e.reflected().triangle(8);
            for n in 0..=8 {
                for k in 0..=n {
                    assert_eq!(t.get(n, k as i64), r.get(n, (n - k) as i64));
                }
            }
            let lam = nonzero_rat(&mut g);
            let scaled = EulerianParams::new(&lam * &e.a, &lam * &e.b, &lam * &e.c0, &lam * &e.c_inf).triangle(8);
            let s = StirlingParams::new(e.a.clone(), e.b.clone(), e.c0.clone());
            let s_scaled = StirlingParams::new(&lam * &s.a, &lam * &s.b, &lam * &s.r).triangle(8);
            let st = s.triangle(8);
            for n in 0..=8 {
                for k in 0..=n {
                    let ki = k as i64;
                    assert_eq!(scaled.get(n, ki), crate::algebra::powi(&lam, n as i64) * t.get(n, ki));
                    assert_eq!(s_scaled.get(n, ki), crate::algebra::powi(&lam, (n - k) as i64) * st.get(n, ki));
                }
            }
        }
    }

    #[test]
    fn named_family_arrays() {
        let f = NamedFamily::new(FamilyKind::SecTanRS, rat(2), rat(1), rat(0));
        assert_eq!(f.gkp(), GkpParams::from_ints([0, 2, 1, 1, -2, 0]));
        let n = NamedFamily::new(FamilyKind::NarayanaE, rat(2), rat(3), rat(3));
        let row: Vec<Rat> = family_triangle(&n, 3).row(3).iter().map(|x| x / rising(&rat(3), 3, &rat(1))).collect();
        assert_eq!(row, [rat(1), rat(6), rat(6), rat(1)]);
        assert_eq!(family_params("narayana-e", "2,3,3").unwrap(), n.gkp());
        assert!(family_params("nope", "1").is_err());
    }

    #[test]
    fn family_homogeneity() {
        let mut g = rng(13);
        for kind in FamilyKind::ALL {
            let f = NamedFamily::new(kind, small_rat(&mut g), small_rat(&mut g), small_rat(&mut g));
            let lam = nonzero_rat(&mut g);
            let h = NamedFamily::new(kind, &lam * &f.b, &lam * &f.c0, &lam * &f.c_inf);
            let (t, u) = (family_triangle(&f, 7), family_triangle(&h, 7));
            for n in 0..=7 {
                for k in 0..=n as i64 {
                    assert_eq!(u.get(n, k), crate::algebra::powi(&lam, n as i64) * t.get(n, k));
                }
            }
        }
    }
}
