//! Parameter arrays, the recurrence engine, and the operations that map
//! one triangle to another while staying inside the recurrence family.

mod ops;
mod pde;
mod triangle;

pub use ops::{scale_params, shift_lower_params, trim, ScaleMap, ShiftMap, TrimSide};
pub use pde::{egf_truncated, pde_residual_orders, verify_pde, verify_pde_triangle, PdeCoefficients};
pub use triangle::{row_polynomial, triangle_from_recurrence, Triangle};

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{parse_rat_list, rat, Rat};
use crate::error::{Error, Result};

/// The array `[α, β | γ; α', β' | γ']`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GkpParams {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub alpha_p: Rat,
    pub beta_p: Rat,
    pub gamma_p: Rat,
}

impl GkpParams {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, alpha_p: Rat, beta_p: Rat, gamma_p: Rat) -> Self {
        GkpParams {
            alpha,
            beta,
            gamma,
            alpha_p,
            beta_p,
            gamma_p,
        }
    }

    pub fn from_ints(v: [i64; 6]) -> Self {
        let [a, b, c, ap, bp, cp] = v.map(rat);
        Self::new(a, b, c, ap, bp, cp)
    }

    pub fn from_slice(v: &[Rat]) -> Result<Self> {
        match v {
            [a, b, c, ap, bp, cp] => Ok(Self::new(
                a.clone(),
                b.clone(),
                c.clone(),
                ap.clone(),
                bp.clone(),
                cp.clone(),
            )),
            _ => Err(Error::Param(format!(
                "a parameter array has 6 entries, got {}",
                v.len()
            ))),
        }
    }

    /// Parses `"α,β,γ,α',β',γ'"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::from_slice(&parse_rat_list(s)?)
    }

    pub fn to_vec(&self) -> Vec<Rat> {
        vec![
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            self.alpha_p.clone(),
            self.beta_p.clone(),
            self.gamma_p.clone(),
        ]
    }

    /// Multiplier of `<n, k>` in the recurrence for `<n+1, k>`.
    pub fn left_weight(&self, n: usize, k: i64) -> Rat {
        &self.alpha * rat(n as i64) + &self.beta * rat(k) + &self.gamma
    }

    /// Multiplier of `<n, k-1>` in the recurrence for `<n+1, k>`.
    pub fn right_weight(&self, n: usize, k: i64) -> Rat {
        &self.alpha_p * rat(n as i64) + &self.beta_p * rat(k - 1) + &self.gamma_p
    }

    fn require_beta_pair(&self) -> Result<()> {
        if self.beta.is_zero() || self.beta_p.is_zero() {
            Err(Error::ZeroBeta {
                beta: self.beta.to_string(),
                beta_p: self.beta_p.to_string(),
            })
        } else {
            Ok(())
        }
    }

    /// The tableau coordinates; needs `β β' ≠ 0`.
    pub fn to_tableau(&self) -> Result<Tableau> {
        self.require_beta_pair()?;
        let a = &self.alpha / &self.beta;
        let ap = &self.alpha_p / &self.beta_p;
        let g = &self.gamma / &self.beta;
        let gp = &self.gamma_p / &self.beta_p;
        Ok(Tableau {
            r0: -&a,
            r1: &a - &ap,
            r_inf: Rat::one() + &ap,
            g0: g.clone(),
            g1: &gp - &g,
            g_inf: -gp,
        })
    }

    /// Whether `β' = -β ≠ 0`, the normalization of the order-6 group.
    pub fn is_unit_normalized(&self) -> bool {
        !self.beta.is_zero() && self.beta_p == -&self.beta
    }
}

impl fmt::Display for GkpParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.to_vec().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", v.join(","))
    }
}

/// The pairs `(r, g)` attached to the points `0, 1, ∞`, with
/// `r0 + r1 + r∞ = 1` and `g0 + g1 + g∞ = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub r0: Rat,
    pub r1: Rat,
    pub r_inf: Rat,
    pub g0: Rat,
    pub g1: Rat,
    pub g_inf: Rat,
}

impl Tableau {
    pub fn new(r: [Rat; 3], g: [Rat; 3]) -> Result<Self> {
        let [r0, r1, r_inf] = r;
        let [g0, g1, g_inf] = g;
        if &r0 + &r1 + &r_inf != Rat::one() {
            return Err(Error::Param(format!("r0 + r1 + r∞ = {}, not 1", &r0 + &r1 + &r_inf)));
        }
        if !(&g0 + &g1 + &g_inf).is_zero() {
            return Err(Error::Param(format!("g0 + g1 + g∞ = {}, not 0", &g0 + &g1 + &g_inf)));
        }
        Ok(Tableau {
            r0,
            r1,
            r_inf,
            g0,
            g1,
            g_inf,
        })
    }

    /// Pairs in label order `0, 1, ∞`.
    pub fn pairs(&self) -> [(Rat, Rat); 3] {
        [
            (self.r0.clone(), self.g0.clone()),
            (self.r1.clone(), self.g1.clone()),
            (self.r_inf.clone(), self.g_inf.clone()),
        ]
    }

    pub fn from_pairs(p: [(Rat, Rat); 3]) -> Self {
        let [(r0, g0), (r1, g1), (r_inf, g_inf)] = p;
        Tableau {
            r0,
            r1,
            r_inf,
            g0,
            g1,
            g_inf,
        }
    }

    /// The parameter array with the given `β, β'` (both nonzero).
    pub fn to_params(&self, beta: &Rat, beta_p: &Rat) -> Result<GkpParams> {
        if beta.is_zero() || beta_p.is_zero() {
            return Err(Error::ZeroBeta {
                beta: beta.to_string(),
                beta_p: beta_p.to_string(),
            });
        }
        Ok(GkpParams {
            alpha: -(beta * &self.r0),
            beta: beta.clone(),
            gamma: beta * &self.g0,
            alpha_p: beta_p * (&self.r_inf - Rat::one()),
            beta_p: beta_p.clone(),
            gamma_p: -(beta_p * &self.g_inf),
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r=({}, {}, {}) g=({}, {}, {})",
            self.r0, self.r1, self.r_inf, self.g0, self.g1, self.g_inf
        )
    }
}

/// `from_tableau(tab, β, β')`.
pub fn from_tableau(tab: &Tableau, beta: &Rat, beta_p: &Rat) -> Result<GkpParams> {
    tab.to_params(beta, beta_p)
}

pub fn to_tableau(p: &GkpParams) -> Result<Tableau> {
    p.to_tableau()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn eulerian_tableau() {
        let t = GkpParams::from_ints([0, 1, 1, 1, -1, 0]).to_tableau().unwrap();
        assert_eq!(t.pairs().map(|p| p.0), [rat(0), rat(1), rat(0)]);
        assert_eq!(t.pairs().map(|p| p.1), [rat(1), rat(-1), rat(0)]);
    }

    #[test]
    fn zero_beta_rejected() {
        let p = GkpParams::new(ratio(-1, 2), rat(3), rat(2), rat(0), rat(0), rat(1));
        assert!(matches!(p.to_tableau(), Err(Error::ZeroBeta { .. })));
        let t = p.clone();
        assert!(Tableau::new([rat(1), rat(0), rat(0)], [rat(0), rat(0), rat(0)])
            .unwrap()
            .to_params(&t.beta, &rat(0))
            .is_err());
    }

    #[test]
    fn tableau_sums_enforced() {
        assert!(Tableau::new([rat(1), rat(1), rat(0)], [rat(0), rat(0), rat(0)]).is_err());
        assert!(Tableau::new([rat(1), rat(0), rat(0)], [rat(1), rat(0), rat(0)]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p = GkpParams::parse("0, 1/2,-3,1,-1,0").unwrap();
        assert_eq!(p.to_string(), "0,1/2,-3,1,-1,0");
        assert!(GkpParams::parse("1,2,3").is_err());
    }
}
