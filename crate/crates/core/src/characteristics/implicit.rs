//! The implicit hypergeometric form of the tableau EGF. With
//! `F(x) = ₂F₁(r0+r1, 1; 1+r0 | x)`, the auxiliary series `s(t, z)` solves
//!
//! ```text
//! (s/t)^{r0} ((1-s)/(1-t))^{r1} = (r0 z + F(t)) / F(s)
//! ```
//!
//! and the EGF is `(s/t)^{g0} ((1-s)/(1-t))^{g1}`. Writing `s = t u`, the
//! equation is solved for `u` by Newton iteration over bivariate series.

use num_traits::{One, Zero};

use super::bseries::BiSeries;
use crate::algebra::{factorial, rat, to_i64, Rat};
use crate::error::{Error, Result};
use crate::gkp::{triangle_from_recurrence, Tableau};
use crate::report::Report;

/// Taylor coefficients of `₂F₁(a, 1; c | x)`, i.e. `(a)_m / (c)_m`.
fn f_coeffs(a: &Rat, c: &Rat, n: usize) -> Vec<Rat> {
    let mut v = Vec::with_capacity(n + 1);
    let mut x = Rat::one();
    for m in 0..=n {
        v.push(x.clone());
        let mr = rat(m as i64);
        x = x * (a + &mr) / (c + &mr);
    }
    v
}

fn require_admissible(tab: &Tableau) -> Result<()> {
    let bad = tab.r0.is_zero() || (tab.r0.is_integer() && to_i64(&tab.r0).is_some_and(|v| v < 0));
    if bad {
        return Err(Error::Param(format!(
            "the implicit form needs r0 outside 0, -1, -2, ... (got {})",
            tab.r0
        )));
    }
    Ok(())
}

/// The solution `u = s/t` as a series in `t, z` truncated at orders
/// `(ot, oz)`.
pub fn implicit_u(tab: &Tableau, ot: usize, oz: usize) -> Result<BiSeries> {
    require_admissible(tab)?;
    let r0 = &tab.r0;
    let r1 = &tab.r1;
    let f = f_coeffs(&(r0 + r1), &(r0 + Rat::one()), ot);
    let fp: Vec<Rat> = (0..ot).map(|m| &f[m + 1] * rat(m as i64 + 1)).collect();
    let one = BiSeries::one(ot, oz);
    let t = BiSeries::monomial(Rat::one(), 1, 0, ot, oz);
    let f_t = BiSeries::from_t(&f, ot, oz);
    let inv_omt = one.sub(&t).inverse()?;
    let rhs = BiSeries::monomial(r0.clone(), 0, 1, ot, oz).add(&f_t);

    // Newton doubles the z-adic precision, so `oz` steps are generous.
    let max_steps = oz.max(2);
    let mut u = one.clone();
    for _ in 0..max_steps {
        let tu = u.times_t();
        let ratio1 = one.sub(&tu).mul(&inv_omt);
        let f_tu = tu.compose_t(&f)?;
        let prod = u.pow_rat(r0)?.mul(&ratio1.pow_rat(r1)?).mul(&f_tu);
        let phi = prod.sub(&rhs);
        if phi.is_zero() {
            return Ok(u);
        }
        // Φ'(u) = prod · [r0/u - r1 t/(1 - tu) + t F'(tu)/F(tu)]
        let log_d = u
            .inverse()?
            .scale(r0)
            .sub(&t.div(&one.sub(&tu))?.scale(r1))
            .add(&t.mul(&tu.compose_t(&fp)?).div(&f_tu)?);
        u = u.sub(&phi.div(&prod.mul(&log_d))?);
    }
    Err(Error::NoConvergence(max_steps))
}

/// The auxiliary series `s = t u`, with `s(t, 0) = t`.
pub fn implicit_s_solver(tab: &Tableau, ot: usize, oz: usize) -> Result<BiSeries> {
    Ok(implicit_u(tab, ot, oz)?.times_t())
}

/// `(s/t)^{g0} ((1-s)/(1-t))^{g1}`, truncated at `(ot, oz)`.
pub fn implicit_egf(tab: &Tableau, ot: usize, oz: usize) -> Result<BiSeries> {
    let u = implicit_u(tab, ot, oz)?;
    let one = BiSeries::one(ot, oz);
    let t = BiSeries::monomial(Rat::one(), 1, 0, ot, oz);
    let ratio1 = one.sub(&u.times_t()).div(&one.sub(&t))?;
    Ok(u.pow_rat(&tab.g0)?.mul(&ratio1.pow_rat(&tab.g1)?))
}

/// Compares the implicit EGF with the recurrence for the parameter
/// array of `tab` at `β = 1, β' = -1`, rows `0..order`.
pub fn implicit_check(tab: &Tableau, order: usize) -> Report {
    let mut rep = Report::new(format!("implicit hypergeometric EGF, {tab}"));
    let egf = match implicit_egf(tab, order, order) {
        Ok(e) => e,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    let params = match tab.to_params(&rat(1), &rat(-1)) {
        Ok(p) => p,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    let tri = triangle_from_recurrence(&params, order.saturating_sub(1));
    for n in 0..order {
        for k in 0..order {
            let want = tri.get(n, k as i64) / factorial(n);
            let got = egf.coeff(k, n);
            rep.check(*got == want, || format!("[t^{k} z^{n}]: implicit {got}, recurrence {want}"));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn generic_tableau() {
        let tab = Tableau::new([ratio(1, 3), ratio(5, 12), ratio(1, 4)], [rat(1), rat(-2), rat(1)]).unwrap();
        let rep = implicit_check(&tab, 6);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn initial_slice_is_t() {
        let tab = Tableau::new([ratio(1, 3), ratio(5, 12), ratio(1, 4)], [rat(1), rat(-2), rat(1)]).unwrap();
        let s = implicit_s_solver(&tab, 5, 4).unwrap();
        for i in 0..5 {
            assert_eq!(*s.coeff(i, 0), rat(i64::from(i == 1)));
        }
    }

    #[test]
    fn rejects_nonpositive_integer_r0() {
        let tab = Tableau::new([rat(-1), rat(1), rat(1)], [rat(0), rat(0), rat(0)]).unwrap();
        assert!(matches!(implicit_u(&tab, 3, 3), Err(Error::Param(_))));
    }
}
