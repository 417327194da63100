//! An unproved expansion of `E_{n,k}(-1,2;c+2p+ζ,2p+ζ)` in Bessel and
//! r-Bessel numbers. A mismatch here is a finding about the statement,
//! not a defect in the crate, so the checks report rather than assert.

use num_traits::Zero;

use super::registry::{closed_form_eval, FormulaId};
use super::EulerianParams;
use crate::algebra::{rat, rising, Rat};
use crate::error::{Error, Result};
use crate::report::Report;

fn bessel(r: i64, n: usize, k: usize) -> Result<Rat> {
    closed_form_eval(FormulaId::FivePoints(4), &[rat(r)], n, k)
}

/// Right-hand side
/// `(c+2p+ζ)^{n̄} / (c+2p+2ζ)^{p̄,2} · Σ_{ℓ≤p} (c+1)^{p̄,2} / (c+1)^{(k+ℓ)̄,2}
///  · B_{2p+ζ, 2p+ζ-ℓ} · B^{(2p+ζ-2ℓ)}_{n, n-k}`.
pub fn conjecture_rhs(p: usize, zeta: u8, c: &Rat, n: usize, k: usize) -> Result<Rat> {
    if zeta > 1 {
        return Err(Error::Param(format!("ζ must be 0 or 1, got {zeta}")));
    }
    if k > n {
        return Ok(Rat::zero());
    }
    let (pi, z) = (p as i64, zeta as i64);
    let (one, two) = (rat(1), rat(2));
    let front_den = rising(&(c + rat(2 * pi + 2 * z)), p, &two);
    if front_den.is_zero() {
        return Err(Error::Param(format!("(c+2p+2ζ)^(p rising, 2) vanishes at c = {c}")));
    }
    let front = rising(&(c + rat(2 * pi + z)), n, &one) / front_den;
    let cp1 = c + rat(1);
    let top = rising(&cp1, p, &two);
    let m = (2 * pi + z) as usize;
    let mut sum = Rat::zero();
    for l in 0..=p {
        let den = rising(&cp1, k + l, &two);
        if den.is_zero() {
            return Err(Error::Param(format!("(c+1)^(k+ℓ rising, 2) vanishes at c = {c}")));
        }
        let outer = bessel(0, m, m - l)?;
        let inner = bessel(m as i64 - 2 * l as i64, n, n - k)?;
        sum += &top / den * outer * inner;
    }
    Ok(front * sum)
}

/// Compares both sides for `0 ≤ k ≤ n`, the left one from the recurrence.
pub fn conjecture_check(p: usize, zeta: u8, c: &Rat, n: usize) -> Report {
    let mut rep = Report::new(format!("Bessel expansion p = {p}, ζ = {zeta}, c = {c}, n = {n}"));
    let (pi, z) = (p as i64, zeta as i64);
    let lhs = EulerianParams::new(rat(-1), rat(2), c + rat(2 * pi + z), rat(2 * pi + z)).triangle(n);
    for k in 0..=n {
        match conjecture_rhs(p, zeta, c, n, k) {
            Ok(v) => {
                let want = lhs.get(n, k as i64);
                rep.check(v == want, || format!("k = {k}: expansion {v}, recurrence {want}"));
            }
            Err(e) => rep.fail(format!("k = {k}: {e}")),
        }
    }
    rep
}

/// Runs [`conjecture_check`] on every `p ≤ p_max`, `ζ ∈ {0,1}`, given `c`
/// and `n ≤ n_max`; one report per `(p, ζ, c)`.
pub fn conjecture_scan(p_max: usize, cs: &[Rat], n_max: usize) -> Vec<Report> {
    let mut out = Vec::new();
    for p in 0..=p_max {
        for zeta in 0..=1u8 {
            for c in cs {
                let mut rep = Report::new(format!("Bessel expansion p = {p}, ζ = {zeta}, c = {c}"));
                for n in 0..=n_max {
                    rep.absorb_quiet(conjecture_check(p, zeta, c, n));
                }
                out.push(rep);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn stated_instances() {
        for n in 0..=8 {
            assert!(conjecture_check(1, 0, &rat(1), n).passed());
            assert!(conjecture_check(2, 1, &ratio(3, 2), n).passed());
        }
    }

    #[test]
    fn p_zero_matches_hypergeometric_form() {
        // ζ = 1, p = 0 is E(-1,2;c+1,1), which has its own closed form.
        for c in [rat(1), ratio(1, 3), rat(4)] {
            for n in 0..=6 {
                for k in 0..=n {
                    let rhs = conjecture_rhs(0, 1, &c, n, k).unwrap();
                    let other = closed_form_eval(FormulaId::EHyp(2), std::slice::from_ref(&c), n, k).unwrap();
                    assert_eq!(rhs, other, "c = {c}, ({n},{k})");
                }
            }
        }
    }

    #[test]
    fn bad_zeta_is_rejected() {
        assert!(conjecture_rhs(0, 2, &rat(1), 2, 1).is_err());
    }
}
