//! Closed-form exponential generating functions obtained by the method of
//! characteristics, each checked against the EGF of the recurrence.

mod bseries;
mod closed;
mod implicit;

pub use bseries::BiSeries;
pub use closed::{
    b_s_pair, c_s_pair, closed_egf, left_peak_derivative_form, reduce, restricted_pair, substitute, t_pair,
    vertical_dh, ClosedEgfSpec, EgfCase, Restriction, SeriesR, Subcase,
};
pub use implicit::{implicit_check, implicit_egf, implicit_s_solver, implicit_u};

use num_traits::Zero;

use crate::algebra::{factorial, powi, rat, ratio, PolyT, Rat, RatFuncT, Series};
use crate::error::{Error, Result};
use crate::families::{stirling_riordan, StirlingParams};
use crate::gkp::{egf_truncated, triangle_from_recurrence, GkpParams, Tableau};
use crate::report::Report;
use crate::sample::{nonzero_rat, rat_avoiding, small_rat, SampleRng};
use crate::transforms::{lift_series, s3_transform_params, S3Elem};

/// Builds the closed form, reduces it to polynomial coefficients and
/// compares with the recurrence EGF of the reference parameters.
pub fn egf_check(spec: &ClosedEgfSpec) -> Report {
    let mut rep = Report::new(format!("closed EGF {} {:?}", spec.case, fmt_params(&spec.params)));
    let run = || -> Result<(Vec<PolyT>, Series<PolyT>)> {
        let g = closed_egf(spec)?;
        let polys = reduce(&g)?;
        let tri = triangle_from_recurrence(&spec.gkp()?, spec.order.saturating_sub(1));
        Ok((polys, egf_truncated(&tri)))
    };
    match run() {
        Ok((got, want)) => {
            for (n, g) in got.iter().enumerate() {
                rep.check(g == want.coeff(n), || format!("z^{n}: closed {g}, recurrence {}", want.coeff(n)));
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

fn fmt_params(p: &[Rat]) -> Vec<String> {
    p.iter().map(|x| x.to_string()).collect()
}

/// Random admissible parameters for `case`.
pub fn sample_params(case: EgfCase, rng: &mut SampleRng) -> Vec<Rat> {
    let a_case = |alpha: Rat, beta: Rat, alpha_p: Rat, beta_p: Rat, rng: &mut SampleRng| {
        GkpParams::new(alpha, beta, small_rat(rng), alpha_p, beta_p, small_rat(rng)).to_vec()
    };
    match case {
        EgfCase::A1 => {
            let (b, bp) = (nonzero_rat(rng), nonzero_rat(rng));
            a_case(nonzero_rat(rng), b, Rat::zero(), bp, rng)
        }
        EgfCase::A1Limit => {
            let (b, bp) = (nonzero_rat(rng), nonzero_rat(rng));
            a_case(Rat::zero(), b, Rat::zero(), bp, rng)
        }
        EgfCase::A2 => {
            let (b, bp) = (nonzero_rat(rng), nonzero_rat(rng));
            let ap = rat_avoiding(rng, |x| *x == -&bp);
            a_case(-&b, b, ap, bp, rng)
        }
        EgfCase::A2Limit => {
            let (b, bp) = (nonzero_rat(rng), nonzero_rat(rng));
            a_case(-&b, b, -&bp, bp, rng)
        }
        EgfCase::A3 => {
            let (b, bp) = (nonzero_rat(rng), nonzero_rat(rng));
            let ap = rat_avoiding(rng, |x| *x == -&bp);
            let a = &b * (&ap / &bp + rat(1));
            a_case(a, b, ap, bp, rng)
        }
        EgfCase::A3Limit => {
            let (b, bp) = (nonzero_rat(rng), nonzero_rat(rng));
            a_case(Rat::zero(), b, -&bp, bp, rng)
        }
        EgfCase::SElem | EgfCase::SVertical => vec![small_rat(rng), nonzero_rat(rng), small_rat(rng)],
        EgfCase::ESpeck => vec![nonzero_rat(rng), nonzero_rat(rng), small_rat(rng), small_rat(rng)],
        EgfCase::ESpeck2 => vec![nonzero_rat(rng), small_rat(rng), small_rat(rng)],
        EgfCase::EReducedSpeck => vec![small_rat(rng), nonzero_rat(rng), small_rat(rng)],
        EgfCase::B(_) | EgfCase::C(_) => vec![small_rat(rng), small_rat(rng)],
        EgfCase::BRestricted(..) => vec![small_rat(rng)],
        EgfCase::CProp(_) => vec![],
    }
}

/// `trials` random parameter sets for every case, each checked against
/// the recurrence.
pub fn egf_check_all(rng: &mut SampleRng, trials: usize, order: usize) -> Vec<Report> {
    EgfCase::all()
        .into_iter()
        .map(|case| {
            let mut rep = Report::new(format!("closed EGF {case}"));
            let n = if case.arity() == 0 { 1 } else { trials };
            for _ in 0..n {
                let spec = ClosedEgfSpec {
                    case,
                    params: sample_params(case, rng),
                    order,
                };
                rep.absorb(egf_check(&spec));
            }
            rep
        })
        .collect()
}

/// Lifting a closed form by each element of the order-6 group
/// `(t, z) ↦ (R(t), S(t) z)` must give the closed form of the
/// transformed parameters whenever those land in a sibling subcase, and
/// in any case the recurrence EGF of the transformed array.
pub fn lift_coherence_check(spec: &ClosedEgfSpec) -> Report {
    let mut rep = Report::new(format!("lift coherence {} {:?}", spec.case, fmt_params(&spec.params)));
    let run = |rep: &mut Report| -> Result<()> {
        let p = spec.gkp()?;
        let g = closed_egf(spec)?;
        for e in S3Elem::ALL {
            let q = s3_transform_params(e, &p)?;
            let lifted = lift_series(&e.lift_r(), &RatFuncT::from_poly(e.lift_s()), &g);
            let tri = triangle_from_recurrence(&q, spec.order.saturating_sub(1));
            let want = egf_truncated(&tri).map(|c| RatFuncT::from_poly(c.clone()));
            rep.check(lifted == want, || format!("{}: lifted closed form differs from the recurrence", e.name()));
            if let Some(sib) = sibling(spec, &q) {
                let other = closed_egf(&sib)?;
                rep.check(lifted == other, || {
                    format!("{}: lifted closed form differs from the {} closed form", e.name(), sib.case)
                });
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// The sibling subcase builder whose reference array is `q`, if any.
fn sibling(spec: &ClosedEgfSpec, q: &GkpParams) -> Option<ClosedEgfSpec> {
    let make: fn(Subcase) -> EgfCase = match spec.case {
        EgfCase::B(_) => EgfCase::B,
        EgfCase::C(_) => EgfCase::C,
        _ => return None,
    };
    Subcase::ALL.into_iter().find_map(|s| {
        let cand = ClosedEgfSpec {
            case: make(s),
            params: vec![q.gamma.clone(), q.gamma_p.clone()],
            order: spec.order,
        };
        (cand.gkp().ok().as_ref() == Some(q)).then_some(cand)
    })
}

/// The vertical EGFs `Σ_n k! S_{n,k} z^n/n! = d h^k`, `k ≤ k_max`, against
/// the recurrence, plus `d, h` against the exponential Riordan pair of the
/// Stirling matrix.
pub fn vertical_egf_check(sp: &StirlingParams, k_max: usize, order: usize) -> Report {
    let (a, b, r) = (&sp.a, &sp.b, &sp.r);
    let mut rep = Report::new(format!("vertical EGFs {sp}"));
    if b.is_zero() {
        rep.fail("b = 0 has no vertical closed form".into());
        return rep;
    }
    let (d, h) = vertical_dh(a, b, r, order);
    match stirling_riordan(a, b, r, order) {
        Ok(spec) => {
            rep.check(spec.d == d, || format!("d: closed {d}, Riordan {}", spec.d));
            rep.check(spec.h == h, || format!("h: closed {h}, Riordan {}", spec.h));
        }
        Err(e) => rep.fail(e.to_string()),
    }
    let tri = sp.triangle(order.saturating_sub(1));
    let mut col = d;
    for k in 0..=k_max {
        for n in 0..order {
            let want = tri.get(n, k as i64) * factorial(k) / factorial(n);
            let got = col.coeff(n);
            rep.check(*got == want, || format!("column {k}, z^{n}: closed {got}, recurrence {want}"));
        }
        col = col.mul(&h);
    }
    rep
}

/// The `k!`-weighted Stirling EGF divided coefficientwise by `k!` must be
/// the unweighted one.
pub fn weighted_stirling_check(a: &Rat, b: &Rat, r: &Rat, order: usize) -> Report {
    let params = vec![a.clone(), b.clone(), r.clone()];
    let mut rep = Report::new(format!("k!-weighted Stirling EGF S({a},{b};{r})"));
    let run = || -> Result<(Vec<PolyT>, Vec<PolyT>)> {
        let w = reduce(&closed_egf(&ClosedEgfSpec::new(EgfCase::SElem, params.clone(), order)?)?)?;
        let v = reduce(&closed_egf(&ClosedEgfSpec::new(EgfCase::SVertical, params.clone(), order)?)?)?;
        Ok((w, v))
    };
    match run() {
        Ok((w, v)) => {
            for (n, (pw, pv)) in w.iter().zip(&v).enumerate() {
                let unweighted = PolyT::new((0..=n).map(|k| pw.coeff(k) / factorial(k)).collect());
                rep.check(unweighted == *pv, || format!("z^{n}: {unweighted} vs {pv}"));
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// The contiguity relation of the Stirling-type Narayana numbers at
/// `b = 2`, on rows and on the closed EGF:
/// `(2t - 1) G_n(c0,c∞) + n G_{n-1}(c0,c∞) = 2t G_n(c0+1,c∞) - G_n(c0-1,c∞+2)`,
/// whose EGF form is `(2t - 1 + z) G = 2t G(c0+1,c∞) - G(c0-1,c∞+2)`.
pub fn narayana_egf_contiguity(c0: &Rat, ci: &Rat, order: usize) -> Report {
    let mut rep = Report::new(format!("Narayana contiguity c0 = {c0}, c∞ = {ci}"));
    let spec = |a: Rat, b: Rat| ClosedEgfSpec {
        case: EgfCase::B(Subcase::S),
        params: vec![a, b],
        order,
    };
    let one = rat(1);
    let specs = [
        spec(c0.clone(), ci.clone()),
        spec(c0 + &one, ci.clone()),
        spec(c0 - &one, ci + rat(2)),
    ];
    let t = PolyT::t();
    let two_t_minus_1 = PolyT::linear(rat(-1), rat(2));
    let two_t = t.scale(&rat(2));

    // Rows from the recurrence.
    let rows: Result<Vec<_>> = specs
        .iter()
        .map(|s| Ok(egf_truncated(&triangle_from_recurrence(&s.gkp()?, order.saturating_sub(1)))))
        .collect();
    match rows {
        Ok(r) => {
            for n in 1..order {
                let row = |i: usize, m: usize| r[i].coeff(m).scale(&factorial(m));
                let lhs = &(&two_t_minus_1 * &row(0, n)) + &row(0, n - 1).scale(&rat(n as i64));
                let rhs = &(&two_t * &row(1, n)) - &row(2, n);
                rep.check(lhs == rhs, || format!("row {n}: {lhs} vs {rhs}"));
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }

    // The same identity on the closed forms.
    let closed: Result<Vec<_>> = specs.iter().map(closed_egf).collect();
    match closed {
        Ok(g) => {
            let lin = Series::constant(RatFuncT::from_poly(two_t_minus_1.clone()), order)
                .add(&Series::monomial_z(RatFuncT::one(), order));
            let lhs = g[0].mul(&lin);
            let rhs = g[1].scale_by(&RatFuncT::from_poly(two_t.clone())).sub(&g[2]);
            rep.check(lhs == rhs, || "closed EGF form differs".into());
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// The second left-peak EGF against the derivative of
/// `(sinh(zv)/v) / (cosh(zv) - sinh(zv)/v)`.
pub fn left_peak_derivative_check(order: usize) -> Report {
    let mut rep = Report::new("left peaks, derivative form");
    let run = || -> Result<(SeriesR, SeriesR)> {
        let sq = closed_egf(&ClosedEgfSpec::new(EgfCase::CProp(2), vec![], order)?)?;
        Ok((sq, left_peak_derivative_form(order)?))
    };
    match run() {
        Ok((a, b)) => {
            rep.check(a == b.truncate(a.order()), || format!("square {a} vs derivative {b}"));
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// For the tableau `r = (1/2, 1/2, 0)`, `g = (1, -1, 0)` (the
/// Stirling-type secant–tangent triangle at `b = 1`), the implicit `s`
/// must be the `s+` of the trigonometric closed form at `b = 2` with `z`
/// halved.
pub fn implicit_vs_sine_form(order: usize) -> Report {
    let mut rep = Report::new("implicit s against the sine-squared form");
    let run = |rep: &mut Report| -> Result<()> {
        let tab = Tableau::new([ratio(1, 2), ratio(1, 2), rat(0)], [rat(1), rat(-1), rat(0)])?;
        let s = implicit_s_solver(&tab, order, order)?;
        let (sp, _) = c_s_pair(Subcase::S, order)?;
        let half = ratio(1, 2);
        for j in 0..order {
            let c = sp.coeff(j).as_poly().ok_or(Error::Residue { order: j })?;
            let scale = powi(&half, j as i64);
            for i in 0..order {
                let want = c.coeff(i) * &scale;
                let got = s.coeff(i, j);
                rep.check(*got == want, || format!("[t^{i} z^{j}]: implicit {got}, sine form {want}"));
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// A random tableau with `r0` outside `0, -1, -2, ...`.
pub fn sample_tableau(rng: &mut SampleRng) -> Tableau {
    let r0 = rat_avoiding(rng, |x| x.is_integer() && *x <= Rat::zero());
    let (r1, g0, g1) = (small_rat(rng), small_rat(rng), small_rat(rng));
    let r_inf = rat(1) - &r0 - &r1;
    let g_inf = -(&g0 + &g1);
    Tableau::new([r0, r1, r_inf], [g0, g1, g_inf]).expect("sums hold by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::rng;

    #[test]
    fn every_case_matches_the_recurrence() {
        let mut r = rng(7);
        for rep in egf_check_all(&mut r, 3, 7) {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn restricted_forms_at_integers() {
        for case in EgfCase::all().into_iter().filter(|c| matches!(c, EgfCase::BRestricted(..))) {
            for c in [rat(1), rat(2), rat(-3), ratio(5, 2)] {
                let spec = ClosedEgfSpec::new(case, vec![c], 7).unwrap();
                let rep = egf_check(&spec);
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn lifts_are_coherent() {
        let mut r = rng(11);
        for case in [EgfCase::B(Subcase::S), EgfCase::C(Subcase::S), EgfCase::ESpeck2, EgfCase::EReducedSpeck] {
            let spec = ClosedEgfSpec {
                case,
                params: sample_params(case, &mut r),
                order: 6,
            };
            let rep = lift_coherence_check(&spec);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn vertical_and_weighted_stirling() {
        for (a, b, r) in [(0, 1, 0), (1, 1, 2), (-2, 3, 1)] {
            let rep = vertical_egf_check(&StirlingParams::from_ints(a, b, r), 4, 9);
            assert!(rep.passed(), "{rep}");
            let rep = weighted_stirling_check(&rat(a), &rat(b), &rat(r), 7);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn contiguity_and_left_peaks() {
        for (c0, ci) in [(rat(1), rat(0)), (ratio(1, 2), rat(-3))] {
            let rep = narayana_egf_contiguity(&c0, &ci, 7);
            assert!(rep.passed(), "{rep}");
        }
        let rep = left_peak_derivative_check(7);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn preconditions_are_enforced() {
        let v = |x: [i64; 6]| x.map(rat).to_vec();
        assert!(ClosedEgfSpec::new(EgfCase::A1, v([1, 1, 0, 1, 1, 0]), 4).is_err());
        assert!(ClosedEgfSpec::new(EgfCase::A1, v([1, 1, 0, 0, 0, 1]), 4).is_err());
        assert!(ClosedEgfSpec::new(EgfCase::ESpeck, vec![rat(0), rat(1), rat(1), rat(0)], 4).is_err());
        assert!(ClosedEgfSpec::new(EgfCase::B(Subcase::S), vec![rat(1)], 4).is_err());
    }

    #[test]
    fn implicit_matches_secant_tangent_example() {
        let tab = Tableau::new([ratio(1, 2), ratio(1, 2), rat(0)], [rat(1), rat(-1), rat(0)]).unwrap();
        let rep = implicit_check(&tab, 6);
        assert!(rep.passed(), "{rep}");
        let rep = implicit_vs_sine_form(6);
        assert!(rep.passed(), "{rep}");
    }
}
