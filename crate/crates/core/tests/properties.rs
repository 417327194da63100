use num_traits::{One, Zero};
use proptest::prelude::*;

use gkp_triangles::algebra::{gen_factorial, hyp_term, powi, FactorialDir, HypTermSpec};
use gkp_triangles::derivation::{iterated_derivatives, leibniz_check, triangle_via_derivation, MonoElem};
use gkp_triangles::families::{EulerianParams, StirlingParams};
use gkp_triangles::gkp::{trim, verify_pde, TrimSide};
use gkp_triangles::suites::s3_coherence_check;
use gkp_triangles::transforms::{generalized_lbt, upper_binomial_transform, LbtDir};
use gkp_triangles::{ratio, triangle_from_recurrence, GkpParams, PolyT, Rat, RatFuncT, Series};

fn small() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn nonzero() -> impl Strategy<Value = Rat> {
    small().prop_filter("nonzero", |x| !x.is_zero())
}

fn big() -> impl Strategy<Value = Rat> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(p, q)| ratio(p, q))
}

fn poly() -> impl Strategy<Value = PolyT> {
    prop::collection::vec(big(), 0..5).prop_map(PolyT::new)
}

fn ratfunc() -> impl Strategy<Value = RatFuncT> {
    (poly(), poly().prop_filter("nonzero denominator", |p| !p.is_zero())).prop_map(|(n, d)| RatFuncT::new(n, d))
}

fn params() -> impl Strategy<Value = GkpParams> {
    prop::collection::vec(small(), 6).prop_map(|v| GkpParams::from_slice(&v).unwrap())
}

fn params_nonzero_betas() -> impl Strategy<Value = GkpParams> {
    (params(), nonzero(), nonzero()).prop_map(|(mut p, b, bp)| {
        p.beta = b;
        p.beta_p = bp;
        p
    })
}

fn unit_normalized() -> impl Strategy<Value = GkpParams> {
    (params(), nonzero()).prop_map(|(mut p, b)| {
        p.beta_p = -&b;
        p.beta = b;
        p
    })
}

fn mono() -> impl Strategy<Value = MonoElem> {
    prop::collection::vec((small(), small(), small()), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(MonoElem::zero(), |e, (c, p, q)| e.add(&MonoElem::monomial(c, p, q)))
    })
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn ratfunc_ring_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn series_ring_laws(a in prop::collection::vec(big(), 6), b in prop::collection::vec(big(), 6), c in prop::collection::vec(big(), 6)) {
        let (a, b, c) = (Series::from_coeffs(a), Series::from_coeffs(b), Series::from_coeffs(c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn series_power_law(tail in prop::collection::vec(small(), 5), p in small(), q in small()) {
        let mut coeffs = vec![Rat::one()];
        coeffs.extend(tail);
        let s = Series::from_coeffs(coeffs);
        let lhs = s.pow_rat(&p).unwrap().mul(&s.pow_rat(&q).unwrap());
        prop_assert_eq!(lhs, s.pow_rat(&(&p + &q)).unwrap());
    }

    #[test]
    fn falling_is_shifted_rising(x in small(), a in small(), n in 0usize..8) {
        let shift = &x - &a * Rat::from_integer((n as i64 - 1).into());
        prop_assert_eq!(
            gen_factorial(&x, n, &a, FactorialDir::Falling),
            gen_factorial(&shift, n, &a, FactorialDir::Rising)
        );
    }

    #[test]
    fn hypergeometric_term_ratio(upper in prop::collection::vec(small(), 0..3), lower in prop::collection::vec(small(), 0..3), k in 0usize..6) {
        let spec = HypTermSpec::new(upper.clone(), lower.clone());
        let kr = Rat::from_integer((k as i64).into());
        if let (Ok(t0), Ok(t1)) = (hyp_term(&spec, k), hyp_term(&spec, k + 1)) {
            prop_assume!(!t0.is_zero());
            let up: Rat = upper.iter().map(|a| a + &kr).product();
            let low: Rat = lower.iter().map(|c| c + &kr).product();
            prop_assert_eq!(t1 / t0, up / low);
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn recurrence_holds_entrywise(p in params()) {
        let t = triangle_from_recurrence(&p, 9);
        prop_assert!(t.get(0, 0).is_one());
        prop_assert_eq!(t.first_recurrence_violation(&p), None);
    }

    #[test]
    fn tableau_round_trip(p in params_nonzero_betas()) {
        let tab = p.to_tableau().unwrap();
        prop_assert_eq!(tab.to_params(&p.beta, &p.beta_p).unwrap(), p);
    }

    #[test]
    fn left_trim_matches_new_recurrence(mut p in params(), gp in nonzero()) {
        p.gamma = Rat::zero();
        p.gamma_p = gp;
        let t = trim(&triangle_from_recurrence(&p, 9), TrimSide::Left).unwrap();
        let q = t.params.clone().unwrap();
        prop_assert!(t.same_entries(&triangle_from_recurrence(&q, 8)));
    }

    #[test]
    fn right_trim_matches_new_recurrence(mut p in params(), g in nonzero()) {
        p.gamma = g;
        p.gamma_p = Rat::zero();
        let t = trim(&triangle_from_recurrence(&p, 9), TrimSide::Right).unwrap();
        let q = t.params.clone().unwrap();
        prop_assert!(t.same_entries(&triangle_from_recurrence(&q, 8)));
    }

    #[test]
    fn mid_trim_matches_new_recurrence(mut p in params_nonzero_betas(), a in nonzero()) {
        p.gamma = &a * &p.beta;
        p.gamma_p = &a * &p.beta_p;
        let t = trim(&triangle_from_recurrence(&p, 9), TrimSide::Mid).unwrap();
        let q = t.params.clone().unwrap();
        prop_assert!(t.same_entries(&triangle_from_recurrence(&q, 8)));
    }

    #[test]
    fn pde_holds_for_every_triangle(p in params()) {
        let rep = verify_pde(&p, 10);
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn group_coherence(p in unit_normalized()) {
        let rep = s3_coherence_check(&p, 8);
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn binomial_pairs_invert(u in prop::collection::vec(small(), 0..9), a in small(), b in small()) {
        prop_assert_eq!(upper_binomial_transform(&upper_binomial_transform(&u, false), true), u.clone());
        let v = generalized_lbt(&u, &a, &b, LbtDir::Forward);
        prop_assert_eq!(generalized_lbt(&v, &a, &b, LbtDir::Inverse), u);
    }

    #[test]
    fn eulerian_reflection(a in small(), b in small(), c0 in small(), ci in small()) {
        let e = EulerianParams::new(a.clone(), b.clone(), c0.clone(), ci.clone());
        let r = EulerianParams::new(-a, b, ci, c0);
        let (t, u) = (e.triangle(9), r.triangle(9));
        for n in 0..=9 {
            for k in 0..=n {
                prop_assert_eq!(t.get(n, k as i64), u.get(n, (n - k) as i64));
            }
        }
    }

    #[test]
    fn homogeneity(a in small(), b in small(), r in small(), c in small(), lambda in nonzero()) {
        let s = StirlingParams::new(a.clone(), b.clone(), r.clone()).triangle(8);
        let sl = StirlingParams::new(&a * &lambda, &b * &lambda, &r * &lambda).triangle(8);
        let e = EulerianParams::new(a.clone(), b.clone(), r.clone(), c.clone()).triangle(8);
        let el = EulerianParams::new(&a * &lambda, &b * &lambda, &r * &lambda, &c * &lambda).triangle(8);
        for n in 0..=8 {
            for k in 0..=n {
                let kk = k as i64;
                prop_assert_eq!(sl.get(n, kk), powi(&lambda, (n - k) as i64) * s.get(n, kk));
                prop_assert_eq!(el.get(n, kk), powi(&lambda, n as i64) * e.get(n, kk));
            }
        }
    }

    #[test]
    fn derivation_matches_recurrence(p in params().prop_filter("β or β' nonzero", |p| !(p.beta.is_zero() && p.beta_p.is_zero()))) {
        let via = triangle_via_derivation(&p, 7).unwrap();
        prop_assert!(via.same_entries(&triangle_from_recurrence(&p, 7)));
    }

    #[test]
    fn derivation_support_on_lattice(p in params()) {
        for (n, e) in iterated_derivatives(&p, 6).iter().enumerate() {
            let nr = Rat::from_integer((n as i64).into());
            for ((x, y), _) in e.terms() {
                let on = (0..=n).any(|k| {
                    let kr = Rat::from_integer((k as i64).into());
                    *x == &p.gamma + &p.alpha * &nr + &p.beta * &kr
                        && *y == &p.gamma_p + &p.alpha_p * &nr + &p.beta_p * &kr
                });
                prop_assert!(on, "row {}: monomial ({}, {}) off the lattice", n, x, y);
            }
        }
    }

    #[test]
    fn leibniz_rule(p in params(), e1 in mono(), e2 in mono()) {
        prop_assert!(leibniz_check(&p, &e1, &e2));
    }
}
