//! Generalized Eulerian row polynomials with `(a,b) = (-2,1)` as Jacobi
//! polynomials `P_n^{(A,-A)}(-t)`, and the Boros–Moll polynomials as the
//! special case `c0 = 1/2`.

use super::EulerianParams;
use crate::algebra::{binom, binom_rat, factorial, rat, ratio, PolyT, Rat};
use crate::gkp::{row_polynomial, trim, TrimSide};
use crate::report::Report;

/// `P_n^{(A,B)}(t) = Σ_k C(n+A, n-k) C(n+B, k) ((t-1)/2)^k ((t+1)/2)^{n-k}`.
pub fn jacobi_p(n: usize, a: &Rat, b: &Rat) -> PolyT {
    let half = ratio(1, 2);
    let tm = PolyT::linear(-&half, half.clone());
    let tp = PolyT::linear(half.clone(), half);
    let nr = rat(n as i64);
    (0..=n).fold(PolyT::zero(), |acc, k| {
        let c = binom_rat(&(&nr + a), (n - k) as i64) * binom_rat(&(&nr + b), k as i64);
        &acc + &(&tm.pow(k as u32) * &tp.pow((n - k) as u32)).scale(&c)
    })
}

/// Validates [`jacobi_p`] against the standard three-term recurrence
/// `2n(n+A+B)(2n+A+B-2) P_n = (2n+A+B-1)[(2n+A+B)(2n+A+B-2) t + A²-B²] P_{n-1}
///  - 2(n+A-1)(n+B-1)(2n+A+B) P_{n-2}` and the first two polynomials.
pub fn jacobi_recurrence_check(a: &Rat, b: &Rat, n_max: usize) -> Report {
    let mut rep = Report::new(format!("Jacobi recurrence A = {a}, B = {b}"));
    let p0 = jacobi_p(0, a, b);
    rep.check(p0 == PolyT::one(), || format!("P_0 = {p0}"));
    let p1 = jacobi_p(1, a, b);
    let s = a + b;
    let want1 = PolyT::linear((a - b) / rat(2), (&s + rat(2)) / rat(2));
    rep.check(p1 == want1, || format!("P_1 = {p1}, expected {want1}"));
    for n in 2..=n_max {
        let nr = rat(n as i64);
        let m = rat(2) * &nr + &s;
        let lhs = jacobi_p(n, a, b).scale(&(rat(2) * &nr * (&nr + &s) * (&m - rat(2))));
        let lin = PolyT::linear(a * a - b * b, &m * (&m - rat(2)));
        let rhs = &(&lin * &jacobi_p(n - 1, a, b)).scale(&(&m - rat(1)))
            - &jacobi_p(n - 2, a, b).scale(&(rat(2) * (&nr + a - rat(1)) * (&nr + b - rat(1)) * &m));
        rep.check(lhs == rhs, || format!("n = {n}: {lhs} vs {rhs}"));
    }
    rep
}

fn neg_t(p: &PolyT) -> PolyT {
    p.compose(&PolyT::linear(rat(0), rat(-1)))
}

/// `E_{n+1,k}(-2,1;c0,0) = c0 n! [t^k] P_n^{(c0+n+1, -c0-n-1)}(-t)` and
/// `E_{n,k}(-2,1;c0+1,-1) = n! [t^k] P_n^{(c0+n, -c0-n)}(-t)`, `n ≤ n_max`.
pub fn jacobi_identity_check(c0: &Rat, n_max: usize) -> Report {
    let mut rep = Report::new(format!("Jacobi row polynomials c0 = {c0}"));
    let wide = EulerianParams::new(rat(-2), rat(1), c0.clone(), rat(0)).triangle(n_max + 1);
    let narrow = EulerianParams::new(rat(-2), rat(1), c0 + rat(1), rat(-1)).triangle(n_max);
    for n in 0..=n_max {
        let nr = rat(n as i64);
        let a2 = c0 + &nr + rat(1);
        let want2 = neg_t(&jacobi_p(n, &a2, &-&a2)).scale(&(c0 * factorial(n)));
        let got2 = row_polynomial(&wide, n + 1).expect("row in range");
        rep.check(got2 == want2, || format!("shifted form, n = {n}: {got2} vs {want2}"));
        let a1 = c0 + &nr;
        let want1 = neg_t(&jacobi_p(n, &a1, &-&a1)).scale(&factorial(n));
        let got1 = row_polynomial(&narrow, n).expect("row in range");
        rep.check(got1 == want1, || format!("trimmed form, n = {n}: {got1} vs {want1}"));
    }
    rep
}

/// The second form is the right-trim of the first at `c0 + 1`:
/// trimming `E(-2,1;c0,0)` gives `E(-2,1;c0+2,-1)` exactly.
pub fn jacobi_trim_check(c0: &Rat, n_max: usize) -> Report {
    let mut rep = Report::new(format!("Jacobi right-trim coherence c0 = {c0}"));
    let wide = EulerianParams::new(rat(-2), rat(1), c0.clone(), rat(0)).triangle(n_max + 1);
    let want = EulerianParams::new(rat(-2), rat(1), c0 + rat(2), rat(-1));
    match trim(&wide, TrimSide::Right) {
        Ok(t) => {
            rep.check(t.params.as_ref() == Some(&want.gkp()), || {
                format!("trimmed array {:?} vs {}", t.params, want.gkp())
            });
            rep.check(t.same_entries(&want.triangle(n_max)), || "trimmed entries differ".into());
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// Boros–Moll polynomial `P_m(a) = 2^{-2m} Σ_k 2^k C(2m-2k, m-k) C(m+k, m) (a+1)^k`.
pub fn boros_moll(m: usize) -> PolyT {
    let ap1 = PolyT::linear(rat(1), rat(1));
    let mi = m as i64;
    let s = (0..=m).fold(PolyT::zero(), |acc, k| {
        let ki = k as i64;
        let c = crate::algebra::powi(&rat(2), ki) * binom(2 * mi - 2 * ki, mi - ki) * binom(mi + ki, mi);
        &acc + &ap1.pow(k as u32).scale(&c)
    });
    s.scale(&crate::algebra::powi(&rat(4), -mi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{rng, small_rat};

    #[test]
    fn definition_matches_recurrence() {
        let mut g = rng(61);
        for _ in 0..4 {
            let (a, b) = (small_rat(&mut g), small_rat(&mut g));
            let rep = jacobi_recurrence_check(&a, &b, 8);
            // The recurrence degenerates when 2n + A + B vanishes.
            if (2..=8).all(|n| {
                let s = rat(2 * n) + &a + &b;
                s != rat(0) && s != rat(1) && s != rat(2) && rat(n) + &a + &b != rat(0)
            }) {
                assert!(rep.passed(), "{rep}");
            }
        }
        assert_eq!(jacobi_p(2, &rat(0), &rat(0)), PolyT::new(vec![ratio(-1, 2), rat(0), ratio(3, 2)]));
    }

    #[test]
    fn row_polynomials_are_jacobi() {
        for c0 in [ratio(1, 2), rat(1), ratio(-7, 3), rat(3)] {
            let rep = jacobi_identity_check(&c0, 7);
            assert!(rep.passed(), "{rep}");
            assert!(jacobi_trim_check(&c0, 7).passed());
        }
        let rep = jacobi_identity_check(&rat(0), 0);
        assert!(rep.passed());
    }

    #[test]
    fn boros_moll_case() {
        let t = EulerianParams::new(rat(-2), rat(1), ratio(3, 2), rat(-1)).triangle(6);
        for n in 0..=6 {
            let want = neg_t(&boros_moll(n)).scale(&factorial(n));
            assert_eq!(row_polynomial(&t, n).unwrap(), want);
        }
    }
}
