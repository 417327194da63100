//! Exponential Riordan arrays `[d, h]` with `<n,k> = (n!/k!) [z^n] d h^k`.
//! The generalized Stirling matrices form a groupoid under the matrix
//! product: `S(a,b;r1) S(b,c;r2) = S(a,c;r1+r2)`.

use num_traits::{One, Zero};

use super::StirlingParams;
use crate::algebra::{factorial, rat, Rat, Series};
use crate::error::{Error, Result};
use crate::gkp::Triangle;
use crate::report::Report;

/// `[d, h]` truncated below `z^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct RiordanSpec {
    pub d: Series<Rat>,
    pub h: Series<Rat>,
}

impl RiordanSpec {
    pub fn new(d: Series<Rat>, h: Series<Rat>) -> Result<Self> {
        if d.order() < 1 || d.coeff(0).is_zero() {
            return Err(Error::Param("Riordan d needs a nonzero constant term".into()));
        }
        if h.order() < 2 || !h.coeff(0).is_zero() || h.coeff(1).is_zero() {
            return Err(Error::Param("Riordan h needs h(0) = 0 and h'(0) ≠ 0".into()));
        }
        Ok(RiordanSpec { d, h })
    }

    pub fn order(&self) -> usize {
        self.d.order().min(self.h.order())
    }

    /// `[d1,h1][d2,h2] = [(d2∘h1) d1, h2∘h1]`.
    pub fn product(&self, other: &RiordanSpec) -> Result<RiordanSpec> {
        let d = other.d.compose(&self.h)?.mul(&self.d);
        let h = other.h.compose(&self.h)?;
        RiordanSpec::new(d, h)
    }

    /// `[d,h]^{-1} = [1/(d∘h̄), h̄]` with `h̄` the compositional inverse.
    pub fn inverse(&self) -> Result<RiordanSpec> {
        let hbar = compositional_inverse(&self.h)?;
        let d = self.d.compose(&hbar)?.inverse()?;
        RiordanSpec::new(d, hbar)
    }
}

/// The series `g` with `h(g(z)) = z`, found one coefficient per pass.
fn compositional_inverse(h: &Series<Rat>) -> Result<Series<Rat>> {
    let n = h.order();
    let h1 = h.coeff(1).clone();
    let z = Series::monomial_z(Rat::one(), n);
    let mut g = z.scale(&h1.recip());
    for _ in 0..n {
        let excess = h.compose(&g)?.sub(&g.scale(&h1));
        g = z.sub(&excess).scale(&h1.recip());
    }
    Ok(g)
}

/// `log(1 + a z)/a`, equal to `z` at `a = 0`.
fn log_a(a: &Rat, order: usize) -> Series<Rat> {
    let mut c = vec![Rat::zero(); order];
    let mut pw = Rat::one();
    for (m, slot) in c.iter_mut().enumerate().skip(1) {
        let s = if m % 2 == 1 { rat(1) } else { rat(-1) };
        *slot = s * &pw / rat(m as i64);
        pw *= a;
    }
    Series::from_coeffs(c)
}

/// `S(a,b;r) = [(1+az)^{r/a}, ((1+az)^{b/a} - 1)/b]`, written through
/// `L = log(1+az)/a` as `[e^{rL}, Σ_{m≥1} b^{m-1} L^m / m!]` so the
/// degenerate cases `a = 0` and `b = 0` need no separate branch.
pub fn stirling_riordan(a: &Rat, b: &Rat, r: &Rat, order: usize) -> Result<RiordanSpec> {
    let l = log_a(a, order);
    let d = l.scale(r).exp()?;
    let mut h = Series::zero(order);
    let mut lp = Series::one(order);
    let mut bp = Rat::one();
    for m in 1..order {
        lp = lp.mul(&l);
        h = h.add(&lp.scale(&(&bp / factorial(m))));
        bp *= b;
    }
    RiordanSpec::new(d, h)
}

/// Rows `0..order` of the matrix of `[d, h]`.
pub fn riordan_matrix(spec: &RiordanSpec) -> Triangle {
    let n = spec.order();
    let mut cols: Vec<Series<Rat>> = Vec::with_capacity(n);
    let mut dh = spec.d.truncate(n);
    for _ in 0..n {
        cols.push(dh.clone());
        dh = dh.mul(&spec.h);
    }
    Triangle::from_fn(n.saturating_sub(1), None, |row, k| {
        cols[k].coeff(row) * factorial(row) / factorial(k)
    })
}

/// Lower-triangular matrix product truncated to the common depth.
pub fn matrix_product(x: &Triangle, y: &Triangle) -> Triangle {
    let n = x.n_max().min(y.n_max());
    Triangle::from_fn(n, None, |i, k| (k..=i).map(|j| x.get(i, j as i64) * y.get(j, k as i64)).sum())
}

fn compare_triangles(rep: &mut Report, what: &str, got: &Triangle, want: &Triangle) {
    let n = got.n_max().min(want.n_max());
    for i in 0..=n {
        for k in 0..=i {
            let (g, w) = (got.get(i, k as i64), want.get(i, k as i64));
            rep.check(g == w, || format!("{what} at ({i},{k}): {g} vs {w}"));
        }
    }
}

fn identity(n: usize) -> Triangle {
    Triangle::from_fn(n, None, |i, k| if i == k { Rat::one() } else { Rat::zero() })
}

fn s_tri(a: &Rat, b: &Rat, r: &Rat, n: usize) -> Triangle {
    StirlingParams::new(a.clone(), b.clone(), r.clone()).triangle(n)
}

/// `S(a,b;r1) S(b,c;r2) = S(a,c;r1+r2)` by matrix product and by the
/// Riordan product of the generating pairs; also checks that each
/// generating pair reproduces its recurrence matrix.
pub fn riordan_product_check(a: &Rat, b: &Rat, c: &Rat, r1: &Rat, r2: &Rat, n: usize) -> Result<Report> {
    let mut rep = Report::new("riordan product");
    let (x, y) = (s_tri(a, b, r1, n), s_tri(b, c, r2, n));
    let want = s_tri(a, c, &(r1 + r2), n);
    compare_triangles(&mut rep, "matrix product", &matrix_product(&x, &y), &want);
    let rx = stirling_riordan(a, b, r1, n + 1)?;
    let ry = stirling_riordan(b, c, r2, n + 1)?;
    compare_triangles(&mut rep, "[d,h] of S(a,b;r1)", &riordan_matrix(&rx), &x);
    compare_triangles(&mut rep, "Riordan product", &riordan_matrix(&rx.product(&ry)?), &want);
    Ok(rep)
}

/// `S(a,b;r)^{-1} = S(b,a;-r)` by matrix product and Riordan inversion.
pub fn riordan_inverse_check(a: &Rat, b: &Rat, r: &Rat, n: usize) -> Result<Report> {
    let mut rep = Report::new("riordan inverse");
    let x = s_tri(a, b, r, n);
    let want = s_tri(b, a, &-r, n);
    compare_triangles(&mut rep, "S(a,b;r) S(b,a;-r)", &matrix_product(&x, &want), &identity(n));
    let inv = stirling_riordan(a, b, r, n + 1)?.inverse()?;
    compare_triangles(&mut rep, "Riordan inverse", &riordan_matrix(&inv), &want);
    Ok(rep)
}

/// `(k!/(k1! k2!)) S_{n,k}(a,b;r1+r2) = Σ_{n1+n2=n} (n!/(n1! n2!))
/// S_{n1,k1}(a,b;r1) S_{n2,k2}(a,b;r2)` for all `k1 + k2 = k ≤ n ≤ n_max`.
pub fn riordan_convolution_check(a: &Rat, b: &Rat, r1: &Rat, r2: &Rat, n_max: usize) -> Report {
    let mut rep = Report::new("riordan convolution");
    let (x, y, s) = (s_tri(a, b, r1, n_max), s_tri(a, b, r2, n_max), s_tri(a, b, &(r1 + r2), n_max));
    for n in 0..=n_max {
        for k in 0..=n {
            for k1 in 0..=k {
                let k2 = k - k1;
                let lhs = factorial(k) / (factorial(k1) * factorial(k2)) * s.get(n, k as i64);
                let rhs: Rat = (k1..=n - k2)
                    .map(|n1| {
                        let n2 = n - n1;
                        factorial(n) / (factorial(n1) * factorial(n2))
                            * x.get(n1, k1 as i64)
                            * y.get(n2, k2 as i64)
                    })
                    .sum();
                rep.check(lhs == rhs, || format!("n = {n}, k1 = {k1}, k2 = {k2}: {lhs} vs {rhs}"));
            }
        }
    }
    rep
}

/// With `n1 = n + k2`: `(n1!/(n! k2!)) S_{n,k}(a,b;r1+r2) = Σ_{k1 = k+n2}
/// (k1!/(k! n2!)) S_{n1,k1}(a,b;r1) S_{n2,k2}(b,a;r2)`, over `n1 ≥ k1`,
/// `n2 ≥ k2`; checked for `k ≤ n ≤ n_max`, `k2 ≤ n_max`.
pub fn riordan_asym_convolution_check(a: &Rat, b: &Rat, r1: &Rat, r2: &Rat, n_max: usize) -> Report {
    let mut rep = Report::new("riordan asymmetric convolution");
    let depth = 2 * n_max;
    let (x, y, s) = (s_tri(a, b, r1, depth), s_tri(b, a, r2, depth), s_tri(a, b, &(r1 + r2), n_max));
    for n in 0..=n_max {
        for k in 0..=n {
            for k2 in 0..=n_max {
                let n1 = n + k2;
                let lhs = factorial(n1) / (factorial(n) * factorial(k2)) * s.get(n, k as i64);
                let rhs: Rat = (k2..=n1 - k)
                    .map(|n2| {
                        let k1 = k + n2;
                        factorial(k1) / (factorial(k) * factorial(n2))
                            * x.get(n1, k1 as i64)
                            * y.get(n2, k2 as i64)
                    })
                    .sum();
                rep.check(lhs == rhs, || format!("n = {n}, k = {k}, k2 = {k2}: {lhs} vs {rhs}"));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{rng, small_rat};

    #[test]
    fn stirling_inversion() {
        let (zero, one) = (rat(0), rat(1));
        let x = s_tri(&zero, &one, &zero, 12);
        let y = s_tri(&one, &zero, &zero, 12);
        assert!(matrix_product(&x, &y).same_entries(&identity(12)));
        // The inverse holds the cycle numbers with sign (-1)^{n-k}.
        assert_eq!(y.get(3, 2), rat(-3));
        assert_eq!(y.get(4, 1), rat(-6));
        assert_eq!(y.get(4, 2), rat(11));
        assert!(riordan_inverse_check(&zero, &one, &zero, 12).unwrap().passed());
    }

    #[test]
    fn same_step_is_identity() {
        let mut g = rng(51);
        for _ in 0..4 {
            let a = small_rat(&mut g);
            assert!(s_tri(&a, &a, &rat(0), 8).same_entries(&identity(8)));
        }
    }

    #[test]
    fn algebra_on_random_parameters() {
        let mut g = rng(52);
        for _ in 0..3 {
            let v: Vec<Rat> = (0..5).map(|_| small_rat(&mut g)).collect();
            let rep = riordan_product_check(&v[0], &v[1], &v[2], &v[3], &v[4], 8).unwrap();
            assert!(rep.passed(), "{rep}");
            assert!(riordan_inverse_check(&v[0], &v[1], &v[3], 8).unwrap().passed());
            assert!(riordan_convolution_check(&v[0], &v[1], &v[3], &v[4], 7).passed());
            let rep = riordan_asym_convolution_check(&v[0], &v[1], &v[3], &v[4], 5);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn spec_validation() {
        let d = Series::from_coeffs(vec![rat(0), rat(1)]);
        let h = Series::from_coeffs(vec![rat(0), rat(1)]);
        assert!(RiordanSpec::new(d, h.clone()).is_err());
        assert!(RiordanSpec::new(Series::one(2), Series::from_coeffs(vec![rat(1), rat(1)])).is_err());
        assert!(RiordanSpec::new(Series::one(2), h).is_ok());
    }
}
