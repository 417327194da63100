use super::{triangle_from_recurrence, GkpParams, Triangle};
use crate::algebra::{factorial, PolyT, Series};
use crate::report::Report;

/// `𝒜 = α + α't`, `𝓑 = (β + β't) t`, `𝒞 = γ + γ't`.
#[derive(Debug, Clone, PartialEq)]
pub struct PdeCoefficients {
    pub a: PolyT,
    pub b: PolyT,
    pub c: PolyT,
}

impl PdeCoefficients {
    pub fn new(p: &GkpParams) -> Self {
        PdeCoefficients {
            a: PolyT::linear(p.alpha.clone(), p.alpha_p.clone()),
            b: PolyT::linear(p.beta.clone(), p.beta_p.clone()).shift(1),
            c: PolyT::linear(p.gamma.clone(), p.gamma_p.clone()),
        }
    }
}

/// `Σ G_n(t) z^n / n!` for the rows present.
pub fn egf_truncated(tri: &Triangle) -> Series<PolyT> {
    Series::from_coeffs(
        (0..=tri.n_max())
            .map(|n| PolyT::new(tri.row(n).to_vec()).scale(&factorial(n).recip()))
            .collect(),
    )
}

/// Powers `z^j`, `j ≤ order - 2`, at which
/// `(𝒜z - 1) G_z + 𝓑 G_t + 𝒞 G` fails to vanish.
pub fn pde_residual_orders(p: &GkpParams, egf: &Series<PolyT>) -> Vec<usize> {
    let pc = PdeCoefficients::new(p);
    let g = egf.coeffs();
    let dz = egf.derivative_z();
    let mut bad = Vec::new();
    for (j, gj) in g.iter().enumerate().take(egf.order().saturating_sub(1)) {
        // [z^j] of 𝒜 z G_z is 𝒜 j g_j.
        let az = (&pc.a * gj).scale(&crate::algebra::rat(j as i64));
        let r = &(&(&az - dz.coeff(j)) + &(&pc.b * &gj.derive())) + &(&pc.c * gj);
        if !r.is_zero() {
            bad.push(j);
        }
    }
    bad
}

/// Checks the PDE on the recurrence EGF with rows `0..n` (order `n`).
pub fn verify_pde(p: &GkpParams, n: usize) -> Report {
    let tri = triangle_from_recurrence(p, n.saturating_sub(1));
    verify_pde_triangle(p, &tri)
}

/// Checks the PDE for `p` on an arbitrary triangle.
pub fn verify_pde_triangle(p: &GkpParams, tri: &Triangle) -> Report {
    let mut rep = Report::new(format!("pde [{p}]"));
    let egf = egf_truncated(tri);
    let bad = pde_residual_orders(p, &egf);
    rep.cases = egf.order().saturating_sub(1);
    for j in bad {
        rep.fail(format!("z^{j} coefficient is nonzero (involves row {})", j + 1));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio, Rat, RatFuncT};

    #[test]
    fn binomial_egf() {
        let t = triangle_from_recurrence(&GkpParams::from_ints([0, 0, 1, 0, 0, 1]), 4);
        let e = egf_truncated(&t);
        assert_eq!(e.coeff(0), &PolyT::one());
        assert_eq!(e.coeff(2), &PolyT::new(vec![ratio(1, 2), rat(1), ratio(1, 2)]));
        assert!(verify_pde(&GkpParams::from_ints([0, 0, 1, 0, 0, 1]), 10).passed());
    }

    #[test]
    fn eulerian_egf_closed_form() {
        // (1-t)/(e^{(t-1)z} - t)
        let n = 5;
        let t = triangle_from_recurrence(&GkpParams::from_ints([0, 1, 1, 1, -1, 0]), n - 1);
        let egf = egf_truncated(&t).map(|p| RatFuncT::from_poly(p.clone()));
        let tm1 = RatFuncT::from_poly(PolyT::from_ints(&[-1, 1]));
        let e = Series::monomial_z(tm1.clone(), n).exp().unwrap();
        let den = e.sub(&Series::constant(RatFuncT::t(), n));
        let closed = Series::constant(-tm1, n).div(&den).unwrap();
        assert_eq!(closed, egf);
    }

    #[test]
    fn corrupted_entry_caught_at_its_order() {
        let p = GkpParams::new(ratio(1, 2), rat(2), rat(-1), ratio(3, 7), rat(1), rat(4));
        let t = triangle_from_recurrence(&p, 8);
        assert!(verify_pde_triangle(&p, &t).passed());
        let bad = t.map(None, |n, k, v| if (n, k) == (5, 2) { v + Rat::from_integer(1.into()) } else { v.clone() });
        let orders = pde_residual_orders(&p, &egf_truncated(&bad));
        assert_eq!(orders.first(), Some(&4));
        assert!(!verify_pde_triangle(&p, &bad).passed());
    }
}
