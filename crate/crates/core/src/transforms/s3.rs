use std::fmt;

use num_traits::Zero;

use crate::algebra::{binom, rat, sign, PolyT, Rat, RatFuncT, Series};
use crate::error::{Error, Result};
use crate::gkp::{GkpParams, Tableau, Triangle};

/// A point of `{0, 1, ∞}` on the projective `t`-line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Zero,
    One,
    Inf,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::Zero, Label::One, Label::Inf];

    fn index(self) -> usize {
        match self {
            Label::Zero => 0,
            Label::One => 1,
            Label::Inf => 2,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Zero => "0",
            Label::One => "1",
            Label::Inf => "∞",
        })
    }
}

/// The six liftings `(t, z) = (R(t*), S(t*) z*)` that keep `β' = -β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum S3Elem {
    Id,
    /// Reflection, `(0 ∞)`.
    Rt,
    /// Upper binomial transformation, `(0 1)`.
    Ubt,
    /// `RT∘UBT∘RT`, `(1 ∞)`.
    RtUbtRt,
    /// `UBT∘RT`, `(0 ∞ 1)`.
    UbtRt,
    /// `RT∘UBT`, `(0 1 ∞)`.
    RtUbt,
}

impl S3Elem {
    pub const ALL: [S3Elem; 6] = [
        S3Elem::Id,
        S3Elem::Rt,
        S3Elem::Ubt,
        S3Elem::RtUbtRt,
        S3Elem::UbtRt,
        S3Elem::RtUbt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            S3Elem::Id => "id",
            S3Elem::Rt => "rt",
            S3Elem::Ubt => "ubt",
            S3Elem::RtUbtRt => "rt-ubt-rt",
            S3Elem::UbtRt => "ubt-rt",
            S3Elem::RtUbt => "rt-ubt",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }

    /// `R` as a rational function of `t*`.
    pub fn lift_r(self) -> RatFuncT {
        let p = |v: &[i64]| PolyT::from_ints(v);
        let (num, den) = match self {
            S3Elem::Id => (p(&[0, 1]), p(&[1])),
            S3Elem::Rt => (p(&[1]), p(&[0, 1])),
            S3Elem::Ubt => (p(&[1, -1]), p(&[1])),
            S3Elem::RtUbtRt => (p(&[0, -1]), p(&[1, -1])),
            S3Elem::UbtRt => (p(&[-1, 1]), p(&[0, 1])),
            S3Elem::RtUbt => (p(&[1]), p(&[1, -1])),
        };
        RatFuncT::new(num, den)
    }

    /// `S` as a polynomial in `t*` (it is always the denominator of `R`
    /// up to sign).
    pub fn lift_s(self) -> PolyT {
        let v: &[i64] = match self {
            S3Elem::Id => &[1],
            S3Elem::Rt => &[0, 1],
            S3Elem::Ubt => &[-1],
            S3Elem::RtUbtRt => &[1, -1],
            S3Elem::UbtRt => &[0, -1],
            S3Elem::RtUbt => &[-1, 1],
        };
        PolyT::from_ints(v)
    }

    /// Image of a label under the Möbius map `R`.
    pub fn perm(self, l: Label) -> Label {
        let r = self.lift_r();
        let image = match l {
            Label::Inf => {
                let (dn, dd) = (r.num().degree().unwrap_or(0), r.den().degree().unwrap_or(0));
                if dn > dd {
                    None
                } else if dn < dd {
                    Some(Rat::zero())
                } else {
                    Some(r.num().leading() / r.den().leading())
                }
            }
            finite => r.eval(&rat(if finite == Label::Zero { 0 } else { 1 })),
        };
        match image {
            None => Label::Inf,
            Some(x) if x.is_zero() => Label::Zero,
            Some(x) if x == rat(1) => Label::One,
            Some(x) => unreachable!("R maps a label to {x}"),
        }
    }

    /// Cycle notation of `perm`.
    pub fn cycles(self) -> String {
        let mut seen = [false; 3];
        let mut out = String::new();
        for start in Label::ALL {
            if seen[start.index()] {
                continue;
            }
            out.push('(');
            let mut l = start;
            loop {
                seen[l.index()] = true;
                out.push_str(&l.to_string());
                l = self.perm(l);
                if l == start {
                    break;
                }
            }
            out.push(')');
        }
        out
    }

    fn identify(r: &RatFuncT, s: &RatFuncT) -> Option<S3Elem> {
        Self::ALL
            .into_iter()
            .find(|e| e.lift_r() == *r && RatFuncT::from_poly(e.lift_s()) == *s)
    }
}

impl fmt::Display for S3Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(R, S)∘(R*, S*) = (R∘R*, (S∘R*) S*)`, identified among the six. On
/// rows this applies `e1` first, then `e2`.
pub fn s3_compose(e1: S3Elem, e2: S3Elem) -> S3Elem {
    let r2 = e2.lift_r();
    let r = e1.lift_r().substitute(&r2);
    let s = &RatFuncT::from_poly(e1.lift_s()).substitute(&r2) * &RatFuncT::from_poly(e2.lift_s());
    S3Elem::identify(&r, &s).expect("the six liftings are closed under composition")
}

/// `(R, S)^(-1) = (R̄, 1/(S∘R̄))` with `R̄` the inverse Möbius map.
pub fn s3_inverse(e: S3Elem) -> S3Elem {
    // R = (a + b t)/(c + d t)  ⇒  R̄ = (a - c t)/(d t - b).
    let r = e.lift_r();
    let (a, b) = (r.num().coeff(0), r.num().coeff(1));
    let (c, d) = (r.den().coeff(0), r.den().coeff(1));
    let rbar = RatFuncT::new(PolyT::linear(a, -c), PolyT::linear(-b, d));
    let sbar = RatFuncT::from_poly(e.lift_s())
        .substitute(&rbar)
        .inv()
        .expect("S is nonzero");
    S3Elem::identify(&rbar, &sbar).expect("inverse lies in the group")
}

fn require_unit_normalized(p: &GkpParams) -> Result<()> {
    if p.is_unit_normalized() {
        Ok(())
    } else {
        Err(Error::Normalization(format!(
            "the order-6 group needs β' = -β ≠ 0 (got β = {}, β' = {}); rescale the lower row first",
            p.beta, p.beta_p
        )))
    }
}

/// The transformed parameter array of a triangle with `β' = -β ≠ 0`.
pub fn s3_transform_params(e: S3Elem, p: &GkpParams) -> Result<GkpParams> {
    if e == S3Elem::Id {
        return Ok(p.clone());
    }
    require_unit_normalized(p)?;
    let (a, b, c, ap, bp, cp) = (&p.alpha, &p.beta, &p.gamma, &p.alpha_p, &p.beta_p, &p.gamma_p);
    let mk = |a: Rat, c: Rat, ap: Rat, cp: Rat| GkpParams::new(a, b.clone(), c, ap, bp.clone(), cp);
    Ok(match e {
        S3Elem::Id => p.clone(),
        S3Elem::Rt => mk(ap - b, cp.clone(), a + b, c.clone()),
        S3Elem::Ubt => mk(-(a + ap), -(c + cp), ap.clone(), cp.clone()),
        S3Elem::RtUbtRt => mk(a.clone(), c.clone(), b - a - ap, -(c + cp)),
        S3Elem::UbtRt => mk(ap - b, cp.clone(), b - a - ap, -(c + cp)),
        S3Elem::RtUbt => mk(-(a + ap), -(c + cp), a + b, c.clone()),
    })
}

/// Applies the row-wise formula of `e`. With `negate`, also multiplies row
/// `n` by `(-1)^n` (the element with `S` negated) and negates the array.
pub fn s3_transform_rows(e: S3Elem, tri: &Triangle, negate: bool) -> Result<Triangle> {
    let params = match &tri.params {
        Some(p) => {
            let q = s3_transform_params(e, p)?;
            Some(if negate { negated(&q) } else { q })
        }
        None => None,
    };
    let out = Triangle::from_fn(tri.n_max(), params, |n, k| {
        let (ni, ki) = (n as i64, k as i64);
        let g = |j: usize| tri.get(n, j as i64);
        let c = |a: usize, b: usize| binom(a as i64, b as i64);
        let v = match e {
            S3Elem::Id => g(k),
            S3Elem::Rt => g(n - k),
            S3Elem::Ubt => sign(ni - ki) * (k..=n).map(|j| c(j, k) * g(j)).sum::<Rat>(),
            S3Elem::RtUbtRt => sign(ki) * (0..=k).map(|j| c(n - j, n - k) * g(j)).sum::<Rat>(),
            S3Elem::UbtRt => sign(ki) * (n - k..=n).map(|j| c(j, n - k) * g(j)).sum::<Rat>(),
            S3Elem::RtUbt => sign(ni - ki) * (0..=n - k).map(|j| c(n - j, k) * g(j)).sum::<Rat>(),
        };
        if negate {
            sign(ni) * v
        } else {
            v
        }
    });
    Ok(out)
}

fn negated(p: &GkpParams) -> GkpParams {
    GkpParams::from_slice(&p.to_vec().iter().map(|x| -x).collect::<Vec<_>>()).unwrap()
}

/// The same transformation computed as `G*_n(t) = S(t)^n G_n(R(t))`.
pub fn s3_transform_rows_via_lift(e: S3Elem, tri: &Triangle) -> Triangle {
    let r = e.lift_r();
    let s = RatFuncT::from_poly(e.lift_s());
    let rows = (0..=tri.n_max())
        .map(|n| {
            let g = RatFuncT::from_poly(PolyT::new(tri.row(n).to_vec())).substitute(&r);
            let row = &g * &s.pow(n as i32);
            let p = row.as_poly().expect("S^n G_n(R) is a polynomial");
            (0..=n).map(|k| p.coeff(k)).collect()
        })
        .collect();
    Triangle::from_rows(rows, None)
}

/// `G(R(t), S(t) z)` for an EGF over rational functions.
pub fn lift_series(r: &RatFuncT, s: &RatFuncT, g: &Series<RatFuncT>) -> Series<RatFuncT> {
    let mut sp = RatFuncT::one();
    let mut out = Vec::with_capacity(g.order());
    for c in g.coeffs() {
        out.push(&c.substitute(r) * &sp);
        sp = &sp * s;
    }
    Series::from_coeffs(out)
}

/// Moves the pair at label `R(M)` to label `M`.
pub fn tableau_permute(e: S3Elem, tab: &Tableau) -> Tableau {
    let old = tab.pairs();
    Tableau::from_pairs(Label::ALL.map(|m| old[e.perm(m).index()].clone()))
}

/// Parameter map of the Stanton–Sprott involution (needs `β' = β ≠ 0`).
pub fn stanton_sprott_params(p: &GkpParams) -> Result<GkpParams> {
    if p.beta.is_zero() || p.beta_p != p.beta {
        return Err(Error::Normalization(format!(
            "Stanton–Sprott needs β' = β ≠ 0 (got β = {}, β' = {})",
            p.beta, p.beta_p
        )));
    }
    Ok(GkpParams::new(
        p.alpha.clone(),
        p.beta.clone(),
        p.gamma.clone(),
        -&p.beta + &p.alpha - &p.alpha_p,
        p.beta.clone(),
        &p.gamma - &p.gamma_p,
    ))
}

/// `<n, k>* = Σ_{j≤k} C(n-j, n-k) (-1)^j <n, j>`.
pub fn stanton_sprott(tri: &Triangle) -> Result<Triangle> {
    let params = match &tri.params {
        Some(p) => Some(stanton_sprott_params(p)?),
        None => None,
    };
    Ok(Triangle::from_fn(tri.n_max(), params, |n, k| {
        (0..=k)
            .map(|j| binom((n - j) as i64, (n - k) as i64) * sign(j as i64) * tri.get(n, j as i64))
            .sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::gkp::triangle_from_recurrence;

    #[test]
    fn cycles_match_names() {
        let c: Vec<String> = S3Elem::ALL.iter().map(|e| e.cycles()).collect();
        assert_eq!(c, ["(0)(1)(∞)", "(0∞)(1)", "(01)(∞)", "(0)(1∞)", "(0∞1)", "(01∞)"]);
    }

    #[test]
    fn composition_facts() {
        assert_eq!(s3_compose(S3Elem::Rt, S3Elem::Rt), S3Elem::Id);
        assert_eq!(s3_compose(S3Elem::Ubt, S3Elem::Ubt), S3Elem::Id);
        assert_eq!(s3_compose(S3Elem::Ubt, S3Elem::Rt), S3Elem::UbtRt);
        assert_eq!(s3_compose(S3Elem::Rt, S3Elem::Ubt), S3Elem::RtUbt);
        assert_eq!(
            s3_compose(S3Elem::Rt, s3_compose(S3Elem::Ubt, S3Elem::Rt)),
            S3Elem::RtUbtRt
        );
        assert_eq!(s3_inverse(S3Elem::UbtRt), S3Elem::RtUbt);
        assert_eq!(s3_inverse(S3Elem::Rt), S3Elem::Rt);
        assert_eq!(s3_inverse(S3Elem::Ubt), S3Elem::Ubt);
    }

    #[test]
    fn reflection_maps_example_arrays() {
        let p = GkpParams::from_ints([0, 1, 0, 1, -1, 1]);
        assert_eq!(
            s3_transform_params(S3Elem::Rt, &p).unwrap(),
            GkpParams::from_ints([0, 1, 1, 1, -1, 0])
        );
        assert_eq!(s3_transform_params(S3Elem::Id, &p).unwrap(), p);
        let bad = GkpParams::from_ints([0, 1, 0, 1, 1, 1]);
        assert!(matches!(s3_transform_params(S3Elem::Rt, &bad), Err(Error::Normalization(_))));
    }

    #[test]
    fn ubt_on_eulerian_family_array() {
        let (a, b, c0, ci) = (ratio(1, 2), rat(3), rat(2), ratio(-1, 3));
        let p = GkpParams::new(-&a, b.clone(), c0.clone(), &a + &b, -&b, ci.clone());
        let q = s3_transform_params(S3Elem::Ubt, &p).unwrap();
        assert_eq!(q, GkpParams::new(-&b, b.clone(), -(&c0 + &ci), &a + &b, -&b, ci));
    }

    #[test]
    fn palindromic_eulerian_fixed_by_reflection() {
        let t = triangle_from_recurrence(&GkpParams::from_ints([0, 1, 1, 1, -1, 1]), 8);
        let r = s3_transform_rows(S3Elem::Rt, &t, false).unwrap();
        assert!(r.same_entries(&t));
    }

    #[test]
    fn rows_match_lift_formula_and_recurrence() {
        let p = GkpParams::new(ratio(2, 3), rat(2), ratio(-1, 2), rat(5), rat(-2), ratio(7, 4));
        let t = triangle_from_recurrence(&p, 7);
        for e in S3Elem::ALL {
            let rows = s3_transform_rows(e, &t, false).unwrap();
            let q = s3_transform_params(e, &p).unwrap();
            assert!(rows.same_entries(&triangle_from_recurrence(&q, 7)), "{e}");
            assert!(rows.same_entries(&s3_transform_rows_via_lift(e, &t)), "{e}");
            let neg = s3_transform_rows(e, &t, true).unwrap();
            let nq = neg.params.clone().unwrap();
            assert!(neg.same_entries(&triangle_from_recurrence(&nq, 7)), "{e} negated");
        }
    }

    #[test]
    fn stanton_sprott_involution() {
        let p = GkpParams::new(ratio(2, 3), rat(2), ratio(-1, 2), rat(5), rat(2), ratio(7, 4));
        let t = triangle_from_recurrence(&p, 8);
        let s = stanton_sprott(&t).unwrap();
        let q = s.params.clone().unwrap();
        assert!(s.same_entries(&triangle_from_recurrence(&q, 8)));
        assert!(stanton_sprott(&s).unwrap().same_entries(&t));
        assert_eq!(stanton_sprott(&s).unwrap().params, Some(p));
        assert!((0..=8).all(|n| s.get(n, 0) == t.get(n, 0)));
    }
}
