use num_traits::Zero;

use super::{GkpParams, Triangle};
use crate::algebra::{powi, rat, rising, PolyT, Rat};
use crate::error::{Error, Result};

/// Entry map `<n, k> ↦ A^(n-k) B^k <n, k>` of a rescaled parameter array.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleMap {
    pub a: Rat,
    pub b: Rat,
}

impl ScaleMap {
    pub fn apply(&self, old: &Triangle, params: Option<GkpParams>) -> Triangle {
        old.map(params, |n, k, v| powi(&self.a, (n - k) as i64) * powi(&self.b, k as i64) * v)
    }

    /// Whether `new` is the image of `old`.
    pub fn holds(&self, old: &Triangle, new: &Triangle) -> bool {
        self.apply(old, None).same_entries(new)
    }
}

/// `(Aα, Aβ, Aγ; Bα', Bβ', Bγ')` and the matching entry map.
pub fn scale_params(p: &GkpParams, a: &Rat, b: &Rat) -> (GkpParams, ScaleMap) {
    let q = GkpParams::new(
        a * &p.alpha,
        a * &p.beta,
        a * &p.gamma,
        b * &p.alpha_p,
        b * &p.beta_p,
        b * &p.gamma_p,
    );
    (
        q,
        ScaleMap {
            a: a.clone(),
            b: b.clone(),
        },
    )
}

/// Entry map `<n, k> ↦ s^(k̄) <n, k>`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftMap {
    pub s: Rat,
}

impl ShiftMap {
    pub fn apply(&self, old: &Triangle, params: Option<GkpParams>) -> Triangle {
        old.map(params, |_, k, v| rising(&self.s, k, &rat(1)) * v)
    }

    pub fn holds(&self, old: &Triangle, new: &Triangle) -> bool {
        self.apply(old, None).same_entries(new)
    }
}

/// For a lower row `(0, 0, γ')`, the array `(α, β, γ; 0, γ', s γ')`.
pub fn shift_lower_params(p: &GkpParams, s: &Rat) -> Result<(GkpParams, ShiftMap)> {
    if !p.alpha_p.is_zero() || !p.beta_p.is_zero() {
        return Err(Error::Param(format!(
            "lower shift needs α' = β' = 0, got α' = {}, β' = {}",
            p.alpha_p, p.beta_p
        )));
    }
    let q = GkpParams::new(
        p.alpha.clone(),
        p.beta.clone(),
        p.gamma.clone(),
        Rat::zero(),
        p.gamma_p.clone(),
        s * &p.gamma_p,
    );
    Ok((q, ShiftMap { s: s.clone() }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrimSide {
    Left,
    Right,
    Mid,
}

/// Removes a zero edge (left/right) or the common factor `A(β + β't)` of
/// the rows (mid). The result has one row fewer and carries its own array.
pub fn trim(tri: &Triangle, side: TrimSide) -> Result<Triangle> {
    let p = tri
        .params
        .as_ref()
        .ok_or_else(|| Error::TrimInapplicable("the triangle carries no parameter array".into()))?;
    if tri.n_max() == 0 {
        return Err(Error::TrimInapplicable("need at least two rows".into()));
    }
    let last = tri.n_max() - 1;
    match side {
        TrimSide::Left => {
            if !p.gamma.is_zero() {
                return Err(Error::TrimInapplicable(format!("left trim needs γ = 0, got {}", p.gamma)));
            }
            if p.gamma_p.is_zero() {
                return Err(Error::TrimInapplicable("left trim needs γ' ≠ 0".into()));
            }
            let q = GkpParams::new(
                p.alpha.clone(),
                p.beta.clone(),
                &p.alpha + &p.beta,
                p.alpha_p.clone(),
                p.beta_p.clone(),
                &p.alpha_p + &p.beta_p + &p.gamma_p,
            );
            Ok(Triangle::from_fn(last, Some(q), |n, k| {
                tri.get(n + 1, k as i64 + 1) / &p.gamma_p
            }))
        }
        TrimSide::Right => {
            if !p.gamma_p.is_zero() {
                return Err(Error::TrimInapplicable(format!("right trim needs γ' = 0, got {}", p.gamma_p)));
            }
            if p.gamma.is_zero() {
                return Err(Error::TrimInapplicable("right trim needs γ ≠ 0".into()));
            }
            let q = GkpParams::new(
                p.alpha.clone(),
                p.beta.clone(),
                &p.alpha + &p.gamma,
                p.alpha_p.clone(),
                p.beta_p.clone(),
                p.alpha_p.clone(),
            );
            Ok(Triangle::from_fn(last, Some(q), |n, k| tri.get(n + 1, k as i64) / &p.gamma))
        }
        TrimSide::Mid => {
            if p.beta.is_zero() || p.beta_p.is_zero() {
                return Err(Error::TrimInapplicable("mid trim needs β β' ≠ 0".into()));
            }
            let a = &p.gamma / &p.beta;
            if a != &p.gamma_p / &p.beta_p {
                return Err(Error::TrimInapplicable(format!(
                    "mid trim needs γ/β = γ'/β', got {} and {}",
                    a,
                    &p.gamma_p / &p.beta_p
                )));
            }
            if a.is_zero() {
                return Err(Error::TrimInapplicable("mid trim needs γ/β ≠ 0".into()));
            }
            let q = GkpParams::new(
                p.alpha.clone(),
                p.beta.clone(),
                &p.alpha + &p.gamma,
                p.alpha_p.clone(),
                p.beta_p.clone(),
                &p.alpha_p + &p.beta_p + &p.gamma_p,
            );
            let factor = PolyT::linear(&a * &p.beta, &a * &p.beta_p);
            let mut rows = Vec::with_capacity(last + 1);
            for n in 0..=last {
                let g = PolyT::new(tri.row(n + 1).to_vec());
                let quot = g.divexact(&factor).map_err(|_| {
                    Error::TrimInapplicable(format!("row {} is not divisible by A(β + β't)", n + 1))
                })?;
                rows.push((0..=n).map(|k| quot.coeff(k)).collect());
            }
            Ok(Triangle::from_rows(rows, Some(q)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::gkp::triangle_from_recurrence;

    fn gen(v: [i64; 6], n: usize) -> Triangle {
        triangle_from_recurrence(&GkpParams::from_ints(v), n)
    }

    #[test]
    fn eulerian_trimming_chain() {
        let a = gen([0, 1, 0, 1, -1, 1], 12);
        let b = gen([0, 1, 1, 1, -1, 0], 12);
        let c = gen([0, 1, 1, 1, -1, 1], 11);
        let left = trim(&a, TrimSide::Left).unwrap();
        let right = trim(&b, TrimSide::Right).unwrap();
        assert_eq!(left.params, c.params);
        assert_eq!(right.params, c.params);
        assert!(left.same_entries(&c));
        assert!(right.same_entries(&c));
    }

    #[test]
    fn mid_trim_reproduces_own_recurrence() {
        // (γ, γ') = (β, β'), so A = 1.
        let p = GkpParams::new(ratio(1, 3), rat(2), rat(2), ratio(-5, 4), rat(-3), rat(-3));
        let t = triangle_from_recurrence(&p, 9);
        let m = trim(&t, TrimSide::Mid).unwrap();
        let q = m.params.clone().unwrap();
        assert_eq!(
            q,
            GkpParams::new(ratio(1, 3), rat(2), ratio(7, 3), ratio(-5, 4), rat(-3), ratio(-29, 4))
        );
        assert!(m.same_entries(&triangle_from_recurrence(&q, 8)));
    }

    #[test]
    fn trim_preconditions_named() {
        let b = gen([0, 1, 1, 1, -1, 0], 4);
        match trim(&b, TrimSide::Left) {
            Err(Error::TrimInapplicable(msg)) => assert!(msg.contains("γ = 0")),
            r => panic!("{r:?}"),
        }
        assert!(trim(&b, TrimSide::Mid).is_err());
        let no_params = Triangle::from_rows(b.rows().to_vec(), None);
        assert!(trim(&no_params, TrimSide::Right).is_err());
    }

    #[test]
    fn scaling() {
        let p = GkpParams::from_ints([0, 0, 1, 0, 0, 1]);
        let (q, m) = scale_params(&p, &rat(1), &rat(1));
        assert_eq!(q, p);
        let (q, m2) = scale_params(&p, &rat(2), &rat(3));
        let old = triangle_from_recurrence(&p, 6);
        let new = triangle_from_recurrence(&q, 6);
        assert_eq!(new.get(2, 1), rat(12));
        assert!(m2.holds(&old, &new));
        assert!(m.holds(&old, &old));
        let e = GkpParams::from_ints([0, 1, 1, 1, -1, 0]);
        let (es, m3) = scale_params(&e, &rat(1), &rat(-1));
        let eo = triangle_from_recurrence(&e, 6);
        let en = triangle_from_recurrence(&es, 6);
        assert!(m3.holds(&eo, &en));
        assert_eq!(en.get(4, 1), rat(-11));
    }

    #[test]
    fn lower_shift() {
        let stirling = GkpParams::from_ints([0, 1, 0, 0, 0, 1]);
        let old = triangle_from_recurrence(&stirling, 6);
        let (q, m) = shift_lower_params(&stirling, &rat(1)).unwrap();
        assert_eq!(q, GkpParams::from_ints([0, 1, 0, 0, 1, 1]));
        let surj = triangle_from_recurrence(&q, 6);
        assert_eq!(surj.get(3, 2), rat(6));
        assert!(m.holds(&old, &surj));
        let (q0, m0) = shift_lower_params(&stirling, &rat(0)).unwrap();
        let z = triangle_from_recurrence(&q0, 6);
        assert!(m0.holds(&old, &z));
        assert!((1..=6).all(|n| z.get(n, 1).is_zero()));
        let (q2, m2) = shift_lower_params(&stirling, &rat(2)).unwrap();
        let t2 = triangle_from_recurrence(&q2, 6);
        // 2^(1̄) S(3,1) = 2
        assert_eq!(t2.get(3, 1), rat(2));
        assert!(m2.holds(&old, &t2));
        assert!(shift_lower_params(&GkpParams::from_ints([0, 1, 1, 1, -1, 0]), &rat(1)).is_err());
    }
}
