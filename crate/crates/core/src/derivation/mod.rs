//! A formal derivation on monomials `x^p y^q` with rational exponents.
//! With `D x = x · x^α y^α'` and `D y = y · x^{α+β} y^{α'+β'}`, the
//! `n`-th derivative of `x^γ y^γ'` carries row `n` of the triangle with
//! parameters `(α, β, γ; α', β', γ')` on the lattice
//! `(γ + αn + βk, γ' + α'n + β'k)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{factorial, rat, rising, PolyT, Rat};
use crate::error::{Error, Result};
use crate::families::{FamilyKind, NamedFamily, StirlingParams};
use crate::gkp::{egf_truncated, triangle_from_recurrence, GkpParams, Triangle};
use crate::report::Report;
use crate::sample::{small_rat, SampleRng};

/// A finite sum `Σ c x^p y^q`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonoElem {
    terms: BTreeMap<(Rat, Rat), Rat>,
}

impl MonoElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Rat, p: Rat, q: Rat) -> Self {
        let mut e = Self::zero();
        e.add_term(p, q, c);
        e
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, Rat::zero(), Rat::zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Rat, Rat), &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^p y^q`.
    pub fn coeff(&self, p: &Rat, q: &Rat) -> Rat {
        self.terms.get(&(p.clone(), q.clone())).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, p: Rat, q: Rat, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (p, q);
        let v = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((p, q), c) in &o.terms {
            r.add_term(p.clone(), q.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut r = Self::zero();
        for ((p, q), v) in &self.terms {
            r.add_term(p.clone(), q.clone(), v * c);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((p1, q1), c1) in &self.terms {
            for ((p2, q2), c2) in &o.terms {
                r.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        r
    }

    /// Applies a derivation given by its values on the generators.
    pub fn derive_with(&self, rule: &DerivationRule) -> Self {
        let mut r = Self::zero();
        for ((p, q), c) in &self.terms {
            // D(x^p y^q) = p x^{p-1} y^q D(x) + q x^p y^{q-1} D(y)
            let (cx, ax, bx) = &rule.dx;
            r.add_term(p - Rat::one() + ax, q + bx, c * p * cx);
            let (cy, ay, by) = &rule.dy;
            r.add_term(p + ay, q - Rat::one() + by, c * q * cy);
        }
        r
    }
}

impl fmt::Display for MonoElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((p, q), c)| format!("{c}*x^({p})*y^({q})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `D x = cx x^ax y^bx`, `D y = cy x^ay y^by`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationRule {
    pub dx: (Rat, Rat, Rat),
    pub dy: (Rat, Rat, Rat),
}

impl DerivationRule {
    /// The rule attached to a parameter array.
    pub fn from_params(p: &GkpParams) -> Self {
        let one = Rat::one();
        DerivationRule {
            dx: (one.clone(), &one + &p.alpha, p.alpha_p.clone()),
            dy: (one.clone(), &p.alpha + &p.beta, &one + &p.alpha_p + &p.beta_p),
        }
    }
}

/// One application of the derivation of `params`.
pub fn mono_derive(e: &MonoElem, params: &GkpParams) -> MonoElem {
    e.derive_with(&DerivationRule::from_params(params))
}

fn require_offset(p: &GkpParams) -> Result<()> {
    if p.beta.is_zero() && p.beta_p.is_zero() {
        return Err(Error::Param("the derivation needs (β, β') ≠ (0, 0) to separate k".into()));
    }
    Ok(())
}

/// Reads row `n` off `D^n(x^γ y^γ')`, failing if any monomial lies off
/// the lattice `(γ + αn + βk, γ' + α'n + β'k)`, `0 ≤ k ≤ n`.
fn read_row(e: &MonoElem, p: &GkpParams, n: usize) -> Result<Vec<Rat>> {
    let nr = rat(n as i64);
    let base_x = &p.gamma + &p.alpha * &nr;
    let base_y = &p.gamma_p + &p.alpha_p * &nr;
    let mut row = vec![Rat::zero(); n + 1];
    for ((px, qy), c) in e.terms() {
        let k = if !p.beta.is_zero() {
            (px - &base_x) / &p.beta
        } else {
            (qy - &base_y) / &p.beta_p
        };
        let on_lattice = k.is_integer()
            && k >= Rat::zero()
            && k <= nr
            && *px == &base_x + &p.beta * &k
            && *qy == &base_y + &p.beta_p * &k;
        if !on_lattice {
            return Err(Error::OffLattice { row: n });
        }
        let ki: usize = k.to_integer().try_into().map_err(|_| Error::OffLattice { row: n })?;
        row[ki] = c.clone();
    }
    Ok(row)
}

/// `D^n(x^γ y^γ')` for `n = 0..=n_max`.
pub fn iterated_derivatives(params: &GkpParams, n_max: usize) -> Vec<MonoElem> {
    let rule = DerivationRule::from_params(params);
    let mut e = MonoElem::monomial(Rat::one(), params.gamma.clone(), params.gamma_p.clone());
    let mut out = Vec::with_capacity(n_max + 1);
    for _ in 0..=n_max {
        let next = e.derive_with(&rule);
        out.push(e);
        e = next;
    }
    out
}

/// The triangle read off the iterated derivatives of `x^γ y^γ'`.
pub fn triangle_via_derivation(params: &GkpParams, n_max: usize) -> Result<Triangle> {
    require_offset(params)?;
    let rows = iterated_derivatives(params, n_max)
        .iter()
        .enumerate()
        .map(|(n, e)| read_row(e, params, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::from_rows(rows, Some(params.clone())))
}

/// Derivation engine against the recurrence, rows `0..=n_max`.
pub fn derivation_check(params: &GkpParams, n_max: usize) -> Report {
    let mut rep = Report::new(format!("iterated derivation [{params}]"));
    match triangle_via_derivation(params, n_max) {
        Ok(tri) => {
            let want = triangle_from_recurrence(params, n_max);
            for n in 0..=n_max {
                rep.check(tri.row(n) == want.row(n), || {
                    format!("row {n}: derivation {:?}, recurrence {:?}", tri.row(n), want.row(n))
                });
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// `Σ δ^n/n! D^n(x^γ y^γ')` against `x^γ y^γ' G(x^β y^β', δ x^α y^α')`
/// with `G` the recurrence EGF, coefficientwise in `δ` below `order`.
pub fn corollary_series_check(params: &GkpParams, order: usize) -> Report {
    let mut rep = Report::new(format!("exponentiated derivation [{params}]"));
    if let Err(e) = require_offset(params) {
        rep.fail(e.to_string());
        return rep;
    }
    if order == 0 {
        return rep;
    }
    let derivs = iterated_derivatives(params, order - 1);
    let egf = egf_truncated(&triangle_from_recurrence(params, order - 1));
    for (n, d) in derivs.iter().enumerate() {
        let lhs = d.scale(&factorial(n).recip());
        let nr = rat(n as i64);
        let mut rhs = MonoElem::zero();
        let g: &PolyT = egf.coeff(n);
        for k in 0..=n {
            let kr = rat(k as i64);
            rhs = rhs.add(&MonoElem::monomial(
                g.coeff(k),
                &params.gamma + &params.alpha * &nr + &params.beta * &kr,
                &params.gamma_p + &params.alpha_p * &nr + &params.beta_p * &kr,
            ));
        }
        rep.check(lhs == rhs, || format!("δ^{n}: derivation {lhs}, EGF {rhs}"));
    }
    rep
}

/// The named identities read off the derivation engine: the three
/// secant–tangent rows at `b = 2` and the three Stirling–Eulerian rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SectanKind {
    /// `x = tan w`, `y = sec w`: the Stirling-type triangle.
    PenultA,
    /// `x = sec w`, `y = tan w`: the reversed-Stirling-type triangle.
    PenultB,
    /// `x = cosh w`, `y = sinh w`: the Eulerian-type triangle.
    PenultC,
    /// `x = (1+aw)^{1/a}`: `s^{k rising} S_{n,k}(a,b;r)`, arguments `(a,b,r,s)`.
    StirlingRising,
    /// Its reflection `r^{(n-k) rising} S_{n,n-k}(a,b;s)`, arguments `(a,b,r,s)`.
    StirlingRisingReflected,
    /// `E_{n,k}(a,b;c0,c∞)`, arguments `(a,b,c0,c∞)`.
    Eulerian,
}

impl SectanKind {
    pub const ALL: [SectanKind; 6] = [
        SectanKind::PenultA,
        SectanKind::PenultB,
        SectanKind::PenultC,
        SectanKind::StirlingRising,
        SectanKind::StirlingRisingReflected,
        SectanKind::Eulerian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SectanKind::PenultA => "tan-sec",
            SectanKind::PenultB => "sec-tan",
            SectanKind::PenultC => "cosh-sinh",
            SectanKind::StirlingRising => "stirling-rising",
            SectanKind::StirlingRisingReflected => "stirling-rising-reflected",
            SectanKind::Eulerian => "eulerian-power",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }

    pub fn arity(self) -> usize {
        match self {
            SectanKind::PenultA | SectanKind::PenultB | SectanKind::PenultC => 2,
            _ => 4,
        }
    }

    /// Parameter array of the derivation and, independently, the triangle
    /// it must reproduce.
    fn setup(self, args: &[Rat], n_max: usize) -> Result<(GkpParams, Triangle)> {
        if args.len() != self.arity() {
            return Err(Error::Param(format!(
                "{} takes {} arguments, got {}",
                self.name(),
                self.arity(),
                args.len()
            )));
        }
        let fam = |kind| {
            let f = NamedFamily::new(kind, rat(2), args[0].clone(), args[1].clone());
            let p = match kind {
                FamilyKind::SecTanS => [-1, 2, 2, -2],
                FamilyKind::SecTanRS => [0, 2, 1, -2],
                _ => [-1, 2, 1, -2],
            };
            let params = GkpParams::new(
                rat(p[0]),
                rat(p[1]),
                args[0].clone(),
                rat(p[2]),
                rat(p[3]),
                args[1].clone(),
            );
            (params, triangle_from_recurrence(&f.gkp(), n_max))
        };
        Ok(match self {
            SectanKind::PenultA => fam(FamilyKind::SecTanS),
            SectanKind::PenultB => fam(FamilyKind::SecTanRS),
            SectanKind::PenultC => fam(FamilyKind::SecTanE),
            SectanKind::StirlingRising | SectanKind::StirlingRisingReflected => {
                let (a, b, r, s) = (&args[0], &args[1], &args[2], &args[3]);
                let one = Rat::one();
                if self == SectanKind::StirlingRising {
                    let st = StirlingParams::new(a.clone(), b.clone(), r.clone()).triangle(n_max);
                    let params = GkpParams::new(-a, b.clone(), r.clone(), Rat::zero(), one.clone(), s.clone());
                    (params, st.map(None, |_, k, v| rising(s, k, &one) * v))
                } else {
                    let st = StirlingParams::new(a.clone(), b.clone(), s.clone()).triangle(n_max);
                    let params = GkpParams::new(one.clone(), -&one, r.clone(), b - a, -b, s.clone());
                    let tri = Triangle::from_fn(n_max, None, |n, k| rising(r, n - k, &one) * st.get(n, (n - k) as i64));
                    (params, tri)
                }
            }
            SectanKind::Eulerian => {
                let (a, b, c0, ci) = (&args[0], &args[1], &args[2], &args[3]);
                let params = GkpParams::new(-a, b.clone(), c0.clone(), a + b, -b, ci.clone());
                let tri = crate::families::EulerianParams::new(a.clone(), b.clone(), c0.clone(), ci.clone()).triangle(n_max);
                (params, tri)
            }
        })
    }
}

/// Runs the derivation engine on the parameter row of `kind` and compares
/// with the triangle the identity names, rows `0..=n_max`.
pub fn sectan_identity_check(kind: SectanKind, args: &[Rat], n_max: usize) -> Report {
    let mut rep = Report::new(format!(
        "{} identity ({})",
        kind.name(),
        args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
    ));
    let run = || -> Result<(Triangle, Triangle)> {
        let (params, want) = kind.setup(args, n_max)?;
        Ok((triangle_via_derivation(&params, n_max)?, want))
    };
    match run() {
        Ok((got, want)) => {
            for n in 0..=n_max {
                rep.check(got.row(n) == want.row(n), || {
                    format!("row {n}: derivation {:?}, triangle {:?}", got.row(n), want.row(n))
                });
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// The iterated operator `[t^{1+â} (β+β't)^{1-â-â'} D_t]^n` applied to
/// `t^ĝ (β+β't)^{-ĝ-ĝ'}` is the derivation with `x = t`, `y = β + β't`.
/// Normalizing by `x^{ân+ĝ} y^{-(â+â')n-ĝ-ĝ'}` leaves `Σ_j c_j x^j y^{n-j}`,
/// which must expand to `G_n(t)`.
pub fn iterated_operator_check(params: &GkpParams, n_max: usize) -> Report {
    let mut rep = Report::new(format!("iterated operator [{params}]"));
    let p = params;
    if p.beta.is_zero() || p.beta_p.is_zero() {
        rep.fail("the iterated operator needs β β' ≠ 0".into());
        return rep;
    }
    let one = Rat::one();
    let ah = &p.alpha / &p.beta;
    let aph = -(&p.alpha_p / &p.beta_p);
    let gh = &p.gamma / &p.beta;
    let gph = -(&p.gamma_p / &p.beta_p);
    let lift_y = &one - &ah - &aph;
    // D x = x^{1+â} y^{1-â-â'}, D y = β' x^{1+â} y^{1-â-â'}.
    let rule = DerivationRule {
        dx: (one.clone(), &one + &ah, lift_y.clone()),
        dy: (p.beta_p.clone(), &one + &ah, lift_y.clone()),
    };
    let mut e = MonoElem::monomial(one.clone(), gh.clone(), -(&gh + &gph));
    let tri = triangle_from_recurrence(p, n_max);
    let y_poly = PolyT::linear(p.beta.clone(), p.beta_p.clone());
    for n in 0..=n_max {
        let nr = rat(n as i64);
        let sx = &ah * &nr + &gh;
        let sy = -((&ah + &aph) * &nr + &gh + &gph);
        let mut g = PolyT::zero();
        let mut ok = true;
        for ((px, qy), c) in e.terms() {
            let (j, m) = (px - &sx, qy - &sy);
            if !(j.is_integer() && m.is_integer() && j >= Rat::zero() && m >= Rat::zero()) {
                ok = false;
                break;
            }
            let (ji, mi) = (j.to_integer(), m.to_integer());
            let (ji, mi): (u32, u32) = (ji.try_into().unwrap_or(u32::MAX), mi.try_into().unwrap_or(u32::MAX));
            g = &g + &(&PolyT::t().pow(ji) * &y_poly.pow(mi)).scale(c);
        }
        if !ok {
            rep.fail(format!("row {n}: a monomial leaves the expected exponent pattern"));
            break;
        }
        let want = PolyT::new(tri.row(n).to_vec());
        rep.check(g == want, || format!("row {n}: operator {g}, recurrence {want}"));
        e = e.derive_with(&rule);
    }
    rep
}

/// `D(e1 e2) = D(e1) e2 + e1 D(e2)`.
pub fn leibniz_check(params: &GkpParams, e1: &MonoElem, e2: &MonoElem) -> bool {
    let lhs = mono_derive(&e1.mul(e2), params);
    let rhs = mono_derive(e1, params).mul(e2).add(&e1.mul(&mono_derive(e2, params)));
    lhs == rhs
}

/// A random element with up to three terms and small rational exponents.
pub fn sample_mono(rng: &mut SampleRng) -> MonoElem {
    let mut e = MonoElem::zero();
    for _ in 0..3 {
        e = e.add(&MonoElem::monomial(small_rat(rng), small_rat(rng), small_rat(rng)));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::oracles::left_peak_distribution;
    use crate::sample::{params_nonzero_betas, rng};

    fn sec_tan() -> GkpParams {
        GkpParams::from_ints([0, 2, 1, 1, -2, 0])
    }

    #[test]
    fn spec_derivatives() {
        let x = MonoElem::monomial(rat(1), rat(1), rat(0));
        let xy = MonoElem::monomial(rat(1), rat(1), rat(1));
        assert_eq!(mono_derive(&x, &sec_tan()), xy);
        assert!(mono_derive(&MonoElem::constant(rat(5)), &sec_tan()).is_empty());
        let x2 = MonoElem::monomial(rat(1), rat(2), rat(0));
        assert_eq!(mono_derive(&x2, &sec_tan()), MonoElem::monomial(rat(2), rat(2), rat(1)));
    }

    #[test]
    fn left_peaks_from_secant() {
        let tri = triangle_via_derivation(&sec_tan(), 6).unwrap();
        for n in 0..=6 {
            let want: Vec<Rat> = left_peak_distribution(n).into_iter().map(|c| rat(c as i64)).collect();
            assert_eq!(tri.row(n), want.as_slice());
        }
        assert_eq!(triangle_via_derivation(&sec_tan(), 0).unwrap().row(0), [rat(1)]);
    }

    #[test]
    fn engine_matches_recurrence() {
        let mut r = rng(3);
        for _ in 0..10 {
            let p = params_nonzero_betas(&mut r);
            assert!(derivation_check(&p, 7).passed());
            assert!(corollary_series_check(&p, 6).passed());
            assert!(iterated_operator_check(&p, 6).passed());
        }
        let only_beta_p = GkpParams::new(rat(1), rat(0), rat(2), ratio(1, 2), rat(3), rat(-1));
        assert!(derivation_check(&only_beta_p, 6).passed());
        assert!(triangle_via_derivation(&GkpParams::from_ints([1, 0, 1, 1, 0, 1]), 3).is_err());
    }

    #[test]
    fn named_identities() {
        for kind in [SectanKind::PenultA, SectanKind::PenultB, SectanKind::PenultC] {
            for (c0, ci) in [(1, 0), (2, 0), (0, 1)] {
                let rep = sectan_identity_check(kind, &[rat(c0), rat(ci)], 8);
                assert!(rep.passed(), "{rep}");
            }
        }
        let abrs = [ratio(1, 2), rat(3), ratio(-2, 3), rat(2)];
        for kind in [SectanKind::StirlingRising, SectanKind::StirlingRisingReflected, SectanKind::Eulerian] {
            let rep = sectan_identity_check(kind, &abrs, 7);
            assert!(rep.passed(), "{rep}");
        }
        // Surjections: 1^{k rising} S_{n,k}(0,1;0).
        let rep = sectan_identity_check(SectanKind::StirlingRising, &[rat(0), rat(1), rat(0), rat(1)], 6);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn leibniz_rule() {
        let mut r = rng(5);
        for _ in 0..20 {
            let p = params_nonzero_betas(&mut r);
            let (a, b) = (sample_mono(&mut r), sample_mono(&mut r));
            assert!(leibniz_check(&p, &a, &b));
        }
    }
}
