//! Closed-form bivariate EGF builders. Every builder returns the series
//! `Σ_n G_n(t) z^n/n!` truncated below `z^order`, with coefficients in
//! `Q(t)`; all square roots of `t` are eliminated by hand so the
//! coefficients stay rational functions.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{binom_rat, factorial, rat, ratio, PolyT, Rat, RatFuncT, Series};
use crate::error::{Error, Result};
use crate::families::{FamilyKind, NamedFamily};
use crate::gkp::GkpParams;

pub type SeriesR = Series<RatFuncT>;

/// Which of the three projectively equivalent subcases a case-B or
/// case-C builder covers: Stirling, reversed Stirling or Eulerian type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subcase {
    S,
    RS,
    E,
}

impl Subcase {
    pub const ALL: [Subcase; 3] = [Subcase::S, Subcase::RS, Subcase::E];

    fn name(self) -> &'static str {
        match self {
            Subcase::S => "s",
            Subcase::RS => "rs",
            Subcase::E => "e",
        }
    }
}

/// One-parameter restrictions of the case-B EGFs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Restriction {
    A,
    B,
    C,
}

impl Restriction {
    pub const ALL: [Restriction; 3] = [Restriction::A, Restriction::B, Restriction::C];

    fn name(self) -> &'static str {
        match self {
            Restriction::A => "a",
            Restriction::B => "b",
            Restriction::C => "c",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EgfCase {
    /// `α' = 0`, `α ≠ 0`; parameters: the six-entry array.
    A1,
    /// `α = α' = 0`.
    A1Limit,
    /// `α = -β`, `α' + β' ≠ 0`.
    A2,
    /// `α = -β`, `α' = -β'`.
    A2Limit,
    /// `α/β = α'/β' + 1`, `α ≠ 0`.
    A3,
    /// `α = 0`, `α' = -β'`.
    A3Limit,
    /// `Σ k! S_{n,k}(a,b;r) t^k z^n/n!`; parameters `(a, b, r)`.
    SElem,
    /// `Σ S_{n,k}(a,b;r) t^k z^n/n!` built from the vertical EGFs.
    SVertical,
    /// `E(a,b;c0,c∞)` with `a ≠ 0`; parameters `(a, b, c0, c∞)`.
    ESpeck,
    /// `E(0,b;c0,c∞)`; parameters `(b, c0, c∞)`.
    ESpeck2,
    /// `E(a,b;c0,b-c0)`; parameters `(a, b, c0)`.
    EReducedSpeck,
    /// Generalized Narayana, `b = 2`; parameters `(c0, c∞)`.
    B(Subcase),
    /// One-parameter restriction; parameter `c`.
    BRestricted(Subcase, Restriction),
    /// Generalized secant–tangent, `b = 2`; parameters `(c0, c∞)`.
    C(Subcase),
    /// The two left-peak EGFs `W^rS(2;1,0)` (1) and `W^rS(2;2,0)` (2).
    CProp(u8),
}

impl EgfCase {
    pub fn all() -> Vec<EgfCase> {
        let mut v = vec![
            EgfCase::A1,
            EgfCase::A1Limit,
            EgfCase::A2,
            EgfCase::A2Limit,
            EgfCase::A3,
            EgfCase::A3Limit,
            EgfCase::SElem,
            EgfCase::SVertical,
            EgfCase::ESpeck,
            EgfCase::ESpeck2,
            EgfCase::EReducedSpeck,
        ];
        v.extend(Subcase::ALL.map(EgfCase::B));
        for s in Subcase::ALL {
            v.extend(Restriction::ALL.map(|r| EgfCase::BRestricted(s, r)));
        }
        v.extend(Subcase::ALL.map(EgfCase::C));
        v.extend([EgfCase::CProp(1), EgfCase::CProp(2)]);
        v
    }

    pub fn parse(s: &str) -> Result<EgfCase> {
        EgfCase::all()
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }

    pub fn arity(self) -> usize {
        match self {
            EgfCase::A1 | EgfCase::A1Limit | EgfCase::A2 | EgfCase::A2Limit | EgfCase::A3 | EgfCase::A3Limit => 6,
            EgfCase::SElem | EgfCase::SVertical | EgfCase::ESpeck2 | EgfCase::EReducedSpeck => 3,
            EgfCase::ESpeck => 4,
            EgfCase::B(_) | EgfCase::C(_) => 2,
            EgfCase::BRestricted(..) => 1,
            EgfCase::CProp(_) => 0,
        }
    }
}

impl fmt::Display for EgfCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EgfCase::A1 => write!(f, "a1"),
            EgfCase::A1Limit => write!(f, "a1-limit"),
            EgfCase::A2 => write!(f, "a2"),
            EgfCase::A2Limit => write!(f, "a2-limit"),
            EgfCase::A3 => write!(f, "a3"),
            EgfCase::A3Limit => write!(f, "a3-limit"),
            EgfCase::SElem => write!(f, "stirling-weighted"),
            EgfCase::SVertical => write!(f, "stirling-vertical"),
            EgfCase::ESpeck => write!(f, "eulerian"),
            EgfCase::ESpeck2 => write!(f, "eulerian-a0"),
            EgfCase::EReducedSpeck => write!(f, "eulerian-single-prog"),
            EgfCase::B(s) => write!(f, "narayana-{}", s.name()),
            EgfCase::BRestricted(s, r) => write!(f, "narayana-{}-{}", s.name(), r.name()),
            EgfCase::C(s) => write!(f, "sectan-{}", s.name()),
            EgfCase::CProp(i) => write!(f, "left-peaks-{i}"),
        }
    }
}

/// A closed-form EGF request: the case, its parameters and the
/// truncation order in `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedEgfSpec {
    pub case: EgfCase,
    pub params: Vec<Rat>,
    pub order: usize,
}

fn param_err(msg: impl Into<String>) -> Error {
    Error::Param(msg.into())
}

impl ClosedEgfSpec {
    pub fn new(case: EgfCase, params: Vec<Rat>, order: usize) -> Result<Self> {
        let spec = ClosedEgfSpec { case, params, order };
        spec.gkp()?;
        spec.check_preconditions()?;
        Ok(spec)
    }

    fn check_preconditions(&self) -> Result<()> {
        let p = &self.params;
        let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(param_err(format!("{}: {what}", self.case))) };
        match self.case {
            EgfCase::A1 | EgfCase::A1Limit | EgfCase::A2 | EgfCase::A2Limit | EgfCase::A3 | EgfCase::A3Limit => {
                let g = self.gkp()?;
                need(!g.beta.is_zero() && !g.beta_p.is_zero(), "needs β β' ≠ 0")?;
                match self.case {
                    EgfCase::A1 => need(g.alpha_p.is_zero() && !g.alpha.is_zero(), "needs α' = 0, α ≠ 0"),
                    EgfCase::A1Limit => need(g.alpha_p.is_zero() && g.alpha.is_zero(), "needs α = α' = 0"),
                    EgfCase::A2 => need(
                        g.alpha == -&g.beta && !(&g.alpha_p + &g.beta_p).is_zero(),
                        "needs α = -β, α' + β' ≠ 0",
                    ),
                    EgfCase::A2Limit => need(
                        g.alpha == -&g.beta && g.alpha_p == -&g.beta_p,
                        "needs α = -β, α' = -β'",
                    ),
                    EgfCase::A3 => need(
                        &g.alpha / &g.beta == &g.alpha_p / &g.beta_p + Rat::one() && !g.alpha.is_zero(),
                        "needs α/β = α'/β' + 1, α ≠ 0",
                    ),
                    _ => need(g.alpha.is_zero() && g.alpha_p == -&g.beta_p, "needs α = 0, α' = -β'"),
                }
            }
            EgfCase::SElem | EgfCase::SVertical | EgfCase::EReducedSpeck => need(!p[1].is_zero(), "needs b ≠ 0"),
            EgfCase::ESpeck => need(!p[0].is_zero() && !p[1].is_zero(), "needs a ≠ 0, b ≠ 0"),
            EgfCase::ESpeck2 => need(!p[0].is_zero(), "needs b ≠ 0"),
            _ => Ok(()),
        }
    }

    /// The parameter array whose recurrence EGF the builder reproduces.
    pub fn gkp(&self) -> Result<GkpParams> {
        let p = &self.params;
        if p.len() != self.case.arity() {
            return Err(param_err(format!(
                "{} takes {} parameters, got {}",
                self.case,
                self.case.arity(),
                p.len()
            )));
        }
        let two = rat(2);
        let fam = |kind, c0: Rat, ci: Rat| NamedFamily::new(kind, two.clone(), c0, ci).gkp();
        Ok(match self.case {
            EgfCase::A1 | EgfCase::A1Limit | EgfCase::A2 | EgfCase::A2Limit | EgfCase::A3 | EgfCase::A3Limit => {
                GkpParams::from_slice(p)?
            }
            EgfCase::SElem => GkpParams::new(-&p[0], p[1].clone(), p[2].clone(), rat(0), rat(1), rat(1)),
            EgfCase::SVertical => GkpParams::new(-&p[0], p[1].clone(), p[2].clone(), rat(0), rat(0), rat(1)),
            EgfCase::ESpeck => eulerian(&p[0], &p[1], &p[2], &p[3]),
            EgfCase::ESpeck2 => eulerian(&rat(0), &p[0], &p[1], &p[2]),
            EgfCase::EReducedSpeck => eulerian(&p[0], &p[1], &p[2], &(&p[1] - &p[2])),
            EgfCase::B(s) => fam(narayana(s), p[0].clone(), p[1].clone()),
            EgfCase::BRestricted(s, r) => {
                let (c0, ci) = restricted_pair(s, r, &p[0]);
                fam(narayana(s), c0, ci)
            }
            EgfCase::C(s) => fam(sectan(s), p[0].clone(), p[1].clone()),
            EgfCase::CProp(i) => fam(FamilyKind::SecTanRS, rat(i as i64), rat(0)),
        })
    }
}

fn eulerian(a: &Rat, b: &Rat, c0: &Rat, ci: &Rat) -> GkpParams {
    GkpParams::new(-a, b.clone(), c0.clone(), a + b, -b, ci.clone())
}

fn narayana(s: Subcase) -> FamilyKind {
    match s {
        Subcase::S => FamilyKind::NarayanaS,
        Subcase::RS => FamilyKind::NarayanaRS,
        Subcase::E => FamilyKind::NarayanaE,
    }
}

fn sectan(s: Subcase) -> FamilyKind {
    match s {
        Subcase::S => FamilyKind::SecTanS,
        Subcase::RS => FamilyKind::SecTanRS,
        Subcase::E => FamilyKind::SecTanE,
    }
}

/// `(c0, c∞)` of the restricted Narayana triangles as functions of `c`.
pub fn restricted_pair(s: Subcase, r: Restriction, c: &Rat) -> (Rat, Rat) {
    let one = rat(1);
    match (s, r) {
        (Subcase::S, Restriction::A) => (c.clone(), -(c * rat(2))),
        (Subcase::S, Restriction::B) => (c.clone(), rat(-2)),
        (Subcase::S, Restriction::C) => (c - &one, rat(0)),
        (Subcase::RS, Restriction::A) => (-(c * rat(2)), c.clone()),
        (Subcase::RS, Restriction::B) => (rat(-2), c.clone()),
        (Subcase::RS, Restriction::C) => (rat(0), c - &one),
        (Subcase::E, Restriction::A) => (c.clone(), c.clone()),
        (Subcase::E, Restriction::B) => (c.clone(), rat(2) - c),
        (Subcase::E, Restriction::C) => (c - &one, &one - c),
    }
}

// Small constructors over Q(t).

fn q(x: Rat) -> RatFuncT {
    RatFuncT::from_rat(x)
}

fn tt() -> RatFuncT {
    RatFuncT::t()
}

/// `a + b t`.
fn lin(a: i64, b: i64) -> RatFuncT {
    RatFuncT::from_poly(PolyT::linear(rat(a), rat(b)))
}

fn div(x: &RatFuncT, y: &RatFuncT) -> RatFuncT {
    x * &y.inv().expect("nonzero rational function")
}

fn cst(c: RatFuncT, order: usize) -> SeriesR {
    Series::constant(c, order)
}

/// `c0 + c1 z + c2 z^2`.
fn quad(c: [RatFuncT; 3], order: usize) -> SeriesR {
    let mut v = vec![RatFuncT::zero(); order];
    for (i, x) in c.into_iter().enumerate() {
        if i < order {
            v[i] = x;
        }
    }
    Series::from_coeffs(v)
}

/// `(1 + u z)^e`, coefficientwise `C(e, j) u^j`.
fn binom_power(u: &RatFuncT, e: &Rat, order: usize) -> SeriesR {
    let mut up = RatFuncT::one();
    let mut v = Vec::with_capacity(order);
    for j in 0..order {
        v.push(up.scale(&binom_rat(e, j as i64)));
        up = &up * u;
    }
    Series::from_coeffs(v)
}

/// `e^{c z}`.
fn exp_lin(c: &RatFuncT, order: usize) -> SeriesR {
    let mut cp = RatFuncT::one();
    let mut v = Vec::with_capacity(order);
    for j in 0..order {
        v.push(cp.scale(&factorial(j).recip()));
        cp = &cp * c;
    }
    Series::from_coeffs(v)
}

/// `(1 + a z)^{x/a}`, or `e^{x z}` when `a = 0`.
fn power_or_exp(a: &Rat, x: &Rat, order: usize) -> SeriesR {
    if a.is_zero() {
        exp_lin(&q(x.clone()), order)
    } else {
        binom_power(&q(a.clone()), &(x / a), order)
    }
}

fn pow(s: &SeriesR, e: &Rat) -> Result<SeriesR> {
    s.pow_rat(e)
}

/// `Σ (-1)^k w^k/(2k)!` and `Σ (-1)^k w^k/(2k+1)!`: `cos √w` and
/// `sin √w / √w` as series in `w`, composed with `w = z^2 u`.
fn cos_sin(u: &RatFuncT, sign: i64, order: usize) -> Result<(SeriesR, SeriesR)> {
    let w = quad([RatFuncT::zero(), RatFuncT::zero(), u.clone()], order);
    let f = |odd: usize| -> SeriesR {
        Series::from_coeffs(
            (0..order)
                .map(|k| {
                    let s = if sign < 0 && k % 2 == 1 { rat(-1) } else { rat(1) };
                    q(s / factorial(2 * k + odd))
                })
                .collect(),
        )
    };
    Ok((f(0).compose(&w)?, f(1).compose(&w)?))
}

/// The pair `(t+, t-)` of a case-B or case-C subcase; `t+ + t- = 1`.
pub fn t_pair(s: Subcase) -> (RatFuncT, RatFuncT) {
    match s {
        Subcase::S => (tt(), lin(1, -1)),
        Subcase::RS => (div(&RatFuncT::one(), &tt()), div(&lin(-1, 1), &tt())),
        Subcase::E => (div(&tt(), &lin(-1, 1)), div(&RatFuncT::one(), &lin(1, -1))),
    }
}

/// `(s+, s-)` for case B: `1/2 ± N(z) / (2 M √D(z))`.
pub fn b_s_pair(s: Subcase, order: usize) -> Result<(SeriesR, SeriesR)> {
    let (d, num, m) = b_parts(s, order);
    let root = d.sqrt()?;
    let half = cst(q(ratio(1, 2)), order);
    let frac = num.div(&root.scale_by(&(&q(rat(2)) * &m)))?;
    Ok((half.add(&frac), half.sub(&frac)))
}

/// `(D, N, M)` with `S = √D` the square root appearing in case B.
fn b_parts(s: Subcase, order: usize) -> (SeriesR, SeriesR, RatFuncT) {
    let t = tt();
    match s {
        Subcase::S => (
            quad([RatFuncT::one(), lin(-2, 4), RatFuncT::one()], order),
            quad([lin(-1, 2), RatFuncT::one(), RatFuncT::zero()], order),
            RatFuncT::one(),
        ),
        Subcase::RS => (
            quad([RatFuncT::one(), lin(4, -2), &t * &t], order),
            quad([lin(2, -1), &t * &t, RatFuncT::zero()], order),
            t,
        ),
        Subcase::E => {
            let omt2 = &lin(1, -1) * &lin(1, -1);
            (
                quad([RatFuncT::one(), lin(-2, -2), omt2.clone()], order),
                quad([lin(1, 1), -&omt2, RatFuncT::zero()], order),
                lin(-1, 1),
            )
        }
    }
}

/// `(s+, s-)` for case C with `cos`/`sin` of `z √u` expanded as even
/// series: `s± = t± C^2 + t∓ z^2 u S̃^2 ± 2 P z C S̃`. The cross term
/// `2 √(t+ t-) √u` collapses to `2P` with `P = t+ t-` (I), `t-` (II),
/// `t+` (III), which is what removes every square root of `t`.
pub fn c_s_pair(s: Subcase, order: usize) -> Result<(SeriesR, SeriesR)> {
    let (tp, tm) = t_pair(s);
    let (u, p) = match s {
        Subcase::S => (&tp * &tm, &tp * &tm),
        Subcase::RS => (div(&tm, &tp), tm.clone()),
        Subcase::E => (div(&tp, &tm), tp.clone()),
    };
    let (c, st) = cos_sin(&u, -1, order)?;
    let c2 = c.mul(&c);
    let s2 = st.mul(&st).shift(2).scale_by(&u);
    let cross = c.mul(&st).shift(1).scale_by(&(&q(rat(2)) * &p));
    let plus = c2.scale_by(&tp).add(&s2.scale_by(&tm)).add(&cross);
    let minus = c2.scale_by(&tm).add(&s2.scale_by(&tp)).sub(&cross);
    Ok((plus, minus))
}

/// `(s+/t+)^{e+} (s-/t-)^{e-}`.
fn combine(sp: &SeriesR, sm: &SeriesR, tp: &RatFuncT, tm: &RatFuncT, ep: &Rat, em: &Rat) -> Result<SeriesR> {
    let a = pow(&sp.scale_by(&tp.inv().expect("t+ ≠ 0")), ep)?;
    let b = pow(&sm.scale_by(&tm.inv().expect("t- ≠ 0")), em)?;
    Ok(a.mul(&b))
}

/// Exponents `(e+, e-)` for case B or C at `b = 2`.
fn exponents(s: Subcase, c0: &Rat, ci: &Rat) -> (Rat, Rat) {
    let two = rat(2);
    let sum = -(c0 + ci) / &two;
    match s {
        Subcase::S => (c0 / &two, sum),
        Subcase::RS => (ci / &two, sum),
        Subcase::E => (c0 / &two, ci / &two),
    }
}

/// `1 + x (1 - y)`.
fn one_plus_times_one_minus(x: &RatFuncT, y: &SeriesR) -> SeriesR {
    let n = y.order();
    Series::one(n).add(&Series::one(n).sub(y).scale_by(x))
}

/// Builds the truncated closed-form EGF.
pub fn closed_egf(spec: &ClosedEgfSpec) -> Result<SeriesR> {
    spec.check_preconditions()?;
    let n = spec.order;
    let p = &spec.params;
    let t = tt();
    match spec.case {
        EgfCase::A1 | EgfCase::A1Limit => {
            let g = spec.gkp()?;
            let ratio_bb = q(&g.beta_p / &g.beta);
            let (front, x) = if spec.case == EgfCase::A1 {
                // (1 - αz)^{-γ/α} and (1 - αz)^{-β/α}
                let ma = -&g.alpha;
                (power_or_exp(&ma, &g.gamma, n), power_or_exp(&ma, &g.beta, n))
            } else {
                (exp_lin(&q(g.gamma.clone()), n), exp_lin(&q(g.beta.clone()), n))
            };
            let bracket = one_plus_times_one_minus(&(&ratio_bb * &t), &x);
            Ok(front.mul(&pow(&bracket, &-(&g.gamma_p / &g.beta_p))?))
        }
        EgfCase::A2 | EgfCase::A2Limit => {
            let g = spec.gkp()?;
            let m = &g.alpha_p + &g.beta_p;
            let x = &q(&g.beta / &g.beta_p) * &t.inv().expect("t ≠ 0");
            let (front, y) = if spec.case == EgfCase::A2 {
                // (1 - m z t)^{-γ'/m} and (1 - m z t)^{β'/m}
                let u = &q(-&m) * &t;
                (binom_power(&u, &-(&g.gamma_p / &m), n), binom_power(&u, &(&g.beta_p / &m), n))
            } else {
                (exp_lin(&(&q(g.gamma_p.clone()) * &t), n), exp_lin(&(&q(-&g.beta_p) * &t), n))
            };
            let bracket = one_plus_times_one_minus(&x, &y);
            Ok(front.mul(&pow(&bracket, &(&g.gamma / &g.beta))?))
        }
        EgfCase::A3 | EgfCase::A3Limit => {
            let g = spec.gkp()?;
            let w = &q(g.beta.clone()) + &(&q(g.beta_p.clone()) * &t);
            let qb = div(&q(g.beta.clone()), &w);
            let qt = div(&(&q(g.beta_p.clone()) * &t), &w);
            let (y, y_inv) = if spec.case == EgfCase::A3 {
                // (1 - α z / q)^{±β/α}
                let u = div(&q(-&g.alpha), &qb);
                let e = &g.beta / &g.alpha;
                (binom_power(&u, &e, n), binom_power(&u, &-&e, n))
            } else {
                (exp_lin(&-&w, n), exp_lin(&w, n))
            };
            let first = one_plus_times_one_minus(&-&qb, &y);
            let second = one_plus_times_one_minus(&-&qt, &y_inv);
            Ok(pow(&first, &-(&g.gamma / &g.beta))?.mul(&pow(&second, &(&g.gamma_p / &g.beta_p))?))
        }
        EgfCase::SElem | EgfCase::SVertical => {
            let (a, b, r) = (&p[0], &p[1], &p[2]);
            let (d, hb) = vertical_dh_r(a, b, r, n);
            // h t = (t/b)[(1+az)^{b/a} - 1]
            let ht = hb.scale_by(&t);
            if spec.case == EgfCase::SElem {
                Ok(d.div(&Series::one(n).sub(&ht))?)
            } else {
                Ok(d.mul(&ht.exp()?))
            }
        }
        EgfCase::ESpeck | EgfCase::ESpeck2 => {
            let (a, b, c0, ci) = if spec.case == EgfCase::ESpeck {
                (p[0].clone(), &p[1], &p[2], &p[3])
            } else {
                (rat(0), &p[0], &p[1], &p[2])
            };
            let omt = lin(1, -1);
            let inv_omt = omt.inv().expect("1 - t ≠ 0");
            let (ym, yp) = if a.is_zero() {
                let w = &q(b.clone()) * &omt;
                (exp_lin(&-&w, n), exp_lin(&w, n))
            } else {
                // (1 + a(1-t) z)^{∓b/a}
                let u = &q(a.clone()) * &omt;
                (binom_power(&u, &-(b / &a), n), binom_power(&u, &(b / &a), n))
            };
            let first = one_plus_times_one_minus(&-&inv_omt, &ym);
            let second = one_plus_times_one_minus(&(&t * &inv_omt), &yp);
            Ok(pow(&first, &-(c0 / b))?.mul(&pow(&second, &-(ci / b))?))
        }
        EgfCase::EReducedSpeck => {
            let (a, b, c0) = (&p[0], &p[1], &p[2]);
            let omt = lin(1, -1);
            let (top, y) = if a.is_zero() {
                (exp_lin(&(&q(c0.clone()) * &omt), n), exp_lin(&(&q(b.clone()) * &omt), n))
            } else {
                let u = &q(a.clone()) * &omt;
                (binom_power(&u, &(c0 / a), n), binom_power(&u, &(b / a), n))
            };
            let den = Series::one(n).sub(&y.scale_by(&t));
            top.scale_by(&omt).div(&den)
        }
        EgfCase::B(s) | EgfCase::C(s) => {
            let (sp, sm) = if matches!(spec.case, EgfCase::B(_)) {
                b_s_pair(s, n)?
            } else {
                c_s_pair(s, n)?
            };
            let (tp, tm) = t_pair(s);
            let (ep, em) = exponents(s, &p[0], &p[1]);
            combine(&sp, &sm, &tp, &tm, &ep, &em)
        }
        EgfCase::BRestricted(s, r) => b_restricted(s, r, &p[0], n),
        EgfCase::CProp(i) => {
            // 1 / (cosh(zv) - sinh(zv)/v) with v^2 = 1 - t.
            let (ch, sh) = cos_sin(&lin(1, -1), 1, n)?;
            let g = ch.sub(&sh.shift(1)).inverse()?;
            Ok(if i == 1 { g } else { g.mul(&g) })
        }
    }
}

/// `d = (1+az)^{r/a}` and `h = ((1+az)^{b/a} - 1)/b` over `Q(t)`.
fn vertical_dh_r(a: &Rat, b: &Rat, r: &Rat, n: usize) -> (SeriesR, SeriesR) {
    let d = power_or_exp(a, r, n);
    let h = power_or_exp(a, b, n).sub(&Series::one(n)).scale(&b.recip());
    (d, h)
}

/// The same `d, h` over `Q`, for comparison with the Riordan-array route.
pub fn vertical_dh(a: &Rat, b: &Rat, r: &Rat, n: usize) -> (Series<Rat>, Series<Rat>) {
    let (d, h) = vertical_dh_r(a, b, r, n);
    let down = |s: &SeriesR| s.map(|c| c.as_poly().and_then(|p| p.as_constant()).expect("rational coefficient"));
    (down(&d), down(&h))
}

fn b_restricted(s: Subcase, r: Restriction, c: &Rat, n: usize) -> Result<SeriesR> {
    let (d, _, _) = b_parts(s, n);
    let root = d.sqrt()?;
    let t = tt();
    let two = q(rat(2));
    let cm1 = c - rat(1);
    match r {
        Restriction::A => root.inverse()?.pow_rat(c),
        Restriction::B => {
            // S^{-1} [X / Y]^{c-1} with X(0) = Y
            let (x, y) = match s {
                Subcase::S => (
                    quad([lin(-1, 2), RatFuncT::one(), RatFuncT::zero()], n).add(&root),
                    &two * &t,
                ),
                Subcase::RS => (
                    quad([lin(2, -1), &t * &t, RatFuncT::zero()], n).add(&root.scale_by(&t)),
                    two.clone(),
                ),
                Subcase::E => {
                    let omt = lin(1, -1);
                    (
                        quad([lin(1, 1), -&(&omt * &omt), RatFuncT::zero()], n).sub(&root.scale_by(&omt)),
                        &two * &t,
                    )
                }
            };
            Ok(root.inverse()?.mul(&x.scale_by(&y.inv().expect("nonzero")).pow_rat(&cm1)?))
        }
        Restriction::C => {
            // [K (P - R)/(P + R)]^{(c-1)/2}, or with R and P swapped for rS.
            let (k, p, rr) = match s {
                Subcase::S => (
                    div(&lin(-1, 1), &t),
                    quad([lin(1, -2), q(rat(-1)), RatFuncT::zero()], n),
                    root.clone(),
                ),
                Subcase::RS => (
                    lin(1, -1),
                    quad([lin(2, -1), &t * &t, RatFuncT::zero()], n),
                    root.scale_by(&-&t),
                ),
                Subcase::E => {
                    let omt = lin(1, -1);
                    (
                        t.inv().expect("t ≠ 0"),
                        quad([lin(1, 1), -&(&omt * &omt), RatFuncT::zero()], n),
                        root.scale_by(&omt),
                    )
                }
            };
            let frac = p.sub(&rr).div(&p.add(&rr))?.scale_by(&k);
            frac.pow_rat(&(cm1 / rat(2)))
        }
    }
}

/// The `z`-derivative form of the second left-peak EGF:
/// `d/dz [ (sinh(zv)/v) / (cosh(zv) - sinh(zv)/v) ]`.
pub fn left_peak_derivative_form(order: usize) -> Result<SeriesR> {
    let (ch, sh) = cos_sin(&lin(1, -1), 1, order + 1)?;
    let shz = sh.shift(1);
    let f = shz.div(&ch.sub(&shz))?;
    Ok(f.derivative_z())
}

/// Reduces every coefficient to a polynomial or reports the first
/// order whose coefficient keeps a denominator.
pub fn reduce(series: &SeriesR) -> Result<Vec<PolyT>> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c.as_poly().cloned().ok_or(Error::Residue { order: i }))
        .collect()
}

/// `series(t ↦ x(t), z ↦ y(t) z)`.
pub fn substitute(series: &SeriesR, x: &RatFuncT, y: &RatFuncT) -> SeriesR {
    series.map(|c| c.substitute(x)).dilate(y)
}
