//! Registry of closed-form entry formulas. Every entry names the triangle
//! it claims to reproduce ([`FormulaId::reference`]) so that no formula is
//! used without a recurrence cross-check ([`cross_check`]).
//!
//! Formulas are evaluated at a single `(n, k)`. An entry outside its
//! stated domain returns [`Error::Param`] (or [`Error::SingularTerm`] for
//! a hypergeometric term whose lower parameter vanishes first).

use std::fmt;

use num_traits::{One, Zero};

use super::{EulerianParams, FamilyKind, NamedFamily, StirlingParams};
use crate::algebra::{
    binom, factorial, falling, finite_difference, hyp_term, powi, rat, ratio, rising, sign, to_i64, Direction,
    HypTermSpec, Rat,
};
use crate::error::{Error, Result};
use crate::gkp::{triangle_from_recurrence, Triangle};
use crate::report::Report;

/// A triangle of a hypergeometric-term family type from the Narayana
/// case: Stirling (I), reversed Stirling (II) or Eulerian (III) type,
/// under restriction (a), (b) or (c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NarayanaSub {
    Ia,
    Ib,
    Ic,
    IIa,
    IIb,
    IIc,
    IIIa,
    IIIb,
}

impl NarayanaSub {
    pub const ALL: [NarayanaSub; 8] = [
        NarayanaSub::Ia,
        NarayanaSub::Ib,
        NarayanaSub::Ic,
        NarayanaSub::IIa,
        NarayanaSub::IIb,
        NarayanaSub::IIc,
        NarayanaSub::IIIa,
        NarayanaSub::IIIb,
    ];

    fn name(self) -> &'static str {
        match self {
            NarayanaSub::Ia => "s-a",
            NarayanaSub::Ib => "s-b",
            NarayanaSub::Ic => "s-c",
            NarayanaSub::IIa => "rs-a",
            NarayanaSub::IIb => "rs-b",
            NarayanaSub::IIc => "rs-c",
            NarayanaSub::IIIa => "e-a",
            NarayanaSub::IIIb => "e-b",
        }
    }

    /// The family and `(c0, c∞)` as functions of the single parameter `c`.
    pub fn family(self, c: &Rat) -> NamedFamily {
        let two = rat(2);
        let (kind, c0, ci) = match self {
            NarayanaSub::Ia => (FamilyKind::NarayanaS, c.clone(), -(c * rat(2))),
            NarayanaSub::Ib => (FamilyKind::NarayanaS, c.clone(), rat(-2)),
            NarayanaSub::Ic => (FamilyKind::NarayanaS, c - rat(1), rat(0)),
            NarayanaSub::IIa => (FamilyKind::NarayanaRS, -(c * rat(2)), c.clone()),
            NarayanaSub::IIb => (FamilyKind::NarayanaRS, rat(-2), c.clone()),
            NarayanaSub::IIc => (FamilyKind::NarayanaRS, rat(0), c - rat(1)),
            NarayanaSub::IIIa => (FamilyKind::NarayanaE, c.clone(), c.clone()),
            NarayanaSub::IIIb => (FamilyKind::NarayanaE, c.clone(), rat(2) - c),
        };
        NamedFamily::new(kind, two, c0, ci)
    }

    /// Whether the direct (`reversed = false`) or reversed representation
    /// exists.
    pub fn has(self, reversed: bool) -> bool {
        !matches!((self, reversed), (NarayanaSub::Ic, true) | (NarayanaSub::IIc, false))
    }
}

/// Which normalized Narayana triangle an f/h-vector formula describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FhKind {
    /// `C(n,k) C(n+k,k)`.
    TypeBF,
    /// `C(n,k) C(n+k+2,k)/(k+1)`.
    TypeAF,
    /// `C(n,k)^2`.
    TypeBH,
    /// `C(n,k) C(n+1,k)/(k+1)`.
    TypeAH,
}

impl FhKind {
    pub const ALL: [FhKind; 4] = [FhKind::TypeBF, FhKind::TypeAF, FhKind::TypeBH, FhKind::TypeAH];

    fn name(self) -> &'static str {
        match self {
            FhKind::TypeBF => "b-f",
            FhKind::TypeAF => "a-f",
            FhKind::TypeBH => "b-h",
            FhKind::TypeAH => "a-h",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// Rank-0 Stirling formulas at five `(a,b)` points: 1 `(0,0)`,
    /// 2 `(1,1)`, 3 `(-1,1)`, 4 `(1,2)`, 5 `(-2,-1)`; argument `r`.
    FivePoints(u8),
    /// `B^{(r)}_{n,k} = S_{n,k}(1,2;r)` for `r ∈ {0,1,2}` without a sum.
    BesselRank0,
    /// `b̂^{(r)}_{n,k} = S_{n,k}(-2,-1;r)` for `r ∈ {-1,0,1}` without a sum.
    BesselHatRank0,
    /// `B^{(r)}_{n,k}` as a sum of `r+1` terms, two equivalent forms.
    BesselAltGen(u8),
    /// Simple generalized Eulerian triangles: 1 `E(0,0;c0,c∞)`,
    /// 2 `E(-1,1;c0,c∞)`, 3 `E(a,b;c0,-c0)`, 4 `E(-a,a;c0,c∞)`.
    ESimple(u8),
    /// `E(-1,2;2-ζ+2p,ζ-2p)` by a sum of `p` terms; arguments `p, ζ`.
    ESingleProg,
    /// Single-progression `E(a,b;c0,b-c0)`: 1 as an alternating sum,
    /// 2 as an `(n+1)`-th backward difference, 3 through `S(-a,b;b-c0)`.
    ESingleProgSum(u8),
    /// `E(-1,2;c0,0)` (1) and `E(-1,2;c0+1,1)` (2) as hypergeometric terms.
    EHyp(u8),
    /// `N^E(2;c-1,1-c)` as a difference of two hypergeometric terms.
    EMidtrimPair,
    /// One-parameter Narayana triangles as hypergeometric terms; `true`
    /// selects the reversed representation.
    NarayanaT2(NarayanaSub, bool),
    /// Normalized Narayana triangles from the OEIS, rows 1 to 18, as
    /// coefficients of hypergeometric row polynomials.
    OeisT3(u8),
    /// Narayana f- and h-vector binomial products.
    NarayanaFh(FhKind),
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaId::FivePoints(i) => write!(f, "stirling-point-{i}"),
            FormulaId::BesselRank0 => write!(f, "bessel-rank0"),
            FormulaId::BesselHatRank0 => write!(f, "bessel-hat-rank0"),
            FormulaId::BesselAltGen(i) => write!(f, "bessel-altgen-{i}"),
            FormulaId::ESimple(i) => write!(f, "eulerian-simple-{i}"),
            FormulaId::ESingleProg => write!(f, "eulerian-single-prog"),
            FormulaId::ESingleProgSum(i) => write!(f, "eulerian-single-prog-sum-{i}"),
            FormulaId::EHyp(i) => write!(f, "eulerian-hyp-{i}"),
            FormulaId::EMidtrimPair => write!(f, "narayana-midtrim-pair"),
            FormulaId::NarayanaT2(s, rev) => {
                write!(f, "narayana-term-{}{}", s.name(), if *rev { "-rev" } else { "" })
            }
            FormulaId::OeisT3(i) => write!(f, "narayana-oeis-{i}"),
            FormulaId::NarayanaFh(k) => write!(f, "narayana-fh-{}", k.name()),
        }
    }
}

/// One row of the OEIS table: a normalized Narayana triangle and the
/// hypergeometric form of its row polynomials.
#[derive(Debug, Clone)]
pub struct OeisRow {
    pub oeis: &'static str,
    pub family: NamedFamily,
    /// Start of the rising factorial the entries are divided by.
    pub norm: i64,
    pub form: RowForm,
}

/// `pre(n) · t^{shift} ₂F₁(A, B; C | ±t^{±1})` with `A = -n` always.
#[derive(Debug, Clone, Copy)]
pub struct RowForm {
    pub b: Affine,
    pub c: Affine,
    pub arg: Arg,
    pub pre: Pre,
}

/// A small rational `p/q`.
pub type Rat2 = (i64, i64);

/// `x n + y` as `(x, y)`.
pub type Affine = (Rat2, Rat2);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arg {
    T,
    MinusT,
    /// `t^n F(1/t)`.
    InvT,
    /// `t^n F(-1/t)`.
    MinusInvT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pre {
    One,
    NPlusOne,
    /// `(2)^{n̄,4} / (2)^{n̄}`.
    Step4Ratio,
}

const fn f(b: Affine, c: Affine, arg: Arg, pre: Pre) -> RowForm {
    RowForm { b, c, arg, pre }
}

/// The 18 rows, numbered from 1.
pub fn oeis_table() -> Vec<OeisRow> {
    use Arg::*;
    use Pre::*;
    let row = |oeis, kind, c0: i64, ci: i64, norm, form| OeisRow {
        oeis,
        family: NamedFamily::new(kind, rat(2), rat(c0), rat(ci)),
        norm,
        form,
    };
    let n_plus = |y: i64| ((1, 1), (y, 1));
    let minus_n_plus = |y: i64| ((-1, 1), (y, 1));
    let cst = |p: i64, q: i64| ((0, 1), (p, q));
    let (s, rs, e) = (FamilyKind::NarayanaS, FamilyKind::NarayanaRS, FamilyKind::NarayanaE);
    vec![
        row("A063007", s, 1, -2, 1, f(n_plus(1), cst(1, 1), MinusT, One)),
        row("A053124", s, 2, -4, 1, f(n_plus(2), cst(3, 2), MinusT, NPlusOne)),
        row("A033282", s, 3, -6, 3, f(n_plus(3), cst(2, 1), MinusT, One)),
        row("A086810", s, 0, -2, 2, f(minus_n_plus(1), ((-2, 1), (0, 1)), MinusInvT, Step4Ratio)),
        row("A063007", s, 1, -2, 1, f(n_plus(1), cst(1, 1), MinusT, One)),
        row("A088617", s, 2, -2, 2, f(n_plus(1), cst(2, 1), MinusT, One)),
        row("A104684", rs, -2, 1, 1, f(n_plus(1), cst(1, 1), MinusInvT, One)),
        row("A053125", rs, -4, 2, 1, f(n_plus(2), cst(3, 2), MinusInvT, NPlusOne)),
        row("A126216", rs, -6, 3, 3, f(n_plus(3), cst(2, 1), MinusInvT, One)),
        // Printed with argument t; the reversal of the A086810 row needs -t.
        row("A133336", rs, -2, 0, 2, f(minus_n_plus(1), ((-2, 1), (0, 1)), MinusT, Step4Ratio)),
        row("A104684", rs, -2, 1, 1, f(n_plus(1), cst(1, 1), MinusInvT, One)),
        row("A060693", rs, -2, 2, 2, f(n_plus(1), cst(2, 1), MinusInvT, One)),
        row("A008459", e, 1, 1, 1, f(minus_n_plus(0), cst(1, 1), T, One)),
        row("A091044", e, 2, 2, 1, f(((-1, 1), (-1, 2)), cst(3, 2), T, NPlusOne)),
        row("A001263", e, 3, 3, 3, f(minus_n_plus(-1), cst(2, 1), T, One)),
        row("A090181", e, 0, 2, 2, f(minus_n_plus(1), cst(2, 1), InvT, One)),
        row("A008459", e, 1, 1, 1, f(minus_n_plus(0), cst(1, 1), T, One)),
        row("A131198", e, 2, 0, 2, f(minus_n_plus(1), cst(2, 1), T, One)),
    ]
}

fn affine(p: Affine, n: i64) -> Rat {
    let ((xn, xd), (yn, yd)) = p;
    ratio(xn, xd) * rat(n) + ratio(yn, yd)
}

impl OeisRow {
    /// Sign convention: Stirling type `(-1)^k`, reversed `(-1)^{n-k}`.
    pub fn sign(&self, n: usize, k: usize) -> Rat {
        match self.family.kind {
            FamilyKind::NarayanaS => sign(k as i64),
            FamilyKind::NarayanaRS => sign((n - k) as i64),
            _ => rat(1),
        }
    }

    /// The normalized triangle computed from the recurrence.
    pub fn normalized_triangle(&self, n_max: usize) -> Triangle {
        let raw = super::family_triangle(&self.family, n_max);
        raw.map(None, |n, k, x| self.sign(n, k) * x / rising(&rat(self.norm), n, &rat(1)))
    }

    /// `[t^k]` of the hypergeometric row polynomial; unity at `n = 0`.
    pub fn coefficient(&self, n: usize, k: usize) -> Result<Rat> {
        if k > n {
            return Ok(Rat::zero());
        }
        if n == 0 {
            return Ok(Rat::one());
        }
        let ni = n as i64;
        let spec = HypTermSpec::new(
            vec![rat(-ni), affine(self.form.b, ni)],
            vec![affine(self.form.c, ni), rat(1)],
        );
        let (j, s) = match self.form.arg {
            Arg::T => (k, rat(1)),
            Arg::MinusT => (k, sign(k as i64)),
            Arg::InvT => (n - k, rat(1)),
            Arg::MinusInvT => (n - k, sign((n - k) as i64)),
        };
        let pre = match self.form.pre {
            Pre::One => rat(1),
            Pre::NPlusOne => rat(ni + 1),
            Pre::Step4Ratio => rising(&rat(2), n, &rat(4)) / rising(&rat(2), n, &rat(1)),
        };
        Ok(pre * s * hyp_term(&spec, j)?)
    }
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Param(msg.into())
}

fn args_n(id: FormulaId, args: &[Rat], want: usize) -> Result<()> {
    if args.len() == want {
        Ok(())
    } else {
        Err(Error::Param(format!("{id} takes {want} arguments, got {}", args.len())))
    }
}

fn int_arg(x: &Rat, what: &str) -> Result<i64> {
    to_i64(x).ok_or_else(|| domain(format!("{what} must be an integer, got {x}")))
}

fn h(upper: Vec<Rat>, lower: Vec<Rat>, k: usize) -> Result<Rat> {
    hyp_term(&HypTermSpec::new(upper, lower), k)
}

/// `1/m!`, zero for negative integers `m` (the reciprocal gamma function).
fn recip_factorial(m: i64) -> Rat {
    if m < 0 {
        Rat::zero()
    } else {
        factorial(m as usize).recip()
    }
}

impl FormulaId {
    /// Every registered formula.
    pub fn all() -> Vec<FormulaId> {
        let mut v: Vec<FormulaId> = (1..=5).map(FormulaId::FivePoints).collect();
        v.extend([FormulaId::BesselRank0, FormulaId::BesselHatRank0]);
        v.extend((1..=2).map(FormulaId::BesselAltGen));
        v.extend((1..=4).map(FormulaId::ESimple));
        v.push(FormulaId::ESingleProg);
        v.extend((1..=3).map(FormulaId::ESingleProgSum));
        v.extend((1..=2).map(FormulaId::EHyp));
        v.push(FormulaId::EMidtrimPair);
        for s in NarayanaSub::ALL {
            for rev in [false, true] {
                if s.has(rev) {
                    v.push(FormulaId::NarayanaT2(s, rev));
                }
            }
        }
        v.extend((1..=18).map(FormulaId::OeisT3));
        v.extend(FhKind::ALL.map(FormulaId::NarayanaFh));
        v
    }

    pub fn parse(s: &str) -> Result<FormulaId> {
        FormulaId::all()
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }

    /// Names of the arguments the formula takes.
    pub fn arg_names(self) -> &'static [&'static str] {
        match self {
            FormulaId::FivePoints(_)
            | FormulaId::BesselRank0
            | FormulaId::BesselHatRank0
            | FormulaId::BesselAltGen(_) => &["r"],
            FormulaId::ESimple(1) | FormulaId::ESimple(2) => &["c0", "cinf"],
            FormulaId::ESimple(3) => &["a", "b", "c0"],
            FormulaId::ESimple(_) => &["a", "c0", "cinf"],
            FormulaId::ESingleProg => &["p", "zeta"],
            FormulaId::ESingleProgSum(_) => &["a", "b", "c0"],
            FormulaId::EHyp(_) => &["c0"],
            FormulaId::EMidtrimPair | FormulaId::NarayanaT2(..) => &["c"],
            FormulaId::OeisT3(_) | FormulaId::NarayanaFh(_) => &[],
        }
    }

    /// The argument values at which the formula is stated and checked.
    pub fn stated_args(self) -> Vec<Vec<Rat>> {
        let ints = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        match self {
            FormulaId::FivePoints(_) => [rat(0), rat(1), rat(2), rat(3), rat(-1), ratio(1, 2), ratio(-5, 3)]
                .into_iter()
                .map(|r| vec![r])
                .collect(),
            FormulaId::BesselRank0 => (0..=2).map(|r| vec![rat(r)]).collect(),
            FormulaId::BesselHatRank0 => (-1..=1).map(|r| vec![rat(r)]).collect(),
            FormulaId::BesselAltGen(_) => (0..=4).map(|r| vec![rat(r)]).collect(),
            FormulaId::ESimple(1) | FormulaId::ESimple(2) => {
                vec![ints(&[2, 3]), vec![ratio(1, 2), ratio(-5, 3)], ints(&[0, 1])]
            }
            FormulaId::ESimple(3) => vec![ints(&[1, 2, 3]), vec![ratio(-1, 2), ratio(5, 3), ratio(7, 4)]],
            FormulaId::ESimple(_) => vec![ints(&[2, 1, 3]), vec![ratio(1, 3), rat(-2), ratio(5, 2)]],
            FormulaId::ESingleProg => (0..=3).flat_map(|p| (0..=1).map(move |z| ints(&[p, z]))).collect(),
            FormulaId::ESingleProgSum(_) => vec![
                ints(&[0, 1, 1]),
                ints(&[0, 1, 0]),
                ints(&[0, 2, 1]),
                vec![ratio(1, 2), rat(3), ratio(-2, 3)],
            ],
            FormulaId::EHyp(_) => [rat(0), rat(1), rat(2), rat(3), ratio(1, 2), ratio(-2, 3)]
                .into_iter()
                .map(|c| vec![c])
                .collect(),
            FormulaId::EMidtrimPair => [rat(1), rat(2), rat(3), ratio(5, 2), ratio(-4, 3)]
                .into_iter()
                .map(|c| vec![c])
                .collect(),
            FormulaId::NarayanaT2(..) => [rat(0), rat(1), rat(2), rat(3), ratio(1, 3), ratio(-5, 2)]
                .into_iter()
                .map(|c| vec![c])
                .collect(),
            FormulaId::OeisT3(_) | FormulaId::NarayanaFh(_) => vec![vec![]],
        }
    }

    /// The triangle the formula claims to reproduce, built from the
    /// recurrence (and normalized where the formula is).
    pub fn reference(self, args: &[Rat], n_max: usize) -> Result<Triangle> {
        args_n(self, args, self.arg_names().len())?;
        let a = args;
        Ok(match self {
            FormulaId::FivePoints(i) => {
                let (x, y) = match i {
                    1 => (0, 0),
                    2 => (1, 1),
                    3 => (-1, 1),
                    4 => (1, 2),
                    5 => (-2, -1),
                    _ => return Err(Error::Unknown(self.to_string())),
                };
                StirlingParams::new(rat(x), rat(y), a[0].clone()).triangle(n_max)
            }
            FormulaId::BesselRank0 | FormulaId::BesselAltGen(_) => {
                StirlingParams::new(rat(1), rat(2), a[0].clone()).triangle(n_max)
            }
            FormulaId::BesselHatRank0 => StirlingParams::new(rat(-2), rat(-1), a[0].clone()).triangle(n_max),
            FormulaId::ESimple(1) => EulerianParams::new(rat(0), rat(0), a[0].clone(), a[1].clone()).triangle(n_max),
            FormulaId::ESimple(2) => EulerianParams::new(rat(-1), rat(1), a[0].clone(), a[1].clone()).triangle(n_max),
            FormulaId::ESimple(3) => {
                EulerianParams::new(a[0].clone(), a[1].clone(), a[2].clone(), -&a[2]).triangle(n_max)
            }
            FormulaId::ESimple(_) => {
                EulerianParams::new(-&a[0], a[0].clone(), a[1].clone(), a[2].clone()).triangle(n_max)
            }
            FormulaId::ESingleProg => {
                let (p, z) = (int_arg(&a[0], "p")?, int_arg(&a[1], "zeta")?);
                EulerianParams::new(rat(-1), rat(2), rat(2 - z + 2 * p), rat(z - 2 * p)).triangle(n_max)
            }
            FormulaId::ESingleProgSum(_) => {
                EulerianParams::new(a[0].clone(), a[1].clone(), a[2].clone(), &a[1] - &a[2]).triangle(n_max)
            }
            FormulaId::EHyp(1) => EulerianParams::new(rat(-1), rat(2), a[0].clone(), rat(0)).triangle(n_max),
            FormulaId::EHyp(_) => EulerianParams::new(rat(-1), rat(2), &a[0] + rat(1), rat(1)).triangle(n_max),
            FormulaId::EMidtrimPair => super::family_triangle(
                &NamedFamily::new(FamilyKind::NarayanaE, rat(2), &a[0] - rat(1), rat(1) - &a[0]),
                n_max,
            ),
            FormulaId::NarayanaT2(s, _) => super::family_triangle(&s.family(&a[0]), n_max),
            FormulaId::OeisT3(i) => oeis_row(i)?.normalized_triangle(n_max),
            FormulaId::NarayanaFh(kind) => {
                let (sub, c) = fh_source(kind);
                let norm = if c == 1 { 1 } else { 3 };
                let fam = sub.family(&rat(c));
                let s = fam.kind == FamilyKind::NarayanaS;
                triangle_from_recurrence(&fam.gkp(), n_max).map(None, |n, k, x| {
                    let sg = if s { sign(k as i64) } else { rat(1) };
                    sg * x / rising(&rat(norm), n, &rat(1))
                })
            }
        })
    }
}

fn oeis_row(i: u8) -> Result<OeisRow> {
    oeis_table()
        .into_iter()
        .nth((i as usize).wrapping_sub(1))
        .ok_or_else(|| Error::Unknown(format!("narayana-oeis-{i}")))
}

fn fh_source(kind: FhKind) -> (NarayanaSub, i64) {
    match kind {
        FhKind::TypeBF => (NarayanaSub::Ia, 1),
        FhKind::TypeAF => (NarayanaSub::Ia, 3),
        FhKind::TypeBH => (NarayanaSub::IIIa, 1),
        FhKind::TypeAH => (NarayanaSub::IIIa, 3),
    }
}

/// Evaluates formula `id` at `(n, k)`.
pub fn closed_form_eval(id: FormulaId, args: &[Rat], n: usize, k: usize) -> Result<Rat> {
    args_n(id, args, id.arg_names().len())?;
    if k > n {
        return Ok(Rat::zero());
    }
    let (ni, ki) = (n as i64, k as i64);
    let (nr, kr) = (rat(ni), rat(ki));
    let one = rat(1);
    let half = ratio(1, 2);
    let a = args;
    match id {
        FormulaId::FivePoints(i) => {
            let r = &a[0];
            let c = binom(ni, ki);
            let m = n - k;
            match i {
                1 => Ok(c * powi(r, m as i64)),
                2 => Ok(c * falling(r, m, &one)),
                3 => Ok(c * falling(&(&nr + r - rat(1)), m, &one)),
                4 => {
                    // The lower parameter -n+2k+1 may be a non-positive
                    // integer; the 1/(2k-n)! in front regularizes the
                    // series, which is summed as Σ_j (...)_j 2^j / ((2k-n+j)! j!).
                    let sum: Rat = (0..=m)
                        .map(|j| {
                            rising(&-r, j, &one)
                                * rising(&rat(-(m as i64)), j, &one)
                                * powi(&rat(2), j as i64)
                                * recip_factorial(2 * ki - ni + j as i64)
                                / factorial(j)
                        })
                        .sum();
                    Ok(c * factorial(k) * powi(&rat(2), -(m as i64)) * sum)
                }
                5 => {
                    if n == 0 {
                        return Ok(one);
                    }
                    let f = h(
                        vec![r - rat(1), rat(-(m as i64))],
                        vec![rat(-2 * ni + ki), one.clone()],
                        0,
                    )?;
                    debug_assert!(f.is_one());
                    let series: Rat = (0..=m)
                        .map(|j| {
                            h(vec![r - rat(1), rat(-(m as i64))], vec![rat(-2 * ni + ki), one.clone()], j)
                                .map(|t| t * powi(&rat(2), j as i64))
                        })
                        .sum::<Result<Rat>>()?;
                    Ok(c * factorial(2 * n - k) / factorial(n) * powi(&rat(2), -(m as i64)) * series)
                }
                _ => Err(Error::Unknown(id.to_string())),
            }
        }
        FormulaId::BesselRank0 => {
            let r = int_arg(&a[0], "r")?;
            if !(0..=2).contains(&r) {
                return Err(domain("r must be 0, 1 or 2"));
            }
            let d = 2 * ki - ni + r;
            if d < 0 {
                return Err(domain(format!("needs 2k - n + r ≥ 0, got {d}")));
            }
            let tail = match r {
                0 => one,
                1 => &nr + rat(1),
                _ => &nr * (&nr + rat(1)) + rat(2) * (&kr + rat(1)),
            };
            Ok(binom(ni, ki) * factorial(k) / factorial(d as usize) * powi(&rat(2), ki - ni) * tail)
        }
        FormulaId::BesselHatRank0 => {
            let r = int_arg(&a[0], "r")?;
            if !(-1..=1).contains(&r) {
                return Err(domain("r must be -1, 0 or 1"));
            }
            if n == 0 {
                return Ok(one);
            }
            let top = 2 * ni - ki;
            let den = falling(&rat(top), (1 - r) as usize, &one);
            if den.is_zero() {
                return Err(domain(format!("(2n-k)^(1-r falling) vanishes at n = {n}, k = {k}")));
            }
            let tail = match r {
                -1 => &kr * (&kr + rat(1)) - rat(2) * &nr,
                0 => kr.clone(),
                _ => one,
            };
            Ok(binom(ni, ki) * factorial(top as usize) / (factorial(n) * den) * powi(&rat(2), ki - ni) * tail)
        }
        FormulaId::BesselAltGen(form) => {
            let r = int_arg(&a[0], "r")?;
            if r < 0 {
                return Err(domain("r must be a non-negative integer"));
            }
            let m = n - k;
            let front = powi(&rat(2), -(m as i64)) / factorial(m) / binom(ni + r, r)
                * falling(&rat(ni + r), 2 * m, &one);
            let sum: Rat = (0..=r)
                .map(|l| {
                    if form == 1 {
                        binom(ki + l, l) * binom(m as i64, r - l)
                    } else {
                        binom(ki + l / 2, l / 2) * binom(ni, r - l)
                    }
                })
                .sum();
            Ok(front * sum)
        }
        FormulaId::ESimple(i) => {
            let c = binom(ni, ki);
            let m = n - k;
            match i {
                1 => Ok(c * powi(&a[0], m as i64) * powi(&a[1], ki)),
                2 => Ok(c * rising(&(&a[0] + &kr), m, &one) * falling(&a[1], k, &one)),
                3 => Ok(sign(ki) * c * falling(&a[2], n, &a[0])),
                4 => Ok(c * rising(&(&a[1] + &kr * &a[0]), m, &a[0]) * falling(&a[2], k, &a[0])),
                _ => Err(Error::Unknown(id.to_string())),
            }
        }
        FormulaId::ESingleProg => {
            let (p, z) = (int_arg(&a[0], "p")?, int_arg(&a[1], "zeta")?);
            if p < 0 || !(0..=1).contains(&z) {
                return Err(domain("needs p ≥ 0 and ζ ∈ {0, 1}"));
            }
            let main = factorial(n) * binom(ni + 1, 2 * ki + 2 * p + 1 - z);
            let corr: Rat = (0..p)
                .map(|l| sign(l) * rising(&rat(2 - z + 2 * l), n, &one) * binom(ni + 1, ki + p - l))
                .sum();
            Ok(main - sign(ki + p) * corr)
        }
        FormulaId::ESingleProgSum(form) => {
            let (aa, b, c0) = (&a[0], &a[1], &a[2]);
            let f = |x: i64| falling(&(b * rat(x) + c0), n, aa);
            match form {
                1 => Ok((0..=ki).map(|j| sign(ki - j) * binom(ni + 1, ki - j) * f(j)).sum()),
                2 => {
                    let values: Vec<Rat> = (ki - ni - 1..=ki)
                        .map(|x| if x >= 0 { f(x) } else { Rat::zero() })
                        .collect();
                    finite_difference(&values, n + 1, Direction::Backward)
                }
                3 => {
                    let s = StirlingParams::new(-aa, b.clone(), b - c0).triangle(n);
                    Ok((k..=n)
                        .map(|j| {
                            sign((j - k) as i64)
                                * binom(j as i64, ki)
                                * powi(b, (n - j) as i64)
                                * factorial(n - j)
                                * s.get(n, (n - j) as i64)
                        })
                        .sum())
                }
                _ => Err(Error::Unknown(id.to_string())),
            }
        }
        FormulaId::EHyp(form) => {
            let c0 = &a[0];
            let lower = vec![one.clone(), c0 / rat(2) + &half];
            let minus_half_n = -&nr / rat(2);
            if form == 1 {
                Ok(rising(c0, n, &one) * h(vec![minus_half_n.clone(), &minus_half_n + &half], lower, k)?)
            } else {
                Ok(rising(&(c0 + rat(1)), n, &one) * h(vec![minus_half_n.clone(), &minus_half_n - &half], lower, k)?)
            }
        }
        FormulaId::EMidtrimPair => {
            let c = &a[0];
            if k == 0 {
                return Err(domain("holds for 1 ≤ k ≤ n"));
            }
            let up = vec![rat(1 - ni), rat(-ni) + c];
            let low = vec![one.clone(), c.clone()];
            let diff = h(up.clone(), low.clone(), k)? - h(up, low, k - 1)?;
            Ok(rising(&(c - rat(1)), n, &one) * diff)
        }
        FormulaId::NarayanaT2(sub, rev) => {
            if !sub.has(rev) {
                return Err(Error::Unknown(id.to_string()));
            }
            narayana_term(sub, rev, &a[0], n, k)
        }
        FormulaId::OeisT3(i) => oeis_row(i)?.coefficient(n, k),
        FormulaId::NarayanaFh(kind) => Ok(match kind {
            FhKind::TypeBF => binom(ni, ki) * binom(ni + ki, ki),
            FhKind::TypeAF => binom(ni, ki) * binom(ni + ki + 2, ki) / (&kr + rat(1)),
            FhKind::TypeBH => binom(ni, ki) * binom(ni, ki),
            FhKind::TypeAH => binom(ni, ki) * binom(ni + 1, ki) / (&kr + rat(1)),
        }),
    }
}

/// Table of hypergeometric-term representations of the one-parameter
/// Narayana triangles at `b = 2`.
fn narayana_term(sub: NarayanaSub, rev: bool, c: &Rat, n: usize, k: usize) -> Result<Rat> {
    let ni = n as i64;
    let nr = rat(ni);
    let (one, two, half) = (rat(1), rat(2), ratio(1, 2));
    // (c)^{n̄} [-n, n+c; 1, 1/2 + c/2]
    let s_a = || (rising(c, n, &one), vec![-&nr, &nr + c], vec![one.clone(), &half + c / &two]);
    // (-2c)^{n̲,4} [-n, -n + 1/2 - c/2; 1, -2n + 1 - c]
    let rs_a = || {
        (
            falling(&(-(c * &two)), n, &rat(4)),
            vec![-&nr, -&nr + &half - c / &two],
            vec![one.clone(), rat(1 - 2 * ni) - c],
        )
    };
    // (c)^{n̄} [-n, n+1; 1, c]
    let s_b = || (rising(c, n, &one), vec![-&nr, &nr + rat(1)], vec![one.clone(), c.clone()]);
    // (-2)^{n̲,4} [-n, -n+1-c; 1, -2n]
    let rs_b = || {
        (
            falling(&rat(-2), n, &rat(4)),
            vec![-&nr, rat(1 - ni) - c],
            vec![one.clone(), rat(-2 * ni)],
        )
    };
    // (c-1)^{n̄} [-n+1, n; 1, c]
    let s_c = || (rising(&(c - rat(1)), n, &one), vec![rat(1 - ni), nr.clone()], vec![one.clone(), c.clone()]);
    // (c)^{n̄} [-n, -n + 1/2 - c/2; 1, 1/2 + c/2]
    let e_a = || {
        (
            rising(c, n, &one),
            vec![-&nr, -&nr + &half - c / &two],
            vec![one.clone(), &half + c / &two],
        )
    };
    let (pre, up, low) = match (sub, rev) {
        (NarayanaSub::Ia, false) | (NarayanaSub::IIa, true) => s_a(),
        (NarayanaSub::Ia, true) | (NarayanaSub::IIa, false) => rs_a(),
        (NarayanaSub::Ib, false) | (NarayanaSub::IIb, true) => s_b(),
        (NarayanaSub::Ib, true) | (NarayanaSub::IIb, false) => rs_b(),
        (NarayanaSub::Ic, false) | (NarayanaSub::IIc, true) => s_c(),
        (NarayanaSub::IIIa, _) => e_a(),
        (NarayanaSub::IIIb, false) => (
            rising(c, n, &one),
            vec![-&nr, -&nr - rat(1) + c],
            vec![one.clone(), c.clone()],
        ),
        (NarayanaSub::IIIb, true) => {
            let d = rat(2) - c;
            (rising(&d, n, &one), vec![-&nr, rat(1 - ni) - c], vec![one.clone(), d])
        }
        _ => unreachable!("checked by NarayanaSub::has"),
    };
    // Direct forms index the term by k; reversed ones by n - k.
    let j = if rev { n - k } else { k };
    Ok(pre * h(up, low, j)?)
}

/// Compares the formula with its reference triangle on `0 ≤ k ≤ n ≤
/// n_max`. Points outside the formula's stated domain are counted as
/// skipped; any other error is a failure.
pub fn cross_check(id: FormulaId, args: &[Rat], n_max: usize) -> Report {
    let shown: Vec<String> = args.iter().map(|x| x.to_string()).collect();
    let mut rep = Report::new(format!("{id}({})", shown.join(",")));
    let reference = match id.reference(args, n_max) {
        Ok(t) => t,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    let mut evaluated = 0;
    for n in 0..=n_max {
        for k in 0..=n {
            match closed_form_eval(id, args, n, k) {
                Ok(v) => {
                    evaluated += 1;
                    let want = reference.get(n, k as i64);
                    rep.check(v == want, || format!("({n},{k}): formula {v}, recurrence {want}"));
                }
                Err(Error::Param(_)) | Err(Error::SingularTerm { .. }) => {}
                Err(e) => rep.fail(format!("({n},{k}): {e}")),
            }
        }
    }
    if evaluated == 0 {
        rep.fail("no point of the range lies in the formula's domain".into());
    }
    rep
}

/// Cross-checks every registry entry at all its stated arguments.
pub fn registry_check(n_max: usize) -> Vec<Report> {
    let mut out = Vec::new();
    for id in FormulaId::all() {
        for args in id.stated_args() {
            let rep = cross_check(id, &args, n_max);
            // Some stated arguments leave a representation undefined
            // everywhere (e.g. a zero lower parameter); those carry no claim.
            if rep.cases == 0 && rep.failures.iter().all(|f| f.starts_with("no point")) {
                continue;
            }
            out.push(rep);
        }
    }
    out
}

/// `b̂^{(r)}_{n+1,k+1} = B^{(r)}_{2n-k,n}` for `r ∈ {0,1}`, `0 ≤ k ≤ n ≤ n_max`,
/// both sides from their recurrences.
pub fn bessel_cross_check(n_max: usize) -> Report {
    let mut rep = Report::new("Bessel and reversed-Bessel cross identity");
    for r in 0..=1 {
        let hat = StirlingParams::new(rat(-2), rat(-1), rat(r)).triangle(n_max + 1);
        let b = StirlingParams::new(rat(1), rat(2), rat(r)).triangle(2 * n_max);
        for n in 0..=n_max {
            for k in 0..=n {
                let (x, y) = (hat.get(n + 1, k as i64 + 1), b.get(2 * n - k, n as i64));
                rep.check(x == y, || format!("r = {r}, ({n},{k}): {x} vs {y}"));
            }
        }
    }
    rep
}

/// `S_{n,k}(1,2;r) ≠ 0` iff `0 ≤ n-k ≤ ⌊(n+r)/2⌋`, for integer `r ≥ 0`.
pub fn bessel_support_check(r: usize, n_max: usize) -> Report {
    let mut rep = Report::new(format!("Bessel support r = {r}"));
    let t = StirlingParams::new(rat(1), rat(2), rat(r as i64)).triangle(n_max);
    for n in 0..=n_max {
        for k in 0..=n {
            let nonzero = !t.get(n, k as i64).is_zero();
            let claimed = n - k <= (n + r) / 2;
            rep.check(nonzero == claimed, || format!("({n},{k}): nonzero {nonzero}, claimed {claimed}"));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_values() {
        let v = closed_form_eval(FormulaId::NarayanaFh(FhKind::TypeAH), &[], 3, 1).unwrap();
        assert_eq!(v, rat(6));
        let v = closed_form_eval(FormulaId::NarayanaT2(NarayanaSub::Ia, false), &[rat(1)], 2, 1).unwrap();
        assert_eq!(v, rat(-12));
        let v = closed_form_eval(FormulaId::ESimple(3), &[rat(0), rat(5), rat(1)], 3, 2).unwrap();
        assert_eq!(v, rat(3));
    }

    #[test]
    fn names_round_trip() {
        for id in FormulaId::all() {
            assert_eq!(FormulaId::parse(&id.to_string()).unwrap(), id);
        }
        assert_eq!(FormulaId::all().iter().filter(|i| matches!(i, FormulaId::OeisT3(_))).count(), 18);
        assert!(FormulaId::parse("nope").is_err());
    }

    #[test]
    fn every_entry_matches_its_triangle() {
        for rep in registry_check(8) {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn bessel_identities() {
        assert!(bessel_cross_check(8).passed());
        for r in 0..=3 {
            assert!(bessel_support_check(r, 10).passed());
        }
    }

    #[test]
    fn known_rows() {
        let row = |id, n| (0..=n).map(|k| closed_form_eval(id, &[], n, k).unwrap()).collect::<Vec<_>>();
        assert_eq!(row(FormulaId::OeisT3(15), 3), [rat(1), rat(6), rat(6), rat(1)]);
        assert_eq!(row(FormulaId::NarayanaFh(FhKind::TypeBH), 2), [rat(1), rat(4), rat(1)]);
    }
}
