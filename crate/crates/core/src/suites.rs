//! Named verification suites. Each suite draws its witnesses from a seeded
//! stream, so a run is fully determined by its [`SuiteConfig`]. The same
//! group functions back the CLI `verify` command and the acceptance test.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{rat, ratio, Rat};
use crate::characteristics::{
    egf_check_all, implicit_check, implicit_vs_sine_form, lift_coherence_check, left_peak_derivative_check,
    narayana_egf_contiguity, sample_params, sample_tableau, vertical_egf_check, weighted_stirling_check,
    ClosedEgfSpec, EgfCase,
};
use crate::derivation::{
    corollary_series_check, derivation_check, iterated_operator_check, leibniz_check, sample_mono,
    sectan_identity_check, SectanKind,
};
use crate::error::{Error, Result};
use crate::families::registry::oeis_table;
use crate::families::{
    bessel_cross_check, bessel_support_check, conjecture_scan, connection_check, connection_matrix_b2_check,
    connection_matrix_eigencheck, connection_matrix_extends_check, connection_matrix_identity_check,
    connection_matrix_inverse_check, contiguity_check_all, eulerian_rank1_triangle, jacobi_identity_check,
    jacobi_trim_check, registry_check, rewritten_worpitzky_check, riordan_asym_convolution_check,
    riordan_convolution_check, riordan_inverse_check, riordan_matrix, riordan_product_check, stirling_rank1_triangle,
    stirling_riordan, transform_pair_check, ubt_closure_check, ConnectionKind, ContigFamily, ContigRelation,
    EulerianParams, FamilyKind, NamedFamily, PairKind, StirlingParams,
};
use crate::gkp::{triangle_from_recurrence, verify_pde, GkpParams, Tableau};
use crate::oracles::combinatorial_oracles;
use crate::report::Report;
use crate::sample::{self, nonzero_rat, small_rat, SampleRng};
use crate::transforms::{
    s3_compose, s3_inverse, s3_transform_params, s3_transform_rows, s3_transform_rows_via_lift, stanton_sprott,
    tableau_permute, S3Elem,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Depth: rows `0..=n` are compared.
    pub n: usize,
    /// Random witnesses per check family.
    pub samples: usize,
    pub seed: u64,
    /// Largest Bessel index of the conjecture scan.
    pub p_max: usize,
    /// Truncation order of EGF comparisons.
    pub order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n: 12,
            samples: 10,
            seed: 1,
            p_max: 2,
            order: 8,
        }
    }
}

impl SuiteConfig {
    /// An independent stream per group, so groups do not perturb each other.
    fn rng(&self, salt: u64) -> SampleRng {
        sample::rng(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    Pde,
    S3Group,
    Rank1,
    Worpitzky,
    Riordan,
    Contiguity,
    ClosedForms,
    EgfAll,
    Derivation,
    Conjecture,
    Oeis,
}

impl SuiteId {
    pub const ALL: [SuiteId; 11] = [
        SuiteId::Pde,
        SuiteId::S3Group,
        SuiteId::Rank1,
        SuiteId::Worpitzky,
        SuiteId::Riordan,
        SuiteId::Contiguity,
        SuiteId::ClosedForms,
        SuiteId::EgfAll,
        SuiteId::Derivation,
        SuiteId::Conjecture,
        SuiteId::Oeis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Pde => "pde",
            SuiteId::S3Group => "s3_group",
            SuiteId::Rank1 => "rank1",
            SuiteId::Worpitzky => "worpitzky",
            SuiteId::Riordan => "riordan",
            SuiteId::Contiguity => "contiguity",
            SuiteId::ClosedForms => "closed_forms",
            SuiteId::EgfAll => "egf_all",
            SuiteId::Derivation => "derivation",
            SuiteId::Conjecture => "conjecture",
            SuiteId::Oeis => "oeis",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Unknown(format!("suite {s}")))
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One verified identity: a stable id, the name of the identity it
/// exercises, and the comparison report.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub reference: String,
    pub report: Report,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: SuiteId,
    pub checks: Vec<Check>,
    /// Failures of an open statement; they do not fail the suite.
    pub findings: Vec<Check>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Collects checks under a common prefix, numbering them in order.
struct Collector {
    prefix: &'static str,
    checks: Vec<Check>,
}

impl Collector {
    fn new(prefix: &'static str) -> Self {
        Collector {
            prefix,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, reference: impl Into<String>, report: Report) {
        let id = format!("{}.{:04}", self.prefix, self.checks.len());
        self.checks.push(Check {
            id,
            reference: reference.into(),
            report,
        });
    }

    fn push_result(&mut self, reference: impl Into<String>, name: String, r: Result<Report>) {
        let rep = r.unwrap_or_else(|e| {
            let mut rep = Report::new(name);
            rep.fail(e.to_string());
            rep
        });
        self.push(reference, rep);
    }

    fn finish(self) -> Vec<Check> {
        self.checks
    }
}

pub fn run_suite(id: SuiteId, cfg: &SuiteConfig) -> SuiteOutcome {
    let mut checks = match id {
        SuiteId::Pde => pde_checks(cfg),
        SuiteId::S3Group => s3_group_checks(cfg),
        SuiteId::Rank1 => rank1_checks(cfg),
        SuiteId::Worpitzky => {
            let mut v = worpitzky_checks(cfg);
            v.extend(connection_matrix_checks(cfg));
            v
        }
        SuiteId::Riordan => riordan_checks(cfg),
        SuiteId::Contiguity => contiguity_checks(cfg),
        SuiteId::ClosedForms => closed_form_checks(cfg),
        SuiteId::EgfAll => {
            let mut v = egf_checks(cfg);
            v.extend(implicit_checks(cfg));
            v
        }
        SuiteId::Derivation => derivation_checks(cfg),
        SuiteId::Conjecture => {
            let (ok, findings) = conjecture_checks(cfg).into_iter().partition(Check::passed);
            let mut out = SuiteOutcome {
                suite: id,
                checks: ok,
                findings,
            };
            out.findings.sort_by(|a, b| a.id.cmp(&b.id));
            out.checks.sort_by(|a, b| a.id.cmp(&b.id));
            return out;
        }
        SuiteId::Oeis => {
            let mut v = oeis_checks(cfg);
            v.extend(oracle_checks());
            v
        }
    };
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteOutcome {
        suite: id,
        checks,
        findings: Vec::new(),
    }
}

/// One representative of every named family constructor, with random
/// parameters.
pub fn named_family_params(rng: &mut SampleRng) -> Vec<(String, GkpParams)> {
    let mut v = Vec::new();
    let s = StirlingParams::new(small_rat(rng), small_rat(rng), small_rat(rng));
    v.push((format!("stirling {s}"), s.gkp()));
    let e = EulerianParams::new(small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng));
    v.push((format!("eulerian {e}"), e.gkp()));
    for kind in FamilyKind::ALL {
        let f = NamedFamily::new(kind, nonzero_rat(rng), small_rat(rng), small_rat(rng));
        v.push((format!("{} ({}, {}, {})", kind.name(), f.b, f.c0, f.c_inf), f.gkp()));
    }
    v
}

pub fn pde_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("pde");
    let mut g = cfg.rng(1);
    for _ in 0..cfg.samples {
        let p = sample::params(&mut g);
        c.push("first-order PDE of the bivariate EGF", verify_pde(&p, cfg.n));
    }
    for (name, p) in named_family_params(&mut g) {
        let mut rep = verify_pde(&p, cfg.n);
        rep.name = format!("{name}: {}", rep.name);
        c.push("first-order PDE of the bivariate EGF (named family)", rep);
    }
    c.finish()
}

/// `table[i][j] = ALL[i] ∘ ALL[j]`.
pub fn cayley_table() -> Vec<Vec<S3Elem>> {
    S3Elem::ALL
        .iter()
        .map(|&a| S3Elem::ALL.iter().map(|&b| s3_compose(a, b)).collect())
        .collect()
}

pub fn render_cayley_table() -> String {
    let w = S3Elem::ALL.iter().map(|e| e.name().len()).max().unwrap_or(0);
    let mut out = format!("{:w$} |", "∘");
    for e in S3Elem::ALL {
        out += &format!(" {:w$}", e.name());
    }
    out.push('\n');
    for (a, row) in S3Elem::ALL.iter().zip(cayley_table()) {
        out += &format!("{:w$} |", a.name());
        for b in row {
            out += &format!(" {:w$}", b.name());
        }
        out.push('\n');
    }
    out
}

/// Group axioms of the composition table: a Latin square with identity,
/// inverses and associativity; reflection and binomial transforms are
/// involutions that generate the group.
pub fn group_axioms_check() -> Report {
    let mut rep = Report::new("Cayley table of the order-6 group");
    let t = cayley_table();
    let idx = |e: S3Elem| S3Elem::ALL.iter().position(|&x| x == e).unwrap();
    for (i, row) in t.iter().enumerate() {
        let mut seen = [false; 6];
        row.iter().for_each(|&e| seen[idx(e)] = true);
        rep.check(seen.iter().all(|&s| s), || format!("row {} is not a permutation", S3Elem::ALL[i]));
        let mut seen = [false; 6];
        t.iter().for_each(|r| seen[idx(r[i])] = true);
        rep.check(seen.iter().all(|&s| s), || format!("column {} is not a permutation", S3Elem::ALL[i]));
    }
    for a in S3Elem::ALL {
        rep.check(s3_compose(S3Elem::Id, a) == a && s3_compose(a, S3Elem::Id) == a, || {
            format!("{a} is not fixed by the identity")
        });
        rep.check(s3_compose(a, s3_inverse(a)) == S3Elem::Id, || format!("{a} ∘ {a}⁻¹ ≠ id"));
        for b in S3Elem::ALL {
            for c in S3Elem::ALL {
                let l = s3_compose(s3_compose(a, b), c);
                let r = s3_compose(a, s3_compose(b, c));
                rep.check(l == r, || format!("({a}∘{b})∘{c} = {l} but {a}∘({b}∘{c}) = {r}"));
            }
        }
    }
    for inv in [S3Elem::Rt, S3Elem::Ubt] {
        rep.check(s3_compose(inv, inv) == S3Elem::Id, || format!("{inv} is not an involution"));
    }
    let mut generated = vec![S3Elem::Id];
    while let Some(next) = generated
        .iter()
        .flat_map(|&g| [s3_compose(g, S3Elem::Rt), s3_compose(g, S3Elem::Ubt)])
        .find(|e| !generated.contains(e))
    {
        generated.push(next);
    }
    rep.check(generated.len() == 6, || format!("rt and ubt generate {} elements", generated.len()));
    rep
}

/// Row transform, parameter transform, lifted-series transform and
/// tableau permutation agree for every element on one triangle.
pub fn s3_coherence_check(p: &GkpParams, n: usize) -> Report {
    let mut rep = Report::new(format!("order-6 group coherence [{p}]"));
    let t = triangle_from_recurrence(p, n);
    for e in S3Elem::ALL {
        let mut run = || -> Result<()> {
            let rows = s3_transform_rows(e, &t, false)?;
            let q = s3_transform_params(e, p)?;
            let direct = triangle_from_recurrence(&q, n);
            rep.check(rows.same_entries(&direct), || format!("{e}: rows differ from the transformed recurrence"));
            let lifted = s3_transform_rows_via_lift(e, &t);
            rep.check(rows.same_entries(&lifted), || format!("{e}: rows differ from S(t)^n G_n(R(t))"));
            let tab = p.to_tableau()?;
            let moved = tableau_permute(e, &tab).to_params(&p.beta, &p.beta_p)?;
            rep.check(moved == q, || format!("{e}: tableau permutation gives {moved}, parameter map {q}"));
            let inv = s3_transform_rows(s3_inverse(e), &rows, false)?;
            rep.check(inv.same_entries(&t), || format!("{e}: inverse does not restore the triangle"));
            Ok(())
        };
        if let Err(err) = run() {
            rep.fail(format!("{e}: {err}"));
        }
    }
    for (a, b) in [(S3Elem::Rt, S3Elem::Ubt), (S3Elem::Ubt, S3Elem::Rt)] {
        let run = || -> Result<bool> {
            let two = s3_transform_rows(b, &s3_transform_rows(a, &t, false)?, false)?;
            let once = s3_transform_rows(s3_compose(a, b), &t, false)?;
            Ok(two.same_entries(&once))
        };
        match run() {
            Ok(ok) => {
                rep.check(ok, || format!("{a} then {b} differs from {}", s3_compose(a, b)));
            }
            Err(err) => rep.fail(err.to_string()),
        }
    }
    rep
}

pub fn s3_group_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("s3_group");
    c.push("composition table of the order-6 transformation group", group_axioms_check());
    let mut g = cfg.rng(2);
    for _ in 0..cfg.samples {
        let p = sample::params_unit_normalized(&mut g);
        c.push("row and parameter forms of the transformation group", s3_coherence_check(&p, cfg.n));
    }
    for _ in 0..cfg.samples.div_ceil(2) {
        let p = sample::params_equal_betas(&mut g);
        let t = triangle_from_recurrence(&p, cfg.n);
        let mut rep = Report::new(format!("Stanton–Sprott involution [{p}]"));
        match stanton_sprott(&t).and_then(|s| Ok((stanton_sprott(&s)?, s))) {
            Ok((back, s)) => {
                let q = s.params.clone().expect("parameters carried through");
                rep.check(s.same_entries(&triangle_from_recurrence(&q, cfg.n)), || {
                    "transformed rows differ from the transformed recurrence".into()
                });
                rep.check(back.same_entries(&t), || "not an involution".into());
            }
            Err(e) => rep.fail(e.to_string()),
        }
        c.push("Stanton–Sprott involution", rep);
    }
    c.finish()
}

fn compare_triangles(rep: &mut Report, got: Result<crate::gkp::Triangle>, want: &crate::gkp::Triangle) {
    match got {
        Ok(t) => {
            for n in 0..=want.n_max() {
                rep.check(t.row(n) == want.row(n), || format!("row {n}: {:?} vs {:?}", t.row(n), want.row(n)));
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }
}

pub fn rank1_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("rank1");
    let mut g = cfg.rng(3);
    for _ in 0..cfg.samples {
        let s = StirlingParams::new(small_rat(&mut g), nonzero_rat(&mut g), small_rat(&mut g));
        let mut rep = Report::new(format!("single-sum form of {s}"));
        compare_triangles(&mut rep, stirling_rank1_triangle(&s, cfg.n), &s.triangle(cfg.n));
        c.push("single-sum formula for generalized Stirling numbers", rep);
    }
    for _ in 0..cfg.samples {
        let e = EulerianParams::new(small_rat(&mut g), nonzero_rat(&mut g), small_rat(&mut g), small_rat(&mut g));
        let mut rep = Report::new(format!("single-sum form of {e}"));
        compare_triangles(&mut rep, eulerian_rank1_triangle(&e, cfg.n), &e.triangle(cfg.n));
        c.push("single-sum formula for generalized Eulerian numbers", rep);
    }
    let depth = cfg.n.min(10);
    for _ in 0..cfg.samples.div_ceil(2) {
        let p: Vec<Rat> = (0..4).map(|_| small_rat(&mut g)).collect();
        for kind in PairKind::ALL {
            let args = &p[..kind.arity()];
            c.push_result(
                format!("binomial-transform pair ({})", kind.name()),
                format!("{} pair", kind.name()),
                transform_pair_check(kind, args, depth),
            );
        }
    }
    c.push("Bessel and reversed-Bessel cross identity", bessel_cross_check(depth.min(8)));
    for r in 0..=2 {
        c.push("support of the Bessel-type triangle", bessel_support_check(r, depth));
    }
    c.finish()
}

pub fn worpitzky_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("worpitzky");
    let ints = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
    let classical = [
        (ConnectionKind::WorpitzkyGeneral, ints(&[0, 1, 1, 0])),
        (ConnectionKind::WorpitzkyGeneral, ints(&[0, 2, 1, 1])),
        (ConnectionKind::Stirling, ints(&[0, 1, 0])),
    ];
    for (kind, p) in classical {
        c.push_result(
            "classical Worpitzky identity",
            format!("{} classical", kind.name()),
            connection_check(kind, &p, cfg.n),
        );
    }
    let mut g = cfg.rng(4);
    for kind in ConnectionKind::ALL {
        let reference = match kind {
            ConnectionKind::Stirling => "Stirling numbers as connection coefficients",
            ConnectionKind::WorpitzkyGeneral => "generalized Worpitzky identity",
            ConnectionKind::WorpitzkySingle => "single-progression Worpitzky identity",
            ConnectionKind::SymmetricApplicable => "symmetric Worpitzky identity",
        };
        for _ in 0..cfg.samples {
            let (a, b) = (small_rat(&mut g), nonzero_rat(&mut g));
            let (c0, ci) = (small_rat(&mut g), small_rat(&mut g));
            let p = match kind {
                ConnectionKind::Stirling | ConnectionKind::WorpitzkySingle => vec![a, b, c0],
                ConnectionKind::WorpitzkyGeneral => vec![a, b, c0, ci],
                ConnectionKind::SymmetricApplicable => vec![b, ci],
            };
            c.push_result(reference, kind.name().to_string(), connection_check(kind, &p, cfg.n));
        }
    }
    for _ in 0..cfg.samples.div_ceil(2) {
        let (a, b, ci) = (small_rat(&mut g), nonzero_rat(&mut g), small_rat(&mut g));
        c.push("rewritten Worpitzky identity", rewritten_worpitzky_check(&a, &b, &ci, cfg.n));
    }
    c.finish()
}

/// Connection matrices between power bases at `b ∈ {2, 3, 5/2}`, sizes
/// `1..=5`. Eigenvalues are evidence only.
pub fn connection_matrix_checks(_cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("matrix");
    for b in [rat(2), rat(3), ratio(5, 2)] {
        for n in 1..=5 {
            c.push("connection matrix at b times the one at 1/b is the identity", connection_matrix_identity_check(n, &b));
            c.push("inverse connection matrix", connection_matrix_inverse_check(n, &b));
            c.push("characteristic polynomial Π(x - b^j) (observed)", connection_matrix_eigencheck(n, &b));
            c.push("connection matrices extend to larger sizes", connection_matrix_extends_check(n, &b, 1));
        }
    }
    for n in 1..=5 {
        c.push("b = 2 entries are binomial coefficients", connection_matrix_b2_check(n));
    }
    c.finish()
}

pub fn riordan_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("riordan");
    let (zero, one) = (Rat::zero(), Rat::one());
    let n = cfg.n;
    let mut rep = Report::new("S(0,1;0) · S(1,0;0) = I with signed cycle numbers");
    match (stirling_riordan(&zero, &one, &zero, n + 1), stirling_riordan(&one, &zero, &zero, n + 1)) {
        (Ok(x), Ok(y)) => {
            let (mx, my) = (riordan_matrix(&x), riordan_matrix(&y));
            let prod = crate::families::matrix_product(&mx, &my);
            for i in 0..=n {
                for j in 0..=i {
                    let want = if i == j { one.clone() } else { zero.clone() };
                    rep.check(prod.get(i, j as i64) == want, || format!("product ({i},{j}) = {}", prod.get(i, j as i64)));
                }
            }
            // Unsigned cycle numbers from their own recurrence.
            let cycles = triangle_from_recurrence(&GkpParams::from_ints([1, 0, 0, 0, 0, 1]), n);
            for i in 0..=n {
                for j in 0..=i {
                    let want = crate::algebra::sign((i - j) as i64) * cycles.get(i, j as i64);
                    rep.check(my.get(i, j as i64) == want, || {
                        format!("inverse ({i},{j}) = {}, signed cycle number {want}", my.get(i, j as i64))
                    });
                }
            }
        }
        (Err(e), _) | (_, Err(e)) => rep.fail(e.to_string()),
    }
    c.push("Stirling inversion as a Riordan inverse", rep);
    c.push_result(
        "Riordan inverse of the Stirling array",
        "inverse S(0,1;0)".into(),
        riordan_inverse_check(&zero, &one, &zero, n),
    );
    let mut g = cfg.rng(5);
    for _ in 0..cfg.samples {
        let v: Vec<Rat> = (0..5).map(|_| small_rat(&mut g)).collect();
        c.push_result(
            "Stirling groupoid product",
            "product".into(),
            riordan_product_check(&v[0], &v[1], &v[2], &v[3], &v[4], n),
        );
        c.push_result("Stirling groupoid inverse", "inverse".into(), riordan_inverse_check(&v[0], &v[1], &v[3], n));
        c.push("convolution in the lower parameter", riordan_convolution_check(&v[0], &v[1], &v[3], &v[4], n));
        c.push(
            "asymmetric convolution",
            riordan_asym_convolution_check(&v[0], &v[1], &v[3], &v[4], n.min(6)),
        );
    }
    c.finish()
}

pub fn contiguity_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("contiguity");
    let mut g = cfg.rng(6);
    let depth = cfg.n.min(8);
    for _ in 0..cfg.samples {
        let p: Vec<Rat> = (0..4).map(|_| small_rat(&mut g)).collect();
        for fam in [ContigFamily::S, ContigFamily::E] {
            for rel in ContigRelation::ALL {
                let name = format!("{fam:?} relation {}", rel.name());
                c.push_result(
                    format!("contiguity relation {} of the {} family", rel.name(), fam_name(fam)),
                    name,
                    contiguity_check_all(fam, rel, &p[..rel.arity(fam)], depth),
                );
            }
        }
        c.push(
            "upper binomial transform closure of the Stirling family",
            ubt_closure_check(&p[0], &p[1], &p[2], &p[3], depth),
        );
    }
    for c0 in [ratio(1, 2), rat(1), rat(3), ratio(-7, 3)] {
        c.push("row polynomials as Jacobi polynomials", jacobi_identity_check(&c0, depth));
        c.push("trimmed triangle as Jacobi polynomials", jacobi_trim_check(&c0, depth));
    }
    for _ in 0..cfg.samples.div_ceil(2) {
        let (c0, ci) = (small_rat(&mut g), small_rat(&mut g));
        c.push(
            "Narayana contiguity in EGF form",
            narayana_egf_contiguity(&c0, &ci, cfg.order),
        );
    }
    c.finish()
}

fn fam_name(f: ContigFamily) -> &'static str {
    match f {
        ContigFamily::S => "Stirling",
        ContigFamily::E => "Eulerian",
    }
}

pub fn closed_form_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("closed_forms");
    for rep in registry_check(cfg.n) {
        let reference = format!("closed form {}", rep.name.split('(').next().unwrap_or(&rep.name));
        c.push(reference, rep);
    }
    c.finish()
}

/// Known rows, each derived from the recurrence.
pub fn spot_checks() -> Vec<Check> {
    let mut c = Collector::new("spot");
    let ints = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
    let eul = EulerianParams::from_ints(0, 1, 1, 0).triangle(4);
    let mut rep = Report::new("Eulerian row 4");
    rep.check(eul.row(4)[..4] == ints(&[1, 11, 11, 1]) && eul.row(4)[4].is_zero(), || {
        format!("{:?}", eul.row(4))
    });
    c.push("Eulerian numbers", rep);
    let mac = EulerianParams::from_ints(0, 2, 1, 1).triangle(2);
    let mut rep = Report::new("MacMahon row 2");
    rep.check(mac.row(2) == ints(&[1, 6, 1]), || format!("{:?}", mac.row(2)));
    c.push("type-B Eulerian numbers", rep);
    let nar = oeis_table()
        .into_iter()
        .find(|r| r.oeis == "A001263")
        .expect("registered")
        .normalized_triangle(3);
    let mut rep = Report::new("Narayana A001263 row 3");
    rep.check(nar.row(3) == ints(&[1, 6, 6, 1]), || format!("{:?}", nar.row(3)));
    c.push("OEIS triangle A001263", rep);
    c.finish()
}

/// First rows of the normalized triangles, frozen after being derived from
/// the recurrence, keyed by table position.
const OEIS_FIXTURES: &[(&str, &str)] = &include!("oeis_fixtures.in");

pub fn oeis_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("oeis");
    for (i, row) in oeis_table().into_iter().enumerate() {
        let tri = row.normalized_triangle(cfg.n);
        let mut rep = Report::new(format!("{} row form", row.oeis));
        for n in 0..=cfg.n {
            for k in 0..=n {
                match row.coefficient(n, k) {
                    Ok(x) => {
                        let want = tri.get(n, k as i64);
                        rep.check(x == want, || format!("({n},{k}): hypergeometric {x}, recurrence {want}"));
                    }
                    Err(e) => rep.fail(format!("({n},{k}): {e}")),
                }
            }
        }
        c.push(format!("OEIS triangle {}", row.oeis), rep);

        let mut rep = Report::new(format!("{} fixture", row.oeis));
        let (id, fixture) = OEIS_FIXTURES[i];
        rep.check(id == row.oeis, || format!("fixture {i} is tagged {id}"));
        let flat: Vec<String> = (0..=cfg.n.min(5))
            .flat_map(|n| tri.row(n).to_vec())
            .map(|x| x.to_string())
            .collect();
        let want: Vec<&str> = fixture.split(',').take(flat.len()).collect();
        rep.check(flat == want, || format!("rows {flat:?}, fixture {want:?}"));
        c.push(format!("OEIS triangle {}", row.oeis), rep);
    }
    c.checks.extend(spot_checks().into_iter().map(|mut ch| {
        ch.id = format!("oeis.{}", ch.id);
        ch
    }));
    c.finish()
}

pub fn oracle_checks() -> Vec<Check> {
    let mut c = Collector::new("oracle");
    for rep in combinatorial_oracles() {
        c.push("brute-force enumeration", rep);
    }
    c.finish()
}

pub fn egf_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("egf");
    let mut g = cfg.rng(7);
    for rep in egf_check_all(&mut g, cfg.samples, cfg.order) {
        let case = rep.name.split_whitespace().nth(2).unwrap_or("").to_string();
        c.push(format!("closed-form EGF {case}"), rep);
    }
    for case in EgfCase::all() {
        let spec = ClosedEgfSpec::new(case, sample_params(case, &mut g), cfg.order.min(6));
        match spec {
            Ok(s) if s.gkp().is_ok_and(|p| p.is_unit_normalized()) => {
                c.push(format!("transformed closed-form EGF {case}"), lift_coherence_check(&s));
            }
            Ok(_) => {}
            Err(e) => {
                let mut rep = Report::new(format!("lift {case}"));
                rep.fail(e.to_string());
                c.push(format!("transformed closed-form EGF {case}"), rep);
            }
        }
    }
    for _ in 0..cfg.samples.div_ceil(2) {
        let sp = StirlingParams::new(small_rat(&mut g), nonzero_rat(&mut g), small_rat(&mut g));
        c.push("vertical EGFs of the Stirling columns", vertical_egf_check(&sp, 4, cfg.order));
        c.push(
            "weighted Stirling EGF",
            weighted_stirling_check(&sp.a, &sp.b, &sp.r, cfg.order),
        );
    }
    c.push("left-peak EGF in derivative form", left_peak_derivative_check(cfg.order));
    c.push("implicit form against the sine-squared form", implicit_vs_sine_form(cfg.order.min(7)));
    c.finish()
}

/// The implicit hypergeometric construction on the reference tableau and
/// `samples` random admissible ones.
pub fn implicit_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("implicit");
    let reference = Tableau::new([ratio(1, 3), ratio(5, 12), ratio(1, 4)], [rat(1), rat(-2), rat(1)])
        .expect("sums are 1 and 0");
    c.push("implicit hypergeometric EGF", implicit_check(&reference, cfg.order));
    let mut g = cfg.rng(8);
    for _ in 0..cfg.samples.min(2) {
        c.push("implicit hypergeometric EGF", implicit_check(&sample_tableau(&mut g), cfg.order));
    }
    c.finish()
}

/// Parameter rows whose derivation realizes the three secant–tangent
/// triangles, with `(c0, c∞)` appended.
pub fn sectan_rows(c0: &Rat, ci: &Rat) -> [(SectanKind, GkpParams); 3] {
    let mk = |a: i64, ap: i64| GkpParams::new(rat(a), rat(2), c0.clone(), rat(ap), rat(-2), ci.clone());
    [
        (SectanKind::PenultA, mk(-1, 2)),
        (SectanKind::PenultB, mk(0, 1)),
        (SectanKind::PenultC, mk(-1, 1)),
    ]
}

pub fn derivation_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("derivation");
    let depth = cfg.n.min(8);
    let mut g = cfg.rng(9);
    for _ in 0..cfg.samples {
        let p = sample::params_nonzero_betas(&mut g);
        c.push("iterated derivation", derivation_check(&p, depth));
    }
    let mut pairs = vec![(rat(1), rat(0)), (rat(2), rat(0)), (rat(0), rat(1))];
    for _ in 0..cfg.samples.div_ceil(2) {
        pairs.push((small_rat(&mut g), small_rat(&mut g)));
    }
    for (c0, ci) in &pairs {
        for (kind, p) in sectan_rows(c0, ci) {
            c.push(format!("iterated derivation on the {} row", kind.name()), derivation_check(&p, depth));
            c.push(
                format!("{} derivative identity", kind.name()),
                sectan_identity_check(kind, &[c0.clone(), ci.clone()], depth),
            );
        }
    }
    for _ in 0..cfg.samples.div_ceil(2) {
        let v: Vec<Rat> = (0..4).map(|_| small_rat(&mut g)).collect();
        for kind in [SectanKind::StirlingRising, SectanKind::StirlingRisingReflected, SectanKind::Eulerian] {
            c.push(format!("{} derivative identity", kind.name()), sectan_identity_check(kind, &v, depth));
        }
    }
    for _ in 0..cfg.samples {
        let p = sample::params_nonzero_betas(&mut g);
        c.push("iterated operator form of the PDE", iterated_operator_check(&p, depth));
    }
    for _ in 0..cfg.samples.div_ceil(2) {
        let p = sample::params(&mut g);
        c.push("derivation generates the EGF", corollary_series_check(&p, cfg.order));
    }
    let mut rep = Report::new("Leibniz rule");
    for _ in 0..cfg.samples {
        let p = sample::params(&mut g);
        let (e1, e2) = (sample_mono(&mut g), sample_mono(&mut g));
        rep.check(leibniz_check(&p, &e1, &e2), || format!("[{p}] on {e1} and {e2}"));
    }
    c.push("Leibniz rule of the derivation", rep);
    c.finish()
}

/// The unproved Bessel expansion; failures are findings.
pub fn conjecture_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut c = Collector::new("conjecture");
    let cs = [rat(1), ratio(3, 2), rat(2)];
    for rep in conjecture_scan(cfg.p_max, &cs, cfg.n.min(8)) {
        c.push("Bessel-number expansion of Eulerian-type triangles (open)", rep);
    }
    c.finish()
}
