//! `gkp`: generate, transform and verify GKP triangles.

mod format;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use format::{normalize, parse, render, Format, Normalize};
use gkp_triangles::algebra::parse_rat_list;
use gkp_triangles::characteristics::{closed_egf, reduce, ClosedEgfSpec, EgfCase};
use gkp_triangles::families::{closed_form_eval, cross_check, family_params, FormulaId};
use gkp_triangles::gkp::{egf_truncated, scale_params};
use gkp_triangles::suites::{render_cayley_table, run_suite, SuiteConfig, SuiteId};
use gkp_triangles::transforms::{s3_transform_rows, stanton_sprott, S3Elem};
use gkp_triangles::{triangle_from_recurrence, Error, GkpParams, Rat, Triangle};

#[derive(Parser)]
#[command(name = "gkp", version, about = "Exact GKP triangular-recurrence triangles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a triangle from a parameter array or a named family.
    Gen(GenArgs),
    /// Apply a transformation-group element to a triangle.
    Transform(TransformArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print truncated EGF coefficients as polynomials in t.
    Egf(EgfArgs),
    /// Evaluate a registered closed form and compare it with the recurrence.
    ClosedForm(ClosedFormArgs),
}

#[derive(Args)]
struct Source {
    /// Parameter array `α,β,γ,α',β',γ'` (integers or p/q).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "family")]
    params: Option<String>,
    /// Family name: stirling, eulerian, narayana-{s,rs,e}, sectan-{s,rs,e}.
    #[arg(long, requires = "args")]
    family: Option<String>,
    /// Family arguments, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    args: Option<String>,
}

impl Source {
    fn params(&self) -> Result<Option<GkpParams>> {
        match (&self.params, &self.family) {
            (Some(p), _) => Ok(Some(GkpParams::from_slice(&parse_rat_list(p)?)?)),
            (None, Some(f)) => Ok(Some(family_params(f, self.args.as_deref().unwrap_or(""))?)),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// rising:<c>, factorial or none.
    #[arg(long, default_value = "none")]
    normalize: Normalize,
    /// Strip signs.
    #[arg(long)]
    abs: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

impl OutputArgs {
    fn emit(&self, tri: &Triangle) -> Result<()> {
        let text = render(&normalize(tri, &self.normalize, self.abs)?, self.format);
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {path}")),
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: Source,
    /// Largest row index.
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    source: Source,
    /// Read the triangle from a file written by `gen`.
    #[arg(long)]
    input: Option<String>,
    /// Format of `--input`; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    input_format: Option<Format>,
    /// id, rt, ubt, rt-ubt-rt, ubt-rt, rt-ubt or stanton-sprott.
    #[arg(long)]
    elem: String,
    /// Also multiply row n by (-1)^n (the extended group).
    #[arg(long)]
    negate: bool,
    /// Rescale the array first: `A,B` multiplies the upper row by A and the lower by B.
    #[arg(long, allow_hyphen_values = true)]
    scale: Option<String>,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest Bessel index of the conjecture scan.
    #[arg(long = "p", default_value_t = 2)]
    p_max: usize,
    /// Truncation order of EGF checks.
    #[arg(long, default_value_t = 8)]
    order: usize,
}

#[derive(Args)]
struct EgfArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with = "case")]
    params: Option<String>,
    /// Closed-form case (see `--list`).
    #[arg(long)]
    case: Option<String>,
    /// Closed-form case arguments.
    #[arg(long, allow_hyphen_values = true)]
    args: Option<String>,
    /// Number of z-coefficients.
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// List the closed-form cases and their arities.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ClosedFormArgs {
    /// Formula id (see `--list`).
    #[arg(long)]
    id: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    args: String,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    output: OutputArgs,
}

/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {
        writeln!(std::io::stdout(), $($t)*)?
    };
}

/// Comma-separated rationals; the empty string is the empty list.
fn rat_list(s: &str) -> Result<Vec<Rat>> {
    if s.trim().is_empty() {
        Ok(Vec::new())
    } else {
        Ok(parse_rat_list(s)?)
    }
}

fn cmd_gen(a: &GenArgs) -> Result<()> {
    let p = a.source.params()?.ok_or_else(|| anyhow!("give --params or --family"))?;
    a.output.emit(&triangle_from_recurrence(&p, a.n))
}

fn read_input(path: &str, fmt: Option<Format>) -> Result<Triangle> {
    let fmt = fmt
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| anyhow!("cannot tell the format of {path}; pass --input-format"))?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    parse(&text, fmt)
}

fn cmd_transform(a: &TransformArgs) -> Result<()> {
    let mut tri = match (&a.input, a.source.params()?) {
        (Some(path), given) => {
            let mut t = read_input(path, a.input_format)?;
            if let Some(p) = given {
                if let Some((n, k)) = t.first_recurrence_violation(&p) {
                    bail!("the input does not satisfy the recurrence of [{p}] at ({n}, {k})");
                }
                t.params = Some(p);
            }
            t
        }
        (None, Some(p)) => triangle_from_recurrence(&p, a.n),
        (None, None) => bail!("give --input or --params/--family"),
    };
    if let Some(s) = &a.scale {
        let v = parse_rat_list(s)?;
        let [x, y] = v.as_slice() else {
            bail!("--scale takes two values A,B");
        };
        let p = tri.params.clone().ok_or_else(|| anyhow!("--scale needs a parameter array"))?;
        let (q, map) = scale_params(&p, x, y);
        tri = map.apply(&tri, Some(q));
    }
    let out = if a.elem == "stanton-sprott" {
        stanton_sprott(&tri)?
    } else {
        let e = S3Elem::parse(&a.elem)?;
        s3_transform_rows(e, &tri, a.negate).map_err(|err| match (&err, &tri.params) {
            (Error::Normalization(_), Some(p)) if !p.beta.is_zero() && !p.beta_p.is_zero() => {
                let b = -(&p.beta / &p.beta_p);
                anyhow!("{err}; try --scale 1,{b}")
            }
            _ => err.into(),
        })?
    };
    match &out.params {
        Some(p) => eprintln!("params {p}"),
        None => eprintln!("params unknown (input carries no parameter array)"),
    }
    a.output.emit(&out)
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool> {
    let cfg = SuiteConfig {
        n: a.n,
        samples: a.samples,
        seed: a.seed,
        p_max: a.p_max,
        order: a.order,
    };
    let suites = if a.suite == "all" {
        SuiteId::ALL.to_vec()
    } else {
        vec![SuiteId::parse(&a.suite)?]
    };
    let mut all_ok = true;
    for id in suites {
        if id == SuiteId::S3Group {
            std::io::stdout().write_all(render_cayley_table().as_bytes())?;
        }
        let out = run_suite(id, &cfg);
        for c in &out.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            out!("{status} {} [{}] {} ({} cases)", c.id, c.reference, c.report.name, c.report.cases);
            if !c.passed() {
                for f in &c.report.failures {
                    out!("     {f}");
                }
            }
        }
        if id == SuiteId::Conjecture {
            if out.findings.is_empty() {
                out!("conjecture: no counterexample found");
            } else {
                out!("conjecture: {} findings", out.findings.len());
                for c in &out.findings {
                    out!("FINDING {} {}", c.id, c.report);
                }
            }
        }
        let passed = out.checks.iter().filter(|c| c.passed()).count();
        out!("{id}: {passed}/{} checks passed", out.checks.len());
        all_ok &= out.passed();
    }
    Ok(all_ok)
}

fn cmd_egf(a: &EgfArgs) -> Result<bool> {
    if a.list {
        for c in EgfCase::all() {
            out!("{c} ({} arguments)", c.arity());
        }
        return Ok(true);
    }
    let polys: Vec<String> = match (&a.params, &a.case) {
        (Some(p), _) => {
            let p = GkpParams::from_slice(&parse_rat_list(p)?)?;
            let egf = egf_truncated(&triangle_from_recurrence(&p, a.order.saturating_sub(1)));
            egf.coeffs().iter().map(|c| c.to_string()).collect()
        }
        (None, Some(case)) => {
            let case = EgfCase::parse(case)?;
            let args = rat_list(a.args.as_deref().unwrap_or(""))?;
            let spec = ClosedEgfSpec::new(case, args, a.order)?;
            match closed_egf(&spec).and_then(|g| reduce(&g)) {
                Ok(p) => p.iter().map(|c| c.to_string()).collect(),
                Err(e @ Error::Residue { .. }) => {
                    eprintln!("{e}");
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            }
        }
        (None, None) => bail!("give --params or --case"),
    };
    for (n, p) in polys.iter().enumerate() {
        out!("z^{n}: {p}");
    }
    Ok(true)
}

fn cmd_closed_form(a: &ClosedFormArgs) -> Result<bool> {
    if a.list {
        for id in FormulaId::all() {
            out!("{id} ({})", id.arg_names().join(","));
        }
        return Ok(true);
    }
    let id = FormulaId::parse(a.id.as_deref().ok_or_else(|| anyhow!("give --id or --list"))?)?;
    let args = rat_list(&a.args)?;
    let tri = Triangle::try_from_fn(a.n, None, |n, k| closed_form_eval(id, &args, n, k))?;
    let rep = cross_check(id, &args, a.n);
    eprintln!("{rep}");
    a.output.emit(&tri)?;
    Ok(rep.passed())
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Gen(a) => cmd_gen(a).map(|_| true),
        Cmd::Transform(a) => cmd_transform(a).map(|_| true),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Egf(a) => cmd_egf(a),
        Cmd::ClosedForm(a) => cmd_closed_form(a),
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .any(|c| c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
