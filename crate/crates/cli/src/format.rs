//! Triangle serialization. Rationals are written as canonical `p/q`
//! (integers bare), so every format is exact and parses back losslessly.

use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use gkp_triangles::algebra::{factorial, parse_rat, rising};
use gkp_triangles::{rat, GkpParams, Rat, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One row per line, entries comma-separated, trailing zeros dropped.
    Csv,
    /// Object with the parameter array, depth and full rows as strings.
    Json,
    /// OEIS b-file lines `index value`, full rows linearized by n then k.
    Bfile,
}

impl Format {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &str) -> Option<Format> {
        let ext = path.rsplit_once('.')?.1.to_ascii_lowercase();
        match ext.as_str() {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            "txt" | "b" | "bfile" => Some(Format::Bfile),
            _ => None,
        }
    }
}

/// Per-row normalization applied before output.
#[derive(Debug, Clone, PartialEq)]
pub enum Normalize {
    None,
    /// Divide row `n` by `n!`.
    Factorial,
    /// Divide row `n` by the rising factorial `c (c+1) ... (c+n-1)`.
    Rising(Rat),
}

impl FromStr for Normalize {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Normalize::None),
            "factorial" => Ok(Normalize::Factorial),
            _ => match s.strip_prefix("rising:") {
                Some(c) => Ok(Normalize::Rising(parse_rat(c).context("rising start")?)),
                None => bail!("expected rising:<c>, factorial or none, got {s:?}"),
            },
        }
    }
}

impl Normalize {
    pub fn is_none(&self) -> bool {
        *self == Normalize::None
    }
}

/// Applies the normalization and optional sign stripping. The result
/// carries no parameter array unless both are no-ops.
pub fn normalize(tri: &Triangle, norm: &Normalize, abs: bool) -> Result<Triangle> {
    let mut divisors = Vec::with_capacity(tri.n_max() + 1);
    for n in 0..=tri.n_max() {
        let d = match norm {
            Normalize::None => rat(1),
            Normalize::Factorial => factorial(n),
            Normalize::Rising(c) => rising(c, n, &rat(1)),
        };
        if d.is_zero() {
            bail!("normalization divides row {n} by zero");
        }
        divisors.push(d);
    }
    let params = if norm.is_none() && !abs { tri.params.clone() } else { None };
    Ok(tri.map(params, |n, _, x| {
        let v = x / &divisors[n];
        if abs {
            v.abs()
        } else {
            v
        }
    }))
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTriangle {
    params: Option<Vec<String>>,
    n: usize,
    rows: Vec<Vec<String>>,
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn render(tri: &Triangle, fmt: Format) -> String {
    match fmt {
        Format::Csv => {
            let mut out = String::new();
            for row in tri.rows() {
                let keep = row.iter().rposition(|x| !x.is_zero()).map_or(1, |i| i + 1);
                out += &strings(&row[..keep]).join(",");
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let j = JsonTriangle {
                params: tri.params.as_ref().map(|p| strings(&p.to_vec())),
                n: tri.n_max(),
                rows: tri.rows().iter().map(|r| strings(r)).collect(),
            };
            let mut s = serde_json::to_string_pretty(&j).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Bfile => {
            let mut out = String::new();
            for (i, x) in tri.rows().iter().flatten().enumerate() {
                out += &format!("{i} {x}\n");
            }
            out
        }
    }
}

fn parse_row(line: &str, lineno: usize) -> Result<Vec<Rat>> {
    line.split(',')
        .map(|s| parse_rat(s.trim()).with_context(|| format!("line {lineno}")))
        .collect()
}

fn pad(rows: Vec<Vec<Rat>>) -> Result<Vec<Vec<Rat>>> {
    rows.into_iter()
        .enumerate()
        .map(|(n, mut r)| {
            if r.len() > n + 1 {
                bail!("row {n} has {} entries, at most {} allowed", r.len(), n + 1);
            }
            r.resize(n + 1, Rat::zero());
            Ok(r)
        })
        .collect()
}

/// Reads a triangle written by [`render`].
pub fn parse(text: &str, fmt: Format) -> Result<Triangle> {
    match fmt {
        Format::Csv => {
            let rows = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| parse_row(l, i + 1))
                .collect::<Result<Vec<_>>>()?;
            if rows.is_empty() {
                bail!("no rows");
            }
            Ok(Triangle::from_rows(pad(rows)?, None))
        }
        Format::Json => {
            let j: JsonTriangle = serde_json::from_str(text).context("malformed triangle JSON")?;
            let params = match j.params {
                Some(v) => {
                    let v = v.iter().map(|s| parse_rat(s)).collect::<gkp_triangles::Result<Vec<_>>>()?;
                    Some(GkpParams::from_slice(&v)?)
                }
                None => None,
            };
            let rows = j
                .rows
                .iter()
                .map(|r| r.iter().map(|s| parse_rat(s)).collect::<gkp_triangles::Result<Vec<_>>>())
                .collect::<gkp_triangles::Result<Vec<_>>>()?;
            if rows.len() != j.n + 1 {
                bail!("JSON declares n = {} but has {} rows", j.n, rows.len());
            }
            Ok(Triangle::from_rows(pad(rows)?, params))
        }
        Format::Bfile => {
            let mut vals = Vec::new();
            for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#')) {
                let (idx, v) = line
                    .split_once(' ')
                    .with_context(|| format!("line {}: expected `index value`", i + 1))?;
                if idx.trim().parse::<usize>().ok() != Some(vals.len()) {
                    bail!("line {}: expected index {}", i + 1, vals.len());
                }
                vals.push(parse_rat(v.trim()).with_context(|| format!("line {}", i + 1))?);
            }
            let mut rows = Vec::new();
            let mut rest = &vals[..];
            while !rest.is_empty() {
                let len = rows.len() + 1;
                if rest.len() < len {
                    bail!("{} values do not fill a whole number of rows", vals.len());
                }
                rows.push(rest[..len].to_vec());
                rest = &rest[len..];
            }
            if rows.is_empty() {
                bail!("no rows");
            }
            Ok(Triangle::from_rows(rows, None))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gkp_triangles::triangle_from_recurrence;

    fn eulerian() -> Triangle {
        triangle_from_recurrence(&GkpParams::from_ints([0, 1, 1, 1, -1, 0]), 4)
    }

    #[test]
    fn csv_drops_trailing_zeros() {
        let s = render(&eulerian(), Format::Csv);
        assert_eq!(s.lines().last(), Some("1,11,11,1"));
        assert_eq!(s.lines().count(), 5);
    }

    #[test]
    fn formats_round_trip() {
        let t = triangle_from_recurrence(&GkpParams::new(rat(1) / rat(3), rat(2), rat(-1), rat(0), rat(1), rat(5) / rat(2)), 5);
        for fmt in [Format::Csv, Format::Json, Format::Bfile] {
            let back = parse(&render(&t, fmt), fmt).unwrap();
            assert!(back.same_entries(&t), "{fmt:?}");
            assert_eq!(render(&Triangle::from_rows(back.rows().to_vec(), back.params.clone()), fmt), render(&back, fmt));
        }
        assert_eq!(parse(&render(&t, Format::Json), Format::Json).unwrap().params, t.params);
    }

    #[test]
    fn normalization_flags() {
        assert_eq!("rising:3".parse::<Normalize>().unwrap(), Normalize::Rising(rat(3)));
        assert!("rising:x".parse::<Normalize>().is_err());
        assert!("cubic".parse::<Normalize>().is_err());
        let t = normalize(&eulerian(), &Normalize::Factorial, false).unwrap();
        assert_eq!(t.get(3, 1), rat(4) / rat(6));
        assert!(t.params.is_none());
        assert!(normalize(&eulerian(), &Normalize::Rising(rat(-1)), false).is_err());
    }
}
