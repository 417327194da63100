//! WebAssembly bindings for the static page in `www/`. Every operation
//! takes and returns plain text so the page needs no glue beyond
//! `wasm-bindgen`; the `*_text` functions are the native-testable cores.

use wasm_bindgen::prelude::*;

use gkp_triangles::algebra::parse_rat_list;
use gkp_triangles::families::family_params;
use gkp_triangles::gkp::egf_truncated;
use gkp_triangles::transforms::{s3_transform_rows, S3Elem};
use gkp_triangles::{triangle_from_recurrence, GkpParams, Result, Triangle};

/// Rows beyond this make exact arithmetic sluggish in a browser tab.
pub const MAX_ROWS: usize = 40;

fn source(spec: &str) -> Result<GkpParams> {
    match spec.split_once(':') {
        Some((name, args)) => family_params(name.trim(), args),
        None => GkpParams::from_slice(&parse_rat_list(spec)?),
    }
}

fn csv(tri: &Triangle) -> String {
    let mut out = String::new();
    for row in tri.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out += &cells.join(",");
        out.push('\n');
    }
    out
}

/// `spec` is a parameter array `α,β,γ,α',β',γ'` or `family:args`
/// (e.g. `eulerian:0,1,1,0`). Returns rows `0..=n` as CSV.
pub fn generate_text(spec: &str, n: usize) -> Result<String> {
    let p = source(spec)?;
    Ok(csv(&triangle_from_recurrence(&p, n.min(MAX_ROWS))))
}

/// Applies a group element; the first output line is the new parameter
/// array, the remaining lines are the transformed rows.
pub fn transform_text(spec: &str, elem: &str, n: usize) -> Result<String> {
    let p = source(spec)?;
    let e = S3Elem::parse(elem)?;
    let out = s3_transform_rows(e, &triangle_from_recurrence(&p, n.min(MAX_ROWS)), false)?;
    let params = out.params.as_ref().map_or_else(String::new, |q| q.to_string());
    Ok(format!("{params}\n{}", csv(&out)))
}

/// Coefficients of `z^0 .. z^(order-1)` in the row-generating EGF, one
/// polynomial in `t` per line.
pub fn egf_text(spec: &str, order: usize) -> Result<String> {
    let p = source(spec)?;
    let order = order.clamp(1, MAX_ROWS);
    let egf = egf_truncated(&triangle_from_recurrence(&p, order - 1));
    Ok(egf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| format!("z^{n}: {c}\n"))
        .collect())
}

fn js(r: Result<String>) -> std::result::Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn generate(spec: &str, n: usize) -> std::result::Result<String, JsValue> {
    js(generate_text(spec, n))
}

#[wasm_bindgen]
pub fn transform(spec: &str, elem: &str, n: usize) -> std::result::Result<String, JsValue> {
    js(transform_text(spec, elem, n))
}

#[wasm_bindgen]
pub fn egf(spec: &str, order: usize) -> std::result::Result<String, JsValue> {
    js(egf_text(spec, order))
}
