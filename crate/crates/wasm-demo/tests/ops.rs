use gkp_wasm_demo::{egf_text, generate_text, transform_text, MAX_ROWS};

#[test]
fn generates_from_params_and_family() {
    let rows = generate_text("0,1,1,1,-1,0", 3).unwrap();
    assert_eq!(rows, "1\n1,0\n1,1,0\n1,4,1,0\n");
    assert_eq!(generate_text("eulerian:0,1,1,0", 3).unwrap(), rows);
}

#[test]
fn clamps_depth() {
    assert_eq!(generate_text("0,0,1,0,0,1", 1000).unwrap().lines().count(), MAX_ROWS + 1);
}

#[test]
fn reversal_returns_params_and_rows() {
    let out = transform_text("0,1,0,1,-1,1", "rt", 3).unwrap();
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("0,1,1,1,-1,0"));
    assert_eq!(lines.last(), Some("1,4,1,0"));
}

#[test]
fn egf_lines() {
    let out = egf_text("0,1,1,1,-1,0", 4).unwrap();
    assert_eq!(out.lines().nth(3), Some("z^3: 1/6 + 2/3*t + 1/6*t^2"));
}

#[test]
fn errors_are_messages() {
    assert!(generate_text("1,2", 3).is_err());
    assert!(transform_text("0,1,1,1,-2,0", "ubt", 3).is_err());
    assert!(generate_text("nope:1", 3).is_err());
}
