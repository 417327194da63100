use gkp_triangles::suites::{cayley_table, render_cayley_table, run_suite, SuiteConfig, SuiteId};
use gkp_triangles::transforms::S3Elem;

fn quick() -> SuiteConfig {
    SuiteConfig {
        n: 6,
        samples: 3,
        seed: 7,
        p_max: 1,
        order: 6,
    }
}

#[test]
fn every_suite_passes_at_small_depth() {
    for id in SuiteId::ALL {
        let out = run_suite(id, &quick());
        assert!(!out.checks.is_empty() || !out.findings.is_empty(), "{id} ran nothing");
        for c in &out.checks {
            assert!(c.passed(), "{id} {} [{}]: {}", c.id, c.reference, c.report);
        }
    }
}

#[test]
fn seeded_runs_are_reproducible() {
    for id in [SuiteId::S3Group, SuiteId::Worpitzky, SuiteId::Derivation] {
        let a = run_suite(id, &quick());
        let b = run_suite(id, &quick());
        let names = |o: &gkp_triangles::suites::SuiteOutcome| {
            o.checks.iter().map(|c| (c.id.clone(), c.report.clone())).collect::<Vec<_>>()
        };
        assert_eq!(names(&a), names(&b));
    }
}

#[test]
fn checks_are_sorted_by_id() {
    let out = run_suite(SuiteId::Oeis, &quick());
    assert!(out.checks.windows(2).all(|w| w[0].id < w[1].id));
}

#[test]
fn suite_names_round_trip() {
    for id in SuiteId::ALL {
        assert_eq!(SuiteId::parse(id.name()).unwrap(), id);
    }
    assert!(SuiteId::parse("nonsense").is_err());
}

#[test]
fn cayley_table_shape() {
    let t = cayley_table();
    assert_eq!(t.len(), 6);
    assert!(t.iter().all(|r| r.len() == 6));
    assert_eq!(t[0], S3Elem::ALL.to_vec());
    assert_eq!(render_cayley_table().lines().count(), 7);
}
