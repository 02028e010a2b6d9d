use outbraid::{list_suites, run_suite, Params, Report, Status, SuiteError};

fn assert_consistent(r: &Report) {
    let count = |s: Status| r.checks.iter().filter(|c| c.status == s).count();
    assert_eq!(r.counts.pass, count(Status::Pass), "{}", r.suite);
    assert_eq!(r.counts.fail, count(Status::Fail), "{}", r.suite);
    assert_eq!(r.counts.skipped, count(Status::Skipped), "{}", r.suite);
    assert_eq!(r.passed(), r.counts.fail == 0);
}

#[test]
fn catalog_lists_the_suites() {
    let names: Vec<&str> = list_suites().iter().map(|(n, _)| *n).collect();
    assert!(names.len() >= 13);
    assert!(names.contains(&"artin4"));
    assert!(names.contains(&"gtcomm"));
}

#[test]
fn every_default_suite_passes() {
    let params = Params { samples: Some(5), ..Params::default() };
    for (name, _) in list_suites() {
        let r = run_suite(name, &params).unwrap();
        assert_consistent(&r);
        assert!(r.passed(), "{}", r.table());
        assert!(!r.checks.is_empty(), "{name} ran no checks");
    }
}

#[test]
fn degree_six_is_skipped_without_the_flag() {
    let r = run_suite("artin_n", &Params { n: Some(6), ..Params::default() }).unwrap();
    assert_eq!(r.counts.skipped, 1);
    assert!(r.passed());
}

#[test]
fn splitting_at_n4_up_to_30() {
    let r = run_suite("splitting", &Params { n: Some(4), dmax: Some(30), ..Params::default() }).unwrap();
    assert!(r.passed(), "{}", r.table());
    assert!(r.checks.iter().any(|c| c.name.contains("coprime to 12")));
}

#[test]
fn unsupported_parameters_fail_instead_of_skipping() {
    let r = run_suite("artin_n", &Params { n: Some(7), ..Params::default() }).unwrap();
    assert!(!r.passed());
    let r = run_suite("torsion", &Params { maxlen: Some(99), ..Params::default() }).unwrap();
    assert!(!r.passed());
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(matches!(run_suite("nope", &Params::default()), Err(SuiteError::Unknown(_))));
}

#[test]
fn seeded_suites_are_deterministic() {
    let p = Params { seed: Some(7), samples: Some(4), ..Params::default() };
    let a = run_suite("gtcomm", &p).unwrap();
    let b = run_suite("gtcomm", &p).unwrap();
    assert_eq!(a.checks, b.checks);
    let c = run_suite("gtcomm", &Params { seed: Some(8), ..p }).unwrap();
    assert_ne!(a.checks, c.checks);
}

#[test]
fn json_round_trips_with_the_report_fields() {
    let r = run_suite("s4rep", &Params::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["suite", "params", "checks", "counts", "wall_time"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["checks"][0]["status"], "pass");
    let back: Report = serde_json::from_value(v).unwrap();
    assert_eq!(back.checks, r.checks);
}
