use std::process::{Command, Output};

fn cremona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn catalog_lists_every_family() {
    let out = cremona(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["segre:2,2", "segre-multi:1,1,1", "veronese2:2", "rnc:6", "grass2:6", "g36", "tp:2"] {
        assert!(text.contains(&format!("{name}: ")), "{name} missing:\n{text}");
    }
}

#[test]
fn catalog_grass26() {
    let out = cremona(&["catalog", "grass2:6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ambient dim 14"));
    assert!(text.contains("15 equations"));
}

#[test]
fn catalog_by_family_and_unknown() {
    let text = stdout(&cremona(&["catalog", "rnc"]));
    assert!(text.contains("rnc:6"));
    assert!(!text.contains("segre"));
    let out = cremona(&["catalog", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nosuch"));
}

#[test]
fn linearize_segre_reports_degree_three_factor() {
    let out = cremona(&["linearize", "segre:2,2", "triangular"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("degrees: (2, 2)"));
    assert!(text.contains("fundamental factor degree: 3"));
}

#[test]
fn linearize_segre_multi_with_cumulants() {
    let out = cremona(&["linearize", "segre-multi:1,1,1", "cumulant:full"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("linear image: y_{1,2} = y_{1,3} = y_{2,3} = y_{1,2,3} = 0"));
    for kind in ["interval", "one-cluster", "minmax"] {
        let method = format!("cumulant:{kind}");
        assert_eq!(cremona(&["linearize", "segre-multi:1,1,1", &method]).status.code(), Some(0));
    }
    assert_eq!(cremona(&["linearize", "segre-multi:1,2", "cumulant:full"]).status.code(), Some(0));
}

#[test]
fn linearize_rnc_emits_a_verified_inverse() {
    let out = cremona(&["linearize", "rnc:6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("inverse:"));
    assert!(text.contains("[PASS] inverse composes to the identity"));
}

#[test]
fn cumulant_method_needs_multi_segre() {
    let out = cremona(&["linearize", "rnc:6", "cumulant:full"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cremona(&["linearize", "segre:2,2", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn linearize_json_round_trips() {
    let out = cremona(&["--json", "linearize", "veronese2:2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pair"]["verified"], true);
    assert_eq!(v["pair"]["delta"], 2);
    let json: cremona::maps::CremonaPairJson = serde_json::from_value(v["pair"].clone()).unwrap();
    let ring = cremona::polycore::Ring::new();
    let pair = cremona::maps::CremonaPair::from_json(&ring, &json).unwrap();
    assert_eq!(pair.forward.coords().len(), 5);
}

#[test]
fn every_example_passes() {
    for name in cremona::gallery::EXAMPLES {
        let out = cremona(&["verify-example", name]);
        assert_eq!(out.status.code(), Some(0), "{name}:\n{}", stdout(&out));
        assert!(!stdout(&out).contains("[FAIL]"));
    }
}

#[test]
fn secant_toric_with_n() {
    let out = cremona(&["verify-example", "ex-secant-toric", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_example_lists_the_registry() {
    let out = cremona(&["verify-example", "ex-nope"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("ex-seg") && err.contains("ex-g36-quartic"), "{err}");
}

#[test]
fn poset_interval_and_full() {
    let text = stdout(&cremona(&["poset", "interval", "3", "--check-mobius-sum"]));
    assert!(text.contains("elements: 4"));
    assert!(text.contains("1|23  μ(π, 1̂) = -1"));
    assert!(text.contains("[PASS]"));
    let text = stdout(&cremona(&["poset", "full", "3"]));
    assert!(text.contains("μ(0̂, 1̂): 2"));
    let out = cremona(&["poset", "full", "1", "--check-mobius-sum"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("skipped"));
    assert_eq!(cremona(&["poset", "full", "99"]).status.code(), Some(2));
    assert_eq!(cremona(&["poset", "lattice", "3"]).status.code(), Some(2));
}

#[test]
fn defect_secant_tangent() {
    let text = stdout(&cremona(&["defect", "veronese2:2"]));
    assert!(text.contains("defect: 1"));
    let text = stdout(&cremona(&["defect", "segre:1,1"]));
    assert!(text.contains("defect: 0"));
    let text = stdout(&cremona(&["secant", "veronese2:2", "--coords"]));
    assert!(text.contains("dim Sec_1 (generic rank, probabilistic): 4"));
    assert!(text.contains("y_12 = "));
    let text = stdout(&cremona(&["tangent", "segre:1,1"]));
    assert!(text.contains("probabilistic): 3"));
    assert_eq!(cremona(&["defect", "segre:1,1", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn cumulant_command() {
    let out = cremona(&["cumulant", "3", "--poset", "minmax"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[PASS] Segre embedding maps into the linear image"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(cremona(&[]).status.code(), Some(2));
    assert_eq!(cremona(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cremona(&["poset", "full"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    for args in [&["defect", "grass2:6", "--seed", "7"][..], &["--json", "verify-example", "ex-ver"], &["poset", "minmax", "4"]] {
        assert_eq!(cremona(args).stdout, cremona(args).stdout);
    }
}

#[test]
fn raised_caps_warn_loudly() {
    let out = cremona(&["--max-degree", "100", "catalog", "tp"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("WARNING"));
    let out = cremona(&["--max-vars", "200000", "catalog", "tp"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("WARNING"));
}

#[test]
fn timing_is_opt_in() {
    assert!(!stdout(&cremona(&["catalog"])).contains("elapsed"));
    assert!(stdout(&cremona(&["--timing", "catalog"])).contains("elapsed"));
}
