use fbcalc::{run_scenario, AppError, Format, ScenarioConfig, VerificationReport, SCENARIOS};

#[test]
fn reports_are_reproducible() {
    let cfg = ScenarioConfig::default();
    for id in ["rem37", "lemma42", "jordan", "hyp32"] {
        let a = run_scenario(id, &cfg).unwrap().to_json();
        let b = run_scenario(id, &cfg).unwrap().to_json();
        assert_eq!(a, b, "{id}");
    }
}

#[test]
fn json_round_trip() {
    let r = run_scenario("cor43", &ScenarioConfig::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    r.emit(Format::Json, &p).unwrap();
    let back = VerificationReport::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn empty_report_csv() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e.csv");
    VerificationReport::default().emit(Format::Csv, &p).unwrap();
    assert_eq!(std::fs::read_to_string(&p).unwrap(), "scenario,check,value,benchmark,margin,verdict\n");
}

#[test]
fn probe_csv_has_one_row_per_check() {
    let r = run_scenario("probe45", &ScenarioConfig::default()).unwrap();
    let mut out = Vec::new();
    r.write_csv(&mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert_eq!(text.lines().count(), 1 + r.scenarios[0].checks.len());
    // names with commas are quoted
    assert!(text.contains("probe45,\"norm[n=64,u=0.1]\","));
}

#[test]
fn config_and_names_are_validated() {
    assert!(matches!(run_scenario("bogus", &ScenarioConfig::default()), Err(AppError::Input(_))));
    let cfg = ScenarioConfig { gamma: -1.0, ..Default::default() };
    assert!(matches!(run_scenario("hyp32", &cfg), Err(AppError::Input(_))));
    assert!(serde_json::from_str::<ScenarioConfig>(r#"{"seed":1,"unknown":2}"#).is_err());
    assert_eq!(SCENARIOS.len(), 10);
}

#[test]
fn gamma_changes_two_atom_form() {
    let cfg = ScenarioConfig { gamma: 2.0, ..Default::default() };
    let r = run_scenario("hyp32", &cfg).unwrap();
    let s = &r.scenarios[0];
    assert!(s.check("two_atom_form").unwrap().note.as_deref().unwrap().contains("gamma = 2"));
    assert!(s.check("two_atom_lhs_at_most_half").is_none());
    assert_eq!(r.exit_code(), 0);
}
