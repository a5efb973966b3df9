use jetscheme::{render_report, run_scenario, Format, ScenarioOptions, SCENARIOS};

#[test]
fn every_scenario_passes_with_defaults() {
    for name in SCENARIOS {
        let report = run_scenario(name, &ScenarioOptions::default()).unwrap();
        print!("{}", render_report(&report, Format::Text));
        assert!(report.passed(), "{name}");
    }
}
