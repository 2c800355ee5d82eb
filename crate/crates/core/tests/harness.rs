use fincat::harness::{property_ids, replay, run_suite, Outcome, SuiteConfig, SuiteReport};

fn strip_timing(mut r: SuiteReport) -> SuiteReport {
    r.millis = 0;
    for p in &mut r.properties {
        p.millis = 0;
    }
    r
}

fn config(properties: &[&str], instances: usize) -> SuiteConfig {
    SuiteConfig {
        instances,
        properties: Some(properties.iter().map(|s| s.to_string()).collect()),
        ..SuiteConfig::default()
    }
}

#[test]
fn same_seed_same_report() {
    let cfg = config(&["distance-symmetry", "liftcat-le-secat", "secat-le-cat"], 25);
    let a = strip_timing(run_suite(&cfg).unwrap());
    let b = strip_timing(run_suite(&cfg).unwrap());
    assert_eq!(a, b);
    let seq = SuiteConfig {
        settings: fincat::Settings::sequential(),
        ..cfg
    };
    assert_eq!(a, strip_timing(run_suite(&seq).unwrap()));
}

#[test]
fn product_inequality_fails_on_the_pseudocircle_without_the_filter() {
    let mut cfg = config(&["cat-product"], 3);
    cfg.normality_filter = false;
    cfg.inject = vec!["pseudocircle".into()];
    let r = run_suite(&cfg).unwrap();
    assert!(!r.ok());
    let fail = &r.properties[0].failures[0];
    assert_eq!(fail.instance.index, 0);
    assert!(fail.detail.contains("cat(X×Y)"), "{}", fail.detail);

    // the stored instance reproduces the failure without the generator
    let again = replay(&fail.instance, &cfg).unwrap();
    assert_eq!(again, Outcome::Fail(fail.detail.clone()));

    // with the filter the pseudocircle never reaches the check
    cfg.normality_filter = true;
    assert!(run_suite(&cfg).unwrap().ok());
}

#[test]
fn stored_instance_survives_json() {
    let mut cfg = config(&["cat-product"], 1);
    cfg.normality_filter = false;
    cfg.inject = vec!["pseudocircle".into()];
    let r = run_suite(&cfg).unwrap();
    let fail = &r.properties[0].failures[0];
    let back = serde_json::from_str(&serde_json::to_string(&fail.instance).unwrap()).unwrap();
    assert_eq!(replay(&back, &cfg).unwrap(), Outcome::Fail(fail.detail.clone()));
}

#[test]
fn config_json() {
    let cfg = SuiteConfig::from_json(r#"{"instances": 4, "generator": {"seed": 9, "max_points": 3}, "properties": ["distance-symmetry"]}"#).unwrap();
    assert_eq!(cfg.instances, 4);
    assert_eq!(cfg.generator.seed, 9);
    assert_eq!(cfg.generator.edge_density, 0.4);
    let r = run_suite(&cfg).unwrap();
    assert_eq!(r.seed, 9);
    assert_eq!(r.instances(), 4);

    assert!(SuiteConfig::from_json(r#"{"properties": ["no-such-property"]}"#).is_err());
    assert!(SuiteConfig::from_json(r#"{"inject": ["torus"]}"#).is_err());
    assert!(SuiteConfig::from_json(r#"{"generator": {"max_points": 0}}"#).is_err());
    assert!(SuiteConfig::from_json("[1, 2]").is_err());
}

#[test]
fn empty_selection_gives_an_empty_report() {
    let r = run_suite(&config(&[], 10)).unwrap();
    assert!(r.properties.is_empty());
    assert!(r.ok());
}

#[test]
fn deterministic_property_runs_once() {
    let r = run_suite(&config(&["pseudocircle-regression"], 50)).unwrap();
    assert_eq!(r.properties[0].instances, 1);
    assert_eq!(r.properties[0].passed, 1);
}

#[test]
fn report_round_trips_and_lists_failures() {
    let mut cfg = config(&["cat-product"], 2);
    cfg.normality_filter = false;
    cfg.inject = vec!["pseudocircle".into()];
    let r = run_suite(&cfg).unwrap();
    let back: SuiteReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back, r);
    assert!(r.table().contains("FAIL cat-product #0"));
}

#[test]
fn catalog_ids_are_unique() {
    let ids = property_ids();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    assert!(ids.len() >= 30);
}
