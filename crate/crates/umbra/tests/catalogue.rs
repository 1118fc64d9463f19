use umbra::catalogue::{
    find_identity, list_identities, parse_json, render_reports, run_identities, CatalogueConfig, Format, Status,
};

fn cfg() -> CatalogueConfig {
    CatalogueConfig {
        digits: Some(30),
        deterministic: true,
        ..Default::default()
    }
}

#[test]
fn ids_are_unique_and_findable() {
    let ids: Vec<&str> = list_identities().iter().map(|i| i.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    assert!(find_identity("eq-1.2").is_ok());
    assert!(find_identity("no-such-id").is_err());
}

#[test]
fn small_batch_round_trips_through_json() {
    let reports = run_identities(&["eq-1.2", "eq-1.3", "eq-1.4", "prop-4.3-lambda2"], &cfg()).unwrap();
    assert!(reports.iter().all(|r| r.status == Status::Pass), "{reports:#?}");
    let text = render_reports(&reports, Format::Json).unwrap();
    assert_eq!(parse_json(&text).unwrap(), reports);
    let again = render_reports(
        &run_identities(&["eq-1.2", "eq-1.3", "eq-1.4", "prop-4.3-lambda2"], &cfg()).unwrap(),
        Format::Json,
    )
    .unwrap();
    assert_eq!(text, again);
}

#[test]
fn formal_entry_is_not_judged() {
    let r = &run_identities(&["eq-4.27-chain"], &cfg()).unwrap()[0];
    assert_eq!(r.status, Status::Formal);
}

#[test]
fn logzeta_functional_equation_fails_off_centre() {
    // The stated right-hand side disagrees with both engine sides at s = 0.3, 0.7.
    let r = &run_identities(&["funceq-6.1"], &cfg()).unwrap()[0];
    assert_eq!(r.status, Status::Fail);
    let mid = r.points.iter().find(|p| p.label.starts_with("s=0.5")).unwrap();
    assert!(mid.residual < 1e-10, "{}", mid.residual);
}
