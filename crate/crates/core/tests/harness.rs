use burning_core::bounds::Family;
use burning_core::harness::*;
use burning_core::SearchConfig;

fn cfg() -> SweepConfig {
    SweepConfig {
        workers: 2,
        ..SweepConfig::default()
    }
}

fn hit_instances(r: &VerificationReport) -> Vec<Subject> {
    r.exceptional_hits
        .iter()
        .map(|h| h.instance.clone())
        .collect()
}

#[test]
fn first_main_small_cases() {
    let r = verify_first_main(3, 3, &cfg()).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.orders, vec![8, 9, 10]);
    assert_eq!(hit_instances(&r), vec![Subject::Spider(vec![3, 3, 3])]);

    let r = verify_first_main(3, 4, &cfg()).unwrap();
    assert!(r.passed());
    assert!(hit_instances(&r).contains(&Subject::Spider(vec![15, 1, 1])));

    let r = verify_first_main(4, 3, &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(hit_instances(&r), vec![Subject::Spider(vec![3, 3, 3, 1])]);
    assert_eq!(r.exceptional_hits[0].order, 11);
}

#[test]
fn first_main_with_two_rounds() {
    // past the bound every 3-spider contains a path on five vertices, the
    // balanced 2-spider
    let r = verify_first_main(3, 2, &cfg()).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.exceptional_hits.len(), 2);
}

#[test]
fn second_main_small_cases() {
    let r = verify_second_main(2, 3, &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(hit_instances(&r), vec![Subject::Forest(vec![7, 2])]);

    let r = verify_second_main(3, 3, &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(hit_instances(&r), vec![Subject::Forest(vec![2, 2, 2])]);

    let r = verify_second_main(2, 4, &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(r.orders, vec![14, 15, 16]);
    assert_eq!(hit_instances(&r), vec![Subject::Forest(vec![14, 2])]);
}

#[test]
fn full_range_sweeps_every_order() {
    let c = SweepConfig {
        full_range: true,
        ..cfg()
    };
    let r = verify_second_main(2, 3, &c).unwrap();
    assert!(r.passed());
    assert_eq!(r.orders, (2..=9).collect::<Vec<_>>());
    let r = verify_first_main(3, 3, &c).unwrap();
    assert!(r.passed());
    assert_eq!(*r.orders.first().unwrap(), 4);
}

#[test]
fn agreement_small_cases() {
    let r = verify_constructive_agreement(Family::Spider, 3, 4, 18, &cfg()).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert!(r.exceptional_hits.is_empty());

    let r = verify_constructive_agreement(Family::Forest, 3, 4, 13, &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(hit_instances(&r), vec![Subject::Forest(vec![9, 2, 2])]);

    let r = verify_constructive_agreement(Family::Forest, 2, 3, 9, &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(hit_instances(&r), vec![Subject::Forest(vec![7, 2])]);
}

#[test]
fn agreement_reaches_every_class() {
    assert_eq!(default_max_order(Family::Spider, 3, 4), 17);
    assert_eq!(default_max_order(Family::Forest, 2, 3), 9);
    assert_eq!(default_max_order(Family::Forest, 3, 3), 8);
    assert_eq!(default_max_order(Family::Forest, 1, 4), 10);
    let r = verify_constructive_agreement(Family::Forest, 4, 4, 12, &cfg()).unwrap();
    assert!(r.passed());
    assert!(r.instances_checked > 0);
}

#[test]
fn leaf_conjecture_sweeps() {
    // paths
    let r = stretch_conjecture_sweep(2, 3, 9, &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(r.instances_checked, 8);

    let r = stretch_conjecture_sweep(3, 4, 12, &cfg()).unwrap();
    assert!(r.passed());

    // with m = n the bound fails on the balanced 3-spider, which is outside
    // the conjecture's range
    let r = stretch_conjecture_sweep(3, 3, 10, &cfg()).unwrap();
    assert_eq!(r.failures.len(), 1);
    assert_eq!(r.failures[0].order, 10);
    assert!(!r.notes.is_empty());
}

#[test]
fn search_cap_is_reported() {
    let c = SweepConfig {
        search: SearchConfig { cap: 10 },
        ..cfg()
    };
    assert!(matches!(
        verify_first_main(3, 4, &c),
        Err(burning_core::Error::SearchCapExceeded { .. })
    ));
    assert!(stretch_conjecture_sweep(3, 4, 17, &c).is_err());
}

#[test]
fn reports_are_reproducible() {
    let strip = |mut r: VerificationReport| {
        r.wall_time_ms = 0;
        r
    };
    let a = strip(verify_first_main(4, 5, &cfg()).unwrap());
    let b = strip(
        verify_first_main(
            4,
            5,
            &SweepConfig {
                workers: 1,
                ..cfg()
            },
        )
        .unwrap(),
    );
    assert_eq!(a, b);
}

#[test]
fn report_json_round_trip() {
    let r = verify_second_main(2, 3, &cfg()).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        v["exceptional_hits"][0]["instance"],
        serde_json::json!({"forest": [7, 2]})
    );
}

#[test]
fn domain_errors() {
    assert!(verify_second_main(4, 3, &cfg()).is_err());
    assert!(verify_first_main(1, 3, &cfg()).is_err());
    assert!(verify_constructive_agreement(Family::Spider, 1, 3, 5, &cfg()).is_err());
}
