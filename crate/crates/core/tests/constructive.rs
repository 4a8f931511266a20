use burning_core::constructive::*;
use burning_core::{burnable_exact, simulate, Graph, Instance, PathForest, SearchConfig, Spider};

fn spider(a: &[u32]) -> Spider {
    Spider::new(a.to_vec()).unwrap()
}

fn forest(a: &[u32]) -> PathForest {
    PathForest::new(a.to_vec()).unwrap()
}

fn oracle(inst: impl Into<Instance>, m: u32) -> bool {
    burnable_exact(&inst.into(), m, &SearchConfig::default())
        .unwrap()
        .burnable
}

/// A schedule outcome that the oracle agrees with and that re-simulates.
fn assert_schedule(out: &StrategyOutcome, inst: impl Into<Instance>, m: u32) {
    let inst = inst.into();
    assert!(oracle(inst.clone(), m), "oracle refutes {inst:?} at {m}");
    let s = out
        .schedule()
        .unwrap_or_else(|| panic!("expected a schedule, got {out:?}"));
    assert!(s.len() <= m as usize);
    let rec = simulate(&inst.graph(), s).unwrap();
    assert!(rec.valid);
    assert!(rec.completed_round.unwrap() <= m);
}

fn assert_exceptional(
    out: &StrategyOutcome,
    family: ExceptionalFamily,
    inst: impl Into<Instance>,
    m: u32,
) {
    assert_eq!(*out, StrategyOutcome::Exceptional { family });
    assert!(!oracle(inst, m));
}

fn assert_unmet(out: &StrategyOutcome) {
    assert!(
        matches!(out, StrategyOutcome::HypothesisUnmet { .. }),
        "expected unmet hypothesis, got {out:?}"
    );
}

#[test]
fn small_forest_with_a_single_vertex_path() {
    let f = forest(&[3, 3, 1]);
    assert_schedule(&burn_forest_small_with_one(&f, 3), f, 3);
    let f = forest(&[4, 3, 1]);
    assert_schedule(&burn_forest_small_with_one(&f, 3), f, 3);
    assert_unmet(&burn_forest_small_with_one(&forest(&[2, 2, 1]), 3));
    assert_unmet(&burn_forest_small_with_one(&forest(&[5, 3, 1]), 3));
}

#[test]
fn short_arms() {
    let s = spider(&[5, 5, 5, 5]);
    let out = burn_spider_short_arms(&s, 5);
    assert_schedule(&out, s, 5);
    assert!(out.head_burn_round().unwrap() <= 2);

    // largest order the bound allows with three arms and four rounds
    let s = spider(&[7, 6, 3]);
    assert_eq!(s.order(), 17);
    let out = burn_spider_short_arms(&s, 4);
    assert_schedule(&out, s, 4);
    assert!(out.head_burn_round().unwrap() <= 2);

    // one past it: 7 + 7 + 3 arms give order 18 > 4^2 + 3 - 2
    assert_unmet(&burn_spider_short_arms(&spider(&[7, 7, 3]), 4));
    assert_unmet(&burn_spider_short_arms(&spider(&[9, 1, 1]), 4));
}

#[test]
fn short_arms_with_the_source_next_to_the_head() {
    // m = n + 1 and every arm long: the last arm has n + 2 vertices
    let s = spider(&[6, 5, 5]);
    let out = burn_spider_short_arms(&s, 4);
    assert_schedule(&out, s, 4);
    assert_eq!(out.head_burn_round(), Some(2));
}

#[test]
fn linear_forests() {
    let f = forest(&[5, 1]);
    assert_schedule(&burn_forest_linear(&f, 3), f, 3);
    let f = forest(&[1, 1, 1]);
    assert_schedule(&burn_forest_linear(&f, 3), f, 3);
    // the longest path needs two sources
    let f = forest(&[11, 1]);
    assert_schedule(&burn_forest_linear(&f, 5), f, 5);
    assert_unmet(&burn_forest_linear(&forest(&[9, 1]), 4));
}

#[test]
fn n_plus_one_rounds() {
    let s = spider(&[5, 3]);
    let out = burn_spider_nplus1(&s);
    assert_schedule(&out, s, 3);
    assert!(out.head_burn_round().unwrap() < 3);

    let s = spider(&[8, 4, 4]);
    let out = burn_spider_nplus1(&s);
    assert_schedule(&out, s, 4);
    assert!(4 - out.head_burn_round().unwrap() >= 2);

    assert_unmet(&burn_spider_nplus1(&spider(&[9, 4, 4])));
}

#[test]
fn both_engines() {
    for engine in [Engine::A, Engine::B] {
        let s = spider(&[6, 2]);
        assert_schedule(&burn_spider_main(&s, 3, engine), s, 3);
        // order 17 = 4^2 + 1 with three arms
        let s = spider(&[10, 3, 3]);
        assert_schedule(&burn_spider_main(&s, 4, engine), s, 4);
        assert_unmet(&burn_spider_main(&spider(&[20, 3, 3]), 5, engine));
        assert_unmet(&burn_spider_main(&spider(&[11, 3, 3]), 4, engine));
    }
}

#[test]
fn engine_b_special_instances() {
    // m = n + 2 with arms 3n + 4, n + 3, ..., n + 3
    let s = spider(&[13, 6, 6]);
    let out = burn_spider_main(&s, 5, Engine::B);
    assert_schedule(&out, s, 5);
    assert!(5 - out.head_burn_round().unwrap() >= 3);
    // m = n + 1 with the shortest arm n + 2
    let s = spider(&[6, 5, 5]);
    let out = burn_spider_main(&s, 4, Engine::B);
    assert_schedule(&out, s, 4);
    assert!(4 - out.head_burn_round().unwrap() >= 2);
}

#[test]
fn at_most_as_many_rounds_as_arms() {
    let s = spider(&[3, 3, 3, 1]);
    assert_exceptional(
        &burn_spider_m_le_n(&s, 3),
        ExceptionalFamily::SpiderContainsBalanced,
        s,
        3,
    );
    assert_unmet(&burn_spider_m_le_n(&spider(&[6, 2, 2, 1]), 3));
    let s = spider(&[5, 2, 2, 1]);
    assert_schedule(&burn_spider_m_le_n(&s, 3), s, 3);
}

#[test]
fn two_paths() {
    let f = forest(&[7, 2]);
    assert_exceptional(
        &burn_forest_two(&f, 3),
        ExceptionalFamily::ForestTwoPathsM2Minus2And2,
        f,
        3,
    );
    let f = forest(&[9, 7]);
    assert_schedule(&burn_forest_two(&f, 4), f, 4);
    let f = forest(&[8, 1]);
    assert_schedule(&burn_forest_two(&f, 3), f, 3);
    assert_unmet(&burn_forest_two(&forest(&[9, 1]), 3));
}

#[test]
fn three_n_minus_two() {
    let f = forest(&[3, 3, 1]);
    assert_schedule(&burn_forest_3nminus2(&f, 3), f, 3);
    let f = forest(&[3, 2, 2]);
    assert_exceptional(
        &burn_forest_3nminus2(&f, 3),
        ExceptionalFamily::ForestSmallestTwo,
        f,
        3,
    );
    assert_unmet(&burn_forest_3nminus2(&forest(&[5, 1]), 2));
}

#[test]
fn forest_main() {
    assert_unmet(&burn_forest_main(&forest(&[11, 2, 2]), 4));
    let f = forest(&[9, 2, 2]);
    assert_exceptional(
        &burn_forest_main(&f, 4),
        ExceptionalFamily::ForestMainTwos,
        f,
        4,
    );
    let f = forest(&[8, 3, 2]);
    assert_schedule(&burn_forest_main(&f, 4), f, 4);
    assert_unmet(&burn_forest_main(&forest(&[15, 4, 4]), 5));
    // the peeled forest is exceptional but the whole one is not
    let f = forest(&[11, 9, 2]);
    assert_schedule(&burn_forest_main(&f, 5), f, 5);
}

#[test]
fn schedules_address_the_original_instance() {
    let s = spider(&[10, 3, 3]);
    let out = burn_spider_main(&s, 4, Engine::A);
    let g = Graph::from_spider(&s);
    for c in out.schedule().unwrap().sources() {
        g.id_of(c).unwrap();
    }
}

#[test]
fn strategies_by_name() {
    for st in Strategy::ALL {
        assert_eq!(st.name().parse::<Strategy>().unwrap(), st);
    }
    assert!("spider-main".parse::<Strategy>().is_err());
    let inst = Instance::Forest(forest(&[7, 2]));
    assert!(Strategy::ForestTwo.run(&inst, 3).is_exceptional());
    assert_unmet(&Strategy::SpiderMain(Engine::A).run(&inst, 3));
    let inst = Instance::Spider(spider(&[5, 3]));
    assert_unmet(&Strategy::SpiderNPlus1.run(&inst, 4));
    assert!(Strategy::SpiderNPlus1.run(&inst, 3).is_schedule());
}

#[test]
fn outcome_json_shape() {
    let out = burn_forest_two(&forest(&[7, 2]), 3);
    let v = serde_json::to_value(&out).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"outcome": "exceptional", "family": "ForestTwoPaths_m2minus2_2"})
    );
    let out = burn_forest_two(&forest(&[3, 1]), 2);
    let v = serde_json::to_value(&out).unwrap();
    assert_eq!(v["outcome"], "schedule");
    assert_eq!(v["schedule"]["m"], 2);
    assert!(v["head_burn_round"].is_null());
}
