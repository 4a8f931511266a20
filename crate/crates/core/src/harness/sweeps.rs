use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::partitions::enumerate_partitions;
use super::trees::free_trees;
use crate::bounds::{contains_balanced_spider, i_pf, i_sp, witness_forest, witness_spider, Family};
use crate::constructive::{Engine, Strategy, StrategyOutcome};
use crate::error::{Error, Result};
use crate::graph::{Instance, PathForest, Spider, Tree};
use crate::oracle::{burnable_exact, forest_burnable_exact, tree_burnable_exact, SearchConfig};
use crate::schedule::simulate;

/// An instance as it appears in reports.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Spider(Vec<u32>),
    Forest(Vec<u32>),
    Tree {
        order: usize,
        edges: Vec<(u32, u32)>,
    },
}

impl Subject {
    fn of_tree(t: &Tree) -> Self {
        Subject::Tree {
            order: t.order(),
            edges: t.edges(),
        }
    }
}

impl From<&Instance> for Subject {
    fn from(inst: &Instance) -> Self {
        match inst {
            Instance::Tree(t) => Subject::of_tree(t),
            Instance::Spider(s) => Subject::Spider(s.arms().to_vec()),
            Instance::Forest(f) => Subject::Forest(f.paths().to_vec()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: Subject,
    pub order: u64,
    /// Which check failed, e.g. `burnable` or a strategy name.
    pub check: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalHit {
    pub instance: Subject,
    pub order: u64,
    /// Why the instance is expected to be unburnable.
    pub tags: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: String,
    pub claim: String,
    pub n: u32,
    pub m: u32,
    /// Every order that was swept, ascending.
    pub orders: Vec<u64>,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    /// Instances found unburnable that the claim excludes. Every one has
    /// been refuted by the exact oracle.
    pub exceptional_hits: Vec<ExceptionalHit>,
    /// Not reproducible, unlike every other field.
    pub wall_time_ms: u64,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(family: &str, claim: &str, n: u32, m: u32, orders: Vec<u64>) -> Self {
        Self {
            family: family.into(),
            claim: claim.into(),
            n,
            m,
            orders,
            instances_checked: 0,
            failures: Vec::new(),
            exceptional_hits: Vec::new(),
            wall_time_ms: 0,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, instance: Subject, order: u64, check: &str, expected: &str, got: String) {
        self.failures.push(Failure {
            instance,
            order,
            check: check.into(),
            expected: expected.into(),
            got,
        });
    }

    fn hit(&mut self, instance: Subject, order: u64, tags: Vec<String>) {
        self.exceptional_hits.push(ExceptionalHit {
            instance,
            order,
            tags,
        });
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepConfig {
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    pub search: SearchConfig,
    /// Sweep every order up to one past the bound instead of the three
    /// orders around it.
    pub full_range: bool,
}

/// Maps `f` over `items` on a pool of `cfg.workers` threads, keeping the
/// input order.
fn par_map<T, R, F>(cfg: &SweepConfig, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start workers: {e}")))?;
    pool.install(|| items.par_iter().map(&f).collect())
}

fn spiders_of_order(n: u32, order: u64) -> Vec<Vec<u32>> {
    match u32::try_from(order - 1) {
        Ok(total) if total >= n => enumerate_partitions(total, n)
            .expect("total >= n >= 1")
            .collect(),
        _ => Vec::new(),
    }
}

fn forests_of_order(n: u32, order: u64) -> Vec<Vec<u32>> {
    match u32::try_from(order) {
        Ok(total) if total >= n && n >= 1 => enumerate_partitions(total, n)
            .expect("total >= n >= 1")
            .collect(),
        _ => Vec::new(),
    }
}

fn critical_orders(bound: u64, smallest: u64, full_range: bool) -> Vec<u64> {
    let low = if full_range {
        smallest
    } else {
        bound.saturating_sub(1)
    };
    (low.max(smallest)..=bound + 1).collect()
}

const NOTE_CRITICAL: &str = "orders below the bound are covered by the bound order: every smaller \
instance is a subtree of one at the bound, and burnability passes to subtrees";

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Every `n`-spider of order at most `i_sp(n, m)` is `m`-burnable, and
/// order `i_sp(n, m) + 1` is not enough. For `m <= n` the unburnable
/// spiders one past the bound are exactly those containing the balanced
/// `m`-spider.
pub fn verify_first_main(n: u32, m: u32, cfg: &SweepConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let bound = i_sp(n, m)?;
    let witness = witness_spider(n, m)?;
    let orders = critical_orders(bound, u64::from(n) + 1, cfg.full_range);
    let mut report = VerificationReport::new("spider", "first_main", n, m, orders.clone());
    if !cfg.full_range {
        report.notes.push(NOTE_CRITICAL.into());
    }
    let items: Vec<(u64, Vec<u32>)> = orders
        .iter()
        .flat_map(|&o| spiders_of_order(n, o).into_iter().map(move |a| (o, a)))
        .collect();
    let verdicts = par_map(cfg, &items, |(_, arms)| {
        let s = Spider::new(arms.clone())?;
        Ok(burnable_exact(&Instance::Spider(s), m, &cfg.search)?.burnable)
    })?;
    report.instances_checked = items.len() as u64;

    let mut past_bound_unburnable = 0;
    let mut witness_refuted = false;
    for ((order, arms), burnable) in items.iter().zip(verdicts) {
        let subject = Subject::Spider(arms.clone());
        if *order <= bound {
            if !burnable {
                report.fail(
                    subject,
                    *order,
                    "burnable",
                    "burnable",
                    "not burnable".into(),
                );
            }
            continue;
        }
        let balanced = m <= n && contains_balanced_spider(&Spider::new(arms.clone())?, m);
        if m <= n && burnable == balanced {
            let (expected, got) = if balanced {
                ("not burnable (contains the balanced spider)", "burnable")
            } else {
                ("burnable (no balanced subspider)", "not burnable")
            };
            report.fail(
                subject.clone(),
                *order,
                "balanced_criterion",
                expected,
                got.into(),
            );
        }
        if !burnable {
            past_bound_unburnable += 1;
            witness_refuted |= arms.as_slice() == witness.arms();
            let tag = if balanced {
                "contains_balanced_spider"
            } else {
                "past_bound"
            };
            report.hit(subject, *order, vec![tag.into()]);
        }
    }
    if past_bound_unburnable == 0 {
        report.fail(
            Subject::Spider(witness.arms().to_vec()),
            bound + 1,
            "tightness",
            "some spider of order bound + 1 is not burnable",
            "all burnable".into(),
        );
    } else if !witness_refuted {
        report.fail(
            Subject::Spider(witness.arms().to_vec()),
            bound + 1,
            "witness",
            "not burnable",
            "burnable".into(),
        );
    }
    report.wall_time_ms = elapsed_ms(start);
    Ok(report)
}

/// Every path forest with `n` paths and order at most `i_pf(n, m)` is
/// `m`-burnable, and the only unburnable one at the next order is the
/// witness forest.
pub fn verify_second_main(n: u32, m: u32, cfg: &SweepConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let bound = i_pf(n, m)?;
    let witness = witness_forest(n, m)?;
    let orders = critical_orders(bound, u64::from(n), cfg.full_range);
    let mut report = VerificationReport::new("forest", "second_main", n, m, orders.clone());
    if !cfg.full_range {
        report.notes.push(NOTE_CRITICAL.into());
    }
    let items: Vec<(u64, Vec<u32>)> = orders
        .iter()
        .flat_map(|&o| forests_of_order(n, o).into_iter().map(move |a| (o, a)))
        .collect();
    let verdicts = par_map(cfg, &items, |(_, paths)| {
        Ok(forest_burnable_exact(&PathForest::new(paths.clone())?, m).burnable)
    })?;
    report.instances_checked = items.len() as u64;
    for ((order, paths), burnable) in items.iter().zip(verdicts) {
        let subject = Subject::Forest(paths.clone());
        let is_witness = paths.as_slice() == witness.paths();
        let expected = *order <= bound || !is_witness;
        if burnable != expected {
            let (want, got) = if expected {
                ("burnable", "not burnable")
            } else {
                ("not burnable", "burnable")
            };
            report.fail(subject.clone(), *order, "burnable", want, got.into());
        }
        if !burnable && is_witness {
            report.hit(subject, *order, vec!["ForestMain_2s".into()]);
        }
    }
    report.wall_time_ms = elapsed_ms(start);
    Ok(report)
}

/// Largest order in the union of the hypothesis classes of the strategies
/// that apply to `family` with `n` arms or paths and `m` rounds.
pub fn default_max_order(family: Family, n: u32, m: u32) -> u64 {
    let (n, m) = (u64::from(n), u64::from(m));
    match family {
        Family::Spider => m * m + n - 2,
        Family::Forest => {
            let mut best = (3 * m).saturating_sub(1 + n);
            if m >= n && n >= 2 {
                best = best.max(m * m - (n - 1) * (n - 1) + 1);
            }
            if m == n && n >= 2 {
                best = best.max(4 * n - 4);
            }
            best
        }
    }
}

/// Strategies whose hypothesis the instance meets, judged from the
/// structure alone.
fn applicable(subject: &Subject, m: u32) -> Vec<Strategy> {
    let mut out = Vec::new();
    match subject {
        Subject::Spider(arms) => {
            let n = arms.len() as u32;
            let order = 1 + arms.iter().map(|&a| u64::from(a)).sum::<u64>();
            let (n64, m64) = (u64::from(n), u64::from(m));
            let in_bound = order <= m64 * m64 + n64 - 2;
            if m > n && in_bound {
                out.push(Strategy::SpiderMain(Engine::A));
                out.push(Strategy::SpiderMain(Engine::B));
                if arms[0] <= 2 * m - 1 {
                    out.push(Strategy::SpiderShortArms);
                }
                if m == n + 1 {
                    out.push(Strategy::SpiderNPlus1);
                }
            }
            if n >= m && m >= 2 && in_bound {
                out.push(Strategy::SpiderMLeN);
            }
        }
        Subject::Forest(paths) => {
            let n = paths.len() as u64;
            let order: u64 = paths.iter().map(|&a| u64::from(a)).sum();
            let m64 = u64::from(m);
            if m64 >= n && order + n + 1 <= 3 * m64 {
                out.push(Strategy::ForestLinear);
            }
            if n >= 2 && m64 >= n && order <= m64 * m64 - (n - 1) * (n - 1) + 1 {
                out.push(Strategy::ForestMain);
            }
            if n == 2 && m >= 2 && order <= m64 * m64 {
                out.push(Strategy::ForestTwo);
            }
            if n >= 2 && m64 == n && order <= 3 * n - 2 {
                out.push(Strategy::Forest3NMinus2);
            }
            let k = paths.len();
            if n >= 2 && m64 == n && paths[k - 1] == 1 && paths[k - 2] >= 3 && order <= 4 * n - 4 {
                out.push(Strategy::ForestSmallWithOne);
            }
        }
        Subject::Tree { .. } => {}
    }
    out
}

/// Rounds that must remain once the head burns, if the strategy promises
/// any.
fn promised_slack(strategy: Strategy, arms: &[u32], m: u32) -> Option<(u32, &'static str)> {
    let shortest = *arms.last()?;
    let n = arms.len() as u32;
    match strategy {
        Strategy::SpiderNPlus1 => Some((shortest.min(n - 1), "min{l_n, n-1}")),
        Strategy::SpiderMain(Engine::B) => Some((shortest.min(m - 2), "min{l_n, m-2}")),
        // the head burns in round 1 or 2
        Strategy::SpiderShortArms => Some((m - 2, "head burns by round 2")),
        _ => None,
    }
}

/// Runs every applicable strategy on every instance of the family with `n`
/// components and order at most `max_order`, and checks each outcome
/// against the exact oracle: schedules must re-simulate within `m` rounds
/// on burnable instances, exceptional outcomes must be unburnable, and
/// every unburnable instance in a hypothesis class must be reported as
/// exceptional.
pub fn verify_constructive_agreement(
    family: Family,
    n: u32,
    m: u32,
    max_order: u64,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if n < 1 || m < 1 || (family == Family::Spider && n < 2) {
        return Err(Error::Domain(format!(
            "agreement sweep needs n >= 1 (n >= 2 for spiders) and m >= 1, got n={n}, m={m}"
        )));
    }
    let smallest = match family {
        Family::Spider => u64::from(n) + 1,
        Family::Forest => u64::from(n),
    };
    let orders: Vec<u64> = (smallest..=max_order).collect();
    let family_name = match family {
        Family::Spider => "spider",
        Family::Forest => "forest",
    };
    let mut report =
        VerificationReport::new(family_name, "constructive_agreement", n, m, orders.clone());
    let items: Vec<(u64, Subject)> = orders
        .iter()
        .flat_map(|&o| {
            let parts = match family {
                Family::Spider => spiders_of_order(n, o),
                Family::Forest => forests_of_order(n, o),
            };
            parts.into_iter().map(move |a| {
                let s = match family {
                    Family::Spider => Subject::Spider(a),
                    Family::Forest => Subject::Forest(a),
                };
                (o, s)
            })
        })
        .filter(|(_, s)| !applicable(s, m).is_empty())
        .collect();

    struct Checked {
        burnable: bool,
        runs: Vec<(Strategy, StrategyOutcome, bool)>,
    }
    let results = par_map(cfg, &items, |(_, subject)| {
        let inst = match subject {
            Subject::Spider(a) => Instance::Spider(Spider::new(a.clone())?),
            Subject::Forest(a) => Instance::Forest(PathForest::new(a.clone())?),
            Subject::Tree { .. } => unreachable!("no tree strategies"),
        };
        let burnable = burnable_exact(&inst, m, &cfg.search)?.burnable;
        let graph = inst.graph();
        let runs = applicable(subject, m)
            .into_iter()
            .map(|st| {
                let out = st.run(&inst, m);
                // independent re-simulation of whatever schedule came back
                let resim = match out.schedule() {
                    Some(s) => simulate(&graph, s)
                        .is_ok_and(|r| r.valid && r.completed_round.is_some_and(|t| t <= m)),
                    None => true,
                };
                (st, out, resim)
            })
            .collect();
        Ok(Checked { burnable, runs })
    })?;
    report.instances_checked = items.len() as u64;

    let mut schedules = 0u64;
    for ((order, subject), checked) in items.iter().zip(results) {
        let mut tags = Vec::new();
        for (st, out, resim) in checked.runs {
            let name = st.name();
            match &out {
                StrategyOutcome::Schedule {
                    head_burn_round, ..
                } => {
                    schedules += 1;
                    if !resim {
                        report.fail(
                            subject.clone(),
                            *order,
                            name,
                            "valid schedule",
                            "schedule fails re-simulation".into(),
                        );
                    }
                    if !checked.burnable {
                        report.fail(
                            subject.clone(),
                            *order,
                            name,
                            "exceptional",
                            "schedule for an unburnable instance".into(),
                        );
                    }
                    if let (Subject::Spider(arms), Some((need, what))) =
                        (subject, promised_slack(st, subject_arms(subject), m))
                    {
                        let left = head_burn_round.map(|h| m.saturating_sub(h));
                        if left.is_none_or(|left| left < need) {
                            report.fail(
                                Subject::Spider(arms.clone()),
                                *order,
                                &format!("{name}/head_round"),
                                what,
                                format!("head burns in round {head_burn_round:?} of {m}"),
                            );
                        }
                    }
                }
                StrategyOutcome::Exceptional { family } => {
                    if checked.burnable {
                        report.fail(
                            subject.clone(),
                            *order,
                            name,
                            "schedule",
                            format!("exceptional {family} for a burnable instance"),
                        );
                    }
                    tags.push(format!("{name}: {family}"));
                }
                StrategyOutcome::HypothesisUnmet { reason } => {
                    report.fail(
                        subject.clone(),
                        *order,
                        name,
                        "hypothesis met",
                        reason.clone(),
                    );
                }
                StrategyOutcome::ProofCaseUnreachable { trace } => {
                    report.fail(
                        subject.clone(),
                        *order,
                        name,
                        "schedule or exceptional",
                        format!("unreachable case: {trace}"),
                    );
                }
            }
        }
        if !tags.is_empty() && !checked.burnable {
            report.hit(subject.clone(), *order, tags);
        }
    }
    report
        .notes
        .push(format!("{schedules} schedules re-simulated"));
    report.wall_time_ms = elapsed_ms(start);
    Ok(report)
}

fn subject_arms(s: &Subject) -> &[u32] {
    match s {
        Subject::Spider(a) | Subject::Forest(a) => a,
        Subject::Tree { .. } => &[],
    }
}

/// Checks every tree with exactly `n_leaves` leaves and order at most
/// `min(max_order, m^2 + n_leaves - 2)` for `m`-burnability. Failures are
/// counterexamples to the leaf-count bound; the bound is only conjectured
/// for `m > n_leaves`.
pub fn stretch_conjecture_sweep(
    n_leaves: u32,
    m: u32,
    max_order: u64,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if n_leaves < 2 || m < 1 {
        return Err(Error::Domain(format!(
            "leaf sweep needs n_leaves >= 2 and m >= 1, got n_leaves={n_leaves}, m={m}"
        )));
    }
    let (n64, m64) = (u64::from(n_leaves), u64::from(m));
    let top = max_order.min(m64 * m64 + n64 - 2);
    if top > cfg.search.cap as u64 {
        return Err(Error::SearchCapExceeded {
            order: top as usize,
            cap: cfg.search.cap,
        });
    }
    let orders: Vec<u64> = (2..=top).collect();
    let mut report =
        VerificationReport::new("tree", "leaf_conjecture", n_leaves, m, orders.clone());
    if m <= n_leaves {
        report.notes.push(format!(
            "the bound is only conjectured for m > n_leaves; with m = {m} <= {n_leaves} \
             failures are reported but refute nothing"
        ));
    }
    let trees: Vec<(u64, Tree)> = orders
        .iter()
        .flat_map(|&o| {
            free_trees(o as usize)
                .filter(|t| t.leaf_count() == n_leaves as usize)
                .map(move |t| (o, t))
        })
        .collect();
    let verdicts = par_map(cfg, &trees, |(_, t)| {
        Ok(tree_burnable_exact(t, m, &cfg.search)?.burnable)
    })?;
    report.instances_checked = trees.len() as u64;
    let mut per_order: BTreeMap<u64, u64> = BTreeMap::new();
    for ((order, t), burnable) in trees.iter().zip(verdicts) {
        *per_order.entry(*order).or_default() += 1;
        if !burnable {
            report.fail(
                Subject::of_tree(t),
                *order,
                "burnable",
                "burnable",
                "not burnable".into(),
            );
        }
    }
    report.notes.push(format!(
        "trees per order: {}",
        per_order
            .iter()
            .map(|(o, c)| format!("{o}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    report.wall_time_ms = elapsed_ms(start);
    Ok(report)
}
