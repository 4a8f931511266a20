//! Constructive strategies: explicit schedules for spiders and path forests
//! inside the order bounds, or the name of the exceptional family when the
//! instance is one of the few that cannot be burned.
//!
//! Each strategy builds a cover by balls of distinct radii on the original
//! instance, which is then normalised into a schedule and re-simulated
//! before it is returned.

mod forest;
mod spider;
mod view;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, Instance, PathForest, Spider, VertexCoord};
use crate::schedule::{schedule_from_cover, simulate, BurningSchedule};
use view::{ForestView, SpiderView, Step, Stop};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionalFamily {
    /// Two paths of orders `m^2 - 2` and 2.
    #[serde(rename = "ForestTwoPaths_m2minus2_2")]
    ForestTwoPathsM2Minus2And2,
    /// `n` paths within `3n - 2` vertices whose shortest path has order 2.
    #[serde(rename = "ForestSmallest2")]
    ForestSmallestTwo,
    /// Path orders `m^2 - n^2 + 2, 2, ..., 2`.
    #[serde(rename = "ForestMain_2s")]
    ForestMainTwos,
    /// A spider with at least `m` arms of length at least `m`.
    #[serde(rename = "SpiderContainsBalanced")]
    SpiderContainsBalanced,
}

impl fmt::Display for ExceptionalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Self::ForestTwoPathsM2Minus2And2 => "ForestTwoPaths_m2minus2_2",
            Self::ForestSmallestTwo => "ForestSmallest2",
            Self::ForestMainTwos => "ForestMain_2s",
            Self::SpiderContainsBalanced => "SpiderContainsBalanced",
        };
        f.write_str(tag)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum StrategyOutcome {
    Schedule {
        schedule: BurningSchedule,
        /// Round in which the head burns; spiders only.
        head_burn_round: Option<u32>,
        completed_round: u32,
    },
    Exceptional {
        family: ExceptionalFamily,
    },
    HypothesisUnmet {
        reason: String,
    },
    /// No branch of the construction applied. Always a bug.
    ProofCaseUnreachable {
        trace: String,
    },
}

impl StrategyOutcome {
    pub fn schedule(&self) -> Option<&BurningSchedule> {
        match self {
            Self::Schedule { schedule, .. } => Some(schedule),
            _ => None,
        }
    }

    pub fn head_burn_round(&self) -> Option<u32> {
        match self {
            Self::Schedule {
                head_burn_round, ..
            } => *head_burn_round,
            _ => None,
        }
    }

    pub fn is_schedule(&self) -> bool {
        matches!(self, Self::Schedule { .. })
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self, Self::Exceptional { .. })
    }

    pub fn is_unreachable(&self) -> bool {
        matches!(self, Self::ProofCaseUnreachable { .. })
    }
}

/// The two constructions for spiders with more rounds than arms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Induction on the number of rounds, peeling the longest arm.
    #[default]
    A,
    /// Induction on the number of arms through the path forest bound.
    B,
}

fn finalize(graph: &Graph, rounds: u32, step: Step) -> StrategyOutcome {
    let cover = match step {
        Ok(cover) => cover,
        Err(Stop::Exceptional(family)) => return StrategyOutcome::Exceptional { family },
        Err(Stop::Unmet(reason)) => return StrategyOutcome::HypothesisUnmet { reason },
        Err(Stop::Unreachable(trace)) => return StrategyOutcome::ProofCaseUnreachable { trace },
    };
    let unreachable = |what: String| StrategyOutcome::ProofCaseUnreachable { trace: what };
    let schedule = match schedule_from_cover(graph, rounds, &cover) {
        Ok(s) => s,
        Err(e) => return unreachable(format!("cover rejected: {e}")),
    };
    let record = match simulate(graph, &schedule) {
        Ok(r) => r,
        Err(e) => return unreachable(format!("schedule rejected: {e}")),
    };
    let completed_round = match record.completed_round {
        Some(t) if record.valid && t <= rounds => t,
        _ => {
            return unreachable(format!(
                "schedule {:?} does not burn the instance",
                schedule.sources()
            ))
        }
    };
    let head_burn_round = graph
        .head()
        .and_then(|_| record.burn_round(graph, &VertexCoord::Head).ok().flatten());
    StrategyOutcome::Schedule {
        schedule,
        head_burn_round,
        completed_round,
    }
}

fn on_forest(
    f: &PathForest,
    rounds: u32,
    run: impl FnOnce(&ForestView, u32) -> Step,
) -> StrategyOutcome {
    finalize(
        &Graph::from_forest(f),
        rounds,
        run(&ForestView::from_forest(f), rounds),
    )
}

fn on_spider(
    s: &Spider,
    rounds: u32,
    run: impl FnOnce(&SpiderView, u32) -> Step,
) -> StrategyOutcome {
    finalize(
        &Graph::from_spider(s),
        rounds,
        run(&SpiderView::from_spider(s), rounds),
    )
}

/// `n` paths of total order at most `4n - 4` whose shortest path has order
/// 1 and second shortest at least 3, in `n` rounds.
pub fn burn_forest_small_with_one(f: &PathForest, n: u32) -> StrategyOutcome {
    on_forest(f, n, forest::small_with_one)
}

/// `m > n >= 2`, order at most `m^2 + n - 2` and no arm longer than
/// `2m - 1`. The head burns in round 1 or 2.
pub fn burn_spider_short_arms(s: &Spider, m: u32) -> StrategyOutcome {
    on_spider(s, m, spider::short_arms)
}

/// `1 <= n <= m` paths of total order at most `3m - 1 - n`.
pub fn burn_forest_linear(f: &PathForest, m: u32) -> StrategyOutcome {
    on_forest(f, m, forest::linear)
}

/// An `n`-spider of order at most `n^2 + 3n - 1` in `n + 1` rounds, leaving
/// at least `min{l_n, n - 1}` rounds after the head burns.
pub fn burn_spider_nplus1(s: &Spider) -> StrategyOutcome {
    on_spider(s, s.arm_count() as u32 + 1, |v, _| spider::nplus1(v))
}

/// `m > n >= 2`, order at most `m^2 + n - 2`. Engine B also leaves at least
/// `min{l_n, m - 2}` rounds after the head burns.
pub fn burn_spider_main(s: &Spider, m: u32, engine: Engine) -> StrategyOutcome {
    on_spider(s, m, |v, m| spider::main(v, m, engine))
}

/// `n >= m >= 2`, order at most `m^2 + n - 2`: a schedule unless the
/// spider has `m` arms of length at least `m`.
pub fn burn_spider_m_le_n(s: &Spider, m: u32) -> StrategyOutcome {
    on_spider(s, m, spider::m_le_n)
}

/// Two paths of total order at most `m^2`: a schedule unless the orders are
/// `m^2 - 2` and 2.
pub fn burn_forest_two(f: &PathForest, m: u32) -> StrategyOutcome {
    on_forest(f, m, forest::two)
}

/// `n >= 2` paths of total order at most `3n - 2`, in `n` rounds: a
/// schedule unless the shortest path has order 2.
pub fn burn_forest_3nminus2(f: &PathForest, n: u32) -> StrategyOutcome {
    on_forest(f, n, forest::three_n_minus_2)
}

/// `2 <= n <= m` paths of total order at most `m^2 - (n-1)^2 + 1`: a
/// schedule unless the orders are `m^2 - n^2 + 2, 2, ..., 2`.
pub fn burn_forest_main(f: &PathForest, m: u32) -> StrategyOutcome {
    on_forest(f, m, forest::main)
}

/// A named strategy, for selection at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    ForestSmallWithOne,
    SpiderShortArms,
    ForestLinear,
    SpiderNPlus1,
    SpiderMain(Engine),
    SpiderMLeN,
    ForestTwo,
    Forest3NMinus2,
    ForestMain,
}

impl Strategy {
    pub const ALL: [Strategy; 10] = [
        Strategy::ForestSmallWithOne,
        Strategy::SpiderShortArms,
        Strategy::ForestLinear,
        Strategy::SpiderNPlus1,
        Strategy::SpiderMain(Engine::A),
        Strategy::SpiderMain(Engine::B),
        Strategy::SpiderMLeN,
        Strategy::ForestTwo,
        Strategy::Forest3NMinus2,
        Strategy::ForestMain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::ForestSmallWithOne => "forest-small-with-one",
            Strategy::SpiderShortArms => "spider-short-arms",
            Strategy::ForestLinear => "forest-linear",
            Strategy::SpiderNPlus1 => "spider-nplus1",
            Strategy::SpiderMain(Engine::A) => "spider-main-a",
            Strategy::SpiderMain(Engine::B) => "spider-main-b",
            Strategy::SpiderMLeN => "spider-m-le-n",
            Strategy::ForestTwo => "forest-two",
            Strategy::Forest3NMinus2 => "forest-3n-minus-2",
            Strategy::ForestMain => "forest-main",
        }
    }

    pub fn is_spider(self) -> bool {
        matches!(
            self,
            Strategy::SpiderShortArms
                | Strategy::SpiderNPlus1
                | Strategy::SpiderMain(_)
                | Strategy::SpiderMLeN
        )
    }

    /// Runs the strategy with `rounds` rounds. For `spider-nplus1` the
    /// rounds must equal the arm count plus one.
    pub fn run(self, inst: &Instance, rounds: u32) -> StrategyOutcome {
        let unmet = |reason: String| StrategyOutcome::HypothesisUnmet { reason };
        match (self, inst) {
            (Strategy::SpiderNPlus1, Instance::Spider(s)) => {
                let n = s.arm_count() as u32;
                if rounds != n + 1 {
                    return unmet(format!(
                        "{} burns an {n}-spider in {} rounds",
                        self.name(),
                        n + 1
                    ));
                }
                burn_spider_nplus1(s)
            }
            (Strategy::SpiderShortArms, Instance::Spider(s)) => burn_spider_short_arms(s, rounds),
            (Strategy::SpiderMain(e), Instance::Spider(s)) => burn_spider_main(s, rounds, e),
            (Strategy::SpiderMLeN, Instance::Spider(s)) => burn_spider_m_le_n(s, rounds),
            (Strategy::ForestSmallWithOne, Instance::Forest(f)) => {
                burn_forest_small_with_one(f, rounds)
            }
            (Strategy::ForestLinear, Instance::Forest(f)) => burn_forest_linear(f, rounds),
            (Strategy::ForestTwo, Instance::Forest(f)) => burn_forest_two(f, rounds),
            (Strategy::Forest3NMinus2, Instance::Forest(f)) => burn_forest_3nminus2(f, rounds),
            (Strategy::ForestMain, Instance::Forest(f)) => burn_forest_main(f, rounds),
            _ => {
                let want = if self.is_spider() {
                    "a spider"
                } else {
                    "a path forest"
                };
                unmet(format!("{} needs {want}", self.name()))
            }
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Strategy::ALL.iter().map(|s| s.name()).collect();
                Error::Parse(format!(
                    "unknown strategy {s:?}, expected one of {}",
                    names.join(", ")
                ))
            })
    }
}
