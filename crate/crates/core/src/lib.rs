//! Exact and constructive graph burning on paths, path forests and spiders.
//!
//! * [`graph`] and [`schedule`]: structures, coordinates, the burning
//!   simulator and ball-cover normalisation.
//! * [`oracle`]: exact burnability and burning numbers.
//! * [`constructive`]: explicit `m`-round strategies for spiders and path
//!   forests, each returning a verifiable schedule or naming the exceptional
//!   family the instance belongs to.
//! * [`bounds`]: the tight order bounds for spiders and path forests and
//!   their extremal instances.
//! * [`harness`]: exhaustive sweeps that certify those bounds.

// bounds like `l <= 2m - 1` are kept in the form they are usually stated
#![allow(clippy::int_plus_one)]

pub mod bounds;
pub mod constructive;
pub mod error;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod schedule;

pub use error::{Error, Result};
pub use graph::{spider_to_tree, Graph, Instance, PathForest, Spider, Tree, VertexCoord};
pub use oracle::{
    burnable_exact, burning_number_exact, forest_burnable_exact, graph_burnable_exact,
    tree_burnable_exact, OracleVerdict, SearchConfig,
};
pub use schedule::{
    schedule_from_cover, simulate, uncovered_by, Ball, BurnRecord, BurningSchedule,
};
