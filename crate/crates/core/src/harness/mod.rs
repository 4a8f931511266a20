//! Exhaustive instance generation and the sweeps that certify the order
//! bounds and cross-check the constructive strategies against the exact
//! oracle.

mod partitions;
mod sweeps;
mod trees;

pub use partitions::{enumerate_partitions, partition_count, Partitions};
pub use sweeps::{
    default_max_order, stretch_conjecture_sweep, verify_constructive_agreement, verify_first_main,
    verify_second_main, ExceptionalHit, Failure, Subject, SweepConfig, VerificationReport,
};
pub use trees::{free_trees, FreeTrees};
