//! Brute-force recomputation: composition sums, set partitions and
//! partition chains, and groupoid cardinalities.

mod compositions;
mod groupoid;
mod partitions;
pub mod printed;

pub use compositions::{
    comp_sum_bernoulli, comp_sum_zeta, compositions, for_each_composition, parity_sum_trig, Composition,
    TrigKind,
};
pub use groupoid::{action_groupoid_card, hyper_groupoid_card, ActionKind, GroupoidCard};
pub use partitions::{
    chain_sum_comp_bernoulli, chains_count_check, chains_count_formula, compose_by_partitions,
    for_each_chain, for_each_set_partition, iterated_compose_oracle, partition_chains, set_partitions,
    PartitionChain,
};
