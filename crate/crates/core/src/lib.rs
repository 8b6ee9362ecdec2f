//! Core model of a two-round, three-candidate election.
//!
//! In the first round one candidate is eliminated (candidate `i` with
//! probability `q_i`); in the runoff the electorate picks between the two
//! survivors according to a [`Strategy`]. The crate provides
//!
//! * the forward map from a strategy and an elimination distribution to the
//!   candidates' winning probabilities, and its closed-form inverse
//!   ([`election`]),
//! * classification of strategies as transitive or intransitive orders,
//!   Condorcet mixtures and strategy entropy ([`preference`]),
//! * counter-based samplers for the quantum (Bloch sphere) and classical
//!   (unit cube) strategy spaces ([`sampling`]),
//! * rasterised coverage of the elimination simplex, the regions reachable
//!   only by intransitive strategies, a nearest-transitive-strategy oracle
//!   and the support sweep built on top of them ([`region`]).
//!
//! The crate is `no_std` and only needs `alloc`. Parallel drivers, file
//! formats and the command line live in the `runoff` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod election;
mod error;
pub mod preference;
pub mod region;
pub mod sampling;

pub use election::{
    determinant, forward_support, inverse_elimination, strategy_from_bloch, BlochPoint,
    EliminationDistribution, InversionResult, Strategy, SupportVector,
};
pub use error::Error;
pub use preference::{
    classify_strategy, condorcet_mixture, strategy_entropy, Candidate, Classification,
    CollectiveRelation, CycleDirection, MixtureWeights, PairOutcome, PairwisePreference,
};
pub use region::{
    build_coverage, critical_support_sweep, nearest_transitive_distance, project_to_ternary,
    relevant_region, PlanarPoint, RegionReport, RelevantRegion, SweepParams, SweepPoint, SweepResult,
    TernaryCoverageGrid, TransitiveOracle,
};
pub use sampling::{sample_cube_uniform, sample_sphere_uniform, Model, SampleStream};

pub type Result<T, E = Error> = core::result::Result<T, E>;
