//! Asymptotic Castelnuovo–Mumford regularity of Inc-invariant chains of edge
//! ideals.
//!
//! A chain is given by a [`ChainSpec`]: a stability index `r` and the edges
//! of `G_r`. From it the crate expands every later graph `G_n`, decides the
//! limit of `reg I_n` and the index from which it is reached, builds long
//! induced anticycles that certify `reg >= 3`, and checks all of this
//! against an exact homology oracle.
//!
//! ```
//! use increg::{expand, limit_regularity, ChainSpec};
//!
//! let spec = ChainSpec::new(4, [(1, 3), (2, 4)]).unwrap();
//! let g6 = expand(&spec, 6).unwrap();
//! assert!(!g6.has_edge(1, 6));
//! assert_eq!(limit_regularity(&spec).limit_reg, 3);
//! ```

pub mod anticycle;
pub mod chain;
pub mod classifier;
pub mod fuzz;
pub mod graph;
pub mod oracle;

pub use anticycle::{
    build_j_sets, build_k_sets, construct_anticycle, final_vertices, initial_vertices,
    AnticycleError, AnticycleTrace, Case, Hypothesis, JTrace, KTrace,
};
pub use chain::{
    chain_indices, contains_edge, derived_chain, expand, is_quasi_saturated, msupp, normalize_spec,
    orbit_witness, q_invariant, reduce_index, triangle_contains, ChainError, ChainIndices,
    ChainSpec, IncMapWitness, RawSpec, Triangle,
};
pub use classifier::{
    limit_indmatch, limit_regularity, stabilization_threshold, sweep_verify, ClassifierVerdict,
    LimitCase, SweepError, SweepReport, SweepRow,
};
pub use fuzz::{generate_random_spec, random_spec};
pub use graph::{
    enumerate_induced_cycles, enumerate_induced_cycles_capped, find_induced_kk2,
    induced_matching_number, induced_matching_number_capped, is_chordal, is_cochordal,
    verify_anticycle, AnticycleWitness, Edge, GraphError, InducedSubgraph, SimpleGraph,
};
pub use oracle::{
    reduced_homology_ranks, regularity, regularity_auto, regularity_bounds, regularity_capped,
    Certificate, HomologyProfile, Method, OracleError, RegularityReport, DEFAULT_ORACLE_CAP,
};

/// The guide's chapters, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/anticycles.md")]
    mod anticycles {}
    #[doc = include_str!("../../../book/src/classifier.md")]
    mod classifier {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
