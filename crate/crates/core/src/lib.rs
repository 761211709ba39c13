//! Division graphs of finite groups.
//!
//! A *division* of a finite group collects the elements whose cyclic
//! subgroups are conjugate. For each division `[φ]` the cyclic group `<φ>`
//! acts on every right-coset space `H\G`; its orbits and their lengths,
//! linked along the subgroup lattice, form one connected layered digraph
//! (an unramified splitting type). The disjoint union over all divisions is
//! the division graph of the group.
//!
//! The crate builds groups ([`group`], [`catalog`]), their subgroup lattices
//! ([`lattice`]), conjugacy classes and divisions ([`classes`],
//! [`alternating`]), division graphs ([`divgraph`]), and reads group
//! properties back out of a division graph alone ([`analysis`]), including
//! canonical certificates for comparing groups ([`canon`]).

pub mod alternating;
pub mod analysis;
pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod classes;
pub mod cli;
pub mod divgraph;
pub mod error;
pub mod extraction;
pub mod group;
pub mod io;
pub mod lattice;
pub mod perm;

pub use catalog::{catalog, catalog_str, Descriptor};
pub use classes::{conjugacy_classes, divisions, golomb_classes, ConjugacyClass, Division};
pub use divgraph::{division_graph, verify_lagarias, DivisionGraph};
pub use error::{AlternatingError, AnalysisError, GroupError, LatticeError};
pub use group::{from_permutation_generators, validate_cayley_table, Group};
pub use lattice::{all_subgroups, SubgroupLattice};
pub use perm::Permutation;

/// Resource caps shared by every computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group for which a full multiplication table is built.
    pub order_cap: usize,
    /// Associativity is checked on every triple below this order and on
    /// `10 n²` random triples at or above it.
    pub associativity_exhaustive_below: usize,
    pub lattice_order_cap: usize,
    pub lattice_subgroup_cap: usize,
    /// Node budget for canonical-labeling search.
    pub search_budget: usize,
    /// Largest `n` accepted by the combinatorial alternating-group routines.
    pub alternating_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 5040,
            associativity_exhaustive_below: 512,
            lattice_order_cap: 384,
            lattice_subgroup_cap: 20_000,
            search_budget: 200_000,
            alternating_cap: 20,
        }
    }
}
