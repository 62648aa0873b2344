//! Antimagic labelings of graphs joined with copies of the 3-vertex path.
//!
//! The crate computes the upper bound β(G) exactly, builds explicit antimagic
//! labelings for jellyfish, cycle and cycle-pair hosts, verifies arbitrary
//! labelings and decides small instances by exhaustive search.

pub mod bounds;
pub mod construct;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod search;
pub mod sqrt2;

pub use bounds::{beta, feasibility_filter, BoundReport, Feasibility};
pub use construct::{
    build_jellyfish_c3_labeling, construct_cycle, construct_union_cycle_c3, ConstructError, HostedLabeling,
};
pub use graph::{build, Edge, Family, Graph, GraphError};
pub use labeling::{EdgeLabeling, PhiProfile, VerifyReport};
pub use search::{oracle_enumerate, search_antimagic, tau_exact, SearchOutcome, SearchStatus, TauResult, TauValue};
pub use sqrt2::SqrtTwoNumber;
