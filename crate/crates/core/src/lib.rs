//! Kempe chains, Kempe classes, and frozen colourings of small graphs.
//!
//! Everything here is exact and exhaustive: colourings are enumerated in
//! full, Kempe classes are computed over the whole colouring space, and
//! chromatic and clique numbers come from complete search. Searches carry
//! caps and report exhaustion as [`Error::Resource`] rather than guessing.

pub mod bits;
pub mod colouring;
pub mod error;
pub mod exact;
pub mod families;
pub mod frozen;
pub mod graph;
pub mod hereditary;
pub mod io;
pub mod kempe;
mod union_find;
pub mod verify;

pub use bits::VertexSet;
pub use colouring::{
    colour_classes, count_colourings, enumerate_colourings, is_proper, partition_of, Colouring, Partition,
};
pub use error::{Error, Result};
pub use exact::{chromatic_number, clique_number, minimum_colouring};
pub use families::{apply_op_2k2, find_op2k2_candidates, FamilySpec, Op2K2Case, Op2K2Input};
pub use frozen::{
    build_not_kempe_class_certificate, is_frozen, is_kempe_frozen, is_kempe_frozen_clique_partition,
    NotKempeClassCertificate,
};
pub use graph::Graph;
pub use hereditary::{contains_induced, named_graph, small_graph_census, CensusReport};
pub use kempe::{
    are_kempe_equivalent, is_kempe_connected_at, kempe_chain, kempe_classes, kempe_neighbours, kempe_swap,
    KempeClassReport,
};
