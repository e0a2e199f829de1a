//! Clique extraction with certificates for graphs without an induced 4-cycle.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`], [`set`], [`c4`], [`oracle`]: representation, induced-C4
//!   detection and exact brute-force ground truth.
//! - [`generators`]: cycle powers, clique substitution, 5-wheel blow-ups and
//!   seeded random C4-free graphs.
//! - [`structure`]: decomposition of C4-free graphs with α ≤ 2.
//! - [`extraction`]: the certified clique extractors.
//! - [`io`], [`corpus`], [`harness`]: edge-list files, seeded test corpora and
//!   the batch verification suites.

pub mod c4;
pub mod corpus;
pub mod error;
pub mod extraction;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod set;
pub mod structure;

pub use c4::{find_induced_c4, is_c4_free, naive_find_induced_c4, FoundC4};
pub use error::{Error, Result};
pub use extraction::{
    best_pair_intersection, extract_auto, extract_dirac, extract_general, extract_general_with,
    extract_large_alpha, extract_regular, extract_regular_via_pair, extract_triple,
    find_dominating_nonadjacent_pair, CliqueCertificate, DominatingPair, IndependentSetSource,
    Method, Witness,
};
pub use generators::{
    clique_substitution, cycle_power, random_c4free, w5_blowup, wheel5, Probability,
    SubstitutionSpec,
};
pub use graph::{Graph, SetKind};
pub use io::{parse_graph, serialize_graph};
pub use oracle::{
    bipartition, find_independent_set_of_size, greedy_maximal_independent_set, max_clique_exact,
    max_independent_set_exact, Bipartition, DEFAULT_ORACLE_LIMIT,
};
pub use rational::Rational;
pub use set::VertexSet;
pub use structure::{
    alpha2_decompose, clique_from_certificate, structure_of, verify_certificate,
    CertificateViolation, StructureCertificate,
};

/// Largest vertex count the command-line tools accept.
pub const MAX_VERTICES: usize = 4096;

/// Version of the JSON certificate and report layouts.
pub const FORMAT_VERSION: u32 = 1;
