//! Graph states and their local-equivalence structure: bit-packed GF(2)
//! linear algebra, local complementation orbits with witness sequences,
//! stabilizer check matrices and exhaustive group enumeration, the minimal
//! support condition, CSS distance arguments, entanglement measures, and the
//! check-matrix-to-graph reduction.

pub mod bits;
pub mod canon;
pub mod config;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod pauli;
pub mod stab;
pub mod lcequiv;
pub mod statevec;

pub use bits::BitVec;
pub use canon::{canonical_form, canonical_graph, canonical_relabeling, find_isomorphism, CanonicalKey};
pub use config::Limits;
pub use error::{Error, Result};
pub use gf2::{biclique_partition_number, boolean_rank, BitMatrix, RankSearch};
pub use graph::{make_family, FamilySpec, Graph};
pub use pauli::{CliffordGate, Letter, PauliElement, Phase};
pub use lcequiv::{
    lc_equivalent, lc_equivalent_iso, lc_orbit, lulc_certificate, paper_sequence, Certificate,
    LcOrbit, LcSequence, NamedSequence, Verdict,
};
pub use statevec::{minus_sign_count, StateVector};
pub use stab::{
    check_msc, distance, enumerate_stabilizer, lc_gate_sequence, minimal_elements,
    minimal_subgroup, schmidt_rank, support_subgroup, CheckMatrix, StabilizerGroup,
};
