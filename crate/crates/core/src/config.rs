//! Search and enumeration limits.
//!
//! Every exhaustive routine in this crate is gated by one of these limits and
//! reports [`Error::ResourceLimit`](crate::Error::ResourceLimit) instead of
//! silently truncating when an input is too large.

/// Size caps for the exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Max qubit count for full stabilizer-group enumeration (2^n elements).
    pub enumeration: usize,
    /// Max qubit count for state-vector construction (2^n amplitudes).
    pub statevec: usize,
    /// Max vertex count for full LC-orbit enumeration.
    pub orbit: usize,
    /// Max vertex count for the Pauli-persistency search.
    pub pp: usize,
    /// Default cap for biclique cover/partition searches.
    pub bp_cap: usize,
    /// Max vertex count for exact canonical labeling.
    pub canon: usize,
    /// Cap on the number of labeled graphs an orbit enumeration may visit.
    pub orbit_members: usize,
    /// Cap on labeled graphs visited by the certificate's bounded orbit scan.
    pub certificate_scan: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 16,
            statevec: 14,
            orbit: 12,
            pp: 12,
            bp_cap: 8,
            canon: 12,
            orbit_members: 1 << 20,
            certificate_scan: 20_000,
        }
    }
}

impl Limits {
    /// Limits relaxed enough for quick unit-test work on tiny inputs.
    pub fn desk() -> Self {
        Self::default()
    }
}
