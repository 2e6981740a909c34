//! Central tolerance configuration.
//!
//! Every approximate comparison in the crate takes an explicit tolerance;
//! the defaults live here in one record so tests, the CLI and downstream
//! users pull thresholds from a single place instead of scattering magic
//! numbers. Absolute tolerances are meant to be scaled by the sup-norms of
//! the inputs (and by the number of terms summed, where a bound is needed);
//! the call sites document the scale they apply.

/// Default tolerances for the whole crate.
///
/// All comparisons are absolute after scaling by input magnitudes. The
/// values are far above f64 rounding for the group orders in scope
/// (|G| ≤ 720) and far below any structural discrepancy they guard against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Base tolerance for algebraic identities checked on computed data
    /// (convolution associativity, Fourier homomorphism, Plancherel gap).
    pub identity: f64,
    /// Round trips through a transform and its inverse.
    pub roundtrip: f64,
    /// Trace preservation `counit(a) = spectral_trace(Φ(a))`.
    pub trace: f64,
    /// Pointwise agreement of the pairing-chain character with the trace
    /// character.
    pub character_diagram: f64,
    /// Constancy of traces on conjugacy classes when collapsing a character.
    pub class_constancy: f64,
    /// Per-entry homomorphism defect allowed when validating a
    /// representation.
    pub rep_homomorphism: f64,
    /// Minimum |det| for a representation image to count as invertible.
    pub rep_invertibility: f64,
    /// `|⟨χ,χ⟩ − 1|` bound for the irreducibility test.
    pub irreducibility: f64,
    /// Pairwise character orthonormality inside a validated irrep set.
    pub char_orthonormality: f64,
    /// Row/column orthogonality of a character table, and agreement of a
    /// computed table with a catalog-derived one.
    pub char_table: f64,
    /// Deviation of a central element's Fourier blocks from scalar matrices.
    pub schur_scalar: f64,
    /// Total mass of the Plancherel measure.
    pub measure_sum: f64,
}

impl Tolerances {
    /// The standard configuration used by default everywhere.
    pub const STANDARD: Tolerances = Tolerances {
        identity: 1e-9,
        roundtrip: 1e-10,
        trace: 1e-10,
        character_diagram: 1e-12,
        class_constancy: 1e-9,
        rep_homomorphism: 1e-10,
        rep_invertibility: 1e-10,
        irreducibility: 1e-6,
        char_orthonormality: 1e-8,
        char_table: 1e-6,
        schur_scalar: 1e-9,
        measure_sum: 1e-12,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::STANDARD
    }
}
