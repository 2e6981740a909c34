//! Deterministic pseudo-random stream.
//!
//! The crate never uses an OS or library RNG: reproducibility of seeded
//! test data across platforms and crate versions is part of the contract,
//! so the generator is pinned here explicitly.
//!
//! The stream is SplitMix64 (Steele, Lea & Flood's `splitmix64`): state
//! advances by the additive constant `0x9E3779B97F4A7C15` and each output
//! is the finalizer
//! `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31`.
//! Floats in `[-1, 1)` take the top 53 bits as a uniform in `[0, 1)` and
//! rescale.

/// SplitMix64 generator. Same seed ⇒ same stream, on every platform.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[-1, 1)`, from the top 53 bits of one output.
    pub fn next_signed_unit(&mut self) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        2.0 * u - 1.0
    }

    /// Uniform index in `0..bound` (`bound > 0`) by rejection-free widening
    /// multiply; bias is < 2⁻⁶⁴·bound, irrelevant at group-order scale.
    pub fn next_index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (((self.next_u64() as u128) * (bound as u128)) >> 64) as usize
    }
}
