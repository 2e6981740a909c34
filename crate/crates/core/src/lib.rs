//! Harmonic analysis on finite groups.
//!
//! The crate implements the group algebra `K[G] ≅ (Fun(G), ∗)` of a finite
//! group over `ℂ` (double precision), the Fourier transform
//! `Φ: Fun(G) → ⊕ᵢ End(Vᵢ)` onto the blocks cut out by a complete set of
//! irreducible matrix representations, its inverse, the n-point Plancherel
//! identity in plain and cyclic form, character theory (trace characters,
//! a coevaluation/evaluation pairing construction of the character, and
//! generic character tables via class-algebra splitting over a finite
//! field), and the periodic 1d Ising partition function evaluated three
//! independent ways as the flagship cross-check.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `ising-kitchen` crate.
//!
//! Groups are explicit multiplication tables over dense element indices
//! `0..order`. Everything downstream (functions, representations, spectral
//! data) refers to its group through an [`alloc::sync::Arc`], so all types
//! are cheap to share and safe for concurrent reads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod fourier;
pub mod group;
pub mod ising;
pub mod matrix;
pub mod repr;
pub mod rng;
pub mod tol;

/// Complex scalar used throughout: the coefficient field, `ℂ` in double
/// precision.
pub type C64 = num_complex::Complex<f64>;

pub use algebra::GroupFunction;
pub use fourier::{PlancherelMeasure, SpectralElement};
pub use group::FiniteGroup;
pub use matrix::Matrix;
pub use repr::{Character, CharacterTable, IrrepSet, MatrixRep};
pub use tol::Tolerances;
