//! The Fourier transform onto spectral blocks and the Plancherel identity.
//!
//! Against a validated irrep set `{ρᵢ}`, the transform sends a function to
//! one block per irreducible, `Φ(α)ᵢ = Σ_g α(g)·ρᵢ(g)`, turning convolution
//! into blockwise matrix product. Its inverse reads coefficients back off
//! traces, `Φ⁻¹(φ)(g) = (1/|G|) Σᵢ dᵢ·tr(ρᵢ(g⁻¹)·φᵢ)`. The n-point
//! Plancherel identity equates the counit of an n-fold convolution with
//! the Plancherel-weighted trace of the ordered block product; its cyclic
//! form trades the counit for a full `|G|ⁿ` lattice sum. The abelian
//! specialization works straight off a character table with no matrices.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{convolve_n, AlgebraError, GroupFunction};
use crate::group::same_group;
use crate::matrix::Matrix;
use crate::repr::{CharacterTable, IrrepSet};
use crate::C64;

/// Iteration guard for the brute-force cyclic sum.
const CYCLIC_SUM_MAX_ITERATIONS: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FourierError {
    #[error("function and irrep set live on different groups")]
    GroupMismatch,
    #[error("spectral elements belong to different irrep sets")]
    IrrepSetMismatch,
    #[error("empty list of functions")]
    EmptyList,
    #[error("cyclic sum would need {needed} iterations (limit {limit})")]
    TooLarge { needed: u128, limit: u64 },
    #[error("operation requires an abelian group")]
    NotAbelian,
    #[error("expected {expected} spectral values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

impl From<AlgebraError> for FourierError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::EmptyList => FourierError::EmptyList,
            _ => FourierError::GroupMismatch,
        }
    }
}

// ----------------------------------------------------------------------
// Spectral elements
// ----------------------------------------------------------------------

/// An element of `⊕ᵢ End(Vᵢ)`: one `dᵢ×dᵢ` block per irreducible, in the
/// canonical order of the irrep set.
#[derive(Debug, Clone)]
pub struct SpectralElement {
    irreps: Arc<IrrepSet>,
    blocks: Vec<Matrix>,
}

impl SpectralElement {
    /// Wrap explicit blocks; shapes must match the irrep set.
    pub fn new(irreps: Arc<IrrepSet>, blocks: Vec<Matrix>) -> Result<Self, FourierError> {
        if blocks.len() != irreps.len() {
            return Err(FourierError::LengthMismatch {
                expected: irreps.len(),
                got: blocks.len(),
            });
        }
        for (rep, block) in irreps.irreps().iter().zip(&blocks) {
            if block.rows() != rep.dim() || block.cols() != rep.dim() {
                return Err(FourierError::LengthMismatch {
                    expected: rep.dim(),
                    got: block.rows(),
                });
            }
        }
        Ok(SpectralElement { irreps, blocks })
    }

    /// The unit: identity in every block.
    pub fn unit(irreps: Arc<IrrepSet>) -> Self {
        let blocks = irreps
            .irreps()
            .iter()
            .map(|r| Matrix::identity(r.dim()))
            .collect();
        SpectralElement { irreps, blocks }
    }

    pub fn irreps(&self) -> &Arc<IrrepSet> {
        &self.irreps
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Matrix {
        &self.blocks[i]
    }

    fn compatible(&self, other: &SpectralElement) -> bool {
        Arc::ptr_eq(&self.irreps, &other.irreps)
            || (same_group(self.irreps.group(), other.irreps.group())
                && self.irreps.dims() == other.irreps.dims())
    }

    /// Blockwise matrix product (the algebra structure of `⊕ᵢ End(Vᵢ)`).
    pub fn mul(&self, other: &SpectralElement) -> Result<SpectralElement, FourierError> {
        if !self.compatible(other) {
            return Err(FourierError::IrrepSetMismatch);
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(SpectralElement {
            irreps: Arc::clone(&self.irreps),
            blocks,
        })
    }

    pub fn add(&self, other: &SpectralElement) -> Result<SpectralElement, FourierError> {
        if !self.compatible(other) {
            return Err(FourierError::IrrepSetMismatch);
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(SpectralElement {
            irreps: Arc::clone(&self.irreps),
            blocks,
        })
    }

    pub fn scale(&self, s: C64) -> SpectralElement {
        let blocks = self.blocks.iter().map(|b| b.scale(s)).collect();
        SpectralElement {
            irreps: Arc::clone(&self.irreps),
            blocks,
        }
    }

    /// Largest entry modulus across blocks.
    pub fn max_norm(&self) -> f64 {
        self.blocks.iter().map(Matrix::max_abs).fold(0.0, f64::max)
    }

    /// Largest entrywise difference across blocks.
    pub fn max_diff(&self, other: &SpectralElement) -> f64 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.max_diff(b))
            .fold(0.0, f64::max)
    }
}

/// The Plancherel weights `μ(i) = dᵢ²/|G|` on the index set of irreducibles.
#[derive(Debug, Clone, PartialEq)]
pub struct PlancherelMeasure {
    weights: Vec<f64>,
}

impl PlancherelMeasure {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }
}

// ----------------------------------------------------------------------
// The transform
// ----------------------------------------------------------------------

/// `Φ(α)ᵢ = Σ_g α(g)·ρᵢ(g)`, summed in ascending element order.
pub fn fourier(a: &GroupFunction, irreps: &Arc<IrrepSet>) -> Result<SpectralElement, FourierError> {
    if !same_group(a.group(), irreps.group()) {
        return Err(FourierError::GroupMismatch);
    }
    let blocks = irreps
        .irreps()
        .iter()
        .map(|rep| {
            let mut acc = Matrix::zeros(rep.dim(), rep.dim());
            for g in 0..a.group().order() {
                acc.add_scaled(a.value(g), rep.image(g));
            }
            acc
        })
        .collect();
    Ok(SpectralElement {
        irreps: Arc::clone(irreps),
        blocks,
    })
}

/// `Φ⁻¹(φ)(g) = (1/|G|) Σᵢ dᵢ·tr(ρᵢ(g⁻¹)·φᵢ)`.
pub fn inverse_fourier(phi: &SpectralElement) -> GroupFunction {
    let irreps = &phi.irreps;
    let group = irreps.group();
    let n = group.order();
    let values: Vec<C64> = (0..n)
        .map(|g| {
            let ginv = group.inv(g);
            let mut acc = C64::new(0.0, 0.0);
            for (rep, block) in irreps.irreps().iter().zip(&phi.blocks) {
                acc += (rep.dim() as f64) * rep.image(ginv).mul(block).trace();
            }
            acc / n as f64
        })
        .collect();
    GroupFunction::new(Arc::clone(group), values).expect("transform output is well-formed")
}

pub fn plancherel_measure(irreps: &IrrepSet) -> PlancherelMeasure {
    let order = irreps.group().order() as f64;
    let weights = irreps
        .irreps()
        .iter()
        .map(|r| (r.dim() * r.dim()) as f64 / order)
        .collect();
    PlancherelMeasure { weights }
}

/// The trace on the spectral side: `(φᵢ) ↦ (1/|G|) Σᵢ dᵢ·tr(φᵢ)`, the
/// Plancherel-measure integral of the dimension-normalized block traces.
pub fn spectral_trace(phi: &SpectralElement) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for (rep, block) in phi.irreps.irreps().iter().zip(&phi.blocks) {
        acc += (rep.dim() as f64) * block.trace();
    }
    acc / phi.irreps.group().order() as f64
}

// ----------------------------------------------------------------------
// Plancherel identities
// ----------------------------------------------------------------------

/// Both sides of the n-point Plancherel identity and their gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlancherelCheck {
    /// `(θ₁ ∗ ⋯ ∗ θₙ)(1_G)`.
    pub lhs: C64,
    /// `(1/|G|) Σᵢ dᵢ·tr(Φ(θ₁)ᵢ ∘ ⋯ ∘ Φ(θₙ)ᵢ)`.
    pub rhs: C64,
    /// `|lhs − rhs|`.
    pub gap: f64,
}

/// Evaluate the n-point Plancherel identity on the given tuple: the counit
/// of the n-fold convolution against the spectral trace of the ordered
/// block product `Φ(θ₁)·Φ(θ₂)⋯`.
pub fn plancherel_npoint(
    thetas: &[GroupFunction],
    irreps: &Arc<IrrepSet>,
) -> Result<PlancherelCheck, FourierError> {
    if thetas.is_empty() {
        return Err(FourierError::EmptyList);
    }
    let lhs = convolve_n(thetas)?.counit();
    let mut product = fourier(&thetas[0], irreps)?;
    for theta in &thetas[1..] {
        product = product.mul(&fourier(theta, irreps)?)?;
    }
    let rhs = spectral_trace(&product);
    Ok(PlancherelCheck {
        lhs,
        rhs,
        gap: (lhs - rhs).norm(),
    })
}

/// The cyclic-form left-hand side
/// `Σ_{g₁..gₙ} θ₁(g₁⁻¹g₂)·θ₂(g₂⁻¹g₃)⋯θₙ(gₙ⁻¹g₁)` by direct `|G|ⁿ` loop,
/// tuples enumerated with the last coordinate fastest. Equals `|G|` times
/// the plain n-point left-hand side, and the unnormalized spectral trace.
pub fn cyclic_sum(thetas: &[GroupFunction]) -> Result<C64, FourierError> {
    let first = thetas.first().ok_or(FourierError::EmptyList)?;
    let group = first.group();
    if !thetas.iter().all(|t| same_group(t.group(), group)) {
        return Err(FourierError::GroupMismatch);
    }
    let n = thetas.len();
    let order = group.order();
    let needed = (order as u128).pow(n as u32);
    if needed > CYCLIC_SUM_MAX_ITERATIONS as u128 {
        return Err(FourierError::TooLarge {
            needed,
            limit: CYCLIC_SUM_MAX_ITERATIONS,
        });
    }
    let mut tuple = alloc::vec![0usize; n];
    let mut acc = C64::new(0.0, 0.0);
    loop {
        let mut term = C64::new(1.0, 0.0);
        for (m, theta) in thetas.iter().enumerate() {
            let g = tuple[m];
            let g_next = tuple[(m + 1) % n];
            term *= theta.value(group.mul(group.inv(g), g_next));
        }
        acc += term;
        // Odometer increment, last coordinate fastest.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(acc);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < order {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

// ----------------------------------------------------------------------
// Abelian specialization
// ----------------------------------------------------------------------

/// A function on the dual (one value per character-table row).
#[derive(Debug, Clone, PartialEq)]
pub struct DualFunction {
    values: Vec<C64>,
}

impl DualFunction {
    pub fn new(values: Vec<C64>) -> Self {
        DualFunction { values }
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn value(&self, chi: usize) -> C64 {
        self.values[chi]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_diff(&self, other: &DualFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Abelian transform `Φ(α)(χ) = Σ_g α(g)·χ(g)`, one value per table row.
pub fn abelian_fourier(
    a: &GroupFunction,
    table: &CharacterTable,
) -> Result<DualFunction, FourierError> {
    if !same_group(a.group(), table.group()) {
        return Err(FourierError::GroupMismatch);
    }
    if !a.group().is_abelian() {
        return Err(FourierError::NotAbelian);
    }
    let group = a.group();
    let values = table
        .rows()
        .iter()
        .map(|chi| (0..group.order()).map(|g| a.value(g) * chi.value(g)).sum())
        .collect();
    Ok(DualFunction { values })
}

/// Abelian inverse `Φ⁻¹(f)(g) = (1/|G|) Σ_χ χ(g⁻¹)·f(χ)`.
pub fn abelian_inverse_fourier(
    f: &DualFunction,
    table: &CharacterTable,
) -> Result<GroupFunction, FourierError> {
    let group = table.group();
    if !group.is_abelian() {
        return Err(FourierError::NotAbelian);
    }
    if f.len() != table.rows().len() {
        return Err(FourierError::LengthMismatch {
            expected: table.rows().len(),
            got: f.len(),
        });
    }
    let n = group.order();
    let values: Vec<C64> = (0..n)
        .map(|g| {
            let ginv = group.inv(g);
            let mut acc = C64::new(0.0, 0.0);
            for (chi, &fv) in table.rows().iter().zip(f.values()) {
                acc += chi.value(ginv) * fv;
            }
            acc / n as f64
        })
        .collect();
    GroupFunction::new(Arc::clone(group), values).map_err(|_| FourierError::GroupMismatch)
}

// ----------------------------------------------------------------------
// Centre diagnostics
// ----------------------------------------------------------------------

/// Outcome of checking that a function's transform is scalar in every
/// block (Schur: exactly the central functions do this).
#[derive(Debug, Clone)]
pub struct CenterCheck {
    /// Whether the input was a class function to begin with.
    pub class_function: bool,
    /// Per-block distance from the nearest scalar multiple of the identity,
    /// `‖φᵢ − (tr φᵢ / dᵢ)·I‖_∞`.
    pub block_deviations: Vec<f64>,
    pub max_deviation: f64,
    /// `class_function` and every deviation within tolerance.
    pub passed: bool,
}

/// Transform `a` and measure how far each block is from scalar.
pub fn center_diagonal_check(
    a: &GroupFunction,
    irreps: &Arc<IrrepSet>,
    tol: f64,
) -> Result<CenterCheck, FourierError> {
    let phi = fourier(a, irreps)?;
    let block_deviations: Vec<f64> = phi
        .blocks()
        .iter()
        .map(|block| {
            let d = block.rows();
            let scalar = block.trace() / d as f64;
            let nearest = Matrix::identity(d).scale(scalar);
            block.max_diff(&nearest)
        })
        .collect();
    let max_deviation = block_deviations.iter().copied().fold(0.0, f64::max);
    let class_function = a.is_class_function(tol);
    Ok(CenterCheck {
        class_function,
        block_deviations,
        max_deviation,
        passed: class_function && max_deviation <= tol,
    })
}
