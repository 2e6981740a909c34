//! Matrix representations, characters, and character tables.
//!
//! A [`MatrixRep`] assigns one complex matrix per group element; an
//! [`IrrepSet`] is a validated complete list of irreducible ones (sum of
//! squared dimensions equal to the group order, orthonormal characters)
//! in a canonical order, which is what the Fourier transform consumes.
//! Characters come in two independent forms: the trace of the images, and
//! the coevaluation/rotation/evaluation pairing chain evaluated in
//! coordinates (they must agree, and tests hold them to that). Character
//! tables are computed generically by splitting the class algebra over a
//! finite field and lifting eigenvalues to complex roots of unity, so no
//! matrix irreps are needed for them.

mod catalog;
mod dixon;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::group::{same_group, FiniteGroup};
use crate::matrix::Matrix;
use crate::tol::Tolerances;
use crate::C64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReprError {
    #[error("representations live on different groups")]
    GroupMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("no catalog irreps for this group; supply them explicitly")]
    NoCatalog,
    #[error(
        "incomplete irrep set: sum of squared dimensions {sum_of_squares} != group order {order}"
    )]
    IncompleteSet { sum_of_squares: usize, order: usize },
    #[error("redundant irrep set: members {first} and {second} have equal characters")]
    RedundantSet { first: usize, second: usize },
    #[error("member {index} is not irreducible")]
    NotIrreducible { index: usize },
    #[error("member {index} fails representation validation: {detail}")]
    FailedValidation { index: usize, detail: String },
    #[error("character table computation failed; primes tried: {primes:?}")]
    ComputationFailed { primes: Vec<u64> },
}

// ----------------------------------------------------------------------
// Matrix representations
// ----------------------------------------------------------------------

/// A representation `g ↦ images[g]` by square complex matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    images: Vec<Matrix>,
}

/// Outcome of checking the representation axioms numerically.
#[derive(Debug, Clone)]
pub struct RepValidation {
    pub passed: bool,
    /// Largest per-entry defect found across all checks.
    pub worst_violation: f64,
    /// Element pair at which the worst homomorphism defect occurred.
    pub witness: Option<(usize, usize)>,
    pub detail: String,
}

impl MatrixRep {
    /// Wrap explicit images; rejects shape mismatches and non-finite
    /// entries. Axioms are checked separately by [`MatrixRep::validate`].
    pub fn new(group: Arc<FiniteGroup>, images: Vec<Matrix>) -> Result<Self, ReprError> {
        if images.len() != group.order() {
            return Err(ReprError::InvalidRepresentation(alloc::format!(
                "expected {} images, got {}",
                group.order(),
                images.len()
            )));
        }
        let dim = images[0].rows();
        if dim == 0 {
            return Err(ReprError::InvalidRepresentation(String::from(
                "representation dimension must be positive",
            )));
        }
        for (g, m) in images.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(ReprError::InvalidRepresentation(alloc::format!(
                    "image of element {g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_finite() {
                return Err(ReprError::InvalidRepresentation(alloc::format!(
                    "image of element {g} has non-finite entries"
                )));
            }
        }
        Ok(MatrixRep { group, dim, images })
    }

    /// The one-dimensional trivial representation.
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let images = (0..group.order()).map(|_| Matrix::identity(1)).collect();
        MatrixRep {
            group,
            dim: 1,
            images,
        }
    }

    /// The left regular representation: `ρ(g)` permutes basis vectors by
    /// left multiplication, `ρ(g)e_h = e_{gh}`.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let images = (0..n)
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for h in 0..n {
                    m.set(group.mul(g, h), h, C64::new(1.0, 0.0));
                }
                m
            })
            .collect();
        MatrixRep {
            group,
            dim: n,
            images,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, g: usize) -> &Matrix {
        &self.images[g]
    }

    /// Check the representation axioms: exact identity image, image of a
    /// product equal to the product of images within `tol.rep_homomorphism`
    /// per entry, and every image invertible (`|det| > tol.rep_invertibility`).
    pub fn validate(&self, tol: &Tolerances) -> RepValidation {
        let n = self.group.order();
        let id = Matrix::identity(self.dim);
        if self.images[self.group.identity()] != id {
            return RepValidation {
                passed: false,
                worst_violation: self.images[self.group.identity()].max_diff(&id),
                witness: None,
                detail: String::from("image of the identity is not the identity matrix"),
            };
        }
        let mut worst = 0.0f64;
        let mut witness = None;
        for g in 0..n {
            for h in 0..n {
                let defect = self.images[self.group.mul(g, h)]
                    .max_diff(&self.images[g].mul(&self.images[h]));
                if defect > worst {
                    worst = defect;
                    witness = Some((g, h));
                }
            }
        }
        if worst > tol.rep_homomorphism {
            let (g, h) = witness.expect("worst > 0 implies a witness");
            return RepValidation {
                passed: false,
                worst_violation: worst,
                witness,
                detail: alloc::format!(
                    "not a homomorphism: image of product differs at pair ({g}, {h})"
                ),
            };
        }
        for g in 0..n {
            let det = self.images[g].det().norm();
            if det <= tol.rep_invertibility {
                return RepValidation {
                    passed: false,
                    worst_violation: det,
                    witness: Some((g, g)),
                    detail: alloc::format!("image of element {g} is singular (|det| = {det:e})"),
                };
            }
        }
        RepValidation {
            passed: true,
            worst_violation: worst,
            witness,
            detail: String::from("ok"),
        }
    }

    /// Trace character, collapsed to one value per conjugacy class after
    /// verifying constancy on classes within `tol.class_constancy`.
    pub fn character(&self, tol: &Tolerances) -> Result<Character, ReprError> {
        let traces: Vec<C64> = self.images.iter().map(Matrix::trace).collect();
        let mut values = Vec::with_capacity(self.group.class_count());
        for class in self.group.classes() {
            let v0 = traces[class[0]];
            for &g in class {
                if (traces[g] - v0).norm() > tol.class_constancy {
                    return Err(ReprError::InvalidRepresentation(alloc::format!(
                        "trace is not constant on the class of element {}",
                        class[0]
                    )));
                }
            }
            values.push(v0);
        }
        Character::new(Arc::clone(&self.group), values)
    }

    /// The character evaluated through the pairing chain
    /// `(ev ⊗ ev) ∘ τ ∘ (coev ⊗ coev)` in coordinates: form the coefficient
    /// tensor of `ρ(g) ⊗ id`, rotate the tensor factors, and contract both
    /// with the trace pairing `ev(e^a ⊗ e_b) = δ_ab`. Independent of
    /// [`MatrixRep::character`]; the two must agree pointwise.
    pub fn character_via_diagram(&self, g: usize) -> C64 {
        let d = self.dim;
        let rho_g = &self.images[g];
        let id = Matrix::identity(d);
        let ev = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
        let mut acc = C64::new(0.0, 0.0);
        // coefficients of (e_i ⊗ e^j) ⊗ (e_k ⊗ e^l); the rotation sends this
        // to (e^j ⊗ e_k) ⊗ (e^l ⊗ e_i), evaluated as δ^j_k · δ^l_i.
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let coeff = rho_g.get(i, j) * id.get(k, l);
                        acc += coeff * ev(j, k) * ev(l, i);
                    }
                }
            }
        }
        acc
    }

    /// `|⟨χ,χ⟩ − 1| ≤ tol.irreducibility` on the character norm.
    pub fn is_irreducible(&self, tol: &Tolerances) -> Result<bool, ReprError> {
        let chi = self.character(tol)?;
        let norm = chi.inner_product(&chi)?;
        Ok((norm - C64::new(1.0, 0.0)).norm() <= tol.irreducibility)
    }
}

// ----------------------------------------------------------------------
// Characters
// ----------------------------------------------------------------------

/// A class function recorded per conjugacy class, with an integer
/// dimension in the identity slot.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    group: Arc<FiniteGroup>,
    values: Vec<C64>,
}

impl Character {
    /// Wrap per-class values; the identity-class entry must be a positive
    /// integer within 1e-9 (the dimension of the underlying module).
    pub fn new(group: Arc<FiniteGroup>, values: Vec<C64>) -> Result<Self, ReprError> {
        if values.len() != group.class_count() {
            return Err(ReprError::InvalidRepresentation(alloc::format!(
                "expected {} class values, got {}",
                group.class_count(),
                values.len()
            )));
        }
        let at_identity = values[0];
        let rounded = libm::round(at_identity.re);
        if at_identity.im.abs() > 1e-9 || (at_identity.re - rounded).abs() > 1e-9 || rounded < 1.0 {
            return Err(ReprError::InvalidRepresentation(alloc::format!(
                "identity value {at_identity} is not a positive integer"
            )));
        }
        Ok(Character { group, values })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Value on class `c`.
    pub fn class_value(&self, c: usize) -> C64 {
        self.values[c]
    }

    /// Value at the element `g` (through its class).
    pub fn value(&self, g: usize) -> C64 {
        self.values[self.group.class_of(g)]
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Dimension of the underlying module: the identity-class value.
    pub fn dimension(&self) -> usize {
        libm::round(self.values[0].re) as usize
    }

    /// `⟨χ₁,χ₂⟩ = (1/|G|) Σ_c |c| χ₁(c) conj(χ₂(c))`.
    pub fn inner_product(&self, other: &Character) -> Result<C64, ReprError> {
        if !same_group(&self.group, &other.group) {
            return Err(ReprError::GroupMismatch);
        }
        let mut acc = C64::new(0.0, 0.0);
        for (c, class) in self.group.classes().iter().enumerate() {
            acc += (class.len() as f64) * self.values[c] * other.values[c].conj();
        }
        Ok(acc / self.group.order() as f64)
    }
}

/// Order complex character values by real part then imaginary part, with a
/// dead zone so floating noise cannot flip the comparison. Character values
/// that differ at all differ by at least the spacing of roots of unity at
/// the group exponent, far above this threshold.
fn cmp_c64(a: C64, b: C64) -> core::cmp::Ordering {
    const EPS: f64 = 1e-6;
    if (a.re - b.re).abs() > EPS {
        a.re.total_cmp(&b.re)
    } else if (a.im - b.im).abs() > EPS {
        a.im.total_cmp(&b.im)
    } else {
        core::cmp::Ordering::Equal
    }
}

/// Canonical character order: dimension ascending, then lexicographic on
/// class values with larger values first, so the trivial character (all
/// ones, the maximum in every slot) leads its dimension block.
fn cmp_characters(a: &Character, b: &Character) -> core::cmp::Ordering {
    a.dimension().cmp(&b.dimension()).then_with(|| {
        for (&x, &y) in a.values.iter().zip(&b.values) {
            let ord = cmp_c64(y, x);
            if ord != core::cmp::Ordering::Equal {
                return ord;
            }
        }
        core::cmp::Ordering::Equal
    })
}

// ----------------------------------------------------------------------
// Irrep sets
// ----------------------------------------------------------------------

/// A validated complete set of irreducible representations, sorted in the
/// canonical order (dimension ascending, then lexicographic character
/// values). This fixes the index set for spectral data.
#[derive(Debug, Clone)]
pub struct IrrepSet {
    group: Arc<FiniteGroup>,
    irreps: Vec<MatrixRep>,
    characters: Vec<Character>,
}

impl IrrepSet {
    /// Validate and canonically order a user-supplied list: same group,
    /// every member a representation, irreducible, completeness
    /// `Σ dᵢ² = |G|`, and pairwise orthogonal characters.
    pub fn from_user(reps: Vec<MatrixRep>, tol: &Tolerances) -> Result<Self, ReprError> {
        let first_group = match reps.first() {
            Some(r) => Arc::clone(r.group()),
            None => {
                return Err(ReprError::IncompleteSet {
                    sum_of_squares: 0,
                    order: 0,
                });
            }
        };
        if !reps.iter().all(|r| same_group(r.group(), &first_group)) {
            return Err(ReprError::GroupMismatch);
        }
        for (index, rep) in reps.iter().enumerate() {
            let report = rep.validate(tol);
            if !report.passed {
                return Err(ReprError::FailedValidation {
                    index,
                    detail: report.detail,
                });
            }
            if !rep.is_irreducible(tol)? {
                return Err(ReprError::NotIrreducible { index });
            }
        }
        let sum_of_squares: usize = reps.iter().map(|r| r.dim() * r.dim()).sum();
        if sum_of_squares != first_group.order() {
            return Err(ReprError::IncompleteSet {
                sum_of_squares,
                order: first_group.order(),
            });
        }
        let characters: Vec<Character> = reps
            .iter()
            .map(|r| r.character(tol))
            .collect::<Result<_, _>>()?;
        for i in 0..characters.len() {
            for j in i + 1..characters.len() {
                let ip = characters[i].inner_product(&characters[j])?;
                if ip.norm() > tol.char_orthonormality {
                    // Two valid irreducibles with non-orthogonal characters
                    // are equivalent, i.e. the list repeats a class.
                    return Err(ReprError::RedundantSet {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let mut order: Vec<usize> = (0..reps.len()).collect();
        order.sort_by(|&i, &j| cmp_characters(&characters[i], &characters[j]));
        let mut irreps = Vec::with_capacity(reps.len());
        let mut chars = Vec::with_capacity(reps.len());
        let mut reps = reps.into_iter().map(Some).collect::<Vec<_>>();
        for &i in &order {
            irreps.push(reps[i].take().expect("each index taken once"));
            chars.push(characters[i].clone());
        }
        Ok(IrrepSet {
            group: first_group,
            irreps,
            characters: chars,
        })
    }

    /// The built-in complete irrep list for groups constructed by this
    /// crate: cyclic, `μ₂`, dihedral, `S₃` (as a dihedral presentation), and
    /// direct products of those. Runs the full [`IrrepSet::from_user`]
    /// validation before returning.
    pub fn catalog(group: &Arc<FiniteGroup>) -> Result<Self, ReprError> {
        let reps = catalog::catalog_reps(group)?;
        Self::from_user(reps, &Tolerances::STANDARD)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn irreps(&self) -> &[MatrixRep] {
        &self.irreps
    }

    pub fn irrep(&self, i: usize) -> &MatrixRep {
        &self.irreps[i]
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(MatrixRep::dim).collect()
    }
}

// ----------------------------------------------------------------------
// Character tables
// ----------------------------------------------------------------------

/// Irreducible characters as rows over the conjugacy classes, in canonical
/// row order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    class_sizes: Vec<usize>,
    rows: Vec<Character>,
}

impl CharacterTable {
    /// Compute the table generically: build class multiplication matrices,
    /// split their common eigenspaces over a prime field `F_p` with
    /// `p ≡ 1 (mod exponent)` and `p > 2√|G|`, and lift the eigenvalues to
    /// complex roots of unity through a fixed primitive-root
    /// correspondence. Needs no matrix irreps.
    pub fn compute(group: &Arc<FiniteGroup>) -> Result<Self, ReprError> {
        let raw_rows = dixon::character_table_rows(group)?;
        let mut rows = raw_rows
            .into_iter()
            .map(|values| Character::new(Arc::clone(group), values))
            .collect::<Result<Vec<_>, _>>()?;
        rows.sort_by(cmp_characters);
        Ok(CharacterTable {
            group: Arc::clone(group),
            class_sizes: group.classes().iter().map(Vec::len).collect(),
            rows,
        })
    }

    /// Assemble the table from a validated irrep set (rows are the cached
    /// characters, already canonically ordered).
    pub fn from_irreps(irreps: &IrrepSet) -> Self {
        CharacterTable {
            group: Arc::clone(irreps.group()),
            class_sizes: irreps.group().classes().iter().map(Vec::len).collect(),
            rows: irreps.characters().to_vec(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(Character::dimension).collect()
    }

    /// Worst deviation of `Σ_c |c| χ_r(c) conj(χ_s(c))` from `|G| δ_rs`.
    pub fn row_orthogonality_defect(&self) -> f64 {
        let n = self.group.order() as f64;
        let mut worst = 0.0f64;
        for r in 0..self.rows.len() {
            for s in 0..self.rows.len() {
                let ip = self.rows[r]
                    .inner_product(&self.rows[s])
                    .expect("same group");
                let expected = if r == s {
                    C64::new(1.0, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                };
                worst = worst.max((ip - expected).norm() * n);
            }
        }
        worst
    }

    /// Worst deviation of `Σ_t χ_t(c) conj(χ_t(c'))` from `δ_cc' |G|/|c|`.
    pub fn column_orthogonality_defect(&self) -> f64 {
        let k = self.class_sizes.len();
        let mut worst = 0.0f64;
        for c in 0..k {
            for c2 in 0..k {
                let mut acc = C64::new(0.0, 0.0);
                for row in &self.rows {
                    acc += row.class_value(c) * row.class_value(c2).conj();
                }
                let expected = if c == c2 {
                    C64::new(self.group.order() as f64 / self.class_sizes[c] as f64, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                };
                worst = worst.max((acc - expected).norm());
            }
        }
        worst
    }

    /// Largest distance between matching rows of two tables over the same
    /// group, after the best row pairing (both tables are canonically
    /// sorted, but degenerate orderings are resolved by greedy matching).
    pub fn max_row_distance(&self, other: &CharacterTable) -> f64 {
        assert_eq!(
            self.rows.len(),
            other.rows.len(),
            "tables of different shapes"
        );
        let k = self.rows.len();
        let dist = |a: &Character, b: &Character| -> f64 {
            a.values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max)
        };
        let mut used = alloc::vec![false; k];
        let mut worst = 0.0f64;
        for row in &self.rows {
            let mut best = f64::INFINITY;
            let mut best_j = None;
            for (j, other_row) in other.rows.iter().enumerate() {
                if used[j] {
                    continue;
                }
                let d = dist(row, other_row);
                if d < best {
                    best = d;
                    best_j = Some(j);
                }
            }
            used[best_j.expect("row available")] = true;
            worst = worst.max(best);
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use alloc::vec;

    fn tol() -> Tolerances {
        Tolerances::STANDARD
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn trivial_rep_validates_everywhere() {
        for g in [
            FiniteGroup::cyclic(5).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
        ] {
            let rep = MatrixRep::trivial(g);
            let report = rep.validate(&tol());
            assert!(report.passed, "{}", report.detail);
        }
    }

    #[test]
    fn sign_rep_of_mu2_validates() {
        let mu2 = FiniteGroup::mu2();
        let images = vec![Matrix::identity(1), Matrix::identity(1).scale(c(-1.0, 0.0))];
        let rep = MatrixRep::new(mu2, images).unwrap();
        assert!(rep.validate(&tol()).passed);
        assert!(rep.is_irreducible(&tol()).unwrap());
    }

    #[test]
    fn non_homomorphism_fails_validation() {
        // (-1) ↦ [2] is not a homomorphism: 2·2 != 1.
        let mu2 = FiniteGroup::mu2();
        let images = vec![Matrix::identity(1), Matrix::identity(1).scale(c(2.0, 0.0))];
        let rep = MatrixRep::new(mu2, images).unwrap();
        let report = rep.validate(&tol());
        assert!(!report.passed);
        assert!(report.witness.is_some());
        assert!(report.worst_violation > 1.0);
    }

    #[test]
    fn regular_character_counts_fixed_points() {
        // tr of a permutation matrix counts fixed points; only the identity
        // fixes everything, so the character is (|G|, 0, ..., 0).
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let reg = MatrixRep::regular(Arc::clone(&s3));
        let chi = reg.character(&tol()).unwrap();
        assert_eq!(chi.dimension(), 6);
        assert_eq!(chi.class_value(0), c(6.0, 0.0));
        for cidx in 1..s3.class_count() {
            assert!(chi.class_value(cidx).norm() < 1e-12);
        }
    }

    #[test]
    fn diagram_character_equals_trace_character() {
        let groups = [
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::mu2(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
        ];
        for g in groups {
            let set = IrrepSet::catalog(&g).unwrap();
            for rep in set.irreps() {
                let chi = rep.character(&tol()).unwrap();
                for elem in 0..g.order() {
                    let via_diagram = rep.character_via_diagram(elem);
                    assert!(
                        (via_diagram - chi.value(elem)).norm() <= 1e-12,
                        "diagram character deviates at element {elem}"
                    );
                }
            }
        }
    }

    #[test]
    fn diagram_character_on_regular_rep_of_z3() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let reg = MatrixRep::regular(Arc::clone(&z3));
        // At a generator the permutation has no fixed points.
        assert!(reg.character_via_diagram(1).norm() < 1e-12);
        assert!((reg.character_via_diagram(0) - c(3.0, 0.0)).norm() < 1e-12);

        // Trivial representation: the chain gives 1 at every element.
        let triv = MatrixRep::trivial(Arc::clone(&z3));
        for g in 0..3 {
            assert_eq!(triv.character_via_diagram(g), c(1.0, 0.0));
        }
    }

    #[test]
    fn inner_product_values() {
        let mu2 = FiniteGroup::mu2();
        let set = IrrepSet::catalog(&mu2).unwrap();
        let triv = &set.characters()[0];
        let sgn = &set.characters()[1];
        assert!((triv.inner_product(triv).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        // (1·1 + 1·(-1)) / 2 = 0
        assert!(triv.inner_product(sgn).unwrap().norm() < 1e-12);

        // ⟨χ_reg, χ_triv⟩ = |G|·1/|G| = 1.
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let reg = MatrixRep::regular(Arc::clone(&s3))
            .character(&tol())
            .unwrap();
        let triv = MatrixRep::trivial(s3).character(&tol()).unwrap();
        assert!((reg.inner_product(&triv).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn regular_rep_of_z2_is_reducible() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let reg = MatrixRep::regular(Arc::clone(&z2));
        assert!(!reg.is_irreducible(&tol()).unwrap());
        let chi = reg.character(&tol()).unwrap();
        // ⟨χ,χ⟩ = 2 for the sum of both characters of Z2.
        assert!((chi.inner_product(&chi).unwrap() - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn catalog_dimension_counts() {
        let mu2 = FiniteGroup::mu2();
        assert_eq!(IrrepSet::catalog(&mu2).unwrap().dims(), vec![1, 1]);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let dims = IrrepSet::catalog(&s3).unwrap().dims();
        assert_eq!(dims, vec![1, 1, 2]);
        assert_eq!(dims.iter().map(|d| d * d).sum::<usize>(), 6);

        let z2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::product(&z2, &z2);
        assert_eq!(IrrepSet::catalog(&klein).unwrap().dims(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn catalog_two_dim_irrep_of_s3_vanishes_on_transpositions() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let set = IrrepSet::catalog(&s3).unwrap();
        let two_dim = set.irreps().iter().find(|r| r.dim() == 2).unwrap();
        let chi = two_dim.character(&tol()).unwrap();
        let transposition = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        assert!(chi.value(transposition).norm() < 1e-12);
    }

    #[test]
    fn catalog_covers_dihedral_and_products() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let set = IrrepSet::catalog(&d4).unwrap();
        assert_eq!(set.dims(), vec![1, 1, 1, 1, 2]);
        let two_dim = set.irreps().iter().find(|r| r.dim() == 2).unwrap();
        assert!(two_dim.is_irreducible(&tol()).unwrap());

        let d5 = FiniteGroup::dihedral(5).unwrap();
        assert_eq!(IrrepSet::catalog(&d5).unwrap().dims(), vec![1, 1, 2, 2]);

        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let p = FiniteGroup::product(&z2, &z4);
        let set = IrrepSet::catalog(&p).unwrap();
        assert_eq!(set.len(), 8);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let sp = FiniteGroup::product(&s3, &z2);
        let set = IrrepSet::catalog(&sp).unwrap();
        assert_eq!(set.dims().iter().map(|d| d * d).sum::<usize>(), 12);
    }

    #[test]
    fn catalog_rejects_custom_groups() {
        let rows: Vec<Vec<usize>> = vec![vec![0, 1], vec![1, 0]];
        let g = FiniteGroup::from_cayley_table(&rows, None).unwrap();
        assert!(matches!(IrrepSet::catalog(&g), Err(ReprError::NoCatalog)));
    }

    #[test]
    fn from_user_roundtrips_catalog_output() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let set = IrrepSet::catalog(&d4).unwrap();
        let again = IrrepSet::from_user(set.irreps().to_vec(), &tol()).unwrap();
        assert_eq!(again.dims(), set.dims());
    }

    #[test]
    fn from_user_detects_incomplete_and_redundant() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let set = IrrepSet::catalog(&s3).unwrap();
        let only_one_dim: Vec<MatrixRep> = set
            .irreps()
            .iter()
            .filter(|r| r.dim() == 1)
            .cloned()
            .collect();
        assert!(matches!(
            IrrepSet::from_user(only_one_dim, &tol()),
            Err(ReprError::IncompleteSet {
                sum_of_squares: 2,
                order: 6
            })
        ));

        let mu2 = FiniteGroup::mu2();
        let twice = vec![
            MatrixRep::trivial(Arc::clone(&mu2)),
            MatrixRep::trivial(Arc::clone(&mu2)),
        ];
        assert!(matches!(
            IrrepSet::from_user(twice, &tol()),
            Err(ReprError::RedundantSet { .. })
        ));
    }

    #[test]
    fn character_orthogonality_within_catalog_sets() {
        for g in [
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::cyclic(8).unwrap(),
        ] {
            let set = IrrepSet::catalog(&g).unwrap();
            let n = set.len();
            for i in 0..n {
                for j in 0..n {
                    let ip = set.characters()[i]
                        .inner_product(&set.characters()[j])
                        .unwrap();
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((ip - c(expected, 0.0)).norm() < 1e-8);
                }
            }
            // Column orthogonality via the table view.
            let table = CharacterTable::from_irreps(&set);
            assert!(table.column_orthogonality_defect() < 1e-6);
        }
    }

    #[test]
    fn character_table_z2() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let table = CharacterTable::compute(&z2).unwrap();
        assert_eq!(table.rows().len(), 2);
        assert!((table.rows()[0].class_value(0) - c(1.0, 0.0)).norm() < 1e-9);
        // Canonical row order puts the trivial character first: (1, 1)
        // then (1, -1).
        assert!((table.rows()[0].class_value(1) - c(1.0, 0.0)).norm() < 1e-9);
        assert!((table.rows()[1].class_value(1) - c(-1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn character_table_s3_matches_catalog_traces() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let computed = CharacterTable::compute(&s3).unwrap();
        assert_eq!(computed.dims(), vec![1, 1, 2]);
        // Classes are ordered (identity, transpositions, 3-cycles) and the
        // rows must come out as (1,1,1), (1,-1,1), (2,0,-1).
        assert_eq!(computed.class_sizes(), &[1, 3, 2]);
        let expect = [
            [c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)],
            [c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)],
            [c(2.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
        ];
        for (row, want) in computed.rows().iter().zip(&expect) {
            for (cidx, w) in want.iter().enumerate() {
                assert!((row.class_value(cidx) - w).norm() < 1e-9);
            }
        }
        let from_catalog = CharacterTable::from_irreps(&IrrepSet::catalog(&s3).unwrap());
        assert!(computed.max_row_distance(&from_catalog) < 1e-6);
        assert!(computed.row_orthogonality_defect() < 1e-6);
        assert!(computed.column_orthogonality_defect() < 1e-6);
    }

    #[test]
    fn character_table_d4_dimensions() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let table = CharacterTable::compute(&d4).unwrap();
        assert_eq!(table.dims(), vec![1, 1, 1, 1, 2]);
        let from_catalog = CharacterTable::from_irreps(&IrrepSet::catalog(&d4).unwrap());
        assert!(table.max_row_distance(&from_catalog) < 1e-6);
    }

    #[test]
    fn character_table_works_for_custom_groups() {
        // The quaternion-like custom table: Z4 entered by hand.
        let rows: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).map(|j| (i + j) % 4).collect())
            .collect();
        let g = FiniteGroup::from_cayley_table(&rows, None).unwrap();
        let table = CharacterTable::compute(&g).unwrap();
        assert_eq!(table.dims(), vec![1, 1, 1, 1]);
        assert!(table.row_orthogonality_defect() < 1e-6);
    }

    #[test]
    fn character_table_s5_big_group() {
        let s5 = FiniteGroup::symmetric(5).unwrap();
        let table = CharacterTable::compute(&s5).unwrap();
        let mut dims = table.dims();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 4, 4, 5, 5, 6]);
        assert!(table.row_orthogonality_defect() < 1e-6);
        assert!(table.column_orthogonality_defect() < 1e-6);
    }
}
