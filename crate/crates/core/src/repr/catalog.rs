//! Built-in matrix irreps for the groups this crate constructs.
//!
//! Matrix irreps are never synthesized for arbitrary groups; this catalog
//! covers cyclic groups (`χ_k(j) = e^{2πi jk/n}`), `μ₂`, dihedral groups
//! (four or two one-dimensional reps plus rotation/reflection blocks at
//! angles `2πk/n`), `S₃` through its dihedral presentation, and direct
//! products by Kronecker products of the factors' irreps. Anything else
//! reports `NoCatalog` and must come through `IrrepSet::from_user`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{MatrixRep, ReprError};
use crate::group::{FiniteGroup, GroupKind};
use crate::matrix::Matrix;
use crate::C64;

pub(super) fn catalog_reps(group: &Arc<FiniteGroup>) -> Result<Vec<MatrixRep>, ReprError> {
    match group.kind() {
        GroupKind::Trivial => Ok(vec![MatrixRep::trivial(Arc::clone(group))]),
        GroupKind::Cyclic(n) => Ok(cyclic_reps(group, *n)),
        GroupKind::Mu2 => Ok(cyclic_reps(group, 2)),
        GroupKind::Dihedral(n) => {
            // Constructor convention: index k is r^k, index n+k is r^k·s.
            let n = *n;
            let decompose = |g: usize| if g < n { (g, false) } else { (g - n, true) };
            Ok(dihedral_reps(group, n, decompose))
        }
        GroupKind::Symmetric(2) => Ok(cyclic_reps(group, 2)),
        GroupKind::Symmetric(3) => symmetric3_reps(group),
        GroupKind::Symmetric(_) => Err(ReprError::NoCatalog),
        GroupKind::Product(f1, f2) => {
            let reps1 = catalog_reps(f1)?;
            let reps2 = catalog_reps(f2)?;
            Ok(product_reps(group, &reps1, &reps2, f2.order()))
        }
        GroupKind::Custom => Err(ReprError::NoCatalog),
    }
}

fn unit_scalar(angle: f64) -> Matrix {
    Matrix::from_data(1, 1, vec![C64::new(libm::cos(angle), libm::sin(angle))])
}

/// `Z_n`: the n characters `j ↦ e^{2πi jk/n}`.
fn cyclic_reps(group: &Arc<FiniteGroup>, n: usize) -> Vec<MatrixRep> {
    (0..n)
        .map(|k| {
            let images = (0..n)
                .map(|j| unit_scalar(core::f64::consts::TAU * (j * k % n) as f64 / n as f64))
                .collect();
            MatrixRep::new(Arc::clone(group), images).expect("catalog images are well-formed")
        })
        .collect()
}

/// Dihedral irreps against a caller-supplied decomposition of element
/// indices into `(rotation exponent, carries reflection)`.
fn dihedral_reps(
    group: &Arc<FiniteGroup>,
    n: usize,
    decompose: impl Fn(usize) -> (usize, bool),
) -> Vec<MatrixRep> {
    let order = group.order();
    let mut reps = Vec::new();

    // One-dimensional: ρ(r) = x, ρ(s) = y with x^n = 1 and x = x⁻¹.
    let mut one_dim: Vec<(f64, f64)> = vec![(1.0, 1.0), (1.0, -1.0)];
    if n % 2 == 0 {
        one_dim.push((-1.0, 1.0));
        one_dim.push((-1.0, -1.0));
    }
    for (x, y) in one_dim {
        let images = (0..order)
            .map(|g| {
                let (a, refl) = decompose(g);
                let mut v = if a % 2 == 0 { 1.0 } else { x };
                if refl && y < 0.0 {
                    v = -v;
                }
                Matrix::from_data(1, 1, vec![C64::new(v, 0.0)])
            })
            .collect();
        reps.push(MatrixRep::new(Arc::clone(group), images).expect("well-formed"));
    }

    // Two-dimensional: ρ_k(r^a) the rotation by 2πka/n, reflections compose
    // with diag(1, -1).
    for k in 1..=(n - 1) / 2 {
        let images = (0..order)
            .map(|g| {
                let (a, refl) = decompose(g);
                let t = core::f64::consts::TAU * (k * a % n) as f64 / n as f64;
                let (c, s) = (libm::cos(t), libm::sin(t));
                let data = if refl {
                    // rotation · diag(1, -1)
                    vec![
                        C64::new(c, 0.0),
                        C64::new(s, 0.0),
                        C64::new(s, 0.0),
                        C64::new(-c, 0.0),
                    ]
                } else {
                    vec![
                        C64::new(c, 0.0),
                        C64::new(-s, 0.0),
                        C64::new(s, 0.0),
                        C64::new(c, 0.0),
                    ]
                };
                Matrix::from_data(2, 2, data)
            })
            .collect();
        reps.push(MatrixRep::new(Arc::clone(group), images).expect("well-formed"));
    }
    reps
}

/// `S₃` through its dihedral presentation: pick the first 3-cycle as `r`
/// and the first involution as `s`, decompose every element as `r^a s^b`,
/// and reuse the dihedral matrices.
fn symmetric3_reps(group: &Arc<FiniteGroup>) -> Result<Vec<MatrixRep>, ReprError> {
    let order = group.order();
    let r = (0..order)
        .find(|&g| group.element_order(g) == 3)
        .ok_or(ReprError::NoCatalog)?;
    let s = (0..order)
        .find(|&g| group.element_order(g) == 2)
        .ok_or(ReprError::NoCatalog)?;
    debug_assert_eq!(group.mul(group.mul(s, r), s), group.inv(r));
    let mut slot = vec![None::<(usize, bool)>; order];
    for a in 0..3 {
        for refl in [false, true] {
            let mut g = group.pow(r, a);
            if refl {
                g = group.mul(g, s);
            }
            slot[g] = Some((a, refl));
        }
    }
    if slot.iter().any(Option::is_none) {
        return Err(ReprError::NoCatalog);
    }
    let decompose = move |g: usize| slot[g].expect("every element decomposed");
    Ok(dihedral_reps(group, 3, decompose))
}

/// Tensor products of the factors' irreps, at the product group's
/// `(a, b) ↦ a·|G₂| + b` indexing.
fn product_reps(
    group: &Arc<FiniteGroup>,
    reps1: &[MatrixRep],
    reps2: &[MatrixRep],
    order2: usize,
) -> Vec<MatrixRep> {
    let order = group.order();
    let mut out = Vec::with_capacity(reps1.len() * reps2.len());
    for r1 in reps1 {
        for r2 in reps2 {
            let images = (0..order)
                .map(|g| r1.image(g / order2).kron(r2.image(g % order2)))
                .collect();
            out.push(MatrixRep::new(Arc::clone(group), images).expect("well-formed"));
        }
    }
    out
}
