//! The acceptance suite: eight numbered criteria covering the Ising
//! cross-check, the Fourier isomorphism, trace preservation, the n-point
//! Plancherel identity, character equality through the pairing diagram,
//! character tables, the centre, and the abelian path. Each criterion pins
//! its tolerances and runtime budget; `run_all` is what both the
//! `selftest` subcommand and the `acceptance` test target execute.

use std::sync::Arc;
use std::time::Instant;

use ising_kitchen_core::algebra::center_basis;
use ising_kitchen_core::fourier::{
    abelian_fourier, abelian_inverse_fourier, center_diagonal_check, cyclic_sum, fourier,
    inverse_fourier, plancherel_measure, plancherel_npoint, spectral_trace, SpectralElement,
};
use ising_kitchen_core::group::FiniteGroup;
use ising_kitchen_core::ising::{
    partition_bruteforce, partition_closed, partition_convolution, IsingParams,
};
use ising_kitchen_core::repr::{CharacterTable, IrrepSet};
use ising_kitchen_core::{GroupFunction, Tolerances, C64};

use crate::registry::resolve;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} {}: {} [{:.2}s]",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.seconds
        )
    }
}

/// The five-group grid most criteria run on.
fn standard_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    ["z6", "mu2", "s3", "d4", "z2xz4"]
        .into_iter()
        .map(|name| (name, resolve(name).expect("registry group")))
        .collect()
}

fn catalog(group: &Arc<FiniteGroup>) -> Arc<IrrepSet> {
    Arc::new(IrrepSet::catalog(group).expect("catalog group"))
}

fn finish(
    name: &'static str,
    start: Instant,
    budget: f64,
    passed: bool,
    detail: String,
) -> CriterionResult {
    let seconds = start.elapsed().as_secs_f64();
    let on_time = seconds < budget;
    let detail = if on_time {
        detail
    } else {
        format!("{detail}; exceeded {budget}s budget")
    };
    CriterionResult {
        name,
        passed: passed && on_time,
        detail,
        seconds,
    }
}

/// Criterion 1: Ising three-way agreement over the β × n grid, relative error ≤ 1e-9.
pub fn ising_three_way(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let betas = [0.3, 1.0, std::f64::consts::LN_2, 2.5];
    let mut worst = 0.0f64;
    for beta in betas {
        for n in 1..=16 {
            let p = IsingParams::new(C64::new(beta, 0.0), n).expect("valid parameters");
            let closed = partition_closed(&p);
            let brute = partition_bruteforce(&p).expect("n <= 24");
            let conv = partition_convolution(&p);
            let rel = |x: C64| (x - closed).norm() / closed.norm();
            worst = worst.max(rel(brute)).max(rel(conv));
        }
    }
    finish(
        "ising-three-way",
        start,
        5.0,
        worst <= tol.identity,
        format!(
            "worst relative gap {worst:.3e} (tol {:.0e}) over 4 betas x 16 sizes",
            tol.identity
        ),
    )
}

/// Criterion 2: Fourier isomorphism: homomorphism, round trip, exact unit.
pub fn fourier_isomorphism(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let mut worst_hom = 0.0f64;
    let mut worst_round = 0.0f64;
    let mut unit_exact = true;
    for (gi, (_, group)) in standard_groups().iter().enumerate() {
        let irreps = catalog(group);
        let delta = GroupFunction::delta(Arc::clone(group), group.identity()).expect("identity");
        unit_exact &= fourier(&delta, &irreps).expect("same group").blocks()
            == SpectralElement::unit(Arc::clone(&irreps)).blocks();
        for pair in 0..100u64 {
            let seed = 20_000 + (gi as u64) * 1_000 + 2 * pair;
            let a = GroupFunction::random(Arc::clone(group), seed);
            let b = GroupFunction::random(Arc::clone(group), seed + 1);
            let phi_ab = fourier(&a.convolve(&b).expect("same group"), &irreps).expect("ok");
            let phi_a_phi_b = fourier(&a, &irreps)
                .expect("ok")
                .mul(&fourier(&b, &irreps).expect("ok"))
                .expect("same set");
            let hom_scale = (a.max_norm() * b.max_norm() * group.order() as f64).max(1.0);
            worst_hom = worst_hom.max(phi_ab.max_diff(&phi_a_phi_b) / hom_scale);

            let back = inverse_fourier(&fourier(&a, &irreps).expect("ok"));
            worst_round = worst_round.max(back.max_diff(&a) / a.max_norm().max(1.0));
        }
    }
    let passed = worst_hom <= tol.identity && worst_round <= tol.roundtrip && unit_exact;
    finish(
        "fourier-isomorphism",
        start,
        10.0,
        passed,
        format!(
            "hom defect {worst_hom:.3e} (tol {:.0e}), roundtrip {worst_round:.3e} (tol {:.0e}), unit exact: {unit_exact}",
            tol.identity, tol.roundtrip
        ),
    )
}

/// Criterion 3: Trace preservation: counit(a) = spectral_trace(Φ(a)).
pub fn trace_preservation(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for (gi, (_, group)) in standard_groups().iter().enumerate() {
        let irreps = catalog(group);
        for seed in 0..100u64 {
            let a = GroupFunction::random(Arc::clone(group), 30_000 + (gi as u64) * 1_000 + seed);
            let tr = spectral_trace(&fourier(&a, &irreps).expect("ok"));
            worst = worst.max((tr - a.counit()).norm() / a.max_norm().max(1.0));
        }
    }
    finish(
        "trace-preservation",
        start,
        10.0,
        worst <= tol.trace,
        format!("worst scaled defect {worst:.3e} (tol {:.0e})", tol.trace),
    )
}

/// Criterion 4: n-point Plancherel, n ∈ 1..=5, 50 seeded tuples per group, plus the
/// cyclic form against the order times the plain left-hand side.
pub fn plancherel_npoint_grid(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let mut worst_gap = 0.0f64;
    let mut worst_cyclic = 0.0f64;
    for (gi, (_, group)) in standard_groups().iter().enumerate() {
        let irreps = catalog(group);
        let order = group.order() as f64;
        for n in 1..=5usize {
            for tuple in 0..50u64 {
                let base = 40_000 + (gi as u64) * 4_000 + (n as u64) * 500 + tuple * 8;
                let thetas: Vec<GroupFunction> = (0..n)
                    .map(|i| GroupFunction::random(Arc::clone(group), base + i as u64))
                    .collect();
                let check = plancherel_npoint(&thetas, &irreps).expect("ok");
                // The plain lhs is an (n-1)-fold sum of degree-n products.
                let norms: f64 = thetas.iter().map(GroupFunction::max_norm).product();
                let scale = (norms * order.powi(n as i32 - 1)).max(1.0);
                worst_gap = worst_gap.max(check.gap / scale);

                let cyc = cyclic_sum(&thetas).expect("within guard");
                let cyc_scale = scale * order;
                worst_cyclic = worst_cyclic.max((cyc - check.lhs * order).norm() / cyc_scale);
            }
        }
    }
    let passed = worst_gap <= tol.identity && worst_cyclic <= tol.identity;
    finish(
        "plancherel-npoint",
        start,
        30.0,
        passed,
        format!(
            "worst scaled gap {worst_gap:.3e}, cyclic defect {worst_cyclic:.3e} (tol {:.0e})",
            tol.identity
        ),
    )
}

/// Criterion 5: The pairing-diagram character equals the trace character pointwise.
pub fn character_diagram(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut groups = standard_groups();
    groups.push(("d5", resolve("d5").expect("registry")));
    groups.push(("z8", resolve("z8").expect("registry")));
    for (_, group) in &groups {
        let irreps = catalog(group);
        for rep in irreps.irreps() {
            let chi = rep.character(tol).expect("catalog rep");
            for g in 0..group.order() {
                worst = worst.max((rep.character_via_diagram(g) - chi.value(g)).norm());
            }
        }
    }
    finish(
        "character-diagram",
        start,
        10.0,
        worst <= tol.character_diagram,
        format!(
            "worst pointwise gap {worst:.3e} (tol {:.0e})",
            tol.character_diagram
        ),
    )
}

/// Criterion 6: Character tables: the generic computation matches catalog-derived
/// tables up to row order; dimensions and orthogonality are exact/tight.
pub fn character_tables(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let names = [
        "z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "d4", "d5", "z2xz2",
    ];
    let mut worst_rows = 0.0f64;
    let mut worst_orth = 0.0f64;
    let mut dims_exact = true;
    for name in names {
        let group = resolve(name).expect("registry");
        let computed = CharacterTable::compute(&group).expect("table computes");
        let catalog_table = CharacterTable::from_irreps(&IrrepSet::catalog(&group).expect("ok"));
        worst_rows = worst_rows.max(computed.max_row_distance(&catalog_table));
        worst_orth = worst_orth
            .max(computed.row_orthogonality_defect())
            .max(computed.column_orthogonality_defect());
        let sum_sq: usize = computed.dims().iter().map(|d| d * d).sum();
        dims_exact &= sum_sq == group.order();
    }
    let passed = worst_rows <= tol.char_table && worst_orth <= tol.char_table && dims_exact;
    finish(
        "character-tables",
        start,
        10.0,
        passed,
        format!(
            "row distance {worst_rows:.3e}, orthogonality defect {worst_orth:.3e} (tol {:.0e}), dims exact: {dims_exact}",
            tol.char_table
        ),
    )
}

/// Criterion 7: Centre: class sums transform to scalar blocks; the Plancherel
/// measure has total mass one.
pub fn centre_and_measure(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let mut worst_scalar = 0.0f64;
    let mut worst_mass = 0.0f64;
    let mut groups = standard_groups();
    groups.push(("d5", resolve("d5").expect("registry")));
    for (_, group) in &groups {
        let irreps = catalog(group);
        for z in center_basis(group) {
            let check = center_diagonal_check(&z, &irreps, tol.schur_scalar).expect("ok");
            if !check.class_function {
                return finish(
                    "centre-and-measure",
                    start,
                    10.0,
                    false,
                    "class sum not recognized as a class function".to_string(),
                );
            }
            worst_scalar = worst_scalar.max(check.max_deviation);
        }
        worst_mass = worst_mass.max((plancherel_measure(&irreps).total() - 1.0).abs());
    }
    let passed = worst_scalar <= tol.schur_scalar && worst_mass <= tol.measure_sum;
    finish(
        "centre-and-measure",
        start,
        10.0,
        passed,
        format!(
            "scalar-block deviation {worst_scalar:.3e} (tol {:.0e}), measure mass defect {worst_mass:.3e} (tol {:.0e})",
            tol.schur_scalar, tol.measure_sum
        ),
    )
}

/// Criterion 8: Abelian path: transform/inverse round trip on z8 and z2xz4, agreeing
/// with the matrix path's 1×1 blocks.
pub fn abelian_path(tol: &Tolerances) -> CriterionResult {
    let start = Instant::now();
    let mut worst_round = 0.0f64;
    let mut worst_agree = 0.0f64;
    for name in ["z8", "z2xz4"] {
        let group = resolve(name).expect("registry");
        let table = CharacterTable::compute(&group).expect("table");
        let irreps = catalog(&group);
        for seed in 0..50u64 {
            let a = GroupFunction::random(Arc::clone(&group), 80_000 + seed);
            let hat = abelian_fourier(&a, &table).expect("abelian");
            let back = abelian_inverse_fourier(&hat, &table).expect("abelian");
            worst_round = worst_round.max(back.max_diff(&a) / a.max_norm().max(1.0));

            let phi = fourier(&a, &irreps).expect("ok");
            for i in 0..group.order() {
                worst_agree = worst_agree.max((phi.block(i).get(0, 0) - hat.value(i)).norm());
            }
        }
    }
    let passed = worst_round <= tol.roundtrip && worst_agree <= tol.identity;
    finish(
        "abelian-path",
        start,
        10.0,
        passed,
        format!(
            "roundtrip {worst_round:.3e} (tol {:.0e}), matrix-path agreement {worst_agree:.3e} (tol {:.0e})",
            tol.roundtrip, tol.identity
        ),
    )
}

/// Every criterion, in order.
pub fn run_all(tol: &Tolerances) -> Vec<CriterionResult> {
    vec![
        ising_three_way(tol),
        fourier_isomorphism(tol),
        trace_preservation(tol),
        plancherel_npoint_grid(tol),
        character_diagram(tol),
        character_tables(tol),
        centre_and_measure(tol),
        abelian_path(tol),
    ]
}
