//! The periodic 1d Ising model, evaluated three independent ways.
//!
//! The partition function of `n` spins on a ring at inverse temperature
//! `β` (complex allowed) is `Z_β(n) = Σ_{σ∈{±1}ⁿ} e^{β Σ_j σ_j σ_{j+1}}`,
//! indices mod `n`. The same number falls out of harmonic analysis on
//! `μ₂`: the Boltzmann weight function `θ_β(σ) = e^{βσ}` turns the spin sum
//! into the cyclic n-point sum of `n` copies of `θ_β`, equivalently
//! `|μ₂|` times the counit of the n-fold convolution power, and the
//! diagonalized transform `Φ(θ_β) = diag(2cosh β, 2sinh β)` collapses it to
//! the closed form `(2cosh β)ⁿ + (2sinh β)ⁿ`. The three evaluators
//! cross-check each other; `n = 1` is the degenerate one-node ring whose
//! single edge is a self-loop (`σ₁σ₁ = 1`), giving `Z = 2e^β`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{convolve_n, GroupFunction};
use crate::group::FiniteGroup;
use crate::C64;

/// Spin-sum guard: `2ⁿ` configurations.
const BRUTEFORCE_MAX_NODES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsingError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("{n} nodes need 2^{n} spin configurations; the brute-force guard is n <= {max}")]
    TooLarge { n: usize, max: usize },
}

/// Ring size and inverse temperature. Physical use has real `β`; the
/// evaluators accept any finite complex value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsingParams {
    pub beta: C64,
    pub n: usize,
}

impl IsingParams {
    pub fn new(beta: C64, n: usize) -> Result<Self, IsingError> {
        if n == 0 {
            return Err(IsingError::InvalidParameter("need at least one node"));
        }
        if !(beta.re.is_finite() && beta.im.is_finite()) {
            return Err(IsingError::InvalidParameter("beta must be finite"));
        }
        Ok(IsingParams { beta, n })
    }
}

/// The Boltzmann weight as a function on `μ₂`: `θ_β(σ) = e^{βσ}`, i.e.
/// `e^β` at `+1` and `e^{−β}` at `−1`.
pub fn theta_beta(beta: C64) -> GroupFunction {
    let mu2 = FiniteGroup::mu2();
    let values = alloc::vec![beta.exp(), (-beta).exp()];
    GroupFunction::new(mu2, values).expect("two finite values")
}

/// The full `2ⁿ` spin sum, configurations enumerated in ascending bitmask
/// order (bit `j` set means `σ_j = −1`).
pub fn partition_bruteforce(p: &IsingParams) -> Result<C64, IsingError> {
    let n = p.n;
    if n > BRUTEFORCE_MAX_NODES {
        return Err(IsingError::TooLarge {
            n,
            max: BRUTEFORCE_MAX_NODES,
        });
    }
    // The bond energy Σ σ_j σ_{j+1} only takes values n, n-2, ..., -n;
    // cache e^{βk} per value and sum in mask order.
    let weights: Vec<C64> = (0..=n)
        .map(|disagreements| {
            let k = n as f64 - 2.0 * disagreements as f64;
            (p.beta * k).exp()
        })
        .collect();
    let mut acc = C64::new(0.0, 0.0);
    for mask in 0u64..(1u64 << n) {
        // σ_j σ_{j+1} = -1 exactly where adjacent bits differ (cyclically).
        let rotated = ((mask >> 1) | (mask << (n - 1))) & ((1u64 << n) - 1);
        let disagreements = (mask ^ rotated).count_ones() as usize;
        acc += weights[disagreements];
    }
    Ok(acc)
}

/// The closed form `(2cosh β)ⁿ + (2sinh β)ⁿ`.
pub fn partition_closed(p: &IsingParams) -> C64 {
    let two = C64::new(2.0, 0.0);
    (two * p.beta.cosh()).powu(p.n as u32) + (two * p.beta.sinh()).powu(p.n as u32)
}

/// The harmonic-analysis route: `|μ₂|` times the counit of the n-fold
/// convolution power of `θ_β` (the cyclic n-point sum of `n` copies of
/// `θ_β` collapses to this, and it has no `2ⁿ` blowup).
pub fn partition_convolution(p: &IsingParams) -> C64 {
    let theta = theta_beta(p.beta);
    let copies: Vec<GroupFunction> = (0..p.n).map(|_| theta.clone()).collect();
    let power = convolve_n(&copies).expect("nonempty, one group");
    C64::new(theta.group().order() as f64, 0.0) * power.counit()
}

/// Handle for the group the Ising functions live on.
pub fn spin_group() -> Arc<FiniteGroup> {
    FiniteGroup::mu2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::cyclic_sum;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn theta_values() {
        let t0 = theta_beta(c(0.0, 0.0));
        assert_eq!(t0.values(), &[c(1.0, 0.0), c(1.0, 0.0)]);

        let t = theta_beta(c(core::f64::consts::LN_2, 0.0));
        assert!((t.value(0) - c(2.0, 0.0)).norm() < 1e-15);
        assert!((t.value(1) - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn single_node_ring_is_self_loop() {
        // n = 1: one spin, one self-edge with σ₁σ₁ = 1, so Z = 2e^β.
        for beta in [0.0, 1.0, core::f64::consts::LN_2] {
            let p = IsingParams::new(c(beta, 0.0), 1).unwrap();
            let expected = 2.0 * libm::exp(beta);
            assert!((partition_bruteforce(&p).unwrap() - c(expected, 0.0)).norm() < 1e-12);
            assert!((partition_closed(&p) - c(expected, 0.0)).norm() < 1e-12);
            assert!((partition_convolution(&p) - c(expected, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn infinite_temperature_counts_configurations() {
        // β = 0: all weights are 1, so Z = 2ⁿ.
        let p = IsingParams::new(c(0.0, 0.0), 3).unwrap();
        assert!((partition_bruteforce(&p).unwrap() - c(8.0, 0.0)).norm() < 1e-12);
        assert!((partition_closed(&p) - c(8.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn two_node_ring_by_direct_enumeration() {
        // Four configurations, doubled bond: Z = 2e^{2β} + 2e^{−2β} at β = 1.
        let p = IsingParams::new(c(1.0, 0.0), 2).unwrap();
        let expected = 2.0 * libm::exp(2.0) + 2.0 * libm::exp(-2.0);
        assert!((partition_bruteforce(&p).unwrap() - c(expected, 0.0)).norm() < 1e-12);
        // cosh² + sinh² identity route: 4cosh²1 + 4sinh²1 equals the same.
        let via_hyperbolic =
            4.0 * libm::cosh(1.0) * libm::cosh(1.0) + 4.0 * libm::sinh(1.0) * libm::sinh(1.0);
        assert!((via_hyperbolic - expected).abs() < 1e-12);
        assert!((partition_closed(&p) - c(expected, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn three_way_agreement_on_grid() {
        for beta in [0.3, 1.0, core::f64::consts::LN_2] {
            for n in 1..=16 {
                let p = IsingParams::new(c(beta, 0.0), n).unwrap();
                let closed = partition_closed(&p);
                let brute = partition_bruteforce(&p).unwrap();
                let conv = partition_convolution(&p);
                let tol = 1e-9 * closed.norm();
                assert!(
                    (brute - closed).norm() <= tol,
                    "brute deviates at β={beta}, n={n}"
                );
                assert!(
                    (conv - closed).norm() <= tol,
                    "conv deviates at β={beta}, n={n}"
                );
            }
        }
    }

    #[test]
    fn convolution_route_equals_cyclic_sum() {
        let beta = c(0.7, 0.0);
        let theta = theta_beta(beta);
        for n in 1..=8 {
            let p = IsingParams::new(beta, n).unwrap();
            let copies: Vec<GroupFunction> = (0..n).map(|_| theta.clone()).collect();
            let cyc = cyclic_sum(&copies).unwrap();
            assert!((cyc - partition_convolution(&p)).norm() <= 1e-9 * cyc.norm());
        }
    }

    #[test]
    fn complex_beta_is_supported() {
        let p = IsingParams::new(c(0.4, 0.9), 5).unwrap();
        let closed = partition_closed(&p);
        let brute = partition_bruteforce(&p).unwrap();
        let conv = partition_convolution(&p);
        assert!((brute - closed).norm() <= 1e-9 * closed.norm().max(1.0));
        assert!((conv - closed).norm() <= 1e-9 * closed.norm().max(1.0));
    }

    #[test]
    fn closed_form_symmetries() {
        // Even n: Z is even in β. The sign flip only touches the sinh term.
        let n_even = 6;
        let beta = 1.3;
        let z_plus = partition_closed(&IsingParams::new(c(beta, 0.0), n_even).unwrap());
        let z_minus = partition_closed(&IsingParams::new(c(-beta, 0.0), n_even).unwrap());
        assert!((z_plus - z_minus).norm() < 1e-9 * z_plus.norm());

        let n_odd = 5;
        let zp = partition_closed(&IsingParams::new(c(beta, 0.0), n_odd).unwrap());
        let zm = partition_closed(&IsingParams::new(c(-beta, 0.0), n_odd).unwrap());
        let cosh_term = (2.0 * libm::cosh(beta)).powi(n_odd as i32);
        let sinh_term = (2.0 * libm::sinh(beta)).powi(n_odd as i32);
        assert!((zm - c(cosh_term - sinh_term, 0.0)).norm() < 1e-9 * zp.norm());
    }

    #[test]
    fn ratio_to_dominant_eigenvalue_increases_to_one() {
        // Z/(2cosh β)ⁿ = 1 + tanhⁿβ → 1 monotonically for β > 0.
        let beta = 0.8;
        let mut prev = f64::INFINITY;
        for n in 1..=16 {
            let p = IsingParams::new(c(beta, 0.0), n).unwrap();
            let ratio = partition_closed(&p).re / (2.0 * libm::cosh(beta)).powi(n as i32);
            assert!(ratio >= 1.0 - 1e-12);
            assert!(ratio <= prev + 1e-12);
            prev = ratio;
        }
    }

    #[test]
    fn guards_and_parameters() {
        assert!(matches!(
            IsingParams::new(c(1.0, 0.0), 0),
            Err(IsingError::InvalidParameter(_))
        ));
        assert!(matches!(
            IsingParams::new(c(f64::INFINITY, 0.0), 2),
            Err(IsingError::InvalidParameter(_))
        ));
        let p = IsingParams {
            beta: c(0.5, 0.0),
            n: 25,
        };
        assert!(matches!(
            partition_bruteforce(&p),
            Err(IsingError::TooLarge { n: 25, max: 24 })
        ));
    }

    #[test]
    fn transform_of_theta_is_the_transfer_spectrum() {
        // Φ(θ_β) = diag(2cosh β, 2sinh β): the transfer-matrix eigenvalues.
        use crate::fourier::fourier;
        use crate::repr::IrrepSet;
        let beta = 0.6;
        let theta = theta_beta(c(beta, 0.0));
        let irreps = Arc::new(IrrepSet::catalog(theta.group()).unwrap());
        let phi = fourier(&theta, &irreps).unwrap();
        assert!((phi.block(0).get(0, 0) - c(2.0 * libm::cosh(beta), 0.0)).norm() < 1e-12);
        assert!((phi.block(1).get(0, 0) - c(2.0 * libm::sinh(beta), 0.0)).norm() < 1e-12);
    }
}
