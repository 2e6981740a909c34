//! Generic character tables by class-algebra eigenspace splitting.
//!
//! The class sums `K_i` span the centre of the group algebra and multiply
//! through integer structure constants `a_{ijl}`. Reduced modulo a prime
//! `p ≡ 1 (mod exponent)` with `p > 2√|G|`, the matrices `B_i = [a_{ijl}]`
//! commute and split `F_p^k` into `k` common one-dimensional eigenspaces,
//! one per irreducible character; the normalized eigenvector carries the
//! central character values `ω(l) = |C_l| χ(g_l) / χ(1)` mod p. Dimensions
//! come out of the orthogonality relation via a modular square root, and
//! the character values lift to `ℂ` as integer combinations of roots of
//! unity recovered by an inverse DFT over `F_p` through a fixed
//! primitive-root correspondence.
//!
//! Splitting order is deterministic: class matrices in index order first,
//! then (never needed in practice, kept for robustness) random `F_p`
//! combinations drawn from a stream seeded with the prime itself.

use alloc::vec;
use alloc::vec::Vec;

use super::ReprError;
use crate::group::FiniteGroup;
use crate::rng::SplitMix64;
use crate::C64;

/// How many admissible primes to try before reporting failure.
const MAX_PRIMES: usize = 25;
/// Random-combination attempts after the class-matrix pass.
const MAX_RANDOM_SPLITS: usize = 50;

// ----------------------------------------------------------------------
// Prime field arithmetic
// ----------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
struct Fp {
    p: u64,
}

impl Fp {
    #[inline]
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Square root by Tonelli–Shanks; `None` when `a` is a non-residue.
    fn sqrt(self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow(a, (p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| self.pow(z, (p - 1) / 2) == p - 1)?;
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let i = {
                let mut i = 0u32;
                let mut t2 = t;
                while t2 != 1 {
                    t2 = self.mul(t2, t2);
                    i += 1;
                    if i == m {
                        return None;
                    }
                }
                i
            };
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `p ≡ 1 (mod exponent)` with `p > 2√|G|`, smallest first.
fn admissible_primes(exponent: u64, order: u64) -> impl Iterator<Item = u64> {
    let bound = {
        let mut b = 2u64;
        while b * b <= 4 * order {
            b += 1;
        }
        b // smallest integer with b² > 4·|G|, i.e. b > 2√|G|
    };
    (1u64..)
        .map(move |m| m * exponent + 1)
        .filter(move |&p| p >= bound && is_prime(p))
}

fn smallest_primitive_root(fp: Fp) -> u64 {
    let p = fp.p;
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| fp.pow(g, (p - 1) / q) != 1))
        .expect("F_p* is cyclic")
}

// ----------------------------------------------------------------------
// Linear algebra over F_p
// ----------------------------------------------------------------------

/// Row-major matrix over `F_p`.
#[derive(Debug, Clone)]
struct FpMat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMat {
    fn zeros(rows: usize, cols: usize) -> Self {
        FpMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    fn rref(&mut self, fp: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            for j in 0..self.cols {
                let tmp = self.get(row, j);
                self.set(row, j, self.get(pr, j));
                self.set(pr, j, tmp);
            }
            let inv = fp.inv(self.get(row, col));
            for j in 0..self.cols {
                let v = fp.mul(self.get(row, j), inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let f = self.get(r, col);
                    for j in 0..self.cols {
                        let v = fp.sub(self.get(r, j), fp.mul(f, self.get(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Matrix-vector product over `F_p`.
fn mat_vec(fp: Fp, m: &FpMat, v: &[u64]) -> Vec<u64> {
    (0..m.rows)
        .map(|i| {
            let mut acc = 0u64;
            for j in 0..m.cols {
                acc = fp.add(acc, fp.mul(m.get(i, j), v[j]));
            }
            acc
        })
        .collect()
}

/// Express each target as a coordinate vector over the given basis
/// (vectors of length `dim`); `None` when some target leaves the span.
fn coords_in_basis(
    fp: Fp,
    dim: usize,
    basis: &[Vec<u64>],
    targets: &[Vec<u64>],
) -> Option<Vec<Vec<u64>>> {
    let m = basis.len();
    let r = targets.len();
    let mut aug = FpMat::zeros(dim, m + r);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..dim {
            aug.set(i, j, b[i]);
        }
    }
    for (j, t) in targets.iter().enumerate() {
        for i in 0..dim {
            aug.set(i, m + j, t[i]);
        }
    }
    let pivots = aug.rref(fp);
    // Inconsistent (or rank-deficient basis) if any pivot falls in the
    // target block.
    if pivots.iter().any(|&c| c >= m) || pivots.len() != m {
        return None;
    }
    let mut out = vec![vec![0u64; m]; r];
    for (row, &col) in pivots.iter().enumerate() {
        for j in 0..r {
            out[j][col] = aug.get(row, m + j);
        }
    }
    Some(out)
}

/// Nullspace basis of a square matrix over `F_p`.
fn nullspace(fp: Fp, m: &FpMat) -> Vec<Vec<u64>> {
    let n = m.cols;
    let mut work = m.clone();
    let pivots = work.rref(fp);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = fp.sub(0, work.get(row, free));
        }
        out.push(v);
    }
    out
}

/// Monic minimal polynomial of `v` under `a` (coefficients ascending).
fn minimal_polynomial(fp: Fp, a: &FpMat, v: &[u64]) -> Vec<u64> {
    let n = v.len();
    let mut krylov: Vec<Vec<u64>> = vec![v.to_vec()];
    loop {
        let next = mat_vec(fp, a, krylov.last().expect("nonempty"));
        // Is `next` a combination of the Krylov vectors so far?
        if let Some(coords) = coords_in_basis(fp, n, &krylov, core::slice::from_ref(&next)) {
            let deg = krylov.len();
            let mut poly = vec![0u64; deg + 1];
            poly[deg] = 1;
            for (s, &c) in coords[0].iter().enumerate() {
                poly[s] = fp.sub(0, c);
            }
            return poly;
        }
        krylov.push(next);
        debug_assert!(krylov.len() <= n + 1);
    }
}

/// All roots of a polynomial over `F_p` by direct scan.
fn polynomial_roots(fp: Fp, poly: &[u64]) -> Vec<u64> {
    (0..fp.p)
        .filter(|&x| {
            let mut acc = 0u64;
            for &c in poly.iter().rev() {
                acc = fp.add(fp.mul(acc, x), c);
            }
            acc == 0
        })
        .collect()
}

// ----------------------------------------------------------------------
// Class algebra
// ----------------------------------------------------------------------

/// Structure-constant matrix of class `i`: `B[j][l] = a_{ijl}`, the number
/// of ways an element of `C_i` times an element of `C_j` gives a fixed
/// representative of `C_l`.
fn class_matrix(group: &FiniteGroup, i: usize, class_reps: &[usize]) -> FpMat {
    let k = group.class_count();
    let mut b = FpMat::zeros(k, k);
    for (l, &z) in class_reps.iter().enumerate() {
        for &x in &group.classes()[i] {
            let j = group.class_of(group.mul(group.inv(x), z));
            let v = b.get(j, l) + 1;
            b.set(j, l, v);
        }
    }
    b
}

/// Split one invariant subspace into the eigenspaces of `op` restricted to
/// it. `None` signals an inconsistency (operator not preserving the space),
/// which aborts the current prime.
fn split_subspace(
    fp: Fp,
    dim: usize,
    op: &FpMat,
    basis: Vec<Vec<u64>>,
) -> Option<Vec<Vec<Vec<u64>>>> {
    let m = basis.len();
    if m == 1 {
        return Some(vec![basis]);
    }
    let images: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec(fp, op, b)).collect();
    let coords = coords_in_basis(fp, dim, &basis, &images)?;
    // Restriction matrix: column j holds the coordinates of op·basis[j].
    let mut restricted = FpMat::zeros(m, m);
    for (j, c) in coords.iter().enumerate() {
        for i in 0..m {
            restricted.set(i, j, c[i]);
        }
    }
    let mut eigenvalues: Vec<u64> = Vec::new();
    for j in 0..m {
        let mut e = vec![0u64; m];
        e[j] = 1;
        let mp = minimal_polynomial(fp, &restricted, &e);
        for root in polynomial_roots(fp, &mp) {
            if !eigenvalues.contains(&root) {
                eigenvalues.push(root);
            }
        }
        if eigenvalues.len() == m {
            break;
        }
    }
    if eigenvalues.len() <= 1 {
        return Some(vec![basis]);
    }
    eigenvalues.sort_unstable();
    let mut pieces = Vec::new();
    let mut total = 0usize;
    for lambda in eigenvalues {
        let mut shifted = restricted.clone();
        for d in 0..m {
            let v = fp.sub(shifted.get(d, d), lambda);
            shifted.set(d, d, v);
        }
        let local = nullspace(fp, &shifted);
        if local.is_empty() {
            continue;
        }
        total += local.len();
        let global: Vec<Vec<u64>> = local
            .iter()
            .map(|coeffs| {
                let mut v = vec![0u64; dim];
                for (j, &c) in coeffs.iter().enumerate() {
                    for (vi, &bi) in v.iter_mut().zip(&basis[j]) {
                        *vi = fp.add(*vi, fp.mul(c, bi));
                    }
                }
                v
            })
            .collect();
        pieces.push(global);
    }
    if total != m {
        return None;
    }
    Some(pieces)
}

// ----------------------------------------------------------------------
// The table computation
// ----------------------------------------------------------------------

pub(super) fn character_table_rows(group: &FiniteGroup) -> Result<Vec<Vec<C64>>, ReprError> {
    let mut tried = Vec::new();
    for p in admissible_primes(group.exponent() as u64, group.order() as u64).take(MAX_PRIMES) {
        tried.push(p);
        if let Some(rows) = attempt(group, Fp { p }) {
            return Ok(rows);
        }
    }
    Err(ReprError::ComputationFailed { primes: tried })
}

fn attempt(group: &FiniteGroup, fp: Fp) -> Option<Vec<Vec<C64>>> {
    let k = group.class_count();
    let n = group.order() as u64;
    let class_reps: Vec<usize> = (0..k).map(|c| group.class_representative(c)).collect();
    let class_sizes: Vec<u64> = group.classes().iter().map(|c| c.len() as u64).collect();
    let inverse_class: Vec<usize> = class_reps
        .iter()
        .map(|&r| group.class_of(group.inv(r)))
        .collect();

    // Common eigenvectors of the structure-constant matrices.
    let mut subspaces: Vec<Vec<Vec<u64>>> = {
        let full: Vec<Vec<u64>> = (0..k)
            .map(|j| {
                let mut e = vec![0u64; k];
                e[j] = 1;
                e
            })
            .collect();
        vec![full]
    };
    let done = |s: &[Vec<Vec<u64>>]| s.iter().all(|b| b.len() == 1);
    for i in 1..k {
        if done(&subspaces) {
            break;
        }
        let op = class_matrix(group, i, &class_reps);
        let mut next = Vec::with_capacity(subspaces.len());
        for basis in subspaces {
            next.extend(split_subspace(fp, k, &op, basis)?);
        }
        subspaces = next;
    }
    if !done(&subspaces) {
        // Deterministic fallback: random combinations of the class matrices
        // from a stream seeded with the prime.
        let mats: Vec<FpMat> = (1..k)
            .map(|i| class_matrix(group, i, &class_reps))
            .collect();
        let mut rng = SplitMix64::new(fp.p);
        for _ in 0..MAX_RANDOM_SPLITS {
            if done(&subspaces) {
                break;
            }
            let mut op = FpMat::zeros(k, k);
            for m in &mats {
                let c = rng.next_u64() % fp.p;
                for idx in 0..k * k {
                    op.data[idx] = fp.add(op.data[idx], fp.mul(c, m.data[idx]));
                }
            }
            let mut next = Vec::with_capacity(subspaces.len());
            for basis in subspaces {
                next.extend(split_subspace(fp, k, &op, basis)?);
            }
            subspaces = next;
        }
        if !done(&subspaces) {
            return None;
        }
    }

    // Normalize each eigenvector to ω with ω(identity class) = 1.
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for basis in subspaces {
        let w = &basis[0];
        if w[0] == 0 {
            return None;
        }
        let inv0 = fp.inv(w[0]);
        omegas.push(w.iter().map(|&x| fp.mul(x, inv0)).collect());
    }

    // Dimensions from Σ_l ω(l)·ω(l*) / |C_l| = |G| / d².
    let mut dims = Vec::with_capacity(k);
    for w in &omegas {
        let mut s = 0u64;
        for l in 0..k {
            let term = fp.mul(
                fp.mul(w[l], w[inverse_class[l]]),
                fp.inv(class_sizes[l] % fp.p),
            );
            s = fp.add(s, term);
        }
        if s == 0 {
            return None;
        }
        let d_sq = fp.mul(n % fp.p, fp.inv(s));
        let root = fp.sqrt(d_sq)?;
        let d = root.min(fp.p - root);
        if d == 0 {
            return None;
        }
        dims.push(d);
    }
    if dims.iter().map(|&d| d * d).sum::<u64>() != n {
        return None;
    }

    // Character values mod p: χ(l) = d·ω(l)/|C_l|.
    let chi_bar: Vec<Vec<u64>> = omegas
        .iter()
        .zip(&dims)
        .map(|(w, &d)| {
            (0..k)
                .map(|l| fp.mul(fp.mul(d, w[l]), fp.inv(class_sizes[l] % fp.p)))
                .collect()
        })
        .collect();

    // Lift through the fixed primitive-root correspondence: the eigenvalues
    // of any image of g are o-th roots of unity (o the order of g), and
    // their multiplicities fall out of an inverse DFT mod p.
    let primitive = smallest_primitive_root(fp);
    let mut rows = vec![vec![C64::new(0.0, 0.0); k]; k];
    for (l, &rep) in class_reps.iter().enumerate() {
        let o = group.element_order(rep) as u64;
        // Classes of the powers rep^s.
        let power_class: Vec<usize> = (0..o)
            .map(|s| group.class_of(group.pow(rep, s as usize)))
            .collect();
        let z_inv = fp.inv(fp.pow(primitive, (fp.p - 1) / o));
        let z_inv_powers: Vec<u64> = {
            let mut acc = 1u64;
            (0..o)
                .map(|_| {
                    let v = acc;
                    acc = fp.mul(acc, z_inv);
                    v
                })
                .collect()
        };
        let o_inv = fp.inv(o % fp.p);
        for (t, chi) in chi_bar.iter().enumerate() {
            let mut total = 0u64;
            let mut value = C64::new(0.0, 0.0);
            for j in 0..o {
                let mut mu = 0u64;
                for s in 0..o {
                    let term = fp.mul(
                        chi[power_class[s as usize]],
                        z_inv_powers[((j * s) % o) as usize],
                    );
                    mu = fp.add(mu, term);
                }
                mu = fp.mul(mu, o_inv);
                // Multiplicities are genuine integers bounded by the
                // dimension; anything larger means the prime misbehaved.
                if mu > dims[t] {
                    return None;
                }
                total += mu;
                let angle = core::f64::consts::TAU * j as f64 / o as f64;
                value += C64::new(mu as f64 * libm::cos(angle), mu as f64 * libm::sin(angle));
            }
            if total != dims[t] {
                return None;
            }
            rows[t][l] = value;
        }
    }
    Some(rows)
}
