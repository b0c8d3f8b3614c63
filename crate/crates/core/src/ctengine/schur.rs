//! Constant-term formulas for Schur functions and their `(q,t)` duals.
//!
//! `ct_y[ y^λ Π_{i<j}(1 - y_i/y_j) Π_j K(x; 1/y_j) ]` over `ℓ(λ)` variables, where the
//! kernel `K` selects the family: `Π(1-x_i/y)^{-1}` gives `s_λ`, the
//! `(1-t^n)`-weighted exponential gives `S_λ(x;t)`, and `Π 1/(x_i/y;q)_∞`
//! gives `S_λ(x;q,t)`.

use std::collections::BTreeMap;

use super::maps::Kernel;
use crate::coeff::RatQT;
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// Laurent expansion of `Π_{i<j}(1 - y_i/y_j)` (`flip = false`) or
/// `Π_{i<j}(1 - y_j/y_i)` (`flip = true`) in `n` variables.
fn vandermonde_ratio(n: usize, flip: bool) -> BTreeMap<Vec<i32>, i64> {
    let mut acc: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    acc.insert(vec![0; n], 1);
    for i in 0..n {
        for j in i + 1..n {
            let mut next: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
            for (e, c) in &acc {
                *next.entry(e.clone()).or_default() += c;
                let mut f = e.clone();
                let (up, down) = if flip { (j, i) } else { (i, j) };
                f[up] += 1;
                f[down] -= 1;
                *next.entry(f).or_default() -= c;
            }
            next.retain(|_, c| *c != 0);
            acc = next;
        }
    }
    acc
}

/// `ct_y[ y^λ Π_{i<j}(1 - y_i/y_j) Π_j K(x; 1/y_j) ]`, exactly, in the monomial basis.
pub fn schur_ct_kernel(lam: &Partition, kernel: Kernel) -> SymFunc {
    let n = lam.len();
    let mut out = SymFunc::zero(Basis::M);
    for (tau, sign) in vandermonde_ratio(n, false) {
        let beta: Vec<i32> = (0..n).map(|i| lam.part(i + 1) as i32 + tau[i]).collect();
        if beta.iter().any(|&b| b < 0) {
            continue;
        }
        let nu = Partition::new(beta.into_iter().map(|b| b as u32).collect());
        out = out.add(&kernel.strata(&nu).scale(&RatQT::from_int(sign)));
    }
    out
}

/// The Schur function by constant term, restricted to `m_μ` with `ℓ(μ) <= nx`.
pub fn schur_ct(lam: &Partition, nx: usize) -> SymFunc {
    let s = schur_ct_kernel(lam, Kernel::Schur);
    SymFunc::from_terms(
        Basis::M,
        s.terms()
            .iter()
            .filter(|(l, _)| l.len() <= nx)
            .map(|(l, c)| (l.clone(), c.clone())),
    )
}

/// `(-1)^{|λ|} ct_y[ y^λ Π_{i<j}(1 - y_i/y_j) Π_{i,j}(1 - x_i/y_j) ]`, which is `s_{λ'}`.
pub fn schur_ct_dual(lam: &Partition) -> SymFunc {
    let s = schur_ct_kernel(lam, Kernel::SchurDual);
    if lam.weight() % 2 == 1 {
        s.neg()
    } else {
        s
    }
}

/// `ct_x[ x^{-λ} Π_{i<j}(1 - x_j/x_i) f(x_1..x_ℓ) ]` with `ℓ = ℓ(λ)`: the bra side of the
/// Schur-type measures.
pub fn schur_functional(lam: &Partition, f: &SymFunc) -> RatQT {
    let n = lam.len();
    let m = f.convert(Basis::M);
    let mut acc = RatQT::zero();
    for (tau, sign) in vandermonde_ratio(n, true) {
        // need the monomial x^{λ - τ}
        let e: Vec<i32> = (0..n).map(|i| lam.part(i + 1) as i32 - tau[i]).collect();
        if e.iter().any(|&x| x < 0) {
            continue;
        }
        let nu = Partition::new(e.into_iter().map(|x| x as u32).collect());
        let c = m.coeff(&nu);
        if !c.is_zero() {
            acc = &acc + &c.scale_int(sign);
        }
    }
    acc
}
