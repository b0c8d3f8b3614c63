//! The maps `G_s`, `N_{n,m}`, `Ñ_{n,m}` and the kernels they integrate against.
//!
//! Every kernel used here factors as `Π_j K(x; 1/y_j)`, so the coefficient of
//! `y^{-β}` is the symmetric function `Π_j K_{β_j}(x)`. Integrating against
//! `Δ(y) f(y)` therefore only needs the `Δ` coefficients at `β - γ` for the
//! exponents `γ` of `f`, and the `x` side is assembled at the level of `Λ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use super::delta::delta_coeffs;
use super::seriessym::SeriesSym;
use super::CtError;
use crate::coeff::{QTSeries, RatQT};
use crate::pairing::z_factor;
use crate::partition::Partition;
use crate::symfunc::{Basis, NPoly, SymFunc};

/// One-variable kernels `K(x; 1/y) = Σ_k K_k(x) y^{-k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// `Π_i (t x_i/y;q)_∞ / (x_i/y;q)_∞`; `K_k = g_k`.
    Pi,
    /// `Π_i (1 + x_i/y)`; `K_k = e_k`.
    PiTilde,
    /// `Π_i 1/(x_i/y;q)_∞`; `K_k = h_k[X/(1-q)]`.
    QInverse,
    /// `Π_i (1 - x_i/y)^{-1}`; `K_k = h_k`.
    Schur,
    /// `Π_i (1 - x_i/y)`; `K_k = (-1)^k e_k`.
    SchurDual,
    /// `exp Σ_n (1-t^n) p_n(x) y^{-n}/n`; `K_k = h_k[(1-t)X]`.
    HallLittlewood,
}

fn power_sum_series(k: u32, weight: impl Fn(&Partition) -> RatQT) -> SymFunc {
    SymFunc::from_terms(
        Basis::P,
        Partition::all(k).into_iter().map(|r| {
            let w = weight(&r);
            (r, w)
        }),
    )
}

impl Kernel {
    /// The coefficient of `y^{-k}`, as an element of `Λ`.
    pub fn stratum(self, k: u32) -> SymFunc {
        match self {
            Kernel::Pi => power_sum_series(k, |r| z_factor(r).inv().unwrap()),
            Kernel::PiTilde => SymFunc::basis_element(Basis::E, Partition::new(vec![k])),
            Kernel::QInverse => power_sum_series(k, |r| {
                let mut w = RatQT::from_bigint(r.z()).inv().unwrap();
                for &p in r.parts() {
                    w = &w / &RatQT::one_minus(p, 0);
                }
                w
            }),
            Kernel::Schur => SymFunc::basis_element(Basis::H, Partition::new(vec![k])),
            Kernel::SchurDual => {
                let e = SymFunc::basis_element(Basis::E, Partition::new(vec![k]));
                if k % 2 == 1 {
                    e.neg()
                } else {
                    e
                }
            }
            Kernel::HallLittlewood => power_sum_series(k, |r| {
                let mut w = RatQT::from_bigint(r.z()).inv().unwrap();
                for &p in r.parts() {
                    w = &w * &RatQT::one_minus(0, p);
                }
                w
            }),
        }
    }

    /// `Π_j K_{ν_j}`, the coefficient of `y^{-β}` for any rearrangement `β` of `ν`.
    pub fn strata(self, nu: &Partition) -> SymFunc {
        let mut acc = SymFunc::one(Basis::P);
        for &k in nu.parts() {
            acc = acc.multiply(&self.stratum(k));
        }
        acc.convert(Basis::M)
    }
}

type StrataCache = HashMap<(Kernel, Partition, u32), SeriesSym>;
static STRATA: OnceLock<Mutex<StrataCache>> = OnceLock::new();

pub(crate) fn strata_series(kernel: Kernel, nu: &Partition, order: u32) -> SeriesSym {
    let cache = STRATA.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (kernel, nu.clone(), order);
    if let Some(s) = cache.lock().unwrap().get(&key) {
        return s.clone();
    }
    let s = SeriesSym::from_symfunc(&kernel.strata(nu), order).expect("kernel strata expand at the origin");
    cache.lock().unwrap().insert(key, s.clone());
    s
}

/// Weak compositions of `d` into `m` parts.
pub(crate) fn compositions(d: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(d: u32, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == m {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=d).rev() {
            cur.push(a);
            go(d - a, m, cur, out);
            cur.pop();
        }
    }
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(d, m, &mut cur, &mut out);
    out
}

/// `ct_y[ y^{-β} Δ(y) f(y) ]` summed over all `β >= 0` with the same sorting `ν`.
///
/// `f` is a Laurent polynomial in `m` variables with series coefficients.
pub(crate) fn ct_against_delta(m: usize, f: &[(Vec<i32>, QTSeries)], order: u32) -> BTreeMap<Partition, QTSeries> {
    let mut out: BTreeMap<Partition, QTSeries> = BTreeMap::new();
    let mut by_degree: BTreeMap<i32, Vec<&(Vec<i32>, QTSeries)>> = BTreeMap::new();
    for term in f {
        by_degree.entry(term.0.iter().sum()).or_default().push(term);
    }
    for (d, fs) in by_degree {
        if d < 0 {
            continue;
        }
        let betas = compositions(d as u32, m);
        let mut targets: BTreeSet<Vec<i32>> = BTreeSet::new();
        for b in &betas {
            for (g, _) in &fs {
                targets.insert(b.iter().zip(g).map(|(x, y)| *x as i32 - y).collect());
            }
        }
        let delta = delta_coeffs(m, order, &targets);
        for b in &betas {
            let mut acc = QTSeries::zero(order);
            for (g, c) in &fs {
                let a: Vec<i32> = b.iter().zip(g).map(|(x, y)| *x as i32 - y).collect();
                let dl = &delta[&a];
                if !dl.is_zero() {
                    acc = &acc + &(c * dl);
                }
            }
            if acc.is_zero() {
                continue;
            }
            let nu = Partition::new(b.clone());
            match out.get_mut(&nu) {
                Some(v) => *v = &*v + &acc,
                None => {
                    out.insert(nu, acc);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Assemble `Σ_ν c_ν Π_j K_{ν_j}(x)`.
pub(crate) fn assemble(kernel: Kernel, c: &BTreeMap<Partition, QTSeries>, order: u32) -> SeriesSym {
    let mut out = SeriesSym::zero(order);
    for (nu, cv) in c {
        out = out.add(&strata_series(kernel, nu, order).scale(cv));
    }
    out
}

fn degree(f: &SeriesSym) -> u32 {
    f.terms().keys().map(|l| l.weight()).max().unwrap_or(0)
}

fn laurent(f: &SeriesSym, m: usize) -> Vec<(Vec<i32>, QTSeries)> {
    f.monomials(m)
        .into_iter()
        .map(|(e, c)| (e.into_iter().map(|x| x as i32).collect(), c.clone()))
        .collect()
}

fn map_with(
    kernel: Kernel,
    n_to: Option<usize>,
    m_from: usize,
    f: &SeriesSym,
    d_out: u32,
) -> Result<SeriesSym, CtError> {
    let needed = degree(f);
    if needed > d_out {
        return Err(CtError::WindowTooSmall { needed, cap: d_out });
    }
    let c = ct_against_delta(m_from, &laurent(f, m_from), f.order());
    let out = assemble(kernel, &c, f.order());
    Ok(match n_to {
        Some(n) => out.restrict(n),
        None => out,
    })
}

/// `(N_{n,m} f)(x) = ct_y Π(x,ȳ) Δ(y) f(y)`; `n_to = None` means infinitely many `x`.
///
/// `f` is read in `m_from` variables. Output degrees above `d_out` are refused.
pub fn map_n(n_to: Option<usize>, m_from: usize, f: &SeriesSym, d_out: u32) -> Result<SeriesSym, CtError> {
    map_with(Kernel::Pi, n_to, m_from, f, d_out)
}

/// `(Ñ_{n,m} f)(x) = ct_y Π~(x,ȳ) Δ(y) f(y)`.
pub fn map_n_tilde(n_to: Option<usize>, m_from: usize, f: &SeriesSym, d_out: u32) -> Result<SeriesSym, CtError> {
    map_with(Kernel::PiTilde, n_to, m_from, f, d_out)
}

/// `(G_s f)(x) = (x_1 ⋯ x_r)^s f(x)`.
pub fn map_g(s: u32, f: &NPoly) -> NPoly {
    f.shift(&vec![s; f.n()])
}

/// `G_s` on a symmetric polynomial in `r` variables given in the monomial basis.
pub fn map_g_sym(s: u32, r: usize, f: &SeriesSym) -> SeriesSym {
    let mut out = SeriesSym::zero(f.order());
    for (l, c) in f.terms() {
        if l.len() > r {
            continue;
        }
        let mut e = l.parts().to_vec();
        e.resize(r, 0);
        out.add_term(Partition::new(e.into_iter().map(|x| x + s).collect()), c.clone());
    }
    out
}

/// A symmetric polynomial as a [`SeriesSym`] supported on `ℓ <= n`.
pub fn series_of_poly(p: &NPoly, order: u32) -> Result<SeriesSym, CtError> {
    let mut degrees: Vec<u32> = p.terms().keys().map(|e| e.iter().sum()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = SeriesSym::zero(order);
    for d in degrees {
        out = out.add(&SeriesSym::from_symfunc(&SymFunc::from_poly(p, d)?, order)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn ser(s: &str, order: u32) -> QTSeries {
        QTSeries::from_ratqt(&s.parse().unwrap(), order).unwrap()
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2).len(), 5);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
        assert!(compositions(1, 0).is_empty());
    }

    #[test]
    fn kernels_in_one_variable() {
        // g_1 = (1-t)/(1-q) p_1
        let g1 = Kernel::Pi.stratum(1);
        let p1 = SymFunc::basis_element(Basis::P, part![1]);
        assert!(g1.equals(&p1.scale(&"(1-t)/(1-q)".parse().unwrap())));
        assert!(Kernel::Schur
            .stratum(2)
            .equals(&SymFunc::basis_element(Basis::H, part![2])));
    }

    #[test]
    fn n_map_on_single_variable() {
        let order = 4;
        let one = SeriesSym::one(order);
        assert_eq!(map_n(None, 0, &one, 0).unwrap(), one);
        let y = map_g_sym(1, 1, &one);
        let out = map_n(None, 1, &y, 3).unwrap();
        let mut expect = SeriesSym::zero(order);
        expect.add_term(part![1], ser("(1-t)/(1-q)", order));
        assert_eq!(out, expect);
        let out = map_n_tilde(None, 1, &y, 3).unwrap();
        assert_eq!(
            out,
            SeriesSym::from_symfunc(&SymFunc::basis_element(Basis::M, part![1]), order).unwrap()
        );
        assert!(matches!(map_n(None, 1, &y, 0), Err(CtError::WindowTooSmall { .. })));
    }

    #[test]
    fn g_map_examples() {
        let one = NPoly::one(2);
        assert_eq!(map_g(1, &one), NPoly::from_int_terms(2, &[(&[1, 1], 1)]));
        let f = NPoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(map_g(2, &f), NPoly::from_int_terms(2, &[(&[3, 2], 1), (&[2, 3], 1)]));
    }
}
