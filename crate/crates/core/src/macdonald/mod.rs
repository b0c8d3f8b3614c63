//! Macdonald symmetric functions `P_λ(x;q,t)` and their duals `Q_λ`.

mod cache;
mod operators;

pub use cache::{load_cache, save_cache, CacheError, CACHE_VERSION};
pub use operators::{dr_apply, dr_eigencheck, dr_eigenvalue, OperatorError};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::coeff::RatQT;
use crate::pairing::{inner_qt, inner_with, z_factor, z_factor_hl};
use crate::partition::{Dominance, Partition};
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Debug)]
pub struct MacdonaldPair {
    pub lam: Partition,
    /// Monomial expansion, unitriangular.
    pub p: SymFunc,
    pub q: SymFunc,
    pub b: RatQT,
    /// `<P_λ, P_λ>_{q,t} = 1/b_λ`.
    pub norm: RatQT,
}

/// Dominance-order Gram–Schmidt of the monomial basis of degree `d` under the
/// pairing with power-sum weights `z`. Returns `(λ, P_λ in m, <P_λ,P_λ>)`.
pub fn gram_schmidt(d: u32, z: impl Fn(&Partition) -> RatQT) -> Vec<(Partition, SymFunc, RatQT)> {
    let parts = Partition::all(d);
    let n = parts.len();
    let mp: Vec<SymFunc> = parts
        .iter()
        .map(|l| SymFunc::basis_element(Basis::M, l.clone()).convert(Basis::P))
        .collect();
    let zs: HashMap<Partition, RatQT> = parts.iter().map(|l| (l.clone(), z(l))).collect();
    let mut gram = vec![vec![RatQT::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let g = inner_with(&mp[i], &mp[j], |l| zs[l].clone());
            gram[i][j] = g.clone();
            gram[j][i] = g;
        }
    }
    // lexicographic increasing order is a linear extension of dominance
    let mut done: Vec<Option<(Vec<RatQT>, RatQT)>> = vec![None; n];
    for i in (0..n).rev() {
        let mut coeffs = vec![RatQT::zero(); n];
        coeffs[i] = RatQT::one();
        for k in (i + 1..n).rev() {
            if parts[k].dominance(&parts[i]) != Dominance::Leq {
                continue;
            }
            let (pk, nk) = done[k].as_ref().unwrap();
            let mut ip = RatQT::zero();
            for (v, c) in pk.iter().enumerate() {
                if !c.is_zero() {
                    ip = &ip + &(c * &gram[i][v]);
                }
            }
            if ip.is_zero() {
                continue;
            }
            let f = &ip / nk;
            for (v, c) in pk.iter().enumerate() {
                if !c.is_zero() {
                    coeffs[v] = &coeffs[v] - &(&f * c);
                }
            }
        }
        // <P_λ, P_λ> = <m_λ, P_λ>
        let mut norm = RatQT::zero();
        for (v, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                norm = &norm + &(c * &gram[i][v]);
            }
        }
        done[i] = Some((coeffs, norm));
    }
    parts
        .iter()
        .zip(done)
        .map(|(l, d)| {
            let (c, nrm) = d.unwrap();
            let f = SymFunc::from_terms(Basis::M, parts.iter().cloned().zip(c));
            (l.clone(), f, nrm)
        })
        .collect()
}

/// `b_λ = Π_s (1 - q^{a(s)} t^{l(s)+1}) / (1 - q^{a(s)+1} t^{l(s)})`.
pub fn b_coeff(lam: &Partition) -> RatQT {
    let mut b = RatQT::one();
    for cell in lam.cells() {
        let (a, l, _, _) = lam.armleg(cell).unwrap();
        b = &b * &(&RatQT::one_minus(a, l + 1) / &RatQT::one_minus(a + 1, l));
    }
    b
}

static FAMILIES: OnceLock<Mutex<HashMap<u32, Arc<Vec<MacdonaldPair>>>>> = OnceLock::new();

/// All `P_λ` with `|λ| = d`, in reverse-lexicographic order; memoized.
pub fn family(d: u32) -> Arc<Vec<MacdonaldPair>> {
    let cache = FAMILIES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&d) {
        return f.clone();
    }
    let built: Vec<MacdonaldPair> = gram_schmidt(d, z_factor)
        .into_iter()
        .map(|(lam, p, norm)| {
            let b = b_coeff(&lam);
            assert_eq!(
                &norm * &b,
                RatQT::one(),
                "norm of P{lam} disagrees with the arm-leg product"
            );
            MacdonaldPair {
                q: p.scale(&b),
                lam,
                p,
                b,
                norm,
            }
        })
        .collect();
    let built = Arc::new(built);
    cache.lock().unwrap().entry(d).or_insert(built).clone()
}

/// Insert precomputed families (e.g. from a cache file) into the session memo.
pub fn seed_family(d: u32, pairs: Vec<MacdonaldPair>) {
    let cache = FAMILIES.get_or_init(|| Mutex::new(HashMap::new()));
    cache.lock().unwrap().entry(d).or_insert_with(|| Arc::new(pairs));
}

pub fn macdonald_p(lam: &Partition) -> MacdonaldPair {
    family(lam.weight())
        .iter()
        .find(|m| &m.lam == lam)
        .cloned()
        .expect("partition of its own weight")
}

pub fn p_of(lam: &Partition) -> SymFunc {
    macdonald_p(lam).p
}

pub fn q_of(lam: &Partition) -> SymFunc {
    macdonald_p(lam).q
}

/// `P_λ(x;t,q)`.
pub fn p_swapped(lam: &Partition) -> SymFunc {
    p_of(lam).swap_qt()
}

/// Hall–Littlewood `P_λ(x;t)`, by Gram–Schmidt under `<,>_{0,t}`.
pub fn hall_littlewood(d: u32) -> Vec<(Partition, SymFunc)> {
    gram_schmidt(d, z_factor_hl)
        .into_iter()
        .map(|(l, p, _)| (l, p))
        .collect()
}

/// `f^λ_{μν} = <Q_λ, P_μ P_ν>_{q,t}` over all `λ` of weight `|μ|+|ν|`.
pub fn structure_f(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, RatQT> {
    let prod = p_of(mu).multiply(&p_of(nu));
    let mut out = BTreeMap::new();
    for m in family(mu.weight() + nu.weight()).iter() {
        let c = inner_qt(&m.q, &prod);
        if !c.is_zero() {
            out.insert(m.lam.clone(), c);
        }
    }
    out
}

/// `Q_{λ/μ} = Σ_ν f^λ_{μν} Q_ν`, in the monomial basis.
pub fn skew_q(lam: &Partition, mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::M);
    if mu.weight() > lam.weight() {
        return out;
    }
    let q_lam = q_of(lam);
    let d = lam.weight() - mu.weight();
    let p_mu = p_of(mu);
    for nu in family(d).iter() {
        let c = inner_qt(&q_lam, &p_mu.multiply(&nu.p));
        if !c.is_zero() {
            out = out.add(&nu.q.scale(&c));
        }
    }
    out
}

/// `P_{λ/μ} = b_λ^{-1} b_μ Q_{λ/μ}`.
pub fn skew_p(lam: &Partition, mu: &Partition) -> SymFunc {
    skew_q(lam, mu).scale(&(&b_coeff(mu) / &b_coeff(lam)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `t = q`: Schur functions.
    Schur,
    /// `q = 0`: Hall–Littlewood functions.
    HallLittlewood,
    /// `t = 1`: monomial functions.
    Monomial,
    /// `q = 1`: elementary functions `e_{λ'}`.
    DualE,
    /// `(q,t) -> (1/q, 1/t)` leaves `P_λ` unchanged.
    InverseQT,
}

impl Specialization {
    pub const ALL: [Specialization; 5] = [
        Specialization::Schur,
        Specialization::HallLittlewood,
        Specialization::Monomial,
        Specialization::DualE,
        Specialization::InverseQT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::Schur => "schur",
            Specialization::HallLittlewood => "hall-littlewood",
            Specialization::Monomial => "monomial",
            Specialization::DualE => "dual-e",
            Specialization::InverseQT => "inverse-qt",
        }
    }
}

/// Check one of the classical degenerations of `P_λ` exactly.
pub fn specialize_check(lam: &Partition, which: Specialization) -> bool {
    let p = p_of(lam);
    let (q, t) = (RatQT::q(), RatQT::t());
    let sub = |qi: &RatQT, ti: &RatQT| p.map_coeffs(|c| c.substitute(qi, ti));
    match which {
        Specialization::Schur => match sub(&q, &q) {
            Ok(f) => f.equals(&SymFunc::basis_element(Basis::S, lam.clone())),
            Err(_) => false,
        },
        Specialization::HallLittlewood => {
            let hl = hall_littlewood(lam.weight());
            let reference = &hl.iter().find(|(l, _)| l == lam).unwrap().1;
            match sub(&RatQT::zero(), &t) {
                Ok(f) => f.equals(reference),
                Err(_) => false,
            }
        }
        Specialization::Monomial => match sub(&q, &RatQT::one()) {
            Ok(f) => f.equals(&SymFunc::basis_element(Basis::M, lam.clone())),
            Err(_) => false,
        },
        Specialization::DualE => match sub(&RatQT::one(), &t) {
            Ok(f) => f.equals(&SymFunc::basis_element(Basis::E, lam.conjugate())),
            Err(_) => false,
        },
        Specialization::InverseQT => {
            let (qi, ti) = (q.inv().unwrap(), t.inv().unwrap());
            match sub(&qi, &ti) {
                Ok(f) => f.equals(&p),
                Err(_) => false,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn r(s: &str) -> RatQT {
        s.parse().unwrap()
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(p_of(&part![]), SymFunc::one(Basis::M));
        assert_eq!(p_of(&part![1]), SymFunc::basis_element(Basis::M, part![1]));
        let expect = SymFunc::from_terms(
            Basis::M,
            [(part![2], RatQT::one()), (part![1, 1], r("(1+q)*(1-t)/(1-q*t)"))],
        );
        assert_eq!(p_of(&part![2]), expect);
    }

    #[test]
    fn arm_leg_products() {
        assert_eq!(b_coeff(&part![1]), r("(1-t)/(1-q)"));
        assert_eq!(b_coeff(&part![]), RatQT::one());
        assert_eq!(b_coeff(&part![2]), r("(1-t)*(1-q*t)/((1-q)*(1-q^2))"));
    }

    #[test]
    fn skew_edge_cases() {
        let l = part![2, 1];
        assert!(skew_q(&l, &part![]).equals(&q_of(&l)));
        assert!(skew_q(&l, &l).equals(&SymFunc::one(Basis::M)));
        let f = structure_f(&part![1], &part![1]);
        assert!(skew_q(&part![2], &part![1]).equals(&q_of(&part![1]).scale(&f[&part![2]])));
    }

    #[test]
    fn degenerations_of_degree_two() {
        for l in Partition::all(2) {
            for s in Specialization::ALL {
                assert!(specialize_check(&l, s), "{l} {s:?}");
            }
        }
    }
}
