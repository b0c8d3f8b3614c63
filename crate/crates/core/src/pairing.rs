//! The scalar product `<,>_{q,t}`, the involution-like map `ω_{q,t}`, and the Cauchy kernels.

use std::collections::BTreeMap;

use crate::coeff::{qpochhammer, RatQT};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// `z_λ(q,t) = z_λ Π_i (1 - q^{λ_i}) / (1 - t^{λ_i})`.
pub fn z_factor(lam: &Partition) -> RatQT {
    let mut z = RatQT::from_bigint(lam.z());
    for &p in lam.parts() {
        z = &z * &(&RatQT::one_minus(p, 0) / &RatQT::one_minus(0, p));
    }
    z
}

/// `z_λ(0,t)`, the Hall–Littlewood weight.
pub fn z_factor_hl(lam: &Partition) -> RatQT {
    let mut z = RatQT::from_bigint(lam.z());
    for &p in lam.parts() {
        z = &z / &RatQT::one_minus(0, p);
    }
    z
}

/// Pairing that is diagonal on power sums with weight `z(ρ)` on `p_ρ`.
pub fn inner_with(f: &SymFunc, g: &SymFunc, z: impl Fn(&Partition) -> RatQT) -> RatQT {
    let a = f.convert(Basis::P);
    let b = g.convert(Basis::P);
    let mut acc = RatQT::zero();
    for (l, ca) in a.terms() {
        if let Some(cb) = b.terms().get(l) {
            acc = &acc + &(&(ca * cb) * &z(l));
        }
    }
    acc
}

pub fn inner_qt(f: &SymFunc, g: &SymFunc) -> RatQT {
    inner_with(f, g, z_factor)
}

/// `<,>_{t,q}`.
pub fn inner_tq(f: &SymFunc, g: &SymFunc) -> RatQT {
    inner_with(f, g, |l| z_factor(l).swap_qt())
}

/// `ω_{q,t}`: `p_r -> (-1)^{r-1} (1 - q^r)/(1 - t^r) p_r`, extended multiplicatively.
pub fn omega_qt(f: &SymFunc) -> SymFunc {
    omega_with(f, false)
}

/// `ω_{t,q}`, the inverse of `ω_{q,t}`.
pub fn omega_tq(f: &SymFunc) -> SymFunc {
    omega_with(f, true)
}

fn omega_with(f: &SymFunc, swapped: bool) -> SymFunc {
    let p = f.convert(Basis::P);
    let mut out = SymFunc::zero(Basis::P);
    for (l, c) in p.terms() {
        let mut s = c.clone();
        for &r in l.parts() {
            let mut k = &RatQT::one_minus(r, 0) / &RatQT::one_minus(0, r);
            if swapped {
                k = k.swap_qt();
            }
            if r % 2 == 0 {
                k = -k;
            }
            s = &s * &k;
        }
        out.add_term(l.clone(), s);
    }
    out
}

/// Coefficients indexed by `(x exponents, y exponents)`.
pub type Bigraded = BTreeMap<(Vec<u32>, Vec<u32>), RatQT>;

/// `(t;q)_m / (q;q)_m`.
pub fn qbinomial_coeff(m: u32) -> RatQT {
    &qpochhammer(1, 0, 1, m) / &qpochhammer(1, 1, 0, m)
}

/// `Π(x,y;q,t) = Π_{i,j} (t x_i y_j; q)_∞ / (x_i y_j; q)_∞` through total `x`-degree `d`.
pub fn cauchy_pi(nx: usize, ny: usize, d: u32) -> Bigraded {
    let coeffs: Vec<RatQT> = (0..=d).map(qbinomial_coeff).collect();
    kernel_product(nx, ny, d, |m| coeffs.get(m as usize).cloned())
}

/// `Π~(x,y) = Π_{i,j} (1 + x_i y_j)` through total `x`-degree `d`.
pub fn cauchy_pi_tilde(nx: usize, ny: usize, d: u32) -> Bigraded {
    kernel_product(nx, ny, d, |m| if m <= 1 { Some(RatQT::one()) } else { None })
}

/// Product over all pairs of `Σ_m c(m) (x_i y_j)^m`; `c` returns `None` past the last term.
pub fn kernel_product(nx: usize, ny: usize, d: u32, c: impl Fn(u32) -> Option<RatQT>) -> Bigraded {
    let mut acc: Bigraded = BTreeMap::new();
    acc.insert((vec![0; nx], vec![0; ny]), RatQT::one());
    for i in 0..nx {
        for j in 0..ny {
            let mut next: Bigraded = BTreeMap::new();
            for ((ex, ey), v) in &acc {
                let used: u32 = ex.iter().sum();
                for m in 0..=(d - used) {
                    let Some(cm) = c(m) else { break };
                    if cm.is_zero() {
                        continue;
                    }
                    let mut ex2 = ex.clone();
                    let mut ey2 = ey.clone();
                    ex2[i] += m;
                    ey2[j] += m;
                    let e = next.entry((ex2, ey2)).or_insert_with(RatQT::zero);
                    *e = &*e + &(v * &cm);
                }
            }
            next.retain(|_, v| !v.is_zero());
            acc = next;
        }
    }
    acc
}

/// Component of bidegree `(d, d)`.
pub fn bidegree(k: &Bigraded, d: u32) -> Bigraded {
    k.iter()
        .filter(|((ex, ey), _)| ex.iter().sum::<u32>() == d && ey.iter().sum::<u32>() == d)
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect()
}

/// `Σ_i f_i(x) g_i(y)` for symmetric `f_i`, `g_i` restricted to `nx`, `ny` variables.
pub fn outer_sum(pairs: &[(SymFunc, SymFunc)], nx: usize, ny: usize) -> Bigraded {
    let mut out: Bigraded = BTreeMap::new();
    for (f, g) in pairs {
        let fx = f.evaluate_n(nx);
        let gy = g.evaluate_n(ny);
        for (ex, a) in fx.terms() {
            for (ey, b) in gy.terms() {
                let e = out.entry((ex.clone(), ey.clone())).or_insert_with(RatQT::zero);
                *e = &*e + &(a * b);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn r(s: &str) -> RatQT {
        s.parse().unwrap()
    }

    #[test]
    fn z_factors() {
        assert_eq!(z_factor(&part![1]), r("(1-q)/(1-t)"));
        assert_eq!(z_factor(&part![]), RatQT::one());
        assert_eq!(z_factor(&part![1, 1]), r("2*((1-q)/(1-t))^2"));
        for l in Partition::all(4) {
            let at_q = z_factor(&l).substitute(&RatQT::q(), &RatQT::q()).unwrap();
            assert_eq!(at_q, RatQT::from_bigint(l.z()));
        }
    }

    #[test]
    fn scalar_products() {
        let p = |l| SymFunc::basis_element(Basis::P, l);
        assert_eq!(inner_qt(&p(part![1]), &p(part![1])), r("(1-q)/(1-t)"));
        assert!(inner_qt(&p(part![2]), &p(part![1, 1])).is_zero());
        // m_(1,1) = (p_(1,1) - p_(2))/2
        let m11 = SymFunc::basis_element(Basis::M, part![1, 1]);
        let expect = &(&z_factor(&part![1, 1]) + &z_factor(&part![2])) / &RatQT::from_int(4);
        assert_eq!(inner_qt(&m11, &m11), expect);
    }

    #[test]
    fn omega_on_power_sums() {
        let p = |l| SymFunc::basis_element(Basis::P, l);
        assert_eq!(omega_qt(&p(part![1])), p(part![1]).scale(&r("(1-q)/(1-t)")));
        assert_eq!(omega_qt(&p(part![2])), p(part![2]).scale(&r("-(1-q^2)/(1-t^2)")));
        assert_eq!(omega_tq(&omega_qt(&p(part![3, 1]))), p(part![3, 1]));
    }

    #[test]
    fn kernel_coefficients() {
        let k = cauchy_pi(1, 2, 2);
        assert_eq!(k[&(vec![0], vec![0, 0])], RatQT::one());
        assert_eq!(k[&(vec![1], vec![1, 0])], r("(1-t)/(1-q)"));
        assert_eq!(k[&(vec![2], vec![1, 1])], r("((1-t)/(1-q))^2"));
        let kt = cauchy_pi_tilde(1, 1, 2);
        assert_eq!(kt[&(vec![1], vec![1])], RatQT::one());
        assert!(!kt.contains_key(&(vec![2], vec![2])));
        let kt = cauchy_pi_tilde(2, 2, 2);
        assert_eq!(kt[&(vec![1, 1], vec![1, 1])], RatQT::from_int(2));
    }
}
