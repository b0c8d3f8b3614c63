//! The boson Fock space, realized on `Λ` through the power sums: `p_n` creates,
//! `p̄_n = n(1-q^n)/(1-t^n) ∂/∂p_n` annihilates, and `<f|g>` is the vacuum part of
//! `f(p̄) g`. Also the scalar identities behind the bosonized integrands at `t = q^β`.

use std::collections::BTreeMap;

use crate::coeff::{Poly2, QTSeries, RatQT};
use crate::ctengine::{var_names, Window, WindowSeries};
use crate::macdonald::{family, p_of, q_of};
use crate::pairing::qbinomial_coeff;
use crate::partition::Partition;
use crate::symfunc::{distinct_permutations, Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Bra,
    Ket,
}

/// A vector of the Fock space, stored as its image in `Λ` in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockState {
    pub underlying: SymFunc,
    pub side: Side,
}

impl FockState {
    pub fn ket(f: &SymFunc) -> Self {
        FockState {
            underlying: f.convert(Basis::P),
            side: Side::Ket,
        }
    }

    pub fn bra(f: &SymFunc) -> Self {
        FockState {
            underlying: f.convert(Basis::P),
            side: Side::Bra,
        }
    }

    /// `<self|ket>`: the vacuum component of `f(p̄) g`.
    pub fn pair(&self, ket: &FockState) -> RatQT {
        assert_eq!(
            (self.side, ket.side),
            (Side::Bra, Side::Ket),
            "pairing needs a bra and a ket"
        );
        DiffOperator::annihilators(&self.underlying)
            .apply(&ket.underlying)
            .coeff(&Partition::empty())
    }
}

/// `n(1-q^n)/(1-t^n)`.
pub fn commutator_value(n: u32) -> RatQT {
    &RatQT::one_minus(n, 0).scale_int(n as i64) / &RatQT::one_minus(0, n)
}

fn union(a: &Partition, b: &Partition) -> Partition {
    Partition::new(a.parts().iter().chain(b.parts()).copied().collect())
}

/// A normally ordered polynomial `Σ c p_ρ p̄_σ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator {
    pub terms: Vec<(RatQT, Partition, Partition)>,
}

impl DiffOperator {
    pub fn identity() -> Self {
        DiffOperator {
            terms: vec![(RatQT::one(), Partition::empty(), Partition::empty())],
        }
    }

    /// Multiplication by `p_n`.
    pub fn creation(n: u32) -> Self {
        DiffOperator {
            terms: vec![(RatQT::one(), Partition::new(vec![n]), Partition::empty())],
        }
    }

    /// `p̄_n`.
    pub fn annihilation(n: u32) -> Self {
        DiffOperator {
            terms: vec![(RatQT::one(), Partition::empty(), Partition::new(vec![n]))],
        }
    }

    /// `f(p̄)`: every `p_ρ` of `f` replaced by `p̄_ρ`.
    pub fn annihilators(f: &SymFunc) -> Self {
        let p = f.convert(Basis::P);
        DiffOperator {
            terms: p
                .terms()
                .iter()
                .map(|(l, c)| (c.clone(), Partition::empty(), l.clone()))
                .collect(),
        }
    }

    fn lower(n: u32, f: &SymFunc) -> SymFunc {
        let k = commutator_value(n);
        let mut out = SymFunc::zero(Basis::P);
        for (l, c) in f.terms() {
            let mult = l.parts().iter().filter(|&&x| x == n).count();
            if mult == 0 {
                continue;
            }
            let mut rest = l.parts().to_vec();
            let at = rest.iter().position(|&x| x == n).expect("part present");
            rest.remove(at);
            out.add_term(Partition::new(rest), (c * &k).scale_int(mult as i64));
        }
        out
    }

    pub fn apply(&self, f: &SymFunc) -> SymFunc {
        let f = f.convert(Basis::P);
        let mut out = SymFunc::zero(Basis::P);
        for (c, rho, sigma) in &self.terms {
            let mut g = f.clone();
            for &n in sigma.parts() {
                g = Self::lower(n, &g);
            }
            for (l, a) in g.terms() {
                out.add_term(union(rho, l), a * c);
            }
        }
        out
    }
}

/// `([p̄_n, p_m] f) = n(1-q^n)/(1-t^n) δ_{nm} f`.
pub fn commutator_check(n: u32, m: u32, f: &SymFunc) -> bool {
    let ab = DiffOperator::annihilation(n).apply(&DiffOperator::creation(m).apply(f));
    let ba = DiffOperator::creation(m).apply(&DiffOperator::annihilation(n).apply(f));
    let expect = if n == m {
        f.scale(&commutator_value(n))
    } else {
        SymFunc::zero(Basis::P)
    };
    ab.sub(&ba).equals(&expect)
}

/// `<f| g |h>`, with `g` acting by multiplication.
pub fn matrix_element(f: &SymFunc, g: &SymFunc, h: &SymFunc) -> RatQT {
    FockState::bra(f).pair(&FockState::ket(&g.multiply(h)))
}

/// `Q_{λ/μ} = Σ_ν <Q_λ| P_μ |P_ν> Q_ν`, in the monomial basis.
pub fn skew_via_fock(lam: &Partition, mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::M);
    if mu.weight() > lam.weight() {
        return out;
    }
    let q_lam = q_of(lam);
    let p_mu = p_of(mu);
    for nu in family(lam.weight() - mu.weight()).iter() {
        let c = matrix_element(&q_lam, &p_mu, &nu.p);
        if !c.is_zero() {
            out = out.add(&nu.q.scale(&c));
        }
    }
    out.convert(Basis::M)
}

/// `Q_{λ/μ} = P_μ(p̄) Q_λ`, in the monomial basis.
pub fn skew_via_diffop(lam: &Partition, mu: &Partition) -> SymFunc {
    DiffOperator::annihilators(&p_of(mu))
        .apply(&q_of(lam))
        .convert(Basis::M)
}

/// `Σ_λ P_λ <Q_λ|f> = f`, degree by degree.
pub fn completeness_check(f: &SymFunc) -> bool {
    let fs = FockState::ket(f);
    let mut out = SymFunc::zero(Basis::P);
    for d in f.degrees() {
        for m in family(d).iter() {
            let c = FockState::bra(&m.q).pair(&fs);
            out = out.add(&m.p.scale(&c));
        }
    }
    out.equals(f)
}

/// Outcome of the `t = q^β` product identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexReport {
    pub delta: bool,
    /// `None` when `d < β`, where truncating each factor at `u^d` is not exact in `x`.
    pub delta_laurent: Option<bool>,
    pub pi: bool,
    pub q_order: u32,
}

impl VertexReport {
    pub fn passed(&self) -> bool {
        self.delta && self.pi && self.delta_laurent != Some(false)
    }
}

fn at_t_equals_q_power(r: &RatQT, beta: u32, order: u32) -> QTSeries {
    let s = r
        .substitute(&RatQT::q(), &RatQT::monomial(beta, 0))
        .expect("denominator survives t = q^β");
    QTSeries::from_ratqt(&s, order).expect("no pole at q = 0")
}

/// `(u;q)_∞ / (t u;q)_∞ = Σ_m Π_{k<m}(t - q^k) / (q;q)_m u^m`.
fn delta_factor_coeff(m: u32) -> RatQT {
    let mut c = RatQT::one();
    for k in 0..m {
        let num = RatQT::t() - RatQT::monomial(k, 0);
        c = &(&c * &num) / &RatQT::one_minus(k + 1, 0);
    }
    c
}

fn product_of(vars: &[String], order: u32, factors: &[Vec<(Vec<i32>, QTSeries)>], window: &Window) -> WindowSeries {
    let mut acc = WindowSeries::one(vars.to_vec(), order);
    for f in factors {
        let s = WindowSeries::from_terms(vars.to_vec(), order, f.iter().cloned());
        acc = acc.mul(&s, window);
    }
    acc
}

/// `(1 - q^k u)` for `k < β`, multiplied out, as `(u-power, q-series)`.
fn finite_vertex(beta: u32, order: u32) -> Vec<(u32, QTSeries)> {
    let mut p: Vec<Poly2> = vec![Poly2::one()];
    for k in 0..beta {
        let mut next = vec![Poly2::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] = next[i].add(c);
            next[i + 1] = next[i + 1].sub(&c.shift(k, 0));
        }
        p = next;
    }
    p.iter()
        .enumerate()
        .map(|(i, c)| (i as u32, QTSeries::from_poly(c, order)))
        .collect()
}

/// At `t = q^β`: `Δ(x) = Π_{i≠j} Π_{k<β} (1 - q^k x_i/x_j)` and
/// `Π(x,y) = Π_{i,j} Π_{k<β} (1 - q^k x_i y_j)^{-1}`, through total `x`-degree `d`
/// and `q`-order `dβ + d`.
///
/// The `Δ` side is compared factor by factor in `u = x_i/x_j` through `u^d`; when `d >= β`
/// the truncation is exact and the full Laurent products in `x` are compared too.
pub fn vertex_product_check(beta: u32, n: usize, d: u32) -> VertexReport {
    assert!((1..=3).contains(&beta) && n <= 4, "β in 1..=3 and n <= 4");
    let order = d * beta + d;
    let pair_list: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let series_lhs: Vec<(u32, QTSeries)> = (0..=d)
        .map(|m| (m, at_t_equals_q_power(&delta_factor_coeff(m), beta, order)))
        .collect();
    let finite = finite_vertex(beta, order);

    let delta = (0..=d).all(|m| {
        let zero = QTSeries::zero(order);
        let rhs = finite.iter().find(|(k, _)| *k == m).map_or(&zero, |(_, c)| c);
        &series_lhs[m as usize].1 == rhs
    });

    let delta_laurent = (d >= beta).then(|| {
        let x_vars = var_names("x", n);
        let in_x = |coeffs: &[(u32, QTSeries)], (i, j): (usize, usize)| -> Vec<(Vec<i32>, QTSeries)> {
            coeffs
                .iter()
                .filter(|(m, _)| *m <= d)
                .map(|(m, c)| {
                    let mut e = vec![0; n];
                    e[i] += *m as i32;
                    e[j] -= *m as i32;
                    (e, c.clone())
                })
                .collect()
        };
        let lhs: Vec<_> = pair_list.iter().map(|&p| in_x(&series_lhs, p)).collect();
        let rhs: Vec<_> = pair_list.iter().map(|&p| in_x(&finite, p)).collect();
        product_of(&x_vars, order, &lhs, &Window::Unbounded).terms()
            == product_of(&x_vars, order, &rhs, &Window::Unbounded).terms()
    });

    let mut xy_vars = var_names("x", n);
    xy_vars.extend(var_names("y", n));
    let geometric = |k: u32| -> Vec<(u32, QTSeries)> {
        (0..=d)
            .map(|r| (r, QTSeries::from_poly(&Poly2::monomial(1.into(), k * r, 0), order)))
            .collect()
    };
    let in_xy = |coeffs: &[(u32, QTSeries)], i: usize, j: usize| -> Vec<(Vec<i32>, QTSeries)> {
        coeffs
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; 2 * n];
                e[i] = *m as i32;
                e[n + j] = *m as i32;
                (e, c.clone())
            })
            .collect()
    };
    let pi_lhs_coeffs: Vec<(u32, QTSeries)> = (0..=d)
        .map(|m| (m, at_t_equals_q_power(&qbinomial_coeff(m), beta, order)))
        .collect();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            lhs.push(in_xy(&pi_lhs_coeffs, i, j));
            for k in 0..beta {
                rhs.push(in_xy(&geometric(k), i, j));
            }
        }
    }
    let xy_box = Window::Degree(2 * d as i32);
    let pi = product_of(&xy_vars, order, &lhs, &xy_box).terms() == product_of(&xy_vars, order, &rhs, &xy_box).terms();

    VertexReport {
        delta,
        delta_laurent,
        pi,
        q_order: order,
    }
}

type TPoly = BTreeMap<Vec<u32>, Poly2>;

fn tpoly_mul(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out: TPoly = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e).or_insert_with(Poly2::zero);
            *entry = entry.add(&ca.mul(cb));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn linear(n: usize, i: usize, j: usize, tj: bool) -> TPoly {
    let mut ei = vec![0; n];
    ei[i] = 1;
    let mut ej = vec![0; n];
    ej[j] = 1;
    let cj = if tj {
        Poly2::t().neg()
    } else {
        Poly2::constant((-1).into())
    };
    BTreeMap::from([(ei, Poly2::one()), (ej, cj)])
}

fn sign_of(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_σ Π_{i<j} (x_σi - t x_σj)/(x_σi - x_σj) = Π_k (1-t^k)/(1-t)`, checked as
/// `Σ_σ sgn(σ) σ(Π_{i<j}(x_i - t x_j)) = [n]_t! Π_{i<j}(x_i - x_j)` in `Z[t][x]`.
pub fn symmetrizer_check(n: usize) -> bool {
    assert!(n <= 6, "n <= 6");
    let one: TPoly = BTreeMap::from([(vec![0; n], Poly2::one())]);
    let mut a = one.clone();
    let mut vdm = one;
    for i in 0..n {
        for j in i + 1..n {
            a = tpoly_mul(&a, &linear(n, i, j, true));
            vdm = tpoly_mul(&vdm, &linear(n, i, j, false));
        }
    }
    let ids: Vec<u32> = (0..n as u32).collect();
    let mut lhs: TPoly = BTreeMap::new();
    for sigma in distinct_permutations(&ids) {
        let sigma: Vec<usize> = sigma.into_iter().map(|s| s as usize).collect();
        let sg = sign_of(&sigma);
        for (e, c) in &a {
            let mut f = vec![0; n];
            for (i, &s) in sigma.iter().enumerate() {
                f[s] = e[i];
            }
            let entry = lhs.entry(f).or_insert_with(Poly2::zero);
            *entry = entry.add(&c.scale(&sg.into()));
        }
    }
    lhs.retain(|_, c| !c.is_zero());
    let mut factorial = Poly2::one();
    for k in 1..=n as u32 {
        let qk = (0..k).fold(Poly2::zero(), |acc, i| acc.add(&Poly2::monomial(1.into(), 0, i)));
        factorial = factorial.mul(&qk);
    }
    let rhs: TPoly = vdm.into_iter().map(|(e, c)| (e, c.mul(&factorial))).collect();
    lhs == rhs
}
