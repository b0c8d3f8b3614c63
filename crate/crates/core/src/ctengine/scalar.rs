//! The constant-term scalar product `<,>'_n` and its closed-form norms.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::delta::delta_coeffs;
use super::CtError;
use crate::coeff::{Poly2, QTSeries};
use crate::macdonald::{dr_apply, p_of};
use crate::partition::Partition;
use crate::symfunc::{NPoly, SymFunc};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

fn series_terms(p: &NPoly, order: u32) -> Result<Vec<(Vec<u32>, QTSeries)>, CtError> {
    p.terms()
        .iter()
        .map(|(e, c)| Ok((e.clone(), QTSeries::from_ratqt(c, order)?)))
        .collect()
}

/// `(1/n!) ct[ f(x̄) g(x) Δ(x) ]` for polynomials in the same `n` variables.
pub fn scalar_prime_poly(f: &NPoly, g: &NPoly, order: u32) -> Result<QTSeries, CtError> {
    assert_eq!(f.n(), g.n(), "pairing needs a common variable count");
    let n = f.n();
    let fs = series_terms(f, order)?;
    let gs = series_terms(g, order)?;
    let diff = |b: &[u32], c: &[u32]| -> Vec<i32> { b.iter().zip(c).map(|(x, y)| *x as i32 - *y as i32).collect() };
    let mut targets = BTreeSet::new();
    for (b, _) in &fs {
        for (c, _) in &gs {
            targets.insert(diff(b, c));
        }
    }
    let delta = delta_coeffs(n.max(1), order, &targets);
    let mut acc = QTSeries::zero(order);
    for (b, fb) in &fs {
        for (c, gc) in &gs {
            let d = &delta[&diff(b, c)];
            if !d.is_zero() {
                acc = &acc + &(&(fb * gc) * d);
            }
        }
    }
    Ok(acc.scale(&BigRational::new(BigInt::from(1), factorial(n))))
}

/// `<f, g>'_{n;q,t}` to order `M`.
pub fn scalar_prime(f: &SymFunc, g: &SymFunc, n: usize, order: u32) -> Result<QTSeries, CtError> {
    scalar_prime_poly(&f.evaluate_n(n), &g.evaluate_n(n), order)
}

/// `<D_1 f, g>' = <f, D_1 g>'` to order `M`.
pub fn self_adjoint_check(f: &NPoly, g: &NPoly, order: u32) -> Result<bool, CtError> {
    let n = f.n();
    let lhs = scalar_prime_poly(&dr_apply(1, f, n)?, g, order)?;
    let rhs = scalar_prime_poly(f, &dr_apply(1, g, n)?, order)?;
    Ok(lhs == rhs)
}

/// A ratio of infinite products `Π (q^a t^b; q)_∞`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InfiniteProduct {
    pub numer: Vec<(u32, u32)>,
    pub denom: Vec<(u32, u32)>,
}

fn poch_inf(a: u32, b: u32, order: u32) -> QTSeries {
    assert!(a + b > 0, "(1;q)_∞ vanishes");
    let mut acc = QTSeries::one(order);
    let mut k = 0;
    while a + k + b <= order {
        let f = Poly2::one().sub(&Poly2::monomial(BigInt::from(1), a + k, b));
        acc = &acc * &QTSeries::from_poly(&f, order);
        k += 1;
    }
    acc
}

impl InfiniteProduct {
    pub fn to_series(&self, order: u32) -> QTSeries {
        let mut acc = QTSeries::one(order);
        for &(a, b) in &self.numer {
            acc = &acc * &poch_inf(a, b, order);
        }
        for &(a, b) in &self.denom {
            acc = &acc * &poch_inf(a, b, order).inverse().expect("constant term 1");
        }
        acc
    }

    pub fn is_trivial(&self) -> bool {
        self.numer.is_empty() && self.denom.is_empty()
    }
}

fn qt_mono(a: u32, b: u32) -> String {
    let pw = |v: &str, e: u32| if e == 1 { v.to_string() } else { format!("{v}^{e}") };
    match (a, b) {
        (0, 0) => "1".into(),
        (a, 0) => pw("q", a),
        (0, b) => pw("t", b),
        (a, b) => format!("{}*{}", pw("q", a), pw("t", b)),
    }
}

impl fmt::Display for InfiniteProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[(u32, u32)]| -> String {
            if v.is_empty() {
                return "1".into();
            }
            v.iter()
                .map(|&(a, b)| format!("({};q)_inf", qt_mono(a, b)))
                .collect::<Vec<_>>()
                .join("*")
        };
        write!(f, "{}/{}", side(&self.numer), side(&self.denom))
    }
}

/// The closed-form product conjectured to equal `<P_λ, P_λ>'_n`.
pub fn ct_norm_closed(lam: &Partition, n: usize) -> InfiniteProduct {
    assert!(lam.len() <= n, "ℓ(λ) exceeds the variable count");
    let mut p = InfiniteProduct::default();
    for i in 1..=n {
        for j in i + 1..=n {
            let d = lam.part(i) - lam.part(j);
            let g = (j - i) as u32;
            p.numer.push((d, g));
            p.numer.push((d + 1, g));
            p.denom.push((d, g + 1));
            p.denom.push((d + 1, g - 1));
        }
    }
    p
}

/// `<P_λ,P_λ>'_n` by constant term against the closed-form product, to order `M`.
pub fn ct_norm_check(lam: &Partition, n: usize, order: u32) -> Result<bool, CtError> {
    let p = p_of(lam);
    let lhs = scalar_prime(&p, &p, n, order)?;
    Ok(lhs == ct_norm_closed(lam, n).to_series(order))
}
