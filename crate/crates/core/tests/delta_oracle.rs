use std::collections::BTreeMap;

use macdonald::coeff::{QTSeries, RatQT};
use macdonald::ctengine::{delta_expand, Window};

/// `Π_{k<m}(t - q^k) / (q;q)_m`, the `u^m` coefficient of `(u;q)_∞/(tu;q)_∞`.
fn c(m: u32) -> RatQT {
    let mut acc = RatQT::one();
    for k in 0..m {
        acc = &(&acc * &(RatQT::t() - RatQT::monomial(k, 0))) / &RatQT::one_minus(k + 1, 0);
    }
    acc
}

/// Brute force over one exponent per ordered pair, pruned by the valuation `m - 1` of `c_m`.
fn oracle(n: usize, order: u32) -> BTreeMap<Vec<i32>, QTSeries> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let cs: Vec<QTSeries> = (0..=order + 1)
        .map(|m| QTSeries::from_ratqt(&c(m), order).unwrap())
        .collect();
    struct Walk<'a> {
        pairs: &'a [(usize, usize)],
        cs: &'a [QTSeries],
        n: usize,
        order: u32,
        choice: Vec<u32>,
        out: BTreeMap<Vec<i32>, QTSeries>,
    }
    fn rec(w: &mut Walk, k: usize, budget: u32) {
        if k == w.pairs.len() {
            let mut e = vec![0; w.n];
            let mut coeff = QTSeries::one(w.order);
            for (&(i, j), &m) in w.pairs.iter().zip(w.choice.iter()) {
                e[i] += m as i32;
                e[j] -= m as i32;
                coeff = &coeff * &w.cs[m as usize];
            }
            let order = w.order;
            let slot = w.out.entry(e).or_insert_with(|| QTSeries::zero(order));
            *slot = &*slot + &coeff;
            return;
        }
        for m in 0..=w.order + 1 {
            let cost = m.saturating_sub(1);
            if cost > budget {
                break;
            }
            w.choice[k] = m;
            rec(w, k + 1, budget - cost);
        }
    }
    let mut w = Walk {
        pairs: &pairs,
        cs: &cs,
        n,
        order,
        choice: vec![0; pairs.len()],
        out: BTreeMap::new(),
    };
    rec(&mut w, 0, order);
    let mut out = w.out;
    out.retain(|_, v| !v.is_zero());
    out
}

fn agree(n: usize, order: u32) {
    let expect = oracle(n, order);
    let got = delta_expand(n, order, &Window::Unbounded);
    let mut keys: Vec<&Vec<i32>> = expect.keys().collect();
    keys.extend(got.terms().keys());
    for e in keys {
        let want = expect.get(e).cloned().unwrap_or_else(|| QTSeries::zero(order));
        assert_eq!(got.coeff(e), want, "n = {n}, M = {order}, x^{e:?}");
    }
}

#[test]
fn two_variables_match_brute_force() {
    for order in 0..=5 {
        agree(2, order);
    }
}

#[test]
fn three_variables_match_brute_force() {
    for order in 0..=3 {
        agree(3, order);
    }
}

#[test]
fn frozen_two_variable_coefficients() {
    let d1 = delta_expand(2, 1, &Window::Unbounded);
    let want = QTSeries::from_ratqt(&"-1 + 2*t - 2*q".parse().unwrap(), 1).unwrap();
    assert_eq!(d1.coeff(&[1, -1]), want);
    assert_eq!(d1.coeff(&[-1, 1]), want);
    let d0 = delta_expand(2, 0, &Window::Unbounded);
    assert_eq!(d0.coeff(&[0, 0]), QTSeries::constant(2.into(), 0));
}
