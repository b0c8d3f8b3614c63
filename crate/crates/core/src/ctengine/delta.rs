//! Expansion of the weight `Δ(x;q,t)` and of the kernel `Π(x,ȳ)`.
//!
//! Each ordered pair contributes `(u;q)_∞/(tu;q)_∞ = (1-u) ψ(u)` with
//! `ψ(u) = (qu;q)_∞/(tu;q)_∞ = Σ_m d_m u^m`, `d_m = Π_{k<m}(t - q^{k+1}) / (q;q)_m`.
//! Every `d_m` has valuation `m`, so only `m <= M` survives at order `M`.
//! The two orderings of a pair are combined into one Laurent series
//! `F(u) = (2 - u - 1/u) ψ(u) ψ(1/u)` in `u = x_i/x_j` with `i < j`, whose
//! coefficient of `u^k` has valuation at least `|k| - 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::window::{var_names, Window, WindowSeries};
use crate::coeff::{Poly2, QTSeries, RatQT};
use crate::pairing::{kernel_product, qbinomial_coeff};

/// `d_m` for `m = 0..=order`.
pub fn psi_coeffs(order: u32) -> Vec<QTSeries> {
    let mut out = Vec::with_capacity(order as usize + 1);
    let mut num = Poly2::one();
    let mut den = Poly2::one();
    for m in 0..=order {
        if m > 0 {
            num = num.mul(&Poly2::monomial(BigInt::from(1), 0, 1).sub(&Poly2::monomial(BigInt::from(1), m, 0)));
            den = den.mul(&Poly2::one().sub(&Poly2::monomial(BigInt::from(1), m, 0)));
        }
        let d = RatQT::new(num.clone(), den.clone()).expect("(q;q)_m is nonzero");
        let s = QTSeries::from_ratqt(&d, order).expect("(q;q)_m has constant term 1");
        assert!(s.valuation().is_none_or(|v| v >= m), "valuation of d_{m} below {m}");
        out.push(s);
    }
    out
}

/// Coefficients `F_k`, `|k| <= order + 1`, with their valuations.
fn pair_factor(order: u32) -> Vec<(i32, QTSeries, u32)> {
    let d = psi_coeffs(order);
    let m = order as i32;
    let e = |k: i32| -> QTSeries {
        let mut acc = QTSeries::zero(order);
        for a in 0..=m {
            let b = a - k;
            if b < 0 || b > m || a + b > m {
                continue;
            }
            acc = &acc + &(&d[a as usize] * &d[b as usize]);
        }
        acc
    };
    let mut out = Vec::new();
    for k in -(m + 1)..=(m + 1) {
        let f = &(&e(k).scale_int(2) - &e(k - 1)) - &e(k + 1);
        if let Some(v) = f.valuation() {
            debug_assert!(v as i32 >= k.abs() - 1);
            out.push((k, f, v));
        }
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            v.push((i, j));
        }
    }
    v
}

/// Expand `Δ` in `n` variables, discarding terms that cannot reach `window`.
fn expand(n: usize, order: u32, window: &Window) -> (BTreeMap<Vec<i32>, QTSeries>, bool) {
    let f = pair_factor(order);
    let ps = pairs(n);
    let mut truncated = false;
    let mut state: HashMap<Vec<i32>, QTSeries> = HashMap::new();
    state.insert(vec![0; n], QTSeries::one(order));
    for (p, &(i, j)) in ps.iter().enumerate() {
        let rem = (ps.len() - p - 1) as i64;
        let mut next: HashMap<Vec<i32>, QTSeries> = HashMap::new();
        for (e, c) in &state {
            let v = c.valuation().expect("zero terms are dropped");
            for (k, fk, vk) in &f {
                if v + vk > order {
                    continue;
                }
                let mut e2 = e.clone();
                e2[i] += k;
                e2[j] -= k;
                // every later factor with val(F_k) = w moves the exponent by at most 2(w + 1) in L1
                let budget = 2 * (rem + order as i64 - (v + vk) as i64);
                if window.distance(&e2) > budget {
                    truncated = true;
                    continue;
                }
                let prod = c * fk;
                if prod.is_zero() {
                    continue;
                }
                match next.get_mut(&e2) {
                    Some(acc) => *acc = &*acc + &prod,
                    None => {
                        next.insert(e2, prod);
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    let mut out = BTreeMap::new();
    for (e, c) in state {
        if window.admits(&e) {
            out.insert(e, c);
        } else {
            truncated = true;
        }
    }
    (out, truncated)
}

/// `Δ(x_1..x_n; q,t)` to order `M`, restricted to `window`.
pub fn delta_expand(n: usize, order: u32, window: &Window) -> WindowSeries {
    assert!(n >= 1, "Δ needs at least one variable");
    let (terms, truncated) = expand(n, order, window);
    let mut s = WindowSeries::from_terms(var_names("x", n), order, terms);
    if truncated {
        s.mark_truncated();
    }
    s
}

type DeltaCache = HashMap<(usize, u32), HashMap<Vec<i32>, QTSeries>>;

static DELTA: OnceLock<Mutex<DeltaCache>> = OnceLock::new();

fn canonical(e: &[i32]) -> Vec<i32> {
    let mut v = e.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Coefficients of `Δ` at the requested exponents (memoized; `Δ` is symmetric).
pub(crate) fn delta_coeffs<'a>(
    n: usize,
    order: u32,
    wanted: impl IntoIterator<Item = &'a Vec<i32>>,
) -> HashMap<Vec<i32>, QTSeries> {
    let wanted: BTreeSet<Vec<i32>> = wanted.into_iter().cloned().collect();
    let cache = DELTA.get_or_init(|| Mutex::new(HashMap::new()));
    let missing: BTreeSet<Vec<i32>> = {
        let guard = cache.lock().unwrap();
        let known = guard.get(&(n, order));
        wanted
            .iter()
            .filter(|e| e.iter().sum::<i32>() == 0)
            .map(|e| canonical(e))
            .filter(|c| known.is_none_or(|k| !k.contains_key(c)))
            .collect()
    };
    if !missing.is_empty() {
        let (found, _) = if n <= 1 {
            (
                missing.iter().map(|e| (e.clone(), QTSeries::one(order))).collect(),
                false,
            )
        } else {
            expand(n, order, &Window::Targets(missing.clone()))
        };
        let mut guard = cache.lock().unwrap();
        let slot = guard.entry((n, order)).or_default();
        for e in missing {
            let c = found.get(&e).cloned().unwrap_or_else(|| QTSeries::zero(order));
            slot.insert(e, c);
        }
    }
    let guard = cache.lock().unwrap();
    let known = guard.get(&(n, order));
    wanted
        .into_iter()
        .map(|e| {
            let c = if e.iter().sum::<i32>() != 0 {
                QTSeries::zero(order)
            } else {
                known.and_then(|k| k.get(&canonical(&e))).cloned().unwrap()
            };
            (e, c)
        })
        .collect()
}

/// `Π(x,ȳ) = Π_{i,j} Σ_m (t;q)_m/(q;q)_m (x_i/y_j)^m`, total `x`-degree at most `d_out`.
///
/// Variables are `x1..x{nx}` followed by `y1..y{ny}`.
pub fn pi_inv_expand(nx: usize, ny: usize, d_out: u32, order: u32) -> WindowSeries {
    let k = kernel_product(nx, ny, d_out, |m| Some(qbinomial_coeff(m)));
    let mut vars = var_names("x", nx);
    vars.extend(var_names("y", ny));
    let mut s = WindowSeries::zero(vars, order);
    for ((ex, ey), c) in k {
        let mut e: Vec<i32> = ex.iter().map(|&a| a as i32).collect();
        e.extend(ey.iter().map(|&b| -(b as i32)));
        s.add_term(
            e,
            QTSeries::from_ratqt(&c, order).expect("q-binomial coefficients expand"),
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ser(s: &str, order: u32) -> QTSeries {
        QTSeries::from_ratqt(&s.parse().unwrap(), order).unwrap()
    }

    #[test]
    fn single_variable_is_one() {
        let d = delta_expand(1, 4, &Window::Unbounded);
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff(&[0]), QTSeries::one(4));
    }

    #[test]
    fn two_variable_low_order() {
        let d = delta_expand(2, 1, &Window::Unbounded);
        assert_eq!(d.coeff(&[1, -1]), ser("-1 + 2*t - 2*q", 1));
        assert_eq!(d.coeff(&[0, 0]), ser("2 - 2*t + 2*q", 1));
        let d0 = delta_expand(2, 0, &Window::Unbounded);
        assert_eq!(d0.coeff(&[0, 0]), QTSeries::constant(2.into(), 0));
    }

    #[test]
    fn targeted_matches_full() {
        let full = delta_expand(3, 3, &Window::Unbounded);
        let wanted: Vec<Vec<i32>> = vec![vec![1, 0, -1], vec![2, -1, -1], vec![0, 0, 0], vec![-3, 1, 2]];
        let got = delta_coeffs(3, 3, &wanted);
        for w in &wanted {
            assert_eq!(got[w], full.coeff(w), "{w:?}");
        }
        let boxed = delta_expand(3, 3, &Window::Box(vec![1, 1, 1]));
        for (e, c) in full.terms() {
            if e.iter().all(|x| x.abs() <= 1) {
                assert_eq!(&boxed.coeff(e), c);
            }
        }
        assert!(boxed.truncated());
    }

    #[test]
    fn kernel_low_strata() {
        let k = pi_inv_expand(1, 1, 2, 3);
        assert_eq!(k.coeff(&[0, 0]), QTSeries::one(3));
        assert_eq!(k.coeff(&[1, -1]), ser("(1-t)/(1-q)", 3));
        let k = pi_inv_expand(1, 2, 2, 3);
        assert_eq!(k.coeff(&[2, -1, -1]), ser("((1-t)/(1-q))^2", 3));
    }
}
