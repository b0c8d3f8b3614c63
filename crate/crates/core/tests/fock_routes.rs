use num_bigint::BigInt;
use num_rational::BigRational;

use macdonald::fock::{
    matrix_element, skew_via_diffop, skew_via_fock, symmetrizer_check, vertex_product_check, DiffOperator,
};
use macdonald::macdonald::{b_coeff, q_of, skew_q, structure_f};
use macdonald::part;
use macdonald::partition::Partition;
use macdonald::symfunc::{Basis, SymFunc};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Every permutation of `0..n`, with sign.
fn perms(n: usize) -> Vec<(Vec<usize>, i32)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// The symmetrized sum evaluated at rational points.
fn symmetrized_at(x: &[BigRational], t: &BigRational) -> BigRational {
    let n = x.len();
    let mut acc = rat(0, 1);
    for (s, _) in perms(n) {
        let mut term = rat(1, 1);
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&x[s[i]], &x[s[j]]);
                term *= (a - t * b) / (a - b);
            }
        }
        acc += term;
    }
    acc
}

#[test]
fn symmetrizer_agrees_with_pointwise_evaluation() {
    let x = [rat(2, 1), rat(-1, 3), rat(5, 7), rat(3, 2), rat(-4, 5)];
    let t = rat(3, 5);
    for n in 1..=5 {
        let mut want = rat(1, 1);
        for k in 1..=n as i32 {
            want *= (rat(1, 1) - num_traits::pow(t.clone(), k as usize)) / (rat(1, 1) - &t);
        }
        assert_eq!(symmetrized_at(&x[..n], &t), want, "n = {n}");
        assert!(symmetrizer_check(n), "n = {n}");
    }
}

#[test]
fn vertex_products_to_degree_three() {
    for beta in 1..=3 {
        for n in 1..=3 {
            let r = vertex_product_check(beta, n, 3);
            assert!(r.passed(), "β = {beta}, n = {n}: {r:?}");
            assert_eq!(r.q_order, 3 * beta + 3);
        }
    }
    let low = vertex_product_check(3, 2, 1);
    assert!(low.passed());
    assert_eq!(low.delta_laurent, None);
}

#[test]
fn three_routes_through_weight_three() {
    for d in 0..=3 {
        for lam in Partition::all(d) {
            for k in 0..=d {
                for mu in Partition::all(k) {
                    let a = skew_q(&lam, &mu);
                    assert!(skew_via_fock(&lam, &mu).equals(&a), "fock {lam}/{mu}");
                    assert!(skew_via_diffop(&lam, &mu).equals(&a), "diffop {lam}/{mu}");
                }
            }
        }
    }
}

#[test]
fn structure_constants_as_matrix_elements() {
    for (mu, nu) in [(part![1], part![1]), (part![2], part![1]), (part![1, 1], part![1])] {
        for (lam, f) in structure_f(&mu, &nu) {
            let pm = macdonald::macdonald::p_of(&mu);
            let pn = macdonald::macdonald::p_of(&nu);
            assert_eq!(matrix_element(&q_of(&lam), &pm, &pn), f, "f^{lam}_{mu},{nu}");
        }
    }
}

#[test]
fn single_derivative_of_q_one() {
    let v = DiffOperator::annihilation(1).apply(&q_of(&part![1]));
    assert!(v.equals(&SymFunc::one(Basis::P)));
    assert_eq!(b_coeff(&part![1]), "(1 - t)/(1 - q)".parse().unwrap());
}
