use num_bigint::BigInt;
use num_rational::BigRational;

use macdonald::coeff::RatQT;
use macdonald::kostka::{kostka_matrix, KostkaTable};
use macdonald::part;
use macdonald::partition::Partition;

fn r(s: &str) -> RatQT {
    s.parse().unwrap()
}

/// Number of standard tableaux by the hook length formula.
fn syt(lam: &Partition) -> BigInt {
    let mut hooks = BigInt::from(1);
    for cell in lam.cells() {
        let (a, l, _, _) = lam.armleg(cell).unwrap();
        hooks *= BigInt::from(a + l + 1);
    }
    let fact: BigInt = (1..=lam.weight()).map(BigInt::from).product();
    fact / hooks
}

#[test]
fn degree_three_matches_the_classical_table() {
    let k = kostka_matrix(3).unwrap();
    let (a, b, c) = (part![3], part![2, 1], part![1, 1, 1]);
    let want = [
        (&a, &a, "1"),
        (&b, &a, "q + q^2"),
        (&c, &a, "q^3"),
        (&a, &b, "t"),
        (&b, &b, "1 + q*t"),
        (&c, &b, "q"),
        (&a, &c, "t^3"),
        (&b, &c, "t + t^2"),
        (&c, &c, "1"),
    ];
    for (l, m, v) in want {
        assert_eq!(k.get(l, m), r(v), "K{l},{m}");
    }
}

fn check_at_one(k: &KostkaTable) {
    let one = BigRational::from_integer(1.into());
    for l in &k.parts {
        for m in &k.parts {
            let v = k.get(l, m).eval(&one, &one).unwrap();
            assert_eq!(v, BigRational::from_integer(syt(l)), "K{l},{m}(1,1)");
        }
    }
}

#[test]
fn entries_count_standard_tableaux_at_q_t_one() {
    for d in 1..=4 {
        let k = kostka_matrix(d).unwrap();
        check_at_one(&k);
        assert!(k.non_polynomial().is_empty(), "degree {d}");
    }
}

#[test]
fn serialized_forms() {
    let k = kostka_matrix(2).unwrap();
    let tsv = k.to_tsv();
    assert_eq!(tsv.lines().next().unwrap(), "lambda\\mu\t(2)\t(1,1)");
    assert_eq!(tsv.lines().nth(1).unwrap(), "(2)\t1\tt");
    let json = serde_json::to_string(&k.to_json()).unwrap();
    assert_eq!(
        json,
        r#"{"(2),(2)":"1","(2),(1,1)":"t","(1,1),(2)":"q","(1,1),(1,1)":"1"}"#
    );
}

#[test]
fn dual_schur_qt_degenerates_to_schur_at_q_zero() {
    use macdonald::kostka::dual_schur_qt;
    use macdonald::symfunc::{Basis, SymFunc};
    for d in 1..=4 {
        for (l, f) in dual_schur_qt(d).unwrap() {
            let at0 = f.map_coeffs(|c| c.substitute(&RatQT::zero(), &RatQT::t())).unwrap();
            assert!(at0.equals(&SymFunc::basis_element(Basis::S, l.clone())), "S{l}(0,t)");
        }
    }
}

#[test]
fn arm_leg_products_and_m_functions() {
    use macdonald::kostka::{h_factors, m_function};
    for d in 0..=6 {
        for l in Partition::all(d) {
            let (_, hp) = h_factors(&l);
            let (h_conj, _) = h_factors(&l.conjugate());
            assert_eq!(h_conj.swap_qt(), hp, "h'{l}");
        }
    }
    for d in 0..=4 {
        for l in Partition::all(d) {
            m_function(&l);
        }
    }
}
