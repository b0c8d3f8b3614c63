//! Exact coefficient arithmetic: the field `Q(q,t)` and truncated series in `q, t`.

mod heugcd;
mod parse;
mod poly2;
mod ratqt;
mod series;
mod upoly;

pub use poly2::{grlex_cmp, Mono, Poly2};
pub use ratqt::RatQT;
pub use series::QTSeries;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = t = 0; no power series expansion")]
    NotSeriesExpandable,
    #[error("denominator vanishes under the substitution")]
    SpecializationPole,
    #[error("cannot parse rational function: {0}")]
    Parse(String),
}

/// `(a; q)_n` for `a = c q^i t^j`, as a polynomial.
pub fn qpochhammer(c: i64, i: u32, j: u32, n: u32) -> RatQT {
    let mut acc = Poly2::one();
    for k in 0..n {
        let f = Poly2::one().sub(&Poly2::monomial(c.into(), i + k, j));
        acc = acc.mul(&f);
    }
    RatQT::from_poly(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = Poly2> {
        prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 0..4)
            .prop_map(|v| Poly2::from_terms(v.into_iter().map(|(m, c)| (m, num_bigint::BigInt::from(c)))))
    }

    fn small_rat() -> impl Strategy<Value = RatQT> {
        (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| {
            let d = d.add(&Poly2::one());
            RatQT::new(n, d).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RatQT::zero());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn series_is_a_ring_homomorphism(a in small_rat(), b in small_rat(), m in 0u32..=8) {
            let (sa, sb) = (QTSeries::from_ratqt(&a, m), QTSeries::from_ratqt(&b, m));
            if let (Ok(sa), Ok(sb)) = (sa, sb) {
                prop_assert_eq!(QTSeries::from_ratqt(&(&a * &b), m).unwrap(), &sa * &sb);
                prop_assert_eq!(QTSeries::from_ratqt(&(&a + &b), m).unwrap(), &sa + &sb);
            }
        }

        #[test]
        fn substitution_commutes_with_arithmetic(a in small_rat(), b in small_rat()) {
            let qi = RatQT::t();
            let ti = "2*q + 1".parse::<RatQT>().unwrap();
            let sa = a.substitute(&qi, &ti);
            let sb = b.substitute(&qi, &ti);
            if let (Ok(sa), Ok(sb)) = (sa, sb) {
                if let Ok(sp) = (&a * &b).substitute(&qi, &ti) {
                    prop_assert_eq!(sp, &sa * &sb);
                }
                if let Ok(ss) = (&a + &b).substitute(&qi, &ti) {
                    prop_assert_eq!(ss, &sa + &sb);
                }
            }
        }
    }

    #[test]
    fn pochhammer_small_cases() {
        assert_eq!(qpochhammer(1, 0, 1, 2), "(1-t)*(1-q*t)".parse().unwrap());
        assert_eq!(qpochhammer(1, 1, 0, 0), RatQT::one());
    }
}
