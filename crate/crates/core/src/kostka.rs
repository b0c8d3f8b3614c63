//! Dual Schur bases `S_λ(x;t)`, `S_λ(x;q,t)`, the functions `M_λ = h_λ P_λ`, and the
//! `(q,t)`-Kostka matrix `M_μ = Σ_λ K_{λμ} S_λ(x;t)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::coeff::{QTSeries, RatQT};
use crate::ctengine::{ct_against_delta, f_plus, schur_functional, CtError, Kernel};
use crate::macdonald::{b_coeff, p_of, q_of};
use crate::pairing::{inner_qt, inner_with, z_factor_hl};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KostkaError {
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Ct(#[from] CtError),
}

/// `h_λ = Π_s (1 - q^{a(s)} t^{l(s)+1})` and `h'_λ = Π_s (1 - q^{a(s)+1} t^{l(s)})`.
pub fn h_factors(lam: &Partition) -> (RatQT, RatQT) {
    let mut h = RatQT::one();
    let mut hp = RatQT::one();
    for cell in lam.cells() {
        let (a, l, _, _) = lam.armleg(cell).expect("cell of the diagram");
        h = &h * &RatQT::one_minus(a, l + 1);
        hp = &hp * &RatQT::one_minus(a + 1, l);
    }
    assert_eq!(&h / &hp, b_coeff(lam), "b_λ != h_λ/h'_λ for {lam}");
    (h, hp)
}

/// `M_λ = h_λ P_λ`, checked against `h'_λ Q_λ`.
pub fn m_function(lam: &Partition) -> SymFunc {
    let (h, hp) = h_factors(lam);
    let m = p_of(lam).scale(&h);
    assert!(m.equals(&q_of(lam).scale(&hp)), "h P and h' Q disagree for {lam}");
    m
}

fn invert(a: &[Vec<RatQT>]) -> Option<Vec<Vec<RatQT>>> {
    let n = a.len();
    let mut m: Vec<Vec<RatQT>> = a.to_vec();
    let mut inv: Vec<Vec<RatQT>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatQT::one() } else { RatQT::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].inv().ok()?;
        for j in 0..n {
            m[col][j] = &m[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                m[r][j] = &m[r][j] - &(&f * &m[col][j]);
                inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
            }
        }
    }
    Some(inv)
}

/// `{f*_λ}` with `<f*_λ, f_μ> = δ`, by inverting the Gram matrix.
fn dual_basis(
    parts: &[Partition],
    basis: &[SymFunc],
    pair: impl Fn(&SymFunc, &SymFunc) -> RatQT,
) -> Result<Vec<(Partition, SymFunc)>, KostkaError> {
    let gram: Vec<Vec<RatQT>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| pair(a, b)).collect())
        .collect();
    let inv = invert(&gram).ok_or_else(|| KostkaError::InternalInconsistency("singular Gram matrix".into()))?;
    let mut out = Vec::with_capacity(parts.len());
    for (i, lam) in parts.iter().enumerate() {
        let mut f = SymFunc::zero(Basis::M);
        for (j, b) in basis.iter().enumerate() {
            if !inv[i][j].is_zero() {
                f = f.add(&b.scale(&inv[i][j]));
            }
        }
        out.push((lam.clone(), f));
    }
    for (i, (_, f)) in out.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let v = pair(f, b);
            if (i == j) != v.is_one() || (i != j && !v.is_zero()) {
                return Err(KostkaError::InternalInconsistency(format!(
                    "dual pairing fails at ({i},{j})"
                )));
            }
        }
    }
    Ok(out)
}

/// `S_λ(x;t)`: the dual of `{s_λ}` under `<,>_{0,t}`, reverse-lex order.
pub fn dual_schur_t(d: u32) -> Result<Vec<(Partition, SymFunc)>, KostkaError> {
    let parts = Partition::all(d);
    let s: Vec<SymFunc> = parts
        .iter()
        .map(|l| SymFunc::basis_element(Basis::S, l.clone()))
        .collect();
    dual_basis(&parts, &s, |a, b| inner_with(a, b, z_factor_hl))
}

/// `S_λ(x;q,t)`: the dual of `{S_λ(x;t)}` under `<,>_{q,t}`.
pub fn dual_schur_qt(d: u32) -> Result<Vec<(Partition, SymFunc)>, KostkaError> {
    let st = dual_schur_t(d)?;
    let parts: Vec<Partition> = st.iter().map(|(l, _)| l.clone()).collect();
    let basis: Vec<SymFunc> = st.into_iter().map(|(_, f)| f).collect();
    dual_basis(&parts, &basis, inner_qt)
}

/// `K_{λμ}(q,t)` for one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct KostkaTable {
    pub degree: u32,
    /// Reverse-lexicographic.
    pub parts: Vec<Partition>,
    pub entries: BTreeMap<(Partition, Partition), RatQT>,
}

impl KostkaTable {
    pub fn get(&self, lam: &Partition, mu: &Partition) -> RatQT {
        self.entries
            .get(&(lam.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(RatQT::zero)
    }

    /// Entries whose reduced denominator is not 1.
    pub fn non_polynomial(&self) -> Vec<(Partition, Partition)> {
        self.entries
            .iter()
            .filter(|(_, v)| !v.is_polynomial())
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// Nonzero entries with `λ` not dominating `μ`.
    pub fn off_triangle(&self) -> Vec<(Partition, Partition)> {
        self.entries
            .iter()
            .filter(|((l, m), v)| !v.is_zero() && !m.dominated_by(l))
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// Rows `λ`, columns `μ`, tab separated.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("lambda\\mu");
        for m in &self.parts {
            write!(s, "\t{m}").unwrap();
        }
        s.push('\n');
        for l in &self.parts {
            write!(s, "{l}").unwrap();
            for m in &self.parts {
                write!(s, "\t{}", self.get(l, m)).unwrap();
            }
            s.push('\n');
        }
        s
    }

    /// `{"λ,μ": "K"}` with keys in reverse-lex order of `(λ, μ)`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for l in &self.parts {
            for m in &self.parts {
                map.insert(
                    format!("{l},{m}"),
                    serde_json::Value::String(self.get(l, m).to_string()),
                );
            }
        }
        serde_json::Value::Object(map)
    }
}

/// `K_{λμ} = <S_λ(q,t), M_μ>_{q,t}`; the reconstruction `M_μ = Σ_λ K_{λμ} S_λ(t)` is checked.
pub fn kostka_matrix(d: u32) -> Result<KostkaTable, KostkaError> {
    let st = dual_schur_t(d)?;
    let sqt = dual_schur_qt(d)?;
    let parts: Vec<Partition> = st.iter().map(|(l, _)| l.clone()).collect();
    let mut entries = BTreeMap::new();
    for mu in &parts {
        let m = m_function(mu);
        let mut back = SymFunc::zero(Basis::M);
        for ((lam, s_qt), (_, s_t)) in sqt.iter().zip(&st) {
            let k = inner_qt(s_qt, &m);
            back = back.add(&s_t.scale(&k));
            entries.insert((lam.clone(), mu.clone()), k);
        }
        if !back.equals(&m) {
            return Err(KostkaError::InternalInconsistency(format!(
                "M{mu} is not reconstructed"
            )));
        }
    }
    Ok(KostkaTable {
        degree: d,
        parts,
        entries,
    })
}

/// `K_{λμ}` by the constant-term formula with kernel `Π 1/(x_i/y_j;q)_∞` against
/// `F^+_μ(y)` and the Schur-dual measure in `x`, to order `M`.
pub fn kostka_integral(lam: &Partition, mu: &Partition, order: u32) -> Result<QTSeries, KostkaError> {
    if lam.weight() != mu.weight() {
        return Ok(QTSeries::zero(order));
    }
    let f = f_plus(mu, order)?;
    let terms: Vec<(Vec<i32>, QTSeries)> = f
        .inner
        .monomials(f.vars)
        .into_iter()
        .map(|(e, c)| (e.into_iter().map(|x| x as i32).collect(), c * &f.constant))
        .collect();
    let c = ct_against_delta(f.vars, &terms, order);
    let mut acc = QTSeries::zero(order);
    for (nu, cv) in &c {
        let x_side = schur_functional(lam, &Kernel::QInverse.strata(nu));
        let x_side = QTSeries::from_ratqt(&x_side, order).map_err(CtError::from)?;
        acc = &acc + &(cv * &x_side);
    }
    let h = QTSeries::from_ratqt(&h_factors(mu).0, order).map_err(CtError::from)?;
    Ok(&acc * &h)
}

pub fn kostka_integral_check(lam: &Partition, mu: &Partition, order: u32) -> Result<bool, KostkaError> {
    let table = kostka_matrix(lam.weight())?;
    let expect = QTSeries::from_ratqt(&table.get(lam, mu), order).map_err(CtError::from)?;
    Ok(kostka_integral(lam, mu, order)? == expect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ctengine::schur_ct_kernel;
    use crate::part;

    fn r(s: &str) -> RatQT {
        s.parse().unwrap()
    }

    #[test]
    fn arm_leg_factors() {
        assert_eq!(h_factors(&part![1]), (r("1-t"), r("1-q")));
        assert_eq!(h_factors(&part![]), (RatQT::one(), RatQT::one()));
        assert_eq!(h_factors(&part![2]), (r("(1-q*t)*(1-t)"), r("(1-q^2)*(1-q)")));
        assert!(m_function(&part![1]).equals(&SymFunc::basis_element(Basis::P, part![1]).scale(&r("1-t"))));
    }

    #[test]
    fn degree_one_duals() {
        let st = dual_schur_t(1).unwrap();
        assert!(st[0]
            .1
            .equals(&SymFunc::basis_element(Basis::S, part![1]).scale(&r("1-t"))));
    }

    #[test]
    fn degree_two_table() {
        let k = kostka_matrix(2).unwrap();
        assert_eq!(k.get(&part![2], &part![2]), RatQT::one());
        assert_eq!(k.get(&part![1, 1], &part![1, 1]), RatQT::one());
        assert_eq!(k.get(&part![2], &part![1, 1]), RatQT::t());
        assert_eq!(k.get(&part![1, 1], &part![2]), RatQT::q());
        assert!(k.non_polynomial().is_empty());
        assert_eq!(k.to_json()["(2),(1,1)"], "t");
    }

    #[test]
    fn contour_forms_of_the_duals() {
        for d in 1..=3 {
            for (l, s) in dual_schur_t(d).unwrap() {
                assert!(schur_ct_kernel(&l, Kernel::HallLittlewood).equals(&s), "S{l}(t)");
            }
            for (l, s) in dual_schur_qt(d).unwrap() {
                assert!(schur_ct_kernel(&l, Kernel::QInverse).equals(&s), "S{l}(q,t)");
            }
        }
    }

    #[test]
    fn integral_route_degree_two() {
        for l in Partition::all(2) {
            for m in Partition::all(2) {
                assert!(kostka_integral_check(&l, &m, 4).unwrap(), "{l} {m}");
            }
        }
    }
}
