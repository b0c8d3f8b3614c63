//! Symmetric functions over `Q(q,t)` in the power-sum, monomial, elementary,
//! complete and Schur bases.

mod npoly;
mod tables;

pub use npoly::NPoly;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::RatQT;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    P = 0,
    M = 1,
    E = 2,
    H = 3,
    S = 4,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::M, Basis::E, Basis::H, Basis::S];

    pub fn letter(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "s" => Ok(Basis::S),
            _ => Err(SymError::UnknownBasis(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("{n} variables cannot faithfully represent degree {d}")]
    UnstableRange { n: usize, d: u32 },
    #[error("unknown basis {0:?}")]
    UnknownBasis(String),
    #[error("malformed term list: {0}")]
    Format(String),
}

/// A finite linear combination of basis elements `b_λ` with `Q(q,t)` coefficients.
///
/// Components of different degrees may coexist; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RatQT>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, Partition::empty(), RatQT::one())
    }

    pub fn monomial(basis: Basis, lam: Partition, c: RatQT) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lam, c);
        f
    }

    pub fn basis_element(basis: Basis, lam: Partition) -> Self {
        Self::monomial(basis, lam, RatQT::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, RatQT)>>(basis: Basis, it: I) -> Self {
        let mut f = Self::zero(basis);
        for (l, c) in it {
            f.add_term(l, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatQT> {
        &self.terms
    }

    /// Terms sorted by degree, then reverse-lexicographically.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &RatQT)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then(b.0.cmp(a.0)));
        v
    }

    pub fn coeff(&self, lam: &Partition) -> RatQT {
        self.terms.get(lam).cloned().unwrap_or_else(RatQT::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lam: Partition, c: RatQT) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|l| l.weight()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn homogeneous_part(&self, d: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatQT) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, x)| (l.clone(), -x)).collect(),
        }
    }

    /// Apply `f` to every coefficient, e.g. a specialization.
    pub fn map_coeffs<E>(&self, f: impl Fn(&RatQT) -> Result<RatQT, E>) -> Result<SymFunc, E> {
        let mut out = Self::zero(self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn swap_qt(&self) -> SymFunc {
        self.map_coeffs::<()>(|c| Ok(c.swap_qt())).unwrap()
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    /// Same element of the ring of symmetric functions, written in `to`.
    pub fn convert(&self, to: Basis) -> SymFunc {
        if to == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(to);
        for d in self.degrees() {
            let tb = tables::tables(d);
            let n = tb.parts.len();
            let mut in_p: Vec<RatQT> = vec![RatQT::zero(); n];
            for (l, c) in self.terms.iter().filter(|(l, _)| l.weight() == d) {
                let row = &tb.to_p[self.basis as usize][tb.index[l]];
                for (j, r) in row {
                    in_p[*j] = &in_p[*j] + &c.scale_rational(r);
                }
            }
            if to == Basis::P {
                for (j, c) in in_p.into_iter().enumerate() {
                    out.add_term(tb.parts[j].clone(), c);
                }
                continue;
            }
            let mut target: Vec<RatQT> = vec![RatQT::zero(); n];
            for (k, c) in in_p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, r) in &tb.from_p[to as usize][k] {
                    target[*j] = &target[*j] + &c.scale_rational(r);
                }
            }
            for (j, c) in target.into_iter().enumerate() {
                out.add_term(tb.parts[j].clone(), c);
            }
        }
        out
    }

    /// Product, returned in the power-sum basis.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        let mut out = Self::zero(Basis::P);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let mut v = la.parts().to_vec();
                v.extend_from_slice(lb.parts());
                out.add_term(Partition::new(v), ca * cb);
            }
        }
        out
    }

    /// Equality as elements of the ring, regardless of basis.
    pub fn equals(&self, other: &SymFunc) -> bool {
        self.convert(Basis::M).terms == other.convert(Basis::M).terms
    }

    /// Image in `n` variables.
    pub fn evaluate_n(&self, n: usize) -> NPoly {
        let m = self.convert(Basis::M);
        let mut out = NPoly::zero(n);
        for (l, c) in &m.terms {
            if l.len() > n {
                continue;
            }
            let mut e: Vec<u32> = l.parts().to_vec();
            e.resize(n, 0);
            for perm in distinct_permutations(&e) {
                out.add_term(perm, c.clone());
            }
        }
        out
    }

    /// The `m`-basis element supported on `ℓ(λ) ≤ n` whose image is `g`.
    ///
    /// The preimage is unique in that range; it is the only preimage in the
    /// whole ring once `n ≥ d` (see [`SymFunc::from_poly_stable`]).
    pub fn from_poly(g: &NPoly, d: u32) -> Result<SymFunc, SymError> {
        let mut out = Self::zero(Basis::M);
        for (e, c) in g.terms() {
            let w: u32 = e.iter().sum();
            if w != d {
                continue;
            }
            let lam = Partition::new(e.clone());
            let mut key = lam.parts().to_vec();
            key.resize(g.n(), 0);
            if e == &key {
                out.add_term(lam, c.clone());
            }
        }
        let back = out.evaluate_n(g.n());
        if back != g.homogeneous_part(d) {
            return Err(SymError::NotSymmetric);
        }
        Ok(out)
    }

    pub fn from_poly_stable(g: &NPoly, d: u32) -> Result<SymFunc, SymError> {
        if g.n() < d as usize {
            return Err(SymError::UnstableRange { n: g.n(), d });
        }
        Self::from_poly(g, d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(l, c)| serde_json::json!({"partition": l, "coeff": c}))
            .collect();
        serde_json::json!({"basis": self.basis, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymFunc, SymError> {
        #[derive(Deserialize)]
        struct Term {
            partition: Partition,
            coeff: RatQT,
        }
        #[derive(Deserialize)]
        struct Doc {
            basis: Basis,
            terms: Vec<Term>,
        }
        let doc: Doc = serde_json::from_value(v.clone()).map_err(|e| SymError::Format(e.to_string()))?;
        Ok(Self::from_terms(
            doc.basis,
            doc.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

/// All distinct rearrangements of `v`.
pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // lexicographic successor until exhausted
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let b = self.basis.letter();
        for (i, (l, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{b}{l}")?;
            } else if c.is_polynomial() && c.numer().terms().len() > 1 {
                write!(f, "({c})*{b}{l}")?;
            } else {
                write!(f, "{c}*{b}{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{}]", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn sym(b: Basis, terms: &[(Partition, i64)]) -> SymFunc {
        SymFunc::from_terms(b, terms.iter().map(|(l, c)| (l.clone(), RatQT::from_int(*c))))
    }

    #[test]
    fn conversions_to_monomials() {
        let m = |l: Partition| SymFunc::basis_element(Basis::P, l).convert(Basis::M);
        assert_eq!(m(part![2]), sym(Basis::M, &[(part![2], 1)]));
        assert_eq!(m(part![1, 1]), sym(Basis::M, &[(part![2], 1), (part![1, 1], 2)]));
        let e2 = SymFunc::basis_element(Basis::E, part![2]).convert(Basis::M);
        assert_eq!(e2, sym(Basis::M, &[(part![1, 1], 1)]));
        let s21 = SymFunc::basis_element(Basis::S, part![2, 1]).convert(Basis::M);
        assert_eq!(s21, sym(Basis::M, &[(part![2, 1], 1), (part![1, 1, 1], 2)]));
    }

    #[test]
    fn products() {
        let p1 = SymFunc::basis_element(Basis::P, part![1]);
        assert_eq!(p1.multiply(&p1), sym(Basis::P, &[(part![1, 1], 1)]));
        let m1 = SymFunc::basis_element(Basis::M, part![1]);
        assert_eq!(m1.multiply(&SymFunc::one(Basis::M)), sym(Basis::P, &[(part![1], 1)]));
        assert_eq!(
            m1.multiply(&m1).convert(Basis::M),
            sym(Basis::M, &[(part![2], 1), (part![1, 1], 2)])
        );
    }

    #[test]
    fn evaluation_in_few_variables() {
        assert!(SymFunc::basis_element(Basis::M, part![1, 1]).evaluate_n(1).is_zero());
        let p2 = SymFunc::basis_element(Basis::P, part![2]).evaluate_n(2);
        assert_eq!(p2, NPoly::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]));
        let e2 = SymFunc::basis_element(Basis::E, part![2]).evaluate_n(3);
        assert_eq!(
            e2,
            NPoly::from_int_terms(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)])
        );
    }

    #[test]
    fn symmetric_preimages() {
        let g = NPoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(SymFunc::from_poly(&g, 1).unwrap(), sym(Basis::M, &[(part![1], 1)]));
        let g = NPoly::from_int_terms(2, &[(&[2, 1], 1), (&[1, 2], 1)]);
        assert_eq!(SymFunc::from_poly(&g, 3).unwrap(), sym(Basis::M, &[(part![2, 1], 1)]));
        assert_eq!(
            SymFunc::from_poly_stable(&g, 3),
            Err(SymError::UnstableRange { n: 2, d: 3 })
        );
        let g = NPoly::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], -2)]);
        assert_eq!(SymFunc::from_poly(&g, 2), Err(SymError::NotSymmetric));
    }

    #[test]
    fn json_term_lists() {
        let f = SymFunc::from_terms(Basis::M, [(part![2, 1], "(1-t)/(1-q)".parse().unwrap())]);
        let j = f.to_json();
        assert_eq!(j["basis"], "m");
        assert_eq!(j["terms"][0]["partition"], serde_json::json!([2, 1]));
        assert_eq!(SymFunc::from_json(&j).unwrap(), f);
    }
}
