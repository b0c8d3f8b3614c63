use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{CoeffError, QTSeries};
use crate::partition::Partition;
use crate::symfunc::{distinct_permutations, Basis, SymFunc};

/// Symmetric function in the monomial basis with truncated series coefficients.
///
/// With a finite variable count it stands for the image in that many variables
/// (only `m_λ` with `ℓ(λ) <= n` are kept).
#[derive(Clone, PartialEq)]
pub struct SeriesSym {
    order: u32,
    terms: BTreeMap<Partition, QTSeries>,
}

impl SeriesSym {
    pub fn zero(order: u32) -> Self {
        SeriesSym {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.add_term(Partition::empty(), QTSeries::one(order));
        s
    }

    pub fn from_symfunc(f: &SymFunc, order: u32) -> Result<Self, CoeffError> {
        let mut s = Self::zero(order);
        for (l, c) in f.convert(Basis::M).terms() {
            s.add_term(l.clone(), QTSeries::from_ratqt(c, order)?);
        }
        Ok(s)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTSeries> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lam: &Partition) -> QTSeries {
        self.terms
            .get(lam)
            .cloned()
            .unwrap_or_else(|| QTSeries::zero(self.order))
    }

    pub fn add_term(&mut self, lam: Partition, c: QTSeries) {
        let c = if c.order() > self.order {
            c.truncate(self.order)
        } else {
            c
        };
        match self.terms.get_mut(&lam) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&lam);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(lam, c);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &QTSeries) -> Self {
        let mut out = Self::zero(self.order.min(c.order()));
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    /// Drop `m_λ` with more than `n` parts.
    pub fn restrict(&self, n: usize) -> Self {
        let mut out = self.clone();
        out.terms.retain(|l, _| l.len() <= n);
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|l| l.len()).max().unwrap_or(0)
    }

    /// Monomials of the image in `n` variables.
    pub fn monomials(&self, n: usize) -> Vec<(Vec<u32>, &QTSeries)> {
        let mut out = Vec::new();
        for (l, c) in &self.terms {
            if l.len() > n {
                continue;
            }
            let mut e = l.parts().to_vec();
            e.resize(n, 0);
            for p in distinct_permutations(&e) {
                out.push((p, c));
            }
        }
        out
    }

    /// Coefficientwise agreement with an exact symmetric function through this order.
    pub fn agrees_with(&self, f: &SymFunc) -> Result<bool, CoeffError> {
        let g = Self::from_symfunc(f, self.order)?;
        Ok(self == &g)
    }

    /// Same as [`agrees_with`](Self::agrees_with) after restricting `f` to `n` variables.
    pub fn agrees_with_in(&self, f: &SymFunc, n: usize) -> Result<bool, CoeffError> {
        let g = Self::from_symfunc(f, self.order)?.restrict(n);
        Ok(self.restrict(n) == g)
    }
}

impl fmt::Display for SeriesSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*m{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SeriesSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
