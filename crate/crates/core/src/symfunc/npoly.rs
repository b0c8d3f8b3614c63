use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::RatQT;

/// Polynomial in `x_1..x_n` with `Q(q,t)` coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, RatQT>,
}

impl NPoly {
    pub fn zero(n: usize) -> Self {
        NPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, RatQT::one())
    }

    pub fn constant(n: usize, c: RatQT) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// `x_i`, 0-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, RatQT::one())
    }

    pub fn monomial(e: Vec<u32>, c: RatQT) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    pub fn from_int_terms(n: usize, terms: &[(&[u32], i64)]) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n);
            p.add_term(e.to_vec(), RatQT::from_int(*c));
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, RatQT> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> RatQT {
        self.terms.get(e).cloned().unwrap_or_else(RatQT::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: RatQT) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> NPoly {
        NPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &NPoly) -> NPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NPoly) -> NPoly {
        self.add(&other.scale(&RatQT::from_int(-1)))
    }

    pub fn scale(&self, c: &RatQT) -> NPoly {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        NPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &NPoly) -> NPoly {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiply by the monomial `x^e`.
    pub fn shift(&self, e: &[u32]) -> NPoly {
        NPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `x_i -> q x_i` for every `i` in `set`.
    pub fn q_shift(&self, set: &[usize]) -> NPoly {
        NPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let k: u32 = set.iter().map(|&i| e[i]).sum();
                    (e.clone(), if k == 0 { c.clone() } else { c * &RatQT::monomial(k, 0) })
                })
                .collect(),
        }
    }

    /// Exact quotient by `x_i - x_j`; `None` if the remainder is nonzero.
    pub fn div_linear(&self, i: usize, j: usize) -> Option<NPoly> {
        // group by the exponent of x_i; each group is a polynomial in the remaining variables
        let mut groups: BTreeMap<u32, NPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            groups
                .entry(k)
                .or_insert_with(|| NPoly::zero(self.n))
                .add_term(rest, c.clone());
        }
        let top = match groups.keys().next_back() {
            Some(&k) => k,
            None => return Some(Self::zero(self.n)),
        };
        let mut xj = vec![0u32; self.n];
        xj[j] = 1;
        let mut out = Self::zero(self.n);
        let mut carry = Self::zero(self.n);
        for k in (0..=top).rev() {
            let pk = groups.remove(&k).unwrap_or_else(|| NPoly::zero(self.n));
            let cur = pk.add(&carry);
            if k == 0 {
                return if cur.is_zero() { Some(out) } else { None };
            }
            let mut xi = vec![0u32; self.n];
            xi[i] = k - 1;
            out = out.add(&cur.shift(&xi));
            carry = cur.shift(&xj);
        }
        unreachable!()
    }

    /// Rename variables: new variable `perm[i]` carries old exponent `i`.
    pub fn permute(&self, perm: &[usize]) -> NPoly {
        NPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = vec![0u32; self.n];
                    for (i, &p) in perm.iter().enumerate() {
                        f[p] = e[i];
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{x}", i + 1)
                    }
                })
                .collect();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "({c})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NPoly[{}]({self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_division() {
        let a = NPoly::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let b = NPoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(a.div_linear(0, 1), Some(b.clone()));
        assert_eq!(b.div_linear(0, 1), None);
    }

    #[test]
    fn shifts_and_permutations() {
        let p = NPoly::from_int_terms(2, &[(&[2, 1], 1)]);
        assert_eq!(p.q_shift(&[0]).coeff(&[2, 1]), RatQT::monomial(2, 0));
        assert_eq!(p.permute(&[1, 0]), NPoly::from_int_terms(2, &[(&[1, 2], 1)]));
    }
}
