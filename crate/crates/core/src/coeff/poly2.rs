//! Sparse bivariate integer polynomials in `q` and `t`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, RPoly, UPoly};

/// Exponent pair `(a, b)` standing for `q^a t^b`.
pub type Mono = (u32, u32);

/// Graded-lexicographic comparison: total degree first, then the `q` exponent.
pub fn grlex_cmp(x: &Mono, y: &Mono) -> Ordering {
    (x.0 + x.1, x.0).cmp(&(y.0 + y.1, y.0))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct GrKey(u32, u32);

impl GrKey {
    fn of(m: Mono) -> Self {
        GrKey(m.0 + m.1, m.0)
    }
    fn mono(self) -> Mono {
        (self.1, self.0 - self.1)
    }
}

/// A polynomial in `Z[q, t]`, stored as terms sorted ascending in graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, a: u32, b: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly2 {
                terms: vec![((a, b), c)],
            }
        }
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Self {
        let mut acc: BTreeMap<GrKey, BigInt> = BTreeMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            *acc.entry(GrKey::of(m)).or_insert_with(BigInt::zero) += c;
        }
        Poly2 {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k.mono(), c))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> BigInt {
        match self.terms.first() {
            Some(((0, 0), c)) => c.clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms
            .binary_search_by(|(m, _)| grlex_cmp(m, &(a, b)))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Coefficient of the graded-lex greatest monomial.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.0).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.last().map(|(m, _)| m.0 + m.1).unwrap_or(0)
    }

    /// Smallest total degree carried by a term.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.0 + m.1)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> Self {
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Exact integer division of every coefficient.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        Poly2 {
            terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match grlex_cmp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        Poly2 { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        // dense accumulation; desk-scale degrees keep the buffer small
        let dq = (self.degree_q() + other.degree_q()) as usize + 1;
        let dt = (self.degree_t() + other.degree_t()) as usize + 1;
        let mut buf = vec![BigInt::zero(); dq * dt];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let idx = (ma.0 + mb.0) as usize * dt + (ma.1 + mb.1) as usize;
                buf[idx] += ca * cb;
            }
        }
        let mut terms: Vec<(Mono, BigInt)> = buf
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (((i / dt) as u32, (i % dt) as u32), c))
            .collect();
        terms.sort_by(|x, y| grlex_cmp(&x.0, &y.0));
        Poly2 { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())))
    }

    /// Largest monomial `q^a t^b` dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let a = self.terms.iter().map(|(m, _)| m.0).min().unwrap_or(0);
        let b = self.terms.iter().map(|(m, _)| m.1).min().unwrap_or(0);
        (a, b)
    }

    /// Divide by `q^a t^b`; the caller guarantees divisibility.
    pub fn unshift(&self, a: u32, b: u32) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((x - a, y - b), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn to_rpoly(&self) -> RPoly {
        let dt = self.degree_t() as usize + 1;
        let dq = self.degree_q() as usize + 1;
        let mut out: RPoly = vec![vec![BigInt::zero(); dq]; dt];
        for ((a, b), c) in &self.terms {
            out[*b as usize][*a as usize] = c.clone();
        }
        for row in out.iter_mut() {
            upoly::trim(row);
        }
        while matches!(out.last(), Some(r) if r.is_empty()) {
            out.pop();
        }
        out
    }

    pub(crate) fn from_rpoly(r: &RPoly) -> Self {
        Self::from_terms(r.iter().enumerate().flat_map(|(b, row)| {
            row.iter()
                .enumerate()
                .map(move |(a, c)| ((a as u32, b as u32), c.clone()))
        }))
    }

    /// Univariate view when the polynomial involves `q` only.
    pub(crate) fn as_upoly_q(&self) -> Option<UPoly> {
        if self.terms.iter().any(|(m, _)| m.1 != 0) {
            return None;
        }
        let mut out = vec![BigInt::zero(); self.degree_q() as usize + 1];
        for ((a, _), c) in &self.terms {
            out[*a as usize] = c.clone();
        }
        upoly::trim(&mut out);
        Some(out)
    }

    fn from_upoly_q(u: &UPoly) -> Self {
        Self::from_terms(u.iter().enumerate().map(|(a, c)| ((a as u32, 0), c.clone())))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[q,t]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = d.as_constant() {
            return if self.terms.iter().all(|(_, x)| x.is_multiple_of(&c)) {
                Some(self.div_scalar(&c))
            } else {
                None
            };
        }
        if self.degree_q() < d.degree_q() || self.degree_t() < d.degree_t() {
            return None;
        }
        // leading-term division under the graded-lex order
        let (lm, lc) = d.terms.last().unwrap().clone();
        let mut rem: BTreeMap<GrKey, BigInt> = self.terms.iter().map(|(m, c)| (GrKey::of(*m), c.clone())).collect();
        let mut quo: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((&key, c)) = rem.iter().next_back() {
            let m = key.mono();
            if m.0 < lm.0 || m.1 < lm.1 {
                return None;
            }
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qm = (m.0 - lm.0, m.1 - lm.1);
            for (dm, dc) in &d.terms {
                let k = GrKey::of((dm.0 + qm.0, dm.1 + qm.1));
                let e = rem.entry(k).or_insert_with(BigInt::zero);
                *e -= dc * &qc;
                if e.is_zero() {
                    rem.remove(&k);
                }
            }
            quo.push((qm, qc));
        }
        quo.reverse();
        Some(Poly2 { terms: quo })
    }

    /// Greatest common divisor in `Z[q,t]` with positive graded-lex leading coefficient.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let ic = self.content().gcd(&other.content());
        if self.as_constant().is_some() || other.as_constant().is_some() {
            return Self::constant(ic);
        }
        let (ma, mb) = (self.monomial_content(), other.monomial_content());
        let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
        let a = self.unshift(ma.0, ma.1);
        let b = other.unshift(mb.0, mb.1);
        let core = Self::gcd_primitive_core(&a.div_scalar(&a.content()), &b.div_scalar(&b.content()));
        core.scale(&ic).shift(mono.0, mono.1).normalize_sign()
    }

    /// Gcd of two polynomials with unit integer content and no monomial factor.
    fn gcd_primitive_core(a: &Self, b: &Self) -> Self {
        if a.as_constant().is_some() || b.as_constant().is_some() {
            return Self::one();
        }
        if a.div_exact(b).is_some() {
            return b.clone();
        }
        if b.div_exact(a).is_some() {
            return a.clone();
        }
        match (a.as_upoly_q(), b.as_upoly_q()) {
            (Some(x), Some(y)) => return Self::from_upoly_q(&upoly::u_gcd(&x, &y)),
            (Some(x), None) => {
                let g = upoly::u_gcd(&x, &univariate_content_in_q(b));
                return Self::from_upoly_q(&g);
            }
            (None, Some(y)) => {
                let g = upoly::u_gcd(&univariate_content_in_q(a), &y);
                return Self::from_upoly_q(&g);
            }
            (None, None) => {}
        }
        let only_t = |p: &Self| p.terms.iter().all(|(m, _)| m.0 == 0);
        if only_t(a) || only_t(b) {
            return Self::gcd_primitive_core(&a.swap_qt(), &b.swap_qt()).swap_qt();
        }
        if let Some(g) = super::heugcd::heu_gcd_2(a, b) {
            return g;
        }
        // recurse on the variable of smaller degree as the main variable
        let swap = a.degree_t().max(b.degree_t()) > a.degree_q().max(b.degree_q());
        if swap {
            let g = upoly::r_gcd(&a.swap_qt().to_rpoly(), &b.swap_qt().to_rpoly());
            Self::from_rpoly(&g).swap_qt()
        } else {
            let g = upoly::r_gcd(&a.to_rpoly(), &b.to_rpoly());
            Self::from_rpoly(&g)
        }
    }

    pub fn normalize_sign(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Evaluate at integer points.
    pub fn eval_int(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut s = BigInt::zero();
        for ((a, b), c) in &self.terms {
            s += c * num_traits::pow(q.clone(), *a as usize) * num_traits::pow(t.clone(), *b as usize);
        }
        s
    }
}

/// Content of `p` viewed as a polynomial in `t` with `Z[q]` coefficients.
fn univariate_content_in_q(p: &Poly2) -> UPoly {
    let r = p.to_rpoly();
    let mut g: UPoly = Vec::new();
    for c in &r {
        g = upoly::u_gcd(&g, c);
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn fmt_mono(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("q", a), ("t", b)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_const = *a == 0 && *b == 0;
            if is_const {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_mono(f, *a, *b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> Poly2 {
        Poly2::from_terms(terms.iter().map(|(m, c)| (*m, BigInt::from(*c))))
    }

    #[test]
    fn display_uses_graded_lex_ascending() {
        let x = p(&[((1, 1), 1), ((0, 0), 1), ((0, 1), -1)]);
        assert_eq!(x.to_string(), "1 - t + q*t");
    }

    #[test]
    fn exact_division_and_failure() {
        let one_minus_t2 = p(&[((0, 0), 1), ((0, 2), -1)]);
        let one_minus_t = p(&[((0, 0), 1), ((0, 1), -1)]);
        assert_eq!(
            one_minus_t2.div_exact(&one_minus_t),
            Some(p(&[((0, 0), 1), ((0, 1), 1)]))
        );
        assert_eq!(one_minus_t.div_exact(&one_minus_t2), None);
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        let f1 = p(&[((0, 0), 1), ((1, 1), -1)]); // 1 - qt
        let f2 = p(&[((0, 0), 1), ((2, 0), -1)]); // 1 - q^2
        let f3 = p(&[((0, 0), 1), ((0, 1), 1), ((1, 0), 2)]); // 1 + t + 2q
        let a = f1.mul(&f2).mul(&f1);
        let b = f1.mul(&f3);
        assert_eq!(a.gcd(&b), f1.normalize_sign());
        assert_eq!(f2.gcd(&f3), Poly2::one());
        let c = f1.mul(&f2).mul(&f3).scale(&BigInt::from(6));
        let d = f2.mul(&f3).scale(&BigInt::from(4)).shift(1, 0);
        assert_eq!(c.gcd(&d), f2.mul(&f3).scale(&BigInt::from(2)).normalize_sign());
    }

    #[test]
    fn gcd_of_mixed_univariate_inputs() {
        let a = p(&[((0, 0), 1), ((2, 0), -1)]); // 1 - q^2
        let b = p(&[((0, 0), 1), ((1, 0), -1)]).mul(&p(&[((0, 0), 1), ((0, 1), 1)])); // (1-q)(1+t)
        assert_eq!(a.gcd(&b), p(&[((0, 0), -1), ((1, 0), 1)]));
    }
}
