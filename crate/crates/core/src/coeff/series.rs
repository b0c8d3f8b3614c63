use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CoeffError, Poly2, RatQT};

#[inline]
fn idx(a: u32, b: u32) -> usize {
    let d = (a + b) as usize;
    d * (d + 1) / 2 + a as usize
}

#[inline]
fn len_for(order: u32) -> usize {
    let m = order as usize + 1;
    m * (m + 1) / 2
}

/// Truncated power series in `Q[[q,t]] / (total degree > order)`.
///
/// Stored densely by total degree with one shared positive integer denominator;
/// the numerators and denominator are kept coprime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTSeries {
    order: u32,
    den: BigInt,
    num: Vec<BigInt>,
}

impl QTSeries {
    pub fn zero(order: u32) -> Self {
        QTSeries {
            order,
            den: BigInt::one(),
            num: vec![BigInt::zero(); len_for(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(c: BigInt, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.num[0] = c;
        s
    }

    pub fn from_rational(r: &BigRational, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.num[0] = r.numer().clone();
        s.den = r.denom().clone();
        s.normalize();
        s
    }

    /// Truncation of an integer polynomial.
    pub fn from_poly(p: &Poly2, order: u32) -> Self {
        let mut s = Self::zero(order);
        for ((a, b), c) in p.terms() {
            if a + b <= order {
                s.num[idx(*a, *b)] = c.clone();
            }
        }
        s
    }

    /// Taylor expansion of a rational function; the denominator must not vanish at the origin.
    pub fn from_ratqt(r: &RatQT, order: u32) -> Result<Self, CoeffError> {
        let d0 = r.denom().constant_term();
        if d0.is_zero() {
            return Err(CoeffError::NotSeriesExpandable);
        }
        let num = Self::from_poly(r.numer(), order);
        if r.denom().is_one() {
            return Ok(num);
        }
        Ok(&num * &Self::from_poly(r.denom(), order).inverse()?)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigRational {
        if a + b > self.order {
            return BigRational::zero();
        }
        BigRational::new(self.num[idx(a, b)].clone(), self.den.clone())
    }

    /// Nonzero coefficients as `(q exponent, t exponent, value)`, graded ascending.
    pub fn terms(&self) -> Vec<(u32, u32, BigRational)> {
        let mut out = Vec::new();
        for d in 0..=self.order {
            for a in 0..=d {
                let c = &self.num[idx(a, d - a)];
                if !c.is_zero() {
                    out.push((a, d - a, BigRational::new(c.clone(), self.den.clone())));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0, 0)
    }

    /// Lowest total degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        (0..=self.order).find(|&d| (0..=d).any(|a| !self.num[idx(a, d - a)].is_zero()))
    }

    /// Drop everything above total degree `order` (which must not exceed the current order).
    pub fn truncate(&self, order: u32) -> Self {
        assert!(order <= self.order, "cannot raise the truncation order");
        let mut s = QTSeries {
            order,
            den: self.den.clone(),
            num: self.num[..len_for(order)].to_vec(),
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if g.is_one() {
            return;
        }
        self.den = &self.den / &g;
        for c in self.num.iter_mut() {
            if !c.is_zero() {
                *c = &*c / &g;
            }
        }
    }

    fn common(&self, other: &Self) -> u32 {
        self.order.min(other.order)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let order = self.common(other);
        let n = len_for(order);
        let mut out = Self::zero(order);
        if self.den == other.den {
            for i in 0..n {
                out.num[i] = if negate {
                    &self.num[i] - &other.num[i]
                } else {
                    &self.num[i] + &other.num[i]
                };
            }
            out.den = self.den.clone();
        } else {
            let g = self.den.gcd(&other.den);
            let fa = &other.den / &g;
            let fb = &self.den / &g;
            for i in 0..n {
                let x = &self.num[i] * &fa;
                let y = &other.num[i] * &fb;
                out.num[i] = if negate { x - y } else { x + y };
            }
            out.den = &self.den * &fa;
        }
        out.normalize();
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut s = QTSeries {
            order: self.order,
            den: &self.den * r.denom(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
        };
        s.normalize();
        s
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        let mut out = Self::zero(self.order);
        out.den = self.den.clone();
        for d in 0..=self.order {
            if d + a + b > self.order {
                break;
            }
            for x in 0..=d {
                out.num[idx(x + a, d - x + b)] = self.num[idx(x, d - x)].clone();
            }
        }
        out.normalize();
        out
    }

    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.common(other);
        let mut out = Self::zero(order);
        let va = match self.valuation() {
            Some(v) => v,
            None => return out,
        };
        let vb = match other.valuation() {
            Some(v) => v,
            None => return out,
        };
        if va + vb > order {
            return out;
        }
        for da in va..=order - vb {
            for a1 in 0..=da {
                let x = &self.num[idx(a1, da - a1)];
                if x.is_zero() {
                    continue;
                }
                for db in vb..=order - da {
                    for a2 in 0..=db {
                        let y = &other.num[idx(a2, db - a2)];
                        if !y.is_zero() {
                            out.num[idx(a1 + a2, da - a1 + db - a2)] += x * y;
                        }
                    }
                }
            }
        }
        out.den = &self.den * &other.den;
        out.normalize();
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, CoeffError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(CoeffError::NotSeriesExpandable);
        }
        let order = self.order;
        let mut inv: Vec<BigRational> = vec![BigRational::zero(); len_for(order)];
        let c0_inv = c0.recip();
        inv[0] = c0_inv.clone();
        let src: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect();
        for d in 1..=order {
            for a in 0..=d {
                let b = d - a;
                let mut acc = BigRational::zero();
                for dc in 1..=d {
                    for c in 0..=dc {
                        let e = dc - c;
                        if c > a || e > b {
                            continue;
                        }
                        let s = &src[idx(c, e)];
                        if s.is_zero() {
                            continue;
                        }
                        acc += s * &inv[idx(a - c, b - e)];
                    }
                }
                inv[idx(a, b)] = -(acc * &c0_inv);
            }
        }
        let den = inv.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut s = QTSeries {
            order,
            num: inv.iter().map(|c| c.numer() * (&den / c.denom())).collect(),
            den,
        };
        s.normalize();
        Ok(s)
    }

    /// Equality of all coefficients of total degree at most `order`.
    pub fn agrees_to(&self, other: &Self, order: u32) -> bool {
        let m = order.min(self.common(other));
        self.truncate(m) == other.truncate(m)
    }
}

impl fmt::Display for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (a, b, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = match (a, b) {
                (0, 0) => String::new(),
                (a, 0) => {
                    if *a == 1 {
                        "q".into()
                    } else {
                        format!("q^{a}")
                    }
                }
                (0, b) => {
                    if *b == 1 {
                        "t".into()
                    } else {
                        format!("t^{b}")
                    }
                }
                (a, b) => {
                    let qa = if *a == 1 { "q".to_string() } else { format!("q^{a}") };
                    let tb = if *b == 1 { "t".to_string() } else { format!("t^{b}") };
                    format!("{qa}*{tb}")
                }
            };
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        write!(f, " + O({})", self.order + 1)
    }
}

impl fmt::Debug for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTSeries({self})")
    }
}

impl Add<&QTSeries> for &QTSeries {
    type Output = QTSeries;
    fn add(self, rhs: &QTSeries) -> QTSeries {
        self.combine(rhs, false)
    }
}

impl Sub<&QTSeries> for &QTSeries {
    type Output = QTSeries;
    fn sub(self, rhs: &QTSeries) -> QTSeries {
        self.combine(rhs, true)
    }
}

impl Mul<&QTSeries> for &QTSeries {
    type Output = QTSeries;
    fn mul(self, rhs: &QTSeries) -> QTSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &QTSeries {
    type Output = QTSeries;
    fn neg(self) -> QTSeries {
        QTSeries {
            order: self.order,
            den: self.den.clone(),
            num: self.num.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatQT {
        s.parse().unwrap()
    }

    fn ser(s: &str, m: u32) -> QTSeries {
        QTSeries::from_ratqt(&r(s), m).unwrap()
    }

    #[test]
    fn geometric_and_first_order_expansions() {
        assert_eq!(ser("1/(1-q)", 2), QTSeries::from_poly(r("1 + q + q^2").numer(), 2));
        assert_eq!(ser("(1-t)/(1-q)", 1), QTSeries::from_poly(r("1 + q - t").numer(), 1));
        assert_eq!(QTSeries::from_ratqt(&r("1/q"), 3), Err(CoeffError::NotSeriesExpandable));
    }

    #[test]
    fn rational_coefficients_and_display() {
        let s = ser("1/(2 - t)", 2);
        assert_eq!(s.coeff(0, 2), BigRational::new(1.into(), 8.into()));
        assert_eq!(s.to_string(), "1/2 + 1/4*t + 1/8*t^2 + O(3)");
    }

    #[test]
    fn valuation_and_truncation() {
        let s = ser("q*t/(1-q)", 4);
        assert_eq!(s.valuation(), Some(2));
        assert_eq!(s.truncate(1).valuation(), None);
        assert!(s.agrees_to(&ser("q*t + q^2*t", 4), 3));
        assert!(!s.agrees_to(&ser("q*t + q^2*t", 4), 4));
    }
}
