use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly2::Poly2;
use super::CoeffError;

/// An element of `Q(q,t)` kept as a reduced fraction of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` over `Z[q,t]` (integer content included),
/// the graded-lex leading coefficient of `den` is positive, and zero is `0/1`.
/// Structural equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: Poly2,
    den: Poly2,
}

impl Default for RatQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT {
            num: Poly2::zero(),
            den: Poly2::one(),
        }
    }

    pub fn one() -> Self {
        RatQT {
            num: Poly2::one(),
            den: Poly2::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(Poly2::q())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly2::t())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Poly2::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_poly(Poly2::constant(n))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(Poly2::constant(r.numer().clone()), Poly2::constant(r.denom().clone()))
            .expect("rational denominators are nonzero")
    }

    pub fn from_poly(p: Poly2) -> Self {
        RatQT {
            num: p,
            den: Poly2::one(),
        }
    }

    /// `q^a t^b`.
    pub fn monomial(a: u32, b: u32) -> Self {
        Self::from_poly(Poly2::monomial(BigInt::one(), a, b))
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(a: u32, b: u32) -> Self {
        Self::from_poly(Poly2::one().sub(&Poly2::monomial(BigInt::one(), a, b)))
    }

    /// Reduce `num/den` to canonical form.
    pub fn new(num: Poly2, den: Poly2) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::signed(n, d))
    }

    fn signed(n: Poly2, d: Poly2) -> Self {
        if d.leading_coeff().map(|c| c.is_negative()).unwrap_or(false) {
            RatQT {
                num: n.neg(),
                den: d.neg(),
            }
        } else {
            RatQT { num: n, den: d }
        }
    }

    pub fn numer(&self) -> &Poly2 {
        &self.num
    }

    pub fn denom(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(r)` when the value is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if self.den.is_one() {
                return Self::from_poly(n);
            }
            return Self::new(n, self.den.clone()).unwrap();
        }
        if self.den.is_one() {
            let n = self.num.mul(&other.den).add(&other.num);
            return RatQT {
                num: n,
                den: other.den.clone(),
            };
        }
        if other.den.is_one() {
            let n = other.num.mul(&self.den).add(&self.num);
            return RatQT {
                num: n,
                den: self.den.clone(),
            };
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if n.is_zero() {
                return Self::zero();
            }
            return Self::signed(n, self.den.mul(&other.den));
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = other.den.div_exact(&g).unwrap();
        let n = self.num.mul(&d1).add(&other.num.mul(&b1));
        if n.is_zero() {
            return Self::zero();
        }
        let g2 = n.gcd(&g);
        if g2.is_one() {
            Self::signed(n, b1.mul(&other.den))
        } else {
            let n = n.div_exact(&g2).unwrap();
            let rest = g.div_exact(&g2).unwrap();
            Self::signed(n, b1.mul(&d1).mul(&rest))
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), other.den.div_exact(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        Self::signed(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::signed(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.checked_mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatQT {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale_rational(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Multiply by a rational constant; only integer contents need reducing.
    pub fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() || self.is_zero() {
            return Self::zero();
        }
        use num_integer::Integer;
        let g1 = self.num.content().gcd(r.denom());
        let g2 = self.den.content().gcd(r.numer());
        let num = self.num.div_scalar(&g1).scale(&(r.numer() / &g2));
        let den = self.den.div_scalar(&g2).scale(&(r.denom() / &g1));
        Self::signed(num, den)
    }

    /// Exchange `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self::signed(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Compose with `q -> q_image`, `t -> t_image`.
    ///
    /// Numerator and denominator are evaluated over a shared denominator
    /// `dq^A dt^B`, so Laurent images such as `1/q` clear without intermediate
    /// reductions.
    pub fn substitute(&self, q_image: &RatQT, t_image: &RatQT) -> Result<Self, CoeffError> {
        let a = self.num.degree_q().max(self.den.degree_q());
        let b = self.num.degree_t().max(self.den.degree_t());
        let n = compose(&self.num, q_image, t_image, a, b);
        let d = compose(&self.den, q_image, t_image, a, b);
        if d.is_zero() {
            return Err(CoeffError::SpecializationPole);
        }
        Self::new(n, d)
    }

    /// Evaluate at rational points `q`, `t`.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational, CoeffError> {
        let r = self.substitute(&Self::from_rational(q), &Self::from_rational(t))?;
        Ok(r.as_rational().expect("constant after full substitution"))
    }
}

/// `sum_c c * qn^i qd^(A-i) * tn^j td^(B-j)` for `p = sum c q^i t^j`.
fn compose(p: &Poly2, qi: &RatQT, ti: &RatQT, a: u32, b: u32) -> Poly2 {
    let pows = |x: &Poly2, k: u32| -> Vec<Poly2> {
        let mut v = Vec::with_capacity(k as usize + 1);
        v.push(Poly2::one());
        for i in 1..=k as usize {
            let next = v[i - 1].mul(x);
            v.push(next);
        }
        v
    };
    let qn = pows(&qi.num, a);
    let qd = pows(&qi.den, a);
    let tn = pows(&ti.num, b);
    let td = pows(&ti.den, b);
    let mut acc = Poly2::zero();
    for ((i, j), c) in p.terms() {
        let (i, j) = (*i as usize, *j as usize);
        let term = qn[i]
            .mul(&qd[a as usize - i])
            .mul(&tn[j])
            .mul(&td[b as usize - j])
            .scale(c);
        acc = acc.add(&term);
    }
    acc
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atomic = |p: &Poly2| {
            let s = p.to_string();
            let bare = !s.contains(' ') && !s.contains('*');
            (s, bare)
        };
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (n, _) = atomic(&self.num);
        let nb = self.num.terms().len() == 1;
        let (d, db) = atomic(&self.den);
        let n = if nb { n } else { format!("({n})") };
        let d = if db { d } else { format!("({d})") };
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQT({self})")
    }
}

impl std::str::FromStr for RatQT {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratqt(s)
    }
}

impl serde::Serialize for RatQT {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatQT {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatQT> for &RatQT {
            type Output = RatQT;
            fn $m(self, rhs: &RatQT) -> RatQT {
                let f: fn(&RatQT, &RatQT) -> RatQT = $body;
                f(self, rhs)
            }
        }
        impl $tr<RatQT> for RatQT {
            type Output = RatQT;
            fn $m(self, rhs: RatQT) -> RatQT {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatQT> for RatQT {
            type Output = RatQT;
            fn $m(self, rhs: &RatQT) -> RatQT {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatQT> for &RatQT {
            type Output = RatQT;
            fn $m(self, rhs: RatQT) -> RatQT {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.checked_add(b));
forward_binop!(Sub, sub, |a, b| a.checked_add(&-b));
forward_binop!(Mul, mul, |a, b| a.checked_mul(b));
// panics on a zero divisor; use `checked_div` to get the error instead
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero in Q(q,t)"));

impl Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        -&self
    }
}

impl std::iter::Sum for RatQT {
    fn sum<I: Iterator<Item = RatQT>>(iter: I) -> Self {
        iter.fold(RatQT::zero(), |a, b| a + b)
    }
}

impl Zero for RatQT {
    fn zero() -> Self {
        RatQT::zero()
    }
    fn is_zero(&self) -> bool {
        RatQT::is_zero(self)
    }
}

impl One for RatQT {
    fn one() -> Self {
        RatQT::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatQT {
        s.parse().unwrap()
    }

    #[test]
    fn cancels_common_factors() {
        assert_eq!(r("(1 - t^2)/(1 - t)"), r("1 + t"));
        assert_eq!(r("((1-q)*(1-t))/((1-t)*(1-q))"), RatQT::one());
        assert_eq!(r("(1-t)/(1-q)") * r("(1-q)/(1-t)"), RatQT::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            RatQT::one().checked_div(&RatQT::zero()),
            Err(CoeffError::DivisionByZero)
        );
        assert!(RatQT::new(Poly2::one(), Poly2::zero()).is_err());
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let x = RatQT::new(Poly2::one(), Poly2::q().neg()).unwrap();
        assert_eq!(x.denom(), &Poly2::q());
        assert_eq!(x.to_string(), "-1/q");
        let half = RatQT::new(Poly2::constant(BigInt::from(-2)), Poly2::constant(BigInt::from(-4))).unwrap();
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn specializations() {
        let x = r("(1-t)/(1-q)");
        assert_eq!(x.substitute(&RatQT::q(), &RatQT::q()).unwrap(), RatQT::one());
        assert_eq!(x.substitute(&RatQT::zero(), &RatQT::t()).unwrap(), r("1 - t"));
        let pole = r("1/(1-q)").substitute(&RatQT::one(), &RatQT::t());
        assert_eq!(pole, Err(CoeffError::SpecializationPole));
    }

    #[test]
    fn inversion_of_both_parameters_clears_laurent_powers() {
        // (1 + 1/q)(1 - 1/t)/(1 - 1/(qt)) = (q + 1)(t - 1)/(qt - 1)
        let x = r("(1+q)*(1-t)/(1-q*t)");
        let qi = RatQT::q().inv().unwrap();
        let ti = RatQT::t().inv().unwrap();
        assert_eq!(x.substitute(&qi, &ti).unwrap(), x);
    }
}
