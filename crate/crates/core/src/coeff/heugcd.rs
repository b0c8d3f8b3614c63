//! Heuristic gcd by evaluation at a large integer and ξ-adic reconstruction.
//!
//! A candidate is accepted only after it divides both inputs exactly, so a
//! `Some` result is always the true gcd; `None` means "use the PRS path".

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly2::Poly2;
use super::upoly::{u_content, u_div_exact, UPoly};

const ATTEMPTS: usize = 6;
const MAX_BITS: u64 = 1 << 16;

fn next_xi(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

/// Symmetric ξ-adic digits of `g`, least significant first.
fn adic_digits(mut g: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut out = Vec::new();
    while !g.is_zero() {
        let mut r = g.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        g = (&g - &r) / xi;
        out.push(r);
    }
    out
}

fn max_norm_u(a: &UPoly) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval_u(a: &UPoly, x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Full gcd (integer content included) with positive leading coefficient.
pub(crate) fn heu_gcd_u(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let c = ca.gcd(&cb);
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![c]);
    }
    let a: UPoly = a.iter().map(|x| x / &ca).collect();
    let b: UPoly = b.iter().map(|x| x / &cb).collect();
    let deg = (a.len().max(b.len()) - 1) as u64;
    let mut xi = BigInt::from(2) * max_norm_u(&a).min(max_norm_u(&b)) + BigInt::from(2);
    for _ in 0..ATTEMPTS {
        if xi.bits() * deg > MAX_BITS {
            return None;
        }
        let gamma = eval_u(&a, &xi).gcd(&eval_u(&b, &xi));
        let mut g = adic_digits(gamma, &xi);
        if !g.is_empty() {
            let mut k = u_content(&g);
            if g.last().unwrap().is_negative() {
                k = -k;
            }
            g = g.iter().map(|x| x / &k).collect();
            if u_div_exact(&a, &g).is_some() && u_div_exact(&b, &g).is_some() {
                return Some(g.iter().map(|x| x * &c).collect());
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn max_norm_2(a: &Poly2) -> BigInt {
    a.terms().iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// `a(q, ξ)` as a polynomial in `q`.
fn eval_t(a: &Poly2, xi: &BigInt) -> UPoly {
    let mut out = vec![BigInt::zero(); a.degree_q() as usize + 1];
    let mut pows: Vec<BigInt> = vec![BigInt::one()];
    for _ in 0..a.degree_t() {
        let next = pows.last().unwrap() * xi;
        pows.push(next);
    }
    for ((i, j), c) in a.terms() {
        out[*i as usize] += c * &pows[*j as usize];
    }
    super::upoly::trim(&mut out);
    out
}

/// Full gcd in `Z[q,t]`, sign-normalized; both inputs nonzero.
pub(crate) fn heu_gcd_2(a: &Poly2, b: &Poly2) -> Option<Poly2> {
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let a = a.div_scalar(&ca);
    let b = b.div_scalar(&cb);
    let deg = a.degree_t().max(b.degree_t()) as u64 + 1;
    let mut xi = BigInt::from(2) * max_norm_2(&a).min(max_norm_2(&b)) + BigInt::from(2);
    for _ in 0..ATTEMPTS {
        if xi.bits() * deg > MAX_BITS {
            return None;
        }
        let gamma = heu_gcd_u(&eval_t(&a, &xi), &eval_t(&b, &xi))
            .unwrap_or_else(|| super::upoly::u_gcd_prs(&eval_t(&a, &xi), &eval_t(&b, &xi)));
        let mut terms = Vec::new();
        for (i, gi) in gamma.into_iter().enumerate() {
            for (j, d) in adic_digits(gi, &xi).into_iter().enumerate() {
                if !d.is_zero() {
                    terms.push(((i as u32, j as u32), d));
                }
            }
        }
        let g = Poly2::from_terms(terms);
        if !g.is_zero() {
            let g = g.div_scalar(&g.content()).normalize_sign();
            if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                return Some(g.scale(&c));
            }
        }
        xi = next_xi(&xi);
    }
    None
}
