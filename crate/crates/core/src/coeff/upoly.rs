//! Dense univariate polynomials over the integers and over `Z[q]`.
//!
//! These are the working representations for the primitive-PRS gcd used by
//! [`Poly2`](super::Poly2). Coefficient vectors are little-endian and trimmed:
//! the last entry is nonzero unless the polynomial is zero (empty vector).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type RPoly = Vec<UPoly>;

pub(crate) fn trim(p: &mut UPoly) {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

fn trim_r(p: &mut RPoly) {
    while matches!(p.last(), Some(c) if c.is_empty()) {
        p.pop();
    }
}

pub(crate) fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i);
        let y = b.get(i);
        out.push(match (x, y) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

pub(crate) fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn u_shift(a: &UPoly, k: usize) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a.iter().cloned());
    out
}

pub(crate) fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_scalar(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
fn u_primpart(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    if c.is_one() {
        a.clone()
    } else {
        u_div_scalar(a, &c)
    }
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let scaled = u_scale(&r, lb);
        let sub = u_shift(&u_scale(b, &lr), k);
        r = u_sub(&scaled, &sub);
    }
    r
}

/// Exact division `a / b` over the integers; `None` if `b` does not divide `a`.
pub(crate) fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        r = u_sub(&r, &u_shift(&u_scale(b, &c), k));
        quo[k] = c;
    }
    if !r.is_empty() {
        return None;
    }
    trim(&mut quo);
    Some(quo)
}

/// Gcd over `Z[q]`, normalized to positive leading coefficient.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if !a.is_empty() && !b.is_empty() {
        if let Some(g) = super::heugcd::heu_gcd_u(a, b) {
            return g;
        }
    }
    u_gcd_prs(a, b)
}

pub(crate) fn u_gcd_prs(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primpart_keep_content(b);
    }
    if b.is_empty() {
        return u_primpart_keep_content(a);
    }
    let g = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = if a.len() >= b.len() {
        (u_primpart(a), u_primpart(b))
    } else {
        (u_primpart(b), u_primpart(a))
    };
    loop {
        if y.len() == 1 {
            return vec![g];
        }
        let r = u_prem(&x, &y);
        if r.is_empty() {
            return u_scale(&y, &g);
        }
        x = y;
        y = u_primpart(&r);
    }
}

fn u_primpart_keep_content(a: &UPoly) -> UPoly {
    if matches!(a.last(), Some(c) if c.is_negative()) {
        a.iter().map(|x| -x).collect()
    } else {
        a.clone()
    }
}

fn r_content(a: &RPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn r_div_u(a: &RPoly, c: &UPoly) -> RPoly {
    a.iter()
        .map(|x| u_div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

fn r_primpart(a: &RPoly) -> RPoly {
    let mut c = r_content(a);
    if a.last().unwrap().last().unwrap().is_negative() {
        c = c.iter().map(|x| -x).collect();
    }
    if c.len() == 1 && c[0].is_one() {
        a.clone()
    } else {
        r_div_u(a, &c)
    }
}

fn r_prem(a: &RPoly, b: &RPoly) -> RPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let mut next: RPoly = r.iter().map(|c| u_mul(c, lb)).collect();
        for (j, c) in b.iter().enumerate() {
            let prod = u_mul(c, &lr);
            next[j + k] = u_sub(&next[j + k], &prod);
        }
        trim_r(&mut next);
        r = next;
    }
    r
}

/// Gcd in `Z[q][t]` of two nonzero polynomials, positive leading coefficient.
pub(crate) fn r_gcd(a: &RPoly, b: &RPoly) -> RPoly {
    let ca = r_content(a);
    let cb = r_content(b);
    let g = u_gcd(&ca, &cb);
    let (mut x, mut y) = if a.len() >= b.len() {
        (r_primpart(a), r_primpart(b))
    } else {
        (r_primpart(b), r_primpart(a))
    };
    loop {
        if y.len() == 1 {
            return vec![g];
        }
        let r = r_prem(&x, &y);
        if r.is_empty() {
            return y.iter().map(|c| u_mul(c, &g)).collect();
        }
        x = y;
        y = r_primpart(&r);
    }
}
