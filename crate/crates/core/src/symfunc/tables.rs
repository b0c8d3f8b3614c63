//! Per-degree rational transition matrices between each basis and the power sums.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Basis;
use crate::partition::Partition;

pub(crate) type SparseRow = Vec<(usize, BigRational)>;

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `to_p[b][λ]`: `b_λ` expanded in `p`.
    pub to_p: [Vec<SparseRow>; 5],
    /// `from_p[b][ρ]`: `p_ρ` expanded in `b`.
    pub from_p: [Vec<SparseRow>; 5],
}

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();

pub(crate) fn tables(d: u32) -> Arc<DegreeTables> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&d) {
        return t.clone();
    }
    let built = Arc::new(build(d));
    cache.write().unwrap().entry(d).or_insert(built).clone()
}

type Dense = Vec<Vec<BigRational>>;

fn build(d: u32) -> DegreeTables {
    let parts = Partition::all(d);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = parts.len();

    let ident: Dense = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();

    // p_λ = Σ L_{λμ} m_μ, so m → p is L^{-1}
    let p_in_m: Dense = parts
        .iter()
        .map(|l| {
            parts
                .iter()
                .map(|m| BigRational::from_integer(p_in_m_entry(l, m)))
                .collect()
        })
        .collect();
    let m_in_p = invert(&p_in_m);

    let e_in_p = products_in_p(&parts, &index, d, true);
    let h_in_p = products_in_p(&parts, &index, d, false);
    let s_in_h = schur_in_h(&parts, &index);
    let s_in_p = matmul(&s_in_h, &h_in_p);

    let dense_to_p = [ident.clone(), m_in_p, e_in_p, h_in_p, s_in_p];
    let dense_from_p: Vec<Dense> = dense_to_p
        .iter()
        .enumerate()
        .map(|(k, a)| {
            if k == Basis::P as usize {
                ident.clone()
            } else if k == Basis::M as usize {
                p_in_m.clone()
            } else {
                invert(a)
            }
        })
        .collect();

    let sparse = |a: &Dense| -> Vec<SparseRow> {
        a.iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.clone()))
                    .collect()
            })
            .collect()
    };
    let to_p = [0, 1, 2, 3, 4].map(|k| sparse(&dense_to_p[k]));
    let from_p = [0, 1, 2, 3, 4].map(|k| sparse(&dense_from_p[k]));
    DegreeTables {
        parts,
        index,
        to_p,
        from_p,
    }
}

/// Number of ways to distribute the parts of `l` into the bins of `m` with bin sums `m_j`.
fn p_in_m_entry(l: &Partition, m: &Partition) -> BigInt {
    fn go(parts: &[u32], bins: &mut [u32]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return bins.iter().all(|&b| b == 0) as u64;
        };
        let mut total = 0;
        for j in 0..bins.len() {
            if bins[j] >= first {
                bins[j] -= first;
                total += go(rest, bins);
                bins[j] += first;
            }
        }
        total
    }
    if l.len() < m.len() {
        return BigInt::zero();
    }
    let mut bins = m.parts().to_vec();
    BigInt::from(go(l.parts(), &mut bins))
}

/// `e_λ` (or `h_λ`) in `p`, via `e_n = Σ_ρ ε_ρ p_ρ / z_ρ` and `h_n = Σ_ρ p_ρ / z_ρ`.
fn products_in_p(parts: &[Partition], index: &HashMap<Partition, usize>, d: u32, signed: bool) -> Dense {
    let single: Vec<Vec<(Partition, BigRational)>> = (0..=d)
        .map(|k| {
            Partition::all(k)
                .into_iter()
                .map(|rho| {
                    let mut c = BigRational::new(BigInt::one(), rho.z());
                    if signed && (k as usize - rho.len()) % 2 == 1 {
                        c = -c;
                    }
                    (rho, c)
                })
                .collect()
        })
        .collect();
    parts
        .iter()
        .map(|lam| {
            let mut acc: Vec<(Partition, BigRational)> = vec![(Partition::empty(), BigRational::one())];
            for &k in lam.parts() {
                let mut next: HashMap<Partition, BigRational> = HashMap::new();
                for (a, ca) in &acc {
                    for (b, cb) in &single[k as usize] {
                        let mut v = a.parts().to_vec();
                        v.extend_from_slice(b.parts());
                        *next.entry(Partition::new(v)).or_insert_with(BigRational::zero) += ca * cb;
                    }
                }
                acc = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            }
            let mut row = vec![BigRational::zero(); parts.len()];
            for (p, c) in acc {
                row[index[&p]] = c;
            }
            row
        })
        .collect()
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i - i + j})`, expanded in the `h` basis.
fn schur_in_h(parts: &[Partition], index: &HashMap<Partition, usize>) -> Dense {
    parts
        .iter()
        .map(|lam| {
            let l = lam.len();
            let mut row = vec![BigRational::zero(); parts.len()];
            let mut used = vec![false; l];
            let mut chosen = Vec::with_capacity(l);
            jt_expand(lam, 0, &mut used, &mut chosen, 0, &mut |hs, sign| {
                let p = Partition::new(hs.to_vec());
                row[index[&p]] += BigRational::from_integer(BigInt::from(sign));
            });
            row
        })
        .collect()
}

fn jt_expand(
    lam: &Partition,
    i: usize,
    used: &mut [bool],
    chosen: &mut Vec<u32>,
    inversions: usize,
    emit: &mut dyn FnMut(&[u32], i64),
) {
    let l = lam.len();
    if i == l {
        emit(chosen, if inversions.is_multiple_of(2) { 1 } else { -1 });
        return;
    }
    for j in 0..l {
        if used[j] {
            continue;
        }
        let k = lam.part(i + 1) as i64 - i as i64 + j as i64;
        if k < 0 {
            continue;
        }
        let inv = used[j + 1..].iter().filter(|&&u| u).count();
        used[j] = true;
        chosen.push(k as u32);
        jt_expand(lam, i + 1, used, chosen, inversions + inv, emit);
        chosen.pop();
        used[j] = false;
    }
}

fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = b.first().map(|r| r.len()).unwrap_or(0);
    a.iter()
        .map(|row| {
            let mut out = vec![BigRational::zero(); n];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !y.is_zero() {
                        out[j] += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// Gauss–Jordan inverse over `Q`.
pub(crate) fn invert(a: &Dense) -> Dense {
    let n = a.len();
    let mut m: Dense = a.clone();
    let mut inv: Dense = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].numer().abs() + m[r][col].denom())
            .expect("transition matrix is invertible");
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].recip();
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
                if !m[col][j].is_zero() {
                    let x = &f * &m[col][j];
                    m[r][j] -= x;
                }
                if !inv[col][j].is_zero() {
                    let x = &f * &inv[col][j];
                    inv[r][j] -= x;
                }
            }
        }
    }
    inv
}
