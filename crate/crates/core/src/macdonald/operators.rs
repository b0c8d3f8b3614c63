//! The commuting family of Macdonald difference operators `D_r` on `n` variables.

use thiserror::Error;

use crate::coeff::RatQT;
use crate::partition::Partition;
use crate::symfunc::NPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("operator index r = {r} outside 1..={n}")]
    BadIndex { r: usize, n: usize },
    #[error("nonzero remainder after clearing the Vandermonde denominator")]
    InternalInconsistency,
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    go(0, n, r, &mut cur, &mut out);
    out
}

fn linear(n: usize, i: usize, ci: RatQT, j: usize, cj: RatQT) -> NPoly {
    let mut ei = vec![0; n];
    ei[i] = 1;
    let mut ej = vec![0; n];
    ej[j] = 1;
    let mut p = NPoly::monomial(ei, ci);
    p.add_term(ej, cj);
    p
}

/// `D_r f = Σ_{|I|=r} t^{r(r-1)/2} Π_{i∈I, j∉I} (t x_i - x_j)/(x_i - x_j) Π_{i∈I} T_{q,x_i} f`.
///
/// Computed over the common denominator `Π_{i<j}(x_i - x_j)` followed by exact division.
pub fn dr_apply(r: usize, f: &NPoly, n: usize) -> Result<NPoly, OperatorError> {
    assert_eq!(f.n(), n, "polynomial lives in a different number of variables");
    if r == 0 || r > n {
        return Err(OperatorError::BadIndex { r, n });
    }
    let tpow = RatQT::monomial(0, (r * (r - 1) / 2) as u32);
    let one = RatQT::one();
    let minus = RatQT::from_int(-1);
    let mut numer = NPoly::zero(n);
    for set in subsets(n, r) {
        let mut inside = vec![false; n];
        for &i in &set {
            inside[i] = true;
        }
        let mut term = f.q_shift(&set).scale(&tpow);
        let mut flips = 0usize;
        for i in 0..n {
            for j in 0..n {
                if inside[i] && !inside[j] {
                    term = term.mul(&linear(n, i, RatQT::t(), j, minus.clone()));
                    if i > j {
                        flips += 1;
                    }
                } else if i < j && inside[i] == inside[j] {
                    term = term.mul(&linear(n, i, one.clone(), j, minus.clone()));
                }
            }
        }
        if flips % 2 == 1 {
            term = term.scale(&minus);
        }
        numer = numer.add(&term);
    }
    for i in 0..n {
        for j in i + 1..n {
            numer = numer.div_linear(i, j).ok_or(OperatorError::InternalInconsistency)?;
        }
    }
    Ok(numer)
}

/// `e_r(t^{n-1} q^{λ_1}, ..., t^0 q^{λ_n})`.
pub fn dr_eigenvalue(lam: &Partition, r: usize, n: usize) -> RatQT {
    let xs: Vec<RatQT> = (1..=n).map(|i| RatQT::monomial(lam.part(i), (n - i) as u32)).collect();
    // e_k via the recurrence on prefixes
    let mut e = vec![RatQT::zero(); r + 1];
    e[0] = RatQT::one();
    for x in &xs {
        for k in (1..=r).rev() {
            e[k] = &e[k] + &(&e[k - 1] * x);
        }
    }
    e[r].clone()
}

/// `D_r P_λ = e_r(...) P_λ` in `n` variables, exactly.
pub fn dr_eigencheck(lam: &Partition, r: usize, n: usize) -> bool {
    let p = super::p_of(lam).evaluate_n(n);
    match dr_apply(r, &p, n) {
        Ok(img) => img == p.scale(&dr_eigenvalue(lam, r, n)),
        Err(_) => false,
    }
}
