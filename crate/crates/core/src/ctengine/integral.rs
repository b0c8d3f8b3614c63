//! Nested constant-term representations of `P_λ`, `P_{λ'}(x;t,q)` and `Q_{λ/μ}`.

use std::collections::BTreeSet;

use super::maps::{assemble, ct_against_delta, map_g_sym, map_n, map_n_tilde, Kernel};
use super::scalar::{ct_norm_closed, scalar_prime, InfiniteProduct};
use super::seriessym::SeriesSym;
use super::window::{var_names, Window, WindowSeries};
use super::{delta_expand, CtError};
use crate::coeff::{QTSeries, RatQT};
use crate::macdonald::{b_coeff, macdonald_p, p_of, p_swapped, skew_q};
use crate::partition::Partition;

/// Data for one rectangle stage `λ^{(a)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockConstant {
    pub stage: Partition,
    pub r: usize,
    /// `<P_{λ^{(a)}}, P_{λ^{(a)}}>_{q,t}`.
    pub norm: RatQT,
    /// Closed product for `<P_{λ^{(a)}}, P_{λ^{(a)}}>'_{r_a}`.
    pub ct_norm: InfiniteProduct,
}

/// `C^+_λ = Π_a <P,P>/(r_a! <P,P>'_{r_a})` and `C^-_λ = C^+_λ / <P_λ,P_λ>`.
///
/// The `<,>'` factors are infinite products, so the constants are exact only
/// as `rational_part × Π 1/ct_norm`; numerically they are used as series.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralConstants {
    pub lam: Partition,
    pub blocks: Vec<BlockConstant>,
    /// `Π_a <P,P> / r_a!`.
    pub rational_part: RatQT,
    /// Set when some block has `r_a >= 2`, where the closed `<,>'` product is only conjectural.
    pub relies_on_conjecture: bool,
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

pub fn integral_constants(lam: &Partition) -> IntegralConstants {
    let mut blocks = Vec::new();
    let mut rational = RatQT::one();
    if !lam.is_empty() {
        let rects = lam.rectangles().expect("nonempty partition");
        let stages = lam.rectangle_stages().expect("nonempty partition");
        for (b, stage) in rects.iter().zip(stages) {
            let r = b.r as usize;
            let norm = macdonald_p(&stage).norm;
            rational = &(&rational * &norm) / &RatQT::from_int(factorial(r));
            let ct_norm = ct_norm_closed(&stage, r);
            blocks.push(BlockConstant {
                stage,
                r,
                norm,
                ct_norm,
            });
        }
    }
    let relies_on_conjecture = blocks.iter().any(|b| b.r >= 2);
    IntegralConstants {
        lam: lam.clone(),
        blocks,
        rational_part: rational,
        relies_on_conjecture,
    }
}

impl IntegralConstants {
    pub fn c_plus(&self, order: u32) -> QTSeries {
        let mut c = QTSeries::from_ratqt(&self.rational_part, order).expect("norms expand at the origin");
        for b in &self.blocks {
            c = &c * &b.ct_norm.to_series(order).inverse().expect("constant term 1");
        }
        c
    }

    pub fn c_minus(&self, order: u32) -> QTSeries {
        let b = QTSeries::from_ratqt(&b_coeff(&self.lam), order).expect("b expands at the origin");
        &self.c_plus(order) * &b
    }

    /// `C^+_λ` as an element of `Q(q,t)` when no `<,>'` factor is needed.
    pub fn c_plus_exact(&self) -> Option<RatQT> {
        self.blocks
            .iter()
            .all(|b| b.ct_norm.is_trivial())
            .then(|| self.rational_part.clone())
    }

    /// Recompute every `<P,P>'_{r_a}` by constant term and compare with the closed products.
    pub fn ct_norms_agree(&self, order: u32) -> Result<bool, CtError> {
        for b in &self.blocks {
            let p = p_of(&b.stage);
            if scalar_prime(&p, &p, b.r, order)? != b.ct_norm.to_series(order) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `(r_N, G_{s_N} N_{r_N,r_{N-1}} ⋯ G_{s_1} · 1)`: the symmetric polynomial in the
/// last integration level that multiplies `Δ(x^N)` inside `F^±_λ`.
fn inner_stage(lam: &Partition, order: u32) -> Result<(usize, SeriesSym), CtError> {
    if lam.is_empty() {
        return Ok((0, SeriesSym::one(order)));
    }
    let blocks = lam.rectangles()?;
    let mut r = blocks[0].r as usize;
    let mut f = map_g_sym(blocks[0].s, r, &SeriesSym::one(order));
    for b in &blocks[1..] {
        let next = b.r as usize;
        f = map_n(Some(next), r, &f, lam.weight())?;
        f = map_g_sym(b.s, next, &f);
        r = next;
    }
    Ok((r, f))
}

fn check_degree(lam: &Partition, d_out: u32) -> Result<(), CtError> {
    if d_out < lam.weight() {
        return Err(CtError::WindowTooSmall {
            needed: lam.weight(),
            cap: d_out,
        });
    }
    Ok(())
}

/// `C^+_λ N_{∞,r_N} G_{s_N} ⋯ N_{r_2,r_1} G_{s_1} · 1`, which should be `P_λ(x;q,t)`.
pub fn integral_rep_p(lam: &Partition, order: u32, d_out: u32) -> Result<SeriesSym, CtError> {
    check_degree(lam, d_out)?;
    let (r, k) = inner_stage(lam, order)?;
    let out = map_n(None, r, &k, d_out)?;
    Ok(out.scale(&integral_constants(lam).c_plus(order)))
}

/// `C^-_λ Ñ_{∞,r_N} G_{s_N} ⋯ · 1`, which should be `P_{λ'}(x;t,q)`.
pub fn integral_rep_p_dual(lam: &Partition, order: u32, d_out: u32) -> Result<SeriesSym, CtError> {
    check_degree(lam, d_out)?;
    let (r, k) = inner_stage(lam, order)?;
    let out = map_n_tilde(None, r, &k, d_out)?;
    Ok(out.scale(&integral_constants(lam).c_minus(order)))
}

/// Both representations against the Gram–Schmidt construction.
pub fn integral_check(lam: &Partition, order: u32) -> Result<(bool, bool), CtError> {
    let d = lam.weight();
    let plus = integral_rep_p(lam, order, d)?.agrees_with(&p_of(lam))?;
    let minus = integral_rep_p_dual(lam, order, d)?.agrees_with(&p_swapped(&lam.conjugate()))?;
    Ok((plus, minus))
}

/// The integrand `F^+_λ(z) = C^+_λ Δ(z) K_λ(z)` in `r_N` variables.
#[derive(Clone, Debug)]
pub struct FPlus {
    pub lam: Partition,
    pub vars: usize,
    pub constant: QTSeries,
    /// `K_λ`, symmetric in the `vars` variables.
    pub inner: SeriesSym,
}

pub fn f_plus(lam: &Partition, order: u32) -> Result<FPlus, CtError> {
    let (vars, inner) = inner_stage(lam, order)?;
    Ok(FPlus {
        lam: lam.clone(),
        vars,
        constant: integral_constants(lam).c_plus(order),
        inner,
    })
}

impl FPlus {
    /// `K_λ(z)` as a Laurent polynomial with the constant folded in.
    fn scaled_inner(&self) -> Vec<(Vec<i32>, QTSeries)> {
        self.inner
            .monomials(self.vars)
            .into_iter()
            .map(|(e, c)| (e.into_iter().map(|x| x as i32).collect(), c * &self.constant))
            .collect()
    }

    /// The full integrand as a series in `z1..z{r_N}`, restricted to `window`.
    pub fn to_window_series(&self, window: &Window) -> WindowSeries {
        let order = self.constant.order();
        let vars = var_names("z", self.vars);
        if self.vars == 0 {
            return WindowSeries::from_terms(vars, order, [(Vec::new(), self.constant.clone())]);
        }
        let k = WindowSeries::from_terms(vars.clone(), order, self.scaled_inner());
        let d = delta_expand(self.vars, order, &Window::Unbounded);
        let d = WindowSeries::from_terms(vars, order, d.terms().clone());
        d.mul(&k, window)
    }

    /// `ct_z[ Π(y, z̄) F^+_λ(z) ]` with `y` in `n_to` variables (`None` for infinitely many).
    pub fn integrate(&self, n_to: Option<usize>, d_out: u32) -> Result<SeriesSym, CtError> {
        let out = map_n(n_to, self.vars, &self.inner, d_out)?.scale(&self.constant);
        Ok(out)
    }
}

/// Variant 1 of the skew representation:
/// `b_λ^{-1} Q_{λ/μ}(x) = ct_{z,w}[ F^+_λ(z) F^+_μ(w) Π(z̄,w̄) Π(x,z̄) ]`.
///
/// The `w` integral is taken first (it produces `P_μ(z̄)` in `r_N` variables),
/// then the `z` integral is assembled at the level of `Λ`.
pub fn skew_integral(lam: &Partition, mu: &Partition, order: u32, d_out: u32) -> Result<SeriesSym, CtError> {
    if mu.weight() > lam.weight() {
        return Ok(SeriesSym::zero(order));
    }
    let needed = lam.weight() - mu.weight();
    if d_out < needed {
        return Err(CtError::WindowTooSmall { needed, cap: d_out });
    }
    let fl = f_plus(lam, order)?;
    let fm = f_plus(mu, order)?;
    let r = fl.vars;
    let p_mu = fm.integrate(Some(r), mu.weight())?;
    let p_bar: Vec<(Vec<i32>, QTSeries)> = p_mu
        .monomials(r)
        .into_iter()
        .map(|(e, c)| (e.into_iter().map(|x| -(x as i32)).collect(), c.clone()))
        .collect();
    // K_λ(z) P_μ(z̄) as a Laurent polynomial
    let mut prod: std::collections::BTreeMap<Vec<i32>, QTSeries> = Default::default();
    for (e, c) in fl.scaled_inner() {
        for (f, d) in &p_bar {
            let g: Vec<i32> = e.iter().zip(f).map(|(a, b)| a + b).collect();
            let v = &c * d;
            match prod.get_mut(&g) {
                Some(acc) => *acc = &*acc + &v,
                None => {
                    prod.insert(g, v);
                }
            }
        }
    }
    let terms: Vec<(Vec<i32>, QTSeries)> = prod.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let c = ct_against_delta(r, &terms, order);
    let degrees: BTreeSet<u32> = c.keys().map(|p| p.weight()).collect();
    debug_assert!(degrees.iter().all(|&d| d == needed));
    Ok(assemble(Kernel::Pi, &c, order))
}

/// Compare [`skew_integral`] with `b_λ^{-1} Q_{λ/μ}` from the structure constants.
pub fn skew_integral_check(lam: &Partition, mu: &Partition, order: u32, d_out: u32) -> Result<bool, CtError> {
    let got = skew_integral(lam, mu, order, d_out)?;
    let expect = skew_q(lam, mu).scale(&b_coeff(lam).inv()?);
    Ok(got.agrees_with(&expect)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::symfunc::{Basis, SymFunc};

    #[test]
    fn constants_of_small_shapes() {
        let c = integral_constants(&part![1]);
        assert_eq!(c.c_plus_exact(), Some("(1-q)/(1-t)".parse().unwrap()));
        assert!(!c.relies_on_conjecture);
        let c = integral_constants(&part![]);
        assert_eq!(c.c_plus_exact(), Some(RatQT::one()));
        let c = integral_constants(&part![2, 2]);
        assert_eq!(c.blocks.len(), 1);
        assert_eq!(c.blocks[0].stage, part![2, 2]);
        assert!(c.relies_on_conjecture);
        assert!(c.c_plus_exact().is_none());
        assert!(c.ct_norms_agree(3).unwrap());
        let b = QTSeries::from_ratqt(&b_coeff(&part![2, 2]), 3).unwrap();
        assert_eq!(c.c_minus(3), &c.c_plus(3) * &b);
    }

    #[test]
    fn single_box() {
        let p = integral_rep_p(&part![1], 5, 1).unwrap();
        let p1 = SymFunc::basis_element(Basis::P, part![1]);
        assert!(p.agrees_with(&p1).unwrap());
        let d = integral_rep_p_dual(&part![1], 5, 1).unwrap();
        assert!(d.agrees_with(&p1).unwrap());
        assert_eq!(integral_rep_p(&part![], 5, 0).unwrap(), SeriesSym::one(5));
        assert!(integral_rep_p(&part![2], 3, 1).is_err());
    }

    #[test]
    fn two_boxes() {
        for lam in Partition::all(2) {
            assert_eq!(integral_check(&lam, 4).unwrap(), (true, true), "{lam}");
        }
    }

    #[test]
    fn skew_small() {
        assert!(skew_integral_check(&part![1], &part![1], 4, 0).unwrap());
        assert!(skew_integral_check(&part![2], &part![1], 4, 1).unwrap());
        assert!(skew_integral_check(&part![1, 1], &part![], 4, 2).unwrap());
    }

    #[test]
    fn integrand_series_integrates_to_p() {
        let order = 3;
        let f = f_plus(&part![1, 1], order).unwrap();
        let integrand = f.to_window_series(&Window::Unbounded);
        let kernel = super::super::pi_inv_expand(2, 2, 2, order);
        let integrand =
            WindowSeries::from_terms(var_names("y", 2), order, integrand.terms().clone()).embed(kernel.vars());
        let out = kernel.mul(&integrand, &Window::Unbounded).ct(&["y1", "y2"]);
        assert_eq!(out.coeff(&[1, 1]), QTSeries::one(order));
        assert!(out.coeff(&[2, 0]).is_zero());
        assert!(f.integrate(None, 2).unwrap().agrees_with(&p_of(&part![1, 1])).unwrap());
    }
}
