//! Constant-term realization of the contour integrals: the weight `Δ`, the
//! kernel `Π(x,ȳ)`, the maps `G_s`, `N_{n,m}`, `Ñ_{n,m}`, the scalar product
//! `<,>'_n`, and the nested representations of `P_λ`, `Q_{λ/μ}` and `s_λ`.
//!
//! A contour integral `∮ dy/(2πi y)` is the constant term in `y`. All `(q,t)`
//! dependence is carried by [`QTSeries`](crate::coeff::QTSeries) truncated at
//! total order `M`.

mod delta;
mod integral;
mod maps;
mod scalar;
mod schur;
mod seriessym;
mod window;

pub use delta::{delta_expand, pi_inv_expand, psi_coeffs};
pub use integral::{
    f_plus, integral_check, integral_constants, integral_rep_p, integral_rep_p_dual, skew_integral,
    skew_integral_check, BlockConstant, FPlus, IntegralConstants,
};
pub use maps::{map_g, map_g_sym, map_n, map_n_tilde, series_of_poly, Kernel};
pub use scalar::{ct_norm_check, ct_norm_closed, scalar_prime, scalar_prime_poly, self_adjoint_check, InfiniteProduct};
pub use schur::{schur_ct, schur_ct_dual, schur_ct_kernel, schur_functional};
pub use seriessym::SeriesSym;
pub use window::{var_names, Window, WindowSeries};

pub(crate) use maps::ct_against_delta;

use thiserror::Error;

use crate::coeff::CoeffError;
use crate::macdonald::OperatorError;
use crate::partition::PartitionError;
use crate::symfunc::SymError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CtError {
    #[error("x-window too small: output degree {needed} exceeds the cap {cap}")]
    WindowTooSmall { needed: u32, cap: u32 },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
