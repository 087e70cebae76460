//! Product measures, tensoring of grid heads with infinite product tails,
//! and the contractions adjoint to tensoring.

mod atomic;
mod cylinder;
mod factor;
mod family;
pub mod profile;
mod tail;

pub use atomic::{inner_measure_factorization_residual, product, product_inner_factorization_check};
pub use cylinder::{
    align, contract_head, contract_tail, cylinder_inner, cylinder_inner_parts, factor_state, linear_combination,
    tensor, zero_like, CylinderState,
};
pub use factor::{factor_inner, sampling_axis, BumpFactor, Factor, MIN_SAMPLING_POINTS, POINTS_PER_SUPPORT};
pub use family::{build_family, family_derivative_norm_sqr, BinaryAddress};
pub use tail::{tail_inner, Evolution, ScaleLaw, TailOverlap, TailProduct, TailRule, TAIL_FORMAT};
