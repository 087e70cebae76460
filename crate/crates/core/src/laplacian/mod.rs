//! The H¹ form, resolvent, Laplacian and the heat and Schrödinger
//! semigroups on cylinder states, with the checks built on them.

mod checks;
mod h1;
mod semigroup;
mod series;

pub use checks::{
    contraction_derivative_check, gram_factorization, head_split_residual, taylor_residuals,
    translation_invariance_check, GramCheck,
};
pub use h1::{h1_inner, H1Profile};
pub use semigroup::{
    evolve, evolve_heat, evolve_schrodinger, gaussian_variance_parameter, laplace_resolvent_oracle, laplacian,
    resolvent, EvolvedFamily, Mode,
};
pub use series::{power_tail_sum, PowerTailSum};

#[cfg(test)]
mod tests;
