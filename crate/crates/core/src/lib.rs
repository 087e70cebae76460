//! Hilbert-space calculus on complex measures in square-root-density
//! coordinates, with a translation-invariant Laplacian on cylinder states of
//! `R^infinity`.

pub mod error;
pub mod grid_spectral;
pub mod laplacian;
pub mod product_cylinder;
pub mod sqrt_calculus;
pub mod sum;
pub mod translation;

pub use error::{Error, Result};
pub use num_complex::Complex64;
