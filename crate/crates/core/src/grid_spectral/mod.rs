//! Periodic quadrature grids on boxes in R^N, the unitary discrete Fourier
//! map, spectral multipliers and closed-form Gaussian oracles.
//!
//! Frequencies follow the FFT lattice `xi = 2 pi k / L` with
//! `k in -n/2 .. n/2 - 1`; nodes sit at `j h - L/2`.

mod fft;
mod grid;
mod io;
pub mod oracle;
mod state;

pub use grid::{Axis, Grid};
pub use io::{read_grid_state, write_grid_state};
pub use state::{fourier_multiplier, grid_inner, lattice_shift, GridState, LATTICE_SNAP};
