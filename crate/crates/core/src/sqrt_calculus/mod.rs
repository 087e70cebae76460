//! Complex measures in square-root-density coordinates.
//!
//! A complex measure `u` is carried by an amplitude `f` against a positive
//! base measure `mu`, `u = f|f| d mu`. Sums, scalar multiples and inner
//! products act on amplitudes once both operands sit on a common base, so the
//! whole Hilbert-space structure reduces to finite linear algebra on atomic
//! (finitely supported) measures.

mod amplitude;
mod atomic;
pub(crate) mod io;

pub use amplitude::{eta, zeta, Amplitude};
pub use atomic::{
    add, inner, inner_measure, refine, scale, total_variation, AtomicState, BaseMeasure,
    InnerMeasure, Refinement, ATOM_TOLERANCE,
};
pub use io::{read_atomic_csv, write_atomic_csv};
