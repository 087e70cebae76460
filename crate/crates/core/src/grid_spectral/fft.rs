//! Orthonormal N-dimensional DFT on row-major arrays, built from 1-D rustfft
//! transforms applied axis by axis.

use std::cell::RefCell;

use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// In-place unitary DFT (forward `e^{-i}` kernel) or its inverse.
pub(crate) fn fft_nd(data: &mut [Complex64], shape: &[usize], direction: FftDirection) {
    let total: usize = shape.iter().product();
    assert_eq!(total, data.len());
    for (k, &n) in shape.iter().enumerate() {
        let stride: usize = shape[k + 1..].iter().product();
        let fft = PLANNER.with(|p| p.borrow_mut().plan_fft(n, direction));
        let norm = 1.0 / (n as f64).sqrt();
        let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
        if stride == 1 {
            for lane in data.chunks_mut(n) {
                fft.process_with_scratch(lane, &mut scratch);
            }
        } else {
            let mut lane = vec![Complex64::new(0.0, 0.0); n];
            let block = n * stride;
            for outer in (0..total).step_by(block) {
                for inner in 0..stride {
                    let base = outer + inner;
                    for (j, v) in lane.iter_mut().enumerate() {
                        *v = data[base + j * stride];
                    }
                    fft.process_with_scratch(&mut lane, &mut scratch);
                    for (j, v) in lane.iter().enumerate() {
                        data[base + j * stride] = *v;
                    }
                }
            }
        }
        for v in data.iter_mut() {
            *v *= norm;
        }
    }
}
