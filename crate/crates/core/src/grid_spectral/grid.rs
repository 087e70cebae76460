use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One periodic axis: box length and number of nodes (a power of two).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub length: f64,
    pub points: usize,
}

impl Axis {
    pub fn new(length: f64, points: usize) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidGrid(format!("axis length {length} must be positive")));
        }
        if points < 2 || !points.is_power_of_two() {
            return Err(Error::InvalidGrid(format!("{points} points is not a power of two >= 2")));
        }
        Ok(Self { length, points })
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.points as f64
    }

    pub fn coord(&self, j: usize) -> f64 {
        j as f64 * self.spacing() - 0.5 * self.length
    }

    /// Signed wavenumber of FFT slot `j`.
    pub fn wavenumber(&self, j: usize) -> i64 {
        let n = self.points as i64;
        let j = j as i64;
        if j < n / 2 {
            j
        } else {
            j - n
        }
    }

    pub fn frequency(&self, j: usize) -> f64 {
        2.0 * PI * self.wavenumber(j) as f64 / self.length
    }

    pub fn coords(&self) -> Vec<f64> {
        (0..self.points).map(|j| self.coord(j)).collect()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        (0..self.points).map(|j| self.frequency(j)).collect()
    }
}

/// A tensor grid of periodic axes. Zero axes is the one-node grid of R^0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    axes: Vec<Axis>,
}

impl Grid {
    pub fn new(axes: Vec<Axis>) -> Result<Self> {
        for a in &axes {
            Axis::new(a.length, a.points)?;
        }
        Ok(Self { axes })
    }

    pub fn cube(dimension: usize, length: f64, points: usize) -> Result<Self> {
        let axis = Axis::new(length, points)?;
        Ok(Self { axes: vec![axis; dimension] })
    }

    pub fn scalar() -> Self {
        Self { axes: Vec::new() }
    }

    pub fn dimension(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis(&self, k: usize) -> &Axis {
        &self.axes[k]
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.points).collect()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.points).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Quadrature weight of every node, the product of the spacings.
    pub fn weight(&self) -> f64 {
        self.axes.iter().map(Axis::spacing).product()
    }

    pub fn volume(&self) -> f64 {
        self.axes.iter().map(|a| a.length).product()
    }

    /// Row-major stride of axis `k` (the last axis is contiguous).
    pub fn stride(&self, k: usize) -> usize {
        self.axes[k + 1..].iter().map(|a| a.points).product()
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.axes.len()];
        for k in (0..self.axes.len()).rev() {
            idx[k] = flat % self.axes[k].points;
            flat /= self.axes[k].points;
        }
        idx
    }

    pub fn node(&self, flat: usize) -> Vec<f64> {
        self.multi_index(flat)
            .iter()
            .zip(&self.axes)
            .map(|(j, a)| a.coord(*j))
            .collect()
    }

    /// Concatenation of axes: `self` first, then `other`.
    pub fn product(&self, other: &Grid) -> Grid {
        let mut axes = self.axes.clone();
        axes.extend_from_slice(&other.axes);
        Grid { axes }
    }

    /// Splits into the first `m` axes and the rest.
    pub fn split(&self, m: usize) -> Result<(Grid, Grid)> {
        if m > self.axes.len() {
            return Err(Error::DimensionMismatch { left: m, right: self.axes.len() });
        }
        Ok((Grid { axes: self.axes[..m].to_vec() }, Grid { axes: self.axes[m..].to_vec() }))
    }

    /// Visits every node's frequency vector in row-major order.
    pub(crate) fn for_each_frequency<F: FnMut(usize, &[f64])>(&self, mut f: F) {
        let freqs: Vec<Vec<f64>> = self.axes.iter().map(Axis::frequencies).collect();
        let mut xi = vec![0.0; self.axes.len()];
        self.for_each_index(|flat, idx| {
            for (k, j) in idx.iter().enumerate() {
                xi[k] = freqs[k][*j];
            }
            f(flat, &xi);
        });
    }

    pub(crate) fn for_each_node<F: FnMut(usize, &[f64])>(&self, mut f: F) {
        let coords: Vec<Vec<f64>> = self.axes.iter().map(Axis::coords).collect();
        let mut x = vec![0.0; self.axes.len()];
        self.for_each_index(|flat, idx| {
            for (k, j) in idx.iter().enumerate() {
                x[k] = coords[k][*j];
            }
            f(flat, &x);
        });
    }

    fn for_each_index<F: FnMut(usize, &[usize])>(&self, mut f: F) {
        let n = self.len();
        let mut idx = vec![0usize; self.axes.len()];
        for flat in 0..n {
            f(flat, &idx);
            for k in (0..idx.len()).rev() {
                idx[k] += 1;
                if idx[k] < self.axes[k].points {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}
