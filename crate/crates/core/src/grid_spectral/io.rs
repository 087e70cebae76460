//! Plain-text form of a [`GridState`].
//!
//! ```text
//! dimension,2
//! axis,6.0,32
//! axis,4.0,16
//! re,im
//! 0.125,-0.5
//! ...
//! ```
//!
//! Samples follow in row-major order (last axis fastest).

use std::io::{BufRead, BufReader, Read, Write};

use num_complex::Complex64;

use super::grid::{Axis, Grid};
use super::state::GridState;
use crate::error::{Error, Result};
use crate::sqrt_calculus::io::{fmt_f64, parse_f64};

pub fn write_grid_state<W: Write>(state: &GridState, mut out: W) -> Result<()> {
    writeln!(out, "dimension,{}", state.dimension())?;
    for a in state.grid().axes() {
        writeln!(out, "axis,{},{}", fmt_f64(a.length), a.points)?;
    }
    writeln!(out, "re,im")?;
    for z in state.amps() {
        writeln!(out, "{},{}", fmt_f64(z.re), fmt_f64(z.im))?;
    }
    Ok(())
}

pub fn read_grid_state<R: Read>(input: R) -> Result<GridState> {
    let mut lines = BufReader::new(input).lines();
    let mut next = |what: &str| -> Result<String> {
        lines
            .next()
            .transpose()?
            .ok_or_else(|| Error::Parse(format!("missing {what}")))
    };
    let head = next("dimension line")?;
    let dim: usize = head
        .trim()
        .strip_prefix("dimension,")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad dimension line: {head}")))?;
    let mut axes = Vec::with_capacity(dim);
    for _ in 0..dim {
        let line = next("axis line")?;
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 3 || fields[0] != "axis" {
            return Err(Error::Parse(format!("bad axis line: {line}")));
        }
        let length = parse_f64(fields[1])?;
        let points = fields[2]
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad point count: {}", fields[2])))?;
        axes.push(Axis::new(length, points)?);
    }
    let grid = if dim == 0 { Grid::scalar() } else { Grid::new(axes)? };
    if next("sample header")?.trim() != "re,im" {
        return Err(Error::Parse("expected `re,im` header".into()));
    }
    let mut amp = Vec::with_capacity(grid.len());
    while let Some(line) = lines.next().transpose()? {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (re, im) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad sample: {line}")))?;
        amp.push(Complex64::new(parse_f64(re)?, parse_f64(im)?));
    }
    GridState::new(grid, amp)
}
