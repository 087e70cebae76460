//! Plain-text CSV form of an [`AtomicState`].
//!
//! ```text
//! dimension,2
//! x1,x2,weight,amp_re,amp_im
//! 0.5,-1.0,2.0,0.25,-0.75
//! ```
//!
//! Floats are written in shortest round-trip notation, so a write/read cycle
//! reproduces the state bit for bit.

use std::io::{Read, Write};

use num_complex::Complex64;

use super::atomic::{AtomicState, BaseMeasure};
use crate::error::{Error, Result};

pub(crate) fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

pub(crate) fn parse_f64(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|e| Error::Parse(format!("bad number {s:?}: {e}")))
}

pub fn write_atomic_csv<W: Write>(u: &AtomicState, out: W) -> Result<()> {
    let d = u.dimension();
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    w.write_record(["dimension".to_string(), d.to_string()])?;
    let mut header: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
    header.extend(["weight", "amp_re", "amp_im"].map(String::from));
    w.write_record(&header)?;
    for (i, p) in u.base().points().enumerate() {
        let mut row: Vec<String> = p.iter().map(|x| fmt_f64(*x)).collect();
        row.push(fmt_f64(u.base().weight(i)));
        row.push(fmt_f64(u.amps()[i].re));
        row.push(fmt_f64(u.amps()[i].im));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_atomic_csv<R: Read>(input: R) -> Result<AtomicState> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(input);
    let mut records = r.records();
    let first = records
        .next()
        .ok_or_else(|| Error::Parse("empty atomic-state file".into()))??;
    if first.len() != 2 || &first[0] != "dimension" {
        return Err(Error::Parse("first row must be `dimension,<d>`".into()));
    }
    let d: usize = first[1]
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad dimension: {e}")))?;
    let header = records
        .next()
        .ok_or_else(|| Error::Parse("missing column header".into()))??;
    if header.len() != d + 3 {
        return Err(Error::Parse(format!("header has {} columns, expected {}", header.len(), d + 3)));
    }
    let mut coords = Vec::new();
    let mut weights = Vec::new();
    let mut amps = Vec::new();
    for rec in records {
        let rec = rec?;
        if rec.len() != d + 3 {
            return Err(Error::Parse(format!("row has {} fields, expected {}", rec.len(), d + 3)));
        }
        let vals = rec.iter().map(parse_f64).collect::<Result<Vec<_>>>()?;
        coords.extend_from_slice(&vals[..d]);
        weights.push(vals[d]);
        amps.push(Complex64::new(vals[d + 1], vals[d + 2]));
    }
    AtomicState::new(BaseMeasure::from_flat(d, coords, weights)?, amps)
}
