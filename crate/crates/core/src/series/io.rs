//! CSV input and output for series.
//!
//! Input holds one sample per line, either `value` or `time,value`, with an
//! optional header line. Output is `index,time,value`, which the reader also
//! accepts (the index column is ignored).

use std::io::{Read, Write};
use std::path::Path;

use super::TimeSeries;
use crate::error::{PvgError, Result};
use crate::fmt_f64;

const SPACING_TOL: f64 = 1e-9;

/// Parse a series. `default_dt` applies to single-column input; two-column
/// input takes its sample interval from the time column, which must be
/// uniform.
pub fn read_series<R: Read>(reader: R, default_dt: f64) -> Result<TimeSeries> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);

    let mut times = Vec::new();
    let mut values = Vec::new();
    let mut columns = None;
    for (k, record) in rdr.records().enumerate() {
        let record = record?;
        let line = record.position().map_or(k as u64 + 1, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        let fields = match parsed {
            Ok(f) => f,
            // a non-numeric first line is a header
            Err(_) if columns.is_none() && values.is_empty() && times.is_empty() => {
                columns = Some(record.len());
                continue;
            }
            Err(e) => return Err(PvgError::Parse { line, message: format!("{e}: {:?}", record.as_slice()) }),
        };
        let width = *columns.get_or_insert(fields.len());
        if fields.len() != width || !(1..=3).contains(&width) {
            return Err(PvgError::Parse {
                line,
                message: format!(
                    "expected {width} column(s) (value, time,value or index,time,value), got {}",
                    fields.len()
                ),
            });
        }
        if let Some(bad) = fields.iter().find(|v| !v.is_finite()) {
            return Err(PvgError::Parse { line, message: format!("non-finite number {bad}") });
        }
        match fields.as_slice() {
            [v] => values.push(*v),
            [t, v] | [_, t, v] => {
                times.push((*t, line));
                values.push(*v);
            }
            _ => unreachable!(),
        }
    }

    if values.len() < 2 {
        return Err(PvgError::Parse { line: 0, message: format!("need at least 2 samples, found {}", values.len()) });
    }
    if times.is_empty() {
        return TimeSeries::new(values, default_dt);
    }

    let n = times.len();
    let t0 = times[0].0;
    let dt = (times[n - 1].0 - t0) / (n - 1) as f64;
    if dt.is_nan() || dt <= 0.0 {
        return Err(PvgError::Parse { line: times[1].1, message: "times must increase".into() });
    }
    for w in times.windows(2) {
        let step = w[1].0 - w[0].0;
        if (step - dt).abs() > SPACING_TOL * dt.abs().max(t0.abs().max(w[1].0.abs())) {
            return Err(PvgError::Parse {
                line: w[1].1,
                message: format!("non-uniform sampling: step {step} vs mean interval {dt}"),
            });
        }
    }
    TimeSeries::with_start(values, dt, t0)
}

pub fn load_series(path: &Path, default_dt: f64) -> Result<TimeSeries> {
    read_series(std::fs::File::open(path)?, default_dt)
}

pub fn write_series<W: Write>(series: &TimeSeries, mut out: W) -> Result<()> {
    writeln!(out, "index,time,value")?;
    for (i, v) in series.values().iter().enumerate() {
        writeln!(out, "{i},{},{}", fmt_f64(series.time(i)), fmt_f64(*v))?;
    }
    Ok(())
}

pub fn save_series(series: &TimeSeries, path: &Path) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_series(series, &mut out)?;
    out.flush()?;
    Ok(())
}
