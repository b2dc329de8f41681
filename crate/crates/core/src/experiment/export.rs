//! Sweep result files: long-format per-cell CSV, aggregate CSV, JSON mirror.

use std::io::Write;

use super::sweep::SweepResult;
use crate::error::Result;
use crate::fmt_f64;

fn opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

/// `rho,p0,segment_id,metric,value,error`; `value` is empty and `error`
/// says why when a metric is missing.
pub fn write_cells_csv<W: Write>(result: &SweepResult, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rho", "p0", "segment_id", "metric", "value", "error"])?;
    for cell in &result.cells {
        for &metric in &result.metrics {
            w.write_record([
                fmt_f64(cell.rho),
                fmt_f64(cell.p0),
                cell.segment_id.to_string(),
                metric.name().to_owned(),
                opt(cell.value(metric)),
                cell.missing_reason(metric).unwrap_or_default().to_owned(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// `rho,p0,metric,mean,std`.
pub fn write_aggregates_csv<W: Write>(result: &SweepResult, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rho", "p0", "metric", "mean", "std"])?;
    for a in &result.aggregates {
        w.write_record([fmt_f64(a.rho), fmt_f64(a.p0), a.metric.name().to_owned(), opt(a.mean), opt(a.std)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(result: &SweepResult, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, result)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{run_sweep, SweepConfig};
    use crate::metrics::MetricKind;
    use crate::series::{normalize, TimeSeries};

    fn small() -> SweepResult {
        let segs: Vec<_> = [[0.1, 0.7, 0.3, 0.9, 0.2], [0.5, 0.4, 0.8, 0.1, 0.6]]
            .iter()
            .map(|v| normalize(&TimeSeries::new(v.to_vec(), 1.0).unwrap()))
            .collect();
        let cfg = SweepConfig {
            rho_grid: vec![1.0, 100.0],
            p0_grid: vec![0.5, 1.0],
            baseline: None,
            metrics: vec![MetricKind::KMax, MetricKind::Gamma],
        };
        run_sweep(&segs, &cfg).unwrap()
    }

    #[test]
    fn csv_shapes() {
        let r = small();
        let mut cells = Vec::new();
        write_cells_csv(&r, &mut cells).unwrap();
        let text = String::from_utf8(cells).unwrap();
        assert_eq!(text.lines().next().unwrap(), "rho,p0,segment_id,metric,value,error");
        assert_eq!(text.lines().count(), 1 + 2 * 2 * 2 * 2);

        let mut agg = Vec::new();
        write_aggregates_csv(&r, &mut agg).unwrap();
        let text = String::from_utf8(agg).unwrap();
        assert_eq!(text.lines().next().unwrap(), "rho,p0,metric,mean,std");
        assert_eq!(text.lines().count(), 1 + 2 * 2 * 2);
    }

    #[test]
    fn json_mirror_round_trips() {
        let r = small();
        let mut buf = Vec::new();
        write_json(&r, &mut buf).unwrap();
        let back: SweepResult = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, r);
    }
}
