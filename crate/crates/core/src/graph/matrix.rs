use std::io::{Read, Write};
use std::path::Path;

use crate::error::{PvgError, Result};
use crate::fmt_f64;

const MAGIC: &[u8; 4] = b"PVGM";

/// Dense symmetric `n x n` matrix with a zero diagonal, stored as its strict
/// upper triangle in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

#[inline]
pub(crate) fn row_offset(n: usize, i: usize) -> usize {
    i * n - i * (i + 1) / 2
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n.saturating_sub(1) / 2] }
    }

    pub fn from_upper(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n.saturating_sub(1) / 2 {
            return Err(PvgError::InvalidParams(format!(
                "upper triangle of a {n}x{n} matrix has {} entries, got {}",
                n * n.saturating_sub(1) / 2,
                data.len()
            )));
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strict upper triangle, row-major.
    pub fn upper(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => 0.0,
            std::cmp::Ordering::Less => self.data[row_offset(self.n, i) + j - i - 1],
            std::cmp::Ordering::Greater => self.data[row_offset(self.n, j) + i - j - 1],
        }
    }

    /// Entries `(i, j)` for `j > i`.
    pub fn upper_row(&self, i: usize) -> &[f64] {
        let start = row_offset(self.n, i);
        &self.data[start..start + self.n - i - 1]
    }

    pub(crate) fn upper_rows_mut(&mut self) -> Vec<&mut [f64]> {
        let mut rows = Vec::with_capacity(self.n);
        let mut rest = self.data.as_mut_slice();
        for i in 0..self.n {
            let (row, tail) = rest.split_at_mut(self.n - i - 1);
            rows.push(row);
            rest = tail;
        }
        rows
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|&v| f(v)).collect() }
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Binary export: `PVGM`, `u32` n, then the strict upper triangle as
    /// row-major `f64`, all little-endian.
    pub fn write_binary<W: Write>(&self, mut out: W) -> Result<()> {
        let n = u32::try_from(self.n).map_err(|_| PvgError::InvalidParams("matrix too large for u32 header".into()))?;
        out.write_all(MAGIC)?;
        out.write_all(&n.to_le_bytes())?;
        for v in &self.data {
            out.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(mut input: R) -> Result<Self> {
        let mut magic = [0u8; 4];
        input.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(PvgError::Parse { line: 0, message: "bad magic, expected PVGM".into() });
        }
        let mut n = [0u8; 4];
        input.read_exact(&mut n)?;
        let n = u32::from_le_bytes(n) as usize;
        let mut bytes = Vec::new();
        input.read_to_end(&mut bytes)?;
        let expected = n * n.saturating_sub(1) / 2;
        if bytes.len() != expected * 8 {
            return Err(PvgError::Parse {
                line: 0,
                message: format!("expected {} payload bytes for n = {n}, got {}", expected * 8, bytes.len()),
            });
        }
        let data = bytes.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk"))).collect();
        Ok(Self { n, data })
    }

    pub fn save_binary(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_binary(&mut out)?;
        out.flush()?;
        Ok(())
    }

    pub fn load_binary(path: &Path) -> Result<Self> {
        Self::read_binary(std::io::BufReader::new(std::fs::File::open(path)?))
    }

    /// Dense CSV: a header row of column indices followed by `n` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let header: Vec<String> = (0..self.n).map(|j| j.to_string()).collect();
        writeln!(out, "{}", header.join(","))?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| fmt_f64(self.get(i, j))).collect();
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }
}
