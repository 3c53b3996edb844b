//! Deterministic file emission: full-precision CSV and 8-bit PGM heatmaps.
//!
//! Both formats are locale-independent, LF-terminated, and byte-identical
//! across runs and thread counts.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

/// Canonical float formatting: 17 significant digits, scientific.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A CSV file with a fixed header, written with LF line endings.
pub struct CsvWriter {
    out: BufWriter<File>,
    columns: usize,
}

impl CsvWriter {
    pub fn create(path: &Path, header: &[&str]) -> std::io::Result<CsvWriter> {
        let file = File::create(path)?;
        let mut out = BufWriter::new(file);
        out.write_all(header.join(",").as_bytes())?;
        out.write_all(b"\n")?;
        Ok(CsvWriter { out, columns: header.len() })
    }

    /// One data row; the cell count must match the header.
    pub fn row(&mut self, cells: &[String]) -> std::io::Result<()> {
        assert_eq!(cells.len(), self.columns, "CSV row width mismatch");
        self.out.write_all(cells.join(",").as_bytes())?;
        self.out.write_all(b"\n")
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        self.out.flush()
    }
}

/// Write an 8-bit ASCII portable graymap of ψ* over the sweep grid.
///
/// Values map linearly onto 0..=255 with the maximum annotated in a header
/// comment; rows run over μ ascending top to bottom, columns over k
/// ascending left to right.
pub fn write_pgm(
    path: &Path,
    width: usize,
    height: usize,
    values: &[f64],
) -> std::io::Result<()> {
    assert_eq!(values.len(), width * height, "PGM payload mismatch");
    let max = values.iter().copied().fold(0.0f64, f64::max);
    let file = File::create(path)?;
    let mut out = BufWriter::new(file);
    writeln!(out, "P2")?;
    writeln!(out, "# psi_star linear map onto 0..255; max = {}", fmt_f64(max))?;
    writeln!(out, "# rows: mu ascending top to bottom; cols: k ascending left to right")?;
    writeln!(out, "{width} {height}")?;
    writeln!(out, "255")?;
    for row in 0..height {
        let mut line = String::with_capacity(width * 4);
        for col in 0..width {
            let v = values[row * width + col];
            let pixel = if max > 0.0 {
                ((v / max) * 255.0).round().clamp(0.0, 255.0) as u8
            } else {
                0
            };
            if col > 0 {
                line.push(' ');
            }
            line.push_str(&pixel.to_string());
        }
        out.write_all(line.as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}
