//! Text file formats for frames, Seidel matrices, and search
//! configuration.
//!
//! Frame files: a header line `frame <real|complex> <m> <N>` followed by
//! N column records, one per line, with m whitespace-separated entries
//! each. Complex entries are written `a+bi` / `a-bi`. Lines may carry
//! `#` comments. Entries are written with 17 significant digits, so
//! files round-trip f64 values exactly.
//!
//! Seidel files: a header `seidel <N>` followed by N rows of N entries
//! from {0, 1, -1}; the matrix shape (symmetric, zero diagonal) is
//! validated on load.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;

use crate::config::OptConfig;
use crate::constructions::SeidelMatrix;
use crate::error::Error;
use crate::frames::FrameMatrix;
use crate::matrix::{Field, Matrix};

fn format_scalar(z: Complex64, field: Field) -> String {
    match field {
        Field::Real => format!("{:.16e}", z.re),
        Field::Complex => {
            // Sign comes from the sign bit, not `< 0.0`, so that a
            // negative-zero imaginary part prints as `-0...i` rather
            // than the unparsable `+-0...i`.
            if z.im.is_sign_negative() {
                format!("{:.16e}-{:.16e}i", z.re, -z.im)
            } else {
                format!("{:.16e}+{:.16e}i", z.re, z.im)
            }
        }
    }
}

/// Splits `a+bi` / `a-bi` at the sign that separates the parts: the last
/// `+`/`-` that is neither the leading sign nor part of an exponent.
fn parse_complex(token: &str, line_no: usize) -> Result<Complex64, Error> {
    let fail = || Error::Format(format!("line {line_no}: malformed entry '{token}'"));
    if let Some(body) = token.strip_suffix(['i', 'I']) {
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let re: f64 = re_part.parse().map_err(|_| fail())?;
        let im: f64 = match im_part {
            "+" => 1.0,
            "-" => -1.0,
            other => other.parse().map_err(|_| fail())?,
        };
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = token.parse().map_err(|_| fail())?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// Strips the `#` comment and surrounding whitespace; None for blanks.
fn effective(line: &str) -> Option<&str> {
    let body = line.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        None
    } else {
        Some(body)
    }
}

/// Renders a frame in the text format, one column per line.
pub fn format_frame(f: &FrameMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "frame {} {} {}", f.field(), f.dim(), f.len());
    for j in 0..f.len() {
        let entries: Vec<String> =
            (0..f.dim()).map(|i| format_scalar(f.matrix().get(i, j), f.field())).collect();
        let _ = writeln!(out, "{}", entries.join(" "));
    }
    out
}

/// Parses the frame text format. Errors carry 1-based line numbers.
pub fn parse_frame(text: &str) -> Result<FrameMatrix, Error> {
    let mut lines = text.lines().enumerate().filter_map(|(k, l)| Some((k + 1, effective(l)?)));
    let (header_no, header) =
        lines.next().ok_or_else(|| Error::Format("empty frame file".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "frame" {
        return Err(Error::Format(format!(
            "line {header_no}: expected 'frame <real|complex> <m> <N>', got '{header}'"
        )));
    }
    let field: Field = parts[1]
        .parse()
        .map_err(|_| Error::Format(format!("line {header_no}: unknown field '{}'", parts[1])))?;
    let m: usize = parts[2]
        .parse()
        .map_err(|_| Error::Format(format!("line {header_no}: bad dimension '{}'", parts[2])))?;
    let n: usize = parts[3]
        .parse()
        .map_err(|_| Error::Format(format!("line {header_no}: bad column count '{}'", parts[3])))?;

    let mut mat = Matrix::zeros(field, m, n);
    let mut col = 0usize;
    for (line_no, body) in lines {
        if col >= n {
            return Err(Error::Format(format!(
                "line {line_no}: more than {n} column records"
            )));
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != m {
            return Err(Error::Format(format!(
                "line {line_no}: {} entries, expected {m}",
                tokens.len()
            )));
        }
        for (i, token) in tokens.iter().enumerate() {
            let z = parse_complex(token, line_no)?;
            if field == Field::Real && z.im != 0.0 {
                return Err(Error::Format(format!(
                    "line {line_no}: complex entry '{token}' in a real frame"
                )));
            }
            mat.set(i, col, z);
        }
        col += 1;
    }
    if col != n {
        return Err(Error::Format(format!("{col} column records, header says {n}")));
    }
    FrameMatrix::new(mat)
}

pub fn write_frame_file<P: AsRef<Path>>(path: P, f: &FrameMatrix) -> Result<(), Error> {
    std::fs::write(path, format_frame(f))?;
    Ok(())
}

pub fn read_frame_file<P: AsRef<Path>>(path: P) -> Result<FrameMatrix, Error> {
    parse_frame(&std::fs::read_to_string(path)?)
}

/// Renders a Seidel matrix in the text format, one row per line.
pub fn format_seidel(s: &SeidelMatrix) -> String {
    let n = s.n();
    let mut out = String::new();
    let _ = writeln!(out, "seidel {n}");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| s.entry(i, j).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses the Seidel text format and validates the matrix shape.
pub fn parse_seidel(text: &str) -> Result<SeidelMatrix, Error> {
    let mut lines = text.lines().enumerate().filter_map(|(k, l)| Some((k + 1, effective(l)?)));
    let (header_no, header) =
        lines.next().ok_or_else(|| Error::Format("empty Seidel file".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 || parts[0] != "seidel" {
        return Err(Error::Format(format!(
            "line {header_no}: expected 'seidel <N>', got '{header}'"
        )));
    }
    let n: usize = parts[1]
        .parse()
        .map_err(|_| Error::Format(format!("line {header_no}: bad size '{}'", parts[1])))?;

    let mut mat = Matrix::zeros(Field::Real, n, n);
    let mut row = 0usize;
    for (line_no, body) in lines {
        if row >= n {
            return Err(Error::Format(format!("line {line_no}: more than {n} rows")));
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != n {
            return Err(Error::Format(format!(
                "line {line_no}: {} entries, expected {n}",
                tokens.len()
            )));
        }
        for (j, token) in tokens.iter().enumerate() {
            let v: i8 = token.parse().map_err(|_| {
                Error::Format(format!("line {line_no}: malformed entry '{token}'"))
            })?;
            if !matches!(v, -1 | 0 | 1) {
                return Err(Error::Format(format!(
                    "line {line_no}: entry {v} outside {{0, 1, -1}}"
                )));
            }
            mat.set(row, j, Complex64::new(v as f64, 0.0));
        }
        row += 1;
    }
    if row != n {
        return Err(Error::Format(format!("{row} rows, header says {n}")));
    }
    SeidelMatrix::from_matrix(mat)
}

pub fn write_seidel_file<P: AsRef<Path>>(path: P, s: &SeidelMatrix) -> Result<(), Error> {
    std::fs::write(path, format_seidel(s))?;
    Ok(())
}

pub fn read_seidel_file<P: AsRef<Path>>(path: P) -> Result<SeidelMatrix, Error> {
    parse_seidel(&std::fs::read_to_string(path)?)
}

/// Reads a flat `key = value` search configuration file.
pub fn read_config_file<P: AsRef<Path>>(path: P) -> Result<OptConfig, Error> {
    OptConfig::parse_str(&std::fs::read_to_string(path)?)
}
