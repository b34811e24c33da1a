//! Deterministic document emission.
//!
//! Every float — JSON and CSV alike — is rendered as `{:.16e}`:
//! 17 significant digits, the round-trip precision of an IEEE double,
//! with a `.` decimal mark regardless of locale. Documents contain no
//! timestamps and no map-ordered collections, so identical invocations
//! produce byte-identical output.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

/// JSON formatter that prints every `f64` in scientific notation with
/// 16 fractional digits. Non-finite values never reach this hook
/// (serde_json renders them as `null`).
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes a document as single-line JSON with the deterministic
/// float format, terminated by a newline.
pub fn to_json(value: &impl Serialize) -> io::Result<Vec<u8>> {
    let mut buf = Vec::with_capacity(4096);
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    value
        .serialize(&mut ser)
        .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
    buf.push(b'\n');
    Ok(buf)
}

/// Renders one CSV float cell (17 significant digits).
pub fn cell(v: f64) -> String {
    format!("{v:.16e}")
}

/// Builds a CSV document: header line, then one line per row, `\n`
/// terminated throughout.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> Vec<u8> {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out.into_bytes()
}

/// Writes the document to the `--out` path when given, otherwise to
/// standard output. With `--out`, nothing is written to stdout.
pub fn emit(bytes: &[u8], out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes),
        None => io::stdout().write_all(bytes),
    }
}
