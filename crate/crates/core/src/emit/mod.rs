//! Deterministic emitters and the matching decoders.
//!
//! Floats in JSON and CSV use the shortest representation that round-trips
//! (never more than 17 significant digits). SVG coordinates are fixed to six
//! decimals.

pub mod csv;
pub mod json;
pub mod svg;

/// Shortest round-trip form of a finite float; `NaN`/`inf` spelled out.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mut buf = ryu::Buffer::new();
    let s = buf.format(x);
    s.strip_suffix(".0").unwrap_or(s).to_string()
}

/// Fixed six-decimal form, never `-0.000000`.
pub(crate) fn fixed(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.starts_with('-') && s[1..].bytes().all(|c| c == b'0' || c == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}
