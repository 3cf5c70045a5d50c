//! The locus table: one row per sampled `J`.

use std::io::{Read, Write};

use crate::emit::format_number;
use crate::error::{Error, Result};
use crate::locus::{LocusParams, LocusPoint};

pub const LOCUS_HEADER: [&str; 8] = [
    "b",
    "x",
    "y",
    "q_angle_deg",
    "j_angle_deg",
    "residual_c1",
    "residual_c2",
    "residual_relation",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusRow {
    pub b: f64,
    pub x: f64,
    pub y: f64,
    pub q_angle_deg: f64,
    pub j_angle_deg: f64,
    pub residual_c1: f64,
    pub residual_c2: f64,
    pub residual_relation: f64,
}

impl LocusRow {
    pub fn new(params: &LocusParams, p: &LocusPoint) -> Self {
        LocusRow {
            b: p.b,
            x: p.q.x,
            y: p.q.y,
            q_angle_deg: p.q_polar_angle.degrees(),
            j_angle_deg: p.j_polar_angle(params).degrees(),
            residual_c1: p.residual_circle1,
            residual_c2: p.residual_circle2,
            residual_relation: p.residual_locus_relation,
        }
    }

    fn fields(&self) -> [f64; 8] {
        [
            self.b,
            self.x,
            self.y,
            self.q_angle_deg,
            self.j_angle_deg,
            self.residual_c1,
            self.residual_c2,
            self.residual_relation,
        ]
    }
}

pub fn write_locus_csv<W: Write>(
    out: W,
    params: &LocusParams,
    points: &[LocusPoint],
) -> Result<()> {
    let mut w = ::csv::WriterBuilder::new()
        .terminator(::csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(LOCUS_HEADER).map_err(csv_error)?;
    for p in points {
        let row = LocusRow::new(params, p);
        w.write_record(row.fields().map(format_number))
            .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn locus_csv_string(params: &LocusParams, points: &[LocusPoint]) -> String {
    let mut buf = Vec::new();
    write_locus_csv(&mut buf, params, points).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is ASCII")
}

/// Reads a locus table back. The header must match exactly, every field
/// must be a finite number, and `b` must be strictly ascending.
pub fn read_locus_csv<R: Read>(input: R) -> Result<Vec<LocusRow>> {
    let mut r = ::csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(input);
    let header = r.headers().map_err(csv_error)?;
    if header.iter().ne(LOCUS_HEADER.iter().copied()) {
        return Err(Error::Malformed(format!(
            "unexpected header: {:?}",
            header.iter().collect::<Vec<_>>()
        )));
    }

    let mut rows: Vec<LocusRow> = Vec::new();
    for (line, record) in r.records().enumerate() {
        let record = record.map_err(csv_error)?;
        let mut v = [0.0; 8];
        for (slot, field) in v.iter_mut().zip(record.iter()) {
            let x: f64 = field
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("row {}: bad number {field:?}", line + 1)))?;
            if !x.is_finite() {
                return Err(Error::Malformed(format!(
                    "row {}: non-finite value",
                    line + 1
                )));
            }
            *slot = x;
        }
        let row = LocusRow {
            b: v[0],
            x: v[1],
            y: v[2],
            q_angle_deg: v[3],
            j_angle_deg: v[4],
            residual_c1: v[5],
            residual_c2: v[6],
            residual_relation: v[7],
        };
        if let Some(prev) = rows.last() {
            if !(row.b > prev.b) {
                return Err(Error::Malformed(format!(
                    "row {}: b not ascending",
                    line + 1
                )));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn csv_error(e: ::csv::Error) -> Error {
    match e.into_kind() {
        ::csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Malformed(format!("{other:?}")),
    }
}
