//! JSON records for trisection and origami results.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Angle, Point2};
use crate::locus::{verify_trisection, LocusParams, TrisectionResult};
use crate::origami::{abe_verify, AbeConstruction};
use crate::report::Report;

/// What `trisect` prints. Angles appear in degrees for reading and radians
/// for exact reuse; decoding uses the radian fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrisectionRecord {
    pub three_theta_deg: f64,
    pub three_theta_rad: f64,
    pub theta_deg: f64,
    pub theta_rad: f64,
    pub fold_a: f64,
    pub tol: f64,
    pub b_star: f64,
    pub b_star_normalized: f64,
    pub unit_length: f64,
    pub n_point: Point2,
    pub iterations: usize,
    pub final_bracket_width: f64,
    pub angle_residual_rad: f64,
    pub sin_theta_normalized: f64,
    pub verification: Report,
}

impl TrisectionRecord {
    pub fn new(r: &TrisectionResult, params: &LocusParams, tol: f64) -> Self {
        TrisectionRecord {
            three_theta_deg: r.three_theta.degrees(),
            three_theta_rad: r.three_theta.radians(),
            theta_deg: r.theta.degrees(),
            theta_rad: r.theta.radians(),
            fold_a: params.a(),
            tol,
            b_star: r.b_star,
            b_star_normalized: r.b_star_normalized(),
            unit_length: r.unit_length,
            n_point: r.n_point,
            iterations: r.iterations,
            final_bracket_width: r.final_bracket_width,
            angle_residual_rad: r.angle_residual,
            sin_theta_normalized: r.sin_theta_normalized(params),
            verification: verify_trisection(r, params, tol),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }

    /// Parses and validates an emitted record.
    pub fn from_json(text: &str) -> Result<Self> {
        let record: TrisectionRecord =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        record.validate()?;
        Ok(record)
    }

    fn validate(&self) -> Result<()> {
        let finite = [
            ("three_theta_rad", self.three_theta_rad),
            ("theta_rad", self.theta_rad),
            ("b_star", self.b_star),
            ("unit_length", self.unit_length),
            ("n_point.x", self.n_point.x),
            ("n_point.y", self.n_point.y),
            ("tol", self.tol),
        ];
        if let Some((name, v)) = finite.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Malformed(format!("{name} is not finite: {v}")));
        }
        LocusParams::new(self.fold_a)?;
        if !(self.unit_length > 0.0) {
            return Err(Error::Malformed("unit_length must be positive".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Malformed("tol must be positive".into()));
        }
        Ok(())
    }

    /// Rebuilds the solver output this record was made from.
    pub fn to_result(&self) -> Result<(TrisectionResult, LocusParams)> {
        self.validate()?;
        let params = LocusParams::new(self.fold_a)?;
        let result = TrisectionResult {
            three_theta: Angle::from_radians(self.three_theta_rad),
            theta: Angle::from_radians(self.theta_rad),
            b_star: self.b_star,
            unit_length: self.unit_length,
            n_point: self.n_point,
            iterations: self.iterations,
            final_bracket_width: self.final_bracket_width,
            angle_residual: self.angle_residual_rad,
        };
        Ok((result, params))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrigamiRecord {
    pub three_theta_deg: f64,
    pub theta_deg: f64,
    pub alpha_deg: f64,
    pub beta_deg: f64,
    pub gamma_deg: f64,
    pub unit_length: f64,
    pub points: OrigamiPoints,
    pub verification: Report,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrigamiPoints {
    pub o: Point2,
    pub d: Point2,
    pub s: Point2,
    pub h: Point2,
    pub c: Point2,
    pub g: Point2,
    pub p: Point2,
}

impl OrigamiRecord {
    pub fn new(c: &AbeConstruction) -> Self {
        OrigamiRecord {
            three_theta_deg: c.three_theta.degrees(),
            theta_deg: c.theta.degrees(),
            alpha_deg: c.alpha.degrees(),
            beta_deg: c.beta.degrees(),
            gamma_deg: c.gamma.degrees(),
            unit_length: c.unit_length,
            points: OrigamiPoints {
                o: c.o,
                d: c.d,
                s: c.s,
                h: c.h,
                c: c.c,
                g: c.g,
                p: c.p,
            },
            verification: abe_verify(c),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }
}
