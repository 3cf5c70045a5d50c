//! Angle trisection by the locus of two intersecting circles.
//!
//! [`locus`] holds the solver: `J` slides along a fold line, the circle
//! about `O` through `J` meets the circle about `J` of radius twice the fold
//! width at `Q`, and `Q`'s polar angle is always three times `J`'s.
//! Bisecting on `J` until `Q` lands on the target ray trisects the angle.
//! [`origami`] rebuilds Abe's paper-folding figure and [`oracles`] checks
//! both against closed forms. [`emit`] and [`cli`] write JSON, CSV and SVG.

// Range checks are written as `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod emit;
pub mod error;
pub mod geom;
pub mod locus;
pub mod oracles;
pub mod origami;
pub mod report;

pub use error::{Error, Result};
pub use geom::{Angle, Circle, Point2, Ray};
pub use locus::{LocusParams, LocusPoint, TrisectionResult};
pub use oracles::{ChordDiagram, CrossReport};
pub use origami::AbeConstruction;
pub use report::{Check, Report};
