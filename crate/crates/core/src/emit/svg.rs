//! Construction diagram for the two-circle locus.
//!
//! Geometry is written in construction coordinates inside one group whose
//! transform scales to pixels and flips the y-axis; labels sit outside the
//! group in pixel coordinates so the text stays upright. Points are drawn as
//! small squares, so the only `<circle>` elements are the two construction
//! circles.

use std::fmt::Write as _;

use crate::emit::fixed;
use crate::error::{Error, Result};
use crate::geom::{Angle, Point2};
use crate::locus::{locus_point, sample_locus, trisect, LocusParams, LocusPoint, TrisectionResult};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width_px: u32,
    pub height_px: u32,
    pub margin_px: u32,
    pub stroke_width: f64,
    pub circles: bool,
    pub locus: bool,
    pub rays: bool,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width_px: 640,
            height_px: 640,
            margin_px: 32,
            stroke_width: 1.5,
            circles: true,
            locus: true,
            rays: true,
            labels: true,
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<()> {
        if self.width_px < 64 {
            return Err(Error::InvalidParameter {
                name: "width_px",
                value: self.width_px as f64,
            });
        }
        if self.height_px < 64 {
            return Err(Error::InvalidParameter {
                name: "height_px",
                value: self.height_px as f64,
            });
        }
        if 2 * self.margin_px >= self.width_px.min(self.height_px) {
            return Err(Error::InvalidParameter {
                name: "margin_px",
                value: self.margin_px as f64,
            });
        }
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            return Err(Error::InvalidParameter {
                name: "stroke_width",
                value: self.stroke_width,
            });
        }
        Ok(())
    }
}

/// What to draw: a locus arc, the circles for one position of `J`, and the
/// crossing `N` when a target angle was solved.
#[derive(Debug, Clone)]
pub struct Scene {
    pub params: LocusParams,
    pub locus: Vec<LocusPoint>,
    pub current: LocusPoint,
    pub solution: Option<TrisectionResult>,
}

impl Scene {
    /// With a target, `J` is placed at the solved `b*` and the locus runs a
    /// quarter past it unless `b_max` says otherwise. Without one, `J` sits
    /// at `b_max` (default `4a`).
    pub fn build(
        params: LocusParams,
        three_theta: Option<Angle>,
        b_min: Option<f64>,
        b_max: Option<f64>,
        samples: usize,
        tol: f64,
        max_iter: usize,
    ) -> Result<Scene> {
        let b_min = b_min.unwrap_or(params.b_start());
        let solution = three_theta
            .map(|t| trisect(t, &params, tol, max_iter))
            .transpose()?;
        let b_max = match (&solution, b_max) {
            (_, Some(b)) => b,
            (Some(r), None) => (1.25 * r.b_star).max(b_min + params.a()),
            (None, None) => (4.0 * params.a()).max(b_min + params.a()),
        };
        let locus = sample_locus(&params, b_min, b_max, samples)?;
        let current = match &solution {
            Some(r) => locus_point(&params, r.b_star)?,
            None => locus_point(&params, b_max)?,
        };
        Ok(Scene {
            params,
            locus,
            current,
            solution,
        })
    }
}

struct Frame {
    min: Point2,
    scale: f64,
    offset: Point2,
    height: f64,
}

impl Frame {
    fn fit(points: &[Point2], spec: &RenderSpec) -> Frame {
        let (mut lo, mut hi) = (points[0], points[0]);
        for p in points {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let (w, h) = (spec.width_px as f64, spec.height_px as f64);
        let m = spec.margin_px as f64;
        let (bw, bh) = ((hi.x - lo.x).max(1e-9), (hi.y - lo.y).max(1e-9));
        let scale = ((w - 2.0 * m) / bw).min((h - 2.0 * m) / bh);
        let offset = Point2::new(
            m + 0.5 * (w - 2.0 * m - bw * scale),
            m + 0.5 * (h - 2.0 * m - bh * scale),
        );
        Frame {
            min: lo,
            scale,
            offset,
            height: h,
        }
    }

    /// `(a, b, c, d, e, f)` of the SVG matrix taking world to pixels.
    fn matrix(&self) -> [f64; 6] {
        let s = self.scale;
        [
            s,
            0.0,
            0.0,
            -s,
            self.offset.x - s * self.min.x,
            self.height - self.offset.y + s * self.min.y,
        ]
    }

    fn to_px(&self, p: Point2) -> Point2 {
        let [a, _, _, d, e, f] = self.matrix();
        Point2::new(a * p.x + e, d * p.y + f)
    }
}

pub fn render_svg(scene: &Scene, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let a = scene.params.a();
    let j = scene.params.j_point(scene.current.b);
    let q = scene.current.q;
    let r1 = j.norm();
    let reach = 1.15 * r1;
    let o = Point2::ORIGIN;
    let k = Point2::new(j.x, 0.0);
    let c = Point2::new(0.0, a);
    let d = scene.params.d_point();

    let ob_end = scene
        .solution
        .as_ref()
        .map(|r| Point2::from_polar(reach, r.three_theta));
    let oj_end = j * (reach / r1);

    let mut extent = vec![
        Point2::new(-r1, -r1),
        Point2::new(r1, r1),
        Point2::new(j.x + 2.0 * a, j.y + 2.0 * a),
        Point2::new(j.x - 2.0 * a, j.y - 2.0 * a),
        Point2::new(reach, 0.0),
        oj_end,
    ];
    extent.extend(scene.locus.iter().map(|p| p.q));
    let frame = Frame::fit(&extent, spec);
    let (lo_x, hi_x) = extent
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), p| {
            (l.min(p.x), h.max(p.x))
        });
    let (lo_y, hi_y) = extent
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), p| {
            (l.min(p.y), h.max(p.y))
        });

    let mut out = String::new();
    let (w, h) = (spec.width_px, spec.height_px);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    let m = frame.matrix().map(fixed).join(" ");
    writeln!(
        out,
        r#"<g transform="matrix({m})" fill="none" stroke-width="{}" stroke-linecap="round">"#,
        fixed(spec.stroke_width)
    )
    .unwrap();

    let line = |out: &mut String, class: &str, color: &str, p: Point2, q: Point2| {
        writeln!(
            out,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" vector-effect="non-scaling-stroke"/>"#,
            fixed(p.x),
            fixed(p.y),
            fixed(q.x),
            fixed(q.y)
        )
        .unwrap();
    };

    line(
        &mut out,
        "axis",
        "#999999",
        Point2::new(lo_x, 0.0),
        Point2::new(hi_x, 0.0),
    );
    line(
        &mut out,
        "axis",
        "#999999",
        Point2::new(0.0, lo_y),
        Point2::new(0.0, hi_y),
    );
    line(
        &mut out,
        "fold",
        "#6a9fb5",
        Point2::new(lo_x, a),
        Point2::new(hi_x, a),
    );
    line(
        &mut out,
        "fold",
        "#6a9fb5",
        Point2::new(lo_x, 2.0 * a),
        Point2::new(hi_x, 2.0 * a),
    );

    if spec.circles {
        for (class, center, r) in [("circle1", o, r1), ("circle2", j, 2.0 * a)] {
            writeln!(
                out,
                r##"<circle class="{class}" cx="{}" cy="{}" r="{}" stroke="#444444" vector-effect="non-scaling-stroke"/>"##,
                fixed(center.x),
                fixed(center.y),
                fixed(r)
            )
            .unwrap();
        }
    }

    if spec.locus {
        let pts = scene
            .locus
            .iter()
            .map(|p| format!("{},{}", fixed(p.q.x), fixed(p.q.y)))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(
            out,
            r##"<polyline class="locus" points="{pts}" stroke="#c0392b" vector-effect="non-scaling-stroke"/>"##
        )
        .unwrap();
    }

    if spec.rays {
        line(&mut out, "ray-oa", "#000000", o, Point2::new(reach, 0.0));
        if let Some(end) = ob_end {
            line(&mut out, "ray-ob", "#000000", o, end);
        }
        line(&mut out, "ray-oj", "#2c7a2c", o, oj_end);
    }
    writeln!(out, "</g>").unwrap();

    let mut marks: Vec<(&str, Point2)> = vec![("O", o), ("C", c), ("D", d), ("J", j), ("K", k)];
    match &scene.solution {
        Some(r) => marks.push(("N", r.n_point)),
        None => marks.push(("Q", q)),
    }
    let half = 2.5;
    writeln!(out, r#"<g class="points" fill="black">"#).unwrap();
    for (_, p) in &marks {
        let px = frame.to_px(*p);
        writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
            fixed(px.x - half),
            fixed(px.y - half),
            fixed(2.0 * half),
            fixed(2.0 * half)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    if spec.labels {
        writeln!(
            out,
            r#"<g class="labels" font-family="sans-serif" font-size="14" fill="black">"#
        )
        .unwrap();
        for (name, p) in &marks {
            let px = frame.to_px(*p);
            writeln!(
                out,
                r#"<text x="{}" y="{}">{name}</text>"#,
                fixed(px.x + 5.0),
                fixed(px.y - 5.0)
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::locus::{DEFAULT_MAX_ITER, DEFAULT_TOL};

    fn scene(deg: Option<f64>) -> Scene {
        Scene::build(
            LocusParams::new(1.0).unwrap(),
            deg.map(Angle::from_degrees),
            None,
            None,
            64,
            DEFAULT_TOL,
            DEFAULT_MAX_ITER,
        )
        .unwrap()
    }

    #[test]
    fn structure_with_solution() {
        let svg = render_svg(&scene(Some(75.0)), &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains(">N</text>"));
        assert!(!svg.contains(">Q</text>"));
        assert!(svg.contains("ray-ob"));
    }

    #[test]
    fn structure_without_solution() {
        let svg = render_svg(&scene(None), &RenderSpec::default()).unwrap();
        assert!(!svg.contains(">N</text>"));
        assert!(svg.contains(">Q</text>"));
        assert!(!svg.contains("ray-ob"));
    }

    #[test]
    fn element_order() {
        let svg = render_svg(&scene(Some(60.0)), &RenderSpec::default()).unwrap();
        let order = [
            "class=\"axis\"",
            "class=\"fold\"",
            "circle1",
            "circle2",
            "locus",
            "ray-oa",
            "ray-ob",
            "ray-oj",
            ">O<",
            ">C<",
            ">D<",
            ">J<",
            ">K<",
            ">N<",
        ];
        let positions: Vec<usize> = order.iter().map(|s| svg.find(s).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    }

    #[test]
    fn layer_toggles() {
        let spec = RenderSpec {
            circles: false,
            locus: false,
            labels: false,
            ..RenderSpec::default()
        };
        let svg = render_svg(&scene(Some(60.0)), &spec).unwrap();
        assert_eq!(svg.matches("<circle").count(), 0);
        assert_eq!(svg.matches("<polyline").count(), 0);
        assert_eq!(svg.matches("<text").count(), 0);
    }

    #[test]
    fn deterministic() {
        let a = render_svg(&scene(Some(42.0)), &RenderSpec::default()).unwrap();
        let b = render_svg(&scene(Some(42.0)), &RenderSpec::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn points_land_inside_canvas() {
        let s = scene(Some(20.0));
        let spec = RenderSpec::default();
        let svg = render_svg(&s, &spec).unwrap();
        for cap in svg.split("<rect x=\"").skip(1) {
            let x: f64 = cap.split('"').next().unwrap().parse().unwrap();
            assert!(x >= 0.0 && x <= spec.width_px as f64);
        }
    }

    #[test]
    fn small_canvas_rejected() {
        let spec = RenderSpec {
            width_px: 32,
            ..RenderSpec::default()
        };
        assert!(render_svg(&scene(None), &spec).is_err());
    }
}
