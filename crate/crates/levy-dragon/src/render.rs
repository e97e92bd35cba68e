//! SVG and CSV emitters for polylines.
//!
//! SVG output is screen-oriented: the y axis is flipped so the curve
//! appears the way the mathematics is usually drawn. CSV is the raw
//! mathematical data, unflipped, with each vertex keyed by its curve
//! parameter j/2^depth.

use num_complex::Complex64;
use std::fmt::Write as _;

use crate::ifs::Polyline;
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColorMode {
    Solid,
    /// Color segment j by hue proportional to its parameter j/2^depth.
    ParameterGradient,
}

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub margin: f64,
    pub color_mode: ColorMode,
    pub stroke_width: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 800,
            height: 600,
            margin: 40.0,
            color_mode: ColorMode::Solid,
            stroke_width: 1.5,
        }
    }
}

/// Aspect-preserving affine transform from curve coordinates to pixels.
/// One scale factor serves both axes; the y axis is negated.
#[derive(Clone, Copy, Debug)]
pub struct Viewport {
    pub scale: f64,
    pub tx: f64,
    pub ty: f64,
}

impl Viewport {
    /// Fits a bounding box into the spec's viewport, centered, leaving
    /// the margin clear. Degenerate extents (a single point, or an
    /// axis-aligned segment) fall back to a unit scale on the flat axis.
    pub fn fit(vertices: &[Complex64], spec: &RenderSpec) -> Result<Viewport, Error> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices);
        }
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in vertices {
            min_x = min_x.min(v.re);
            max_x = max_x.max(v.re);
            min_y = min_y.min(v.im);
            max_y = max_y.max(v.im);
        }
        let dx = max_x - min_x;
        let dy = max_y - min_y;
        let usable_w = spec.width as f64 - 2.0 * spec.margin;
        let usable_h = spec.height as f64 - 2.0 * spec.margin;
        let sx = if dx > 0.0 { usable_w / dx } else { f64::INFINITY };
        let sy = if dy > 0.0 { usable_h / dy } else { f64::INFINITY };
        let scale = match sx.min(sy) {
            s if s.is_finite() => s,
            _ => 1.0,
        };
        let cx = (min_x + max_x) / 2.0;
        let cy = (min_y + max_y) / 2.0;
        Ok(Viewport {
            scale,
            tx: spec.width as f64 / 2.0 - scale * cx,
            ty: spec.height as f64 / 2.0 + scale * cy,
        })
    }

    pub fn to_pixel(&self, z: Complex64) -> (f64, f64) {
        (self.tx + self.scale * z.re, self.ty - self.scale * z.im)
    }

    pub fn from_pixel(&self, px: f64, py: f64) -> Complex64 {
        Complex64::new((px - self.tx) / self.scale, (self.ty - py) / self.scale)
    }
}

fn hsl_to_hex(h: f64, s: f64, l: f64) -> String {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = (h.rem_euclid(360.0)) / 60.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    let to_byte = |v: f64| ((v + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    format!("#{:02x}{:02x}{:02x}", to_byte(r), to_byte(g), to_byte(b))
}

/// Renders the polyline as an SVG 1.1 document. Solid mode draws one
/// `<polyline>`; gradient mode draws one `<line>` per segment, hue
/// advancing with the curve parameter.
pub fn to_svg(p: &Polyline, spec: &RenderSpec) -> Result<String, Error> {
    let view = Viewport::fit(&p.vertices, spec)?;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = spec.width,
        h = spec.height
    );
    let _ = writeln!(out, "  <title>{} (depth {})</title>", p.tag, p.depth);
    match spec.color_mode {
        ColorMode::Solid => {
            let mut points = String::new();
            for (j, v) in p.vertices.iter().enumerate() {
                if j > 0 {
                    points.push(' ');
                }
                let (x, y) = view.to_pixel(*v);
                let _ = write!(points, "{x:.4},{y:.4}");
            }
            let _ = writeln!(
                out,
                "  <polyline fill=\"none\" stroke=\"#205080\" stroke-width=\"{}\" \
                 points=\"{points}\"/>",
                spec.stroke_width
            );
        }
        ColorMode::ParameterGradient => {
            let segments = p.vertices.len() - 1;
            let _ = writeln!(
                out,
                "  <g fill=\"none\" stroke-width=\"{}\" stroke-linecap=\"round\">",
                spec.stroke_width
            );
            for j in 0..segments {
                let (x1, y1) = view.to_pixel(p.vertices[j]);
                let (x2, y2) = view.to_pixel(p.vertices[j + 1]);
                let hue = 330.0 * j as f64 / segments as f64;
                let _ = writeln!(
                    out,
                    "    <line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" \
                     stroke=\"{}\"/>",
                    hsl_to_hex(hue, 0.85, 0.5)
                );
            }
            out.push_str("  </g>\n");
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Renders the polyline as CSV with header `x,re,im`: one row per vertex,
/// keyed by its parameter j/2^depth. Numbers use the shortest decimal
/// form that round-trips through f64, so downstream parsers recover the
/// vertices bit for bit.
pub fn to_csv(p: &Polyline) -> String {
    let mut out = String::from("x,re,im\n");
    let denom = (1u64 << p.depth) as f64;
    for (j, v) in p.vertices.iter().enumerate() {
        let _ = writeln!(out, "{},{},{}", j as f64 / denom, v.re, v.im);
    }
    out
}

pub fn write_csv(path: &std::path::Path, p: &Polyline) -> std::io::Result<()> {
    std::fs::write(path, to_csv(p))
}
