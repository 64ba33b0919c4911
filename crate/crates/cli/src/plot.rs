//! Figure construction and SVG/CSV rendering.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use parabolic::oracle::inner_disc_radius;
use parabolic::radius::{corollary_radii, COROLLARY_TARGETS};
use parabolic::{inscribed_disc, Error, Result, Target};

pub const MIN_SAMPLES: usize = 64;

/// Left edge of the region window when no curve reaches further.
const DEFAULT_X_MIN: f64 = -4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    Region,
    MapImage,
    Discs,
    CorollaryFigure,
}

impl PlotKind {
    pub fn name(&self) -> &'static str {
        match self {
            PlotKind::Region => "region",
            PlotKind::MapImage => "map-image",
            PlotKind::Discs => "discs",
            PlotKind::CorollaryFigure => "corollary-figure",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub kind: PlotKind,
    /// Circle radius for image curves; the corollary figure defaults to its radius.
    pub r: Option<f64>,
    pub target: Target,
    /// Inscribed-disc centers.
    pub discs: Vec<f64>,
    /// Corollary index `1..=9`.
    pub corollary: u8,
    pub samples: usize,
}

impl PlotSpec {
    pub fn new(kind: PlotKind) -> Self {
        Self {
            kind,
            r: None,
            target: Target::Lp,
            discs: Vec::new(),
            corollary: 1,
            samples: 1024,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < MIN_SAMPLES {
            return Err(Error::DomainError(format!("sample count {} below {MIN_SAMPLES}", self.samples)));
        }
        if let Some(r) = self.r {
            if !(r > 0.0 && r < 1.0) {
                return Err(Error::ParamRange {
                    name: "r",
                    value: r,
                    range: "(0, 1)",
                });
            }
        }
        if self.kind == PlotKind::CorollaryFigure && !(1..=9).contains(&self.corollary) {
            return Err(Error::UnknownId(format!("r{}", self.corollary)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerStyle {
    Open,
    Closed,
    Points,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    pub name: String,
    pub style: LayerStyle,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub title: String,
    pub layers: Vec<Layer>,
}

/// `n` angles `−π + (k + ½)·2π/n`; none of them is `0`, so `z = r` is never sampled.
pub fn plot_angles(n: usize) -> Vec<f64> {
    let h = 2.0 * PI / n as f64;
    (0..n).map(|k| -PI + h * (k as f64 + 0.5)).collect()
}

/// `y² = 3 − 2x` for `x ≥ x_min`, sampled uniformly in `y` with the vertex included.
pub fn parabola_layer(x_min: f64, samples: usize) -> Layer {
    let y_max = (3.0 - 2.0 * x_min).max(0.0).sqrt();
    let n = samples + samples % 2;
    let points = (0..=n)
        .map(|k| {
            let y = if 2 * k == n { 0.0 } else { -y_max + 2.0 * y_max * k as f64 / n as f64 };
            ((3.0 - y * y) / 2.0, y)
        })
        .collect();
    Layer {
        name: "parabola".into(),
        style: LayerStyle::Open,
        points,
    }
}

/// The lines `y = ±(x − 2)` from `x_min` to their meeting point `(2, 0)`.
pub fn tangent_layers(x_min: f64) -> Vec<Layer> {
    [1.0, -1.0]
        .iter()
        .map(|&s| Layer {
            name: if s > 0.0 { "tangent-lower".into() } else { "tangent-upper".into() },
            style: LayerStyle::Open,
            points: vec![(x_min, s * (x_min - 2.0)), (2.0, 0.0)],
        })
        .collect()
}

pub fn circle_layer(name: String, center: Complex64, radius: f64, samples: usize) -> Layer {
    let points = plot_angles(samples)
        .into_iter()
        .map(|t| {
            let w = center + Complex64::from_polar(radius, t);
            (w.re, w.im)
        })
        .collect();
    Layer {
        name,
        style: LayerStyle::Closed,
        points,
    }
}

/// `φ(r e^{iθ})` over [`plot_angles`].
pub fn image_layer(name: String, target: &Target, r: f64, samples: usize) -> Result<Layer> {
    let points = plot_angles(samples)
        .into_iter()
        .map(|t| {
            target
                .eval(Complex64::from_polar(r, t))
                .map(|w| (w.re, w.im))
                .map_err(|_| Error::SingularOnCircle { r, angle: t })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Layer {
        name,
        style: LayerStyle::Closed,
        points,
    })
}

fn region_frame(x_min: f64, samples: usize) -> Vec<Layer> {
    let mut layers = vec![parabola_layer(x_min, samples)];
    layers.extend(tangent_layers(x_min));
    layers.push(Layer {
        name: "vertex".into(),
        style: LayerStyle::Points,
        points: vec![(1.5, 0.0)],
    });
    layers
}

fn disc_layers(centers: &[f64], samples: usize) -> Result<Vec<Layer>> {
    centers
        .iter()
        .map(|&a| {
            let d = inscribed_disc(a)?;
            Ok(circle_layer(format!("disc[a={a}]"), Complex64::new(a, 0.0), d.radius, samples))
        })
        .collect()
}

fn x_min_of(layers: &[Layer]) -> f64 {
    layers
        .iter()
        .flat_map(|l| l.points.iter().map(|p| p.0))
        .fold(DEFAULT_X_MIN, f64::min)
}

pub fn build_figure(spec: &PlotSpec) -> Result<Figure> {
    spec.validate()?;
    let n = spec.samples;
    let (title, curves) = match spec.kind {
        PlotKind::Region => ("region".to_string(), disc_layers(&spec.discs, n)?),
        PlotKind::Discs => {
            let centers = if spec.discs.is_empty() {
                vec![-1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.4]
            } else {
                spec.discs.clone()
            };
            ("discs".to_string(), disc_layers(&centers, n)?)
        }
        PlotKind::MapImage => {
            let r = spec.r.unwrap_or(0.9);
            let mut layers = vec![image_layer(format!("{}[r={r}]", spec.target), &spec.target, r, n)?];
            layers.extend(disc_layers(&spec.discs, n)?);
            (format!("map-image {} r={r}", spec.target), layers)
        }
        PlotKind::CorollaryFigure => {
            let k = spec.corollary;
            let (target, _) = COROLLARY_TARGETS[usize::from(k - 1)];
            let r = match spec.r {
                Some(r) => r,
                None => corollary_radii(k)?.closed_form,
            };
            let inner = inner_disc_radius(|z| target.eval(z))?;
            let layers = vec![
                image_layer(format!("{target}-boundary"), &target, 1.0, n)?,
                circle_layer(format!("inner-disc[{inner}]"), Complex64::new(1.0, 0.0), inner, n),
                image_layer(format!("lp[r={r}]"), &Target::Lp, r, n)?,
            ];
            return Ok(Figure {
                title: format!("r{k} {target} r={r}"),
                layers,
            });
        }
    };
    let mut layers = region_frame(x_min_of(&curves), n);
    layers.extend(curves);
    Ok(Figure { title, layers })
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

impl Figure {
    /// Rows `layer,index,x,y` with shortest round-trip floats.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::DomainError(format!("csv: {e}"));
        w.write_record(["layer", "index", "x", "y"]).map_err(io)?;
        for layer in &self.layers {
            for (i, (x, y)) in layer.points.iter().enumerate() {
                w.write_record([layer.name.clone(), i.to_string(), x.to_string(), y.to_string()])
                    .map_err(io)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::DomainError(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::DomainError(e.to_string()))
    }

    /// Plain SVG with one `<path>` per curve layer and `<circle>` markers.
    /// The `y` axis is flipped so that `Im w` points up.
    pub fn to_svg(&self) -> String {
        let pts = self.layers.iter().flat_map(|l| l.points.iter());
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(-y);
            y1 = y1.max(-y);
        }
        let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-9);
        let (vx, vy, vw, vh) = (x0 - pad, y0 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}" width="800" height="{:.0}">"#,
            800.0 * vh / vw
        );
        let _ = writeln!(s, "<title>{}</title>", xml_escape(&self.title));
        for (i, layer) in self.layers.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let id = xml_escape(&layer.name);
            match layer.style {
                LayerStyle::Points => {
                    for (x, y) in &layer.points {
                        let _ = writeln!(
                            s,
                            r#"<circle class="{id}" cx="{x:.6}" cy="{:.6}" r="{:.6}" fill="{color}"/>"#,
                            -y,
                            0.006 * vw
                        );
                    }
                }
                LayerStyle::Open | LayerStyle::Closed => {
                    let mut d = String::new();
                    for (k, (x, y)) in layer.points.iter().enumerate() {
                        let _ = write!(d, "{}{x:.6} {:.6} ", if k == 0 { "M" } else { "L" }, -y);
                    }
                    if layer.style == LayerStyle::Closed {
                        d.push('Z');
                    }
                    let _ = writeln!(
                        s,
                        r#"<path class="{id}" d="{}" fill="none" stroke="{color}" stroke-width="1.5" vector-effect="non-scaling-stroke"/>"#,
                        d.trim_end()
                    );
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }

    pub fn layer(&self, prefix: &str) -> Option<&Layer> {
        self.layers.iter().find(|l| l.name.starts_with(prefix))
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    (p.0 - a.0 - t * dx).hypot(p.1 - a.1 - t * dy)
}

/// Distance from `p` to an open polyline.
pub fn polyline_distance(p: (f64, f64), line: &[(f64, f64)]) -> f64 {
    match line {
        [] => f64::INFINITY,
        [q] => (p.0 - q.0).hypot(p.1 - q.1),
        _ => line
            .windows(2)
            .map(|w| segment_distance(p, w[0], w[1]))
            .fold(f64::INFINITY, f64::min),
    }
}

/// Symmetric Hausdorff distance between two polylines, both clipped to `x ≥ x_min`.
pub fn windowed_hausdorff(a: &[(f64, f64)], b: &[(f64, f64)], x_min: f64) -> f64 {
    let clip = |l: &[(f64, f64)]| -> Vec<(f64, f64)> { l.iter().copied().filter(|p| p.0 >= x_min).collect() };
    let (a, b) = (clip(a), clip(b));
    let directed = |from: &[(f64, f64)], to: &[(f64, f64)]| from.iter().map(|&p| polyline_distance(p, to)).fold(0.0, f64::max);
    directed(&a, &b).max(directed(&b, &a))
}
