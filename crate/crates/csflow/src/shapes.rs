//! Generators for the initial curves under study, plus discrete symmetry
//! verification and Fourier-mode projections of the sampled components.

use crate::geometry::{resample_uniform, ClosedPolyline, GeometryError};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ShapeError {
    #[error("unknown shape kind `{0}`")]
    UnknownKind(String),
    #[error("unknown parameter `{0}` for shape `{1}`")]
    UnknownParameter(String, ShapeKind),
    #[error("invalid parameter {name}={value} for shape {kind}: {why}")]
    InvalidParameter { kind: ShapeKind, name: String, value: f64, why: &'static str },
    #[error("sample count must be even and at least 8, got {0}")]
    BadSampleCount(usize),
    #[error("symmetry check needs a sample count divisible by {needed}, got {got}")]
    SamplesNotDivisible { needed: usize, got: usize },
    #[error("symmetry check requires a planar curve, got dimension {0}")]
    NotPlanar(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// The curve families the experiments start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    Circle,
    NfoldCircle,
    Ellipse,
    Square,
    DcsPolygon,
    DcsSmooth,
    InfinityXy,
    InfinityY,
    InfinityCentral,
    InfinityPerturbed,
    TwoCircleInfinity,
    Convoluted,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 12] = [
        ShapeKind::Circle,
        ShapeKind::NfoldCircle,
        ShapeKind::Ellipse,
        ShapeKind::Square,
        ShapeKind::DcsPolygon,
        ShapeKind::DcsSmooth,
        ShapeKind::InfinityXy,
        ShapeKind::InfinityY,
        ShapeKind::InfinityCentral,
        ShapeKind::InfinityPerturbed,
        ShapeKind::TwoCircleInfinity,
        ShapeKind::Convoluted,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ShapeKind::Circle => "circle",
            ShapeKind::NfoldCircle => "nfold_circle",
            ShapeKind::Ellipse => "ellipse",
            ShapeKind::Square => "square",
            ShapeKind::DcsPolygon => "dcs_polygon",
            ShapeKind::DcsSmooth => "dcs_smooth",
            ShapeKind::InfinityXy => "infinity_xy",
            ShapeKind::InfinityY => "infinity_y",
            ShapeKind::InfinityCentral => "infinity_central",
            ShapeKind::InfinityPerturbed => "infinity_perturbed",
            ShapeKind::TwoCircleInfinity => "two_circle_infinity",
            ShapeKind::Convoluted => "convoluted",
        }
    }

    fn allowed_params(&self) -> &'static [&'static str] {
        match self {
            ShapeKind::Circle => &["radius"],
            ShapeKind::NfoldCircle => &["n_fold", "radius"],
            ShapeKind::Ellipse => &["a", "b"],
            ShapeKind::Square => &["side"],
            ShapeKind::DcsPolygon => &["p0x", "p0y", "p1x", "p1y"],
            ShapeKind::DcsSmooth => &["l0"],
            ShapeKind::InfinityXy => &[],
            ShapeKind::InfinityY => &["skew"],
            ShapeKind::InfinityCentral => &["skew"],
            ShapeKind::InfinityPerturbed => &["amplitude"],
            ShapeKind::TwoCircleInfinity => &["r_small", "r_big"],
            ShapeKind::Convoluted => &[],
        }
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShapeKind {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        ShapeKind::ALL
            .iter()
            .find(|k| k.name() == s)
            .copied()
            .ok_or_else(|| ShapeError::UnknownKind(s.to_string()))
    }
}

/// A shape kind with its parameters and sample count.
#[derive(Debug, Clone)]
pub struct ShapeSpec {
    pub kind: ShapeKind,
    pub params: BTreeMap<String, f64>,
    pub samples: usize,
}

impl ShapeSpec {
    pub fn new(kind: ShapeKind, samples: usize) -> Self {
        Self { kind, params: BTreeMap::new(), samples }
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    fn get(&self, name: &str, default: f64) -> f64 {
        self.params.get(name).copied().unwrap_or(default)
    }

    fn validate(&self) -> Result<(), ShapeError> {
        if self.samples < 8 || self.samples % 2 != 0 {
            return Err(ShapeError::BadSampleCount(self.samples));
        }
        for key in self.params.keys() {
            if !self.kind.allowed_params().contains(&key.as_str()) {
                return Err(ShapeError::UnknownParameter(key.clone(), self.kind));
            }
        }
        Ok(())
    }
}

fn positive(kind: ShapeKind, name: &str, value: f64) -> Result<f64, ShapeError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(ShapeError::InvalidParameter { kind, name: name.to_string(), value, why: "must be positive" })
    }
}

/// Evaluates the spec's parametrization at `samples` uniform parameter
/// values; polygon kinds (square, dcs_polygon) place points at uniform
/// arclength along the polygon instead.
///
/// The infinity shapes are anchored at the rightmost point of the right
/// loop, where the component symmetries take their simplest discrete form.
pub fn generate(spec: &ShapeSpec) -> Result<ClosedPolyline, ShapeError> {
    spec.validate()?;
    let n = spec.samples;
    let kind = spec.kind;
    let from_map = |f: &dyn Fn(f64) -> (f64, f64)| -> Result<ClosedPolyline, ShapeError> {
        let mut coords = Vec::with_capacity(2 * n);
        for j in 0..n {
            let u = j as f64 / n as f64;
            let (x, y) = f(u);
            coords.push(x);
            coords.push(y);
        }
        Ok(ClosedPolyline::new(coords, 2)?)
    };
    match kind {
        ShapeKind::Circle => {
            let r = positive(kind, "radius", spec.get("radius", 1.0))?;
            from_map(&|u| ((2.0 * PI * u).cos() * r, (2.0 * PI * u).sin() * r))
        }
        ShapeKind::NfoldCircle => {
            let r = positive(kind, "radius", spec.get("radius", 1.0))?;
            let nf = spec.get("n_fold", 2.0);
            if nf < 1.0 || nf.fract() != 0.0 {
                return Err(ShapeError::InvalidParameter {
                    kind,
                    name: "n_fold".into(),
                    value: nf,
                    why: "must be a positive integer",
                });
            }
            from_map(&|u| {
                let a = 2.0 * PI * nf * u;
                (r * a.cos(), r * a.sin())
            })
        }
        ShapeKind::Ellipse => {
            let a = positive(kind, "a", spec.get("a", 1.0))?;
            let b = positive(kind, "b", spec.get("b", 0.5))?;
            from_map(&|u| (a * (2.0 * PI * u).cos(), b * (2.0 * PI * u).sin()))
        }
        ShapeKind::Square => {
            let side = positive(kind, "side", spec.get("side", 1.0))?;
            let s2 = side / 2.0;
            let corners = ClosedPolyline::from_xy(&[(s2, -s2), (s2, s2), (-s2, s2), (-s2, -s2)])?;
            Ok(resample_uniform(&corners, n)?)
        }
        ShapeKind::DcsPolygon => {
            let p0 = (spec.get("p0x", -1.0), spec.get("p0y", 0.0));
            let p1 = (spec.get("p1x", 1.0), spec.get("p1y", 0.0));
            let len = ((p1.0 - p0.0).powi(2) + (p1.1 - p0.1).powi(2)).sqrt();
            if len <= 0.0 {
                return Err(ShapeError::InvalidParameter {
                    kind,
                    name: "p1x".into(),
                    value: p1.0,
                    why: "endpoints must be distinct",
                });
            }
            // out and back at uniform arclength, anchored at p0
            from_map(&|u| {
                let f = if u < 0.5 { 2.0 * u } else { 2.0 - 2.0 * u };
                (p0.0 + f * (p1.0 - p0.0), p0.1 + f * (p1.1 - p0.1))
            })
        }
        ShapeKind::DcsSmooth => {
            let l0 = positive(kind, "l0", spec.get("l0", 2.0))?;
            from_map(&|u| (l0 / 4.0 * (2.0 * PI * u).cos(), 0.0))
        }
        ShapeKind::InfinityXy => from_map(&|u| ((2.0 * PI * u).cos(), (4.0 * PI * u).sin())),
        ShapeKind::InfinityY => {
            // keeps the y-axis symmetry X(u + 1/2) = diag(-1, 1) X(u),
            // breaks the x-axis and central ones
            let a = spec.get("skew", 0.25);
            from_map(&|u| ((2.0 * PI * u).cos() + a * (6.0 * PI * u).sin(), (4.0 * PI * u).sin()))
        }
        ShapeKind::InfinityCentral => {
            // pure sine components keep X(1/2 + s) = -X(1/2 - s) exactly
            let a = spec.get("skew", 0.25);
            from_map(&|u| ((2.0 * PI * u).sin(), (4.0 * PI * u).sin() + a * (6.0 * PI * u).sin()))
        }
        ShapeKind::InfinityPerturbed => {
            let amp = spec.get("amplitude", 0.15);
            if amp < 0.0 {
                return Err(ShapeError::InvalidParameter {
                    kind,
                    name: "amplitude".into(),
                    value: amp,
                    why: "must be nonnegative",
                });
            }
            // radial bump on the right loop, effectively supported on a
            // parameter window of width 1/16 around the rightmost point
            let sigma = 1.0 / 128.0;
            from_map(&|u| {
                let x = (2.0 * PI * u).cos();
                let y = (4.0 * PI * u).sin();
                let d = u.min(1.0 - u);
                let g = (-0.5 * (d / sigma).powi(2)).exp();
                if g < 1e-30 {
                    return (x, y);
                }
                let norm = (x * x + y * y).sqrt();
                if norm < 1e-12 {
                    return (x, y);
                }
                (x * (1.0 + amp * g / norm), y * (1.0 + amp * g / norm))
            })
        }
        ShapeKind::TwoCircleInfinity => {
            let rs = positive(kind, "r_small", spec.get("r_small", 0.25))?;
            let rb = positive(kind, "r_big", spec.get("r_big", 0.75))?;
            // small left circle counterclockwise, then large right circle
            // clockwise; tangents match (0, 1) at the origin junction
            let frac = rs / (rs + rb);
            from_map(&|u| {
                if u < frac {
                    let phi = 2.0 * PI * (u / frac);
                    (-rs + rs * phi.cos(), rs * phi.sin())
                } else {
                    let psi = PI - 2.0 * PI * ((u - frac) / (1.0 - frac));
                    (rb + rb * psi.cos(), rb * psi.sin())
                }
            })
        }
        ShapeKind::Convoluted => {
            from_map(&|u| (3.0 * (6.0 * PI * u).cos(), (16.0 * PI * u).sin()))
        }
    }
}

/// Which discrete symmetry relation to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// Component relation `X^1(k/4 + s) = (-1)^k X^1(k/4 - s)`, `k = 1..4`.
    XAxis,
    /// Component relation `X^2(k/8 + s) = (-1)^{k+1} X^2(k/8 - s)`, `k = 1..8`.
    YAxis,
    /// Point symmetry through the origin: the smaller deviation of the
    /// antipodal-shift form `X(u + 1/2) = -X(u)` and the reflected form
    /// `X(1/2 + s) = -X(1/2 - s)`.
    Central,
}

/// Maximum deviation of the sampled curve from the requested symmetry
/// relation over all paired indices. Axis checks need `samples` divisible
/// by 8, the central check an even count.
pub fn verify_symmetry(p: &ClosedPolyline, sym: Symmetry) -> Result<f64, ShapeError> {
    if p.dim() != 2 {
        return Err(ShapeError::NotPlanar(p.dim()));
    }
    let n = p.point_count();
    match sym {
        Symmetry::XAxis | Symmetry::YAxis => {
            if n % 8 != 0 {
                return Err(ShapeError::SamplesNotDivisible { needed: 8, got: n });
            }
        }
        Symmetry::Central => {
            if n % 2 != 0 {
                return Err(ShapeError::SamplesNotDivisible { needed: 2, got: n });
            }
        }
    }
    let dev = match sym {
        Symmetry::XAxis => component_reflection_deviation(p, 0, 4, |k| if k % 2 == 0 { 1.0 } else { -1.0 }),
        Symmetry::YAxis => component_reflection_deviation(p, 1, 8, |k| if k % 2 == 0 { -1.0 } else { 1.0 }),
        Symmetry::Central => {
            let glide = (0..n)
                .map(|i| {
                    let a = p.point(i);
                    let b = p.point(i + n / 2);
                    ((a[0] + b[0]).powi(2) + (a[1] + b[1]).powi(2)).sqrt()
                })
                .fold(0.0, f64::max);
            let reflected = (0..n)
                .map(|i| {
                    let a = p.point(i);
                    let b = p.point((n - i) % n);
                    ((a[0] + b[0]).powi(2) + (a[1] + b[1]).powi(2)).sqrt()
                })
                .fold(0.0, f64::max);
            glide.min(reflected)
        }
    };
    Ok(dev)
}

fn component_reflection_deviation(
    p: &ClosedPolyline,
    component: usize,
    divisions: usize,
    sign: impl Fn(usize) -> f64,
) -> f64 {
    let n = p.point_count();
    let mut dev: f64 = 0.0;
    for k in 1..=divisions {
        let center = k * n / divisions; // paired indices satisfy i + j = 2 * center (mod n)
        let s = sign(k);
        for m in 0..=n / 2 {
            let i = (center + m) % n;
            let j = (center + n - m) % n;
            let d = (p.point(i)[component] - s * p.point(j)[component]).abs();
            dev = dev.max(d);
        }
    }
    dev
}

/// Which trigonometric factor a projection uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Cos,
    Sin,
}

/// Discrete analogue of `\int_0^1 X^c(s) trig(2 pi f s) ds`:
/// `(1/N) sum_j P_j[component] * trig(2 pi freq j / N)`.
pub fn mode_projection(p: &ClosedPolyline, component: usize, freq: u32, phase: Phase) -> f64 {
    let n = p.point_count();
    let mut acc = 0.0;
    for (j, pt) in p.iter_points().enumerate() {
        let ang = 2.0 * PI * (freq as f64) * (j as f64) / (n as f64);
        let t = match phase {
            Phase::Cos => ang.cos(),
            Phase::Sin => ang.sin(),
        };
        acc += pt[component] * t;
    }
    acc / n as f64
}
