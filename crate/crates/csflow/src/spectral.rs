//! Discrete Fourier transform engine, heat-semigroup multiplier, and
//! spectral curvature.
//!
//! Conventions: the forward transform carries the `1/N` factor, so the zero
//! coefficient is the sample mean. Frequencies are ordered
//! `0, 1, ..., N/2-1, -N/2, ..., -1`. One heat step multiplies coefficient
//! `k` by `exp(-4 pi^2 k^2 h / L^2)` — the decaying semigroup of the
//! periodic Laplacian at diffusivity `1/L^2`.

use crate::geometry::{ClosedPolyline, GeometryError};
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("sample count must be even and at least 4, got {0}")]
    BadSampleCount(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Signed frequency for coefficient index `i` of an `n`-point transform.
pub fn frequency(index: usize, n: usize) -> i64 {
    if index < n / 2 {
        index as i64
    } else {
        index as i64 - n as i64
    }
}

/// Component-wise Fourier coefficients of a sampled closed curve.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// One coefficient vector per spatial component, `n` entries each.
    coeffs: Vec<Vec<Complex<f64>>>,
    n: usize,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn component(&self, c: usize) -> &[Complex<f64>] {
        &self.coeffs[c]
    }

    /// Sum of squared magnitudes over the nonzero frequencies (all
    /// components), the oscillatory part of the energy.
    pub fn oscillatory_energy(&self) -> f64 {
        self.coeffs
            .iter()
            .flat_map(|c| c.iter().skip(1))
            .map(|z| z.norm_sqr())
            .sum()
    }
}

/// Cached transform plans for one sample count. Immutable after
/// construction; independent transforms may run in parallel on clones.
pub struct Transform {
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    n: usize,
}

impl Transform {
    pub fn new(n: usize) -> Result<Self, SpectralError> {
        if n < 4 || n % 2 != 0 {
            return Err(SpectralError::BadSampleCount(n));
        }
        let mut planner = FftPlanner::new();
        Ok(Self {
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
            n,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Forward DFT of flat point-major samples, one coefficient vector per
    /// component, with the `1/N` normalization.
    pub fn dft(&self, samples: &[f64], dim: usize) -> Spectrum {
        let n = self.n;
        debug_assert_eq!(samples.len(), n * dim);
        let scale = 1.0 / n as f64;
        let mut coeffs = Vec::with_capacity(dim);
        for c in 0..dim {
            let mut buf: Vec<Complex<f64>> = (0..n)
                .map(|j| Complex::new(samples[j * dim + c], 0.0))
                .collect();
            self.forward.process(&mut buf);
            for z in buf.iter_mut() {
                *z *= scale;
            }
            coeffs.push(buf);
        }
        Spectrum { coeffs, n }
    }

    /// Inverse DFT back to flat point-major samples (real parts).
    pub fn idft(&self, spectrum: &Spectrum) -> Vec<f64> {
        let n = self.n;
        let dim = spectrum.dim();
        let mut out = vec![0.0; n * dim];
        for c in 0..dim {
            let mut buf = spectrum.coeffs[c].clone();
            self.inverse.process(&mut buf);
            for j in 0..n {
                out[j * dim + c] = buf[j].re;
            }
        }
        out
    }
}

/// Forward DFT with an ad hoc plan. Requires `N >= 4` even.
pub fn dft(samples: &[f64], dim: usize) -> Result<Spectrum, SpectralError> {
    if dim == 0 || samples.len() % dim != 0 {
        return Err(SpectralError::BadSampleCount(samples.len()));
    }
    let n = samples.len() / dim;
    let t = Transform::new(n)?;
    Ok(t.dft(samples, dim))
}

/// Inverse of [`dft`].
pub fn idft(spectrum: &Spectrum) -> Result<Vec<f64>, SpectralError> {
    let t = Transform::new(spectrum.n())?;
    Ok(t.idft(spectrum))
}

/// Per-frequency decay factors of one heat step.
#[derive(Debug, Clone)]
pub struct HeatMultiplier {
    factors: Vec<f64>,
    pub h: f64,
    pub length: f64,
}

impl HeatMultiplier {
    pub fn factors(&self) -> &[f64] {
        &self.factors
    }
}

/// `m_k = exp(-4 pi^2 k^2 h / L^2)` in spectrum ordering. `m_0 = 1`, all
/// factors in `(0, 1]`, even in `k`.
pub fn heat_multiplier(h: f64, length: f64, n: usize) -> HeatMultiplier {
    let rate = 4.0 * std::f64::consts::PI.powi(2) * h / (length * length);
    let factors = (0..n)
        .map(|i| {
            let k = frequency(i, n) as f64;
            (-rate * k * k).exp()
        })
        .collect();
    HeatMultiplier { factors, h, length }
}

/// One linear diffusion step of size `h` at diffusivity `1/length^2`,
/// applied to an already uniformly resampled polyline. The sample centroid
/// is untouched (`m_0 = 1`).
pub fn heat_step(p: &ClosedPolyline, h: f64, length: f64) -> Result<ClosedPolyline, SpectralError> {
    let t = Transform::new(p.point_count())?;
    heat_step_with(&t, p, h, length)
}

/// [`heat_step`] reusing a cached transform plan.
pub fn heat_step_with(
    t: &Transform,
    p: &ClosedPolyline,
    h: f64,
    length: f64,
) -> Result<ClosedPolyline, SpectralError> {
    let n = p.point_count();
    debug_assert_eq!(t.n(), n);
    let dim = p.dim();
    let mult = heat_multiplier(h, length, n);
    let mut spectrum = t.dft(p.coords(), dim);
    for comp in spectrum.coeffs.iter_mut() {
        for (z, &m) in comp.iter_mut().zip(mult.factors()) {
            *z *= m;
        }
    }
    Ok(ClosedPolyline::new(t.idft(&spectrum), dim)?)
}

/// Discrete curvature vector field: inverse DFT of `-4 pi^2 k^2` times the
/// coefficients, divided by `L^2`. Expects a uniformly resampled polyline;
/// returns flat point-major vectors.
pub fn spectral_curvature(p: &ClosedPolyline) -> Result<Vec<f64>, SpectralError> {
    let n = p.point_count();
    let t = Transform::new(n)?;
    let length = crate::geometry::polygon_length(p);
    let mut spectrum = t.dft(p.coords(), p.dim());
    for comp in spectrum.coeffs.iter_mut() {
        for (i, z) in comp.iter_mut().enumerate() {
            let k = frequency(i, n) as f64;
            *z *= -4.0 * std::f64::consts::PI.powi(2) * k * k;
        }
    }
    let mut out = t.idft(&spectrum);
    let scale = 1.0 / (length * length);
    for v in out.iter_mut() {
        *v *= scale;
    }
    Ok(out)
}
