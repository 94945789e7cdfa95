//! Complex signal primitives for one OFDM block.
//!
//! A block of `n` symbols `x` is carried by the harmonic waveforms
//! `e^{j2πkt}`, `k = 1..n`, over the normalized interval `t ∈ [0,1)`. The
//! baseband signal is `s_b(t) = Σ_k x_k e^{j2πkt} = a(t)^H x` where `a(t)`
//! is the steering vector with negative exponents. The grid peak oracle in
//! this module independently certifies everything the SDP modules compute.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::TAU;

use crate::{Error, Result};

/// Complex coefficient vector for one OFDM block (normalized `A = 1`, `T = 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolVector {
    coeffs: Vec<Complex64>,
}

impl SymbolVector {
    /// Wraps a coefficient vector. Rejects empty vectors and non-finite entries.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("symbol vector must have length n >= 1"));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::invalid("symbol vector entries must be finite"));
        }
        Ok(Self { coeffs })
    }

    /// The all-zero block of length `n`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            coeffs: vec![Complex64::ZERO; n],
        }
    }

    /// Unit coefficient on tone `k` (0-based), zero elsewhere.
    pub fn unit_tone(k: usize, n: usize) -> Self {
        assert!(k < n);
        let mut coeffs = vec![Complex64::ZERO; n];
        coeffs[k] = Complex64::ONE;
        Self { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Squared Euclidean norm `‖x‖₂²`.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Entrywise scaling by a complex factor.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

/// The vector `a(t) = [e^{-j2πt}, e^{-j4πt}, …, e^{-j2nπt}]`.
///
/// Carries negative exponents so that `s_b(t) = a(t)^H x` has the positive
/// exponents of the baseband synthesis sum.
#[derive(Debug, Clone)]
pub struct SteeringVector {
    pub t: f64,
    pub entries: Vec<Complex64>,
}

/// Builds the steering vector at normalized time `t ∈ [0,1)`.
///
/// Entry `k` (1-based) is `e^{-j2πkt}`, evaluated per entry from the reduced
/// angle rather than by repeated multiplication, so large `n` does not drift.
pub fn steering_vector(t: f64, n: usize) -> Result<SteeringVector> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::invalid(format!("t = {t} outside [0,1)")));
    }
    if n == 0 {
        return Err(Error::invalid("steering vector needs n >= 1"));
    }
    let entries = (1..=n)
        .map(|k| Complex64::from_polar(1.0, -TAU * (k as f64 * t).fract()))
        .collect();
    Ok(SteeringVector { t, entries })
}

/// Evaluates the baseband signal `s_b(t) = Σ_k x_k e^{j2πkt} = a(t)^H x`.
pub fn synthesize_baseband(x: &SymbolVector, t: f64) -> Complex64 {
    x.coeffs
        .iter()
        .enumerate()
        .map(|(i, &xk)| xk * Complex64::from_polar(1.0, TAU * ((i + 1) as f64 * t).fract()))
        .sum()
}

/// Real `n×2` embedding `[Re(x), Im(x)]` of a complex block.
#[derive(Debug, Clone, PartialEq)]
pub struct RealEmbedding {
    /// Column-major `n×2` matrix: first column real parts, second imaginary.
    pub matrix: nalgebra::DMatrix<f64>,
}

impl RealEmbedding {
    /// Matrix inner product `tr(X₁ᵀ X₂)`; equals `Re[x₁^H x₂]`.
    pub fn inner(&self, other: &RealEmbedding) -> f64 {
        self.matrix.dot(&other.matrix)
    }
}

/// Embeds `x ∈ C^n` as the real `n×2` matrix `[Re(x), Im(x)]`.
pub fn real_embed(x: &SymbolVector) -> RealEmbedding {
    let n = x.n();
    let mut matrix = nalgebra::DMatrix::zeros(n, 2);
    for (i, c) in x.coeffs.iter().enumerate() {
        matrix[(i, 0)] = c.re;
        matrix[(i, 1)] = c.im;
    }
    RealEmbedding { matrix }
}

/// Inverse of [`real_embed`]; exact round trip.
pub fn real_unembed(e: &RealEmbedding) -> SymbolVector {
    let coeffs = (0..e.matrix.nrows())
        .map(|i| Complex64::new(e.matrix[(i, 0)], e.matrix[(i, 1)]))
        .collect();
    SymbolVector { coeffs }
}

/// `A(t)`: the embedding of `a(-t)`, columns `cos(2πkt)` and `sin(2πkt)`.
pub fn steering_embedding(t: f64, n: usize) -> RealEmbedding {
    let mut matrix = nalgebra::DMatrix::zeros(n, 2);
    for k in 1..=n {
        let ang = TAU * (k as f64 * t).fract();
        matrix[(k - 1, 0)] = ang.cos();
        matrix[(k - 1, 1)] = ang.sin();
    }
    RealEmbedding { matrix }
}

/// `B(t) = [-sin(2πkt), cos(2πkt)]`, the quarter-phase rotation of `A(t)`.
///
/// Satisfies `R(e^{jφ} a(-t)) = cos(φ) A(t) + sin(φ) B(t)`.
pub fn steering_embedding_quarter(t: f64, n: usize) -> RealEmbedding {
    let mut matrix = nalgebra::DMatrix::zeros(n, 2);
    for k in 1..=n {
        let ang = TAU * (k as f64 * t).fract();
        matrix[(k - 1, 0)] = -ang.sin();
        matrix[(k - 1, 1)] = ang.cos();
    }
    RealEmbedding { matrix }
}

/// Result of the oversampled-grid peak evaluation.
#[derive(Debug, Clone)]
pub struct PeakReport {
    /// Max modulus of `s_b` over the uniform grid `{i/M}`.
    pub grid_max: f64,
    /// Certified upper bound `grid_max / cos(π/(2γ))` on `sup_t |s_b(t)|`.
    pub certified_sup: f64,
    /// Effective oversampling factor `γ = M/n` actually used.
    pub gamma: f64,
    /// Grid point attaining `grid_max`.
    pub argmax_t: f64,
}

/// Evaluates `s_b` on the uniform `M`-point grid via a zero-padded FFT,
/// where `M` is `γ·n` rounded up to a power of two.
pub fn grid_samples(x: &SymbolVector, gamma: u32) -> Vec<Complex64> {
    assert!(gamma >= 2, "oversampling factor must be >= 2");
    let n = x.n();
    let m = (gamma as usize * n).next_power_of_two();
    let mut buf = vec![Complex64::ZERO; m];
    buf[1..=n].copy_from_slice(&x.coeffs);
    // Unnormalized inverse FFT: output i = Σ_k buf[k] e^{+j2πki/M} = s_b(i/M).
    FftPlanner::new()
        .plan_fft_inverse(m)
        .process(&mut buf);
    buf
}

/// Grid peak of `|s_b|` with the oversampling certificate of the sup.
pub fn peak_amplitude(x: &SymbolVector, gamma: u32) -> PeakReport {
    let samples = grid_samples(x, gamma);
    let m = samples.len();
    let (argmax, grid_max_sq) = samples
        .iter()
        .map(|c| c.norm_sqr())
        .enumerate()
        .fold((0usize, 0.0f64), |acc, (i, v)| {
            if v > acc.1 {
                (i, v)
            } else {
                acc
            }
        });
    let grid_max = grid_max_sq.sqrt();
    let gamma_eff = m as f64 / x.n() as f64;
    PeakReport {
        grid_max,
        certified_sup: grid_max / (std::f64::consts::PI / (2.0 * gamma_eff)).cos(),
        gamma: gamma_eff,
        argmax_t: argmax as f64 / m as f64,
    }
}

/// Minimum of the optical intensity level `1 + Re[a(t)^H x]` over the grid.
pub fn oc_min_level(x: &SymbolVector, gamma: u32) -> f64 {
    grid_samples(x, gamma)
        .iter()
        .map(|c| 1.0 + c.re)
        .fold(f64::INFINITY, f64::min)
}

/// High-accuracy `sup_t |s_b(t)|` for oracle use in tests: grid peak followed
/// by ternary refinement of `|s_b|²` in the bracketing grid interval.
pub fn sup_refined(x: &SymbolVector, gamma: u32) -> f64 {
    let report = peak_amplitude(x, gamma);
    let m = x.n() as f64 * report.gamma;
    let f = |t: f64| synthesize_baseband(x, t.rem_euclid(1.0)).norm_sqr();
    let (mut lo, mut hi) = (report.argmax_t - 1.0 / m, report.argmax_t + 1.0 / m);
    for _ in 0..120 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) < f(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    report.grid_max.max(f(0.5 * (lo + hi)).sqrt())
}

/// High-accuracy `-min_t Re[a(t)^H x]` counterpart of [`sup_refined`].
pub fn neg_min_re_refined(x: &SymbolVector, gamma: u32) -> f64 {
    let samples = grid_samples(x, gamma);
    let m = samples.len();
    let (argmin, _) = samples
        .iter()
        .enumerate()
        .fold((0usize, f64::INFINITY), |acc, (i, c)| {
            if c.re < acc.1 {
                (i, c.re)
            } else {
                acc
            }
        });
    let f = |t: f64| synthesize_baseband(x, t.rem_euclid(1.0)).re;
    let t0 = argmin as f64 / m as f64;
    let (mut lo, mut hi) = (t0 - 1.0 / m as f64, t0 + 1.0 / m as f64);
    for _ in 0..120 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) > f(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    -f(0.5 * (lo + hi)).min(samples[argmin].re)
}
