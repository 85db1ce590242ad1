//! Uniform circle grids and the radial rule for disk integrals.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::seq::CoeffSeq;

pub const DEFAULT_LOG2_SIZE: u32 = 12;
pub const DEFAULT_RADIAL_NODES: usize = 64;

/// `2^m` equispaced nodes `θ_i = 2πi/2^m` on the circle together with a
/// Gauss–Legendre rule on `[0, 1]` for the radial measure `2r dr`.
#[derive(Clone)]
pub struct CircleGrid<T: Real> {
    log2_size: u32,
    radial: Vec<(T, T)>,
    forward: Arc<dyn Fft<T>>,
    inverse: Arc<dyn Fft<T>>,
}

impl<T: Real> fmt::Debug for CircleGrid<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CircleGrid")
            .field("log2_size", &self.log2_size)
            .field("radial_nodes", &self.radial.len())
            .finish()
    }
}

impl<T: Real> Default for CircleGrid<T> {
    fn default() -> Self {
        Self::new(DEFAULT_LOG2_SIZE, DEFAULT_RADIAL_NODES).expect("default grid is valid")
    }
}

impl<T: Real> CircleGrid<T> {
    pub fn new(log2_size: u32, radial_nodes: usize) -> Result<Self> {
        if !(1..=26).contains(&log2_size) {
            return Err(Error::Invalid(format!("grid log2 size {log2_size} out of range")));
        }
        if radial_nodes == 0 {
            return Err(Error::Invalid("radial rule needs at least one node".into()));
        }
        let size = 1usize << log2_size;
        let mut planner = FftPlanner::new();
        let radial = gauss_legendre_unit(radial_nodes)
            .into_iter()
            .map(|(r, w)| (T::of(r), T::of(w)))
            .collect();
        Ok(Self {
            log2_size,
            radial,
            forward: planner.plan_fft_forward(size),
            inverse: planner.plan_fft_inverse(size),
        })
    }

    pub fn with_log2_size(log2_size: u32) -> Result<Self> {
        Self::new(log2_size, DEFAULT_RADIAL_NODES)
    }

    pub fn log2_size(&self) -> u32 {
        self.log2_size
    }

    pub fn size(&self) -> usize {
        1 << self.log2_size
    }

    pub fn node(&self, i: usize) -> T {
        T::TAU() * T::of_usize(i) / T::of_usize(self.size())
    }

    /// Nodes `r_q` and weights `w_q` of the rule `∫₀¹ g(r) dr ≈ Σ w_q g(r_q)`.
    pub fn radial(&self) -> &[(T, T)] {
        &self.radial
    }

    /// Values `f(r e^{iθ_i})` at every node. Coefficients are folded modulo
    /// the grid size first, so the result is exact for any finite support.
    pub fn values(&self, f: &CoeffSeq<Complex<T>>, r: T) -> Vec<Complex<T>> {
        let size = self.size();
        let mut buf = vec![Complex::new(T::zero(), T::zero()); size];
        let unit = r == T::one();
        for (k, c) in f.iter() {
            let idx = k.rem_euclid(size as i64) as usize;
            let scale = if unit { T::one() } else { r.powi(k.unsigned_abs() as i32) };
            buf[idx] = buf[idx] + c * scale;
        }
        self.inverse.process(&mut buf);
        buf
    }

    /// Boundary values `f(e^{iθ_i})`.
    pub fn boundary_values(&self, f: &CoeffSeq<Complex<T>>) -> Vec<Complex<T>> {
        self.values(f, T::one())
    }

    /// Discrete Fourier coefficients `(1/M) Σ_i v_i e^{−ikθ_i}`, indexed `k mod M`.
    pub fn dft(&self, values: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if values.len() != self.size() {
            return Err(Error::Invalid(format!(
                "expected {} grid values, got {}",
                self.size(),
                values.len()
            )));
        }
        let mut buf = values.to_vec();
        self.forward.process(&mut buf);
        let inv = T::one() / T::of_usize(self.size());
        Ok(buf.into_iter().map(|c| c * inv).collect())
    }

    /// Sample a function of the angle at every node.
    pub fn sample(&self, mut f: impl FnMut(T) -> Complex<T>) -> Vec<Complex<T>> {
        (0..self.size()).map(|i| f(self.node(i))).collect()
    }
}

/// Gauss–Legendre nodes and weights on `[0, 1]`, by Newton iteration on
/// the three-term Legendre recurrence.
pub fn gauss_legendre_unit(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        // Tricomi initial guess for the i-th root, counted from +1.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d.is_finite() {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((1.0 - x) / 2.0, w / 2.0));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
