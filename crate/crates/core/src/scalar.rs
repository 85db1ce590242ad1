//! Scalar traits.
//!
//! Series arithmetic is written against [`Coefficient`], which is satisfied by
//! real and complex floats as well as exact rationals. Everything that needs
//! transcendental functions, FFTs or quadrature is written against [`Real`]
//! (`f32` or `f64`) and works on `Complex<Real>` coefficients.

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive, Zero};
use rustfft::FftNum;

/// Floating-point type usable by the numerical parts of the crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + FftNum + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Lossy cast from `f64`; every literal in the crate goes through this.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 is representable")
    }

    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize is representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Coefficient ring for truncated power series.
pub trait Coefficient: Num + Clone + FromPrimitive + Debug + Send + Sync {
    /// `exp(self)` when the ring can represent it.
    fn exp_scalar(&self) -> Option<Self>;

    /// Modulus as `f64`, for diagnostics and residuals.
    fn modulus(&self) -> f64;
}

impl Coefficient for f32 {
    fn exp_scalar(&self) -> Option<Self> {
        Some(self.exp())
    }
    fn modulus(&self) -> f64 {
        f64::from(self.abs())
    }
}

impl Coefficient for f64 {
    fn exp_scalar(&self) -> Option<Self> {
        Some(self.exp())
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
}

impl<T: Real> Coefficient for Complex<T> {
    fn exp_scalar(&self) -> Option<Self> {
        Some(self.exp())
    }
    fn modulus(&self) -> f64 {
        self.norm().to_f64_lossy()
    }
}

impl Coefficient for Ratio<i64> {
    // Only exp(0) is rational.
    fn exp_scalar(&self) -> Option<Self> {
        if self.is_zero() {
            Some(Ratio::from_integer(1))
        } else {
            None
        }
    }
    fn modulus(&self) -> f64 {
        self.to_f64().map_or(f64::NAN, f64::abs)
    }
}

/// Sum in a fixed pairwise order so results do not depend on how a caller
/// chunked the work.
pub fn pairwise_sum<T: Real>(xs: &[T]) -> T {
    const LEAF: usize = 32;
    if xs.len() <= LEAF {
        return xs.iter().fold(T::zero(), |acc, &x| acc + x);
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}
