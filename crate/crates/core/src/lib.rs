//! Summability methods for Fourier and Taylor series: Cesàro and Wiener
//! matrices, the operators they induce, norms on the classical function
//! spaces of the disk, de Branges–Rovnyak ladders, and small sequence-space
//! counterexamples.
//!
//! Everything numerical is generic over [`Real`] (`f32`, `f64`); coefficient
//! algebra is generic over [`Coefficient`], which also covers exact
//! `Ratio<i64>` arithmetic. The aliases below fix the usual choices.

pub mod counterexamples;
pub mod error;
pub mod operators;
pub mod report;
pub mod scalar;
pub mod seq;
pub mod spaces;
pub mod special;
pub mod summatrix;

pub use error::{Error, Result};
pub use report::{Cell, Report};
pub use scalar::{Coefficient, Real};
pub use seq::{CoeffSeq, SeqKind};
pub use summatrix::{InverseMatrix, MatrixKind, SummMatrix};

pub use num_complex::{Complex, Complex32, Complex64};
pub use num_rational::Ratio;

/// Complex double-precision coefficient sequence.
pub type Seq = CoeffSeq<Complex64>;
/// Complex single-precision coefficient sequence.
pub type Seq32 = CoeffSeq<Complex32>;
/// Exact rational coefficient sequence.
pub type RationalSeq = CoeffSeq<Ratio<i64>>;
pub type Matrix = SummMatrix<f64>;
pub type Matrix32 = SummMatrix<f32>;
pub type Inverse = InverseMatrix<f64>;
pub type Grid = spaces::CircleGrid<f64>;
pub type Grid32 = spaces::CircleGrid<f32>;
pub type Hb = spaces::HbSpace<f64>;
pub type Complement = spaces::PythagComplement<f64>;
pub type TestFn = operators::TestFunction<f64>;
pub type Norm = operators::SpaceNorm<f64>;
