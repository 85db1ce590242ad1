//! de Branges–Rovnyak spaces `H(b)` for non-extreme `b`, described through
//! the Taylor coefficients `c_j` of the Smirnov symbol `φ = b/a`.
//!
//! `‖z^j‖² = 1 + Σ_{i≤j} |c_i|²` and `‖k_{0,j}‖² = 1 − Σ_{i≤j} |b̂(i)|²`; both
//! ladders are prefix sums.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::report::{format_float, Report};
use crate::scalar::Real;
use crate::seq::CoeffSeq;

#[derive(Clone, Debug)]
pub struct HbSpace<T: Real> {
    phi: CoeffSeq<Complex<T>>,
    b: Option<CoeffSeq<Complex<T>>>,
    monomial_norm_sq: Vec<T>,
    b_prefix_sq: Option<Vec<T>>,
}

impl<T: Real> HbSpace<T> {
    /// Ladder for `j = 0..=j_max` from the coefficient generator of `φ`.
    pub fn from_phi_fn(phi: impl FnMut(usize) -> Complex<T>, j_max: usize) -> Self {
        Self::from_phi(CoeffSeq::taylor_from_fn(j_max, phi), j_max)
    }

    /// Ladder for `j = 0..=j_max`; coefficients past the stored support are zero.
    pub fn from_phi(phi: CoeffSeq<Complex<T>>, j_max: usize) -> Self {
        let mut acc = T::one();
        let monomial_norm_sq = (0..=j_max)
            .map(|j| {
                acc = acc + phi.get(j as i64).norm_sqr();
                acc
            })
            .collect();
        Self {
            phi,
            b: None,
            monomial_norm_sq,
            b_prefix_sq: None,
        }
    }

    /// Attach Taylor coefficients of `b`, enabling the `k_{0,j}` ladder.
    pub fn with_b(mut self, b: CoeffSeq<Complex<T>>) -> Self {
        let j_max = self.j_max();
        let mut acc = T::zero();
        let prefix = (0..=j_max)
            .map(|j| {
                acc = acc + b.get(j as i64).norm_sqr();
                acc
            })
            .collect();
        self.b = Some(b);
        self.b_prefix_sq = Some(prefix);
        self
    }

    pub fn j_max(&self) -> usize {
        self.monomial_norm_sq.len() - 1
    }

    pub fn phi(&self) -> &CoeffSeq<Complex<T>> {
        &self.phi
    }

    pub fn b(&self) -> Option<&CoeffSeq<Complex<T>>> {
        self.b.as_ref()
    }

    fn check_j(&self, j: usize) -> Result<()> {
        if j > self.j_max() {
            Err(Error::DimensionTooSmall {
                index: j,
                dim: self.j_max() + 1,
            })
        } else {
            Ok(())
        }
    }

    /// `‖z^j‖²_{H(b)}`.
    pub fn monomial_norm_sq(&self, j: usize) -> Result<T> {
        self.check_j(j)?;
        Ok(self.monomial_norm_sq[j])
    }

    pub fn monomial_norm(&self, j: usize) -> Result<T> {
        Ok(self.monomial_norm_sq(j)?.sqrt())
    }

    /// `‖s_j(b)‖²_{H²}`, if `b` is attached.
    pub fn b_partial_norm_sq(&self, j: usize) -> Option<Result<T>> {
        let prefix = self.b_prefix_sq.as_ref()?;
        Some(self.check_j(j).map(|_| prefix[j]))
    }

    /// `‖k_{0,j}‖² = 1 − ‖s_j(b)‖²_{H²}`, if `b` is attached.
    pub fn kernel0_norm_sq(&self, j: usize) -> Option<Result<T>> {
        self.b_partial_norm_sq(j).map(|r| {
            r.and_then(|s| {
                if s >= T::one() {
                    Err(Error::NotInUnitBall(j))
                } else {
                    Ok(T::one() - s)
                }
            })
        })
    }

    pub fn kernel0_norm(&self, j: usize) -> Option<Result<T>> {
        self.kernel0_norm_sq(j).map(|r| r.map(T::sqrt))
    }

    /// `1 − ‖b‖²_{H²}` over all stored coefficients of `b`, the uniform lower
    /// bound for the kernel ladder.
    pub fn kernel0_lower_bound(&self) -> Option<T> {
        self.b.as_ref().map(|b| {
            let e = b.l2_coeff_norm();
            T::one() - e * e
        })
    }
}

/// `‖k_{0,j}‖ = (1 − Σ_{i≤j} |b̂(i)|²)^{1/2}`.
pub fn hb_kernel0_norm<T: Real>(b: &CoeffSeq<Complex<T>>, j: usize) -> Result<T> {
    let mut s = T::zero();
    for i in 0..=j {
        s = s + b.get(i as i64).norm_sqr();
    }
    if s >= T::one() {
        return Err(Error::NotInUnitBall(j));
    }
    Ok((T::one() - s).sqrt())
}

/// Column name used for the `‖z^j‖/j^α` ratios.
pub fn ratio_column(alpha: f64) -> String {
    format!("ratio_alpha_{alpha}")
}

/// Rows `(j, ‖z^j‖_{H(b)}, ‖z^j‖/j^α for each α)` at the requested `js`.
/// `j = 0` has no meaningful ratio and is skipped.
pub fn phi_growth_profile<T: Real>(hb: &HbSpace<T>, alphas: &[f64], js: &[usize]) -> Result<Report> {
    let mut cols = vec!["j".to_string(), "monomial_norm".to_string()];
    cols.extend(alphas.iter().map(|&a| ratio_column(a)));
    let mut report = Report::new(&cols);
    report.set_meta(
        "alphas",
        alphas.iter().map(|a| format_float(*a)).collect::<Vec<_>>().join(";"),
    );
    for &j in js.iter().filter(|&&j| j > 0) {
        let norm = hb.monomial_norm(j)?.to_f64_lossy();
        let mut row = vec![j.into(), norm.into()];
        for &a in alphas {
            row.push((norm / (j as f64).powf(a)).into());
        }
        report.push_row(row)?;
    }
    Ok(report)
}
