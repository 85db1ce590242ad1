//! Summability matrices and their left inverses.
//!
//! Rows are generated on demand; nothing here materializes a full matrix
//! except the `Dense` kind, which is given row by row by the caller.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::seq::{binomial_series, series_recip, CoeffSeq, SeqKind};
use crate::special;

#[derive(Clone, Debug)]
pub enum MatrixKind<T: Real> {
    /// `a_nk = binom(n,k)/binom(n+α,k)` for `k <= n`.
    Cesaro { alpha: T },
    /// `a_nk = γ_n^{-1} (1/f)^(n−k)` for `k <= n`, rows `0..=recip.hi()`.
    Wiener {
        f: CoeffSeq<Complex<T>>,
        recip: CoeffSeq<Complex<T>>,
        gamma: Vec<T>,
    },
    /// Explicit rows; Taylor rows act on one-sided input, Fourier rows on two-sided.
    Dense { rows: Vec<CoeffSeq<Complex<T>>> },
}

#[derive(Clone, Debug)]
pub struct SummMatrix<T: Real> {
    kind: MatrixKind<T>,
}

impl<T: Real> SummMatrix<T> {
    pub fn cesaro(alpha: T) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self {
            kind: MatrixKind::Cesaro { alpha },
        })
    }

    pub fn dense(rows: Vec<CoeffSeq<Complex<T>>>) -> Self {
        Self {
            kind: MatrixKind::Dense { rows },
        }
    }

    pub fn kind(&self) -> &MatrixKind<T> {
        &self.kind
    }

    /// Short method name used in reports.
    pub fn method_name(&self) -> &'static str {
        match self.kind {
            MatrixKind::Cesaro { .. } => "cesaro",
            MatrixKind::Wiener { .. } => "wiener",
            MatrixKind::Dense { .. } => "dense",
        }
    }

    pub fn alpha(&self) -> Option<T> {
        match self.kind {
            MatrixKind::Cesaro { alpha } => Some(alpha),
            _ => None,
        }
    }

    /// Number of rows, `None` when rows exist for every `n`.
    pub fn row_count(&self) -> Option<usize> {
        match &self.kind {
            MatrixKind::Cesaro { .. } => None,
            MatrixKind::Wiener { gamma, .. } => Some(gamma.len()),
            MatrixKind::Dense { rows } => Some(rows.len()),
        }
    }

    pub fn is_lower_triangular(&self) -> bool {
        match &self.kind {
            MatrixKind::Cesaro { .. } | MatrixKind::Wiener { .. } => true,
            MatrixKind::Dense { rows } => rows
                .iter()
                .enumerate()
                .all(|(n, r)| r.kind() == SeqKind::Taylor && r.hi() <= n as i64),
        }
    }

    /// One-sided row `n` as a Taylor sequence.
    pub fn row(&self, n: usize) -> Result<CoeffSeq<Complex<T>>> {
        match &self.kind {
            MatrixKind::Cesaro { alpha } => Ok(cesaro_row(n, *alpha, false)),
            MatrixKind::Wiener { recip, gamma, .. } => {
                let g = *gamma.get(n).ok_or_else(|| missing_row(n, gamma.len()))?;
                Ok(CoeffSeq::taylor_from_fn(n, |k| {
                    recip.get((n - k) as i64) / Complex::new(g, T::zero())
                }))
            }
            MatrixKind::Dense { rows } => {
                let r = rows.get(n).ok_or_else(|| missing_row(n, rows.len()))?;
                match r.kind() {
                    SeqKind::Taylor => Ok(r.clone()),
                    SeqKind::Fourier => Err(Error::KindMismatch(format!(
                        "row {n} is two-sided, one-sided row requested"
                    ))),
                }
            }
        }
    }

    /// Two-sided row `n` as a Fourier sequence. Only Cesàro matrices and
    /// dense matrices given with two-sided rows have one.
    pub fn row_two_sided(&self, n: usize) -> Result<CoeffSeq<Complex<T>>> {
        match &self.kind {
            MatrixKind::Cesaro { alpha } => Ok(cesaro_row(n, *alpha, true)),
            MatrixKind::Wiener { .. } => Err(Error::KindMismatch(
                "Wiener matrices act on one-sided sequences only".into(),
            )),
            MatrixKind::Dense { rows } => {
                let r = rows.get(n).ok_or_else(|| missing_row(n, rows.len()))?;
                match r.kind() {
                    SeqKind::Fourier => Ok(r.clone()),
                    SeqKind::Taylor => Err(Error::KindMismatch(format!(
                        "row {n} is one-sided, applied to a two-sided sequence"
                    ))),
                }
            }
        }
    }

    /// Single entry `a_nk` of the one-sided matrix.
    pub fn entry(&self, n: usize, k: usize) -> Result<Complex<T>> {
        match &self.kind {
            MatrixKind::Cesaro { alpha } => {
                if k > n {
                    return Ok(Complex::new(T::zero(), T::zero()));
                }
                Ok(Complex::new(cesaro_entry(n, k, *alpha)?, T::zero()))
            }
            _ => Ok(self.row(n)?.get(k as i64)),
        }
    }
}

fn missing_row(n: usize, len: usize) -> Error {
    Error::DimensionTooSmall { index: n, dim: len }
}

fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha.is_finite() && alpha >= T::zero() {
        Ok(())
    } else {
        Err(Error::NegativeOrder(alpha.to_f64_lossy()))
    }
}

/// `binom(n,k)/binom(n+α,k)`, via log-gamma once `n` is large.
pub fn cesaro_entry<T: Real>(n: usize, k: usize, alpha: T) -> Result<T> {
    check_alpha(alpha)?;
    if k > n {
        return Err(Error::OutsideTriangle { n, k });
    }
    Ok(T::of(special::binomial_ratio(n, k, alpha.to_f64_lossy())))
}

/// Row `n` of the Cesàro matrix of order `alpha`. The two-sided row uses
/// `|k|` in place of `k` and is supported on `|k| <= n`.
///
/// Entries come from the ratio recurrence `a_{n,k+1} = a_{n,k}(n−k)/(n+α−k)`,
/// which keeps every entry within a few ulps of the exact value.
pub fn cesaro_row<T: Real>(n: usize, alpha: T, two_sided: bool) -> CoeffSeq<Complex<T>> {
    let nn = T::of_usize(n);
    let mut half = Vec::with_capacity(n + 1);
    let mut a = T::one();
    half.push(a);
    for k in 0..n {
        let kk = T::of_usize(k);
        a = a * (nn - kk) / (nn + alpha - kk);
        half.push(a);
    }
    let to_c = |x: T| Complex::new(x, T::zero());
    if two_sided {
        let mut coeffs: Vec<Complex<T>> = half.iter().rev().map(|&x| to_c(x)).collect();
        coeffs.extend(half.iter().skip(1).map(|&x| to_c(x)));
        CoeffSeq::fourier(-(n as i64), coeffs)
    } else {
        CoeffSeq::taylor(half.into_iter().map(to_c).collect())
    }
}

/// `γ_n = binom(n+α, α)` for `n = 0..=n_max`.
pub fn cesaro_gamma<T: Real>(alpha: T, n_max: usize) -> Vec<T> {
    let mut g = Vec::with_capacity(n_max + 1);
    let mut v = T::one();
    g.push(v);
    for n in 1..=n_max {
        let nn = T::of_usize(n);
        v = v * (nn + alpha) / nn;
        g.push(v);
    }
    g
}

/// Taylor coefficients of `(1−z)^{α+1}` to degree `deg`.
pub fn cesaro_generator<T: Real>(alpha: T, deg: usize) -> CoeffSeq<Complex<T>> {
    let beta = Complex::new(alpha + T::one(), T::zero());
    let sign = Complex::new(-T::one(), T::zero());
    binomial_series(&beta, &sign, deg)
}

fn check_wiener_inputs<T: Real>(f: &CoeffSeq<Complex<T>>, gamma: &[T], rows: usize) -> Result<()> {
    if f.kind() != SeqKind::Taylor {
        return Err(Error::KindMismatch("Wiener generator must be a Taylor series".into()));
    }
    if f.get(0).norm() == T::zero() {
        return Err(Error::NonInvertible);
    }
    if gamma.len() < rows {
        return Err(Error::DimensionTooSmall {
            index: rows.saturating_sub(1),
            dim: gamma.len(),
        });
    }
    for (n, &g) in gamma.iter().enumerate().take(rows) {
        if !(g > T::zero() && g.is_finite()) || (n > 0 && g < gamma[n - 1]) {
            return Err(Error::BadGamma(n));
        }
    }
    Ok(())
}

/// Lower-triangular matrix with rows `0..=n_max` and entries
/// `a_nk = γ_n^{-1} (1/f)^(n−k)`.
pub fn wiener_matrix<T: Real>(
    f: &CoeffSeq<Complex<T>>,
    gamma: &[T],
    n_max: usize,
) -> Result<SummMatrix<T>> {
    check_wiener_inputs(f, gamma, n_max + 1)?;
    let recip = series_recip(f, n_max)?;
    Ok(SummMatrix {
        kind: MatrixKind::Wiener {
            f: f.clone(),
            recip,
            gamma: gamma[..=n_max].to_vec(),
        },
    })
}

/// A lower-triangular left inverse, stored row by row with its absolute row sums.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseMatrix<T: Real> {
    rows: Vec<Vec<Complex<T>>>,
    row_abs_sums: Vec<T>,
}

impl<T: Real> InverseMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Self {
        let row_abs_sums = rows.iter().map(|r| abs_sum(r)).collect();
        Self { rows, row_abs_sums }
    }

    pub fn identity(j_max: usize) -> Self {
        let rows = (0..=j_max)
            .map(|j| {
                let mut r = vec![Complex::new(T::zero(), T::zero()); j + 1];
                r[j] = Complex::new(T::one(), T::zero());
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `j`, indexed by `n = 0..=j`.
    pub fn row(&self, j: usize) -> &[Complex<T>] {
        &self.rows[j]
    }

    /// Stored `B_j = Σ_n |b_jn|`.
    pub fn row_abs_sum(&self, j: usize) -> T {
        self.row_abs_sums[j]
    }

    pub fn row_abs_sums(&self) -> &[T] {
        &self.row_abs_sums
    }

    pub fn recompute_row_abs_sum(&self, j: usize) -> T {
        abs_sum(&self.rows[j])
    }
}

fn abs_sum<T: Real>(row: &[Complex<T>]) -> T {
    let v: Vec<T> = row.iter().map(|c| c.norm()).collect();
    crate::scalar::pairwise_sum(&v)
}

/// Rows `0..=j_max` of `b_jn = γ_n f̂(j−n)`.
pub fn wiener_left_inverse<T: Real>(
    f: &CoeffSeq<Complex<T>>,
    gamma: &[T],
    j_max: usize,
) -> Result<InverseMatrix<T>> {
    check_wiener_inputs(f, gamma, j_max + 1)?;
    let rows = (0..=j_max)
        .map(|j| {
            (0..=j)
                .map(|n| f.get((j - n) as i64) * Complex::new(gamma[n], T::zero()))
                .collect()
        })
        .collect();
    Ok(InverseMatrix::from_rows(rows))
}

/// `max_{j<=J, k<=K} |Σ_n b_jn a_nk − δ_jk|`.
pub fn left_inverse_residual<T: Real>(
    a: &SummMatrix<T>,
    b: &InverseMatrix<T>,
    j_max: usize,
    k_max: usize,
) -> Result<T> {
    Ok(left_inverse_residual_rows(a, b, j_max, k_max)?
        .into_iter()
        .fold(T::zero(), T::max))
}

/// Row-wise residuals `max_{k<=K} |Σ_n b_jn a_nk − δ_jk|` for `j = 0..=J`.
pub fn left_inverse_residual_rows<T: Real>(
    a: &SummMatrix<T>,
    b: &InverseMatrix<T>,
    j_max: usize,
    k_max: usize,
) -> Result<Vec<T>> {
    if b.len() <= j_max {
        return Err(Error::DimensionTooSmall {
            index: j_max,
            dim: b.len(),
        });
    }
    let a_rows = (0..=j_max)
        .map(|n| a.row(n))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=j_max)
        .map(|j| {
            let brow = b.row(j);
            let mut worst = T::zero();
            for k in 0..=k_max {
                let mut acc = Complex::new(T::zero(), T::zero());
                for (n, bjn) in brow.iter().enumerate() {
                    acc = acc + bjn * a_rows[n].get(k as i64);
                }
                if j == k {
                    acc = acc - T::one();
                }
                worst = worst.max(acc.norm());
            }
            worst
        })
        .collect())
}

/// `r_j = ‖P_j‖ / B_j` for `j = 0..=j_max`.
pub fn limitation_ratio<T: Real>(p_norms: &[T], b: &InverseMatrix<T>, j_max: usize) -> Result<Vec<T>> {
    if p_norms.len() <= j_max || b.len() <= j_max {
        return Err(Error::DimensionTooSmall {
            index: j_max,
            dim: p_norms.len().min(b.len()),
        });
    }
    (0..=j_max)
        .map(|j| {
            let p = p_norms[j];
            if p.is_nan() || p <= T::zero() {
                return Err(Error::Invalid(format!("projection norm at {j} must be positive")));
            }
            Ok(p / b.row_abs_sum(j))
        })
        .collect()
}

/// Drop the tail of a one-sided row so that the discarded mass
/// `Σ_{k>K} |a_k|·‖P_k‖` stays below `bound`.
pub fn truncate_row_tail<T: Real>(
    row: &CoeffSeq<Complex<T>>,
    p_norm: impl Fn(usize) -> T,
    bound: T,
) -> CoeffSeq<Complex<T>> {
    let mut tail = T::zero();
    let mut keep = row.hi();
    while keep >= 0 {
        let w = row.get(keep).norm() * p_norm(keep as usize);
        if tail + w >= bound {
            break;
        }
        tail = tail + w;
        keep -= 1;
    }
    row.restrict(0, keep)
}
