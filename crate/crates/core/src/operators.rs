//! Summation operators `S_n^A` acting diagonally on coefficients, the
//! classical kernels, and convergence studies.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::{Cell, Report};
use crate::scalar::Real;
use crate::seq::{CoeffSeq, SeqKind};
use crate::spaces::grid::CircleGrid;
use crate::spaces::norms;
use crate::summatrix::SummMatrix;

/// Row `n` of `m` matched to the kind of `f`.
fn row_for<T: Real>(m: &SummMatrix<T>, n: usize, kind: SeqKind) -> Result<CoeffSeq<Complex<T>>> {
    match kind {
        SeqKind::Taylor => m.row(n),
        SeqKind::Fourier => m.row_two_sided(n),
    }
}

fn diagonal<T: Real>(
    row: &CoeffSeq<Complex<T>>,
    f: &CoeffSeq<Complex<T>>,
    conj: bool,
) -> CoeffSeq<Complex<T>> {
    let lo = row.lo().max(f.lo());
    let hi = row.hi().min(f.hi());
    let entry = |k| {
        let a = row.get(k);
        if conj {
            a.conj()
        } else {
            a
        }
    };
    match f.kind() {
        SeqKind::Taylor => CoeffSeq::taylor_from_fn(hi.max(-1) as usize, |k| {
            let k = k as i64;
            if k < lo {
                Complex::new(T::zero(), T::zero())
            } else {
                entry(k) * f.get(k)
            }
        })
        .restrict(0, hi),
        SeqKind::Fourier => CoeffSeq::fourier_from_fn(lo, hi, |k| entry(k) * f.get(k)),
    }
}

/// `S_n^A f`: coefficient `k` becomes `a_nk f̂(k)`.
pub fn apply_row<T: Real>(m: &SummMatrix<T>, n: usize, f: &CoeffSeq<Complex<T>>) -> Result<CoeffSeq<Complex<T>>> {
    let row = row_for(m, n, f.kind())?;
    Ok(diagonal(&row, f, false))
}

/// `(S_n^A)^* g`. The Banach-space adjoint has the same diagonal action; the
/// Hilbert-space adjoint conjugates the entries.
pub fn adjoint_apply<T: Real>(
    m: &SummMatrix<T>,
    n: usize,
    g: &CoeffSeq<Complex<T>>,
    hilbert: bool,
) -> Result<CoeffSeq<Complex<T>>> {
    let row = row_for(m, n, g.kind())?;
    Ok(diagonal(&row, g, hilbert))
}

/// `D_n`: all ones on `|k| <= n`.
pub fn dirichlet_kernel<T: Real>(n: usize) -> CoeffSeq<Complex<T>> {
    let n = n as i64;
    CoeffSeq::fourier_from_fn(-n, n, |_| Complex::new(T::one(), T::zero()))
}

/// Fejér kernel `σ_n(δ₁)`, coefficients `1 − |k|/(n+1)`.
pub fn fejer_kernel<T: Real>(n: usize) -> CoeffSeq<Complex<T>> {
    let cesaro = SummMatrix::cesaro(T::one()).expect("order 1 is valid");
    apply_row(&cesaro, n, &dirichlet_kernel(n)).expect("two-sided Cesàro rows exist")
}

type CoeffFn<T> = Arc<dyn Fn(i64) -> Complex<T> + Send + Sync>;
type BoundaryFn<T> = Arc<dyn Fn(T) -> Complex<T> + Send + Sync>;

/// A function known through its coefficients, optionally with exact boundary
/// values for grid-based error measurement.
#[derive(Clone)]
pub struct TestFunction<T: Real> {
    name: String,
    kind: SeqKind,
    coeff: CoeffFn<T>,
    boundary: Option<BoundaryFn<T>>,
    degree: Option<usize>,
}

impl<T: Real> fmt::Debug for TestFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("degree", &self.degree)
            .field("has_boundary", &self.boundary.is_some())
            .finish()
    }
}

impl<T: Real> TestFunction<T> {
    pub fn new(
        name: impl Into<String>,
        kind: SeqKind,
        coeff: impl Fn(i64) -> Complex<T> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            kind,
            coeff: Arc::new(coeff),
            boundary: None,
            degree: None,
        }
    }

    /// Attach exact boundary values `θ ↦ f(e^{iθ})`.
    pub fn with_boundary(mut self, f: impl Fn(T) -> Complex<T> + Send + Sync + 'static) -> Self {
        self.boundary = Some(Arc::new(f));
        self
    }

    /// A finitely supported function; exact at every truncation past its degree.
    pub fn polynomial(name: impl Into<String>, seq: CoeffSeq<Complex<T>>) -> Self {
        let degree = seq.lo().unsigned_abs().max(seq.hi().max(0) as u64) as usize;
        let kind = seq.kind();
        let s = seq.clone();
        let mut tf = Self::new(name, kind, move |k| s.get(k));
        tf.degree = Some(degree);
        tf
    }

    /// `|θ|` on `[−π, π]`: `f̂(0) = π/2`, `f̂(k) = −2/(πk²)` for odd `k`.
    pub fn abs_theta() -> Self {
        Self::new("abs_theta", SeqKind::Fourier, |k| {
            let pi = T::PI();
            if k == 0 {
                Complex::new(pi / T::of(2.0), T::zero())
            } else if k % 2 != 0 {
                let kk = T::of((k * k) as f64);
                Complex::new(-T::of(2.0) / (pi * kk), T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
        .with_boundary(|theta: T| {
            let pi = T::PI();
            let tau = T::TAU();
            let mut t = theta % tau;
            if t < T::zero() {
                t = t + tau;
            }
            if t > pi {
                t = tau - t;
            }
            Complex::new(t, T::zero())
        })
    }

    /// The point mass `δ₁`, all Fourier coefficients equal to 1.
    pub fn dirac() -> Self {
        Self::new("dirac", SeqKind::Fourier, |_| Complex::new(T::one(), T::zero()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn coeff(&self, k: i64) -> Complex<T> {
        (self.coeff)(k)
    }

    /// Coefficients on `0..=deg` (Taylor) or `−deg..=deg` (Fourier).
    pub fn coefficients(&self, deg: usize) -> CoeffSeq<Complex<T>> {
        match self.kind {
            SeqKind::Taylor => CoeffSeq::taylor_from_fn(deg, |k| self.coeff(k as i64)),
            SeqKind::Fourier => {
                let d = deg as i64;
                CoeffSeq::fourier_from_fn(-d, d, |k| self.coeff(k))
            }
        }
    }

    pub fn boundary_value(&self, theta: T) -> Option<Complex<T>> {
        self.boundary.as_ref().map(|b| b(theta))
    }
}

/// Norm used by convergence studies.
#[derive(Clone, Debug)]
pub enum SpaceNorm<T: Real> {
    Sup(CircleGrid<T>),
    L1(CircleGrid<T>),
    Lp(CircleGrid<T>, T),
    Hardy(CircleGrid<T>, T),
    Bergman(CircleGrid<T>, T),
    Bloch(CircleGrid<T>),
}

impl<T: Real> SpaceNorm<T> {
    pub fn name(&self) -> String {
        match self {
            SpaceNorm::Sup(_) => "sup".into(),
            SpaceNorm::L1(_) => "L1".into(),
            SpaceNorm::Lp(_, p) => format!("L{p}"),
            SpaceNorm::Hardy(_, p) => format!("H{p}"),
            SpaceNorm::Bergman(_, p) => format!("A{p}"),
            SpaceNorm::Bloch(_) => "Bloch".into(),
        }
    }

    pub fn grid(&self) -> &CircleGrid<T> {
        match self {
            SpaceNorm::Sup(g)
            | SpaceNorm::L1(g)
            | SpaceNorm::Lp(g, _)
            | SpaceNorm::Hardy(g, _)
            | SpaceNorm::Bergman(g, _)
            | SpaceNorm::Bloch(g) => g,
        }
    }

    /// Whether the series kind can be measured in this norm.
    pub fn accepts(&self, kind: SeqKind) -> bool {
        match self {
            SpaceNorm::Sup(_) | SpaceNorm::L1(_) | SpaceNorm::Lp(..) => true,
            _ => kind == SeqKind::Taylor,
        }
    }

    pub fn norm(&self, f: &CoeffSeq<Complex<T>>) -> Result<T> {
        if !self.accepts(f.kind()) {
            return Err(Error::KindMismatch(format!(
                "{} norm needs a Taylor sequence",
                self.name()
            )));
        }
        match self {
            SpaceNorm::Sup(g) => Ok(norms::sup_norm(f, g)),
            SpaceNorm::L1(g) => Ok(norms::l1_norm(f, g)),
            SpaceNorm::Lp(g, p) => norms::lp_norm(f, g, *p),
            SpaceNorm::Hardy(g, p) => norms::hardy_norm(f, *p, g),
            SpaceNorm::Bergman(g, p) => norms::bergman_norm(f, *p, g),
            SpaceNorm::Bloch(g) => norms::bloch_norm(f, g),
        }
    }

    /// Norm of boundary samples, for the norms that only see the circle.
    fn norm_of_boundary(&self, values: &[Complex<T>]) -> Option<T> {
        match self {
            SpaceNorm::Sup(_) => Some(norms::sup_of_values(values)),
            SpaceNorm::L1(_) => Some(norms::lp_of_values(values, T::one())),
            SpaceNorm::Lp(_, p) | SpaceNorm::Hardy(_, p) => Some(norms::lp_of_values(values, *p)),
            _ => None,
        }
    }
}

/// Divergence rule: growth is flagged when the last error exceeds this
/// multiple of the error at a quarter of the last `n`.
pub const GROWTH_FACTOR: f64 = 2.0;

pub const STUDY_COLUMNS: [&str; 5] = ["n", "error", "norm_name", "method", "alpha"];

fn alpha_cell<T: Real>(m: &SummMatrix<T>) -> Cell {
    Cell::Float(m.alpha().map_or(f64::NAN, |a| a.to_f64_lossy()))
}

/// Rows `(n, ‖S_n^A f − f‖)`. When `f` has exact boundary values and the norm
/// lives on the circle, the error is measured against them on the grid;
/// otherwise against the truncation of `f` at four times the largest `n`.
pub fn convergence_study<T: Real>(
    space: &SpaceNorm<T>,
    m: &SummMatrix<T>,
    f: &TestFunction<T>,
    ns: &[usize],
) -> Result<Report> {
    if !space.accepts(f.kind()) {
        return Err(Error::KindMismatch(format!(
            "{} norm cannot measure a {:?} series",
            space.name(),
            f.kind()
        )));
    }
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let n_max = ns.last().copied().unwrap_or(0);
    let ref_deg = f.degree().unwrap_or(4 * n_max.max(1));
    let reference = f.coefficients(ref_deg);
    let grid = space.grid();
    let exact_boundary: Option<Vec<Complex<T>>> = match (space.norm_of_boundary(&[]), f.boundary.as_ref()) {
        (Some(_), Some(b)) => Some(grid.sample(|t| b(t))),
        _ => None,
    };

    let errors: Vec<Result<T>> = ns
        .par_iter()
        .map(|&n| {
            let row = row_for(m, n, f.kind())?;
            let support = row.lo().unsigned_abs().max(row.hi().max(0) as u64) as usize;
            let sn = diagonal(&row, &f.coefficients(support), false);
            match &exact_boundary {
                Some(exact) => {
                    let vals = grid.boundary_values(&sn);
                    let diff: Vec<Complex<T>> = vals.iter().zip(exact).map(|(a, b)| a - b).collect();
                    Ok(space.norm_of_boundary(&diff).expect("boundary norm"))
                }
                None => space.norm(&sn.sub(&reference)),
            }
        })
        .collect();

    let mut report = Report::new(&STUDY_COLUMNS);
    let mut pts = Vec::with_capacity(ns.len());
    for (&n, err) in ns.iter().zip(errors) {
        let e = err?.to_f64_lossy();
        pts.push((n, e));
        report.push_row(vec![
            n.into(),
            e.into(),
            space.name().into(),
            m.method_name().into(),
            alpha_cell(m),
        ])?;
    }
    annotate_trend(&mut report, &pts);
    report.set_meta("test_function", f.name());
    Ok(report)
}

/// Rows `(n, ‖S_n^A f‖)`, e.g. Lebesgue constants for `f = δ₁`.
pub fn norm_study<T: Real>(
    space: &SpaceNorm<T>,
    m: &SummMatrix<T>,
    f: &TestFunction<T>,
    ns: &[usize],
) -> Result<Report> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let norms: Vec<Result<T>> = ns
        .par_iter()
        .map(|&n| {
            let row = row_for(m, n, f.kind())?;
            let support = row.lo().unsigned_abs().max(row.hi().max(0) as u64) as usize;
            space.norm(&diagonal(&row, &f.coefficients(support), false))
        })
        .collect();
    let mut report = Report::new(&["n", "norm", "norm_name", "method", "alpha"]);
    let mut pts = Vec::with_capacity(ns.len());
    for (&n, v) in ns.iter().zip(norms) {
        let v = v?.to_f64_lossy();
        pts.push((n, v));
        report.push_row(vec![
            n.into(),
            v.into(),
            space.name().into(),
            m.method_name().into(),
            alpha_cell(m),
        ])?;
    }
    annotate_trend(&mut report, &pts);
    report.set_meta("test_function", f.name());
    Ok(report)
}

/// Least-squares slope of `log y` against `log n` over positive points.
pub fn loglog_slope(pts: &[(usize, f64)]) -> Option<f64> {
    let xy: Vec<(f64, f64)> = pts
        .iter()
        .filter(|(n, y)| *n > 0 && *y > 0.0 && y.is_finite())
        .map(|&(n, y)| ((n as f64).ln(), y.ln()))
        .collect();
    if xy.len() < 2 {
        return None;
    }
    let len = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / len;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        None
    } else {
        Some(sxy / sxx)
    }
}

/// `value(n_max) > GROWTH_FACTOR · value(n)` for the largest `n <= n_max/4`.
pub fn growth_flag(pts: &[(usize, f64)]) -> Option<bool> {
    let &(n_max, last) = pts.last()?;
    let &(_, earlier) = pts.iter().rev().find(|(n, _)| *n <= n_max / 4)?;
    Some(last > GROWTH_FACTOR * earlier)
}

fn annotate_trend(report: &mut Report, pts: &[(usize, f64)]) {
    report.set_meta(
        "loglog_slope",
        loglog_slope(pts).map_or("NaN".to_string(), crate::report::format_float),
    );
    report.set_meta(
        "growth",
        match growth_flag(pts) {
            Some(true) => "flagged",
            Some(false) => "not-flagged",
            None => "undetermined",
        },
    );
    report.set_meta(
        "growth_rule",
        format!("value(n_max) > {GROWTH_FACTOR} * value(n <= n_max/4)"),
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type C = Complex<f64>;

    fn ones_fourier(n: i64) -> CoeffSeq<C> {
        CoeffSeq::fourier_from_fn(-n, n, |_| C::new(1.0, 0.0))
    }

    fn random_taylor(rng: &mut ChaCha8Rng, deg: usize) -> CoeffSeq<C> {
        CoeffSeq::taylor_from_fn(deg, |_| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
    }

    #[test]
    fn apply_examples() {
        let c1 = SummMatrix::cesaro(1.0).unwrap();
        let out = apply_row(&c1, 2, &ones_fourier(5)).unwrap();
        assert_eq!(out.lo(), -2);
        assert_eq!(out.hi(), 2);
        let want = [1.0 / 3.0, 2.0 / 3.0, 1.0, 2.0 / 3.0, 1.0 / 3.0];
        for (c, w) in out.coeffs().iter().zip(want) {
            assert_abs_diff_eq!(c.re, w, epsilon = 1e-15);
        }
        let c0 = SummMatrix::cesaro(0.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = random_taylor(&mut rng, 10);
        assert_eq!(apply_row(&c0, 3, &f).unwrap(), f.truncate(3));
        // α = 0 with n past the degree is the identity
        assert_eq!(apply_row(&c0, 25, &f).unwrap(), f);
    }

    #[test]
    fn one_sided_rows_reject_two_sided_input() {
        let f = CoeffSeq::taylor(vec![C::new(1.0, 0.0), C::new(-2.0, 0.0), C::new(1.0, 0.0)]);
        let w = crate::summatrix::wiener_matrix(&f, &[1.0, 2.0, 3.0, 4.0], 3).unwrap();
        assert!(matches!(apply_row(&w, 2, &ones_fourier(2)), Err(Error::KindMismatch(_))));
        let dense = SummMatrix::dense(vec![CoeffSeq::taylor(vec![C::new(1.0, 0.0)])]);
        assert!(apply_row(&dense, 0, &ones_fourier(1)).is_err());
        let two = SummMatrix::dense(vec![ones_fourier(1)]);
        assert!(apply_row(&two, 0, &CoeffSeq::<C>::monomial(0)).is_err());
    }

    #[test]
    fn adjoint_examples() {
        let c = SummMatrix::cesaro(0.5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = random_taylor(&mut rng, 12);
        assert_eq!(adjoint_apply(&c, 7, &g, true).unwrap(), adjoint_apply(&c, 7, &g, false).unwrap());
        let dense = SummMatrix::dense(vec![CoeffSeq::taylor(vec![C::new(0.0, 0.0), C::new(0.0, 1.0)])]);
        let z = CoeffSeq::<C>::monomial(1);
        let out = adjoint_apply(&dense, 0, &z, true).unwrap();
        assert_eq!(out.get(1), C::new(0.0, -1.0));
        let out = adjoint_apply(&dense, 0, &z, false).unwrap();
        assert_eq!(out.get(1), C::new(0.0, 1.0));
    }

    #[test]
    fn kernels() {
        assert_eq!(dirichlet_kernel::<f64>(0), CoeffSeq::fourier(0, vec![C::new(1.0, 0.0)]));
        let f2 = fejer_kernel::<f64>(2);
        for k in -2i64..=2 {
            assert_abs_diff_eq!(f2.get(k).re, 1.0 - k.abs() as f64 / 3.0, epsilon = 1e-15);
        }
        let c1 = SummMatrix::cesaro(1.0).unwrap();
        for n in (0..=512).step_by(37) {
            let direct = apply_row(&c1, n, &dirichlet_kernel(n)).unwrap();
            assert_eq!(fejer_kernel::<f64>(n), direct);
            for k in -(n as i64)..=(n as i64) {
                assert_abs_diff_eq!(direct.get(k).re, 1.0 - k.abs() as f64 / (n as f64 + 1.0), epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn fejer_kernel_is_nonnegative() {
        let grid = CircleGrid::<f64>::with_log2_size(12).unwrap();
        for n in [0usize, 1, 2, 7, 31, 100, 256] {
            let v = grid.boundary_values(&fejer_kernel(n));
            assert!(v.iter().all(|c| c.re >= -1e-10), "n={n}");
        }
    }

    #[test]
    fn linearity_and_duality() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let m = SummMatrix::cesaro(1.5).unwrap();
        for _ in 0..10 {
            let f = random_taylor(&mut rng, 64);
            let g = random_taylor(&mut rng, 64);
            let (a, b) = (C::new(0.3, -1.2), C::new(2.0, 0.5));
            let lhs = apply_row(&m, 40, &f.linear_combination(&a, &g, &b)).unwrap();
            let rhs = apply_row(&m, 40, &f).unwrap().linear_combination(&a, &apply_row(&m, 40, &g).unwrap(), &b);
            assert!(lhs.max_abs_diff(&rhs) < 1e-14);

            let sf = apply_row(&m, 40, &f).unwrap();
            let sg = adjoint_apply(&m, 40, &g, false).unwrap();
            let circle = norms::circle_pairing(&sf, &g) - norms::circle_pairing(&f, &sg);
            let bergman = norms::bergman_pairing(&sf, &g) - norms::bergman_pairing(&f, &sg);
            assert!(circle.norm() < 1e-12 && bergman.norm() < 1e-12);
        }
    }

    #[test]
    fn coefficientwise_convergence_is_monotone() {
        let f = CoeffSeq::taylor(vec![C::new(1.0, 0.0), C::new(-2.0, 0.0), C::new(0.5, 0.0), C::new(3.0, 0.0)]);
        for &alpha in &[0.5, 1.0, 2.0] {
            let m = SummMatrix::cesaro(alpha).unwrap();
            let mut prev = [0.0; 4];
            for n in 3..400 {
                let s = apply_row(&m, n, &f).unwrap();
                for (k, p) in prev.iter_mut().enumerate() {
                    let ratio = s.get(k as i64).re / f.get(k as i64).re;
                    assert!(ratio >= *p && ratio <= 1.0 + 1e-15);
                    *p = ratio;
                }
            }
            assert!(prev.iter().all(|r| (1.0 - r) < 0.02));
        }
    }

    #[test]
    fn polynomial_error_vanishes_past_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = random_taylor(&mut rng, 9);
        let tf = TestFunction::polynomial("poly", f);
        let m = SummMatrix::cesaro(0.0).unwrap();
        let space = SpaceNorm::Hardy(CircleGrid::with_log2_size(8).unwrap(), 2.0);
        let rep = convergence_study(&space, &m, &tf, &[2, 9, 16, 64]).unwrap();
        let errs = rep.column_f64("error").unwrap();
        assert!(errs[0] > 0.0);
        assert!(errs[1..].iter().all(|&e| e == 0.0));
        assert_eq!(rep.columns(), &STUDY_COLUMNS);
    }

    #[test]
    fn fejer_on_abs_theta_converges() {
        let space = SpaceNorm::Sup(CircleGrid::with_log2_size(12).unwrap());
        let m = SummMatrix::cesaro(1.0).unwrap();
        let rep = convergence_study(&space, &m, &TestFunction::abs_theta(), &[16, 32, 64, 128, 256]).unwrap();
        let errs = rep.column_f64("error").unwrap();
        assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
        assert_eq!(rep.meta("growth"), Some("not-flagged"));
    }

    #[test]
    fn dirichlet_norms_grow() {
        let space = SpaceNorm::L1(CircleGrid::with_log2_size(12).unwrap());
        let m = SummMatrix::cesaro(0.0).unwrap();
        let rep = norm_study(&space, &m, &TestFunction::dirac(), &[1, 4, 16, 64, 256]).unwrap();
        let vals = rep.column_f64("norm").unwrap();
        assert!(vals.windows(2).all(|w| w[1] > w[0]));
        let fej = norm_study(&space, &SummMatrix::cesaro(1.0).unwrap(), &TestFunction::dirac(), &[1, 16, 256]).unwrap();
        for v in fej.column_f64("norm").unwrap() {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn study_kind_mismatch() {
        let space = SpaceNorm::Bergman(CircleGrid::with_log2_size(6).unwrap(), 2.0);
        let m = SummMatrix::cesaro(1.0).unwrap();
        assert!(convergence_study(&space, &m, &TestFunction::abs_theta(), &[4]).is_err());
    }

    #[test]
    fn trend_helpers() {
        let pts: Vec<(usize, f64)> = (1..=6).map(|e| (1usize << e, 3.0 / (1u64 << e) as f64)).collect();
        assert_abs_diff_eq!(loglog_slope(&pts).unwrap(), -1.0, epsilon = 1e-12);
        assert_eq!(growth_flag(&pts), Some(false));
        let up: Vec<(usize, f64)> = (1..=6).map(|e| (1usize << e, e as f64 * 10.0)).collect();
        assert_eq!(growth_flag(&up), Some(false));
        let fast: Vec<(usize, f64)> = (1..=6).map(|e| (1usize << e, (1u64 << e) as f64)).collect();
        assert_eq!(growth_flag(&fast), Some(true));
    }
}
