//! Pythagorean complements and Smirnov symbols.
//!
//! Given boundary samples of a non-extreme `b`, the outer function `a` with
//! `|a|² + |b|² = 1` and `a(0) > 0` is `exp(G)`, where `G` is the analytic
//! completion of `u = ½ log(1 − |b|²)`: negative frequencies dropped, positive
//! ones doubled, the mean kept. Taylor coefficients of `a`, `1/a` and
//! `φ = b·(1/a)` then follow by exact series arithmetic.
//!
//! A node where `1 − |b|²` vanishes is a zero of `a` on the circle. Its order
//! `q` is read off from the neighbouring samples; when it is a small integer
//! the term `q·log|1 − e^{i(θ−θ₀)}|` is subtracted from `u` and restored as the
//! exact factor `(1 − z e^{−iθ₀})^q`, leaving a smooth remainder for the grid.
//! Other singular nodes get the plain neighbour mean.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::seq::{binomial_series, cauchy_product, series_exp, series_recip, CoeffSeq};
use crate::spaces::grid::CircleGrid;

/// `1 − |b|²` at or below this is treated as a boundary zero.
pub const SINGULAR_TOL: f64 = 1e-12;
/// `|b|` above `1 + EXTREME_TOL` is rejected outright.
pub const EXTREME_TOL: f64 = 1e-9;
/// Largest boundary-zero order that is factored out exactly.
const MAX_ZERO_ORDER: f64 = 8.0;

#[derive(Clone, Debug)]
pub struct PythagComplement<T: Real> {
    /// Taylor coefficients of the outer function `a`.
    pub a: CoeffSeq<Complex<T>>,
    /// Taylor coefficients of `φ = b/a`.
    pub phi: CoeffSeq<Complex<T>>,
    /// Taylor coefficients of `b`.
    pub b: CoeffSeq<Complex<T>>,
    /// Grid nodes that were treated as boundary zeros of `a`.
    pub singular_nodes: Vec<usize>,
}

/// `a = exp(G) · Π (1 − z e^{−iθ_s})^{q_s}` with `G` smooth.
struct OuterFactor<T: Real> {
    smooth: Vec<T>,
    zeros: Vec<(usize, usize)>,
}

/// Pythagorean complement of `b` from its boundary values on `grid`, with
/// all three series returned to degree `out_deg < 2^m / 2`.
pub fn pythag_complement<T: Real>(
    b_on_grid: &[Complex<T>],
    grid: &CircleGrid<T>,
    out_deg: usize,
) -> Result<PythagComplement<T>> {
    check_len(b_on_grid, grid, out_deg)?;
    let tol_ext = T::one() + T::of(EXTREME_TOL);
    let mut u = Vec::with_capacity(b_on_grid.len());
    let mut singular = Vec::new();
    for (i, b) in b_on_grid.iter().enumerate() {
        let m = b.norm();
        if m.is_nan() || m > tol_ext {
            return Err(Error::NotNonExtreme(i));
        }
        let g = T::one() - m * m;
        if g <= T::of(SINGULAR_TOL) {
            singular.push(i);
            u.push(T::nan());
        } else {
            u.push(T::of(0.5) * g.ln());
        }
    }
    let outer = factor_outer(u, &singular, grid)?;
    let b_hat = grid.dft(b_on_grid)?;
    let b = CoeffSeq::taylor(b_hat[..=out_deg].to_vec());
    finish(&outer, b, grid, out_deg, singular)
}

/// Inverse direction: from boundary values of `φ` recover `b = φ·a` with
/// `|a|² = 1/(1 + |φ|²)`. Non-finite samples of `φ` mark boundary poles.
pub fn b_from_phi<T: Real>(
    phi_on_grid: &[Complex<T>],
    grid: &CircleGrid<T>,
    out_deg: usize,
) -> Result<PythagComplement<T>> {
    check_len(phi_on_grid, grid, out_deg)?;
    let mut u = Vec::with_capacity(phi_on_grid.len());
    let mut singular = Vec::new();
    for (i, p) in phi_on_grid.iter().enumerate() {
        let m2 = p.norm_sqr();
        if m2.is_finite() {
            u.push(-T::of(0.5) * (T::one() + m2).ln());
        } else {
            singular.push(i);
            u.push(T::nan());
        }
    }
    let outer = factor_outer(u, &singular, grid)?;

    let size = grid.size();
    let a_vals = outer_on_grid(&outer, grid)?;
    let mut b_vals: Vec<Complex<T>> = phi_on_grid.iter().zip(&a_vals).map(|(p, a)| p * a).collect();
    for &i in &singular {
        b_vals[i] = even_extrapolation::<T, _>(|d| b_vals[(i as isize + d).rem_euclid(size as isize) as usize]);
    }
    let b_hat = grid.dft(&b_vals)?;
    let b = CoeffSeq::taylor(b_hat[..=out_deg].to_vec());
    finish(&outer, b, grid, out_deg, singular)
}

fn finish<T: Real>(
    outer: &OuterFactor<T>,
    b: CoeffSeq<Complex<T>>,
    grid: &CircleGrid<T>,
    out_deg: usize,
    singular_nodes: Vec<usize>,
) -> Result<PythagComplement<T>> {
    let g = completion(&outer.smooth, grid, out_deg, false)?;
    let zeros = zero_factor(&outer.zeros, grid, out_deg);
    let a = cauchy_product(&series_exp(&g, out_deg)?, &zeros, out_deg)?;
    let minus_one = Complex::new(-T::one(), T::zero());
    let inv_a = cauchy_product(
        &series_exp(&g.scale(&minus_one), out_deg)?,
        &series_recip(&zeros, out_deg)?,
        out_deg,
    )?;
    let phi = cauchy_product(&b, &inv_a, out_deg)?;
    Ok(PythagComplement {
        a,
        phi,
        b,
        singular_nodes,
    })
}

fn check_len<T: Real>(values: &[Complex<T>], grid: &CircleGrid<T>, out_deg: usize) -> Result<()> {
    if values.len() != grid.size() {
        return Err(Error::Invalid(format!(
            "expected {} grid values, got {}",
            grid.size(),
            values.len()
        )));
    }
    if out_deg >= grid.size() / 2 {
        return Err(Error::Invalid(format!(
            "output degree {out_deg} needs a grid larger than {}",
            grid.size()
        )));
    }
    Ok(())
}

/// `(4·mean(v(±1)) − mean(v(±2)))/3`, exact for even quadratics about the node.
fn even_extrapolation<T, V>(v: impl Fn(isize) -> V) -> V
where
    T: Real,
    V: std::ops::Add<Output = V> + std::ops::Sub<Output = V> + std::ops::Mul<T, Output = V> + Copy,
{
    (v(1) + v(-1)) * T::of(2.0 / 3.0) - (v(2) + v(-2)) * T::of(1.0 / 6.0)
}

/// Split `u` (NaN at singular nodes) into a smooth remainder and integer-order
/// boundary zeros.
fn factor_outer<T: Real>(mut u: Vec<T>, singular: &[usize], grid: &CircleGrid<T>) -> Result<OuterFactor<T>> {
    let size = u.len() as isize;
    let at = |u: &[T], i: isize| u[i.rem_euclid(size) as usize];
    let mut zeros = Vec::new();
    let mut fallback = Vec::new();
    for &i in singular {
        let s = i as isize;
        let (m1, p1) = (at(&u, s - 1), at(&u, s + 1));
        if !(m1.is_finite() && p1.is_finite()) {
            return Err(Error::NotNonExtreme(i));
        }
        let (m2, p2) = (at(&u, s - 2), at(&u, s + 2));
        let order = ((m2 + p2) - (m1 + p1)) * T::of(0.5) / T::LN_2();
        let rounded = order.round();
        if order.is_finite()
            && (order - rounded).abs() < T::of(0.05)
            && rounded >= T::one()
            && rounded <= T::of(MAX_ZERO_ORDER)
        {
            zeros.push((i, rounded.to_f64_lossy() as usize));
        } else {
            fallback.push((i, (m1 + p1) * T::of(0.5)));
        }
    }
    for (i, v) in fallback {
        u[i] = v;
    }
    for &(s, q) in &zeros {
        let q = T::of_usize(q);
        let theta0 = grid.node(s);
        for (i, ui) in u.iter_mut().enumerate() {
            if i != s && ui.is_finite() {
                let half = (grid.node(i) - theta0) * T::of(0.5);
                *ui = *ui - q * (T::of(2.0) * half.sin()).abs().ln();
            }
        }
    }
    for &(s, _) in &zeros {
        u[s] = even_extrapolation::<T, T>(|d| at(&u, s as isize + d));
    }
    Ok(OuterFactor { smooth: u, zeros })
}

/// Taylor coefficients `G_0 = û(0)`, `G_k = 2û(k)`; with `nyquist` the last
/// coefficient `û(M/2)` is kept once so that `Re G = u` at every node.
fn completion<T: Real>(u: &[T], grid: &CircleGrid<T>, deg: usize, nyquist: bool) -> Result<CoeffSeq<Complex<T>>> {
    let vals: Vec<Complex<T>> = u.iter().map(|&x| Complex::new(x, T::zero())).collect();
    let hat = grid.dft(&vals)?;
    let half = grid.size() / 2;
    let two = T::of(2.0);
    Ok(CoeffSeq::taylor_from_fn(deg, |k| {
        if k == 0 {
            Complex::new(hat[0].re, T::zero())
        } else if nyquist && k == half {
            hat[k]
        } else {
            hat[k] * two
        }
    }))
}

/// `Π (1 − z e^{−iθ_s})^{q_s}` to degree `deg`.
fn zero_factor<T: Real>(zeros: &[(usize, usize)], grid: &CircleGrid<T>, deg: usize) -> CoeffSeq<Complex<T>> {
    let mut acc = CoeffSeq::taylor(vec![Complex::new(T::one(), T::zero())]);
    for &(s, q) in zeros {
        let step = -Complex::from_polar(T::one(), -grid.node(s));
        let factor = binomial_series(&Complex::new(T::of_usize(q), T::zero()), &step, q);
        acc = cauchy_product(&acc, &factor, deg).expect("Taylor operands");
    }
    acc
}

/// Boundary values of `a` at every node.
fn outer_on_grid<T: Real>(outer: &OuterFactor<T>, grid: &CircleGrid<T>) -> Result<Vec<Complex<T>>> {
    let g = completion(&outer.smooth, grid, grid.size() / 2, true)?;
    let zeros = zero_factor(&outer.zeros, grid, grid.size() / 2);
    let log_a = grid.boundary_values(&g);
    let z = grid.boundary_values(&zeros);
    Ok(log_a.iter().zip(&z).map(|(l, f)| l.exp() * f).collect())
}
