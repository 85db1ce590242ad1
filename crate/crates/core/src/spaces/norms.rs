//! Norms on the circle and the disk, evaluated on finitely supported data.
//!
//! Circle norms are taken at `r = 1` on the grid; since every input is a
//! (trigonometric) polynomial this is a lower bound that converges as the
//! grid is refined.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{pairwise_sum, Real};
use crate::seq::{CoeffSeq, SeqKind};
use crate::spaces::grid::CircleGrid;
use crate::spaces::hb::HbSpace;

fn check_p<T: Real>(p: T) -> Result<()> {
    if p >= T::one() && p.is_finite() {
        Ok(())
    } else {
        Err(Error::BadExponent(p.to_f64_lossy()))
    }
}

fn require_taylor<T: Real>(f: &CoeffSeq<Complex<T>>, what: &str) -> Result<()> {
    match f.kind() {
        SeqKind::Taylor => Ok(()),
        SeqKind::Fourier => Err(Error::KindMismatch(format!("{what} needs a Taylor sequence"))),
    }
}

/// `max_i |v_i|`.
pub fn sup_of_values<T: Real>(values: &[Complex<T>]) -> T {
    values.iter().map(|c| c.norm()).fold(T::zero(), T::max)
}

/// `(mean_i |v_i|^p)^{1/p}`.
pub fn lp_of_values<T: Real>(values: &[Complex<T>], p: T) -> T {
    if values.is_empty() {
        return T::zero();
    }
    let pw: Vec<T> = if p == T::one() {
        values.iter().map(|c| c.norm()).collect()
    } else if p == T::of(2.0) {
        values.iter().map(|c| c.norm_sqr()).collect()
    } else {
        values.iter().map(|c| c.norm().powf(p)).collect()
    };
    let mean = pairwise_sum(&pw) / T::of_usize(values.len());
    if p == T::one() {
        mean
    } else {
        mean.powf(T::one() / p)
    }
}

/// `max` over grid nodes of `|f|` on the unit circle.
pub fn sup_norm<T: Real>(f: &CoeffSeq<Complex<T>>, grid: &CircleGrid<T>) -> T {
    sup_of_values(&grid.boundary_values(f))
}

/// `2^{-m} Σ_i |f(θ_i)|`.
pub fn l1_norm<T: Real>(f: &CoeffSeq<Complex<T>>, grid: &CircleGrid<T>) -> T {
    lp_of_values(&grid.boundary_values(f), T::one())
}

/// `(2^{-m} Σ_i |f(θ_i)|^p)^{1/p}`.
pub fn lp_norm<T: Real>(f: &CoeffSeq<Complex<T>>, grid: &CircleGrid<T>, p: T) -> Result<T> {
    check_p(p)?;
    Ok(lp_of_values(&grid.boundary_values(f), p))
}

/// `‖f‖_{H^p}`. For polynomials the supremum over `r` sits at `r = 1`;
/// `p = 2` is computed from the coefficients directly.
pub fn hardy_norm<T: Real>(f: &CoeffSeq<Complex<T>>, p: T, grid: &CircleGrid<T>) -> Result<T> {
    check_p(p)?;
    require_taylor(f, "hardy_norm")?;
    if p == T::of(2.0) {
        return Ok(f.l2_coeff_norm());
    }
    lp_norm(f, grid, p)
}

/// `∫₀¹ ‖f_r‖_{H^p}^p 2r dr` by the grid's radial Gauss–Legendre rule.
pub fn bergman_norm_pow<T: Real>(f: &CoeffSeq<Complex<T>>, p: T, grid: &CircleGrid<T>) -> Result<T> {
    check_p(p)?;
    require_taylor(f, "bergman_norm")?;
    let terms: Vec<T> = grid
        .radial()
        .iter()
        .map(|&(r, w)| {
            let mean = lp_of_values(&grid.values(f, r), p);
            let mean_p = if p == T::one() { mean } else { mean.powf(p) };
            w * T::of(2.0) * r * mean_p
        })
        .collect();
    Ok(pairwise_sum(&terms))
}

/// `‖f‖_{A^p}`.
pub fn bergman_norm<T: Real>(f: &CoeffSeq<Complex<T>>, p: T, grid: &CircleGrid<T>) -> Result<T> {
    Ok(bergman_norm_pow(f, p, grid)?.powf(T::one() / p))
}

/// `(Σ |f̂(k)|²/(k+1))^{1/2}`, the exact `A²` norm.
pub fn bergman2_from_coeffs<T: Real>(f: &CoeffSeq<Complex<T>>) -> T {
    let v: Vec<T> = f
        .iter()
        .map(|(k, c)| c.norm_sqr() / T::of((k + 1) as f64))
        .collect();
    pairwise_sum(&v).sqrt()
}

/// Lower bound for `|f(0)| + sup_D (1−|z|²)|f'(z)|`: a radial sweep over the
/// grid angles followed by a local pattern search around the best point,
/// stopped once a full refinement changes the value by less than `1e-6`.
pub fn bloch_norm<T: Real>(f: &CoeffSeq<Complex<T>>, grid: &CircleGrid<T>) -> Result<T> {
    require_taylor(f, "bloch_norm")?;
    let d = f.derivative()?;
    let head = f.get(0).norm();
    if d.coeffs().iter().all(|c| c.norm() == T::zero()) {
        return Ok(head);
    }
    let weight = |r: T, theta: T| -> T {
        let z = Complex::from_polar(r, theta);
        (T::one() - r * r) * d.evaluate_at(z).norm()
    };

    let sweep = (4 * d.len()).max(256);
    let mut radii: Vec<T> = (0..sweep)
        .map(|j| T::of_usize(j) / T::of_usize(sweep))
        .collect();
    radii.extend(grid.radial().iter().map(|&(r, _)| r));

    let mut best = (T::zero(), T::zero(), T::neg_infinity());
    for &r in &radii {
        let vals = grid.values(&d, r);
        let scale = T::one() - r * r;
        for (i, v) in vals.iter().enumerate() {
            let w = scale * v.norm();
            if w > best.2 {
                best = (r, grid.node(i), w);
            }
        }
    }

    let mut step_r = T::one() / T::of_usize(sweep);
    let mut step_t = T::TAU() / T::of_usize(grid.size());
    let mut last_round = best.2;
    let tiny = T::of(1e-12);
    for _ in 0..200 {
        let mut moved = true;
        while moved {
            moved = false;
            for (dr, dt) in [(1i32, 0i32), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let r = best.0 + step_r * T::of(f64::from(dr));
                if r < T::zero() || r >= T::one() {
                    continue;
                }
                let t = best.1 + step_t * T::of(f64::from(dt));
                let w = weight(r, t);
                if w > best.2 {
                    best = (r, t, w);
                    moved = true;
                }
            }
        }
        let change = best.2 - last_round;
        last_round = best.2;
        step_r = step_r * T::of(0.5);
        step_t = step_t * T::of(0.5);
        if change < T::of(1e-6) && step_r < tiny {
            break;
        }
    }
    Ok(head + best.2)
}

/// Spaces with a computable `‖P_k‖` ladder.
#[derive(Clone, Debug)]
pub enum SpaceId<T: Real> {
    /// `C(T)` with `e_k = e^{ikt}`, `ψ_k = e^{ikt} dt/2π`.
    Continuous,
    /// `H¹` with the sup norm standing in for the BMOA norm of `ψ_k`.
    HardyOneBmoaProxy,
    /// `A¹` with `ψ_k = z^k` in the Bloch space and the Bergman pairing.
    BergmanOneBloch,
    /// `H(b)` with `e_k = z^k`, `ψ_k = k_{0,k}`.
    DeBrangesRovnyak(HbSpace<T>),
}

impl<T: Real> SpaceId<T> {
    pub fn name(&self) -> &'static str {
        match self {
            SpaceId::Continuous => "C(T)",
            SpaceId::HardyOneBmoaProxy => "H1/BMOA-proxy",
            SpaceId::BergmanOneBloch => "A1/Bloch",
            SpaceId::DeBrangesRovnyak(_) => "H(b)",
        }
    }
}

/// `‖P_k‖ = ‖e_k‖‖ψ_k‖/|⟨e_k,ψ_k⟩|`.
pub fn projection_norm<T: Real>(space: &SpaceId<T>, k: usize, grid: &CircleGrid<T>) -> Result<T> {
    let zk = CoeffSeq::<Complex<T>>::monomial(k);
    match space {
        SpaceId::Continuous => {
            let e = sup_norm(&zk.to_fourier(), grid);
            let psi = l1_norm(&zk.to_fourier(), grid);
            Ok(e * psi)
        }
        SpaceId::HardyOneBmoaProxy => {
            let e = hardy_norm(&zk, T::one(), grid)?;
            let psi = sup_norm(&zk, grid);
            Ok(e * psi)
        }
        SpaceId::BergmanOneBloch => {
            let e = bergman_norm(&zk, T::one(), grid)?;
            let psi = bloch_norm(&zk, grid)?;
            let pairing = bergman_pairing(&zk, &zk).norm();
            Ok(e * psi / pairing)
        }
        SpaceId::DeBrangesRovnyak(hb) => {
            // ⟨z^k, k_{0,k}⟩_b = 1 by the reproducing property.
            let e = hb.monomial_norm(k)?;
            let psi = hb.kernel0_norm(k).unwrap_or(Ok(T::one()))?;
            Ok(e * psi)
        }
    }
}

/// Circle pairing `Σ_k f̂(k) ĝ(k)`, i.e. `∫ f(ζ) g(ζ̄) dθ/2π`.
pub fn circle_pairing<T: Real>(f: &CoeffSeq<Complex<T>>, g: &CoeffSeq<Complex<T>>) -> Complex<T> {
    f.iter().fold(Complex::new(T::zero(), T::zero()), |acc, (k, c)| acc + c * g.get(k))
}

/// Bergman pairing `Σ_k f̂(k) ĝ(k)/(k+1)`, i.e. `(1/π)∫ f(z) g(z̄) dA`.
pub fn bergman_pairing<T: Real>(f: &CoeffSeq<Complex<T>>, g: &CoeffSeq<Complex<T>>) -> Complex<T> {
    f.iter().fold(Complex::new(T::zero(), T::zero()), |acc, (k, c)| {
        acc + c * g.get(k) / T::of((k + 1) as f64)
    })
}
