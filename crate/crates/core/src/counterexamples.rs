//! Finite reconstructions of the operator sequences that separate weak from
//! norm convergence (and weak* from norm convergence) in sequence spaces.
//!
//! Every vector involved is finitely supported, so truncating to dimension
//! `N` loses nothing and all reported quantities are exact. Vectors are stored
//! as arrays of length at most `N`; missing trailing entries are zero.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormTag {
    L1,
    L2,
    Linf,
}

/// `ℓ^p` truncated to the first `dim` coordinates, indexed from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncatedSequenceSpace {
    pub dim: usize,
    pub norm: NormTag,
}

impl TruncatedSequenceSpace {
    pub fn new(dim: usize, norm: NormTag) -> Self {
        Self { dim, norm }
    }

    /// `e_j`.
    pub fn basis<T: Real>(&self, j: usize) -> Result<Vec<Complex<T>>> {
        self.check(j)?;
        let mut v = vec![Complex::new(T::zero(), T::zero()); j + 1];
        v[j] = Complex::new(T::one(), T::zero());
        Ok(v)
    }

    /// `(1, 1, …, 1)`.
    pub fn ones<T: Real>(&self) -> Vec<Complex<T>> {
        vec![Complex::new(T::one(), T::zero()); self.dim]
    }

    /// Embed a finitely supported vector, refusing ones that do not fit.
    pub fn embed<T: Real>(&self, x: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        let last = support_end(x);
        if last > self.dim {
            return Err(Error::DimensionTooSmall {
                index: last - 1,
                dim: self.dim,
            });
        }
        Ok(x[..last].to_vec())
    }

    fn check(&self, j: usize) -> Result<()> {
        if j >= self.dim {
            Err(Error::DimensionTooSmall { index: j, dim: self.dim })
        } else {
            Ok(())
        }
    }

    pub fn norm_of<T: Real>(&self, x: &[Complex<T>]) -> T {
        norm_with(self.norm, x)
    }

    /// `S^n`; coordinates pushed past `dim` are dropped.
    pub fn shift<T: Real>(&self, x: &[Complex<T>], n: usize) -> Vec<Complex<T>> {
        let len = (x.len() + n).min(self.dim);
        let mut out = vec![Complex::new(T::zero(), T::zero()); len];
        if n < len {
            out[n..].copy_from_slice(&x[..len - n]);
        }
        out
    }

    /// `S^{*n}`: `(S^{*n}x)_i = x_{i+n}`.
    pub fn shift_adjoint<T: Real>(&self, x: &[Complex<T>], n: usize) -> Vec<Complex<T>> {
        x.get(n..).map_or_else(Vec::new, <[_]>::to_vec)
    }

    /// `P_k`: keep the first `k` coordinates.
    pub fn project<T: Real>(&self, x: &[Complex<T>], k: usize) -> Vec<Complex<T>> {
        x[..k.min(x.len())].to_vec()
    }
}

pub fn norm_with<T: Real>(tag: NormTag, x: &[Complex<T>]) -> T {
    match tag {
        NormTag::L1 => x.iter().fold(T::zero(), |a, c| a + c.norm()),
        NormTag::L2 => x.iter().fold(T::zero(), |a, c| a + c.norm_sqr()).sqrt(),
        NormTag::Linf => x.iter().fold(T::zero(), |a, c| a.max(c.norm())),
    }
}

/// Bilinear pairing `⟨x, y⟩ = Σ x_i y_i`.
pub fn pairing<T: Real>(x: &[Complex<T>], y: &[Complex<T>]) -> Complex<T> {
    x.iter()
        .zip(y)
        .fold(Complex::new(T::zero(), T::zero()), |a, (p, q)| a + p * q)
}

fn support_end<T: Real>(x: &[Complex<T>]) -> usize {
    x.iter().rposition(|c| c.norm_sqr() != T::zero()).map_or(0, |i| i + 1)
}

fn combine<T: Real>(a: &[Complex<T>], b: &[Complex<T>], sign: T) -> Vec<Complex<T>> {
    let zero = Complex::new(T::zero(), T::zero());
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).copied().unwrap_or(zero) + b.get(i).copied().unwrap_or(zero) * sign)
        .collect()
}

fn add<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Vec<Complex<T>> {
    combine(a, b, T::one())
}

fn sub<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Vec<Complex<T>> {
    combine(a, b, -T::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemarkExample {
    /// `T_n = I + S^n` on `ℓ²`.
    ShiftL2,
    /// `T_n = Σ_{j≤n} e_j⊗e_j + e_n⊗e_0` on `ℓ²`.
    RankoneL2,
    /// `T_n = P_n` on `ℓ¹`, tested against `φ₀ = (1, 1, …)`.
    ProjL1,
    /// `T_n = P_{2n}(S^n + I)` on `ℓ¹(ℕ)`; coordinate `e_i` is stored at index `i − 1`.
    MixedL1,
}

impl RemarkExample {
    pub const ALL: [RemarkExample; 4] = [Self::ShiftL2, Self::RankoneL2, Self::ProjL1, Self::MixedL1];

    pub fn name(self) -> &'static str {
        match self {
            Self::ShiftL2 => "shift_l2",
            Self::RankoneL2 => "rankone_l2",
            Self::ProjL1 => "proj_l1",
            Self::MixedL1 => "mixed_l1",
        }
    }

    pub fn norm_tag(self) -> NormTag {
        match self {
            Self::ShiftL2 | Self::RankoneL2 => NormTag::L2,
            Self::ProjL1 | Self::MixedL1 => NormTag::L1,
        }
    }

    /// Smallest admissible `n`.
    pub fn first_n(self) -> usize {
        match self {
            Self::MixedL1 => 1,
            _ => 0,
        }
    }

    /// `T_n x`.
    pub fn apply<T: Real>(self, space: &TruncatedSequenceSpace, n: usize, x: &[Complex<T>]) -> Vec<Complex<T>> {
        match self {
            Self::ShiftL2 => add(x, &space.shift(x, n)),
            Self::RankoneL2 => {
                let mut out = space.project(x, n + 1);
                if let Some(&x0) = x.first() {
                    out.resize(out.len().max(n + 1), Complex::new(T::zero(), T::zero()));
                    out[n] = out[n] + x0;
                }
                out
            }
            Self::ProjL1 => space.project(x, n),
            Self::MixedL1 => space.project(&add(x, &space.shift(x, n)), 2 * n),
        }
    }

    /// `T_n^* φ` on the dual side.
    pub fn adjoint_apply<T: Real>(self, space: &TruncatedSequenceSpace, n: usize, phi: &[Complex<T>]) -> Vec<Complex<T>> {
        match self {
            Self::ShiftL2 => add(phi, &space.shift_adjoint(phi, n)),
            Self::RankoneL2 => {
                let mut out = space.project(phi, n + 1);
                if let Some(&pn) = phi.get(n) {
                    out[0] = out[0] + pn;
                }
                out
            }
            Self::ProjL1 => space.project(phi, n),
            Self::MixedL1 => {
                let p = space.project(phi, 2 * n);
                add(&p, &space.shift_adjoint(&p, n))
            }
        }
    }

    /// The quantity that stays at 1: `‖T_n e_0 − e_0‖₂` for the ℓ² examples,
    /// `‖T_n^*φ₀ − φ₀‖_∞` for `proj_l1`, `‖T_n e_1 − e_1‖₁` for `mixed_l1`.
    pub fn norm_gap<T: Real>(self, space: &TruncatedSequenceSpace, n: usize) -> Result<T> {
        match self {
            Self::ProjL1 => {
                let phi0 = space.ones();
                Ok(norm_with(NormTag::Linf, &sub(&self.adjoint_apply(space, n, &phi0), &phi0)))
            }
            _ => {
                let e = space.basis(0)?;
                Ok(norm_with(self.norm_tag(), &sub(&self.apply(space, n, &e), &e)))
            }
        }
    }
}

impl fmt::Display for RemarkExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RemarkExample {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown example {s:?}")))
    }
}

/// `⟨T_n e_1 − e_1, φ₀⟩` for `mixed_l1`, which equals `⟨e_{n+1}, φ₀⟩ = 1`.
pub fn mixed_phi0_pairing<T: Real>(space: &TruncatedSequenceSpace, n: usize) -> Result<Complex<T>> {
    let e1 = space.basis(0)?;
    let diff = sub(&RemarkExample::MixedL1.apply(space, n, &e1), &e1);
    Ok(pairing(&diff, &space.ones()))
}

/// `‖T_n^*φ − φ‖_∞` for `mixed_l1` and each dual probe `φ`.
pub fn mixed_adjoint_errors<T: Real>(
    space: &TruncatedSequenceSpace,
    n: usize,
    phis: &[Vec<Complex<T>>],
) -> Result<Vec<T>> {
    phis.iter()
        .map(|phi| {
            let phi = space.embed(phi)?;
            let t = RemarkExample::MixedL1.adjoint_apply(space, n, &phi);
            Ok(norm_with(NormTag::Linf, &sub(&t, &phi)))
        })
        .collect()
}

pub const PAIRING_DECAY_TOL: f64 = 1e-6;
pub const NORM_GAP_FLOOR: f64 = 0.5;
pub const REMARK_COLUMNS: [&str; 4] = ["example", "n", "norm_gap", "max_pairing"];
pub const FLAG: &str = "weak-decay & norm-gap";

/// Default truncation dimension for a study up to `n_max`.
/// A probe pair `(x, y)` for the weak pairing `⟨T_n x − x, y⟩`.
pub type Probe<T> = (Vec<Complex<T>>, Vec<Complex<T>>);

pub fn default_dim(n_max: usize) -> usize {
    4 * n_max.max(1)
}

/// Rows for `n = first_n..=n_max` of the norm gap and the largest
/// `|⟨T_n x − x, y⟩|` over the probe pairs `(x, y)`, in dimension `4·n_max`.
pub fn remark_example<T: Real>(
    which: RemarkExample,
    n_max: usize,
    probes: &[Probe<T>],
) -> Result<Report> {
    let space = TruncatedSequenceSpace::new(default_dim(n_max), which.norm_tag());
    remark_example_in(&space, which, n_max, probes)
}

pub fn remark_example_in<T: Real>(
    space: &TruncatedSequenceSpace,
    which: RemarkExample,
    n_max: usize,
    probes: &[Probe<T>],
) -> Result<Report> {
    if 2 * n_max >= space.dim {
        return Err(Error::DimensionTooSmall {
            index: n_max,
            dim: space.dim,
        });
    }
    let probes: Vec<Probe<T>> = probes
        .iter()
        .map(|(x, y)| Ok((space.embed(x)?, space.embed(y)?)))
        .collect::<Result<_>>()?;

    let rows: Vec<Result<(usize, T, T)>> = (which.first_n()..=n_max)
        .into_par_iter()
        .map(|n| {
            let gap = which.norm_gap::<T>(space, n)?;
            let max_pair = probes.iter().fold(T::zero(), |m, (x, y)| {
                let d = sub(&which.apply(space, n, x), x);
                m.max(pairing(&d, y).norm())
            });
            Ok((n, gap, max_pair))
        })
        .collect();

    let mut report = Report::new(&REMARK_COLUMNS);
    report.set_meta("example", which.name());
    report.set_meta("dim", space.dim);
    report.set_meta("probes", probes.len());
    let mut min_gap = f64::INFINITY;
    let mut last_pair = f64::NAN;
    for row in rows {
        let (n, gap, pair) = row?;
        let (gap, pair) = (gap.to_f64_lossy(), pair.to_f64_lossy());
        min_gap = min_gap.min(gap);
        last_pair = pair;
        report.push_row(vec![which.name().into(), n.into(), gap.into(), pair.into()])?;
    }
    let flagged = !probes.is_empty() && last_pair < PAIRING_DECAY_TOL && min_gap > NORM_GAP_FLOOR;
    report.set_meta("flag", if flagged { FLAG } else { "none" });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(x: f64) -> C {
        C::new(x, 0.0)
    }

    fn probes() -> Vec<(Vec<C>, Vec<C>)> {
        vec![
            (vec![c(1.0), c(-2.0), c(0.5)], vec![c(0.0), c(3.0), c(1.0), c(1.0)]),
            (vec![c(0.0), C::new(0.0, 1.0)], vec![c(1.0); 6]),
        ]
    }

    #[test]
    fn index_maps() {
        let sp = TruncatedSequenceSpace::new(6, NormTag::L1);
        let x: Vec<C> = (1..=6).map(|i| c(i as f64)).collect();
        assert_eq!(sp.shift(&x, 2), vec![c(0.0), c(0.0), c(1.0), c(2.0), c(3.0), c(4.0)]);
        assert_eq!(sp.shift(&x[..1], 2), vec![c(0.0), c(0.0), c(1.0)]);
        assert_eq!(sp.shift_adjoint(&x, 2), vec![c(3.0), c(4.0), c(5.0), c(6.0)]);
        assert_eq!(sp.project(&x, 2), vec![c(1.0), c(2.0)]);
        assert_eq!(sub(&x[..2], &x[..3]), vec![c(0.0), c(0.0), c(-3.0)]);
        assert_eq!(sp.norm_of(&x), 21.0);
        assert_eq!(norm_with(NormTag::Linf, &x), 6.0);
        assert_eq!(norm_with(NormTag::L2, &[c(3.0), c(4.0)]), 5.0);
        assert!(sp.basis::<f64>(6).is_err());
        assert!(sp.embed(&[c(0.0); 7]).is_ok());
        assert!(sp.embed(&[c(1.0); 7]).is_err());
    }

    #[test]
    fn adjoints_are_transposes() {
        let sp = TruncatedSequenceSpace::new(16, NormTag::L2);
        let x: Vec<C> = (0..16).map(|i| C::new((i as f64).sin(), (i as f64 * 0.3).cos())).collect();
        let y: Vec<C> = (0..16).map(|i| C::new(1.0 / (1.0 + i as f64), i as f64 * 0.1)).collect();
        for ex in RemarkExample::ALL {
            for n in ex.first_n()..6 {
                let lhs = pairing(&ex.apply(&sp, n, &x), &y);
                let rhs = pairing(&x, &ex.adjoint_apply(&sp, n, &y));
                assert!((lhs - rhs).norm() < 1e-12, "{ex} n={n}");
            }
        }
    }

    #[test]
    fn gaps_are_exactly_one() {
        for ex in RemarkExample::ALL {
            let rep = remark_example(ex, 200, &probes()).unwrap();
            let gaps = rep.column_f64("norm_gap").unwrap();
            assert!(gaps.iter().all(|&g| g == 1.0), "{ex}");
            assert_eq!(rep.columns(), &REMARK_COLUMNS);
        }
    }

    #[test]
    fn finite_pairings_vanish() {
        for ex in [RemarkExample::ShiftL2, RemarkExample::RankoneL2] {
            let rep = remark_example(ex, 64, &probes()).unwrap();
            let pairs = rep.column_f64("max_pairing").unwrap();
            assert!(pairs[10..].iter().all(|&p| p == 0.0), "{ex}");
            assert!(pairs[1] > 0.0);
            assert_eq!(rep.meta("flag"), Some(FLAG));
        }
    }

    #[test]
    fn mixed_example() {
        let sp = TruncatedSequenceSpace::new(400, NormTag::L1);
        for n in 1..=100 {
            assert_eq!(mixed_phi0_pairing::<f64>(&sp, n).unwrap(), c(1.0));
        }
        let probe: Vec<C> = (1..=400).map(|i| c(0.5f64.powi(i))).collect();
        let errs: Vec<f64> = (1..=100).map(|n| mixed_adjoint_errors(&sp, n, std::slice::from_ref(&probe)).unwrap()[0]).collect();
        assert!(errs.windows(2).all(|w| w[1] <= w[0]));
        assert!(errs[99] < 1e-25);
    }

    #[test]
    fn parse_and_bounds() {
        assert_eq!("proj_l1".parse::<RemarkExample>().unwrap(), RemarkExample::ProjL1);
        assert!("nope".parse::<RemarkExample>().is_err());
        let sp = TruncatedSequenceSpace::new(10, NormTag::L2);
        assert!(remark_example_in::<f64>(&sp, RemarkExample::ShiftL2, 5, &[]).is_err());
        assert!(remark_example_in::<f64>(&sp, RemarkExample::ShiftL2, 4, &[]).is_ok());
    }
}
