//! Finitely supported coefficient sequences.
//!
//! A [`CoeffSeq`] stores either Taylor coefficients `f̂(0..=deg)` of a function
//! on the disk or two-sided Fourier coefficients `f̂(lo..=hi)` of a function on
//! the circle, as one dense array plus an index offset. All arithmetic here is
//! generic over [`Coefficient`], so the same routines run on complex floats and
//! on exact rationals.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqKind {
    /// One-sided, indices `0..`.
    Taylor,
    /// Two-sided, indices in `ℤ`.
    Fourier,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoeffSeq<S> {
    kind: SeqKind,
    lo: i64,
    coeffs: Vec<S>,
}

impl<S: Coefficient> CoeffSeq<S> {
    pub fn taylor(coeffs: Vec<S>) -> Self {
        Self {
            kind: SeqKind::Taylor,
            lo: 0,
            coeffs,
        }
    }

    /// Two-sided sequence whose first stored coefficient has index `lo`.
    /// A positive `lo` is padded down to 0 so that `lo <= 0` always holds.
    pub fn fourier(lo: i64, coeffs: Vec<S>) -> Self {
        if lo > 0 {
            let mut padded = vec![S::zero(); lo as usize];
            padded.extend(coeffs);
            return Self {
                kind: SeqKind::Fourier,
                lo: 0,
                coeffs: padded,
            };
        }
        Self {
            kind: SeqKind::Fourier,
            lo,
            coeffs,
        }
    }

    pub fn taylor_from_fn(deg: usize, f: impl FnMut(usize) -> S) -> Self {
        Self::taylor((0..=deg).map(f).collect())
    }

    /// Two-sided sequence on `lo..=hi`.
    pub fn fourier_from_fn(lo: i64, hi: i64, mut f: impl FnMut(i64) -> S) -> Self {
        let coeffs = if hi < lo {
            Vec::new()
        } else {
            (lo..=hi).map(&mut f).collect()
        };
        Self::fourier(lo, coeffs)
    }

    pub fn zero(kind: SeqKind) -> Self {
        Self {
            kind,
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    /// `z^k` as a Taylor sequence.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![S::zero(); k + 1];
        c[k] = S::one();
        Self::taylor(c)
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Largest stored index; `lo - 1` when empty.
    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient at index `k`, zero outside the stored range.
    pub fn get(&self, k: i64) -> S {
        let i = k - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            S::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &S)> + '_ {
        let lo = self.lo;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (lo + i as i64, c))
    }

    /// Same coefficients, reinterpreted as two-sided.
    pub fn to_fourier(&self) -> Self {
        Self {
            kind: SeqKind::Fourier,
            lo: self.lo,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Coefficients with index in `lo..=hi` kept, everything else dropped.
    pub fn restrict(&self, lo: i64, hi: i64) -> Self {
        let lo = match self.kind {
            SeqKind::Taylor => lo.max(0),
            SeqKind::Fourier => lo,
        };
        let from = lo.max(self.lo);
        let to = hi.min(self.hi());
        let coeffs = if to < from {
            Vec::new()
        } else {
            (from..=to).map(|k| self.get(k)).collect()
        };
        match self.kind {
            SeqKind::Taylor => {
                let mut c = vec![S::zero(); from.max(0) as usize];
                c.extend(coeffs);
                Self::taylor(c)
            }
            SeqKind::Fourier => Self::fourier(from, coeffs),
        }
    }

    /// Taylor truncation `s_deg(f)`.
    pub fn truncate(&self, deg: usize) -> Self {
        self.restrict(0, deg as i64)
    }

    pub fn map<R: Coefficient>(&self, f: impl FnMut(&S) -> R) -> CoeffSeq<R> {
        CoeffSeq {
            kind: self.kind,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// `a·self + b·other`. The result is two-sided if either input is.
    pub fn linear_combination(&self, a: &S, other: &Self, b: &S) -> Self {
        let kind = if self.kind == SeqKind::Fourier || other.kind == SeqKind::Fourier {
            SeqKind::Fourier
        } else {
            SeqKind::Taylor
        };
        if self.is_empty() {
            return other.scale(b).with_kind(kind);
        }
        if other.is_empty() {
            return self.scale(a).with_kind(kind);
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let coeffs = (lo..=hi)
            .map(|k| a.clone() * self.get(k) + b.clone() * other.get(k))
            .collect();
        Self { kind, lo, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.linear_combination(&S::one(), other, &S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.linear_combination(&S::one(), other, &(S::zero() - S::one()))
    }

    fn with_kind(mut self, kind: SeqKind) -> Self {
        self.kind = kind;
        self
    }

    /// Taylor coefficients of `f'`.
    pub fn derivative(&self) -> Result<Self> {
        self.require_taylor("derivative")?;
        if self.coeffs.len() <= 1 {
            return Ok(Self::taylor(vec![S::zero()]));
        }
        let c = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * S::from_usize(i + 1).expect("index fits"))
            .collect();
        Ok(Self::taylor(c))
    }

    fn require_taylor(&self, op: &str) -> Result<()> {
        match self.kind {
            SeqKind::Taylor => Ok(()),
            SeqKind::Fourier => Err(Error::KindMismatch(format!(
                "{op} needs a Taylor sequence"
            ))),
        }
    }
}

impl<T: Real> CoeffSeq<Complex<T>> {
    /// `Σ f̂(k) r^{|k|} e^{ikθ}`; exact for the finite sum, so `r = 1` is allowed.
    pub fn evaluate(&self, r: T, theta: T) -> Result<Complex<T>> {
        if !(r >= T::zero() && r <= T::one()) {
            return Err(Error::BadRadius(r.to_f64_lossy()));
        }
        let z = Complex::from_polar(r, theta);
        Ok(self.evaluate_at(z))
    }

    /// Evaluate at a point `z` with `|z| <= 1`, pairing negative indices with `z̄`.
    pub fn evaluate_at(&self, z: Complex<T>) -> Complex<T> {
        let zero = Complex::new(T::zero(), T::zero());
        // nonnegative part by Horner in z
        let mut pos = zero;
        for k in (self.lo.max(0)..=self.hi()).rev() {
            pos = pos * z + self.get(k);
        }
        if self.lo >= 0 {
            return pos;
        }
        // negative part: Σ_{m>=1} f̂(-m) z̄^m
        let zc = z.conj();
        let mut neg = zero;
        for m in (1..=-self.lo).rev() {
            neg = (neg + self.get(-m)) * zc;
        }
        pos + neg
    }

    /// Max-norm distance between coefficient arrays.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        (lo..=hi)
            .map(|k| (self.get(k) - other.get(k)).norm())
            .fold(T::zero(), T::max)
    }

    /// `(Σ |f̂(k)|²)^{1/2}`.
    pub fn l2_coeff_norm(&self) -> T {
        let sq: Vec<T> = self.coeffs.iter().map(|c| c.norm_sqr()).collect();
        crate::scalar::pairwise_sum(&sq).sqrt()
    }

    /// `Σ |f̂(k)|`.
    pub fn l1_coeff_norm(&self) -> T {
        let abs: Vec<T> = self.coeffs.iter().map(|c| c.norm()).collect();
        crate::scalar::pairwise_sum(&abs)
    }
}

/// Coefficients `0..=out_deg` of `a·b`.
pub fn cauchy_product<S: Coefficient>(
    a: &CoeffSeq<S>,
    b: &CoeffSeq<S>,
    out_deg: usize,
) -> Result<CoeffSeq<S>> {
    a.require_taylor("cauchy_product")?;
    b.require_taylor("cauchy_product")?;
    let ac = a.coeffs();
    let bc = b.coeffs();
    let out = (0..=out_deg)
        .map(|k| {
            let i_lo = k.saturating_sub(bc.len().saturating_sub(1));
            let i_hi = k.min(ac.len().saturating_sub(1));
            let mut acc = S::zero();
            if !ac.is_empty() && !bc.is_empty() {
                for i in i_lo..=i_hi {
                    acc = acc + ac[i].clone() * bc[k - i].clone();
                }
            }
            acc
        })
        .collect();
    Ok(CoeffSeq::taylor(out))
}

/// Coefficients `0..=out_deg` of `1/f`.
pub fn series_recip<S: Coefficient>(f: &CoeffSeq<S>, out_deg: usize) -> Result<CoeffSeq<S>> {
    f.require_taylor("series_recip")?;
    let f0 = f.get(0);
    if f0.is_zero() {
        return Err(Error::NonInvertible);
    }
    let inv0 = S::one() / f0;
    let fc = f.coeffs();
    let mut g: Vec<S> = Vec::with_capacity(out_deg + 1);
    g.push(inv0.clone());
    for k in 1..=out_deg {
        let mut acc = S::zero();
        for i in 1..=k.min(fc.len().saturating_sub(1)) {
            acc = acc + fc[i].clone() * g[k - i].clone();
        }
        g.push(S::zero() - inv0.clone() * acc);
    }
    Ok(CoeffSeq::taylor(g))
}

/// Coefficients `0..=out_deg` of `exp(f)` via `k·g_k = Σ_{i=1..k} i·f_i·g_{k-i}`.
pub fn series_exp<S: Coefficient>(f: &CoeffSeq<S>, out_deg: usize) -> Result<CoeffSeq<S>> {
    f.require_taylor("series_exp")?;
    let g0 = f.get(0).exp_scalar().ok_or(Error::ExpNotRepresentable)?;
    let fc = f.coeffs();
    let weighted: Vec<S> = (0..=out_deg.min(fc.len().saturating_sub(1)))
        .map(|i| fc[i].clone() * S::from_usize(i).expect("index fits"))
        .collect();
    let mut g: Vec<S> = Vec::with_capacity(out_deg + 1);
    g.push(g0);
    for k in 1..=out_deg {
        let mut acc = S::zero();
        for i in 1..=k.min(weighted.len().saturating_sub(1)) {
            acc = acc + weighted[i].clone() * g[k - i].clone();
        }
        g.push(acc / S::from_usize(k).expect("index fits"));
    }
    Ok(CoeffSeq::taylor(g))
}

/// Coefficients of `(1 + sign·z)^beta` up to `out_deg`.
pub fn binomial_series<S: Coefficient>(beta: &S, sign: &S, out_deg: usize) -> CoeffSeq<S> {
    let mut c: Vec<S> = Vec::with_capacity(out_deg + 1);
    c.push(S::one());
    for k in 1..=out_deg {
        let km1 = S::from_usize(k - 1).expect("index fits");
        let k_s = S::from_usize(k).expect("index fits");
        let next = c[k - 1].clone() * (beta.clone() - km1) * sign.clone() / k_s;
        c.push(next);
    }
    CoeffSeq::taylor(c)
}

/// `√((1+z)/(1−z)) = (1+z)^{1/2}(1−z)^{−1/2}` to degree `out_deg`.
pub fn powhalf_ratio<S: Coefficient>(out_deg: usize) -> CoeffSeq<S> {
    let one = S::one();
    let two = S::from_u8(2).expect("2 fits");
    let half = one.clone() / two;
    let minus_half = S::zero() - half.clone();
    let minus_one = S::zero() - one.clone();
    let plus = binomial_series(&half, &one, out_deg);
    let minus = binomial_series(&minus_half, &minus_one, out_deg);
    cauchy_product(&plus, &minus, out_deg).expect("both operands are Taylor")
}
