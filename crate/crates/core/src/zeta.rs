//! Truncated multiple zeta / zeta-star values and Schur multiple zeta sums.
//!
//! The truncated evaluator is a prefix-sum dynamic program over
//! `m = 1..=N`, summed in ascending order so the float backend accumulates
//! small terms first. Integer exponents stay exact; real exponents route to
//! `f64`.

use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::enumerate::{preceq_set, ssyt_iter, BlockedSequence, PreceqVariant};
use crate::error::{Error, Result};
use crate::matrix::det_scalar;
use crate::scalar::{Exponent, Scalar};
use crate::shapes::{in_region_w, SkewShape, Tableau};

fn all_int(args: &[Exponent]) -> Option<Vec<i64>> {
    args.iter()
        .map(|e| match e {
            Exponent::Int(v) => Some(*v),
            Exponent::Real(_) => None,
        })
        .collect()
}

fn inv_pow_exact(m: u64, s: i64) -> BigRational {
    match Scalar::inv_power(m, &Exponent::Int(s)) {
        Scalar::Exact(r) => r,
        Scalar::Approx(_) => unreachable!(),
    }
}

fn trunc_exact(args: &[i64], n: u32, strict: bool) -> BigRational {
    if args.is_empty() {
        return BigRational::one();
    }
    if n == 0 || (strict && (args.len() as u32) > n) {
        return BigRational::zero();
    }
    let n = n as usize;
    // f[m] = sum over chains ending at m; the virtual start is m = 0
    let mut f = vec![BigRational::zero(); n + 1];
    f[0] = BigRational::one();
    for &s in args {
        let mut g = vec![BigRational::zero(); n + 1];
        let mut prefix = BigRational::zero();
        for m in 1..=n {
            prefix += &f[m - 1];
            let inner = if strict { prefix.clone() } else { &prefix + &f[m] };
            g[m] = inv_pow_exact(m as u64, s) * inner;
        }
        f = g;
    }
    let mut total = BigRational::zero();
    for m in 1..=n {
        total += &f[m];
    }
    total
}

fn trunc_f64(args: &[f64], n: u32, strict: bool) -> f64 {
    if args.is_empty() {
        return 1.0;
    }
    if n == 0 || (strict && (args.len() as u32) > n) {
        return 0.0;
    }
    let n = n as usize;
    let mut f = vec![0.0f64; n + 1];
    f[0] = 1.0;
    for &s in args {
        let mut g = vec![0.0f64; n + 1];
        let mut prefix = 0.0;
        let int_s = s.fract() == 0.0 && s.abs() < 1e9;
        let si = s as i32;
        for m in 1..=n {
            prefix += f[m - 1];
            let inner = if strict { prefix } else { prefix + f[m] };
            let p = if int_s {
                (m as f64).powi(-si)
            } else {
                (m as f64).powf(-s)
            };
            g[m] = p * inner;
        }
        f = g;
    }
    f[1..=n].iter().sum()
}

fn trunc(args: &[Exponent], n: u32, strict: bool) -> Scalar {
    match all_int(args) {
        Some(ints) => Scalar::Exact(trunc_exact(&ints, n, strict)),
        None => {
            let floats: Vec<f64> = args.iter().map(|e| e.to_f64()).collect();
            Scalar::Approx(trunc_f64(&floats, n, strict))
        }
    }
}

/// `ζ^N(s_1,…,s_n) = Σ_{m_1<…<m_n≤N} Π m_i^{-s_i}`; the empty tuple gives 1.
pub fn mzv_trunc(args: &[Exponent], n: u32) -> Scalar {
    trunc(args, n, true)
}

/// `ζ^{N★}`: same sum with weak inequalities.
pub fn mzsv_trunc(args: &[Exponent], n: u32) -> Scalar {
    trunc(args, n, false)
}

/// Sum over `SSYT_N` of the shape, the defining series. Exponential in the
/// tableau count; `cap` guards the enumeration.
pub fn smzv_direct(t: &Tableau<Exponent>, n: u32, cap: u64) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (count, m) in ssyt_iter(t.shape(), n).enumerate() {
        if count as u64 >= cap {
            return Err(Error::ResourceCap {
                needed: cap as u128 + 1,
                cap: cap as u128,
            });
        }
        let mut term = Scalar::one();
        for (&cell, &val) in m.entries() {
            term = term * Scalar::inv_power(val as u64, t.get(cell));
        }
        acc = acc + term;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpandVariant {
    /// Plain multiple zeta terms, all signs +1.
    Mzv,
    /// Zeta-star terms from the conjugate reading, signs `(-1)^{n-ℓ}`.
    Mzsv,
}

/// The signed multiple-zeta expansion of a Schur multiple zeta sum.
pub fn smzv_expand(t: &Tableau<Exponent>, variant: ExpandVariant) -> Vec<(i8, Vec<Exponent>)> {
    let (pv, signed) = match variant {
        ExpandVariant::Mzv => (PreceqVariant::Direct, false),
        ExpandVariant::Mzsv => (PreceqVariant::Conjugate, true),
    };
    preceq_set(t.shape(), pv)
        .into_iter()
        .map(|bs: BlockedSequence| {
            let sign = if signed { bs.sign() } else { 1 };
            (sign, bs.sums(t))
        })
        .collect()
}

/// Truncated Schur multiple zeta value through the expansion into multiple
/// zeta terms; agrees exactly with [`smzv_direct`] at every `N`.
pub fn smzv_trunc(t: &Tableau<Exponent>, n: u32) -> Scalar {
    let mut acc = Scalar::zero();
    for (sign, tuple) in smzv_expand(t, ExpandVariant::Mzv) {
        let v = mzv_trunc(&tuple, n);
        acc = if sign >= 0 { acc + v } else { acc - v };
    }
    acc
}

/// The tuple `(a_{start}, a_{start+1}, …)` of `len` consecutive diagonal
/// values read upward.
pub fn diag_tuple_up(diag: &std::collections::BTreeMap<i64, Exponent>, start: i64, len: i64) -> Result<Vec<Exponent>> {
    (start..start + len)
        .map(|k| diag.get(&k).copied().ok_or(Error::MissingDiagonal(k)))
        .collect()
}

/// The tuple `(a_{start}, a_{start-1}, …)` of `len` consecutive diagonal
/// values read downward.
pub fn diag_tuple_down(diag: &std::collections::BTreeMap<i64, Exponent>, start: i64, len: i64) -> Result<Vec<Exponent>> {
    ((start - len + 1)..=start)
        .rev()
        .map(|k| diag.get(&k).copied().ok_or(Error::MissingDiagonal(k)))
        .collect()
}

/// Entry `(i,j)` of the H-type determinant for a skew shape: the star value
/// of `λ_i - μ_j - i + j` diagonal values starting at `a_{μ_j - j + 1}`;
/// length 0 gives 1, negative length gives 0.
pub fn jt_matrix_h(
    shape: &SkewShape,
    diag: &std::collections::BTreeMap<i64, Exponent>,
    n: u32,
) -> Result<Vec<Vec<Scalar>>> {
    let r = shape.rows();
    let mut mat = vec![vec![Scalar::zero(); r]; r];
    for i in 1..=r {
        for j in 1..=r {
            let len = shape.outer().part(i) as i64 - shape.inner().part(j) as i64 - i as i64
                + j as i64;
            mat[i - 1][j - 1] = if len < 0 {
                Scalar::zero()
            } else if len == 0 {
                Scalar::one()
            } else {
                let start = shape.inner().part(j) as i64 - j as i64 + 1;
                mzsv_trunc(&diag_tuple_up(diag, start, len)?, n)
            };
        }
    }
    Ok(mat)
}

/// Entry `(i,j)` of the E-type determinant: the strict value of
/// `λ'_i - μ'_j - i + j` diagonal values read downward from
/// `a_{-μ'_j + j - 1}`.
pub fn jt_matrix_e(
    shape: &SkewShape,
    diag: &std::collections::BTreeMap<i64, Exponent>,
    n: u32,
) -> Result<Vec<Vec<Scalar>>> {
    let conj_outer = shape.outer().conjugate();
    let conj_inner = shape.inner().conjugate();
    let s = conj_outer.len();
    let mut mat = vec![vec![Scalar::zero(); s]; s];
    for i in 1..=s {
        for j in 1..=s {
            let len =
                conj_outer.part(i) as i64 - conj_inner.part(j) as i64 - i as i64 + j as i64;
            mat[i - 1][j - 1] = if len < 0 {
                Scalar::zero()
            } else if len == 0 {
                Scalar::one()
            } else {
                let start = -(conj_inner.part(j) as i64) + j as i64 - 1;
                mzv_trunc(&diag_tuple_down(diag, start, len)?, n)
            };
        }
    }
    Ok(mat)
}

/// Truncated Schur multiple zeta value of a diagonal tableau through the
/// H-type determinant; preferred for large `N` since the work is
/// `O(r² · depth · N)`.
pub fn smzv_trunc_det(t: &Tableau<Exponent>, n: u32) -> Result<Scalar> {
    let diag = t.diagonal_values()?;
    let mat = jt_matrix_h(t.shape(), &diag, n)?;
    Ok(det_scalar(&mat))
}

/// Crude tail bound `2^d (1 + ln N)^d / N` with `d` the cell count.
/// Heuristic; conservative on the integer-entry instances exercised here.
pub fn tail_bound(cells: usize, n: u32) -> f64 {
    let c = (2.0f64).powi(cells as i32);
    c * (1.0 + (n as f64).ln()).powi(cells as i32) / n as f64
}

/// Float estimate of the untruncated value: picks `N` from the tail bound,
/// then evaluates the truncation (determinant route when diagonal).
pub fn smzv_estimate(t: &Tableau<Exponent>, target_tol: f64) -> Result<(f64, u32)> {
    let entries_f: std::collections::BTreeMap<_, f64> = t
        .entries()
        .iter()
        .map(|(&c, e)| (c, e.to_f64()))
        .collect();
    let tf = Tableau::new(t.shape().clone(), entries_f)?;
    if !in_region_w(&tf) {
        return Err(Error::RegionViolation);
    }
    let d = t.cell_count();
    let mut n: u32 = 1000;
    let cap: u32 = 200_000_000;
    while tail_bound(d, n) > target_tol {
        if n >= cap {
            return Err(Error::ToleranceUnreachable {
                tol: target_tol,
                best: tail_bound(d, n),
            });
        }
        n = n.saturating_mul(2).min(cap);
    }
    let value = if t.is_diagonal() {
        // force the float backend at large N
        let diag: std::collections::BTreeMap<i64, Exponent> = t
            .diagonal_values()?
            .into_iter()
            .map(|(k, e)| (k, Exponent::Real(e.to_f64())))
            .collect();
        let td = Tableau::diagonal(t.shape().clone(), &diag)?;
        smzv_trunc_det(&td, n)?.to_f64()
    } else {
        let mut acc = 0.0f64;
        for (sign, tuple) in smzv_expand(t, ExpandVariant::Mzv) {
            let floats: Vec<f64> = tuple.iter().map(|e| e.to_f64()).collect();
            acc += sign as f64 * trunc_f64(&floats, n, true);
        }
        acc
    };
    Ok((value, n))
}
