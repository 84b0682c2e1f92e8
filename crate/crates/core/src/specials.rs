//! Exact π-power evaluation of constant-entry Schur multiple zeta values:
//! Bernoulli numbers, even zeta values, centralizer orders and symmetric
//! group characters feeding the power-sum expansion.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Exponent, Scalar};
use crate::shapes::{Partition, SkewShape, Tableau};
use crate::zeta::smzv_trunc_det;

/// An exact rational multiple of an even power of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPower {
    pub coeff: BigRational,
    pub power: usize,
}

impl PiPower {
    pub fn new(coeff: BigRational, power: usize) -> Result<Self> {
        if power % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "π power must be even, got {power}"
            )));
        }
        Ok(PiPower { coeff, power })
    }

    pub fn rational(coeff: BigRational) -> Self {
        PiPower { coeff, power: 0 }
    }

    pub fn one() -> Self {
        PiPower::rational(BigRational::one())
    }

    /// Addition is only defined for equal powers; a mismatch signals an
    /// implementation bug in the caller.
    pub fn try_add(&self, other: &PiPower) -> Result<PiPower> {
        if self.coeff.is_zero() {
            return Ok(other.clone());
        }
        if other.coeff.is_zero() {
            return Ok(self.clone());
        }
        if self.power != other.power {
            return Err(Error::PiPowerMismatch(self.power, other.power));
        }
        Ok(PiPower {
            coeff: &self.coeff + &other.coeff,
            power: self.power,
        })
    }

    pub fn mul(&self, other: &PiPower) -> PiPower {
        PiPower {
            coeff: &self.coeff * &other.coeff,
            power: self.power + other.power,
        }
    }

    pub fn scale(&self, c: &BigRational) -> PiPower {
        PiPower {
            coeff: &self.coeff * c,
            power: self.power,
        }
    }

    pub fn pow(&self, e: usize) -> PiPower {
        let mut acc = PiPower::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(self.power as i32)
    }
}

impl fmt::Display for PiPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 0 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}·π^{}", self.coeff, self.power)
        }
    }
}

fn big_binomial(n: usize, k: usize) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers with the `B_1 = -1/2` convention, by the recurrence
/// `Σ_k C(n+1, k) B_k = 0`.
pub fn bernoulli(n: usize) -> BigRational {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(big_binomial(m + 1, k)) * bk;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b[n].clone()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `ζ(2k) = (-1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)` as an exact π power.
pub fn zeta_even_exact(two_k: usize) -> Result<PiPower> {
    if two_k == 0 || two_k % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "even positive argument required, got {two_k}"
        )));
    }
    let k = two_k / 2;
    let b = bernoulli(two_k);
    let two_pow = BigInt::from(2u32).pow(two_k as u32);
    let mut coeff = b * BigRational::from_integer(two_pow)
        / BigRational::from_integer(factorial(two_k) * BigInt::from(2u32));
    if k % 2 == 0 {
        coeff = -coeff;
    }
    PiPower::new(coeff, two_k)
}

/// `z_μ = Π i^{m_i} m_i!`, the centralizer order of the cycle type μ.
pub fn centralizer_order(mu: &Partition) -> BigInt {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut acc = BigInt::one();
    for (i, m) in mult {
        acc *= BigInt::from(i).pow(m as u32) * factorial(m);
    }
    acc
}

/// Border strips of size `len` whose removal from `λ` leaves a partition,
/// as (remaining partition, strip height). Uses the beta-set description:
/// removing a strip of size ℓ replaces one beta number `b` by `b - ℓ`.
fn strip_removals(lambda: &Partition, len: usize) -> Vec<(Partition, usize)> {
    let m = lambda.len().max(1);
    let beta: Vec<i64> = (1..=m)
        .map(|i| lambda.part(i) as i64 + (m - i) as i64)
        .collect();
    let mut out = Vec::new();
    for &b in &beta {
        let nb = b - len as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut new_beta: Vec<i64> = beta
            .iter()
            .map(|&x| if x == b { nb } else { x })
            .collect();
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i0, &x)| (x - (m - i0 - 1) as i64) as usize)
            .collect();
        out.push((
            Partition::new(parts).expect("beta numbers give a partition"),
            height,
        ));
    }
    out
}

static CHAR_MEMO: Mutex<Option<HashMap<(Vec<usize>, Vec<usize>), BigInt>>> = Mutex::new(None);

/// Irreducible symmetric group character `χ^λ(μ)` by the Murnaghan–Nakayama
/// recursion, memoized.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::InvalidArgument(format!(
            "weight mismatch: |{}| vs |{}|",
            lambda, mu
        )));
    }
    Ok(character_rec(lambda, mu))
}

fn character_rec(lambda: &Partition, mu: &Partition) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.parts().to_vec(), mu.parts().to_vec());
    {
        let guard = CHAR_MEMO.lock().unwrap();
        if let Some(memo) = guard.as_ref() {
            if let Some(v) = memo.get(&key) {
                return v.clone();
            }
        }
    }
    let first = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix of a partition");
    let mut acc = BigInt::zero();
    for (remaining, height) in strip_removals(lambda, first) {
        let term = character_rec(&remaining, &rest);
        if height % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let mut guard = CHAR_MEMO.lock().unwrap();
    guard
        .get_or_insert_with(HashMap::new)
        .insert(key, acc.clone());
    acc
}

/// `ζ_λ({2k}^λ)` as an exact rational times `π^{2k|λ|}`, through the
/// power-sum expansion `Σ_μ χ^λ(μ)/z_μ Π ζ(2k μ_i)`.
pub fn smzv_constant_exact(lambda: &Partition, two_k: usize) -> Result<PiPower> {
    if two_k == 0 || two_k % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "even positive argument required, got {two_k}"
        )));
    }
    if two_k / 2 > 8 || lambda.weight() > 12 {
        return Err(Error::ResourceCap {
            needed: (two_k / 2).max(lambda.weight()) as u128,
            cap: 12,
        });
    }
    let n = lambda.weight();
    if n == 0 {
        return Ok(PiPower::one());
    }
    let mut acc = PiPower::new(BigRational::zero(), two_k * n)?;
    for mu in Partition::all_of_weight(n) {
        let chi = character(lambda, &mu)?;
        if chi.is_zero() {
            continue;
        }
        let mut prod = PiPower::one();
        for &part in mu.parts() {
            prod = prod.mul(&zeta_even_exact(two_k * part)?);
        }
        let z = centralizer_order(&mu);
        let factor = BigRational::new(chi, z);
        acc = acc.try_add(&prod.scale(&factor))?;
    }
    Ok(acc)
}

/// Float cross-check of the constant-entry value by the truncated series.
pub fn smzv_constant_series(lambda: &Partition, s: f64, n: u32) -> Result<Scalar> {
    if s <= 1.0 {
        return Err(Error::RegionViolation);
    }
    let shape = SkewShape::straight(lambda.clone());
    let diag: std::collections::BTreeMap<i64, Exponent> = shape
        .cells()
        .iter()
        .map(|&(i, j)| (j as i64 - i as i64, Exponent::Real(s)))
        .collect();
    let t = Tableau::diagonal(shape, &diag)?;
    smzv_trunc_det(&t, n)
}
