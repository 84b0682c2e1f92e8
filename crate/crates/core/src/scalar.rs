//! Tagged numeric values: exact big rationals or `f64`.
//!
//! Mixed operations promote to the float side. The exact side never rounds,
//! so identity checks on the exact backend assert literal equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Approx(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Approx(x) => *x == 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Approx(_) => None,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Approx(x) => Scalar::Approx(x.abs()),
        }
    }

    /// 1/base^exp with an exact or float result depending on the exponent kind.
    pub fn inv_power(base: u64, exp: &Exponent) -> Scalar {
        match exp {
            Exponent::Int(e) => {
                if *e >= 0 {
                    let p = BigInt::from(base).pow(*e as u32);
                    Scalar::Exact(BigRational::new(BigInt::one(), p))
                } else {
                    let p = BigInt::from(base).pow((-e) as u32);
                    Scalar::Exact(BigRational::from_integer(p))
                }
            }
            Exponent::Real(x) => Scalar::Approx((base as f64).powf(-x)),
        }
    }
}

/// Exponent of a zeta argument: integers stay on the exact backend,
/// reals route to floats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Int(i64),
    Real(f64),
}

impl Exponent {
    pub fn to_f64(self) -> f64 {
        match self {
            Exponent::Int(e) => e as f64,
            Exponent::Real(x) => x,
        }
    }

    pub fn is_int(self) -> bool {
        matches!(self, Exponent::Int(_))
    }
}

impl From<i64> for Exponent {
    fn from(e: i64) -> Self {
        Exponent::Int(e)
    }
}

impl From<f64> for Exponent {
    fn from(x: f64) -> Self {
        Exponent::Real(x)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        match (self, rhs) {
            (Exponent::Int(a), Exponent::Int(b)) => Exponent::Int(a + b),
            (a, b) => Exponent::Real(a.to_f64() + b.to_f64()),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (a, b) => Scalar::Approx(a.to_f64() $op b.to_f64()),
                }
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self $op rhs.clone()
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Approx(x) => Scalar::Approx(-x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}", r),
            Scalar::Approx(x) => write!(f, "{:.15e}", x),
        }
    }
}
