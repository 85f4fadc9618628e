//! Numbers that are either exact rationals or `f64`.
//!
//! Masses built from counts stay exact so that table values such as
//! `190/723` compare bit-for-bit. Any arithmetic that mixes an exact and a
//! floating operand yields a floating result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseScalarError;

/// Arithmetic mode of a value or of a whole mass function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arithmetic {
    Exact,
    Float,
}

impl Arithmetic {
    /// Mode of a result combining operands of modes `self` and `other`.
    pub fn join(self, other: Arithmetic) -> Arithmetic {
        match (self, other) {
            (Arithmetic::Exact, Arithmetic::Exact) => Arithmetic::Exact,
            _ => Arithmetic::Float,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn zero(mode: Arithmetic) -> Scalar {
        match mode {
            Arithmetic::Exact => Scalar::Exact(BigRational::zero()),
            Arithmetic::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(mode: Arithmetic) -> Scalar {
        match mode {
            Arithmetic::Exact => Scalar::Exact(BigRational::one()),
            Arithmetic::Float => Scalar::Float(1.0),
        }
    }

    /// Exact ratio `numer / denom`. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Scalar {
        Scalar::Exact(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Exact ratio of two counts. Panics if `denom` is zero.
    pub fn count_ratio(numer: u64, denom: u64) -> Scalar {
        Scalar::Exact(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn float(x: f64) -> Scalar {
        Scalar::Float(x)
    }

    pub fn mode(&self) -> Arithmetic {
        match self {
            Scalar::Exact(_) => Arithmetic::Exact,
            Scalar::Float(_) => Arithmetic::Float,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    /// Converts to `mode`. Exact to float is lossy; float to exact uses the
    /// exact binary value of the `f64`.
    pub fn to_mode(&self, mode: Arithmetic) -> Scalar {
        match (self, mode) {
            (Scalar::Exact(_), Arithmetic::Exact) | (Scalar::Float(_), Arithmetic::Float) => {
                self.clone()
            }
            (Scalar::Exact(_), Arithmetic::Float) => Scalar::Float(self.to_f64()),
            (Scalar::Float(x), Arithmetic::Exact) => Scalar::Exact(
                BigRational::from_float(*x).unwrap_or_else(BigRational::zero),
            ),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_positive(),
            Scalar::Float(x) => *x > 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_negative(),
            Scalar::Float(x) => *x < 0.0,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Scalar::Exact(_) => true,
            Scalar::Float(x) => x.is_finite(),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    /// Equality within `tol` when either side is floating, exact otherwise.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= tol,
        }
    }

    /// Renders exact values as `p/q` (or `p` when `q = 1`) and floats with
    /// Rust's shortest round-trip formatting.
    pub fn to_exact_string(&self) -> String {
        match self {
            Scalar::Exact(r) => format_ratio(r),
            Scalar::Float(x) => format!("{x}"),
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(mode: Arithmetic, items: I) -> Scalar {
        items
            .into_iter()
            .fold(Scalar::zero(mode), |acc, x| &acc + x)
    }
}

fn format_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => f.write_str(&format_ratio(r)),
            Scalar::Float(x) => match f.precision() {
                Some(p) => write!(f, "{x:.p$}"),
                None => write!(f, "{x}"),
            },
        }
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p/q` and plain integers as exact values and anything with a
    /// decimal point or exponent as a float.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ParseScalarError(t.to_string());
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Scalar::Exact(BigRational::new(p, q)));
        }
        if let Ok(i) = t.parse::<BigInt>() {
            return Ok(Scalar::Exact(BigRational::from_integer(i)));
        }
        let x: f64 = t.parse().map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        Ok(Scalar::Float(x))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.partial_cmp(b),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$method(b)),
                    _ => Scalar::Float(self.to_f64().$method(rhs.to_f64())),
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Scalar {
        Scalar::Float(x)
    }
}
