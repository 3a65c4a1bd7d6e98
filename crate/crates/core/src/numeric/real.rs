use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{PfsError, Result};

/// Real scalar carried at a fixed binary precision.
///
/// Binary operations produce a result at the precision of the left operand.
/// Division by an exact zero panics; use [`BigReal::try_div`] where the
/// divisor is data-dependent.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(Float);

impl BigReal {
    pub fn from_float(f: Float) -> Self {
        BigReal(f)
    }

    pub fn zero(bits: u32) -> Self {
        BigReal(Float::new(bits))
    }

    pub fn one(bits: u32) -> Self {
        Self::from_i64(1, bits)
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        BigReal(Float::with_val(bits, v))
    }

    pub fn from_u64(v: u64, bits: u32) -> Self {
        BigReal(Float::with_val(bits, v))
    }

    /// Exact binary value of `v`; `0.3` becomes 0.299999999999999988897…
    pub fn from_f64(v: f64, bits: u32) -> Self {
        BigReal(Float::with_val(bits, v))
    }

    /// `num / den` rounded once.
    pub fn from_ratio(num: i64, den: i64, bits: u32) -> Self {
        assert!(den != 0, "zero denominator");
        BigReal(Float::with_val(bits, Rational::from((num, den))))
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        BigReal(Float::with_val(bits, r))
    }

    pub fn from_integer(i: &Integer, bits: u32) -> Self {
        BigReal(Float::with_val(bits, i))
    }

    /// Parses a decimal literal (`"0.3"`, `"-1.5e-3"`, `"3/4"`) at full
    /// precision rather than through `f64`.
    pub fn parse(s: &str, bits: u32) -> Result<Self> {
        let t = s.trim();
        let err = || PfsError::Parse { input: s.to_string() };
        if let Some((n, d)) = t.split_once('/') {
            let n = BigReal::parse(n, bits)?;
            let d = BigReal::parse(d, bits)?;
            return n.try_div(&d).map_err(|_| err());
        }
        let parsed = Float::parse(t).map_err(|_| err())?;
        Ok(BigReal(Float::with_val(bits, parsed)))
    }

    pub fn pi(bits: u32) -> Self {
        BigReal(Float::with_val(bits, Constant::Pi))
    }

    /// Euler–Mascheroni constant γ.
    pub fn euler_gamma(bits: u32) -> Self {
        BigReal(Float::with_val(bits, Constant::Euler))
    }

    pub fn ln2(bits: u32) -> Self {
        BigReal(Float::with_val(bits, Constant::Log2))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    /// Same value re-rounded to `bits`.
    pub fn with_prec(&self, bits: u32) -> Self {
        BigReal(Float::with_val(bits, &self.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Nearest integer, if it fits in an `i64`.
    pub fn round_to_i64(&self) -> Option<i64> {
        self.0.to_integer().and_then(|i| i.to_i64())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.abs_ref()))
    }

    pub fn sqrt(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.sqrt_ref()))
    }

    pub fn exp(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.exp_ref()))
    }

    /// Natural logarithm; errors for non-positive input.
    pub fn ln(&self) -> Result<Self> {
        if self.0.is_zero() || self.0.is_sign_negative() {
            return Err(PfsError::Domain(format!(
                "logarithm of non-positive real {}",
                self.to_f64()
            )));
        }
        Ok(BigReal(Float::with_val(self.prec(), self.0.ln_ref())))
    }

    pub fn sin(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.sin_ref()))
    }

    pub fn cos(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.cos_ref()))
    }

    pub fn sinh(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.sinh_ref()))
    }

    pub fn cosh(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.cosh_ref()))
    }

    /// `atan2(self, x)`, i.e. the argument of `x + i·self`.
    pub fn atan2(&self, x: &BigReal) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.atan2_ref(&x.0)))
    }

    pub fn hypot(&self, other: &BigReal) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.hypot_ref(&other.0)))
    }

    pub fn powi(&self, n: i32) -> Self {
        BigReal(Float::with_val(self.prec(), (&self.0).pow(n)))
    }

    pub fn pow(&self, e: &BigReal) -> Self {
        BigReal(Float::with_val(self.prec(), (&self.0).pow(&e.0)))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.0.is_zero(), "reciprocal of exact zero");
        BigReal(Float::with_val(self.prec(), self.0.recip_ref()))
    }

    pub fn try_div(&self, rhs: &BigReal) -> Result<Self> {
        if rhs.0.is_zero() {
            return Err(PfsError::DivisionByZero);
        }
        Ok(BigReal(Float::with_val(self.prec(), &self.0 / &rhs.0)))
    }

    pub fn max(self, other: BigReal) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Scientific notation with `sig` significant digits, e.g.
    /// `1.6449340668e0`. Deterministic for a given value and `sig`.
    pub fn to_sci_string(&self, sig: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        self.0.to_string_radix(10, Some(sig.max(1)))
    }

    /// log10 of the magnitude, `-inf` for zero.
    pub fn log10_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let l = Float::with_val(64, self.0.abs_ref()).log10();
        l.to_f64()
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci_string(25))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = self.prec() as f64;
        let sig = (bits / std::f64::consts::LOG2_10).floor() as usize;
        write!(f, "{}", self.to_sci_string(f.precision().unwrap_or(sig)))
    }
}

impl PartialEq<f64> for BigReal {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for BigReal {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<'a, 'b> $tr<&'b BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &'b BigReal) -> BigReal {
                BigReal(Float::with_val(self.prec(), &self.0 $op &rhs.0))
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &'b BigReal) -> BigReal {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                self.$m(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);

impl<'b> Div<&'b BigReal> for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &'b BigReal) -> BigReal {
        self.try_div(rhs).expect("division by exact zero")
    }
}

impl Div<BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        &self / &rhs
    }
}

impl<'b> Div<&'b BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: &'b BigReal) -> BigReal {
        &self / rhs
    }
}

impl Div<BigReal> for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        self / &rhs
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(Float::with_val(self.prec(), -&self.0))
    }
}

impl AddAssign<&BigReal> for BigReal {
    fn add_assign(&mut self, rhs: &BigReal) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: &BigReal) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&BigReal> for BigReal {
    fn mul_assign(&mut self, rhs: &BigReal) {
        self.0 *= &rhs.0;
    }
}
