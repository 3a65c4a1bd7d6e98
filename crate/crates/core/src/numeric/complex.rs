use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{PfsError, Result};

use super::BigReal;

/// Complex scalar built from two [`BigReal`] parts.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let im = BigReal::zero(re.prec());
        BigComplex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        Self::from_real(BigReal::zero(bits))
    }

    pub fn one(bits: u32) -> Self {
        Self::from_real(BigReal::one(bits))
    }

    pub fn i(bits: u32) -> Self {
        BigComplex::new(BigReal::zero(bits), BigReal::one(bits))
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        Self::from_real(BigReal::from_i64(v, bits))
    }

    pub fn from_f64(re: f64, im: f64, bits: u32) -> Self {
        BigComplex::new(BigReal::from_f64(re, bits), BigReal::from_f64(im, bits))
    }

    pub fn from_ratio(num: i64, den: i64, bits: u32) -> Self {
        Self::from_real(BigReal::from_ratio(num, den, bits))
    }

    /// Parses `re`, `re+imi`, `re-imi`, `imi` or `i`; each part may be a
    /// decimal or a fraction `p/q`.
    pub fn parse(s: &str, bits: u32) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || PfsError::Parse { input: s.to_string() };
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::from_real(BigReal::parse(&t, bits)?));
        };
        // Split at the last sign that is not part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx];
            if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let imag = |p: &str| -> Result<BigReal> {
            match p {
                "" | "+" => Ok(BigReal::one(bits)),
                "-" => Ok(BigReal::from_i64(-1, bits)),
                _ => BigReal::parse(p, bits),
            }
        };
        match split {
            Some(idx) => {
                let re = BigReal::parse(&body[..idx], bits).map_err(|_| err())?;
                let im = imag(&body[idx..]).map_err(|_| err())?;
                Ok(BigComplex::new(re, im))
            }
            None => {
                let im = imag(body).map_err(|_| err())?;
                Ok(BigComplex::new(BigReal::zero(bits), im))
            }
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    pub fn abs(&self) -> BigReal {
        self.re.hypot(&self.im)
    }

    pub fn norm_sqr(&self) -> BigReal {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Principal argument in (−π, π].
    pub fn arg(&self) -> BigReal {
        self.im.atan2(&self.re)
    }

    /// Magnitude as `f64`; only for stopping rules and diagnostics.
    pub fn abs_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    pub fn scale(&self, s: &BigReal) -> Self {
        BigComplex::new(&self.re * s, &self.im * s)
    }

    pub fn mul_i(&self) -> Self {
        BigComplex::new(-&self.im, self.re.clone())
    }

    pub fn try_recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(PfsError::DivisionByZero);
        }
        // Scale by the larger component to stay clear of overflow.
        if self.re.abs() >= self.im.abs() {
            let r = &self.im / &self.re;
            let d = &self.re + &r * &self.im;
            Ok(BigComplex::new(d.recip(), -(r / &d)))
        } else {
            let r = &self.re / &self.im;
            let d = &self.re * &r + &self.im;
            Ok(BigComplex::new(&r / &d, -d.recip()))
        }
    }

    pub fn recip(&self) -> Self {
        self.try_recip().expect("reciprocal of exact zero")
    }

    pub fn try_div(&self, rhs: &BigComplex) -> Result<Self> {
        if rhs.is_zero() {
            return Err(PfsError::DivisionByZero);
        }
        if rhs.im.is_zero() {
            return Ok(BigComplex::new(&self.re / &rhs.re, &self.im / &rhs.re));
        }
        Ok(self * &rhs.try_recip()?)
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        BigComplex::new(&m * self.im.cos(), &m * self.im.sin())
    }

    /// Principal logarithm; the branch cut follows the sign of the zero
    /// imaginary part on the negative real axis.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(PfsError::Pole {
                function: "log",
                at: "0".into(),
            });
        }
        Ok(BigComplex::new(self.abs().ln()?, self.arg()))
    }

    pub fn sin(&self) -> Self {
        BigComplex::new(
            self.re.sin() * self.im.cosh(),
            self.re.cos() * self.im.sinh(),
        )
    }

    pub fn cos(&self) -> Self {
        BigComplex::new(
            self.re.cos() * self.im.cosh(),
            -(self.re.sin() * self.im.sinh()),
        )
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let r = self.abs();
        let half = BigReal::from_ratio(1, 2, self.prec());
        let t = ((&r + self.re.abs()) * &half).sqrt();
        if !self.re.is_sign_negative() {
            BigComplex::new(t.clone(), &self.im / (&t + &t))
        } else {
            let im = if self.im.is_sign_negative() { -&t } else { t.clone() };
            BigComplex::new(self.im.abs() / (&t + &t), im)
        }
    }

    /// Integer power by repeated squaring; negative exponents invert once.
    pub fn powi(&self, n: i64) -> Self {
        let bits = self.prec();
        let mut base = self.clone();
        let mut e = n.unsigned_abs();
        let mut acc = BigComplex::one(bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// `self^e` on the principal branch.
    pub fn pow(&self, e: &BigComplex) -> Result<Self> {
        Ok((e * &self.ln()?).exp())
    }

    /// `self^(−s)` for real `s`, principal branch.
    pub fn pow_neg_real(&self, s: &BigReal) -> Result<Self> {
        let l = self.ln()?;
        Ok(l.scale(&-s).exp())
    }

    pub fn to_string_sig(&self, sig: usize) -> String {
        if self.im.is_zero() {
            return self.re.to_sci_string(sig);
        }
        let sign = if self.im.is_sign_negative() { "-" } else { "+" };
        format!(
            "{}{}{}i",
            self.re.to_sci_string(sig),
            sign,
            self.im.abs().to_sci_string(sig)
        )
    }
}

impl From<BigReal> for BigComplex {
    fn from(re: BigReal) -> Self {
        BigComplex::from_real(re)
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_sig(25))
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = (self.prec() as f64 / std::f64::consts::LOG2_10).floor() as usize;
        write!(f, "{}", self.to_string_sig(f.precision().unwrap_or(sig)))
    }
}

impl<'b> Add<&'b BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &'b BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'b> Sub<&'b BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &'b BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'b> Mul<&'b BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &'b BigComplex) -> BigComplex {
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        if self.im.is_zero() {
            return rhs.scale(&self.re).with_prec(self.prec());
        }
        BigComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'b> Div<&'b BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &'b BigComplex) -> BigComplex {
        self.try_div(rhs).expect("division by exact zero")
    }
}

impl BigComplex {
    pub fn with_prec(&self, bits: u32) -> Self {
        BigComplex::new(self.re.with_prec(bits), self.im.with_prec(bits))
    }
}

macro_rules! owned_variants {
    ($tr:ident, $m:ident) => {
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: &'b BigComplex) -> BigComplex {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<BigComplex> for &'a BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex {
                self.$m(&rhs)
            }
        }
    };
}

owned_variants!(Add, add);
owned_variants!(Sub, sub);
owned_variants!(Mul, mul);
owned_variants!(Div, div);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re, -self.im)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, rhs: &BigComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&BigComplex> for BigComplex {
    fn sub_assign(&mut self, rhs: &BigComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&BigComplex> for BigComplex {
    fn mul_assign(&mut self, rhs: &BigComplex) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BITS: u32 = 200;

    fn c(re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(re, im, BITS)
    }

    #[test]
    fn parse_forms() {
        let z = BigComplex::parse("0.3+0.2i", BITS).unwrap();
        assert_eq!(z.re, BigReal::from_ratio(3, 10, BITS));
        assert_eq!(z.im, BigReal::from_ratio(2, 10, BITS));
        let z = BigComplex::parse("1-1/4i", BITS).unwrap();
        assert_eq!(z.im, -0.25);
        let z = BigComplex::parse("-i", BITS).unwrap();
        assert_eq!(z.re, 0.0);
        assert_eq!(z.im, -1.0);
        let z = BigComplex::parse("1e-3+2e+1i", BITS).unwrap();
        assert_eq!(z.im, 20.0);
        let z = BigComplex::parse("3/4", BITS).unwrap();
        assert!(z.is_real());
        assert!(BigComplex::parse("", BITS).is_err());
        assert!(BigComplex::parse("1+xi", BITS).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = c(1.0, 2.0);
        let b = c(3.0, -1.0);
        assert_eq!(&a * &b, c(5.0, 5.0));
        let q = &a / &b;
        let back = &q * &b;
        assert!((&back - &a).abs() < 1e-55);
        assert!(a.try_div(&BigComplex::zero(BITS)).is_err());
        assert_eq!(a.powi(3), &(&a * &a) * &a);
        assert!((&a.powi(-2) * &a.powi(2) - &BigComplex::one(BITS)).abs() < 1e-55);
    }

    #[test]
    fn transcendental_roundtrips() {
        let z = c(0.7, -2.3);
        let back = z.ln().unwrap().exp();
        assert!((&back - &z).abs() < 1e-55);
        let s = z.sin();
        let co = z.cos();
        let one = &(&s * &s) + &(&co * &co);
        assert!((&one - &BigComplex::one(BITS)).abs() < 1e-50);
        let r = z.sqrt();
        assert!((&(&r * &r) - &z).abs() < 1e-55);
        let neg = c(-4.0, 0.0).sqrt();
        assert_eq!(neg, c(0.0, 2.0));
    }

    #[test]
    fn principal_log_on_negative_axis() {
        let l = c(-1.0, 0.0).ln().unwrap();
        assert!((&l.im - &BigReal::pi(BITS)).abs() < 1e-55);
    }
}
