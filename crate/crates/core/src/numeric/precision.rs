use crate::error::{PfsError, Result};

/// Extra binary digits carried beyond the requested decimal digits.
pub const GUARD_BITS: u32 = 32;

/// Working-precision settings shared by every computation.
///
/// `digits` is the number of significant decimal digits carried by
/// [`BigReal`](super::BigReal) values, `n_max` caps the number of terms any
/// single series may evaluate and `tol` is the absolute residual that
/// identity checks must reach.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    digits: u32,
    n_max: usize,
    tol: f64,
}

impl Precision {
    pub const DEFAULT_DIGITS: u32 = 50;
    pub const DEFAULT_N_MAX: usize = 20_000;
    pub const DEFAULT_TOL: f64 = 1e-20;

    pub fn new(digits: u32, n_max: usize, tol: f64) -> Result<Self> {
        if digits < 20 {
            return Err(PfsError::InvalidPrecision(format!(
                "digits must be at least 20, got {digits}"
            )));
        }
        if n_max < 100 {
            return Err(PfsError::InvalidPrecision(format!(
                "n_max must be at least 100, got {n_max}"
            )));
        }
        if !(tol > 0.0 && tol < 1.0) {
            return Err(PfsError::InvalidPrecision(format!(
                "tol must lie in (0, 1), got {tol:e}"
            )));
        }
        let floor = Self::tol_floor(digits);
        if tol < floor {
            return Err(PfsError::InvalidPrecision(format!(
                "tol {tol:e} is below 1e{} (ten guard digits are reserved)",
                -(digits as i64) + 10
            )));
        }
        Ok(Precision { digits, n_max, tol })
    }

    /// Default settings at the given number of digits. The default tolerance
    /// is raised to the guard-digit floor when `digits` is small.
    pub fn with_digits(digits: u32) -> Result<Self> {
        let tol = Self::DEFAULT_TOL.max(Self::tol_floor(digits));
        Self::new(digits, Self::DEFAULT_N_MAX, tol)
    }

    fn tol_floor(digits: u32) -> f64 {
        // 10^(-digits+10) with slack for powi rounding
        10f64.powi(-(digits as i32) + 10) * (1.0 - 1e-12)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Binary precision of every scalar created under these settings.
    pub fn bits(&self) -> u32 {
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
    }

    /// Relative size of one unit in the last requested decimal digit.
    pub fn epsilon(&self) -> f64 {
        10f64.powi(-(self.digits as i32))
    }

    pub fn with_tol(self, tol: f64) -> Result<Self> {
        Self::new(self.digits, self.n_max, tol)
    }

    pub fn with_n_max(self, n_max: usize) -> Result<Self> {
        Self::new(self.digits, n_max, self.tol)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            digits: Self::DEFAULT_DIGITS,
            n_max: Self::DEFAULT_N_MAX,
            tol: Self::DEFAULT_TOL,
        }
    }
}
