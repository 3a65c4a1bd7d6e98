use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::numeric::{BigComplex, BigReal, Precision, SeriesResult, SeriesStatus};

/// Verdict of one identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    NonConvergent,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "Pass",
            CheckStatus::Fail => "Fail",
            CheckStatus::NonConvergent => "NonConvergent",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Both sides of one identity and how well they agree.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: BigComplex,
    pub rhs: BigComplex,
    pub abs_residual: BigReal,
    pub rel_residual: BigReal,
    pub terms_used: usize,
    pub elapsed_ms: u64,
    pub status: CheckStatus,
    /// Which code path produced each side, e.g. `"hurwitz_zeta"` versus
    /// `"gamma_residue_series"`.
    pub lhs_source: &'static str,
    pub rhs_source: &'static str,
    /// Side results that do not affect the verdict.
    pub diagnostics: BTreeMap<String, String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Accumulates parameters and series bookkeeping while a check runs.
pub(crate) struct ReportBuilder {
    id: String,
    params: BTreeMap<String, String>,
    diagnostics: BTreeMap<String, String>,
    terms: usize,
    converged: bool,
    started: Instant,
    tol: f64,
    sig: usize,
}

impl ReportBuilder {
    pub fn new(id: &str, prec: &Precision) -> Self {
        ReportBuilder {
            id: id.to_string(),
            params: BTreeMap::new(),
            diagnostics: BTreeMap::new(),
            terms: 0,
            converged: true,
            started: Instant::now(),
            tol: prec.tol(),
            sig: prec.digits().saturating_sub(10).max(10) as usize,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn complex_param(self, key: &str, value: &BigComplex) -> Self {
        let s = value.to_string_sig(self.sig);
        self.param(key, s)
    }

    pub fn diagnostic(&mut self, key: &str, value: impl fmt::Display) {
        self.diagnostics.insert(key.to_string(), value.to_string());
    }

    /// Records a series that fed one of the sides.
    pub fn series(&mut self, r: &SeriesResult) -> BigComplex {
        self.terms += r.terms_used;
        if r.status != SeriesStatus::Converged {
            self.converged = false;
        }
        r.value.clone()
    }

    pub fn finish(
        self,
        lhs: BigComplex,
        rhs: BigComplex,
        lhs_source: &'static str,
        rhs_source: &'static str,
    ) -> IdentityReport {
        let abs = (&lhs - &rhs).abs();
        let lhs_mag = lhs.abs();
        let rel = if lhs_mag.is_zero() { abs.clone() } else { &abs / &lhs_mag };
        let pass = abs.to_f64() <= self.tol || (lhs_mag > 1.0 && rel.to_f64() <= self.tol);
        let status = if pass {
            CheckStatus::Pass
        } else if !self.converged {
            CheckStatus::NonConvergent
        } else {
            CheckStatus::Fail
        };
        IdentityReport {
            identity_id: self.id,
            params: self.params,
            lhs,
            rhs,
            abs_residual: abs,
            rel_residual: rel,
            terms_used: self.terms,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            status,
            lhs_source,
            rhs_source,
            diagnostics: self.diagnostics,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        let p = Precision::default();
        let bits = p.bits();
        let one = BigComplex::one(bits);
        let r = ReportBuilder::new("x", &p).finish(one.clone(), one.clone(), "a", "b");
        assert_eq!(r.status, CheckStatus::Pass);
        assert!(r.abs_residual.is_zero());

        // large values pass on the relative residual
        let big = BigComplex::from_f64(1e30, 0.0, bits);
        let near = &big + &BigComplex::from_f64(1e-5, 0.0, bits);
        let r = ReportBuilder::new("x", &p).finish(big, near, "a", "b");
        assert_eq!(r.status, CheckStatus::Pass);

        let off = BigComplex::from_f64(1.001, 0.0, bits);
        let r = ReportBuilder::new("x", &p).finish(one.clone(), off.clone(), "a", "b");
        assert_eq!(r.status, CheckStatus::Fail);

        let mut b = ReportBuilder::new("x", &p);
        b.series(&SeriesResult {
            value: one.clone(),
            terms_used: 10,
            tail_estimate: BigReal::one(bits),
            status: SeriesStatus::HitTermCap,
        });
        let r = b.finish(one, off, "a", "b");
        assert_eq!(r.status, CheckStatus::NonConvergent);
        assert_eq!(r.terms_used, 10);
    }
}
