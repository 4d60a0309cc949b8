//! Structured results of identity checks.

use std::fmt;

use num_traits::Zero;

use crate::rational::{to_f64, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    HoldsExactly,
    HoldsWithin { residual: f64, tol: f64 },
    Fails { residual: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorVerdict {
    /// Short identifier, e.g. `eigen k=(1,1) n=2`.
    pub case: String,
    pub outcome: Outcome,
    /// Free-form extra information (eigenvalue, observed coefficient, ...).
    pub detail: String,
}

impl OperatorVerdict {
    /// Exact check: holds iff the residual (max |coefficient| of the difference) is zero.
    pub fn exact(case: impl Into<String>, residual: &Rational, detail: impl Into<String>) -> Self {
        let outcome = if residual.is_zero() {
            Outcome::HoldsExactly
        } else {
            Outcome::Fails { residual: to_f64(residual) }
        };
        Self { case: case.into(), outcome, detail: detail.into() }
    }

    pub fn within(case: impl Into<String>, residual: f64, tol: f64, detail: impl Into<String>) -> Self {
        let outcome = if residual <= tol {
            Outcome::HoldsWithin { residual, tol }
        } else {
            Outcome::Fails { residual }
        };
        Self { case: case.into(), outcome, detail: detail.into() }
    }

    pub fn from_bool(case: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let outcome = if ok { Outcome::HoldsExactly } else { Outcome::Fails { residual: f64::NAN } };
        Self { case: case.into(), outcome, detail: detail.into() }
    }

    pub fn holds(&self) -> bool {
        !matches!(self.outcome, Outcome::Fails { .. })
    }

    pub fn residual(&self) -> f64 {
        match self.outcome {
            Outcome::HoldsExactly => 0.0,
            Outcome::HoldsWithin { residual, .. } | Outcome::Fails { residual } => residual,
        }
    }
}

impl fmt::Display for OperatorVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match &self.outcome {
            Outcome::HoldsExactly => "holds (exact)".to_string(),
            Outcome::HoldsWithin { residual, tol } => format!("holds (residual {residual:.3e} <= {tol:.1e})"),
            Outcome::Fails { residual } => format!("FAILS (residual {residual:.3e})"),
        };
        write!(f, "{}: {}", self.case, status)?;
        if !self.detail.is_empty() {
            write!(f, " [{}]", self.detail)?;
        }
        Ok(())
    }
}
