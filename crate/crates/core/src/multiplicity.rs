//! Root multiplicities `k = (k1, k2)` for BC1.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, rat, to_f64, Rational};

/// Exact mode runs every pairing through constant terms and needs nonnegative integer
/// multiplicities; float mode integrates numerically and accepts any admissible real value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiplicity {
    k1: Rational,
    k2: Rational,
    scale: i64,
    mode: Mode,
}

impl Multiplicity {
    /// Integer multiplicity in exact mode, root scale 1.
    pub fn exact(k1: i64, k2: i64) -> Result<Self> {
        Self::new(int(k1), int(k2), 1, Mode::Exact)
    }

    /// Float mode with rational parameter values.
    pub fn float(k1: Rational, k2: Rational) -> Result<Self> {
        Self::new(k1, k2, 1, Mode::Float)
    }

    pub fn new(k1: Rational, k2: Rational, scale: i64, mode: Mode) -> Result<Self> {
        if !matches!(scale, 1 | 2) {
            return Err(Error::InvalidMultiplicity(format!("scale must be 1 or 2, got {scale}")));
        }
        match mode {
            Mode::Exact => {
                if !k1.is_integer() || !k2.is_integer() || k1.is_negative() || k2.is_negative() {
                    return Err(Error::InvalidMultiplicity(format!(
                        "exact mode needs nonnegative integers, got ({}, {})",
                        fmt_rational(&k1),
                        fmt_rational(&k2)
                    )));
                }
            }
            Mode::Float => {
                let half = rat(-1, 2);
                if &k1 + &k2 <= half || k2 <= half {
                    return Err(Error::InvalidMultiplicity(format!(
                        "weight not integrable for k = ({}, {}): need k1+k2 > -1/2 and k2 > -1/2",
                        fmt_rational(&k1),
                        fmt_rational(&k2)
                    )));
                }
            }
        }
        Ok(Self { k1, k2, scale, mode })
    }

    /// Same parameters on the doubled root system (`z -> z^2`).
    pub fn with_scale(&self, scale: i64) -> Result<Self> {
        Self::new(self.k1.clone(), self.k2.clone(), scale, self.mode)
    }

    pub fn with_mode(&self, mode: Mode) -> Result<Self> {
        Self::new(self.k1.clone(), self.k2.clone(), self.scale, mode)
    }

    pub fn k1(&self) -> &Rational {
        &self.k1
    }

    pub fn k2(&self) -> &Rational {
        &self.k2
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_exact(&self) -> bool {
        self.mode == Mode::Exact
    }

    /// `ρ(k) = (k1 + 2 k2)/2`, independent of the root scale.
    pub fn rho(&self) -> Rational {
        (&self.k1 + int(2) * &self.k2) / int(2)
    }

    /// `ρ` of the rescaled root system, `scale · ρ(k)`.
    pub fn scaled_rho(&self) -> Rational {
        self.rho() * int(self.scale)
    }

    /// Integer parts for exact-mode loops.
    pub fn integer_parts(&self) -> Option<(u32, u32)> {
        if !self.k1.is_integer() || !self.k2.is_integer() {
            return None;
        }
        let a: i64 = self.k1.to_integer().try_into().ok()?;
        let b: i64 = self.k2.to_integer().try_into().ok()?;
        Some((u32::try_from(a).ok()?, u32::try_from(b).ok()?))
    }

    pub fn k1_f64(&self) -> f64 {
        to_f64(&self.k1)
    }

    pub fn k2_f64(&self) -> f64 {
        to_f64(&self.k2)
    }

    /// `(k1, k2 + 1)`, the target of the `∂_x` transmutation.
    pub fn raise_k2(&self) -> Result<Self> {
        Self::new(self.k1.clone(), &self.k2 + int(1), self.scale, self.mode)
    }

    pub fn is_free(&self) -> bool {
        self.k1.is_zero() && self.k2.is_zero()
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rational(&self.k1), fmt_rational(&self.k2))?;
        if self.scale != 1 {
            write!(f, "@scale{}", self.scale)?;
        }
        Ok(())
    }
}
