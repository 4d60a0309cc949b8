//! Sparse Laurent polynomials in `z` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, Rational};

/// A finitely supported map `exponent -> coefficient`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(0, c)
    }

    /// `z^e`.
    pub fn monomial(e: i64) -> Self {
        Self::term(e, int(1))
    }

    /// `c·z^e`.
    pub fn term(e: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&e);
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Largest absolute exponent, 0 for the zero polynomial.
    pub fn width(&self) -> i64 {
        self.coeffs.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// The Weyl involution `(s·p)(z) = p(z^{-1})`.
    pub fn involve(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.involve()
    }

    /// Substitution `z -> z^c`.
    pub fn rescale(&self, c: i64) -> Self {
        assert!(c >= 1, "rescale factor must be positive");
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (e * c, v.clone())).collect(),
        }
    }

    /// The Euler operator `z ∂_z`.
    pub fn euler(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, v)| (*e, v * int(*e))))
    }

    /// True when every exponent is congruent to `r` modulo `m`.
    pub fn exponents_congruent(&self, r: i64, m: i64) -> bool {
        self.coeffs.keys().all(|e| (e - r).rem_euclid(m) == 0)
    }

    /// The divided difference `(p - s·p) / (1 - z^{-c})`.
    ///
    /// Writing `f = p - s·p`, the quotient satisfies `q_e - q_{e+c} = f_e`, so it is
    /// accumulated from the top exponent downward; the division is exact iff each
    /// residue class of `f` modulo `c` sums to zero.
    pub fn reflect_divide(&self, c: i64) -> Result<Self> {
        if !matches!(c, 1 | 2 | 4) {
            return Err(Error::ParameterOutOfRange(format!(
                "reflect_divide denominator exponent must be 1, 2 or 4, got {c}"
            )));
        }
        let f = self - &self.involve();
        let (lo, hi) = match (f.min_exp(), f.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Ok(Self::zero()),
        };
        let mut q: BTreeMap<i64, Rational> = BTreeMap::new();
        let mut e = hi;
        while e >= lo - c {
            let above = q.get(&(e + c)).cloned().unwrap_or_else(Rational::zero);
            let v = f.coeff(e) + above;
            if e < lo {
                if !v.is_zero() {
                    return Err(Error::NonDivisible(format!(
                        "(1 - s)p is not divisible by 1 - z^-{c}"
                    )));
                }
            } else if !v.is_zero() {
                q.insert(e, v);
            }
            e -= 1;
        }
        Ok(Self { coeffs: q })
    }

    /// Exact quotient `self / d` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (d_lo, d_hi) = match (d.min_exp(), d.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::NonDivisible("division by zero polynomial".into())),
        };
        let (n_lo, n_hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Ok(Self::zero()),
        };
        let lead = d.coeff(d_hi);
        let q_lo = n_lo - d_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let mut top = n_hi;
        while let Some(r_hi) = rem.max_exp() {
            top = top.min(r_hi);
            let qe = top - d_hi;
            if qe < q_lo {
                break;
            }
            let qc = rem.coeff(top) / &lead;
            for (de, dc) in d.terms() {
                rem.add_term(qe + de, -(&qc * dc));
            }
            quot.add_term(qe, qc);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonDivisible(format!("{self} is not a multiple of {d}")))
        }
    }

    /// Value at a real point (for diagnostics).
    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(e, c)| crate::rational::to_f64(c) * z.powi(*e as i32))
            .sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{}", fmt_rational(&mag))?,
                (1, true) => write!(f, "z")?,
                (e, true) => write!(f, "z^{e}")?,
                (1, false) => write!(f, "{}*z", fmt_rational(&mag))?,
                (e, false) => write!(f, "{}*z^{e}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&int(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
