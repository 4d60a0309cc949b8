//! Transport between the scalar, `C^2`-valued and `x`-variable pictures.
//!
//! * `gamma`: `p ↦ (p, s·p)`, onto the S2-invariant vectors.
//! * `steinberg_split`: the unique `p = f1(x) + z·f2(x)` with `x = (z + z^{-1})/2`.
//! * `phi_transport`: multiplication by `Φ(z)^{-1}`, `Φ = [[1, z], [1, z^{-1}]]`.

use std::ops::{Add, Sub};


use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polyx::{PolyVec2, PolyX};
use crate::rational::{int, Rational};

/// An element of `C[z, z^{-1}] ⊗ C^2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VecLaurent2(pub [LaurentPoly; 2]);

impl VecLaurent2 {
    pub fn new(a: LaurentPoly, b: LaurentPoly) -> Self {
        VecLaurent2([a, b])
    }

    pub fn comp(&self, i: usize) -> &LaurentPoly {
        &self.0[i]
    }

    /// `comp2 = s·comp1`.
    pub fn is_invariant(&self) -> bool {
        self.0[1] == self.0[0].involve()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0[0].scale(c), self.0[1].scale(c))
    }

    /// Componentwise multiplication by `diag(z^a, z^b)`.
    pub fn diag_shift(&self, a: i64, b: i64) -> Self {
        Self::new(self.0[0].shift(a), self.0[1].shift(b))
    }

    /// Componentwise multiplication by a scalar Laurent polynomial.
    pub fn mul_scalar(&self, f: &LaurentPoly) -> Self {
        Self::new(f * &self.0[0], f * &self.0[1])
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.0[0].max_abs_coeff().max(self.0[1].max_abs_coeff())
    }
}

impl Add for &VecLaurent2 {
    type Output = VecLaurent2;
    fn add(self, rhs: &VecLaurent2) -> VecLaurent2 {
        VecLaurent2::new(&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1])
    }
}

impl Sub for &VecLaurent2 {
    type Output = VecLaurent2;
    fn sub(self, rhs: &VecLaurent2) -> VecLaurent2 {
        VecLaurent2::new(&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1])
    }
}

pub fn gamma(p: &LaurentPoly) -> VecLaurent2 {
    VecLaurent2::new(p.clone(), p.involve())
}

/// `(z + z^{-1})^d` expanded, used by the splitting.
fn half_sum_power(d: i64) -> LaurentPoly {
    // x^d = 2^{-d} Σ C(d, i) z^{d-2i}
    let mut binom = Rational::from_integer(1.into());
    let den = Rational::from_integer(num_bigint::BigInt::from(2).pow(d as u32));
    let mut out = LaurentPoly::zero();
    for i in 0..=d {
        out.add_term(d - 2 * i, &binom / &den);
        binom = binom * int(d - i) / int(i + 1);
    }
    out
}

/// Unique `(f1, f2)` with `p(z) = f1(x) + z·f2(x)`.
///
/// Works from the outermost exponents inward: `z^{-N}` can only come from `x^N` in
/// `f1`, while a top exponent `z^M` exceeding the bottom width comes from `z·x^{M-1}`.
pub fn steinberg_split(p: &LaurentPoly) -> (PolyX, PolyX) {
    let mut rest = p.clone();
    let mut f1 = PolyX::zero();
    let mut f2 = PolyX::zero();
    while let (Some(lo), Some(hi)) = (rest.min_exp(), rest.max_exp()) {
        let bottom = -lo;
        if bottom >= hi {
            // bottom >= hi and the polynomial is nonzero, so bottom >= 0
            let d = bottom;
            let c = rest.coeff(lo) * Rational::from_integer(num_bigint::BigInt::from(2).pow(d as u32));
            rest = &rest - &half_sum_power(d).scale(&c);
            f1.add_term(d as usize, c);
        } else {
            // hi > bottom >= -hi forces hi >= 1
            let d = hi - 1;
            let c = rest.coeff(hi) * Rational::from_integer(num_bigint::BigInt::from(2).pow(d as u32));
            rest = &rest - &half_sum_power(d).shift(1).scale(&c);
            f2.add_term(d as usize, c);
        }
    }
    (f1, f2)
}

/// Inverse of [`steinberg_split`]: `f1(x) + z·f2(x)`.
pub fn reassemble(f1: &PolyX, f2: &PolyX) -> LaurentPoly {
    f1.to_laurent() + f2.to_laurent().shift(1)
}

/// `Φ(z)^{-1} P(z)` as a vector of polynomials in `x`.
pub fn phi_transport(v: &VecLaurent2) -> Result<PolyVec2> {
    if !v.is_invariant() {
        return Err(Error::NotInvariant);
    }
    let (f1, f2) = steinberg_split(v.comp(0));
    Ok(PolyVec2::new(f1, f2))
}

/// `Φ(z)·𝒫(x)`, the invariant vector corresponding to `𝒫`.
pub fn phi_inverse(v: &PolyVec2) -> VecLaurent2 {
    gamma(&reassemble(v.get(0), v.get(1)))
}
