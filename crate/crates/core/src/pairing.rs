//! Inner products against the weight
//! `δ_k(z) = (1 - (z+z^{-1})/2)^{k1} (1 - (z^2+z^{-2})/2)^{k2}`.
//!
//! All pairings drop the `2π` of the circle integral: the exact engine returns the
//! constant term of `s(p)·q·δ_k`, and the quadrature engine divides by the same
//! constant so both agree. Orthogonality and eigen-statements are unaffected.

use std::fmt;
use std::ops::Add;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multiplicity::{Mode, Multiplicity};
use crate::polyx::PolyMat2;
use crate::quadrature::{gauss_jacobi_rule, QuadRule};
use crate::rational::{int, rat, to_f64, Rational};
use crate::transport::{phi_inverse, VecLaurent2};

/// `δ_k` expanded as a Laurent polynomial, with `z -> z^c` for root scale `c`.
pub fn delta_expand(k: &Multiplicity) -> Result<LaurentPoly> {
    if !k.is_exact() {
        return Err(Error::Mode("delta_expand needs integer multiplicities (exact mode)".into()));
    }
    let (k1, k2) = k
        .integer_parts()
        .ok_or_else(|| Error::Mode("non-integer multiplicity".into()))?;
    let short = LaurentPoly::from_terms([(0, int(1)), (1, rat(-1, 2)), (-1, rat(-1, 2))]);
    let long = LaurentPoly::from_terms([(0, int(1)), (2, rat(-1, 2)), (-2, rat(-1, 2))]);
    let mut d = LaurentPoly::one();
    for _ in 0..k1 {
        d = &d * &short;
    }
    for _ in 0..k2 {
        d = &d * &long;
    }
    Ok(d.rescale(k.scale()))
}

/// A pairing value: exact in exact mode, floating point in float mode.
#[derive(Clone, Debug, PartialEq)]
pub enum PairValue {
    Exact(Rational),
    Approx(f64),
}

impl PairValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            PairValue::Exact(r) => to_f64(r),
            PairValue::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            PairValue::Exact(r) => Some(r),
            PairValue::Approx(_) => None,
        }
    }

    pub fn half(&self) -> Self {
        match self {
            PairValue::Exact(r) => PairValue::Exact(r / int(2)),
            PairValue::Approx(x) => PairValue::Approx(x / 2.0),
        }
    }

    /// Exactly zero, or within `tol` in float mode.
    pub fn is_zero_within(&self, tol: f64) -> bool {
        match self {
            PairValue::Exact(r) => r.is_zero(),
            PairValue::Approx(x) => x.abs() <= tol,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            PairValue::Exact(r) => r.is_positive(),
            PairValue::Approx(x) => *x > 0.0,
        }
    }
}

impl Add for PairValue {
    type Output = PairValue;
    fn add(self, rhs: PairValue) -> PairValue {
        match (self, rhs) {
            (PairValue::Exact(a), PairValue::Exact(b)) => PairValue::Exact(a + b),
            (a, b) => PairValue::Approx(a.to_f64() + b.to_f64()),
        }
    }
}

impl fmt::Display for PairValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairValue::Exact(r) => write!(f, "{}", crate::rational::fmt_rational(r)),
            PairValue::Approx(x) => write!(f, "{x:.16e}"),
        }
    }
}

/// A 2×2 matrix of pairing values, as returned by [`InnerProductEngine::mat_pair`].
pub type PairMatrix = [[PairValue; 2]; 2];

#[derive(Clone, Debug)]
pub struct InnerProductEngine {
    multiplicity: Multiplicity,
    delta: Option<LaurentPoly>,
    /// Jacobi exponents `(k1 + k2 - 1/2, k2 - 1/2)` of the weight in `x`.
    jacobi_exps: Option<(f64, f64)>,
}

impl InnerProductEngine {
    pub fn new(k: &Multiplicity) -> Result<Self> {
        match k.mode() {
            Mode::Exact => Ok(Self {
                multiplicity: k.clone(),
                delta: Some(delta_expand(k)?),
                jacobi_exps: None,
            }),
            Mode::Float => {
                if k.scale() != 1 {
                    return Err(Error::Mode("quadrature pairing supports root scale 1 only".into()));
                }
                let a = k.k1_f64() + k.k2_f64() - 0.5;
                let b = k.k2_f64() - 0.5;
                // validates the exponents once
                gauss_jacobi_rule(a, b, 1)?;
                Ok(Self { multiplicity: k.clone(), delta: None, jacobi_exps: Some((a, b)) })
            }
        }
    }

    pub fn multiplicity(&self) -> &Multiplicity {
        &self.multiplicity
    }

    pub fn delta(&self) -> Option<&LaurentPoly> {
        self.delta.as_ref()
    }

    /// Constant term of `s(p)·q·δ_k`.
    pub fn ct_pair(&self, p: &LaurentPoly, q: &LaurentPoly) -> Result<Rational> {
        let delta = self
            .delta
            .as_ref()
            .ok_or_else(|| Error::Mode("ct_pair needs an exact-mode engine".into()))?;
        // CT(z^{-a} z^{b} δ) = δ_{a-b}
        let mut acc = Rational::zero();
        for (a, pa) in p.terms() {
            for (b, qb) in q.terms() {
                let d = delta.coeff(a - b);
                if !d.is_zero() {
                    acc += pa * qb * d;
                }
            }
        }
        Ok(acc)
    }

    /// Quadrature rule sized for an integrand whose symmetric part has `x`-degree `deg`.
    pub fn rule_for_degree(&self, deg: usize) -> Result<QuadRule> {
        let (a, b) = self
            .jacobi_exps
            .ok_or_else(|| Error::Mode("quadrature needs a float-mode engine".into()))?;
        gauss_jacobi_rule(a, b, deg.div_ceil(2) + 2)
    }

    /// Same pairing as [`ct_pair`](Self::ct_pair), computed by Gauss–Jacobi quadrature.
    ///
    /// The antisymmetric part of `h = s(p)·q` integrates to zero, and its symmetric part
    /// is `h_0 + Σ_{j≥1} (h_j + h_{-j}) T_j(x)`.
    pub fn quad_pair(&self, p: &LaurentPoly, q: &LaurentPoly) -> Result<f64> {
        let h = &p.involve() * q;
        let rule = self.rule_for_degree(h.width() as usize)?;
        self.quad_pair_with(&h, &rule)
    }

    /// Quadrature pairing of a precomputed integrand `h = s(p)·q` with an explicit rule.
    pub fn quad_pair_with(&self, h: &LaurentPoly, rule: &QuadRule) -> Result<f64> {
        if self.jacobi_exps.is_none() {
            return Err(Error::Mode("quadrature needs a float-mode engine".into()));
        }
        let width = h.width() as usize;
        let mut cheb = vec![0.0; width + 1];
        for (e, c) in h.terms() {
            let j = e.unsigned_abs() as usize;
            cheb[j] += c.to_f64().unwrap_or(f64::NAN);
        }
        let integral = rule.integrate(|x| clenshaw(&cheb, x));
        let k2 = self.multiplicity.k2_f64();
        Ok(2f64.powf(k2) * integral / std::f64::consts::PI)
    }

    pub fn pair(&self, p: &LaurentPoly, q: &LaurentPoly) -> Result<PairValue> {
        match self.multiplicity.mode() {
            Mode::Exact => self.ct_pair(p, q).map(PairValue::Exact),
            Mode::Float => self.quad_pair(p, q).map(PairValue::Approx),
        }
    }

    /// `½ (pair(P1, Q1) + pair(P2, Q2))`.
    pub fn vec_pair(&self, a: &VecLaurent2, b: &VecLaurent2) -> Result<PairValue> {
        let s = self.pair(a.comp(0), b.comp(0))? + self.pair(a.comp(1), b.comp(1))?;
        Ok(s.half())
    }

    /// Matrix inner product `½ ∫ A^* 𝒲 B w_k dx`, entry `(i, j)` pairing column `i` of `A`
    /// with column `j` of `B` after pulling both back through `Φ`.
    pub fn mat_pair(&self, a: &PolyMat2, b: &PolyMat2) -> Result<PairMatrix> {
        let ca = [phi_inverse(a.col(0)), phi_inverse(a.col(1))];
        let cb = [phi_inverse(b.col(0)), phi_inverse(b.col(1))];
        let e = |i: usize, j: usize| self.vec_pair(&ca[i], &cb[j]);
        Ok([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
    }
}

/// `Σ c_j T_j(x)` with the Chebyshev coefficients given as `[c_0, c_1, ...]`, where
/// `c_0` multiplies `T_0 = 1` at full weight.
fn clenshaw(c: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &cj in c.iter().skip(1).rev() {
        let b0 = cj + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c.first().copied().unwrap_or(0.0) + x * b1 - b2
}
