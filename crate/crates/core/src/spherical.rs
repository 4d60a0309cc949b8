//! Spinor spherical-function operators `R_m` and `Q_m`.
//!
//! `R_m` acts on the module `E_A` of vectors `(F(z), F(z^{-1}))` with odd exponents,
//! generated over `C[z^2 + z^{-2}]` by `(z, z^{-1})` and `(z^{-1}, z)`. Multiplication by
//! `diag(z, z^{-1})` carries `E_A` onto the even invariant vectors, and `Q_m` is `R_m`
//! conjugated along that map.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multiplicity::Multiplicity;
use crate::nonsym::{eigenvalue, NonsymFamily};
use crate::rational::{fmt_rational, int, Rational};
use crate::transport::{gamma, VecLaurent2};
use crate::vector::{gamma_star_apply, GammaForm, MatrixDiffOp, RationalFn};
use crate::verdict::OperatorVerdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SphericalKind {
    R,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SphericalOp {
    m: u32,
    kind: SphericalKind,
}

impl SphericalOp {
    pub fn new(m: u32, kind: SphericalKind) -> Result<Self> {
        if m == 0 {
            return Err(Error::ParameterOutOfRange("m must be positive".into()));
        }
        Ok(Self { m, kind })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn kind(&self) -> SphericalKind {
        self.kind
    }

    /// The operator with its rational-function coefficients written out.
    pub fn operator(&self) -> MatrixDiffOp {
        match self.kind {
            SphericalKind::R => r_operator(self.m),
            SphericalKind::Q => q_operator(self.m),
        }
    }
}

/// `z^2 - z^{-2}`.
fn sinh_den() -> LaurentPoly {
    LaurentPoly::from_terms([(2, int(1)), (-2, int(-1))])
}

/// `R_m = diag(z∂, -z∂) + m/(z^2 - z^{-2}) [[2(z^2+z^{-2}), -4], [4, -2(z^2+z^{-2})]]`.
fn r_operator(m: u32) -> MatrixDiffOp {
    let m = int(m as i64);
    let cosh2 = LaurentPoly::from_terms([(2, &m * int(2)), (-2, &m * int(2))]);
    let four = LaurentPoly::constant(&m * int(4));
    let f = |p: LaurentPoly| RationalFn::ratio(p, sinh_den());
    MatrixDiffOp {
        euler: MatrixDiffOp::signed_euler(),
        zeroth: [
            [f(cosh2.clone()), f(-&four)],
            [f(four), f(-&cosh2)],
        ],
    }
}

/// `Q_m = diag(z∂, -z∂) - I + m (2(z^2+z^{-2})/(z^2-z^{-2}) diag(1,-1)
///        + 4/(z^2-z^{-2}) [[0, -z^2], [z^{-2}, 0]])`.
fn q_operator(m: u32) -> MatrixDiffOp {
    let m = int(m as i64);
    let cosh2 = LaurentPoly::from_terms([(2, &m * int(2)), (-2, &m * int(2))]);
    let f = |p: LaurentPoly| RationalFn::ratio(p, sinh_den());
    let minus_one = RationalFn::constant(int(-1));
    MatrixDiffOp {
        euler: MatrixDiffOp::signed_euler(),
        zeroth: [
            [f(cosh2.clone()).add(&minus_one), f(LaurentPoly::term(2, &m * int(-4)))],
            [f(LaurentPoly::term(-2, &m * int(4))), f(-&cosh2).add(&minus_one)],
        ],
    }
}

fn has_parity(v: &VecLaurent2, odd: bool) -> bool {
    let r = i64::from(odd);
    v.comp(0).exponents_congruent(r, 2) && v.comp(1).exponents_congruent(r, 2)
}

/// Membership in `E_A`: odd exponents and `F_2(z) = F_1(z^{-1})`.
pub fn in_ea_module(v: &VecLaurent2) -> bool {
    v.is_invariant() && has_parity(v, true)
}

/// Even exponents and S2-invariant.
pub fn is_even_invariant(v: &VecLaurent2) -> bool {
    v.is_invariant() && has_parity(v, false)
}

pub fn spherical_apply(op: &SphericalOp, v: &VecLaurent2) -> Result<VecLaurent2> {
    match op.kind {
        SphericalKind::R if !in_ea_module(v) => {
            return Err(Error::Domain("R_m expects an element of the E_A module".into()))
        }
        SphericalKind::Q if !is_even_invariant(v) => {
            return Err(Error::Domain("Q_m expects an even invariant vector".into()))
        }
        _ => {}
    }
    op.operator().apply(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EaDirection {
    /// Even invariant vectors to `E_A`: multiply by `diag(z^{-1}, z)`.
    ToEa,
    /// `E_A` to even invariant vectors: multiply by `diag(z, z^{-1})`.
    FromEa,
}

pub fn ea_transport(v: &VecLaurent2, direction: EaDirection) -> Result<VecLaurent2> {
    match direction {
        EaDirection::ToEa => {
            if !has_parity(v, false) {
                return Err(Error::Domain("expected even exponents".into()));
            }
            Ok(v.diag_shift(-1, 1))
        }
        EaDirection::FromEa => {
            if !has_parity(v, true) {
                return Err(Error::Domain("expected odd exponents".into()));
            }
            Ok(v.diag_shift(1, -1))
        }
    }
}

/// `Γ(z^{2j})` for `|j| ≤ d`.
pub fn even_invariant_basis(d: u32) -> Vec<VecLaurent2> {
    let d = i64::from(d);
    (-d..=d).map(|j| gamma(&LaurentPoly::monomial(2 * j))).collect()
}

/// `(0, m)` at root scale 2.
pub fn doubled_multiplicity(m: u32) -> Result<Multiplicity> {
    Multiplicity::exact(0, i64::from(m))?.with_scale(2)
}

/// `Q_m = diag(z, z^{-1}) ∘ R_m ∘ diag(z^{-1}, z)` on `Γ(z^{2j})`, `|j| ≤ d`.
pub fn conjugation_check(m: u32, d: u32) -> Result<OperatorVerdict> {
    let q = SphericalOp::new(m, SphericalKind::Q)?;
    let r = SphericalOp::new(m, SphericalKind::R)?;
    let mut resid = Rational::from_integer(0.into());
    for v in even_invariant_basis(d) {
        let direct = spherical_apply(&q, &v)?;
        let conj = ea_transport(
            &spherical_apply(&r, &ea_transport(&v, EaDirection::ToEa)?)?,
            EaDirection::FromEa,
        )?;
        resid = resid.max((&direct - &conj).max_abs_coeff());
    }
    Ok(OperatorVerdict::exact(format!("q-conjugation m={m} degree<={d}"), &resid, ""))
}

/// `(Q_m + I) F = Γ_*(D_{(0,m)}) F` at root scale 2 on `Γ(z^{2j})`, `|j| ≤ d`, together
/// with the conjugation identity defining `Q_m`.
pub fn identification_check(m: u32, d: u32) -> Result<OperatorVerdict> {
    let q = SphericalOp::new(m, SphericalKind::Q)?;
    let k = doubled_multiplicity(m)?;
    let mut resid = Rational::from_integer(0.into());
    for v in even_invariant_basis(d) {
        let lhs = &spherical_apply(&q, &v)? + &v;
        let rhs = gamma_star_apply(&k, &v, GammaForm::First)?;
        resid = resid.max((&lhs - &rhs).max_abs_coeff());
    }
    let conj = conjugation_check(m, d)?;
    if !conj.holds() {
        resid = resid.max(int(1));
    }
    Ok(OperatorVerdict::exact(format!("identification m={m} degree<={d}"), &resid, ""))
}

/// The generators `(z, z^{-1})` and `(z^{-1}, z)` of `E_A` are `R_m`-eigenvectors with
/// eigenvalues `2m+1` and `-(2m+1)`.
pub fn generator_eigen_check(m: u32) -> Result<OperatorVerdict> {
    let r = SphericalOp::new(m, SphericalKind::R)?;
    let lam = int(2 * i64::from(m) + 1);
    let g_plus = VecLaurent2::new(LaurentPoly::monomial(1), LaurentPoly::monomial(-1));
    let g_minus = VecLaurent2::new(LaurentPoly::monomial(-1), LaurentPoly::monomial(1));
    let r_plus = &spherical_apply(&r, &g_plus)? - &g_plus.scale(&lam);
    let r_minus = &spherical_apply(&r, &g_minus)? - &g_minus.scale(&-lam.clone());
    let resid = r_plus.max_abs_coeff().max(r_minus.max_abs_coeff());
    Ok(OperatorVerdict::exact(
        format!("generator-eigen m={m}"),
        &resid,
        format!("eigenvalues={}, -{}", fmt_rational(&lam), fmt_rational(&lam)),
    ))
}

/// Spherical function of degree `n`: `diag(z^{-1}, z) Γ(E(n, (0,m))(z^2))`.
pub fn spherical_function(family: &mut NonsymFamily, n: i64) -> Result<VecLaurent2> {
    let e = family.e(n)?.rescale(2);
    ea_transport(&gamma(&e), EaDirection::ToEa)
}

/// `R_m`-eigenvalue of the spherical function of degree `n`: `2λ_n - 1`.
pub fn spherical_eigenvalue(m: u32, n: i64) -> Result<Rational> {
    let k = Multiplicity::exact(0, i64::from(m))?;
    Ok(eigenvalue(&k, n) * int(2) - int(1))
}

pub fn spherical_eigen_check(m: u32, n: i64) -> Result<OperatorVerdict> {
    let k = Multiplicity::exact(0, i64::from(m))?;
    let mut family = NonsymFamily::new(&k)?;
    let phi = spherical_function(&mut family, n)?;
    let lam = spherical_eigenvalue(m, n)?;
    let r = SphericalOp::new(m, SphericalKind::R)?;
    let resid = (&spherical_apply(&r, &phi)? - &phi.scale(&lam)).max_abs_coeff();
    Ok(OperatorVerdict::exact(
        format!("spherical-eigen m={m} n={n}"),
        &resid,
        format!("eigenvalue={}", fmt_rational(&lam)),
    ))
}
