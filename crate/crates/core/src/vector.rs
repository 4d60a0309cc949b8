//! `C^2`-valued Jacobi polynomials and their matrix operators.
//!
//! Two pictures are covered:
//!
//! * the S2-invariant Laurent picture, with `P(n, k) = Γ(E(n, k))` and the matrix
//!   operator `Γ_*(D_k)` whose coefficients are rational functions of `z`;
//! * the `x` picture, with `𝒫(n, k) = Φ^{-1} P(n, k)`, the matrix polynomials
//!   `ℳ(N, k) = [𝒫(-N, k) | 𝒫(N+1, k)]` and the first-order operator `𝒟_k`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multiplicity::Multiplicity;
use crate::nonsym::{cherednik_apply, NonsymFamily};
use crate::pairing::InnerProductEngine;
use crate::polyx::{Mat2, PolyMat2, PolyVec2, PolyX};
use crate::rational::{fmt_rational, int, Rational};
use crate::transport::{gamma, phi_transport, VecLaurent2};
use crate::verdict::OperatorVerdict;

/// A quotient `num / den` of Laurent polynomials. Not reduced; the denominator is only
/// divided out when an operator is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalFn {
    pub fn poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::poly(LaurentPoly::zero())
    }

    pub fn ratio(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self { num, den }
    }

    /// `c / (1 - z^{e})`.
    pub fn over_one_minus(c: Rational, e: i64) -> Self {
        Self::ratio(
            LaurentPoly::constant(c),
            LaurentPoly::from_terms([(0, int(1)), (e, int(-1))]),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            Self { num: &self.num + &other.num, den: self.den.clone() }
        } else {
            Self {
                num: &self.num * &other.den + &other.num * &self.den,
                den: &self.den * &other.den,
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self { num: &self.num * p, den: self.den.clone() }
    }
}

/// Sum of `coefficient · polynomial` terms whose total is a Laurent polynomial.
/// Terms sharing a denominator are merged first; the remaining distinct denominators
/// are cleared with one exact division.
fn clear_denominators(terms: &[(&RationalFn, LaurentPoly)]) -> Result<LaurentPoly> {
    let mut groups: Vec<(LaurentPoly, LaurentPoly)> = Vec::new();
    for (f, p) in terms {
        if f.is_zero() || p.is_zero() {
            continue;
        }
        let num = &f.num * p;
        match groups.iter_mut().find(|(d, _)| *d == f.den) {
            Some((_, acc)) => *acc = &*acc + &num,
            None => groups.push((f.den.clone(), num)),
        }
    }
    let mut total_num = LaurentPoly::zero();
    let mut total_den = LaurentPoly::one();
    for (i, (_, num)) in groups.iter().enumerate() {
        let mut t = num.clone();
        for (j, (d, _)) in groups.iter().enumerate() {
            if i != j {
                t = &t * d;
            }
        }
        total_num = total_num + t;
    }
    for (d, _) in &groups {
        total_den = &total_den * d;
    }
    total_num.div_exact(&total_den)
}

/// A 2×2 matrix operator `A(z)·(z∂_z) + B(z)` with rational-function coefficients,
/// acting componentwise on `C^2`-valued Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDiffOp {
    pub euler: [[RationalFn; 2]; 2],
    pub zeroth: [[RationalFn; 2]; 2],
}

impl MatrixDiffOp {
    pub fn apply(&self, v: &VecLaurent2) -> Result<VecLaurent2> {
        let d = [v.comp(0).euler(), v.comp(1).euler()];
        let row = |i: usize| {
            clear_denominators(&[
                (&self.euler[i][0], d[0].clone()),
                (&self.euler[i][1], d[1].clone()),
                (&self.zeroth[i][0], v.comp(0).clone()),
                (&self.zeroth[i][1], v.comp(1).clone()),
            ])
        };
        Ok(VecLaurent2::new(row(0)?, row(1)?))
    }

    /// `diag(z∂_z, -z∂_z)`, the common first-order part of all operators here.
    pub fn signed_euler() -> [[RationalFn; 2]; 2] {
        [
            [RationalFn::constant(int(1)), RationalFn::zero()],
            [RationalFn::zero(), RationalFn::constant(int(-1))],
        ]
    }
}

/// Which of the two equivalent displays of `Γ_*(D_k)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaForm {
    /// Entries `±(k1/(1-z^{-1}) + 2k2/(1-z^{-2}))` and their `z -> z^{-1}` images.
    First,
    /// `g(z)·[[1,-1],[1,-1]] + ρ(k)·[[-1,0],[-2,1]]`, obtained from the first via
    /// `1/(1-z) - 1 = -1/(1-z^{-1})`.
    Second,
}

/// `g(z) = c k1 / (1 - z^{-c}) + 2c k2 / (1 - z^{-2c})`; with `invert`, `g(z^{-1})`.
fn reflection_coefficient(k: &Multiplicity, invert: bool) -> RationalFn {
    let c = k.scale();
    let sign = if invert { 1 } else { -1 };
    RationalFn::over_one_minus(k.k1() * int(c), sign * c)
        .add(&RationalFn::over_one_minus(k.k2() * int(2 * c), sign * 2 * c))
}

/// `Γ_*(D_k)` as a matrix operator on invariant vectors (root scale taken from `k`).
pub fn gamma_star_op(k: &Multiplicity, form: GammaForm) -> MatrixDiffOp {
    let rho = RationalFn::constant(k.scaled_rho());
    let g = reflection_coefficient(k, false);
    let zeroth = match form {
        GammaForm::First => {
            let gi = reflection_coefficient(k, true);
            [
                [g.sub(&rho), g.scale(&int(-1))],
                [gi.scale(&int(-1)), gi.sub(&rho)],
            ]
        }
        GammaForm::Second => {
            let r = k.scaled_rho();
            [
                [g.sub(&rho), g.scale(&int(-1))],
                [g.sub(&RationalFn::constant(&r * int(2))), g.scale(&int(-1)).add(&rho)],
            ]
        }
    };
    MatrixDiffOp { euler: MatrixDiffOp::signed_euler(), zeroth }
}

pub fn gamma_star_apply(k: &Multiplicity, v: &VecLaurent2, form: GammaForm) -> Result<VecLaurent2> {
    if !v.is_invariant() {
        return Err(Error::NotInvariant);
    }
    gamma_star_op(k, form).apply(v)
}

/// `P(n, k) = Γ(E(n, k))`.
pub fn build_p(family: &mut NonsymFamily, n: i64) -> Result<VecLaurent2> {
    Ok(gamma(family.e(n)?))
}

/// `𝒫(n, k) = Φ^{-1} P(n, k)`.
pub fn build_calp(family: &mut NonsymFamily, n: i64) -> Result<PolyVec2> {
    phi_transport(&build_p(family, n)?)
}

/// `ℳ(N, k)` with columns `𝒫(-N, k)` and `𝒫(N+1, k)`.
pub fn build_m(family: &mut NonsymFamily, big_n: u64) -> Result<PolyMat2> {
    let n = big_n as i64;
    Ok(PolyMat2::from_cols(build_calp(family, -n)?, build_calp(family, n + 1)?))
}

/// `C_N(k) = 2^N [[1, k1/(1+2N+2ρ)], [0, 1]]`, the leading coefficient of `ℳ(N, k)`.
pub fn leading_coefficient_cn(k: &Multiplicity, big_n: u64) -> Mat2 {
    let c = crate::nonsym::subleading_coefficient(k, big_n);
    Mat2::new(int(1), c, int(0), int(1)).scale(&pow2(big_n))
}

pub(crate) fn pow2(n: u64) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(2).pow(n as u32))
}

/// `Λ(N, k) = diag(-N - ρ, N + 1 + ρ)`.
pub fn lambda_of(k: &Multiplicity, big_n: u64) -> Mat2 {
    let n = int(big_n as i64);
    let rho = k.rho();
    Mat2::diag(-(&n + &rho), n + int(1) + rho)
}

/// A matrix differential operator `Σ_r A_r(x) ∂_x^r` acting on the left of
/// 2×2 (or 2×1) matrix polynomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XDiffOp {
    /// `terms[r]` multiplies `∂_x^r`.
    pub terms: Vec<PolyMat2>,
}

impl XDiffOp {
    /// `first · ∂_x + zeroth`.
    pub fn first_order(first: PolyMat2, zeroth: &Mat2) -> Self {
        Self { terms: vec![PolyMat2::constant(zeroth), first] }
    }

    pub fn order(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn apply(&self, a: &PolyMat2) -> PolyMat2 {
        let mut out = PolyMat2::zero();
        let mut deriv = a.clone();
        for coeff in &self.terms {
            out = &out + &coeff.mul(&deriv);
            deriv = deriv.derivative();
        }
        out
    }

    pub fn apply_vec(&self, v: &PolyVec2) -> PolyVec2 {
        let m = PolyMat2::from_cols(v.clone(), PolyVec2::zero());
        self.apply(&m).cols[0].clone()
    }

    /// `self ∘ other`, expanded with the Leibniz rule.
    pub fn compose(&self, other: &XDiffOp) -> XDiffOp {
        let order = self.order() + other.order();
        let mut terms = vec![PolyMat2::zero(); order + 1];
        for (r, a) in self.terms.iter().enumerate() {
            for (s, b) in other.terms.iter().enumerate() {
                // A ∂^r (B ∂^s) = Σ_i C(r,i) A B^{(i)} ∂^{r-i+s}
                let mut bi = b.clone();
                let mut binom = Rational::one();
                for i in 0..=r {
                    let t = a.mul(&bi).scale(&binom);
                    let slot = r - i + s;
                    terms[slot] = &terms[slot] + &t;
                    bi = bi.derivative();
                    binom = binom * int((r - i) as i64) / int(i as i64 + 1);
                }
            }
        }
        XDiffOp { terms }
    }

    pub fn add(&self, other: &XDiffOp) -> XDiffOp {
        let n = self.terms.len().max(other.terms.len());
        let terms = (0..n)
            .map(|r| {
                let z = PolyMat2::zero();
                let a = self.terms.get(r).unwrap_or(&z);
                let b = other.terms.get(r).unwrap_or(&z);
                a + b
            })
            .collect();
        XDiffOp { terms }
    }

    pub fn scale(&self, c: &Rational) -> XDiffOp {
        XDiffOp { terms: self.terms.iter().map(|t| t.scale(c)).collect() }
    }

    /// `m · self · m^{-1}` for a constant invertible `m`.
    pub fn conjugate(&self, m: &Mat2) -> Option<XDiffOp> {
        let inv = m.inverse()?;
        Some(XDiffOp {
            terms: self.terms.iter().map(|t| t.left_mul_const(m).right_mul_const(&inv)).collect(),
        })
    }

    /// True when every coefficient matrix is diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.entry(0, 1).is_zero() && t.entry(1, 0).is_zero())
    }
}

/// `𝒟_k = [[-x, -1], [1, x]] ∂_x + [[-ρ, k1], [0, 1+ρ]]`.
pub fn dk_x(k: &Multiplicity) -> XDiffOp {
    let rho = k.rho();
    let first = PolyMat2::from_rows(
        PolyX::term(1, int(-1)),
        PolyX::constant(int(-1)),
        PolyX::one(),
        PolyX::x(),
    );
    let zeroth = Mat2::new(-rho.clone(), k.k1().clone(), int(0), int(1) + rho);
    XDiffOp::first_order(first, &zeroth)
}

pub fn dk_x_apply(k: &Multiplicity, a: &PolyMat2) -> PolyMat2 {
    dk_x(k).apply(a)
}

/// Exact checks on `ℳ(N, k)`: leading coefficient `C_N(k)` and `𝒟_k ℳ = ℳ Λ`.
pub fn matrix_family_checks(family: &mut NonsymFamily, big_n: u64) -> Result<Vec<OperatorVerdict>> {
    let k = family.multiplicity().clone();
    let m = build_m(family, big_n)?;
    let cn = leading_coefficient_cn(&k, big_n);
    let deg_ok = m.degree() == Some(big_n as usize);
    let lc_resid = max_abs(&(&m.leading_coeff() - &cn));
    let mut out = vec![OperatorVerdict::exact(
        format!("leading-coefficient k={k} N={big_n}"),
        &if deg_ok { lc_resid } else { int(1) },
        format!("C_N={cn}"),
    )];
    let lhs = dk_x_apply(&k, &m);
    let rhs = m.right_mul_const(&lambda_of(&k, big_n));
    out.push(OperatorVerdict::exact(
        format!("dk-eigen k={k} N={big_n}"),
        &(&lhs - &rhs).max_abs_coeff(),
        format!("Lambda={}", lambda_of(&k, big_n)),
    ));
    Ok(out)
}

/// `mat_pair(ℳ(N), ℳ(M))` vanishes for `N != M` and is diagonal for `N = M`.
pub fn matrix_orthogonality_check(
    family: &mut NonsymFamily,
    big_n: u64,
    big_m: u64,
) -> Result<OperatorVerdict> {
    let k = family.multiplicity().clone();
    let engine = InnerProductEngine::new(&k)?;
    let a = build_m(family, big_n)?;
    let b = build_m(family, big_m)?;
    let g = engine.mat_pair(&a, &b)?;
    let ok = if big_n == big_m {
        g[0][1].is_zero_within(0.0)
            && g[1][0].is_zero_within(0.0)
            && g[0][0].is_positive()
            && g[1][1].is_positive()
    } else {
        g.iter().flatten().all(|v| v.is_zero_within(0.0))
    };
    Ok(OperatorVerdict::from_bool(
        format!("mat-orthogonality k={k} N={big_n} M={big_m}"),
        ok,
        format!("[[{}, {}], [{}, {}]]", g[0][0], g[0][1], g[1][0], g[1][1]),
    ))
}

/// Checks that both displays of `Γ_*(D_k)` agree with each other and with `Γ ∘ D_k`
/// on `Γ(p)`.
pub fn gamma_star_check(k: &Multiplicity, p: &LaurentPoly) -> Result<OperatorVerdict> {
    let v = gamma(p);
    let first = gamma_star_apply(k, &v, GammaForm::First)?;
    let second = gamma_star_apply(k, &v, GammaForm::Second)?;
    let transported = gamma(&cherednik_apply(k, p)?);
    let resid = (&first - &second).max_abs_coeff().max((&first - &transported).max_abs_coeff());
    Ok(OperatorVerdict::exact(format!("gamma-star-forms k={k} p={p}"), &resid, ""))
}

pub(crate) fn max_abs(m: &Mat2) -> Rational {
    use num_traits::Signed;
    m.0.iter().flatten().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
}

/// Display helper shared with the report code.
pub fn describe_mat(m: &Mat2) -> String {
    let r = |i: usize, j: usize| fmt_rational(m.get(i, j));
    format!("[[{}, {}], [{}, {}]]", r(0, 0), r(0, 1), r(1, 0), r(1, 1))
}

/// Coefficients of a matrix polynomial by degree, for reports.
pub fn coefficient_table(m: &PolyMat2) -> BTreeMap<usize, Mat2> {
    (0..=m.degree().unwrap_or(0)).map(|d| (d, m.coeff_matrix(d))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn k(a: i64, b: i64) -> Multiplicity {
        Multiplicity::exact(a, b).unwrap()
    }

    #[test]
    fn build_p_examples() {
        let mut fam = NonsymFamily::new(&k(1, 1)).unwrap();
        assert_eq!(build_p(&mut fam, 0).unwrap(), gamma(&LaurentPoly::one()));
        assert_eq!(
            build_p(&mut fam, 1).unwrap(),
            gamma(&LaurentPoly::from_terms([(1, int(1)), (0, rat(1, 4))]))
        );
        assert_eq!(
            build_p(&mut fam, -1).unwrap(),
            gamma(&LaurentPoly::from_terms([(-1, int(1)), (1, rat(3, 5)), (0, rat(2, 5))]))
        );
    }

    #[test]
    fn gamma_star_eigenvalues_on_p0_p1_pm2() {
        let kk = k(1, 1);
        let mut fam = NonsymFamily::new(&kk).unwrap();
        let rho = kk.rho();
        for form in [GammaForm::First, GammaForm::Second] {
            let p0 = build_p(&mut fam, 0).unwrap();
            assert_eq!(gamma_star_apply(&kk, &p0, form).unwrap(), p0.scale(&-rho.clone()));
            let p1 = build_p(&mut fam, 1).unwrap();
            assert_eq!(gamma_star_apply(&kk, &p1, form).unwrap(), p1.scale(&(int(1) + &rho)));
            let pm2 = build_p(&mut fam, -2).unwrap();
            assert_eq!(gamma_star_apply(&kk, &pm2, form).unwrap(), pm2.scale(&rat(-7, 2)));
        }
    }

    #[test]
    fn gamma_star_rejects_non_invariant() {
        let v = VecLaurent2::new(LaurentPoly::monomial(1), LaurentPoly::zero());
        assert_eq!(gamma_star_apply(&k(1, 1), &v, GammaForm::First), Err(Error::NotInvariant));
    }

    #[test]
    fn build_m_examples() {
        let mut fam = NonsymFamily::new(&k(1, 1)).unwrap();
        let m0 = build_m(&mut fam, 0).unwrap();
        assert_eq!(m0, PolyMat2::constant(&Mat2::new(int(1), rat(1, 4), int(0), int(1))));
        let mut fam = NonsymFamily::new(&k(0, 3)).unwrap();
        assert_eq!(build_m(&mut fam, 0).unwrap(), PolyMat2::identity());
        let mut fam = NonsymFamily::new(&k(1, 1)).unwrap();
        let m1 = build_m(&mut fam, 1).unwrap();
        assert_eq!(m1.degree(), Some(1));
        assert_eq!(m1.leading_coeff(), Mat2::new(int(2), rat(1, 3), int(0), int(2)));
        // columns from E(-1) = z^-1 + 3/5 z + 2/5 and E(2) = z^2 + z/2 + z^-1/6 + 2/3
        assert_eq!(
            m1,
            PolyMat2::from_rows(
                PolyX::from_coeffs([(0, rat(2, 5)), (1, int(2))]),
                PolyX::from_coeffs([(0, rat(-1, 3)), (1, rat(1, 3))]),
                PolyX::constant(rat(-2, 5)),
                PolyX::from_coeffs([(0, rat(1, 3)), (1, int(2))]),
            )
        );
    }

    #[test]
    fn dk_on_constant_family_and_lambda() {
        let kk = k(1, 1);
        let mut fam = NonsymFamily::new(&kk).unwrap();
        let m0 = build_m(&mut fam, 0).unwrap();
        assert_eq!(
            dk_x_apply(&kk, &m0),
            m0.right_mul_const(&Mat2::diag(rat(-3, 2), rat(5, 2)))
        );
        assert_eq!(lambda_of(&k(0, 2), 3), Mat2::diag(int(-5), int(6)));
        // 𝒫(1,k) = (c0, 1) with c0 = k1/(1+2ρ): eigenvalue 1+ρ
        let p1 = build_calp(&mut fam, 1).unwrap();
        assert_eq!(dk_x(&kk).apply_vec(&p1), p1.scale(&rat(5, 2)));
    }

    #[test]
    fn matrix_checks_pass_for_small_n() {
        let mut fam = NonsymFamily::new(&k(2, 1)).unwrap();
        for n in 0..4 {
            for v in matrix_family_checks(&mut fam, n).unwrap() {
                assert!(v.holds(), "{v}");
            }
        }
        assert!(matrix_orthogonality_check(&mut fam, 0, 1).unwrap().holds());
        assert!(matrix_orthogonality_check(&mut fam, 2, 2).unwrap().holds());
    }

    #[test]
    fn compose_matches_sequential_application() {
        let d = dk_x(&k(1, 2));
        let d2 = d.compose(&d);
        let a = PolyMat2::from_rows(
            PolyX::from_coeffs([(3, int(1)), (0, rat(1, 2))]),
            PolyX::x(),
            PolyX::term(2, int(-4)),
            PolyX::one(),
        );
        assert_eq!(d2.apply(&a), d.apply(&d.apply(&a)));
        assert_eq!(d2.order(), 2);
    }

    #[test]
    fn rational_fn_clearing() {
        // z/(1 - z^-1) - z^-1/(1 - z^-1)... numerator z - z^-1 over 1 - z^-1 = z + 1
        let f = RationalFn::over_one_minus(int(1), -1);
        let out = clear_denominators(&[
            (&f, LaurentPoly::monomial(1)),
            (&f.scale(&int(-1)), LaurentPoly::monomial(-1)),
        ])
        .unwrap();
        assert_eq!(out, LaurentPoly::from_terms([(1, int(1)), (0, int(1))]));
        assert!(clear_denominators(&[(&f, LaurentPoly::monomial(1))]).is_err());
    }
}
