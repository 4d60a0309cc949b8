//! Polynomials in the invariant variable `x = (z + z^{-1})/2`, together with the
//! length-2 vector and 2×2 matrix containers built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::rational::{fmt_rational, int, rat, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyX {
    coeffs: BTreeMap<usize, Rational>,
}

impl PolyX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(0, c)
    }

    /// `x`.
    pub fn x() -> Self {
        Self::term(1, int(1))
    }

    pub fn term(d: usize, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(d, c);
        p
    }

    pub fn from_coeffs<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn add_term(&mut self, d: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.coeffs.entry(d).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(&d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Rational)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.degree().map(|d| self.coeff(d)).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(d, v)| (*d, v * c)))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .filter(|(d, _)| **d > 0)
                .map(|(d, v)| (d - 1, v * int(*d as i64))),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let top = match self.degree() {
            Some(t) => t,
            None => return acc,
        };
        for d in (0..=top).rev() {
            acc = acc * x + self.coeff(d);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let top = match self.degree() {
            Some(t) => t,
            None => return 0.0,
        };
        (0..=top)
            .rev()
            .fold(0.0, |acc, d| acc * x + crate::rational::to_f64(&self.coeff(d)))
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs.values().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    /// Substitutes `x = (z + z^{-1})/2`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        let half_sum = LaurentPoly::from_terms([(1, rat(1, 2)), (-1, rat(1, 2))]);
        let mut power = LaurentPoly::one();
        let top = match self.degree() {
            Some(t) => t,
            None => return out,
        };
        for d in 0..=top {
            let c = self.coeff(d);
            if !c.is_zero() {
                out = out + power.scale(&c);
            }
            power = &power * &half_sum;
        }
        out
    }
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(d, c)| match d {
                0 => fmt_rational(c),
                1 => format!("{}*x", fmt_rational(c)),
                _ => format!("{}*x^{d}", fmt_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &PolyX {
    type Output = PolyX;
    fn add(self, rhs: &PolyX) -> PolyX {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &PolyX {
    type Output = PolyX;
    fn sub(self, rhs: &PolyX) -> PolyX {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, -c.clone());
        }
        out
    }
}

impl Mul for &PolyX {
    type Output = PolyX;
    fn mul(self, rhs: &PolyX) -> PolyX {
        let mut out = PolyX::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &PolyX {
    type Output = PolyX;
    fn neg(self) -> PolyX {
        self.scale(&int(-1))
    }
}

/// A constant 2×2 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[Rational; 2]; 2]);

impl Mat2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Self::diag(int(1), int(1))
    }

    pub fn zero() -> Self {
        Self::diag(int(0), int(0))
    }

    pub fn diag(a: Rational, d: Rational) -> Self {
        Self::new(a, int(0), int(0), d)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[i][j]
    }

    pub fn det(&self) -> Rational {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let [[a, b], [c, d]] = &self.0;
        Some(Self::new(d / &det, -b / &det, -c / &det, a / &det))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let m = &self.0;
        Self::new(&m[0][0] * s, &m[0][1] * s, &m[1][0] * s, &m[1][1] * s)
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0].clone(), m[1][0].clone(), m[0][1].clone(), m[1][1].clone())
    }

    pub fn is_diagonal(&self) -> bool {
        self.0[0][1].is_zero() && self.0[1][0].is_zero()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        Mat2::new(
            &a[0][0] + &b[0][0],
            &a[0][1] + &b[0][1],
            &a[1][0] + &b[1][0],
            &a[1][1] + &b[1][1],
        )
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &Mat2) -> Mat2 {
        self + &rhs.scale(&int(-1))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            fmt_rational(&m[0][0]),
            fmt_rational(&m[0][1]),
            fmt_rational(&m[1][0]),
            fmt_rational(&m[1][1])
        )
    }
}

/// A column vector of two polynomials in `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyVec2(pub [PolyX; 2]);

impl PolyVec2 {
    pub fn new(a: PolyX, b: PolyX) -> Self {
        PolyVec2([a, b])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize) -> &PolyX {
        &self.0[i]
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().filter_map(|p| p.degree()).max()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0[0].scale(c), self.0[1].scale(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0[0].derivative(), self.0[1].derivative())
    }
}

impl Add for &PolyVec2 {
    type Output = PolyVec2;
    fn add(self, rhs: &PolyVec2) -> PolyVec2 {
        PolyVec2::new(&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1])
    }
}

impl Sub for &PolyVec2 {
    type Output = PolyVec2;
    fn sub(self, rhs: &PolyVec2) -> PolyVec2 {
        PolyVec2::new(&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1])
    }
}

/// A 2×2 matrix of polynomials in `x`, stored column-major.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyMat2 {
    pub cols: [PolyVec2; 2],
}

impl PolyMat2 {
    pub fn from_cols(c0: PolyVec2, c1: PolyVec2) -> Self {
        PolyMat2 { cols: [c0, c1] }
    }

    /// Builds from rows `[[a, b], [c, d]]`.
    pub fn from_rows(a: PolyX, b: PolyX, c: PolyX, d: PolyX) -> Self {
        Self::from_cols(PolyVec2::new(a, c), PolyVec2::new(b, d))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(m: &Mat2) -> Self {
        let c = |i: usize, j: usize| PolyX::constant(m.get(i, j).clone());
        Self::from_rows(c(0, 0), c(0, 1), c(1, 0), c(1, 1))
    }

    pub fn identity() -> Self {
        Self::constant(&Mat2::identity())
    }

    /// The matrix with `p` at `(i, j)` and zeros elsewhere.
    pub fn unit(i: usize, j: usize, p: PolyX) -> Self {
        let mut m = Self::zero();
        m.cols[j].0[i] = p;
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &PolyX {
        &self.cols[j].0[i]
    }

    pub fn col(&self, j: usize) -> &PolyVec2 {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.cols.iter().filter_map(|c| c.degree()).max()
    }

    /// The constant matrix of coefficients of `x^d`.
    pub fn coeff_matrix(&self, d: usize) -> Mat2 {
        let c = |i: usize, j: usize| self.entry(i, j).coeff(d);
        Mat2::new(c(0, 0), c(0, 1), c(1, 0), c(1, 1))
    }

    /// Coefficient matrix of the top degree; zero matrix for the zero polynomial.
    pub fn leading_coeff(&self) -> Mat2 {
        match self.degree() {
            Some(d) => self.coeff_matrix(d),
            None => Mat2::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_cols(self.cols[0].derivative(), self.cols[1].derivative())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_cols(self.cols[0].scale(c), self.cols[1].scale(c))
    }

    /// `m · self` for a constant matrix `m`.
    pub fn left_mul_const(&self, m: &Mat2) -> Self {
        self.left_mul(&Self::constant(m))
    }

    /// `self · m` for a constant matrix `m`.
    pub fn right_mul_const(&self, m: &Mat2) -> Self {
        self.mul(&Self::constant(m))
    }

    /// Matrix product `lhs · self`.
    pub fn left_mul(&self, lhs: &PolyMat2) -> Self {
        lhs.mul(self)
    }

    pub fn mul(&self, rhs: &PolyMat2) -> Self {
        let e = |i: usize, j: usize| {
            &(self.entry(i, 0) * rhs.entry(0, j)) + &(self.entry(i, 1) * rhs.entry(1, j))
        };
        Self::from_rows(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn transpose(&self) -> Self {
        Self::from_rows(
            self.entry(0, 0).clone(),
            self.entry(1, 0).clone(),
            self.entry(0, 1).clone(),
            self.entry(1, 1).clone(),
        )
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.cols
            .iter()
            .flat_map(|c| c.0.iter())
            .map(|p| p.max_abs_coeff())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl Add for &PolyMat2 {
    type Output = PolyMat2;
    fn add(self, rhs: &PolyMat2) -> PolyMat2 {
        PolyMat2::from_cols(&self.cols[0] + &rhs.cols[0], &self.cols[1] + &rhs.cols[1])
    }
}

impl Sub for &PolyMat2 {
    type Output = PolyMat2;
    fn sub(self, rhs: &PolyMat2) -> PolyMat2 {
        PolyMat2::from_cols(&self.cols[0] - &rhs.cols[0], &self.cols[1] - &rhs.cols[1])
    }
}

impl fmt::Display for PolyMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entry(0, 0),
            self.entry(0, 1),
            self.entry(1, 0),
            self.entry(1, 1)
        )
    }
}
