//! Gauss–Jacobi quadrature for `∫_{-1}^{1} f(x) (1-x)^a (1+x)^b dx`.
//!
//! Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix built from the
//! monic three-term recurrence of the Jacobi weight; weights are `μ0 · v0²` where `v0`
//! is the first component of the normalized eigenvector (Golub–Welsch).

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub alpha_exp: f64,
    pub beta_exp: f64,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i f(x_i)`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(*x))
            .sum()
    }
}

/// Total mass `2^{a+b+1} Γ(a+1) Γ(b+1) / Γ(a+b+2)` of the Jacobi weight.
pub fn jacobi_mass(a: f64, b: f64) -> f64 {
    // tgamma overflows past ~171; switch to logs well before that
    if a + b + 2.0 < 150.0 {
        2f64.powf(a + b + 1.0) * libm::tgamma(a + 1.0) * libm::tgamma(b + 1.0) / libm::tgamma(a + b + 2.0)
    } else {
        let lg = libm::lgamma;
        ((a + b + 1.0) * std::f64::consts::LN_2 + lg(a + 1.0) + lg(b + 1.0) - lg(a + b + 2.0)).exp()
    }
}

/// Recurrence coefficients `(diag, offdiag²)` of the monic Jacobi polynomials.
fn recurrence(a: f64, b: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let ab = a + b;
    let mut diag = Vec::with_capacity(n);
    let mut off2 = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n {
        let kf = k as f64;
        let d = if k == 0 {
            (b - a) / (ab + 2.0)
        } else {
            let s = 2.0 * kf + ab;
            (b * b - a * a) / (s * (s + 2.0))
        };
        diag.push(d);
    }
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        let v = if k == 1 {
            // (1 + a + b) cancels between numerator and denominator
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        off2.push(v);
    }
    (diag, off2)
}

/// `n`-point Gauss–Jacobi rule for exponents `alpha_exp` on `(1-x)` and `beta_exp` on `(1+x)`.
pub fn gauss_jacobi_rule(alpha_exp: f64, beta_exp: f64, n: usize) -> Result<QuadRule> {
    if !(alpha_exp > -1.0 && beta_exp > -1.0) || !alpha_exp.is_finite() || !beta_exp.is_finite() {
        return Err(Error::ParameterOutOfRange(format!(
            "Jacobi exponents must exceed -1, got ({alpha_exp}, {beta_exp})"
        )));
    }
    if n == 0 {
        return Err(Error::ParameterOutOfRange("quadrature needs at least one node".into()));
    }
    let (diag, off2) = recurrence(alpha_exp, beta_exp, n);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
    }
    for i in 0..n - 1 {
        let o = off2[i].sqrt();
        m[(i, i + 1)] = o;
        m[(i + 1, i)] = o;
    }
    let eig = SymmetricEigen::new(m);
    let mass = jacobi_mass(alpha_exp, beta_exp);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], mass * v0 * v0)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadRule { nodes, weights, alpha_exp, beta_exp })
}
