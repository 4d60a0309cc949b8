//! Nonsymmetric Jacobi polynomials `E(n, k)` and the Cherednik operator.
//!
//! `E(n, k)` is the Gram–Schmidt orthogonalization of the monomials in the total order
//! `1 < z < z^{-1} < z^2 < z^{-2} < ...`, normalized to be monic in `z^n`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multiplicity::Multiplicity;
use crate::pairing::InnerProductEngine;
use crate::rational::{fmt_rational, int, Rational};
use crate::verdict::OperatorVerdict;

/// Rank of `z^e` in the order `1 < z < z^{-1} < z^2 < z^{-2} < ...`.
pub fn ord(e: i64) -> u64 {
    match e {
        0 => 0,
        e if e > 0 => 2 * e as u64 - 1,
        e => 2 * e.unsigned_abs(),
    }
}

/// Inverse of [`ord`].
pub fn exponent_at(rank: u64) -> i64 {
    if rank == 0 {
        0
    } else if rank % 2 == 1 {
        rank.div_ceil(2) as i64
    } else {
        -((rank / 2) as i64)
    }
}

/// True when every monomial of `p` is `<= z^n` in the monomial order.
pub fn supported_below(p: &LaurentPoly, n: i64) -> bool {
    p.terms().all(|(e, _)| ord(e) <= ord(n))
}

/// Apply the Cherednik operator
/// `D_k = z∂_z + k1 (1 - z^{-1})^{-1}(1 - s) + 2 k2 (1 - z^{-2})^{-1}(1 - s) - ρ(k)`.
///
/// For root scale `c` the rescaled operator
/// `z∂_z + c k1 (1 - z^{-c})^{-1}(1 - s) + 2c k2 (1 - z^{-2c})^{-1}(1 - s) - c ρ(k)` is used,
/// which acts on `p(z^c)` as `c · (D_k p)(z^c)`.
pub fn cherednik_apply(k: &Multiplicity, p: &LaurentPoly) -> Result<LaurentPoly> {
    let c = k.scale();
    let ci = int(c);
    let mut out = p.euler();
    if !k.k1().is_zero() {
        out = out + p.reflect_divide(c)?.scale(&(k.k1() * &ci));
    }
    if !k.k2().is_zero() {
        out = out + p.reflect_divide(2 * c)?.scale(&(k.k2() * int(2 * c)));
    }
    out = out - p.scale(&k.scaled_rho());
    Ok(out)
}

/// Eigenvalue of `D_k` on `E(n, k)`: `n + ρ(k)` for `n > 0`, `n - ρ(k)` for `n <= 0`.
pub fn eigenvalue(k: &Multiplicity, n: i64) -> Rational {
    if n > 0 {
        int(n) + k.rho()
    } else {
        int(n) - k.rho()
    }
}

/// The subleading coefficient `k1 / (1 + 2n + 2ρ(k))` of `E(n+1, k)` at `z^{-n}`.
pub fn subleading_coefficient(k: &Multiplicity, n: u64) -> Rational {
    k.k1() / (int(1) + int(2 * n as i64) + int(2) * k.rho())
}

/// Gram–Schmidt cache for one multiplicity. Fills monotonically up the monomial order.
#[derive(Clone, Debug)]
pub struct NonsymFamily {
    engine: InnerProductEngine,
    /// `(E, (E, E)_k)` indexed by rank.
    basis: Vec<(LaurentPoly, Rational)>,
}

impl NonsymFamily {
    pub fn new(k: &Multiplicity) -> Result<Self> {
        if !k.is_exact() {
            return Err(Error::Mode("Gram–Schmidt construction needs exact mode".into()));
        }
        if k.scale() != 1 {
            return Err(Error::Mode(
                "E(n,k) is built at root scale 1; rescale the result for scale 2".into(),
            ));
        }
        Ok(Self { engine: InnerProductEngine::new(k)?, basis: Vec::new() })
    }

    pub fn multiplicity(&self) -> &Multiplicity {
        self.engine.multiplicity()
    }

    pub fn engine(&self) -> &InnerProductEngine {
        &self.engine
    }

    fn fill_to(&mut self, rank: u64) -> Result<()> {
        while (self.basis.len() as u64) <= rank {
            let e = exponent_at(self.basis.len() as u64);
            let mono = LaurentPoly::monomial(e);
            let mut v = mono.clone();
            for (b, norm) in &self.basis {
                let proj = self.engine.ct_pair(b, &mono)? / norm;
                v = v - b.scale(&proj);
            }
            let norm = self.engine.ct_pair(&v, &v)?;
            if norm.is_zero() {
                return Err(Error::DegenerateGram(e));
            }
            self.basis.push((v, norm));
        }
        Ok(())
    }

    /// `E(n, k)`.
    pub fn e(&mut self, n: i64) -> Result<&LaurentPoly> {
        let rank = ord(n);
        self.fill_to(rank)?;
        Ok(&self.basis[rank as usize].0)
    }

    /// `(E(n,k), E(n,k))_k`.
    pub fn norm(&mut self, n: i64) -> Result<Rational> {
        let rank = ord(n);
        self.fill_to(rank)?;
        Ok(self.basis[rank as usize].1.clone())
    }

    /// Checks `D_k E(n,k) = λ_n E(n,k)` exactly.
    pub fn eigen_check(&mut self, n: i64) -> Result<OperatorVerdict> {
        let k = self.multiplicity().clone();
        let e = self.e(n)?.clone();
        let lambda = eigenvalue(&k, n);
        let resid = cherednik_apply(&k, &e)? - e.scale(&lambda);
        Ok(OperatorVerdict::exact(
            format!("eigen k={k} n={n}"),
            &resid.max_abs_coeff(),
            format!("lambda={}", fmt_rational(&lambda)),
        ))
    }

    /// Checks that the coefficient of `z^{-n}` in `E(n+1,k)` is `k1/(1+2n+2ρ)`.
    pub fn subleading_check(&mut self, n: u64) -> Result<OperatorVerdict> {
        let k = self.multiplicity().clone();
        let expected = subleading_coefficient(&k, n);
        let observed = self.e(n as i64 + 1)?.coeff(-(n as i64));
        Ok(OperatorVerdict::exact(
            format!("subleading k={k} n={n}"),
            &(&observed - &expected).abs(),
            format!("coefficient={}", fmt_rational(&observed)),
        ))
    }
}

/// `E(n, k)` by Gram–Schmidt.
pub fn gram_schmidt_e(k: &Multiplicity, n: i64) -> Result<LaurentPoly> {
    NonsymFamily::new(k)?.e(n).cloned()
}

/// `E(n, k)` as the monic eigenfunction of `D_k` supported on monomials `<= z^n`.
///
/// `D_k` is triangular in the monomial order with diagonal `λ_m` on `z^m`, so the
/// lower coefficients follow by back-substitution. Works for any rational `k`
/// whose eigenvalues `λ_m` are distinct along the way.
pub fn eigenfunction_e(k: &Multiplicity, n: i64) -> Result<LaurentPoly> {
    if k.scale() != 1 {
        return Err(Error::Mode("eigenfunction construction runs at root scale 1".into()));
    }
    let top = ord(n);
    let lambda = eigenvalue(k, n);
    let images: Vec<LaurentPoly> = (0..=top)
        .map(|r| cherednik_apply(k, &LaurentPoly::monomial(exponent_at(r))))
        .collect::<Result<_>>()?;
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); top as usize + 1];
    coeffs[top as usize] = Rational::one();
    for r in (0..top).rev() {
        let e = exponent_at(r);
        let mut acc = Rational::zero();
        for r2 in (r + 1)..=top {
            let c = &coeffs[r2 as usize];
            if !c.is_zero() {
                acc += c * images[r2 as usize].coeff(e);
            }
        }
        let gap = &lambda - eigenvalue(k, e);
        if gap.is_zero() {
            return Err(Error::ParameterOutOfRange(format!(
                "eigenvalue collision between z^{n} and z^{e} for k={k}"
            )));
        }
        coeffs[r as usize] = acc / gap;
    }
    Ok(LaurentPoly::from_terms(
        coeffs.into_iter().enumerate().map(|(r, c)| (exponent_at(r as u64), c)),
    ))
}

/// Free-function form of [`NonsymFamily::eigen_check`].
pub fn eigen_check(k: &Multiplicity, n: i64) -> Result<OperatorVerdict> {
    NonsymFamily::new(k)?.eigen_check(n)
}

/// Free-function form of [`NonsymFamily::subleading_check`].
pub fn subleading_check(k: &Multiplicity, n: u64) -> Result<OperatorVerdict> {
    NonsymFamily::new(k)?.subleading_check(n)
}
