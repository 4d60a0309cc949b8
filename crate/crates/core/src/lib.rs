//! Exact nonsymmetric, vector-valued and matrix-valued Jacobi polynomials for the
//! rank-one root system BC1, the Cherednik operator and its matrix incarnations, and
//! checkers for the identities relating them.
//!
//! The layers, bottom up:
//!
//! * [`laurent`], [`polyx`], [`transport`]: exact Laurent polynomials in `z`, polynomials
//!   in `x = (z + z^{-1})/2`, and the maps `Γ`, Steinberg splitting and `Φ` between them.
//! * [`pairing`], [`quadrature`]: the `δ_k` inner product, exactly (constant terms) and
//!   numerically (Gauss–Jacobi).
//! * [`nonsym`]: `E(n, k)` and the Cherednik operator `D_k`.
//! * [`vector`]: `P(n, k) = Γ(E(n, k))`, `Γ_*(D_k)`, `ℳ(N, k)` and `𝒟_k`.
//! * [`classical`]: classical Jacobi polynomials, diagonalization of the matrix weight,
//!   shift operators and the decomposition of `E(n, k)`.
//! * [`spherical`]: the spinor operators `R_m`, `Q_m` and their identification with
//!   `Γ_*(D_{(0,m)})` on the doubled root system.
//! * [`record`], [`suite`]: serialization and the verification driver used by the CLI.

pub mod classical;
pub mod error;
pub mod laurent;
pub mod multiplicity;
pub mod nonsym;
pub mod pairing;
pub mod polyx;
pub mod quadrature;
pub mod rational;
pub mod record;
pub mod spherical;
pub mod suite;
pub mod transport;
pub mod vector;
pub mod verdict;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use multiplicity::{Mode, Multiplicity};
pub use pairing::{InnerProductEngine, PairValue};
pub use polyx::{Mat2, PolyMat2, PolyVec2, PolyX};
pub use rational::Rational;
pub use transport::VecLaurent2;
pub use verdict::{OperatorVerdict, Outcome};
