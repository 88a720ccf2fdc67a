//! Cubic twists `x^3 + y^3 = D` of the curve `x^3 + y^3 = 1`.
//!
//! The crate is organised bottom-up:
//!
//! - [`rings`]: exact arithmetic in `Z[w]` and `Z[i]`;
//! - [`symbols`]: cubic and quadratic residue symbols with an Euler-criterion oracle;
//! - [`kubota`]: Kubota symbols on congruence subgroups of `SL(2, Z[i])` and `SL(3, Z[w])`;
//! - [`lfunctions`]: Hecke-character coefficients of `L(E_D, s)` and central values;
//! - [`curves`]: rational points on `x^3 + y^3 = D` and cube-free bookkeeping;
//! - [`charsums`]: additive characters, cubic Gauss sums and the Dirichlet polynomial `T(w)`;
//! - [`averages`]: partial sums and statistics of central values.

pub mod arith;
pub mod averages;
pub mod charsums;
pub mod curves;
pub mod error;
pub mod kubota;
pub mod lfunctions;
pub mod rings;
pub mod symbols;

pub use averages::{CentralValues, Filter, GrowthFit, OnDemand, ValueTable};
pub use charsums::{AdditiveCharacter, DirichletPolynomialTerm, TPolynomial};
pub use curves::RationalPoint;
pub use error::{Error, Result};
pub use kubota::{Convention, IntMatrix, KubotaInvariants};
pub use lfunctions::{HeckeCoefficient, LOptions, LValueEstimate, Sign, TwistCurve};
pub use rings::{Factorization, QuadInt, Ring};
pub use symbols::{SymbolKind, SymbolValue};
