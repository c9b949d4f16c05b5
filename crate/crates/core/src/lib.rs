//! Exact arithmetic for netted binomial matrices.
//!
//! A matrix is *netted* when every 2x2 cell of its entries obeys a fixed
//! linear relation `delta*a[i][j] = alpha*a[i-1][j] + beta*a[i-1][j-1] + gamma*a[i][j-1]`.
//! Powers of such matrices stay netted, with coefficients that follow a
//! second-order recurrence. The generalized Fibonacci matrix `T_n(m)` is the
//! motivating instance: its powers applied to a fixed vector produce `n`
//! consecutive terms of `U_e(m)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: rings (`Z`, `Z[m]`), dense matrices, polynomials, exact
//!   characteristic polynomials, rational kernels and `Z/p` matrices.
//! - [`sequences`]: `U_e(m)`, `V_e(m)` and their residues mod `p`.
//! - [`netted`]: coefficient quads of matrix powers, binomial families and
//!   kernel sampling of tableaux.
//! - [`fibmat`]: `T_n(m)`, its inverse, closed-form entries and sum identities.
//! - [`genfunc`]: the bivariate generating function of the entries of powers.
//! - [`modular`]: entry points, orders and congruences of `T_n(m)` mod `p`.
//! - [`conjecture`]: the Lucas-factor product for the characteristic polynomial.
//!
//! Every verifier returns [`Report`]s; nothing here uses floating point.

pub mod conjecture;
pub mod error;
pub mod exact;
pub mod fibmat;
pub mod genfunc;
pub mod modular;
pub mod netted;
pub mod report;
pub mod sequences;

pub use error::{Error, Result};
pub use exact::{IntMatrix, Matrix, Poly, PolyMatrix, Ring, ZPoly};
pub use report::{Report, Status, Witness};
