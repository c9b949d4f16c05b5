//! Exact-arithmetic kernel shared by every verifier.

mod charpoly;
mod matrix;
pub mod modp;
mod poly;
pub mod rational;
mod ring;

pub use charpoly::{charpoly_bound_bits, charpoly_exact, charpoly_multimodular};
pub use matrix::{IntMatrix, Matrix, PolyMatrix};
pub use poly::{Poly, ZPoly};
pub use rational::{nullspace_rational, RatMatrix};
pub use ring::{binomial, Ring};
