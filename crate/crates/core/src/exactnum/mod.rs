//! Exact scalar arithmetic, dense exact linear algebra and polynomial
//! factorization over a prime field or the rationals.

mod field;
mod matrix;
mod poly;

pub use field::{is_prime, Field, Scalar};
pub use matrix::Mat;
pub use poly::{factor, Poly};
