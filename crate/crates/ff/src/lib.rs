//! Exact arithmetic in GF(p^k), dense linear algebra and univariate
//! polynomials over finite fields.

mod error;
mod field;
mod gf2;
mod matrix;
mod poly;
mod system;

pub use error::{FfError, Result};
pub use field::{is_prime, prime_divisors, Elem, FieldSpec, MAX_FIELD_ORDER};
pub use matrix::{axpy, min_poly, Matrix, Rref};
pub use poly::Poly;
pub use system::{LinearSystem, SystemBuilder, Unknown};
