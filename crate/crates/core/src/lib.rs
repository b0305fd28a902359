//! Finite equivalence relations on affine schemes, made computable.
//!
//! Everything reduces to exact polynomial arithmetic over `QQ` or `FF(p)`
//! and Gröbner bases: relation axioms become ideal containments, quotients
//! become kernels of linear maps on truncated monomial spaces, and
//! subalgebra questions become elimination problems.

pub mod ambient;
pub mod effectivity;
pub mod eqrel;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod pinch;
pub mod poly;
pub mod quotient;
pub mod syntax;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use groebner::{Budget, GroebnerBasis, Ideal};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial, RingRef};
