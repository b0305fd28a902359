//! Exact sparse multivariate polynomials over `QQ` and `FF(p)`.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::{BaseOrder, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::{ring, PolyRing, RingRef, VarTag};
