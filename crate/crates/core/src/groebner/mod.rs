//! Buchberger's algorithm and the ideal-theoretic queries built on it.

mod buchberger;
mod ideal;
mod subalgebra;

pub use buchberger::{buchberger, Budget, Division, GroebnerBasis};
pub use ideal::{
    eliminate, eliminate_into, finite_over_block, ideal_equal, ideal_intersect, ideal_member, normal_form,
    radical_member, reduced_groebner, Ideal,
};
pub use subalgebra::{subalgebra_member, SubalgebraMembership};
