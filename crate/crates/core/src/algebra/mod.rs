//! Coefficient rings and sparse two-variable Laurent polynomials.

mod poly;
mod text;
mod unimodular;

pub use poly::{LaurentPoly, Monomial, Var};
pub use unimodular::Unimodular;


/// `1 + X + Y`, the Ledrappier polynomial.
pub fn ledrappier(ring: crate::Ring) -> LaurentPoly {
    LaurentPoly::from_terms(ring, [((0, 0), 1), ((1, 0), 1), ((0, 1), 1)])
}

/// `(1 + X)(1 + Y)`, the four-dot polynomial.
pub fn four_dot(ring: crate::Ring) -> LaurentPoly {
    LaurentPoly::from_terms(ring, [((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)])
}

/// `(1 + X^2)(1 + Y^2)`, the four-dot polynomial on the index-4 sublattice.
pub fn sublattice_four_dot(ring: crate::Ring) -> LaurentPoly {
    LaurentPoly::from_terms(ring, [((0, 0), 1), ((2, 0), 1), ((0, 2), 1), ((2, 2), 1)])
}
