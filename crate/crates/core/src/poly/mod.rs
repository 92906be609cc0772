//! Polynomials over Z and F_p, factorization, and the field Q(t).

pub mod factor;
pub mod intpoly;
pub mod modp;
pub mod ratfunc;
pub mod squareclass_qt;

pub use factor::{factor_int_poly, is_irreducible, Factorization};
pub use intpoly::IntPoly;
pub use ratfunc::RatFunc;
pub use squareclass_qt::{evaluate_squareclass, squareclass_qt, QtLabel, SquareClassQt};
