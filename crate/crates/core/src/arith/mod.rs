//! Exact integers and rationals, square classes of Q, local fields, and
//! F_2 linear algebra.

pub mod f2;
pub mod factor;
pub mod local;
pub mod rational;
pub mod squareclass;

pub use f2::{F2Space, F2Vec, LinearMap};
pub use factor::{factor_integer, is_prime};
pub use local::{hilbert_symbol, is_square_in_qp, local_class, Place};
pub use rational::{format_rational, parse_rational, Rational};
pub use squareclass::{squarefree_kernel, SquareClassQ};
