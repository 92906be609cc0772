//! Exact-arithmetic 2-descent toolkit.
//!
//! * [`arith`]: rationals, square classes, p-adic tests, F_2 linear algebra.
//! * [`poly`]: Z[t] arithmetic and factorization, Q(t) and its square classes.
//! * [`ellq`]: elliptic curves over Q with full 2-torsion: group law,
//!   2-Selmer groups, point search, generator certificates.
//! * [`ellqt`]: the same over Q(t), with specialization-based certification
//!   of Mordell-Weil generators.
//! * [`genus5`]: diophantine quadruples and their diagonal genus-5 curves.

pub mod arith;
pub mod certificate;
pub mod ellq;
pub mod ellqt;
pub mod error;
pub mod genus5;
pub mod poly;
pub mod weierstrass;

pub use error::{Error, Result};
