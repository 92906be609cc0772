//! Elliptic curves over Q with full rational 2-torsion: descent, local
//! images, 2-Selmer groups, point search, saturation and generator
//! certificates.

pub mod certify;
pub mod descent;
pub mod local;
pub mod saturation;
pub mod search;
pub mod selmer;

use crate::arith::Rational;
use crate::weierstrass::{Curve, Point};

pub type EllipticCurveQ = Curve<Rational>;
pub type PointQ = Point<Rational>;

pub use certify::{certify_generators, CertifyOptions};
pub use descent::{descent_image, ClassTriple};
pub use local::{homogeneous_space_locally_solvable, local_image};
pub use search::point_search;
pub use selmer::{two_selmer_group, SelmerGroupQ};
