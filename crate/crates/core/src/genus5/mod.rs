//! Rational diophantine quadruples and the diagonal genus-5 curve of their
//! extensions: the ten rank-3 quadrics, the five elliptic quotients with
//! explicit maps, the descent map into five pairs of square classes and its
//! pruning by local images, the 2-torsion subgroup `G` and the double
//! covers it induces, the genus-2 quotient, and the morphism from the
//! one-parameter family onto the curve over Q(t).

pub mod cover;
pub mod curve;
pub mod genus2;
pub mod quadruple;
pub mod quotient;
pub mod selmer_set;
pub mod torsion;

use crate::arith::{rational::sqrt_exact, Rational};
use crate::poly::RatFunc;
use crate::weierstrass::FieldElement;

pub use cover::{build_cover, Biquadratic, CoverDescriptor};
pub use curve::{build_curve, extension_to_points, point_orbit, CurvePoint, Genus5Curve};
pub use genus2::{genus2_quotient, Genus2Model};
pub use quadruple::{
    family_extension, family_member, family_qt, regular_extensions, validate_quadruple, DiophQuadruple, Quadruple,
    QuadrupleQt, EXCLUDED_T,
};
pub use quotient::{delta_c, elliptic_quotient, map_point_to_quotient, pi_morphism, quotient_indices};
pub use selmer_set::{default_primes, is_good_prime, local_image, selmer_set_prune, PruneReport, QuotientData};
pub use torsion::{two_torsion_group_g, PairSet, TorsionGroupG};

/// Fields in which square roots can be decided exactly.
pub trait SqrtField: FieldElement {
    fn sqrt(&self) -> Option<Self>;
}

impl SqrtField for Rational {
    fn sqrt(&self) -> Option<Self> {
        sqrt_exact(self)
    }
}

impl SqrtField for RatFunc {
    fn sqrt(&self) -> Option<Self> {
        RatFunc::sqrt(self)
    }
}
