//! Elliptic curves over Q(t) with full 2-torsion: descent into square
//! classes of Q(t), the bounding group `H0` and its pruning by
//! specializations, the injectivity criterion, and generator certificates.

pub mod bounding;
pub mod certify;
pub mod presets;

use num_traits::Zero;

use crate::arith::{format_rational, Rational, SquareClassQ};
use crate::ellq::{EllipticCurveQ, PointQ};
use crate::error::{Error, Result};
use crate::poly::{squareclass_qt, IntPoly, RatFunc, SquareClassQt};
use crate::weierstrass::{Curve, Point};

pub type EllipticCurveQt = Curve<RatFunc>;
pub type PointQt = Point<RatFunc>;
pub type ClassTripleQt = [SquareClassQt; 3];

pub use bounding::{build_h0, injectivity_criterion, prune_h0, BoundingGroup, PruneMode, TauData};
pub use certify::{certify_generators_qt, QtOptions};

/// Curve with polynomial roots.
pub fn curve_qt(e1: IntPoly, e2: IntPoly, e3: IntPoly) -> Result<EllipticCurveQt> {
    Curve::new(RatFunc::from(e1), RatFunc::from(e2), RatFunc::from(e3))
}

/// `(e1 - e2)(e1 - e3)(e2 - e3)`.
pub fn discriminant_qt(curve: &EllipticCurveQt) -> RatFunc {
    let [a, b, c] = curve.e();
    a.sub(b).mul(&a.sub(c)).mul(&b.sub(c))
}

/// Coordinate-wise square classes of `x - e_i`, with the same zero
/// convention as over Q.
pub fn delta_qt(curve: &EllipticCurveQt, p: &PointQt) -> Result<ClassTripleQt> {
    curve.check(p)?;
    let x = match p {
        Point::Infinity => return Ok([SquareClassQt::one(), SquareClassQt::one(), SquareClassQt::one()]),
        Point::Affine { x, .. } => x,
    };
    let mut vals: [Option<SquareClassQt>; 3] = [None, None, None];
    for (i, e) in curve.e().iter().enumerate() {
        let d = x.sub(e);
        if !d.is_zero() {
            vals[i] = Some(squareclass_qt(&d)?);
        }
    }
    Ok(crate::ellq::descent::fill_triple(vals, |a, b| a.mul(b)))
}

fn bad(tau: &Rational, what: String) -> Error {
    Error::BadSpecialization { tau: format_rational(tau), factor: what }
}

/// The curve `E_tau` over Q.
pub fn specialize(curve: &EllipticCurveQt, tau: &Rational) -> Result<EllipticCurveQ> {
    let e: Vec<Rational> = curve.e().iter().map(|e| e.evaluate(tau)).collect::<Result<_>>()?;
    if discriminant_qt(curve).evaluate(tau)?.is_zero() {
        return Err(bad(tau, format!("discriminant {}", discriminant_qt(curve).pretty())));
    }
    Curve::new(e[0].clone(), e[1].clone(), e[2].clone())
}

pub fn specialize_point(p: &PointQt, tau: &Rational) -> Result<PointQ> {
    Ok(match p {
        Point::Infinity => Point::Infinity,
        Point::Affine { x, y } => Point::Affine { x: x.evaluate(tau)?, y: y.evaluate(tau)? },
    })
}

/// `h_tau` on a class triple.
pub fn specialize_triple(t: &ClassTripleQt, tau: &Rational) -> Result<[SquareClassQ; 3]> {
    Ok([t[0].evaluate(tau)?, t[1].evaluate(tau)?, t[2].evaluate(tau)?])
}

/// Parses a point written `X;Y` with each coordinate a rational function
/// (`[c0, c1, ...]`, `[..]/[..]` or a rational number), or `infinity`.
pub fn parse_point_qt(s: &str) -> Result<PointQt> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("infinity") || s == "O" {
        return Ok(Point::Infinity);
    }
    let (x, y) = s
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("point must look like X;Y: {s:?}")))?;
    Ok(Point::Affine { x: x.parse()?, y: y.parse()? })
}
