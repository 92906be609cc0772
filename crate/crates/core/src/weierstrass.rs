//! Curves `y^2 = (x - e1)(x - e2)(x - e3)` over a field, with the chord and
//! tangent group law. Shared by the curves over Q and over Q(t).

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::poly::RatFunc;

/// The field operations the group law needs.
pub trait FieldElement: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Inverse of a nonzero element.
    fn inv(&self) -> Self;
    fn render(&self) -> String;

    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

impl FieldElement for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn render(&self) -> String {
        format_rational(self)
    }
}

impl FieldElement for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_i64(n)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn inv(&self) -> Self {
        RatFunc::inv(self).expect("inverse of nonzero element")
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: FieldElement> Point<F> {
    pub fn affine(x: F, y: F) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(y),
        }
    }
}

impl<F: FieldElement> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({}, {})", x.render(), y.render()),
        }
    }
}

impl<F: FieldElement> Serialize for Point<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Point::Infinity => s.serialize_str("infinity"),
            Point::Affine { x, y } => [x.render(), y.render()].serialize(s),
        }
    }
}

/// `y^2 = (x - e1)(x - e2)(x - e3)` with distinct `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve<F> {
    e: [F; 3],
}

impl<F: FieldElement> Curve<F> {
    pub fn new(e1: F, e2: F, e3: F) -> Result<Self> {
        if e1 == e2 || e1 == e3 || e2 == e3 {
            return Err(Error::Singular(format!(
                "roots {}, {}, {} are not distinct",
                e1.render(),
                e2.render(),
                e3.render()
            )));
        }
        Ok(Curve { e: [e1, e2, e3] })
    }

    pub fn e(&self) -> &[F; 3] {
        &self.e
    }

    pub fn rhs(&self, x: &F) -> F {
        x.sub(&self.e[0]).mul(&x.sub(&self.e[1])).mul(&x.sub(&self.e[2]))
    }

    fn a2(&self) -> F {
        self.e[0].add(&self.e[1]).add(&self.e[2]).neg()
    }

    fn a4(&self) -> F {
        let [a, b, c] = &self.e;
        a.mul(b).add(&a.mul(c)).add(&b.mul(c))
    }

    pub fn contains(&self, p: &Point<F>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => y.mul(y) == self.rhs(x),
        }
    }

    pub fn point(&self, x: F, y: F) -> Result<Point<F>> {
        let p = Point::Affine { x, y };
        self.check(&p)?;
        Ok(p)
    }

    pub fn check(&self, p: &Point<F>) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve(p.to_string()))
        }
    }

    pub fn two_torsion(&self) -> [Point<F>; 3] {
        self.e.clone().map(|x| Point::Affine { x, y: F::zero() })
    }

    pub fn neg(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: x.clone(), y: y.neg() },
        }
    }

    /// Group law on points already known to lie on the curve.
    pub fn add_unchecked(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if y1.add(y2).is_zero() {
                return Point::Infinity;
            }
            // tangent slope (3x^2 + 2 a2 x + a4) / 2y
            let num = F::from_i64(3)
                .mul(x1)
                .mul(x1)
                .add(&F::from_i64(2).mul(&self.a2()).mul(x1))
                .add(&self.a4());
            num.div(&F::from_i64(2).mul(y1))
        } else {
            y2.sub(y1).div(&x2.sub(x1))
        };
        let x3 = lambda.mul(&lambda).sub(&self.a2()).sub(x1).sub(x2);
        let y3 = lambda.mul(&x1.sub(&x3)).sub(y1);
        Point::Affine { x: x3, y: y3 }
    }

    pub fn add(&self, p: &Point<F>, q: &Point<F>) -> Result<Point<F>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn multiply_unchecked(&self, n: i64, p: &Point<F>) -> Point<F> {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn multiply(&self, n: i64, p: &Point<F>) -> Result<Point<F>> {
        self.check(p)?;
        Ok(self.multiply_unchecked(n, p))
    }

    /// `sum n_i P_i`.
    pub fn combination(&self, coeffs: &[i64], points: &[Point<F>]) -> Point<F> {
        coeffs
            .iter()
            .zip(points)
            .fold(Point::Infinity, |acc, (&n, p)| self.add_unchecked(&acc, &self.multiply_unchecked(n, p)))
    }
}
