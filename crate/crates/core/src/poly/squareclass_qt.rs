//! Square classes of Q(t)^x: a constant class in Q^x/Q^x^2 times a product
//! of distinct primitive irreducible polynomials.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::{factor_int_poly, IntPoly, RatFunc};
use crate::arith::{format_rational, F2Vec, Rational, SquareClassQ};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClassQt {
    constant: SquareClassQ,
    polys: Vec<IntPoly>,
}

/// A generator of a finite piece of Q(t)^x/Q(t)^x^2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QtLabel {
    MinusOne,
    Prime(BigUint),
    Poly(IntPoly),
}

impl fmt::Display for QtLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QtLabel::MinusOne => write!(f, "-1"),
            QtLabel::Prime(p) => write!(f, "{p}"),
            QtLabel::Poly(g) => write!(f, "{}", g.pretty()),
        }
    }
}

impl SquareClassQt {
    pub fn one() -> Self {
        SquareClassQt { constant: SquareClassQ::one(), polys: Vec::new() }
    }

    pub fn constant(c: SquareClassQ) -> Self {
        SquareClassQt { constant: c, polys: Vec::new() }
    }

    /// Class of a primitive irreducible polynomial with positive leading coefficient.
    pub fn poly(g: IntPoly) -> Self {
        SquareClassQt { constant: SquareClassQ::one(), polys: vec![g] }
    }

    pub fn constant_part(&self) -> &SquareClassQ {
        &self.constant
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    pub fn is_one(&self) -> bool {
        self.constant.is_one() && self.polys.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut polys = Vec::with_capacity(self.polys.len() + o.polys.len());
        let (mut i, mut j) = (0, 0);
        while i < self.polys.len() || j < o.polys.len() {
            match (self.polys.get(i), o.polys.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    polys.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    polys.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    polys.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    polys.push(b.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SquareClassQt { constant: self.constant.mul(&o.constant), polys }
    }

    /// A representative squarefree polynomial `c * prod(g)`.
    pub fn representative(&self) -> IntPoly {
        IntPoly::product(self.polys.iter()).scale(&self.constant.to_integer())
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from(self.representative())
    }

    /// Specialization at `t = tau`; fails if some polynomial factor vanishes.
    pub fn evaluate(&self, tau: &Rational) -> Result<SquareClassQ> {
        let (a, b) = (tau.numer(), tau.denom());
        let mut out = self.constant.clone();
        for g in &self.polys {
            let v = g.evaluate_homogeneous(a, b);
            if v.is_zero() {
                return Err(Error::BadSpecialization {
                    tau: format_rational(tau),
                    factor: g.pretty(),
                });
            }
            // g(a/b) = v / b^deg, and b^deg has the class of b^(deg mod 2)
            let w = if g.deg() % 2 == 1 { v * b } else { v };
            out = out.mul(&SquareClassQ::of_integer(&w)?);
        }
        Ok(out)
    }

    /// Coordinates relative to a label list; labels must cover the support.
    pub fn to_bits(&self, labels: &[QtLabel]) -> Result<F2Vec> {
        let mut v = F2Vec::zero(labels.len());
        let find = |l: &QtLabel| labels.iter().position(|x| x == l).ok_or(Error::IncompatibleLabels);
        if self.constant.is_negative() {
            v.flip(find(&QtLabel::MinusOne)?);
        }
        for p in self.constant.primes() {
            v.flip(find(&QtLabel::Prime(p.clone()))?);
        }
        for g in &self.polys {
            v.flip(find(&QtLabel::Poly(g.clone()))?);
        }
        Ok(v)
    }

    pub fn from_bits(bits: &F2Vec, labels: &[QtLabel]) -> Self {
        let mut out = SquareClassQt::one();
        for i in bits.ones() {
            out = out.mul(&SquareClassQt::from_label(&labels[i]));
        }
        out
    }

    pub fn from_label(l: &QtLabel) -> Self {
        match l {
            QtLabel::MinusOne => SquareClassQt::constant(SquareClassQ::minus_one()),
            QtLabel::Prime(p) => SquareClassQt::constant(SquareClassQ::prime(p.clone())),
            QtLabel::Poly(g) => SquareClassQt::poly(g.clone()),
        }
    }

    /// The labels appearing in this class.
    pub fn support(&self) -> Vec<QtLabel> {
        let mut out = Vec::new();
        if self.constant.is_negative() {
            out.push(QtLabel::MinusOne);
        }
        out.extend(self.constant.primes().iter().cloned().map(QtLabel::Prime));
        out.extend(self.polys.iter().cloned().map(QtLabel::Poly));
        out
    }
}

/// The square class of a nonzero element of Q(t).
pub fn squareclass_qt(f: &RatFunc) -> Result<SquareClassQt> {
    if f.is_zero() {
        return Err(Error::Zero("square class of zero"));
    }
    let mut out = SquareClassQt::one();
    for part in [f.num(), f.den()] {
        let fac = factor_int_poly(part)?;
        let primes = fac
            .content
            .iter()
            .filter(|(_, e)| e % 2 == 1)
            .map(|(p, _)| p.clone())
            .collect();
        let mut cls = SquareClassQt::constant(SquareClassQ::from_parts(fac.negative, primes));
        for (g, e) in fac.factors {
            if e % 2 == 1 {
                cls = cls.mul(&SquareClassQt::poly(g));
            }
        }
        out = out.mul(&cls);
    }
    Ok(out)
}

/// Square class of the specialization of `f` at `tau`.
pub fn evaluate_squareclass(c: &SquareClassQt, tau: &Rational) -> Result<SquareClassQ> {
    c.evaluate(tau)
}

impl fmt::Display for SquareClassQt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.constant.to_integer();
        let mut parts: Vec<String> = Vec::new();
        if self.polys.is_empty() || c != BigInt::from(1) {
            parts.push(c.to_string());
        }
        for g in &self.polys {
            if g.coeffs().len() == 2 && g.coeff(0).is_zero() {
                parts.push(g.pretty());
            } else {
                parts.push(format!("({})", g.pretty()));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for SquareClassQt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SquareClassQt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn classes_of_examples() {
        // -2t(t-1)(3t-1)
        let f = RatFunc::from(p(&[0, -2, 2]).mul(&p(&[-1, 3])).scale(&BigInt::from(-1)));
        let c = squareclass_qt(&f).unwrap();
        assert!(c.constant_part().is_negative());
        assert_eq!(c.constant_part().to_integer(), BigInt::from(-2));
        assert_eq!(c.polys().len(), 3);
        assert_eq!(c.to_string(), "-2*t*(t - 1)*(3t - 1)");

        // (t^2-1)^2 * 8 / t  has class 2t
        let g = RatFunc::new(p(&[-1, 0, 1]).pow(2).scale(&BigInt::from(8)), p(&[0, 1])).unwrap();
        assert_eq!(squareclass_qt(&g).unwrap().to_string(), "2*t");
        assert!(squareclass_qt(&RatFunc::zero()).is_err());
    }

    #[test]
    fn specialization() {
        let c = squareclass_qt(&RatFunc::from(p(&[-1, 0, 1]))).unwrap();
        assert_eq!(c.evaluate(&int(2)).unwrap().to_integer(), BigInt::from(3));
        assert!(matches!(c.evaluate(&int(1)), Err(Error::BadSpecialization { .. })));
        assert_eq!(c.evaluate(&rat(1, 2)).unwrap().to_integer(), BigInt::from(-3));
    }

    proptest! {
        #[test]
        fn evaluation_is_a_homomorphism(a in -4i64..=4, b in 1i64..=4, c in -4i64..=4, d in -3i64..=3, n in 1i64..=5, m in 1i64..=5) {
            let f = RatFunc::new(p(&[a, b]), p(&[n])).unwrap();
            let g = RatFunc::new(p(&[c, d, 1]), p(&[m])).unwrap();
            let tau = rat(5, 7);
            let cf = squareclass_qt(&f).unwrap();
            let cg = squareclass_qt(&g).unwrap();
            let cfg = squareclass_qt(&f.mul(&g)).unwrap();
            prop_assert_eq!(cf.mul(&cg), cfg.clone());
            if let (Ok(x), Ok(y)) = (f.evaluate(&tau), g.evaluate(&tau)) {
                if !x.is_zero() && !y.is_zero() {
                    let direct = SquareClassQ::of_rational(&(x * y)).unwrap();
                    prop_assert_eq!(cfg.evaluate(&tau).unwrap(), direct);
                }
            }
        }
    }
}
