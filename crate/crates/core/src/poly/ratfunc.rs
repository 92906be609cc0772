//! The rational function field Q(t).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::IntPoly;
use crate::arith::Rational;
use crate::error::{Error, Result};

/// An element `num / den` of Q(t), with `gcd(num, den) = 1` in Z[t]
/// (contents included) and `lc(den) > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd_z(&den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn t() -> Self {
        RatFunc::from(IntPoly::t())
    }

    pub fn from_i64(n: i64) -> Self {
        RatFunc::from(IntPoly::constant(BigInt::from(n)))
    }

    pub fn from_rational(r: &Rational) -> Self {
        RatFunc::new(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
            .expect("nonzero denominator")
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational number if this is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_constant()
            .then(|| Rational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    pub fn add(&self, o: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("nonzero denominator")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominator")
    }

    pub fn scale(&self, c: i64) -> Self {
        self.mul(&RatFunc::from_i64(c))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Zero("inverse of zero in Q(t)"));
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RatFunc::one(), |a, _| a.mul(self))
    }

    /// Value at `t = tau`; fails if the denominator vanishes there.
    pub fn evaluate(&self, tau: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(tau);
        if d.is_zero() {
            return Err(Error::BadSpecialization {
                tau: crate::arith::format_rational(tau),
                factor: self.den.pretty(),
            });
        }
        Ok(self.num.evaluate(tau) / d)
    }

    /// Exact square root, if this is a square in Q(t).
    pub fn sqrt(&self) -> Option<Self> {
        Some(RatFunc { num: self.num.sqrt_exact()?, den: self.den.sqrt_exact()? })
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    pub fn pretty(&self) -> String {
        if self.den.is_one() {
            self.num.pretty()
        } else {
            format!("({}) / ({})", self.num.pretty(), self.den.pretty())
        }
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    /// Accepts `[c0, c1, ...]` or `[c0, ...]/[d0, ...]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.find("]/") {
            Some(i) => {
                let num: IntPoly = s[..=i].parse()?;
                let den: IntPoly = s[i + 2..].parse()?;
                RatFunc::new(num, den)
            }
            None => {
                if s.starts_with('[') {
                    Ok(RatFunc::from(s.parse::<IntPoly>()?))
                } else {
                    Ok(RatFunc::from_rational(&crate::arith::parse_rational(s)?))
                }
            }
        }
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    /// Whether this is the constant one.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
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
    fn normalization() {
        let r = RatFunc::new(p(&[-2, 0, 2]), p(&[-4, -4])).unwrap();
        assert_eq!(r.num(), &p(&[1, -1]));
        assert_eq!(r.den(), &p(&[2]));
        let half = RatFunc::from_rational(&rat(1, 2));
        assert_eq!(half.to_string(), "[1]/[2]");
        assert_eq!("[1]/[2]".parse::<RatFunc>().unwrap(), half);
        assert_eq!("[0, 1]".parse::<RatFunc>().unwrap(), RatFunc::t());
        assert!(RatFunc::new(p(&[1]), IntPoly::zero()).is_err());
    }

    #[test]
    fn evaluation_and_sqrt() {
        let f = RatFunc::new(p(&[1]), p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.evaluate(&int(2)).unwrap(), rat(1, 3));
        assert!(matches!(f.evaluate(&int(1)), Err(Error::BadSpecialization { .. })));
        let g = RatFunc::new(p(&[1, 2]), p(&[0, 3])).unwrap();
        let sq = g.mul(&g);
        let r = sq.sqrt().unwrap();
        assert!(r == g || r == g.neg());
        assert!(RatFunc::t().sqrt().is_none());
        assert!(RatFunc::from_i64(-4).sqrt().is_none());
    }

    fn rf() -> impl Strategy<Value = RatFunc> {
        (prop::collection::vec(-5i64..=5, 0..3), prop::collection::vec(-5i64..=5, 1..3)).prop_filter_map(
            "nonzero denominator",
            |(n, d)| RatFunc::new(IntPoly::from_i64s(&n), IntPoly::from_i64s(&d)).ok(),
        )
    }

    proptest! {
        #[test]
        fn field_axioms(a in rf(), b in rf(), c in rf()) {
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(a.sub(&a), RatFunc::zero());
            if !b.is_zero() {
                prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
            }
            let tau = rat(7, 3);
            if let (Ok(x), Ok(y), Ok(z)) = (a.evaluate(&tau), b.evaluate(&tau), a.mul(&b).evaluate(&tau)) {
                prop_assert_eq!(x * y, z);
            }
        }
    }
}
