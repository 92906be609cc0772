//! Square classes of Q^x, canonically as a sign and a sorted prime list.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::factor::factor_integer;
use super::rational::Rational;
use crate::error::{Error, Result};

/// An element of Q^x / Q^x^2, represented by the squarefree integer
/// `sign * prod(primes)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClassQ {
    negative: bool,
    primes: Vec<BigUint>,
}

impl SquareClassQ {
    pub fn one() -> Self {
        SquareClassQ { negative: false, primes: Vec::new() }
    }

    pub fn minus_one() -> Self {
        SquareClassQ { negative: true, primes: Vec::new() }
    }

    /// Class of a prime. The caller guarantees primality.
    pub fn prime(p: BigUint) -> Self {
        SquareClassQ { negative: false, primes: vec![p] }
    }

    /// Builds a class from parts, sorting and cancelling repeated primes.
    pub fn from_parts(negative: bool, mut primes: Vec<BigUint>) -> Self {
        primes.sort();
        let mut out: Vec<BigUint> = Vec::with_capacity(primes.len());
        for p in primes {
            if out.last() == Some(&p) {
                out.pop();
            } else {
                out.push(p);
            }
        }
        SquareClassQ { negative, primes: out }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.primes.is_empty()
    }

    /// The squarefree integer representing this class.
    pub fn to_integer(&self) -> BigInt {
        let m: BigUint = self.primes.iter().fold(BigUint::one(), |acc, p| acc * p);
        if self.negative {
            -BigInt::from(m)
        } else {
            BigInt::from(m)
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_integer(self.to_integer())
    }

    /// Product of classes: sign product and symmetric difference of primes.
    pub fn mul(&self, other: &SquareClassQ) -> SquareClassQ {
        let mut out = Vec::with_capacity(self.primes.len() + other.primes.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.primes, &other.primes);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SquareClassQ { negative: self.negative ^ other.negative, primes: out }
    }

    /// Class of a nonzero integer.
    pub fn of_integer(n: &BigInt) -> Result<Self> {
        squarefree_kernel(n)
    }

    /// Class of a nonzero rational `p/q`, which equals the class of `p*q`.
    pub fn of_rational(r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Zero("square class of zero"));
        }
        Ok(squarefree_kernel(r.numer())?.mul(&squarefree_kernel(r.denom())?))
    }
}

/// The squarefree part of a nonzero integer, as a square class.
pub fn squarefree_kernel(n: &BigInt) -> Result<SquareClassQ> {
    if n.is_zero() {
        return Err(Error::Zero("squarefree_kernel"));
    }
    let primes = factor_integer(n)?
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .collect();
    Ok(SquareClassQ { negative: n.is_negative(), primes })
}

impl fmt::Display for SquareClassQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_integer())
    }
}

impl FromStr for SquareClassQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let r = super::rational::parse_rational(s)?;
        SquareClassQ::of_rational(&r)
    }
}

impl Serialize for SquareClassQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SquareClassQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(n: i64) -> i64 {
        let c = squarefree_kernel(&BigInt::from(n)).unwrap();
        i64::try_from(c.to_integer()).unwrap()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(k(8), 2);
        assert_eq!(k(-45), -5);
        assert_eq!(k(777480), 194370);
        assert_eq!(k(1), 1);
        assert_eq!(k(-1), -1);
        assert!(squarefree_kernel(&BigInt::zero()).is_err());
    }

    #[test]
    fn products_cancel() {
        let a: SquareClassQ = "6".parse().unwrap();
        let b: SquareClassQ = "-10".parse().unwrap();
        assert_eq!(a.mul(&b).to_integer(), BigInt::from(-15));
        assert!(a.mul(&a).is_one());
        let r: SquareClassQ = "3/12".parse().unwrap();
        assert!(r.is_one());
    }

    // trial-division oracle, independent of the factorization path
    fn kernel_oracle(mut n: i64) -> i64 {
        let sign = n.signum();
        n = n.abs();
        let mut out = 1;
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e % 2 == 1 {
                out *= p;
            }
            p += 1;
        }
        sign * out * n
    }

    proptest! {
        #[test]
        fn kernel_ignores_square_factors(n in -100_000i64..100_000, m in 1i64..3000) {
            prop_assume!(n != 0);
            prop_assert_eq!(k(n * m * m), k(n));
            prop_assert_eq!(k(n), kernel_oracle(n));
        }

        #[test]
        fn product_is_class_of_product(a in -5000i64..5000, b in -5000i64..5000) {
            prop_assume!(a != 0 && b != 0);
            let ca = squarefree_kernel(&BigInt::from(a)).unwrap();
            let cb = squarefree_kernel(&BigInt::from(b)).unwrap();
            prop_assert_eq!(ca.mul(&cb), squarefree_kernel(&BigInt::from(a * b)).unwrap());
        }
    }
}
