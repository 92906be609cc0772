//! Places of Q, p-adic square classes and Hilbert symbols.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::rational::Rational;

/// A place of Q: the real place or a finite prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(BigUint),
}

impl Place {
    pub fn prime(p: u64) -> Self {
        Place::Prime(BigUint::from(p))
    }

    /// F_2-dimension of Q_v^x / Q_v^x^2.
    pub fn class_dim(&self) -> usize {
        match self {
            Place::Real => 1,
            Place::Prime(p) if *p == BigUint::from(2u32) => 3,
            Place::Prime(_) => 2,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "REAL"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// p-adic valuation of a nonzero integer; returns the valuation and the
/// cofactor.
pub fn split_valuation(n: &BigInt, p: &BigUint) -> (u64, BigInt) {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p.clone());
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(r: &Rational, p: &BigUint) -> i64 {
    let (a, _) = split_valuation(r.numer(), p);
    let (b, _) = split_valuation(r.denom(), p);
    a as i64 - b as i64
}

/// Jacobi symbol (a/n) for odd positive n.
pub fn jacobi(a: &BigInt, n: &BigUint) -> i8 {
    let n_int = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n_int).magnitude().clone();
    let mut n = n.clone();
    let mut result = 1i8;
    let three = BigUint::from(3u32);
    let five = BigUint::from(5u32);
    let eight = BigUint::from(8u32);
    let four = BigUint::from(4u32);
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n8 = &n % &eight;
        if tz % 2 == 1 && (n8 == three || n8 == five) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        if &a % &four == three && &n % &four == three {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Legendre symbol for a small odd prime.
pub fn legendre_u64(a: i128, p: u64) -> i8 {
    let r = a.rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    if super::factor::powmod_u64(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// The square class of a nonzero rational in Q_v^x / Q_v^x^2, as a bit
/// vector of width `place.class_dim()`.
///
/// Bit layout: real place `[negative]`; odd p `[v odd, unit non-residue]`;
/// p = 2 `[v odd, unit = 3 mod 4, unit = +-3 mod 8]`.
pub fn local_class(x: &Rational, place: &Place) -> u8 {
    debug_assert!(!x.is_zero());
    match place {
        Place::Real => x.is_negative() as u8,
        Place::Prime(p) => {
            // x and numer*denom share a square class
            let n = x.numer() * x.denom();
            let (v, u) = split_valuation(&n, p);
            let vbit = (v % 2) as u8;
            if *p == BigUint::from(2u32) {
                let u8_ = u.mod_floor(&BigInt::from(8)).to_u8().unwrap();
                let minus_one = (u8_ % 4 == 3) as u8;
                let five = (u8_ == 3 || u8_ == 5) as u8;
                vbit | (minus_one << 1) | (five << 2)
            } else {
                let nonres = (jacobi(&u, p) == -1) as u8;
                vbit | (nonres << 1)
            }
        }
    }
}

/// Whether a nonzero rational is a square in Q_v.
pub fn is_square_in_qp(a: &Rational, place: &Place) -> bool {
    local_class(a, place) == 0
}

/// Hilbert symbol (a, b)_v for nonzero rationals.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: &Place) -> i8 {
    debug_assert!(!a.is_zero() && !b.is_zero());
    match place {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) => {
            let an = a.numer() * a.denom();
            let bn = b.numer() * b.denom();
            let (alpha, u) = split_valuation(&an, p);
            let (beta, v) = split_valuation(&bn, p);
            if *p == BigUint::from(2u32) {
                let eps = |x: &BigInt| -> u64 {
                    let r = x.mod_floor(&BigInt::from(4)).to_u64().unwrap();
                    ((r - 1) / 2) % 2
                };
                let omega = |x: &BigInt| -> u64 {
                    let r = x.mod_floor(&BigInt::from(8)).to_u64().unwrap();
                    ((r * r - 1) / 8) % 2
                };
                let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
                if e % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                // (-1)^(alpha*beta*(p-1)/2) (u/p)^beta (v/p)^alpha
                let mut s: i8 = 1;
                let half = (p - BigUint::one()) / BigUint::from(2u32);
                if alpha % 2 == 1 && beta % 2 == 1 && half.is_odd() {
                    s = -s;
                }
                if beta % 2 == 1 {
                    s *= jacobi(&u, p);
                }
                if alpha % 2 == 1 {
                    s *= jacobi(&v, p);
                }
                s
            }
        }
    }
}

/// The places relevant to a product-formula check for `a` and `b`: the
/// real place and every prime dividing `2ab`.
pub fn relevant_places(a: &Rational, b: &Rational) -> Vec<Place> {
    let mut primes = vec![BigUint::from(2u32)];
    for n in [a.numer(), a.denom(), b.numer(), b.denom()] {
        if let Ok(f) = super::factor::factor_integer(n) {
            primes.extend(f.into_iter().map(|(p, _)| p));
        }
    }
    primes.sort();
    primes.dedup();
    let mut out = vec![Place::Real];
    out.extend(primes.into_iter().map(Place::Prime));
    out
}
