//! The 2-descent map E(Q) -> (Q^x/Q^x^2)^3.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{EllipticCurveQ, PointQ};
use crate::arith::rational::sqrt_exact_int;
use crate::arith::{factor_integer, F2Space, F2Vec, Rational, SquareClassQ};
use crate::error::{Error, Result};
use crate::weierstrass::Point;

pub type ClassTriple = [SquareClassQ; 3];

pub fn trivial_triple() -> ClassTriple {
    [SquareClassQ::one(), SquareClassQ::one(), SquareClassQ::one()]
}

pub fn triple_mul(a: &ClassTriple, b: &ClassTriple) -> ClassTriple {
    [a[0].mul(&b[0]), a[1].mul(&b[1]), a[2].mul(&b[2])]
}

/// Applies the zero-coordinate convention: a vanishing coordinate is
/// replaced by the product of the other two.
pub(crate) fn fill_triple<T: Clone>(vals: [Option<T>; 3], mul: impl Fn(&T, &T) -> T) -> [T; 3] {
    let zero = vals.iter().position(|v| v.is_none());
    match zero {
        None => vals.map(|v| v.unwrap()),
        Some(i) => {
            let j = (i + 1) % 3;
            let k = (i + 2) % 3;
            let a = vals[j].clone().unwrap();
            let b = vals[k].clone().unwrap();
            let mut out = [a.clone(), a.clone(), a.clone()];
            out[i] = mul(&a, &b);
            out[j] = a;
            out[k] = b;
            out
        }
    }
}

/// `(class(x-e1), class(x-e2), class(x-e3))`; infinity maps to `(1,1,1)`.
pub fn descent_image(curve: &EllipticCurveQ, p: &PointQ) -> Result<ClassTriple> {
    curve.check(p)?;
    let x = match p {
        Point::Infinity => return Ok(trivial_triple()),
        Point::Affine { x, .. } => x,
    };
    let support = bad_primes(curve)?;
    let mut vals: [Option<SquareClassQ>; 3] = [None, None, None];
    for (i, e) in curve.e().iter().enumerate() {
        let d = x - e;
        if !d.is_zero() {
            vals[i] = Some(class_on_support(&d, &support)?);
        }
    }
    Ok(fill_triple(vals, |a, b| a.mul(b)))
}

/// Class of `r`, found by trial division by `support` when the cofactor is
/// a square (always the case for `x - e_i` at a rational point); otherwise
/// by full factorization.
fn class_on_support(r: &Rational, support: &[BigUint]) -> Result<SquareClassQ> {
    let mut odd = Vec::new();
    for n in [r.numer(), r.denom()] {
        let mut m = n.magnitude().clone();
        for p in support {
            let mut parity = false;
            while (&m % p).is_zero() {
                m /= p;
                parity = !parity;
            }
            if parity {
                odd.push(p.clone());
            }
        }
        if sqrt_exact_int(&BigInt::from(m)).is_none() {
            return SquareClassQ::of_rational(r);
        }
    }
    Ok(SquareClassQ::from_parts(r.is_negative(), odd))
}

/// Scales the roots by a common square so they become integers.
pub fn integral_roots(curve: &EllipticCurveQ) -> [BigInt; 3] {
    let d = curve.e().iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let d2 = &d * &d;
    curve.e().clone().map(|e| (e * Rational::from_integer(d2.clone())).to_integer())
}

/// Primes dividing `2 * prod(e_i - e_j)` of the integral model, ascending.
pub fn bad_primes(curve: &EllipticCurveQ) -> Result<Vec<BigUint>> {
    let e = integral_roots(curve);
    let disc = BigInt::from(2) * (&e[0] - &e[1]) * (&e[0] - &e[2]) * (&e[1] - &e[2]);
    let mut ps: Vec<BigUint> = factor_integer(&disc.abs())?.into_iter().map(|(p, _)| p).collect();
    ps.sort();
    Ok(ps)
}

/// Coordinates for pairs `(d1, d2)` of square classes supported on a fixed
/// set of generators `-1, p_1, ..., p_k`; the third class is `d1 * d2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCoords {
    gens: Vec<SquareClassQ>,
}

impl PairCoords {
    pub fn new(primes: impl IntoIterator<Item = BigUint>) -> Self {
        let mut ps: Vec<BigUint> = primes.into_iter().collect();
        ps.sort();
        ps.dedup();
        let mut gens = vec![SquareClassQ::minus_one()];
        gens.extend(ps.into_iter().map(SquareClassQ::prime));
        PairCoords { gens }
    }

    /// Generators covering the supports of the given triples.
    pub fn covering<'a>(triples: impl IntoIterator<Item = &'a ClassTriple>) -> Self {
        PairCoords::new(triples.into_iter().flat_map(|t| t.iter().flat_map(|c| c.primes().to_vec())))
    }

    pub fn generators(&self) -> &[SquareClassQ] {
        &self.gens
    }

    pub fn primes(&self) -> Vec<BigUint> {
        self.gens[1..].iter().map(|g| g.primes()[0].clone()).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=2).flat_map(|c| self.gens.iter().map(move |g| format!("d{c}:{g}"))).collect()
    }

    pub fn class_coords(&self, c: &SquareClassQ) -> Result<F2Vec> {
        let mut v = F2Vec::zero(self.gens.len());
        if c.is_negative() {
            v.flip(0);
        }
        for p in c.primes() {
            let i = self.gens[1..]
                .binary_search_by(|g| g.primes()[0].cmp(p))
                .map_err(|_| Error::IncompatibleLabels)?;
            v.flip(i + 1);
        }
        Ok(v)
    }

    pub fn coords(&self, t: &ClassTriple) -> Result<F2Vec> {
        Ok(self.class_coords(&t[0])?.concat(&self.class_coords(&t[1])?))
    }

    pub fn triple(&self, v: &F2Vec) -> ClassTriple {
        let l = self.gens.len();
        let mut d = [SquareClassQ::one(), SquareClassQ::one()];
        for i in v.ones() {
            d[i / l] = d[i / l].mul(&self.gens[i % l]);
        }
        let d3 = d[0].mul(&d[1]);
        [d[0].clone(), d[1].clone(), d3]
    }

    pub fn span(&self, triples: &[ClassTriple]) -> Result<F2Space> {
        let vecs = triples.iter().map(|t| self.coords(t)).collect::<Result<Vec<_>>>()?;
        Ok(F2Space::span_of(self.labels(), vecs))
    }
}
