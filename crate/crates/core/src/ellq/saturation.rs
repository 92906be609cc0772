//! Halving points over Q, and saturation checks at odd primes by reduction
//! modulo auxiliary primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::{EllipticCurveQ, PointQ};
use crate::arith::factor::{powmod_u64, primes_below};
use crate::arith::rational::sqrt_exact;
use crate::arith::Rational;
use crate::weierstrass::Point;

/// A point `R` with `2R = q`, if one exists over Q.
pub fn halve(curve: &EllipticCurveQ, q: &PointQ) -> Option<PointQ> {
    let x = match q {
        Point::Infinity => return Some(Point::Infinity),
        Point::Affine { x, .. } => x,
    };
    let e = curve.e();
    let mut r = Vec::with_capacity(3);
    for i in 0..3 {
        let d = x - &e[i];
        if d.is_zero() {
            // T_i is a double iff both differences e_i - e_j are squares
            for j in (0..3).filter(|&j| j != i) {
                sqrt_exact(&(&e[i] - &e[j]))?;
            }
            r.push(Rational::zero());
        } else {
            r.push(sqrt_exact(&d)?);
        }
    }
    for signs in [[1, 1, 1], [1, 1, -1], [1, -1, 1], [-1, 1, 1]] {
        let s: Vec<Rational> = r.iter().zip(signs).map(|(ri, si)| ri * Rational::from_integer(si.into())).collect();
        let xr = x + &s[0] * &s[1] + &s[0] * &s[2] + &s[1] * &s[2];
        let Some(yr) = sqrt_exact(&curve.rhs(&xr)) else { continue };
        for y in [yr.clone(), -yr] {
            let cand = Point::Affine { x: xr.clone(), y };
            if curve.add_unchecked(&cand, &cand) == *q {
                return Some(cand);
            }
        }
    }
    None
}

/// Reduction of a curve modulo an odd prime of good reduction.
#[derive(Clone, Debug)]
pub struct ReducedCurve {
    pub q: u64,
    e: [u64; 3],
    a2: u64,
    a4: u64,
    pub order: u64,
}

type FqPoint = Option<(u64, u64)>;

fn mulm(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn reduce_rational(r: &Rational, q: u64) -> Option<u64> {
    let qb = BigInt::from(q);
    let d = r.denom().mod_floor(&qb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = r.numer().mod_floor(&qb).to_u64()?;
    Some(mulm(n, powmod_u64(d, q - 2, q), q))
}

impl ReducedCurve {
    pub fn new(curve: &EllipticCurveQ, q: u64) -> Option<Self> {
        if q < 3 {
            return None;
        }
        let e = [
            reduce_rational(&curve.e()[0], q)?,
            reduce_rational(&curve.e()[1], q)?,
            reduce_rational(&curve.e()[2], q)?,
        ];
        if e[0] == e[1] || e[0] == e[2] || e[1] == e[2] {
            return None;
        }
        let a2 = (3 * q - e[0] - e[1] - e[2]) % q;
        let a4 = (mulm(e[0], e[1], q) + mulm(e[0], e[2], q) + mulm(e[1], e[2], q)) % q;
        let mut c = ReducedCurve { q, e, a2, a4, order: 0 };
        c.order = c.count();
        Some(c)
    }

    fn rhs(&self, x: u64) -> u64 {
        let q = self.q;
        let f = |e: u64| (x + q - e) % q;
        mulm(mulm(f(self.e[0]), f(self.e[1]), q), f(self.e[2]), q)
    }

    fn square_roots(&self) -> Vec<Option<u64>> {
        let q = self.q;
        let mut root = vec![None; q as usize];
        for a in 0..q {
            root[mulm(a, a, q) as usize].get_or_insert(a);
        }
        root
    }

    fn count(&self) -> u64 {
        let root = self.square_roots();
        let mut n = 1;
        for x in 0..self.q {
            let v = self.rhs(x);
            if v == 0 {
                n += 1;
            } else if root[v as usize].is_some() {
                n += 2;
            }
        }
        n
    }

    pub fn reduce_point(&self, p: &PointQ) -> FqPoint {
        match p {
            Point::Infinity => None,
            Point::Affine { x, y } => {
                let xr = reduce_rational(x, self.q)?;
                let yr = reduce_rational(y, self.q)?;
                Some((xr, yr))
            }
        }
    }

    pub fn add(&self, p: FqPoint, r: FqPoint) -> FqPoint {
        let q = self.q;
        let ((x1, y1), (x2, y2)) = match (p, r) {
            (None, _) => return r,
            (_, None) => return p,
            (Some(a), Some(b)) => (a, b),
        };
        let lambda = if x1 == x2 {
            if (y1 + y2) % q == 0 {
                return None;
            }
            let num = (mulm(3, mulm(x1, x1, q), q) + mulm(mulm(2, self.a2, q), x1, q) + self.a4) % q;
            mulm(num, powmod_u64(mulm(2, y1, q), q - 2, q), q)
        } else {
            mulm((y2 + q - y1) % q, powmod_u64((x2 + q - x1) % q, q - 2, q), q)
        };
        let x3 = (mulm(lambda, lambda, q) + 2 * q - self.a2 - x1 + q - x2) % q;
        let y3 = (mulm(lambda, (x1 + q - x3) % q, q) + q - y1) % q;
        Some((x3, y3))
    }

    pub fn multiply(&self, mut n: u64, p: FqPoint) -> FqPoint {
        let mut acc = None;
        let mut base = p;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            n >>= 1;
        }
        acc
    }

    /// A generator of the order-`ell` subgroup when `ell` exactly divides the order.
    fn ell_generator(&self, ell: u64) -> Option<FqPoint> {
        let h = self.order / ell;
        let root = self.square_roots();
        for x in 0..self.q {
            if let Some(y) = root[self.rhs(x) as usize] {
                let g = self.multiply(h, Some((x, y)));
                if g.is_some() {
                    return Some(g);
                }
            }
        }
        None
    }
}

/// Reductions at all odd good primes below `bound`, computed in parallel.
pub fn auxiliary_reductions(curve: &EllipticCurveQ, bound: u64) -> Vec<ReducedCurve> {
    primes_below(bound)
        .into_par_iter()
        .filter_map(|q| ReducedCurve::new(curve, q))
        .collect()
}

/// Outcome of the saturation check at one odd prime `ell`.
#[derive(Clone, Debug)]
pub struct EllSaturation {
    pub ell: u64,
    /// `(q, functional values of the points)` for each auxiliary prime used.
    pub witnesses: Vec<(u64, Vec<u64>)>,
    pub rank: usize,
    pub verified: bool,
}

fn rank_mod(rows: &[Vec<u64>], ell: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] % ell != 0) else { continue };
        m.swap(rank, piv);
        let inv = powmod_u64(m[rank][c], ell - 2, ell);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = mulm(m[i][c], inv, ell);
                for k in 0..cols {
                    m[i][k] = (m[i][k] + ell - mulm(f, m[rank][k], ell)) % ell;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Checks that no nontrivial combination `sum n_i P_i` (n_i mod ell) is an
/// `ell`-th multiple: at auxiliary primes `q` with `ell || #E(F_q)` the map
/// `R -> log((#E/ell) R)` is a functional vanishing on `ell E(Q)`; the points
/// are saturated once these functionals have full rank.
pub fn ell_saturation(reductions: &[ReducedCurve], points: &[PointQ], ell: u64, min_witnesses: usize) -> EllSaturation {
    let r = points.len();
    let mut witnesses = Vec::new();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0;
    if r == 0 {
        return EllSaturation { ell, witnesses, rank, verified: true };
    }
    for red in reductions {
        if red.order % ell != 0 || (red.order / ell) % ell == 0 {
            continue;
        }
        let Some(g) = red.ell_generator(ell) else { continue };
        let h = red.order / ell;
        let mut functional = Vec::with_capacity(r);
        for p in points {
            let img = red.multiply(h, red.reduce_point(p));
            let mut acc = None;
            let mut k = 0;
            while acc != img {
                acc = red.add(acc, g);
                k += 1;
                assert!(k <= ell, "image outside the order-ell subgroup");
            }
            functional.push(k % ell);
        }
        if functional.iter().all(|&v| v == 0) {
            continue;
        }
        rows.push(functional.clone());
        witnesses.push((red.q, functional));
        rank = rank_mod(&rows, ell);
        if rank == r && witnesses.len() >= min_witnesses {
            break;
        }
    }
    let verified = rank == r && witnesses.len() >= min_witnesses;
    EllSaturation { ell, witnesses, rank, verified }
}

/// gcd of `#E(F_q)` over the given reductions; the rational torsion
/// subgroup injects into each `E(F_q)`, so its order divides this.
pub fn torsion_order_bound(reductions: &[ReducedCurve], count: usize) -> u64 {
    reductions.iter().take(count).fold(0, |g, r| g.gcd(&r.order))
}
