//! Naive point search: `x = a / b^2` with `1 <= b <= B` and `|a| <= B^2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{EllipticCurveQ, PointQ};
use crate::arith::rational::sqrt_exact_int;
use crate::arith::Rational;
use crate::weierstrass::Point;

/// All affine points with `x = a/b^2` in lowest terms, `1 <= b <= bound`,
/// `|a| <= bound^2`. Sorted by `(b, |a|, a)` with `y >= 0` before `-y`;
/// the list is closed under negation.
pub fn point_search(curve: &EllipticCurveQ, bound: u64) -> Vec<PointQ> {
    let d = curve.e().iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let n: Vec<BigInt> = curve.e().iter().map(|e| (e * Rational::from_integer(d.clone())).to_integer()).collect();
    let amax = (bound * bound) as i64;
    let mut found: Vec<(u64, i64, PointQ)> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|b| {
            let b2 = BigInt::from(b * b);
            let n = n.clone();
            let d = d.clone();
            (-amax..=amax).filter_map(move |a| {
                if BigInt::from(a).gcd(&BigInt::from(b)) != BigInt::one() {
                    return None;
                }
                let ab = BigInt::from(a) * &d;
                // f(a/b^2) = prod(a d - n_i b^2) / (d^3 b^6)
                let prod: BigInt = n.iter().map(|ni| &ab - ni * &b2).product();
                let v = &prod * &d;
                if v.is_negative() {
                    return None;
                }
                let s = sqrt_exact_int(&v)?;
                let x = Rational::new(BigInt::from(a), b2.clone());
                let y = Rational::new(s, &d * &d * &b2 * BigInt::from(b));
                Some((b, a, x, y))
            })
            .collect::<Vec<_>>()
        })
        .flat_map_iter(|(b, a, x, y)| {
            let mut v = vec![(b, a, Point::Affine { x: x.clone(), y: y.clone() })];
            if !y.is_zero() {
                v.push((b, a, Point::Affine { x, y: -y }));
            }
            v
        })
        .collect();
    found.sort_by(|(b1, a1, p1), (b2, a2, p2)| {
        let neg = |p: &PointQ| p.y().is_some_and(|y| y.is_negative());
        (b1, a1.abs(), a1, neg(p1)).cmp(&(b2, a2.abs(), a2, neg(p2)))
    });
    found.into_iter().map(|(_, _, p)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn finds_small_points_on_e2() {
        let c = EllipticCurveQ::new(int(-8), int(-24), int(-3)).unwrap();
        let pts = point_search(&c, 10);
        for (x, y) in [(0, 24), (-8, 0), (-24, 0), (-3, 0), (0, -24)] {
            assert!(pts.contains(&Point::affine(int(x), int(y))), "missing ({x}, {y})");
        }
        for p in &pts {
            assert!(c.contains(p));
            assert!(pts.contains(&c.neg(p)));
        }
    }

    #[test]
    fn bound_one_finds_small_torsion() {
        let c = EllipticCurveQ::new(int(0), int(1), int(-1)).unwrap();
        let pts = point_search(&c, 1);
        assert_eq!(pts.len(), 3);
    }
}
