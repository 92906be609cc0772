//! Local images of the descent map, `delta_v(E(Q_v))`, in the coordinates
//! of the first two square classes.
//!
//! At a prime `p` the x-line is covered by p-adic balls; on a ball far from
//! every root the classes of `x - e_i` are constant and the ball either
//! carries points (product of the classes trivial) or not. A ball deep
//! around a root `e_i` only carries points with the image of `T_i`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::descent::{descent_image, integral_roots};
use super::EllipticCurveQ;
use crate::arith::local::split_valuation;
use crate::arith::{local_class, F2Space, F2Vec, Place, Rational, SquareClassQ};
use crate::error::{Error, Result};

/// Labels of the local coordinate space at a place.
pub fn local_labels(place: &Place) -> Vec<String> {
    let d = place.class_dim();
    (0..2)
        .flat_map(|c| (0..d).map(move |b| format!("d{}@{place}:{b}", c + 1)))
        .collect()
}

fn class_bits(x: &Rational, place: &Place) -> F2Vec {
    let d = place.class_dim();
    let c = local_class(x, place);
    F2Vec::from_indices(d, (0..d).filter(|&b| c >> b & 1 == 1))
}

/// Local coordinates of a pair `(d1, d2)`.
pub fn local_coords(d1: &SquareClassQ, d2: &SquareClassQ, place: &Place) -> F2Vec {
    class_bits(&d1.to_rational(), place).concat(&class_bits(&d2.to_rational(), place))
}

fn expected_dim(place: &Place) -> usize {
    match place {
        Place::Real => 1,
        Place::Prime(p) if *p == BigUint::from(2u32) => 3,
        Place::Prime(_) => 2,
    }
}

struct BallSearch<'a> {
    p: BigInt,
    place: &'a Place,
    roots: [BigInt; 3],
    margin: u64,
    found: F2Space,
    target: usize,
}

fn val(n: &BigInt, p: &BigInt) -> Option<u64> {
    if n.is_zero() {
        None
    } else {
        Some(split_valuation(n, &p.magnitude().clone()).0)
    }
}

impl BallSearch<'_> {
    fn done(&self) -> bool {
        self.found.dim() >= self.target
    }

    /// Explores the ball `c + p^n Z_p`.
    fn explore(&mut self, c: &BigInt, n: u64, pn: &BigInt) {
        if self.done() {
            return;
        }
        let w: Vec<Option<u64>> = self.roots.iter().map(|e| val(&(c - e), &self.p)).collect();
        let settled = |wi: &Option<u64>| matches!(wi, Some(v) if v + self.margin <= n);
        if w.iter().all(settled) {
            let cls: Vec<F2Vec> = self
                .roots
                .iter()
                .map(|e| class_bits(&Rational::from_integer(c - e), self.place))
                .collect();
            if cls[0].add(&cls[1]).add(&cls[2]).is_zero() {
                let v = cls[0].concat(&cls[1]);
                self.found = self.found.with_vector(v);
            }
            return;
        }
        for i in 0..3 {
            let inside = w[i].is_none_or(|v| v >= n);
            if inside && (0..3).filter(|&j| j != i).all(|j| settled(&w[j])) {
                // only the image of the 2-torsion point T_i, already recorded
                return;
            }
        }
        let next = pn * &self.p;
        let mut k = BigInt::zero();
        while k < self.p {
            self.explore(&(c + &k * pn), n + 1, &next);
            if self.done() {
                return;
            }
            k += 1;
        }
    }
}

/// `delta_v(E(Q_v))` as a subspace of the local coordinate space.
pub fn local_image(curve: &EllipticCurveQ, place: &Place) -> Result<F2Space> {
    let labels = local_labels(place);
    let target = expected_dim(place);
    let mut found = F2Space::zero(labels);
    for t in curve.two_torsion() {
        let c = descent_image(curve, &t)?;
        found = found.with_vector(local_coords(&c[0], &c[1], place));
    }
    if found.dim() < target {
        match place {
            Place::Real => {
                let mut e = curve.e().to_vec();
                e.sort();
                let x0 = (&e[0] + &e[1]) / Rational::from_integer(2.into());
                let d: Vec<Rational> = curve.e().iter().map(|ei| &x0 - ei).collect();
                found = found.with_vector(class_bits(&d[0], place).concat(&class_bits(&d[1], place)));
            }
            Place::Prime(p) => {
                let two = *p == BigUint::from(2u32);
                let mut roots = integral_roots(curve);
                if two {
                    // so that every x outside Z_2 has all three classes equal
                    roots = roots.map(|r| r * 4);
                }
                let mut search = BallSearch {
                    p: BigInt::from(p.clone()),
                    place,
                    roots,
                    margin: if two { 3 } else { 1 },
                    found,
                    target,
                };
                search.explore(&BigInt::zero(), 0, &BigInt::one());
                found = search.found;
            }
        }
    }
    if found.dim() != target {
        return Err(Error::Invalid(format!(
            "local image at {place} has dimension {}, expected {target}",
            found.dim()
        )));
    }
    Ok(found)
}

/// Whether the homogeneous space attached to `(d1, d2)` has a point over `Q_v`.
pub fn homogeneous_space_locally_solvable(
    curve: &EllipticCurveQ,
    d1: &SquareClassQ,
    d2: &SquareClassQ,
    place: &Place,
) -> Result<bool> {
    Ok(local_image(curve, place)?.contains(&local_coords(d1, d2, place)))
}
