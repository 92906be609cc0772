//! The 2-Selmer group of a curve with full rational 2-torsion.

use rayon::prelude::*;

use super::descent::{bad_primes, descent_image, ClassTriple, PairCoords};
use super::local::{local_coords, local_image, local_labels};
use super::EllipticCurveQ;
use crate::arith::{F2Space, F2Vec, LinearMap, Place, SquareClassQ};
use crate::error::{Error, Result};

/// Selmer elements as pairs `(d1, d2)` over the generators `-1` and the
/// primes dividing `2 * Delta`; the third class is `d1 * d2`.
#[derive(Clone, Debug)]
pub struct SelmerGroupQ {
    coords: PairCoords,
    places: Vec<Place>,
    members: F2Space,
}

impl SelmerGroupQ {
    pub fn pair_coords(&self) -> &PairCoords {
        &self.coords
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn members(&self) -> &F2Space {
        &self.members
    }

    pub fn ambient(&self) -> F2Space {
        F2Space::full(self.members.labels().to_vec())
    }

    pub fn dim(&self) -> usize {
        self.members.dim()
    }

    /// Upper bound for the rank: full 2-torsion accounts for two dimensions.
    pub fn rank_bound(&self) -> usize {
        self.dim().saturating_sub(2)
    }

    pub fn triple(&self, v: &F2Vec) -> ClassTriple {
        self.coords.triple(v)
    }

    pub fn contains(&self, t: &ClassTriple) -> bool {
        t[0].mul(&t[1]) == t[2] && self.coords.coords(t).is_ok_and(|v| self.members.contains(&v))
    }

    pub fn elements(&self) -> Vec<ClassTriple> {
        self.members.elements().iter().map(|v| self.triple(v)).collect()
    }

    pub fn basis_triples(&self) -> Vec<ClassTriple> {
        self.members.basis().iter().map(|v| self.triple(v)).collect()
    }
}

/// Local restriction map from the global pair space at one place.
fn restriction(coords: &PairCoords, place: &Place) -> Result<LinearMap> {
    let one = SquareClassQ::one();
    let gens = coords.generators();
    let mut cols = Vec::with_capacity(2 * gens.len());
    for c in 0..2 {
        for g in gens {
            cols.push(if c == 0 { local_coords(g, &one, place) } else { local_coords(&one, g, place) });
        }
    }
    LinearMap::new(coords.labels(), local_labels(place), cols)
}

pub fn two_selmer_group(curve: &EllipticCurveQ) -> Result<SelmerGroupQ> {
    let primes = bad_primes(curve)?;
    let coords = PairCoords::new(primes.iter().cloned());
    let mut places = vec![Place::Real];
    places.extend(primes.iter().cloned().map(Place::Prime));

    let images: Vec<(Place, F2Space)> = places
        .par_iter()
        .map(|pl| local_image(curve, pl).map(|img| (pl.clone(), img)))
        .collect::<Result<_>>()?;
    let mut members = F2Space::full(coords.labels());
    for (pl, img) in &images {
        let map = restriction(&coords, pl)?;
        members = members.preimage(&map, img)?;
    }
    let sel = SelmerGroupQ { coords, places, members };

    // consistency: torsion images are members
    for t in curve.two_torsion() {
        let d = descent_image(curve, &t)?;
        if !sel.contains(&d) {
            return Err(Error::Invalid(format!("torsion image {d:?} missing from the Selmer group")));
        }
    }
    Ok(sel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::ellq::local::homogeneous_space_locally_solvable;

    #[test]
    fn congruent_number_curve() {
        let c = EllipticCurveQ::new(int(0), int(1), int(-1)).unwrap();
        let s = two_selmer_group(&c).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.rank_bound(), 0);
    }

    #[test]
    fn group_matches_exhaustive_enumeration() {
        // every pair in the ambient space, tested place by place
        let c = EllipticCurveQ::new(int(-8), int(-24), int(-3)).unwrap();
        let s = two_selmer_group(&c).unwrap();
        let amb = s.ambient();
        let mut count = 0;
        for v in amb.elements() {
            let t = s.triple(&v);
            let ok = s
                .places()
                .iter()
                .all(|pl| homogeneous_space_locally_solvable(&c, &t[0], &t[1], pl).unwrap());
            assert_eq!(ok, s.members().contains(&v));
            count += ok as usize;
        }
        assert_eq!(count, 1 << s.dim());
    }
}
