//! The subgroup `G` of `J[2]` spanned by the differences `[D_ij - D_kl]` of
//! the divisors pulled back from the ten conics, as a quotient of the even
//! subsets of the ten pairs by the relations `sum_{j != i} [D_ij] = 2L`.

use std::fmt;

use serde::Serialize;

use crate::arith::{F2Space, F2Vec};
use crate::error::{Error, Result};

/// An unordered index pair `{i, j}` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSet(pub usize, pub usize);

impl PairSet {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j || i > 4 || j > 4 {
            return Err(Error::Invalid(format!("bad index pair {{{i}, {j}}}")));
        }
        Ok(PairSet(i.min(j), i.max(j)))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 == i || self.1 == i
    }

    pub fn meets(&self, o: &PairSet) -> Option<usize> {
        [self.0, self.1].into_iter().find(|&i| o.contains(i))
    }
}

impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}{}", self.0, self.1)
    }
}

impl Serialize for PairSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn all_pairs() -> Vec<PairSet> {
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            out.push(PairSet(i, j));
        }
    }
    out
}

/// A representation `T = [D_p - D_q]` of an element of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub case: u8,
    pub first: PairSet,
    pub second: PairSet,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} - {}]", self.first, self.second)
    }
}

#[derive(Clone, Debug)]
pub struct TorsionGroupG {
    pairs: Vec<PairSet>,
    even: F2Space,
    relations: F2Space,
    relation_vectors: Vec<F2Vec>,
}

impl TorsionGroupG {
    pub fn pairs(&self) -> &[PairSet] {
        &self.pairs
    }

    pub fn dim(&self) -> usize {
        self.even.dim() - self.relations.dim()
    }

    /// The relation vectors `sum_{j != i} e_ij`, one per index.
    pub fn relation_vectors(&self) -> &[F2Vec] {
        &self.relation_vectors
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.dim()
    }

    fn index(&self, p: PairSet) -> usize {
        self.pairs.iter().position(|q| *q == p).expect("valid pair")
    }

    /// Canonical form of a vector modulo the relations.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        self.relations.reduce(v)
    }

    /// `[D_p - D_q]`.
    pub fn difference(&self, p: PairSet, q: PairSet) -> F2Vec {
        let mut v = F2Vec::unit(10, self.index(p));
        v.flip(self.index(q));
        self.reduce(&v)
    }

    /// The 32 elements in canonical form, zero first.
    pub fn elements(&self) -> Vec<F2Vec> {
        let mut out: Vec<F2Vec> = self
            .even
            .enumerate_cosets(&self.relations)
            .expect("relations are even")
            .iter()
            .map(|v| self.reduce(v))
            .collect();
        out.sort_by_key(|v| (!v.is_zero(), v.weight(), format!("{v}")));
        out
    }

    /// All Case-1 (disjoint pairs) and Case-2 (pairs sharing an index)
    /// representations of `t`.
    pub fn representations(&self, t: &F2Vec) -> Vec<Representation> {
        let t = self.reduce(t);
        let mut out = Vec::new();
        for (a, p) in self.pairs.iter().enumerate() {
            for q in &self.pairs[a + 1..] {
                if self.difference(*p, *q) == t {
                    let case = if p.meets(q).is_some() { 2 } else { 1 };
                    out.push(Representation { case, first: *p, second: *q });
                }
            }
        }
        out
    }

    pub fn render(&self, t: &F2Vec) -> String {
        let terms: Vec<String> = t.ones().map(|i| self.pairs[i].to_string()).collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub fn two_torsion_group_g() -> TorsionGroupG {
    let pairs = all_pairs();
    let labels: Vec<String> = pairs.iter().map(|p| p.to_string()).collect();
    let even_gens = (1..10).map(|i| F2Vec::from_indices(10, [0, i]));
    let even = F2Space::span_of(labels.clone(), even_gens);
    let relation_vectors: Vec<F2Vec> = (0..5)
        .map(|i| F2Vec::from_indices(10, pairs.iter().enumerate().filter(|(_, p)| p.contains(i)).map(|(n, _)| n)))
        .collect();
    let relations = F2Space::span_of(labels, relation_vectors.clone());
    TorsionGroupG { pairs, even, relations, relation_vectors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_and_relations() {
        let g = two_torsion_group_g();
        assert_eq!(g.dim(), 5);
        assert_eq!(g.relation_rank(), 4);
        assert_eq!(g.elements().len(), 32);
        let p = PairSet(0, 1);
        assert!(g.difference(p, p).is_zero());
    }

    #[test]
    fn all_but_one_element_has_a_case_representation() {
        let g = two_torsion_group_g();
        let elems = g.elements();
        let mut missing = Vec::new();
        let (mut case1, mut case2) = (0, 0);
        for t in &elems[1..] {
            let reps = g.representations(t);
            if reps.is_empty() {
                missing.push(t.clone());
            } else if reps[0].case == 1 {
                assert!(reps.iter().all(|r| r.case == 1) && reps.len() == 1);
                case1 += 1;
            } else {
                assert!(reps.iter().all(|r| r.case == 2) && reps.len() == 2);
                case2 += 1;
            }
        }
        assert_eq!(missing.len(), 1);
        assert_eq!((case1, case2), (15, 15));
    }

    #[test]
    fn case_two_double_representation() {
        let g = two_torsion_group_g();
        // [D12 - D13] = [D14 - D10] via the relation at index 1
        let a = g.difference(PairSet(1, 2), PairSet(1, 3));
        let b = g.difference(PairSet(1, 4), PairSet(0, 1));
        assert_eq!(a, b);
    }
}
