//! Linear algebra over F_2 on labelled coordinate spaces.
//!
//! An [`F2Space`] is a subspace of F_2^n whose coordinates carry labels; all
//! binary operations require identical label lists. Bases are kept in
//! reduced row echelon form, so two spaces are equal iff their bases are.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A dense bit vector over F_2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zero(len: usize) -> Self {
        F2Vec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = F2Vec::zero(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = F2Vec::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = F2Vec::zero(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn add_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn add(&self, other: &F2Vec) -> F2Vec {
        let mut v = self.clone();
        v.add_assign(other);
        v
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn leading(&self) -> Option<usize> {
        (0..self.len).find(|&i| self.get(i))
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &F2Vec) -> F2Vec {
        let mut v = F2Vec::zero(self.len + other.len);
        for i in self.ones() {
            v.set(i, true);
        }
        for i in other.ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, end: usize) -> F2Vec {
        let mut v = F2Vec::zero(end - start);
        for i in start..end {
            if self.get(i) {
                v.set(i - start, true);
            }
        }
        v
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{s}]")
    }
}

impl fmt::Display for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for F2Vec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let bits: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        s.serialize_str(&bits)
    }
}

/// Reduces a list of vectors to reduced row echelon form, dropping zeros.
fn rref(mut rows: Vec<F2Vec>) -> Vec<F2Vec> {
    let mut out: Vec<F2Vec> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut r in rows.drain(..) {
        for (b, &p) in out.iter().zip(&pivots) {
            if r.get(p) {
                r.add_assign(b);
            }
        }
        if let Some(p) = r.leading() {
            for b in out.iter_mut() {
                if b.get(p) {
                    b.add_assign(&r);
                }
            }
            out.push(r);
            pivots.push(p);
        }
    }
    let mut paired: Vec<(usize, F2Vec)> = pivots.into_iter().zip(out).collect();
    paired.sort_by_key(|(p, _)| *p);
    paired.into_iter().map(|(_, r)| r).collect()
}

/// A subspace of the labelled space F_2^labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct F2Space {
    labels: Vec<String>,
    basis: Vec<F2Vec>,
}

impl F2Space {
    pub fn zero(labels: Vec<String>) -> Self {
        F2Space { labels, basis: Vec::new() }
    }

    pub fn full(labels: Vec<String>) -> Self {
        let n = labels.len();
        let basis = (0..n).map(|i| F2Vec::unit(n, i)).collect();
        F2Space { labels, basis }
    }

    /// Span of the given generators.
    pub fn span_of(labels: Vec<String>, gens: impl IntoIterator<Item = F2Vec>) -> Self {
        let n = labels.len();
        let gens: Vec<F2Vec> = gens.into_iter().collect();
        assert!(gens.iter().all(|g| g.len() == n), "generator length mismatch");
        F2Space { labels, basis: rref(gens) }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ambient_dim(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[F2Vec] {
        &self.basis
    }

    fn check(&self, other: &F2Space) -> Result<()> {
        if self.labels != other.labels {
            return Err(Error::IncompatibleLabels);
        }
        Ok(())
    }

    /// Reduces `v` modulo the basis; zero iff `v` is in the space.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut r = v.clone();
        for b in &self.basis {
            let p = b.leading().expect("basis rows are nonzero");
            if r.get(p) {
                r.add_assign(b);
            }
        }
        r
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &F2Space) -> Result<bool> {
        other.check(self)?;
        Ok(self.basis.iter().all(|b| other.contains(b)))
    }

    pub fn with_vector(&self, v: F2Vec) -> F2Space {
        let mut gens = self.basis.clone();
        gens.push(v);
        F2Space { labels: self.labels.clone(), basis: rref(gens) }
    }

    /// Sum `A + B`.
    pub fn span(&self, other: &F2Space) -> Result<F2Space> {
        self.check(other)?;
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(F2Space { labels: self.labels.clone(), basis: rref(gens) })
    }

    /// Intersection via the Zassenhaus sum-intersection algorithm.
    pub fn intersect(&self, other: &F2Space) -> Result<F2Space> {
        self.check(other)?;
        let n = self.ambient_dim();
        let zero = F2Vec::zero(n);
        let rows: Vec<F2Vec> = self
            .basis
            .iter()
            .map(|a| a.concat(a))
            .chain(other.basis.iter().map(|b| b.concat(&zero)))
            .collect();
        let reduced = rref(rows);
        let gens = reduced
            .into_iter()
            .filter(|r| r.slice(0, n).is_zero())
            .map(|r| r.slice(n, 2 * n));
        Ok(F2Space::span_of(self.labels.clone(), gens))
    }

    /// Image of the subspace under a linear map given by the images of the
    /// coordinate unit vectors.
    pub fn image(&self, map: &LinearMap) -> Result<F2Space> {
        if map.source != self.labels {
            return Err(Error::IncompatibleLabels);
        }
        let gens = self.basis.iter().map(|b| map.apply(b));
        Ok(F2Space::span_of(map.target.clone(), gens))
    }

    /// Kernel of a linear map restricted to this subspace.
    pub fn kernel_of_map(&self, map: &LinearMap) -> Result<F2Space> {
        self.preimage(map, &F2Space::zero(map.target.clone()))
    }

    /// `{ v in self : map(v) in target }`.
    pub fn preimage(&self, map: &LinearMap, target: &F2Space) -> Result<F2Space> {
        if map.source != self.labels || map.target != target.labels {
            return Err(Error::IncompatibleLabels);
        }
        let n = self.basis.len();
        let m = map.target.len();
        // rows [ image mod target | coefficient vector ], eliminate on the left
        let rows: Vec<F2Vec> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| target.reduce(&map.apply(b)).concat(&F2Vec::unit(n, i)))
            .collect();
        // reduce images modulo target again after combination: echelonize
        // the left block with target rows appended so reductions stay valid
        let target_rows: Vec<F2Vec> = target.basis.iter().map(|t| t.concat(&F2Vec::zero(n))).collect();
        let all = rref(target_rows.into_iter().chain(rows).collect());
        let gens: Vec<F2Vec> = all
            .into_iter()
            .filter(|r| r.slice(0, m).is_zero())
            .map(|r| {
                let coeffs = r.slice(m, m + n);
                let mut v = F2Vec::zero(self.ambient_dim());
                for i in coeffs.ones() {
                    v.add_assign(&self.basis[i]);
                }
                v
            })
            .collect();
        Ok(F2Space::span_of(self.labels.clone(), gens))
    }

    /// A basis of a complement of `sub` inside `self`.
    pub fn complement_basis(&self, sub: &F2Space) -> Result<Vec<F2Vec>> {
        self.check(sub)?;
        if !sub.is_subspace_of(self)? {
            return Err(Error::Invalid("coset enumeration needs a subspace".into()));
        }
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for b in &self.basis {
            if !acc.contains(b) {
                acc = acc.with_vector(b.clone());
                out.push(b.clone());
            }
        }
        Ok(out)
    }

    /// Representatives of the cosets `self / sub`, exactly
    /// `2^(dim self - dim sub)` of them, the zero coset first.
    pub fn enumerate_cosets(&self, sub: &F2Space) -> Result<Vec<F2Vec>> {
        let comp = self.complement_basis(sub)?;
        Ok(combinations(self.ambient_dim(), &comp))
    }

    /// All elements; only sensible for small dimensions.
    pub fn elements(&self) -> Vec<F2Vec> {
        combinations(self.ambient_dim(), &self.basis)
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in
    /// the space.
    pub fn coordinates(&self, v: &F2Vec) -> Option<F2Vec> {
        let mut r = v.clone();
        let mut c = F2Vec::zero(self.dim());
        for (i, b) in self.basis.iter().enumerate() {
            let p = b.leading().unwrap();
            if r.get(p) {
                r.add_assign(b);
                c.set(i, true);
            }
        }
        r.is_zero().then_some(c)
    }
}

fn combinations(len: usize, gens: &[F2Vec]) -> Vec<F2Vec> {
    assert!(gens.len() < 30, "too many combinations to enumerate");
    let mut out = vec![F2Vec::zero(len)];
    for g in gens {
        let extra: Vec<F2Vec> = out.iter().map(|v| v.add(g)).collect();
        out.extend(extra);
    }
    out
}

/// A linear map between labelled spaces, stored as the images of the
/// source unit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    source: Vec<String>,
    target: Vec<String>,
    columns: Vec<F2Vec>,
}

impl LinearMap {
    pub fn new(source: Vec<String>, target: Vec<String>, columns: Vec<F2Vec>) -> Result<Self> {
        if columns.len() != source.len() || columns.iter().any(|c| c.len() != target.len()) {
            return Err(Error::IncompatibleLabels);
        }
        Ok(LinearMap { source, target, columns })
    }

    pub fn zero(source: Vec<String>, target: Vec<String>) -> Self {
        let columns = vec![F2Vec::zero(target.len()); source.len()];
        LinearMap { source, target, columns }
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn apply(&self, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zero(self.target.len());
        for i in v.ones() {
            out.add_assign(&self.columns[i]);
        }
        out
    }
}

/// Convenience: labels `prefix0, prefix1, ...`.
pub fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn space(n: usize, gens: &[u32]) -> F2Space {
        let labels = numbered_labels("x", n);
        let gens = gens
            .iter()
            .map(|g| F2Vec::from_indices(n, (0..n).filter(|i| (g >> i) & 1 == 1)));
        F2Space::span_of(labels, gens)
    }

    #[test]
    fn basic_identities() {
        let v = space(5, &[0b00011, 0b00110, 0b00101]);
        assert_eq!(v.dim(), 2);
        assert_eq!(v.intersect(&v).unwrap(), v);
        let zero = LinearMap::zero(numbered_labels("x", 3), numbered_labels("y", 2));
        let full = F2Space::full(numbered_labels("x", 3));
        assert_eq!(full.kernel_of_map(&zero).unwrap(), full);
        let other = F2Space::full(numbered_labels("y", 5));
        assert_eq!(v.intersect(&other), Err(Error::IncompatibleLabels));
    }

    #[test]
    fn cosets_count() {
        let g = space(6, &[1, 2, 4, 8]);
        let s = space(6, &[3]);
        let reps = g.enumerate_cosets(&s).unwrap();
        assert_eq!(reps.len(), 8);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!s.contains(&a.add(b)));
            }
        }
        assert!(g.enumerate_cosets(&space(6, &[16])).is_err());
    }

    #[test]
    fn kernel_and_preimage() {
        // map x0 -> y0, x1 -> y0, x2 -> y1
        let src = numbered_labels("x", 3);
        let tgt = numbered_labels("y", 2);
        let cols = vec![F2Vec::unit(2, 0), F2Vec::unit(2, 0), F2Vec::unit(2, 1)];
        let m = LinearMap::new(src.clone(), tgt.clone(), cols).unwrap();
        let full = F2Space::full(src.clone());
        let ker = full.kernel_of_map(&m).unwrap();
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains(&F2Vec::from_indices(3, [0, 1])));
        let w = F2Space::span_of(tgt, [F2Vec::unit(2, 1)]);
        let pre = full.preimage(&m, &w).unwrap();
        assert_eq!(pre.dim(), 2);
        assert_eq!(full.image(&m).unwrap().dim(), 2);
    }

    proptest! {
        #[test]
        fn dimension_formula(a in proptest::collection::vec(0u32..1024, 0..6), b in proptest::collection::vec(0u32..1024, 0..6)) {
            let sa = space(10, &a);
            let sb = space(10, &b);
            let sum = sa.span(&sb).unwrap();
            let int = sa.intersect(&sb).unwrap();
            prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + int.dim());
            prop_assert!(int.is_subspace_of(&sa).unwrap());
            prop_assert!(int.is_subspace_of(&sb).unwrap());
            // brute force intersection
            let brute = sa.elements().into_iter().filter(|v| sb.contains(v)).count();
            prop_assert_eq!(brute, 1usize << int.dim());
        }

        #[test]
        fn preimage_matches_brute_force(cols in proptest::collection::vec(0u32..16, 6), w in proptest::collection::vec(0u32..16, 0..3), a in proptest::collection::vec(0u32..64, 0..5)) {
            let src = numbered_labels("x", 6);
            let tgt = numbered_labels("y", 4);
            let columns = cols.iter().map(|c| F2Vec::from_indices(4, (0..4).filter(|i| (c >> i) & 1 == 1))).collect();
            let m = LinearMap::new(src.clone(), tgt.clone(), columns).unwrap();
            let wsp = F2Space::span_of(tgt, w.iter().map(|c| F2Vec::from_indices(4, (0..4).filter(|i| (c >> i) & 1 == 1))));
            let asp = space(6, &a);
            let pre = asp.preimage(&m, &wsp).unwrap();
            let brute = asp.elements().into_iter().filter(|v| wsp.contains(&m.apply(v))).count();
            prop_assert_eq!(brute, 1usize << pre.dim());
            prop_assert!(pre.is_subspace_of(&asp).unwrap());
        }
    }
}
