//! The curve `C` of extensions of a quadruple: the locus where
//! `(1, a_j, u_j^2)_j` has rank at most 2, cut out by ten rank-3 quadrics.

use std::fmt;

use serde::{Serialize, Serializer};

use super::quadruple::Quadruple;
use super::SqrtField;
use crate::error::{Error, Result};

/// The triples `i < j < k` indexing the rank-3 quadrics.
pub fn triples() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                out.push([i, j, k]);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Genus5Curve<F> {
    a: [F; 5],
    quadrics: Vec<([usize; 3], [F; 5])>,
}

impl<F: SqrtField> Genus5Curve<F> {
    /// `(a_0, ..., a_4)` with `a_0 = 0`.
    pub fn a(&self) -> &[F; 5] {
        &self.a
    }

    /// `(a_k - a_j) u_i^2 + (a_i - a_k) u_j^2 + (a_j - a_i) u_k^2` as a
    /// coefficient vector over `u_0^2, ..., u_4^2`.
    pub fn quadric(&self, t: [usize; 3]) -> [F; 5] {
        quadric_coeffs(&self.a, t)
    }

    pub fn quadrics(&self) -> &[([usize; 3], [F; 5])] {
        &self.quadrics
    }

    pub fn contains(&self, u: &[F; 5]) -> bool {
        if u.iter().all(|x| x.is_zero()) {
            return false;
        }
        let sq: Vec<F> = u.iter().map(|x| x.mul(x)).collect();
        self.quadrics.iter().all(|(_, c)| {
            c.iter().zip(&sq).fold(F::zero(), |acc, (ci, s)| acc.add(&ci.mul(s))).is_zero()
        })
    }

    pub fn point(&self, u: [F; 5]) -> Result<CurvePoint<F>> {
        if !self.contains(&u) {
            let r: Vec<String> = u.iter().map(|x| x.render()).collect();
            return Err(Error::OffCurve(format!("({})", r.join(" : "))));
        }
        Ok(CurvePoint::normalized(u))
    }

    pub fn render_quadric(&self, t: [usize; 3]) -> String {
        let c = self.quadric(t);
        t.iter().map(|&i| format!("({})*u{i}^2", c[i].render())).collect::<Vec<_>>().join(" + ")
    }
}

fn quadric_coeffs<F: SqrtField>(a: &[F; 5], [i, j, k]: [usize; 3]) -> [F; 5] {
    let mut c = std::array::from_fn(|_| F::zero());
    c[i] = a[k].sub(&a[j]);
    c[j] = a[i].sub(&a[k]);
    c[k] = a[j].sub(&a[i]);
    c
}

fn det3<F: SqrtField>(m: [[F; 3]; 3]) -> F {
    let t1 = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
    let t2 = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
    let t3 = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
    t1.sub(&t2).add(&t3)
}

/// The curve with its ten quadrics; fails if a 3x3 minor of the matrix of
/// the generating quadrics `{0,1,2}, {0,1,3}, {0,1,4}` vanishes.
pub fn build_curve<F: SqrtField>(q: &Quadruple<F>) -> Result<Genus5Curve<F>> {
    let a = q.with_zero();
    let m: Vec<[F; 5]> = [[0, 1, 2], [0, 1, 3], [0, 1, 4]].iter().map(|&t| quadric_coeffs(&a, t)).collect();
    for cols in triples() {
        let minor = det3(std::array::from_fn(|r| std::array::from_fn(|c| m[r][cols[c]].clone())));
        if minor.is_zero() {
            return Err(Error::Singular(format!(
                "minor on columns ({}, {}, {}) vanishes",
                cols[0], cols[1], cols[2]
            )));
        }
    }
    let quadrics = triples().into_iter().map(|t| (t, quadric_coeffs(&a, t))).collect();
    Ok(Genus5Curve { a, quadrics })
}

/// A point `(u_0 : ... : u_4)` scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurvePoint<F> {
    u: [F; 5],
}

impl<F: SqrtField> CurvePoint<F> {
    fn normalized(u: [F; 5]) -> Self {
        let lead = u.iter().find(|x| !x.is_zero()).expect("nonzero point").clone();
        CurvePoint { u: u.map(|x| x.div(&lead)) }
    }

    pub fn u(&self) -> &[F; 5] {
        &self.u
    }

    /// Applies the sign changes `u_j -> -u_j` for the set bits `j` of `mask`.
    pub fn flip(&self, mask: u8) -> Self {
        let u = std::array::from_fn(|j| if mask >> j & 1 == 1 { self.u[j].neg() } else { self.u[j].clone() });
        CurvePoint::normalized(u)
    }
}

impl<F: SqrtField> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.u.iter().map(|x| x.render()).collect();
        write!(f, "({})", r.join(" : "))
    }
}

impl<F: SqrtField> Serialize for CurvePoint<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r: Vec<String> = self.u.iter().map(|x| x.render()).collect();
        r.serialize(s)
    }
}

/// The orbit of `p` under the sign changes; 16 points unless some
/// coordinate vanishes.
pub fn point_orbit<F: SqrtField>(c: &Genus5Curve<F>, p: &CurvePoint<F>) -> Result<Vec<CurvePoint<F>>> {
    c.point(p.u.clone())?;
    let mut out: Vec<CurvePoint<F>> = Vec::with_capacity(16);
    for mask in 0..16u8 {
        let q = p.flip(mask << 1);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    Ok(out)
}

/// The orbit of `(1 : u_1 : ... : u_4)` with `u_i^2 = a_i z + 1`.
pub fn extension_to_points<F: SqrtField>(q: &Quadruple<F>, z: &F) -> Result<Vec<CurvePoint<F>>> {
    let c = build_curve(q)?;
    let mut u = vec![F::one()];
    for (i, a) in q.a().iter().enumerate() {
        let v = a.mul(z).add(&F::one());
        u.push(v.sqrt().ok_or_else(|| Error::NotSquare(format!("a{} z + 1 = {}", i + 1, v.render())))?);
    }
    let p = c.point(u.try_into().expect("five coordinates"))?;
    point_orbit(&c, &p)
}
