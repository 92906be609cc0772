//! Models of the double covers of `C` attached to the elements
//! `T = [D_p - D_q]` of `G`, as a genus-1 curve over a biquadratic algebra.

use serde::Serialize;

use super::curve::{CurvePoint, Genus5Curve};
use super::torsion::{PairSet, Representation};
use crate::arith::rational::{is_square, serde_rational};
use crate::arith::{format_rational, Rational, SquareClassQ};
use crate::error::{Error, Result};

/// `c0 + c1 sqrt(b1) + c2 sqrt(b2) + c3 sqrt(b1 b2)` in `Q[s1, s2]/(s1^2 - b1, s2^2 - b2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Biquadratic {
    #[serde(with = "serde_rational")]
    pub b1: Rational,
    #[serde(with = "serde_rational")]
    pub b2: Rational,
    #[serde(serialize_with = "serialize_coords")]
    pub c: [Rational; 4],
}

fn serialize_coords<S: serde::Serializer>(c: &[Rational; 4], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<String> = c.iter().map(format_rational).collect();
    v.serialize(s)
}

impl Biquadratic {
    pub fn new(b1: Rational, b2: Rational, c: [Rational; 4]) -> Self {
        Biquadratic { b1, b2, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| *x == Rational::from_integer(0.into()))
    }

    pub fn mul(&self, o: &Biquadratic) -> Biquadratic {
        assert!(self.b1 == o.b1 && self.b2 == o.b2, "elements of different algebras");
        let (x, y, b1, b2) = (&self.c, &o.c, &self.b1, &self.b2);
        let c0 = &x[0] * &y[0] + b1 * &x[1] * &y[1] + b2 * &x[2] * &y[2] + b1 * b2 * &x[3] * &y[3];
        let c1 = &x[0] * &y[1] + &x[1] * &y[0] + b2 * (&x[2] * &y[3] + &x[3] * &y[2]);
        let c2 = &x[0] * &y[2] + &x[2] * &y[0] + b1 * (&x[1] * &y[3] + &x[3] * &y[1]);
        let c3 = &x[0] * &y[3] + &x[3] * &y[0] + &x[1] * &y[2] + &x[2] * &y[1];
        Biquadratic::new(b1.clone(), b2.clone(), [c0, c1, c2, c3])
    }

    /// The conjugate with `sqrt(b1) -> -sqrt(b1)`, `sqrt(b2) -> -sqrt(b2)`
    /// according to the two flags.
    pub fn conjugate(&self, flip1: bool, flip2: bool) -> Biquadratic {
        let [c0, c1, c2, c3] = self.c.clone();
        let s = |x: Rational, f: bool| if f { -x } else { x };
        Biquadratic::new(
            self.b1.clone(),
            self.b2.clone(),
            [c0, s(c1, flip1), s(c2, flip2), s(c3, flip1 != flip2)],
        )
    }

    /// Whether the algebra is a field of degree 4.
    pub fn is_quartic_field(&self) -> bool {
        !is_square(&self.b1) && !is_square(&self.b2) && !is_square(&(&self.b1 * &self.b2))
    }

    /// `Q(sqrt(d1), sqrt(d2))` with squarefree `d1, d2`.
    pub fn field_name(&self) -> String {
        let d = |b: &Rational| SquareClassQ::of_rational(b).map(|c| c.to_string()).unwrap_or_else(|_| "0".into());
        format!("Q(sqrt({}), sqrt({}))", d(&self.b1), d(&self.b2))
    }

    /// `x - b sqrt(b_slot)` for a rational `x`, `b`.
    fn linear(&self, x: &Rational, slot: usize, coeff: &Rational) -> Biquadratic {
        let zero = Rational::from_integer(0.into());
        let mut c = [x.clone(), zero.clone(), zero.clone(), zero];
        c[slot] = -coeff.clone();
        Biquadratic::new(self.b1.clone(), self.b2.clone(), c)
    }
}

/// `u_r^2 = alpha u_p^2 + beta u_q^2` on `C`.
fn conic(a: &[Rational; 5], r: usize, p: usize, q: usize) -> (Rational, Rational) {
    let d = &a[q] - &a[p];
    ((&a[q] - &a[r]) / &d, (&a[r] - &a[p]) / &d)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConicCoefficients {
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub b: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverDescriptor {
    pub t: String,
    pub case: u8,
    /// Role assignment `(i, j, k, l, m)` of the construction.
    pub roles: [usize; 5],
    /// `(a, b), (a', b'), (a'', b'')`.
    pub conics: [ConicCoefficients; 3],
    /// The two values whose square roots generate `K`.
    #[serde(serialize_with = "serialize_pair")]
    pub b_values: [Rational; 2],
    pub field: String,
    pub quartic_field: bool,
    pub gamma: Biquadratic,
    pub witness: CurvePoint<Rational>,
    pub equations: [String; 2],
    /// The witness satisfies the conic equation of the model, and lifts
    /// with `w = 1`.
    pub witness_lifts: bool,
}

fn serialize_pair<S: serde::Serializer>(c: &[Rational; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<String> = c.iter().map(format_rational).collect();
    v.serialize(s)
}

fn zeros() -> [Rational; 4] {
    std::array::from_fn(|_| Rational::from_integer(0.into()))
}

fn r(x: &Rational) -> String {
    format_rational(x)
}

fn coeffs(x: (Rational, Rational)) -> ConicCoefficients {
    ConicCoefficients { a: x.0, b: x.1 }
}

/// Case 1, `T = [D_ij - D_kl]` with `m` the fifth index.
fn case_one(c: &Genus5Curve<Rational>, [i, j, k, l, m]: [usize; 5], w: &CurvePoint<Rational>) -> Result<CoverDescriptor> {
    let a = c.a();
    let (a0, b0) = conic(a, m, k, l);
    let (a1, b1) = conic(a, m, i, j);
    let (a2, b2) = conic(a, m, l, j);
    let u = w.u();
    let unit = Biquadratic::new(b0.clone(), b1.clone(), zeros());
    let gamma = unit.linear(&u[m], 1, &u[l]).mul(&unit.linear(&u[m], 2, &u[j]));
    let on_conic = &a2 * &u[l] * &u[l] == &u[m] * &u[m] - &b2 * &u[j] * &u[j];
    finish(
        format!("[D{} - D{}]", pair(i, j), pair(k, l)),
        1,
        [i, j, k, l, m],
        [coeffs((a0, b0.clone())), coeffs((a1, b1.clone())), coeffs((a2.clone(), b2.clone()))],
        gamma,
        w,
        [
            format!("({}) u{l}^2 = u{m}^2 - ({}) u{j}^2", r(&a2), r(&b2)),
            format!("gamma w^2 = (u{m} - sqrt({}) u{l}) (u{m} - sqrt({}) u{j})", r(&b0), r(&b1)),
        ],
        on_conic,
    )
}

/// Case 2, `T = [D_ij - D_ik]` with `l, m` the remaining indices.
fn case_two(c: &Genus5Curve<Rational>, [i, j, k, l, m]: [usize; 5], w: &CurvePoint<Rational>) -> Result<CoverDescriptor> {
    let a = c.a();
    let (a0, b0) = conic(a, l, i, m);
    let (a1, b1) = conic(a, l, j, m);
    let (a2, b2) = conic(a, l, k, m);
    let u = w.u();
    let unit = Biquadratic::new(b1.clone(), b2.clone(), zeros());
    let gamma = unit.linear(&u[l], 1, &u[m]).mul(&unit.linear(&u[l], 2, &u[m]));
    let on_conic = &a0 * &u[i] * &u[i] == &u[l] * &u[l] - &b0 * &u[m] * &u[m];
    finish(
        format!("[D{} - D{}]", pair(i, j), pair(i, k)),
        2,
        [i, j, k, l, m],
        [coeffs((a0.clone(), b0.clone())), coeffs((a1, b1.clone())), coeffs((a2, b2.clone()))],
        gamma,
        w,
        [
            format!("({}) u{i}^2 = u{l}^2 - ({}) u{m}^2", r(&a0), r(&b0)),
            format!("gamma w^2 = (u{l} - sqrt({}) u{m}) (u{l} - sqrt({}) u{m})", r(&b1), r(&b2)),
        ],
        on_conic,
    )
}

fn pair(i: usize, j: usize) -> String {
    format!("{}{}", i.min(j), i.max(j))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    t: String,
    case: u8,
    roles: [usize; 5],
    conics: [ConicCoefficients; 3],
    gamma: Biquadratic,
    w: &CurvePoint<Rational>,
    equations: [String; 2],
    on_conic: bool,
) -> Result<CoverDescriptor> {
    if gamma.is_zero() {
        return Err(Error::Cover(format!("gamma vanishes at the witness {w} for {t}")));
    }
    Ok(CoverDescriptor {
        t,
        case,
        roles,
        conics,
        b_values: [gamma.b1.clone(), gamma.b2.clone()],
        field: gamma.field_name(),
        quartic_field: gamma.is_quartic_field(),
        gamma,
        witness: w.clone(),
        equations,
        witness_lifts: on_conic,
    })
}

fn rest(used: &[usize]) -> Vec<usize> {
    (0..5).filter(|x| !used.contains(x)).collect()
}

/// Every model of the cover for `T = [D_first - D_second]`: four role
/// assignments in Case 1, both orders of `(l, m)` in Case 2.
pub fn build_cover(
    c: &Genus5Curve<Rational>,
    first: PairSet,
    second: PairSet,
    witness: &CurvePoint<Rational>,
) -> Result<Vec<CoverDescriptor>> {
    c.point(witness.u().clone())?;
    if first == second {
        return Err(Error::Cover("T is zero".into()));
    }
    let mut out = Vec::new();
    match first.meets(&second) {
        None => {
            let m = rest(&[first.0, first.1, second.0, second.1])[0];
            for (i, j) in [(first.0, first.1), (first.1, first.0)] {
                for (k, l) in [(second.0, second.1), (second.1, second.0)] {
                    out.push(case_one(c, [i, j, k, l, m], witness)?);
                }
            }
        }
        Some(i) => {
            let j = if first.0 == i { first.1 } else { first.0 };
            let k = if second.0 == i { second.1 } else { second.0 };
            let (j, k) = (j.min(k), j.max(k));
            let lm = rest(&[i, j, k]);
            for (l, m) in [(lm[0], lm[1]), (lm[1], lm[0])] {
                out.push(case_two(c, [i, j, k, l, m], witness)?);
            }
        }
    }
    Ok(out)
}

/// Models for every representation of a `G` element.
pub fn covers_for(
    c: &Genus5Curve<Rational>,
    reps: &[Representation],
    witness: &CurvePoint<Rational>,
) -> Result<Vec<CoverDescriptor>> {
    let mut out = Vec::new();
    for rep in reps {
        out.extend(build_cover(c, rep.first, rep.second, witness)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::genus5::curve::build_curve;
    use crate::genus5::quadruple::validate_quadruple;

    fn fermat() -> Genus5Curve<Rational> {
        build_curve(&validate_quadruple([1, 3, 8, 120].map(int)).unwrap()).unwrap()
    }

    #[test]
    fn fermat_case_two_cover() {
        let c = fermat();
        let p0 = c.point([1, 1, 1, 1, 1].map(int)).unwrap();
        let covers = build_cover(&c, PairSet(1, 2), PairSet(1, 3), &p0).unwrap();
        assert_eq!(covers.len(), 2);
        let d = covers.iter().find(|d| d.roles[3] == 4 && d.roles[4] == 0).unwrap();
        assert_eq!(d.b_values, [int(-39), int(-14)]);
        assert_eq!(d.field, "Q(sqrt(-39), sqrt(-14))");
        assert!(d.quartic_field && d.witness_lifts);
        // (1 - sqrt(b'))(1 - sqrt(b''))
        assert_eq!(d.gamma.c, [1, -1, -1, 1].map(int));
    }

    #[test]
    fn manual_genus_two_variant() {
        let c = fermat();
        let p0 = c.point([1, 1, 1, 1, 1].map(int)).unwrap();
        let covers = build_cover(&c, PairSet(1, 3), PairSet(2, 3), &p0).unwrap();
        let d = covers.iter().find(|d| d.roles[3] == 4).unwrap();
        assert_eq!(d.b_values, [int(-119), int(-39)]);
    }

    #[test]
    fn case_one_has_four_models() {
        let c = fermat();
        let p0 = c.point([1, 1, 1, 1, 1].map(int)).unwrap();
        let covers = build_cover(&c, PairSet(1, 2), PairSet(3, 4), &p0).unwrap();
        assert_eq!(covers.len(), 4);
        assert!(covers.iter().all(|d| d.case == 1 && d.witness_lifts));
    }

    #[test]
    fn biquadratic_arithmetic() {
        let x = Biquadratic::new(int(-39), int(-14), [1, 2, 3, 4].map(int));
        let y = Biquadratic::new(int(-39), int(-14), [0, 1, 0, 0].map(int));
        // sqrt(b1)^2 = b1
        assert_eq!(y.mul(&y).c, [-39, 0, 0, 0].map(int));
        // norm-like product is fixed by all conjugations
        let n = x.mul(&x.conjugate(true, false)).mul(&x.conjugate(false, true)).mul(&x.conjugate(true, true));
        assert_eq!(n.c[1..], [0, 0, 0].map(int));
    }
}
