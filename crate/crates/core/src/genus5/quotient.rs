//! The elliptic quotients `E_i` of `C`, the maps `C -> E_i`, the descent map
//! of `C`, and the morphism from the family curve onto the curve over Q(t).

use super::curve::{CurvePoint, Genus5Curve};
use super::SqrtField;
use crate::arith::Rational;
use crate::ellq::{descent_image, ClassTriple};
use crate::error::{Error, Result};
use crate::weierstrass::{Curve, Point};

/// The indices other than `i`, ascending.
pub fn quotient_indices(i: usize) -> [usize; 4] {
    assert!(i < 5, "quotient index out of range");
    let v: Vec<usize> = (0..5).filter(|&j| j != i).collect();
    v.try_into().unwrap()
}

/// `y^2 = (x + a_j a_k + a_l a_m)(x + a_j a_l + a_k a_m)(x + a_j a_m + a_k a_l)`.
pub fn elliptic_quotient<F: SqrtField>(c: &Genus5Curve<F>, i: usize) -> Result<Curve<F>> {
    let a = c.a();
    let [j, k, l, m] = quotient_indices(i);
    let e = |p: usize, q: usize, r: usize, s: usize| a[p].mul(&a[q]).add(&a[r].mul(&a[s])).neg();
    Curve::new(e(j, k, l, m), e(j, l, k, m), e(j, m, k, l))
}

fn vandermonde<F: SqrtField>(x: &[F]) -> F {
    let mut v = F::one();
    for q in 0..x.len() {
        for p in 0..q {
            v = v.mul(&x[q].sub(&x[p]));
        }
    }
    v
}

/// Cofactors of the last row of `det[1; a; a^2; w]` over the columns `idx`,
/// so the determinant is `sum cof_c w_c`.
fn cofactors<F: SqrtField>(a: &[F; 5], idx: &[usize; 4]) -> [F; 4] {
    std::array::from_fn(|c| {
        let rest: Vec<F> = (0..4).filter(|&d| d != c).map(|d| a[idx[d]].clone()).collect();
        let v = vandermonde(&rest);
        if (3 + c) % 2 == 0 {
            v
        } else {
            v.neg()
        }
    })
}

struct Forms<F> {
    d: F,
    n: F,
    v: F,
}

fn forms<F: SqrtField>(a: &[F; 5], idx: &[usize; 4], u: &[F; 5]) -> Forms<F> {
    let cof = cofactors(a, idx);
    let sum_a = idx.iter().fold(F::zero(), |s, &p| s.add(&a[p]));
    let mut d = F::zero();
    let mut n = F::zero();
    for (c, &p) in idx.iter().enumerate() {
        // b_p = a_p - (sum of the other three)
        let b = a[p].add(&a[p]).sub(&sum_a);
        d = d.add(&cof[c].mul(&u[p]));
        n = n.add(&cof[c].mul(&a[p]).mul(&b).mul(&u[p]));
    }
    let v = vandermonde(&idx.map(|p| a[p].clone()));
    Forms { d, n, v }
}

/// Linear forms `(N_i, D_i)` on `C`, as coefficient vectors over
/// `u_0, ..., u_4`; `x = N_i / D_i` on `E_i`.
pub fn linear_forms<F: SqrtField>(c: &Genus5Curve<F>, i: usize) -> ([F; 5], [F; 5]) {
    let a = c.a();
    let idx = quotient_indices(i);
    let mut n = std::array::from_fn(|_| F::zero());
    let mut d = std::array::from_fn(|_| F::zero());
    for p in idx {
        let mut u: [F; 5] = std::array::from_fn(|_| F::zero());
        u[p] = F::one();
        let f = forms(a, &idx, &u);
        n[p] = f.n;
        d[p] = f.d;
    }
    (n, d)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// The image of `P` on `E_i`; `D_i(P) = 0` gives the origin. The `y`
/// formula is symmetric in the ordering of the four indices, so when its
/// denominator vanishes another ordering is used.
pub fn map_point_to_quotient<F: SqrtField>(c: &Genus5Curve<F>, i: usize, p: &CurvePoint<F>) -> Result<Point<F>> {
    let u = p.u();
    c.point(u.clone())?;
    let e = elliptic_quotient(c, i)?;
    let a = c.a();
    let base = quotient_indices(i);
    let f = forms(a, &base, u);
    if f.d.is_zero() {
        return Ok(Point::Infinity);
    }
    let x = f.n.div(&f.d);
    let mut y = None;
    for perm in permutations4() {
        let [j, k, l, m] = perm.map(|s| base[s]);
        let den = a[j].sub(&a[k]).mul(&u[l]).add(&a[k].sub(&a[l]).mul(&u[j])).add(&a[l].sub(&a[j]).mul(&u[k]));
        if den.is_zero() {
            continue;
        }
        let num = a[j]
            .sub(&a[k])
            .mul(&u[j].mul(&u[k]).sub(&u[l].mul(&u[m])))
            .add(&a[k].sub(&a[l]).mul(&u[k].mul(&u[l]).sub(&u[j].mul(&u[m]))))
            .add(&a[l].sub(&a[j]).mul(&u[l].mul(&u[j]).sub(&u[k].mul(&u[m]))));
        let g = forms(a, &[j, k, l, m], u);
        y = Some(g.v.mul(&num).div(&g.d.mul(&den)));
        break;
    }
    let y = match y {
        Some(y) => y,
        None => e
            .rhs(&x)
            .sqrt()
            .ok_or_else(|| Error::Invalid(format!("no y-coordinate on E_{i} for {p}")))?,
    };
    let q = Point::affine(x, y);
    e.check(&q)?;
    Ok(q)
}

/// The descent images of the five quotient points, `(delta_{E_i}(pi_i(P)))_i`.
pub fn delta_c(c: &Genus5Curve<Rational>, p: &CurvePoint<Rational>) -> Result<[ClassTriple; 5]> {
    let mut out = Vec::with_capacity(5);
    for i in 0..5 {
        let e = elliptic_quotient(c, i)?;
        out.push(descent_image(&e, &map_point_to_quotient(c, i, p)?)?);
    }
    Ok(out.try_into().unwrap())
}

/// `y^2 = (x + 4t(t-1))(x + 4t(t+1))(x + t^2 - 1)` at the parameter `t`.
pub fn family_target_curve<F: SqrtField>(t: &F) -> Result<Curve<F>> {
    let one = F::one();
    let four_t = t.mul(&F::from_i64(4));
    Curve::new(
        four_t.mul(&t.sub(&one)).neg(),
        four_t.mul(&t.add(&one)).neg(),
        t.mul(t).sub(&one).neg(),
    )
}

/// `(z, u_1, ..., u_4) -> (4t(t-1)(t+1) z, 4t(t-1)(t+1) u_1 u_2 u_3)` from the
/// curve of the family member at `t` (with `u_0 = 1`, `z = (u_1^2 - 1)/(t - 1)`)
/// to [`family_target_curve`].
pub fn pi_morphism<F: SqrtField>(t: &F, p: &CurvePoint<F>) -> Result<Point<F>> {
    let u = p.u();
    if u[0] != F::one() {
        return Err(Error::Invalid(format!("{p} is not in the chart u0 = 1")));
    }
    let one = F::one();
    let z = u[1].mul(&u[1]).sub(&one).div(&t.sub(&one));
    let k = t.mul(&F::from_i64(4)).mul(&t.sub(&one)).mul(&t.add(&one));
    let target = family_target_curve(t)?;
    target.point(k.mul(&z), k.mul(&u[1]).mul(&u[2]).mul(&u[3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::genus5::curve::{build_curve, extension_to_points, point_orbit};
    use crate::genus5::quadruple::{family_extension, family_member, family_qt, regular_extensions, validate_quadruple};
    use crate::poly::RatFunc;

    fn fermat() -> Genus5Curve<Rational> {
        build_curve(&validate_quadruple([1, 3, 8, 120].map(int)).unwrap()).unwrap()
    }

    fn euler() -> CurvePoint<Rational> {
        let q = validate_quadruple([1, 3, 8, 120].map(int)).unwrap();
        extension_to_points(&q, &rat(777480, 8288641)).unwrap().remove(0)
    }

    #[test]
    fn fermat_quotient_zero() {
        let e = elliptic_quotient(&fermat(), 0).unwrap();
        assert_eq!(e.e().to_vec(), [-963, -368, -144].map(int).to_vec());
    }

    #[test]
    fn quotient_four_over_qt_is_the_family_target() {
        let q = family_qt();
        let c = build_curve(&q).unwrap();
        let e = elliptic_quotient(&c, 4).unwrap();
        let target = family_target_curve(&RatFunc::t()).unwrap();
        let mut a: Vec<String> = e.e().iter().map(|x| x.to_string()).collect();
        let mut b: Vec<String> = target.e().iter().map(|x| x.to_string()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn all_ones_maps_to_origin() {
        let c = fermat();
        let p0 = c.point([1, 1, 1, 1, 1].map(int)).unwrap();
        for i in 0..5 {
            assert!(map_point_to_quotient(&c, i, &p0).unwrap().is_infinity());
        }
        for d in delta_c(&c, &p0).unwrap() {
            assert!(d.iter().all(|s| s.is_one()));
        }
    }

    #[test]
    fn euler_point_on_quotient_four() {
        let c = fermat();
        let q = map_point_to_quotient(&c, 4, &euler()).unwrap();
        assert_eq!(q, Point::affine(int(2880), int(-155496)));
    }

    #[test]
    fn images_satisfy_the_quotient_equations() {
        let q = family_member(&int(3)).unwrap();
        let c = build_curve(&q).unwrap();
        for z in regular_extensions(&q).unwrap() {
            for p in extension_to_points(&q, &z).unwrap() {
                for i in 0..5 {
                    let e = elliptic_quotient(&c, i).unwrap();
                    assert!(e.contains(&map_point_to_quotient(&c, i, &p).unwrap()));
                }
            }
        }
    }

    #[test]
    fn two_sign_flips_translate_by_two_torsion() {
        let c = fermat();
        let p = euler();
        for i in 0..5 {
            let e = elliptic_quotient(&c, i).unwrap();
            let base = map_point_to_quotient(&c, i, &p).unwrap();
            let tors: Vec<Point<Rational>> =
                std::iter::once(Point::Infinity).chain(e.two_torsion()).collect();
            let others = quotient_indices(i);
            for s in 0..4 {
                for r in s + 1..4 {
                    let mask = (1u8 << others[s]) | (1u8 << others[r]);
                    let q = map_point_to_quotient(&c, i, &p.flip(mask)).unwrap();
                    let diff = e.add(&q, &e.neg(&base)).unwrap();
                    assert!(tors.contains(&diff), "i={i} mask={mask:b}");
                }
            }
        }
    }

    #[test]
    fn pi_is_twice_pi4_plus_p() {
        // x(pi(Q)) = x(2 pi_4(Q) + P) on the family target at t = 2
        let c = fermat();
        let t = int(2);
        let target = family_target_curve(&t).unwrap();
        let e4 = elliptic_quotient(&c, 4).unwrap();
        let p = target.point(int(0), int(24)).unwrap();
        let q = validate_quadruple([1, 3, 8, 120].map(int)).unwrap();
        for z in regular_extensions(&q).unwrap() {
            for pt in extension_to_points(&q, &z).unwrap() {
                let img = map_point_to_quotient(&c, 4, &pt).unwrap();
                // E_4 and the target share their roots up to order
                let img = match img {
                    Point::Infinity => Point::Infinity,
                    Point::Affine { x, y } => target.point(x, y).unwrap(),
                };
                assert!(e4.e().iter().all(|r| target.e().contains(r)));
                let rhs = target.add(&target.multiply(2, &img).unwrap(), &p).unwrap();
                let lhs = pi_morphism(&t, &pt).unwrap();
                assert_eq!(lhs.x(), rhs.x());
            }
        }
    }

    #[test]
    fn pi_maps_extension_orbits_to_p_and_five_p() {
        let q = family_qt();
        let t = RatFunc::t();
        let target = family_target_curve(&t).unwrap();
        let k = t.mul(&t.sub(&RatFunc::one())).mul(&t.add(&RatFunc::one())).scale(4);
        let p = target.point(RatFunc::zero(), k).unwrap();
        let five = target.multiply(5, &p).unwrap();
        let allowed_zero = [p.clone(), target.neg(&p)];
        let allowed_f = [five.clone(), target.neg(&five)];
        for (z, allowed) in [(RatFunc::zero(), &allowed_zero), (family_extension(&t), &allowed_f)] {
            let c = build_curve(&q).unwrap();
            let first = extension_to_points(&q, &z).unwrap().remove(0);
            for pt in point_orbit(&c, &first).unwrap() {
                assert!(allowed.contains(&pi_morphism(&t, &pt).unwrap()));
            }
        }
    }
}
