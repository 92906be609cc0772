//! The curves over Q(t) with known generators that the toolkit was built
//! to verify, as ready-made inputs.

use super::{curve_qt, EllipticCurveQt, PointQt};
use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatFunc};
use crate::weierstrass::Point;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn prod(fs: &[&[i64]]) -> IntPoly {
    fs.iter().fold(IntPoly::one(), |a, f| a.mul(&p(f)))
}

fn pt(x: IntPoly, y: IntPoly) -> PointQt {
    Point::Affine { x: RatFunc::from(x), y: RatFunc::from(y) }
}

const T: &[i64] = &[0, 1];
const TM1: &[i64] = &[-1, 1];
const TP1: &[i64] = &[1, 1];
const T2M1: &[i64] = &[-1, 0, 1];
const FOUR_T2M1: &[i64] = &[-1, 0, 4];

/// `e = (-4t(t-1), -4t(t+1), -(t^2-1))` with `T1`, `T2` and `P = (0, 4t(t-1)(t+1))`.
pub fn main_curve() -> (EllipticCurveQt, Vec<PointQt>) {
    let e1 = prod(&[&[-4], T, TM1]);
    let e2 = prod(&[&[-4], T, TP1]);
    let e3 = prod(&[&[-1], T2M1]);
    let c = curve_qt(e1.clone(), e2.clone(), e3).expect("distinct roots");
    let pts = vec![
        pt(e1, IntPoly::zero()),
        pt(e2, IntPoly::zero()),
        pt(IntPoly::zero(), prod(&[&[4], T, TM1, TP1])),
    ];
    (c, pts)
}

/// Rank-2 curve `e = (-(t^2-1), -4t(t-1)(4t^2-1), -4t(t+1)(4t^2-1))`.
pub fn other1() -> (EllipticCurveQt, Vec<PointQt>) {
    let e1 = prod(&[&[-1], T2M1]);
    let e2 = prod(&[&[-4], T, TM1, FOUR_T2M1]);
    let e3 = prod(&[&[-4], T, TP1, FOUR_T2M1]);
    let c = curve_qt(e1.clone(), e2.clone(), e3).expect("distinct roots");
    let pts = vec![
        pt(e1, IntPoly::zero()),
        pt(e2, IntPoly::zero()),
        pt(IntPoly::zero(), prod(&[&[4], T, T2M1, FOUR_T2M1])),
        pt(prod(&[&[-8], T, T, &[-1, 0, 2]]), prod(&[&[4], T, &[-1, -1, 4], &[-1, 1, 4]])),
    ];
    (c, pts)
}

/// Rank-2 curve `e = (-4t(t-1), -4t(t-1)(4t^2-1), -16t^2(4t^2-1))`.
pub fn other2() -> (EllipticCurveQt, Vec<PointQt>) {
    let e1 = prod(&[&[-4], T, TM1]);
    let e2 = prod(&[&[-4], T, TM1, FOUR_T2M1]);
    let e3 = prod(&[&[-16], T, T, FOUR_T2M1]);
    let c = curve_qt(e1.clone(), e2.clone(), e3).expect("distinct roots");
    let pts = vec![
        pt(e1, IntPoly::zero()),
        pt(e2, IntPoly::zero()),
        pt(IntPoly::zero(), prod(&[&[16], T, T, TM1, FOUR_T2M1])),
        pt(
            prod(&[&[4], T, TM1, &[-1, 2], &[1, 4]]),
            prod(&[&[16], T, T, TM1, &[-1, 2], &[1, 3], &[-1, 4]]),
        ),
    ];
    (c, pts)
}

/// Rank-2 curve `e = (-4t(t+1), -4t(t+1)(4t^2-1), -16t^2(4t^2-1))`.
pub fn other3() -> (EllipticCurveQt, Vec<PointQt>) {
    let e1 = prod(&[&[-4], T, TP1]);
    let e2 = prod(&[&[-4], T, TP1, FOUR_T2M1]);
    let e3 = prod(&[&[-16], T, T, FOUR_T2M1]);
    let c = curve_qt(e1.clone(), e2.clone(), e3).expect("distinct roots");
    let pts = vec![
        pt(e1, IntPoly::zero()),
        pt(e2, IntPoly::zero()),
        pt(IntPoly::zero(), prod(&[&[16], T, T, TP1, FOUR_T2M1])),
        pt(
            prod(&[&[4], T, TP1, &[1, 2], &[-1, 4]]),
            prod(&[&[16], T, T, TP1, &[1, 2], &[-1, 3], &[1, 4]]),
        ),
    ];
    (c, pts)
}

/// Rank-1 curve `e = (0, -16t(2t^2-1), -(3t+1)(4t+1)(4t^2-t-1))`.
pub fn other4() -> (EllipticCurveQt, Vec<PointQt>) {
    let e1 = IntPoly::zero();
    let e2 = prod(&[&[-16], T, &[-1, 0, 2]]);
    let e3 = prod(&[&[-1], &[1, 3], &[1, 4], &[-1, -1, 4]]);
    let c = curve_qt(e1.clone(), e2.clone(), e3).expect("distinct roots");
    let pts = vec![
        pt(e1, IntPoly::zero()),
        pt(e2, IntPoly::zero()),
        pt(prod(&[&[2], &[1, 3]]), prod(&[&[2], &[1, 3], &[-1, 4], &[-1, 1, 4]])),
    ];
    (c, pts)
}

pub const PRESET_NAMES: [&str; 5] = ["main", "other1", "other2", "other3", "other4"];

pub fn preset(name: &str) -> Result<(EllipticCurveQt, Vec<PointQt>)> {
    match name {
        "main" => Ok(main_curve()),
        "other1" => Ok(other1()),
        "other2" => Ok(other2()),
        "other3" => Ok(other3()),
        "other4" => Ok(other4()),
        _ => Err(Error::Parse(format!("unknown preset {name:?}; expected one of {PRESET_NAMES:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_points_lie_on_their_curves() {
        for name in PRESET_NAMES {
            let (c, pts) = preset(name).unwrap();
            for q in &pts {
                assert!(c.contains(q), "{name}: {q}");
            }
        }
    }
}
