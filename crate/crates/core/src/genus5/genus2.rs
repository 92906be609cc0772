//! The genus-2 quotient `y^2 = c' prod_{i=1..3} (x^2 + beta_i)` with
//! `x = u_4`, obtained from `u_i^2 = (a_i x^2 + a_4 - a_i) / a_4`.

use serde::Serialize;

use super::curve::CurvePoint;
use super::quadruple::DiophQuadruple;
use crate::arith::{format_rational, rational::sqrt_exact, Rational, SquareClassQ};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Genus2Model {
    /// Squarefree integer leading constant `c'`.
    pub c: Rational,
    pub beta: [Rational; 3],
    /// `y = scale * u_1 u_2 u_3`.
    pub scale: Rational,
}

impl Genus2Model {
    pub fn rhs(&self, x: &Rational) -> Rational {
        let x2 = x * x;
        self.beta.iter().fold(self.c.clone(), |acc, b| acc * (&x2 + b))
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        y * y == self.rhs(x)
    }

    /// The image `(u_4, scale u_1 u_2 u_3)` of a point with `u_0 = 1`.
    pub fn transfer(&self, p: &CurvePoint<Rational>) -> Result<(Rational, Rational)> {
        let u = p.u();
        if u[0] != Rational::from_integer(1.into()) {
            return Err(Error::Invalid(format!("{p} is not in the chart u0 = 1")));
        }
        let pt = (u[4].clone(), &self.scale * &u[1] * &u[2] * &u[3]);
        if !self.contains(&pt.0, &pt.1) {
            return Err(Error::OffCurve(format!("({}, {})", format_rational(&pt.0), format_rational(&pt.1))));
        }
        Ok(pt)
    }

    /// The four points `(+-x, +-y)` above an extension value `z`.
    pub fn points_for_extension(&self, q: &DiophQuadruple, z: &Rational) -> Result<Vec<(Rational, Rational)>> {
        let one = Rational::from_integer(1.into());
        let mut u = Vec::with_capacity(4);
        for a in q.a() {
            let v = a * z + &one;
            u.push(sqrt_exact(&v).ok_or_else(|| Error::NotSquare(format_rational(&v)))?);
        }
        let x = u[3].clone();
        let y = &self.scale * &u[0] * &u[1] * &u[2];
        let mut out = Vec::new();
        for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let p = (&x * Rational::from_integer(sx.into()), &y * Rational::from_integer(sy.into()));
            if !self.contains(&p.0, &p.1) {
                return Err(Error::OffCurve(format!("({}, {})", format_rational(&p.0), format_rational(&p.1))));
            }
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        let f: Vec<String> = self.beta.iter().map(|b| format!("(x^2 + {})", format_rational(b))).collect();
        format!("y^2 = {}*{}", format_rational(&self.c), f.join("*"))
    }
}

impl Serialize for Genus2Model {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({
            "c": format_rational(&self.c),
            "beta": self.beta.iter().map(format_rational).collect::<Vec<_>>(),
            "scale": format_rational(&self.scale),
            "equation": self.render(),
        })
        .serialize(s)
    }
}

pub fn genus2_quotient(q: &DiophQuadruple) -> Result<Genus2Model> {
    let [a1, a2, a3, a4] = q.a();
    let c = a1 * a2 * a3 / (a4 * a4 * a4);
    let beta = [a1, a2, a3].map(|ai| (a4 - ai) / ai);
    let cls = SquareClassQ::of_rational(&c)?;
    let c_sf = Rational::from_integer(cls.to_integer());
    let s = sqrt_exact(&(&c / &c_sf)).expect("quotient by the squarefree part is a square");
    Ok(Genus2Model { c: c_sf, beta, scale: s.recip() })
}
