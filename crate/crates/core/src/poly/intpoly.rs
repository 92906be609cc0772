//! Dense univariate polynomials over Z.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// A polynomial in Z[t], constant term first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `a*t + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        IntPoly::from_i64s(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn product<'a>(it: impl IntoIterator<Item = &'a IntPoly>) -> IntPoly {
        it.into_iter().fold(IntPoly::one(), |acc, p| acc.mul(p))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x / c).collect())
    }

    /// Pseudo-division: returns `(q, r, d)` with `lc(g)^d * f = q*g + r` and
    /// `deg r < deg g`.
    pub fn pseudo_divrem(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly, u32)> {
        if g.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let dg = g.deg();
        let lg = g.lc();
        let mut r = self.clone();
        let mut q = IntPoly::zero();
        let mut d = 0;
        while !r.is_zero() && r.deg() >= dg {
            let shift = r.deg() - dg;
            let mut mono = vec![BigInt::zero(); shift + 1];
            mono[shift] = r.lc();
            let mono = IntPoly::new(mono);
            q = q.scale(&lg).add(&mono);
            r = r.scale(&lg).sub(&mono.mul(g));
            d += 1;
        }
        Ok((q, r, d))
    }

    /// Division over Q: `f = q*g + r` with rational coefficients, returned as
    /// integer polynomials over a common positive denominator.
    pub fn divrem(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly, BigInt)> {
        let (q, r, d) = self.pseudo_divrem(g)?;
        let mut den = g.lc().pow(d);
        let (mut q, mut r) = (q, r);
        if den.is_negative() {
            den = -den;
            q = q.neg();
            r = r.neg();
        }
        let common = q.content().gcd(&r.content()).gcd(&den);
        if !common.is_zero() && !common.is_one() {
            q = q.div_scalar_exact(&common);
            r = r.div_scalar_exact(&common);
            den /= &common;
        }
        Ok((q, r, den))
    }

    /// Exact division in Z[t], if `g` divides `self`.
    pub fn div_exact(&self, g: &IntPoly) -> Option<IntPoly> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.deg() < g.deg() {
            return None;
        }
        let lg = g.lc();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.deg() - g.deg() + 1];
        while !r.is_zero() && r.deg() >= g.deg() {
            let (c, rem) = r.lc().div_rem(&lg);
            if !rem.is_zero() {
                return None;
            }
            let shift = r.deg() - g.deg();
            q[shift] = c.clone();
            let mut mono = vec![BigInt::zero(); shift + 1];
            mono[shift] = c;
            r = r.sub(&IntPoly::new(mono).mul(g));
        }
        r.is_zero().then(|| IntPoly::new(q))
    }

    /// Greatest common divisor in Q[t], normalized primitive with positive
    /// leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = o.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r, _) = a.pseudo_divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Full gcd in Z[t]: the Q[t]-gcd times the gcd of the contents.
    pub fn gcd_z(&self, o: &IntPoly) -> IntPoly {
        let g = self.gcd(o);
        if g.is_zero() {
            return g;
        }
        g.scale(&self.content().gcd(&o.content()))
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `b^deg * f(a/b)`, the homogenized value at `(a : b)`.
    pub fn evaluate_homogeneous(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let n = self.deg();
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        let mut terms = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            terms.push(bpow.clone());
            bpow *= b;
        }
        let mut apow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &apow * &terms[n - i];
            apow *= a;
        }
        acc
    }

    /// Exact square root in Z[t] with positive leading coefficient.
    pub fn sqrt_exact(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.deg();
        if n % 2 == 1 || self.lc().is_negative() {
            return None;
        }
        let m = n / 2;
        let lead = crate::arith::rational::sqrt_exact_int(&self.lc())?;
        // determine coefficients of the root from the top down
        let mut root = vec![BigInt::zero(); m + 1];
        root[m] = lead.clone();
        let two_lead = &lead * 2;
        for k in (0..m).rev() {
            // coefficient of t^(m + k) in root^2
            let mut acc = self.coeff(m + k);
            for i in (k + 1)..=m {
                let j = m + k - i;
                if j > k && j <= m {
                    acc -= &root[i] * &root[j];
                }
            }
            let (q, r) = acc.div_rem(&two_lead);
            if !r.is_zero() {
                return None;
            }
            root[k] = q;
        }
        let root = IntPoly::new(root);
        (root.mul(&root) == *self).then_some(root)
    }

    /// Human-readable form in the variable `t`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if i == 0 || !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl Ord for IntPoly {
    fn cmp(&self, o: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&o.coeffs.len())
            .then_with(|| {
                let key = |c: &BigInt| (c.abs(), c.is_positive());
                self.coeffs.iter().rev().map(key).cmp(o.coeffs.iter().rev().map(key))
            })
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("polynomial must look like [c0, c1, ...]: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(IntPoly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn gcd_content_evaluate() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])), p(&[-1, 1]));
        assert_eq!(p(&[12, 4, 8]).content(), BigInt::from(4));
        let d = p(&[-1, 0, 16, 0, -80, 0, 64]);
        assert_eq!(d.evaluate(&int(2)), int(2879));
        assert_eq!(p(&[1, 1]).evaluate(&rat(1, 2)), rat(3, 2));
        assert_eq!(p(&[1, 2, 3]).evaluate_homogeneous(&BigInt::from(1), &BigInt::from(2)), BigInt::from(4 + 4 + 3));
    }

    #[test]
    fn division() {
        let f = p(&[-1, 0, 1]);
        let g = p(&[1, 1]);
        assert_eq!(f.div_exact(&g), Some(p(&[-1, 1])));
        assert_eq!(f.div_exact(&p(&[2, 1])), None);
        let (q, r, den) = p(&[1, 0, 0, 1]).divrem(&p(&[1, 2])).unwrap();
        // 8 (t^3 + 1) = (4t^2 - 2t + 1)(2t + 1) + 7
        assert_eq!(q, p(&[1, -2, 4]));
        assert_eq!(r, p(&[7]));
        assert_eq!(den, BigInt::from(8));
        assert_eq!(f.divrem(&IntPoly::zero()).unwrap_err(), Error::DivisionByZeroPoly);
    }

    #[test]
    fn sqrt_and_parse() {
        let g = p(&[-1, -2, 4]);
        assert_eq!(g.mul(&g).sqrt_exact(), Some(p(&[-1, -2, 4])));
        assert_eq!(p(&[1, 0, 1]).sqrt_exact(), None);
        let parsed: IntPoly = "[0, -4, 4]".parse().unwrap();
        assert_eq!(parsed, p(&[0, -4, 4]));
        assert_eq!(parsed.to_string(), "[0, -4, 4]");
        assert_eq!(parsed.pretty(), "4t^2 - 4t");
        assert!("0, 1".parse::<IntPoly>().is_err());
    }
}
