//! Diophantine quadruples, the one-parameter family, and the two regular
//! extensions to quintuples.

use serde::Serialize;

use super::SqrtField;
use crate::arith::rational::rat;
use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::poly::RatFunc;

/// Index pairs `(i, j)`, `1 <= i < j <= 4`, in the order the witnesses are
/// stored.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// `(a1, a2, a3, a4)` with every `a_i a_j + 1` a square, together with the
/// chosen square roots (in the order of [`PAIRS`]).
#[derive(Clone, Debug, PartialEq)]
pub struct Quadruple<F> {
    a: [F; 4],
    roots: [F; 6],
}

pub type DiophQuadruple = Quadruple<Rational>;
pub type QuadrupleQt = Quadruple<RatFunc>;

impl<F: SqrtField> Quadruple<F> {
    pub fn a(&self) -> &[F; 4] {
        &self.a
    }

    /// `a_i` for `i` in `1..=4`; `a_0 = 0`.
    pub fn get(&self, i: usize) -> F {
        if i == 0 {
            F::zero()
        } else {
            self.a[i - 1].clone()
        }
    }

    /// `(a_0, ..., a_4)` with `a_0 = 0`.
    pub fn with_zero(&self) -> [F; 5] {
        std::array::from_fn(|i| self.get(i))
    }

    pub fn roots(&self) -> &[F; 6] {
        &self.roots
    }

    pub fn render(&self) -> Vec<String> {
        self.a.iter().map(|x| x.render()).collect()
    }
}

impl Serialize for Quadruple<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let a: Vec<String> = self.a.iter().map(format_rational).collect();
        a.serialize(s)
    }
}

/// Checks distinctness, nonzeroness and the six square conditions.
pub fn validate_quadruple<F: SqrtField>(a: [F; 4]) -> Result<Quadruple<F>> {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::InvalidQuadruple(format!("a{} is zero", i + 1)));
        }
    }
    let mut roots = Vec::with_capacity(6);
    for &(i, j) in &PAIRS {
        let (x, y) = (&a[i - 1], &a[j - 1]);
        if x == y {
            return Err(Error::InvalidQuadruple(format!(
                "a{i} = a{j} = {} are not distinct",
                x.render()
            )));
        }
        let v = x.mul(y).add(&F::one());
        match v.sqrt() {
            Some(r) => roots.push(r),
            None => {
                return Err(Error::InvalidQuadruple(format!(
                    "pair ({}, {}): {} * {} + 1 = {} is not a square",
                    x.render(),
                    y.render(),
                    x.render(),
                    y.render(),
                    v.render()
                )))
            }
        }
    }
    let roots: [F; 6] = roots.try_into().expect("six pairs");
    Ok(Quadruple { a, roots })
}

/// Parameters for which the family degenerates.
pub const EXCLUDED_T: [(i64, i64); 9] = [(-1, 1), (-1, 2), (-1, 3), (-1, 4), (0, 1), (1, 4), (1, 3), (1, 2), (1, 1)];

fn family_values<F: SqrtField>(t: &F) -> [F; 4] {
    let one = F::one();
    let two_t = t.add(t);
    let four_t = two_t.add(&two_t);
    [
        t.sub(&one),
        t.add(&one),
        four_t.clone(),
        four_t.mul(&two_t.sub(&one)).mul(&two_t.add(&one)),
    ]
}

/// `(t - 1, t + 1, 4t, 4t(2t - 1)(2t + 1))`.
pub fn family_member(t: &Rational) -> Result<DiophQuadruple> {
    if EXCLUDED_T.iter().any(|&(n, d)| rat(n, d) == *t) {
        return Err(Error::ExcludedParameter(format_rational(t)));
    }
    validate_quadruple(family_values(t))
}

/// The family over Q(t).
pub fn family_qt() -> QuadrupleQt {
    validate_quadruple(family_values(&RatFunc::t())).expect("the family is a quadruple over Q(t)")
}

/// The nonzero regular extension of the family,
/// `4t(2t-1)(2t+1)(4t^2-2t-1)(4t^2+2t-1)(8t^2-1) / (64t^6-80t^4+16t^2-1)^2`.
pub fn family_extension<F: SqrtField>(t: &F) -> F {
    let c = |n: i64| F::from_i64(n);
    let t2 = t.mul(t);
    let t4 = t2.mul(&t2);
    let t6 = t4.mul(&t2);
    let two_t = t.mul(&c(2));
    let num = c(4)
        .mul(t)
        .mul(&two_t.sub(&c(1)))
        .mul(&two_t.add(&c(1)))
        .mul(&c(4).mul(&t2).sub(&two_t).sub(&c(1)))
        .mul(&c(4).mul(&t2).add(&two_t).sub(&c(1)))
        .mul(&c(8).mul(&t2).sub(&c(1)));
    let den = c(64).mul(&t6).sub(&c(80).mul(&t4)).add(&c(16).mul(&t2)).sub(&c(1));
    num.div(&den.mul(&den))
}

/// The two values
/// `z = ((sum a)(prod a + 1) + 2 e3(a) +- 2s) / (prod a - 1)^2` with `s` the
/// product of the six witnesses; each is checked to extend the quadruple.
pub fn regular_extensions<F: SqrtField>(q: &Quadruple<F>) -> Result<[F; 2]> {
    let [a1, a2, a3, a4] = &q.a;
    let one = F::one();
    let two = F::from_i64(2);
    let prod = a1.mul(a2).mul(a3).mul(a4);
    let den = prod.sub(&one);
    if den.is_zero() {
        return Err(Error::InvalidQuadruple("a1 a2 a3 a4 = 1".into()));
    }
    let sum = a1.add(a2).add(a3).add(a4);
    let e3 = a1.mul(a2).mul(a3).add(&a1.mul(a2).mul(a4)).add(&a1.mul(a3).mul(a4)).add(&a2.mul(a3).mul(a4));
    let s = q.roots.iter().fold(F::one(), |acc, r| acc.mul(r));
    let base = sum.mul(&prod.add(&one)).add(&two.mul(&e3));
    let den2 = den.mul(&den);
    let zs = [base.add(&two.mul(&s)).div(&den2), base.sub(&two.mul(&s)).div(&den2)];
    for z in &zs {
        for (i, a) in q.a.iter().enumerate() {
            if a.mul(z).add(&one).sqrt().is_none() {
                return Err(Error::NotSquare(format!("a{} z + 1 at z = {}", i + 1, z.render())));
            }
        }
    }
    Ok(zs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use proptest::prelude::*;

    fn q(v: [i64; 4]) -> Result<DiophQuadruple> {
        validate_quadruple(v.map(int))
    }

    #[test]
    fn fermat_quadruple_roots() {
        let f = q([1, 3, 8, 120]).unwrap();
        assert_eq!(f.roots().to_vec(), [2, 3, 11, 5, 19, 31].map(int).to_vec());
    }

    #[test]
    fn invalid_quadruples_name_the_pair() {
        let err = q([1, 2, 3, 4]).unwrap_err();
        assert!(err.to_string().contains("pair (1, 2)"), "{err}");
        assert!(q([1, 3, 3, 120]).is_err());
        assert!(q([0, 3, 8, 120]).is_err());
    }

    #[test]
    fn family_members() {
        assert_eq!(family_member(&int(2)).unwrap().a().to_vec(), [1, 3, 8, 120].map(int).to_vec());
        assert_eq!(family_member(&int(3)).unwrap().a().to_vec(), [2, 4, 12, 420].map(int).to_vec());
        assert!(matches!(family_member(&rat(1, 2)), Err(Error::ExcludedParameter(_))));
        assert!(matches!(family_member(&rat(-1, 3)), Err(Error::ExcludedParameter(_))));
    }

    #[test]
    fn fermat_regular_extensions() {
        let z = regular_extensions(&q([1, 3, 8, 120]).unwrap()).unwrap();
        assert!(z.contains(&int(0)));
        assert!(z.contains(&rat(777480, 8288641)));
    }

    #[test]
    fn family_extension_values() {
        assert_eq!(family_extension(&int(2)), rat(777480, 8288641));
        assert_eq!(family_extension(&int(3)), rat(35455980, 1625621761));
        let z = regular_extensions(&family_member(&int(3)).unwrap()).unwrap();
        assert!(z.contains(&int(0)) && z.contains(&rat(35455980, 1625621761)));
    }

    #[test]
    fn regular_extensions_over_qt() {
        let z = regular_extensions(&family_qt()).unwrap();
        let f = family_extension(&RatFunc::t());
        assert!(z.contains(&RatFunc::zero()));
        assert!(z.contains(&f));
    }

    proptest! {
        #[test]
        fn family_identity_at_random_t(n in -60i64..60, d in 1i64..40) {
            let t = rat(n, d);
            prop_assume!(!EXCLUDED_T.iter().any(|&(a, b)| rat(a, b) == t));
            let fq = family_member(&t).unwrap();
            let z = regular_extensions(&fq).unwrap();
            prop_assert!(z.contains(&int(0)));
            prop_assert!(z.contains(&family_extension(&t)));
        }
    }
}
