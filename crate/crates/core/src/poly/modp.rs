//! Polynomials over F_p for small primes, with distinct-degree and
//! equal-degree (Cantor–Zassenhaus) factorization.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::IntPoly;
use crate::arith::factor::powmod_u64;

/// A polynomial over F_p, constant term first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    powmod_u64(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|x| {
                let r = ((x % &pb) + &pb) % &pb;
                r.to_u64().expect("reduced mod p")
            })
            .collect();
        FpPoly::new(p, c)
    }

    pub fn to_int(&self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % self.p)
            .collect();
        FpPoly::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.p;
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + p - o.c.get(i).unwrap_or(&0)) % p)
            .collect();
        FpPoly::new(p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::new(self.p, vec![]);
        }
        let p = self.p;
        let mut v = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % p as u128;
            }
        }
        FpPoly::new(p, v.into_iter().map(|x| x as u64).collect())
    }

    pub fn scale(&self, k: u64) -> Self {
        FpPoly::new(self.p, self.c.iter().map(|&x| mulm(x, k, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn divrem(&self, g: &Self) -> (Self, Self) {
        assert!(!g.is_zero(), "division by zero polynomial mod p");
        let p = self.p;
        let inv = inv_mod(g.lc(), p);
        let mut r = self.c.clone();
        let dg = g.deg();
        if r.len() < g.c.len() {
            return (FpPoly::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dg];
        for k in (0..q.len()).rev() {
            let coef = mulm(r[k + dg], inv, p);
            q[k] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &gj) in g.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mulm(coef, gj, p)) % p;
            }
        }
        r.truncate(dg);
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.divrem(g).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let p = a.p;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::new(p, vec![]));
        let (mut t0, mut t1) = (FpPoly::new(p, vec![]), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let k = inv_mod(r0.lc(), p);
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        FpPoly::new(
            p,
            self.c.iter().enumerate().skip(1).map(|(i, &x)| mulm(x, i as u64 % p, p)).collect(),
        )
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.deg() == 0 || self.gcd(&self.derivative()).deg() == 0
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(g, d)` where `g` is the product of the irreducible factors of degree `d`.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(p as u128, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Splits a product of distinct monic irreducibles of degree `d` (odd `p`).
pub fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let p = f.p;
    if f.deg() == d {
        return vec![f.clone()];
    }
    let exp = (p as u128).pow(d as u32).saturating_sub(1) / 2;
    loop {
        let a = FpPoly::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = a.powmod(exp, f).sub(&FpPoly::one(p));
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.divrem(&g).0.monic();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial over F_p, `p` odd.
pub fn factor_squarefree_mod_p(f: &FpPoly, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let f = f.monic();
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f) {
        out.extend(equal_degree(&g, d, rng));
    }
    out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.iter().rev().cmp(b.c.iter().rev())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_multiply_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (t^2 + 1)(t + 3)(t^3 + t + 1) mod 7
        let f = FpPoly::new(7, vec![1, 0, 1])
            .mul(&FpPoly::new(7, vec![3, 1]))
            .mul(&FpPoly::new(7, vec![1, 1, 0, 1]));
        let fs = factor_squarefree_mod_p(&f, &mut rng);
        let prod = fs.iter().fold(FpPoly::one(7), |a, g| a.mul(g));
        assert_eq!(prod, f.monic());
        let mut degs: Vec<_> = fs.iter().map(|g| g.deg()).collect();
        degs.sort();
        // t^2+1 is irreducible mod 7 (7 = 3 mod 4); t^3+t+1 has no root mod 7
        assert_eq!(degs, vec![1, 2, 3]);
    }

    #[test]
    fn xgcd_identity() {
        let a = FpPoly::new(11, vec![1, 2, 3, 4]);
        let b = FpPoly::new(11, vec![5, 0, 1]);
        let (g, s, t) = FpPoly::xgcd(&a, &b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
