//! Factorization in Z[t]: Yun squarefree decomposition, then Zassenhaus
//! (factor mod p, Hensel lift, recombine subsets).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{factor_squarefree_mod_p, FpPoly};
use super::IntPoly;
use crate::arith::factor::{factor_integer, is_prime_u};
use crate::error::{Error, Result};

/// `f = sign * content * prod(g^e)` with each `g` primitive, irreducible,
/// of positive degree and positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub negative: bool,
    pub content: Vec<(BigUint, u32)>,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut c = BigInt::one();
        for (p, e) in &self.content {
            c *= BigInt::from(p.clone()).pow(*e);
        }
        if self.negative {
            c = -c;
        }
        self.factors
            .iter()
            .fold(IntPoly::constant(c), |acc, (g, e)| acc.mul(&g.pow(*e)))
    }
}

/// Yun's squarefree decomposition of a primitive polynomial: `(a_i, i)` with
/// `f = prod a_i^i`, each `a_i` squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let f = f.primitive_part();
    if f.deg() == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let mut c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        b = b.div_exact(&a).expect("gcd divides b");
        c = d.div_exact(&a).expect("gcd divides d");
        d = c.sub(&b.derivative());
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn modp(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| modp(c, m)).collect())
}

fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = modp(c, m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible");
    e.x.mod_floor(m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(f: &IntPoly, h: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    let dh = h.deg();
    let mut r: Vec<BigInt> = reduce(f, m).coeffs().to_vec();
    if r.len() <= dh {
        return (IntPoly::zero(), IntPoly::new(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - dh];
    for k in (0..q.len()).rev() {
        let coef = modp(&r[k + dh], m);
        if !coef.is_zero() {
            for (j, hj) in h.coeffs().iter().enumerate() {
                r[k + j] = modp(&(&r[k + j] - &coef * hj), m);
            }
        }
        q[k] = coef;
    }
    r.truncate(dh);
    (IntPoly::new(q), IntPoly::new(r))
}

/// One quadratic Hensel step: lifts `f = g*h`, `s*g + t*h = 1` from `m` to `m^2`.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m2: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = reduce(&f.sub(&g.mul(h)), m2);
    let (q, r) = divrem_monic(&s.mul(&e), h, m2);
    let g2 = reduce(&g.add(&t.mul(&e)).add(&q.mul(g)), m2);
    let h2 = reduce(&h.add(&r), m2);
    let b = reduce(&s.mul(&g2).add(&t.mul(&h2)).sub(&IntPoly::one()), m2);
    let (c, d) = divrem_monic(&s.mul(&b), &h2, m2);
    let s2 = reduce(&s.sub(&d), m2);
    let t2 = reduce(&t.sub(&t.mul(&b)).sub(&c.mul(&g2)), m2);
    (g2, h2, s2, t2)
}

/// Lifts a factorization `f = lc(f) * prod(factors) mod p` to monic factors
/// modulo `p^(2^steps)`.
fn multifactor_lift(f: &IntPoly, factors: &[FpPoly], p: u64, steps: u32) -> Vec<IntPoly> {
    let pb = BigInt::from(p);
    let big_m = pb.pow(1u32 << steps);
    if factors.len() == 1 {
        let inv = inv_mod_big(&f.lc(), &big_m);
        return vec![reduce(&f.scale(&inv), &big_m)];
    }
    let split = factors.len() / 2;
    let (left, right) = factors.split_at(split);
    let lc_p = FpPoly::from_int(&IntPoly::constant(f.lc()), p);
    let g0 = left.iter().fold(lc_p, |a, u| a.mul(u));
    let h0 = right.iter().fold(FpPoly::one(p), |a, u| a.mul(u));
    let (one, s0, t0) = FpPoly::xgcd(&g0, &h0);
    debug_assert_eq!(one.deg(), 0);
    let (mut g, mut h, mut s, mut t) = (g0.to_int(), h0.to_int(), s0.to_int(), t0.to_int());
    let mut m = pb.clone();
    for _ in 0..steps {
        m = &m * &m;
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
    }
    let mut out = multifactor_lift(&g, left, p, steps);
    out.extend(multifactor_lift(&h, right, p, steps));
    out
}

fn choose_prime(f: &IntPoly) -> u64 {
    let lc = f.lc();
    let mut p = 3u64;
    loop {
        if is_prime_u(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = FpPoly::from_int(f, p);
            if fp.deg() == f.deg() && fp.is_squarefree() {
                return p;
            }
        }
        p += 2;
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors of a squarefree primitive polynomial with positive
/// leading coefficient.
fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    let p = choose_prime(f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ p);
    let modular = factor_squarefree_mod_p(&FpPoly::from_int(f, p), &mut rng);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // coefficients of any candidate lc(f) * g / lc(g) are bounded by B
    let max = f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = f.lc().abs() * (BigInt::one() << n) * BigInt::from(n + 1) * max;
    let target = bound * 2 + 1;
    let pb = BigInt::from(p);
    let mut steps = 0u32;
    while pb.pow(1u32 << steps) <= target {
        steps += 1;
    }
    let m = pb.pow(1u32 << steps);
    let mut lifted = multifactor_lift(f, &modular, p, steps);

    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), size) {
            let prod = subset
                .iter()
                .fold(IntPoly::constant(rest.lc()), |a, &i| reduce(&a.mul(&lifted[i]), &m));
            let cand = symmetric(&prod, &m).primitive_part();
            if let Some(q) = rest.div_exact(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if rest.deg() > 0 {
        found.push(rest.primitive_part());
    }
    found
}

/// Complete factorization of a nonzero polynomial in Z[t].
pub fn factor_int_poly(f: &IntPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::Zero("cannot factor the zero polynomial"));
    }
    let negative = f.lc().is_negative();
    let content = factor_integer(&f.content())?;
    let mut factors = Vec::new();
    for (a, e) in squarefree_decomposition(f) {
        for g in zassenhaus(&a) {
            factors.push((g, e));
        }
    }
    factors.sort();
    Ok(Factorization { negative, content, factors })
}

/// Whether a polynomial of positive degree is irreducible over Q.
pub fn is_irreducible(f: &IntPoly) -> bool {
    if f.deg() == 0 {
        return false;
    }
    let pp = f.primitive_part();
    let fac = factor_int_poly(&pp).expect("nonzero");
    fac.factors.len() == 1 && fac.factors[0].1 == 1
}
