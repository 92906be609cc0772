//! Primality testing and integer factorization.
//!
//! Miller-Rabin with the first twelve prime bases is deterministic below
//! 2^64; above that the same bases are supplemented by pseudo-random ones.
//! Composite cofactors are split with Brent's variant of Pollard rho.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u64 = 10_000;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_big(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == nm1 {
            return true;
        }
    }
    false
}

/// Primality test: deterministic below 2^64, Miller-Rabin with 32 bases above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    if !SMALL_PRIMES
        .iter()
        .all(|&a| miller_rabin_big(n, &BigUint::from(a)))
    {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(n.iter_u64_digits().fold(0, |h, w| h ^ w.rotate_left(17)));
    let two = BigUint::from(2u32);
    let span = n - BigUint::from(3u32);
    (0..20).all(|_| {
        let r = BigUint::from(rng.gen::<u64>()) * BigUint::from(rng.gen::<u64>());
        let a = r % &span + &two;
        miller_rabin_big(n, &a)
    })
}

pub fn is_prime_u(n: u64) -> bool {
    is_prime_u64(n)
}

/// Brent's cycle-finding Pollard rho; returns a nontrivial factor of the
/// odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut seed = 1u64;
    loop {
        let c = BigUint::from(seed);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32 + seed as u32 % 7);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let m = 64u64;
        let mut g;
        let mut x;
        let mut ys;
        loop {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            loop {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
                if k >= r || g != one {
                    break;
                }
            }
            r *= 2;
            if g != one {
                break;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        seed += 1;
    }
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let e = &n / &d;
    split_into(d, out);
    split_into(e, out);
}

/// Factors a nonzero integer into primes with multiplicities, sorted by prime.
/// The sign is ignored; `1` and `-1` factor as the empty product.
pub fn factor_integer(n: &BigInt) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::Zero("factor_integer"));
    }
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_LIMIT {
        if BigUint::from(p * p) > m {
            break;
        }
        while (&m % p).is_zero() {
            m /= p;
            primes.push(BigUint::from(p));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        if m < BigUint::from(TRIAL_LIMIT * TRIAL_LIMIT) {
            primes.push(m);
        } else {
            split_into(m, &mut primes);
        }
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    Ok(out)
}

/// Primes below `bound`, in increasing order.
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound < 3 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n];
    sieve[0] = false;
    if n > 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            let mut j = i * i;
            while j < n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: i64) -> Vec<(u64, u32)> {
        factor_integer(&BigInt::from(n))
            .unwrap()
            .into_iter()
            .map(|(p, e)| (p.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn factor_examples() {
        assert_eq!(f(8288641), vec![(2879, 2)]);
        assert_eq!(f(1), vec![]);
        assert_eq!(f(961), vec![(31, 2)]);
        assert_eq!(f(-777480), vec![(2, 3), (3, 1), (5, 1), (11, 1), (19, 1), (31, 1)]);
        assert!(factor_integer(&BigInt::zero()).is_err());
    }

    #[test]
    fn factor_large_semiprime() {
        // (2^61 - 1) * (2^31 - 1), both Mersenne primes
        let p = BigUint::from((1u64 << 61) - 1);
        let q = BigUint::from((1u64 << 31) - 1);
        let n = BigInt::from(&p * &q);
        assert_eq!(factor_integer(&n).unwrap(), vec![(q, 1), (p, 1)]);
        let m = BigUint::from(1_000_000_007u64) * BigUint::from(998_244_353u64);
        let fac = factor_integer(&BigInt::from(m)).unwrap();
        assert_eq!(fac.len(), 2);
    }

    #[test]
    fn primality_matches_sieve() {
        let sieve = primes_below(5000);
        for n in 0..5000u64 {
            assert_eq!(is_prime_u(n), sieve.binary_search(&n).is_ok(), "{n}");
        }
        // Carmichael number and a strong pseudoprime to base 2
        assert!(!is_prime_u(561));
        assert!(!is_prime_u(2047));
        let big = BigUint::parse_bytes(b"170141183460469231731687303715884105727", 10).unwrap();
        assert!(is_prime(&big));
        assert!(!is_prime(&(&big * BigUint::from(3u32))));
    }
}
