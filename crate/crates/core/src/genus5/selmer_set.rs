//! The descent map of `C` into `H = (+)_i (Q^x/Q^x^2)^2`, the bounding group
//! `H0` from the quotients, the subgroup `H1` from the orbit of
//! `(1:1:1:1:1)`, local images at good odd primes, and the pruned set `H'0`
//! as a union of `H1`-cosets.
//!
//! At a good odd prime every value of `delta_p` is a pair of unit classes
//! determined by the reduction of the image point on `E_i`. Points of
//! `C(F_p)` are lifted to `Z/p^K` to read off that reduction, since the
//! linear forms `N_i, D_i` can vanish simultaneously mod `p`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::curve::{point_orbit, CurvePoint, Genus5Curve};
use super::quotient::{elliptic_quotient, linear_forms, map_point_to_quotient};
use crate::arith::factor::is_prime_u;
use crate::arith::{F2Space, F2Vec, LinearMap, Place, Rational, SquareClassQ};
use crate::certificate::Certificate;
use crate::ellq::descent::{descent_image, PairCoords};
use crate::ellq::local::{local_coords, local_labels};
use crate::ellq::{certify_generators, point_search, two_selmer_group, CertifyOptions, EllipticCurveQ, PointQ};
use crate::ellqt::PruneMode;
use crate::error::{Error, Result};
use crate::weierstrass::Point;

/// The bound for the image of `E_i(Q)/2E_i(Q)` used in `H0`.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub index: usize,
    pub curve: EllipticCurveQ,
    pub coords: PairCoords,
    pub bound: F2Space,
    pub mode_used: PruneMode,
    pub selmer_dim: usize,
    pub certificate: Option<Certificate>,
}

fn quotient_datum(
    c: &Genus5Curve<Rational>,
    i: usize,
    known: &[CurvePoint<Rational>],
    mode: PruneMode,
    opts: &CertifyOptions,
) -> Result<QuotientData> {
    let e = elliptic_quotient(c, i)?;
    let sel = two_selmer_group(&e)?;
    let coords = sel.pair_coords().clone();
    let mut certificate = None;
    if mode == PruneMode::MordellWeil {
        let mut candidates: Vec<PointQ> = Vec::new();
        for p in known {
            candidates.push(map_point_to_quotient(c, i, p)?);
        }
        candidates.extend(point_search(&e, opts.search_bound));
        let mut span = coords.span(&e.two_torsion().iter().map(|t| descent_image(&e, t)).collect::<Result<Vec<_>>>()?)?;
        let mut chosen = Vec::new();
        for p in candidates {
            if matches!(&p, Point::Affine { y, .. } if !y.is_zero()) {
                let v = coords.coords(&descent_image(&e, &p)?)?;
                if !span.contains(&v) {
                    span = span.with_vector(v);
                    chosen.push(p);
                }
            }
        }
        let cert = certify_generators(&e, &chosen, opts)?;
        if cert.success() {
            return Ok(QuotientData {
                index: i,
                curve: e,
                coords,
                bound: span,
                mode_used: PruneMode::MordellWeil,
                selmer_dim: sel.dim(),
                certificate: Some(cert),
            });
        }
        certificate = Some(cert);
    }
    Ok(QuotientData {
        index: i,
        curve: e,
        coords,
        bound: sel.members().clone(),
        mode_used: PruneMode::Selmer,
        selmer_dim: sel.dim(),
        certificate,
    })
}

/// Bounds for the five quotients: 2-Selmer groups, or in Mordell-Weil mode
/// the certified image of generators found among the images of `known` and
/// a point search (falling back to Selmer per quotient).
pub fn quotient_data(
    c: &Genus5Curve<Rational>,
    known: &[CurvePoint<Rational>],
    mode: PruneMode,
    opts: &CertifyOptions,
) -> Result<Vec<QuotientData>> {
    (0..5).into_par_iter().map(|i| quotient_datum(c, i, known, mode, opts)).collect()
}

struct HCoords {
    labels: Vec<String>,
    offsets: Vec<usize>,
}

impl HCoords {
    fn new(qd: &[QuotientData]) -> Self {
        let mut labels = Vec::new();
        let mut offsets = Vec::new();
        for q in qd {
            offsets.push(labels.len());
            labels.extend(q.coords.labels().into_iter().map(|l| format!("E{}:{l}", q.index)));
        }
        HCoords { labels, offsets }
    }

    fn embed(&self, i: usize, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zero(self.labels.len());
        for b in v.ones() {
            out.flip(self.offsets[i] + b);
        }
        out
    }
}

fn delta_vector(c: &Genus5Curve<Rational>, qd: &[QuotientData], hc: &HCoords, p: &CurvePoint<Rational>) -> Result<F2Vec> {
    let mut out = F2Vec::zero(hc.labels.len());
    for q in qd {
        let img = map_point_to_quotient(c, q.index, p)?;
        let v = q.coords.coords(&descent_image(&q.curve, &img)?)?;
        out.add_assign(&hc.embed(q.index, &v));
    }
    Ok(out)
}

/// Why `p` is not a good odd prime for `C`, if it is not.
pub fn is_good_prime(c: &Genus5Curve<Rational>, p: u64) -> Result<()> {
    let bad = |reason: String| Err(Error::BadPrime { prime: p, reason });
    if p == 2 || !is_prime_u(p) {
        return bad("not an odd prime".into());
    }
    let pb = BigInt::from(p);
    let a = c.a();
    for (i, x) in a.iter().enumerate().skip(1) {
        if (x.numer() % &pb).is_zero() || (x.denom() % &pb).is_zero() {
            return bad(format!("p divides the numerator or denominator of a{i}"));
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let d = &a[j] - &a[i];
            if (d.numer() % &pb).is_zero() {
                return bad(format!("a{j} = a{i} mod p"));
            }
        }
    }
    Ok(())
}

/// The `count` smallest good odd primes.
pub fn default_primes(c: &Genus5Curve<Rational>, count: usize) -> Vec<u64> {
    (3u64..).filter(|&p| is_good_prime(c, p).is_ok()).take(count).collect()
}

struct Ring {
    p: i128,
    m: i128,
    k: u32,
}

impl Ring {
    fn new(p: u64) -> Self {
        let p = p as i128;
        let mut k = 1;
        let mut m = p;
        while m * p < (1i128 << 40) {
            m *= p;
            k += 1;
        }
        Ring { p, m, k }
    }

    fn r(&self, x: i128) -> i128 {
        x.rem_euclid(self.m)
    }

    fn inv(&self, x: i128) -> i128 {
        let (g, s) = ext_gcd(self.r(x), self.m);
        assert_eq!(g, 1, "inverse of a non-unit");
        self.r(s)
    }

    fn of(&self, q: &Rational) -> i128 {
        let m = BigInt::from(self.m);
        let n = q.numer().mod_floor(&m).to_i128().unwrap();
        let d = q.denom().mod_floor(&m).to_i128().unwrap();
        self.r(n * self.inv(d))
    }

    fn val(&self, x: i128) -> u32 {
        let mut x = self.r(x);
        if x == 0 {
            return self.k;
        }
        let mut v = 0;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// A square root of `v` congruent to `r0` mod p (`r0` a unit).
    fn sqrt_lift(&self, v: i128, r0: i128) -> i128 {
        let mut r = r0;
        for _ in 0..=self.k {
            let f = self.r(r * r - v);
            r = self.r(r - f * self.inv(2 * r));
        }
        r
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1) = (a, b, 1i128, 0i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0, s0)
}

/// Points of `C(F_p)` as coordinate vectors scaled so the first nonzero
/// entry is 1.
fn points_mod_p(a: &[i128; 5], p: i128) -> Vec<[i128; 5]> {
    let mut root: Vec<Option<i128>> = vec![None; p as usize];
    for r in 0..p {
        let s = (r * r % p) as usize;
        if root[s].is_none() {
            root[s] = Some(r);
        }
    }
    let mut out = BTreeSet::new();
    let mut push_signs = |vals: [i128; 5]| {
        let mut roots = [0i128; 5];
        for j in 0..5 {
            match root[vals[j].rem_euclid(p) as usize] {
                Some(r) => roots[j] = r,
                None => return,
            }
        }
        for mask in 0..32u32 {
            let mut u = [0i128; 5];
            for j in 0..5 {
                u[j] = if mask >> j & 1 == 1 { (p - roots[j]) % p } else { roots[j] };
            }
            let lead = u.iter().find(|x| **x != 0).copied().unwrap();
            let li = inv_mod(lead, p);
            out.insert(u.map(|x| x * li % p));
        }
    };
    // u_j^2 = s + a_j w with (s, w) = (1, w) or (0, 1)
    for w in 0..p {
        push_signs(std::array::from_fn(|j| 1 + a[j] * w));
    }
    push_signs(std::array::from_fn(|j| a[j]));
    out.into_iter().collect()
}

fn inv_mod(x: i128, p: i128) -> i128 {
    ext_gcd(x.rem_euclid(p), p).1.rem_euclid(p)
}

fn legendre(x: i128, p: i128) -> i8 {
    crate::arith::local::legendre_u64(x, p as u64)
}

/// Reduction of the image on `E_i`: `None` for the origin, else `x mod p`.
/// `Err(())` if the chosen lifts never separate `N_i` and `D_i`.
fn reduced_x(ring: &Ring, a: &[i128; 5], n: &[i128; 5], d: &[i128; 5], u: &[i128; 5]) -> std::result::Result<Option<i128>, ()> {
    let p = ring.p;
    let r = u.iter().position(|x| *x != 0).unwrap();
    // u_j^2 = 1 + (a_j - a_r) w in the chart u_r = 1
    let zero_at = (0..5).find(|&j| j != r && u[j] == 0);
    let s = (0..5).find(|&j| j != r && u[j] != 0).unwrap();
    let w_bar = (u[s] * u[s] - 1).rem_euclid(p) * inv_mod(a[s] - a[r], p) % p;
    for attempt in 1..=6i128 {
        let mut lift = [0i128; 5];
        lift[r] = 1;
        let w = match zero_at {
            Some(j) => {
                lift[j] = ring.r(p * attempt);
                ring.r((p * p * attempt * attempt - 1) * ring.inv(a[j] - a[r]))
            }
            None => ring.r(w_bar + p * attempt),
        };
        for j in 0..5 {
            if j != r && Some(j) != zero_at {
                lift[j] = ring.sqrt_lift(ring.r(1 + (a[j] - a[r]) * w), u[j]);
            }
        }
        let nv = ring.r((0..5).map(|j| ring.r(n[j] * lift[j])).sum());
        let dv = ring.r((0..5).map(|j| ring.r(d[j] * lift[j])).sum());
        let (vn, vd) = (ring.val(nv), ring.val(dv));
        if vn.min(vd) >= ring.k {
            continue;
        }
        if vn < vd {
            return Ok(None);
        }
        let pv = p.pow(vd);
        let x = (nv / pv % p) * inv_mod((dv / pv) % p, p) % p;
        return Ok(Some(x));
    }
    Err(())
}

/// Unit square-class bits `(d1, d2)` of a point on `E_i` with reduction
/// `x`, in the layout of the local coordinates.
fn unit_bits(x: Option<i128>, e: &[i128; 3], p: i128) -> F2Vec {
    let mut v = F2Vec::zero(4);
    let Some(x) = x else { return v };
    let l: Vec<i8> = e.iter().map(|ek| legendre(x - ek, p)).collect();
    let nonres = |k: usize| -> bool {
        if l[k] == 0 {
            let o: Vec<i8> = (0..3).filter(|&j| j != k).map(|j| l[j]).collect();
            o[0] * o[1] == -1
        } else {
            l[k] == -1
        }
    };
    v.set(1, nonres(0));
    v.set(3, nonres(1));
    v
}

/// `delta_p(C(Q_p))` at a good odd prime.
#[derive(Clone, Debug, Serialize)]
pub struct LocalImage {
    pub prime: u64,
    pub labels: Vec<String>,
    #[serde(skip)]
    pub image: HashSet<F2Vec>,
    pub image_size: usize,
    pub points_mod_p: usize,
    pub undecided: usize,
}

/// Local labels of `H_p`, one 4-bit block per quotient.
fn local_h_labels(p: u64) -> Vec<String> {
    let place = Place::prime(p);
    (0..5).flat_map(|i| local_labels(&place).into_iter().map(move |l| format!("E{i}:{l}"))).collect()
}

pub fn local_image(c: &Genus5Curve<Rational>, p: u64) -> Result<LocalImage> {
    is_good_prime(c, p)?;
    let ring = Ring::new(p);
    let pi = p as i128;
    let a: [i128; 5] = std::array::from_fn(|j| ring.of(&c.a()[j]));
    let a_p = a.map(|x| x % pi);
    let pts = points_mod_p(&a_p, pi);
    let mut forms = Vec::new();
    for i in 0..5 {
        let (n, d) = linear_forms(c, i);
        let e = elliptic_quotient(c, i)?;
        let ep: [i128; 3] = std::array::from_fn(|k| ring.of(&e.e()[k]) % pi);
        forms.push((n.map(|x| ring.of(&x)), d.map(|x| ring.of(&x)), ep));
    }
    let mut image = HashSet::new();
    let mut undecided = 0;
    for u in &pts {
        // per quotient, the possible 4-bit blocks
        let mut blocks: Vec<Vec<F2Vec>> = Vec::with_capacity(5);
        for (n, d, ep) in &forms {
            match reduced_x(&ring, &a, n, d, u) {
                Ok(x) => blocks.push(vec![unit_bits(x, ep, pi)]),
                Err(()) => {
                    undecided += 1;
                    blocks.push((0..4).map(|m| F2Vec::from_indices(4, [1, 3].into_iter().filter(|b| m >> (b / 2) & 1 == 1))).collect());
                }
            }
        }
        let mut acc = vec![F2Vec::zero(0)];
        for b in blocks {
            acc = acc.iter().flat_map(|v| b.iter().map(move |w| v.concat(w))).collect();
        }
        image.extend(acc);
    }
    Ok(LocalImage {
        prime: p,
        labels: local_h_labels(p),
        image_size: image.len(),
        image,
        points_mod_p: pts.len(),
        undecided,
    })
}

fn restriction_map(qd: &[QuotientData], hc: &HCoords, p: u64) -> Result<LinearMap> {
    let place = Place::prime(p);
    let one = SquareClassQ::one();
    let mut cols = Vec::with_capacity(hc.labels.len());
    for q in qd {
        let gens = q.coords.generators();
        for c in 0..2 {
            for g in gens {
                let local = if c == 0 { local_coords(g, &one, &place) } else { local_coords(&one, g, &place) };
                let mut col = F2Vec::zero(20);
                for b in local.ones() {
                    col.flip(4 * q.index + b);
                }
                cols.push(col);
            }
        }
    }
    LinearMap::new(hc.labels.clone(), local_h_labels(p), cols)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientSummary {
    pub index: usize,
    pub roots: Vec<String>,
    pub mode_used: PruneMode,
    pub selmer_dim: usize,
    pub bound_dim: usize,
}

/// A coset of `H1` rendered as the pairs `(d1, d2)` on each quotient.
#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub vector: F2Vec,
    pub pairs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PruneReport {
    pub primes: Vec<u64>,
    pub quotients: Vec<QuotientSummary>,
    pub h0_dim: usize,
    pub h1_dim: usize,
    pub local: Vec<LocalImage>,
    /// Representatives of the cosets of `H1` making up `H'0`.
    pub surviving: Vec<ClassReport>,
    /// Cosets of `H1` hit by the known points.
    pub known: Vec<ClassReport>,
    pub covered: bool,
    pub uncovered: Vec<ClassReport>,
}

impl PruneReport {
    pub fn h_prime_size(&self) -> usize {
        self.surviving.len() << self.h1_dim
    }
}

fn class_report(qd: &[QuotientData], hc: &HCoords, v: &F2Vec) -> ClassReport {
    let pairs = qd
        .iter()
        .enumerate()
        .map(|(n, q)| {
            let start = hc.offsets[n];
            let len = q.coords.labels().len();
            let t = q.coords.triple(&v.slice(start, start + len));
            [t[0].to_string(), t[1].to_string()]
        })
        .collect();
    ClassReport { vector: v.clone(), pairs }
}

/// `H'0 = { h in H0 : rho_p(h) in delta_p(C(Q_p)) for all p in primes }`,
/// computed coset by coset modulo `H1`, and compared with the classes of
/// the known points.
pub fn selmer_set_prune(
    c: &Genus5Curve<Rational>,
    qd: &[QuotientData],
    known: &[CurvePoint<Rational>],
    primes: &[u64],
) -> Result<PruneReport> {
    let hc = HCoords::new(qd);
    let gens = qd.iter().flat_map(|q| q.bound.basis().iter().map(|b| hc.embed(q.index, b)));
    let h0 = F2Space::span_of(hc.labels.clone(), gens);

    let p0 = c.point(std::array::from_fn(|_| Rational::from_integer(1.into())))?;
    let mut h1 = F2Space::zero(hc.labels.clone());
    for q in point_orbit(c, &p0)? {
        h1 = h1.with_vector(delta_vector(c, qd, &hc, &q)?);
    }
    if !h1.is_subspace_of(&h0)? {
        return Err(Error::Invalid("orbit images of (1:1:1:1:1) are not in H0".into()));
    }
    let mut known_classes = BTreeSet::new();
    for p in known {
        let v = delta_vector(c, qd, &hc, p)?;
        if !h0.contains(&v) {
            return Err(Error::Invalid(format!("image of the known point {p} is not in H0")));
        }
        known_classes.insert(format!("{}", h1.reduce(&v)));
    }

    let local: Vec<LocalImage> = primes.par_iter().map(|&p| local_image(c, p)).collect::<Result<_>>()?;
    let maps: Vec<LinearMap> = primes.iter().map(|&p| restriction_map(qd, &hc, p)).collect::<Result<_>>()?;
    for (li, map) in local.iter().zip(&maps) {
        for h in h1.basis() {
            let shift = map.apply(h);
            if li.image.iter().any(|s| !li.image.contains(&s.add(&shift))) {
                return Err(Error::Invalid(format!("local image at {} is not stable under H1", li.prime)));
            }
        }
    }

    let reps = h0.enumerate_cosets(&h1)?;
    let surviving: Vec<F2Vec> = reps
        .into_par_iter()
        .filter(|r| local.iter().zip(&maps).all(|(li, map)| li.image.contains(&map.apply(r))))
        .map(|r| h1.reduce(&r))
        .collect();

    let mut known_vecs: Vec<F2Vec> = Vec::new();
    for p in known {
        let v = h1.reduce(&delta_vector(c, qd, &hc, p)?);
        if !known_vecs.contains(&v) {
            known_vecs.push(v);
        }
    }
    for v in &known_vecs {
        if !surviving.contains(v) {
            return Err(Error::Invalid(format!("a known point's class {v} was pruned")));
        }
    }
    let uncovered: Vec<F2Vec> = surviving.iter().filter(|v| !known_vecs.contains(v)).cloned().collect();
    Ok(PruneReport {
        primes: primes.to_vec(),
        quotients: qd
            .iter()
            .map(|q| QuotientSummary {
                index: q.index,
                roots: q.curve.e().iter().map(crate::arith::format_rational).collect(),
                mode_used: q.mode_used,
                selmer_dim: q.selmer_dim,
                bound_dim: q.bound.dim(),
            })
            .collect(),
        h0_dim: h0.dim(),
        h1_dim: h1.dim(),
        local,
        covered: uncovered.is_empty(),
        surviving: surviving.iter().map(|v| class_report(qd, &hc, v)).collect(),
        known: known_vecs.iter().map(|v| class_report(qd, &hc, v)).collect(),
        uncovered: uncovered.iter().map(|v| class_report(qd, &hc, v)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::genus5::curve::{build_curve, extension_to_points};
    use crate::genus5::quadruple::validate_quadruple;

    fn fermat() -> (Genus5Curve<Rational>, Vec<CurvePoint<Rational>>) {
        let q = validate_quadruple([1, 3, 8, 120].map(int)).unwrap();
        let c = build_curve(&q).unwrap();
        let mut known = extension_to_points(&q, &int(0)).unwrap();
        known.extend(extension_to_points(&q, &rat(777480, 8288641)).unwrap());
        (c, known)
    }

    #[test]
    fn good_primes_of_fermat() {
        let (c, _) = fermat();
        assert_eq!(default_primes(&c, 10), vec![11, 19, 23, 29, 31, 37, 41, 43, 47, 53]);
        assert!(is_good_prime(&c, 13).is_err());
        assert!(is_good_prime(&c, 17).is_err());
    }

    #[test]
    fn point_count_matches_brute_force() {
        let (c, _) = fermat();
        for p in [11u64, 19] {
            let pi = p as i128;
            let ring = Ring::new(p);
            let a: [i128; 5] = std::array::from_fn(|j| ring.of(&c.a()[j]) % pi);
            let fast = points_mod_p(&a, pi);
            // brute force over all projective points with first nonzero 1
            let mut slow = 0;
            for lead in 0..5 {
                let free = 4 - lead;
                for n in 0..pi.pow(free as u32) {
                    let mut u = [0i128; 5];
                    u[lead] = 1;
                    let mut m = n;
                    for j in lead + 1..5 {
                        u[j] = m % pi;
                        m /= pi;
                    }
                    let ok = c.quadrics().iter().all(|(_, q)| {
                        (0..5).map(|j| ring.of(&q[j]) % pi * u[j] * u[j]).sum::<i128>() % pi == 0
                    });
                    slow += ok as usize;
                }
            }
            assert_eq!(fast.len(), slow, "p = {p}");
        }
    }

    #[test]
    fn local_images_contain_known_points() {
        let (c, known) = fermat();
        let qd = quotient_data(&c, &known, PruneMode::Selmer, &CertifyOptions::default()).unwrap();
        let hc = HCoords::new(&qd);
        for p in [11u64, 19, 23] {
            let li = local_image(&c, p).unwrap();
            assert!(li.image_size <= li.points_mod_p);
            let map = restriction_map(&qd, &hc, p).unwrap();
            for q in &known {
                let v = delta_vector(&c, &qd, &hc, q).unwrap();
                assert!(li.image.contains(&map.apply(&v)), "p = {p}, {q}");
            }
            assert!(li.image.contains(&F2Vec::zero(20)));
        }
    }

    #[test]
    fn pruning_is_monotone() {
        let (c, known) = fermat();
        let qd = quotient_data(&c, &known, PruneMode::Selmer, &CertifyOptions::default()).unwrap();
        let none = selmer_set_prune(&c, &qd, &known, &[]).unwrap();
        assert_eq!(none.h_prime_size(), 1 << none.h0_dim);
        let few = selmer_set_prune(&c, &qd, &known, &[11, 19]).unwrap();
        let more = selmer_set_prune(&c, &qd, &known, &[11, 19, 23, 29]).unwrap();
        assert!(more.surviving.len() <= few.surviving.len());
        for s in &more.surviving {
            assert!(few.surviving.iter().any(|f| f.vector == s.vector));
        }
    }

    #[test]
    fn fermat_prunes_to_the_known_class() {
        let (c, known) = fermat();
        let qd = quotient_data(&c, &known, PruneMode::Selmer, &CertifyOptions::default()).unwrap();
        let r = selmer_set_prune(&c, &qd, &known, &default_primes(&c, 10)).unwrap();
        assert!(r.covered);
        assert_eq!(r.surviving.len(), 1);
        assert_eq!(r.known.len(), 1);
    }

    #[test]
    fn mordell_weil_bounds_lie_in_selmer() {
        let (c, known) = fermat();
        let sel = quotient_data(&c, &known, PruneMode::Selmer, &CertifyOptions::default()).unwrap();
        let mw = quotient_data(&c, &known, PruneMode::MordellWeil, &CertifyOptions::default()).unwrap();
        for (s, m) in sel.iter().zip(&mw) {
            assert!(m.bound.is_subspace_of(&s.bound).unwrap());
        }
    }
}
