//! "Generators certified" for E(Q): independence, Selmer rank bound,
//! 2-saturation by explicit halving, odd saturation by reduction.

use serde_json::{json, Value};

use super::descent::{descent_image, ClassTriple, PairCoords};
use super::saturation::{auxiliary_reductions, ell_saturation, halve, torsion_order_bound};
use super::search::point_search;
use super::selmer::two_selmer_group;
use super::{EllipticCurveQ, PointQ};
use crate::arith::factor::primes_below;
use crate::certificate::{Certificate, CertificateKind};
use crate::error::Result;
use crate::weierstrass::{FieldElement, Point};

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub search_bound: u64,
    pub saturation_bound: u64,
    /// Auxiliary primes for odd saturation are taken below this bound.
    pub auxiliary_bound: u64,
    pub min_witnesses: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { search_bound: 10, saturation_bound: 50, auxiliary_bound: 10_000, min_witnesses: 3 }
    }
}

fn triple_json(t: &ClassTriple) -> Value {
    json!([t[0].to_string(), t[1].to_string(), t[2].to_string()])
}

pub fn curve_json(curve: &EllipticCurveQ) -> Value {
    json!(curve.e().iter().map(|e| e.render()).collect::<Vec<_>>())
}

/// Runs checks (a)-(d); the certificate's conclusion says which failed.
pub fn certify_generators(curve: &EllipticCurveQ, points: &[PointQ], opts: &CertifyOptions) -> Result<Certificate> {
    for p in points {
        curve.check(p)?;
    }
    let mut cert = Certificate::new(
        CertificateKind::QGenerators,
        json!({
            "curve": curve_json(curve),
            "points": points,
            "search_bound": opts.search_bound,
            "saturation_bound": opts.saturation_bound,
        }),
    );
    let r = points.len();
    let torsion = curve.two_torsion();

    // (a) independence modulo 2E(Q)
    let mut images = Vec::new();
    for p in torsion[..2].iter().chain(points) {
        images.push(descent_image(curve, p)?);
    }
    let span = PairCoords::covering(&images).span(&images)?;
    cert.push(
        "descent_images",
        json!({"points": points}),
        json!({"images": images.iter().map(triple_json).collect::<Vec<_>>(), "span_dim": span.dim()}),
    );
    if span.dim() != 2 + r {
        cert.conclude(
            false,
            format!("step (a) failed: descent images span dimension {} instead of {}", span.dim(), 2 + r),
            json!({"failed_step": "a"}),
        );
        return Ok(cert);
    }

    // (b) Selmer rank bound
    let sel = two_selmer_group(curve)?;
    cert.push(
        "two_selmer_group",
        json!({"curve": curve_json(curve)}),
        json!({
            "dim": sel.dim(),
            "rank_bound": sel.rank_bound(),
            "basis": sel.basis_triples().iter().map(triple_json).collect::<Vec<_>>(),
        }),
    );
    if sel.rank_bound() != r {
        cert.conclude(
            false,
            format!("step (b) failed: Selmer rank bound {} exceeds the {} given points", sel.rank_bound(), r),
            json!({"failed_step": "b", "selmer_dim": sel.dim()}),
        );
        return Ok(cert);
    }

    // search consistency: small points have images in the span
    let found = point_search(curve, opts.search_bound);
    let mut outside = Vec::new();
    for p in &found {
        let img = descent_image(curve, p)?;
        let mut all = images.clone();
        all.push(img);
        if PairCoords::covering(&all).span(&all)?.dim() != span.dim() {
            outside.push(p.clone());
        }
    }
    cert.push(
        "point_search",
        json!({"bound": opts.search_bound}),
        json!({"found": found.len(), "outside_span": outside}),
    );

    // (c) 2-saturation: no nonzero combination of generators and torsion is halvable
    let gens: Vec<PointQ> = torsion[..2].iter().cloned().chain(points.iter().cloned()).collect();
    let mut halving = Vec::new();
    for mask in 1u32..(1 << gens.len()) {
        let coeffs: Vec<i64> = (0..gens.len()).map(|i| (mask >> i & 1) as i64).collect();
        let q = curve.combination(&coeffs, &gens);
        match halve(curve, &q) {
            Some(h) => {
                cert.push("two_saturation", json!({"combination": coeffs}), json!({"half": h}));
                cert.conclude(
                    false,
                    format!("step (c) failed: combination {coeffs:?} is twice {h}"),
                    json!({"failed_step": "c"}),
                );
                return Ok(cert);
            }
            None => {
                let witness = match &q {
                    Point::Infinity => "identity".to_string(),
                    Point::Affine { x, .. } => {
                        let i = (0..3)
                            .find(|&i| {
                                let d = x - &curve.e()[i];
                                !d.is_zero() && crate::arith::rational::sqrt_exact(&d).is_none()
                            })
                            .map_or("torsion".to_string(), |i| format!("x - e{} not a square", i + 1));
                        i
                    }
                };
                halving.push(json!({"combination": coeffs, "witness": witness}));
            }
        }
    }
    cert.push("two_saturation", json!({"generators": gens}), json!(halving));

    // torsion: the odd part of gcd #E(F_q) must be trivial
    let reductions = auxiliary_reductions(curve, opts.auxiliary_bound);
    let tors = torsion_order_bound(&reductions, 30);
    let odd = tors >> tors.trailing_zeros();
    cert.push("torsion_bound", json!({"reductions": 30}), json!({"gcd_of_orders": tors}));
    if odd != 1 {
        cert.conclude(
            false,
            format!("torsion check failed: gcd of #E(F_q) is {tors}, odd torsion not excluded"),
            json!({"failed_step": "torsion"}),
        );
        return Ok(cert);
    }

    // (d) odd saturation
    let mut unverified = Vec::new();
    for ell in primes_below(opts.saturation_bound + 1).into_iter().filter(|&l| l > 2) {
        let s = ell_saturation(&reductions, points, ell, opts.min_witnesses);
        cert.push(
            "ell_saturation",
            json!({"ell": ell}),
            json!({"witnesses": s.witnesses, "rank": s.rank, "verified": s.verified}),
        );
        if !s.verified {
            unverified.push(ell);
        }
    }
    if !unverified.is_empty() {
        cert.conclude(
            false,
            format!("step (d) failed: saturation unverified at {unverified:?}"),
            json!({"failed_step": "d", "unverified": unverified}),
        );
        return Ok(cert);
    }
    cert.conclude(
        true,
        format!(
            "E(Q) = Z/2 x Z/2 x Z^{r}; the given points are independent, match the Selmer rank bound, \
             and are saturated at 2 and at all odd primes up to {}",
            opts.saturation_bound
        ),
        json!({"rank": r, "selmer_dim": sel.dim()}),
    );
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn certifies_rank_zero_curve() {
        let c = EllipticCurveQ::new(int(0), int(1), int(-1)).unwrap();
        let cert = certify_generators(&c, &[], &CertifyOptions::default()).unwrap();
        assert!(cert.success(), "{}", cert.conclusion.verdict);
    }

    #[test]
    fn certifies_specializations() {
        // the curve over Q(t) with e = (-4t(t-1), -4t(t+1), -(t^2-1)) at t = 2, 3, 5
        for t in [2i64, 3, 5] {
            let c = EllipticCurveQ::new(int(-4 * t * (t - 1)), int(-4 * t * (t + 1)), int(-(t * t - 1))).unwrap();
            let p = c.point(int(0), int(4 * t * (t - 1) * (t + 1))).unwrap();
            let cert = certify_generators(&c, &[p], &CertifyOptions::default()).unwrap();
            assert!(cert.success(), "t = {t}: {}", cert.conclusion.verdict);
            assert_eq!(cert.conclusion.details["selmer_dim"], 3);
        }
    }

    #[test]
    fn missing_points_fail_at_b_and_dependent_points_at_a() {
        let c = EllipticCurveQ::new(int(-8), int(-24), int(-3)).unwrap();
        let cert = certify_generators(&c, &[], &CertifyOptions::default()).unwrap();
        assert!(!cert.success());
        assert_eq!(cert.conclusion.details["failed_step"], "b");
        let p = Point::affine(int(0), int(24));
        let two_p = c.multiply(2, &p).unwrap();
        let cert = certify_generators(&c, &[two_p], &CertifyOptions::default()).unwrap();
        assert_eq!(cert.conclusion.details["failed_step"], "a");
    }
}
