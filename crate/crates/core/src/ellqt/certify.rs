//! Certificates that given points generate E(Q(t)): bound the descent
//! image by `H'`, find a specialization that is injective on it, and
//! certify the specialized points over Q.

use serde_json::json;

use super::bounding::{build_h0, check_tau, delta_images, free_points, injectivity_criterion, prune_h0, PruneMode};
use super::{specialize_point, EllipticCurveQt, PointQt};
use crate::arith::{format_rational, Rational};
use crate::certificate::{Certificate, CertificateKind};
use crate::ellq::{certify_generators, CertifyOptions};
use crate::error::Result;
use crate::weierstrass::FieldElement;

#[derive(Clone, Debug)]
pub struct QtOptions {
    pub taus: Vec<Rational>,
    /// Drop listed values of tau where the specialization is undefined
    /// instead of failing (used for the default list).
    pub skip_bad_taus: bool,
    pub mode: PruneMode,
    pub q: CertifyOptions,
}

impl Default for QtOptions {
    fn default() -> Self {
        QtOptions {
            taus: (2..=13).map(|t| Rational::from_integer(t.into())).collect(),
            skip_bad_taus: true,
            mode: PruneMode::MordellWeil,
            q: CertifyOptions::default(),
        }
    }
}

pub fn curve_qt_json(curve: &EllipticCurveQt) -> serde_json::Value {
    json!(curve.e().iter().map(|e| e.render()).collect::<Vec<_>>())
}

pub fn certify_generators_qt(curve: &EllipticCurveQt, points: &[PointQt], opts: &QtOptions) -> Result<Certificate> {
    for p in points {
        curve.check(p)?;
    }
    let taus_json: Vec<String> = opts.taus.iter().map(format_rational).collect();
    let mut cert = Certificate::new(
        CertificateKind::QtGenerators,
        json!({
            "curve": curve_qt_json(curve),
            "points": points,
            "taus": taus_json,
            "mode": opts.mode,
            "search_bound": opts.q.search_bound,
            "saturation_bound": opts.q.saturation_bound,
        }),
    );

    // independence of the free points modulo 2E(Q(t)), torsion included
    let free = free_points(points);
    let r = free.len();
    let mut gens: Vec<PointQt> = curve.two_torsion()[..2].to_vec();
    gens.extend(free.iter().cloned());
    let h0 = build_h0(curve)?;
    let images = delta_images(curve, &gens)?;
    let span = h0.span_of(&images)?;
    cert.push(
        "delta_images",
        json!({"points": gens}),
        json!({
            "images": images.iter().map(|t| t.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "span_dim": span.dim(),
        }),
    );
    if span.dim() != 2 + r {
        cert.conclude(
            false,
            format!("step (a) failed: delta images span dimension {} instead of {}", span.dim(), 2 + r),
            json!({"failed_step": "independence"}),
        );
        return Ok(cert);
    }
    cert.push(
        "build_h0",
        json!({"curve": curve_qt_json(curve)}),
        json!({"labels": h0.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>(), "dim": h0.dim()}),
    );

    let mut taus = Vec::new();
    let mut skipped = Vec::new();
    for tau in &opts.taus {
        match check_tau(curve, &h0, points, tau) {
            Ok(()) => taus.push(tau.clone()),
            Err(e) if opts.skip_bad_taus => skipped.push(json!({"tau": format_rational(tau), "reason": e.to_string()})),
            Err(e) => return Err(e),
        }
    }
    let (h_prime, data) = prune_h0(curve, &h0, &gens, &taus, opts.mode, &opts.q)?;
    cert.push(
        "prune_h0",
        json!({"taus": taus.iter().map(format_rational).collect::<Vec<_>>(), "mode": opts.mode, "skipped": skipped}),
        json!({
            "per_tau": data.iter().map(|td| json!({
                "tau": format_rational(&td.tau),
                "mode_used": td.mode_used,
                "selmer_dim": td.selmer_dim,
                "s_tau_dim": td.s_tau.dim(),
            })).collect::<Vec<_>>(),
            "dim": h_prime.dim(),
            "basis": h_prime.basis_triples().iter().map(|t| t.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }),
    );
    if !span.is_subspace_of(h_prime.space())? {
        cert.conclude(false, "pruned group lost a delta image", json!({"failed_step": "prune"}));
        return Ok(cert);
    }

    let mut attempts = Vec::new();
    for td in &data {
        let (injective, kernel) = injectivity_criterion(&h_prime, td)?;
        let tau_s = format_rational(&td.tau);
        cert.push(
            "injectivity_criterion",
            json!({"tau": tau_s}),
            json!({"injective": injective, "kernel_dim": kernel.dim()}),
        );
        if !injective {
            attempts.push(json!({"tau": tau_s, "failed": "injectivity"}));
            continue;
        }
        let q_cert = match &td.q_certificate {
            Some(c) => c.clone(),
            None => {
                let specialized: Vec<_> = free.iter().map(|p| specialize_point(p, &td.tau)).collect::<Result<_>>()?;
                certify_generators(&td.curve, &specialized, &opts.q)?
            }
        };
        cert.absorb(&format!("tau={tau_s}"), &q_cert);
        if q_cert.success() {
            cert.conclude(
                true,
                format!(
                    "E(Q(t)) = Z/2 x Z/2 x Z^{r}, generated by the given points: specialization at t = {tau_s} \
                     is injective and its image is generated by the specialized points"
                ),
                json!({"rank": r, "tau": tau_s, "h0_dim": h0.dim(), "h_prime_dim": h_prime.dim()}),
            );
            return Ok(cert);
        }
        attempts.push(json!({"tau": tau_s, "failed": q_cert.conclusion.verdict}));
    }
    cert.conclude(
        false,
        "no specialization passed both the injectivity criterion and the generator check",
        json!({"failed_step": "specialization", "attempts": attempts, "h_prime_dim": h_prime.dim()}),
    );
    Ok(cert)
}
