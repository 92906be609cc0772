//! `selmer`: the 2-Selmer group of `y^2 = (x - e1)(x - e2)(x - e3)` over Q,
//! optionally followed by a generator certificate for given points.

use serde::{Deserialize, Serialize};
use serde_json::json;

use descent_kit::certificate::{Certificate, CertificateKind};
use descent_kit::ellq::{certify_generators, two_selmer_group, EllipticCurveQ};

use crate::{certify_options, join, parse_point_q, parse_rationals, verdict_line, CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelmerArgs {
    pub e: Vec<String>,
    #[serde(default)]
    pub points: Vec<String>,
    pub search_bound: u64,
    pub saturation_bound: u64,
}

pub fn run(args: &SelmerArgs) -> Result<Certificate> {
    let e = parse_rationals(&args.e)?;
    let [e1, e2, e3]: [_; 3] = e
        .try_into()
        .map_err(|_| CliError::Usage("a curve needs exactly three roots e1 e2 e3".into()))?;
    let curve = EllipticCurveQ::new(e1, e2, e3)?;
    let points = args.points.iter().map(|s| parse_point_q(s)).collect::<Result<Vec<_>>>()?;
    for p in &points {
        curve.check(p)?;
    }

    let mut cert = Certificate::new(CertificateKind::Selmer, json!({"e": args.e, "points": points}));
    let sel = two_selmer_group(&curve)?;
    let basis: Vec<Vec<String>> =
        sel.basis_triples().iter().map(|t| t.iter().map(|c| c.to_string()).collect()).collect();
    cert.push(
        "two_selmer_group",
        json!({"e": args.e}),
        json!({
            "places": sel.places(),
            "dim": sel.dim(),
            "rank_bound": sel.rank_bound(),
            "basis": basis,
        }),
    );

    if points.is_empty() {
        cert.conclude(
            true,
            format!("2-Selmer group has dimension {} (rank at most {})", sel.dim(), sel.rank_bound()),
            json!({"selmer_dim": sel.dim(), "rank_bound": sel.rank_bound()}),
        );
        return Ok(cert);
    }
    let sub = certify_generators(&curve, &points, &certify_options(args.search_bound, args.saturation_bound))?;
    cert.absorb("generators", &sub);
    let mut details = sub.conclusion.details.clone();
    details["selmer_dim"] = json!(sel.dim());
    cert.conclude(sub.success(), sub.conclusion.verdict.clone(), details);
    Ok(cert)
}

pub fn summary(cert: &Certificate) -> String {
    let mut out = Vec::new();
    out.push(format!("curve: e = ({})", join(&cert.inputs["echo"]["e"])));
    if let Some(s) = cert.step("two_selmer_group") {
        out.push(format!("places: {}", join(&s.result["places"])));
        out.push(format!("2-Selmer dimension: {}", s.result["dim"]));
        out.push(format!("rank bound: {}", s.result["rank_bound"]));
    }
    out.push(verdict_line(cert));
    out.join("\n")
}
