//! `quintuple`: regular extensions of a quadruple, the genus-5 curve of its
//! extensions, the Selmer-set computation on the five elliptic quotients,
//! the covers attached to `G`, and the genus-2 quotient.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use descent_kit::arith::{format_rational, parse_rational, Rational};
use descent_kit::certificate::{Certificate, CertificateKind};
use descent_kit::genus5::cover::covers_for;
use descent_kit::genus5::selmer_set::quotient_data;
use descent_kit::genus5::{
    build_curve, default_primes, elliptic_quotient, extension_to_points, family_extension, family_member,
    genus2_quotient, is_good_prime, regular_extensions, selmer_set_prune, two_torsion_group_g, validate_quadruple,
    CurvePoint, DiophQuadruple,
};

use crate::{certify_options, join, parse_rationals, str_of, verdict_line, CliError, Mode, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuintupleArgs {
    pub quadruple: Option<Vec<String>>,
    /// Family parameter, used instead of an explicit quadruple.
    pub t: Option<String>,
    /// Explicit primes; empty means the `prime_count` smallest good ones.
    #[serde(default)]
    pub primes: Vec<u64>,
    pub prime_count: usize,
    pub mode: Mode,
    pub search_bound: u64,
    pub saturation_bound: u64,
}

impl Default for QuintupleArgs {
    fn default() -> Self {
        QuintupleArgs {
            quadruple: None,
            t: None,
            primes: Vec::new(),
            prime_count: 10,
            mode: Mode::Selmer,
            search_bound: 10,
            saturation_bound: 50,
        }
    }
}

fn quadruple(args: &QuintupleArgs) -> Result<DiophQuadruple> {
    match (&args.quadruple, &args.t) {
        (Some(a), None) => {
            let a: [Rational; 4] = parse_rationals(a)?
                .try_into()
                .map_err(|_| CliError::Usage("a quadruple needs exactly four rationals".into()))?;
            Ok(validate_quadruple(a)?)
        }
        (None, Some(t)) => Ok(family_member(&parse_rational(t)?)?),
        _ => Err(CliError::Usage("give either four rationals or --t".into())),
    }
}

fn render_point(p: &CurvePoint<Rational>) -> String {
    p.to_string()
}

pub fn run(args: &QuintupleArgs) -> Result<Certificate> {
    let q = quadruple(args)?;
    let mut cert = Certificate::new(CertificateKind::QuintuplePrune, json!({"quadruple": q}));
    cert.push(
        "validate_quadruple",
        json!({"a": q}),
        json!({"roots": q.roots().iter().map(format_rational).collect::<Vec<_>>()}),
    );

    let zs = regular_extensions(&q)?;
    let mut ext = json!({"z": zs.iter().map(format_rational).collect::<Vec<_>>()});
    if let Some(t) = &args.t {
        let f = family_extension(&parse_rational(t)?);
        ext["family_f"] = json!(format_rational(&f));
        ext["family_matches"] = json!(zs.contains(&f));
    }
    cert.push("regular_extensions", json!({"a": q}), ext);

    let c = build_curve(&q)?;
    let quadrics: Vec<Value> = c
        .quadrics()
        .iter()
        .map(|(idx, _)| json!({"indices": idx, "equation": c.render_quadric(*idx)}))
        .collect();
    cert.push(
        "build_curve",
        json!({"a": c.a().iter().map(format_rational).collect::<Vec<_>>()}),
        json!({"quadrics": quadrics}),
    );

    let mut quotients = Vec::new();
    for i in 0..5 {
        let e = elliptic_quotient(&c, i)?;
        quotients.push(json!({"index": i, "e": e.e().iter().map(format_rational).collect::<Vec<_>>()}));
    }
    cert.push("elliptic_quotients", json!({}), json!(quotients));

    let mut known: Vec<CurvePoint<Rational>> = Vec::new();
    let mut orbits = Vec::new();
    for z in &zs {
        let orbit = extension_to_points(&q, z)?;
        orbits.push(json!({"z": format_rational(z), "points": orbit.iter().map(render_point).collect::<Vec<_>>()}));
        for p in orbit {
            if !known.contains(&p) {
                known.push(p);
            }
        }
    }
    cert.push("known_points", json!({}), json!({"orbits": orbits, "count": known.len()}));

    let qd = quotient_data(&c, &known, args.mode.into(), &certify_options(args.search_bound, args.saturation_bound))?;
    for d in &qd {
        if let Some(sub) = &d.certificate {
            cert.absorb(&format!("E{}", d.index), sub);
        }
    }
    let primes = if args.primes.is_empty() { default_primes(&c, args.prime_count) } else { args.primes.clone() };
    for &p in &primes {
        is_good_prime(&c, p)?;
    }
    let report = selmer_set_prune(&c, &qd, &known, &primes)?;
    cert.push(
        "selmer_set_prune",
        json!({"primes": primes, "mode": args.mode}),
        serde_json::to_value(&report).expect("report serializes"),
    );

    let g = two_torsion_group_g();
    let p0 = c.point(std::array::from_fn(|_| Rational::from_integer(1.into())))?;
    let mut covers = Vec::new();
    let mut missing = Vec::new();
    for t in g.elements().iter().skip(1) {
        let reps = g.representations(t);
        if reps.is_empty() {
            missing.push(g.render(t));
            continue;
        }
        let models = match covers_for(&c, &reps, &p0) {
            Ok(m) => serde_json::to_value(&m).expect("descriptors serialize"),
            Err(e) => json!({"error": e.to_string()}),
        };
        covers.push(json!({
            "t": g.render(t),
            "case": reps[0].case,
            "representations": reps.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "models": models,
        }));
    }
    cert.push(
        "torsion_group_g",
        json!({}),
        json!({"dim": g.dim(), "relation_rank": g.relation_rank(), "missing": missing}),
    );
    cert.push("covers", json!({"witness": render_point(&p0)}), json!(covers));

    let h = genus2_quotient(&q)?;
    let mut h_points = Vec::new();
    for z in &zs {
        let pts = h.points_for_extension(&q, z)?;
        h_points.push(json!({
            "z": format_rational(z),
            "points": pts.iter().map(|(x, y)| [format_rational(x), format_rational(y)]).collect::<Vec<_>>(),
        }));
    }
    cert.push("genus2_quotient", json!({}), json!({"model": h, "points": h_points}));

    let details = json!({
        "z": zs.iter().map(format_rational).collect::<Vec<_>>(),
        "known_points": known.len(),
        "h0_dim": report.h0_dim,
        "h1_dim": report.h1_dim,
        "h_prime_size": report.h_prime_size(),
        "surviving_cosets": report.surviving.len(),
        "uncovered_cosets": report.uncovered.len(),
        "primes": primes,
    });
    if report.covered {
        cert.conclude(
            true,
            format!(
                "H'0 ({} cosets of H1) is covered by the images of the {} known points",
                report.surviving.len(),
                known.len()
            ),
            details,
        );
    } else {
        cert.conclude(
            false,
            format!("{} cosets of H1 in H'0 are not hit by known points", report.uncovered.len()),
            details,
        );
    }
    Ok(cert)
}

pub fn summary(cert: &Certificate) -> String {
    let mut out = Vec::new();
    out.push(format!("quadruple: ({})", join(&cert.inputs["echo"]["quadruple"])));
    if let Some(s) = cert.step("regular_extensions") {
        out.push(format!("regular extensions: z = {}", join(&s.result["z"])));
    }
    if let Some(s) = cert.step("build_curve") {
        out.push("quadrics:".into());
        for q in s.result["quadrics"].as_array().into_iter().flatten() {
            out.push(format!("  {}", str_of(&q["equation"])));
        }
    }
    if let Some(s) = cert.step("selmer_set_prune") {
        let r = &s.result;
        out.push("elliptic quotients:".into());
        for q in r["quotients"].as_array().into_iter().flatten() {
            out.push(format!(
                "  E{}: e = ({}), mode {}, Selmer dim {}, bound dim {}",
                q["index"],
                join(&q["roots"]),
                str_of(&q["mode_used"]),
                q["selmer_dim"],
                q["bound_dim"]
            ));
        }
        out.push(format!("primes: {}", join(&s.parameters["primes"])));
        out.push(format!("dim H0 = {}, dim H1 = {}", r["h0_dim"], r["h1_dim"]));
        let cosets = r["surviving"].as_array().map_or(0, |a| a.len());
        out.push(format!("H'0: {cosets} coset(s) of H1"));
        for (n, class) in r["surviving"].as_array().into_iter().flatten().enumerate() {
            let pairs: Vec<String> = class["pairs"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|p| format!("({})", join(p)))
                .collect();
            out.push(format!("  xi{n}: {}", pairs.join(" ")));
        }
    }
    if let Some(s) = cert.step("torsion_group_g") {
        out.push(format!(
            "G: dim {}, no representation for {}",
            s.result["dim"],
            join(&s.result["missing"])
        ));
    }
    if let Some(s) = cert.step("covers") {
        out.push(format!("covers (witness {}):", str_of(&s.parameters["witness"])));
        for t in s.result.as_array().into_iter().flatten() {
            let fields: Vec<String> = t["models"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|m| str_of(&m["field"]))
                .collect();
            out.push(format!(
                "  T = {} (case {}, {}): {}",
                str_of(&t["t"]),
                t["case"],
                join(&t["representations"]),
                if fields.is_empty() { str_of(&t["models"]["error"]) } else { fields.join("; ") }
            ));
        }
    }
    if let Some(s) = cert.step("genus2_quotient") {
        out.push(format!("genus-2 quotient: {}", str_of(&s.result["model"]["equation"])));
    }
    out.push(verdict_line(cert));
    out.join("\n")
}
