//! `pi-check`: the morphism from the curve of the family member at `t` onto
//! `y^2 = (x + 4t(t-1))(x + 4t(t+1))(x + t^2 - 1)` sends the orbit of the
//! extension `z = 0` to `+-P` and that of `z = f(t)` to `+-5P`, where
//! `P = (0, 4t(t-1)(t+1))`.

use serde::{Deserialize, Serialize};
use serde_json::json;

use descent_kit::arith::{format_rational, Rational};
use descent_kit::certificate::{Certificate, CertificateKind};
use descent_kit::genus5::quotient::family_target_curve;
use descent_kit::genus5::{
    build_curve, extension_to_points, family_extension, family_member, family_qt, pi_morphism, point_orbit,
    SqrtField,
};
use descent_kit::poly::RatFunc;
use descent_kit::weierstrass::{FieldElement, Point};

use crate::{parse_rationals, verdict_line, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PiCheckArgs {
    /// Parameters at which `x(pi(Q)) = x(5P)` is also checked over Q.
    pub taus: Vec<String>,
}

impl Default for PiCheckArgs {
    fn default() -> Self {
        PiCheckArgs { taus: vec!["2".into()] }
    }
}

fn base_point<F: SqrtField>(t: &F) -> Result<(descent_kit::weierstrass::Curve<F>, Point<F>)> {
    let one = F::one();
    let target = family_target_curve(t)?;
    let k = t.mul(&F::from_i64(4)).mul(&t.sub(&one)).mul(&t.add(&one));
    let p = target.point(F::zero(), k)?;
    Ok((target, p))
}

pub fn run(args: &PiCheckArgs) -> Result<Certificate> {
    let taus = parse_rationals(&args.taus)?;
    let mut cert = Certificate::new(CertificateKind::PointCheck, json!({"taus": args.taus}));
    let mut all_ok = true;

    let t = RatFunc::t();
    let q = family_qt();
    let c = build_curve(&q)?;
    let (target, p) = base_point(&t)?;
    let five = target.multiply(5, &p)?;
    for (z, mult, base) in [(RatFunc::zero(), 1, &p), (family_extension(&t), 5, &five)] {
        let allowed = [base.clone(), target.neg(base)];
        let first = extension_to_points(&q, &z)?.remove(0);
        let mut images = Vec::new();
        let mut ok = true;
        for pt in point_orbit(&c, &first)? {
            let img = pi_morphism(&t, &pt)?;
            ok &= allowed.contains(&img);
            images.push(json!({"point": pt.to_string(), "image": img.to_string()}));
        }
        all_ok &= ok;
        cert.push(
            "orbit_images_qt",
            json!({"z": z.render(), "expected": format!("+-{mult}P")}),
            json!({"images": images, "ok": ok}),
        );
    }

    for tau in &taus {
        let qt = family_member(tau)?;
        let f = family_extension(tau);
        let pt = extension_to_points(&qt, &f)?.remove(0);
        let img = pi_morphism(tau, &pt)?;
        let (target, p) = base_point(tau)?;
        let five = target.multiply(5, &p)?;
        let ok = img.x() == five.x();
        let k = tau * Rational::from_integer(4.into()) * (tau - Rational::from_integer(1.into())) * (tau + Rational::from_integer(1.into()));
        all_ok &= ok;
        cert.push(
            "specialized_image",
            json!({"tau": format_rational(tau)}),
            json!({
                "z": format_rational(&f),
                "scale": format_rational(&k),
                "x_pi": img.x().map(format_rational),
                "x_5p": five.x().map(format_rational),
                "ok": ok,
            }),
        );
    }

    if all_ok {
        cert.conclude(
            true,
            "pi maps the z = 0 orbit to +-P and the z = f(t) orbit to +-5P identically in t",
            json!({"taus": args.taus}),
        );
    } else {
        cert.conclude(false, "an image differs from +-P or +-5P", json!({}));
    }
    Ok(cert)
}

pub fn summary(cert: &Certificate) -> String {
    let mut out = Vec::new();
    for s in cert.steps.iter() {
        match s.operation.as_str() {
            "orbit_images_qt" => out.push(format!(
                "z = {}: {} orbit points map to {} ({})",
                s.parameters["z"].as_str().unwrap_or_default(),
                s.result["images"].as_array().map_or(0, |a| a.len()),
                s.parameters["expected"].as_str().unwrap_or_default(),
                if s.result["ok"] == true { "ok" } else { "MISMATCH" }
            )),
            "specialized_image" => out.push(format!(
                "tau = {}: x(pi) = {} = {} * {}, x(5P) = {}",
                s.parameters["tau"].as_str().unwrap_or_default(),
                s.result["x_pi"].as_str().unwrap_or("O"),
                s.result["scale"].as_str().unwrap_or_default(),
                s.result["z"].as_str().unwrap_or_default(),
                s.result["x_5p"].as_str().unwrap_or("O"),
            )),
            _ => {}
        }
    }
    out.push(verdict_line(cert));
    out.join("\n")
}
