use descent_kit::arith::rational::int;
use descent_kit::ellq::{certify_generators, descent_image, two_selmer_group, CertifyOptions, EllipticCurveQ};
use descent_kit::weierstrass::Point;
use proptest::prelude::*;

/// The t = 2 specialization of y^2 = (x + 4t(t-1))(x + 4t(t+1))(x + t^2 - 1).
fn e2() -> EllipticCurveQ {
    EllipticCurveQ::new(int(-8), int(-24), int(-3)).unwrap()
}

#[test]
fn selmer_and_generators_of_e2() {
    let e = e2();
    assert_eq!(two_selmer_group(&e).unwrap().dim(), 3);
    let p = Point::affine(int(0), int(24));
    let cert = certify_generators(&e, &[p], &CertifyOptions::default()).unwrap();
    assert!(cert.success(), "{}", cert.conclusion.verdict);
    assert_eq!(cert.conclusion.details["rank"], 1);
    assert!(cert.steps.iter().all(|s| s.digest_matches()));
}

#[test]
fn off_curve_point_is_rejected() {
    let e = e2();
    assert!(certify_generators(&e, &[Point::affine(int(1), int(1))], &CertifyOptions::default()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn descent_images_lie_in_selmer(m in -6i64..=6, t1 in 0i64..2, t2 in 0i64..2) {
        let e = e2();
        let p = Point::affine(int(0), int(24));
        let [a, b, _] = e.two_torsion();
        let q = e.combination(&[m, t1, t2], &[p, a, b]);
        let sel = two_selmer_group(&e).unwrap();
        prop_assert!(sel.contains(&descent_image(&e, &q).unwrap()));
    }
}
