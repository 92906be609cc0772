//! The bounding group `H0`, its pruning by specializations, and the
//! injectivity criterion for specialization maps.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{delta_qt, discriminant_qt, specialize, specialize_point, ClassTripleQt, EllipticCurveQt, PointQt};
use crate::arith::{format_rational, F2Space, F2Vec, LinearMap, Rational};
use crate::certificate::Certificate;
use crate::ellq::descent::{bad_primes, descent_image, PairCoords};
use crate::ellq::{certify_generators, two_selmer_group, CertifyOptions, EllipticCurveQ};
use crate::error::{Error, Result};
use crate::poly::{factor_int_poly, QtLabel, SquareClassQt};
use crate::weierstrass::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PruneMode {
    /// Prune with the 2-Selmer group of each specialization.
    Selmer,
    /// Prune with the certified image of `E_tau(Q)` when the specialized
    /// points certify as generators; otherwise fall back to Selmer.
    MordellWeil,
}

/// A subgroup of the pairs `(d1, d2)` of Q(t)-square classes supported on
/// a fixed label set.
#[derive(Clone, Debug)]
pub struct BoundingGroup {
    labels: Vec<QtLabel>,
    space: F2Space,
}

impl BoundingGroup {
    pub fn labels(&self) -> &[QtLabel] {
        &self.labels
    }

    pub fn space(&self) -> &F2Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn coord_labels(labels: &[QtLabel]) -> Vec<String> {
        (1..=2).flat_map(|c| labels.iter().map(move |l| format!("d{c}:{l}"))).collect()
    }

    pub fn coords(&self, t: &ClassTripleQt) -> Result<F2Vec> {
        Ok(t[0].to_bits(&self.labels)?.concat(&t[1].to_bits(&self.labels)?))
    }

    pub fn triple(&self, v: &F2Vec) -> ClassTripleQt {
        let l = self.labels.len();
        let d1 = SquareClassQt::from_bits(&v.slice(0, l), &self.labels);
        let d2 = SquareClassQt::from_bits(&v.slice(l, 2 * l), &self.labels);
        let d3 = d1.mul(&d2);
        [d1, d2, d3]
    }

    pub fn contains(&self, t: &ClassTripleQt) -> bool {
        t[0].mul(&t[1]) == t[2] && self.coords(t).is_ok_and(|v| self.space.contains(&v))
    }

    pub fn basis_triples(&self) -> Vec<ClassTripleQt> {
        self.space.basis().iter().map(|v| self.triple(v)).collect()
    }

    pub fn with_space(&self, space: F2Space) -> Self {
        BoundingGroup { labels: self.labels.clone(), space }
    }

    pub fn span_of(&self, triples: &[ClassTripleQt]) -> Result<F2Space> {
        let vecs = triples.iter().map(|t| self.coords(t)).collect::<Result<Vec<_>>>()?;
        Ok(F2Space::span_of(self.space.labels().to_vec(), vecs))
    }
}

/// Labels `-1`, the primes dividing the content of the discriminant, and
/// its irreducible polynomial factors; `H0` is all pairs over them.
pub fn build_h0(curve: &EllipticCurveQt) -> Result<BoundingGroup> {
    let disc = discriminant_qt(curve);
    let mut labels = vec![QtLabel::MinusOne];
    let mut primes: Vec<BigUint> = Vec::new();
    let mut polys = Vec::new();
    for part in [disc.num(), disc.den()] {
        let fac = factor_int_poly(part)?;
        primes.extend(fac.content.into_iter().map(|(p, _)| p));
        polys.extend(fac.factors.into_iter().map(|(g, _)| g));
    }
    primes.sort();
    primes.dedup();
    polys.sort();
    polys.dedup();
    labels.extend(primes.into_iter().map(QtLabel::Prime));
    labels.extend(polys.into_iter().map(QtLabel::Poly));
    let space = F2Space::full(BoundingGroup::coord_labels(&labels));
    Ok(BoundingGroup { labels, space })
}

/// Everything computed at one specialization `t = tau`.
#[derive(Clone, Debug)]
pub struct TauData {
    pub tau: Rational,
    pub curve: EllipticCurveQ,
    pub universe: PairCoords,
    /// `h_tau` from `H0` coordinates to the pair coordinates over Q.
    pub h: LinearMap,
    /// The subgroup `S_tau` used for pruning.
    pub s_tau: F2Space,
    pub mode_used: PruneMode,
    pub selmer_dim: Option<usize>,
    /// Certificate for `E_tau(Q)` when the specialized points were checked.
    pub q_certificate: Option<Certificate>,
}

/// Checks that `h_tau` is defined on every label and the fibre is smooth.
pub fn check_tau(curve: &EllipticCurveQt, h0: &BoundingGroup, points: &[PointQt], tau: &Rational) -> Result<()> {
    for l in h0.labels() {
        if let QtLabel::Poly(g) = l {
            if g.evaluate(tau).is_zero() {
                return Err(Error::BadSpecialization { tau: format_rational(tau), factor: g.pretty() });
            }
        }
    }
    specialize(curve, tau)?;
    for p in points {
        specialize_point(p, tau)?;
    }
    Ok(())
}

/// The non-torsion points among `points` (2-torsion and infinity dropped).
pub fn free_points(points: &[PointQt]) -> Vec<PointQt> {
    points
        .iter()
        .filter(|p| matches!(p, Point::Affine { y, .. } if !y.is_zero()))
        .cloned()
        .collect()
}

pub fn tau_data(
    curve: &EllipticCurveQt,
    h0: &BoundingGroup,
    points: &[PointQt],
    tau: &Rational,
    mode: PruneMode,
    opts: &CertifyOptions,
) -> Result<TauData> {
    check_tau(curve, h0, points, tau)?;
    let et = specialize(curve, tau)?;
    let images: Vec<_> = h0
        .labels()
        .iter()
        .map(|l| SquareClassQt::from_label(l).evaluate(tau))
        .collect::<Result<_>>()?;
    let mut primes = bad_primes(&et)?;
    primes.extend(images.iter().flat_map(|c| c.primes().to_vec()));
    let universe = PairCoords::new(primes);
    let l = universe.generators().len();
    let zero = F2Vec::zero(l);
    let mut cols = Vec::with_capacity(2 * images.len());
    for c in 0..2 {
        for img in &images {
            let v = universe.class_coords(img)?;
            cols.push(if c == 0 { v.concat(&zero) } else { zero.concat(&v) });
        }
    }
    let h = LinearMap::new(h0.space().labels().to_vec(), universe.labels(), cols)?;

    let specialized: Vec<_> =
        free_points(points).iter().map(|p| specialize_point(p, tau)).collect::<Result<_>>()?;
    let mut q_certificate = None;
    if mode == PruneMode::MordellWeil {
        let cert = certify_generators(&et, &specialized, opts)?;
        if cert.success() {
            let mut imgs = Vec::new();
            for p in et.two_torsion().iter().chain(&specialized) {
                imgs.push(descent_image(&et, p)?);
            }
            let s_tau = universe.span(&imgs)?;
            return Ok(TauData {
                tau: tau.clone(),
                curve: et,
                universe,
                h,
                s_tau,
                mode_used: PruneMode::MordellWeil,
                selmer_dim: cert.conclusion.details["selmer_dim"].as_u64().map(|d| d as usize),
                q_certificate: Some(cert),
            });
        }
        q_certificate = Some(cert);
    }
    let sel = two_selmer_group(&et)?;
    let s_tau = universe.span(&sel.basis_triples())?;
    Ok(TauData {
        tau: tau.clone(),
        curve: et,
        universe,
        h,
        s_tau,
        mode_used: PruneMode::Selmer,
        selmer_dim: Some(sel.dim()),
        q_certificate,
    })
}

/// `H' = { a in H0 : h_tau(a) in S_tau for every tau }`.
pub fn prune_h0(
    curve: &EllipticCurveQt,
    h0: &BoundingGroup,
    points: &[PointQt],
    taus: &[Rational],
    mode: PruneMode,
    opts: &CertifyOptions,
) -> Result<(BoundingGroup, Vec<TauData>)> {
    let data: Vec<TauData> = taus
        .par_iter()
        .map(|tau| tau_data(curve, h0, points, tau, mode, opts))
        .collect::<Result<_>>()?;
    let mut space = h0.space().clone();
    for td in &data {
        space = space.preimage(&td.h, &td.s_tau)?;
    }
    Ok((h0.with_space(space), data))
}

/// `H' ∩ ker h_tau`; the specialization map is injective when this is zero.
pub fn injectivity_criterion(h_prime: &BoundingGroup, td: &TauData) -> Result<(bool, F2Space)> {
    let kernel = h_prime.space().kernel_of_map(&td.h)?;
    Ok((kernel.dim() == 0, kernel))
}

/// Images of points under `delta_qt` as triples.
pub fn delta_images(curve: &EllipticCurveQt, points: &[PointQt]) -> Result<Vec<ClassTripleQt>> {
    points.iter().map(|p| delta_qt(curve, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::ellqt::presets::main_curve;
    use crate::poly::IntPoly;

    #[test]
    fn h0_of_main_curve() {
        let (e, _) = main_curve();
        let h0 = build_h0(&e).unwrap();
        let names: Vec<String> = h0.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["-1", "2", "t", "t - 1", "t + 1", "3t - 1", "3t + 1"]);
        assert_eq!(h0.dim(), 14);
    }

    #[test]
    fn pruning_gives_h1_and_injectivity_holds() {
        let (e, pts) = main_curve();
        let h0 = build_h0(&e).unwrap();
        let h1 = h0.span_of(&delta_images(&e, &pts).unwrap()).unwrap();
        assert_eq!(h1.dim(), 3);
        let taus = [int(2), int(3), int(5)];
        let opts = CertifyOptions::default();
        let (hp, data) = prune_h0(&e, &h0, &pts, &taus, PruneMode::MordellWeil, &opts).unwrap();
        assert_eq!(hp.space(), &h1);
        for td in &data {
            assert_eq!(td.mode_used, PruneMode::MordellWeil);
            assert!(injectivity_criterion(&hp, td).unwrap().0);
        }
        // monotone: a single tau leaves at least H1
        let (hp2, _) = prune_h0(&e, &h0, &pts, &taus[..1], PruneMode::Selmer, &opts).unwrap();
        assert!(h1.is_subspace_of(hp2.space()).unwrap());
        assert!(hp.space().is_subspace_of(hp2.space()).unwrap());
        let (hp0, _) = prune_h0(&e, &h0, &pts, &[], PruneMode::Selmer, &opts).unwrap();
        assert_eq!(hp0.dim(), 14);
    }

    #[test]
    fn synthetic_kernel_element() {
        // (t - 1, t - 1, 1) is killed by h_2 since 2 - 1 = 1
        let (e, pts) = main_curve();
        let h0 = build_h0(&e).unwrap();
        let tm1 = SquareClassQt::poly(IntPoly::from_i64s(&[-1, 1]));
        let bad = [tm1.clone(), tm1, SquareClassQt::one()];
        let space = F2Space::span_of(h0.space().labels().to_vec(), [h0.coords(&bad).unwrap()]);
        let hp = h0.with_space(space);
        let td = tau_data(&e, &h0, &pts, &int(2), PruneMode::Selmer, &CertifyOptions::default()).unwrap();
        let (ok, ker) = injectivity_criterion(&hp, &td).unwrap();
        assert!(!ok);
        assert_eq!(ker.dim(), 1);
    }

    #[test]
    fn bad_tau_names_factor() {
        let (e, pts) = main_curve();
        let h0 = build_h0(&e).unwrap();
        let err = check_tau(&e, &h0, &pts, &Rational::new(1.into(), 3.into())).unwrap_err();
        assert_eq!(err, Error::BadSpecialization { tau: "1/3".into(), factor: "3t - 1".into() });
    }
}
