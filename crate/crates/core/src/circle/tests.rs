use num_complex::Complex64;
use proptest::prelude::*;

use super::*;
use crate::polymat::Mat;
use crate::scalar::{cq, cq_int, rat, rat_int};
use crate::semialg::Piece;

fn sp(c: &[i64]) -> ScalarPoly<Cq> {
    ScalarPoly::scalar(c.iter().map(|&v| Cq::from_i64(v)).collect())
}

fn laurent(terms: &[(i64, Cq)]) -> LaurentMatrixPoly<Cq> {
    LaurentMatrixPoly::scalar_terms(terms)
}

fn std_map() -> MoebiusMap<Cq> {
    MoebiusMap::default()
}

fn line_set(pieces: Vec<Piece>) -> SemialgSet {
    SemialgSet::new(pieces).unwrap()
}

fn ray_up(a: i64) -> Piece {
    Piece::Interval {
        lo: Some(rat_int(a)),
        hi: None,
    }
}

fn ray_down(b: i64) -> Piece {
    Piece::Interval {
        lo: None,
        hi: Some(rat_int(b)),
    }
}

#[test]
fn moebius_reference_values() {
    let m = std_map();
    assert_eq!(moebius_apply(&m, Some(&Cq::from_i64(0))), cq_int(-1, 0));
    assert_eq!(moebius_apply(&m, None), cq_int(1, 0));
    // (1 − i)/(1 + i) = −i
    assert_eq!(moebius_apply(&m, Some(&Cq::from_i64(1))), cq_int(0, -1));
    assert_eq!(moebius_inverse(&m, &cq_int(1, 0)), None);
    assert_eq!(moebius_inverse(&m, &cq_int(0, 1)), Some(cq_int(-1, 0)));
}

#[test]
fn moebius_round_trip_on_rationals() {
    let m = std_map();
    for k in -50..50 {
        let x = Cq::from_rational(&rat(7 * k + 3, 11 + (k.abs() % 5)));
        let z = moebius_apply(&m, Some(&x));
        assert_eq!(z.clone() * z.conj(), Cq::from_i64(1));
        assert_eq!(moebius_inverse(&m, &z), Some(x));
    }
}

#[test]
fn map_validation() {
    assert_eq!(
        MoebiusMap::new(cq_int(2, 0), cq_int(0, 1)).unwrap_err(),
        CircleError::NotUnimodular
    );
    assert_eq!(
        MoebiusMap::new(cq_int(1, 0), cq_int(3, 0)).unwrap_err(),
        CircleError::RealW0
    );
    // (3 + 4i)/5 is a Gaussian-rational point on 𝕋
    assert!(MoebiusMap::new(cq(rat(3, 5), rat(4, 5)), cq_int(1, -2)).is_ok());
}

#[test]
fn transform_of_identity_is_identity() {
    let m = std_map();
    let l = lambda_transform(&m, &MatrixPoly::<Cq>::identity(2));
    assert_eq!(l, LaurentMatrixPoly::from_poly(&MatrixPoly::identity(2), 0));
    assert_eq!(lambda_recover(&m, &l, 0).unwrap(), MatrixPoly::identity(2));
}

#[test]
fn transform_of_x() {
    // λ⁻¹(z) = −i(z+1)/(z−1) and (z−1)*(z−1) = −(z−1)²/z, so Λ = i(z − z⁻¹).
    let l = lambda_transform(&std_map(), &sp(&[0, 1]));
    assert_eq!(l, laurent(&[(1, cq_int(0, 1)), (-1, cq_int(0, -1))]));
    assert!(l.is_hermitian());
    assert_eq!(lambda_recover(&std_map(), &l, 1).unwrap(), sp(&[0, 1]));
}

#[test]
fn transform_of_one_plus_x_squared_is_constant() {
    // F(λ⁻¹(z)) = −4z/(z−1)², times −(z−1)²/z.
    let f = sp(&[1, 0, 1]);
    let l = lambda_transform(&std_map(), &f);
    assert_eq!(l, laurent(&[(0, Cq::from_i64(4))]));
    assert_eq!(lambda_recover(&std_map(), &l, 2).unwrap(), f);
}

#[test]
fn recover_rejects_wide_exponents() {
    let l = laurent(&[(3, Cq::from_i64(1))]);
    assert!(matches!(
        lambda_recover(&std_map(), &l, 2),
        Err(CircleError::NotInImage(_))
    ));
    // z − z⁻¹ pulls back to a degree-2 polynomial, so degree 1 is fine but
    // i(z + z⁻¹) is not the image of any degree-1 polynomial.
    let l = laurent(&[(1, cq_int(0, 1)), (-1, cq_int(0, 1))]);
    assert!(matches!(
        lambda_recover(&std_map(), &l, 1),
        Err(CircleError::NotInImage(_))
    ));
}

#[test]
fn transform_with_other_map_round_trips() {
    let m = MoebiusMap::new(cq(rat(3, 5), rat(-4, 5)), cq(rat(1, 2), rat_int(2))).unwrap();
    let f = MatrixPoly::from_entries(&[
        vec![sp(&[1, -2, 3]), ScalarPoly::scalar(vec![cq_int(0, 1), cq_int(2, -1)])],
        vec![ScalarPoly::scalar(vec![cq_int(0, -1), cq_int(2, 1)]), sp(&[5, 0, 0, 1])],
    ])
    .unwrap();
    let l = lambda_transform(&m, &f);
    assert!(l.is_hermitian());
    assert_eq!(l.laurent_adjoint(), l);
    assert_eq!(lambda_recover(&m, &l, 3).unwrap(), f);
}

fn recovery_residual(m: &MoebiusMap<Complex64>, f: &MatrixPoly<Complex64>, t: f64) -> f64 {
    let l = lambda_transform(m, f);
    let x = Complex64::new(t, 0.0);
    let z = moebius_apply(m, Some(&x));
    let lz = l.evaluate(&z).unwrap();
    let w = *m.w0();
    let n = f.degree().unwrap_or(0).div_ceil(2) as i32;
    let factor = ((x - w.conj()) * (x - w) / (4.0 * w.im * w.im)).powi(n);
    let fx = f.evaluate(&x);
    lz.scale(&factor).sub(&fx).max_abs()
}

fn random_hermitian(seed: u64, n: usize, deg: usize) -> MatrixPoly<Complex64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..=deg)
        .map(|_| {
            let a = Mat::from_fn(n, |_, _| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)));
            a.add(&a.adjoint())
        })
        .collect();
    MatrixPoly::from_coeffs(n, coeffs).unwrap()
}

#[test]
fn evaluation_matches_recovery_formula() {
    let m = map_to_float(&std_map());
    for seed in 0..10 {
        let f = random_hermitian(seed, 2, 3 + (seed as usize % 2));
        for t in [-3.0, -0.7, 0.0, 0.4, 1.0, 2.5, 10.0] {
            let r = recovery_residual(&m, &f, t);
            assert!(r <= 1e-10 * f.max_abs_coeff().max(1.0) * (1.0 + t * t).powi(2), "{seed} {t} {r}");
        }
    }
}

#[test]
fn float_round_trip_degree_four() {
    let m = map_to_float(&std_map());
    for seed in 0..20 {
        let f = random_hermitian(100 + seed, 2, 4);
        let l = lambda_transform(&m, &f);
        assert!(l.is_hermitian());
        let back = lambda_recover(&m, &l, 4).unwrap();
        assert!(back.max_abs_diff(&f) <= 1e-9, "{}", back.max_abs_diff(&f));
    }
}

#[test]
fn positivity_transfers_to_the_circle() {
    let m = std_map();
    let f = MatrixPoly::from_entries(&[vec![sp(&[0, 1]), sp(&[0])], vec![sp(&[0]), sp(&[1, -1])]]).unwrap();
    let l = lambda_transform(&m, &f).to_float();
    let mf = map_to_float(&m);
    for j in 0..=50 {
        let t = j as f64 / 50.0;
        assert!(transferred_min_eigenvalue(&mf, &l, t) >= -1e-12);
    }
    // outside K the transferred value is indefinite
    assert!(transferred_min_eigenvalue(&mf, &l, 2.0) < 0.0);
}

#[test]
fn angle_parsing_and_points() {
    let a = Angle::parse("1/2·π").unwrap();
    assert_eq!(a.exact_point(), Some(cq_int(0, 1)));
    assert_eq!(Angle::parse("-π").unwrap().exact_point(), Some(cq_int(-1, 0)));
    assert_eq!(Angle::parse("3*pi").unwrap().exact_point(), Some(cq_int(-1, 0)));
    assert_eq!(Angle::parse("0").unwrap().exact_point(), Some(cq_int(1, 0)));
    assert_eq!(Angle::parse("1/3π").unwrap().exact_point(), None);
    assert!(Angle::parse("1/3").is_none());
    assert!(Angle::parse("x·π").is_none());
    assert_eq!(a.to_json(), serde_json::json!("1/2·π"));
}

#[test]
fn circle_set_json_round_trip() {
    let v = serde_json::json!({
        "arcs": [{"from_angle": "1·π", "to_angle": "3/2·π"}],
        "points": ["1/2·π", "5/4·π"],
    });
    let s = CircleSet::from_json(&v).unwrap();
    assert_eq!(s.arcs().len(), 1);
    // 5π/4 lies inside the arc
    assert_eq!(s.points().len(), 1);
    let back = CircleSet::from_json(&s.to_json()).unwrap();
    assert_eq!(back, s);
    assert!(CircleSet::from_json(&serde_json::json!({"arcs": [{"from_angle": "0"}]})).is_err());
}

#[test]
fn arcs_sharing_endpoints_merge() {
    let s = CircleSet::new(
        vec![
            Arc::new(Angle::parse("0").unwrap(), Angle::parse("1/2π").unwrap()),
            Arc::new(Angle::parse("1/2π").unwrap(), Angle::parse("π").unwrap()),
        ],
        vec![],
    );
    assert_eq!(s.arcs().len(), 1);
    assert_eq!(s.arc_endpoints().len(), 2);
    let s = CircleSet::new(
        vec![
            Arc::new(Angle::parse("0").unwrap(), Angle::parse("π").unwrap()),
            Arc::new(Angle::parse("π").unwrap(), Angle::parse("2π").unwrap()),
        ],
        vec![],
    );
    assert!(s.arcs()[0].is_full());
    assert!(s.arc_endpoints().is_empty());
}

#[test]
fn image_of_unit_interval() {
    let m = std_map();
    let k = line_set(vec![Piece::interval(rat_int(0), rat_int(1))]);
    let set = CircleSet::from_line_set(&m, &k);
    assert_eq!(set.arcs().len(), 1);
    // λ(0) = −1 and λ(1) = −i
    assert_eq!(set.arcs()[0].from, Angle::parse("π").unwrap());
    assert_eq!(set.arcs()[0].to, Angle::parse("3/2π").unwrap());
    let s = transfer_description(&m, &[sp(&[0, 1]), sp(&[1, -1])]);
    let report = circle_description_report(&s, &set).unwrap();
    assert!(report.holds());
    assert_eq!(report.points.len(), 2);
}

#[test]
fn whole_circle_is_vacuous() {
    let s: Vec<LaurentMatrixPoly<Cq>> = vec![];
    assert!(circle_description_check(&s, &CircleSet::whole()).unwrap());
    let k = line_set(vec![Piece::Interval { lo: None, hi: None }]);
    assert_eq!(CircleSet::from_line_set(&std_map(), &k), CircleSet::whole());
}

#[test]
fn squared_generator_fails_condition_a() {
    let m = std_map();
    let k = line_set(vec![Piece::interval(rat_int(0), rat_int(1))]);
    let set = CircleSet::from_line_set(&m, &k);
    let b = lambda_transform(&m, &sp(&[0, 1]));
    let b2 = b.mul(&b).unwrap();
    let s = vec![b2, lambda_transform(&m, &sp(&[1, -1]))];
    let report = circle_description_report(&s, &set).unwrap();
    assert!(!report.holds());
    // the endpoint at 1 still has the simple zero of 1 − x
    assert_eq!(report.points.iter().filter(|p| p.ok).count(), 1);
}

#[test]
fn unbounded_sets_pass_through_z0() {
    let m = std_map();
    let k = line_set(vec![ray_up(0)]);
    let set = CircleSet::from_line_set(&m, &k);
    // from λ(0) = −1 counterclockwise to λ(∞) = 1
    assert_eq!(set.arcs()[0].from, Angle::parse("π").unwrap());
    assert_eq!(set.arcs()[0].to, Angle::parse("2π").unwrap());
    let s = transfer_description(&m, &[sp(&[0, 1])]);
    assert!(circle_description_check(&s, &set).unwrap());

    let k = line_set(vec![ray_down(-1), ray_up(1)]);
    let set = CircleSet::from_line_set(&m, &k);
    assert_eq!(set.arcs().len(), 1);
    let s = transfer_description(&m, &[sp(&[-1, 0, 1])]);
    assert!(circle_description_check(&s, &set).unwrap());
}

#[test]
fn isolated_point_needs_opposite_slopes() {
    let m = std_map();
    let k = line_set(vec![Piece::Point(rat_int(0))]);
    let set = CircleSet::from_line_set(&m, &k);
    assert_eq!(set.points().len(), 1);
    let good = transfer_description(&m, &[sp(&[0, 1]), sp(&[0, -1])]);
    let report = circle_description_report(&good, &set).unwrap();
    assert!(report.holds());
    assert_eq!(report.points[0].witnesses, vec![0, 1]);
    let bad = transfer_description(&m, &[sp(&[0, 1]), sp(&[0, 2])]);
    assert!(!circle_description_check(&bad, &set).unwrap());
    let single = transfer_description(&m, &[sp(&[0, 0, -1])]);
    assert!(!circle_description_check(&single, &set).unwrap());
}

#[test]
fn off_circle_points_are_errors() {
    let s = transfer_description(&std_map(), &[sp(&[0, 1])]);
    assert!(matches!(
        condition_a(&s, Complex64::new(2.0, 0.0)),
        Err(CircleError::OffCircle(_))
    ));
    assert!(matches!(
        condition_b(&s, Complex64::new(0.0, 0.5)),
        Err(CircleError::OffCircle(_))
    ));
}

#[test]
fn line_description_recovers_generators() {
    let m = std_map();
    let g = vec![sp(&[0, 1]), sp(&[1, -1]), sp(&[2, 0, -1])];
    let s = transfer_description(&m, &g);
    let back = line_description(&m, &s).unwrap();
    // odd generators come back multiplied by (1 + x²)/4 relative to degree parity
    assert_eq!(back[2], g[2]);
    for (orig, b) in g.iter().zip(&back) {
        for t in [-2, 0, 1, 3] {
            let x = Cq::from_i64(t);
            let (o, r) = (orig.evaluate(&x), b.evaluate(&x));
            assert_eq!(o.get(0, 0).re.signum_i(), r.get(0, 0).re.signum_i());
        }
    }
}

trait SignumI {
    fn signum_i(&self) -> i32;
}

impl SignumI for num_rational::BigRational {
    fn signum_i(&self) -> i32 {
        use num_traits::Signed;
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

proptest! {
    #[test]
    fn apply_lands_on_the_circle(theta in 0.0f64..6.283, wr in -3.0f64..3.0, wi in 0.1f64..3.0,
                                 neg in any::<bool>(), xs in prop::collection::vec(-1e3f64..1e3, 100)) {
        let w = Complex64::new(wr, if neg { -wi } else { wi });
        let m = MoebiusMap::new(Complex64::from_polar(1.0, theta), w).unwrap();
        for x in xs {
            let z = moebius_apply(&m, Some(&Complex64::new(x, 0.0)));
            prop_assert!((z.norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn transform_is_hermitian_and_invertible(n in 1usize..=2, deg in 0usize..=4,
                                             vals in prop::collection::vec(-5i64..=5, 50)) {
        let mut it = vals.iter().cycle();
        let mut coeffs = Vec::new();
        for _ in 0..=deg {
            let a = Mat::from_fn(n, |_, _| cq_int(*it.next().unwrap(), *it.next().unwrap()));
            coeffs.push(a.add(&a.adjoint()));
        }
        let f = MatrixPoly::from_coeffs(n, coeffs).unwrap();
        let m = std_map();
        let l = lambda_transform(&m, &f);
        prop_assert_eq!(l.laurent_adjoint(), l.clone());
        let d = f.degree().unwrap_or(0);
        prop_assert_eq!(lambda_recover(&m, &l, d).unwrap(), f);
    }

    #[test]
    fn transform_positivity_on_interval(a in 0i64..5, b in 1i64..5, t in 0.0f64..1.0) {
        // (x − a)(a + b − x) ≥ 0 on [a, a + b]
        let f = sp(&[-a * (a + b), 2 * a + b, -1]);
        let l = lambda_transform(&std_map(), &f).to_float();
        let x = a as f64 + t * b as f64;
        prop_assert!(transferred_min_eigenvalue(&map_to_float(&std_map()), &l, x) >= -1e-9);
    }
}
