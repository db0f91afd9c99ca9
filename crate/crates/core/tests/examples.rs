//! Worked examples, checked through the public API.

use bidisc::poly::Poly;
use bidisc::*;

type C = Complex64;

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn r(x: f64) -> C {
    c(x, 0.0)
}

fn sp(s: f64, p: f64) -> SymPoint64 {
    SymPoint::new(r(s), r(p))
}

fn dp(z: C) -> DiscPoint<f64> {
    DiscPoint::new(z).unwrap()
}

fn close(a: C, b: C, tol: f64) -> bool {
    (a - b).norm() <= tol
}

#[test]
fn disc_distances() {
    assert_eq!(mobius_distance(dp(r(0.3)), dp(r(0.3))).unwrap(), 0.0);
    assert!((mobius_distance(dp(r(0.5)), dp(r(-0.5))).unwrap() - 0.8).abs() < 1e-15);
    assert!((mobius_distance(dp(r(0.0)), dp(r(0.5))).unwrap() - 0.5).abs() < 1e-15);
    let half = 0.5f64.atanh();
    assert!((poincare_distance(dp(r(0.0)), dp(r(0.5))).unwrap() - half).abs() < 1e-15);
    assert_eq!(poincare_distance(dp(r(0.3)), dp(r(0.3))).unwrap(), 0.0);
    assert!((poincare_distance(dp(c(0.0, 0.5)), dp(r(0.0))).unwrap() - half).abs() < 1e-15);
    assert!(DiscPoint::new(r(1.0)).is_err());
}

#[test]
fn involution_b_alpha() {
    let b = DiscAutomorphism::b_alpha(r(0.5)).unwrap();
    assert!(close(b.apply(r(0.0)), r(0.5), 1e-15));
    assert!(close(b.apply(r(0.5)), r(0.0), 1e-15));
    assert!(close(b.apply(b.apply(r(0.2))), r(0.2), 1e-15));
    let h = DiscAutomorphism::new(c(0.6, 0.8), c(0.1, -0.4)).unwrap();
    assert!(close(h.inverse().compose(&h).apply(c(0.3, 0.3)), c(0.3, 0.3), 1e-12));
}

#[test]
fn blaschke_values() {
    let sq = BlaschkeProduct::new(r(1.0), vec![r(0.0), r(0.0)]).unwrap();
    assert!(close(sq.eval(r(0.5)).unwrap(), r(0.25), 1e-15));
    let b = BlaschkeProduct::new(r(1.0), vec![r(0.0), r(0.5)]).unwrap();
    assert!(close(b.eval(r(-0.5)).unwrap(), r(0.4), 1e-15));
    for k in 0..16 {
        let z = cis(k as f64 * 0.4);
        assert!((b.eval(z).unwrap().norm() - 1.0).abs() < 1e-12);
    }
    assert!(b.eval(r(1.1)).is_err());
}

#[test]
fn two_point_automorphisms() {
    let tol = 1e-9;
    let id = automorphism_through(r(0.5), r(-0.5), r(0.5), r(-0.5), tol).unwrap();
    assert!(close(id.apply(c(0.2, 0.1)), c(0.2, 0.1), 1e-12));
    let rot = automorphism_through(r(0.0), r(0.5), r(0.0), c(0.0, 0.5), tol).unwrap();
    assert!(close(rot.apply(c(0.3, 0.0)), c(0.0, 0.3), 1e-12));
    let h = automorphism_through(r(0.5), r(-0.5), r(0.0), r(-0.8), tol).unwrap();
    let want = DiscAutomorphism::new(r(1.0), r(0.5)).unwrap();
    assert!(close(h.apply(c(0.1, 0.2)), want.apply(c(0.1, 0.2)), 1e-12));
    assert!(matches!(automorphism_through(r(0.1), r(0.1), r(0.0), r(0.2), tol), Err(Error::Degenerate(_))));
    assert!(matches!(automorphism_through(r(0.0), r(0.5), r(0.0), r(0.6), tol), Err(Error::Infeasible(_))));
}

#[test]
fn three_point_interpolation() {
    let b = blaschke_interpolate_origin(0.3, r(0.3), r(-0.3), 1e-9).unwrap();
    assert_eq!(b.degree(), 1);
    assert!(close(b.apply(c(0.2, 0.1)), c(0.2, 0.1), 1e-12));
    let s = 0.5f64.sqrt();
    let b = blaschke_interpolate_origin(s, r(0.5), r(0.5), 1e-9).unwrap();
    assert!(close(b.apply(c(0.2, 0.1)), c(0.2, 0.1) * c(0.2, 0.1), 1e-12));
    let b = blaschke_interpolate_origin(0.5, r(0.0), r(0.4), 1e-9).unwrap();
    let want = BlaschkeProduct::new(r(1.0), vec![r(0.0), r(0.5)]).unwrap();
    assert!(close(b.apply(c(0.2, 0.1)), want.apply(c(0.2, 0.1)), 1e-12));
    assert!(matches!(blaschke_interpolate_origin(0.5, r(0.1), r(0.4), 1e-9), Err(Error::Infeasible(_))));
}

#[test]
fn symmetrization_and_lifts() {
    assert_eq!(pi2(r(0.3), r(-0.3)), sp(0.0, -0.09));
    assert_eq!(pi2(r(0.5), r(0.5)), sp(1.0, 0.25));
    let z = pi2(c(0.0, 0.5), r(0.2));
    assert!(close(z.s, c(0.2, 0.5), 1e-15) && close(z.p, c(0.0, 0.1), 1e-15));

    let l = lift(&sp(0.0, -0.09));
    let mut m = [l.l1.re, l.l2.re];
    m.sort_by(f64::total_cmp);
    assert!((m[0] + 0.3).abs() < 1e-15 && (m[1] - 0.3).abs() < 1e-15);
    let l = lift(&sp(1.0, 0.25));
    assert!(close(l.l1, r(0.5), 1e-12) && close(l.l2, r(0.5), 1e-12));
    let l = lift(&sp(2.0, 1.0));
    assert!(close(l.l1, r(1.0), 1e-12) && close(l.l2, r(1.0), 1e-12));

    let m = contains(&sp(0.0, -0.09));
    assert!(m.inside && (m.margin - 0.7).abs() < 1e-12);
    let m = contains(&sp(1.0, 0.25));
    assert!(m.inside && (m.margin - 0.5).abs() < 1e-12);
    let m = contains(&sp(2.0, 1.0));
    assert!(!m.inside && m.margin.abs() < 1e-12);

    assert!(on_royal_variety(&sp(1.0, 0.25), 1e-10));
    assert!(on_royal_variety(&SymPoint::origin(), 1e-10));
    assert!(!on_royal_variety(&sp(0.0, -0.09), 1e-10));
}

#[test]
fn royal_automorphisms_and_extremal_functions() {
    let b = RoyalAutomorphism::new(r(0.5)).unwrap();
    assert!(b.apply(&SymPoint::origin()).dist(&sp(1.0, 0.25)) < 1e-15);
    assert!(b.apply(&sp(1.0, 0.25)).dist(&SymPoint::origin()) < 1e-15);
    let z = pi2(c(0.1, 0.7), c(-0.4, 0.2));
    assert!(b.apply(&b.apply(&z)).dist(&z) < 1e-14);
    assert!(RoyalAutomorphism::new(r(1.0)).is_err());

    let zero = ExtremalParam::zero();
    let one = ExtremalParam::unimodular(r(1.0)).unwrap();
    assert!(close(extremal_eval(&zero, &sp(0.0, -0.09)).unwrap(), r(-0.09), 1e-15));
    assert!(close(extremal_eval(&one, &sp(1.0, 0.25)).unwrap(), r(-0.5), 1e-15));
    assert!((extremal_eval(&one, &sp(0.4, 0.0)).unwrap().norm() - 0.25).abs() < 1e-15);
    assert!(matches!(extremal_eval(&one, &sp(2.0, 1.0)), Err(Error::Domain(_))));
}

#[test]
fn random_points() {
    use rand::SeedableRng;
    let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let z: SymPoint64 = random_interior_point(&mut a, 0.95);
        assert_eq!(z, random_interior_point(&mut b, 0.95));
        assert!(contains(&z).inside);
    }
    assert!(random_interior_point(&mut a, 0.0f64).is_origin());
}

#[test]
fn origin_geodesics() {
    let lin = OriginGeodesic::degree1(r(1.0));
    assert!(lin.eval(r(0.3)).unwrap().dist(&sp(0.0, -0.3)) < 1e-15);
    let g = OriginGeodesic::degree2(r(1.0), r(0.5));
    assert!(g.eval(r(0.25)).unwrap().dist(&sp(0.4, 0.0)) < 1e-15);
    assert_eq!(g.eval(r(0.0)).unwrap(), SymPoint::origin());
    assert!(g.eval(r(1.5)).is_err());

    let o = construct_origin(&sp(0.0, -0.09)).unwrap();
    assert_eq!(o.geodesic.degree(), 1);
    assert!((o.sigma - 0.3).abs() < 1e-12 && (o.distance - 0.090244).abs() < 1e-6);
    let o = construct_origin(&sp(1.0, 0.25)).unwrap();
    assert!(close(o.geodesic.alpha().unwrap(), r(0.0), 1e-12));
    assert!((o.sigma * o.sigma - 0.5).abs() < 1e-12 && (o.distance - 0.549306).abs() < 1e-6);
    let o = construct_origin(&sp(0.4, 0.0)).unwrap();
    assert!((o.sigma - 0.5).abs() < 1e-12);
    assert!(close(o.geodesic.alpha().unwrap(), r(0.5), 1e-10) && close(o.geodesic.tau(), r(1.0), 1e-10));
    assert!(matches!(construct_origin(&SymPoint::<f64>::origin()), Err(Error::Degenerate(_))));
    assert!(matches!(construct_origin(&sp(2.0, 1.0)), Err(Error::Domain(_))));
}

#[test]
fn origin_certificates() {
    let cert = certificate_origin(&OriginGeodesic::degree1(r(1.0)));
    assert!(cert.omega.is_zero());
    assert!(close(cert.rotation.apply(c(0.2, 0.3)), c(-0.2, -0.3), 1e-15));
    let sq = OriginGeodesic::degree2(r(1.0), r(0.0));
    let cert = certificate_origin(&sq);
    assert_eq!(cert.omega.omega(), r(1.0));
    assert!(close(cert.rotation.apply(c(0.2, 0.3)), c(-0.2, -0.3), 1e-15));
    let g = OriginGeodesic::degree2(r(1.0), r(0.5));
    let cert = certificate_origin(&g);
    assert!(close(cert.omega.omega(), r(1.0), 1e-15));
    assert!((cert.omega.apply(&g.apply(r(0.25))).norm() - 0.25).abs() < 1e-15);
    assert!(verify_certificate(&g, &cert) <= 1e-8);
}

#[test]
fn through_royal_points() {
    let a = construct_through_royal(&SymPoint::origin(), &sp(0.0, -0.09), 1e-10).unwrap();
    assert!((a.distance - 0.09f64.atanh()).abs() < 1e-12);
    let b = construct_through_royal(&sp(1.0, 0.25), &SymPoint::origin(), 1e-10).unwrap();
    assert!(b.geodesic.apply(b.at_z).dist(&sp(1.0, 0.25)) < 1e-9);
    assert!(b.geodesic.apply(b.at_w).dist(&SymPoint::origin()) < 1e-9);
    // both points are royal, so the witness is the royal disc itself
    assert_eq!(royal_intersection_class(&b.geodesic.clone().into()).unwrap(), RoyalIntersection::Whole);
    assert!((b.distance - 0.5f64.atanh()).abs() < 1e-12);
    let w = RoyalAutomorphism::new(r(0.5)).unwrap().apply(&sp(0.0, -0.09));
    let t = construct_through_royal(&sp(1.0, 0.25), &w, 1e-10).unwrap();
    assert!((t.distance - a.distance).abs() < 1e-12);
    assert!(t.geodesic.apply(t.at_w).dist(&w) < 1e-9);
    assert!(matches!(construct_through_royal(&sp(0.0, -0.09), &sp(1.0, 0.25), 1e-10), Err(Error::Domain(_))));
}

#[test]
fn flat_geodesics() {
    let id = DiscAutomorphism::identity();
    let f2 = DiscAutomorphism::new(r(1.0), r(0.5)).unwrap();
    assert!(flat_rootfree_check(&id, &f2).unwrap().root_free);
    let bad = DiscAutomorphism::new(r(-1.0), r(0.3)).unwrap();
    let chk = flat_rootfree_check(&id, &bad).unwrap();
    assert!(!chk.root_free && !chk.quadratic_root_free);
    let want = (2.0 - (4.0f64 - 0.36).sqrt()) / 0.6;
    assert!(close(chk.root.unwrap(), r(want), 1e-12));
    let rot = DiscAutomorphism::rotation(cis(0.01)).unwrap();
    let chk = flat_rootfree_check(&id, &rot).unwrap();
    assert!(!chk.root_free && chk.root.unwrap().norm() < 1e-12);
    assert!(matches!(flat_rootfree_check(&id, &id), Err(Error::Degenerate(_))));

    let tol = Tolerances::default();
    let (z, w) = (sp(-0.5, 0.0), sp(0.5, 0.0));
    let f = construct_flat(&z, &w, &tol).unwrap();
    assert!((f.at_w - r(0.5)).norm() < 1e-12 && f.at_z == r(0.0));
    assert!(f.geodesic.apply(f.at_z).dist(&z) < 1e-12 && f.geodesic.apply(f.at_w).dist(&w) < 1e-12);
    assert!(matches!(construct_flat(&SymPoint::origin(), &sp(0.9, 0.0), &tol), Err(Error::Unbalanced { .. })));
    assert!(construct_flat(&z, &z, &tol).is_err());

    let g = FlatGeodesic::new(id, f2).unwrap();
    let cert = certificate_flat(&g, &tol).unwrap();
    assert!(cert.ratio >= 1.0 - 1e-8 && verify_certificate(&g, &cert) <= 1e-8);
    // positivity of (1 + ταω̄)²/τ at τ = 1, α = 0.5, ω = 1
    assert!((c(1.5, 0.0) * c(1.5, 0.0)).re > 0.0);
}

#[test]
fn flat_boundary_closed_form() {
    let a = 0.5f64;
    let tau = c(1.0 - 2.0 * a * a, 2.0 * a * (1.0 - a * a).sqrt());
    let g = FlatGeodesic::new(DiscAutomorphism::identity(), DiscAutomorphism::new(tau, r(a)).unwrap()).unwrap();
    let cert = certificate_flat(&g, &Tolerances::default()).unwrap();
    let wt = c(-0.5, 0.75f64.sqrt());
    assert!(close(cert.omega.omega(), wt.conj() * tau * (r(a) / a), 1e-12));
    assert!(verify_certificate(&g, &cert) <= 1e-8);
}

#[test]
fn royal_classes_and_traces() {
    let sq = Geodesic64::from(OriginGeodesic::degree2(r(1.0), r(0.0)));
    let lin = Geodesic64::from(OriginGeodesic::degree1(r(1.0)));
    let flat = Geodesic64::from(
        FlatGeodesic::new(DiscAutomorphism::identity(), DiscAutomorphism::new(r(1.0), r(0.5)).unwrap()).unwrap(),
    );
    assert_eq!(royal_intersection_class(&sq).unwrap(), RoyalIntersection::Whole);
    assert!(
        matches!(royal_intersection_class(&lin).unwrap(), RoyalIntersection::SinglePoint { lambda } if lambda.norm() < 1e-15)
    );
    assert_eq!(royal_intersection_class(&flat).unwrap(), RoyalIntersection::Empty);
    for g in [&sq, &lin, &flat] {
        for row in boundary_trace(g, 64).unwrap() {
            assert!((row.root1_modulus - 1.0).abs() < 1e-9 && (row.root2_modulus - 1.0).abs() < 1e-9);
        }
    }
    assert!(boundary_trace(&sq, 0).is_err());
    let two_points = RationalDisc {
        s_num: Poly::new(vec![r(0.0), r(1.0)]),
        p_num: Poly::new(vec![r(0.0), r(0.125), r(-0.25)]),
        den: Poly::constant(r(1.0)),
    };
    // ψ = λ² - 4(0.125λ - 0.25λ²) = 2λ² - 0.5λ, zeros 0 and 0.25
    assert!(matches!(classify_rational(&two_points), Err(Error::Classification(_))));
}

#[test]
fn verification_reports() {
    let tol = Tolerances::default();
    let o = construct_origin(&sp(1.0, 0.25)).unwrap();
    let rep = verify_geodesic(&o.geodesic, &[(r(0.0), r(0.5)), (r(0.3), r(0.3))], 1e-6, &tol);
    assert!(rep.passed && rep.worst_deviation <= 1e-6);
    assert_eq!(rep.pairs[1].caratheodory, 0.0);
    assert_eq!(rep.pairs[1].poincare, 0.0);
    let corrupted = FnDisc(|l: C| pi2(l, l * 0.5));
    let rep = verify_geodesic(&corrupted, &[(r(0.0), r(0.5)), (c(0.1, 0.2), c(-0.4, 0.1))], 1e-6, &tol);
    assert!(!rep.passed);
}

#[test]
fn distances() {
    let tol = Tolerances::default();
    let v = caratheodory(&SymPoint::origin(), &sp(1.0, 0.25), &tol).unwrap();
    assert!((v.value - 0.549306).abs() < 1e-6 && !v.omega.is_zero());
    let v = caratheodory(&SymPoint::origin(), &sp(0.0, -0.09), &tol).unwrap();
    assert!((v.value - 0.09f64.atanh()).abs() < 1e-12 && v.omega.is_zero());
    assert_eq!(caratheodory(&sp(0.4, 0.0), &sp(0.4, 0.0), &tol).unwrap().value, 0.0);

    let u = lempert_upper(&SymPoint::origin(), &sp(0.0, -0.09), &tol).unwrap();
    assert_eq!(u.path, WitnessPath::Royal);
    assert!((u.value - 0.09f64.atanh()).abs() < 1e-12);
    let u = lempert_upper(&sp(-0.5, 0.0), &sp(0.5, 0.0), &tol).unwrap();
    assert_eq!(u.path, WitnessPath::Flat);
    assert!((u.value - 0.5f64.atanh()).abs() < 1e-12);
    assert!(matches!(lempert_upper(&sp(0.3, 0.0), &sp(0.3, 0.0), &tol), Err(Error::Degenerate(_))));

    let rep = distance_report(&SymPoint::origin(), &sp(1.0, 0.25), &tol).unwrap();
    assert!(rep.tight && (rep.lempert_upper - 0.549306).abs() < 1e-6);
    let rep = distance_report(&SymPoint::origin(), &sp(0.0, -0.09), &tol).unwrap();
    assert!(rep.tight && (rep.caratheodory_lower - 0.090244).abs() < 1e-6);
    let rep = distance_report(&sp(0.3, 0.0), &sp(0.3, 0.0), &tol).unwrap();
    assert_eq!(rep.lempert_upper, 0.0);
    assert!(rep.witness.is_none());
}

#[test]
fn random_pairs_are_mostly_tight() {
    use rand::SeedableRng;
    let tol = Tolerances::default();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut tight = 0;
    for _ in 0..200 {
        let z: SymPoint64 = random_interior_point(&mut rng, 0.95);
        let w: SymPoint64 = random_interior_point(&mut rng, 0.95);
        let rep = distance_report(&z, &w, &tol).unwrap();
        assert!(rep.caratheodory_lower <= rep.lempert_upper + 1e-12, "{rep:?}");
        tight += usize::from(rep.tight);
        if !rep.tight {
            assert!(rep.gap > 1e-6 || rep.path == Some(WitnessPath::LiftBound));
        }
    }
    assert!(tight >= 198, "tight in {tight} of 200");
}

#[test]
fn gn_examples() {
    let e = cis(std::f64::consts::TAU / 3.0);
    let z = pi_n(&[r(0.3), e * 0.3, e * e * 0.3]);
    let t = SymPointN::new(vec![r(0.0), r(0.0), r(0.027)]).unwrap();
    assert!(z.dist(&t) < 1e-15);
    assert!(pi_n(&[r(0.0); 3]).is_origin());
    let m = contains_n(&t).unwrap();
    assert!(m.inside && (m.margin - 0.7).abs() < 1e-12);
    let edge = contains_n(&pi_n(&[r(1.0), r(0.2), c(0.1, 0.3)])).unwrap();
    assert!(edge.margin.abs() < 1e-12);

    let id3 = ConjecturedGeodesic::new(3, BlaschkeProduct::identity()).unwrap();
    let v = eval_conjectured(&id3, c(0.1, 0.2)).unwrap();
    assert!(v.dist(&SymPointN::new(vec![r(0.0), r(0.0), c(0.1, 0.2)]).unwrap()) < 1e-15);
    assert!(eval_conjectured(&id3, r(0.0)).unwrap().is_origin());
    let sq = ConjecturedGeodesic::new(2, BlaschkeProduct::new(r(1.0), vec![r(0.0), r(0.0)]).unwrap()).unwrap();
    let v = eval_conjectured(&sq, c(0.3, -0.2)).unwrap();
    let o = OriginGeodesic::degree2(r(1.0), r(0.0)).apply(c(0.3, -0.2));
    assert!((v.coords()[0] - o.s).norm() < 1e-14 && (v.coords()[1] - o.p).norm() < 1e-14);

    let cfg = FitConfig::default();
    let rep = lempert_upper_origin_n(&SymPointN::new(vec![r(1.0), r(0.25)]).unwrap(), &cfg).unwrap();
    assert!(rep.fitted && (rep.value - 0.5f64.atanh()).abs() < 1e-10);
    let rep = lempert_upper_origin_n(&t, &cfg).unwrap();
    assert!(rep.fitted && rep.value <= 0.027f64.atanh() + 1e-9);
    assert!(rep.value <= rep.lift_bound + 1e-10);
    assert!(matches!(
        lempert_upper_origin_n(&SymPointN::new(vec![r(0.0); 3]).unwrap(), &cfg),
        Err(Error::Degenerate(_))
    ));
}

#[test]
fn single_precision_smoke() {
    let o = construct_origin(&SymPoint::<f32>::new(Complex32::new(1.0, 0.0), Complex32::new(0.25, 0.0))).unwrap();
    assert!((o.distance - 0.5f32.atanh()).abs() < 1e-4);
    let tol = Tolerances::default();
    let v = caratheodory(
        &SymPoint::<f32>::origin(),
        &SymPoint::new(Complex32::new(1.0, 0.0), Complex32::new(0.25, 0.0)),
        &tol,
    )
    .unwrap();
    assert!((v.value - 0.5f32.atanh()).abs() < 1e-4);
}
