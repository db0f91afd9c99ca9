use bidisc::*;
use proptest::prelude::*;

type C = Complex64;

fn disc(r_max: f64) -> impl Strategy<Value = C> {
    (0.0..r_max, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| C::from_polar(r, t))
}

fn circle() -> impl Strategy<Value = C> {
    (0.0..std::f64::consts::TAU).prop_map(cis)
}

fn automorphism() -> impl Strategy<Value = DiscAutomorphism64> {
    (circle(), disc(0.9)).prop_map(|(t, a)| DiscAutomorphism::new(t, a).unwrap())
}

fn point(r_max: f64) -> impl Strategy<Value = SymPoint64> {
    (disc(r_max), disc(r_max)).prop_map(|(a, b)| pi2(a, b))
}

fn origin_geodesic() -> impl Strategy<Value = OriginGeodesic<f64>> {
    point(0.97).prop_filter_map("origin", |t| construct_origin(&t).ok().map(|o| o.geodesic))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mobius_distance_is_invariant(h in automorphism(), a in disc(0.95), b in disc(0.95)) {
        let before = pseudo_hyperbolic(a, b);
        let after = pseudo_hyperbolic(h.apply(a), h.apply(b));
        prop_assert!((before - after).abs() <= 1e-12);
    }

    #[test]
    fn schwarz_lemma(t in circle(), a in disc(0.95), l in disc(1.0)) {
        let b = BlaschkeProduct::new(t, vec![C::new(0.0, 0.0), a]).unwrap();
        prop_assert!(b.apply(l).norm() <= l.norm() + 1e-12);
    }

    #[test]
    fn two_point_automorphism_inverts(h0 in automorphism(), a in disc(0.9), b in disc(0.9)) {
        prop_assume!((a - b).norm() > 1e-3);
        let (c, d) = (h0.apply(a), h0.apply(b));
        let h = automorphism_through(a, b, c, d, 1e-9).unwrap();
        let inv = h.inverse();
        prop_assert!((inv.apply(c) - a).norm() <= 1e-10);
        prop_assert!((inv.apply(d) - b).norm() <= 1e-10);
    }

    #[test]
    fn three_point_interpolation_reproduces(t in circle(), a in disc(0.9), sigma in 0.05f64..0.95) {
        let b0 = BlaschkeProduct::new(t, vec![C::new(0.0, 0.0), a]).unwrap();
        let (t1, t2) = (b0.apply(C::new(sigma, 0.0)), b0.apply(C::new(-sigma, 0.0)));
        let b = blaschke_interpolate_origin(sigma, t1, t2, 1e-9).unwrap();
        prop_assert!(b.apply(C::new(0.0, 0.0)).norm() <= 1e-15);
        prop_assert!((b.apply(C::new(sigma, 0.0)) - t1).norm() <= 1e-9);
        prop_assert!((b.apply(C::new(-sigma, 0.0)) - t2).norm() <= 1e-9);
        let probe = C::new(0.2, -0.3);
        prop_assert!((b.apply(probe) - b0.apply(probe)).norm() <= 1e-9);
    }

    #[test]
    fn lift_inverts_pi2(a in disc(1.2), b in disc(1.2)) {
        let l = lift(&pi2(a, b));
        let direct = (l.l1 - a).norm().max((l.l2 - b).norm());
        let swapped = (l.l1 - b).norm().max((l.l2 - a).norm());
        prop_assert!(direct.min(swapped) <= 1e-10 * (1.0 + (a - b).norm().recip().min(1e6)));
        prop_assert!(pi2(l.l1, l.l2).dist(&pi2(a, b)) <= 1e-10);
    }

    #[test]
    fn membership_margin(a in disc(1.05), b in disc(1.05)) {
        let m = contains(&pi2(a, b));
        let want = 1.0 - a.norm().max(b.norm());
        prop_assert!((m.margin - want).abs() <= 1e-10);
        if want.abs() > 1e-10 {
            prop_assert_eq!(m.inside, want > 0.0);
        }
    }

    #[test]
    fn royal_automorphisms_preserve_structure(al in disc(0.9), z in point(1.1), l in disc(0.99)) {
        let b = RoyalAutomorphism::new(al).unwrap();
        let (inside, margin) = { let m = contains(&z); (m.inside, m.margin) };
        if margin.abs() > 1e-9 {
            prop_assert_eq!(contains(&b.apply(&z)).inside, inside);
        }
        prop_assert!(on_royal_variety(&b.apply(&SymPoint::royal(l)), 1e-10));
        if !on_royal_variety(&z, 1e-6) && inside {
            prop_assert!(!on_royal_variety(&b.apply(&z), 1e-10));
        }
        prop_assert!(b.apply(&z).dist(&b.apply_via_lift(&z)) <= 1e-10 || !inside);
    }

    #[test]
    fn extremal_functions_map_into_disc(z in point(0.999), t in 0usize..65) {
        let om = if t == 64 { ExtremalParam::zero() } else { ExtremalParam::from_angle(t as f64 * std::f64::consts::TAU / 64.0) };
        prop_assert!(extremal_eval(&om, &z).unwrap().norm() < 1.0);
    }

    #[test]
    fn origin_sigma_in_bracket(t in point(0.98)) {
        prop_assume!(!t.is_origin());
        let o = construct_origin(&t).unwrap();
        let l = lift(&t);
        prop_assert!(o.sigma < 1.0);
        if (l.l1 + l.l2).norm() > 1e-9 {
            prop_assert!(o.sigma > l.max_modulus());
        }
        prop_assert!(o.geodesic.apply(C::new(o.sigma * o.sigma, 0.0)).dist(&t) <= 1e-9);
    }

    #[test]
    fn branch_pairs_match_closed_forms(g in origin_geodesic(), l in disc(1.0)) {
        let closed = g.apply(l);
        prop_assert!(g.eval_branches(l, false).dist(&closed) <= 1e-12);
        prop_assert!(g.eval_branches(l, true).dist(&closed) <= 1e-12);
    }

    #[test]
    fn geodesic_json_round_trip(g in origin_geodesic(), al in disc(0.9)) {
        let t = Geodesic64::from(TransportedGeodesic::new(al, g.clone()).unwrap());
        for g in [Geodesic64::from(g), t] {
            let s = serde_json::to_string(&g).unwrap();
            let back: Geodesic64 = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bounds_are_ordered_and_symmetric(z in point(0.9), w in point(0.9)) {
        let tol = Tolerances::default();
        let a = distance_report(&z, &w, &tol).unwrap();
        let b = distance_report(&w, &z, &tol).unwrap();
        prop_assert!(a.caratheodory_lower <= a.lempert_upper + 1e-12);
        prop_assert!(a.gap >= -1e-12);
        prop_assert!((a.caratheodory_lower - b.caratheodory_lower).abs() <= 1e-10);
        if a.tight && b.tight {
            prop_assert!((a.lempert_upper - b.lempert_upper).abs() <= 1e-10);
        }
    }

    #[test]
    fn lower_bound_triangle_inequality(x in point(0.9), y in point(0.9), z in point(0.9)) {
        let tol = Tolerances::default();
        let d = |a: &SymPoint64, b: &SymPoint64| caratheodory(a, b, &tol).unwrap().value;
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z) + 1e-8);
    }

    #[test]
    fn verification_is_deterministic(g in origin_geodesic(), l1 in disc(0.9), l2 in disc(0.9)) {
        let tol = Tolerances::default();
        let pairs = [(l1, l2), (l2, l1), (l1, C::new(0.0, 0.0))];
        let a = verify_geodesic(&g, &pairs, 1e-6, &tol);
        let b = verify_geodesic(&g, &pairs, 1e-6, &tol);
        prop_assert_eq!(a.worst_deviation.to_bits(), b.worst_deviation.to_bits());
        prop_assert!(a.passed);
    }

    #[test]
    fn conjectured_images_stay_inside(t in circle(), zs in proptest::collection::vec(disc(0.95), 0..3), l in disc(0.999)) {
        let n = 3;
        let mut zeros = vec![C::new(0.0, 0.0)];
        zeros.extend(zs);
        let g = ConjecturedGeodesic::new(n, BlaschkeProduct::new(t, zeros).unwrap()).unwrap();
        let v = eval_conjectured(&g, l).unwrap();
        prop_assert!(contains_n(&v).unwrap().inside);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn gn_upper_bound_below_lift_bound(a in disc(0.9), b in disc(0.9), c in disc(0.9)) {
        let t = pi_n(&[a, b, c]);
        prop_assume!(!t.is_origin());
        let rep = lempert_upper_origin_n(&t, &FitConfig::default()).unwrap();
        if rep.fitted {
            prop_assert!(rep.value <= rep.lift_bound + 1e-10);
        } else {
            prop_assert_eq!(rep.value, rep.lift_bound);
        }
    }
}
