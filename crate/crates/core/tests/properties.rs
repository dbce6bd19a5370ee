use proptest::prelude::*;

use g2d5::cover::{f4_roots, s3_on_triple, CoverParams, RamificationCase, S3Word};
use g2d5::curve::{curve_from_cover, f_polys_at};
use g2d5::exactalg::{common_root_modular, q, CommonRoot, Rational, UPoly};
use g2d5::igusa::absolute_of_curve;
use g2d5::loci::{recover_parameter, verify_theorem3, y1_formulas, y2_formulas};
use g2d5::Error;

fn rational(h: i64) -> impl Strategy<Value = Rational> {
    (-h..=h, 1..=h).prop_map(|(n, d)| q(n, d))
}

fn params() -> impl Strategy<Value = CoverParams> {
    (rational(12), rational(12)).prop_filter_map("excluded", |(a, b)| CoverParams::new(a, b).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trip(x in rational(1000)) {
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn rational_field(x in rational(50), y in rational(50), z in rational(50)) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        if let Some(inv) = x.recip() {
            prop_assert_eq!(&x * &inv, Rational::one());
        }
    }

    #[test]
    fn square_identity_at_points(p in params(), x in rational(30)) {
        let [f1, f2, f3, _] = f_polys_at(&p.a, &p.b);
        let one = Rational::one();
        let lhs = &x * &f1.eval(&x).pow(2) - &(&x - &one) * &f3.eval(&x).pow(2);
        prop_assert_eq!(lhs, f2.eval(&x).pow(2));
    }

    #[test]
    fn w_relation_holds(p in params()) {
        match verify_theorem3(&p) {
            Ok(r) => prop_assert!(r.passed(), "{:?}", r),
            // degenerate points are reported, never wrong
            Err(e) => prop_assert!(matches!(e, Error::ExcludedParameter { .. } | Error::InvalidRoot(_)), "{e}"),
        }
    }

    #[test]
    fn s3_preserves_moduli_point(p in params(), w in 0usize..6) {
        let Ok([r, _]) = f4_roots(&p) else { return Ok(()) };
        let Ok(c) = curve_from_cover(&p, &r.z) else { return Ok(()) };
        let Ok(i) = absolute_of_curve(&c) else { return Ok(()) };
        let g = &S3Word::elements()[w];
        let Ok((p2, z2)) = s3_on_triple(&p, &r.z, g) else { return Ok(()) };
        let c2 = curve_from_cover(&p2, &z2).unwrap();
        prop_assert_eq!(absolute_of_curve(&c2).unwrap(), i);
    }

    #[test]
    fn locus_round_trip(t in rational(60), case2 in any::<bool>()) {
        let (case, f) = if case2 {
            (RamificationCase::II, y2_formulas(&t))
        } else {
            (RamificationCase::I, y1_formulas(&t))
        };
        let Ok(f) = f else { return Ok(()) };
        prop_assume!(!f.i3.is_zero() && f.j.is_some());
        prop_assert_eq!(recover_parameter(&[f.i1, f.i2, f.i3], case).unwrap().t, t);
    }

    #[test]
    fn modular_root_agrees_with_exact_gcd(
        r in rational(40),
        a in prop::collection::vec(rational(9), 1..5),
        b in prop::collection::vec(rational(9), 1..5),
    ) {
        let lin = UPoly::new(vec![-r.clone(), Rational::one()]);
        let u = lin.mul(&UPoly::new(a));
        let v = lin.mul(&UPoly::new(b));
        prop_assume!(!u.is_zero() && !v.is_zero());
        let g = u.gcd(&v);
        match common_root_modular(&[u, v]) {
            CommonRoot::Unique(x) => {
                prop_assert_eq!(g.degree(), Some(1));
                prop_assert_eq!(x, r);
            }
            // r is always shared
            CommonRoot::None => prop_assert!(false, "missed the shared root"),
            CommonRoot::Unknown => prop_assert!(g.degree() >= Some(2)),
        }
    }
}
