use octoclif::cayley_dickson::CdElement;
use octoclif::clifford::{Multivector, Paravector};
use octoclif::moebius::{Generator, OctonionMoebius, VahlenMatrix, POLE_EPS};
use octoclif::octonion::Octonion;
use proptest::prelude::*;

fn coeffs(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0f64..2.0, len)
}

fn octonion() -> impl Strategy<Value = Octonion> {
    coeffs(8).prop_map(|c| Octonion::from_slice(&c).unwrap())
}

proptest! {
    #[test]
    fn octonion_norm_is_multiplicative(a in octonion(), b in octonion()) {
        let lhs = (a * b).norm();
        prop_assert!((lhs - a.norm() * b.norm()).abs() <= 1e-12 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn octonion_conjugation_reverses_products(a in octonion(), b in octonion()) {
        let lhs = (a * b).conj();
        let rhs = b.conj() * a.conj();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn octonion_inverse_is_two_sided(a in octonion()) {
        prop_assume!(a.norm() > 1e-3);
        let inv = a.inverse(1e-12).unwrap();
        prop_assert!((a * inv).max_abs_diff(&Octonion::ONE) < 1e-12);
        prop_assert!((inv * a).max_abs_diff(&Octonion::ONE) < 1e-12);
    }

    #[test]
    fn doubling_level_three_agrees_with_octonion_norm(a in coeffs(8), b in coeffs(8)) {
        let x = CdElement::new(3, a).unwrap();
        let y = CdElement::new(3, b).unwrap();
        let p = x.mul(&y).unwrap();
        prop_assert!((p.norm() - x.norm() * y.norm()).abs() <= 1e-12 * (1.0 + x.norm() * y.norm()));
    }

    #[test]
    fn clifford_product_is_associative(n in 1usize..6, seed in coeffs(64 * 3)) {
        let dim = 1 << n;
        let a = Multivector::new(n, seed[..dim].to_vec()).unwrap();
        let b = Multivector::new(n, seed[64..64 + dim].to_vec()).unwrap();
        let c = Multivector::new(n, seed[128..128 + dim].to_vec()).unwrap();
        let lhs = &(&a * &b) * &c;
        let rhs = &a * &(&b * &c);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + a.norm() * b.norm() * c.norm()));
    }

    #[test]
    fn reversion_and_conjugation_are_anti_automorphisms(n in 1usize..5, seed in coeffs(32)) {
        let dim = 1 << n;
        let a = Multivector::new(n, seed[..dim].to_vec()).unwrap();
        let b = Multivector::new(n, seed[16..16 + dim].to_vec()).unwrap();
        let ab = &a * &b;
        prop_assert!(ab.reversion().max_abs_diff(&(&b.reversion() * &a.reversion())) < 1e-12);
        prop_assert!(ab.conjugate().max_abs_diff(&(&b.conjugate() * &a.conjugate())) < 1e-12);
    }

    #[test]
    fn octonion_translation_then_dilation(z in octonion(), w in octonion(), t in 0.1f64..4.0) {
        let m = OctonionMoebius::from_word(&[
            Generator::Translate { w: w.0.to_vec() },
            Generator::Dilate { t },
        ]).unwrap();
        let got = m.eval(&z, POLE_EPS).unwrap();
        let expect = (z + w).scale(t);
        prop_assert!(got.max_abs_diff(&expect) < 1e-12 * (1.0 + expect.norm()));
    }

    #[test]
    fn vahlen_inversion_is_an_involution(c in coeffs(4)) {
        let z = Paravector::new(3, c).unwrap();
        prop_assume!(z.norm() > 1e-2);
        let inv = VahlenMatrix::generator(3, &Generator::Inversion).unwrap();
        let once = inv.eval(&z, POLE_EPS).unwrap();
        let twice = inv.eval(&once, POLE_EPS).unwrap();
        for (x, y) in twice.coeffs().iter().zip(z.coeffs()) {
            prop_assert!((x - y).abs() < 1e-10 * (1.0 + z.norm()));
        }
    }
}
