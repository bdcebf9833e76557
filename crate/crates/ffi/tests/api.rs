use std::ffi::{CStr, CString};
use std::ptr;

use octoclif_ffi::*;

fn last_error() -> String {
    let p = oc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn unit(k: usize) -> [f64; 8] {
    let mut e = [0.0; 8];
    e[k] = 1.0;
    e
}

#[test]
fn octonion_products_and_inverse() {
    let mut out = [0.0; 8];
    let st = unsafe { oc_octonion_mul(unit(1).as_ptr(), unit(2).as_ptr(), out.as_mut_ptr()) };
    assert_eq!(st, OcStatus::Ok);
    assert_eq!(out, unit(4));

    let a = [1.0, 2.0, 0.0, -1.0, 0.5, 0.0, 0.0, 3.0];
    let mut inv = [0.0; 8];
    assert_eq!(unsafe { oc_octonion_inverse(a.as_ptr(), inv.as_mut_ptr()) }, OcStatus::Ok);
    unsafe { oc_octonion_mul(a.as_ptr(), inv.as_ptr(), out.as_mut_ptr()) };
    for (k, x) in out.iter().enumerate() {
        assert!((x - unit(0)[k]).abs() < 1e-15);
    }

    let zero = [0.0; 8];
    assert_eq!(unsafe { oc_octonion_inverse(zero.as_ptr(), inv.as_mut_ptr()) }, OcStatus::Singular);
    assert!(last_error().contains("singular"));
    assert_eq!(unsafe { oc_octonion_mul(ptr::null(), a.as_ptr(), out.as_mut_ptr()) }, OcStatus::NullPointer);
}

#[test]
fn sedenion_zero_divisor_through_the_abi() {
    let mut a = [0.0; 16];
    let mut b = [0.0; 16];
    a[1] = 1.0;
    a[10] = 1.0;
    b[4] = 1.0;
    b[15] = -1.0;
    let mut out = [1.0; 16];
    assert_eq!(unsafe { oc_cayley_dickson_mul(4, a.as_ptr(), b.as_ptr(), out.as_mut_ptr(), 16) }, OcStatus::Ok);
    assert!(out.iter().all(|&x| x == 0.0));
    assert_eq!(
        unsafe { oc_cayley_dickson_mul(4, a.as_ptr(), b.as_ptr(), out.as_mut_ptr(), 8) },
        OcStatus::DimensionMismatch
    );
}

#[test]
fn multivector_handles() {
    unsafe {
        // (1 + e123)(1 - e123) = 0 in Cl_3; masks: e123 = 0b111.
        let mut p = [0.0; 8];
        let mut q = [0.0; 8];
        p[0] = 1.0;
        p[7] = 1.0;
        q[0] = 1.0;
        q[7] = -1.0;
        let (mut a, mut b, mut c) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(oc_multivector_new(3, p.as_ptr(), 8, &mut a), OcStatus::Ok);
        assert_eq!(oc_multivector_new(3, q.as_ptr(), 8, &mut b), OcStatus::Ok);
        assert_eq!(oc_multivector_product(a, b, &mut c), OcStatus::Ok);
        let mut len = 0;
        assert_eq!(oc_multivector_len(c, &mut len), OcStatus::Ok);
        assert_eq!(len, 8);
        let mut out = [1.0; 8];
        assert_eq!(oc_multivector_coeffs(c, out.as_mut_ptr(), 8), OcStatus::Ok);
        assert!(out.iter().all(|&x| x == 0.0));
        assert_eq!(oc_multivector_coeffs(c, out.as_mut_ptr(), 4), OcStatus::DimensionMismatch);

        // Reversion flips the sign of the trivector, conjugation too.
        let (mut r, mut k) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(oc_multivector_reversion(a, &mut r), OcStatus::Ok);
        assert_eq!(oc_multivector_conjugate(a, &mut k), OcStatus::Ok);
        oc_multivector_coeffs(r, out.as_mut_ptr(), 8);
        assert_eq!(out[7], -1.0);
        oc_multivector_coeffs(k, out.as_mut_ptr(), 8);
        assert_eq!(out[7], 1.0);

        let mut d = ptr::null_mut();
        let mut small = [0.0; 4];
        small[0] = 1.0;
        assert_eq!(oc_multivector_new(2, small.as_ptr(), 4, &mut d), OcStatus::Ok);
        let mut e = ptr::null_mut();
        assert_eq!(oc_multivector_product(a, d, &mut e), OcStatus::DimensionMismatch);
        assert!(e.is_null());
        assert_eq!(oc_multivector_new(3, p.as_ptr(), 5, &mut e), OcStatus::DimensionMismatch);

        for h in [a, b, c, r, k, d] {
            oc_multivector_free(h);
        }
        oc_multivector_free(ptr::null_mut());
    }
}

#[test]
fn catalog_map_analysis_returns_json() {
    unsafe {
        let name = CString::new("oct-inversion").unwrap();
        let mut map = ptr::null_mut();
        assert_eq!(oc_map_from_catalog(name.as_ptr(), 0, &mut map), OcStatus::Ok);
        let mut dim = 0;
        assert_eq!(oc_map_dim(map, &mut dim), OcStatus::Ok);
        assert_eq!(dim, 8);

        let z = [2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let mut w = [0.0; 8];
        assert_eq!(oc_map_eval(map, z.as_ptr(), 8, w.as_mut_ptr()), OcStatus::Ok);
        assert_eq!(w[0], 0.5);
        let origin = [0.0; 8];
        assert_eq!(oc_map_eval(map, origin.as_ptr(), 8, w.as_mut_ptr()), OcStatus::Pole);

        let mut json = ptr::null_mut();
        assert_eq!(oc_map_analyze(map, 12, 7, 4, &mut json), OcStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        oc_string_free(json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["summary"]["counts"]["conformal"], 12);
        assert_eq!(v["sampling"]["seed"], 7);

        // Same seed, same bytes.
        let mut again = ptr::null_mut();
        oc_map_analyze(map, 12, 7, 4, &mut again);
        assert_eq!(CStr::from_ptr(again).to_str().unwrap(), text);
        oc_string_free(again);
        oc_map_free(map);

        let bad = CString::new("no-such-map").unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(oc_map_from_catalog(bad.as_ptr(), 0, &mut none), OcStatus::NotFound);
        assert!(none.is_null());
        assert!(last_error().contains("no-such-map"));
    }
}

#[test]
fn config_maps() {
    unsafe {
        let json = CString::new(
            r#"[{"name": "a", "algebra": "clifford", "n": 2, "word": [{"op": "inversion"}]},
                {"name": "b", "algebra": "octonion", "word": [{"op": "dilate", "t": 2}]}]"#,
        )
        .unwrap();
        let mut map = ptr::null_mut();
        assert_eq!(oc_map_from_config(json.as_ptr(), ptr::null(), &mut map), OcStatus::InvalidArgument);
        let a = CString::new("a").unwrap();
        assert_eq!(oc_map_from_config(json.as_ptr(), a.as_ptr(), &mut map), OcStatus::Ok);
        let mut dim = 0;
        oc_map_dim(map, &mut dim);
        assert_eq!(dim, 3);
        let z = [0.0, 2.0, 0.0];
        let mut w = [0.0; 3];
        assert_eq!(oc_map_eval(map, z.as_ptr(), 3, w.as_mut_ptr()), OcStatus::Ok);
        // (2 e1)^-1 = -e1 / 2.
        assert_eq!(w, [0.0, -0.5, 0.0]);
        assert_eq!(oc_map_eval(map, z.as_ptr(), 8, w.as_mut_ptr()), OcStatus::DimensionMismatch);
        oc_map_free(map);

        let broken = CString::new(r#"{"name": "x", "algebra": "octonion", "spin": 1}"#).unwrap();
        assert_eq!(oc_map_from_config(broken.as_ptr(), ptr::null(), &mut map), OcStatus::Config);
    }
}

#[test]
fn version_is_a_c_string() {
    let v = unsafe { CStr::from_ptr(oc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
