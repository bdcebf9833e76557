//! Products of paravectors: inversion and recovery of a factorization.
//!
//! For `x = p1 ... pk` the map `z -> x z x* / (x conj(x))` is a rotation of
//! the paravector space `R^{n+1}`. Factorization decomposes that rotation
//! into one rotation in a plane through `1` (a single paravector) followed
//! by pairs of hyperplane reflections of the vector part (pairs of unit
//! vectors), then fixes the overall scalar and verifies the reconstruction.

use super::multivector::Multivector;
use super::paravector::{product, Paravector};
use crate::error::{Error, Result};

/// `x conj(x)` must be a positive scalar; returns it.
pub fn squared_norm_scalar(x: &Multivector, tol: f64) -> Result<f64> {
    let xx = x.geometric_product(&x.conjugate())?;
    let s = xx.get(0);
    let rest = xx.coeffs()[1..].iter().map(|c| c.abs()).fold(0.0, f64::max);
    if rest > tol * s.abs().max(f64::MIN_POSITIVE) {
        return Err(Error::InvalidInput(format!(
            "x conj(x) is not scalar (non-scalar part {rest:e}, scalar {s:e})"
        )));
    }
    Ok(s)
}

/// Inverse `conj(x) / (x conj(x))` of a product of paravectors.
pub fn versor_inverse(x: &Multivector, eps: f64, tol: f64) -> Result<Multivector> {
    let s = squared_norm_scalar(x, tol)?;
    if !(s > eps * eps) {
        return Err(Error::Singular { norm: s.max(0.0).sqrt() });
    }
    Ok(x.conjugate().scale(1.0 / s))
}

/// Matrix of `z -> x z x* / N` on `R^{n+1}` (column j is the image of `e_j`),
/// or `None` if some image leaves the paravector space.
pub fn rotation_matrix(x: &Multivector, tol: f64) -> Option<Vec<Vec<f64>>> {
    let n = x.n();
    let norm = squared_norm_scalar(x, tol).ok()?;
    if !(norm > 0.0) {
        return None;
    }
    let xr = x.reversion();
    let mut cols = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let e = Paravector::unit(n, j).ok()?.to_multivector();
        let img = (&(x * &e) * &xr).scale(1.0 / norm);
        if img.norm_outside_grades(&[0, 1]) > tol {
            return None;
        }
        cols.push(Paravector::project(&img).into_coeffs());
    }
    Some(cols)
}

/// Recovers `x = c * p * u1 * ... * uk` with `p` a unit paravector and `ui`
/// unit vectors, folding `c` into the first factor. Returns `None` if `x` is
/// not (numerically) a product of paravectors at relative tolerance `tol`.
pub fn factor_paravector_product(x: &Multivector, tol: f64) -> Option<Vec<Paravector>> {
    let n = x.n();
    let xnorm = x.coeffs().iter().map(|c| c * c).sum::<f64>().sqrt();
    if xnorm == 0.0 {
        return Some(vec![Paravector::zero(n)]);
    }
    let rot = rotation_matrix(x, tol)?;

    // Rotation in the plane (1, r) taking 1 to r = R(1).
    let r = Paravector::new(n, rot[0].clone()).ok()?;
    let one_plus_r = r.add(&Paravector::scalar(n, 1.0)).ok()?;
    let p = if one_plus_r.norm() > 1e-8 {
        one_plus_r.normalized(0.0).ok()?
    } else if n >= 1 {
        Paravector::unit(n, 1).ok()?
    } else {
        // Cl_0: x is a real number.
        return Some(vec![Paravector::scalar(0, x.get(0))]);
    };

    // Q = R_p^{-1} o R fixes 1; its vector block is orthogonal.
    let pbar = p.conjugate().to_multivector();
    let mut q = vec![vec![0.0; n]; n];
    for j in 1..=n {
        let col = Paravector::new(n, rot[j].clone()).ok()?.to_multivector();
        let img = &(&pbar * &col) * &pbar;
        for i in 1..=n {
            q[i - 1][j - 1] = img.get(1 << (i - 1));
        }
    }

    // Householder sweep: H_k ... H_1 Q = I, so Q = H_1 ... H_k.
    let mut reflections: Vec<Vec<f64>> = Vec::new();
    for col in 0..n {
        let mut w: Vec<f64> = (0..n).map(|i| q[i][col]).collect();
        w[col] -= 1.0;
        let wn = w.iter().map(|v| v * v).sum::<f64>().sqrt();
        if wn <= 1e-12 {
            continue;
        }
        let u: Vec<f64> = w.iter().map(|v| v / wn).collect();
        for j in 0..n {
            let d: f64 = (0..n).map(|i| u[i] * q[i][j]).sum();
            for i in 0..n {
                q[i][j] -= 2.0 * d * u[i];
            }
        }
        reflections.push(u);
    }

    let mut factors = vec![p];
    for u in reflections {
        let mut c = vec![0.0; n + 1];
        c[1..].copy_from_slice(&u);
        factors.push(Paravector::new(n, c).ok()?);
    }
    let y = product(n, &factors).ok()?;
    let yy = y.scalar_product(&y).ok()?;
    let c = x.scalar_product(&y).ok()? / yy;
    if (x - &y.scale(c)).norm() > tol * xnorm {
        return None;
    }
    factors[0] = factors[0].scale(c);
    Some(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(c: &[f64]) -> Paravector {
        Paravector::new(c.len() - 1, c.to_vec()).unwrap()
    }

    fn check_factorization(x: &Multivector) {
        let f = factor_paravector_product(x, 1e-9).expect("factorization");
        let y = product(x.n(), &f).unwrap();
        assert!(y.max_abs_diff(x) < 1e-9 * x.max_abs().max(1.0), "{x} vs {y}");
    }

    #[test]
    fn factors_single_paravectors() {
        check_factorization(&pv(&[0.3, -1.0, 2.0, 0.5]).to_multivector());
        check_factorization(&pv(&[-2.0, 0.0, 0.0, 0.0]).to_multivector());
        check_factorization(&pv(&[0.0, 0.0, 1.0, 0.0]).to_multivector());
    }

    #[test]
    fn factors_products_of_paravectors() {
        let a = pv(&[0.3, -1.0, 2.0, 0.5, 1.0]);
        let b = pv(&[1.0, 0.2, -0.7, 0.0, 0.4]);
        let c = pv(&[-0.5, 0.0, 1.1, 2.0, -1.0]);
        check_factorization(&product(4, &[a.clone(), b.clone()]).unwrap());
        check_factorization(&product(4, &[a, b, c]).unwrap());
    }

    #[test]
    fn rejects_non_versors() {
        let x = &Multivector::scalar(3, 1.0).unwrap() + &Multivector::blade(3, 0b111).unwrap();
        assert!(factor_paravector_product(&x, 1e-9).is_none());
    }

    #[test]
    fn every_nonzero_quaternion_factors_in_cl2() {
        let y = Multivector::new(2, vec![1.0, 1.0, 0.0, 0.1]).unwrap();
        check_factorization(&y);
    }

    #[test]
    fn zero_factors_to_zero() {
        let f = factor_paravector_product(&Multivector::zero(3).unwrap(), 1e-9).unwrap();
        assert_eq!(f, vec![Paravector::zero(3)]);
    }

    #[test]
    fn versor_inverse_of_product() {
        let x = product(3, &[pv(&[1.0, 1.0, 0.0, 0.0]), pv(&[0.0, 0.0, 2.0, 1.0])]).unwrap();
        let inv = versor_inverse(&x, 1e-12, 1e-12).unwrap();
        let one = Multivector::scalar(3, 1.0).unwrap();
        assert!((&x * &inv).max_abs_diff(&one) < 1e-15);
        assert!(versor_inverse(&Multivector::zero(3).unwrap(), 1e-12, 1e-12).is_err());
    }
}
