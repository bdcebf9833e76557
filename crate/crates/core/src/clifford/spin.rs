use serde::{Deserialize, Serialize};

use super::multivector::Multivector;

/// Necessary conditions for a structural-frame element: grades in {0, 1, 2},
/// `a conj(a) = 1` and `Sc(a) = 0`. This does not decide membership in the
/// spin group, it only rules elements out.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinVerdict {
    pub grades_ok: bool,
    pub unit_norm: bool,
    pub scalar_free: bool,
    /// Norm of the content in grades >= 3.
    pub outside_grade_residual: f64,
    /// Max coefficient deviation of `a conj(a)` from the scalar 1.
    pub norm_residual: f64,
    pub scalar_residual: f64,
}

impl SpinVerdict {
    pub fn all_pass(&self) -> bool {
        self.grades_ok && self.unit_norm && self.scalar_free
    }
}

pub fn verify_spin_structure(a: &Multivector, tol: f64) -> SpinVerdict {
    let outside = a.norm_outside_grades(&[0, 1, 2]);
    let aa = a.geometric_product(&a.conjugate()).expect("same algebra");
    let mut norm_residual = (aa.get(0) - 1.0).abs();
    for &c in &aa.coeffs()[1..] {
        norm_residual = norm_residual.max(c.abs());
    }
    let scalar_residual = a.scalar_part().abs();
    SpinVerdict {
        grades_ok: outside <= tol,
        unit_norm: norm_residual <= tol,
        scalar_free: scalar_residual <= tol,
        outside_grade_residual: outside,
        norm_residual,
        scalar_residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Paravector;

    #[test]
    fn unit_vector_passes() {
        let v = verify_spin_structure(&Multivector::generator(3, 1).unwrap(), 1e-12);
        assert!(v.all_pass());
    }

    #[test]
    fn product_of_unit_paravectors_passes_grade_and_norm() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = Paravector::new(3, vec![s, s, 0.0, 0.0]).unwrap().to_multivector();
        let q = Paravector::new(3, vec![s, 0.0, -s, 0.0]).unwrap().to_multivector();
        let v = verify_spin_structure(&(&p * &q), 1e-12);
        assert!(v.grades_ok && v.unit_norm);
        assert!(!v.scalar_free);
    }

    #[test]
    fn trivector_fails_grade_check() {
        let t = Multivector::from_generators(3, &[1, 2, 3]).unwrap();
        let v = verify_spin_structure(&t, 1e-12);
        assert!(!v.grades_ok);
        assert!(v.unit_norm);
    }
}
