use serde::Serialize;

use super::algebra::{Algebra, AlgebraKind};
use super::jacobian::JacobianSample;
use crate::clifford::SpinVerdict;
use crate::error::{Error, Result};

/// `Psi_k = (df/dxk)(df/dx0)^{-1}`, `k = 1..n`, with its residuals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructuralFrame<E> {
    pub psis: Vec<E>,
    /// `max_k |Re Psi_k|` resp. `max_k |Sc Psi_k|`.
    pub residual_re: f64,
    /// `max_{i,j} |<Psi_i, Psi_j> - delta_ij|`.
    pub residual_orth: f64,
    /// `max_k ||Psi_k| - 1|`.
    pub residual_unit: f64,
    /// Per-entry structure flags (Clifford case only).
    pub spin: Vec<SpinVerdict>,
    pub accepted: bool,
}

impl<E> StructuralFrame<E> {
    /// Unchecked frame; call [`verify_frame_properties`] to fill residuals.
    pub fn new(psis: Vec<E>) -> Self {
        Self {
            psis,
            residual_re: f64::NAN,
            residual_orth: f64::NAN,
            residual_unit: f64::NAN,
            spin: Vec::new(),
            accepted: false,
        }
    }
}

pub fn extract_structural_frame<A: Algebra>(
    alg: &A,
    sample: &JacobianSample<A::Elem>,
    singular_eps: f64,
    tol: f64,
) -> Result<StructuralFrame<A::Elem>> {
    let d0 = &sample.partials[0];
    let inv = alg.invert(d0, singular_eps).map_err(|e| match e {
        Error::Singular { norm } => Error::SingularDerivative { norm },
        other => other,
    })?;
    let psis = sample.partials[1..].iter().map(|dk| alg.mul(dk, &inv)).collect();
    Ok(verify_frame_properties(alg, StructuralFrame::new(psis), tol))
}

/// Fills residuals and structure flags. Accepted iff the real-part and
/// orthonormality residuals are within `tol` and, for Clifford frames,
/// every entry passes the spin checks.
pub fn verify_frame_properties<A: Algebra>(
    alg: &A,
    mut frame: StructuralFrame<A::Elem>,
    tol: f64,
) -> StructuralFrame<A::Elem> {
    let psis = &frame.psis;
    frame.residual_re = psis.iter().map(|p| alg.re(p).abs()).fold(0.0, f64::max);
    frame.residual_unit = psis.iter().map(|p| (alg.norm(p) - 1.0).abs()).fold(0.0, f64::max);
    let mut orth: f64 = 0.0;
    for (i, a) in psis.iter().enumerate() {
        for (j, b) in psis.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            orth = orth.max((alg.dot(a, b) - target).abs());
        }
    }
    frame.residual_orth = orth;
    frame.spin = psis.iter().filter_map(|p| alg.frame_structure(p, tol)).collect();
    let spin_ok = match alg.kind() {
        AlgebraKind::Octonion => true,
        AlgebraKind::CliffordParavector => frame.spin.iter().all(SpinVerdict::all_pass),
    };
    frame.accepted = frame.residual_re <= tol && frame.residual_orth <= tol && spin_ok;
    frame
}

/// Coefficient sup-norm distance of each `Psi_k` from `e_k`.
pub fn distance_from_standard<A: Algebra>(alg: &A, frame: &StructuralFrame<A::Elem>) -> f64 {
    frame
        .psis
        .iter()
        .enumerate()
        .map(|(k, p)| alg.max_abs_diff(p, &alg.unit(k + 1)))
        .fold(0.0, f64::max)
}
