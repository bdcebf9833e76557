use serde::{Deserialize, Serialize};

use super::algebra::Algebra;
use super::frame::StructuralFrame;
use super::jacobian::{directional_difference, finite_difference_partials, JacobianSample, PartialsSource};
use super::map::MapUnderTest;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferentialIdentity {
    /// `max_d |sum_i (df/dxi) d_i - (d_0 + sum_k Psi_k d_k)(df/dx0)|`.
    pub algebraic_residual: f64,
    /// Same comparison with `df(d)` taken as a directional difference of `f`.
    pub directional_residual: f64,
    /// Richardson estimate of the discretisation error in that comparison,
    /// plus a rounding floor.
    pub error_estimate: f64,
}

/// `dz^[Psi] = d_0 + sum_k Psi_k d_k`.
pub fn frame_differential<A: Algebra>(alg: &A, frame: &StructuralFrame<A::Elem>, d: &[f64]) -> A::Elem {
    let mut acc = alg.scale(&alg.unit(0), d[0]);
    for (psi, &dk) in frame.psis.iter().zip(&d[1..]) {
        acc = alg.add(&acc, &alg.scale(psi, dk));
    }
    acc
}

fn linear_form<A: Algebra>(alg: &A, partials: &[A::Elem], d: &[f64]) -> A::Elem {
    partials
        .iter()
        .zip(d)
        .fold(alg.zero(), |acc, (p, &di)| alg.add(&acc, &alg.scale(p, di)))
}

/// Checks `df = dz^[Psi] (df/dx0)` along each direction, parenthesised as
/// written. The directional part needs the sample's step; synthetic samples
/// (step 0) only get the algebraic comparison.
pub fn check_differential_identity<A: Algebra>(
    f: &MapUnderTest<A>,
    sample: &JacobianSample<A::Elem>,
    frame: &StructuralFrame<A::Elem>,
    directions: &[Vec<f64>],
) -> Result<DifferentialIdentity> {
    let alg = &f.algebra;
    let z = &sample.point;
    let d0 = &sample.partials[0];
    for d in directions {
        if d.len() != alg.dim() {
            return Err(Error::DimensionMismatch { left: alg.dim(), right: d.len() });
        }
    }

    let mut algebraic: f64 = 0.0;
    let mut rhs_all = Vec::with_capacity(directions.len());
    for d in directions {
        let rhs = alg.mul(&frame_differential(alg, frame, d), d0);
        let lhs = linear_form(alg, &sample.partials, d);
        algebraic = algebraic.max(alg.norm(&alg.sub(&lhs, &rhs)));
        rhs_all.push(rhs);
    }

    let h = sample.step;
    if !(h > 0.0) {
        return Ok(DifferentialIdentity {
            algebraic_residual: algebraic,
            directional_residual: f64::NAN,
            error_estimate: f64::NAN,
        });
    }

    let order = sample.scheme.order() as i32;
    let richardson = 1.0 / (1.0 - 2f64.powi(-order));
    let fine = match sample.source {
        PartialsSource::FiniteDifference => Some(finite_difference_partials(f, z, 0.5 * h, sample.scheme)?),
        PartialsSource::Analytic => None,
    };
    let fz = f.eval(z)?;
    let dmax = sample.partials.iter().map(|p| alg.norm(p)).fold(0.0, f64::max);
    let znorm = z.iter().map(|x| x * x).sum::<f64>().sqrt();
    let floor = 8.0 * f64::EPSILON * (alg.norm(&fz) + znorm * dmax).max(1.0) / h;

    let mut directional: f64 = 0.0;
    let mut estimate: f64 = 0.0;
    for (d, rhs) in directions.iter().zip(&rhs_all) {
        let df = directional_difference(f, z, d, h, sample.scheme)?;
        let df_fine = directional_difference(f, z, d, 0.5 * h, sample.scheme)?;
        directional = directional.max(alg.norm(&alg.sub(&df, rhs)));
        let mut est = richardson * alg.norm(&alg.sub(&df, &df_fine));
        if let Some(fine) = &fine {
            let rhs_fine = linear_form(alg, fine, d);
            let rhs_coarse = linear_form(alg, &sample.partials, d);
            est += richardson * alg.norm(&alg.sub(&rhs_coarse, &rhs_fine));
        }
        let dn = d.iter().map(|x| x * x).sum::<f64>().sqrt();
        estimate = estimate.max(est + floor * dn.max(1.0));
    }

    Ok(DifferentialIdentity {
        algebraic_residual: algebraic,
        directional_residual: directional,
        error_estimate: estimate,
    })
}
