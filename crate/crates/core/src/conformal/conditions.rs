use serde::{Deserialize, Serialize};

use super::algebra::Algebra;
use super::jacobian::JacobianSample;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Conformal,
    NonConformal,
    /// `df/dx0` vanishes; no verdict is given.
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConformalityCheck {
    pub verdict: Verdict,
    /// Present iff the verdict is conformal.
    pub lambda: Option<f64>,
    /// `max_i ||df/dx0| - |df/dxi|| / |df/dx0|`.
    pub residual_norm_eq: f64,
    /// `max_{i != j} |<df/dxi, df/dxj>| / |df/dx0|^2`.
    pub residual_orth: f64,
}

/// Pointwise conformality test: equal partial norms and pairwise orthogonal
/// partials, both relative to the scale `|df/dx0|`. Degeneracy is checked
/// first: `|df/dx0| <= max(singular_eps, tol * max_i |df/dxi|)`.
pub fn check_conformality_conditions<A: Algebra>(
    alg: &A,
    sample: &JacobianSample<A::Elem>,
    tol: f64,
    singular_eps: f64,
) -> ConformalityCheck {
    let d = &sample.partials;
    let norms: Vec<f64> = d.iter().map(|p| alg.norm(p)).collect();
    let s0 = norms[0];
    let largest = norms.iter().copied().fold(0.0, f64::max);
    if !(s0 > singular_eps.max(tol * largest)) {
        return ConformalityCheck {
            verdict: Verdict::Degenerate,
            lambda: None,
            residual_norm_eq: f64::NAN,
            residual_orth: f64::NAN,
        };
    }

    let residual_norm_eq = norms[1..]
        .iter()
        .map(|ni| (s0 - ni).abs() / s0)
        .fold(0.0, f64::max);
    let mut orth: f64 = 0.0;
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            orth = orth.max(alg.dot(&d[i], &d[j]).abs());
        }
    }
    let residual_orth = orth / (s0 * s0);

    let conformal = residual_norm_eq <= tol && residual_orth <= tol;
    let lambda = norms.iter().map(|x| x * x).sum::<f64>() / norms.len() as f64;
    ConformalityCheck {
        verdict: if conformal { Verdict::Conformal } else { Verdict::NonConformal },
        lambda: conformal.then_some(lambda),
        residual_norm_eq,
        residual_orth,
    }
}
