use serde::{Deserialize, Serialize};

use super::algebra::Algebra;
use super::conditions::{check_conformality_conditions, Verdict};
use super::frame::{distance_from_standard, extract_structural_frame, StructuralFrame};
use super::jacobian::numeric_jacobian;
use super::map::MapUnderTest;
use crate::error::{Error, Result};
use crate::tolerance::NumericPolicy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameClass {
    /// `Psi_k = e_k` everywhere.
    StandardConstant,
    Constant,
    NonConstant,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExcludedPoint {
    pub index: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstancySummary {
    /// Max over point pairs and k of the coefficient sup-norm of `Psi_k(z) - Psi_k(z')`.
    pub frame_variation: f64,
    /// Max over points and k of the sup-norm of `Psi_k(z) - e_k`.
    pub distance_from_standard: f64,
    pub class: FrameClass,
    pub points_used: usize,
    pub excluded: Vec<ExcludedPoint>,
}

/// Variation across frames, computed per coefficient as `max - min`
/// (equal to the max over pairs of the pairwise sup-norm).
pub fn frame_variation<A: Algebra>(alg: &A, frames: &[&StructuralFrame<A::Elem>]) -> f64 {
    let Some(first) = frames.first() else { return 0.0 };
    let mut var: f64 = 0.0;
    for k in 0..first.psis.len() {
        let coeffs: Vec<Vec<f64>> = frames.iter().map(|f| alg.coefficients(&f.psis[k])).collect();
        for c in 0..coeffs[0].len() {
            let (lo, hi) = coeffs
                .iter()
                .map(|v| v[c])
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
            var = var.max(hi - lo);
        }
    }
    var
}

pub fn classify<A: Algebra>(alg: &A, frames: &[&StructuralFrame<A::Elem>], tol: f64) -> (f64, f64, FrameClass) {
    let variation = frame_variation(alg, frames);
    let dist = frames.iter().map(|f| distance_from_standard(alg, f)).fold(0.0, f64::max);
    let class = if variation > tol {
        FrameClass::NonConstant
    } else if dist <= tol {
        FrameClass::StandardConstant
    } else {
        FrameClass::Constant
    };
    (variation, dist, class)
}

/// Extracts frames at every point and classifies their constancy.
/// Degenerate or failing points are excluded and listed.
pub fn frame_constancy_analysis<A: Algebra>(
    f: &MapUnderTest<A>,
    points: &[Vec<f64>],
    policy: &NumericPolicy,
) -> Result<ConstancySummary> {
    if points.len() < 2 {
        return Err(Error::InvalidInput("frame constancy needs at least two points".into()));
    }
    let alg = &f.algebra;
    let mut frames = Vec::new();
    let mut excluded = Vec::new();
    for (index, z) in points.iter().enumerate() {
        let znorm = z.iter().map(|x| x * x).sum::<f64>().sqrt();
        let outcome = numeric_jacobian(f, z, policy.step_for(znorm), policy.scheme, policy.use_analytic)
            .and_then(|s| {
                let check = check_conformality_conditions(alg, &s, policy.derivative_tol, policy.singular_eps);
                if check.verdict == Verdict::Degenerate {
                    return Err(Error::SingularDerivative { norm: alg.norm(&s.partials[0]) });
                }
                extract_structural_frame(alg, &s, policy.singular_eps, policy.derivative_tol)
            });
        match outcome {
            Ok(fr) => frames.push(fr),
            Err(e) => excluded.push(ExcludedPoint { index, reason: e.to_string() }),
        }
    }
    if frames.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "only {} non-degenerate point(s) left for frame constancy",
            frames.len()
        )));
    }
    let refs: Vec<&StructuralFrame<A::Elem>> = frames.iter().collect();
    let (frame_variation, distance_from_standard, class) = classify(alg, &refs, policy.derivative_tol);
    Ok(ConstancySummary {
        frame_variation,
        distance_from_standard,
        class,
        points_used: frames.len(),
        excluded,
    })
}
