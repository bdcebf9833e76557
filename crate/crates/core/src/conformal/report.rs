//! Whole-sample analysis and its JSON/CSV serialisation.

use rayon::prelude::*;
use serde::Serialize;

use super::algebra::Algebra;
use super::brackets::{bracket_check, BracketReport};
use super::conditions::{check_conformality_conditions, Verdict};
use super::constancy::{classify, FrameClass};
use super::differential::check_differential_identity;
use super::frame::{extract_structural_frame, StructuralFrame};
use super::jacobian::{numeric_jacobian, PartialsSource};
use super::map::MapUnderTest;
use crate::clifford::SpinVerdict;
use crate::error::Result;
use crate::numfmt::{fmt_num, to_json_string};
use crate::sampling::SamplingSpec;
use crate::tolerance::{NumericPolicy, Scheme};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointVerdict {
    Conformal,
    NonConformal,
    Degenerate,
    Error,
}

impl From<Verdict> for PointVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Conformal => PointVerdict::Conformal,
            Verdict::NonConformal => PointVerdict::NonConformal,
            Verdict::Degenerate => PointVerdict::Degenerate,
        }
    }
}

impl PointVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            PointVerdict::Conformal => "conformal",
            PointVerdict::NonConformal => "non-conformal",
            PointVerdict::Degenerate => "degenerate",
            PointVerdict::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residuals {
    pub norm_eq: Option<f64>,
    pub orth_partials: Option<f64>,
    pub frame_re: Option<f64>,
    pub frame_orth: Option<f64>,
    pub frame_unit: Option<f64>,
    pub diff_identity: Option<f64>,
    pub diff_identity_algebraic: Option<f64>,
    pub diff_error_estimate: Option<f64>,
    pub fd_discrepancy: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointRecord {
    pub index: usize,
    pub z: Vec<f64>,
    pub verdict: PointVerdict,
    pub lambda: Option<f64>,
    pub df_dx0_norm_sqr: Option<f64>,
    pub psi: Option<Vec<Vec<f64>>>,
    pub frame_accepted: Option<bool>,
    pub spin: Option<Vec<SpinVerdict>>,
    pub brackets: Option<BracketReport>,
    pub residuals: Residuals,
    pub partials: Option<PartialsSource>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counts {
    pub conformal: usize,
    pub non_conformal: usize,
    pub degenerate: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    /// `None` when any sampled point is degenerate or failed to evaluate.
    pub conformal_everywhere: Option<bool>,
    pub all_nondegenerate_conformal: bool,
    pub frame_constant: Option<bool>,
    pub frame_class: Option<FrameClass>,
    pub frame_variation: Option<f64>,
    pub distance_from_standard: Option<f64>,
    pub max_residual_norm_eq: Option<f64>,
    pub max_residual_orth: Option<f64>,
    pub max_frame_re: Option<f64>,
    pub max_frame_orth: Option<f64>,
    pub max_diff_identity: Option<f64>,
    pub counts: Counts,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConformalityReport {
    pub schema: u32,
    pub map_label: String,
    pub algebra: &'static str,
    pub n: usize,
    pub sampling: Option<SamplingSpec>,
    pub step: Option<f64>,
    pub tol: f64,
    pub scheme: Scheme,
    pub points: Vec<PointRecord>,
    pub summary: Summary,
}

/// A per-point result that keeps the typed frame for later aggregation.
struct PointOutcome<E> {
    record: PointRecord,
    frame: Option<StructuralFrame<E>>,
}

fn opt_max(it: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    it.flatten().filter(|x| x.is_finite()).fold(None, |m, x| Some(m.map_or(x, |m: f64| m.max(x))))
}

fn analyze_point<A: Algebra>(
    f: &MapUnderTest<A>,
    index: usize,
    z: &[f64],
    policy: &NumericPolicy,
    directions: &[Vec<f64>],
) -> PointOutcome<A::Elem> {
    let alg = &f.algebra;
    let mut record = PointRecord {
        index,
        z: z.to_vec(),
        verdict: PointVerdict::Error,
        lambda: None,
        df_dx0_norm_sqr: None,
        psi: None,
        frame_accepted: None,
        spin: None,
        brackets: None,
        residuals: Residuals {
            norm_eq: None,
            orth_partials: None,
            frame_re: None,
            frame_orth: None,
            frame_unit: None,
            diff_identity: None,
            diff_identity_algebraic: None,
            diff_error_estimate: None,
            fd_discrepancy: None,
        },
        partials: None,
        error: None,
    };
    let run = |record: &mut PointRecord| -> Result<Option<StructuralFrame<A::Elem>>> {
        let znorm = z.iter().map(|x| x * x).sum::<f64>().sqrt();
        let h = policy.step_for(znorm);
        let sample = numeric_jacobian(f, z, h, policy.scheme, policy.use_analytic)?;
        record.partials = Some(sample.source);
        record.residuals.fd_discrepancy = sample.fd_discrepancy;
        let check = check_conformality_conditions(alg, &sample, policy.derivative_tol, policy.singular_eps);
        record.verdict = check.verdict.into();
        if check.verdict == Verdict::Degenerate {
            return Ok(None);
        }
        record.lambda = check.lambda;
        let d0 = alg.norm(&sample.partials[0]);
        record.df_dx0_norm_sqr = Some(d0 * d0);
        record.residuals.norm_eq = Some(check.residual_norm_eq);
        record.residuals.orth_partials = Some(check.residual_orth);
        if check.verdict != Verdict::Conformal {
            return Ok(None);
        }
        let frame = extract_structural_frame(alg, &sample, policy.singular_eps, policy.derivative_tol)?;
        record.psi = Some(frame.psis.iter().map(|p| alg.coefficients(p)).collect());
        record.frame_accepted = Some(frame.accepted);
        record.residuals.frame_re = Some(frame.residual_re);
        record.residuals.frame_orth = Some(frame.residual_orth);
        record.residuals.frame_unit = Some(frame.residual_unit);
        if !frame.spin.is_empty() {
            record.spin = Some(frame.spin.clone());
        }
        record.brackets = Some(bracket_check(alg, &frame, policy.derivative_tol));
        if !directions.is_empty() {
            let di = check_differential_identity(f, &sample, &frame, directions)?;
            record.residuals.diff_identity = Some(di.directional_residual).filter(|x| x.is_finite());
            record.residuals.diff_identity_algebraic = Some(di.algebraic_residual);
            record.residuals.diff_error_estimate = Some(di.error_estimate).filter(|x| x.is_finite());
        }
        Ok(Some(frame))
    };
    match run(&mut record) {
        Ok(frame) => PointOutcome { record, frame },
        Err(e) => {
            record.verdict = PointVerdict::Error;
            record.lambda = None;
            record.error = Some(e.to_string());
            PointOutcome { record, frame: None }
        }
    }
}

/// Runs the full pipeline (partials, conditions, frame, brackets,
/// differential identity) at each point. Points are processed in parallel
/// when the map allows it; records stay in input order.
pub fn analyze<A: Algebra>(
    f: &MapUnderTest<A>,
    points: &[Vec<f64>],
    directions: &[Vec<f64>],
    policy: &NumericPolicy,
) -> ConformalityReport {
    let outcomes: Vec<PointOutcome<A::Elem>> = if f.concurrent {
        points
            .par_iter()
            .enumerate()
            .map(|(i, z)| analyze_point(f, i, z, policy, directions))
            .collect()
    } else {
        points
            .iter()
            .enumerate()
            .map(|(i, z)| analyze_point(f, i, z, policy, directions))
            .collect()
    };

    let alg = &f.algebra;
    let frames: Vec<&StructuralFrame<A::Elem>> = outcomes.iter().filter_map(|o| o.frame.as_ref()).collect();
    let records: Vec<PointRecord> = outcomes.iter().map(|o| o.record.clone()).collect();

    let count = |v: PointVerdict| records.iter().filter(|r| r.verdict == v).count();
    let counts = Counts {
        conformal: count(PointVerdict::Conformal),
        non_conformal: count(PointVerdict::NonConformal),
        degenerate: count(PointVerdict::Degenerate),
        error: count(PointVerdict::Error),
    };
    let all_nondegenerate_conformal = counts.non_conformal == 0 && counts.error == 0;
    let conformal_everywhere = if counts.degenerate > 0 || counts.error > 0 {
        None
    } else {
        Some(counts.non_conformal == 0)
    };
    let (frame_variation, distance_from_standard, frame_class) = if frames.len() >= 2 {
        let (v, d, c) = classify(alg, &frames, policy.derivative_tol);
        (Some(v), Some(d), Some(c))
    } else {
        (None, None, None)
    };

    let summary = Summary {
        conformal_everywhere,
        all_nondegenerate_conformal,
        frame_constant: frame_class.map(|c| c != FrameClass::NonConstant),
        frame_class,
        frame_variation,
        distance_from_standard,
        max_residual_norm_eq: opt_max(records.iter().map(|r| r.residuals.norm_eq)),
        max_residual_orth: opt_max(records.iter().map(|r| r.residuals.orth_partials)),
        max_frame_re: opt_max(records.iter().map(|r| r.residuals.frame_re)),
        max_frame_orth: opt_max(records.iter().map(|r| r.residuals.frame_orth)),
        max_diff_identity: opt_max(records.iter().map(|r| r.residuals.diff_identity)),
        counts,
    };

    ConformalityReport {
        schema: SCHEMA_VERSION,
        map_label: f.label.clone(),
        algebra: alg.kind().as_str(),
        n: alg.n(),
        sampling: None,
        step: policy.step,
        tol: policy.derivative_tol,
        scheme: policy.scheme,
        points: records,
        summary,
    }
}

impl ConformalityReport {
    pub fn to_json(&self) -> String {
        to_json_string(self)
    }

    /// One row per point.
    pub fn to_csv(&self) -> Result<String> {
        let dim = self.n + 1;
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = vec!["index".into(), "verdict".into(), "lambda".into()];
        header.extend((0..dim).map(|i| format!("z{i}")));
        header.extend(
            [
                "norm_eq",
                "orth_partials",
                "frame_re",
                "frame_orth",
                "diff_identity",
                "frame_accepted",
            ]
            .map(String::from),
        );
        w.write_record(&header).map_err(csv_err)?;
        let opt = |x: Option<f64>| x.map(fmt_num).unwrap_or_default();
        for r in &self.points {
            let mut row = vec![r.index.to_string(), r.verdict.as_str().to_string(), opt(r.lambda)];
            row.extend(r.z.iter().map(|x| fmt_num(*x)));
            row.push(opt(r.residuals.norm_eq));
            row.push(opt(r.residuals.orth_partials));
            row.push(opt(r.residuals.frame_re));
            row.push(opt(r.residuals.frame_orth));
            row.push(opt(r.residuals.diff_identity));
            row.push(r.frame_accepted.map(|b| b.to_string()).unwrap_or_default());
            w.write_record(&row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn csv_err(e: csv::Error) -> crate::Error {
    crate::Error::Io(e.to_string())
}

/// The frame at one point, as printed by the `frame` command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FramePrintout {
    pub schema: u32,
    pub map_label: String,
    pub algebra: &'static str,
    pub n: usize,
    pub z: Vec<f64>,
    pub step: f64,
    pub partials: PartialsSource,
    pub lambda: Option<f64>,
    pub conformal: bool,
    pub psi: Vec<Vec<f64>>,
    pub residual_re: f64,
    pub residual_orth: f64,
    pub residual_unit: f64,
    pub accepted: bool,
    pub spin: Option<Vec<SpinVerdict>>,
    pub brackets: BracketReport,
}

/// Extracts and checks the frame at `z`. A degenerate point is an error.
pub fn frame_at<A: Algebra>(f: &MapUnderTest<A>, z: &[f64], policy: &NumericPolicy) -> Result<FramePrintout> {
    let alg = &f.algebra;
    let znorm = z.iter().map(|x| x * x).sum::<f64>().sqrt();
    let sample = numeric_jacobian(f, z, policy.step_for(znorm), policy.scheme, policy.use_analytic)?;
    let check = check_conformality_conditions(alg, &sample, policy.derivative_tol, policy.singular_eps);
    if check.verdict == Verdict::Degenerate {
        return Err(crate::Error::SingularDerivative { norm: alg.norm(&sample.partials[0]) });
    }
    let frame = extract_structural_frame(alg, &sample, policy.singular_eps, policy.derivative_tol)?;
    let brackets = bracket_check(alg, &frame, policy.derivative_tol);
    Ok(FramePrintout {
        schema: SCHEMA_VERSION,
        map_label: f.label.clone(),
        algebra: alg.kind().as_str(),
        n: alg.n(),
        z: z.to_vec(),
        step: sample.step,
        partials: sample.source,
        lambda: check.lambda,
        conformal: check.verdict == Verdict::Conformal,
        psi: frame.psis.iter().map(|p| alg.coefficients(p)).collect(),
        residual_re: frame.residual_re,
        residual_orth: frame.residual_orth,
        residual_unit: frame.residual_unit,
        accepted: frame.accepted,
        spin: (!frame.spin.is_empty()).then(|| frame.spin.clone()),
        brackets,
    })
}
