//! Numerical conformality analysis: partial derivatives, the pointwise
//! conformality test, structural frames `Psi_k = (df/dxk)(df/dx0)^{-1}`,
//! bracket relations, the differential identity and frame constancy.

mod algebra;
mod brackets;
mod conditions;
mod constancy;
mod differential;
mod frame;
mod jacobian;
mod map;
mod report;

pub use algebra::{Algebra, AlgebraKind, OctonionAlgebra, ParavectorAlgebra};
pub use brackets::{bracket_check, clifford_brackets, BracketReport, FrameGrade};
pub use conditions::{check_conformality_conditions, ConformalityCheck, Verdict};
pub use constancy::{classify, frame_constancy_analysis, frame_variation, ConstancySummary, ExcludedPoint, FrameClass};
pub use differential::{check_differential_identity, frame_differential, DifferentialIdentity};
pub use frame::{distance_from_standard, extract_structural_frame, verify_frame_properties, StructuralFrame};
pub use jacobian::{directional_difference, finite_difference_partials, numeric_jacobian, JacobianSample, PartialsSource};
pub use map::MapUnderTest;
pub use report::{analyze, frame_at, FramePrintout, ConformalityReport, Counts, PointRecord, PointVerdict, Residuals, Summary, SCHEMA_VERSION};
