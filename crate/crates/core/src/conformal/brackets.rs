use serde::{Deserialize, Serialize};

use super::algebra::{Algebra, AlgebraKind};
use super::frame::StructuralFrame;
use crate::clifford::Multivector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameGrade {
    Octonionic,
    PureVector,
    PureBivector,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketReport {
    pub grade: FrameGrade,
    /// Max `|{a_i, a_j}|` over `i != j`, on the grade-1 parts for Clifford
    /// frames and on the full entries for octonionic ones.
    pub max_anticommutator: f64,
    /// Max `|[b_i, b_j]|` over `i != j`, on the grade-2 parts (Clifford only).
    pub max_commutator: f64,
    /// Whether the bracket matching the frame's grade vanishes; `None` for
    /// mixed-grade frames, where neither is expected to.
    pub relation_holds: Option<bool>,
}

fn max_pairwise<E, F>(items: &[E], bracket: F) -> f64
where
    F: Fn(&E, &E) -> f64,
{
    let mut m: f64 = 0.0;
    for i in 0..items.len() {
        for j in 0..items.len() {
            if i != j {
                m = m.max(bracket(&items[i], &items[j]));
            }
        }
    }
    m
}

pub fn bracket_check<A: Algebra>(alg: &A, frame: &StructuralFrame<A::Elem>, tol: f64) -> BracketReport {
    let anti = |a: &A::Elem, b: &A::Elem| alg.norm(&alg.add(&alg.mul(a, b), &alg.mul(b, a)));
    match alg.kind() {
        AlgebraKind::Octonion => {
            let m = max_pairwise(&frame.psis, anti);
            BracketReport {
                grade: FrameGrade::Octonionic,
                max_anticommutator: m,
                max_commutator: f64::NAN,
                relation_holds: Some(m <= tol),
            }
        }
        AlgebraKind::CliffordParavector => {
            let mvs: Vec<Multivector> = frame
                .psis
                .iter()
                .map(|p| {
                    let c = alg.coefficients(p);
                    let n = c.len().trailing_zeros() as usize;
                    Multivector::new(n, c).expect("frame entry is a multivector")
                })
                .collect();
            clifford_brackets(&mvs, tol)
        }
    }
}

/// Bracket report for a list of Clifford frame entries.
pub fn clifford_brackets(psis: &[Multivector], tol: f64) -> BracketReport {
    let vecs: Vec<Multivector> = psis.iter().map(|p| p.grade_project(1).expect("grade 1")).collect();
    let bivs: Vec<Multivector> = psis
        .iter()
        .map(|p| {
            if p.n() >= 2 {
                p.grade_project(2).expect("grade 2")
            } else {
                Multivector::zero(p.n()).expect("n")
            }
        })
        .collect();
    let max_anticommutator = max_pairwise(&vecs, |a, b| (&(a * b) + &(b * a)).norm());
    let max_commutator = max_pairwise(&bivs, |a, b| (&(a * b) - &(b * a)).norm());

    let pure = |keep: &[usize]| psis.iter().all(|p| p.norm_outside_grades(keep) <= tol);
    let (grade, relation_holds) = if pure(&[1]) {
        (FrameGrade::PureVector, Some(max_anticommutator <= tol))
    } else if pure(&[2]) {
        (FrameGrade::PureBivector, Some(max_commutator <= tol))
    } else {
        (FrameGrade::Mixed, None)
    };
    BracketReport { grade, max_anticommutator, max_commutator, relation_holds }
}
