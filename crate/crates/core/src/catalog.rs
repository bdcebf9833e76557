//! Built-in maps: one per Möbius case of interest plus two anisotropic
//! negative controls.

use serde::Serialize;

use crate::clifford::{Multivector, Paravector};
use crate::conformal::{
    analyze, frame_at, Algebra as _, AlgebraKind, ConformalityReport, FrameClass, FramePrintout, MapUnderTest, OctonionAlgebra,
    ParavectorAlgebra,
};
use crate::error::{Error, Result};
use crate::moebius::{Generator, MapSpec, OctonionMoebius, Rotor, VahlenMatrix, POLE_EPS};
use crate::octonion::Octonion;
use crate::tolerance::NumericPolicy;

/// Default generator count for Clifford catalog maps.
pub const DEFAULT_CLIFFORD_N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: AlgebraKind,
    pub description: &'static str,
    /// Expected pointwise verdict on the default sampling box.
    pub expect_conformal: bool,
    /// Expected frame classification (conformal maps only).
    pub expect_frame: Option<FrameClass>,
}

const fn entry(
    name: &'static str,
    algebra: AlgebraKind,
    description: &'static str,
    expect_conformal: bool,
    expect_frame: Option<FrameClass>,
) -> CatalogEntry {
    CatalogEntry { name, algebra, description, expect_conformal, expect_frame }
}

use AlgebraKind::{CliffordParavector as Cl, Octonion as Oct};
use FrameClass::{Constant, NonConstant, StandardConstant};

pub const CATALOG: [CatalogEntry; 10] = [
    entry("oct-identity", Oct, "f(z) = z", true, Some(StandardConstant)),
    entry("oct-linear", Oct, "f(z) = z a + b, a = 1 + e1, b = 1/2 + e2", true, Some(StandardConstant)),
    entry(
        "oct-moebius-word",
        Oct,
        "translate(w), dilate(2), rotate(u): f(z) = (a z + b) d^-1 with a = 2u, b = 2uw, d = u, u = (1 + e1 + e2)/sqrt(3)",
        true,
        Some(Constant),
    ),
    entry("oct-inversion", Oct, "f(z) = z^-1 = conj(z)/|z|^2", true, Some(NonConstant)),
    entry("cl-linear-real", Cl, "f(z) = 2 z + b, b = 1/2 + e1/4", true, Some(StandardConstant)),
    entry("cl-rotation", Cl, "f(z) = alpha z alpha*, alpha = (1 + e1)(1 + e2)/2", true, Some(Constant)),
    entry(
        "cl-vahlen-word",
        Cl,
        "translate(1/4 + e1/10), inversion, dilate(3/2), rotate((1 + e1)/sqrt(2)), translate(e2/2)",
        true,
        Some(NonConstant),
    ),
    entry("cl-inversion", Cl, "f(z) = z^-1 = conj(z)/|z|^2", true, Some(NonConstant)),
    entry("stretch", Oct, "f(z) = x0 + 2 x1 e1 + x2 e2 + ... + x7 e7 (negative control)", false, None),
    entry("cl-stretch", Cl, "f(z) = x0 + 2 x1 e1 + x2 e2 + ... + xn en (negative control)", false, None),
];

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

/// A map under test in either setting.
#[derive(Clone, Debug)]
pub enum AnyMap {
    Octonion(MapUnderTest<OctonionAlgebra>),
    Clifford(MapUnderTest<ParavectorAlgebra>),
}

impl AnyMap {
    pub fn label(&self) -> &str {
        match self {
            AnyMap::Octonion(m) => &m.label,
            AnyMap::Clifford(m) => &m.label,
        }
    }

    /// Number of real coordinates of a domain point.
    pub fn dim(&self) -> usize {
        match self {
            AnyMap::Octonion(_) => 8,
            AnyMap::Clifford(m) => m.algebra.n() + 1,
        }
    }

    pub fn analyze(&self, points: &[Vec<f64>], directions: &[Vec<f64>], policy: &NumericPolicy) -> ConformalityReport {
        match self {
            AnyMap::Octonion(m) => analyze(m, points, directions, policy),
            AnyMap::Clifford(m) => analyze(m, points, directions, policy),
        }
    }

    pub fn frame_at(&self, z: &[f64], policy: &NumericPolicy) -> Result<FramePrintout> {
        match self {
            AnyMap::Octonion(m) => frame_at(m, z, policy),
            AnyMap::Clifford(m) => frame_at(m, z, policy),
        }
    }

    /// Wraps a constructed Möbius map for analysis.
    pub fn from_spec(label: impl Into<String>, spec: MapSpec) -> Result<Self> {
        Ok(match spec {
            MapSpec::Octonion(t) => AnyMap::Octonion(octonion_moebius_map(label, t)),
            MapSpec::Clifford(m) => AnyMap::Clifford(vahlen_map(label, m)?),
        })
    }
}

pub fn octonion_moebius_map(label: impl Into<String>, t: OctonionMoebius) -> MapUnderTest<OctonionAlgebra> {
    MapUnderTest::new(OctonionAlgebra, label, move |z| t.eval(&Octonion::from_slice(z)?, POLE_EPS))
}

pub fn vahlen_map(label: impl Into<String>, m: VahlenMatrix) -> Result<MapUnderTest<ParavectorAlgebra>> {
    let n = m.n();
    let alg = ParavectorAlgebra::new(n)?;
    Ok(MapUnderTest::new(alg, label, move |z| {
        Ok(m.eval(&Paravector::new(n, z.to_vec())?, POLE_EPS)?.to_multivector())
    }))
}

fn oct(c: &[f64]) -> Octonion {
    let mut a = [0.0; 8];
    a[..c.len()].copy_from_slice(c);
    Octonion(a)
}

fn para(n: usize, c: &[f64]) -> Vec<f64> {
    let mut v = vec![0.0; n + 1];
    v[..c.len()].copy_from_slice(c);
    v
}

/// Parameters of `oct-linear`.
pub const OCT_LINEAR_A: [f64; 8] = [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
pub const OCT_LINEAR_B: [f64; 8] = [0.5, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0];

pub fn oct_moebius_word() -> Vec<Generator> {
    let s = 1.0 / 3f64.sqrt();
    vec![
        Generator::Translate { w: oct(&[0.0, 0.25, 0.0, -0.5, 0.0, 0.0, 0.0, 0.1]).0.to_vec() },
        Generator::Dilate { t: 2.0 },
        Generator::Rotate { u: Rotor::Single(oct(&[s, s, s]).0.to_vec()) },
    ]
}

pub fn cl_rotation_word(n: usize) -> Vec<Generator> {
    vec![Generator::Rotate { u: Rotor::Factors(vec![para(n, &[1.0, 1.0]), para(n, &[1.0, 0.0, 1.0])]) }]
}

pub fn cl_vahlen_word(n: usize) -> Vec<Generator> {
    vec![
        Generator::Translate { w: para(n, &[0.25, 0.1]) },
        Generator::Inversion,
        Generator::Dilate { t: 1.5 },
        Generator::Rotate { u: Rotor::Single(para(n, &[1.0, 1.0])) },
        Generator::Translate { w: para(n, &[0.0, 0.0, 0.5]) },
    ]
}

/// `d/dx_k (z^-1) = conj(e_k)/|z|^2 - 2 x_k conj(z)/|z|^4`.
fn inversion_partials(z: &[f64]) -> Vec<Vec<f64>> {
    let r2: f64 = z.iter().map(|x| x * x).sum();
    let conj_z: Vec<f64> = z.iter().enumerate().map(|(i, x)| if i == 0 { *x } else { -x }).collect();
    (0..z.len())
        .map(|k| {
            (0..z.len())
                .map(|i| {
                    let ek = if i == k { if k == 0 { 1.0 } else { -1.0 } } else { 0.0 };
                    ek / r2 - 2.0 * z[k] * conj_z[i] / (r2 * r2)
                })
                .collect()
        })
        .collect()
}

fn stretch(z: &[f64]) -> Vec<f64> {
    let mut v = z.to_vec();
    v[1] *= 2.0;
    v
}

/// Builds a catalog map. `n` applies to Clifford maps (default 3); octonion
/// maps reject any `n` other than 7.
pub fn build(name: &str, n: Option<usize>) -> Result<AnyMap> {
    let e = find(name).ok_or_else(|| {
        let names: Vec<&str> = CATALOG.iter().map(|e| e.name).collect();
        Error::Config(format!("unknown catalog map '{name}' (known: {})", names.join(", ")))
    })?;
    let label = e.name;
    match e.algebra {
        AlgebraKind::Octonion => {
            if n.is_some_and(|n| n != 7) {
                return Err(Error::Config(format!("'{name}' is octonionic; n must be 7")));
            }
            let alg = OctonionAlgebra;
            let m = match name {
                "oct-identity" => MapUnderTest::new(alg, label, Octonion::from_slice)
                    .with_partials(|_| Ok((0..8).map(Octonion::unit).collect())),
                "oct-linear" => {
                    let (a, b) = (Octonion(OCT_LINEAR_A), Octonion(OCT_LINEAR_B));
                    MapUnderTest::new(alg, label, move |z| Ok(Octonion::from_slice(z)? * a + b))
                        .with_partials(move |_| Ok((0..8).map(|k| Octonion::unit(k) * a).collect()))
                }
                "oct-moebius-word" => octonion_moebius_map(label, OctonionMoebius::from_word(&oct_moebius_word())?),
                "oct-inversion" => {
                    octonion_moebius_map(label, OctonionMoebius::from_word(&[Generator::Inversion])?).with_partials(|z| {
                        inversion_partials(z).iter().map(|c| Octonion::from_slice(c)).collect()
                    })
                }
                "stretch" => MapUnderTest::new(alg, label, |z| Octonion::from_slice(&stretch(z))).with_partials(|_| {
                    Ok((0..8).map(|k| Octonion::unit(k).scale(if k == 1 { 2.0 } else { 1.0 })).collect())
                }),
                _ => unreachable!("catalog entry without a constructor"),
            };
            Ok(AnyMap::Octonion(m))
        }
        AlgebraKind::CliffordParavector => {
            let n = n.unwrap_or(DEFAULT_CLIFFORD_N);
            let alg = ParavectorAlgebra::new(n).map_err(|e| Error::Config(e.to_string()))?;
            let needs_two = matches!(name, "cl-rotation" | "cl-vahlen-word");
            if needs_two && n < 2 {
                return Err(Error::Config(format!("'{name}' needs n >= 2")));
            }
            let unit = move |k: usize| alg.unit(k);
            let m = match name {
                "cl-linear-real" => {
                    let w = [Generator::Dilate { t: 2.0 }, Generator::Translate { w: para(n, &[0.5, 0.25]) }];
                    vahlen_map(label, VahlenMatrix::from_word(n, &w)?)?
                        .with_partials(move |_| Ok((0..=n).map(|k| unit(k).scale(2.0)).collect()))
                }
                "cl-rotation" => vahlen_map(label, VahlenMatrix::from_word(n, &cl_rotation_word(n))?)?,
                "cl-vahlen-word" => vahlen_map(label, VahlenMatrix::from_word(n, &cl_vahlen_word(n))?)?,
                "cl-inversion" => vahlen_map(label, VahlenMatrix::from_word(n, &[Generator::Inversion])?)?
                    .with_partials(move |z| {
                        inversion_partials(z)
                            .into_iter()
                            .map(|c| Ok(Paravector::new(n, c)?.to_multivector()))
                            .collect()
                    }),
                "cl-stretch" => MapUnderTest::new(alg, label, move |z| {
                    Ok(Paravector::new(n, stretch(z))?.to_multivector())
                })
                .with_partials(move |_| {
                    Ok((0..=n).map(|k| unit(k).scale(if k == 1 { 2.0 } else { 1.0 })).collect::<Vec<Multivector>>())
                }),
                _ => unreachable!("catalog entry without a constructor"),
            };
            Ok(AnyMap::Clifford(m))
        }
    }
}
