use serde::Serialize;

use super::generator::Generator;
use crate::error::{Error, Result};
use crate::octonion::Octonion;

/// One fractional-linear step `z -> (a z + b)(c z + d)^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OctStep {
    pub a: Octonion,
    pub b: Octonion,
    pub c: Octonion,
    pub d: Octonion,
}

impl OctStep {
    pub const IDENTITY: OctStep = OctStep { a: Octonion::ONE, b: Octonion::ZERO, c: Octonion::ZERO, d: Octonion::ONE };

    /// `(a z + b)((c z + d)^{-1})`, parenthesised exactly so.
    pub fn eval(&self, z: &Octonion, pole_eps: f64) -> Result<Octonion> {
        let num = self.a * *z + self.b;
        let den = self.c * *z + self.d;
        let dn = den.norm();
        if dn <= pole_eps * (1.0 + z.norm()) {
            return Err(Error::Pole { point: z.0.to_vec(), norm: dn });
        }
        Ok(num * den.inverse(0.0)?)
    }
}

/// An octonionic Möbius map.
///
/// Because octonion multiplication is not associative, a composition of
/// fractional-linear maps is generally not one quadruple; the map is kept as
/// its list of steps (applied first to last) and evaluated functionally.
/// Maps built from generator words are validated; raw quadruples are
/// accepted for evaluation but flagged as unvalidated, since no
/// admissibility test for arbitrary `(a, b, c, d)` is implemented.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OctonionMoebius {
    steps: Vec<OctStep>,
    word: Vec<Generator>,
    validated: bool,
}

impl Default for OctonionMoebius {
    fn default() -> Self {
        Self::identity()
    }
}

impl OctonionMoebius {
    pub fn identity() -> Self {
        Self { steps: Vec::new(), word: Vec::new(), validated: true }
    }

    /// The canonical map of a single generator:
    /// translation `(1, w, 0, 1)`, dilation `(t, 0, 0, 1)`,
    /// rotation `(u, 0, 0, u)` with `u` normalised, inversion `(0, 1, 1, 0)`.
    /// A rotation given as several factors applies the last one first.
    pub fn generator(g: &Generator) -> Result<Self> {
        g.validate(8)?;
        let steps = match g {
            Generator::Translate { w } => vec![OctStep { b: Octonion::from_slice(w)?, ..OctStep::IDENTITY }],
            Generator::Dilate { t } => vec![OctStep { a: Octonion::real(*t), ..OctStep::IDENTITY }],
            Generator::Rotate { u } => u
                .factors()
                .iter()
                .rev()
                .map(|f| {
                    let u = Octonion::from_slice(f)?;
                    let u = u.scale(1.0 / u.norm());
                    Ok(OctStep { a: u, d: u, ..OctStep::IDENTITY })
                })
                .collect::<Result<Vec<_>>>()?,
            Generator::Inversion => vec![OctStep {
                a: Octonion::ZERO,
                b: Octonion::ONE,
                c: Octonion::ONE,
                d: Octonion::ZERO,
            }],
        };
        Ok(Self { steps, word: vec![g.clone()], validated: true })
    }

    /// Word applied first to last.
    pub fn from_word(word: &[Generator]) -> Result<Self> {
        word.iter().try_fold(Self::identity(), |acc, g| Ok(Self::compose(&Self::generator(g)?, &acc)))
    }

    /// A raw quadruple; evaluable, but flagged unvalidated.
    pub fn raw(a: Octonion, b: Octonion, c: Octonion, d: Octonion) -> Self {
        Self { steps: vec![OctStep { a, b, c, d }], word: Vec::new(), validated: false }
    }

    /// `t1 ∘ t2`: apply `t2`, then `t1`.
    pub fn compose(t1: &Self, t2: &Self) -> Self {
        let mut steps = t2.steps.clone();
        steps.extend_from_slice(&t1.steps);
        let mut word = t2.word.clone();
        word.extend_from_slice(&t1.word);
        Self { steps, word, validated: t1.validated && t2.validated }
    }

    pub fn eval(&self, z: &Octonion, pole_eps: f64) -> Result<Octonion> {
        let mut w = *z;
        for step in &self.steps {
            w = step.eval(&w, pole_eps).map_err(|e| match e {
                Error::Pole { norm, .. } => Error::Pole { point: z.0.to_vec(), norm },
                other => other,
            })?;
        }
        Ok(w)
    }

    pub fn steps(&self) -> &[OctStep] {
        &self.steps
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// The single quadruple `(a, b, c, d)` when the map is one step (the
    /// identity counts as `(1, 0, 0, 1)`).
    pub fn coefficients(&self) -> Option<OctStep> {
        match self.steps.as_slice() {
            [] => Some(OctStep::IDENTITY),
            [s] => Some(*s),
            _ => None,
        }
    }

    pub fn contains_inversion(&self) -> bool {
        self.steps.iter().any(|s| s.c != Octonion::ZERO)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::Rotor;

    const EPS: f64 = 1e-9;

    fn oct(c: &[f64]) -> Octonion {
        let mut a = [0.0; 8];
        a[..c.len()].copy_from_slice(c);
        Octonion(a)
    }

    #[test]
    fn identity_and_translation() {
        let z = oct(&[0.3, -1.0, 2.0, 0.0, 0.5, 0.0, 0.1, 0.7]);
        assert_eq!(OctonionMoebius::identity().eval(&z, EPS).unwrap(), z);
        let id = OctonionMoebius::raw(Octonion::ONE, Octonion::ZERO, Octonion::ZERO, Octonion::ONE);
        assert_eq!(id.eval(&z, EPS).unwrap(), z);
        assert!(!id.is_validated());
        let w = oct(&[1.0, 0.0, 2.0]);
        let t = OctonionMoebius::generator(&Generator::Translate { w: w.0.to_vec() }).unwrap();
        assert!(t.eval(&z, EPS).unwrap().max_abs_diff(&(z + w)) < 1e-15);
    }

    #[test]
    fn inversion_of_one_plus_e1() {
        let inv = OctonionMoebius::raw(Octonion::ZERO, Octonion::ONE, Octonion::ONE, Octonion::ZERO);
        let got = inv.eval(&oct(&[1.0, 1.0]), EPS).unwrap();
        // Oracle: (1 + e1)(1 - e1)/2 = 1.
        assert!(got.max_abs_diff(&oct(&[0.5, -0.5])) < 1e-15);
        let gen = OctonionMoebius::generator(&Generator::Inversion).unwrap();
        assert_eq!(gen.eval(&Octonion::real(2.0), EPS).unwrap(), Octonion::real(0.5));
    }

    #[test]
    fn pole_is_an_error_naming_the_point() {
        let inv = OctonionMoebius::generator(&Generator::Inversion).unwrap();
        match inv.eval(&Octonion::ZERO, EPS) {
            Err(Error::Pole { point, .. }) => assert_eq!(point, vec![0.0; 8]),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn dilation_and_rotation() {
        let z = oct(&[0.2, 0.4, -0.1, 0.3, 0.0, 1.0, 0.0, -0.5]);
        let d = OctonionMoebius::generator(&Generator::Dilate { t: 2.0 }).unwrap();
        assert_eq!(d.eval(&z, EPS).unwrap(), z.scale(2.0));
        let r = OctonionMoebius::generator(&Generator::Rotate { u: Rotor::Single(vec![1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]) })
            .unwrap();
        let rz = r.eval(&z, EPS).unwrap();
        assert!((rz.norm() - z.norm()).abs() < 1e-12);
        assert!((rz.re() - z.re()).abs() < 1e-12);
    }

    #[test]
    fn composition_concatenates_words() {
        let w = oct(&[0.0, 1.0]).0.to_vec();
        let v = oct(&[2.0, 0.0, 3.0]).0.to_vec();
        let tw = OctonionMoebius::generator(&Generator::Translate { w: w.clone() }).unwrap();
        let tv = OctonionMoebius::generator(&Generator::Translate { w: v.clone() }).unwrap();
        let c = OctonionMoebius::compose(&tw, &tv);
        assert_eq!(c.word().len(), 2);
        let z = oct(&[0.1, 0.2, 0.3]);
        let expect = z + Octonion::from_slice(&w).unwrap() + Octonion::from_slice(&v).unwrap();
        assert!(c.eval(&z, EPS).unwrap().max_abs_diff(&expect) < 1e-15);
        assert!(c.coefficients().is_none());
        let id = OctonionMoebius::identity();
        assert_eq!(OctonionMoebius::compose(&id, &tw), tw);
    }

    #[test]
    fn word_order_is_first_to_last() {
        let word = vec![Generator::Translate { w: oct(&[1.0]).0.to_vec() }, Generator::Dilate { t: 3.0 }];
        let m = OctonionMoebius::from_word(&word).unwrap();
        assert_eq!(m.eval(&Octonion::real(1.0), EPS).unwrap(), Octonion::real(6.0));
        assert!(!m.contains_inversion());
        let m = OctonionMoebius::from_word(&[Generator::Inversion]).unwrap();
        assert!(m.contains_inversion());
    }
}
