use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rotation parameter: one element, or a list of paravector factors whose
/// product is the rotor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rotor {
    Single(Vec<f64>),
    Factors(Vec<Vec<f64>>),
}

impl Rotor {
    pub fn factors(&self) -> Vec<Vec<f64>> {
        match self {
            Rotor::Single(u) => vec![u.clone()],
            Rotor::Factors(f) => f.clone(),
        }
    }
}

/// One token of a generator word. Words are applied first to last.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Generator {
    /// `z -> z + w`.
    #[serde(alias = "translation")]
    Translate { w: Vec<f64> },
    /// `z -> t z`, `t > 0`.
    #[serde(alias = "dilation", alias = "dilatation")]
    Dilate { t: f64 },
    /// `z -> u z u^{-1}`-type rotation by a unit element or product of
    /// unit paravectors.
    #[serde(alias = "rotation")]
    Rotate { u: Rotor },
    /// `z -> z^{-1}`, the reflection at the unit sphere composed with
    /// conjugation.
    Inversion,
}

impl Generator {
    /// Checks parameters against a codomain of `dim` real coordinates.
    pub fn validate(&self, dim: usize) -> Result<()> {
        let check_vec = |v: &[f64], what: &str| -> Result<()> {
            if v.len() != dim {
                return Err(Error::InvalidInput(format!("{what} needs {dim} coordinates, got {}", v.len())));
            }
            if !v.iter().all(|x| x.is_finite()) {
                return Err(Error::InvalidInput(format!("{what} has non-finite coordinates")));
            }
            Ok(())
        };
        match self {
            Generator::Translate { w } => check_vec(w, "translation vector"),
            Generator::Dilate { t } => {
                if *t > 0.0 && t.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidInput(format!("dilation factor must be positive, got {t}")))
                }
            }
            Generator::Rotate { u } => {
                let factors = u.factors();
                if factors.is_empty() {
                    return Err(Error::InvalidInput("rotation needs at least one factor".into()));
                }
                for f in &factors {
                    check_vec(f, "rotation factor")?;
                    if f.iter().map(|x| x * x).sum::<f64>() == 0.0 {
                        return Err(Error::InvalidInput("rotation factor must be invertible".into()));
                    }
                }
                Ok(())
            }
            Generator::Inversion => Ok(()),
        }
    }

    pub fn is_inversion(&self) -> bool {
        matches!(self, Generator::Inversion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_json_round_trip() {
        let json = r#"[{"op":"translate","w":[1,0]},{"op":"dilation","t":2},
                       {"op":"rotate","u":[1,1]},{"op":"rotate","u":[[1,1],[0,1]]},{"op":"inversion"}]"#;
        let word: Vec<Generator> = serde_json::from_str(json).unwrap();
        assert_eq!(word[0], Generator::Translate { w: vec![1.0, 0.0] });
        assert_eq!(word[1], Generator::Dilate { t: 2.0 });
        assert_eq!(word[2], Generator::Rotate { u: Rotor::Single(vec![1.0, 1.0]) });
        assert_eq!(word[3], Generator::Rotate { u: Rotor::Factors(vec![vec![1.0, 1.0], vec![0.0, 1.0]]) });
        assert!(word[4].is_inversion());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(Generator::Dilate { t: 0.0 }.validate(2).is_err());
        assert!(Generator::Dilate { t: -1.0 }.validate(2).is_err());
        assert!(Generator::Translate { w: vec![1.0] }.validate(2).is_err());
        assert!(Generator::Rotate { u: Rotor::Single(vec![0.0, 0.0]) }.validate(2).is_err());
        assert!(Generator::Translate { w: vec![1.0, f64::NAN] }.validate(2).is_err());
    }
}
