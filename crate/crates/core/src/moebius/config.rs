use serde::{Deserialize, Serialize};

use super::generator::Generator;
use super::octonionic::OctonionMoebius;
use super::vahlen::VahlenMatrix;
use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::octonion::Octonion;

/// Raw coefficient quadruple. Octonion entries take 8 numbers; Clifford
/// entries take either `n + 1` (a paravector) or `2^n` (a multivector).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawCoefficients {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
    pub d: Vec<f64>,
}

/// A map description as read from a config file:
/// `{"name", "algebra", "n", "word": [...]}` or the raw form with
/// `"a", "b", "c", "d"` in place of the word.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapConfig {
    pub name: String,
    /// `"octonion"` or `"clifford"`.
    pub algebra: String,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub word: Option<Vec<Generator>>,
    #[serde(default)]
    pub a: Option<Vec<f64>>,
    #[serde(default)]
    pub b: Option<Vec<f64>>,
    #[serde(default)]
    pub c: Option<Vec<f64>>,
    #[serde(default)]
    pub d: Option<Vec<f64>>,
}

/// A parsed, constructed map.
#[derive(Clone, Debug, PartialEq)]
pub enum MapSpec {
    Octonion(OctonionMoebius),
    Clifford(VahlenMatrix),
}

impl MapConfig {
    /// Parses either one map object or an array of them.
    pub fn parse_all(text: &str) -> Result<Vec<MapConfig>> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.is_array() {
            Ok(serde_json::from_value(value)?)
        } else {
            Ok(vec![serde_json::from_value(value)?])
        }
    }

    /// The raw quadruple, if all four entries are given.
    pub fn raw(&self) -> Result<Option<RawCoefficients>> {
        match (&self.a, &self.b, &self.c, &self.d) {
            (None, None, None, None) => Ok(None),
            (Some(a), Some(b), Some(c), Some(d)) => {
                Ok(Some(RawCoefficients { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() }))
            }
            _ => Err(Error::Config(format!("map '{}': raw form needs all of a, b, c, d", self.name))),
        }
    }

    pub fn build(&self) -> Result<MapSpec> {
        let raw = self.raw()?;
        let source = match (&self.word, &raw) {
            (Some(_), Some(_)) => return Err(Error::Config(format!("map '{}': give either a word or a, b, c, d", self.name))),
            (None, None) => return Err(Error::Config(format!("map '{}': needs a word or a, b, c, d", self.name))),
            (Some(w), None) => Ok(w),
            (None, Some(r)) => Err(r),
        };
        let cfg = |e: Error| Error::Config(format!("map '{}': {e}", self.name));
        match self.algebra.as_str() {
            "octonion" => {
                if self.n.is_some_and(|n| n != 7) {
                    return Err(Error::Config(format!("map '{}': octonion maps have n = 7", self.name)));
                }
                match source {
                    Ok(word) => OctonionMoebius::from_word(word).map(MapSpec::Octonion).map_err(cfg),
                    Err(r) => {
                        let o = |v: &[f64]| Octonion::from_slice(v).map_err(cfg);
                        Ok(MapSpec::Octonion(OctonionMoebius::raw(o(&r.a)?, o(&r.b)?, o(&r.c)?, o(&r.d)?)))
                    }
                }
            }
            "clifford" | "clifford-paravector" => {
                let n = self
                    .n
                    .ok_or_else(|| Error::Config(format!("map '{}': clifford maps need n", self.name)))?;
                if n == 0 || n > crate::clifford::MAX_GENERATORS {
                    return Err(Error::Config(format!("map '{}': n must be in 1..=12", self.name)));
                }
                match source {
                    Ok(word) => VahlenMatrix::from_word(n, word).map(MapSpec::Clifford).map_err(cfg),
                    Err(r) => {
                        let m = |v: &[f64]| clifford_entry(n, v).map_err(cfg);
                        VahlenMatrix::from_entries(m(&r.a)?, m(&r.b)?, m(&r.c)?, m(&r.d)?)
                            .map(MapSpec::Clifford)
                            .map_err(cfg)
                    }
                }
            }
            other => Err(Error::Config(format!("map '{}': unknown algebra '{other}'", self.name))),
        }
    }
}

fn clifford_entry(n: usize, v: &[f64]) -> Result<Multivector> {
    if v.len() == 1 << n {
        Multivector::new(n, v.to_vec())
    } else if v.len() == n + 1 {
        Ok(crate::clifford::Paravector::new(n, v.to_vec())?.to_multivector())
    } else {
        Err(Error::InvalidInput(format!(
            "entry needs {} (paravector) or {} (multivector) numbers, got {}",
            n + 1,
            1usize << n,
            v.len()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_and_raw_forms_parse() {
        let text = r#"[
            {"name": "w", "algebra": "clifford", "n": 2,
             "word": [{"op": "translate", "w": [1, 0, 0]}, {"op": "inversion"}]},
            {"name": "r", "algebra": "octonion",
             "a": [1,0,0,0,0,0,0,0], "b": [0,0,0,0,0,0,0,0],
             "c": [0,0,0,0,0,0,0,0], "d": [1,0,0,0,0,0,0,0]}
        ]"#;
        let maps = MapConfig::parse_all(text).unwrap();
        assert_eq!(maps.len(), 2);
        match maps[0].build().unwrap() {
            MapSpec::Clifford(m) => assert!(m.check_conditions().passes),
            other => panic!("{other:?}"),
        }
        match maps[1].build().unwrap() {
            MapSpec::Octonion(m) => assert!(!m.is_validated()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_configs_are_config_errors() {
        for text in [
            r#"{"name": "x", "algebra": "octonion"}"#,
            r#"{"name": "x", "algebra": "quaternion", "word": []}"#,
            r#"{"name": "x", "algebra": "clifford", "word": []}"#,
            r#"{"name": "x", "algebra": "octonion", "word": [{"op": "dilate", "t": -1}]}"#,
            r#"{"name": "x", "algebra": "octonion", "word": [{"op": "spin"}]}"#,
        ] {
            let res = MapConfig::parse_all(text).and_then(|m| m[0].build());
            assert!(matches!(res, Err(Error::Config(_))), "{text}: {res:?}");
        }
    }
}
