//! Reproducible sampling of domain points and displacement directions.
//!
//! Each purpose draws from its own ChaCha stream of the same seed, so adding
//! directions never shifts the points and vice versa.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const STREAM_POINTS: u64 = 1;
const STREAM_DIRECTIONS: u64 = 2;

/// Seeded generator on a named stream.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Axis-aligned box `[lo_i, hi_i]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl SampleBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch { left: lo.len(), right: hi.len() });
        }
        if lo.is_empty() {
            return Err(Error::InvalidInput("box needs at least one coordinate".into()));
        }
        for (a, b) in lo.iter().zip(&hi) {
            if !(a.is_finite() && b.is_finite() && a <= b) {
                return Err(Error::InvalidInput(format!("box bounds must be finite with lo <= hi, got [{a}, {b}]")));
            }
        }
        Ok(Self { lo, hi })
    }

    /// `x_0 ∈ [0.5, 1.5]`, `x_i ∈ [-0.5, 0.5]`: a unit box that stays clear
    /// of the origin, where the catalog's inversions have their pole.
    pub fn default_for(dim: usize) -> Self {
        let mut lo = vec![-0.5; dim];
        let mut hi = vec![0.5; dim];
        lo[0] = 0.5;
        hi[0] = 1.5;
        Self { lo, hi }
    }

    /// `"lo:hi"` for every coordinate, or a comma-separated list of `dim`
    /// such intervals.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let interval = |s: &str| -> Result<(f64, f64)> {
            let (a, b) = s
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("interval '{s}' is not of the form lo:hi")))?;
            let p = |t: &str| {
                t.trim().parse::<f64>().map_err(|_| Error::InvalidInput(format!("'{t}' is not a number")))
            };
            Ok((p(a)?, p(b)?))
        };
        let parts: Vec<&str> = text.split(',').collect();
        let intervals = if parts.len() == 1 {
            vec![interval(parts[0])?; dim]
        } else if parts.len() == dim {
            parts.into_iter().map(interval).collect::<Result<Vec<_>>>()?
        } else {
            return Err(Error::InvalidInput(format!("box needs 1 or {dim} intervals, got {}", parts.len())));
        };
        let (lo, hi) = intervals.into_iter().unzip();
        Self::new(lo, hi)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }
}

/// What a report needs to reproduce its sample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplingSpec {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
    pub directions: usize,
}

/// `count` points uniform in the box.
pub fn sample_points(b: &SampleBox, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = stream_rng(seed, STREAM_POINTS);
    (0..count)
        .map(|_| b.lo.iter().zip(&b.hi).map(|(&lo, &hi)| rng.random_range(lo..=hi)).collect())
        .collect()
}

/// `count` unit vectors uniform on the sphere in `R^dim`.
pub fn random_directions(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = stream_rng(seed, STREAM_DIRECTIONS);
    random_unit_vectors(&mut rng, dim, count)
}

pub fn random_unit_vectors<R: Rng>(rng: &mut R, dim: usize, count: usize) -> Vec<Vec<f64>> {
    (0..count)
        .map(|_| loop {
            let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 1e-12 {
                break v.into_iter().map(|x| x / n).collect();
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_points() {
        let b = SampleBox::default_for(4);
        assert_eq!(sample_points(&b, 10, 7), sample_points(&b, 10, 7));
        assert_ne!(sample_points(&b, 10, 7), sample_points(&b, 10, 8));
        for p in sample_points(&b, 100, 1) {
            assert!((0.5..=1.5).contains(&p[0]));
            assert!(p[1..].iter().all(|x| (-0.5..=0.5).contains(x)));
        }
    }

    #[test]
    fn streams_are_independent() {
        let d1 = random_directions(3, 5, 11);
        let _ = sample_points(&SampleBox::default_for(3), 50, 11);
        assert_eq!(d1, random_directions(3, 5, 11));
        for d in &d1 {
            assert!((d.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn box_parsing() {
        let b = SampleBox::parse("-1:1", 3).unwrap();
        assert_eq!(b.lo, vec![-1.0; 3]);
        let b = SampleBox::parse("0.5:1.5,-1:1", 2).unwrap();
        assert_eq!((b.lo[0], b.hi[1]), (0.5, 1.0));
        assert!(SampleBox::parse("1:0", 2).is_err());
        assert!(SampleBox::parse("0:1,0:1,0:1", 2).is_err());
        assert!(SampleBox::parse("a:1", 1).is_err());
        assert!(SampleBox::parse("0:inf", 1).is_err());
    }
}
