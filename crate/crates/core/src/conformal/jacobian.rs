use serde::{Deserialize, Serialize};

use super::algebra::Algebra;
use super::map::MapUnderTest;
use crate::error::{Error, Result};
use crate::tolerance::Scheme;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartialsSource {
    FiniteDifference,
    Analytic,
}

/// Partials `df/dx_0 .. df/dx_n` at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobianSample<E> {
    pub point: Vec<f64>,
    pub partials: Vec<E>,
    pub step: f64,
    pub scheme: Scheme,
    pub source: PartialsSource,
    /// Max coefficient gap between analytic and finite-difference partials.
    pub fd_discrepancy: Option<f64>,
}

impl<E> JacobianSample<E> {
    pub fn from_partials(point: Vec<f64>, partials: Vec<E>) -> Self {
        Self {
            point,
            partials,
            step: 0.0,
            scheme: Scheme::Central2,
            source: PartialsSource::Analytic,
            fd_discrepancy: None,
        }
    }
}

/// Directional derivative of `f` along `dir` by the chosen stencil.
pub fn directional_difference<A: Algebra>(
    f: &MapUnderTest<A>,
    z: &[f64],
    dir: &[f64],
    h: f64,
    scheme: Scheme,
) -> Result<A::Elem> {
    let alg = &f.algebra;
    let at = |t: f64| -> Result<A::Elem> {
        let p: Vec<f64> = z.iter().zip(dir).map(|(x, d)| x + t * d).collect();
        f.eval(&p)
    };
    match scheme {
        Scheme::Central2 => {
            let fp = at(h)?;
            let fm = at(-h)?;
            Ok(alg.scale(&alg.sub(&fp, &fm), 0.5 / h))
        }
        Scheme::FivePoint4 => {
            let f2 = at(2.0 * h)?;
            let f1 = at(h)?;
            let m1 = at(-h)?;
            let m2 = at(-2.0 * h)?;
            let num = alg.add(
                &alg.scale(&alg.sub(&f1, &m1), 8.0),
                &alg.sub(&m2, &f2),
            );
            Ok(alg.scale(&num, 1.0 / (12.0 * h)))
        }
    }
}

/// Finite-difference partials at `z`.
pub fn finite_difference_partials<A: Algebra>(
    f: &MapUnderTest<A>,
    z: &[f64],
    h: f64,
    scheme: Scheme,
) -> Result<Vec<A::Elem>> {
    let dim = f.algebra.dim();
    (0..dim)
        .map(|i| {
            let mut d = vec![0.0; dim];
            d[i] = 1.0;
            directional_difference(f, z, &d, h, scheme)
        })
        .collect()
}

/// Partials at `z` with step `h`. Analytic partials, when the map has them and
/// `use_analytic` is set, are returned instead and cross-checked.
pub fn numeric_jacobian<A: Algebra>(
    f: &MapUnderTest<A>,
    z: &[f64],
    h: f64,
    scheme: Scheme,
    use_analytic: bool,
) -> Result<JacobianSample<A::Elem>> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidInput(format!("step must be positive and finite, got {h}")));
    }
    if z.len() != f.algebra.dim() {
        return Err(Error::DimensionMismatch { left: f.algebra.dim(), right: z.len() });
    }
    let fd = finite_difference_partials(f, z, h, scheme)?;
    if use_analytic {
        if let Some(analytic) = f.analytic_partials(z) {
            let analytic = analytic?;
            let alg = &f.algebra;
            let gap = analytic
                .iter()
                .zip(&fd)
                .map(|(a, b)| alg.max_abs_diff(a, b))
                .fold(0.0, f64::max);
            return Ok(JacobianSample {
                point: z.to_vec(),
                partials: analytic,
                step: h,
                scheme,
                source: PartialsSource::Analytic,
                fd_discrepancy: Some(gap),
            });
        }
    }
    Ok(JacobianSample {
        point: z.to_vec(),
        partials: fd,
        step: h,
        scheme,
        source: PartialsSource::FiniteDifference,
        fd_discrepancy: None,
    })
}
