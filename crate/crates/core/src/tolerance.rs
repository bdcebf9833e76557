//! Numeric policy shared by every module.
//!
//! Equality of floats is `|x - y| <= atol + rtol * max(|x|, |y|)`. Pure
//! algebra identities run at `1e-12`; verdicts built on numerical
//! derivatives run at `1e-6`, normalised by the local scale of the map.

use serde::{Deserialize, Serialize};

/// Absolute/relative tolerance pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Tolerance {
    pub const ALGEBRA: Tolerance = Tolerance { atol: 1e-12, rtol: 1e-12 };

    pub const fn new(atol: f64, rtol: f64) -> Self {
        Self { atol, rtol }
    }

    pub fn eq(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.atol + self.rtol * x.abs().max(y.abs())
    }

    pub fn slices_eq(&self, a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| self.eq(*x, *y))
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::ALGEBRA
    }
}

/// Finite-difference stencil used for partial derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    /// Second-order central difference.
    #[default]
    Central2,
    /// Fourth-order five-point stencil.
    FivePoint4,
}

impl Scheme {
    pub fn order(self) -> u32 {
        match self {
            Scheme::Central2 => 2,
            Scheme::FivePoint4 => 4,
        }
    }
}

/// Everything numeric that a caller may want to tune.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericPolicy {
    /// Tolerance for exact-arithmetic identities.
    pub algebra: Tolerance,
    /// Scale-normalised tolerance for derivative-based verdicts.
    pub derivative_tol: f64,
    /// Elements with norm at or below this are treated as zero.
    pub singular_eps: f64,
    /// Relative pole threshold: `|cz + d| <= pole_eps * (1 + |z|)` is a pole.
    pub pole_eps: f64,
    /// Fixed step; `None` selects `cbrt(eps) * max(1, |z|)`.
    pub step: Option<f64>,
    pub scheme: Scheme,
    /// Use analytic partials when a map supplies them.
    pub use_analytic: bool,
}

impl Default for NumericPolicy {
    fn default() -> Self {
        Self {
            algebra: Tolerance::ALGEBRA,
            derivative_tol: 1e-6,
            singular_eps: 1e-12,
            pole_eps: 1e-9,
            step: None,
            scheme: Scheme::Central2,
            use_analytic: true,
        }
    }
}

impl NumericPolicy {
    /// Step size for a point with Euclidean norm `znorm`.
    pub fn step_for(&self, znorm: f64) -> f64 {
        match self.step {
            Some(h) => h,
            None => f64::EPSILON.cbrt() * znorm.max(1.0),
        }
    }
}
