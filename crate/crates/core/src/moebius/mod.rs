//! Möbius transformations: octonionic maps built from generator words and
//! Clifford (Ahlfors-Vahlen) matrices with product-of-paravector entries.

mod config;
mod generator;
mod octonionic;
mod vahlen;

pub use config::{MapConfig, MapSpec, RawCoefficients};
pub use generator::{Generator, Rotor};
pub use octonionic::{OctStep, OctonionMoebius};
pub use vahlen::{VahlenEntry, VahlenMatrix, VahlenVerdict};

/// Default relative pole threshold: `|cz + d| <= POLE_EPS * (1 + |z|)`.
pub const POLE_EPS: f64 = 1e-9;
