//! The two ambient settings a map can live in: the octonions, or the
//! paravector space `R^{n+1}` inside `Cl_n`.

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::clifford::{verify_spin_structure, Multivector, Paravector, SpinVerdict};
use crate::error::{Error, Result};
use crate::octonion::Octonion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Octonion,
    CliffordParavector,
}

impl AlgebraKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraKind::Octonion => "octonion",
            AlgebraKind::CliffordParavector => "clifford-paravector",
        }
    }
}

/// Arithmetic needed by the conformality pipeline.
///
/// Domain points have `n + 1` real coordinates `x_0..x_n`; elements are the
/// values of the map, its partials and the frame entries.
pub trait Algebra: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn kind(&self) -> AlgebraKind;
    /// Number of imaginary directions (7 for octonions).
    fn n(&self) -> usize;
    fn dim(&self) -> usize {
        self.n() + 1
    }

    fn point(&self, coords: &[f64]) -> Self::Elem;
    /// `e_k`, `e_0 = 1`.
    fn unit(&self, k: usize) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn coefficients(&self, a: &Self::Elem) -> Vec<f64>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, s: f64) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn conj(&self, a: &Self::Elem) -> Self::Elem;

    /// `Re(a)` resp. `Sc(a)`.
    fn re(&self, a: &Self::Elem) -> f64;
    /// `Re(a conj(b))` resp. `Sc(a conj(b))`.
    fn dot(&self, a: &Self::Elem, b: &Self::Elem) -> f64;
    fn norm(&self, a: &Self::Elem) -> f64 {
        self.dot(a, a).max(0.0).sqrt()
    }

    /// Inverse of a map value or partial derivative.
    fn invert(&self, a: &Self::Elem, eps: f64) -> Result<Self::Elem>;

    /// Rejects values outside the declared codomain.
    fn check_codomain(&self, a: &Self::Elem, rtol: f64) -> Result<()>;

    /// Structure flags for a frame entry; `None` where not applicable.
    fn frame_structure(&self, _psi: &Self::Elem, _tol: f64) -> Option<SpinVerdict> {
        None
    }

    fn max_abs_diff(&self, a: &Self::Elem, b: &Self::Elem) -> f64 {
        self.coefficients(a)
            .iter()
            .zip(self.coefficients(b))
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OctonionAlgebra;

impl Algebra for OctonionAlgebra {
    type Elem = Octonion;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::Octonion
    }
    fn n(&self) -> usize {
        7
    }
    fn point(&self, coords: &[f64]) -> Octonion {
        Octonion::from_slice(coords).expect("octonion point needs 8 coordinates")
    }
    fn unit(&self, k: usize) -> Octonion {
        Octonion::unit(k)
    }
    fn zero(&self) -> Octonion {
        Octonion::ZERO
    }
    fn coefficients(&self, a: &Octonion) -> Vec<f64> {
        a.0.to_vec()
    }
    fn add(&self, a: &Octonion, b: &Octonion) -> Octonion {
        *a + *b
    }
    fn sub(&self, a: &Octonion, b: &Octonion) -> Octonion {
        *a - *b
    }
    fn scale(&self, a: &Octonion, s: f64) -> Octonion {
        a.scale(s)
    }
    fn mul(&self, a: &Octonion, b: &Octonion) -> Octonion {
        *a * *b
    }
    fn conj(&self, a: &Octonion) -> Octonion {
        a.conj()
    }
    fn re(&self, a: &Octonion) -> f64 {
        a.re()
    }
    fn dot(&self, a: &Octonion, b: &Octonion) -> f64 {
        a.dot(b)
    }
    fn invert(&self, a: &Octonion, eps: f64) -> Result<Octonion> {
        a.inverse(eps)
    }
    fn check_codomain(&self, a: &Octonion, _rtol: f64) -> Result<()> {
        if a.0.iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(Error::MapContract(format!("non-finite octonion value {a:?}")))
        }
    }
}

/// Paravector-valued maps on `R^{n+1} ⊂ Cl_n`. Elements are full
/// multivectors so that frame entries (grades 0..2) fit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParavectorAlgebra {
    n: usize,
}

impl ParavectorAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > crate::clifford::MAX_GENERATORS {
            return Err(Error::InvalidInput(format!("paravector space needs 1 <= n <= 12, got {n}")));
        }
        Ok(Self { n })
    }
}

impl Algebra for ParavectorAlgebra {
    type Elem = Multivector;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::CliffordParavector
    }
    fn n(&self) -> usize {
        self.n
    }
    fn point(&self, coords: &[f64]) -> Multivector {
        Paravector::new(self.n, coords.to_vec())
            .expect("paravector point needs n + 1 coordinates")
            .to_multivector()
    }
    fn unit(&self, k: usize) -> Multivector {
        Paravector::unit(self.n, k).expect("unit index").to_multivector()
    }
    fn zero(&self) -> Multivector {
        Multivector::zero(self.n).expect("n checked")
    }
    fn coefficients(&self, a: &Multivector) -> Vec<f64> {
        a.coeffs().to_vec()
    }
    fn add(&self, a: &Multivector, b: &Multivector) -> Multivector {
        a + b
    }
    fn sub(&self, a: &Multivector, b: &Multivector) -> Multivector {
        a - b
    }
    fn scale(&self, a: &Multivector, s: f64) -> Multivector {
        a.scale(s)
    }
    fn mul(&self, a: &Multivector, b: &Multivector) -> Multivector {
        a * b
    }
    fn conj(&self, a: &Multivector) -> Multivector {
        a.conjugate()
    }
    fn re(&self, a: &Multivector) -> f64 {
        a.scalar_part()
    }
    fn dot(&self, a: &Multivector, b: &Multivector) -> f64 {
        a.scalar_product(b).expect("same algebra")
    }
    fn invert(&self, a: &Multivector, eps: f64) -> Result<Multivector> {
        let p = Paravector::from_multivector(a, 1e-9)?;
        Ok(p.inverse(eps)?.to_multivector())
    }
    fn check_codomain(&self, a: &Multivector, rtol: f64) -> Result<()> {
        if a.n() != self.n {
            return Err(Error::MapContract(format!("value lives in Cl_{}, expected Cl_{}", a.n(), self.n)));
        }
        if !a.coeffs().iter().all(|x| x.is_finite()) {
            return Err(Error::MapContract("non-finite value".into()));
        }
        Paravector::from_multivector(a, rtol)
            .map(|_| ())
            .map_err(|e| Error::MapContract(e.to_string()))
    }
    fn frame_structure(&self, psi: &Multivector, tol: f64) -> Option<SpinVerdict> {
        Some(verify_spin_structure(psi, tol))
    }
}
