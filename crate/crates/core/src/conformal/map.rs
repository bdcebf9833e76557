use std::fmt;
use std::sync::Arc;

use super::algebra::Algebra;
use crate::error::{Error, Result};

type EvalFn<E> = dyn Fn(&[f64]) -> Result<E> + Send + Sync;
type PartialsFn<E> = dyn Fn(&[f64]) -> Result<Vec<E>> + Send + Sync;

/// A black-box map `D -> codomain` plus optional analytic partials.
pub struct MapUnderTest<A: Algebra> {
    pub algebra: A,
    pub label: String,
    eval: Arc<EvalFn<A::Elem>>,
    partials: Option<Arc<PartialsFn<A::Elem>>>,
    /// The evaluation callable may be invoked from several threads at once.
    pub concurrent: bool,
}

impl<A: Algebra> Clone for MapUnderTest<A> {
    fn clone(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            label: self.label.clone(),
            eval: Arc::clone(&self.eval),
            partials: self.partials.clone(),
            concurrent: self.concurrent,
        }
    }
}

impl<A: Algebra> fmt::Debug for MapUnderTest<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MapUnderTest")
            .field("algebra", &self.algebra)
            .field("label", &self.label)
            .field("analytic_partials", &self.partials.is_some())
            .finish()
    }
}

impl<A: Algebra> MapUnderTest<A> {
    pub fn new<F>(algebra: A, label: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&[f64]) -> Result<A::Elem> + Send + Sync + 'static,
    {
        Self {
            algebra,
            label: label.into(),
            eval: Arc::new(eval),
            partials: None,
            concurrent: true,
        }
    }

    pub fn with_partials<F>(mut self, partials: F) -> Self
    where
        F: Fn(&[f64]) -> Result<Vec<A::Elem>> + Send + Sync + 'static,
    {
        self.partials = Some(Arc::new(partials));
        self
    }

    pub fn sequential(mut self) -> Self {
        self.concurrent = false;
        self
    }

    pub fn has_partials(&self) -> bool {
        self.partials.is_some()
    }

    /// Evaluates and validates the codomain.
    pub fn eval(&self, z: &[f64]) -> Result<A::Elem> {
        if z.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch { left: self.algebra.dim(), right: z.len() });
        }
        let v = (self.eval)(z)?;
        self.algebra.check_codomain(&v, 1e-9)?;
        Ok(v)
    }

    pub fn analytic_partials(&self, z: &[f64]) -> Option<Result<Vec<A::Elem>>> {
        let p = self.partials.as_ref()?;
        Some(p(z).and_then(|ps| {
            if ps.len() != self.algebra.dim() {
                return Err(Error::MapContract(format!(
                    "expected {} partials, got {}",
                    self.algebra.dim(),
                    ps.len()
                )));
            }
            Ok(ps)
        }))
    }
}
