use serde::{Deserialize, Serialize};

use super::multivector::Multivector;
use crate::error::{Error, Result};

/// Element of `R + R^n` inside `Cl_n`, stored as `[x0, x1, ..., xn]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Paravector {
    n: usize,
    coeffs: Vec<f64>,
}

impl Paravector {
    pub fn new(n: usize, coeffs: Vec<f64>) -> Result<Self> {
        if n > super::MAX_GENERATORS {
            return Err(Error::InvalidInput(format!("n = {n} exceeds maximum")));
        }
        if coeffs.len() != n + 1 {
            return Err(Error::DimensionMismatch { left: n + 1, right: coeffs.len() });
        }
        Ok(Self { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: vec![0.0; n + 1] }
    }

    pub fn scalar(n: usize, s: f64) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[0] = s;
        p
    }

    /// `e_k` with `e_0 = 1`.
    pub fn unit(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidInput(format!("paravector unit e{k} outside R^{}", n + 1)));
        }
        let mut p = Self::zero(n);
        p.coeffs[k] = 1.0;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn conjugate(&self) -> Self {
        let mut c = self.coeffs.clone();
        for x in &mut c[1..] {
            *x = -*x;
        }
        Self { n: self.n, coeffs: c }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { n: self.n, coeffs: self.coeffs.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, coeffs })
    }

    /// `conj(a) / |a|^2`; fails if `|a| <= eps`.
    pub fn inverse(&self, eps: f64) -> Result<Self> {
        let n2 = self.norm_sqr();
        let n = n2.sqrt();
        if !(n > eps) {
            return Err(Error::Singular { norm: n });
        }
        Ok(self.conjugate().scale(1.0 / n2))
    }

    /// Unit paravector in the same direction.
    pub fn normalized(&self, eps: f64) -> Result<Self> {
        let n = self.norm();
        if !(n > eps) {
            return Err(Error::Singular { norm: n });
        }
        Ok(self.scale(1.0 / n))
    }

    pub fn to_multivector(&self) -> Multivector {
        let mut m = Multivector::zero(self.n).expect("n checked at construction");
        let c = m.coeffs_mut();
        c[0] = self.coeffs[0];
        for i in 1..=self.n {
            c[1 << (i - 1)] = self.coeffs[i];
        }
        m
    }

    /// Reads grades 0 and 1 of `m` without checking the rest.
    pub fn project(m: &Multivector) -> Self {
        let n = m.n();
        let mut coeffs = vec![0.0; n + 1];
        coeffs[0] = m.get(0);
        for i in 1..=n {
            coeffs[i] = m.get(1 << (i - 1));
        }
        Self { n, coeffs }
    }

    /// Projection of `m`, rejected if content outside grades {0, 1} exceeds
    /// `rtol * max(|m|, 1)`.
    pub fn from_multivector(m: &Multivector, rtol: f64) -> Result<Self> {
        let outside = m.norm_outside_grades(&[0, 1]);
        let scale = m.norm().max(1.0);
        if outside > rtol * scale {
            return Err(Error::InvalidInput(format!(
                "not a paravector: content outside grades 0/1 has norm {outside:e}"
            )));
        }
        Ok(Self::project(m))
    }
}

/// Product of a list of paravectors, `p1 p2 ... pk` (`1` for an empty list).
pub fn product(n: usize, factors: &[Paravector]) -> Result<Multivector> {
    let mut acc = Multivector::scalar(n, 1.0)?;
    for f in factors {
        if f.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: f.n() });
        }
        acc = acc.geometric_product(&f.to_multivector())?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(c: &[f64]) -> Paravector {
        Paravector::new(c.len() - 1, c.to_vec()).unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(pv(&[1.0, 0.0, 0.0]).inverse(1e-12).unwrap(), pv(&[1.0, 0.0, 0.0]));
        assert_eq!(pv(&[0.0, 1.0, 0.0]).inverse(1e-12).unwrap(), pv(&[0.0, -1.0, 0.0]));
        let inv = pv(&[1.0, 1.0, 1.0]).inverse(1e-12).unwrap();
        let want = pv(&[1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0]);
        for (a, b) in inv.coeffs().iter().zip(want.coeffs()) {
            assert!((a - b).abs() < 1e-16);
        }
    }

    #[test]
    fn inverse_multiplies_back_to_one() {
        let a = pv(&[0.4, -1.2, 2.0, 0.7]);
        let inv = a.inverse(1e-12).unwrap();
        let prod = a.to_multivector().geometric_product(&inv.to_multivector()).unwrap();
        let one = Multivector::scalar(3, 1.0).unwrap();
        assert!(prod.max_abs_diff(&one) < 1e-15);
    }

    #[test]
    fn near_zero_is_singular() {
        assert!(matches!(Paravector::zero(3).inverse(1e-12), Err(Error::Singular { .. })));
    }

    #[test]
    fn embedding_round_trip_rejects_bivectors() {
        let a = pv(&[1.0, 2.0, 3.0, 4.0]);
        let m = a.to_multivector();
        assert_eq!(m.norm_outside_grades(&[0, 1]), 0.0);
        assert_eq!(Paravector::from_multivector(&m, 1e-12).unwrap(), a);
        let b = Multivector::blade(3, 0b11).unwrap();
        assert!(Paravector::from_multivector(&b, 1e-9).is_err());
    }
}
