//! Cayley-Dickson algebras at any doubling level up to [`MAX_LEVEL`].
//!
//! An element of level `L` is a pair `(a, b)` of level `L - 1` elements
//! stored as `[a.coeffs.., b.coeffs..]`. Products follow
//! `(a, b)(c, d) = (ac - d conj(b), conj(a) d + cb)` and conjugation is
//! `conj((a, b)) = (conj(a), -b)`. Level 0 is the reals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_LEVEL: u32 = 6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CdElement {
    level: u32,
    coeffs: Vec<f64>,
}

impl CdElement {
    pub fn new(level: u32, coeffs: Vec<f64>) -> Result<Self> {
        check_level(level)?;
        let want = 1usize << level;
        if coeffs.len() != want {
            return Err(Error::DimensionMismatch { left: want, right: coeffs.len() });
        }
        Ok(Self { level, coeffs })
    }

    pub fn zero(level: u32) -> Result<Self> {
        check_level(level)?;
        Ok(Self { level, coeffs: vec![0.0; 1 << level] })
    }

    pub fn real(level: u32, x: f64) -> Result<Self> {
        let mut z = Self::zero(level)?;
        z.coeffs[0] = x;
        Ok(z)
    }

    /// Basis unit `e_k` in the canonical doubling index order.
    pub fn unit(level: u32, k: usize) -> Result<Self> {
        let mut z = Self::zero(level)?;
        if k >= z.coeffs.len() {
            return Err(Error::InvalidInput(format!("unit index {k} out of range for level {level}")));
        }
        z.coeffs[k] = 1.0;
        Ok(z)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn re(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn dot(&self, other: &Self) -> Result<f64> {
        self.same_level(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum())
    }

    pub fn conj(&self) -> Self {
        let mut out = self.coeffs.clone();
        conj_in_place(&mut out);
        Self { level: self.level, coeffs: out }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        let mut out = vec![0.0; self.coeffs.len()];
        mul_into(&self.coeffs, &other.coeffs, &mut out);
        Ok(Self { level: self.level, coeffs: out })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { level: self.level, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { level: self.level, coeffs })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { level: self.level, coeffs: self.coeffs.iter().map(|x| x * s).collect() }
    }

    fn same_level(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch { left: self.level, right: other.level });
        }
        Ok(())
    }
}

fn check_level(level: u32) -> Result<()> {
    if level > MAX_LEVEL {
        return Err(Error::InvalidInput(format!("level {level} exceeds maximum {MAX_LEVEL}")));
    }
    Ok(())
}

fn conj_in_place(x: &mut [f64]) {
    if x.len() == 1 {
        return;
    }
    let half = x.len() / 2;
    let (a, b) = x.split_at_mut(half);
    conj_in_place(a);
    for v in b {
        *v = -*v;
    }
}

/// `out = x * y` for equal-length power-of-two slices.
fn mul_into(x: &[f64], y: &[f64], out: &mut [f64]) {
    let n = x.len();
    if n == 1 {
        out[0] = x[0] * y[0];
        return;
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);

    let mut t1 = vec![0.0; h];
    let mut t2 = vec![0.0; h];
    let mut tmp = vec![0.0; h];

    // first half: ac - d conj(b)
    mul_into(a, c, &mut t1);
    tmp.copy_from_slice(b);
    conj_in_place(&mut tmp);
    mul_into(d, &tmp, &mut t2);
    for i in 0..h {
        out[i] = t1[i] - t2[i];
    }

    // second half: conj(a) d + cb
    tmp.copy_from_slice(a);
    conj_in_place(&mut tmp);
    mul_into(&tmp, d, &mut t1);
    mul_into(c, b, &mut t2);
    for i in 0..h {
        out[h + i] = t1[i] + t2[i];
    }
}

/// A nonzero pair whose product vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroDivisorPair {
    pub left: CdElement,
    pub right: CdElement,
    /// Human-readable form, e.g. `(e3 + e10)(e6 - e15)`.
    pub description: String,
    pub product_norm: f64,
}

/// Exhaustive search over `(e_p ± e_q)(e_r ± e_s)` with `p < q`, `r < s`.
/// Returns the first pair in lexicographic order whose product has norm
/// `<= tol`, or `None` (e.g. for levels 0..=3).
pub fn find_zero_divisor(level: u32, tol: f64) -> Result<Option<ZeroDivisorPair>> {
    check_level(level)?;
    let dim = 1usize << level;
    let mut candidates = Vec::new();
    for p in 0..dim {
        for q in (p + 1)..dim {
            for sign in [1.0, -1.0] {
                let mut c = vec![0.0; dim];
                c[p] = 1.0;
                c[q] = sign;
                let label = format!("e{p} {} e{q}", if sign > 0.0 { '+' } else { '-' });
                candidates.push((CdElement { level, coeffs: c }, label));
            }
        }
    }
    for (x, lx) in &candidates {
        for (y, ly) in &candidates {
            let prod = x.mul(y)?;
            let n = prod.norm();
            if n <= tol {
                return Ok(Some(ZeroDivisorPair {
                    left: x.clone(),
                    right: y.clone(),
                    description: format!("({lx})({ly})"),
                    product_norm: n,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(level: u32, k: usize) -> CdElement {
        CdElement::unit(level, k).unwrap()
    }

    #[test]
    fn complex_unit_squares_to_minus_one() {
        let i = unit(1, 1);
        assert_eq!(i.mul(&i).unwrap(), CdElement::real(1, -1.0).unwrap());
    }

    #[test]
    fn quaternion_units_from_doubling() {
        // With the doubling formula as written, e1 e2 is minus the unit stored
        // at index 3. Naming e3 := e1 e2 recovers the Hamilton relations.
        let e1 = unit(2, 1);
        let e2 = unit(2, 2);
        let e3 = e1.mul(&e2).unwrap();
        assert_eq!(e3, unit(2, 3).scale(-1.0));
        assert_eq!(e2.mul(&e3).unwrap(), e1);
        assert_eq!(e3.mul(&e1).unwrap(), e2);
        assert_eq!(e2.mul(&e1).unwrap(), e3.scale(-1.0));
        for e in [&e1, &e2, &e3] {
            assert_eq!(e.mul(e).unwrap(), CdElement::real(2, -1.0).unwrap());
        }
    }

    #[test]
    fn conjugate_examples() {
        let one = CdElement::real(3, 1.0).unwrap();
        assert_eq!(one.conj(), one);
        assert_eq!(unit(3, 1).conj(), unit(3, 1).scale(-1.0));
        for k in 1..8 {
            assert_eq!(unit(3, k).conj(), unit(3, k).scale(-1.0));
        }
    }

    #[test]
    fn level_mismatch_is_an_error() {
        let a = unit(2, 1);
        let b = unit(3, 1);
        assert_eq!(a.mul(&b), Err(Error::LevelMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn constructor_checks_length_and_level() {
        assert!(CdElement::new(2, vec![0.0; 3]).is_err());
        assert!(CdElement::new(7, vec![0.0; 128]).is_err());
        assert!(CdElement::new(6, vec![0.0; 64]).is_ok());
    }

    #[test]
    fn no_zero_divisors_up_to_octonions() {
        for level in 0..=3 {
            assert!(find_zero_divisor(level, 1e-12).unwrap().is_none(), "level {level}");
        }
    }

    #[test]
    fn sedenions_have_zero_divisors() {
        let pair = find_zero_divisor(4, 1e-12).unwrap().expect("sedenion zero divisor");
        assert!(pair.left.norm() > 1.0 && pair.right.norm() > 1.0);
        assert!(pair.left.mul(&pair.right).unwrap().norm() < 1e-12);
    }
}
