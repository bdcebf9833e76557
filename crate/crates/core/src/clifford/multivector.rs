use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_GENERATORS: usize = 12;

/// Sign of `e_a e_b = sign * e_(a xor b)` for blade bitmasks `a`, `b`.
///
/// Counts the transpositions needed to sort the concatenated generator
/// list, then one `-1` per shared generator (`e_i^2 = -1`).
#[inline]
pub fn blade_sign(a: usize, b: usize) -> f64 {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    swaps += (a & b).count_ones();
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[inline]
pub fn grade_of(mask: usize) -> usize {
    mask.count_ones() as usize
}

/// `(-1)^(k(k+1)/2)`: conjugation acting on a grade-k blade.
#[inline]
pub fn conjugation_sign(k: usize) -> f64 {
    if (k * (k + 1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(-1)^(k(k-1)/2)`: reversion acting on a grade-k blade.
#[inline]
pub fn reversion_sign(k: usize) -> f64 {
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Dense element of `Cl_n` (generators square to `-1`), blade `e_A` stored
/// at index `bitmask(A)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Multivector {
    n: usize,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn new(n: usize, coeffs: Vec<f64>) -> Result<Self> {
        check_n(n)?;
        if coeffs.len() != 1 << n {
            return Err(Error::DimensionMismatch { left: 1 << n, right: coeffs.len() });
        }
        Ok(Self { n, coeffs })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, coeffs: vec![0.0; 1 << n] })
    }

    pub fn scalar(n: usize, s: f64) -> Result<Self> {
        let mut m = Self::zero(n)?;
        m.coeffs[0] = s;
        Ok(m)
    }

    /// Blade with the given bitmask and coefficient one.
    pub fn blade(n: usize, mask: usize) -> Result<Self> {
        let mut m = Self::zero(n)?;
        if mask >= m.coeffs.len() {
            return Err(Error::InvalidInput(format!("blade mask {mask:#b} outside Cl_{n}")));
        }
        m.coeffs[mask] = 1.0;
        Ok(m)
    }

    /// Generator `e_i`, `1 <= i <= n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidInput(format!("generator e{i} outside Cl_{n}")));
        }
        Self::blade(n, 1 << (i - 1))
    }

    /// Product of generators in the order given, e.g. `[1, 2, 3]` is `e1 e2 e3`.
    pub fn from_generators(n: usize, gens: &[usize]) -> Result<Self> {
        let mut acc = Self::scalar(n, 1.0)?;
        for &g in gens {
            acc = acc.geometric_product(&Self::generator(n, g)?)?;
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn get(&self, mask: usize) -> f64 {
        self.coeffs[mask]
    }

    /// `Sc(a)`.
    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut out = vec![0.0; self.coeffs.len()];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (b, &y) in other.coeffs.iter().enumerate() {
                if y == 0.0 {
                    continue;
                }
                out[a ^ b] += blade_sign(a, b) * x * y;
            }
        }
        Ok(Self { n: self.n, coeffs: out })
    }

    /// Anti-automorphism with `conj(e_j) = -e_j`.
    pub fn conjugate(&self) -> Self {
        self.map_by_grade(conjugation_sign)
    }

    /// Anti-automorphism with `e_j* = e_j`.
    pub fn reversion(&self) -> Self {
        self.map_by_grade(reversion_sign)
    }

    fn map_by_grade(&self, sign: fn(usize) -> f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| sign(grade_of(m)) * c)
            .collect();
        Self { n: self.n, coeffs }
    }

    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.n {
            return Err(Error::InvalidInput(format!("grade {k} exceeds n = {}", self.n)));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| if grade_of(m) == k { c } else { 0.0 })
            .collect();
        Ok(Self { n: self.n, coeffs })
    }

    /// Euclidean norm of the grade-k part.
    pub fn grade_norm(&self, k: usize) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(m, _)| grade_of(*m) == k)
            .map(|(_, c)| c * c)
            .sum::<f64>()
            .sqrt()
    }

    /// Euclidean norm of everything whose grade is not in `grades`.
    pub fn norm_outside_grades(&self, grades: &[usize]) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(m, _)| !grades.contains(&grade_of(*m)))
            .map(|(_, c)| c * c)
            .sum::<f64>()
            .sqrt()
    }

    /// `Sc(a conj(b))`, evaluated blade by blade through the product signs.
    pub fn scalar_product(&self, other: &Self) -> Result<f64> {
        self.same_n(other)?;
        // Only e_A conj(e_A) has a scalar part.
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .map(|(m, (a, b))| a * b * conjugation_sign(grade_of(m)) * blade_sign(m, m))
            .sum())
    }

    /// Pseudo-norm `sqrt(Sc(a conj(a)))`.
    pub fn norm(&self) -> f64 {
        self.scalar_product(self).expect("same algebra").max(0.0).sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { n: self.n, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { n: self.n, coeffs })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    fn same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_GENERATORS {
        return Err(Error::InvalidInput(format!("n = {n} exceeds maximum {MAX_GENERATORS}")));
    }
    Ok(())
}

/// Label of a blade: `1`, `e1`, `e1e2`, ...
pub fn blade_label(mask: usize) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut s = String::new();
    let mut i = 1;
    let mut m = mask;
    while m != 0 {
        if m & 1 == 1 {
            s.push_str(&format!("e{i}"));
        }
        m >>= 1;
        i += 1;
    }
    s
}

// Operator forms panic on mismatched `n`; use the `try_*` / `geometric_product`
// methods for fallible arithmetic.

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("dimension mismatch in geometric product")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("dimension mismatch in addition")
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("dimension mismatch in subtraction")
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}{}", blade_label(m))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, gens: &[usize]) -> Multivector {
        Multivector::from_generators(n, gens).unwrap()
    }

    fn one(n: usize) -> Multivector {
        Multivector::scalar(n, 1.0).unwrap()
    }

    #[test]
    fn generators_square_to_minus_one() {
        for n in 1..=6 {
            for i in 1..=n {
                assert_eq!(&e(n, &[i]) * &e(n, &[i]), one(n).scale(-1.0));
            }
        }
    }

    #[test]
    fn generators_anticommute() {
        let e12 = Multivector::blade(2, 0b11).unwrap();
        assert_eq!(&e(2, &[1]) * &e(2, &[2]), e12);
        assert_eq!(&e(2, &[2]) * &e(2, &[1]), e12.scale(-1.0));
    }

    #[test]
    fn pseudoscalar_of_cl3_squares_to_plus_one() {
        let i = e(3, &[1, 2, 3]);
        assert_eq!(&i * &i, one(3));
    }

    #[test]
    fn dimension_mismatch() {
        let a = one(2);
        let b = one(3);
        assert_eq!(a.geometric_product(&b), Err(Error::DimensionMismatch { left: 2, right: 3 }));
        assert!(a.scalar_product(&b).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let n = 3;
        assert_eq!(e(n, &[1]).conjugate(), e(n, &[1]).scale(-1.0));
        assert_eq!(e(n, &[1, 2]).conjugate(), e(n, &[1, 2]).scale(-1.0));
        let a = &(&one(n) + &e(n, &[1])) + &e(n, &[1, 2]);
        let expect = &(&one(n) - &e(n, &[1])) - &e(n, &[1, 2]);
        assert_eq!(a.conjugate(), expect);
    }

    #[test]
    fn reversion_examples() {
        let n = 3;
        assert_eq!(e(n, &[1]).reversion(), e(n, &[1]));
        assert_eq!(e(n, &[1, 2]).reversion(), e(n, &[2, 1]));
        assert_eq!(e(n, &[1, 2, 3]).reversion(), e(n, &[1, 2, 3]).scale(-1.0));
    }

    #[test]
    fn grade_projection_examples() {
        let n = 2;
        let a = &(&one(n).scale(3.0) + &e(n, &[1])) + &e(n, &[1, 2]);
        assert_eq!(a.grade_project(0).unwrap(), one(n).scale(3.0));
        assert_eq!(a.grade_project(2).unwrap(), e(n, &[1, 2]));
        assert!(a.grade_project(3).is_err());
    }

    #[test]
    fn scalar_product_examples() {
        let n = 3;
        assert_eq!(e(n, &[1]).scalar_product(&e(n, &[2])).unwrap(), 0.0);
        assert_eq!(e(n, &[1, 2]).scalar_product(&e(n, &[1, 2])).unwrap(), 1.0);
        assert_eq!(e(n, &[1, 2, 3]).norm(), 1.0);
    }

    #[test]
    fn cl0_is_the_reals() {
        let a = Multivector::scalar(0, 3.0).unwrap();
        let b = Multivector::scalar(0, -2.0).unwrap();
        assert_eq!((&a * &b).scalar_part(), -6.0);
    }

    #[test]
    fn blade_labels() {
        assert_eq!(blade_label(0), "1");
        assert_eq!(blade_label(0b101), "e1e3");
        assert_eq!(blade_label(1 << 11), "e12");
    }

    #[test]
    fn n_is_capped() {
        assert!(Multivector::zero(12).is_ok());
        assert!(Multivector::zero(13).is_err());
    }
}
