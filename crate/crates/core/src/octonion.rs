//! Table-driven octonions.
//!
//! The imaginary units follow the labelling `e4 = e1 e2`, `e5 = e1 e3`,
//! `e6 = e2 e3`, `e7 = (e1 e2) e3`. This is *not* the index order produced by
//! the doubling recursion in [`crate::cayley_dickson`]; the two models are only
//! compared through basis-independent identities.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(sign, unit)` entries for `e_row * e_col`, rows and columns `e1..e7`.
const IMAGINARY_TABLE: [[(i8, u8); 7]; 7] = [
    [(-1, 0), (1, 4), (1, 5), (-1, 2), (-1, 3), (-1, 7), (1, 6)],
    [(-1, 4), (-1, 0), (1, 6), (1, 1), (1, 7), (-1, 3), (-1, 5)],
    [(-1, 5), (-1, 6), (-1, 0), (-1, 7), (1, 1), (1, 2), (1, 4)],
    [(1, 2), (-1, 1), (1, 7), (-1, 0), (-1, 6), (1, 5), (-1, 3)],
    [(1, 3), (-1, 7), (-1, 1), (1, 6), (-1, 0), (-1, 4), (1, 2)],
    [(1, 7), (1, 3), (-1, 2), (-1, 5), (1, 4), (-1, 0), (-1, 1)],
    [(-1, 6), (1, 5), (-1, 4), (1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Full 8x8 structure constants with `e0 = 1` as neutral element.
const fn full_table() -> [[(i8, u8); 8]; 8] {
    let mut t = [[(1i8, 0u8); 8]; 8];
    let mut i = 0;
    while i < 8 {
        t[0][i] = (1, i as u8);
        t[i][0] = (1, i as u8);
        i += 1;
    }
    let mut r = 0;
    while r < 7 {
        let mut c = 0;
        while c < 7 {
            t[r + 1][c + 1] = IMAGINARY_TABLE[r][c];
            c += 1;
        }
        r += 1;
    }
    t
}

const TABLE: [[(i8, u8); 8]; 8] = full_table();

/// An octonion `x0 + x1 e1 + ... + x7 e7`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub const fn new(coeffs: [f64; 8]) -> Self {
        Octonion(coeffs)
    }

    /// Basis unit `e_k`; `k = 0` is the real unit.
    ///
    /// # Panics
    /// If `k > 7`.
    pub fn unit(k: usize) -> Self {
        assert!(k < 8, "octonion unit index {k} out of range");
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Octonion(c)
    }

    pub fn real(x: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = x;
        Octonion(c)
    }

    pub fn from_slice(s: &[f64]) -> Result<Self> {
        let arr: [f64; 8] = s
            .try_into()
            .map_err(|_| Error::DimensionMismatch { left: 8, right: s.len() })?;
        Ok(Octonion(arr))
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn re(&self) -> f64 {
        self.0[0]
    }

    pub fn conj(&self) -> Self {
        let mut c = self.0;
        for x in &mut c[1..] {
            *x = -*x;
        }
        Octonion(c)
    }

    /// `<a, b> = sum a_i b_i`.
    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Product through the structure table.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = [0.0; 8];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                let (s, k) = TABLE[i][j];
                out[k as usize] += f64::from(s) * a * b;
            }
        }
        Octonion(out)
    }

    /// `conj(a) / |a|^2`; fails if `|a| <= eps`.
    pub fn inverse(&self, eps: f64) -> Result<Self> {
        let n2 = self.norm_sqr();
        let n = n2.sqrt();
        if !(n > eps) {
            return Err(Error::Singular { norm: n });
        }
        Ok(self.conj() * (1.0 / n2))
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut c = self.0;
        for x in &mut c {
            *x *= s;
        }
        Octonion(c)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `(sign, k)` with `e_i e_j = sign * e_k`, both indices in `0..8`.
    pub fn basis_product(i: usize, j: usize) -> (i8, usize) {
        let (s, k) = TABLE[i][j];
        (s, k as usize)
    }
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Octonion(c)
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Self) -> Self {
        Octonion::mul(&self, &rhs)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        rhs.scale(self)
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;
    fn div(self, rhs: f64) -> Self {
        self.scale(1.0 / rhs)
    }
}

impl From<f64> for Octonion {
    fn from(x: f64) -> Self {
        Octonion::real(x)
    }
}

/// Label of a signed basis unit as printed in multiplication tables.
pub fn unit_label(sign: i8, k: usize) -> String {
    let body = if k == 0 { "1".to_string() } else { format!("e{k}") };
    if sign < 0 {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}e{k}")?;
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

    fn e(k: usize) -> Octonion {
        Octonion::unit(k)
    }

    #[test]
    fn named_table_cells() {
        assert_eq!(e(1) * e(2), e(4));
        assert_eq!(e(7) * e(6), e(1));
        assert_eq!(e(6) * e(7), -e(1));
        assert_eq!(e(3) * e(3), -Octonion::ONE);
    }

    #[test]
    fn generated_units_match_labelling() {
        assert_eq!(e(1) * e(2), e(4));
        assert_eq!(e(1) * e(3), e(5));
        assert_eq!(e(2) * e(3), e(6));
        assert_eq!((e(1) * e(2)) * e(3), e(7));
        assert_eq!(e(4) * e(3), e(7));
    }

    #[test]
    fn distinct_units_anticommute() {
        for i in 1..8 {
            for j in 1..8 {
                if i != j {
                    assert_eq!(e(i) * e(j), -(e(j) * e(i)), "e{i} e{j}");
                }
            }
        }
    }

    #[test]
    fn neutral_element() {
        let a = Octonion::new([0.3, -1.0, 2.0, 0.5, -0.25, 4.0, 1.5, -3.0]);
        assert_eq!(Octonion::ONE * a, a);
        assert_eq!(a * Octonion::ONE, a);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Octonion::ONE.inverse(1e-12).unwrap(), Octonion::ONE);
        assert_eq!(e(3).inverse(1e-12).unwrap(), -e(3));
        let a = Octonion::ONE + e(1);
        let inv = a.inverse(1e-12).unwrap();
        assert_eq!(inv, (Octonion::ONE - e(1)) * 0.5);
        assert!((a * inv).max_abs_diff(&Octonion::ONE) < 1e-15);
        assert!((inv * a).max_abs_diff(&Octonion::ONE) < 1e-15);
    }

    #[test]
    fn inverse_of_zero_is_singular() {
        assert!(matches!(Octonion::ZERO.inverse(1e-12), Err(Error::Singular { .. })));
        assert!(Octonion::real(1e-13).inverse(1e-12).is_err());
    }

    #[test]
    fn scalar_product_examples() {
        assert_eq!(e(1).dot(&e(2)), 0.0);
        assert_eq!((Octonion::ONE + e(1)).dot(&(Octonion::ONE - e(1))), 0.0);
        let a = Octonion::new([1.0, 2.0, 0.0, -1.0, 0.5, 0.0, 3.0, 1.0]);
        let b = Octonion::new([0.0, -1.0, 4.0, 2.0, 0.0, 1.0, -0.5, 2.0]);
        assert!((a.dot(&b) - (a * b.conj()).re()).abs() < 1e-14);
    }

    #[test]
    fn conjugation_negates_imaginary_units() {
        for k in 1..8 {
            assert_eq!(e(k).conj(), -e(k));
        }
        assert_eq!(Octonion::ONE.conj(), Octonion::ONE);
    }
}
