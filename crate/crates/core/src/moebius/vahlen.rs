use serde::Serialize;

use super::generator::Generator;
use crate::clifford::{
    factor_paravector_product, paravector_product, squared_norm_scalar, versor_inverse, Multivector, Paravector,
};
use crate::error::{Error, Result};

/// Relative tolerance for grade and factorisation checks on matrix entries.
const ENTRY_TOL: f64 = 1e-9;

/// A matrix entry together with a paravector factorisation of it, when one
/// is known. The zero entry is the one-factor product `[0]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VahlenEntry {
    pub value: Multivector,
    pub factors: Option<Vec<Paravector>>,
}

impl VahlenEntry {
    pub fn from_factors(n: usize, factors: Vec<Paravector>) -> Result<Self> {
        let value = paravector_product(n, &factors)?;
        Ok(Self { value, factors: Some(factors) })
    }

    pub fn scalar(n: usize, s: f64) -> Self {
        Self { value: Multivector::scalar(n, s).expect("n checked"), factors: Some(vec![Paravector::scalar(n, s)]) }
    }

    /// An entry given only by its value; a factorisation is searched for.
    pub fn from_value(value: Multivector) -> Self {
        let factors = factor_paravector_product(&value, ENTRY_TOL);
        Self { value, factors }
    }

    fn mul(&self, other: &Self) -> Self {
        let value = &self.value * &other.value;
        let factors = match (&self.factors, &other.factors) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Self { value, factors }
    }

    /// Sum of two products. A term that is exactly zero is dropped; a
    /// genuine sum is refactored from its value.
    fn sum(a: Self, b: Self) -> Self {
        if b.value.is_zero() {
            a
        } else if a.value.is_zero() {
            b
        } else {
            Self::from_value(&a.value + &b.value)
        }
    }

    /// The factor list reproduces the value.
    fn factorization_holds(&self) -> bool {
        let Some(f) = &self.factors else { return false };
        let Ok(p) = paravector_product(self.value.n(), f) else { return false };
        p.max_abs_diff(&self.value) <= ENTRY_TOL * self.value.max_abs().max(1.0)
    }
}

/// Flags for the three matrix conditions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VahlenVerdict {
    /// (i) every entry carries a paravector factorisation reproducing it.
    pub entries_factored: bool,
    /// `alpha delta* - beta gamma*`.
    pub pseudo_determinant: Vec<f64>,
    /// (ii) the pseudo-determinant is nonzero.
    pub pseudo_determinant_nonzero: bool,
    /// The pseudo-determinant is a real number up to relative `1e-9`.
    pub pseudo_determinant_real: bool,
    /// (iii) `alpha^{-1} beta` is a paravector; `None` if `alpha = 0`.
    pub alpha_inv_beta_paravector: Option<bool>,
    /// (iii) `gamma^{-1} delta` is a paravector; `None` if `gamma = 0`.
    pub gamma_inv_delta_paravector: Option<bool>,
    pub passes: bool,
}

/// A 2×2 matrix `[[alpha, beta], [gamma, delta]]` over `Cl_n` acting by
/// `z -> (alpha z + beta)(gamma z + delta)^{-1}` on paravectors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VahlenMatrix {
    n: usize,
    pub alpha: VahlenEntry,
    pub beta: VahlenEntry,
    pub gamma: VahlenEntry,
    pub delta: VahlenEntry,
    /// Generator word the matrix was built from (empty for raw matrices).
    pub word: Vec<Generator>,
}

impl VahlenMatrix {
    pub fn identity(n: usize) -> Result<Self> {
        Multivector::zero(n)?;
        Ok(Self {
            n,
            alpha: VahlenEntry::scalar(n, 1.0),
            beta: VahlenEntry::scalar(n, 0.0),
            gamma: VahlenEntry::scalar(n, 0.0),
            delta: VahlenEntry::scalar(n, 1.0),
            word: Vec::new(),
        })
    }

    /// A matrix from raw entries; factorisations are searched for.
    pub fn from_entries(alpha: Multivector, beta: Multivector, gamma: Multivector, delta: Multivector) -> Result<Self> {
        let n = alpha.n();
        for m in [&beta, &gamma, &delta] {
            if m.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: m.n() });
            }
        }
        Ok(Self {
            n,
            alpha: VahlenEntry::from_value(alpha),
            beta: VahlenEntry::from_value(beta),
            gamma: VahlenEntry::from_value(gamma),
            delta: VahlenEntry::from_value(delta),
            word: Vec::new(),
        })
    }

    /// Canonical matrices: translation `(1, w, 0, 1)`, dilation
    /// `(t, 0, 0, 1)`, inversion `(0, 1, 1, 0)`, and for rotation by unit
    /// paravectors `p_1 .. p_k` the pair `alpha = p_1 ... p_k`,
    /// `delta = conj(p_1) ... conj(p_k)`, so that the map is
    /// `z -> alpha z alpha*` with `alpha*` the reversion.
    pub fn generator(n: usize, g: &Generator) -> Result<Self> {
        g.validate(n + 1)?;
        let mut m = Self::identity(n)?;
        match g {
            Generator::Translate { w } => {
                m.beta = VahlenEntry::from_factors(n, vec![Paravector::new(n, w.clone())?])?;
            }
            Generator::Dilate { t } => m.alpha = VahlenEntry::scalar(n, *t),
            Generator::Rotate { u } => {
                let units = u
                    .factors()
                    .into_iter()
                    .map(|f| Paravector::new(n, f)?.normalized(0.0))
                    .collect::<Result<Vec<_>>>()?;
                let conj: Vec<Paravector> = units.iter().map(Paravector::conjugate).collect();
                m.alpha = VahlenEntry::from_factors(n, units)?;
                m.delta = VahlenEntry::from_factors(n, conj)?;
            }
            Generator::Inversion => {
                m.alpha = VahlenEntry::scalar(n, 0.0);
                m.beta = VahlenEntry::scalar(n, 1.0);
                m.gamma = VahlenEntry::scalar(n, 1.0);
                m.delta = VahlenEntry::scalar(n, 0.0);
            }
        }
        m.word = vec![g.clone()];
        Ok(m)
    }

    /// Word applied first to last: the product `M_last ... M_first`.
    pub fn from_word(n: usize, word: &[Generator]) -> Result<Self> {
        word.iter()
            .try_fold(Self::identity(n)?, |acc, g| Self::compose(&Self::generator(n, g)?, &acc))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix product `m1 m2`, i.e. the map `m1 ∘ m2`.
    pub fn compose(m1: &Self, m2: &Self) -> Result<Self> {
        if m1.n != m2.n {
            return Err(Error::DimensionMismatch { left: m1.n, right: m2.n });
        }
        let entry = |a: &VahlenEntry, b: &VahlenEntry, c: &VahlenEntry, d: &VahlenEntry| {
            VahlenEntry::sum(a.mul(b), c.mul(d))
        };
        let mut word = m2.word.clone();
        word.extend_from_slice(&m1.word);
        Ok(Self {
            n: m1.n,
            alpha: entry(&m1.alpha, &m2.alpha, &m1.beta, &m2.gamma),
            beta: entry(&m1.alpha, &m2.beta, &m1.beta, &m2.delta),
            gamma: entry(&m1.gamma, &m2.alpha, &m1.delta, &m2.gamma),
            delta: entry(&m1.gamma, &m2.beta, &m1.delta, &m2.delta),
            word,
        })
    }

    pub fn check_conditions(&self) -> VahlenVerdict {
        let entries = [&self.alpha, &self.beta, &self.gamma, &self.delta];
        let entries_factored = entries.iter().all(|e| e.factorization_holds());

        let pd = &(&self.alpha.value * &self.delta.value.reversion())
            - &(&self.beta.value * &self.gamma.value.reversion());
        let pd_norm = pd.norm();
        let scale = entries.iter().map(|e| e.value.norm()).fold(0.0, f64::max).powi(2).max(f64::MIN_POSITIVE);
        let pseudo_determinant_nonzero = pd_norm > ENTRY_TOL * scale;
        let pseudo_determinant_real = pd.norm_outside_grades(&[0]) <= ENTRY_TOL * pd_norm.max(ENTRY_TOL * scale);

        let quotient_is_paravector = |num: &VahlenEntry, den: &VahlenEntry| -> Option<bool> {
            if den.value.is_zero() {
                return None;
            }
            match versor_inverse(&den.value, 0.0, ENTRY_TOL) {
                Ok(inv) => {
                    let q = &inv * &num.value;
                    Some(q.norm_outside_grades(&[0, 1]) <= ENTRY_TOL * q.norm().max(1.0))
                }
                Err(_) => Some(false),
            }
        };
        let alpha_inv_beta_paravector = quotient_is_paravector(&self.beta, &self.alpha);
        let gamma_inv_delta_paravector = quotient_is_paravector(&self.delta, &self.gamma);

        let passes = entries_factored
            && pseudo_determinant_nonzero
            && pseudo_determinant_real
            && alpha_inv_beta_paravector != Some(false)
            && gamma_inv_delta_paravector != Some(false);
        VahlenVerdict {
            entries_factored,
            pseudo_determinant: pd.into_coeffs(),
            pseudo_determinant_nonzero,
            pseudo_determinant_real,
            alpha_inv_beta_paravector,
            gamma_inv_delta_paravector,
            passes,
        }
    }

    /// `(alpha z + beta)(gamma z + delta)^{-1}`, checked to be a paravector
    /// and projected.
    pub fn eval(&self, z: &Paravector, pole_eps: f64) -> Result<Paravector> {
        if z.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: z.n() });
        }
        let zm = z.to_multivector();
        let num = &(&self.alpha.value * &zm) + &self.beta.value;
        let den = &(&self.gamma.value * &zm) + &self.delta.value;
        let nn = squared_norm_scalar(&den, ENTRY_TOL)
            .map_err(|e| Error::InvalidMatrix(format!("gamma z + delta is not a product of paravectors: {e}")))?;
        let dn = nn.max(0.0).sqrt();
        if dn <= pole_eps * (1.0 + z.norm()) {
            return Err(Error::Pole { point: z.coeffs().to_vec(), norm: dn });
        }
        let inv = den.conjugate().scale(1.0 / nn);
        let out = &num * &inv;
        let outside = out.norm_outside_grades(&[0, 1]);
        let bound = ENTRY_TOL * (num.norm() * inv.norm()).max(f64::MIN_POSITIVE);
        if outside > bound {
            return Err(Error::InvalidMatrix(format!(
                "value leaves the paravector space (non-paravector part {outside:e})"
            )));
        }
        Ok(Paravector::project(&out))
    }

    pub fn contains_inversion(&self) -> bool {
        !self.gamma.value.is_zero()
    }
}
