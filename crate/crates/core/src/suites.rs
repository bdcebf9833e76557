//! Randomised identity suites for the algebras, as run by `verify-algebra`.
//!
//! Each check reports the largest relative residual over its trials and
//! whether the identity is *expected* to hold; a check is `ok` when the
//! outcome matches the expectation (the sedenion composition check is
//! expected to fail).

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cayley_dickson::{find_zero_divisor, CdElement};
use crate::clifford::{paravector_product, Multivector, Paravector};
use crate::conformal::SCHEMA_VERSION;
use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::sampling::stream_rng;

/// Threshold for exact-arithmetic identities (relative).
pub const IDENTITY_TOL: f64 = 1e-12;
/// Threshold for Clifford associativity (relative), accumulated over
/// longer sums.
pub const ASSOCIATIVITY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Moufang,
    Composition,
    ZeroDivisors,
    PseudoNorm,
    Associativity,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "moufang" => Suite::Moufang,
            "composition" => Suite::Composition,
            "zero-divisors" => Suite::ZeroDivisors,
            "pseudo-norm" => Suite::PseudoNorm,
            "associativity" => Suite::Associativity,
            "all" => Suite::All,
            other => return Err(Error::InvalidInput(format!("unknown suite '{other}'"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub algebra: String,
    pub trials: usize,
    pub max_residual: f64,
    pub threshold: f64,
    pub holds: bool,
    pub expected: bool,
    pub ok: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub all_ok: bool,
}

#[allow(clippy::too_many_arguments)]
fn check(
    suite: Suite,
    name: &str,
    algebra: &str,
    trials: usize,
    max_residual: f64,
    threshold: f64,
    expected: bool,
    detail: Option<String>,
) -> CheckResult {
    let holds = max_residual < threshold;
    CheckResult {
        suite,
        name: name.into(),
        algebra: algebra.into(),
        trials,
        max_residual,
        threshold,
        holds,
        expected,
        ok: holds == expected,
        detail,
    }
}

pub fn random_octonion<R: Rng>(rng: &mut R) -> Octonion {
    Octonion(std::array::from_fn(|_| rng.random_range(-1.0..1.0)))
}

pub fn random_multivector<R: Rng>(rng: &mut R, n: usize) -> Multivector {
    Multivector::new(n, (0..1usize << n).map(|_| rng.random_range(-1.0..1.0)).collect()).expect("n <= 12")
}

pub fn random_paravector<R: Rng>(rng: &mut R, n: usize) -> Paravector {
    Paravector::new(n, (0..=n).map(|_| rng.random_range(-1.0..1.0)).collect()).expect("n + 1 coefficients")
}

fn random_cd<R: Rng>(rng: &mut R, level: u32) -> CdElement {
    CdElement::new(level, (0..1usize << level).map(|_| rng.random_range(-1.0..1.0)).collect()).expect("level <= 6")
}

/// Max relative residual of `identity` over `trials` random octonion triples.
fn octonion_trials<F>(rng: &mut ChaCha8Rng, trials: usize, identity: F) -> f64
where
    F: Fn(Octonion, Octonion, Octonion) -> f64,
{
    (0..trials)
        .map(|_| {
            let (a, b, c) = (random_octonion(rng), random_octonion(rng), random_octonion(rng));
            identity(a, b, c)
        })
        .fold(0.0, f64::max)
}

fn moufang(trials: usize, seed: u64) -> Vec<CheckResult> {
    let s = Suite::Moufang;
    let mut out = Vec::new();
    let mut rng = stream_rng(seed, 101);
    let r = octonion_trials(&mut rng, trials, |a, b, c| {
        ((a * b) * (c * a) - a * ((b * c) * a)).norm() / (a.norm() * b.norm() * c.norm() * a.norm())
    });
    out.push(check(s, "(ab)(ca) = a((bc)a)", "octonion", trials, r, IDENTITY_TOL, true, None));
    let mut rng = stream_rng(seed, 102);
    let r = octonion_trials(&mut rng, trials, |a, b, _| {
        ((a * b) * a - a * (b * a)).norm() / (a.norm() * b.norm() * a.norm())
    });
    out.push(check(s, "(ab)a = a(ba)", "octonion", trials, r, IDENTITY_TOL, true, None));
    let mut rng = stream_rng(seed, 103);
    let r = octonion_trials(&mut rng, trials, |a, b, _| {
        let bb = b.conj() * b;
        let scale = a.norm() * b.norm_sqr();
        ((a * b.conj()) * b - a * bb).norm().max((b.conj() * (b * a) - a * bb).norm()) / scale
    });
    out.push(check(s, "(a conj b)b = conj(b)(ba) = a(conj(b) b)", "octonion", trials, r, IDENTITY_TOL, true, None));
    let mut rng = stream_rng(seed, 104);
    let r = octonion_trials(&mut rng, trials, |a, b, c| {
        let lhs = ((b * (a.conj() * a)) * c).re();
        let rhs = ((b * a.conj()) * (a * c)).re();
        (lhs - rhs).abs() / (a.norm() * a.norm() * b.norm() * c.norm())
    });
    out.push(check(s, "Re{b(conj(a)a)c} = Re{(b conj a)(ac)}", "octonion", trials, r, IDENTITY_TOL, true, None));
    out
}

fn composition(trials: usize, seed: u64) -> Vec<CheckResult> {
    let s = Suite::Composition;
    let mut out = Vec::new();
    let mut rng = stream_rng(seed, 201);
    let r = octonion_trials(&mut rng, trials, |a, b, _| ((a * b).norm() - a.norm() * b.norm()).abs() / (a.norm() * b.norm()));
    out.push(check(s, "|ab| = |a||b|", "octonion", trials, r, IDENTITY_TOL, true, None));

    for level in 1..=3u32 {
        let mut rng = stream_rng(seed, 210 + level as u64);
        let r = (0..trials)
            .map(|_| {
                let (a, b) = (random_cd(&mut rng, level), random_cd(&mut rng, level));
                let ab = a.mul(&b).expect("same level");
                (ab.norm() - a.norm() * b.norm()).abs() / (a.norm() * b.norm())
            })
            .fold(0.0, f64::max);
        let name = ["", "complex", "quaternion", "octonion (doubling)"][level as usize];
        out.push(check(s, "|ab| = |a||b|", name, trials, r, IDENTITY_TOL, true, None));
    }

    // Sedenions: the pair from the zero-divisor search breaks the property.
    match find_zero_divisor(4, IDENTITY_TOL) {
        Ok(Some(pair)) => {
            let ab = pair.left.mul(&pair.right).expect("same level");
            let r = (ab.norm() - pair.left.norm() * pair.right.norm()).abs() / (pair.left.norm() * pair.right.norm());
            out.push(check(s, "|ab| = |a||b|", "sedenion", 1, r, IDENTITY_TOL, false, Some(pair.description)));
        }
        _ => out.push(check(s, "|ab| = |a||b|", "sedenion", 0, 0.0, IDENTITY_TOL, false, Some("no pair found".into()))),
    }

    for n in 3..=6 {
        let mut rng = stream_rng(seed, 220 + n as u64);
        let r = (0..trials)
            .map(|_| {
                // Products of one to three paravectors on each side.
                let k1 = rng.random_range(1..=3);
                let k2 = rng.random_range(1..=3);
                let f1: Vec<Paravector> = (0..k1).map(|_| random_paravector(&mut rng, n)).collect();
                let f2: Vec<Paravector> = (0..k2).map(|_| random_paravector(&mut rng, n)).collect();
                let a = paravector_product(n, &f1).expect("same n");
                let b = paravector_product(n, &f2).expect("same n");
                ((&a * &b).norm() - a.norm() * b.norm()).abs() / (a.norm() * b.norm())
            })
            .fold(0.0, f64::max);
        out.push(check(s, "|ab| = |a||b| for products of paravectors", &format!("Cl_{n}"), trials, r, IDENTITY_TOL, true, None));
    }
    out
}

fn zero_divisors() -> Vec<CheckResult> {
    let s = Suite::ZeroDivisors;
    let mut out = Vec::new();
    for level in 1..=4u32 {
        let name = ["", "complex", "quaternion", "octonion (doubling)", "sedenion"][level as usize];
        let found = find_zero_divisor(level, IDENTITY_TOL).expect("supported level");
        // Here the checked statement is "a zero divisor of this form exists".
        let expected = level == 4;
        let holds = found.is_some();
        out.push(CheckResult {
            suite: s,
            name: "zero divisor among (e_p ± e_q)(e_r ± e_s)".into(),
            algebra: name.into(),
            trials: 1,
            max_residual: found.as_ref().map_or(f64::NAN, |p| p.product_norm),
            threshold: IDENTITY_TOL,
            holds,
            expected,
            ok: holds == expected,
            detail: found.map(|p| format!("{} (|a||b| = {})", p.description, p.left.norm() * p.right.norm())),
        });
    }
    let n = 3;
    let e123 = Multivector::from_generators(n, &[1, 2, 3]).expect("n = 3");
    let one = Multivector::scalar(n, 1.0).expect("n = 3");
    let prod = &(&one + &e123) * &(&one - &e123);
    out.push(check(
        s,
        "(1 + e123)(1 - e123) = 0",
        "Cl_3",
        1,
        prod.max_abs(),
        f64::MIN_POSITIVE,
        true,
        Some(format!("|1 ± e123| = {}", (&one + &e123).norm())),
    ));
    out
}

fn pseudo_norm(trials: usize, seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let mut rng = stream_rng(seed, 300 + n as u64);
        let bound = 2f64.powf(n as f64 / 2.0);
        let worst = (0..trials)
            .map(|_| {
                let (a, b) = (random_multivector(&mut rng, n), random_multivector(&mut rng, n));
                (&a * &b).norm() / (bound * a.norm() * b.norm())
            })
            .fold(0.0, f64::max);
        // Residual: how far the worst ratio exceeds 1 (0 if within the bound).
        let excess = (worst - 1.0).max(0.0);
        out.push(check(
            Suite::PseudoNorm,
            "|ab| <= 2^(n/2)|a||b|",
            &format!("Cl_{n}"),
            trials,
            excess,
            IDENTITY_TOL,
            true,
            Some(format!("max |ab|/(2^(n/2)|a||b|) = {worst}")),
        ));
    }
    out
}

fn associativity(trials: usize, seed: u64) -> Vec<CheckResult> {
    (3..=6)
        .map(|n| {
            let mut rng = stream_rng(seed, 400 + n as u64);
            let r = (0..trials)
                .map(|_| {
                    let a = random_multivector(&mut rng, n);
                    let b = random_multivector(&mut rng, n);
                    let c = random_multivector(&mut rng, n);
                    (&(&a * &b) * &c - &a * &(&b * &c)).norm() / (a.norm() * b.norm() * c.norm())
                })
                .fold(0.0, f64::max);
            check(Suite::Associativity, "(ab)c = a(bc)", &format!("Cl_{n}"), trials, r, ASSOCIATIVITY_TOL, true, None)
        })
        .collect()
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(Error::InvalidInput("trials must be at least 1".into()));
    }
    let checks = match suite {
        Suite::Moufang => moufang(trials, seed),
        Suite::Composition => composition(trials, seed),
        Suite::ZeroDivisors => zero_divisors(),
        Suite::PseudoNorm => pseudo_norm(trials, seed),
        Suite::Associativity => associativity(trials, seed),
        Suite::All => {
            let mut all = moufang(trials, seed);
            all.extend(composition(trials, seed));
            all.extend(zero_divisors());
            all.extend(pseudo_norm(trials, seed));
            all.extend(associativity(trials, seed));
            all
        }
    };
    let all_ok = checks.iter().all(|c| c.ok);
    Ok(SuiteReport { schema: SCHEMA_VERSION, suite, trials, seed, checks, all_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_a_small_run() {
        let r = run_suite(Suite::All, 200, 5).unwrap();
        for c in &r.checks {
            assert!(c.ok, "{c:?}");
        }
        assert!(r.all_ok);
        let sed = r.checks.iter().find(|c| c.algebra == "sedenion" && c.suite == Suite::Composition).unwrap();
        assert!(!sed.holds && !sed.expected);
    }

    #[test]
    fn unknown_suite_and_zero_trials_are_rejected() {
        assert!(Suite::parse("bogus").is_err());
        assert!(run_suite(Suite::Moufang, 0, 1).is_err());
    }
}
