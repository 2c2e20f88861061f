//! Searching for a power `nu` with `Tr(A^nu) > B`.
//!
//! [`find_nu`] is the workhorse: an exact linear scan over the power sums of
//! the characteristic polynomial up to `ceil(m^(2+eps))`. The two
//! proof-structured routes, [`find_nu_expanding`] for matrices with an
//! eigenvalue off the unit circle and [`find_nu_cyclotomic`] for matrices
//! whose spectrum is made of roots of unity, produce certificates that say
//! which branch of the argument applies. [`dirichlet_nu`],
//! [`newton_girard_nu`] and [`fejer_value`] are the standalone lemmas those
//! routes rest on.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::{
    self, cyclotomic, cyclotomic_factorization, euler_phi, power_roots_poly, totient_threshold,
    CyclotomicFactorization, IntPolynomial, PowerSums,
};
use crate::spectral;

/// Default threshold `B`; `Tr > 2` is exactly a negative Lefschetz number.
pub const DEFAULT_B: i64 = 2;
pub const DEFAULT_EPSILON: f64 = 0.5;
/// Largest tuple [`dirichlet_nu`] accepts by default; the scan visits
/// `8^m + 1` powers.
pub const DEFAULT_DIRICHLET_CAP: usize = 8;
/// Longest trace period scanned when classifying a failed search.
pub const PERIOD_SCAN_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    Expanding,
    CyclotomicLargeKl,
    CyclotomicSmallKl,
    DirectScan,
}

/// Which part of the expanding-case argument the returned power falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpandingSubcase {
    /// `nu <= K0` and the normalized sum `Tr(A^nu) / rho^nu` already exceeds `B`.
    NormalizedSumExceedsB,
    /// `K0 <= nu <= K`: the Fejér-kernel averaging window.
    FejerWindow,
    /// `nu < K0` with the normalized sum at most `B`; the trace exceeded `B`
    /// through the growth of `rho^nu`.
    EarlyGrowth,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CaseDetail {
    Expanding {
        k0: u64,
        k: u64,
        rho: Option<f64>,
        normalized_sum: Option<f64>,
        subcase: Option<ExpandingSubcase>,
    },
    CyclotomicLargeKl {
        k_l: u64,
        b_prime: u64,
        phi_k_l: u64,
        nu_prime: u64,
        #[serde(with = "crate::serde_util::bigint")]
        power_sum: BigInt,
    },
    CyclotomicSmallKl {
        k_l: u64,
        b_prime: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NuCertificate {
    pub nu: u64,
    #[serde(with = "crate::serde_util::bigint")]
    pub trace: BigInt,
    pub threshold_b: i64,
    pub case: CaseTag,
    pub horizon: u64,
    /// `Tr(A^j) <= B` for every `1 <= j < nu`.
    pub minimal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<CaseDetail>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchFailure {
    pub horizon: u64,
    pub threshold_b: i64,
    /// Largest trace over the scanned window (the horizon, extended to one
    /// full period when the sequence is periodic).
    #[serde(with = "crate::serde_util::bigint")]
    pub max_trace_seen: BigInt,
    /// The characteristic polynomial is a product of cyclotomic polynomials,
    /// so the trace sequence is periodic.
    pub periodic: bool,
    pub period: Option<u64>,
    /// Smallest `nu` past the horizon with `Tr(A^nu) > B`, found while
    /// scanning one full period.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_beyond_horizon: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found(NuCertificate),
    Exhausted(SearchFailure),
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&NuCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::Exhausted(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&SearchFailure> {
        match self {
            SearchOutcome::Found(_) => None,
            SearchOutcome::Exhausted(f) => Some(f),
        }
    }
}

/// How far [`find_nu`] scans.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum HorizonMode {
    /// `ceil(m^(2+eps))`
    Proven,
    /// `ceil(slope * m)`. Experimental: a linear horizon is only expected
    /// under the Schinzel-Zassenhaus conjecture.
    ConjecturalLinear { slope: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub horizon: HorizonMode,
    /// Hard cap on any scan, whatever the horizon says.
    pub max_nu: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            horizon: HorizonMode::Proven,
            max_nu: None,
        }
    }
}

impl SearchConfig {
    fn cap(&self, horizon: u64) -> u64 {
        self.max_nu.map_or(horizon, |c| horizon.min(c))
    }
}

/// `ceil(x)` that ignores floating noise just above an integer, so that
/// `4^2.5` gives 32 rather than 33.
fn robust_ceil(x: f64) -> Result<u64> {
    if !x.is_finite() || x >= u64::MAX as f64 {
        return Err(Error::Overflow(format!("horizon {x} does not fit in u64")));
    }
    let r = x.round();
    let v = if (x - r).abs() <= 1e-9 * x.abs().max(1.0) {
        r
    } else {
        x.ceil()
    };
    Ok(v.max(1.0) as u64)
}

/// `ceil(m^exponent)`
pub fn power_horizon(m: usize, exponent: f64) -> Result<u64> {
    robust_ceil((m as f64).powf(exponent))
}

/// `K0 = ceil(20 (B / c) m (ln m)^3)` from the expanding-case argument.
pub fn expanding_k0(m: usize, b: i64, c: f64) -> Result<u64> {
    let m = m as f64;
    robust_ceil(20.0 * (b.max(0) as f64 / c) * m * m.ln().powi(3))
}

fn require_sl(a: &IntMatrix) -> Result<()> {
    let d = a.det();
    if d.is_one() {
        Ok(())
    } else {
        Err(Error::contract(format!("det(A) = {d}, expected 1")))
    }
}

fn require_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::contract(format!(
            "epsilon must be positive, got {eps}"
        )))
    }
}

/// Minimal `nu <= ceil(m^(2+eps))` with `Tr(A^nu) > B`, by an exact scan.
pub fn find_nu(a: &IntMatrix, b: i64, eps: f64) -> Result<SearchOutcome> {
    find_nu_with(a, b, eps, &SearchConfig::default())
}

pub fn find_nu_with(
    a: &IntMatrix,
    b: i64,
    eps: f64,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    require_sl(a)?;
    require_eps(eps)?;
    let m = a.dim();
    let horizon = match config.horizon {
        HorizonMode::Proven => power_horizon(m, 2.0 + eps)?,
        HorizonMode::ConjecturalLinear { slope } => {
            if !(slope > 0.0) {
                return Err(Error::contract("linear horizon slope must be positive"));
            }
            robust_ceil(slope * m as f64)?
        }
    };
    let horizon = config.cap(horizon);
    let q = a.char_poly();
    let bb = BigInt::from(b);

    let mut sums = PowerSums::new(&q)?;
    let mut max_seen: Option<BigInt> = None;
    for nu in 1..=horizon {
        let s = sums.next().expect("power sums are infinite");
        if s > bb {
            return Ok(SearchOutcome::Found(NuCertificate {
                nu,
                trace: s,
                threshold_b: b,
                case: CaseTag::DirectScan,
                horizon,
                minimal: true,
                detail: None,
            }));
        }
        if max_seen.as_ref().is_none_or(|mx| &s > mx) {
            max_seen = Some(s);
        }
    }

    let factorization = cyclotomic_factorization(&q)?;
    let period = factorization.period();
    let mut first_beyond = None;
    if let Some(p) = period.filter(|&p| p > horizon && p <= PERIOD_SCAN_CAP) {
        for nu in horizon + 1..=p {
            let s = sums.next().expect("power sums are infinite");
            if s > bb && first_beyond.is_none() {
                first_beyond = Some(nu);
            }
            if max_seen.as_ref().is_none_or(|mx| &s > mx) {
                max_seen = Some(s);
            }
        }
    }
    Ok(SearchOutcome::Exhausted(SearchFailure {
        horizon,
        threshold_b: b,
        max_trace_seen: max_seen.unwrap_or_default(),
        periodic: factorization.complete,
        period,
        first_beyond_horizon: first_beyond,
    }))
}

/// The expanding route: `A` has an eigenvalue off the unit circle.
///
/// Scans exactly up to `max(ceil(m^(1+eps)), K0)` and tags the result with
/// the part of the argument it falls in. `c` is the constant of the uniform
/// house floor `1 + c / (d ln(d)^3)`.
pub fn find_nu_expanding(a: &IntMatrix, b: i64, eps: f64, c: f64) -> Result<NuCertificate> {
    find_nu_expanding_with(a, b, eps, c, &SearchConfig::default())
}

pub fn find_nu_expanding_with(
    a: &IntMatrix,
    b: i64,
    eps: f64,
    c: f64,
    config: &SearchConfig,
) -> Result<NuCertificate> {
    require_sl(a)?;
    require_eps(eps)?;
    if !(c > 0.0) {
        return Err(Error::contract("c must be positive"));
    }
    let m = a.dim();
    let q = a.char_poly();
    if cyclotomic_factorization(&q)?.complete {
        return Err(Error::contract(
            "characteristic polynomial is a product of cyclotomics; use the cyclotomic route",
        ));
    }
    let k = power_horizon(m, 1.0 + eps)?;
    let k0 = expanding_k0(m, b, c)?;
    let horizon = k.max(k0);
    let limit = config.cap(horizon);
    let bb = BigInt::from(b);

    let mut sums = PowerSums::new(&q)?;
    let mut max_seen = None::<BigInt>;
    for nu in 1..=limit {
        let s = sums.next().expect("power sums are infinite");
        if s > bb {
            let rho = spectral::house(&q, spectral::DEFAULT_TOLERANCE)
                .ok()
                .map(|h| h.value);
            let normalized = rho.and_then(|r| normalized_sum(&s, r, nu));
            let subcase = normalized.map(|ns| {
                if nu >= k0 {
                    ExpandingSubcase::FejerWindow
                } else if ns > b as f64 {
                    ExpandingSubcase::NormalizedSumExceedsB
                } else {
                    ExpandingSubcase::EarlyGrowth
                }
            });
            return Ok(NuCertificate {
                nu,
                trace: s,
                threshold_b: b,
                case: CaseTag::Expanding,
                horizon,
                minimal: true,
                detail: Some(CaseDetail::Expanding {
                    k0,
                    k,
                    rho,
                    normalized_sum: normalized,
                    subcase,
                }),
            });
        }
        if max_seen.as_ref().is_none_or(|mx| &s > mx) {
            max_seen = Some(s);
        }
    }
    Err(Error::Exhausted {
        horizon: limit,
        detail: format!(
            "expanding route, max trace {}; m may be below the threshold or c too large",
            max_seen.unwrap_or_default()
        ),
    })
}

/// `trace / rho^nu`, computed in log space so large powers do not overflow.
fn normalized_sum(trace: &BigInt, rho: f64, nu: u64) -> Option<f64> {
    if trace.is_zero() {
        return Some(0.0);
    }
    let bits = trace.bits();
    let shift = bits.saturating_sub(900);
    let mantissa = (trace.abs() >> shift).to_f64()?;
    let ln_abs = mantissa.ln() + shift as f64 * std::f64::consts::LN_2 - nu as f64 * rho.ln();
    let v = ln_abs.exp();
    Some(if trace.is_negative() { -v } else { v })
}

/// `Tr(A^nu)` for a matrix whose trace sequence has period `period`, by
/// exact powering after reducing `nu`.
fn periodic_trace(a: &IntMatrix, nu: u64, period: u64) -> Result<BigInt> {
    let r = match nu % period {
        0 => period,
        r => r,
    };
    a.trace_power_direct(r)
}

/// The cyclotomic route: every eigenvalue of `A` is a root of unity.
///
/// With `B' = totient_threshold(B)` and `k_l` the largest cyclotomic index:
/// if `k_l > B'`, `nu = k_l nu'` where `nu'` makes the power sum of
/// `g = (Q / Phi_{k_l})` raised to `k_l` nonnegative, so the trace is
/// `phi(k_l) + S > B`. Otherwise `nu = B'!` and `A^nu` has trace `m`.
pub fn find_nu_cyclotomic(a: &IntMatrix, b: i64) -> Result<NuCertificate> {
    require_sl(a)?;
    let m = a.dim();
    let q = a.char_poly();
    let factorization = cyclotomic_factorization(&q)?;
    if !factorization.complete {
        return Err(Error::contract(
            "characteristic polynomial has a non-cyclotomic factor; use the expanding route",
        ));
    }
    let period = factorization.period().expect("complete factorization");
    let k_l = *factorization.indices.last().expect("degree >= 1");
    let b_prime = if b >= 1 {
        totient_threshold(b as u64)?
    } else {
        0
    };
    let bb = BigInt::from(b);

    if k_l > b_prime {
        let quotient = q.div_exact(&cyclotomic(k_l)).expect("Phi_{k_l} divides Q");
        let g = power_roots_poly(&quotient, k_l)?;
        let (nu_prime, power_sum) = match g.degree() {
            Some(0) => (1, BigInt::zero()),
            _ => {
                let (nu_prime, s) = newton_girard_nu_int(&g)?;
                (nu_prime, s)
            }
        };
        let nu = k_l
            .checked_mul(nu_prime)
            .ok_or_else(|| Error::Overflow("k_l * nu' exceeds u64".into()))?;
        let phi_k_l = euler_phi(k_l);
        let expected = BigInt::from(phi_k_l) + &power_sum;
        let trace = periodic_trace(a, nu, period)?;
        if trace != expected {
            return Err(Error::Numerical(format!(
                "trace check failed: Tr(A^{nu}) = {trace}, expected phi(k_l) + S = {expected}"
            )));
        }
        debug_assert!(trace > bb);
        let g_deg = g.degree().unwrap_or(0) as u64;
        Ok(NuCertificate {
            nu,
            trace,
            threshold_b: b,
            case: CaseTag::CyclotomicLargeKl,
            horizon: k_l * (g_deg + 1),
            minimal: false,
            detail: Some(CaseDetail::CyclotomicLargeKl {
                k_l,
                b_prime,
                phi_k_l,
                nu_prime,
                power_sum,
            }),
        })
    } else {
        if BigInt::from(m) <= bb {
            return Err(Error::BelowThreshold(format!(
                "k_l = {k_l} <= B' = {b_prime} and m = {m} <= B: B'! gives trace m, which does not exceed B"
            )));
        }
        let nu = (1..=b_prime.max(1))
            .try_fold(1u64, |acc, i| acc.checked_mul(i))
            .ok_or_else(|| Error::Overflow(format!("{b_prime}! exceeds u64")))?;
        let trace = periodic_trace(a, nu, period)?;
        if trace != BigInt::from(m) {
            return Err(Error::Numerical(format!(
                "trace check failed: Tr(A^{nu}) = {trace}, expected m = {m}"
            )));
        }
        Ok(NuCertificate {
            nu,
            trace,
            threshold_b: b,
            case: CaseTag::CyclotomicSmallKl,
            horizon: nu,
            minimal: false,
            detail: Some(CaseDetail::CyclotomicSmallKl { k_l, b_prime }),
        })
    }
}

/// Dispatches to the expanding or cyclotomic route after classifying the
/// characteristic polynomial.
pub fn find_nu_auto(a: &IntMatrix, b: i64, eps: f64, c: f64) -> Result<NuCertificate> {
    if classify(a)?.complete {
        find_nu_cyclotomic(a, b)
    } else {
        find_nu_expanding(a, b, eps, c)
    }
}

/// Cyclotomic factorization of the characteristic polynomial of `A`.
pub fn classify(a: &IntMatrix) -> Result<CyclotomicFactorization> {
    cyclotomic_factorization(&a.char_poly())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirichletResult {
    pub nu: u64,
    /// `Re(S_nu)`
    pub real_sum: f64,
    /// `sum |z_j|^nu`
    pub modulus_sum: f64,
}

/// Sector index in `0..8` of a point with argument `turns` (in full turns).
fn sector(turns: f64, k: u64) -> u64 {
    let t = (turns * k as f64).rem_euclid(1.0);
    ((t * 8.0) as u64).min(7)
}

/// Pigeonhole search for a power whose terms all point within 45 degrees of
/// the positive real axis.
///
/// Each `z_j^k`, `k = 1..=8^m + 1`, is coded by the octant holding it. Two
/// equal code vectors at `i < j` mean every `z^(j-i)` lies within `pi/4` of
/// the real axis, so `Re(S_nu) >= sum |z_j|^nu / sqrt(2)`. The smallest such
/// gap is returned.
pub fn dirichlet_nu(zs: &[Complex64], cap: usize) -> Result<DirichletResult> {
    let m = zs.len();
    if m == 0 {
        return Err(Error::contract("dirichlet_nu needs at least one number"));
    }
    if m > cap || m > 21 {
        return Err(Error::contract(format!(
            "dirichlet_nu refuses m = {m} (cap {cap}); the scan visits 8^m + 1 powers"
        )));
    }
    let turns: Vec<f64> = zs
        .iter()
        .map(|z| (z.im.atan2(z.re) / std::f64::consts::TAU).rem_euclid(1.0))
        .collect();
    let last = 8u64.pow(m as u32) + 1;
    let mut seen: HashMap<u64, u64> = HashMap::new();
    let mut best: Option<u64> = None;
    for k in 1..=last {
        let code = turns.iter().fold(0u64, |acc, &t| (acc << 3) | sector(t, k));
        if let Some(prev) = seen.insert(code, k) {
            let gap = k - prev;
            best = Some(best.map_or(gap, |b| b.min(gap)));
            if gap == 1 {
                break;
            }
        }
    }
    let nu = best.expect("pigeonhole guarantees a repeated code");
    let (mut real_sum, mut modulus_sum) = (0.0, 0.0);
    for z in zs {
        let (r, theta) = z.to_polar();
        let rn = r.powf(nu as f64);
        real_sum += rn * (theta * nu as f64).cos();
        modulus_sum += rn;
    }
    Ok(DirichletResult {
        nu,
        real_sum,
        modulus_sum,
    })
}

/// Smallest `nu <= deg + 1` with `S_nu >= 0`, exactly, for a polynomial with
/// rational coefficients (lowest degree first).
pub fn newton_girard_nu(coeffs: &[BigRational]) -> Result<(u64, BigRational)> {
    let deg = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::contract("newton_girard_nu needs degree >= 1"))?;
    let lead = coeffs[deg].clone();
    let lower: Vec<BigRational> = coeffs[..deg].iter().map(|c| c / &lead).collect();
    let sums = poly::newton_power_sums(&lower, deg + 1);
    sums.into_iter()
        .enumerate()
        .find(|(_, s)| !s.is_negative())
        .map(|(i, s)| (i as u64 + 1, s))
        .ok_or_else(|| Error::Numerical("no nonnegative power sum up to deg + 1".into()))
}

/// [`newton_girard_nu`] for floating-point coefficients; sums down to
/// `-1e-9` count as nonnegative.
pub fn newton_girard_nu_f64(coeffs: &[f64]) -> Result<(u64, f64)> {
    let deg = coeffs
        .iter()
        .rposition(|c| *c != 0.0)
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::contract("newton_girard_nu needs degree >= 1"))?;
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::contract("coefficients must be finite"));
    }
    let lower: Vec<f64> = coeffs[..deg].iter().map(|c| c / coeffs[deg]).collect();
    let sums = poly::newton_power_sums(&lower, deg + 1);
    sums.into_iter()
        .enumerate()
        .find(|(_, s)| *s >= -1e-9)
        .map(|(i, s)| (i as u64 + 1, s))
        .ok_or_else(|| Error::Numerical("no nonnegative power sum up to deg + 1".into()))
}

/// Integer convenience wrapper around [`newton_girard_nu`].
pub fn newton_girard_nu_int(q: &IntPolynomial) -> Result<(u64, BigInt)> {
    let coeffs: Vec<BigRational> = q
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let (nu, s) = newton_girard_nu(&coeffs)?;
    debug_assert!(s.is_integer() || !q.is_monic());
    Ok((nu, s.to_integer()))
}

/// `P(z) = 1/2 + sum_{nu=1}^{K} (1 - nu/(K+1)) z^nu`, by Horner's rule.
pub fn fejer_value(z: Complex64, k: u64) -> Result<Complex64> {
    if k == 0 {
        return Err(Error::contract("fejer_value needs K >= 1"));
    }
    let denom = (k + 1) as f64;
    let coeff = |nu: u64| (k + 1 - nu) as f64 / denom;
    let mut acc = Complex64::new(coeff(k), 0.0);
    for nu in (1..k).rev() {
        acc = acc * z + coeff(nu);
    }
    Ok(acc * z + 0.5)
}

/// [`fejer_value`] in exact rational arithmetic at a rational point.
pub fn fejer_value_exact(z: &BigRational, k: u64) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::contract("fejer_value needs K >= 1"));
    }
    let denom = BigInt::from(k + 1);
    let coeff = |nu: u64| BigRational::new(BigInt::from(k + 1 - nu), denom.clone());
    let mut acc = coeff(k);
    for nu in (1..k).rev() {
        acc = acc * z + coeff(nu);
    }
    Ok(acc * z + BigRational::new(BigInt::one(), BigInt::from(2)))
}

/// Minimum of `Re P(z)` over `samples` quasi-uniform points of the closed
/// unit disk (a sunflower spiral whose last point lies on the unit circle).
pub fn fejer_disk_minimum(k: u64, samples: usize) -> Result<(f64, Complex64)> {
    if samples == 0 {
        return Err(Error::contract("need at least one sample"));
    }
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let mut best = (f64::INFINITY, Complex64::zero());
    for i in 0..samples {
        let r = if samples == 1 {
            1.0
        } else {
            (i as f64 / (samples - 1) as f64).sqrt()
        };
        let z = Complex64::from_polar(r, golden * i as f64);
        let v = fejer_value(z, k)?.re;
        if v < best.0 {
            best = (v, z);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rotation() -> IntMatrix {
        m(&[vec![0, -1], vec![1, 0]])
    }

    #[test]
    fn horizon_rounding() {
        assert_eq!(power_horizon(4, 2.5).unwrap(), 32);
        assert_eq!(power_horizon(2, 2.5).unwrap(), 6);
        assert_eq!(power_horizon(1, 2.5).unwrap(), 1);
        assert_eq!(power_horizon(10, 2.0).unwrap(), 100);
    }

    #[test]
    fn find_nu_examples() {
        let c = find_nu(&IntMatrix::identity(3), 2, 0.5).unwrap();
        let c = c.certificate().unwrap();
        assert_eq!((c.nu, c.trace.clone()), (1, BigInt::from(3)));
        assert!(c.minimal);

        let c = find_nu(&m(&[vec![2, 1], vec![1, 1]]), 2, 0.5).unwrap();
        assert_eq!(c.certificate().unwrap().nu, 1);

        let f = find_nu(&rotation(), 2, 0.5).unwrap();
        let f = f.failure().unwrap();
        assert!(f.periodic);
        assert_eq!(f.period, Some(4));
        assert_eq!(f.max_trace_seen, BigInt::from(2));
        assert_eq!(f.horizon, 6);
    }

    #[test]
    fn find_nu_rejects_non_sl() {
        assert!(matches!(
            find_nu(&m(&[vec![2, 0], vec![0, 1]]), 2, 0.5),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            find_nu(&IntMatrix::identity(2), 2, 0.0),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn max_nu_cap() {
        let cfg = SearchConfig {
            max_nu: Some(3),
            ..Default::default()
        };
        let f = find_nu_with(&rotation(), 2, 0.5, &cfg).unwrap();
        let f = f.failure().unwrap();
        assert_eq!(f.horizon, 3);
        // the full period is still scanned to classify the failure
        assert_eq!(f.max_trace_seen, BigInt::from(2));
        assert_eq!(f.first_beyond_horizon, None);
    }

    #[test]
    fn first_beyond_horizon_reported() {
        // traces of the rotation are 0, -2, 0, 2; with B = 1 and a capped
        // horizon of 3, the first exceedance is at 4
        let cfg = SearchConfig {
            max_nu: Some(3),
            ..Default::default()
        };
        let f = find_nu_with(&rotation(), 1, 0.5, &cfg).unwrap();
        assert_eq!(f.failure().unwrap().first_beyond_horizon, Some(4));
    }

    #[test]
    fn conjectural_linear_horizon() {
        let cfg = SearchConfig {
            horizon: HorizonMode::ConjecturalLinear { slope: 1.5 },
            max_nu: None,
        };
        let f = find_nu_with(&rotation(), 2, 0.5, &cfg).unwrap();
        assert_eq!(f.failure().unwrap().horizon, 3);
    }

    #[test]
    fn expanding_examples() {
        let c = find_nu_expanding(&m(&[vec![2, 1], vec![1, 1]]), 2, 0.5, 1.0).unwrap();
        assert_eq!(c.nu, 1);
        assert_eq!(c.case, CaseTag::Expanding);

        let a = IntMatrix::block_diagonal(&[
            &IntMatrix::companion(&IntPolynomial::from_i64(&[1, -3, 1])).unwrap(),
            &IntMatrix::identity(2),
        ])
        .unwrap();
        let c = find_nu_expanding(&a, 5, 0.5, 1.0).unwrap();
        assert_eq!((c.nu, c.trace.clone()), (2, BigInt::from(9)));
        assert!(c.nu <= c.horizon);

        assert!(matches!(
            find_nu_expanding(&rotation(), 2, 0.5, 1.0),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn expanding_subcase_recorded() {
        let a = m(&[vec![2, 1], vec![1, 1]]);
        let c = find_nu_expanding(&a, 2, 0.5, 1.0).unwrap();
        match c.detail {
            Some(CaseDetail::Expanding {
                subcase,
                normalized_sum,
                ..
            }) => {
                // 3 / 2.618 = 1.146 <= 2, so the trace grew past B first
                assert_eq!(subcase, Some(ExpandingSubcase::EarlyGrowth));
                assert_relative_eq!(
                    normalized_sum.unwrap(),
                    3.0 / 2.618033988749895,
                    epsilon = 1e-9
                );
            }
            other => panic!("unexpected detail {other:?}"),
        }
    }

    #[test]
    fn expanding_exhaustion_is_an_error() {
        let a = m(&[vec![2, 1], vec![1, 1]]);
        let cfg = SearchConfig {
            max_nu: Some(2),
            ..Default::default()
        };
        assert!(matches!(
            find_nu_expanding_with(&a, 1000, 0.5, 1.0, &cfg),
            Err(Error::Exhausted { horizon: 2, .. })
        ));
    }

    #[test]
    fn cyclotomic_examples() {
        let c = find_nu_cyclotomic(&IntMatrix::identity(4), 2).unwrap();
        assert_eq!((c.nu, c.trace.clone()), (720, BigInt::from(4)));
        assert_eq!(c.case, CaseTag::CyclotomicSmallKl);

        let phi7 = IntMatrix::companion(&cyclotomic(7)).unwrap();
        let c = find_nu_cyclotomic(&phi7, 2).unwrap();
        assert_eq!((c.nu, c.trace.clone()), (7, BigInt::from(6)));
        assert_eq!(c.case, CaseTag::CyclotomicLargeKl);

        let q = cyclotomic(1).mul(&cyclotomic(4));
        let c = find_nu_cyclotomic(&IntMatrix::companion(&q).unwrap(), 2).unwrap();
        assert_eq!((c.nu, c.trace.clone()), (720, BigInt::from(3)));
    }

    #[test]
    fn cyclotomic_with_nontrivial_quotient() {
        // Phi_7 * Phi_2 * Phi_2: g has roots (-1)^7 = -1 twice, so
        // g = (z + 1)^2 with S_1 = -2, S_2 = 2; nu' = 2, nu = 14, trace = 6 + 2
        let q = cyclotomic(7).mul(&cyclotomic(2)).mul(&cyclotomic(2));
        let a = IntMatrix::companion(&q).unwrap();
        let c = find_nu_cyclotomic(&a, 2).unwrap();
        assert_eq!((c.nu, c.trace.clone()), (14, BigInt::from(8)));
        assert_eq!(a.trace_power_direct(14).unwrap(), BigInt::from(8));
    }

    #[test]
    fn cyclotomic_below_threshold() {
        // rotation: k_l = 4 <= 6 and m = 2 <= B
        assert!(matches!(
            find_nu_cyclotomic(&rotation(), 2),
            Err(Error::BelowThreshold(_))
        ));
        assert!(matches!(
            find_nu_cyclotomic(&m(&[vec![2, 1], vec![1, 1]]), 2),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn dirichlet_examples() {
        let one = Complex64::new(1.0, 0.0);
        let r = dirichlet_nu(&[one], DEFAULT_DIRICHLET_CAP).unwrap();
        assert_eq!(r.nu, 1);
        assert_relative_eq!(r.real_sum, 1.0);

        let r = dirichlet_nu(&[-one], DEFAULT_DIRICHLET_CAP).unwrap();
        assert_eq!(r.nu, 2);
        assert_relative_eq!(r.real_sum, 1.0, epsilon = 1e-12);

        let i = Complex64::i();
        let r = dirichlet_nu(&[i, -i], DEFAULT_DIRICHLET_CAP).unwrap();
        assert_eq!(r.nu, 4);
        assert_relative_eq!(r.real_sum, 2.0, epsilon = 1e-12);

        assert!(dirichlet_nu(&[], 8).is_err());
        assert!(dirichlet_nu(&[one; 9], 8).is_err());
    }

    #[test]
    fn newton_girard_examples() {
        assert_eq!(newton_girard_nu(&[rat(-2), rat(1)]).unwrap(), (1, rat(2)));
        assert_eq!(
            newton_girard_nu(&[rat(1), rat(3), rat(3), rat(1)]).unwrap(),
            (2, rat(3))
        );
        assert_eq!(
            newton_girard_nu(&[rat(1), rat(0), rat(1)]).unwrap(),
            (1, rat(0))
        );
        assert!(newton_girard_nu(&[rat(4)]).is_err());

        let (nu, s) = newton_girard_nu_f64(&[1.0, 3.0, 3.0, 1.0]).unwrap();
        assert_eq!(nu, 2);
        assert_relative_eq!(s, 3.0);
    }

    #[test]
    fn newton_girard_non_monic() {
        // 2z + 4 has the root -2; S_1 < 0, S_2 = 4
        assert_eq!(newton_girard_nu(&[rat(4), rat(2)]).unwrap(), (2, rat(4)));
    }

    #[test]
    fn fejer_examples() {
        assert_relative_eq!(
            fejer_value(Complex64::new(1.0, 0.0), 10).unwrap().re,
            5.5,
            epsilon = 1e-12
        );
        assert_eq!(
            fejer_value(Complex64::zero(), 7).unwrap(),
            Complex64::new(0.5, 0.0)
        );
        assert_relative_eq!(
            fejer_value(Complex64::new(-1.0, 0.0), 3).unwrap().re,
            0.0,
            epsilon = 1e-15
        );
        assert_eq!(
            fejer_value_exact(&rat(1), 10).unwrap(),
            BigRational::new(11.into(), 2.into())
        );
        assert_eq!(fejer_value_exact(&rat(-1), 3).unwrap(), rat(0));
        assert!(fejer_value(Complex64::zero(), 0).is_err());
    }

    #[test]
    fn fejer_disk_minimum_nonnegative() {
        for k in [1, 5, 50] {
            let (min, _) = fejer_disk_minimum(k, 2000).unwrap();
            assert!(min >= -1e-10, "K = {k}: {min}");
        }
    }

    #[test]
    fn lehmer_regression() {
        // traces -1, 1, 2, 1, 4: the first exceedance of 2 is at nu = 5
        let q = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let a = IntMatrix::companion(&q).unwrap();
        let c = find_nu_expanding(&a, 2, 1.0, 1.0).unwrap();
        assert_eq!((c.nu, c.trace.clone()), (5, BigInt::from(4)));
        assert_eq!(c.horizon, 4884);
        assert_eq!(a.trace_power_direct(5).unwrap(), BigInt::from(4));
        let d = find_nu(&a, 2, 1.0).unwrap();
        assert_eq!(d.certificate().unwrap().nu, 5);
    }
}
