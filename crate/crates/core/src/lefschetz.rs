//! From a homology action to a dilatation lower bound.
//!
//! For a mapping class acting on `H_1` of the closed surface by `A`, the
//! Lefschetz number of `f^nu` is `2 - Tr(A^nu)`. Once it is negative, the
//! pseudo-Anosov `f^nu` has `ln lambda(f^nu) >= ln(3|chi|)/(6|chi|)`, so
//! `ln lambda(f)` is at least that floor divided by `nu`. The bound is
//! conditional: nothing here checks that `A` comes from a pseudo-Anosov map.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bounds::{lefschetz_floor, SurfaceParams};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::trace_search::{find_nu_with, SearchConfig, SearchFailure, SearchOutcome};

/// Threshold making `2 - Tr` negative.
pub const LEFSCHETZ_B: i64 = 2;

/// `2 - Tr(A)`
pub fn lefschetz_number(a: &IntMatrix) -> BigInt {
    BigInt::from(2) - a.trace()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LefschetzCertificate {
    pub nu: u64,
    #[serde(with = "crate::serde_util::bigint")]
    pub trace: BigInt,
    /// `2 - Tr(A^nu)`, negative.
    #[serde(with = "crate::serde_util::bigint")]
    pub lefschetz: BigInt,
    /// `lefschetz_floor(surface) / nu`
    pub dilatation_log_lower: f64,
    pub surface: SurfaceParams,
    pub horizon: u64,
    /// Whether `A^T J A = J`. A non-symplectic input still gets a bound,
    /// but it is not the action of a mapping class.
    pub symplectic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LefschetzOutcome {
    Certified(LefschetzCertificate),
    Failed {
        failure: SearchFailure,
        symplectic: bool,
    },
}

pub fn dilatation_lower_from_homology(
    a: &IntMatrix,
    p: &SurfaceParams,
    eps: f64,
) -> Result<LefschetzOutcome> {
    dilatation_lower_with(a, p, eps, &SearchConfig::default())
}

pub fn dilatation_lower_with(
    a: &IntMatrix,
    p: &SurfaceParams,
    eps: f64,
    config: &SearchConfig,
) -> Result<LefschetzOutcome> {
    if p.g < 2 {
        return Err(Error::contract(format!("need g >= 2, got g = {}", p.g)));
    }
    if a.dim() != 2 * p.g as usize {
        return Err(Error::contract(format!(
            "matrix is {0}x{0}, expected 2g = {1}",
            a.dim(),
            2 * p.g
        )));
    }
    let floor = lefschetz_floor(p)?;
    let symplectic = a.is_symplectic()?;
    match find_nu_with(a, LEFSCHETZ_B, eps, config)? {
        SearchOutcome::Found(c) => Ok(LefschetzOutcome::Certified(LefschetzCertificate {
            nu: c.nu,
            lefschetz: BigInt::from(2) - &c.trace,
            trace: c.trace,
            dilatation_log_lower: floor / c.nu as f64,
            surface: *p,
            horizon: c.horizon,
            symplectic,
        })),
        SearchOutcome::Exhausted(failure) => Ok(LefschetzOutcome::Failed {
            failure,
            symplectic,
        }),
    }
}
