//! Closed-form bounds on `l_{g,n}`, the logarithm of the least dilatation
//! of a pseudo-Anosov map of the surface of genus `g` with `n` punctures.
//!
//! All logarithms are natural.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceParams {
    pub g: u32,
    pub n: u32,
    /// `2 - 2g - n`
    pub chi: i64,
}

impl SurfaceParams {
    pub fn new(g: u32, n: u32) -> Self {
        Self {
            g,
            n,
            chi: 2 - 2 * g as i64 - n as i64,
        }
    }

    /// `|chi|`, or a domain error when `chi >= 0`.
    pub fn abs_chi(&self) -> Result<f64> {
        if self.chi < 0 {
            Ok(-self.chi as f64)
        } else {
            Err(Error::domain(format!(
                "chi = {} for (g, n) = ({}, {}); the bounds need chi < 0",
                self.chi, self.g, self.n
            )))
        }
    }

    fn require_genus(&self, min: u32) -> Result<()> {
        if self.g >= min {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "need g >= {min}, got g = {}",
                self.g
            )))
        }
    }
}

/// `ln|chi| / |chi|`
fn log_ratio(p: &SurfaceParams) -> Result<f64> {
    let x = p.abs_chi()?;
    Ok(x.ln() / x)
}

/// `ln 2 / (12g - 12 + 4n)`
pub fn penner_lower(p: &SurfaceParams) -> Result<f64> {
    p.require_genus(2)?;
    let denom = 12 * p.g as i64 - 12 + 4 * p.n as i64;
    if denom <= 0 {
        return Err(Error::domain(format!(
            "denominator 12g - 12 + 4n = {denom}"
        )));
    }
    Ok(std::f64::consts::LN_2 / denom as f64)
}

/// `|Sp(2g, F_3)| = 3^(g^2) prod_{i=1}^{g} (3^(2i) - 1)`
pub fn theta(g: u32) -> BigInt {
    let three = BigInt::from(3);
    let mut acc = three.pow(g * g);
    for i in 1..=g {
        acc *= three.pow(2 * i) - BigInt::one();
    }
    acc
}

/// `ln theta(g)`, without forming the integer.
pub fn ln_theta(g: u32) -> f64 {
    let ln3 = 3f64.ln();
    (1..=g).fold((g as f64).powi(2) * ln3, |acc, i| {
        let e = 2.0 * i as f64;
        acc + e * ln3 + (-(3f64.powf(-e))).ln_1p()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TsaiBranch {
    /// `ln 2 / (12g - 12)`
    Genus,
    /// `ln(3|chi|) / (6|chi|)`
    EulerCharacteristic,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TsaiLower {
    pub value: f64,
    /// `ln(value)`; stays finite when `value` underflows for large `g`.
    pub log_value: f64,
    pub branch: TsaiBranch,
}

/// `min{ ln2/(12g-12), ln(3|chi|)/(6|chi|) } / theta(g)`
pub fn tsai_lower(p: &SurfaceParams) -> Result<TsaiLower> {
    p.require_genus(2)?;
    let x = p.abs_chi()?;
    let genus = std::f64::consts::LN_2 / (12.0 * p.g as f64 - 12.0);
    let euler = (3.0 * x).ln() / (6.0 * x);
    let (m, branch) = if genus <= euler {
        (genus, TsaiBranch::Genus)
    } else {
        (euler, TsaiBranch::EulerCharacteristic)
    };
    let log_value = m.ln() - ln_theta(p.g);
    Ok(TsaiLower {
        value: log_value.exp(),
        log_value,
        branch,
    })
}

/// `ln(3|chi|) / (6|chi|)`
pub fn lefschetz_floor(p: &SurfaceParams) -> Result<f64> {
    let x = p.abs_chi()?;
    Ok((3.0 * x).ln() / (6.0 * x))
}

/// `C / g^(2+alpha) * ln|chi| / |chi|`
pub fn main_lower(p: &SurfaceParams, alpha: f64, c: f64) -> Result<f64> {
    p.require_genus(2)?;
    if !(alpha > 0.0) {
        return Err(Error::domain("alpha must be positive"));
    }
    if !(c >= 0.0) {
        return Err(Error::domain("C must be nonnegative"));
    }
    Ok(c / (p.g as f64).powf(2.0 + alpha) * log_ratio(p)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstantAssembly {
    pub alpha: f64,
    pub n_threshold: u32,
    /// `c_j = j^(2+alpha) / 8^(2j)` for `j = 1..N-1`.
    pub table: Vec<f64>,
    /// `min{c_1, ..., c_{N-1}, 1/2^(2+alpha)}`
    pub c_prime: f64,
    /// `C' / 6`
    pub c: f64,
}

/// The constants of the main lower bound as functions of the genus
/// threshold `N` past which the asymptotic argument applies.
pub fn constant_assembly(alpha: f64, n_threshold: u32) -> Result<ConstantAssembly> {
    if !(alpha > 0.0) {
        return Err(Error::domain("alpha must be positive"));
    }
    if n_threshold < 2 {
        return Err(Error::domain(format!("need N >= 2, got {n_threshold}")));
    }
    let table: Vec<f64> = (1..n_threshold)
        .map(|j| {
            let j = j as f64;
            j.powf(2.0 + alpha) / 64f64.powf(j)
        })
        .collect();
    let c_prime = table
        .iter()
        .copied()
        .fold(0.5f64.powf(2.0 + alpha), f64::min);
    Ok(ConstantAssembly {
        alpha,
        n_threshold,
        table,
        c_prime,
        c: c_prime / 6.0,
    })
}

/// `C_upper * g * ln|chi| / |chi|`
pub fn tsai_upper(p: &SurfaceParams, c_upper: f64) -> Result<f64> {
    p.require_genus(2)?;
    if !(c_upper > 0.0) {
        return Err(Error::domain("C_upper must be positive"));
    }
    Ok(c_upper * p.g as f64 * log_ratio(p)?)
}

/// `(C / g) * ln|chi| / |chi|`. Conjectural; reported, never asserted.
pub fn conjectural_lower(p: &SurfaceParams, c: f64) -> Result<f64> {
    p.require_genus(2)?;
    Ok(c / p.g as f64 * log_ratio(p)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub surface: SurfaceParams,
    pub alpha: f64,
    /// Constant used in `main_lower` and `conjectural_lower`.
    pub c_main: f64,
    /// `true` when `c_main` came from [`constant_assembly`].
    pub c_main_assembled: bool,
    pub c_upper: f64,
    pub constants: ConstantAssembly,
    pub penner_lower: f64,
    pub tsai_lower: TsaiLower,
    pub main_lower: f64,
    pub lefschetz_floor: f64,
    pub tsai_upper: f64,
    pub conjectural_lower: f64,
}

/// Every bound at once. `c_main = None` uses the assembled `C(alpha, N)`.
pub fn bound_report(
    p: &SurfaceParams,
    alpha: f64,
    c_main: Option<f64>,
    n_threshold: u32,
    c_upper: f64,
) -> Result<BoundReport> {
    p.require_genus(2)?;
    p.abs_chi()?;
    let constants = constant_assembly(alpha, n_threshold)?;
    let c = c_main.unwrap_or(constants.c);
    Ok(BoundReport {
        surface: *p,
        alpha,
        c_main: c,
        c_main_assembled: c_main.is_none(),
        c_upper,
        penner_lower: penner_lower(p)?,
        tsai_lower: tsai_lower(p)?,
        main_lower: main_lower(p, alpha, c)?,
        lefschetz_floor: lefschetz_floor(p)?,
        tsai_upper: tsai_upper(p, c_upper)?,
        conjectural_lower: conjectural_lower(p, c)?,
        constants,
    })
}
