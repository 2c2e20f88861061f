//! Numerical spectra of integer polynomials and matrices, and the lower
//! bounds on the house of a non-cyclotomic algebraic integer.
//!
//! Roots are found by Aberth-Ehrlich iteration on each square-free factor of
//! the input (the square-free decomposition is exact), so repeated roots are
//! reported with their multiplicity and never slow the iteration down.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;

/// Iteration cap for the root finder.
pub const MAX_ITERATIONS: usize = 1000;

/// Default tolerance for root and spectral-radius estimates.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Placeholder for the constant in `1 + c / (d ln(d)^3)`. The true constant
/// depends on the unknown degree beyond which Dobrowolski's bound applies;
/// `4^-12` is a conservative configuration default, not a derived value.
pub const DEFAULT_FLOOR_CONSTANT: f64 = 5.960464477539063e-8;

/// Matrices up to this size go through the characteristic polynomial; larger
/// non-symmetric ones use a real Schur decomposition.
const CHAR_POLY_DIM_LIMIT: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootEstimate {
    pub value: Complex64,
    /// First-order error radius `|Q(z)| / |Q'(z)|` on the square-free factor.
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEstimate {
    /// Roots repeated by multiplicity.
    pub roots: Vec<RootEstimate>,
    pub source_degree: usize,
}

impl SpectrumEstimate {
    pub fn max_modulus(&self) -> Option<&RootEstimate> {
        self.roots
            .iter()
            .max_by(|a, b| a.value.norm().total_cmp(&b.value.norm()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HouseValue {
    pub value: f64,
    pub radius: f64,
    /// `value - radius > 1`
    pub certified_gt_one: bool,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Aberth-Ehrlich iteration on a square-free polynomial with complex
/// coefficients (lowest degree first, nonzero leading coefficient).
fn aberth(coeffs: &[Complex64], tol: f64) -> Result<Vec<RootEstimate>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|&c| c / lead).collect();
    if n == 1 {
        return Ok(vec![RootEstimate {
            value: -monic[0],
            radius: 0.0,
        }]);
    }

    // Fujiwara bound on the root moduli
    let bound = (1..=n)
        .map(|i| {
            let a = monic[n - i].norm();
            if i == n {
                (a / 2.0).powf(1.0 / i as f64)
            } else {
                a.powf(1.0 / i as f64)
            }
        })
        .fold(0.0, f64::max)
        * 2.0;
    let r0 = if bound > 0.0 { bound * 0.5 } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(r0, theta)
        })
        .collect();

    let mut converged = false;
    for iter in 0..MAX_ITERATIONS {
        let mut worst = 0.0f64;
        let mut worst_abs = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(&monic, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                // dp vanished or two estimates coincided; nudge and retry
                let scale = 1.0 + z[i].norm();
                z[i] += Complex64::new(1e-8, 1e-8) * scale;
                worst = f64::INFINITY;
                continue;
            }
            z[i] -= w;
            worst = worst.max(w.norm() / (1.0 + z[i].norm()));
            worst_abs = worst_abs.max(w.norm());
        }
        if worst <= 1e-14 || (iter >= 50 && worst_abs <= 1e-3 * tol) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "root finder did not converge in {MAX_ITERATIONS} iterations (degree {n})"
        )));
    }

    z.iter()
        .map(|&zi| {
            let (p, dp) = horner(&monic, zi);
            let radius = if p.is_zero() {
                0.0
            } else {
                p.norm() / dp.norm()
            };
            if radius.is_finite() && radius <= tol {
                Ok(RootEstimate { value: zi, radius })
            } else {
                Err(Error::Numerical(format!(
                    "root near {zi} has error radius {radius:e} above tolerance {tol:e}"
                )))
            }
        })
        .collect()
}

/// All complex roots of `q` with multiplicity.
pub fn roots(q: &IntPolynomial, tol: f64) -> Result<SpectrumEstimate> {
    let deg = q
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::contract("roots need degree >= 1"))?;
    if !(tol > 0.0) {
        return Err(Error::contract("tolerance must be positive"));
    }
    let mut out = Vec::with_capacity(deg);
    for (factor, mult) in q.squarefree_decomposition() {
        let coeffs: Vec<Complex64> = factor
            .to_f64_vec()
            .into_iter()
            .map(|c| Complex64::new(c, 0.0))
            .collect();
        if coeffs.iter().any(|c| !c.re.is_finite()) {
            return Err(Error::Numerical("coefficient exceeds f64 range".into()));
        }
        for r in aberth(&coeffs, tol)? {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    debug_assert_eq!(out.len(), deg);
    Ok(SpectrumEstimate {
        roots: out,
        source_degree: deg,
    })
}

/// Maximum modulus of the roots of a monic integer polynomial with nonzero
/// constant term.
pub fn house(q: &IntPolynomial, tol: f64) -> Result<HouseValue> {
    if !q.is_monic() {
        return Err(Error::contract("house needs a monic polynomial"));
    }
    if q.coeff(0).is_zero() {
        return Err(Error::contract("house needs Q(0) != 0"));
    }
    if q.degree() == Some(0) {
        return Err(Error::contract("house needs degree >= 1"));
    }
    let spectrum = roots(q, tol)?;
    let top = spectrum.max_modulus().expect("degree >= 1");
    let value = top.value.norm();
    Ok(HouseValue {
        value,
        radius: top.radius,
        certified_gt_one: value - top.radius > 1.0,
    })
}

fn to_f64_matrix(a: &IntMatrix) -> Result<DMatrix<f64>> {
    let n = a.dim();
    let vals: Vec<f64> = a
        .entries()
        .iter()
        .map(|x| x.to_f64().filter(|v| v.is_finite()))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Numerical("matrix entry exceeds f64 range".into()))?;
    Ok(DMatrix::from_row_slice(n, n, &vals))
}

/// Largest absolute value of the eigenvalues of `A`.
///
/// Symmetric matrices use a symmetric eigensolver; other matrices up to
/// dimension 48 use the house of the exact characteristic polynomial, larger
/// ones a real Schur decomposition. For nonnegative matrices the value is
/// checked against the row-sum bracket `min row sum <= rho <= max row sum`.
pub fn spectral_radius(a: &IntMatrix, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::contract("tolerance must be positive"));
    }
    let rho = if a.is_symmetric() {
        let m = to_f64_matrix(a)?;
        m.symmetric_eigenvalues()
            .iter()
            .fold(0.0f64, |acc, x| acc.max(x.abs()))
    } else if a.dim() <= CHAR_POLY_DIM_LIMIT {
        let spectrum = roots(&a.char_poly(), tol)?;
        spectrum.max_modulus().map_or(0.0, |r| r.value.norm())
    } else {
        let m = to_f64_matrix(a)?;
        let schur = nalgebra::linalg::Schur::try_new(m, f64::EPSILON, MAX_ITERATIONS)
            .ok_or_else(|| Error::Numerical("Schur decomposition did not converge".into()))?;
        schur
            .complex_eigenvalues()
            .iter()
            .fold(0.0f64, |acc, x| acc.max(x.norm()))
    };

    if a.is_nonnegative() {
        let (lo, hi) = row_sum_bracket(a)?;
        let slack = tol * hi.max(1.0) + 1e-9 * hi;
        if rho < lo - slack || rho > hi + slack {
            return Err(Error::Numerical(format!(
                "spectral radius {rho} outside the row-sum bracket [{lo}, {hi}]"
            )));
        }
    }
    Ok(rho)
}

/// `(min row sum, max row sum)` as floating point values.
pub fn row_sum_bracket(a: &IntMatrix) -> Result<(f64, f64)> {
    let sums: Vec<f64> = (0..a.dim())
        .map(|i| {
            let s: num_bigint::BigInt = a.row(i).iter().sum();
            s.to_f64().unwrap_or(f64::INFINITY)
        })
        .collect();
    let lo = sums.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((lo, hi))
}

/// `1 + (1/d) (ln ln d / ln d)^3`, defined for `d >= 3`.
pub fn dobrowolsky_floor(d: u64) -> Result<f64> {
    if d < 3 {
        return Err(Error::domain(format!(
            "Dobrowolski floor needs d >= 3 so that ln ln d > 0, got {d}"
        )));
    }
    let d = d as f64;
    let l = d.ln();
    Ok(1.0 + (l.ln() / l).powi(3) / d)
}

/// `1 + 4^(-s-2)`: Schinzel-Zassenhaus floor when `2s` conjugates are
/// non-real.
pub fn sz_floor(s: u32) -> f64 {
    1.0 + 0.25f64.powi(s as i32 + 2)
}

/// `1 + c / (d (ln d)^3)`, the uniform floor valid for all degrees `d >= 2`
/// once `c` is small enough.
pub fn combined_floor(d: u64, c: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::domain(format!(
            "combined floor needs d >= 2, got {d}"
        )));
    }
    if !(c > 0.0) {
        return Err(Error::domain("combined floor needs c > 0"));
    }
    let d = d as f64;
    Ok(1.0 + c / (d * d.ln().powi(3)))
}
