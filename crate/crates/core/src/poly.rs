//! Integer polynomials: power sums, cyclotomic polynomials and cyclotomic
//! factorization, and the root-power transform.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `z^d - 1`
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] = -BigInt::one();
        c[d] += BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Quotient and remainder. `None` when some quotient coefficient is not an
    /// integer (never happens for a monic divisor) or the divisor is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        let Some(nd) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self` in Z[z].
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor)? {
            (q, r) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Pseudo-remainder `prem(self, divisor)`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * d;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Self::new(rem)
    }

    /// Primitive gcd over Z[z] (content ignored), leading coefficient positive.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Yun's square-free decomposition of a nonconstant polynomial:
    /// `(factor, multiplicity)` pairs whose product is the primitive part of
    /// `self`. Each factor is square-free and the factors are pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut mult = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), mult));
            }
            b = b.div_exact(&a).expect("gcd divides b");
            let c = d.div_exact(&a).expect("gcd divides d");
            d = c.sub(&b.derivative());
            mult += 1;
        }
        out
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

/// Power sums `S_1, ..., S_N` of the roots of a monic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSumSequence {
    #[serde(with = "crate::serde_util::bigint_vec")]
    values: Vec<BigInt>,
}

impl PowerSumSequence {
    /// `S_nu` for `1 <= nu <= len`.
    pub fn get(&self, nu: usize) -> &BigInt {
        &self.values[nu - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Newton-Girard power sums for a monic polynomial over any commutative ring
/// in which the recurrence is defined. `lower` holds the coefficients
/// `a_0, ..., a_{n-1}` of `z^n + a_{n-1} z^{n-1} + ... + a_0`.
pub(crate) fn newton_power_sums<T>(lower: &[T], count: usize) -> Vec<T>
where
    T: Num + Neg<Output = T> + Clone,
{
    let n = lower.len();
    let mut s: Vec<T> = Vec::with_capacity(count);
    for nu in 1..=count {
        let mut acc = T::zero();
        for i in 1..nu.min(n + 1) {
            acc = acc + lower[n - i].clone() * s[nu - i - 1].clone();
        }
        if nu <= n {
            let mut k = T::zero();
            for _ in 0..nu {
                k = k + T::one();
            }
            acc = acc + k * lower[n - nu].clone();
        }
        s.push(-acc);
    }
    s
}

/// Streaming exact power sums `S_1, S_2, ...` of a monic integer polynomial.
/// Each step costs `O(deg)` big-integer operations.
#[derive(Clone, Debug)]
pub struct PowerSums {
    lower: Vec<BigInt>,
    history: std::collections::VecDeque<BigInt>,
    nu: usize,
}

impl PowerSums {
    pub fn new(q: &IntPolynomial) -> Result<Self> {
        let n = q
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::contract("power sums need degree >= 1"))?;
        if !q.is_monic() {
            return Err(Error::contract("power sums need a monic polynomial"));
        }
        Ok(Self {
            lower: q.coeffs[..n].to_vec(),
            history: std::collections::VecDeque::with_capacity(n),
            nu: 0,
        })
    }
}

impl Iterator for PowerSums {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let n = self.lower.len();
        self.nu += 1;
        let nu = self.nu;
        // history holds S_{nu-1}, S_{nu-2}, ... (most recent first)
        let mut acc = BigInt::zero();
        for (i, s) in self.history.iter().enumerate().take(n) {
            acc += &self.lower[n - 1 - i] * s;
        }
        if nu <= n {
            acc += &self.lower[n - nu] * BigInt::from(nu);
        }
        let s = -acc;
        if self.history.len() == n {
            self.history.pop_back();
        }
        self.history.push_front(s.clone());
        Some(s)
    }
}

/// Exact power sums `S_1..S_N` of the roots of a monic polynomial, counted with
/// multiplicity.
pub fn power_sums(q: &IntPolynomial, count: usize) -> Result<PowerSumSequence> {
    if count == 0 {
        return Err(Error::contract("power_sums needs N >= 1"));
    }
    let values = PowerSums::new(q)?.take(count).collect();
    Ok(PowerSumSequence { values })
}

/// Monic polynomial with the given power sums `S_1..S_n` (inverse
/// Newton-Girard). `None` when the result would not have integer coefficients.
fn poly_from_power_sums(sums: &[BigInt]) -> Option<IntPolynomial> {
    let n = sums.len();
    let mut e = vec![BigInt::one()];
    for r in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=r {
            let term = &e[r - i] * &sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, rem) = acc.div_rem(&BigInt::from(r));
        if !rem.is_zero() {
            return None;
        }
        e.push(q);
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (r, er) in e.into_iter().enumerate() {
        coeffs[n - r] = if r % 2 == 0 { er } else { -er };
    }
    Some(IntPolynomial::new(coeffs))
}

/// Euler's totient by trial factorization.
pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi needs k >= 1");
    let mut n = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Möbius function by trial factorization.
fn mobius(k: u64) -> i8 {
    let mut n = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// The least `B'` with `phi(t) > B` for every `t > B'`.
///
/// Since `phi(t) >= sqrt(t / 2)`, no `t > 2 B^2` has `phi(t) <= B`; the scan
/// runs to `2 (B + 1)^2`.
pub fn totient_threshold(b: u64) -> Result<u64> {
    if b == 0 {
        return Err(Error::contract("totient_threshold needs B >= 1"));
    }
    let limit = 2 * (b + 1) * (b + 1);
    Ok((1..=limit)
        .filter(|&t| euler_phi(t) <= b)
        .max()
        .unwrap_or(0))
}

/// The `k`-th cyclotomic polynomial, from `prod_{d | k} (z^d - 1)^{mu(k/d)}`.
pub fn cyclotomic(k: u64) -> IntPolynomial {
    assert!(k >= 1, "cyclotomic needs k >= 1");
    let divisors: Vec<u64> = (1..=k).filter(|d| k.is_multiple_of(*d)).collect();
    let mut p = vec![BigInt::one()];
    // multiply by (z^d - 1): p_j <- p_{j-d} - p_j
    for &d in divisors.iter().filter(|&&d| mobius(k / d) == 1) {
        let d = d as usize;
        let mut out = vec![BigInt::zero(); p.len() + d];
        for (j, c) in p.iter().enumerate() {
            out[j + d] += c;
            out[j] -= c;
        }
        p = out;
    }
    // divide by (z^d - 1): q_{j-d} = p_j + q_j, from the top down
    for &d in divisors.iter().filter(|&&d| mobius(k / d) == -1) {
        let d = d as usize;
        let qlen = p.len() - d;
        let mut q = vec![BigInt::zero(); qlen];
        for j in (d..p.len()).rev() {
            let above = if j < qlen {
                q[j].clone()
            } else {
                BigInt::zero()
            };
            q[j - d] = &p[j] + above;
        }
        p = q;
    }
    IntPolynomial::new(p)
}

/// Decomposition of a monic polynomial into cyclotomic factors and a residual
/// without cyclotomic divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// Cyclotomic indices in nondecreasing order, repeated by multiplicity.
    pub indices: Vec<u64>,
    pub residual: IntPolynomial,
    /// True iff the residual is the constant 1.
    pub complete: bool,
}

impl CyclotomicFactorization {
    /// `lcm` of the indices for a complete factorization: the smallest `p`
    /// with `A^p = I` on the spectrum, and the period of the trace sequence.
    pub fn period(&self) -> Option<u64> {
        self.complete
            .then(|| self.indices.iter().fold(1u64, |acc, &k| acc.lcm(&k)))
    }

    /// Product of the cyclotomic factors times the residual.
    pub fn product(&self) -> IntPolynomial {
        self.indices
            .iter()
            .fold(self.residual.clone(), |acc, &k| acc.mul(&cyclotomic(k)))
    }
}

/// Trial-divides a monic polynomial by every cyclotomic polynomial that could
/// divide it. Candidates are `k <= 2 deg^2` with `phi(k)` at most the
/// remaining degree; multiplicities are handled by repeated division.
pub fn cyclotomic_factorization(q: &IntPolynomial) -> Result<CyclotomicFactorization> {
    let n = q
        .degree()
        .ok_or_else(|| Error::contract("cannot factor the zero polynomial"))?;
    if !q.is_monic() {
        return Err(Error::contract(
            "cyclotomic factorization needs a monic polynomial",
        ));
    }
    if q.coeff(0).is_zero() {
        return Err(Error::contract(
            "cyclotomic factorization needs Q(0) != 0 (z divides Q)",
        ));
    }
    let mut residual = q.clone();
    let mut indices = Vec::new();
    let limit = 2 * (n as u64).pow(2);
    for k in 1..=limit {
        let remaining = residual.degree().unwrap_or(0) as u64;
        if remaining == 0 {
            break;
        }
        if euler_phi(k) > remaining {
            continue;
        }
        let phi_k = cyclotomic(k);
        while residual.degree().unwrap_or(0) >= phi_k.degree().unwrap() {
            match residual.div_exact(&phi_k) {
                Some(quot) => {
                    residual = quot;
                    indices.push(k);
                }
                None => break,
            }
        }
    }
    let complete = residual.is_one();
    Ok(CyclotomicFactorization {
        indices,
        residual,
        complete,
    })
}

/// Monic polynomial whose roots are the `k`-th powers of the roots of `q`,
/// with multiplicity. Computed from the power sums `S'_nu = S_{k nu}`.
pub fn power_roots_poly(q: &IntPolynomial, k: u64) -> Result<IntPolynomial> {
    if k == 0 {
        return Err(Error::contract("power_roots_poly needs k >= 1"));
    }
    if !q.is_monic() {
        return Err(Error::contract("power_roots_poly needs a monic polynomial"));
    }
    let n = q.degree().unwrap();
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let k = usize::try_from(k).map_err(|_| Error::Overflow("k too large".into()))?;
    let all = power_sums(q, n * k)?;
    let sums: Vec<BigInt> = (1..=n).map(|nu| all.get(nu * k).clone()).collect();
    poly_from_power_sums(&sums)
        .ok_or_else(|| Error::Numerical("non-integral elementary symmetric function".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(
            ints(power_sums(&p(&[1, -3, 1]), 3).unwrap().values()),
            [3, 7, 18]
        );
        assert_eq!(
            ints(power_sums(&p(&[1, 0, 1]), 4).unwrap().values()),
            [0, -2, 0, 2]
        );
        // (z - 1)^4
        assert_eq!(
            ints(power_sums(&p(&[1, -4, 6, -4, 1]), 2).unwrap().values()),
            [4, 4]
        );
        assert!(power_sums(&p(&[1, 2]), 3).is_err());
        assert!(power_sums(&p(&[5]), 3).is_err());
    }

    #[test]
    fn streaming_matches_batch() {
        let q = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let batch = power_sums(&q, 40).unwrap();
        let stream: Vec<BigInt> = PowerSums::new(&q).unwrap().take(40).collect();
        assert_eq!(batch.values(), &stream[..]);
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        // first cyclotomic with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic(105)
            .coeffs()
            .iter()
            .any(|c| c.abs() == BigInt::from(2)));
    }

    #[test]
    fn cyclotomic_by_division_oracle() {
        // Phi_k = (z^k - 1) / prod_{d | k, d < k} Phi_d
        for k in 1..=60u64 {
            let mut q = IntPolynomial::x_pow_minus_one(k as usize);
            for d in (1..k).filter(|d| k % d == 0) {
                q = q.div_exact(&cyclotomic(d)).unwrap();
            }
            assert_eq!(q, cyclotomic(k), "k = {k}");
            assert_eq!(q.degree().unwrap() as u64, euler_phi(k));
        }
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(243), 162);
        assert_eq!(euler_phi(97), 96);
    }

    #[test]
    fn totient_threshold_examples() {
        assert_eq!(totient_threshold(1).unwrap(), 2);
        assert_eq!(totient_threshold(2).unwrap(), 6);
        assert_eq!(totient_threshold(4).unwrap(), 12);
        assert!(totient_threshold(0).is_err());
    }

    #[test]
    fn totient_threshold_brute_force() {
        for b in 1..=30u64 {
            let bp = totient_threshold(b).unwrap();
            assert!(euler_phi(bp) <= b);
            // far past the scan limit, nothing has phi <= b
            assert!((bp + 1..=4 * (b + 2) * (b + 2)).all(|t| euler_phi(t) > b));
        }
    }

    #[test]
    fn factorization_examples() {
        let f = cyclotomic_factorization(&p(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(f.indices, [5]);
        assert!(f.complete);

        let f = cyclotomic_factorization(&p(&[1, -2, 2, -2, 1])).unwrap();
        assert_eq!(f.indices, [1, 1, 4]);
        assert!(f.complete);
        assert_eq!(f.period(), Some(4));

        let f = cyclotomic_factorization(&p(&[1, -3, 1])).unwrap();
        assert!(!f.complete);
        assert!(f.indices.is_empty());
        assert_eq!(f.residual, p(&[1, -3, 1]));
        assert_eq!(f.period(), None);

        assert!(cyclotomic_factorization(&p(&[0, 1, 1])).is_err());
        assert!(cyclotomic_factorization(&p(&[1, 2])).is_err());
    }

    #[test]
    fn factorization_mixed() {
        // Phi_3 * (z^2 - 3z + 1)
        let q = cyclotomic(3).mul(&p(&[1, -3, 1]));
        let f = cyclotomic_factorization(&q).unwrap();
        assert_eq!(f.indices, [3]);
        assert_eq!(f.residual, p(&[1, -3, 1]));
        assert_eq!(f.product(), q);
    }

    #[test]
    fn power_roots_examples() {
        assert_eq!(power_roots_poly(&p(&[1, 0, 1]), 2).unwrap(), p(&[1, 2, 1]));
        assert_eq!(power_roots_poly(&p(&[-1, 1]), 7).unwrap(), p(&[-1, 1]));
        assert_eq!(
            power_roots_poly(&p(&[1, -3, 1]), 2).unwrap(),
            p(&[1, -7, 1])
        );
        assert_eq!(
            power_roots_poly(&IntPolynomial::one(), 3).unwrap(),
            IntPolynomial::one()
        );
        // the primitive 7th roots raised to the 7th power are all 1
        assert_eq!(
            power_roots_poly(&cyclotomic(7), 7).unwrap(),
            p(&[1, -6, 15, -20, 15, -6, 1])
        );
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 0, 1]));
        let b = p(&[-1, 1]).mul(&p(&[2, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));

        // (z - 1)^3 (z^2 + 1) (z + 2)^2 * 3
        let f = p(&[-1, 1])
            .mul(&p(&[-1, 1]))
            .mul(&p(&[-1, 1]))
            .mul(&p(&[1, 0, 1]))
            .mul(&p(&[2, 1]))
            .mul(&p(&[2, 1]))
            .scale(&BigInt::from(3));
        let dec = f.squarefree_decomposition();
        assert_eq!(
            dec,
            vec![(p(&[1, 0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "z^2 - 3z + 1");
        assert_eq!(p(&[-1, 0, 0, 2]).to_string(), "2z^3 - 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
    }

    #[test]
    fn div_rem_non_monic() {
        let a = p(&[1, 2, 3]);
        assert!(a.div_rem(&p(&[1, 2])).is_none());
        assert_eq!(a.div_exact(&p(&[1])), Some(a.clone()));
        assert!(a.div_rem(&IntPolynomial::zero()).is_none());
    }
}
