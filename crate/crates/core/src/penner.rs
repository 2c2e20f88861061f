//! Penner transition matrices on `S_{g,n}` and their dilatation bounds.
//!
//! Red curves `a_1..a_{g+1}` and blue curves `b_1..b_{g+n-1}` follow a
//! chain-plus-fan model: `b_j` meets `a_j` and `a_{j+1}` for `j < g`, and
//! each of the `n` puncture curves `b_g..b_{g+n-1}` meets `a_g` and
//! `a_{g+1}`. With no punctures, `b_{g-1}` also meets `a_{g+1}`.
//!
//! A twist along `c` acts on curve-supported measures by
//! `M(c) = I + e_c i(c, .)`. The map `tau_r o tau_b^-1` then has transition
//! matrix `A = prod_red M(c) * prod_blue M(c)`, nonnegative, `>= I`, and its
//! spectral radius is the dilatation.

use std::collections::VecDeque;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::spectral::{spectral_radius, DEFAULT_TOLERANCE};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSystem {
    pub g: u32,
    pub n: u32,
    /// Red curve count, `g + 1`.
    pub k: usize,
    /// Blue curve count, `g + n - 1`.
    pub l: usize,
    /// Geometric intersection numbers; red curves first, then blue.
    pub intersections: IntMatrix,
}

impl CurveSystem {
    pub fn size(&self) -> usize {
        self.k + self.l
    }

    pub fn is_red(&self, c: usize) -> bool {
        c < self.k
    }

    /// Same-colour curves are disjoint.
    pub fn is_bipartite(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| {
            (0..s).all(|j| self.is_red(i) != self.is_red(j) || self.intersections[(i, j)].is_zero())
        })
    }

    pub fn is_connected(&self) -> bool {
        let s = self.size();
        let mut seen = vec![false; s];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for (j, x) in self.intersections.row(i).iter().enumerate() {
                if !seen[j] && !x.is_zero() {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// `M(c) = I + e_c i(c, .)`
    pub fn twist_matrix(&self, c: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(self.size());
        for j in 0..self.size() {
            m[(c, j)] += &self.intersections[(c, j)];
        }
        m
    }

    /// `M(c) * x`, as a row operation.
    fn apply_twist(&self, c: usize, x: &mut IntMatrix) {
        let s = self.size();
        let mut add = vec![BigInt::zero(); s];
        for j in 0..s {
            let w = &self.intersections[(c, j)];
            if w.is_zero() {
                continue;
            }
            for (col, a) in add.iter_mut().enumerate() {
                *a += w * &x[(j, col)];
            }
        }
        for (col, a) in add.into_iter().enumerate() {
            x[(c, col)] += a;
        }
    }
}

pub fn curve_system(g: u32, n: u32) -> Result<CurveSystem> {
    if g < 2 {
        return Err(Error::domain(format!("need g >= 2, got g = {g}")));
    }
    let (gu, nu) = (g as usize, n as usize);
    let k = gu + 1;
    let l = gu + nu - 1;
    let mut x = IntMatrix::zeros(k + l);
    let mut link = |a: usize, b: usize| {
        // a, b are 1-based curve labels
        let (r, s) = (a - 1, k + b - 1);
        x[(r, s)] = BigInt::one();
        x[(s, r)] = BigInt::one();
    };
    for j in 1..gu {
        link(j, j);
        link(j + 1, j);
    }
    for b in gu..gu + nu {
        link(gu, b);
        link(gu + 1, b);
    }
    if nu == 0 {
        link(gu + 1, gu - 1);
    }
    Ok(CurveSystem {
        g,
        n,
        k,
        l,
        intersections: x,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PennerChecks {
    pub bipartite: bool,
    pub connected: bool,
    /// Consecutive same-colour twist matrices commute exactly.
    pub same_colour_commute: bool,
    /// `A >= I` entrywise.
    pub dominates_identity: bool,
    /// Least `p <= k + l` with `A^p > 0` entrywise.
    pub primitive_power: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PennerMatrixReport {
    pub g: u32,
    pub n: u32,
    pub k: usize,
    pub l: usize,
    pub matrix: IntMatrix,
    pub max_entry: u64,
    /// `max{3n + 4, 7}`
    pub entry_bound: u64,
    pub rho: f64,
    /// `(k + l) * max_entry`, at least the largest row sum.
    pub row_sum_bound: u64,
    /// `(14g + 6)(36g + 22)`
    pub rho_bound: u64,
    pub checks: PennerChecks,
}

impl PennerMatrixReport {
    pub fn entry_bound_ok(&self) -> bool {
        self.max_entry <= self.entry_bound
    }

    /// `rho <= (k + l) max_entry <= (14g + 6)(36g + 22)`, each step separately.
    pub fn rho_chain_ok(&self) -> bool {
        let slack = 1e-9 * self.row_sum_bound as f64;
        self.rho <= self.row_sum_bound as f64 + slack && self.row_sum_bound <= self.rho_bound
    }

    pub fn ok(&self) -> bool {
        let c = &self.checks;
        self.entry_bound_ok()
            && self.rho_chain_ok()
            && self.rho >= 1.0 - 1e-9
            && c.bipartite
            && c.connected
            && c.same_colour_commute
            && c.dominates_identity
            && c.primitive_power.is_some()
    }

    pub fn row(&self) -> PennerRow {
        PennerRow {
            g: self.g,
            n: self.n,
            k: self.k,
            l: self.l,
            max_entry: self.max_entry,
            entry_bound: self.entry_bound,
            rho: self.rho,
            row_sum_bound: self.row_sum_bound,
            rho_bound: self.rho_bound,
            ok: self.ok(),
        }
    }
}

pub fn entry_bound(n: u32) -> u64 {
    (3 * n as u64 + 4).max(7)
}

pub fn rho_bound(g: u32) -> u64 {
    let g = g as u64;
    (14 * g + 6) * (36 * g + 22)
}

fn commute(cs: &CurveSystem, c: usize, d: usize) -> bool {
    let mut cd = cs.twist_matrix(d);
    cs.apply_twist(c, &mut cd);
    let mut dc = cs.twist_matrix(c);
    cs.apply_twist(d, &mut dc);
    cd == dc
}

/// Boolean support of `a`, one bitset per row.
fn support(a: &IntMatrix) -> Vec<Vec<u64>> {
    let s = a.dim();
    let words = s.div_ceil(64);
    (0..s)
        .map(|i| {
            let mut row = vec![0u64; words];
            for (j, x) in a.row(i).iter().enumerate() {
                if !x.is_zero() {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect()
}

/// Least `p <= max_power` with `a^p` entrywise positive, for `a >= 0`.
fn primitive_power(a: &IntMatrix, max_power: usize) -> Option<usize> {
    let s = a.dim();
    let base = support(a);
    let full = |rows: &[Vec<u64>]| {
        rows.iter()
            .all(|r| (0..s).all(|j| r[j / 64] >> (j % 64) & 1 == 1))
    };
    let mut cur = base.clone();
    for p in 1..=max_power {
        if full(&cur) {
            return Some(p);
        }
        cur = cur
            .iter()
            .map(|row| {
                let mut next = vec![0u64; row.len()];
                for (j, b) in base.iter().enumerate() {
                    if row[j / 64] >> (j % 64) & 1 == 1 {
                        for (w, x) in next.iter_mut().zip(b) {
                            *w |= x;
                        }
                    }
                }
                next
            })
            .collect();
    }
    None
}

pub fn penner_matrix(cs: &CurveSystem) -> Result<PennerMatrixReport> {
    let s = cs.size();
    let mut a = IntMatrix::identity(s);
    for c in (0..s).rev() {
        cs.apply_twist(c, &mut a);
    }
    let max_entry = a
        .max_entry()
        .to_u64()
        .ok_or_else(|| Error::Overflow("Penner matrix entry exceeds u64".into()))?;
    let dominates_identity = (0..s).all(|i| {
        (0..s).all(|j| {
            let x = &a[(i, j)];
            if i == j {
                *x >= BigInt::one()
            } else {
                *x >= BigInt::zero()
            }
        })
    });
    let same_colour_commute =
        (1..cs.k).all(|c| commute(cs, c - 1, c)) && (cs.k + 1..s).all(|c| commute(cs, c - 1, c));
    let checks = PennerChecks {
        bipartite: cs.is_bipartite(),
        connected: cs.is_connected(),
        same_colour_commute,
        dominates_identity,
        primitive_power: primitive_power(&a, s),
    };
    let rho = spectral_radius(&a, DEFAULT_TOLERANCE)?;
    Ok(PennerMatrixReport {
        g: cs.g,
        n: cs.n,
        k: cs.k,
        l: cs.l,
        max_entry,
        entry_bound: entry_bound(cs.n),
        rho,
        row_sum_bound: s as u64 * max_entry,
        rho_bound: rho_bound(cs.g),
        checks,
        matrix: a,
    })
}

/// One CSV row: `g,n,k,l,max_entry,entry_bound,rho,row_sum_bound,rho_bound,ok`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PennerRow {
    pub g: u32,
    pub n: u32,
    pub k: usize,
    pub l: usize,
    pub max_entry: u64,
    pub entry_bound: u64,
    pub rho: f64,
    pub row_sum_bound: u64,
    pub rho_bound: u64,
    pub ok: bool,
}

impl PennerRow {
    /// Upper bound on `l_{g,n}` from this cell.
    pub fn log_rho(&self) -> f64 {
        self.rho.ln()
    }
}

/// One row per `(g, n)`, `g` outermost. Empty ranges give an empty table.
pub fn upper_bound_table(
    g_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
) -> Result<Vec<PennerRow>> {
    let mut rows = Vec::new();
    for g in g_range {
        for n in n_range.clone() {
            rows.push(penner_matrix(&curve_system(g, n)?)?.row());
        }
    }
    Ok(rows)
}
