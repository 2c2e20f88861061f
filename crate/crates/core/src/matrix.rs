//! Exact square integer matrices.
//!
//! Every operation here works over arbitrary-precision integers; nothing is
//! ever rounded. `IntMatrix` is the carrier for the homology action of a
//! mapping class and for the Penner transition matrices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(dim: usize, entries: Vec<BigInt>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::contract("matrix dimension must be at least 1"));
        }
        if entries.len() != dim * dim {
            return Err(Error::contract(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix from rows of machine integers.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::contract(format!(
                "row {} has {} entries, expected {dim}",
                i + 1,
                row.len()
            )));
        }
        let entries = rows.iter().flatten().map(|&x| x.into()).collect();
        Self::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    /// The standard symplectic form: `g` diagonal copies of `[[0, 1], [-1, 0]]`.
    pub fn standard_symplectic_form(g: usize) -> Self {
        let dim = 2 * g;
        let mut j = Self::zeros(dim);
        for b in 0..g {
            j[(2 * b, 2 * b + 1)] = BigInt::one();
            j[(2 * b + 1, 2 * b)] = -BigInt::one();
        }
        j
    }

    /// Companion matrix of a monic polynomial; its characteristic polynomial
    /// is the input.
    pub fn companion(q: &IntPolynomial) -> Result<Self> {
        let m = q
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::contract("companion matrix needs degree >= 1"))?;
        if !q.is_monic() {
            return Err(Error::contract("companion matrix needs a monic polynomial"));
        }
        let mut c = Self::zeros(m);
        for i in 1..m {
            c[(i, i - 1)] = BigInt::one();
        }
        for i in 0..m {
            c[(i, m - 1)] = -q.coeff(i);
        }
        Ok(c)
    }

    /// Block-diagonal sum of the given matrices.
    pub fn block_diagonal(blocks: &[&IntMatrix]) -> Result<Self> {
        let dim: usize = blocks.iter().map(|b| b.dim).sum();
        if dim == 0 {
            return Err(Error::contract("block_diagonal needs at least one block"));
        }
        let mut out = Self::zeros(dim);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.dim {
                for j in 0..b.dim {
                    out[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.dim;
        }
        Ok(out)
    }

    /// Product of `count` random elementary transvections `I + t E_ij`
    /// (`i != j`, `t` a nonzero integer in `[-3, 3]`). The result lies in
    /// SL(m, Z).
    pub fn random_transvection_product<R: Rng + ?Sized>(
        dim: usize,
        count: usize,
        rng: &mut R,
    ) -> Self {
        let mut a = Self::identity(dim);
        if dim < 2 {
            return a;
        }
        for _ in 0..count {
            let i = rng.gen_range(0..dim);
            let mut j = rng.gen_range(0..dim - 1);
            if j >= i {
                j += 1;
            }
            let mut t: i64 = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                t = -t;
            }
            // Left multiplication by I + t E_ij adds t * row j to row i.
            let t = BigInt::from(t);
            for col in 0..dim {
                let add = &t * &a[(j, col)];
                a[(i, col)] += add;
            }
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| &self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact product. Panics on mismatched dimensions.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `A^exp` by binary powering; `A^0 = I`.
    pub fn pow(&self, mut exp: u64) -> IntMatrix {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn max_entry(&self) -> BigInt {
        self.entries.iter().max().cloned().unwrap_or_default()
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                for j in k + 1..n {
                    let v = (&pivot * &a[i * n + j] - &aik * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        sign * &a[n * n - 1]
    }

    /// Characteristic polynomial `det(zI - A)` by the Faddeev-LeVerrier
    /// recurrence. All divisions are exact over the integers.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        // M_1 = I
        let mut m = Self::identity(n);
        for k in 1..=n {
            let am = self.mul(&m);
            let c = -am.trace() / BigInt::from(k);
            coeffs[n - k] = c.clone();
            if k < n {
                m = am;
                for i in 0..n {
                    m[(i, i)] += &c;
                }
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// `Tr(A^nu)` by exact binary powering. Independent of the characteristic
    /// polynomial route.
    pub fn trace_power_direct(&self, nu: u64) -> Result<BigInt> {
        if nu == 0 {
            return Err(Error::contract("trace_power_direct needs nu >= 1"));
        }
        Ok(self.pow(nu).trace())
    }

    /// Whether `A^T J A = J` for the standard form `J` of
    /// [`IntMatrix::standard_symplectic_form`].
    pub fn is_symplectic(&self) -> Result<bool> {
        if !self.dim.is_multiple_of(2) {
            return Err(Error::contract(format!(
                "symplectic check needs even dimension, got {}",
                self.dim
            )));
        }
        let j = Self::standard_symplectic_form(self.dim / 2);
        Ok(self.transpose().mul(&j).mul(self) == j)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.dim + j]
    }
}

/// Serialized as a list of rows of decimal strings.
impl serde::Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.dim))?;
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<Vec<String>> = serde::Deserialize::deserialize(d)?;
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(D::Error::custom("matrix rows must form a square"));
            }
            for x in row {
                entries.push(x.parse::<BigInt>().map_err(D::Error::custom)?);
            }
        }
        IntMatrix::new(dim, entries).map_err(D::Error::custom)
    }
}

impl fmt::Display for IntMatrix {
    /// Writes the matrix in the same text format accepted by [`parse_matrix`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s)
    }
}

/// Parses the matrix text format: the dimension on the first line, then one
/// line of whitespace-separated integers per row. Lines starting with `#` are
/// comments.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'));

    let (dim_line, dim_text) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing dimension line".into(),
    })?;
    let dim_tok = dim_text.trim();
    let dim: usize = dim_tok.parse().map_err(|_| Error::Parse {
        line: dim_line,
        column: column_of(dim_text, dim_tok),
        message: format!("invalid dimension {dim_tok:?}"),
    })?;
    if dim == 0 {
        return Err(Error::Parse {
            line: dim_line,
            column: column_of(dim_text, dim_tok),
            message: "dimension must be at least 1".into(),
        });
    }

    let mut entries = Vec::with_capacity(dim * dim);
    let mut last_line = dim_line;
    for row in 1..=dim {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: last_line + 1,
            column: 1,
            message: format!("expected {dim} rows, found {}", row - 1),
        })?;
        last_line = line_no;
        let mut count = 0;
        for tok in line.split_whitespace() {
            let v: BigInt = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                column: column_of(line, tok),
                message: format!("invalid integer {tok:?}"),
            })?;
            entries.push(v);
            count += 1;
        }
        if count != dim {
            return Err(Error::Parse {
                line: line_no,
                column: line.len() + 1,
                message: format!("row {row} has {count} entries, expected {dim}"),
            });
        }
    }

    if let Some((line_no, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::Parse {
            line: line_no,
            column: column_of(line, line.trim()),
            message: "unexpected content after the last row".into(),
        });
    }

    IntMatrix::new(dim, entries)
}

/// 1-based column of `tok`, which must be a subslice of `line`.
fn column_of(line: &str, tok: &str) -> usize {
    let off = tok.as_ptr() as usize - line.as_ptr() as usize;
    line[..off].chars().count() + 1
}
