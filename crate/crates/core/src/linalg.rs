//! Dense matrices over arbitrary-precision integers.
//!
//! Row and column indices are 1-based on every public method. Storage is
//! row-major and 0-based internally.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest order accepted by [`IntMatrix::det_laplace`].
pub const LAPLACE_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "empty matrix {rows}x{cols} is not allowed"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows<T, R>(rows: R) -> Result<Self>
    where
        T: Into<BigInt>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
    {
        let mut cols = None;
        let mut count = 0;
        let mut entries = Vec::new();
        for row in rows {
            let before = entries.len();
            entries.extend(row.into_iter().map(Into::into));
            let len = entries.len() - before;
            match cols {
                None => cols = Some(len),
                Some(c) if c != len => {
                    return Err(Error::Dimension(format!(
                        "ragged rows: expected {c} entries, row {} has {len}",
                        count + 1
                    )))
                }
                _ => {}
            }
            count += 1;
        }
        Self::new(count, cols.unwrap_or(0), entries)
    }

    /// Builds a matrix from `f(i, k)` with 1-based row `i` and column `k`.
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for k in 1..=cols {
                entries.push(f(i, k));
            }
        }
        Self::new(rows, cols, entries)
    }

    /// Builds a matrix from its columns, each of the same length.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().position(|c| c.len() != rows) {
            return Err(Error::Dimension(format!(
                "column {} has {} entries, expected {rows}",
                bad + 1,
                columns[bad].len()
            )));
        }
        Self::from_fn(rows, columns.len(), |i, k| columns[k - 1][i - 1].clone())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, k| {
            if i == k {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Entry at 1-based row `i`, column `k`.
    ///
    /// Panics when the position lies outside the matrix.
    pub fn get(&self, i: usize, k: usize) -> &BigInt {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&k),
            "position ({i}, {k}) outside {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (k - 1)]
    }

    /// Column `k` (1-based) as a vector.
    pub fn column(&self, k: usize) -> Vec<BigInt> {
        (1..=self.rows).map(|i| self.get(i, k).clone()).collect()
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[BigInt] {
        assert!((1..=self.rows).contains(&i), "row {i} outside matrix");
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Dimension(format!(
                "determinant needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division in the elimination is exact; a nonzero remainder
    /// would indicate a broken invariant and panics.
    pub fn det_bareiss(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        let mut a = self.entries.clone();
        let at = |i: usize, j: usize| i * n + j;
        let mut negate = false;
        let mut prev = BigInt::one();

        for k in 0..n - 1 {
            if a[at(k, k)].is_zero() {
                let Some(pivot) = (k + 1..n).find(|&i| !a[at(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    a.swap(at(k, j), at(pivot, j));
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[at(i, j)] * &a[at(k, k)] - &a[at(i, k)] * &a[at(k, j)];
                    let (q, rem) = num.div_rem(&prev);
                    assert!(rem.is_zero(), "inexact Bareiss division");
                    a[at(i, j)] = q;
                }
            }
            prev = a[at(k, k)].clone();
        }

        let det = a[at(n - 1, n - 1)].clone();
        Ok(if negate { -det } else { det })
    }

    /// Determinant by cofactor expansion along the first row.
    ///
    /// Factorial cost, so restricted to order at most [`LAPLACE_MAX_ORDER`].
    pub fn det_laplace(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        if n > LAPLACE_MAX_ORDER {
            return Err(Error::SizeGuard {
                order: n,
                max: LAPLACE_MAX_ORDER,
            });
        }
        let cols: Vec<usize> = (0..n).collect();
        Ok(self.laplace_rec(0, &cols))
    }

    fn laplace_rec(&self, row: usize, cols: &[usize]) -> BigInt {
        if cols.len() == 1 {
            return self.entries[row * self.cols + cols[0]].clone();
        }
        let mut total = BigInt::zero();
        let mut rest = Vec::with_capacity(cols.len() - 1);
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &self.entries[row * self.cols + c];
            if entry.is_zero() {
                continue;
            }
            rest.clear();
            rest.extend(cols.iter().copied().filter(|&x| x != c));
            let term = entry * self.laplace_rec(row + 1, &rest);
            if pos % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, k| self.get(k, i).clone())
            .expect("transpose keeps nonzero dimensions")
    }

    /// Column `k` of the result is column `cols + 1 - k` of `self`.
    pub fn reverse_columns(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, k| {
            self.get(i, self.cols + 1 - k).clone()
        })
        .expect("reversal keeps nonzero dimensions")
    }

    /// Submatrix of the given 1-based, strictly ascending columns.
    pub fn select_columns(&self, kept: &[usize]) -> Result<Self> {
        validate_ascending(kept, self.cols, "column")?;
        Self::from_fn(self.rows, kept.len(), |i, k| {
            self.get(i, kept[k - 1]).clone()
        })
    }

    /// Submatrix of the given 1-based, strictly ascending rows.
    pub fn select_rows(&self, kept: &[usize]) -> Result<Self> {
        validate_ascending(kept, self.rows, "row")?;
        Self::from_fn(kept.len(), self.cols, |i, k| {
            self.get(kept[i - 1], k).clone()
        })
    }

    /// Entrywise sum of columns `lo..=hi`.
    pub fn sum_columns(&self, lo: usize, hi: usize) -> Result<Vec<BigInt>> {
        if lo < 1 || lo > hi || hi > self.cols {
            return Err(Error::Range {
                lo: lo as i64,
                hi: hi as i64,
            });
        }
        Ok((1..=self.rows)
            .map(|i| self.row(i)[lo - 1..hi].iter().sum())
            .collect())
    }

    /// Multiplies every entry by `factor`.
    pub fn scaled(&self, factor: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Multiplies column `k` (1-based) by `factor`.
    pub fn scale_column(&self, k: usize, factor: &BigInt) -> Result<Self> {
        if !(1..=self.cols).contains(&k) {
            return Err(Error::Selection(format!(
                "column {k} outside 1..{}",
                self.cols
            )));
        }
        Self::from_fn(self.rows, self.cols, |i, c| {
            let e = self.get(i, c);
            if c == k {
                e * factor
            } else {
                e.clone()
            }
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Self::from_fn(self.rows, other.cols, |i, k| {
            self.row(i)
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(j, a)| a * other.get(j + 1, k))
                .sum()
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((1..=self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Largest absolute entry, useful for reporting.
    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_default()
    }
}

fn validate_ascending(idx: &[usize], bound: usize, what: &str) -> Result<()> {
    if idx.is_empty() {
        return Err(Error::Selection(format!("empty {what} list")));
    }
    for (pos, &i) in idx.iter().enumerate() {
        if i < 1 || i > bound {
            return Err(Error::Selection(format!("{what} {i} outside 1..{bound}")));
        }
        if pos > 0 && idx[pos - 1] >= i {
            return Err(Error::Selection(format!(
                "{what} indices must be strictly ascending: {idx:?}"
            )));
        }
    }
    Ok(())
}

/// Parses the literal format `"1 2; 0 1"`: rows separated by `;`, entries
/// by whitespace or `,`.
impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (n, row) in s.split(';').enumerate() {
            let entries = row
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in row {}", n + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            if entries.is_empty() {
                return Err(Error::Parse(format!("row {} is empty", n + 1)));
            }
            rows.push(entries);
        }
        Self::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            if i > 1 {
                f.write_str("; ")?;
            }
            for (k, e) in self.row(i).iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}
