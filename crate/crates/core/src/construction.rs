//! The banded sign matrix `P`, its row-submatrices `Q`, column extensions
//! of a square matrix, and signed minors of the extension.
//!
//! For a square `A` of order `n`, the extension `A_{n+r}` appends columns
//! `A_{n+j} = A_j + ... + A_{n+j-1}` for `j = 1..=r`. Deleting `r` columns
//! `j_1 < ... < j_r < n + r` leaves an order-`n` minor `M`, and
//! `M = sgn(M) * det Q(j_1, ..., j_r) * det A`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::sign::Sign;

fn check_nr(n: usize, r: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "order n must be at least 2, got {n}"
        )));
    }
    if r < 1 {
        return Err(Error::Domain(
            "extension length r must be at least 1".into(),
        ));
    }
    Ok(())
}

/// The `(n + r - 1) x r` matrix with ones in rows `j..=j+n-1` of column `j`
/// and `-1` in row `j + n` when that row exists.
pub fn build_p(n: usize, r: usize) -> Result<IntMatrix> {
    check_nr(n, r)?;
    IntMatrix::from_fn(n + r - 1, r, |i, j| {
        if j <= i && i < j + n {
            BigInt::one()
        } else if i == j + n {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Rows `rows` of `P(n, r)`, an `r x r` matrix.
pub fn build_q(n: usize, r: usize, rows: &[usize]) -> Result<IntMatrix> {
    if rows.len() != r {
        return Err(Error::Selection(format!(
            "Q needs {r} rows, got {}",
            rows.len()
        )));
    }
    build_p(n, r)?.select_rows(rows)
}

/// `A_{n+r}`: `a` followed by `r` columns, each the sum of the `n`
/// preceding ones.
pub fn extend_columns(a: &IntMatrix, r: usize) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "extension needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if r < 1 {
        return Err(Error::Domain(
            "extension length r must be at least 1".into(),
        ));
    }
    let n = a.cols();
    let mut columns: Vec<Vec<BigInt>> = (1..=n).map(|k| a.column(k)).collect();
    for j in 0..r {
        let next = (0..n)
            .map(|i| columns[j..j + n].iter().map(|c| &c[i]).sum())
            .collect();
        columns.push(next);
    }
    IntMatrix::from_columns(&columns)
}

/// A choice of `r` deleted columns of `A_{n+r}` and the `n` kept ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorSelection {
    n: usize,
    r: usize,
    deleted: Vec<usize>,
    kept: Vec<usize>,
}

impl MinorSelection {
    /// Validates `deleted`: exactly `r` strictly ascending indices in
    /// `1..n+r`. The last column `n + r` can never be deleted.
    pub fn from_deleted(n: usize, r: usize, deleted: &[usize]) -> Result<Self> {
        check_nr(n, r)?;
        if deleted.len() != r {
            return Err(Error::Arity {
                expected: r,
                got: deleted.len(),
            });
        }
        if deleted.contains(&(n + r)) {
            return Err(Error::LastColumn(n + r));
        }
        check_strictly_ascending(deleted, n + r - 1)?;
        let kept = (1..=n + r).filter(|c| !deleted.contains(c)).collect();
        Ok(Self {
            n,
            r,
            deleted: deleted.to_vec(),
            kept,
        })
    }

    /// Builds the selection from the kept indices `i_1 < ... < i_{n-1}`;
    /// `i_n = n + r` is implied.
    pub fn from_kept(n: usize, r: usize, kept_head: &[usize]) -> Result<Self> {
        check_nr(n, r)?;
        if kept_head.len() != n - 1 {
            return Err(Error::Selection(format!(
                "expected {} kept columns before the last, got {}",
                n - 1,
                kept_head.len()
            )));
        }
        check_strictly_ascending(kept_head, n + r - 1)?;
        let deleted: Vec<usize> = (1..n + r).filter(|c| !kept_head.contains(c)).collect();
        Self::from_deleted(n, r, &deleted)
    }

    /// All `C(n + r - 1, r)` selections, ordered lexicographically by the
    /// deleted indices.
    pub fn all(n: usize, r: usize) -> Result<Vec<Self>> {
        check_nr(n, r)?;
        combinations(n + r - 1, r)
            .into_iter()
            .map(|d| Self::from_deleted(n, r, &d))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn deleted(&self) -> &[usize] {
        &self.deleted
    }

    /// Kept columns `i_1, ..., i_{n-1}, n + r`.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// Kept columns without the final `n + r`.
    pub fn kept_head(&self) -> &[usize] {
        &self.kept[..self.n - 1]
    }
}

fn check_strictly_ascending(idx: &[usize], max: usize) -> Result<()> {
    for (pos, &i) in idx.iter().enumerate() {
        if i < 1 || i > max {
            return Err(Error::Selection(format!("index {i} outside 1..{max}")));
        }
        if pos > 0 && idx[pos - 1] >= i {
            return Err(Error::Selection(format!(
                "indices must be strictly ascending: {idx:?}"
            )));
        }
    }
    Ok(())
}

/// Ascending `k`-subsets of `1..=m` in lexicographic order.
pub fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(pos) = (0..k).rev().find(|&p| cur[p] < m - (k - 1 - p)) else {
            return out;
        };
        cur[pos] += 1;
        for p in pos + 1..k {
            cur[p] = cur[p - 1] + 1;
        }
    }
}

/// The `n x n` matrix of columns of `aext` left after deleting `deleted`.
/// `aext` must be `n x (n + r)` with `r = deleted.len()`.
pub fn minor_by_deletion(aext: &IntMatrix, deleted: &[usize]) -> Result<IntMatrix> {
    let n = aext.rows();
    if aext.cols() <= n {
        return Err(Error::Dimension(format!(
            "extended matrix must have more columns than rows, got {}x{}",
            n,
            aext.cols()
        )));
    }
    let r = aext.cols() - n;
    let sel = MinorSelection::from_deleted(n, r, deleted)?;
    aext.select_columns(sel.kept())
}

/// `(-1)^(n r + j_1 + ... + j_r + r (r - 1) / 2)`.
pub fn sign_from_deleted(n: usize, r: usize, deleted: &[usize]) -> Sign {
    let sum: usize = deleted.iter().sum();
    Sign::pow((n * r + sum + r * (r - 1) / 2) as u64)
}

/// `(-1)^(n (n - 1) / 2 + i_1 + ... + i_{n-1})`.
pub fn sign_from_kept(n: usize, kept_head: &[usize]) -> Sign {
    let sum: usize = kept_head.iter().sum();
    Sign::pow((n * (n - 1) / 2 + sum) as u64)
}

/// Both sides of the signed-minor identity for one deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Record {
    pub selection: MinorSelection,
    pub minor_value: BigInt,
    pub sign: Sign,
    pub det_q: BigInt,
    pub det_a: BigInt,
    pub rhs: BigInt,
    pub pass: bool,
}

/// Evaluates the minor of `extend_columns(a, r)` for `deleted` and compares
/// it with `sgn(M) * det Q * det A`.
pub fn check_prop1(a: &IntMatrix, r: usize, deleted: &[usize]) -> Result<Prop1Record> {
    let aext = extend_columns(a, r)?;
    let det_a = a.det_bareiss()?;
    check_prop1_extended(a.rows(), &aext, &det_a, deleted)
}

/// As [`check_prop1`], with the extension and `det A` already computed.
pub fn check_prop1_extended(
    n: usize,
    aext: &IntMatrix,
    det_a: &BigInt,
    deleted: &[usize],
) -> Result<Prop1Record> {
    let r = aext.cols() - n;
    let selection = MinorSelection::from_deleted(n, r, deleted)?;
    let sign = sign_from_deleted(n, r, deleted);
    assert_eq!(
        sign,
        sign_from_kept(n, selection.kept_head()),
        "sign formulas disagree for {selection:?}"
    );
    let minor_value = aext.select_columns(selection.kept())?.det_bareiss()?;
    let det_q = build_q(n, r, deleted)?.det_bareiss()?;
    let rhs = sign.apply(&det_q * det_a);
    Ok(Prop1Record {
        pass: minor_value == rhs,
        selection,
        minor_value,
        sign,
        det_q,
        det_a: det_a.clone(),
        rhs,
    })
}

/// `det Q_r(n, n + 1, ..., n + r - 1)`, which runs through the n-step
/// Fibonacci numbers 1, 2, 4, ..., 2^(n-1), ...
pub fn q_fib_det(n: usize, r: usize) -> Result<BigInt> {
    let rows: Vec<usize> = (n..n + r).collect();
    build_q(n, r, &rows)?.det_bareiss()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::NStepSequence;

    fn m(s: &str) -> IntMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn p_matrix_pattern() {
        assert_eq!(build_p(2, 2).unwrap(), m("1 0; 1 1; -1 1"));
        assert_eq!(build_p(4, 1).unwrap(), m("1; 1; 1; 1"));
        let p = build_p(3, 4).unwrap();
        for j in 1..=4 {
            let col = p.column(j);
            let ones = col.iter().filter(|e| **e == BigInt::one()).count();
            let minus = col.iter().filter(|e| **e == -BigInt::one()).count();
            assert_eq!(ones, 3);
            let sum: BigInt = col.iter().sum();
            // row j + 3 exists only while j + 3 <= n + r - 1 = 6
            let has_minus = j + 3 <= 6;
            assert_eq!(minus, has_minus as usize);
            assert_eq!(sum, BigInt::from(if has_minus { 2 } else { 3 }));
        }
        assert!(build_p(1, 2).is_err());
        assert!(build_p(2, 0).is_err());
    }

    #[test]
    fn q_examples() {
        for (n, r) in [(2, 3), (3, 2), (4, 4)] {
            let rows: Vec<usize> = (1..=r).collect();
            let q = build_q(n, r, &rows).unwrap();
            for i in 1..=r {
                assert_eq!(q.get(i, i), &BigInt::one());
                for k in i + 1..=r {
                    assert!(q.get(i, k).is_zero());
                }
            }
            assert_eq!(q.det_bareiss().unwrap(), BigInt::one());
        }
        let q = build_q(2, 2, &[2, 3]).unwrap();
        assert_eq!(q, m("1 1; -1 1"));
        assert_eq!(q.det_bareiss().unwrap(), BigInt::from(2));
        for j in 1..=3 {
            assert_eq!(build_q(3, 1, &[j]).unwrap(), m("1"));
        }
        assert!(build_q(2, 2, &[3, 2]).is_err());
        assert!(build_q(2, 2, &[1]).is_err());
        assert!(build_q(2, 2, &[1, 4]).is_err());
    }

    #[test]
    fn extension_examples() {
        let e = extend_columns(&m("1 2; 0 1"), 2).unwrap();
        assert_eq!(e, m("1 2 3 5; 0 1 1 2"));
        let e = extend_columns(&IntMatrix::identity(3).unwrap(), 1).unwrap();
        assert_eq!(e.column(4), vec![BigInt::one(); 3]);
        assert!(extend_columns(&m("1 2 3; 4 5 6"), 1).is_err());
        let a = m("3 -1 4; 1 5 -9; 2 6 5");
        let e = extend_columns(&a, 6).unwrap();
        for k in 4..=9 {
            assert_eq!(e.column(k), e.sum_columns(k - 3, k - 1).unwrap());
        }
    }

    #[test]
    fn minor_examples() {
        let e = extend_columns(&m("1 2; 0 1"), 1).unwrap();
        assert_eq!(minor_by_deletion(&e, &[1]).unwrap(), m("2 3; 1 1"));
        let a = m("3 -1 4; 1 5 -9; 2 6 5");
        let e = extend_columns(&a, 2).unwrap();
        assert_eq!(
            minor_by_deletion(&e, &[1, 2]).unwrap(),
            e.select_columns(&[3, 4, 5]).unwrap()
        );
        assert_eq!(minor_by_deletion(&e, &[1, 5]), Err(Error::LastColumn(5)));
        assert_eq!(
            minor_by_deletion(&e, &[1]),
            Err(Error::Arity {
                expected: 2,
                got: 1
            })
        );
        assert!(matches!(
            minor_by_deletion(&e, &[2, 1]),
            Err(Error::Selection(_))
        ));
        for sel in MinorSelection::all(3, 2).unwrap() {
            let expected: Vec<usize> = (1..=5).filter(|c| !sel.deleted().contains(c)).collect();
            assert_eq!(sel.kept(), expected.as_slice());
            assert_eq!(
                minor_by_deletion(&e, sel.deleted()).unwrap(),
                e.select_columns(&expected).unwrap()
            );
        }
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![1, 2, 3]]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(combinations(3, 1), vec![vec![1], vec![2], vec![3]]);
        let c = combinations(7, 3);
        assert_eq!(c.len(), 35);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_from_deleted(2, 1, &[1]), Sign::Minus);
        for n in 2..=5 {
            for r in 1..=5 {
                let d: Vec<usize> = (n..n + r).collect();
                assert_eq!(sign_from_deleted(n, r, &d), Sign::Plus);
                let head: Vec<usize> = (1..n).collect();
                assert_eq!(sign_from_kept(n, &head), Sign::Plus);
                let shifted: Vec<usize> = (r + 1..r + n).collect();
                assert_eq!(sign_from_kept(n, &shifted), Sign::pow(((n - 1) * r) as u64));
            }
        }
        for sel in MinorSelection::all(3, 3).unwrap() {
            assert_eq!(
                sign_from_deleted(3, 3, sel.deleted()),
                sign_from_kept(3, sel.kept_head())
            );
        }
    }

    #[test]
    fn selection_from_kept_round_trip() {
        let sel = MinorSelection::from_kept(3, 2, &[2, 4]).unwrap();
        assert_eq!(sel.deleted(), &[1, 3]);
        assert_eq!(sel.kept(), &[2, 4, 5]);
        assert!(MinorSelection::from_kept(3, 2, &[2]).is_err());
        assert!(MinorSelection::from_kept(3, 2, &[2, 5]).is_err());
    }

    #[test]
    fn prop1_examples() {
        let rec = check_prop1(&m("1 2; 0 1"), 1, &[1]).unwrap();
        assert_eq!(rec.minor_value, BigInt::from(-1));
        assert_eq!(rec.sign, Sign::Minus);
        assert_eq!(rec.det_q, BigInt::one());
        assert_eq!(rec.det_a, BigInt::one());
        assert!(rec.pass);

        let singular = m("1 2 3; 2 4 6; 0 1 1");
        for sel in MinorSelection::all(3, 2).unwrap() {
            let rec = check_prop1(&singular, 2, sel.deleted()).unwrap();
            assert!(rec.minor_value.is_zero() && rec.rhs.is_zero() && rec.pass);
        }
        let a = m("3 -1 4; 1 5 -9; 2 6 5");
        for sel in MinorSelection::all(3, 2).unwrap() {
            assert!(check_prop1(&a, 2, sel.deleted()).unwrap().pass);
        }
    }

    #[test]
    fn q_det_is_paper_powers_sequence() {
        for n in 2..=5 {
            let seq = NStepSequence::paper_powers(n).unwrap();
            assert_eq!(q_fib_det(n, 1).unwrap(), BigInt::one());
            assert_eq!(q_fib_det(n, n).unwrap(), BigInt::one() << (n - 1));
            for r in 1..=12 {
                assert_eq!(q_fib_det(n, r).unwrap(), seq.term(r as i64));
            }
        }
        let fib: Vec<BigInt> = (1..=10).map(|r| q_fib_det(2, r).unwrap()).collect();
        let want: Vec<BigInt> = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(fib, want);
    }
}
