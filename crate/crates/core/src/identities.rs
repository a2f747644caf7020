//! Cassini, d'Ocagne, Vajda and Catalan determinants for n-step Fibonacci
//! numbers, plus the minor identities they are derived from.
//!
//! Each `verify_*` function builds the identity's `n x n` matrix from
//! sequence terms, evaluates it exactly and compares it with the predicted
//! value computed from the same sequence.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::construction::extend_columns;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::seq::{NStepSequence, SeqConvention};
use crate::sign::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdentityKind {
    Cassini,
    DOcagne,
    Vajda,
    Catalan,
    GeneralizedDOcagne,
    RatioInvariance,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Cassini => "cassini",
            IdentityKind::DOcagne => "docagne",
            IdentityKind::Vajda => "vajda",
            IdentityKind::Catalan => "catalan",
            IdentityKind::GeneralizedDOcagne => "gen-docagne",
            IdentityKind::RatioInvariance => "ratio",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cassini" => IdentityKind::Cassini,
            "docagne" => IdentityKind::DOcagne,
            "vajda" => IdentityKind::Vajda,
            "catalan" => IdentityKind::Catalan,
            "gen-docagne" => IdentityKind::GeneralizedDOcagne,
            "ratio" => IdentityKind::RatioInvariance,
            _ => return Err(Error::Parse(format!("unknown identity kind {s:?}"))),
        })
    }
}

/// One identity instance. Parameters the kind does not use are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub kind: IdentityKind,
    pub n: usize,
    pub r: usize,
    pub s: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub convention: SeqConvention,
    /// Input matrices for the minor identities; empty otherwise.
    pub inputs: Vec<IntMatrix>,
}

impl IdentityCase {
    fn new(kind: IdentityKind, n: usize, r: usize, convention: SeqConvention) -> Self {
        Self {
            kind,
            n,
            r,
            s: None,
            p: None,
            q: None,
            convention,
            inputs: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub case: IdentityCase,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub pass: bool,
    pub matrix_order: usize,
}

impl VerificationRecord {
    fn new(case: IdentityCase, lhs: BigInt, rhs: BigInt) -> Self {
        let matrix_order = case.n;
        Self {
            pass: lhs == rhs,
            case,
            lhs,
            rhs,
            matrix_order,
        }
    }
}

/// Terms `F_lo..=F_hi` with signed-index lookup.
struct TermWindow {
    lo: i64,
    terms: Vec<BigInt>,
}

impl TermWindow {
    fn new(seq: &NStepSequence, lo: i64, hi: i64) -> Self {
        Self {
            lo,
            terms: seq.terms_range(lo, hi).expect("lo <= hi"),
        }
    }

    fn at(&self, k: i64) -> BigInt {
        self.terms[(k - self.lo) as usize].clone()
    }
}

fn check_params(r: usize, extra: &[(&str, usize)]) -> Result<()> {
    if r < 1 {
        return Err(Error::Domain("r must be at least 1".into()));
    }
    for (name, v) in extra {
        if *v < 1 {
            return Err(Error::Domain(format!("{name} must be at least 1")));
        }
    }
    Ok(())
}

/// `entry(i, k) = F_{r + k - i + 1}`.
pub fn cassini_matrix(seq: &NStepSequence, r: usize) -> Result<IntMatrix> {
    check_params(r, &[])?;
    let n = seq.n() as i64;
    let r = r as i64;
    let w = TermWindow::new(seq, r - n + 2, r + n);
    IntMatrix::from_fn(seq.n(), seq.n(), |i, k| w.at(r + k as i64 - i as i64 + 1))
}

fn cassini_sign(n: usize, r: usize) -> Sign {
    Sign::pow(((n - 1) * r) as u64)
}

fn vajda_sign(n: usize, r: usize) -> Sign {
    Sign::pow(((n - 1) * r + n / 2) as u64)
}

/// Checks `det = (-1)^((n-1) r)`.
pub fn verify_cassini(seq: &NStepSequence, r: usize) -> Result<VerificationRecord> {
    let lhs = cassini_matrix(seq, r)?.det_bareiss()?;
    let rhs = cassini_sign(seq.n(), r).apply(BigInt::from(1));
    let case = IdentityCase::new(IdentityKind::Cassini, seq.n(), r, seq.convention().clone());
    Ok(VerificationRecord::new(case, lhs, rhs))
}

/// Cassini matrix with the last column replaced by `F_{r + n + s - i}`.
pub fn docagne_matrix(seq: &NStepSequence, r: usize, s: usize) -> Result<IntMatrix> {
    check_params(r, &[("s", s)])?;
    let n = seq.n() as i64;
    let (r, s) = (r as i64, s as i64);
    let w = TermWindow::new(seq, r - n + 2, r + n + s - 1);
    IntMatrix::from_fn(seq.n(), seq.n(), |i, k| {
        let (i, k) = (i as i64, k as i64);
        if k < n {
            w.at(r + k - i + 1)
        } else {
            w.at(r + n + s - i)
        }
    })
}

/// Checks `det = (-1)^((n-1) r) F_s`.
pub fn verify_docagne(seq: &NStepSequence, r: usize, s: usize) -> Result<VerificationRecord> {
    let lhs = docagne_matrix(seq, r, s)?.det_bareiss()?;
    let rhs = cassini_sign(seq.n(), r).apply(seq.term(s as i64));
    let mut case = IdentityCase::new(IdentityKind::DOcagne, seq.n(), r, seq.convention().clone());
    case.s = Some(s);
    Ok(VerificationRecord::new(case, lhs, rhs))
}

/// Rows `i < n`: `F_{r-n+i+k}` then `F_{p+r+i-1}`; last row: `F_{q+r+k-1}`
/// then `F_{p+q+r+n-2}`.
pub fn vajda_matrix(seq: &NStepSequence, r: usize, p: usize, q: usize) -> Result<IntMatrix> {
    check_params(r, &[("p", p), ("q", q)])?;
    let n = seq.n() as i64;
    let (r, p, q) = (r as i64, p as i64, q as i64);
    let w = TermWindow::new(seq, r - n + 2, p + q + r + n - 2);
    IntMatrix::from_fn(seq.n(), seq.n(), |i, k| {
        let (i, k) = (i as i64, k as i64);
        match (i < n, k < n) {
            (true, true) => w.at(r - n + i + k),
            (true, false) => w.at(p + r + i - 1),
            (false, true) => w.at(q + r + k - 1),
            (false, false) => w.at(p + q + r + n - 2),
        }
    })
}

/// Checks `det = (-1)^((n-1) r + floor(n/2)) F_p F_q`.
pub fn verify_vajda(
    seq: &NStepSequence,
    r: usize,
    p: usize,
    q: usize,
) -> Result<VerificationRecord> {
    let lhs = vajda_matrix(seq, r, p, q)?.det_bareiss()?;
    let rhs = vajda_sign(seq.n(), r).apply(seq.term(p as i64) * seq.term(q as i64));
    let mut case = IdentityCase::new(IdentityKind::Vajda, seq.n(), r, seq.convention().clone());
    case.p = Some(p);
    case.q = Some(q);
    Ok(VerificationRecord::new(case, lhs, rhs))
}

/// The Vajda matrix with `q = p`.
pub fn catalan_matrix(seq: &NStepSequence, r: usize, p: usize) -> Result<IntMatrix> {
    vajda_matrix(seq, r, p, p)
}

/// [`verify_vajda`] with `q = p`.
pub fn verify_catalan(seq: &NStepSequence, r: usize, p: usize) -> Result<VerificationRecord> {
    let mut rec = verify_vajda(seq, r, p, p)?;
    rec.case.kind = IdentityKind::Catalan;
    Ok(rec)
}

/// Determinant of the kept columns `1..n-1, n + r` of `A_{n+r}`.
fn leading_minor(a: &IntMatrix, r: usize) -> Result<BigInt> {
    let n = a.rows();
    let aext = extend_columns(a, r)?;
    let kept: Vec<usize> = (1..n).chain(std::iter::once(n + r)).collect();
    aext.select_columns(&kept)?.det_bareiss()
}

/// Checks `M(1, ..., n-1, n+r) = F_r det A` with `F` in the powers-of-two
/// convention.
pub fn generalized_docagne(a: &IntMatrix, r: usize) -> Result<VerificationRecord> {
    check_params(r, &[])?;
    if !a.is_square() || a.rows() < 2 {
        return Err(Error::Dimension(format!(
            "need a square matrix of order >= 2, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let lhs = leading_minor(a, r)?;
    let f_r = NStepSequence::paper_powers(n)?.term(r as i64);
    let rhs = f_r * a.det_bareiss()?;
    let mut case = IdentityCase::new(
        IdentityKind::GeneralizedDOcagne,
        n,
        r,
        SeqConvention::PaperPowers,
    );
    case.inputs.push(a.clone());
    Ok(VerificationRecord::new(case, lhs, rhs))
}

/// Checks `M_a / det a = M_b / det b` as `M_a det b = M_b det a`.
pub fn ratio_invariance(a: &IntMatrix, b: &IntMatrix, r: usize) -> Result<VerificationRecord> {
    check_params(r, &[])?;
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() || a.rows() < 2 {
        return Err(Error::Dimension(format!(
            "need two square matrices of the same order >= 2, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let det_a = a.det_bareiss()?;
    if det_a.is_zero() {
        return Err(Error::Singular("a"));
    }
    let det_b = b.det_bareiss()?;
    if det_b.is_zero() {
        return Err(Error::Singular("b"));
    }
    let lhs = leading_minor(a, r)? * &det_b;
    let rhs = leading_minor(b, r)? * &det_a;
    let mut case = IdentityCase::new(
        IdentityKind::RatioInvariance,
        a.rows(),
        r,
        SeqConvention::PaperPowers,
    );
    case.inputs.push(a.clone());
    case.inputs.push(b.clone());
    Ok(VerificationRecord::new(case, lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> IntMatrix {
        s.parse().unwrap()
    }

    fn classic(n: usize) -> NStepSequence {
        NStepSequence::classic(n).unwrap()
    }

    #[test]
    fn cassini_examples() {
        assert_eq!(cassini_matrix(&classic(2), 2).unwrap(), m("2 3; 1 2"));
        assert_eq!(
            cassini_matrix(&classic(3), 1).unwrap(),
            m("1 2 4; 1 1 2; 0 1 1")
        );
        let c = cassini_matrix(&classic(3), 2).unwrap();
        assert_eq!(c, m("2 4 7; 1 2 4; 1 1 2"));
        assert_eq!(c.det_laplace().unwrap(), BigInt::from(1));

        let rec = verify_cassini(&classic(2), 2).unwrap();
        assert_eq!(
            (rec.lhs.clone(), rec.rhs.clone()),
            (BigInt::from(1), BigInt::from(1))
        );
        assert!(rec.pass);
        for r in 1..=12 {
            let rec = verify_cassini(&classic(3), r).unwrap();
            assert_eq!(rec.rhs, BigInt::from(1));
            assert!(rec.pass);
            let rec = verify_cassini(&classic(2), r).unwrap();
            assert_eq!(rec.rhs, Sign::pow(r as u64).apply(BigInt::from(1)));
            assert!(rec.pass);
        }
        let c = cassini_matrix(&classic(5), 7).unwrap();
        for i in 1..=5 {
            assert_eq!(c.get(i, i), &classic(5).term(8));
        }
    }

    #[test]
    fn docagne_examples() {
        assert_eq!(docagne_matrix(&classic(2), 1, 2).unwrap(), m("1 3; 1 2"));
        assert_eq!(
            docagne_matrix(&classic(3), 1, 2).unwrap(),
            m("1 2 7; 1 1 4; 0 1 2")
        );
        let rec = verify_docagne(&classic(2), 1, 2).unwrap();
        assert_eq!(rec.lhs, BigInt::from(-1));
        assert!(rec.pass);
        let rec = verify_docagne(&classic(3), 1, 2).unwrap();
        assert_eq!(rec.lhs, BigInt::from(1));
        assert!(rec.pass);
        for n in 2..=5 {
            for r in 1..=6 {
                assert_eq!(
                    docagne_matrix(&classic(n), r, 1).unwrap(),
                    cassini_matrix(&classic(n), r).unwrap()
                );
            }
        }
    }

    #[test]
    fn vajda_examples() {
        assert_eq!(
            vajda_matrix(&classic(3), 1, 1, 1).unwrap(),
            m("0 1 1; 1 1 2; 1 2 4")
        );
        let rec = verify_vajda(&classic(3), 1, 1, 1).unwrap();
        assert_eq!(rec.lhs, BigInt::from(-1));
        assert!(rec.pass);
        let rec = verify_vajda(&classic(2), 1, 1, 1).unwrap();
        assert_eq!(rec.lhs, BigInt::from(1));
        assert!(rec.pass);

        let f = classic(2);
        let (r, p, q) = (4, 3, 5);
        let want = IntMatrix::from_rows([
            [f.term(r), f.term(p + r)],
            [f.term(q + r), f.term(p + q + r)],
        ])
        .unwrap();
        assert_eq!(vajda_matrix(&f, 4, 3, 5).unwrap(), want);

        for n in 2..=4 {
            let rec = verify_vajda(&classic(n), 3, 1, 9).unwrap();
            assert_eq!(rec.rhs.magnitude(), classic(n).term(9).magnitude());
            assert!(rec.pass);
        }
    }

    #[test]
    fn catalan_is_vajda_with_equal_params() {
        for n in 2..=4 {
            for r in 1..=4 {
                for p in 1..=4 {
                    let seq = classic(n);
                    assert_eq!(
                        catalan_matrix(&seq, r, p).unwrap(),
                        vajda_matrix(&seq, r, p, p).unwrap()
                    );
                    let c = verify_catalan(&seq, r, p).unwrap();
                    let v = verify_vajda(&seq, r, p, p).unwrap();
                    assert_eq!((c.lhs, c.rhs, c.pass), (v.lhs, v.rhs, v.pass));
                    assert_eq!(c.case.kind, IdentityKind::Catalan);
                }
            }
        }
        let rec = verify_catalan(&classic(3), 1, 1).unwrap();
        assert_eq!(rec.lhs, BigInt::from(-1));
        assert_eq!(catalan_matrix(&classic(2), 2, 1).unwrap(), m("1 2; 2 3"));
        let rec = verify_catalan(&classic(2), 2, 1).unwrap();
        assert_eq!(rec.lhs, BigInt::from(-1));
        assert!(rec.pass);
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(cassini_matrix(&classic(2), 0).is_err());
        assert!(docagne_matrix(&classic(2), 1, 0).is_err());
        assert!(vajda_matrix(&classic(2), 1, 1, 0).is_err());
    }

    #[test]
    fn generalized_docagne_examples() {
        let rec = generalized_docagne(&IntMatrix::identity(3).unwrap(), 1).unwrap();
        assert_eq!(rec.lhs, BigInt::from(1));
        assert!(rec.pass);
        let rec = generalized_docagne(&m("1 2; 0 1"), 3).unwrap();
        assert_eq!(rec.lhs, BigInt::from(3));
        assert!(rec.pass);
        let a = m("3 -1 4; 1 5 -9; 2 6 5");
        for r in 1..=5 {
            assert!(generalized_docagne(&a, r).unwrap().pass);
        }
        let singular = m("1 2 3; 2 4 6; 7 8 9");
        let rec = generalized_docagne(&singular, 4).unwrap();
        assert!(rec.lhs.is_zero() && rec.pass);
        assert!(generalized_docagne(&m("1 2 3; 4 5 6"), 1).is_err());
    }

    #[test]
    fn ratio_invariance_examples() {
        let a = m("3 -1 4; 1 5 -9; 2 6 5");
        assert!(ratio_invariance(&a, &a, 2).unwrap().pass);
        let b = a.scaled(&BigInt::from(2));
        assert!(ratio_invariance(&a, &b, 3).unwrap().pass);
        let c = m("1 0 2; 0 1 1; 1 1 0");
        for r in 1..=4 {
            assert!(ratio_invariance(&a, &c, r).unwrap().pass);
        }
        let singular = m("1 2; 2 4");
        assert_eq!(
            ratio_invariance(&singular, &m("1 0; 0 1"), 1).unwrap_err(),
            Error::Singular("a")
        );
        assert_eq!(
            ratio_invariance(&m("1 0; 0 1"), &singular, 1).unwrap_err(),
            Error::Singular("b")
        );
        assert!(matches!(
            ratio_invariance(&a, &singular, 1),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn transpose_reverse_relation() {
        for n in 2..=5 {
            for r in 1..=5 {
                for s in 1..=4 {
                    let d = docagne_matrix(&classic(n), r, s).unwrap();
                    let c = d.transpose().reverse_columns();
                    assert_eq!(
                        c.det_bareiss().unwrap(),
                        Sign::pow((n / 2) as u64).apply(d.det_bareiss().unwrap())
                    );
                }
            }
        }
    }
}
