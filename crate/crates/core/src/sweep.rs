//! Parameter sweeps over identities, signed minors and engine comparisons.
//!
//! Cells may be evaluated in parallel but results are always returned in
//! canonical lexicographic order. Random matrices come from ChaCha8 seeded
//! with `seed_from_u64(seed)` and are drawn sequentially in canonical order
//! before any parallel work starts, so output never depends on scheduling.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construction::{check_prop1_extended, extend_columns, MinorSelection};
use crate::error::{Error, Result};
use crate::identities::{
    generalized_docagne, verify_cassini, verify_catalan, verify_docagne, verify_vajda,
    IdentityKind, VerificationRecord,
};
use crate::linalg::IntMatrix;
use crate::report::{Record, Summary, VERSION};
use crate::seq::{NStepSequence, SeqConvention};
use crate::sign::Sign;

/// Inclusive index range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::Range {
                lo: lo as i64,
                hi: hi as i64,
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn single(v: usize) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    fn at_least(self, min: usize, name: &str) -> Result<Self> {
        if self.lo < min {
            return Err(Error::Domain(format!(
                "{name} must be at least {min}, got {self}"
            )));
        }
        Ok(self)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad range {s:?} (expected a..b or a)"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match s.split_once("..") {
            Some((a, b)) => Span::new(num(a)?, num(b)?),
            None => Ok(Span::single(num(s)?)),
        }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An `n x n` matrix with entries uniform in `[-bound, bound]`.
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: u64) -> IntMatrix {
    let b = bound as i64;
    IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-b..=b))).expect("n >= 1")
}

/// Which identities to sweep and over which parameters.
#[derive(Debug, Clone)]
pub struct VerifyPlan {
    pub kinds: Vec<IdentityKind>,
    pub n: Span,
    pub r: Span,
    pub s: Span,
    pub p: Span,
    pub q: Span,
    pub convention: SeqConvention,
    /// Matrices for the generalized d'Ocagne sweep, keyed by order.
    pub matrices: Vec<IntMatrix>,
}

#[derive(Debug, Clone)]
enum Cell {
    Cassini(usize, usize),
    DOcagne(usize, usize, usize),
    Vajda(usize, usize, usize, usize),
    Catalan(usize, usize, usize),
    GenDOcagne(usize, usize),
}

impl VerifyPlan {
    fn validate(&self) -> Result<()> {
        self.n.at_least(2, "n")?;
        self.r.at_least(1, "r")?;
        self.s.at_least(1, "s")?;
        self.p.at_least(1, "p")?;
        self.q.at_least(1, "q")?;
        for m in &self.matrices {
            if !m.is_square() || m.rows() < 2 {
                return Err(Error::Dimension(format!(
                    "gen-docagne needs square matrices of order >= 2, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(())
    }

    fn cells(&self) -> Vec<Cell> {
        let mut kinds = self.kinds.clone();
        kinds.sort();
        kinds.dedup();
        let mut cells = Vec::new();
        for kind in kinds {
            match kind {
                IdentityKind::Cassini => {
                    for n in self.n.iter() {
                        for r in self.r.iter() {
                            cells.push(Cell::Cassini(n, r));
                        }
                    }
                }
                IdentityKind::DOcagne => {
                    for n in self.n.iter() {
                        for r in self.r.iter() {
                            for s in self.s.iter() {
                                cells.push(Cell::DOcagne(n, r, s));
                            }
                        }
                    }
                }
                IdentityKind::Vajda => {
                    for n in self.n.iter() {
                        for r in self.r.iter() {
                            for p in self.p.iter() {
                                for q in self.q.iter() {
                                    cells.push(Cell::Vajda(n, r, p, q));
                                }
                            }
                        }
                    }
                }
                IdentityKind::Catalan => {
                    for n in self.n.iter() {
                        for r in self.r.iter() {
                            for p in self.p.iter() {
                                cells.push(Cell::Catalan(n, r, p));
                            }
                        }
                    }
                }
                IdentityKind::GeneralizedDOcagne => {
                    let mut orders: Vec<usize> = self.matrices.iter().map(|m| m.rows()).collect();
                    orders.sort_unstable();
                    orders.dedup();
                    for n in orders {
                        for r in self.r.iter() {
                            for (idx, _) in self
                                .matrices
                                .iter()
                                .enumerate()
                                .filter(|(_, m)| m.rows() == n)
                            {
                                cells.push(Cell::GenDOcagne(idx, r));
                            }
                        }
                    }
                }
                IdentityKind::RatioInvariance => {}
            }
        }
        cells
    }

    /// Evaluates every cell; records come back in `(kind, n, r, s, p, q)`
    /// order.
    pub fn run(&self) -> Result<Vec<VerificationRecord>> {
        self.validate()?;
        let cells = self.cells();
        let conv = &self.convention;
        cells
            .par_iter()
            .map(|cell| -> Result<VerificationRecord> {
                match *cell {
                    Cell::Cassini(n, r) => verify_cassini(&NStepSequence::new(n, conv.clone())?, r),
                    Cell::DOcagne(n, r, s) => {
                        verify_docagne(&NStepSequence::new(n, conv.clone())?, r, s)
                    }
                    Cell::Vajda(n, r, p, q) => {
                        verify_vajda(&NStepSequence::new(n, conv.clone())?, r, p, q)
                    }
                    Cell::Catalan(n, r, p) => {
                        verify_catalan(&NStepSequence::new(n, conv.clone())?, r, p)
                    }
                    Cell::GenDOcagne(idx, r) => generalized_docagne(&self.matrices[idx], r),
                }
            })
            .collect()
    }
}

/// Exhaustive signed-minor sweep.
#[derive(Debug, Clone)]
pub struct Prop1Plan {
    pub n: Span,
    pub r: Span,
    pub trials: usize,
    pub bound: u64,
    pub seed: u64,
    /// When set, this matrix replaces the random draws and fixes `n`.
    pub matrix: Option<IntMatrix>,
}

impl Prop1Plan {
    /// The matrices used for each `(n, r)` cell, drawn in canonical order.
    pub fn matrices(&self) -> Result<Vec<(usize, usize, Vec<IntMatrix>)>> {
        if let Some(m) = &self.matrix {
            if !m.is_square() || m.rows() < 2 {
                return Err(Error::Dimension(format!(
                    "prop1 needs a square matrix of order >= 2, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            self.r.at_least(1, "r")?;
            return Ok(self
                .r
                .iter()
                .map(|r| (m.rows(), r, vec![m.clone()]))
                .collect());
        }
        self.n.at_least(2, "n")?;
        self.r.at_least(1, "r")?;
        if self.trials < 1 {
            return Err(Error::Domain("trials must be at least 1".into()));
        }
        let mut rng = seeded_rng(self.seed);
        let mut out = Vec::new();
        for n in self.n.iter() {
            for r in self.r.iter() {
                let ms = (0..self.trials)
                    .map(|_| random_matrix(&mut rng, n, self.bound))
                    .collect();
                out.push((n, r, ms));
            }
        }
        Ok(out)
    }

    /// Records in `(n, r, deletion, trial)` order.
    pub fn run(&self) -> Result<Vec<Record>> {
        let cells = self.matrices()?;
        let with_trial = self.matrix.is_none();
        let per_cell: Vec<Vec<Record>> = cells
            .par_iter()
            .map(|(n, r, ms)| -> Result<Vec<Record>> {
                let prepared = ms
                    .iter()
                    .map(|a| Ok((extend_columns(a, *r)?, a.det_bareiss()?, a.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                let mut recs = Vec::new();
                for sel in MinorSelection::all(*n, *r)? {
                    for (t, (aext, det_a, literal)) in prepared.iter().enumerate() {
                        let rec = check_prop1_extended(*n, aext, det_a, sel.deleted())?;
                        recs.push(Record::from_prop1(
                            &rec,
                            with_trial.then_some(t + 1),
                            literal.clone(),
                        ));
                    }
                }
                Ok(recs)
            })
            .collect::<Result<_>>()?;
        Ok(per_cell.into_iter().flatten().collect())
    }
}

/// One observed identity instance in the convention probe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub family: String,
    pub convention: String,
    pub n: usize,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub lhs: String,
    pub predicted: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub family: String,
    pub convention: String,
    pub total: usize,
    pub holds: usize,
    pub verdict: String,
}

/// For each identity family and each built-in convention, which instances
/// of the displayed identity actually hold. Nothing here is asserted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub families: Vec<FamilyVerdict>,
    pub observations: Vec<Observation>,
    pub timings_ms: BTreeMap<String, f64>,
}

/// Family names reported by the convention probe, in report order.
pub const PROBE_FAMILIES: [&str; 6] = [
    "cassini",
    "docagne",
    "vajda",
    "catalan",
    "catalan-n2-stated-sign",
    "catalan-n2-general-sign",
];

#[derive(Debug, Clone)]
pub struct ProbePlan {
    pub n: Span,
    pub r: Span,
    pub s: Span,
    pub p: Span,
    pub q: Span,
}

impl ProbePlan {
    pub fn params(&self) -> BTreeMap<String, String> {
        [
            ("n", self.n),
            ("r", self.r),
            ("s", self.s),
            ("p", self.p),
            ("q", self.q),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
    }

    pub fn run(&self) -> Result<ProbeReport> {
        self.n.at_least(2, "n")?;
        for (name, span) in [("r", self.r), ("s", self.s), ("p", self.p), ("q", self.q)] {
            span.at_least(1, name)?;
        }
        let conventions = [SeqConvention::Classic, SeqConvention::PaperPowers];
        let mut jobs = Vec::new();
        for family in PROBE_FAMILIES {
            for conv in &conventions {
                for n in self.n.iter() {
                    for r in self.r.iter() {
                        let job = |s, p, q| ProbeJob {
                            family,
                            convention: conv.clone(),
                            n,
                            r,
                            s,
                            p,
                            q,
                        };
                        match family {
                            "cassini" => jobs.push(job(None, None, None)),
                            "docagne" => {
                                jobs.extend(self.s.iter().map(|s| job(Some(s), None, None)))
                            }
                            "vajda" => {
                                for p in self.p.iter() {
                                    jobs.extend(self.q.iter().map(|q| job(None, Some(p), Some(q))));
                                }
                            }
                            "catalan" => {
                                jobs.extend(self.p.iter().map(|p| job(None, Some(p), Some(p))))
                            }
                            _ if n == 2 => {
                                jobs.extend(self.p.iter().map(|p| job(None, Some(p), None)))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }

        let observations = jobs
            .par_iter()
            .map(ProbeJob::observe)
            .collect::<Result<Vec<_>>>()?;

        let mut families = Vec::new();
        for family in PROBE_FAMILIES {
            for conv in &conventions {
                let name = conv.name();
                let sel: Vec<&Observation> = observations
                    .iter()
                    .filter(|o| o.family == family && o.convention == name)
                    .collect();
                if sel.is_empty() {
                    continue;
                }
                let holds = sel.iter().filter(|o| o.holds).count();
                let verdict = match holds {
                    h if h == sel.len() => "holds",
                    0 => "fails",
                    _ => "partial",
                };
                families.push(FamilyVerdict {
                    family: family.to_string(),
                    convention: name,
                    total: sel.len(),
                    holds,
                    verdict: verdict.to_string(),
                });
            }
        }

        Ok(ProbeReport {
            version: VERSION.to_string(),
            command: "probe".to_string(),
            params: self.params(),
            families,
            observations,
            timings_ms: BTreeMap::new(),
        })
    }
}

struct ProbeJob {
    family: &'static str,
    convention: SeqConvention,
    n: usize,
    r: usize,
    s: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
}

impl ProbeJob {
    fn observe(&self) -> Result<Observation> {
        let seq = NStepSequence::new(self.n, self.convention.clone())?;
        let r = self.r;
        let (lhs, predicted) = match self.family {
            "cassini" => pair(verify_cassini(&seq, r)?),
            "docagne" => pair(verify_docagne(&seq, r, self.s.unwrap())?),
            "vajda" => pair(verify_vajda(&seq, r, self.p.unwrap(), self.q.unwrap())?),
            "catalan" => pair(verify_catalan(&seq, r, self.p.unwrap())?),
            fam => {
                // [[F_{r-p}, F_r], [F_r, F_{r+p}]] as displayed for n = 2
                let (r, p) = (r as i64, self.p.unwrap() as i64);
                let m = IntMatrix::from_rows([
                    [seq.term(r - p), seq.term(r)],
                    [seq.term(r), seq.term(r + p)],
                ])?;
                let sq = seq.term(p) * seq.term(p);
                let exp = if fam == "catalan-n2-stated-sign" {
                    r - p
                } else {
                    r - p + 1
                };
                (
                    m.det_bareiss()?,
                    Sign::pow(exp.rem_euclid(2) as u64).apply(sq),
                )
            }
        };
        Ok(Observation {
            family: self.family.to_string(),
            convention: self.convention.name(),
            n: self.n,
            r: self.r,
            s: self.s,
            p: self.p,
            q: self.q,
            holds: lhs == predicted,
            lhs: lhs.to_string(),
            predicted: predicted.to_string(),
        })
    }
}

fn pair(rec: VerificationRecord) -> (BigInt, BigInt) {
    (rec.lhs, rec.rhs)
}

impl ProbeReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "convention probe (nstep {})", self.version);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(
            out,
            "{:<26} {:<8} {:>7} {:>7}  verdict",
            "family", "conv", "holds", "total"
        );
        for f in &self.families {
            let _ = writeln!(
                out,
                "{:<26} {:<8} {:>7} {:>7}  {}",
                f.family, f.convention, f.holds, f.total, f.verdict
            );
        }
        for (phase, ms) in &self.timings_ms {
            let _ = writeln!(out, "  {phase}: {ms:.3} ms");
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,convention,n,r,s,p,q,lhs,predicted,holds\n");
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for o in &self.observations {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                o.family,
                o.convention,
                o.n,
                o.r,
                opt(o.s),
                opt(o.p),
                opt(o.q),
                o.lhs,
                o.predicted,
                o.holds
            );
        }
        out
    }

    pub fn verdict(&self, family: &str, convention: &str) -> Option<&FamilyVerdict> {
        self.families
            .iter()
            .find(|f| f.family == family && f.convention == convention)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchTask {
    TermFastVsIter,
    BareissVsLaplace,
}

impl FromStr for BenchTask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "term-fast-vs-iter" => Ok(BenchTask::TermFastVsIter),
            "bareiss-vs-laplace" => Ok(BenchTask::BareissVsLaplace),
            _ => Err(Error::Parse(format!(
                "unknown bench task {s:?} (expected term-fast-vs-iter or bareiss-vs-laplace)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub task: String,
    pub n: usize,
    pub size: u64,
    pub trials: usize,
    pub agree: bool,
    pub fast_ms: f64,
    pub reference_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub rows: Vec<BenchRow>,
    pub summary: Summary,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "bench (nstep {})", self.version);
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<20} n={} size={} trials={}  fast {:.3} ms  reference {:.3} ms  agree={}",
                r.task, r.n, r.size, r.trials, r.fast_ms, r.reference_ms, r.agree
            );
        }
        let _ = writeln!(
            out,
            "agreement {}/{}",
            self.summary.passed, self.summary.total
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("task,n,size,trials,agree,fast_ms,reference_ms\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.task, r.n, r.size, r.trials, r.agree, r.fast_ms, r.reference_ms
            );
        }
        out
    }
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Times the iterative and companion-power engines at `F_k` for each `k`.
pub fn bench_terms(n: usize, convention: &SeqConvention, ks: &[u64]) -> Result<Vec<BenchRow>> {
    let seq = NStepSequence::new(n, convention.clone())?;
    ks.iter()
        .map(|&k| {
            if k < 1 {
                return Err(Error::Domain("k must be at least 1".into()));
            }
            let t = Instant::now();
            let fast = seq.term_fast(k as i64)?;
            let fast_ms = ms_since(t);
            let t = Instant::now();
            let slow = seq.term(k as i64);
            let reference_ms = ms_since(t);
            Ok(BenchRow {
                task: "term-fast-vs-iter".into(),
                n,
                size: k,
                trials: 1,
                agree: fast == slow,
                fast_ms,
                reference_ms,
            })
        })
        .collect()
}

/// Times Bareiss against cofactor expansion on seeded random matrices.
pub fn bench_determinants(
    orders: &[usize],
    trials: usize,
    bound: u64,
    seed: u64,
) -> Result<Vec<BenchRow>> {
    let mut rng = seeded_rng(seed);
    orders
        .iter()
        .map(|&order| {
            if order < 1 {
                return Err(Error::Domain("order must be at least 1".into()));
            }
            let ms: Vec<IntMatrix> = (0..trials)
                .map(|_| random_matrix(&mut rng, order, bound))
                .collect();
            let t = Instant::now();
            let fast = ms
                .iter()
                .map(|m| m.det_bareiss())
                .collect::<Result<Vec<_>>>()?;
            let fast_ms = ms_since(t);
            let t = Instant::now();
            let slow = ms
                .iter()
                .map(|m| m.det_laplace())
                .collect::<Result<Vec<_>>>()?;
            let reference_ms = ms_since(t);
            Ok(BenchRow {
                task: "bareiss-vs-laplace".into(),
                n: order,
                size: order as u64,
                trials,
                agree: fast == slow,
                fast_ms,
                reference_ms,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_parsing() {
        assert_eq!("2..4".parse::<Span>().unwrap(), Span { lo: 2, hi: 4 });
        assert_eq!("3".parse::<Span>().unwrap(), Span::single(3));
        assert!(matches!("4..2".parse::<Span>(), Err(Error::Range { .. })));
        assert!("a..3".parse::<Span>().is_err());
        assert!("".parse::<Span>().is_err());
        assert_eq!(Span::new(1, 10).unwrap().to_string(), "1..10");
    }

    #[test]
    fn random_matrices_are_reproducible() {
        let a = random_matrix(&mut seeded_rng(7), 4, 9);
        let b = random_matrix(&mut seeded_rng(7), 4, 9);
        assert_eq!(a, b);
        assert!(a.entries().iter().all(|e| e.magnitude() <= &9u32.into()));
        let zero = random_matrix(&mut seeded_rng(1), 3, 0);
        assert!(zero.entries().iter().all(|e| e == &BigInt::from(0)));
    }

    #[test]
    fn verify_plan_order_is_canonical() {
        let plan = VerifyPlan {
            kinds: vec![IdentityKind::Vajda, IdentityKind::Cassini],
            n: Span::new(2, 3).unwrap(),
            r: Span::new(1, 2).unwrap(),
            s: Span::single(1),
            p: Span::new(1, 2).unwrap(),
            q: Span::single(1),
            convention: SeqConvention::Classic,
            matrices: vec![],
        };
        let recs = plan.run().unwrap();
        assert_eq!(recs.len(), 4 + 8);
        let keys: Vec<_> = recs
            .iter()
            .map(|r| {
                (
                    r.case.kind,
                    r.case.n,
                    r.case.r,
                    r.case.s,
                    r.case.p,
                    r.case.q,
                )
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(recs.iter().all(|r| r.pass));
    }

    #[test]
    fn prop1_plan_counts() {
        let plan = Prop1Plan {
            n: Span::new(2, 3).unwrap(),
            r: Span::new(1, 2).unwrap(),
            trials: 3,
            bound: 5,
            seed: 11,
            matrix: None,
        };
        let recs = plan.run().unwrap();
        // C(n+r-1, r): n=2 -> 2 + 3, n=3 -> 3 + 6
        assert_eq!(recs.len(), 3 * (2 + 3 + 3 + 6));
        assert!(recs.iter().all(|r| r.pass));
        assert_eq!(plan.run().unwrap(), recs);
    }

    #[test]
    fn probe_classic_holds_and_paper_does_not() {
        let plan = ProbePlan {
            n: Span::new(2, 4).unwrap(),
            r: Span::new(1, 4).unwrap(),
            s: Span::new(1, 3).unwrap(),
            p: Span::new(1, 3).unwrap(),
            q: Span::new(1, 3).unwrap(),
        };
        let rep = plan.run().unwrap();
        for fam in ["cassini", "docagne", "vajda", "catalan"] {
            assert_eq!(rep.verdict(fam, "classic").unwrap().verdict, "holds");
            assert_ne!(rep.verdict(fam, "paper").unwrap().verdict, "holds");
        }
        assert_eq!(
            rep.verdict("catalan-n2-stated-sign", "classic")
                .unwrap()
                .verdict,
            "fails"
        );
        assert_eq!(
            rep.verdict("catalan-n2-general-sign", "classic")
                .unwrap()
                .verdict,
            "holds"
        );
        let text = rep.to_json();
        let back: ProbeReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn bench_rows_agree() {
        let rows = bench_terms(3, &SeqConvention::Classic, &[1, 50, 500]).unwrap();
        assert!(rows.iter().all(|r| r.agree));
        let rows = bench_determinants(&[1, 3, 5], 4, 20, 3).unwrap();
        assert!(rows.iter().all(|r| r.agree));
        assert!(bench_determinants(&[9], 1, 1, 0).is_err());
    }
}
