//! n-step Fibonacci numbers `F_k = F_{k-1} + ... + F_{k-n}` on all of ℤ.
//!
//! A sequence is fixed by its step count and its seeds `F_1..F_n`. Terms
//! below index 1 come from running the recurrence backwards, so the
//! extension is the unique two-sided sequence through the seeds.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Initial-value convention for an n-step Fibonacci sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SeqConvention {
    /// `F_1 = 1` with the recurrence started from zeros: 1, 1, 2, 4, ... for n = 3.
    Classic,
    /// `F_k = 2^(k-1)` for `1 <= k <= n`; equals `Classic` shifted by one index.
    PaperPowers,
    /// Explicit seeds for indices `1..=n`.
    Custom(Vec<BigInt>),
}

impl SeqConvention {
    pub fn seeds(&self, n: usize) -> Result<Vec<BigInt>> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "step count must be at least 2, got {n}"
            )));
        }
        match self {
            SeqConvention::Classic => Ok((1..=n)
                .map(|k| {
                    if k == 1 {
                        BigInt::one()
                    } else {
                        BigInt::one() << (k - 2)
                    }
                })
                .collect()),
            SeqConvention::PaperPowers => Ok((1..=n).map(|k| BigInt::one() << (k - 1)).collect()),
            SeqConvention::Custom(seeds) if seeds.len() == n => Ok(seeds.clone()),
            SeqConvention::Custom(seeds) => Err(Error::Domain(format!(
                "custom convention needs {n} seeds, got {}",
                seeds.len()
            ))),
        }
    }

    /// Short name used in reports: `classic`, `paper` or `custom:a,b,..`.
    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SeqConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqConvention::Classic => f.write_str("classic"),
            SeqConvention::PaperPowers => f.write_str("paper"),
            SeqConvention::Custom(seeds) => {
                f.write_str("custom:")?;
                for (i, s) in seeds.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for SeqConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(SeqConvention::Classic),
            "paper" | "paper-powers" | "powers" => Ok(SeqConvention::PaperPowers),
            _ => match s.strip_prefix("custom:") {
                Some(list) => list
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::Parse(format!("bad seed {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(SeqConvention::Custom),
                None => Err(Error::Parse(format!(
                    "unknown convention {s:?} (expected classic, paper or custom:a,b,...)"
                ))),
            },
        }
    }
}

/// An n-step Fibonacci sequence with validated seeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NStepSequence {
    n: usize,
    convention: SeqConvention,
    seeds: Vec<BigInt>,
}

impl NStepSequence {
    pub fn new(n: usize, convention: SeqConvention) -> Result<Self> {
        let seeds = convention.seeds(n)?;
        Ok(Self {
            n,
            convention,
            seeds,
        })
    }

    pub fn classic(n: usize) -> Result<Self> {
        Self::new(n, SeqConvention::Classic)
    }

    pub fn paper_powers(n: usize) -> Result<Self> {
        Self::new(n, SeqConvention::PaperPowers)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> &SeqConvention {
        &self.convention
    }

    /// `F_1..=F_n`.
    pub fn seeds(&self) -> &[BigInt] {
        &self.seeds
    }

    /// `F_k` for any integer `k`.
    pub fn term(&self, k: i64) -> BigInt {
        self.terms_range(k, k)
            .expect("singleton range is valid")
            .pop()
            .expect("one term")
    }

    /// `[F_lo, ..., F_hi]`.
    ///
    /// One forward pass and one backward pass, each keeping only a window
    /// of `n + 1` terms. Uses `F_k = 2 F_{k-1} - F_{k-n-1}` forwards and
    /// `F_k = 2 F_{k+n} - F_{k+n+1}` backwards.
    pub fn terms_range(&self, lo: i64, hi: i64) -> Result<Vec<BigInt>> {
        if lo > hi {
            return Err(Error::Range { lo, hi });
        }
        let n = self.n as i64;
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);

        let first_sum: BigInt = self.seeds.iter().sum();

        if lo <= 0 {
            // window holds F_{k+1}..=F_{k+n+1} while stepping down
            let mut window: VecDeque<BigInt> = self.seeds.iter().cloned().collect();
            window.push_back(first_sum.clone());
            let mut below = Vec::new();
            for k in (lo..=0).rev() {
                let next = 2 * &window[n as usize - 1] - &window[n as usize];
                window.pop_back();
                window.push_front(next);
                if k <= hi {
                    below.push(window[0].clone());
                }
            }
            below.reverse();
            out.extend(below);
        }

        if hi >= 1 {
            let start = lo.max(1);
            // F_{k-n-1}..=F_{k-1} once k > n + 1
            let mut window: VecDeque<BigInt> = VecDeque::with_capacity(self.n + 2);
            for k in 1..=hi {
                let value = if k <= n {
                    self.seeds[(k - 1) as usize].clone()
                } else if k == n + 1 {
                    first_sum.clone()
                } else {
                    let v = 2 * window.back().expect("window filled") - &window[0];
                    window.pop_front();
                    v
                };
                if k >= start {
                    out.push(value.clone());
                }
                window.push_back(value);
            }
        }
        Ok(out)
    }

    /// `F_k` for `k >= 1` by binary powering of the companion matrix applied
    /// to the seed state `(F_n, ..., F_1)`.
    pub fn term_fast(&self, k: i64) -> Result<BigInt> {
        if k < 1 {
            return Err(Error::Domain(format!("term_fast needs k >= 1, got {k}")));
        }
        let k = k as u64;
        let n = self.n as u64;
        if k <= n {
            return Ok(self.seeds[(k - 1) as usize].clone());
        }
        let mut state: Vec<BigInt> = self.seeds.iter().rev().cloned().collect();
        let mut power = CompanionPower::new(self.n);
        let mut m = k - n;
        loop {
            if m & 1 == 1 {
                state = power.apply(&state);
            }
            m >>= 1;
            if m == 0 {
                break;
            }
            power.square();
        }
        Ok(state.swap_remove(0))
    }
}

/// The `n x n` matrix advancing `(F_k, ..., F_{k-n+1})` to
/// `(F_{k+1}, ..., F_{k-n+2})`: ones in the first row and on the subdiagonal.
pub fn companion_matrix(n: usize) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "step count must be at least 2, got {n}"
        )));
    }
    IntMatrix::from_fn(n, n, |i, k| {
        if i == 1 || i == k + 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// A power `C^e` of the companion matrix, stored densely row-major.
///
/// Every power of `C` commutes with every other, so squaring and applying
/// in any order yields `C^m` for the accumulated exponent.
struct CompanionPower {
    n: usize,
    entries: Vec<BigInt>,
}

impl CompanionPower {
    fn new(n: usize) -> Self {
        let c = companion_matrix(n).expect("n >= 2 checked by caller");
        Self {
            n,
            entries: c.entries().to_vec(),
        }
    }

    fn square(&mut self) {
        let n = self.n;
        let a = &self.entries;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let aij = &a[i * n + j];
                if aij.is_zero() {
                    continue;
                }
                for k in 0..n {
                    out[i * n + k] += aij * &a[j * n + k];
                }
            }
        }
        self.entries = out;
    }

    fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        (0..n)
            .map(|i| {
                self.entries[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}
