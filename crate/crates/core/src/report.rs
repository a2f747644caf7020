//! Sweep reports and their `table`, `json` and `csv` renderings.
//!
//! Big integers are always serialized as decimal strings. JSON output is
//! canonical: parsing a report and serializing it again gives the same
//! bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construction::Prop1Record;
use crate::error::Error;
use crate::identities::VerificationRecord;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// Parameters identifying a single record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CaseInfo {
    pub kind: String,
    pub n: usize,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deleted: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub matrices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_a: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub case: CaseInfo,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl From<&VerificationRecord> for Record {
    fn from(v: &VerificationRecord) -> Self {
        let c = &v.case;
        Record {
            case: CaseInfo {
                kind: c.kind.name().to_string(),
                n: c.n,
                r: c.r,
                s: c.s,
                p: c.p,
                q: c.q,
                convention: Some(c.convention.name()),
                matrices: c.inputs.iter().map(|m| m.to_string()).collect(),
                ..CaseInfo::default()
            },
            lhs: v.lhs.to_string(),
            rhs: v.rhs.to_string(),
            pass: v.pass,
        }
    }
}

impl Record {
    pub fn from_prop1(rec: &Prop1Record, trial: Option<usize>, matrix: String) -> Self {
        Record {
            case: CaseInfo {
                kind: "prop1".to_string(),
                n: rec.selection.n(),
                r: rec.selection.r(),
                deleted: Some(rec.selection.deleted().to_vec()),
                trial,
                matrices: vec![matrix],
                sign: Some(rec.sign.value()),
                det_q: Some(rec.det_q.to_string()),
                det_a: Some(rec.det_a.to_string()),
                ..CaseInfo::default()
            },
            lhs: rec.minor_value.to_string(),
            rhs: rec.rhs.to_string(),
            pass: rec.pass,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn tally<'a>(passes: impl IntoIterator<Item = &'a bool>) -> Self {
        let mut s = Summary::default();
        for &p in passes {
            s.total += 1;
            if p {
                s.passed += 1;
            } else {
                s.failed += 1;
            }
        }
        s
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub timings_ms: BTreeMap<String, f64>,
}

impl SweepReport {
    pub fn new(command: &str, params: BTreeMap<String, String>, records: Vec<Record>) -> Self {
        let summary = Summary::tally(records.iter().map(|r| &r.pass));
        Self {
            version: VERSION.to_string(),
            command: command.to_string(),
            params,
            records,
            summary,
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Table => self.to_table(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,n,r,s,p,q,convention,deleted,trial,lhs,rhs,pass\n");
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for rec in &self.records {
            let c = &rec.case;
            let deleted = c
                .deleted
                .as_ref()
                .map(|d| {
                    d.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                c.kind,
                c.n,
                c.r,
                opt(c.s),
                opt(c.p),
                opt(c.q),
                c.convention.as_deref().unwrap_or(""),
                deleted,
                opt(c.trial),
                rec.lhs,
                rec.rhs,
                rec.pass
            );
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (nstep {})", self.command, self.version);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for rec in &self.records {
            let _ = writeln!(
                out,
                "{:4}  {:<40}  lhs={}  rhs={}",
                if rec.pass { "ok" } else { "FAIL" },
                describe(&rec.case),
                rec.lhs,
                rec.rhs
            );
        }
        let _ = writeln!(
            out,
            "total {}  passed {}  failed {}",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        for (phase, ms) in &self.timings_ms {
            let _ = writeln!(out, "  {phase}: {ms:.3} ms");
        }
        out
    }
}

fn describe(c: &CaseInfo) -> String {
    let mut s = format!("{} n={} r={}", c.kind, c.n, c.r);
    for (name, v) in [("s", c.s), ("p", c.p), ("q", c.q), ("trial", c.trial)] {
        if let Some(v) = v {
            let _ = write!(s, " {name}={v}");
        }
    }
    if let Some(d) = &c.deleted {
        let _ = write!(s, " deleted={d:?}");
    }
    if let Some(conv) = &c.convention {
        let _ = write!(s, " [{conv}]");
    }
    s
}
