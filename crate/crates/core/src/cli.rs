//! The `nstep` command line.
//!
//! Exit codes: 0 when every record passes, 1 when at least one check fails,
//! 2 on a usage or parse error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::identities::IdentityKind;
use crate::linalg::IntMatrix;
use crate::report::{Format, Record, Summary, SweepReport, VERSION};
use crate::seq::{NStepSequence, SeqConvention};
use crate::sweep::{
    bench_determinants, bench_terms, random_matrix, seeded_rng, BenchReport, BenchTask, ProbePlan,
    Prop1Plan, Span, VerifyPlan,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nstep",
    version,
    about = "Exact determinant identities for n-step Fibonacci numbers"
)]
struct Cli {
    /// Output format: table, json or csv.
    #[arg(long, global = true, default_value = "table")]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the ChaCha8 generator used for random matrices.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Sequence convention: classic, paper or custom:a,b,...
    #[arg(long, global = true, default_value = "classic")]
    convention: SeqConvention,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the terms F_from..=F_to.
    Seq {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
    },
    /// Sweep one identity family (or all) over parameter ranges.
    Verify {
        /// cassini, docagne, vajda, catalan, gen-docagne or all
        kind: String,
        #[arg(long, default_value = "2..4")]
        n: Span,
        #[arg(long, default_value = "1..10")]
        r: Span,
        #[arg(long, default_value = "1..10")]
        s: Span,
        #[arg(long, default_value = "1..6")]
        p: Span,
        #[arg(long, default_value = "1..6")]
        q: Span,
        /// Matrix for gen-docagne, e.g. "1 2; 0 1"; random matrices otherwise.
        #[arg(long)]
        matrix: Option<IntMatrix>,
        /// Random matrices per order for gen-docagne.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Entry bound for random matrices.
        #[arg(long, default_value_t = 9)]
        bound: u64,
    },
    /// Check the signed-minor identity for every deletion on random matrices.
    Prop1 {
        #[arg(long, default_value = "2..4")]
        n: Span,
        #[arg(long, default_value = "1..4")]
        r: Span,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 9)]
        bound: u64,
        /// Use this matrix instead of random draws.
        #[arg(long)]
        matrix: Option<IntMatrix>,
    },
    /// Compare the fast and reference engines; timing is reported, agreement checked.
    Bench {
        /// term-fast-vs-iter or bareiss-vs-laplace
        task: BenchTask,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Comma-separated term indices.
        #[arg(long, value_delimiter = ',', default_value = "100000")]
        k: Vec<u64>,
        /// Comma-separated matrix orders.
        #[arg(long, value_delimiter = ',', default_value = "6")]
        order: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 99)]
        bound: u64,
    },
    /// Report which conventions satisfy each displayed identity.
    Probe {
        #[arg(long, default_value = "2..5")]
        n: Span,
        #[arg(long, default_value = "1..10")]
        r: Span,
        #[arg(long, default_value = "1..6")]
        s: Span,
        #[arg(long, default_value = "1..6")]
        p: Span,
        #[arg(long, default_value = "1..6")]
        q: Span,
    },
}

#[derive(Serialize)]
struct SeqReport<'a> {
    version: &'a str,
    command: &'a str,
    params: BTreeMap<String, String>,
    terms: Vec<String>,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };

    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => execute(&cli),
    };

    match result {
        Ok((text, code)) => match &cli.out {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    EXIT_USAGE
                }
            },
            None => {
                let _ = out.write_all(text.as_bytes());
                code
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "run `nstep --help` for usage");
            EXIT_USAGE
        }
    }
}

fn exit_for(summary: &Summary) -> i32 {
    if summary.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn execute(cli: &Cli) -> Result<(String, i32), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Seq { n, from, to } => {
            let seq = NStepSequence::new(*n, cli.convention.clone())?;
            let terms = seq.terms_range(*from, *to)?;
            let text = match format {
                Format::Table => {
                    let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                    format!("{}\n", parts.join(" "))
                }
                Format::Csv => {
                    let mut s = String::from("k,term\n");
                    for (k, t) in (*from..=*to).zip(&terms) {
                        s.push_str(&format!("{k},{t}\n"));
                    }
                    s
                }
                Format::Json => {
                    let rep = SeqReport {
                        version: VERSION,
                        command: "seq",
                        params: params([
                            ("n", n.to_string()),
                            ("convention", cli.convention.name()),
                            ("from", from.to_string()),
                            ("to", to.to_string()),
                        ]),
                        terms: terms.iter().map(|t| t.to_string()).collect(),
                    };
                    let mut s = serde_json::to_string_pretty(&rep).expect("serializes");
                    s.push('\n');
                    s
                }
            };
            Ok((text, EXIT_PASS))
        }

        Command::Verify {
            kind,
            n,
            r,
            s,
            p,
            q,
            matrix,
            trials,
            bound,
        } => {
            let kinds = match kind.as_str() {
                "all" => vec![
                    IdentityKind::Cassini,
                    IdentityKind::DOcagne,
                    IdentityKind::Vajda,
                    IdentityKind::Catalan,
                    IdentityKind::GeneralizedDOcagne,
                ],
                "ratio" => return Err(Failure::Usage("ratio is not a sweepable kind".into())),
                other => vec![other.parse::<IdentityKind>()?],
            };
            let matrices = if !kinds.contains(&IdentityKind::GeneralizedDOcagne) {
                Vec::new()
            } else if let Some(m) = matrix {
                vec![m.clone()]
            } else {
                if *trials < 1 {
                    return Err(Failure::Usage("trials must be at least 1".into()));
                }
                let mut rng = seeded_rng(cli.seed);
                let mut ms = Vec::new();
                for order in n.iter() {
                    for _ in 0..*trials {
                        ms.push(random_matrix(&mut rng, order, *bound));
                    }
                }
                ms
            };
            let plan = VerifyPlan {
                kinds,
                n: *n,
                r: *r,
                s: *s,
                p: *p,
                q: *q,
                convention: cli.convention.clone(),
                matrices,
            };
            let t = Instant::now();
            let records = plan.run()?;
            let elapsed = t.elapsed().as_secs_f64() * 1e3;
            let mut rep = SweepReport::new(
                "verify",
                params([
                    ("kind", kind.clone()),
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                    ("s", s.to_string()),
                    ("p", p.to_string()),
                    ("q", q.to_string()),
                    ("convention", cli.convention.name()),
                    ("seed", cli.seed.to_string()),
                ]),
                records.iter().map(Record::from).collect(),
            );
            rep.timings_ms.insert("evaluate".into(), elapsed);
            Ok((rep.render(format), exit_for(&rep.summary)))
        }

        Command::Prop1 {
            n,
            r,
            trials,
            bound,
            matrix,
        } => {
            let plan = Prop1Plan {
                n: *n,
                r: *r,
                trials: *trials,
                bound: *bound,
                seed: cli.seed,
                matrix: matrix.clone(),
            };
            let t = Instant::now();
            let records = plan.run()?;
            let elapsed = t.elapsed().as_secs_f64() * 1e3;
            let mut p = params([
                ("n", n.to_string()),
                ("r", r.to_string()),
                ("trials", trials.to_string()),
                ("bound", bound.to_string()),
                ("seed", cli.seed.to_string()),
            ]);
            if let Some(m) = matrix {
                p.insert("matrix".into(), m.to_string());
            }
            let mut rep = SweepReport::new("prop1", p, records);
            rep.timings_ms.insert("evaluate".into(), elapsed);
            Ok((rep.render(format), exit_for(&rep.summary)))
        }

        Command::Bench {
            task,
            n,
            k,
            order,
            trials,
            bound,
        } => {
            let (rows, p) = match task {
                BenchTask::TermFastVsIter => {
                    let ks: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                    (
                        bench_terms(*n, &cli.convention, k)?,
                        params([
                            ("task", "term-fast-vs-iter".into()),
                            ("n", n.to_string()),
                            ("k", ks.join(",")),
                            ("convention", cli.convention.name()),
                        ]),
                    )
                }
                BenchTask::BareissVsLaplace => {
                    let os: Vec<String> = order.iter().map(|x| x.to_string()).collect();
                    (
                        bench_determinants(order, *trials, *bound, cli.seed)?,
                        params([
                            ("task", "bareiss-vs-laplace".into()),
                            ("order", os.join(",")),
                            ("trials", trials.to_string()),
                            ("bound", bound.to_string()),
                            ("seed", cli.seed.to_string()),
                        ]),
                    )
                }
            };
            let summary = Summary::tally(rows.iter().map(|r| &r.agree));
            let rep = BenchReport {
                version: VERSION.to_string(),
                command: "bench".into(),
                params: p,
                rows,
                summary,
            };
            let text = match format {
                Format::Json => rep.to_json(),
                Format::Csv => rep.to_csv(),
                Format::Table => rep.to_table(),
            };
            Ok((text, exit_for(&summary)))
        }

        Command::Probe { n, r, s, p, q } => {
            let plan = ProbePlan {
                n: *n,
                r: *r,
                s: *s,
                p: *p,
                q: *q,
            };
            let t = Instant::now();
            let mut rep = plan.run()?;
            rep.timings_ms
                .insert("evaluate".into(), t.elapsed().as_secs_f64() * 1e3);
            let text = match format {
                Format::Json => rep.to_json(),
                Format::Csv => rep.to_csv(),
                Format::Table => rep.to_table(),
            };
            Ok((text, EXIT_PASS))
        }
    }
}
