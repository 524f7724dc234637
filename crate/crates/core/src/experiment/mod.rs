//! Named experiment suites and their reports.

mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Embedding, GraphView, RootedOrientedTree, Verdict};
use crate::guards::Guards;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Refinement,
    LemmaMain,
    OracleAgreement,
    C5Rainbow,
    Aravind,
    Dag,
    Parity,
    Br,
    Extraction,
    Generators,
    Girth,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Refinement,
        Suite::LemmaMain,
        Suite::OracleAgreement,
        Suite::C5Rainbow,
        Suite::Aravind,
        Suite::Dag,
        Suite::Parity,
        Suite::Br,
        Suite::Extraction,
        Suite::Generators,
        Suite::Girth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Refinement => "refinement",
            Suite::LemmaMain => "lemma-main",
            Suite::OracleAgreement => "oracle-agreement",
            Suite::C5Rainbow => "c5-rainbow",
            Suite::Aravind => "aravind",
            Suite::Dag => "dag",
            Suite::Parity => "parity",
            Suite::Br => "br",
            Suite::Extraction => "extraction",
            Suite::Generators => "generators",
            Suite::Girth => "girth",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Everything needed to regenerate a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    /// Number of seeded host instances.
    pub seeds: usize,
    /// Number of random cases, for suites that sample cases rather than hosts.
    pub count: usize,
    pub r: usize,
    pub s: usize,
    pub girth: usize,
    pub guards: Guards,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        let (seeds, count, s) = match suite {
            Suite::Refinement => (0, 200, 0),
            Suite::LemmaMain => (50, 0, 3),
            Suite::OracleAgreement => (0, 300, 0),
            Suite::C5Rainbow => (0, 0, 2),
            Suite::Aravind => (0, 2000, 0),
            Suite::Dag => (20, 0, 4),
            Suite::Parity => (0, 200, 5),
            Suite::Br => (30, 0, 4),
            Suite::Extraction => (3, 0, 3),
            Suite::Generators => (20, 0, 0),
            Suite::Girth => (20, 0, 0),
        };
        SuiteConfig {
            suite,
            seed: 0,
            seeds,
            count,
            r: 2,
            s,
            girth: 5,
            guards: Guards::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub id: String,
    pub seed: u64,
    /// Hypotheses of the guarantee being exercised, as checked on the instance.
    pub hypotheses: BTreeMap<String, bool>,
    /// Individual checks; the record succeeds iff all hold.
    pub checks: BTreeMap<String, bool>,
    pub success: bool,
    pub verdict: Option<Verdict>,
    /// Host vertex of each tree vertex, for replay.
    pub image: Option<Vec<usize>>,
    pub revalidated: Option<bool>,
    pub counts: BTreeMap<String, usize>,
    pub note: Option<String>,
}

impl InstanceRecord {
    pub fn new(id: impl Into<String>, seed: u64) -> Self {
        InstanceRecord {
            id: id.into(),
            seed,
            ..Default::default()
        }
    }

    pub fn hypothesis(&mut self, name: &str, holds: bool) {
        self.hypotheses.insert(name.into(), holds);
    }

    pub fn check(&mut self, name: &str, holds: bool) {
        self.checks.insert(name.into(), holds);
    }

    pub fn count(&mut self, name: &str, value: usize) {
        self.counts.insert(name.into(), value);
    }

    /// Records the verdict of `e` and whether it revalidates; returns whether
    /// it revalidates and holds.
    pub fn embedding<G: GraphView + ?Sized>(
        &mut self,
        host: &G,
        tree: &RootedOrientedTree,
        e: &Embedding,
        coloring: Option<&Coloring>,
    ) -> Result<bool> {
        let again = e.revalidate(host, tree, coloring)?;
        self.verdict = Some(e.verdict);
        self.image = Some(e.image.clone());
        self.revalidated = Some(again);
        Ok(again && e.verdict.holds())
    }

    fn close(mut self) -> Self {
        self.success = self.checks.values().all(|&c| c);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub successes: usize,
    pub failures: usize,
    /// Ids of the first failing records.
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub total_ms: f64,
    pub record_ms: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub config: SuiteConfig,
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
    /// Wall-clock data; not part of the determinism contract.
    pub timings: Timings,
}

#[derive(Serialize)]
struct Stable<'a> {
    config: &'a SuiteConfig,
    records: &'a [InstanceRecord],
    summary: &'a Summary,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.summary.failures == 0 && self.summary.records > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON without timings: identical for identical configurations.
    pub fn stable_json(&self) -> String {
        serde_json::to_string_pretty(&Stable {
            config: &self.config,
            records: &self.records,
            summary: &self.summary,
        })
        .expect("report serializes")
    }

    /// One row per record.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::Io(e.to_string());
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["id", "seed", "success", "revalidated", "note"])
            .map_err(io)?;
        for r in &self.records {
            let revalidated = r.revalidated.map_or(String::new(), |b| b.to_string());
            w.write_record([
                r.id.as_str(),
                &r.seed.to_string(),
                &r.success.to_string(),
                &revalidated,
                r.note.as_deref().unwrap_or(""),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Io(e.to_string()))
    }
}

/// A record together with the time spent producing it.
pub(crate) type Timed = (InstanceRecord, f64);

pub(crate) fn timed(f: impl FnOnce() -> Result<InstanceRecord>) -> Result<Timed> {
    let start = Instant::now();
    let rec = f()?.close();
    Ok((rec, start.elapsed().as_secs_f64() * 1e3))
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<ExperimentReport> {
    let start = Instant::now();
    let timed = match cfg.suite {
        Suite::Refinement => suites::refinement(cfg),
        Suite::LemmaMain => suites::lemma_main(cfg),
        Suite::OracleAgreement => suites::oracle_agreement(cfg),
        Suite::C5Rainbow => suites::c5_rainbow(cfg),
        Suite::Aravind => suites::aravind(cfg),
        Suite::Dag => suites::dag(cfg),
        Suite::Parity => suites::parity(cfg),
        Suite::Br => suites::br(cfg),
        Suite::Extraction => suites::extraction(cfg),
        Suite::Generators => suites::generators(cfg),
        Suite::Girth => suites::girth_diagnostic(cfg),
    }?;
    let (records, record_ms): (Vec<_>, Vec<_>) = timed.into_iter().unzip();
    let successes = records.iter().filter(|r| r.success).count();
    let failed = records
        .iter()
        .filter(|r| !r.success)
        .take(20)
        .map(|r| r.id.clone())
        .collect();
    Ok(ExperimentReport {
        config: cfg.clone(),
        summary: Summary {
            records: records.len(),
            successes,
            failures: records.len() - successes,
            failed,
        },
        records,
        timings: Timings {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
            record_ms,
        },
    })
}
