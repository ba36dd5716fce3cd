//! Batch runs over graph corpora: one JSON report line per graph, an
//! aligned summary table, and the leaf-conjecture scan.
//!
//! Graphs are processed on a rayon pool; each graph runs single-threaded
//! and results are collected back into input order, so output is identical
//! for any number of jobs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::alternating::{self, ConjectureRecord};
use crate::budget::Budget;
use crate::corpus;
use crate::error::{Error, Result};
use crate::formats::{parse_graph6_lines, to_graph6};
use crate::graph::Graph;
use crate::matchings::{self, ParamReport, Ratio, TripleSearch};
use crate::pec::{self, PecValues};
use crate::skeleton::{self, Direction, Recognition, ViiiReading};

/// Verifiable claims, by report name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    PecIdentities,
    Lemma42,
    Lemma43,
    Lemma61,
    Lemma62,
    Thm53,
    Thm54,
    Prop52,
    Conjecture,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::PecIdentities,
        Check::Lemma42,
        Check::Lemma43,
        Check::Lemma61,
        Check::Lemma62,
        Check::Thm53,
        Check::Thm54,
        Check::Prop52,
        Check::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::PecIdentities => "pec-identities",
            Check::Lemma42 => "lemma-4.2",
            Check::Lemma43 => "lemma-4.3",
            Check::Lemma61 => "lemma-6.1",
            Check::Lemma62 => "lemma-6.2",
            Check::Thm53 => "thm-5.3",
            Check::Thm54 => "thm-5.4",
            Check::Prop52 => "prop-5.2",
            Check::Conjecture => "conjecture",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

/// Parses a comma-separated check list; `all` selects the whole registry.
pub fn parse_checks(list: &str) -> Result<Vec<Check>> {
    if list.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut out: Vec<Check> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::InvalidParameter("empty check list".into()));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Params {
    pub nu: usize,
    pub lambda: usize,
    pub mu: usize,
    pub mu_prime: usize,
    pub ratio: Ratio,
}

impl From<&ParamReport> for Params {
    fn from(r: &ParamReport) -> Self {
        Params {
            nu: r.nu,
            lambda: r.lambda,
            mu: r.mu,
            mu_prime: r.mu_prime,
            ratio: r.ratio,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: &'static str,
    pub detail: String,
}

/// Everything computed for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportLine {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pec: Option<PecValues>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skeleton_k: Option<usize>,
    pub verdicts: BTreeMap<&'static str, Outcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
    /// The two readings of condition (viii) disagree on skeleton-hood.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub viii_readings_disagree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_micros: Option<u64>,
}

impl ReportLine {
    /// A failed check or an internal inconsistency.
    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty() || self.verdicts.values().any(|&o| o == Outcome::Fail)
    }

    pub fn outcome(&self, check: Check) -> Option<Outcome> {
        self.verdicts.get(check.name()).copied()
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub checks: Vec<Check>,
    pub jobs: usize,
    pub reading: ViiiReading,
    pub max_edges: Option<usize>,
    pub time_limit: Option<Duration>,
    /// Adds `elapsedMicros`, which makes output run-dependent.
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            checks: Vec::new(),
            jobs: 1,
            reading: ViiiReading::PerfectMatching,
            max_edges: None,
            time_limit: None,
            timing: false,
        }
    }
}

/// Where graphs come from.
#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSpec {
    /// graph6 lines; `-` reads standard input.
    File(PathBuf),
    AllConnected(usize),
    Random {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    RandomBipartite {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
}

impl CorpusSpec {
    /// Parses `n,p,count,seed`.
    pub fn parse_random(text: &str, bipartite: bool) -> Result<CorpusSpec> {
        let bad = || Error::InvalidParameter(format!("expected n,p,count,seed, found `{text}`"));
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [n, p, count, seed] = parts[..] else {
            return Err(bad());
        };
        let n = n.parse().map_err(|_| bad())?;
        let p = p.parse().map_err(|_| bad())?;
        let count = count.parse().map_err(|_| bad())?;
        let seed = seed.parse().map_err(|_| bad())?;
        Ok(if bipartite {
            CorpusSpec::RandomBipartite { n, p, count, seed }
        } else {
            CorpusSpec::Random { n, p, count, seed }
        })
    }
}

/// A malformed input line skipped under `keep_going`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub error: Error,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub graphs: Vec<Graph>,
    pub errors: Vec<InputError>,
}

pub fn load_corpus(spec: &CorpusSpec, keep_going: bool) -> Result<Corpus> {
    let graphs = match spec {
        CorpusSpec::File(path) => {
            let text = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
            };
            return parse_corpus_text(&text, keep_going);
        }
        CorpusSpec::AllConnected(n) => corpus::all_connected_up_to(*n)?,
        CorpusSpec::Random { n, p, count, seed } => corpus::random_graphs(*n, *p, *count, *seed)?,
        CorpusSpec::RandomBipartite { n, p, count, seed } => {
            corpus::random_bipartite(*n, *p, *count, *seed)?
        }
    };
    Ok(Corpus {
        graphs,
        errors: Vec::new(),
    })
}

pub fn parse_corpus_text(text: &str, keep_going: bool) -> Result<Corpus> {
    let mut out = Corpus::default();
    for (line, parsed) in parse_graph6_lines(text) {
        match parsed {
            Ok(g) => out.graphs.push(g),
            Err(error) if keep_going => out.errors.push(InputError { line, error }),
            Err(error) => {
                return Err(Error::InvalidParameter(format!("line {line}: {error}")));
            }
        }
    }
    Ok(out)
}

/// Lazily computed facts shared between checks.
struct Facts<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    params: Option<ParamReport>,
    triples: Option<TripleSearch>,
    recognition: Option<Recognition>,
    saturated: Option<bool>,
}

impl<'a> Facts<'a> {
    fn params(&mut self) -> Result<&ParamReport> {
        if self.params.is_none() {
            self.params = Some(matchings::param_report_with(self.g, self.budget)?);
        }
        Ok(self.params.as_ref().expect("just set"))
    }

    fn triples(&mut self) -> Result<&TripleSearch> {
        if self.triples.is_none() {
            let t =
                matchings::maximally_intersecting_all(self.g, matchings::DEFAULT_CAP, self.budget)?;
            self.triples = Some(t);
        }
        Ok(self.triples.as_ref().expect("just set"))
    }

    /// Only sparse graphs can be covered by three matchings, so the triple
    /// search runs only when the degree and edge count allow it.
    fn saturated(&mut self) -> Result<bool> {
        if let Some(s) = self.saturated {
            return Ok(s);
        }
        let p = self.params()?;
        let room = p.nu + p.lambda;
        let s = if self.g.max_degree() > 3 || self.g.m() > room {
            false
        } else {
            let g = self.g;
            matchings::saturation_from(g, self.triples()?).saturated
        };
        self.saturated = Some(s);
        Ok(s)
    }

    fn recognition(&mut self, reading: ViiiReading) -> &Recognition {
        self.recognition.get_or_insert_with(|| {
            skeleton::find_skeleton_decomposition_with(self.g, reading, self.budget)
        })
    }
}

/// Parameters, decomposition minima, saturation and skeleton recognition
/// for one graph, plus the requested checks.
pub fn report_graph(g: &Graph, opts: &Options) -> ReportLine {
    let start = Instant::now();
    let mut line = ReportLine {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        params: None,
        pec: None,
        saturated: None,
        skeleton_k: None,
        verdicts: BTreeMap::new(),
        failures: Vec::new(),
        viii_readings_disagree: false,
        skipped: None,
        elapsed_micros: None,
    };
    let over = opts.max_edges.is_some_and(|max| g.m() > max);
    if over {
        line.skipped = Some(format!("budget: {} edges exceed --max-edges", g.m()));
    } else {
        let budget = Budget::unlimited().with_deadline(opts.time_limit);
        if let Err(e) = fill(g, opts, &budget, &mut line) {
            if let Error::BudgetExhausted(_) = e {
                line.skipped = Some("budget: time limit".to_string());
            } else {
                line.skipped = Some(format!("error: {e}"));
                line.failures.push(Failure {
                    check: "internal",
                    detail: e.to_string(),
                });
            }
        }
    }
    for c in &opts.checks {
        line.verdicts.entry(c.name()).or_insert(Outcome::Skip);
    }
    if opts.timing {
        line.elapsed_micros = Some(start.elapsed().as_micros() as u64);
    }
    line
}

fn fill(g: &Graph, opts: &Options, budget: &Budget, line: &mut ReportLine) -> Result<()> {
    let mut facts = Facts {
        g,
        budget,
        params: None,
        triples: None,
        recognition: None,
        saturated: None,
    };
    let params = facts.params()?.clone();
    line.params = Some(Params::from(&params));
    let minima = pec::pec_minima_with(g, budget)?;
    line.pec = Some(minima.values());
    line.saturated = Some(facts.saturated()?);
    if skeleton::could_be_skeleton(g) {
        match facts.recognition(opts.reading) {
            Recognition::Found(w) => line.skeleton_k = Some(w.k),
            Recognition::Absent => {}
            Recognition::Unknown => return Err(Error::BudgetExhausted(budget.spent())),
        }
    }

    let verdict = |line: &mut ReportLine, check: Check, failure: Option<String>| {
        let outcome = if failure.is_some() {
            Outcome::Fail
        } else {
            Outcome::Pass
        };
        line.verdicts.insert(check.name(), outcome);
        if let Some(detail) = failure {
            line.failures.push(Failure {
                check: check.name(),
                detail,
            });
        }
    };

    for &check in &opts.checks {
        match check {
            Check::PecIdentities => {
                let opt = matchings::PairOptimum {
                    lambda: params.lambda,
                    mu: params.mu,
                    witness: params.pair,
                };
                let v = pec::pec_identities_from(g, params.nu, &opt, &minima);
                let failed: Vec<String> = v
                    .failures()
                    .map(|c| format!("{}: {} vs {}", c.name, c.lhs, c.rhs))
                    .collect();
                verdict(line, check, (!failed.is_empty()).then(|| failed.join("; ")));
            }
            Check::Lemma42 | Check::Lemma43 => {
                let triples = facts.triples()?;
                let mut failure = None;
                for t in &triples.optima {
                    let v = if check == Check::Lemma42 {
                        alternating::check_mh_lemma(g, t)?
                    } else {
                        alternating::check_hh_lemma(g, t)?
                    };
                    let first = v.failures().next().map(|c| (c.id, c.detail.clone()));
                    if let Some((id, detail)) = first {
                        failure = Some(format!(
                            "clause {} on M={:?} H={:?} H'={:?}: {}",
                            id,
                            g.edge_pairs(t.m.edges()),
                            g.edge_pairs(t.h()),
                            g.edge_pairs(t.h_prime()),
                            detail.unwrap_or_default()
                        ));
                        break;
                    }
                }
                verdict(line, check, failure);
            }
            Check::Lemma61 | Check::Lemma62 => {
                let lm = matchings::mu_and_lambda_mu_with(g, matchings::DEFAULT_CAP, budget)?;
                let id = if check == Check::Lemma61 {
                    "6.1"
                } else {
                    "6.2"
                };
                let mut failure = None;
                for pair in &lm.pairs {
                    let v = alternating::section6_unchecked(g, pair);
                    let c = v.clause(id).expect("clause present");
                    if !c.pass {
                        failure = Some(format!(
                            "H={:?} H'={:?}: {}",
                            g.edge_pairs(pair.h.edges()),
                            g.edge_pairs(pair.h_prime.edges()),
                            c.detail.clone().unwrap_or_default()
                        ));
                        break;
                    }
                }
                verdict(line, check, failure);
            }
            Check::Thm53 | Check::Thm54 | Check::Prop52 => {
                if line.verdicts.contains_key(check.name()) {
                    continue;
                }
                let saturated = facts.saturated()?;
                let recognition = facts.recognition(opts.reading).clone();
                let tv =
                    skeleton::theorem_verdict(g, &params, &recognition, Some(saturated), budget)?;
                let other = match opts.reading {
                    ViiiReading::PerfectMatching => ViiiReading::Literal,
                    ViiiReading::Literal => ViiiReading::PerfectMatching,
                };
                if skeleton::could_be_skeleton(g) {
                    let alt = skeleton::find_skeleton_decomposition_with(g, other, budget);
                    if matches!(alt, Recognition::Unknown) {
                        return Err(Error::BudgetExhausted(budget.spent()));
                    }
                    line.viii_readings_disagree =
                        alt.witness().is_some() != recognition.witness().is_some();
                }
                for (c, d) in [
                    (Check::Thm53, tv.direction_a),
                    (Check::Thm54, tv.direction_b),
                    (Check::Prop52, tv.unique_perfect),
                ] {
                    if !opts.checks.contains(&c) {
                        continue;
                    }
                    match d {
                        Direction::Pass | Direction::Vacuous => verdict(line, c, None),
                        Direction::Fail => {
                            verdict(line, c, Some(tv.detail.clone().unwrap_or_default()))
                        }
                        Direction::Unknown => return Err(Error::BudgetExhausted(budget.spent())),
                    }
                }
            }
            Check::Conjecture => {
                let applicable =
                    g.is_connected() && g.is_bipartite() && params.ratio.is_below_one();
                if !applicable {
                    line.verdicts.insert(check.name(), Outcome::Skip);
                    continue;
                }
                let record = alternating::conjecture_from(g, facts.triples()?)?;
                let failure = record.witness.map(|w| {
                    format!(
                        "end-vertex {} of M-H path {:?} is not a leaf",
                        w.non_leaf, w.chain.vertices
                    )
                });
                verdict(line, check, failure);
            }
        }
    }
    Ok(())
}

/// Reports for every graph, in input order.
pub fn run_reports(graphs: &[Graph], opts: &Options) -> Result<Vec<ReportLine>> {
    let mut out = Vec::with_capacity(graphs.len());
    for_each_report(graphs, opts, |line| {
        out.push(line);
        Ok(())
    })?;
    Ok(out)
}

/// Streams reports in input order, computing chunks in parallel.
pub fn for_each_report<F>(graphs: &[Graph], opts: &Options, mut emit: F) -> Result<()>
where
    F: FnMut(ReportLine) -> Result<()>,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    for chunk in graphs.chunks(256) {
        let lines: Vec<ReportLine> =
            pool.install(|| chunk.par_iter().map(|g| report_graph(g, opts)).collect());
        for line in lines {
            emit(line)?;
        }
    }
    Ok(())
}

pub fn write_json_lines<W: Write>(lines: &[ReportLine], mut w: W) -> Result<()> {
    for line in lines {
        write_json_line(line, &mut w)?;
    }
    Ok(())
}

pub fn write_json_line<W: Write, T: Serialize>(value: &T, mut w: W) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(w, "{text}")?;
    Ok(())
}

/// Per-check counts over a run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub graphs: usize,
    pub skipped: usize,
    pub ratio_below_one: usize,
    pub saturated: usize,
    pub skeletons: usize,
    pub viii_disagreements: usize,
    pub failed_lines: usize,
    pub counts: BTreeMap<&'static str, [usize; 3]>,
    /// `(graph6, check, detail)` for every failure.
    pub failures: Vec<(String, &'static str, String)>,
}

impl Summary {
    pub fn add(&mut self, line: &ReportLine) {
        self.graphs += 1;
        self.skipped += line.skipped.is_some() as usize;
        if let Some(p) = &line.params {
            self.ratio_below_one += p.ratio.is_below_one() as usize;
        }
        self.saturated += (line.saturated == Some(true)) as usize;
        self.skeletons += line.skeleton_k.is_some() as usize;
        self.viii_disagreements += line.viii_readings_disagree as usize;
        self.failed_lines += line.has_failures() as usize;
        for (&name, &o) in &line.verdicts {
            let slot = match o {
                Outcome::Pass => 0,
                Outcome::Fail => 1,
                Outcome::Skip => 2,
            };
            self.counts.entry(name).or_default()[slot] += 1;
        }
        for f in &line.failures {
            self.failures
                .push((line.graph6.clone(), f.check, f.detail.clone()));
        }
    }

    pub fn of(lines: &[ReportLine]) -> Summary {
        let mut s = Summary::default();
        for line in lines {
            s.add(line);
        }
        s
    }

    /// Lines with at least one failure.
    pub fn failed(&self) -> usize {
        self.failed_lines
    }

    pub fn fails_of(&self, check: Check) -> usize {
        self.counts.get(check.name()).map_or(0, |c| c[1])
    }

    pub fn skips_of(&self, check: Check) -> usize {
        self.counts.get(check.name()).map_or(0, |c| c[2])
    }

    /// Aligned table for humans.
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graphs           {:>8}", self.graphs);
        let _ = writeln!(s, "skipped          {:>8}", self.skipped);
        let _ = writeln!(s, "ratio < 1        {:>8}", self.ratio_below_one);
        let _ = writeln!(s, "saturated        {:>8}", self.saturated);
        let _ = writeln!(s, "skeletons        {:>8}", self.skeletons);
        if self.viii_disagreements > 0 {
            let _ = writeln!(s, "(viii) disagree  {:>8}", self.viii_disagreements);
        }
        if !self.counts.is_empty() {
            let _ = writeln!(
                s,
                "{:<16} {:>8} {:>8} {:>8}",
                "check", "pass", "fail", "skip"
            );
            for c in Check::ALL {
                if let Some([p, f, k]) = self.counts.get(c.name()) {
                    let _ = writeln!(s, "{:<16} {p:>8} {f:>8} {k:>8}", c.name());
                }
            }
        }
        for (g6, check, detail) in &self.failures {
            let _ = writeln!(s, "FAIL {check} {g6}: {detail}");
        }
        s
    }
}

/// One line of the conjecture scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureLine {
    pub graph6: String,
    #[serde(flatten)]
    pub record: ConjectureRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

pub fn conjecture_lines(graphs: &[Graph], opts: &Options) -> Result<Vec<ConjectureLine>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let scan = |g: &Graph| {
        let budget = Budget::unlimited().with_deadline(opts.time_limit);
        let over = opts.max_edges.is_some_and(|max| g.m() > max);
        let result = if over {
            Err(Error::BudgetExhausted(0))
        } else {
            alternating::conjecture_scan_with(g, &budget)
        };
        let (record, skipped) = match result {
            Ok(r) => (r, None),
            Err(e) => (
                ConjectureRecord {
                    applicable: false,
                    holds: true,
                    triples_examined: 0,
                    witness: None,
                },
                Some(e.to_string()),
            ),
        };
        ConjectureLine {
            graph6: to_graph6(g),
            record,
            skipped,
        }
    };
    Ok(pool.install(|| graphs.par_iter().map(scan).collect()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureSummary {
    pub graphs: usize,
    pub applicable: usize,
    pub holds: usize,
    pub violations: usize,
    pub skipped: usize,
}

impl ConjectureSummary {
    pub fn of(lines: &[ConjectureLine]) -> Self {
        let mut s = ConjectureSummary {
            graphs: lines.len(),
            ..Default::default()
        };
        for l in lines {
            s.skipped += l.skipped.is_some() as usize;
            if l.record.applicable {
                s.applicable += 1;
                if l.record.holds {
                    s.holds += 1;
                } else {
                    s.violations += 1;
                }
            }
        }
        s
    }
}

/// Which outputs a command writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outputs {
    pub json: bool,
    pub summary: bool,
}

impl Outputs {
    pub const BOTH: Outputs = Outputs {
        json: true,
        summary: true,
    };

    /// `--json` or `--summary` alone selects that output; neither or both
    /// selects both.
    pub fn from_flags(json: bool, summary: bool) -> Outputs {
        if json == summary {
            Outputs::BOTH
        } else {
            Outputs { json, summary }
        }
    }
}

/// Process exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn load_reporting<E: Write>(spec: &CorpusSpec, keep_going: bool, err: &mut E) -> Result<Corpus> {
    let corpus = load_corpus(spec, keep_going)?;
    for e in &corpus.errors {
        writeln!(err, "line {}: {}", e.line, e.error)?;
    }
    Ok(corpus)
}

fn run_lines<O: Write, E: Write>(
    graphs: &[Graph],
    opts: &Options,
    outputs: Outputs,
    out: &mut O,
    err: &mut E,
) -> Result<Summary> {
    let mut summary = Summary::default();
    for_each_report(graphs, opts, |line| {
        if outputs.json {
            write_json_line(&line, &mut *out)?;
        }
        summary.add(&line);
        Ok(())
    })?;
    out.flush()?;
    if outputs.summary {
        write!(err, "{}", summary.table())?;
    }
    Ok(summary)
}

/// Parameters, decomposition minima, saturation and skeleton order for
/// each graph. Returns the exit status.
pub fn cmd_analyze<O: Write, E: Write>(
    spec: &CorpusSpec,
    opts: &Options,
    keep_going: bool,
    outputs: Outputs,
    out: &mut O,
    err: &mut E,
) -> Result<i32> {
    let corpus = load_reporting(spec, keep_going, err)?;
    let opts = Options {
        checks: Vec::new(),
        ..opts.clone()
    };
    let summary = run_lines(&corpus.graphs, &opts, outputs, out, err)?;
    Ok(status(&corpus, summary.failed()))
}

/// Runs `opts.checks` over each graph. Exit status 1 iff a check failed.
pub fn cmd_verify<O: Write, E: Write>(
    spec: &CorpusSpec,
    opts: &Options,
    keep_going: bool,
    outputs: Outputs,
    out: &mut O,
    err: &mut E,
) -> Result<i32> {
    if opts.checks.is_empty() {
        return Err(Error::InvalidParameter("no checks selected".into()));
    }
    let corpus = load_reporting(spec, keep_going, err)?;
    let summary = run_lines(&corpus.graphs, opts, outputs, out, err)?;
    Ok(status(&corpus, summary.failed()))
}

fn status(corpus: &Corpus, failed: usize) -> i32 {
    if !corpus.errors.is_empty() {
        EXIT_USAGE
    } else if failed > 0 {
        EXIT_FAILURES
    } else {
        EXIT_OK
    }
}

/// What `generate` emits.
#[derive(Clone, Debug, PartialEq)]
pub enum GenerateKind {
    Spanner,
    KSkeleton {
        k: usize,
        seed: u64,
    },
    /// Connected graphs on exactly `n` vertices.
    AllConnected(usize),
    Corpus(CorpusSpec),
}

/// graph6 lines, one per graph.
pub fn cmd_generate<O: Write>(kind: &GenerateKind, out: &mut O) -> Result<i32> {
    let graphs = match kind {
        GenerateKind::Spanner => vec![skeleton::generate_spanner()],
        GenerateKind::KSkeleton { k, seed } => {
            vec![skeleton::generate_k_skeleton(*k, *seed)?.graph]
        }
        GenerateKind::AllConnected(n) => corpus::all_connected(*n)?,
        GenerateKind::Corpus(spec) => load_corpus(spec, false)?.graphs,
    };
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

/// The leaf-conjecture scan. Findings never affect the exit status.
pub fn cmd_conjecture<O: Write, E: Write>(
    spec: &CorpusSpec,
    opts: &Options,
    keep_going: bool,
    outputs: Outputs,
    out: &mut O,
    err: &mut E,
) -> Result<i32> {
    let corpus = load_reporting(spec, keep_going, err)?;
    let lines = conjecture_lines(&corpus.graphs, opts)?;
    if outputs.json {
        for l in &lines {
            write_json_line(l, &mut *out)?;
        }
        out.flush()?;
    }
    if outputs.summary {
        let s = ConjectureSummary::of(&lines);
        writeln!(err, "graphs       {:>8}", s.graphs)?;
        writeln!(err, "applicable   {:>8}", s.applicable)?;
        writeln!(err, "holds        {:>8}", s.holds)?;
        writeln!(err, "violations   {:>8}", s.violations)?;
        writeln!(err, "skipped      {:>8}", s.skipped)?;
        for l in lines.iter().filter(|l| !l.record.holds) {
            let w = l
                .record
                .witness
                .as_ref()
                .expect("violations carry a witness");
            writeln!(
                err,
                "VIOLATION {}: M={:?} H={:?} H'={:?} path={:?} non-leaf={}",
                l.graph6, w.m, w.h, w.h_prime, w.chain.vertices, w.non_leaf
            )?;
        }
    }
    Ok(if corpus.errors.is_empty() {
        EXIT_OK
    } else {
        EXIT_USAGE
    })
}
