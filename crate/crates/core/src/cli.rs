//! Batch front end: argument parsing, the five subcommands and their
//! JSON reports. The `msv` binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};
use serde::Serialize;

use crate::algebra::{Ambient, Field, Flavor, Polynomial, Ring, TermOrder};
use crate::comb::{enumerate, SchubertIndex};
use crate::error::{Error, Result};
use crate::families::{antidiagonal_ideal, minor_ideal, point_ideal, schubert_ideal, skew_j_ideal};
use crate::ideal::{Ideal, IdealJson};
use crate::transition::{
    build_canonical_witnesses, certified_conclusions, certify_groebner, classical_system, forest_dot, forest_json,
    skew_system, strong_equalities, verify_axioms, Conclusion, DecompositionTable, ForestJson, SplitConfig, SplitRoute,
    StrongReport, TransitionForest, TransitionPair, TransitionSystem, TransitionWitness, VerificationReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest symmetric size whose seeds are computed as orbit closures.
pub const CLOSURE_SEED_LIMIT: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "msv", version, about = "Matrix Schubert ideals and transition systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a flavor's transition system and check the axioms.
    Verify(CommonArgs),
    /// Symmetric Groebner-basis evidence, index by index.
    Conjectures(CommonArgs),
    /// Build and export the symmetric transition forest.
    Forest(CommonArgs),
    /// Print one family ideal as JSON.
    Ideal(IdealArgs),
    /// Reduced Groebner basis of an ideal read from JSON.
    Gb(GbArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorName {
    Classical,
    Skew,
    Symmetric,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value = "symmetric")]
    pub flavor: FlavorName,
    /// Rows of a classical matrix; defaults to `n`.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "q")]
    pub field: String,
    #[arg(long, default_value = "revlex")]
    pub order: String,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Wall-clock budget in seconds for the whole run.
    #[arg(long)]
    pub timeout: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long = "import-decomp")]
    pub import_decomp: Option<PathBuf>,
    /// Include per-pair timings (reports are then no longer reproducible).
    #[arg(long)]
    pub timings: bool,
    /// Recompute every certified conclusion by Buchberger.
    #[arg(long)]
    pub audit: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealKind {
    Point,
    Minors,
    Adiag,
    Closure,
    SkewJ,
}

#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// One-line word, comma-separated word, or skew cycles such as `(1,4)(2,3)`.
    #[arg(long)]
    pub index: String,
    #[arg(long, value_enum, default_value = "closure")]
    pub kind: IdealKind,
}

#[derive(Args, Debug, Clone)]
pub struct GbArgs {
    /// JSON file `{ "ambient": ..., "generators": [...] }`.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "revlex")]
    pub order: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parsed and validated settings shared by the subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ambient: Ambient,
    pub order: TermOrder,
    pub deadline: Option<Instant>,
    pub import: Option<DecompositionTable>,
    pub timings: bool,
    pub audit: bool,
}

impl RunConfig {
    pub fn new(flavor: Flavor, field: Field, order: TermOrder) -> RunConfig {
        RunConfig {
            ambient: Ambient::new(flavor, field),
            order,
            deadline: None,
            import: None,
            timings: false,
            audit: false,
        }
    }

    pub fn from_args(a: &CommonArgs, mode: &str) -> Result<RunConfig> {
        let field: Field = a.field.parse()?;
        let order: TermOrder = a.order.parse().map_err(|e: Error| Error::Config(e.to_string()))?;
        if a.n == 0 {
            return Err(Error::Config("--n must be positive".into()));
        }
        let flavor = match a.flavor {
            FlavorName::Classical => Flavor::Classical { m: a.m.unwrap_or(a.n), n: a.n },
            FlavorName::Skew => Flavor::Skew { n: a.n },
            FlavorName::Symmetric => Flavor::Symmetric { n: a.n },
        };
        if a.m.is_some() && a.flavor != FlavorName::Classical {
            return Err(Error::Config("--m only applies to the classical flavor".into()));
        }
        let closure_dependent = match mode {
            "verify" | "forest" | "conjectures" => a.n <= CLOSURE_SEED_LIMIT,
            _ => false,
        };
        if a.flavor == FlavorName::Symmetric && field.characteristic() == 2 && closure_dependent {
            return Err(Error::Config(
                "symmetric orbit closures are not modeled in characteristic 2: a symmetric matrix Schubert cell may be a union of several orbits there".into(),
            ));
        }
        let import = match &a.import_decomp {
            Some(p) => Some(DecompositionTable::read(p)?),
            None => None,
        };
        Ok(RunConfig {
            ambient: Ambient::new(flavor, field),
            order,
            deadline: a.timeout.map(|s| Instant::now() + Duration::from_secs(s)),
            import,
            timings: a.timings,
            audit: a.audit,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ambient.ring(self.order)
    }

    fn split_config(&self) -> Result<SplitConfig> {
        let cfg = SplitConfig::new(self.deadline);
        match &self.import {
            Some(t) => cfg.with_table(t, self.order),
            None => Ok(cfg),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroebnerCheck {
    pub label: String,
    pub passed: bool,
}

/// Output of `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub ambient: Ambient,
    pub order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub pairs: usize,
    pub witnesses: usize,
    pub passed: bool,
    pub axioms: VerificationReport,
    pub strong: Vec<StrongReport>,
    pub conclusions: Vec<Conclusion>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub groebner: Vec<GroebnerCheck>,
    /// Symmetric seeds whose computed initial ideal equals `J^sym_w`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub seed_initial_ideals: Vec<GroebnerCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub imported: Vec<String>,
}

pub type Seeds = Vec<(SchubertIndex, Ideal)>;

/// Seeds of the symmetric forest: closures up to [`CLOSURE_SEED_LIMIT`],
/// minor ideals beyond it, with a caveat for the report in the latter case.
pub fn symmetric_seeds(cfg: &RunConfig) -> Result<(Seeds, Option<String>)> {
    let ring = cfg.ring();
    let flavor = cfg.ambient.flavor;
    let Flavor::Symmetric { n } = flavor else {
        return Err(Error::Config("forests are built for the symmetric flavor".into()));
    };
    let indices = enumerate(flavor);
    use rayon::prelude::*;
    let closure = n <= CLOSURE_SEED_LIMIT;
    let seeds = indices
        .par_iter()
        .map(|w| {
            let i = if closure { schubert_ideal(&ring, w, cfg.deadline)? } else { minor_ideal(&ring, w)? };
            Ok((w.clone(), i))
        })
        .collect::<Result<Vec<_>>>()?;
    let note = (!closure).then(|| {
        format!("seeds are the minor ideals I^sym_w, not orbit closures (n > {CLOSURE_SEED_LIMIT}); every conclusion is conditional on that choice")
    });
    Ok((seeds, note))
}

pub fn build_symmetric_forest(cfg: &RunConfig) -> Result<(TransitionForest, Vec<SchubertIndex>, Option<String>)> {
    let (seeds, note) = symmetric_seeds(cfg)?;
    let labeled: Vec<(String, Ideal)> = seeds.iter().map(|(w, i)| (w.to_string(), i.clone())).collect();
    let forest = TransitionForest::build(&labeled, &cfg.split_config()?)?;
    info!("forest has {} nodes from {} seeds", forest.len(), seeds.len());
    Ok((forest, seeds.into_iter().map(|(w, _)| w).collect(), note))
}

fn finish(
    cfg: &RunConfig,
    system: &TransitionSystem,
    witnesses: &[TransitionWitness],
    note: Option<String>,
) -> Result<VerifyReport> {
    let axioms = verify_axioms(system, witnesses, cfg.deadline, cfg.timings)?;
    let (strong, conclusions) = if axioms.passed {
        (
            strong_equalities(system, witnesses, cfg.deadline)?,
            certified_conclusions(system, &axioms, cfg.audit, cfg.deadline)?,
        )
    } else {
        (Vec::new(), Vec::new())
    };
    let passed = axioms.passed && strong.iter().all(|s| s.passed());
    Ok(VerifyReport {
        ambient: cfg.ambient,
        order: cfg.order.to_string(),
        note,
        pairs: system.len(),
        witnesses: witnesses.len(),
        passed,
        axioms,
        strong,
        conclusions,
        groebner: Vec::new(),
        seed_initial_ideals: Vec::new(),
        imported: Vec::new(),
    })
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    let ring = cfg.ring();
    match cfg.ambient.flavor {
        Flavor::Classical { .. } => {
            let indexed = classical_system(&ring)?;
            let ws = build_canonical_witnesses(&indexed)?;
            let mut report = finish(cfg, &indexed.system, &ws, None)?;
            if report.passed {
                for p in indexed.system.pairs() {
                    let ok = certify_groebner(p, p.ideal.generators())?;
                    report.passed &= ok;
                    report.groebner.push(GroebnerCheck { label: p.label.clone(), passed: ok });
                }
            }
            Ok(report)
        }
        Flavor::Skew { .. } => {
            let indexed = skew_system(&ring, cfg.deadline)?;
            let ws = build_canonical_witnesses(&indexed)?;
            finish(cfg, &indexed.system, &ws, None)
        }
        Flavor::Symmetric { .. } => {
            let (forest, indices, note) = build_symmetric_forest(cfg)?;
            let system = forest.system()?;
            let mut report = finish(cfg, &system, &forest.witnesses(), note)?;
            for (w, node) in indices.iter().zip(forest.nodes.iter().filter(|n| n.seed)) {
                let ok = node.j == antidiagonal_ideal(&ring, w)?;
                report.passed &= ok;
                report.seed_initial_ideals.push(GroebnerCheck { label: w.to_string(), passed: ok });
            }
            report.imported = imported_nodes(&forest);
            Ok(report)
        }
    }
}

fn imported_nodes(forest: &TransitionForest) -> Vec<String> {
    forest.nodes.iter().filter(|n| n.route == Some(SplitRoute::Imported)).map(|n| n.label.clone()).collect()
}

/// Three-valued result; budget exhaustion is never a pass or a fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl Evidence {
    fn of(r: Result<bool>) -> Result<Evidence> {
        match r {
            Ok(true) => Ok(Evidence::Pass),
            Ok(false) => Ok(Evidence::Fail),
            Err(Error::Budget(_)) => Ok(Evidence::Inconclusive),
            Err(e) => Err(e),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureEntry {
    pub index: String,
    pub initial_ideal: Evidence,
    pub minors_groebner: Evidence,
    pub closure_equality: Evidence,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub ambient: Ambient,
    pub order: String,
    pub indices: usize,
    pub passed: bool,
    pub inconclusive: usize,
    pub entries: Vec<ConjectureEntry>,
}

/// For the symmetric index `w`: does `init(I^sym_w) = J^sym_w`, do the
/// minors form a Groebner basis, and (small `n`) is `I^sym_w` the closure.
pub fn conjecture_entry(
    ring: &Ring,
    w: &SchubertIndex,
    closure: bool,
    deadline: Option<Instant>,
) -> Result<ConjectureEntry> {
    let i = minor_ideal(ring, w)?;
    let j = antidiagonal_ideal(ring, w)?;
    let initial_ideal = Evidence::of(i.initial_ideal_within(deadline).map(|init| init == j))?;
    let pair = TransitionPair::new(w.to_string(), i.clone(), j);
    let minors_groebner = match initial_ideal {
        Evidence::Inconclusive => Evidence::Inconclusive,
        _ => Evidence::of(certify_groebner(&pair, i.generators()))?,
    };
    let closure_equality =
        if closure { Evidence::of(schubert_ideal(ring, w, deadline).map(|c| c == i))? } else { Evidence::Skipped };
    Ok(ConjectureEntry { index: w.to_string(), initial_ideal, minors_groebner, closure_equality })
}

pub fn cmd_conjectures(cfg: &RunConfig) -> Result<ConjectureReport> {
    let Flavor::Symmetric { n } = cfg.ambient.flavor else {
        return Err(Error::Config("conjectures concern the symmetric flavor".into()));
    };
    let ring = cfg.ring();
    use rayon::prelude::*;
    let closure = n <= CLOSURE_SEED_LIMIT;
    let entries = enumerate(cfg.ambient.flavor)
        .par_iter()
        .map(|w| conjecture_entry(&ring, w, closure, cfg.deadline))
        .collect::<Result<Vec<_>>>()?;
    let bad = |e: &ConjectureEntry| [e.initial_ideal, e.minors_groebner, e.closure_equality].contains(&Evidence::Fail);
    let inconclusive = entries
        .iter()
        .filter(|e| [e.initial_ideal, e.minors_groebner, e.closure_equality].contains(&Evidence::Inconclusive))
        .count();
    Ok(ConjectureReport {
        ambient: cfg.ambient,
        order: cfg.order.to_string(),
        indices: entries.len(),
        passed: !entries.iter().any(bad),
        inconclusive,
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ForestReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub pairs: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    pub imported: Vec<String>,
    pub forest: ForestJson,
}

pub fn cmd_forest(cfg: &RunConfig) -> Result<(ForestReport, String)> {
    let (forest, _, note) = build_symmetric_forest(cfg)?;
    let report = verify_axioms(&forest.system()?, &forest.witnesses(), cfg.deadline, false)?;
    let out = ForestReport {
        note,
        pairs: forest.len(),
        passed: report.passed,
        first_failure: report.first_failure(),
        imported: imported_nodes(&forest),
        forest: forest_json(&forest),
    };
    Ok((out, forest_dot(&forest)))
}

pub fn cmd_ideal(cfg: &RunConfig, index: &str, kind: IdealKind) -> Result<IdealJson> {
    let ring = cfg.ring();
    let w = SchubertIndex::parse(cfg.ambient.flavor, index)?;
    let ideal = match kind {
        IdealKind::Point => point_ideal(&ring, &w)?,
        IdealKind::Minors => minor_ideal(&ring, &w)?,
        IdealKind::Adiag => antidiagonal_ideal(&ring, &w)?.to_ideal(),
        IdealKind::SkewJ => skew_j_ideal(&ring, &w)?.to_ideal(),
        IdealKind::Closure => schubert_ideal(&ring, &w, cfg.deadline)?,
    };
    ideal.gb_within(cfg.deadline)?;
    ideal.to_canonical_json()
}

#[derive(Clone, Debug, Serialize)]
pub struct GbReport {
    pub ambient: Ambient,
    pub order: String,
    pub basis: Vec<String>,
    pub initial: Vec<String>,
}

pub fn cmd_gb(input: &Path, order: TermOrder, deadline: Option<Instant>) -> Result<GbReport> {
    let j: IdealJson = serde_json::from_str(&std::fs::read_to_string(input)?)?;
    let ideal = Ideal::from_json(&j, order)?;
    let gb = ideal.gb_within(deadline)?;
    let ring = ideal.ring();
    Ok(GbReport {
        ambient: j.ambient,
        order: order.to_string(),
        basis: gb.elements().iter().map(Polynomial::to_string).collect(),
        initial: gb.lead_monomials().iter().map(|m| ring.format_monomial(m)).collect(),
    })
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => EXIT_BUDGET,
        Error::Config(_)
        | Error::Parse(_)
        | Error::AmbientMismatch(_)
        | Error::InvalidArgument(_)
        | Error::Io(_)
        | Error::Json(_) => EXIT_CONFIG,
        Error::Combinatorics(_) | Error::Strategy { .. } | Error::Audit(_) => EXIT_FAIL,
    }
}

fn configure_threads(jobs: Option<usize>) {
    if let Some(j) = jobs {
        if rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global().is_err() {
            warn!("thread pool already initialized; --jobs ignored");
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify(a) => {
            configure_threads(a.jobs);
            let cfg = RunConfig::from_args(&a, "verify")?;
            let r = cmd_verify(&cfg)?;
            emit(&r, a.out.as_deref())?;
            if !r.passed {
                let why = r.axioms.first_failure().unwrap_or_else(|| "strengthened or Groebner checks failed".into());
                eprintln!("verification failed: {why}");
            }
            Ok(r.passed)
        }
        Command::Conjectures(a) => {
            configure_threads(a.jobs);
            let cfg = RunConfig::from_args(&a, "conjectures")?;
            let r = cmd_conjectures(&cfg)?;
            emit(&r, a.out.as_deref())?;
            if r.inconclusive > 0 {
                warn!("{} indices were inconclusive within the budget", r.inconclusive);
            }
            Ok(r.passed)
        }
        Command::Forest(a) => {
            configure_threads(a.jobs);
            let cfg = RunConfig::from_args(&a, "forest")?;
            let (r, dot) = match cmd_forest(&cfg) {
                Err(Error::Strategy { ideal, reason }) => {
                    eprintln!("no verified split of {ideal}: {reason}; supply one with --import-decomp");
                    return Err(Error::Strategy { ideal, reason });
                }
                other => other?,
            };
            if let Some(p) = &a.dot {
                std::fs::write(p, dot)?;
            }
            emit(&r, a.out.as_deref())?;
            if let Some(f) = &r.first_failure {
                eprintln!("forest is not a transition system: {f}");
            }
            Ok(r.passed)
        }
        Command::Ideal(a) => {
            let cfg = RunConfig::from_args(&a.common, "ideal")?;
            emit(&cmd_ideal(&cfg, &a.index, a.kind)?, a.common.out.as_deref())?;
            Ok(true)
        }
        Command::Gb(a) => {
            let order: TermOrder = a.order.parse().map_err(|e: Error| Error::Config(e.to_string()))?;
            emit(&cmd_gb(&a.input, order, None)?, a.out.as_deref())?;
            Ok(true)
        }
    }
}

/// Parses arguments, runs one subcommand and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter_or("MSV_LOG", "error")).try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_PASS };
        }
    };
    match dispatch(cli) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
