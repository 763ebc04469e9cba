//! Transition systems: pairs `(I, J)`, witnesses, the four axioms, and the
//! conclusions they certify.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{divide_with_remainder, is_groebner_basis, Polynomial};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MonomialIdeal};

/// One pair `(I, J)` with `J` a monomial ideal meant to be `init(I)`.
#[derive(Clone, Debug)]
pub struct TransitionPair {
    pub label: String,
    pub ideal: Ideal,
    pub j: MonomialIdeal,
}

impl TransitionPair {
    pub fn new(label: impl Into<String>, ideal: Ideal, j: MonomialIdeal) -> TransitionPair {
        TransitionPair { label: label.into(), ideal, j }
    }

    /// A pair whose second entry is the monomial ideal itself.
    pub fn monomial(label: impl Into<String>, j: MonomialIdeal) -> TransitionPair {
        TransitionPair { label: label.into(), ideal: j.to_ideal(), j }
    }

    pub fn is_maximal(&self) -> bool {
        self.ideal.is_maximal_point_ideal().is_some()
    }

    /// `I = J` as ideals; such pairs need no witness.
    pub fn is_monomial(&self) -> bool {
        self.ideal == self.j.to_ideal()
    }
}

/// The data `(f, Φ)` attached to a pair, plus the pair `(I', J')` when the
/// quotient `(I : f)` differs from `I`.
#[derive(Clone, Debug)]
pub struct TransitionWitness {
    pub pair: String,
    pub f: Polynomial,
    pub phi: Vec<String>,
    pub quotient_pair: Option<String>,
}

/// A labeled set of pairs. Labels are unique.
#[derive(Clone, Debug)]
pub struct TransitionSystem {
    pairs: Vec<TransitionPair>,
    index: HashMap<String, usize>,
}

impl TransitionSystem {
    pub fn new(pairs: Vec<TransitionPair>) -> Result<TransitionSystem> {
        let mut index = HashMap::new();
        for (k, p) in pairs.iter().enumerate() {
            if index.insert(p.label.clone(), k).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate pair label {}", p.label)));
            }
            if k > 0 {
                pairs[0].ideal.ring().check_same(p.ideal.ring())?;
            }
        }
        Ok(TransitionSystem { pairs, index })
    }

    pub fn pairs(&self) -> &[TransitionPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&TransitionPair> {
        self.index.get(label).map(|&k| &self.pairs[k])
    }

    /// Drops a pair, e.g. to exhibit a set that is not a transition system.
    pub fn without(&self, label: &str) -> Result<TransitionSystem> {
        TransitionSystem::new(self.pairs.iter().filter(|p| p.label != label).cloned().collect())
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    #[serde(rename = "n/a")]
    NotApplicable,
    Fail(String),
}

impl Outcome {
    pub fn ok(&self) -> bool {
        !matches!(self, Outcome::Fail(_))
    }

    fn check(cond: bool, reason: impl FnOnce() -> String) -> Outcome {
        if cond {
            Outcome::Pass
        } else {
            Outcome::Fail(reason())
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => write!(f, "pass"),
            Outcome::NotApplicable => write!(f, "n/a"),
            Outcome::Fail(r) => write!(f, "fail: {r}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub label: String,
    pub maximal: bool,
    pub monomial: bool,
    pub t1: Outcome,
    pub t2: Outcome,
    pub t3: Outcome,
    pub t4: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        [&self.t1, &self.t2, &self.t3, &self.t4].iter().all(|o| o.ok())
    }

    /// The first failing axiom and its reason.
    pub fn failure(&self) -> Option<(&'static str, &str)> {
        [("T1", &self.t1), ("T2", &self.t2), ("T3", &self.t3), ("T4", &self.t4)].into_iter().find_map(|(name, o)| {
            match o {
                Outcome::Fail(r) => Some((name, r.as_str())),
                _ => None,
            }
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub pairs: Vec<PairReport>,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<String> {
        self.pairs.iter().find_map(|p| p.failure().map(|(ax, r)| format!("pair {} fails {ax}: {r}", p.label)))
    }
}

fn check_deadline(deadline: Option<Instant>) -> Result<()> {
    match deadline {
        Some(d) if Instant::now() > d => Err(Error::Budget("axiom verification ran out of time".into())),
        _ => Ok(()),
    }
}

fn check_t1(pair: &TransitionPair, deadline: Option<Instant>) -> Result<Outcome> {
    if pair.j.is_unit() || pair.ideal.generators().iter().any(|g| g.is_constant() && !g.is_zero()) {
        return Ok(Outcome::Fail("unit ideal in a pair".into()));
    }
    let leads = MonomialIdeal::new(
        pair.ideal.ring(),
        pair.ideal.generators().iter().filter_map(|g| g.lead_monomial()).collect(),
    );
    let init = if leads.contains_ideal(&pair.j) { None } else { Some(pair.ideal.initial_ideal_within(deadline)?) };
    if let Some(init) = &init {
        if !init.contains_ideal(&pair.j) {
            return Ok(Outcome::Fail(format!("J = {} is not contained in init(I) = {init}", pair.j)));
        }
    }
    if pair.ideal.gb_within(deadline)?.is_unit() {
        return Ok(Outcome::Fail("I is the unit ideal".into()));
    }
    if pair.is_maximal() {
        let init = match init {
            Some(i) => i,
            None => pair.ideal.initial_ideal_within(deadline)?,
        };
        return Ok(Outcome::check(pair.j.is_irrelevant() && init == pair.j, || {
            format!("I is maximal but J = {} differs from init(I) = {init}", pair.j)
        }));
    }
    Ok(Outcome::Pass)
}

fn key(ideal: &Ideal) -> Vec<String> {
    ideal.canonical_generators()
}

struct Checker<'a> {
    system: &'a TransitionSystem,
    by_ideal: HashMap<Vec<String>, Vec<usize>>,
    witnesses: HashMap<&'a str, &'a TransitionWitness>,
    deadline: Option<Instant>,
}

impl<'a> Checker<'a> {
    fn t2(&self, k: usize) -> Outcome {
        let p = &self.system.pairs[k];
        let same = &self.by_ideal[&key(&p.ideal)];
        match same.iter().map(|&o| &self.system.pairs[o]).find(|o| o.j != p.j) {
            Some(o) => Outcome::Fail(format!("pair {} has the same I but J = {}", o.label, o.j)),
            None => Outcome::Pass,
        }
    }

    fn t3_t4(&self, pair: &TransitionPair) -> Result<(Outcome, Outcome)> {
        let Some(w) = self.witnesses.get(pair.label.as_str()) else {
            return Ok((
                Outcome::Fail("no witness for a pair with I neither maximal nor monomial".into()),
                Outcome::NotApplicable,
            ));
        };
        let ring = pair.ideal.ring();
        if w.f.ring() != ring {
            return Ok((Outcome::Fail("witness polynomial lives in another ring".into()), Outcome::NotApplicable));
        }
        if w.f.is_constant() {
            return Ok((Outcome::Fail("f is constant".into()), Outcome::NotApplicable));
        }
        if pair.ideal.gb_within(self.deadline)?.contains(&w.f) {
            return Ok((Outcome::Fail(format!("f = {} lies in I", w.f)), Outcome::NotApplicable));
        }
        if w.phi.is_empty() {
            return Ok((Outcome::Fail("Φ is empty".into()), Outcome::NotApplicable));
        }
        let mut phi = Vec::new();
        for l in &w.phi {
            match self.system.get(l) {
                Some(p) => phi.push(p),
                None => {
                    return Ok((
                        Outcome::Fail(format!("Φ names {l}, which is not in the system")),
                        Outcome::NotApplicable,
                    ))
                }
            }
        }
        for p in &phi {
            check_deadline(self.deadline)?;
            let gb = p.ideal.gb_within(self.deadline)?;
            if !gb.contains(&w.f) || !pair.ideal.generators().iter().all(|g| gb.contains(g)) {
                return Ok((Outcome::Fail(format!("I + <f> is not contained in {}", p.label)), Outcome::NotApplicable));
            }
        }
        let lead = w.f.lead_monomial().expect("nonzero witness");
        let qs: Vec<MonomialIdeal> = phi.iter().map(|p| p.j.clone()).collect();
        let meet = MonomialIdeal::intersect_all(ring, &qs);
        let jf = pair.j.add_generator(&lead);
        if meet != jf {
            return Ok((
                Outcome::Fail(format!("J + <init f> = {jf} but the Q intersect to {meet}")),
                Outcome::NotApplicable,
            ));
        }
        let quotient = pair.ideal.quotient_within(&w.f, self.deadline)?;
        if quotient == pair.ideal {
            return Ok((Outcome::Pass, Outcome::NotApplicable));
        }
        let jq = pair.j.quotient(&lead);
        let candidates: Vec<&TransitionPair> = match &w.quotient_pair {
            Some(l) => self.system.get(l).into_iter().collect(),
            None => self
                .by_ideal
                .get(&key(&quotient))
                .map(|v| v.iter().map(|&k| &self.system.pairs[k]).collect())
                .unwrap_or_default(),
        };
        let t4 = match candidates.iter().find(|c| c.ideal == quotient) {
            None => Outcome::Fail(format!("(I : f) = {quotient} has no pair in the system")),
            Some(c) => {
                Outcome::check(c.j == jq, || format!("pair {} has J = {} but (J : init f) = {jq}", c.label, c.j))
            }
        };
        Ok((Outcome::Pass, t4))
    }
}

/// Checks the four axioms of a transition system on every pair. Failures
/// are report entries; only an exhausted budget is an error.
pub fn verify_axioms(
    system: &TransitionSystem,
    witnesses: &[TransitionWitness],
    deadline: Option<Instant>,
    timings: bool,
) -> Result<VerificationReport> {
    let keys: Vec<Result<Vec<String>>> =
        system.pairs.par_iter().map(|p| p.ideal.gb_within(deadline).map(|_| key(&p.ideal))).collect();
    let mut by_ideal: HashMap<Vec<String>, Vec<usize>> = HashMap::new();
    for (k, c) in keys.into_iter().enumerate() {
        by_ideal.entry(c?).or_default().push(k);
    }
    let checker =
        Checker { system, by_ideal, witnesses: witnesses.iter().map(|w| (w.pair.as_str(), w)).collect(), deadline };
    let pairs = (0..system.len())
        .into_par_iter()
        .map(|k| {
            let start = Instant::now();
            let pair = &system.pairs[k];
            let maximal = pair.is_maximal();
            let monomial = pair.is_monomial();
            let t1 = check_t1(pair, deadline)?;
            let t2 = checker.t2(k);
            let (t3, t4) = if maximal || monomial {
                (Outcome::NotApplicable, Outcome::NotApplicable)
            } else {
                checker.t3_t4(pair)?
            };
            let millis = timings.then(|| start.elapsed().as_millis() as u64);
            Ok(PairReport { label: pair.label.clone(), maximal, monomial, t1, t2, t3, t4, millis })
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = pairs.iter().all(|p| p.passed());
    Ok(VerificationReport { passed, pairs })
}

#[derive(Clone, Debug, Serialize)]
pub struct Conclusion {
    pub label: String,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audited: Option<bool>,
}

/// `init(I) = J` for every pair of a verified system. In audit mode each
/// statement is recomputed by Buchberger; a mismatch is an engine bug.
pub fn certified_conclusions(
    system: &TransitionSystem,
    report: &VerificationReport,
    audit: bool,
    deadline: Option<Instant>,
) -> Result<Vec<Conclusion>> {
    if !report.passed {
        return Err(Error::InvalidArgument("conclusions need a system that passed verification".into()));
    }
    system
        .pairs
        .par_iter()
        .map(|p| {
            let statement = format!("init({}) = {}", p.ideal, p.j);
            let audited = if audit {
                let init = p.ideal.initial_ideal_within(deadline)?;
                if init != p.j {
                    return Err(Error::Audit(format!(
                        "pair {}: Buchberger gives init(I) = {init}, expected {}",
                        p.label, p.j
                    )));
                }
                Some(true)
            } else {
                None
            };
            Ok(Conclusion { label: p.label.clone(), statement, audited })
        })
        .collect()
}

/// Tests whether `G ⊆ I` is a Groebner basis via `J ⊆ <init g>`, which is
/// conclusive once `init(I) = J` is known. A pass is double-checked.
pub fn certify_groebner(pair: &TransitionPair, g: &[Polynomial]) -> Result<bool> {
    let gb = pair.ideal.gb();
    for p in g {
        if p.ring() != pair.ideal.ring() {
            return Err(Error::AmbientMismatch(format!("{p} lives in another ring")));
        }
        if !gb.contains(p) {
            return Err(Error::InvalidArgument(format!("{p} is not in the ideal of pair {}", pair.label)));
        }
    }
    let leads = MonomialIdeal::new(pair.ideal.ring(), g.iter().filter_map(|p| p.lead_monomial()).collect());
    if !leads.contains_ideal(&pair.j) {
        return Ok(false);
    }
    let generates = pair.ideal.generators().iter().all(|f| divide_with_remainder(f, g).1.is_zero());
    if !generates || !is_groebner_basis(g) {
        return Err(Error::Audit(format!(
            "pair {}: leading terms cover J but the set is not a Groebner basis of I",
            pair.label
        )));
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct StrongReport {
    pub label: String,
    pub sum_equals_intersection: Outcome,
    pub quotient_stable: Outcome,
}

impl StrongReport {
    pub fn passed(&self) -> bool {
        self.sum_equals_intersection.ok() && self.quotient_stable.ok()
    }
}

/// The strengthened conclusions for every witnessed pair:
/// `I + <f>` equals the intersection of `Φ`, and `(I : f) = I` forces
/// `(J : init f) = J`.
pub fn strong_equalities(
    system: &TransitionSystem,
    witnesses: &[TransitionWitness],
    deadline: Option<Instant>,
) -> Result<Vec<StrongReport>> {
    witnesses
        .par_iter()
        .map(|w| {
            let pair = system
                .get(&w.pair)
                .ok_or_else(|| Error::InvalidArgument(format!("witness for unknown pair {}", w.pair)))?;
            let mut meet: Option<Ideal> = None;
            for l in &w.phi {
                let p = system.get(l).ok_or_else(|| Error::InvalidArgument(format!("Φ names unknown pair {l}")))?;
                meet = Some(match meet {
                    None => p.ideal.clone(),
                    Some(m) => m.intersect_within(&p.ideal, deadline)?,
                });
            }
            let sum = pair.ideal.add_generator(&w.f);
            let a = match meet {
                None => Outcome::Fail("Φ is empty".into()),
                Some(m) => Outcome::check(m == sum, || format!("I + <f> = {sum} but the intersection is {m}")),
            };
            let b = if pair.ideal.quotient_within(&w.f, deadline)? == pair.ideal {
                let lead = w.f.lead_monomial().expect("nonzero witness");
                let q = pair.j.quotient(&lead);
                Outcome::check(q == pair.j, || format!("(J : init f) = {q} differs from J"))
            } else {
                Outcome::NotApplicable
            };
            Ok(StrongReport { label: w.pair.clone(), sum_equals_intersection: a, quotient_stable: b })
        })
        .collect()
}
