//! Splitting `K = I + <u_I>` into components whose intersection is `K`.
//!
//! Every route ends in the same exact check: a split is accepted only when
//! the components intersect to `K` under reduced Groebner bases.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{Ambient, Monomial, Polynomial, TermOrder};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MonomialIdeal};

/// How a split was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitRoute {
    /// No split found; `K` is its own component.
    Whole,
    /// Irreducible decomposition of a monomial ideal, grouped by radical.
    Monomial,
    /// `K = (K : h^∞) ∩ (K + <h^N>)` for a factor `h` of a basis element.
    Saturation,
    /// Components read from an imported table.
    Imported,
}

#[derive(Clone, Debug)]
pub struct Split {
    pub components: Vec<Ideal>,
    pub route: SplitRoute,
}

/// One imported decomposition: generators of `K` and of each component.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ImportedSplit {
    pub ideal: Vec<String>,
    pub components: Vec<Vec<String>>,
}

/// The on-disk table for `--import-decomp`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionTable {
    pub ambient: Ambient,
    pub decompositions: Vec<ImportedSplit>,
}

impl DecompositionTable {
    pub fn read(path: &Path) -> Result<DecompositionTable> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}

/// Strategy configuration. Imported entries are keyed by the reduced
/// Groebner basis of `K` and take precedence over the built-in routes.
#[derive(Clone, Debug, Default)]
pub struct SplitConfig {
    imported: HashMap<Vec<String>, Vec<Vec<String>>>,
    pub deadline: Option<Instant>,
}

impl SplitConfig {
    pub fn new(deadline: Option<Instant>) -> SplitConfig {
        SplitConfig { imported: HashMap::new(), deadline }
    }

    /// Registers every entry of a table, keyed in the given order.
    pub fn with_table(mut self, table: &DecompositionTable, order: TermOrder) -> Result<SplitConfig> {
        let ring = table.ambient.ring(order);
        for d in &table.decompositions {
            let gens: Vec<&str> = d.ideal.iter().map(|s| s.as_str()).collect();
            let k = Ideal::parse(&ring, &gens)?;
            self.imported.insert(k.canonical_generators(), d.components.clone());
        }
        Ok(self)
    }

    pub fn has_imports(&self) -> bool {
        !self.imported.is_empty()
    }
}

fn strategy_error(k: &Ideal, reason: impl Into<String>) -> Error {
    Error::Strategy { ideal: k.to_string(), reason: reason.into() }
}

/// Splits a proper ideal `K`. Components are proper, irredundant and sorted
/// by their reduced bases; their intersection has been checked to be `K`.
pub fn split_strategy(k: &Ideal, cfg: &SplitConfig) -> Result<Split> {
    if k.gb_within(cfg.deadline)?.is_unit() {
        return Err(strategy_error(k, "cannot split the unit ideal"));
    }
    if k.is_maximal_point_ideal().is_some() {
        return Ok(Split { components: vec![k.clone()], route: SplitRoute::Whole });
    }
    let key = k.canonical_generators();
    let (pieces, route) = if let Some(parts) = cfg.imported.get(&key) {
        let mut out = Vec::new();
        for p in parts {
            let gens: Vec<&str> = p.iter().map(|s| s.as_str()).collect();
            out.push(Ideal::parse(k.ring(), &gens)?);
        }
        (out, SplitRoute::Imported)
    } else if let Some(m) = k.as_monomial() {
        (monomial_components(&m), SplitRoute::Monomial)
    } else {
        let pieces = saturation_split(k, cfg, 0)?;
        let route = if pieces.len() > 1 { SplitRoute::Saturation } else { SplitRoute::Whole };
        (pieces, route)
    };
    let components = prune(k, pieces, cfg)?;
    if components.is_empty() {
        return Err(strategy_error(k, "every component was the unit ideal"));
    }
    if intersect_all(&components, cfg)? != *k {
        return Err(strategy_error(k, format!("{route:?} components do not intersect to K")));
    }
    let route = if components.len() == 1 && route != SplitRoute::Imported { SplitRoute::Whole } else { route };
    Ok(Split { components, route })
}

fn intersect_all(parts: &[Ideal], cfg: &SplitConfig) -> Result<Ideal> {
    let mut it = parts.iter();
    let mut acc = it.next().expect("nonempty component list").clone();
    for p in it {
        acc = acc.intersect_within(p, cfg.deadline)?;
    }
    Ok(acc)
}

/// Generators of the radical of a monomial ideal: squarefree supports.
fn monomial_radical(m: &MonomialIdeal) -> MonomialIdeal {
    let gens = m.generators().iter().map(|g| Monomial::from_exponents(&g.exponents().map(|e| e.min(1)))).collect();
    MonomialIdeal::new(m.ring(), gens)
}

/// Primary components of a monomial ideal: irreducible components
/// intersected within each radical.
fn monomial_components(m: &MonomialIdeal) -> Vec<Ideal> {
    let mut groups: BTreeMap<Vec<String>, MonomialIdeal> = BTreeMap::new();
    for c in m.irreducible_decomposition() {
        let rad: Vec<String> = monomial_radical(&c).generators().iter().map(|g| m.ring().format_monomial(g)).collect();
        groups.entry(rad).and_modify(|acc| *acc = acc.intersect(&c)).or_insert(c);
    }
    groups.into_values().map(|c| c.to_ideal()).collect()
}

/// Splitting candidates: variables dividing every term of a reduced basis
/// element, the cofactors `g / content(g)` of such elements, then the
/// remaining variables. A primary ideal saturates to itself or to the unit
/// ideal under any of them.
fn factor_candidates(k: &Ideal) -> Vec<Polynomial> {
    let ring = k.ring();
    let n = ring.nvars();
    let mut seen = vec![false; n];
    let mut cofactors: Vec<Polynomial> = Vec::new();
    for g in k.gb().elements() {
        let content = g.terms().iter().skip(1).fold(g.terms()[0].0, |acc, (m, _)| acc.gcd(m));
        for v in content.support() {
            seen[v] = true;
        }
        if !content.is_one() && !g.is_monomial() {
            let c = g.exact_div(&Polynomial::monomial(ring, content)).expect("content divides").monic();
            if !cofactors.contains(&c) {
                cofactors.push(c);
            }
        }
    }
    let mut out: Vec<Polynomial> = (0..n).filter(|&v| seen[v]).map(|v| Polynomial::var_at(ring, v)).collect();
    out.extend(cofactors);
    out.extend((0..n).filter(|&v| !seen[v]).map(|v| Polynomial::var_at(ring, v)));
    out
}

const MAX_SPLIT_DEPTH: usize = 64;

fn saturation_split(k: &Ideal, cfg: &SplitConfig, depth: usize) -> Result<Vec<Ideal>> {
    if depth > MAX_SPLIT_DEPTH {
        return Err(strategy_error(k, "saturation splitting did not terminate"));
    }
    if let Some(m) = k.as_monomial() {
        return Ok(monomial_components(&m));
    }
    for x in factor_candidates(k) {
        let (sat, n) = k.saturation(&x, cfg.deadline)?;
        if sat.is_unit() || sat == *k {
            continue;
        }
        let rest = k.add_generator(&x.pow(n));
        let mut out = saturation_split(&sat, cfg, depth + 1)?;
        out.extend(saturation_split(&rest, cfg, depth + 1)?);
        return Ok(out);
    }
    Ok(vec![k.clone()])
}

/// Removes unit and duplicate pieces, merges monomial pieces sharing a
/// radical, then drops any piece the others do not need.
fn prune(k: &Ideal, pieces: Vec<Ideal>, cfg: &SplitConfig) -> Result<Vec<Ideal>> {
    let mut keyed: BTreeMap<Vec<String>, Ideal> = BTreeMap::new();
    let mut monomial: BTreeMap<Vec<String>, MonomialIdeal> = BTreeMap::new();
    for p in pieces {
        p.gb_within(cfg.deadline)?;
        if p.is_unit() {
            continue;
        }
        match p.as_monomial() {
            Some(m) if is_primary_monomial(&m) => {
                let rad = monomial_radical(&m).generators().iter().map(|g| k.ring().format_monomial(g)).collect();
                monomial.entry(rad).and_modify(|acc| *acc = acc.intersect(&m)).or_insert(m);
            }
            _ => {
                keyed.insert(p.canonical_generators(), p);
            }
        }
    }
    for m in monomial.into_values() {
        let p = m.to_ideal();
        keyed.insert(p.canonical_generators(), p);
    }
    let mut parts: Vec<Ideal> = keyed.into_values().collect();
    // a piece containing another piece can be dropped
    let mut kept: Vec<Ideal> = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let redundant = parts.iter().enumerate().any(|(j, q)| i != j && p.contains_ideal(q) && (p != q || j < i));
        if !redundant {
            kept.push(p.clone());
        }
    }
    parts = kept;
    // try dropping the most constrained pieces first
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(pure_power_count(&parts[i])));
    let mut alive = vec![true; parts.len()];
    for &i in &order {
        if alive.iter().filter(|a| **a).count() == 1 {
            break;
        }
        alive[i] = false;
        let rest: Vec<Ideal> = parts.iter().zip(&alive).filter(|(_, a)| **a).map(|(p, _)| p.clone()).collect();
        if intersect_all(&rest, cfg)? != *k {
            alive[i] = true;
        }
    }
    Ok(parts.into_iter().zip(alive).filter(|(_, a)| *a).map(|(p, _)| p).collect())
}

/// Irreducible decomposition has a single radical exactly when the
/// ideal is primary; monomial primes are generated by variables.
fn is_primary_monomial(m: &MonomialIdeal) -> bool {
    let comps = m.irreducible_decomposition();
    let rads: Vec<MonomialIdeal> = comps.iter().map(monomial_radical).collect();
    rads.windows(2).all(|w| w[0] == w[1])
}

fn pure_power_count(p: &Ideal) -> usize {
    p.gb().lead_monomials().iter().filter(|m| m.support_mask().count_ones() == 1).count()
}
