//! The transition forest: starting from seed ideals, each non-maximal node
//! `I` gets the variable `u_I` and children splitting `I + <u_I>`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::split::{split_strategy, SplitConfig, SplitRoute};
use super::system::{TransitionPair, TransitionSystem, TransitionWitness};
use crate::algebra::{Polynomial, Ring, Var};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MonomialIdeal};

#[derive(Clone, Debug)]
pub struct ForestNode {
    pub label: String,
    pub ideal: Ideal,
    pub j: MonomialIdeal,
    pub seed: bool,
    pub depth: usize,
    pub u: Option<Var>,
    pub children: Vec<usize>,
    /// Node holding `(I : u_I)` when that differs from `I`.
    pub quotient: Option<usize>,
    pub route: Option<SplitRoute>,
}

#[derive(Clone, Debug)]
pub struct TransitionForest {
    pub nodes: Vec<ForestNode>,
}

/// Variables ordered by column, then row: `u11 < u21 < u31 < u22 < ...`.
pub fn column_major(ring: &Ring) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..ring.nvars()).collect();
    idx.sort_by_key(|&k| match ring.var(k).position() {
        Some((i, j)) => (0, j, i),
        None => (1, k, 0),
    });
    idx
}

/// `u_I`: the first variable outside `I` in column-major order, or `None`
/// when `I` contains every variable.
pub fn smallest_outside(ideal: &Ideal) -> Option<Var> {
    let ring = ideal.ring();
    let gb = ideal.gb();
    column_major(ring).into_iter().find(|&k| !gb.contains(&Polynomial::var_at(ring, k))).map(|k| ring.var(k))
}

struct Expansion {
    u: Var,
    quotient: Option<Ideal>,
    children: Vec<Ideal>,
    route: SplitRoute,
}

fn expand(node: &Ideal, cfg: &SplitConfig) -> Result<Expansion> {
    let ring = node.ring();
    let u = smallest_outside(node).ok_or_else(|| Error::Strategy {
        ideal: node.to_string(),
        reason: "no variable outside a non-maximal ideal".into(),
    })?;
    let f = Polynomial::var(ring, u)?;
    let q = node.quotient_within(&f, cfg.deadline)?;
    let quotient = (q != *node).then_some(q);
    let split = split_strategy(&node.add_generator(&f), cfg)?;
    Ok(Expansion { u, quotient, children: split.components, route: split.route })
}

impl TransitionForest {
    /// Runs the recursion to its fixpoint. Nodes are deduplicated by reduced
    /// basis; labels of new nodes are `K1, K2, ...` in creation order.
    pub fn build(seeds: &[(String, Ideal)], cfg: &SplitConfig) -> Result<TransitionForest> {
        let Some((_, first)) = seeds.first() else {
            return Ok(TransitionForest { nodes: Vec::new() });
        };
        let ring = first.ring().clone();
        let max_degree =
            seeds.iter().flat_map(|(_, s)| s.generators().iter().filter_map(|g| g.total_degree())).max().unwrap_or(1)
                as usize;
        let cap = ring.nvars() * max_degree.max(1) + 8;
        let mut forest = TransitionForest { nodes: Vec::new() };
        let mut by_key: HashMap<Vec<String>, usize> = HashMap::new();
        let mut fresh = 0usize;
        let mut frontier = Vec::new();
        let labels: Vec<Result<MonomialIdeal>> =
            seeds.par_iter().map(|(_, s)| s.initial_ideal_within(cfg.deadline)).collect();
        for ((label, s), j) in seeds.iter().zip(labels) {
            ring.check_same(s.ring())?;
            if s.is_unit() {
                return Err(Error::InvalidArgument(format!("seed {label} is the unit ideal")));
            }
            let key = s.canonical_generators();
            if by_key.contains_key(&key) {
                continue;
            }
            by_key.insert(key, forest.nodes.len());
            frontier.push(forest.nodes.len());
            forest.nodes.push(ForestNode {
                label: label.clone(),
                ideal: s.clone(),
                j: j?,
                seed: true,
                depth: 0,
                u: None,
                children: Vec::new(),
                quotient: None,
                route: None,
            });
        }
        while !frontier.is_empty() {
            let work: Vec<usize> =
                frontier.drain(..).filter(|&k| forest.nodes[k].ideal.is_maximal_point_ideal().is_none()).collect();
            let results: Vec<Result<Expansion>> =
                work.par_iter().map(|&k| expand(&forest.nodes[k].ideal, cfg)).collect();
            for (&k, res) in work.iter().zip(results) {
                let e = res?;
                let depth = forest.nodes[k].depth + 1;
                if depth > cap {
                    return Err(Error::Budget(format!(
                        "forest depth exceeds the cap of {cap} at {}",
                        forest.nodes[k].ideal
                    )));
                }
                let mut insert = |ideal: Ideal, forest: &mut TransitionForest| -> Result<usize> {
                    let key = ideal.canonical_generators();
                    if let Some(&id) = by_key.get(&key) {
                        return Ok(id);
                    }
                    fresh += 1;
                    let id = forest.nodes.len();
                    by_key.insert(key, id);
                    let j = ideal.initial_ideal_within(cfg.deadline)?;
                    forest.nodes.push(ForestNode {
                        label: format!("K{fresh}"),
                        ideal,
                        j,
                        seed: false,
                        depth,
                        u: None,
                        children: Vec::new(),
                        quotient: None,
                        route: None,
                    });
                    frontier.push(id);
                    Ok(id)
                };
                let mut children = Vec::new();
                for c in e.children {
                    children.push(insert(c, &mut forest)?);
                }
                let quotient = match e.quotient {
                    Some(q) => Some(insert(q, &mut forest)?),
                    None => None,
                };
                let node = &mut forest.nodes[k];
                node.u = Some(e.u);
                node.children = children;
                node.quotient = quotient;
                node.route = Some(e.route);
            }
        }
        Ok(forest)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn find(&self, ideal: &Ideal) -> Option<&ForestNode> {
        self.nodes.iter().find(|n| n.ideal == *ideal)
    }

    /// The pairs `(I, init(I))` of all nodes.
    pub fn system(&self) -> Result<TransitionSystem> {
        TransitionSystem::new(
            self.nodes.iter().map(|n| TransitionPair::new(n.label.clone(), n.ideal.clone(), n.j.clone())).collect(),
        )
    }

    /// `(u_I, children)` for every expanded node.
    pub fn witnesses(&self) -> Vec<TransitionWitness> {
        self.nodes
            .iter()
            .filter_map(|n| {
                let u = n.u?;
                Some(TransitionWitness {
                    pair: n.label.clone(),
                    f: Polynomial::var(n.ideal.ring(), u).expect("ring variable"),
                    phi: n.children.iter().map(|&c| self.nodes[c].label.clone()).collect(),
                    quotient_pair: n.quotient.map(|q| self.nodes[q].label.clone()),
                })
            })
            .collect()
    }
}
