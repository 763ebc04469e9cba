//! Multivariate division and Buchberger's algorithm.
//!
//! Pairs are selected by the sugar refinement of the normal strategy
//! (smallest sugar degree, then smallest lcm, then insertion index); for
//! homogeneous input in a graded order this is the normal strategy. Pairs are
//! pruned with the Gebauer-Moeller installation of
//! Buchberger's coprime and chain criteria. Output bases are reduced, monic
//! and sorted by increasing leading monomial, hence canonical.

use std::cmp::Ordering;
use std::time::Instant;

use super::bucket::GeoBucket;
use super::monomial::Monomial;
use super::poly::{add_scaled, Polynomial, Term};
use super::ring::Ring;
use crate::error::{Error, Result};

/// A reduced Groebner basis of an ideal in the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lead_monomial().unwrap()).collect()
    }

    /// Normal form of `f`; zero exactly when `f` lies in the ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let leads = self.lead_monomials();
        reduce_full(f, &self.elements, &leads)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }
}

/// Wraps elements already known to form a reduced basis in canonical order.
pub(crate) fn from_reduced(ring: &Ring, elements: Vec<Polynomial>) -> GroebnerBasis {
    GroebnerBasis { ring: ring.clone(), elements }
}

/// Division with remainder, choosing the first divisor (in list order)
/// whose leading monomial divides the current leading term.
pub fn divide_with_remainder(f: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring().clone();
    assert!(divisors.iter().all(|d| !d.is_zero()), "zero divisor in division");
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut p: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    let mut rem: Vec<Term> = Vec::new();
    while start < p.len() {
        let (m, c) = p[start].clone();
        let hit = divisors.iter().position(|d| d.lead_monomial().unwrap().divides(&m));
        match hit {
            Some(k) => {
                let d = &divisors[k];
                let (dm, dc) = &d.terms()[0];
                let qm = dm.div(&m).unwrap();
                let qc = c.div(dc);
                p = add_scaled(&ring, &p[start + 1..], &d.terms()[1..], &qc.neg(), &qm);
                start = 0;
                quotients[k].push((qm, qc));
            }
            None => {
                rem.push((m, c));
                start += 1;
            }
        }
    }
    let qs = quotients.into_iter().map(|q| Polynomial::from_terms(&ring, q)).collect();
    (qs, Polynomial::from_sorted(&ring, rem))
}

/// Complete reduction of `f` by `basis` (whose leading monomials are `leads`).
pub(crate) fn reduce_full(f: &Polynomial, basis: &[Polynomial], leads: &[Monomial]) -> Polynomial {
    let idx: Vec<usize> = (0..basis.len()).collect();
    reduce_indexed(f, basis, leads, &idx)
}

/// Complete reduction by the elements `basis[k]` for `k` in `idx`.
fn reduce_indexed(f: &Polynomial, basis: &[Polynomial], leads: &[Monomial], idx: &[usize]) -> Polynomial {
    reduce_with(f, basis, leads, idx, false, None).expect("no deadline was set")
}

/// Reduces until the leading term is irreducible; the tail is left alone.
fn top_reduce(
    f: &Polynomial,
    basis: &[Polynomial],
    leads: &[Monomial],
    idx: &[usize],
    deadline: Option<Instant>,
) -> Result<Polynomial> {
    reduce_with(f, basis, leads, idx, true, deadline)
}

fn reduce_with(
    f: &Polynomial,
    basis: &[Polynomial],
    leads: &[Monomial],
    idx: &[usize],
    top_only: bool,
    deadline: Option<Instant>,
) -> Result<Polynomial> {
    let ring = f.ring();
    let mut acc = GeoBucket::new(ring);
    acc.add_desc(f.terms());
    let mut rem: Vec<Term> = Vec::new();
    let mut steps = 0u32;
    while let Some((m, c)) = acc.pop_lead() {
        steps = steps.wrapping_add(1);
        if steps.is_multiple_of(128) {
            if let Some(d) = deadline {
                if Instant::now() > d {
                    return Err(Error::Budget("Groebner basis computation exceeded its deadline".into()));
                }
            }
        }
        match idx.iter().find(|&&k| leads[k].divides(&m)) {
            Some(&k) => {
                let g = &basis[k];
                let (gm, gc) = &g.terms()[0];
                let qm = gm.div(&m).unwrap();
                let qc = if gc.is_one() { c } else { c.div(gc) };
                acc.add_scaled_desc(&g.terms()[1..], &qc.neg(), &qm);
            }
            None => {
                rem.push((m, c));
                if top_only {
                    rem.extend(acc.into_desc());
                    break;
                }
            }
        }
    }
    Ok(Polynomial::from_sorted(ring, rem))
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = &f.terms()[0];
    let (gm, gc) = &g.terms()[0];
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.div(&l).unwrap(), &fc.inv());
    let b = g.mul_term(&gm.div(&l).unwrap(), &gc.inv());
    a.sub(&b)
}

/// True when every S-polynomial of `gens` reduces to zero.
pub fn is_groebner_basis(gens: &[Polynomial]) -> bool {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let leads: Vec<Monomial> = gens.iter().map(|g| g.lead_monomial().unwrap()).collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if leads[i].coprime(&leads[j]) {
                continue;
            }
            if !reduce_full(&s_polynomial(&gens[i], &gens[j]), &gens, &leads).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced Groebner basis of the ideal generated by `gens`, in the order of
/// their ring. An empty or all-zero list yields the empty basis.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> GroebnerBasis {
    buchberger_with_deadline(ring, gens, None).expect("no deadline was set")
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// As [`buchberger`], giving up with [`Error::Budget`] once `deadline` passes.
pub fn buchberger_with_deadline(ring: &Ring, gens: &[Polynomial], deadline: Option<Instant>) -> Result<GroebnerBasis> {
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    // Insert generators smallest-first so that early reductions are cheap.
    let mut input: Vec<Polynomial> = gens
        .iter()
        .inspect(|g| assert!(g.ring() == ring, "generator from a different ring"))
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    input.sort_by(|a, b| ring.cmp(&a.lead_monomial().unwrap(), &b.lead_monomial().unwrap()));
    input.dedup();

    let mut queue: std::collections::VecDeque<Polynomial> = input.into();
    loop {
        if let Some(d) = deadline {
            if Instant::now() > d {
                return Err(Error::Budget("Groebner basis computation exceeded its deadline".into()));
            }
        }
        let (h, s_h) = if let Some(g) = queue.pop_front() {
            let s_g = g.total_degree().unwrap_or(0) as u32;
            (top_reduce(&g, &polys, &leads, &active, deadline)?, s_g)
        } else if let Some(pos) = select_pair(ring, &pairs) {
            let p = pairs.swap_remove(pos);
            let s = s_polynomial(&polys[p.i], &polys[p.j]);
            (top_reduce(&s, &polys, &leads, &active, deadline)?, p.sugar)
        } else {
            break;
        };
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.is_constant() {
            return Ok(GroebnerBasis { ring: ring.clone(), elements: vec![Polynomial::one(ring)] });
        }
        let hm = h.lead_monomial().unwrap();
        let hi = polys.len();
        sugar.push(s_h.max(h.total_degree().unwrap_or(0) as u32));
        polys.push(h);
        leads.push(hm);
        update(&leads, &sugar, &mut active, &mut pairs, hi);
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: interreduce(ring, active.iter().map(|&k| polys[k].clone()).collect()),
    })
}

fn select_pair(ring: &Ring, pairs: &[Pair]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let q = &pairs[b];
                let c = p.sugar.cmp(&q.sugar).then_with(|| ring.cmp(&p.lcm, &q.lcm)).then((p.j, p.i).cmp(&(q.j, q.i)));
                if c == Ordering::Less {
                    Some(k)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

/// Gebauer-Moeller update for a new basis element at index `h`.
fn update(leads: &[Monomial], sugar: &[u32], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let hm = leads[h];
    let mut pending: Vec<Pair> = active
        .iter()
        .map(|&g| {
            let lcm = leads[g].lcm(&hm);
            let d = lcm.degree() as u32;
            let s = (sugar[g] + d - leads[g].degree() as u32).max(sugar[h] + d - hm.degree() as u32);
            Pair { i: g, j: h, lcm, sugar: s }
        })
        .collect();
    let mut done: Vec<Pair> = Vec::new();
    while !pending.is_empty() {
        let p = pending.remove(0);
        let coprime = leads[p.i].coprime(&hm);
        let dominated = || pending.iter().chain(done.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated() {
            done.push(p);
        }
    }
    done.retain(|p| !leads[p.i].coprime(&hm));

    pairs.retain(|p| !hm.divides(&p.lcm) || leads[p.i].lcm(&hm) == p.lcm || leads[p.j].lcm(&hm) == p.lcm);
    pairs.extend(done);

    active.retain(|&g| !hm.divides(&leads[g]));
    active.push(h);
}

/// Turns a minimal basis into the reduced basis, sorted by leading monomial.
fn interreduce(ring: &Ring, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| ring.cmp(&a.lead_monomial().unwrap(), &b.lead_monomial().unwrap()));
    // drop any element whose lead is divisible by another's
    let leads: Vec<Monomial> = basis.iter().map(|g| g.lead_monomial().unwrap()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|k| !(0..basis.len()).any(|l| l != k && leads[l].divides(&leads[k]) && (leads[l] != leads[k] || l < k)))
        .collect();
    let basis: Vec<Polynomial> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    let leads: Vec<Monomial> = basis.iter().map(|g| g.lead_monomial().unwrap()).collect();
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let g = &basis[k];
        let (lm, lc) = g.terms()[0].clone();
        let tail = Polynomial::from_sorted(ring, g.terms()[1..].to_vec());
        let others: Vec<Polynomial> =
            basis.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p.clone()).collect();
        let other_leads: Vec<Monomial> = leads.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, m)| *m).collect();
        let rt = reduce_full(&tail, &others, &other_leads);
        let mut terms = vec![(lm, lc)];
        terms.extend(rt.into_terms());
        out.push(Polynomial::from_sorted(ring, terms).monic());
    }
    out
}
