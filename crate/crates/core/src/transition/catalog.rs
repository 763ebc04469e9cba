//! The pair sets of each flavor and their closed-form witnesses.

use std::time::Instant;

use rayon::prelude::*;

use super::system::{TransitionPair, TransitionSystem, TransitionWitness};
use crate::algebra::{Flavor, Polynomial, Ring};
use crate::comb::{enumerate, SchubertIndex};
use crate::error::{Error, Result};
use crate::families::{antidiagonal_ideal, minor_ideal, schubert_ideal, skew_j_ideal};

/// A system whose labels are Schubert indices, kept alongside the indices.
#[derive(Clone, Debug)]
pub struct IndexedSystem {
    pub indices: Vec<SchubertIndex>,
    pub system: TransitionSystem,
}

fn flavor_of(ring: &Ring) -> Result<Flavor> {
    ring.ambient()
        .map(|a| a.flavor)
        .ok_or_else(|| Error::AmbientMismatch("family systems need an ambient matrix ring".into()))
}

/// Classical pairs `(I_w, J_w)`: northwest minors and their antidiagonals.
pub fn classical_system(ring: &Ring) -> Result<IndexedSystem> {
    let flavor = flavor_of(ring)?;
    if !matches!(flavor, Flavor::Classical { .. }) {
        return Err(Error::InvalidArgument("classical_system needs a classical ring".into()));
    }
    let indices = enumerate(flavor);
    let pairs = indices
        .par_iter()
        .map(|w| Ok(TransitionPair::new(w.to_string(), minor_ideal(ring, w)?, antidiagonal_ideal(ring, w)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IndexedSystem { indices, system: TransitionSystem::new(pairs)? })
}

/// Skew pairs `(cl(M^ss_w), J^ss_w)` with the closure computed by elimination.
pub fn skew_system(ring: &Ring, deadline: Option<Instant>) -> Result<IndexedSystem> {
    let flavor = flavor_of(ring)?;
    if !matches!(flavor, Flavor::Skew { .. }) {
        return Err(Error::InvalidArgument("skew_system needs a skew ring".into()));
    }
    let indices = enumerate(flavor);
    let pairs = indices
        .par_iter()
        .map(|w| Ok(TransitionPair::new(w.to_string(), schubert_ideal(ring, w, deadline)?, skew_j_ideal(ring, w)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IndexedSystem { indices, system: TransitionSystem::new(pairs)? })
}

/// Witnesses from outer corners of the dominant component: `f` is the
/// variable at the lex-first admissible corner `(p, q)` and `Φ` the covers
/// moving row `p`. Maximal and monomial pairs get none.
pub fn build_canonical_witnesses(indexed: &IndexedSystem) -> Result<Vec<TransitionWitness>> {
    let mut out = Vec::new();
    for (w, pair) in indexed.indices.iter().zip(indexed.system.pairs()) {
        if matches!(w.flavor(), Flavor::Symmetric { .. }) {
            return Err(Error::InvalidArgument("symmetric systems have no closed-form witnesses".into()));
        }
        if w.is_zero_matrix() || pair.is_monomial() {
            continue;
        }
        let (p, q) =
            w.canonical_corner().ok_or_else(|| Error::Combinatorics(format!("{w} has no admissible outer corner")))?;
        let ring = pair.ideal.ring();
        let v = w.flavor().entry_var(p, q).expect("corner inside the matrix");
        let f = Polynomial::var(ring, v)?;
        let phi = w.covers(p)?.iter().map(|c| c.to_string()).collect();
        out.push(TransitionWitness { pair: pair.label.clone(), f, phi, quotient_pair: None });
    }
    Ok(out)
}
