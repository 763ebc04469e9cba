//! Property checks shared by the proptest suites and the acceptance run.
//! Each instance gets a small time budget; instances that exhaust it are
//! reported as skipped, never as passing.

use std::time::{Duration, Instant};

use msv::algebra::{Field, Flavor, Polynomial, Ring, TermOrder};
use msv::comb::{CornerConstraint, SchubertIndex};
use msv::families::{orbit_closure, point_ideal, ActionSpec};
use msv::ideal::Ideal;
use msv::Error;

use super::*;

pub const INSTANCE_BUDGET: Duration = Duration::from_secs(2);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
    Skipped,
}

impl Verdict {
    fn from(r: msv::Result<Option<String>>) -> Verdict {
        match r {
            Ok(None) => Verdict::Holds,
            Ok(Some(why)) => Verdict::Fails(why),
            Err(Error::Budget(_)) => Verdict::Skipped,
            Err(e) => Verdict::Fails(format!("error: {e}")),
        }
    }
}

/// Tally over many instances.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub held: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.held += 1,
            Verdict::Skipped => self.skipped += 1,
            Verdict::Fails(w) => self.failures.push(w),
        }
    }
}

fn deadline() -> Option<Instant> {
    Some(Instant::now() + INSTANCE_BUDGET)
}

fn require(ok: bool, why: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(why)
}

pub fn four_vars(lex: bool) -> Ring {
    let order = if lex { TermOrder::Lex } else { TermOrder::RevLex };
    ring_in(Flavor::Classical { m: 2, n: 2 }, Field::Rational, order)
}

/// A pair of random ideals; with `split` they use disjoint variables.
pub fn random_pair(r: &Ring, seed: u64, split: bool) -> (Ideal, Ideal) {
    let mut rng = seeded(seed);
    if split {
        (random_ideal(r, &mut rng, &[0, 1], false), random_ideal(r, &mut rng, &[2, 3], false))
    } else {
        (random_ideal(r, &mut rng, &[0, 1, 2, 3], false), random_ideal(r, &mut rng, &[0, 1, 2, 3], false))
    }
}

/// Initial ideals against sums and intersections: the two containments,
/// and equality of intersections whenever sums are additive.
pub fn initial_ideal_facts(i: &Ideal, j: &Ideal) -> Verdict {
    Verdict::from((|| {
        let d = deadline();
        let ii = i.initial_ideal_within(d)?;
        let ij = j.initial_ideal_within(d)?;
        let sum = i.sum(j)?.initial_ideal_within(d)?;
        let cap = i.intersect_within(j, d)?.initial_ideal_within(d)?;
        if let Some(w) = require(sum.contains_ideal(&ii.sum(&ij)), || format!("init sum too small for {i} + {j}")) {
            return Ok(Some(w));
        }
        if let Some(w) = require(ii.intersect(&ij).contains_ideal(&cap), || format!("init cap too big for {i} ∩ {j}"))
        {
            return Ok(Some(w));
        }
        if sum == ii.sum(&ij) && cap != ii.intersect(&ij) {
            return Ok(Some(format!("additive sum without additive intersection for {i}, {j}")));
        }
        Ok(None)
    })())
}

/// `I ⊆ J` gives `init I ⊆ init J`, with equality only when `I = J`.
pub fn nested_initial_ideals(i: &Ideal, f: &Polynomial) -> Verdict {
    Verdict::from((|| {
        let d = deadline();
        let j = i.add_generator(f);
        let (ii, ij) = (i.initial_ideal_within(d)?, j.initial_ideal_within(d)?);
        if !ij.contains_ideal(&ii) {
            return Ok(Some(format!("init not monotone on {i} ⊆ {j}")));
        }
        Ok(require((ii == ij) == (*i == j), || format!("equal initial ideals of distinct {i} ⊆ {j}")))
    })())
}

/// Monomial fast paths against the general algorithms.
pub fn fast_path_agreement(r: &Ring, seed: u64) -> Verdict {
    let mut rng = seeded(seed);
    let pool = [0, 1, 2, 3];
    let a = random_ideal(r, &mut rng, &pool, true);
    let b = random_ideal(r, &mut rng, &pool, true);
    let m = random_monomial(r, &mut rng, &pool, 2);
    Verdict::from((|| {
        let d = deadline();
        let (ma, mb) = (a.as_monomial().unwrap(), b.as_monomial().unwrap());
        let mon = m.lead_monomial().unwrap();
        let fast_cap = a.intersect_within(&b, d)?;
        if fast_cap != a.intersect_general(&b, d)? || fast_cap != ma.intersect(&mb).to_ideal() {
            return Ok(Some(format!("intersection of {a} and {b}")));
        }
        let fast_q = a.quotient_within(&m, d)?;
        if fast_q != a.quotient_general(&m, d)? || fast_q != ma.quotient(&mon).to_ideal() {
            return Ok(Some(format!("quotient of {a} by {m}")));
        }
        if a.sum(&b)? != ma.sum(&mb).to_ideal() || a.product(&b)? != ma.product(&mb).to_ideal() {
            return Ok(Some(format!("sum or product of {a} and {b}")));
        }
        let parts = ma.irreducible_decomposition();
        let back = msv::ideal::MonomialIdeal::intersect_all(r, &parts);
        if back != ma || parts.iter().any(|p| !p.contains_ideal(&ma)) {
            return Ok(Some(format!("irreducible decomposition of {a}")));
        }
        if a.initial_ideal_within(d)? != ma {
            return Ok(Some(format!("initial ideal of monomial {a}")));
        }
        Ok(None)
    })())
}

/// Containment, idempotence and stability of the orbit closure of `M_w`,
/// including invariance under `translations` random Borel elements.
pub fn closure_laws(r: &Ring, w: &SchubertIndex, seed: u64, translations: usize) -> Verdict {
    Verdict::from((|| {
        let action = ActionSpec::for_ring(r)?;
        let p = point_ideal(r, w)?;
        let cl = orbit_closure(&p, &action, None)?;
        if !p.contains_ideal(&cl) {
            return Ok(Some(format!("closure of {w} escapes the point ideal")));
        }
        if orbit_closure(&cl, &action, None)? != cl {
            return Ok(Some(format!("closure of {w} is not idempotent")));
        }
        if !action.is_stable(&cl)? {
            return Ok(Some(format!("closure of {w} is not stable")));
        }
        let mut rng = seeded(seed);
        let (m, n) = w.flavor().dims();
        for _ in 0..translations {
            let g = random_borel(r.field(), &mut rng, m);
            let h = random_borel(r.field(), &mut rng, n);
            if action.translate(&cl, &g, &h)? != cl {
                return Ok(Some(format!("closure of {w} moves under a Borel element")));
            }
        }
        Ok(None)
    })())
}

/// Admissible outer corners of `dom(w)` for the flavor.
pub fn corners(w: &SchubertIndex) -> Vec<(usize, usize)> {
    let c = match w.flavor() {
        Flavor::Skew { .. } => CornerConstraint::StrictlyBelowDiagonal,
        _ => CornerConstraint::Any,
    };
    w.outer_corners(c)
}

/// At an outer corner `(p, q)`, colon by `x_pq` commutes with the closure.
pub fn quotient_commutes_with_closure(r: &Ring, w: &SchubertIndex, (p, q): (usize, usize)) -> Verdict {
    Verdict::from((|| {
        let action = ActionSpec::for_ring(r)?;
        let flavor = w.flavor();
        let x = Polynomial::var(r, flavor.entry_var(p, q).expect("corner inside the matrix"))?;
        let pt = point_ideal(r, w)?;
        for (i, j) in w.dominant_component() {
            if i <= p && j <= q && (i, j) != (p, q) {
                let Some(v) = flavor.entry_var(i, j) else { continue };
                if !pt.contains(&Polynomial::var(r, v)?) {
                    return Ok(Some(format!("corner ({p},{q}) of {w} lacks its northwest variables")));
                }
            }
        }
        let left = orbit_closure(&pt, &action, None)?.quotient(&x)?;
        let right = orbit_closure(&pt.quotient(&x)?, &action, None)?;
        Ok(require(left == right, || format!("colon and closure differ at ({p},{q}) for {w}")))
    })())
}

/// Symmetric indices of size `n` whose minors fail to be a Groebner basis
/// with the antidiagonals as leading terms.
pub fn symmetric_minor_failures(n: usize, field: Field) -> Vec<String> {
    use msv::comb::enumerate;
    use msv::families::{antidiagonal_ideal, minor_ideal};
    use msv::transition::{certify_groebner, TransitionPair};
    use rayon::prelude::*;
    let r = ring_in(Flavor::Symmetric { n }, field, TermOrder::RevLex);
    enumerate(Flavor::Symmetric { n })
        .par_iter()
        .filter_map(|w| {
            let outcome = (|| {
                let minors = minor_ideal(&r, w)?;
                let adiag = antidiagonal_ideal(&r, w)?;
                let init = minors.initial_ideal();
                let pair = TransitionPair::new(w.to_string(), minors.clone(), adiag.clone());
                Ok::<_, Error>(init == adiag && certify_groebner(&pair, minors.generators())?)
            })();
            match outcome {
                Ok(true) => None,
                Ok(false) => Some(w.to_string()),
                Err(e) => Some(format!("{w}: {e}")),
            }
        })
        .collect()
}
