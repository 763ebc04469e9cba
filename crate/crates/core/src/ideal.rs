//! Ideals with a write-once Groebner basis cache, and monomial ideals.
//!
//! Ideal equality is decided by comparing reduced Groebner bases in the
//! ring's own order. Intersections use one auxiliary variable `t` and an
//! elimination order; quotients by a single polynomial divide the
//! intersection with the principal ideal.

use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    buchberger_with_deadline, Ambient, FieldElement, GroebnerBasis, Monomial, MonomialOrder, Polynomial, Ring,
    TermOrder, Var,
};
use crate::error::{Error, Result};

/// An ideal of a polynomial ring.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, o: &Ideal) -> bool {
        self.ring == o.ring && self.gb().elements() == o.gb().elements()
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints the reduced Groebner basis, e.g. `<u_1_1, u_2_1^2>`.
impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gb().elements().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert!(g.ring() == ring, "generator {g} is not in the ideal's ring");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<_>>()?;
        Ok(Ideal::new(ring, gens))
    }

    /// Ideal generated by the given variables.
    pub fn of_vars(ring: &Ring, vars: &[Var]) -> Result<Ideal> {
        let gens = vars.iter().map(|v| Polynomial::var(ring, *v)).collect::<Result<_>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger_with_deadline(&self.ring, &self.gens, None).expect("no deadline"))
    }

    /// The cached basis, computing it within `deadline` if necessary.
    pub fn gb_within(&self, deadline: Option<Instant>) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = buchberger_with_deadline(&self.ring, &self.gens, deadline)?;
        // a concurrent writer would have stored the same canonical basis
        let _ = self.gb.set(g);
        Ok(self.gb.get().unwrap())
    }

    pub fn is_gb_cached(&self) -> bool {
        self.gb.get().is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.gb().contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Canonical text of the reduced basis elements.
    pub fn canonical_generators(&self) -> Vec<String> {
        self.gb().elements().iter().map(|g| g.to_string()).collect()
    }

    /// True when every reduced basis element is a monomial.
    pub fn is_monomial(&self) -> bool {
        self.gb().elements().iter().all(|g| g.is_monomial())
    }

    fn gens_are_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// The monomial ideal generated by leading monomials of the reduced basis.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.gb().lead_monomials())
    }

    pub fn initial_ideal_within(&self, deadline: Option<Instant>) -> Result<MonomialIdeal> {
        Ok(MonomialIdeal::new(&self.ring, self.gb_within(deadline)?.lead_monomials()))
    }

    /// Reads this ideal as a monomial ideal when it is one.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        if self.gens_are_monomial() {
            return Some(MonomialIdeal::new(
                &self.ring,
                self.gens.iter().map(|g| g.lead_monomial().unwrap()).collect(),
            ));
        }
        self.is_monomial().then(|| self.initial_ideal())
    }

    pub fn sum(&self, o: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&o.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(o.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, gens))
    }

    pub fn add_generator(&self, f: &Polynomial) -> Ideal {
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, o: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&o.ring)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Exact intersection; monomial inputs use the lcm fast path.
    pub fn intersect(&self, o: &Ideal) -> Result<Ideal> {
        self.intersect_within(o, None)
    }

    pub fn intersect_within(&self, o: &Ideal, deadline: Option<Instant>) -> Result<Ideal> {
        self.ring.check_same(&o.ring)?;
        if self.gens_are_monomial() && o.gens_are_monomial() {
            let a = self.as_monomial().unwrap();
            let b = o.as_monomial().unwrap();
            return Ok(a.intersect(&b).to_ideal());
        }
        self.intersect_general(o, deadline)
    }

    /// Intersection by eliminating `t` from `t*I + (1-t)*J`.
    pub fn intersect_general(&self, o: &Ideal, deadline: Option<Instant>) -> Result<Ideal> {
        self.ring.check_same(&o.ring)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        // Coprime ideals intersect to their product; the elimination below
        // can swell badly over Q on such inputs.
        if self.sum(o)?.gb_within(deadline)?.is_unit() {
            let out = self.product(o)?;
            out.gb_within(deadline)?;
            return Ok(out);
        }
        let mut vars = vec![Var::T];
        vars.extend_from_slice(self.ring.vars());
        let base = self.ring.order().base;
        let big = Ring::new(vars, self.ring.field(), MonomialOrder::elimination(1, base));
        let t = Polynomial::var_at(&big, 0);
        let one_minus_t = Polynomial::one(&big).sub(&t);
        let mut gens = Vec::new();
        for g in self.gb_within(deadline)?.elements() {
            gens.push(t.mul(&g.transfer(&big)?));
        }
        for g in o.gb_within(deadline)?.elements() {
            gens.push(one_minus_t.mul(&g.transfer(&big)?));
        }
        let gb = buchberger_with_deadline(&big, &gens, deadline)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|g| g.transfer(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        let out = Ideal::new(&self.ring, kept);
        out.gb_within(deadline)?;
        Ok(out)
    }

    /// `(I : <f>) = {g : f g ∈ I}`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        self.quotient_within(f, None)
    }

    pub fn quotient_within(&self, f: &Polynomial, deadline: Option<Instant>) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("quotient by the zero polynomial".into()));
        }
        if f.ring() != &self.ring {
            return Err(Error::AmbientMismatch("quotient by a polynomial of another ring".into()));
        }
        if self.gens_are_monomial() && f.is_monomial() {
            let m = self.as_monomial().unwrap();
            return Ok(m.quotient(&f.lead_monomial().unwrap()).to_ideal());
        }
        self.quotient_general(f, deadline)
    }

    /// Quotient computed through the general intersection.
    pub fn quotient_general(&self, f: &Polynomial, deadline: Option<Instant>) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("quotient by the zero polynomial".into()));
        }
        if self.gb_within(deadline)?.contains(f) {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()]);
        let inter = self.intersect_general(&principal, deadline)?;
        let mut gens = Vec::new();
        for g in inter.gb_within(deadline)?.elements() {
            let q =
                g.exact_div(f).ok_or_else(|| Error::Audit(format!("{f} does not divide intersection element {g}")))?;
            gens.push(q);
        }
        let out = Ideal::new(&self.ring, gens);
        out.gb_within(deadline)?;
        Ok(out)
    }

    /// `(I : f^∞)` together with the least `N` where `(I : f^N)` stabilizes.
    pub fn saturation(&self, f: &Polynomial, deadline: Option<Instant>) -> Result<(Ideal, u32)> {
        let mut cur = self.clone();
        let mut n = 0u32;
        loop {
            let next = cur.quotient_within(f, deadline)?;
            next.gb_within(deadline)?;
            if next == cur {
                return Ok((cur, n));
            }
            cur = next;
            n += 1;
        }
    }

    /// `I ∩ K[remaining variables]`, returned in a ring over the remaining
    /// variables with the same base order.
    pub fn eliminate(&self, drop: &[Var]) -> Result<Ideal> {
        let keep: Vec<Var> = self.ring.vars().iter().copied().filter(|v| !drop.contains(v)).collect();
        let target = Ring::new(keep, self.ring.field(), MonomialOrder::plain(self.ring.order().base));
        self.eliminate_into(&target, None)
    }

    /// Eliminates every variable not present in `target`.
    pub fn eliminate_into(&self, target: &Ring, deadline: Option<Instant>) -> Result<Ideal> {
        let drop: Vec<Var> = self.ring.vars().iter().copied().filter(|v| target.index_of(*v).is_none()).collect();
        for v in target.vars() {
            if self.ring.index_of(*v).is_none() {
                return Err(Error::AmbientMismatch(format!("target variable {v} is not in the ring")));
            }
        }
        if drop.is_empty() {
            let gens = self.gens.iter().map(|g| g.transfer(target)).collect::<Result<Vec<_>>>()?;
            return Ok(Ideal::new(target, gens));
        }
        let mut vars = drop.clone();
        vars.extend_from_slice(target.vars());
        let k = drop.len();
        let elim = Ring::new(vars, self.ring.field(), MonomialOrder::elimination(k, target.order().base));
        let gens = self.gens.iter().map(|g| g.transfer(&elim)).collect::<Result<Vec<_>>>()?;
        let gb = buchberger_with_deadline(&elim, &gens, deadline)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
            .map(|g| g.transfer(target))
            .collect::<Result<Vec<_>>>()?;
        let out = Ideal::new(target, kept);
        out.gb_within(deadline)?;
        Ok(out)
    }

    /// The same ideal in a ring with another base order.
    pub fn in_order(&self, order: TermOrder) -> Result<Ideal> {
        let ring = self.ring.with_order(MonomialOrder::plain(order));
        let gens = self.gens.iter().map(|g| g.transfer(&ring)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&ring, gens))
    }

    /// The point `c` when `I = <x_i - c_i : all i>`.
    pub fn is_maximal_point_ideal(&self) -> Option<Vec<FieldElement>> {
        let gb = self.gb();
        let n = self.ring.nvars();
        if gb.len() != n {
            return None;
        }
        let mut point = vec![self.ring.field().zero(); n];
        let mut seen = vec![false; n];
        for g in gb.elements() {
            let v = g.lead_monomial()?.as_variable()?;
            match g.terms() {
                [_] => {}
                [_, (m, c)] if m.is_one() => point[v] = c.neg(),
                _ => return None,
            }
            seen[v] = true;
        }
        seen.iter().all(|s| *s).then_some(point)
    }

    /// `<all variables>`.
    pub fn irrelevant(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var_at(ring, i)).collect();
        Ideal::new(ring, gens)
    }

    /// Applies the substitution `x_i -> images[i]` to every generator.
    pub fn substitute(&self, images: &[Polynomial]) -> Ideal {
        let gens = self.gens.iter().map(|g| g.substitute(images, &self.ring)).collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn to_json(&self) -> Result<IdealJson> {
        let ambient =
            self.ring.ambient().ok_or_else(|| Error::InvalidArgument("only ambient ideals serialize".into()))?;
        Ok(IdealJson { ambient, generators: self.gens.iter().map(|g| g.to_string()).collect() })
    }

    /// Same as [`Ideal::to_json`], listing the reduced basis instead.
    pub fn to_canonical_json(&self) -> Result<IdealJson> {
        let mut j = self.to_json()?;
        j.generators = self.canonical_generators();
        Ok(j)
    }

    pub fn from_json(j: &IdealJson, order: TermOrder) -> Result<Ideal> {
        let ring = j.ambient.ring(order);
        let gens: Vec<&str> = j.generators.iter().map(|s| s.as_str()).collect();
        Ideal::parse(&ring, &gens)
    }
}

/// Serialized form `{ "ambient": {...}, "generators": [...] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ambient: Ambient,
    pub generators: Vec<String>,
}

/// A monomial ideal stored by its minimal generators, sorted increasingly.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|m| self.ring.format_monomial(m)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, mut gens: Vec<Monomial>) -> MonomialIdeal {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ring.cmp(a, b)));
        gens.dedup();
        let mut min: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // sorted by degree first, so any divisor of g is already present
            if !min.iter().any(|m| m.divides(&g)) {
                min.push(g);
            }
        }
        min.sort_by(|a, b| ring.cmp(a, b));
        MonomialIdeal { ring: ring.clone(), gens: min }
    }

    pub fn zero(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal { ring: ring.clone(), gens: vec![Monomial::one()] }
    }

    pub fn irrelevant(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal::new(ring, (0..ring.nvars()).map(Monomial::var).collect())
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<MonomialIdeal> {
        let mut ms = Vec::new();
        for s in gens {
            let p = Polynomial::parse(ring, s)?;
            if !p.is_monomial() {
                return Err(Error::Parse(format!("{s:?} is not a monomial")));
            }
            ms.push(p.lead_monomial().unwrap());
        }
        Ok(MonomialIdeal::new(ring, ms))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|m| m.is_one())
    }

    /// Generated by all variables of the ring.
    pub fn is_irrelevant(&self) -> bool {
        self.gens.len() == self.ring.nvars() && self.gens.iter().all(|m| m.degree() == 1)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains(m))
    }

    /// Whether a polynomial lies in the ideal: every term must.
    pub fn contains_polynomial(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(m, _)| self.contains(m))
    }

    pub fn sum(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.extend_from_slice(&o.gens);
        MonomialIdeal::new(&self.ring, g)
    }

    pub fn add_generator(&self, m: &Monomial) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.push(*m);
        MonomialIdeal::new(&self.ring, g)
    }

    pub fn product(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                g.push(a.mul(b));
            }
        }
        MonomialIdeal::new(&self.ring, g)
    }

    /// Pairwise lcms.
    pub fn intersect(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::with_capacity(self.gens.len() * o.gens.len());
        for a in &self.gens {
            for b in &o.gens {
                g.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(&self.ring, g)
    }

    pub fn intersect_all(ring: &Ring, parts: &[MonomialIdeal]) -> MonomialIdeal {
        let mut it = parts.iter();
        match it.next() {
            None => MonomialIdeal::unit(ring),
            Some(first) => it.fold(first.clone(), |acc, p| acc.intersect(p)),
        }
    }

    /// `(I : m)`: divide each generator by its gcd with `m`.
    pub fn quotient(&self, m: &Monomial) -> MonomialIdeal {
        let g = self.gens.iter().map(|g| g.gcd(m).div(g).unwrap()).collect();
        MonomialIdeal::new(&self.ring, g)
    }

    pub fn to_ideal(&self) -> Ideal {
        let gens: Vec<Polynomial> = self.gens.iter().map(|m| Polynomial::monomial(&self.ring, *m)).collect();
        // minimal monomial generators are already the reduced basis
        let gb = crate::algebra::groebner::from_reduced(&self.ring, gens.clone());
        let ideal = Ideal::new(&self.ring, gens);
        let _ = ideal.gb.set(gb);
        ideal
    }

    /// Irreducible components, each generated by pure powers of variables.
    /// No component contains another; the list is sorted canonically.
    pub fn irreducible_decomposition(&self) -> Vec<MonomialIdeal> {
        if self.is_unit() {
            return Vec::new();
        }
        let mut out: Vec<MonomialIdeal> = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(i) = stack.pop() {
            match i.gens.iter().find(|m| m.support_mask().count_ones() > 1) {
                None => out.push(i),
                Some(m) => {
                    let v = m.support().next().unwrap();
                    let e = m.exp(v);
                    let rest = m.lower(v, e);
                    stack.push(i.add_generator(&Monomial::var_pow(v, e)));
                    stack.push(i.add_generator(&rest));
                }
            }
        }
        let mut min: Vec<MonomialIdeal> = Vec::new();
        out.sort_by(|a, b| a.gens.len().cmp(&b.gens.len()).then_with(|| a.sort_key().cmp(&b.sort_key())));
        out.dedup();
        for c in out {
            // a component containing another is redundant in the intersection
            if !min.iter().any(|m| c.contains_ideal(m)) {
                min.retain(|m| !m.contains_ideal(&c));
                min.push(c);
            }
        }
        min.sort_by_key(|c| c.sort_key());
        min
    }

    fn sort_key(&self) -> Vec<Vec<u8>> {
        self.gens.iter().map(|m| m.exponents()[..self.ring.nvars()].to_vec()).collect()
    }
}
