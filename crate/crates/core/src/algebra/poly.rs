//! Sparse polynomials with exact coefficients.
//!
//! Terms are kept sorted by decreasing monomial in the ring's order, with no
//! zero coefficients, so the leading term is always `terms[0]`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::field::FieldElement;
use super::monomial::Monomial;
use super::ring::{Ring, Var};
use crate::error::{Error, Result};

pub type Term = (Monomial, FieldElement);

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.terms.hash(h);
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Polynomial {
        Polynomial::term(ring, Monomial::one(), c)
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(c))
    }

    pub fn term(ring: &Ring, m: Monomial, c: FieldElement) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Polynomial {
        Polynomial::term(ring, m, ring.field().one())
    }

    /// The variable at position `i`.
    pub fn var_at(ring: &Ring, i: usize) -> Polynomial {
        Polynomial::monomial(ring, Monomial::var(i))
    }

    pub fn var(ring: &Ring, v: Var) -> Result<Polynomial> {
        let i = ring.index_of(v).ok_or_else(|| Error::InvalidArgument(format!("variable {v} is not in the ring")))?;
        Ok(Polynomial::var_at(ring, i))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wraps terms already sorted in decreasing order with no zeros.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// True for a single term (a scalar multiple of a monomial).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The initial monomial, or `None` for the zero polynomial.
    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn lead_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u16> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.iter().find(|t| t.0 == *m).map(|t| t.1.clone()).unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (*m, c.neg())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        self.assert_ring(o);
        let one = self.ring.field().one();
        let terms = add_scaled(&self.ring, &self.terms, &o.terms, &one, &Monomial::one());
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        self.assert_ring(o);
        let m1 = self.ring.field().one().neg();
        let terms = add_scaled(&self.ring, &self.terms, &o.terms, &m1, &Monomial::one());
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self + c * m * o`.
    pub fn add_multiple(&self, c: &FieldElement, m: &Monomial, o: &Polynomial) -> Polynomial {
        self.assert_ring(o);
        let terms = add_scaled(&self.ring, &self.terms, &o.terms, c, m);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order of terms
        let terms = self.terms.iter().map(|(a, b)| (a.mul(m), b.mul(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        self.assert_ring(o);
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let mut acc: Vec<Term> = Vec::new();
        for (m, c) in &small.terms {
            acc = add_scaled(&self.ring, &acc, &big.terms, c, m);
        }
        Polynomial { ring: self.ring.clone(), terms: acc }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = Polynomial::one(&self.ring);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        self.assert_ring(d);
        let (dm, dc) = d.terms.first()?;
        let dinv = dc.inv();
        let mut rem = self.clone();
        let mut q: Vec<Term> = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let qm = dm.div(&m)?;
            let qc = c.mul(&dinv);
            rem = rem.add_multiple(&qc.neg(), &qm, d);
            q.push((qm, qc));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: q })
    }

    /// Reinterprets the polynomial in `target`, matching variables by name.
    pub fn transfer(&self, target: &Ring) -> Result<Polynomial> {
        if self.ring == *target {
            return Ok(self.clone());
        }
        let mut perm = vec![usize::MAX; self.ring.nvars()];
        for (i, v) in self.ring.vars().iter().enumerate() {
            if let Some(j) = target.index_of(*v) {
                perm[i] = j;
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if let Some(i) = m.support().find(|&i| perm[i] == usize::MAX) {
                return Err(Error::AmbientMismatch(format!(
                    "variable {} has no counterpart in the target ring",
                    self.ring.var(i)
                )));
            }
            terms.push((m.permute(&perm), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Substitutes `images[i]` for the variable at position `i`. All images
    /// must live in one common ring, which becomes the ring of the result.
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable required");
        let mut acc = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for i in m.support() {
                let e = m.exp(i) as usize;
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(target));
                }
                while cache.len() <= e {
                    let next = cache.last().unwrap().mul(&images[i]);
                    cache.push(next);
                }
                t = t.mul(&cache[e]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Parses the canonical text form, e.g. `u_2_1^2 - u_1_1*u_2_2`.
    pub fn parse(ring: &Ring, s: &str) -> Result<Polynomial> {
        let field = ring.field();
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in src.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '+' || ch == '-' {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        chunks.push((neg, cur));

        let mut terms = Vec::new();
        for (neg, chunk) in chunks {
            let mut coeff = field.one();
            let mut mono = Monomial::one();
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {s:?}")));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff = coeff.mul(&field.parse_element(factor)?);
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u8 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                        (n, e)
                    }
                    None => (factor, 1),
                };
                let var: Var = name.parse()?;
                let i = ring.index_of(var).ok_or_else(|| Error::Parse(format!("variable {var} is not in the ring")))?;
                mono = mono.mul(&Monomial::var_pow(i, e));
            }
            if neg {
                coeff = coeff.neg();
            }
            terms.push((mono, coeff));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    fn assert_ring(&self, o: &Polynomial) {
        assert!(self.ring == o.ring, "polynomials from different rings combined");
    }
}

/// Merges `a + c*m*b` for term lists sorted in decreasing order.
pub(crate) fn add_scaled(ring: &Ring, a: &[Term], b: &[Term], c: &FieldElement, m: &Monomial) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let shift = !m.is_one();
    let unit = c.is_one();
    let scaled = |t: &Term| -> Term {
        let mm = if shift { t.0.mul(m) } else { t.0 };
        let cc = if unit { t.1.clone() } else { t.1.mul(c) };
        (mm, cc)
    };
    while i < a.len() && j < b.len() {
        let bm = if shift { b[j].0.mul(m) } else { b[j].0 };
        match ring.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(scaled(&b[j]));
                j += 1;
            }
            Ordering::Equal => {
                let s = if unit { a[i].1.add(&b[j].1) } else { a[i].1.add(&b[j].1.mul(c)) };
                if !s.is_zero() {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(scaled));
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
