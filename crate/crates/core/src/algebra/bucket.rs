//! Geobuckets: a polynomial accumulator whose additions cost roughly the
//! length of the summand rather than the length of the accumulated sum.

use std::cmp::Ordering;

use super::field::FieldElement;
use super::monomial::Monomial;
use super::poly::Term;
use super::ring::Ring;

/// Bucket `k` holds at most `4^(k+1)` terms. Terms are stored in increasing
/// order so the leading term of each bucket is its last element.
pub(crate) struct GeoBucket {
    ring: Ring,
    buckets: Vec<Vec<Term>>,
}

fn capacity(level: usize) -> usize {
    4usize << (2 * level)
}

impl GeoBucket {
    pub fn new(ring: &Ring) -> GeoBucket {
        GeoBucket { ring: ring.clone(), buckets: Vec::new() }
    }

    /// Adds terms given in decreasing order.
    pub fn add_desc(&mut self, terms: &[Term]) {
        let asc: Vec<Term> = terms.iter().rev().cloned().collect();
        self.add_asc(asc);
    }

    /// Adds `c * m * terms` for terms given in decreasing order.
    pub fn add_scaled_desc(&mut self, terms: &[Term], c: &FieldElement, m: &Monomial) {
        let asc: Vec<Term> = terms.iter().rev().map(|(a, b)| (a.mul(m), b.mul(c))).collect();
        self.add_asc(asc);
    }

    fn add_asc(&mut self, mut t: Vec<Term>) {
        if t.is_empty() {
            return;
        }
        let mut level = 0;
        while capacity(level) < t.len() {
            level += 1;
        }
        loop {
            if level >= self.buckets.len() {
                self.buckets.resize_with(level + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[level]);
            t = if existing.is_empty() { t } else { merge_asc(&self.ring, existing, t) };
            if t.len() <= capacity(level) {
                self.buckets[level] = t;
                return;
            }
            level += 1;
        }
    }

    /// Removes and returns the leading term of the accumulated sum.
    pub fn pop_lead(&mut self) -> Option<Term> {
        loop {
            let mut best: Option<usize> = None;
            for (k, b) in self.buckets.iter().enumerate() {
                if let Some(last) = b.last() {
                    best = match best {
                        Some(j) if self.ring.cmp(&last.0, &self.buckets[j].last().unwrap().0) != Ordering::Greater => {
                            Some(j)
                        }
                        _ => Some(k),
                    };
                }
            }
            let j = best?;
            let (m, mut c) = self.buckets[j].pop().unwrap();
            for k in 0..self.buckets.len() {
                if k != j && self.buckets[k].last().map(|t| t.0) == Some(m) {
                    let (_, d) = self.buckets[k].pop().unwrap();
                    c = c.add(&d);
                }
            }
            if !c.is_zero() {
                return Some((m, c));
            }
        }
    }

    /// Remaining terms in decreasing order.
    pub fn into_desc(mut self) -> Vec<Term> {
        let mut out = Vec::new();
        while let Some(t) = self.pop_lead() {
            out.push(t);
        }
        out
    }
}

fn merge_asc(ring: &Ring, a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => ring.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => out.push(ia.next().unwrap()),
            Ordering::Greater => out.push(ib.next().unwrap()),
            Ordering::Equal => {
                let (m, c) = ia.next().unwrap();
                let (_, d) = ib.next().unwrap();
                let s = c.add(&d);
                if !s.is_zero() {
                    out.push((m, s));
                }
            }
        }
    }
    out
}
