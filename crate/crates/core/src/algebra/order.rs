//! Term orders on monomials.
//!
//! Variables are numbered by position; position 0 is the largest variable.
//! Ambient rings list matrix variables in (i,j)-lexicographic order, so
//! `x_1_1` is the largest and the reverse-lex rule compares the exponent of
//! the lexicographically largest index first when breaking degree ties.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    RevLex,
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::RevLex => write!(f, "revlex"),
        }
    }
}

impl FromStr for TermOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<TermOrder> {
        match s {
            "lex" => Ok(TermOrder::Lex),
            "revlex" | "grevlex" => Ok(TermOrder::RevLex),
            _ => Err(Error::Config(format!("unknown term order {s:?} (expected revlex or lex)"))),
        }
    }
}

/// A term order, optionally refined into a block elimination order: the
/// first `block` variables are compared (by graded reverse lex) before the
/// remaining variables are compared by `base`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub base: TermOrder,
    pub block: usize,
}

impl MonomialOrder {
    pub fn plain(base: TermOrder) -> MonomialOrder {
        MonomialOrder { base, block: 0 }
    }

    pub fn elimination(block: usize, base: TermOrder) -> MonomialOrder {
        MonomialOrder { base, block }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        if self.block == 0 {
            return match self.base {
                TermOrder::RevLex => revlex_range(a, b, 0, nvars, a.degree() as u32, b.degree() as u32),
                TermOrder::Lex => lex_range(a, b, 0, nvars),
            };
        }
        let k = self.block.min(nvars);
        let da = a.partial_degree(0, k);
        let db = b.partial_degree(0, k);
        revlex_range(a, b, 0, k, da, db).then_with(|| match self.base {
            TermOrder::RevLex => {
                let ra = a.degree() as u32 - da;
                let rb = b.degree() as u32 - db;
                revlex_range(a, b, k, nvars, ra, rb)
            }
            TermOrder::Lex => lex_range(a, b, k, nvars),
        })
    }
}

fn lex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    for i in lo..hi {
        if ea[i] != eb[i] {
            return ea[i].cmp(&eb[i]);
        }
    }
    Ordering::Equal
}

fn revlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize, da: u32, db: u32) -> Ordering {
    if da != db {
        return da.cmp(&db);
    }
    let (ea, eb) = (a.exponents(), b.exponents());
    for i in (lo..hi).rev() {
        if ea[i] != eb[i] {
            // the larger exponent on the smallest differing variable loses
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn revlex_matches_variable_chain() {
        // positions 0..4 are x11, x12, x21, x22
        let o = MonomialOrder::plain(TermOrder::RevLex);
        let chain = [m(&[]), m(&[0, 0, 0, 1]), m(&[0, 0, 1]), m(&[0, 1]), m(&[1])];
        for w in chain.windows(2) {
            assert_eq!(o.compare(&w[0], &w[1], 4), Ordering::Less);
        }
        // x11 x22 < x12 x21
        assert_eq!(o.compare(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0]), 4), Ordering::Less);
        // lex prefers x11 x22
        let l = MonomialOrder::plain(TermOrder::Lex);
        assert_eq!(l.compare(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0]), 4), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::elimination(1, TermOrder::RevLex);
        // t beats any power of the other variables
        assert_eq!(o.compare(&m(&[1]), &m(&[0, 5, 5]), 3), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[1, 0, 1]), 3), Ordering::Greater);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u8..=2, 4).prop_filter_map("deg <= 6", |v| {
            let m = Monomial::from_exponents(&v);
            (m.degree() <= 6).then_some(m)
        })
    }

    fn orders() -> [MonomialOrder; 4] {
        [
            MonomialOrder::plain(TermOrder::RevLex),
            MonomialOrder::plain(TermOrder::Lex),
            MonomialOrder::elimination(1, TermOrder::RevLex),
            MonomialOrder::elimination(2, TermOrder::Lex),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1200))]
        #[test]
        fn term_order_axioms(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                let ab = o.compare(&a, &b, 4);
                prop_assert_eq!(ab, o.compare(&b, &a, 4).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if !a.is_one() {
                    prop_assert_eq!(o.compare(&Monomial::one(), &a, 4), Ordering::Less);
                }
                prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c), 4), ab);
                if ab != Ordering::Greater && o.compare(&b, &c, 4) != Ordering::Greater {
                    prop_assert_ne!(o.compare(&a, &c, 4), Ordering::Greater);
                }
            }
        }
    }
}
