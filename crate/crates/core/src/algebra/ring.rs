//! Polynomial rings: a variable list, a coefficient field and a term order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::monomial::{Monomial, MAX_VARS};
use super::order::{MonomialOrder, TermOrder};
use crate::error::{Error, Result};

/// A named variable. Matrix coordinates are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Classical matrix entry `x_ij`.
    X(u8, u8),
    /// Skew-symmetric or symmetric matrix entry `u_ij`, `i >= j`.
    U(u8, u8),
    /// Source-point coordinate used by orbit closures.
    A(u8, u8),
    /// Entry `(i,j)` of the group element in factor `g`.
    B(u8, u8, u8),
    /// Inverse of a diagonal group entry.
    Z(u8),
    /// Auxiliary elimination variable.
    T,
}

impl Var {
    /// Matrix position of an ambient variable.
    pub fn position(&self) -> Option<(usize, usize)> {
        match *self {
            Var::X(i, j) | Var::U(i, j) => Some((i as usize, j as usize)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i, j) => write!(f, "x_{i}_{j}"),
            Var::U(i, j) => write!(f, "u_{i}_{j}"),
            Var::A(i, j) => write!(f, "a_{i}_{j}"),
            Var::B(g, i, j) => write!(f, "b_{g}_{i}_{j}"),
            Var::Z(k) => write!(f, "z_{k}"),
            Var::T => write!(f, "t"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("bad variable name {s:?}"));
        let mut parts = s.split('_');
        let head = parts.next().ok_or_else(bad)?;
        let nums: Vec<u8> = parts.map(|p| p.parse::<u8>().map_err(|_| bad())).collect::<Result<_>>()?;
        match (head, nums.as_slice()) {
            ("x", [i, j]) => Ok(Var::X(*i, *j)),
            ("u", [i, j]) => Ok(Var::U(*i, *j)),
            ("a", [i, j]) => Ok(Var::A(*i, *j)),
            ("b", [g, i, j]) => Ok(Var::B(*g, *i, *j)),
            ("z", [k]) => Ok(Var::Z(*k)),
            ("t", []) => Ok(Var::T),
            _ => Err(bad()),
        }
    }
}

/// Which matrix space a ring coordinatizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "flavor", rename_all = "lowercase")]
pub enum Flavor {
    Classical { m: usize, n: usize },
    Skew { n: usize },
    Symmetric { n: usize },
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Classical { .. } => "classical",
            Flavor::Skew { .. } => "skew",
            Flavor::Symmetric { .. } => "symmetric",
        }
    }

    /// Rows and columns of the ambient rectangle.
    pub fn dims(&self) -> (usize, usize) {
        match *self {
            Flavor::Classical { m, n } => (m, n),
            Flavor::Skew { n } | Flavor::Symmetric { n } => (n, n),
        }
    }

    /// The ambient matrix variables in (i,j)-lexicographic order.
    pub fn variables(&self) -> Vec<Var> {
        let mut out = Vec::new();
        match *self {
            Flavor::Classical { m, n } => {
                for i in 1..=m {
                    for j in 1..=n {
                        out.push(Var::X(i as u8, j as u8));
                    }
                }
            }
            Flavor::Skew { n } => {
                for i in 1..=n {
                    for j in 1..i {
                        out.push(Var::U(i as u8, j as u8));
                    }
                }
            }
            Flavor::Symmetric { n } => {
                for i in 1..=n {
                    for j in 1..=i {
                        out.push(Var::U(i as u8, j as u8));
                    }
                }
            }
        }
        out
    }

    /// The variable holding matrix entry `(i,j)` up to sign, if any.
    pub fn entry_var(&self, i: usize, j: usize) -> Option<Var> {
        match *self {
            Flavor::Classical { .. } => Some(Var::X(i as u8, j as u8)),
            Flavor::Skew { .. } if i == j => None,
            Flavor::Skew { .. } | Flavor::Symmetric { .. } => Some(Var::U(i.max(j) as u8, i.min(j) as u8)),
        }
    }
}

/// Flavor plus coefficient field: the data serialized with every ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ambient {
    #[serde(flatten)]
    pub flavor: Flavor,
    #[serde(with = "field_tag")]
    pub field: Field,
}

mod field_tag {
    use super::Field;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(f: &Field, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&f.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Field, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Ambient {
    pub fn new(flavor: Flavor, field: Field) -> Ambient {
        Ambient { flavor, field }
    }

    pub fn ring(&self, order: TermOrder) -> Ring {
        Ring::with_ambient(*self, order)
    }
}

#[derive(Debug)]
pub struct RingData {
    vars: Vec<Var>,
    index: HashMap<Var, usize>,
    field: Field,
    order: MonomialOrder,
    ambient: Option<Ambient>,
}

/// Shared handle to a polynomial ring.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, o: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
            || (self.0.vars == o.0.vars
                && self.0.field == o.0.field
                && self.0.order == o.0.order
                && self.0.ambient == o.0.ambient)
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(vars: Vec<Var>, field: Field, order: MonomialOrder) -> Ring {
        Ring::build(vars, field, order, None)
    }

    pub fn with_ambient(ambient: Ambient, order: TermOrder) -> Ring {
        Ring::build(ambient.flavor.variables(), ambient.field, MonomialOrder::plain(order), Some(ambient))
    }

    fn build(vars: Vec<Var>, field: Field, order: MonomialOrder, ambient: Option<Ambient>) -> Ring {
        assert!(vars.len() <= MAX_VARS, "ring with {} variables exceeds the limit of {MAX_VARS}", vars.len());
        let index: HashMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        assert_eq!(index.len(), vars.len(), "duplicate ring variables");
        Ring(Arc::new(RingData { vars, index, field, order, ambient }))
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        if order == self.0.order {
            return self.clone();
        }
        Ring::build(self.0.vars.clone(), self.0.field, order, self.0.ambient)
    }

    pub fn vars(&self) -> &[Var] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn ambient(&self) -> Option<Ambient> {
        self.0.ambient
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.0.index.get(&v).copied()
    }

    pub fn var(&self, i: usize) -> Var {
        self.0.vars[i]
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.0.order.compare(a, b, self.0.vars.len())
    }

    /// Renders a monomial as `u_1_1^2*u_2_1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = m
            .support()
            .map(|i| match m.exp(i) {
                1 => self.0.vars[i].to_string(),
                e => format!("{}^{e}", self.0.vars[i]),
            })
            .collect();
        parts.join("*")
    }

    /// Ensures two rings agree so their elements may be combined.
    pub fn check_same(&self, o: &Ring) -> Result<()> {
        if self == o {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(format!("{:?} vs {:?}", self.0.vars, o.0.vars)))
        }
    }
}
