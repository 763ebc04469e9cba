//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Rationals use an `i64` fast path and fall back to arbitrary precision
//! when an operation overflows. Values are kept canonical (lowest terms,
//! positive denominator, small form whenever it fits), so structural
//! equality is value equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field an ambient ring is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(Error::Config(format!("{p} is not a prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Q(Rat::from_i64(v)),
            Field::Prime(p) => FieldElement::Fp(Fp::new(v.rem_euclid(p as i64) as u32, p)),
        }
    }

    /// Parses "a" or "a/b"; in `F_p` the quotient is taken modulo p.
    pub fn parse_element(self, s: &str) -> Result<FieldElement> {
        let q: Rat = s.parse()?;
        match self {
            Field::Rational => Ok(FieldElement::Q(q)),
            Field::Prime(p) => {
                let (n, d) = q.to_big_parts();
                let pm = BigInt::from(p);
                let n = n.mod_floor(&pm).to_u32().unwrap();
                let d = d.mod_floor(&pm).to_u32().unwrap();
                if d == 0 {
                    return Err(Error::Parse(format!("denominator of {s} vanishes mod {p}")));
                }
                Ok(FieldElement::Fp(Fp::new(n, p).mul(Fp::new(d, p).inv())))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u32 = rest.parse().map_err(|_| Error::Config(format!("bad prime in field {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::Config(format!("unknown field {s:?} (expected q or fp:P)")))
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: u32, modulus: u32) -> Fp {
        Fp { value: value % modulus, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        let s = self.value as u64 + o.value as u64;
        Fp { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }

    fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }

    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        let m = self.value as u64 * o.value as u64;
        Fp { value: (m % self.modulus as u64) as u32, modulus: self.modulus }
    }

    fn inv(self) -> Fp {
        assert!(self.value != 0, "inverse of zero in F_{}", self.modulus);
        // extended Euclid on (value, modulus)
        let (mut a, mut b) = (self.value as i64, self.modulus as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Fp::new(x0.rem_euclid(self.modulus as i64) as u32, self.modulus)
    }
}

/// Exact rational number in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rat {
    pub fn from_i64(v: i64) -> Rat {
        Rat::Small { num: v, den: 1 }
    }

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Rat {
        let g = num.gcd(&den);
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small { num: n, den: d },
            _ => Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Rat {
        // BigRational arithmetic keeps values reduced with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small { num: n, den: d },
            _ => Rat::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    fn to_big_parts(&self) -> (BigInt, BigInt) {
        let b = self.to_big();
        (b.numer().clone(), b.denom().clone())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small { num, .. } => *num < 0,
            Rat::Big(b) => b.is_negative(),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) = (self, o) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Rat::from_i128(a + c, b);
            }
            // products of i64 values fit in i128
            return Rat::from_i128(a * d + c * b, b * d);
        }
        Rat::from_big(self.to_big() + o.to_big())
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small { num, den } if *num != i64::MIN => Rat::Small { num: -num, den: *den },
            _ => Rat::from_big(-self.to_big()),
        }
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) = (self, o) {
            return Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Rat::from_big(self.to_big() * o.to_big())
    }

    pub fn inv(&self) -> Rat {
        assert!(!self.is_zero(), "inverse of zero rational");
        match self {
            Rat::Small { num, den } => Rat::from_i128(*den as i128, *num as i128),
            Rat::Big(b) => Rat::from_big(b.recip()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small { num, den: 1 } => write!(f, "{num}"),
            Rat::Small { num, den } => write!(f, "{num}/{den}"),
            Rat::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rat::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::from_big(BigRational::new(n, d)))
    }
}

/// A coefficient. The variant always matches the ring's [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Q(Rat),
    Fp(Fp),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Q(r) => r.is_zero(),
            FieldElement::Fp(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Q(r) => r.is_one(),
            FieldElement::Fp(x) => x.value == 1,
        }
    }

    pub fn add(&self, o: &FieldElement) -> FieldElement {
        match (self, o) {
            (FieldElement::Q(a), FieldElement::Q(b)) => FieldElement::Q(a.add(b)),
            (FieldElement::Fp(a), FieldElement::Fp(b)) => FieldElement::Fp(a.add(*b)),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, o: &FieldElement) -> FieldElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Q(a) => FieldElement::Q(a.neg()),
            FieldElement::Fp(a) => FieldElement::Fp(a.neg()),
        }
    }

    pub fn mul(&self, o: &FieldElement) -> FieldElement {
        match (self, o) {
            (FieldElement::Q(a), FieldElement::Q(b)) => FieldElement::Q(a.mul(b)),
            (FieldElement::Fp(a), FieldElement::Fp(b)) => FieldElement::Fp(a.mul(*b)),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn inv(&self) -> FieldElement {
        match self {
            FieldElement::Q(a) => FieldElement::Q(a.inv()),
            FieldElement::Fp(a) => FieldElement::Fp(a.inv()),
        }
    }

    pub fn div(&self, o: &FieldElement) -> FieldElement {
        self.mul(&o.inv())
    }

    /// Sign used by the text format: rationals print their sign, residues never do.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            FieldElement::Q(a) => a.is_negative(),
            FieldElement::Fp(_) => false,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Q(a) => write!(f, "{a}"),
            FieldElement::Fp(a) => write!(f, "{}", a.value),
        }
    }
}
