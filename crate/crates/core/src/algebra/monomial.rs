//! Dense exponent vectors with a support bitmask.

use std::fmt;

/// Upper bound on the number of variables of any ring.
pub const MAX_VARS: usize = 48;

/// A monomial `x^e`. Exponents are stored densely by variable position;
/// positions past the ring's variable count are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
    mask: u64,
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    pub const fn one() -> Monomial {
        Monomial { exps: [0; MAX_VARS], deg: 0, mask: 0 }
    }

    pub fn var(i: usize) -> Monomial {
        Monomial::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u8) -> Monomial {
        assert!(i < MAX_VARS, "variable position {i} out of range");
        let mut m = Monomial::one();
        if e > 0 {
            m.exps[i] = e;
            m.deg = e as u16;
            m.mask = 1 << i;
        }
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                m.exps[i] = e;
                m.deg += e as u16;
                m.mask |= 1 << i;
            }
        }
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u16 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn support_mask(&self) -> u64 {
        self.mask
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    /// Positions of variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..MAX_VARS).filter(move |i| mask >> i & 1 == 1)
    }

    /// Single-variable monomials return their variable position.
    pub fn as_variable(&self) -> Option<usize> {
        if self.deg == 1 {
            Some(self.mask.trailing_zeros() as usize)
        } else {
            None
        }
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        if o.deg == 0 {
            return r;
        }
        for i in o.support() {
            r.exps[i] = r.exps[i].checked_add(o.exps[i]).expect("exponent overflow");
        }
        r.deg += o.deg;
        r.mask |= o.mask;
        r
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        if self.mask & !o.mask != 0 || self.deg > o.deg {
            return false;
        }
        let mut m = self.mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            if self.exps[i] > o.exps[i] {
                return false;
            }
            m &= m - 1;
        }
        true
    }

    /// `o / self` when `self` divides `o`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if !self.divides(o) {
            return None;
        }
        let mut r = *o;
        for i in self.support() {
            r.exps[i] -= self.exps[i];
            if r.exps[i] == 0 {
                r.mask &= !(1 << i);
            }
        }
        r.deg -= self.deg;
        Some(r)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for i in o.support() {
            if o.exps[i] > r.exps[i] {
                r.deg += (o.exps[i] - r.exps[i]) as u16;
                r.exps[i] = o.exps[i];
            }
        }
        r.mask |= o.mask;
        r
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut r = Monomial::one();
        for i in (0..MAX_VARS).filter(|i| (self.mask & o.mask) >> i & 1 == 1) {
            let e = self.exps[i].min(o.exps[i]);
            r.exps[i] = e;
            r.deg += e as u16;
            r.mask |= 1 << i;
        }
        r
    }

    #[inline]
    pub fn coprime(&self, o: &Monomial) -> bool {
        self.mask & o.mask == 0
    }

    /// Exponent of variable `i` lowered by `k` (saturating at zero).
    pub fn lower(&self, i: usize, k: u8) -> Monomial {
        let mut r = *self;
        let e = r.exps[i].saturating_sub(k);
        r.deg -= (r.exps[i] - e) as u16;
        r.exps[i] = e;
        if e == 0 {
            r.mask &= !(1 << i);
        }
        r
    }

    /// Degree restricted to positions `lo..hi`.
    pub fn partial_degree(&self, lo: usize, hi: usize) -> u32 {
        self.exps[lo..hi].iter().map(|&e| e as u32).sum()
    }

    /// Moves exponents from position `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut r = Monomial::one();
        for i in self.support() {
            let j = perm[i];
            r.exps[j] = self.exps[i];
            r.mask |= 1 << j;
        }
        r.deg = self.deg;
        r
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.support().map(|i| format!("v{i}^{}", self.exps[i])).collect();
        if v.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", v.join("*"))
        }
    }
}
