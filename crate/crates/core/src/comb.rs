//! Index combinatorics for the three matrix Schubert families.
//!
//! Every index is a bijection of the positive integers that agrees with a
//! fixed pattern outside a finite window: the identity for classical and
//! symmetric indices, the pairing `(1,2)(3,4)...` for skew ones. Only the
//! window is stored.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::Flavor;
use crate::error::{Error, Result};

/// A member of `S^(m,n)`, `I_fpf^(n)` or `I^(n)` depending on the flavor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertIndex {
    flavor: Flavor,
    /// `word[k] = w(k+1)` on the window `[1, window(flavor)]`.
    word: Vec<usize>,
}

/// Northwest corner ranks `r[i][j] = rank w_[i][j]` over the ambient rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankTable {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

/// Which outer corners are admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerConstraint {
    Any,
    StrictlyBelowDiagonal,
}

/// Size of the stored window.
pub fn window(flavor: Flavor) -> usize {
    match flavor {
        Flavor::Classical { m, n } => m + n,
        Flavor::Skew { n } | Flavor::Symmetric { n } => 2 * n + 2,
    }
}

fn standard_partner(k: usize) -> usize {
    if k % 2 == 1 {
        k + 1
    } else {
        k - 1
    }
}

impl SchubertIndex {
    /// Builds an index from a one-line word, padding it to the window with
    /// the flavor's default pattern.
    pub fn from_word(flavor: Flavor, word: &[usize]) -> Result<SchubertIndex> {
        let nw = window(flavor);
        if word.len() > nw {
            return Err(Error::Combinatorics(format!("word {word:?} is longer than the window {nw}")));
        }
        let skew = matches!(flavor, Flavor::Skew { .. });
        let mut full = word.to_vec();
        for k in word.len() + 1..=nw {
            full.push(if skew { standard_partner(k) } else { k });
        }
        let idx = SchubertIndex { flavor, word: full };
        idx.validate()?;
        Ok(idx)
    }

    /// Classical or symmetric index of a partial permutation matrix given by
    /// the column of the 1 in each row.
    pub fn from_rows(flavor: Flavor, rows: &[Option<usize>]) -> Result<SchubertIndex> {
        let (m, n) = flavor.dims();
        if matches!(flavor, Flavor::Skew { .. }) || rows.len() != m {
            return Err(Error::Combinatorics(format!("{} rows do not describe a {} index", rows.len(), flavor.name())));
        }
        let mut used = vec![false; n + 1];
        let mut word = Vec::with_capacity(m + n);
        let mut fresh = n;
        for r in rows {
            match *r {
                Some(j) if (1..=n).contains(&j) && !used[j] => {
                    used[j] = true;
                    word.push(j);
                }
                Some(j) => return Err(Error::Combinatorics(format!("column {j} is out of range or repeated"))),
                None => {
                    fresh += 1;
                    word.push(fresh);
                }
            }
        }
        word.extend((1..=n).filter(|&j| !used[j]));
        word.extend(fresh + 1..=m + n);
        word.truncate(m + n);
        SchubertIndex::from_word(flavor, &word)
    }

    /// Skew index from its nontrivial cycles; unlisted points use the
    /// standard pairing.
    pub fn from_cycles(n: usize, cycles: &[(usize, usize)]) -> Result<SchubertIndex> {
        let flavor = Flavor::Skew { n };
        let nw = window(flavor);
        let mut w = vec![0usize; nw + 1];
        for &(a, b) in cycles {
            if a == b || a == 0 || b == 0 || a > nw || b > nw || w[a] != 0 || w[b] != 0 {
                return Err(Error::Combinatorics(format!("bad cycle ({a},{b}) for the window {nw}")));
            }
            w[a] = b;
            w[b] = a;
        }
        for k in 1..=nw {
            if w[k] == 0 {
                let p = standard_partner(k);
                if w[p] != 0 {
                    return Err(Error::Combinatorics(format!("{k} cannot take its standard partner {p}")));
                }
                w[k] = p;
                w[p] = k;
            }
        }
        SchubertIndex::from_word(flavor, &w[1..])
    }

    /// Parses `"43152"`, `"4,3,1,5,2"` or, for skew flavors, `"(1,4)(2,3)"`.
    pub fn parse(flavor: Flavor, s: &str) -> Result<SchubertIndex> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad index {s:?}"));
        if s.starts_with('(') {
            let Flavor::Skew { n } = flavor else {
                return Err(Error::Parse(format!("cycle notation is only used for skew indices, got {s:?}")));
            };
            let mut cycles = Vec::new();
            for part in s.split(')').map(str::trim).filter(|p| !p.is_empty()) {
                let body = part.strip_prefix('(').ok_or_else(bad)?;
                let nums: Vec<usize> =
                    body.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
                match nums.as_slice() {
                    [a, b] => cycles.push((*a, *b)),
                    _ => return Err(bad()),
                }
            }
            return SchubertIndex::from_cycles(n, &cycles);
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        SchubertIndex::from_word(flavor, &word)
    }

    fn validate(&self) -> Result<()> {
        let nw = self.word.len();
        let mut seen = vec![false; nw + 1];
        for &v in &self.word {
            if v == 0 || v > nw || seen[v] {
                return Err(Error::Combinatorics(format!("{:?} is not a permutation of the window", self.word)));
            }
            seen[v] = true;
        }
        let fail =
            |why: &str| Err(Error::Combinatorics(format!("{} is not a {} index: {why}", self, self.flavor.name())));
        match self.flavor {
            Flavor::Classical { m, n } => {
                if self.right_descents().any(|i| i > m) {
                    return fail("right descent beyond m");
                }
                if self.inverse().right_descents().any(|i| i > n) {
                    return fail("left descent beyond n");
                }
            }
            Flavor::Symmetric { n } => {
                if !self.is_involution() {
                    return fail("not an involution");
                }
                if self.right_descents().any(|i| i > n) {
                    return fail("right descent beyond n");
                }
            }
            Flavor::Skew { n } => {
                if !self.is_involution() || (1..=nw).any(|k| self.value(k) == k) {
                    return fail("not a fixed-point-free involution");
                }
                if self.visible_descents().any(|i| i > n) {
                    return fail("visible descent beyond n");
                }
            }
        }
        Ok(())
    }

    fn inverse(&self) -> SchubertIndex {
        let mut inv = vec![0; self.word.len()];
        for (k, &v) in self.word.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        SchubertIndex { flavor: self.flavor, word: inv }
    }

    fn is_involution(&self) -> bool {
        (1..=self.word.len()).all(|k| self.value(self.value(k)) == k)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The stored window of the one-line word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(k)` for any positive `k`.
    pub fn value(&self, k: usize) -> usize {
        match self.word.get(k.wrapping_sub(1)) {
            Some(&v) => v,
            None if matches!(self.flavor, Flavor::Skew { .. }) => standard_partner(k),
            None => k,
        }
    }

    /// `Des_R(w)`, which lies inside the window.
    pub fn right_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.word.len()).filter(move |&i| self.value(i) > self.value(i + 1))
    }

    /// `Des_V(w) = {i : w(i) > w(i+1) < i}`.
    pub fn visible_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.word.len()).filter(move |&i| {
            let b = self.value(i + 1);
            self.value(i) > b && b < i
        })
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `ℓ_fpf(w) = |{(i,j) : w(i) > w(j) < i < j}|`; pairs outside the window
    /// never contribute.
    pub fn fpf_length(&self) -> usize {
        let nw = self.word.len();
        let mut count = 0;
        for i in 1..=nw {
            for j in i + 1..=nw {
                let wj = self.value(j);
                if self.value(i) > wj && wj < i {
                    count += 1;
                }
            }
        }
        count
    }

    /// The length used for ordering: `ℓ_fpf` for skew indices, `ℓ` otherwise.
    pub fn natural_length(&self) -> usize {
        match self.flavor {
            Flavor::Skew { .. } => self.fpf_length(),
            _ => self.length(),
        }
    }

    /// The representative matrix over the ambient rectangle. Skew indices
    /// put `+1` below the diagonal and `-1` above it.
    pub fn matrix(&self) -> Vec<Vec<i8>> {
        let (m, n) = self.flavor.dims();
        let mut out = vec![vec![0i8; n]; m];
        for i in 1..=m {
            let j = self.value(i);
            if j <= n {
                out[i - 1][j - 1] = match self.flavor {
                    Flavor::Skew { .. } if i < j => -1,
                    _ => 1,
                };
            }
        }
        out
    }

    /// True for the index of the zero matrix, whose ideal is maximal.
    pub fn is_zero_matrix(&self) -> bool {
        let (m, n) = self.flavor.dims();
        (1..=m).all(|i| self.value(i) > n)
    }

    pub fn rank_table(&self) -> RankTable {
        let (m, n) = self.flavor.dims();
        let mut entries = vec![0usize; m * n];
        for i in 1..=m {
            for j in 1..=n {
                let above = if i > 1 { entries[(i - 2) * n + j - 1] } else { 0 };
                entries[(i - 1) * n + j - 1] = above + usize::from(self.value(i) <= j);
            }
        }
        RankTable { rows: m, cols: n, entries }
    }

    /// Row lengths of the dominant component, not truncated to the ambient
    /// columns: row `i` has length `min(w(1..=i)) - 1`.
    fn dominant_rows(&self, rows: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(rows);
        let mut low = usize::MAX;
        for i in 1..=rows {
            low = low.min(self.value(i));
            out.push(low - 1);
        }
        out
    }

    /// `dom(w)` restricted to the ambient rectangle, in lex order.
    pub fn dominant_component(&self) -> Vec<(usize, usize)> {
        let (m, n) = self.flavor.dims();
        let rows = self.dominant_rows(m);
        let mut out = Vec::new();
        for (i, &len) in rows.iter().enumerate() {
            for j in 1..=len.min(n) {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Outer corners of `dom(w)` inside the ambient rectangle, in lex order.
    pub fn outer_corners(&self, constraint: CornerConstraint) -> Vec<(usize, usize)> {
        let (m, n) = self.flavor.dims();
        let rows = self.dominant_rows(m);
        let mut out = Vec::new();
        for i in 1..=m {
            let len = rows[i - 1];
            let addable = i == 1 || rows[i - 2] > len;
            let j = len + 1;
            if addable && j <= n && (constraint == CornerConstraint::Any || i > j) {
                out.push((i, j));
            }
        }
        out
    }

    /// The lex-minimal admissible outer corner: any corner for classical
    /// indices, one strictly below the diagonal for skew ones.
    pub fn canonical_corner(&self) -> Option<(usize, usize)> {
        let c = match self.flavor {
            Flavor::Skew { .. } => CornerConstraint::StrictlyBelowDiagonal,
            _ => CornerConstraint::Any,
        };
        self.outer_corners(c).into_iter().next()
    }

    fn transposition_times(&self, p: usize, r: usize) -> SchubertIndex {
        let mut word = self.word.clone();
        word.swap(p - 1, r - 1);
        SchubertIndex { flavor: self.flavor, word }
    }

    fn conjugate(&self, p: usize, r: usize) -> SchubertIndex {
        let swap = |k: usize| {
            if k == p {
                r
            } else if k == r {
                p
            } else {
                k
            }
        };
        let word = (1..=self.word.len()).map(|k| swap(self.value(swap(k)))).collect();
        SchubertIndex { flavor: self.flavor, word }
    }

    /// Bruhat covers moving row `p`: `{w t_pr : w ⋖ w t_pr}` for classical
    /// indices and `{t_pr w t_pr : w ⋖_fpf t_pr w t_pr}` for skew ones.
    pub fn covers(&self, p: usize) -> Result<Vec<SchubertIndex>> {
        let nw = self.word.len();
        if p == 0 || p >= nw {
            return Err(Error::Combinatorics(format!("row {p} is outside the window of {self}")));
        }
        let mut out = Vec::new();
        match self.flavor {
            Flavor::Classical { .. } => {
                let a = self.value(p);
                for r in p + 1..=nw {
                    let b = self.value(r);
                    if a < b && !(p + 1..r).any(|e| (a + 1..b).contains(&self.value(e))) {
                        out.push(self.transposition_times(p, r));
                    }
                }
                // a cover past the window would need every later value below w(p)
                if (p + 1..=nw).all(|e| self.value(e) < a) {
                    return Err(Error::Combinatorics(format!("{self} has a cover at row {p} outside the window")));
                }
            }
            Flavor::Skew { .. } => {
                let base = self.fpf_length();
                for r in p + 1..=nw {
                    let v = self.conjugate(p, r);
                    if v.fpf_length() == base + 1 {
                        out.push(v);
                    }
                }
            }
            Flavor::Symmetric { .. } => {
                return Err(Error::Combinatorics("symmetric indices have no cover sets".into()));
            }
        }
        for v in &out {
            v.validate()?;
        }
        if out.is_empty() {
            return Err(Error::Combinatorics(format!("{self} has no covers at row {p}")));
        }
        Ok(out)
    }

    /// Nontrivial cycles of a skew index, i.e. those meeting `[1, n]` or
    /// differing from the standard pairing.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        let (n, _) = self.flavor.dims();
        (1..=self.word.len())
            .filter_map(|a| {
                let b = self.value(a);
                (a < b && (a <= n || b != standard_partner(a))).then_some((a, b))
            })
            .collect()
    }

    /// Shortest one-line prefix that determines the index.
    fn trimmed_word(&self) -> &[usize] {
        let mut len = self.word.len();
        while len > 0 && self.word[len - 1] == len {
            len -= 1;
        }
        &self.word[..len.max(1)]
    }

    fn ordering_key(&self) -> (usize, &[usize]) {
        (self.natural_length(), &self.word)
    }
}

impl PartialOrd for SchubertIndex {
    fn partial_cmp(&self, o: &SchubertIndex) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for SchubertIndex {
    fn cmp(&self, o: &SchubertIndex) -> Ordering {
        self.ordering_key().cmp(&o.ordering_key())
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Flavor::Skew { .. } = self.flavor {
            for (a, b) in self.cycles() {
                write!(f, "({a},{b})")?;
            }
            return Ok(());
        }
        let w = self.trimmed_word();
        let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
        if w.iter().all(|&v| v < 10) {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

impl Serialize for SchubertIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// All indices of a flavor ordered by length, then one-line word.
pub fn enumerate(flavor: Flavor) -> Vec<SchubertIndex> {
    let mut out = match flavor {
        Flavor::Classical { .. } | Flavor::Symmetric { .. } => {
            let (m, n) = flavor.dims();
            let symmetric = matches!(flavor, Flavor::Symmetric { .. });
            let mut acc = Vec::new();
            partial_permutations(m, n, &mut vec![None; m], 0, &mut vec![false; n + 1], &mut |rows| {
                if !symmetric || rows.iter().enumerate().all(|(i, r)| r.is_none_or(|j| rows[j - 1] == Some(i + 1))) {
                    acc.push(SchubertIndex::from_rows(flavor, rows).expect("partial permutation is a valid index"));
                }
            });
            acc
        }
        Flavor::Skew { .. } => {
            let nw = window(flavor);
            let mut acc = Vec::new();
            fpf_involutions(&mut vec![0; nw + 1], &mut |w| {
                let idx = SchubertIndex { flavor, word: w[1..].to_vec() };
                if idx.validate().is_ok() {
                    acc.push(idx);
                }
            });
            acc
        }
    };
    out.sort();
    out
}

fn partial_permutations(
    m: usize,
    n: usize,
    rows: &mut Vec<Option<usize>>,
    i: usize,
    used: &mut Vec<bool>,
    f: &mut dyn FnMut(&[Option<usize>]),
) {
    if i == m {
        f(rows);
        return;
    }
    rows[i] = None;
    partial_permutations(m, n, rows, i + 1, used, f);
    for j in 1..=n {
        if !used[j] {
            used[j] = true;
            rows[i] = Some(j);
            partial_permutations(m, n, rows, i + 1, used, f);
            used[j] = false;
        }
    }
    rows[i] = None;
}

fn fpf_involutions(w: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let Some(a) = (1..w.len()).find(|&k| w[k] == 0) else {
        f(w);
        return;
    };
    for b in a + 1..w.len() {
        if w[b] == 0 {
            w[a] = b;
            w[b] = a;
            fpf_involutions(w, f);
            w[a] = 0;
            w[b] = 0;
        }
    }
}

impl RankTable {
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// `rank w_[i][j]`, with `0` along the zeroth row and column.
    pub fn get(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            0
        } else {
            self.entries[(i - 1) * self.cols + j - 1]
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.cols.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (1..=self.rows).all(|i| (1..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Each step down or right raises the rank by zero or one.
    pub fn is_monotone(&self) -> bool {
        (1..=self.rows).all(|i| {
            (1..=self.cols).all(|j| {
                let r = self.get(i, j);
                r >= self.get(i - 1, j)
                    && r - self.get(i - 1, j) <= 1
                    && r >= self.get(i, j - 1)
                    && r - self.get(i, j - 1) <= 1
            })
        })
    }
}

impl fmt::Display for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows().iter().map(|r| format!("{r:?}")).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cls(m: usize, n: usize, w: &str) -> SchubertIndex {
        SchubertIndex::parse(Flavor::Classical { m, n }, w).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn involutions(n: usize) -> usize {
        match n {
            0 | 1 => 1,
            _ => involutions(n - 1) + (n - 1) * involutions(n - 2),
        }
    }

    #[test]
    fn classical_counts_match_partial_permutation_formula() {
        for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 3), (3, 2)] {
            let expected: usize = (0..=m.min(n)).map(|k| binom(m, k) * binom(n, k) * (1..=k).product::<usize>()).sum();
            assert_eq!(enumerate(Flavor::Classical { m, n }).len(), expected, "{m}x{n}");
        }
        assert_eq!(enumerate(Flavor::Classical { m: 2, n: 2 }).len(), 7);
        assert_eq!(enumerate(Flavor::Classical { m: 3, n: 3 }).len(), 34);
    }

    #[test]
    fn skew_and_symmetric_counts() {
        for n in 1..=5 {
            assert_eq!(enumerate(Flavor::Skew { n }).len(), involutions(n), "skew {n}");
        }
        let sym: Vec<usize> = (1..=5).map(|n| enumerate(Flavor::Symmetric { n }).len()).collect();
        assert_eq!(sym, vec![2, 5, 14, 43, 142]);
    }

    #[test]
    fn zero_matrices() {
        let z = SchubertIndex::from_rows(Flavor::Classical { m: 2, n: 3 }, &[None, None]).unwrap();
        assert_eq!(z.word(), &[4, 5, 1, 2, 3]);
        assert!(z.is_zero_matrix());
        assert!(z.rank_table().rows().iter().flatten().all(|&r| r == 0));
        let s = SchubertIndex::from_cycles(3, &[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(s.is_zero_matrix());
        assert_eq!(s.to_string(), "(1,4)(2,5)(3,6)");
        assert!(enumerate(Flavor::Symmetric { n: 3 }).iter().filter(|w| w.is_zero_matrix()).count() == 1);
    }

    #[test]
    fn descents_of_the_running_example() {
        let w = cls(4, 4, "43152");
        assert_eq!(w.right_descents().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(SchubertIndex::parse(Flavor::Classical { m: 3, n: 3 }, "43152").is_err());
        assert_eq!(w.dominant_component(), vec![(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]);
        assert_eq!(w.outer_corners(CornerConstraint::Any), vec![(1, 4), (2, 3), (3, 1)]);
        assert_eq!(w.canonical_corner(), Some((1, 4)));
    }

    #[test]
    fn corners_of_small_diagrams() {
        let id = cls(2, 2, "12");
        assert!(id.dominant_component().is_empty());
        assert_eq!(id.outer_corners(CornerConstraint::Any), vec![(1, 1)]);
        let zero = cls(2, 2, "3412");
        assert_eq!(zero.dominant_component().len(), 4);
        assert!(zero.outer_corners(CornerConstraint::Any).is_empty());
    }

    #[test]
    fn skew_rank_tables_of_the_three_by_three_example() {
        let tables: HashSet<String> =
            enumerate(Flavor::Skew { n: 3 }).iter().map(|w| w.rank_table().to_string()).collect();
        let expected: HashSet<String> = [
            "[[0, 0, 0],[0, 0, 0],[0, 0, 0]]",
            "[[0, 0, 0],[0, 0, 1],[0, 1, 2]]",
            "[[0, 0, 1],[0, 0, 1],[1, 1, 2]]",
            "[[0, 1, 1],[1, 2, 2],[1, 2, 2]]",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(tables, expected);
        let w2 = SchubertIndex::parse(Flavor::Skew { n: 3 }, "(1,4)(2,3)").unwrap();
        assert_eq!(w2.rank_table().to_string(), "[[0, 0, 0],[0, 0, 1],[0, 1, 2]]");
        assert_eq!(w2.matrix(), vec![vec![0, 0, 0], vec![0, 0, -1], vec![0, 1, 0]]);
        assert_eq!(w2.outer_corners(CornerConstraint::StrictlyBelowDiagonal), vec![(3, 2)]);
    }

    #[test]
    fn symmetric_identity_table() {
        let id = SchubertIndex::parse(Flavor::Symmetric { n: 2 }, "12").unwrap();
        assert_eq!(id.rank_table().rows(), vec![vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn classical_covers_of_132() {
        let w = cls(3, 3, "132");
        let covers: Vec<String> = w.covers(1).unwrap().iter().map(|v| v.to_string()).collect();
        assert_eq!(covers, vec!["312", "231"]);
        for v in w.covers(1).unwrap() {
            assert_eq!(v.length(), w.length() + 1);
        }
    }

    #[test]
    fn fpf_lengths() {
        let one = SchubertIndex::from_cycles(3, &[]).unwrap();
        assert_eq!(one.fpf_length(), 0);
        let w = SchubertIndex::from_cycles(3, &[(1, 4), (2, 3)]).unwrap();
        assert_eq!(w.fpf_length(), 2);
    }

    #[test]
    fn all_tables_are_distinct_monotone_and_symmetric_where_expected() {
        for flavor in [Flavor::Classical { m: 3, n: 3 }, Flavor::Skew { n: 4 }, Flavor::Symmetric { n: 4 }] {
            let all = enumerate(flavor);
            let tables: HashSet<RankTable> = all.iter().map(|w| w.rank_table()).collect();
            assert_eq!(tables.len(), all.len());
            for w in &all {
                let t = w.rank_table();
                assert!(t.is_monotone());
                if !matches!(flavor, Flavor::Classical { .. }) {
                    assert!(t.is_symmetric());
                }
                let dom = w.dominant_component();
                let (m, _) = flavor.dims();
                let lens: Vec<usize> = (1..=m).map(|i| dom.iter().filter(|c| c.0 == i).count()).collect();
                assert!(lens.windows(2).all(|p| p[0] >= p[1]));
            }
        }
    }

    #[test]
    fn covers_stay_in_the_index_set() {
        for flavor in [
            Flavor::Classical { m: 3, n: 3 },
            Flavor::Classical { m: 2, n: 3 },
            Flavor::Skew { n: 3 },
            Flavor::Skew { n: 4 },
        ] {
            let all: HashSet<SchubertIndex> = enumerate(flavor).into_iter().collect();
            for w in &all {
                if w.is_zero_matrix() {
                    assert!(w.canonical_corner().is_none());
                    continue;
                }
                let (p, _) = w.canonical_corner().expect("non-zero index has a corner");
                let covers = w.covers(p).unwrap();
                for v in &covers {
                    assert!(all.contains(v), "{v} from {w}");
                    assert_eq!(v.natural_length(), w.natural_length() + 1);
                }
            }
        }
    }

    #[test]
    fn text_forms_round_trip() {
        for flavor in [Flavor::Classical { m: 3, n: 2 }, Flavor::Skew { n: 4 }, Flavor::Symmetric { n: 5 }] {
            for w in enumerate(flavor) {
                assert_eq!(SchubertIndex::parse(flavor, &w.to_string()).unwrap(), w);
                assert_eq!(serde_json::to_string(&w).unwrap(), format!("{:?}", w.to_string()));
            }
        }
        let big = SchubertIndex::from_rows(Flavor::Classical { m: 5, n: 5 }, &[None; 5]).unwrap();
        assert_eq!(big.to_string(), "6,7,8,9,10,1,2,3,4,5");
        assert_eq!(SchubertIndex::parse(Flavor::Classical { m: 5, n: 5 }, &big.to_string()).unwrap(), big);
    }
}
