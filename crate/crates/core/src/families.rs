//! The ideal families attached to an index: point ideals, minor and
//! antidiagonal ideals, the skew monomial ideals, and orbit closures under
//! the lower-triangular Borel groups.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use crate::algebra::{Ambient, FieldElement, Flavor, Monomial, MonomialOrder, Polynomial, Ring, Var};
use crate::comb::SchubertIndex;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MonomialIdeal};

fn check_flavor(ring: &Ring, idx: &SchubertIndex) -> Result<Ambient> {
    let ambient = ring.ambient().ok_or_else(|| Error::AmbientMismatch("ring has no matrix ambient".into()))?;
    if ambient.flavor != idx.flavor() {
        return Err(Error::AmbientMismatch(format!(
            "index {idx} is {:?} but the ring is {:?}",
            idx.flavor(),
            ambient.flavor
        )));
    }
    Ok(ambient)
}

/// Entry `(i,j)` of the generic matrix of the flavor, as a polynomial.
fn generic_entry(ring: &Ring, flavor: Flavor, i: usize, j: usize) -> Polynomial {
    match flavor.entry_var(i, j) {
        None => Polynomial::zero(ring),
        Some(v) => {
            let p = Polynomial::var(ring, v).expect("ambient variable");
            if matches!(flavor, Flavor::Skew { .. }) && i < j {
                p.neg()
            } else {
                p
            }
        }
    }
}

fn determinant(ring: &Ring, m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Polynomial::zero(ring);
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, e)| e.clone()).collect())
                    .collect();
                let t = m[0][c].mul(&determinant(ring, &minor));
                acc = if c % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(1, n, k, &mut cur, &mut out);
    out
}

/// Row and column sets `(R, C)` with `R ⊆ [i]`, `C ⊆ [j]` and
/// `|R| = |C| = 1 + rank w_[i][j]`, deduplicated, in a fixed order.
/// With `lower_only`, only cells `i >= j` contribute.
fn rank_condition_sets(idx: &SchubertIndex, lower_only: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (m, n) = idx.flavor().dims();
    let table = idx.rank_table();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            if lower_only && i < j {
                continue;
            }
            let k = table.get(i, j) + 1;
            if k > i || k > j {
                continue;
            }
            for r in subsets(i, k) {
                for c in subsets(j, k) {
                    if seen.insert((r.clone(), c.clone())) {
                        out.push((r.clone(), c));
                    }
                }
            }
        }
    }
    out
}

/// `M_w = <x_ij - w_ij>` for the representative matrix of the index.
pub fn point_ideal(ring: &Ring, idx: &SchubertIndex) -> Result<Ideal> {
    let ambient = check_flavor(ring, idx)?;
    let w = idx.matrix();
    let gens = ambient
        .flavor
        .variables()
        .into_iter()
        .map(|v| {
            let (i, j) = v.position().expect("matrix variable");
            let c = ring.field().from_i64(w[i - 1][j - 1] as i64);
            Polynomial::var(ring, v).expect("ambient variable").sub(&Polynomial::constant(ring, c))
        })
        .collect();
    Ok(Ideal::new(ring, gens))
}

fn canonical_generators(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    gens.retain(|g| !g.is_zero());
    let mut out: Vec<Polynomial> = gens.into_iter().map(|g| g.monic()).filter(|g| seen.insert(g.clone())).collect();
    out.sort_by(|a, b| {
        let (la, lb) = (a.lead_monomial().unwrap(), b.lead_monomial().unwrap());
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| a.ring().cmp(&la, &lb))
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    out
}

/// The ideal of `(1 + rank)`-minors of every northwest corner of the generic
/// matrix. For skew indices this is only contained in the prime ideal.
pub fn minor_ideal(ring: &Ring, idx: &SchubertIndex) -> Result<Ideal> {
    let ambient = check_flavor(ring, idx)?;
    let flavor = ambient.flavor;
    let gens = rank_condition_sets(idx, false)
        .into_iter()
        .map(|(r, c)| {
            let sub: Vec<Vec<Polynomial>> =
                r.iter().map(|&i| c.iter().map(|&j| generic_entry(ring, flavor, i, j)).collect()).collect();
            determinant(ring, &sub)
        })
        .collect();
    Ok(Ideal::new(ring, canonical_generators(gens)))
}

/// Antidiagonal products of the same submatrices as [`minor_ideal`]; the
/// revlex leading terms of those minors.
pub fn antidiagonal_ideal(ring: &Ring, idx: &SchubertIndex) -> Result<MonomialIdeal> {
    let ambient = check_flavor(ring, idx)?;
    if let Flavor::Skew { .. } = ambient.flavor {
        return Err(Error::InvalidArgument("skew indices use the skew J ideal, not antidiagonals".into()));
    }
    let gens = rank_condition_sets(idx, false)
        .into_iter()
        .map(|(r, c)| {
            let k = r.len();
            (0..k).fold(Monomial::one(), |acc, a| {
                let v = ambient.flavor.entry_var(r[a], c[k - 1 - a]).expect("entry variable");
                acc.mul(&Monomial::var(ring.index_of(v).expect("ambient variable")))
            })
        })
        .collect();
    Ok(MonomialIdeal::new(ring, gens))
}

/// `u^ss_AB`: the product over `A ⊞ B`, or `None` when a diagonal pair occurs.
pub fn skew_monomial(ring: &Ring, a: &[usize], b: &[usize]) -> Result<Option<Monomial>> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::InvalidArgument(format!("skew monomial needs equal nonempty sets, got {a:?} and {b:?}")));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    let r = a.len() - 1;
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (x, y) in [(&a, &b), (&b, &a)] {
        for k in 0..=r {
            let (i, j) = (x[k], y[r - k]);
            if i >= j && !cells.contains(&(i, j)) {
                cells.push((i, j));
            }
        }
    }
    let mut m = Monomial::one();
    for (i, j) in cells {
        if i == j {
            return Ok(None);
        }
        let v = Var::U(i as u8, j as u8);
        let k = ring.index_of(v).ok_or_else(|| Error::AmbientMismatch(format!("{v} is not a ring variable")))?;
        m = m.mul(&Monomial::var(k));
    }
    Ok(Some(m))
}

/// `J^ss_w`, generated by `u^ss_AB` over cells `i >= j`.
pub fn skew_j_ideal(ring: &Ring, idx: &SchubertIndex) -> Result<MonomialIdeal> {
    let ambient = check_flavor(ring, idx)?;
    if !matches!(ambient.flavor, Flavor::Skew { .. }) {
        return Err(Error::InvalidArgument("the skew J ideal needs a skew index".into()));
    }
    let mut gens = Vec::new();
    for (r, c) in rank_condition_sets(idx, true) {
        if let Some(m) = skew_monomial(ring, &r, &c)? {
            gens.push(m);
        }
    }
    Ok(MonomialIdeal::new(ring, gens))
}

/// The Borel action on one matrix flavor: `(g,h)·M = g M hᵀ` for classical
/// matrices and `g·M = g M gᵀ` otherwise, with `g`, `h` lower triangular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    ambient: Ambient,
}

impl ActionSpec {
    /// Refuses symmetric matrices in characteristic two, where a cell can
    /// split into several orbits.
    pub fn new(ambient: Ambient) -> Result<ActionSpec> {
        if matches!(ambient.flavor, Flavor::Symmetric { .. }) && ambient.field.characteristic() == 2 {
            return Err(Error::Config(
                "symmetric orbit closures are not modeled in characteristic 2: a symmetric matrix Schubert cell may be a union of several orbits there".into(),
            ));
        }
        Ok(ActionSpec { ambient })
    }

    pub fn for_ring(ring: &Ring) -> Result<ActionSpec> {
        ActionSpec::new(ring.ambient().ok_or_else(|| Error::AmbientMismatch("ring has no matrix ambient".into()))?)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// The lower-triangular factors as `(tag, size)`.
    fn factors(&self) -> Vec<(u8, usize)> {
        match self.ambient.flavor {
            Flavor::Classical { m, n } => vec![(1, m), (2, n)],
            Flavor::Skew { n } | Flavor::Symmetric { n } => vec![(1, n)],
        }
    }

    fn factor_vars(tag: u8, size: usize) -> Vec<Var> {
        let mut out = Vec::new();
        for i in 1..=size {
            for j in 1..=i {
                out.push(Var::B(tag, i as u8, j as u8));
            }
        }
        out
    }

    /// Coordinates `b_g_i_j` (`i >= j`) of the group.
    pub fn group_vars(&self) -> Vec<Var> {
        self.factors().into_iter().flat_map(|(t, s)| ActionSpec::factor_vars(t, s)).collect()
    }

    /// Source-point coordinates `a_i_j`, one per ambient variable.
    pub fn source_vars(&self) -> Vec<Var> {
        self.ambient
            .flavor
            .variables()
            .into_iter()
            .map(|v| {
                let (i, j) = v.position().unwrap();
                Var::A(i as u8, j as u8)
            })
            .collect()
    }

    /// `α*(x_ij)` for every ambient variable in ring order: the entries of
    /// `g S hᵀ`, where `S(p,q)` is the source matrix and `g`, `h` are given
    /// entrywise (only `i >= j` is read).
    pub fn pullback(
        &self,
        ring: &Ring,
        source: &dyn Fn(usize, usize) -> Polynomial,
        left: &dyn Fn(usize, usize) -> Polynomial,
        right: &dyn Fn(usize, usize) -> Polynomial,
    ) -> Vec<Polynomial> {
        self.ambient
            .flavor
            .variables()
            .into_iter()
            .map(|v| {
                let (i, j) = v.position().unwrap();
                let mut acc = Polynomial::zero(ring);
                for p in 1..=i {
                    let g = left(i, p);
                    if g.is_zero() {
                        continue;
                    }
                    for q in 1..=j {
                        let s = source(p, q);
                        if s.is_zero() {
                            continue;
                        }
                        acc = acc.add(&g.mul(&s).mul(&right(j, q)));
                    }
                }
                acc
            })
            .collect()
    }

    /// Group entries as polynomials in `ring`, one closure per factor.
    fn symbolic_group(&self, ring: &Ring, tag: u8) -> impl Fn(usize, usize) -> Polynomial + '_ {
        let ring = ring.clone();
        move |i, j| {
            if i < j {
                Polynomial::zero(&ring)
            } else {
                Polynomial::var(&ring, Var::B(tag, i as u8, j as u8)).expect("group variable")
            }
        }
    }

    fn right_tag(&self) -> u8 {
        match self.ambient.flavor {
            Flavor::Classical { .. } => 2,
            _ => 1,
        }
    }

    /// Structured source matrix built from per-variable entries.
    fn source_matrix(
        &self,
        entry: impl Fn(Var) -> Polynomial,
        zero: Polynomial,
    ) -> impl Fn(usize, usize) -> Polynomial {
        let flavor = self.ambient.flavor;
        move |p, q| match flavor.entry_var(p, q) {
            None => zero.clone(),
            Some(v) => {
                let e = entry(v);
                if matches!(flavor, Flavor::Skew { .. }) && p < q {
                    e.neg()
                } else {
                    e
                }
            }
        }
    }

    fn check_ring(&self, ring: &Ring) -> Result<()> {
        match ring.ambient() {
            Some(a) if a == self.ambient => Ok(()),
            _ => Err(Error::AmbientMismatch(format!("ideal ring does not match the action on {:?}", self.ambient))),
        }
    }

    /// Applies fixed lower-triangular matrices: `f -> f(g M hᵀ)`. For
    /// skew and symmetric flavors `h` is ignored and `g` used twice.
    pub fn translate(&self, ideal: &Ideal, g: &[Vec<FieldElement>], h: &[Vec<FieldElement>]) -> Result<Ideal> {
        let ring = ideal.ring();
        self.check_ring(ring)?;
        let h = if self.right_tag() == 1 { g } else { h };
        let constant = |m: &[Vec<FieldElement>]| {
            let m = m.to_vec();
            let ring = ring.clone();
            move |i: usize, j: usize| {
                if i < j {
                    Polynomial::zero(&ring)
                } else {
                    Polynomial::constant(&ring, m[i - 1][j - 1].clone())
                }
            }
        };
        let src = self.source_matrix(|v| Polynomial::var(ring, v).unwrap(), Polynomial::zero(ring));
        let images = self.pullback(ring, &src, &constant(g), &constant(h));
        let gens = ideal.generators().iter().map(|f| f.substitute(&images, ring)).collect();
        Ok(Ideal::new(ring, gens))
    }

    /// Checks `α*(f) ∈ K[G] ⊗ I` for every generator: expanding in the group
    /// coordinates, each coefficient must lie in `I`.
    pub fn is_stable(&self, ideal: &Ideal) -> Result<bool> {
        let ring = ideal.ring();
        self.check_ring(ring)?;
        let mut vars = self.group_vars();
        let ng = vars.len();
        vars.extend_from_slice(ring.vars());
        let big = Ring::new(vars, ring.field(), MonomialOrder::elimination(ng, ring.order().base));
        let x = |v: Var| Polynomial::var(&big, v).unwrap();
        let src = self.source_matrix(x, Polynomial::zero(&big));
        let images =
            self.pullback(&big, &src, &self.symbolic_group(&big, 1), &self.symbolic_group(&big, self.right_tag()));
        for f in ideal.generators() {
            let img = f.substitute(&images, &big);
            let mut parts: HashMap<Monomial, Vec<(Monomial, FieldElement)>> = HashMap::new();
            for (m, c) in img.terms() {
                let e = &m.exponents()[..big.nvars()];
                let rest = Monomial::from_exponents(&e[ng..]);
                parts.entry(Monomial::from_exponents(&e[..ng])).or_default().push((rest, c.clone()));
            }
            if !parts.into_values().all(|ts| ideal.contains(&Polynomial::from_terms(ring, ts))) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `cl_G(I) = (α*)⁻¹(K[G] ⊗ I)`, computed by eliminating the group and
/// source coordinates from the graph of the action.
///
/// The group is coordinatized by the lower-triangular matrices without
/// inverting the diagonal: the determinant is a nonzerodivisor modulo
/// `K[L] ⊗ I`, so the localization does not change the preimage. Point
/// ideals substitute the point directly instead of using source variables.
pub fn orbit_closure(ideal: &Ideal, action: &ActionSpec, deadline: Option<Instant>) -> Result<Ideal> {
    let ring = ideal.ring();
    action.check_ring(ring)?;
    if ideal.is_unit() {
        return Ok(Ideal::unit(ring));
    }
    if let Some(point) = ideal.is_maximal_point_ideal() {
        return closure_of_point(ring, action, &point, deadline);
    }
    if let Flavor::Classical { .. } = action.ambient.flavor {
        // the two factors commute, so the closure can be taken one at a time
        let left = closure_by_factor(ideal, action, Some(1), deadline)?;
        return closure_by_factor(&left, action, Some(2), deadline);
    }
    closure_by_factor(ideal, action, None, deadline)
}

fn closure_of_point(
    ring: &Ring,
    action: &ActionSpec,
    point: &[FieldElement],
    deadline: Option<Instant>,
) -> Result<Ideal> {
    let group = action.group_vars();
    let ng = group.len();
    let mut vars = group;
    vars.extend_from_slice(ring.vars());
    let big = Ring::new(vars, ring.field(), MonomialOrder::elimination(ng, ring.order().base));
    let values: Vec<(Var, FieldElement)> = ring.vars().iter().copied().zip(point.iter().cloned()).collect();
    let src = action.source_matrix(
        |v| {
            let c = values.iter().find(|(u, _)| *u == v).map(|(_, c)| c.clone()).unwrap();
            Polynomial::constant(&big, c)
        },
        Polynomial::zero(&big),
    );
    let images =
        action.pullback(&big, &src, &action.symbolic_group(&big, 1), &action.symbolic_group(&big, action.right_tag()));
    let gens: Vec<Polynomial> =
        ring.vars().iter().zip(images).map(|(v, img)| Polynomial::var(&big, *v).unwrap().sub(&img)).collect();
    Ideal::new(&big, gens).eliminate_into(ring, deadline)
}

/// Closure under one group factor (`Some(tag)`) or the whole group.
fn closure_by_factor(ideal: &Ideal, action: &ActionSpec, only: Option<u8>, deadline: Option<Instant>) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut vars: Vec<Var> = Vec::new();
    for (tag, size) in action.factors() {
        if only.is_none_or(|t| t == tag) {
            vars.extend(ActionSpec::factor_vars(tag, size));
        }
    }
    let source = action.source_vars();
    vars.extend_from_slice(&source);
    let block = vars.len();
    vars.extend_from_slice(ring.vars());
    let big = Ring::new(vars, ring.field(), MonomialOrder::elimination(block, ring.order().base));
    let identity = |b: &Ring| {
        let b = b.clone();
        move |i: usize, j: usize| if i == j { Polynomial::one(&b) } else { Polynomial::zero(&b) }
    };
    let factor = |tag: u8| -> Box<dyn Fn(usize, usize) -> Polynomial> {
        if only.is_none_or(|t| t == tag) {
            Box::new(action.symbolic_group(&big, tag))
        } else {
            Box::new(identity(&big))
        }
    };
    let to_source = |v: Var| {
        let (i, j) = v.position().unwrap();
        Polynomial::var(&big, Var::A(i as u8, j as u8)).unwrap()
    };
    let src = action.source_matrix(to_source, Polynomial::zero(&big));
    let left = factor(1);
    let right = factor(action.right_tag());
    let images = action.pullback(&big, &src, &*left, &*right);
    let mut gens: Vec<Polynomial> =
        ring.vars().iter().zip(images).map(|(v, img)| Polynomial::var(&big, *v).unwrap().sub(&img)).collect();
    let rename: Vec<Polynomial> = ring.vars().iter().map(|v| to_source(*v)).collect();
    for g in ideal.generators() {
        gens.push(g.substitute(&rename, &big));
    }
    Ideal::new(&big, gens).eliminate_into(ring, deadline)
}

/// `cl_G(M_w)`, the prime ideal of the matrix Schubert variety of `w`.
pub fn schubert_ideal(ring: &Ring, idx: &SchubertIndex, deadline: Option<Instant>) -> Result<Ideal> {
    let action = ActionSpec::for_ring(ring)?;
    orbit_closure(&point_ideal(ring, idx)?, &action, deadline)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, TermOrder};
    use crate::comb::enumerate;

    fn ring(flavor: Flavor) -> Ring {
        Ambient::new(flavor, Field::Rational).ring(TermOrder::RevLex)
    }

    fn gens(i: &Ideal) -> Vec<String> {
        i.canonical_generators()
    }

    #[test]
    fn point_ideals() {
        let r = ring(Flavor::Symmetric { n: 2 });
        let zero = SchubertIndex::parse(Flavor::Symmetric { n: 2 }, "3412").unwrap();
        assert_eq!(gens(&point_ideal(&r, &zero).unwrap()), vec!["u_2_2", "u_2_1", "u_1_1"]);
        let s = ring(Flavor::Skew { n: 3 });
        let w2 = SchubertIndex::parse(Flavor::Skew { n: 3 }, "(1,4)(2,3)").unwrap();
        assert_eq!(gens(&point_ideal(&s, &w2).unwrap()), vec!["u_3_2 - 1", "u_3_1", "u_2_1"]);
        let c = ring(Flavor::Classical { m: 2, n: 2 });
        let id = SchubertIndex::parse(Flavor::Classical { m: 2, n: 2 }, "12").unwrap();
        assert_eq!(gens(&point_ideal(&c, &id).unwrap()), vec!["x_2_2 - 1", "x_2_1", "x_1_2", "x_1_1 - 1"]);
    }

    #[test]
    fn minors_of_the_introductory_examples() {
        let c = ring(Flavor::Classical { m: 3, n: 3 });
        let w = SchubertIndex::parse(Flavor::Classical { m: 3, n: 3 }, "132").unwrap();
        assert_eq!(
            minor_ideal(&c, &w).unwrap().generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            vec!["x_1_2*x_2_1 - x_1_1*x_2_2"]
        );
        let s = ring(Flavor::Symmetric { n: 3 });
        let w = SchubertIndex::parse(Flavor::Symmetric { n: 3 }, "132").unwrap();
        assert_eq!(gens(&minor_ideal(&s, &w).unwrap()), vec!["u_2_1^2 - u_1_1*u_2_2"]);
        let swap = SchubertIndex::parse(Flavor::Symmetric { n: 3 }, "213").unwrap();
        assert_eq!(gens(&minor_ideal(&s, &swap).unwrap()), vec!["u_1_1"]);
    }

    #[test]
    fn antidiagonals() {
        let c = ring(Flavor::Classical { m: 2, n: 2 });
        let w7 = SchubertIndex::from_rows(Flavor::Classical { m: 2, n: 2 }, &[Some(1), None]).unwrap();
        assert_eq!(antidiagonal_ideal(&c, &w7).unwrap().to_string(), "<x_1_2*x_2_1>");
        let s = ring(Flavor::Symmetric { n: 2 });
        let w = SchubertIndex::parse(Flavor::Symmetric { n: 2 }, "132").unwrap();
        assert_eq!(antidiagonal_ideal(&s, &w).unwrap().to_string(), "<u_2_1^2>");
        let z = SchubertIndex::parse(Flavor::Classical { m: 2, n: 2 }, "3412").unwrap();
        assert!(antidiagonal_ideal(&c, &z).unwrap().is_irrelevant());
    }

    #[test]
    fn skew_monomials() {
        let r = ring(Flavor::Skew { n: 6 });
        let m = skew_monomial(&r, &[1, 3, 4], &[2, 5, 6]).unwrap().unwrap();
        assert_eq!(r.format_monomial(&m), "u_4_2*u_5_3*u_6_1");
        let m = skew_monomial(&r, &[2, 5], &[2, 5]).unwrap().unwrap();
        assert_eq!(r.format_monomial(&m), "u_5_2");
        let m = skew_monomial(&r, &[5], &[2]).unwrap().unwrap();
        assert_eq!(r.format_monomial(&m), "u_5_2");
        assert_eq!(skew_monomial(&r, &[1], &[1]).unwrap(), None);
    }

    #[test]
    fn skew_j_ideals_of_the_three_by_three_example() {
        let r = ring(Flavor::Skew { n: 3 });
        let w2 = SchubertIndex::parse(Flavor::Skew { n: 3 }, "(1,4)(2,3)").unwrap();
        assert_eq!(skew_j_ideal(&r, &w2).unwrap().to_string(), "<u_3_1, u_2_1>");
        let w4 = SchubertIndex::from_cycles(3, &[]).unwrap();
        assert!(skew_j_ideal(&r, &w4).unwrap().is_zero());
        let zero = SchubertIndex::from_cycles(3, &[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(skew_j_ideal(&r, &zero).unwrap().is_irrelevant());
    }

    #[test]
    fn closures_of_the_introductory_examples() {
        let c = ring(Flavor::Classical { m: 3, n: 3 });
        let w = SchubertIndex::parse(Flavor::Classical { m: 3, n: 3 }, "132").unwrap();
        assert_eq!(gens(&schubert_ideal(&c, &w, None).unwrap()), vec!["x_1_2*x_2_1 - x_1_1*x_2_2"]);
        let s = ring(Flavor::Symmetric { n: 2 });
        let w = SchubertIndex::parse(Flavor::Symmetric { n: 2 }, "132").unwrap();
        assert_eq!(gens(&schubert_ideal(&s, &w, None).unwrap()), vec!["u_2_1^2 - u_1_1*u_2_2"]);
    }

    #[test]
    fn pullback_is_triangular() {
        for flavor in [Flavor::Classical { m: 2, n: 3 }, Flavor::Skew { n: 4 }, Flavor::Symmetric { n: 3 }] {
            let r = ring(flavor);
            let action = ActionSpec::for_ring(&r).unwrap();
            let mut vars = action.group_vars();
            vars.extend(action.source_vars());
            let big = Ring::new(vars, Field::Rational, MonomialOrder::plain(TermOrder::RevLex));
            let src = action.source_matrix(
                |v| {
                    let (i, j) = v.position().unwrap();
                    Polynomial::var(&big, Var::A(i as u8, j as u8)).unwrap()
                },
                Polynomial::zero(&big),
            );
            let images = action.pullback(
                &big,
                &src,
                &action.symbolic_group(&big, 1),
                &action.symbolic_group(&big, action.right_tag()),
            );
            for (v, img) in flavor.variables().iter().zip(&images) {
                let (i, j) = v.position().unwrap();
                for (m, _) in img.terms() {
                    for k in m.support() {
                        if let Var::A(p, q) = big.var(k) {
                            assert!((p as usize) <= i && (q as usize) <= j, "{v}: a_{p}_{q}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_closures_in_characteristic_two_are_refused() {
        let r = Ambient::new(Flavor::Symmetric { n: 2 }, Field::Prime(2)).ring(TermOrder::RevLex);
        assert!(matches!(ActionSpec::for_ring(&r), Err(Error::Config(_))));
        let w = SchubertIndex::parse(Flavor::Symmetric { n: 2 }, "132").unwrap();
        assert!(minor_ideal(&r, &w).is_ok());
        assert!(antidiagonal_ideal(&r, &w).is_ok());
    }

    #[test]
    fn closures_are_stable_and_inside_the_point_ideal() {
        for flavor in [Flavor::Classical { m: 2, n: 2 }, Flavor::Skew { n: 3 }, Flavor::Symmetric { n: 2 }] {
            let r = ring(flavor);
            let action = ActionSpec::for_ring(&r).unwrap();
            for w in enumerate(flavor) {
                let p = point_ideal(&r, &w).unwrap();
                let cl = orbit_closure(&p, &action, None).unwrap();
                assert!(p.contains_ideal(&cl));
                assert!(action.is_stable(&cl).unwrap(), "{w}");
                assert_eq!(orbit_closure(&cl, &action, None).unwrap(), cl);
                assert_eq!(action.is_stable(&p).unwrap(), w.is_zero_matrix());
            }
        }
    }

    #[test]
    fn factorwise_classical_closure_matches_the_full_group() {
        let r = ring(Flavor::Classical { m: 2, n: 2 });
        let action = ActionSpec::for_ring(&r).unwrap();
        let extra = Ideal::parse(&r, &["x_1_1 - x_2_2", "x_1_2*x_2_1"]).unwrap();
        let mut ideals: Vec<Ideal> =
            enumerate(action.ambient.flavor).iter().map(|w| point_ideal(&r, w).unwrap()).collect();
        ideals.push(extra);
        for i in ideals {
            let staged =
                closure_by_factor(&closure_by_factor(&i, &action, Some(1), None).unwrap(), &action, Some(2), None)
                    .unwrap();
            assert_eq!(staged, closure_by_factor(&i, &action, None, None).unwrap(), "{i}");
        }
    }
}
