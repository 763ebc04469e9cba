//! The worked examples, as panicking checks shared by the example tests
//! and the acceptance run.

use std::collections::BTreeSet;

use super::*;
use msv::algebra::{Field, Flavor, Polynomial, TermOrder};
use msv::comb::{enumerate, SchubertIndex};
use msv::families::{antidiagonal_ideal, minor_ideal, schubert_ideal, skew_j_ideal};
use msv::ideal::{Ideal, MonomialIdeal};
use msv::transition::{
    verify_axioms, SplitConfig, TransitionForest, TransitionPair, TransitionSystem, TransitionWitness,
};

fn witness(pair: &str, f: &Polynomial, phi: &[&str]) -> TransitionWitness {
    TransitionWitness {
        pair: pair.into(),
        f: f.clone(),
        phi: phi.iter().map(|s| s.to_string()).collect(),
        quotient_pair: None,
    }
}

pub fn three_by_three_transition_recurrence() {
    let flavor = Flavor::Classical { m: 3, n: 3 };
    let r = ring(flavor);
    let w = |s| SchubertIndex::parse(flavor, s).unwrap();
    let i132 = minor_ideal(&r, &w("132")).unwrap();
    assert_eq!(i132, ideal(&r, &["x_2_1*x_1_2 - x_1_1*x_2_2"]));
    assert_eq!(schubert_ideal(&r, &w("132"), None).unwrap(), i132);
    let sum = i132.add_generator(&Polynomial::parse(&r, "x_1_1").unwrap());
    assert_eq!(sum, ideal(&r, &["x_1_1", "x_2_1*x_1_2"]));
    let i231 = schubert_ideal(&r, &w("231"), None).unwrap();
    let i312 = schubert_ideal(&r, &w("312"), None).unwrap();
    assert_eq!(i231, ideal(&r, &["x_1_1", "x_2_1"]));
    assert_eq!(i312, ideal(&r, &["x_1_1", "x_1_2"]));
    assert_eq!(i231.intersect(&i312).unwrap(), sum);
}

pub fn symmetric_sum_is_not_radical() {
    let flavor = Flavor::Symmetric { n: 3 };
    let r = ring(flavor);
    let w = |s| SchubertIndex::parse(flavor, s).unwrap();
    let a = minor_ideal(&r, &w("132")).unwrap();
    let b = minor_ideal(&r, &w("213")).unwrap();
    assert_eq!(a, ideal(&r, &["u_2_1^2 - u_1_1*u_2_2"]));
    assert_eq!(b, ideal(&r, &["u_1_1"]));
    let sum = a.sum(&b).unwrap();
    assert_eq!(sum, ideal(&r, &["u_1_1", "u_2_1^2"]));
    assert!(!sum.contains(&Polynomial::parse(&r, "u_2_1").unwrap()));
}

pub fn skew_three_by_three_family_is_monomial() {
    let flavor = Flavor::Skew { n: 3 };
    let r = ring(flavor);
    let cases: [(&[&[i8]], &[&str]); 4] = [
        (&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]], &["u_2_1", "u_3_1", "u_3_2"]),
        (&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]], &["u_2_1", "u_3_1"]),
        (&[&[0, 0, -1], &[0, 0, 0], &[1, 0, 0]], &["u_2_1"]),
        (&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]], &[]),
    ];
    let mut pairs = Vec::new();
    for (k, (m, gens)) in cases.iter().enumerate() {
        let w = index_with_matrix(flavor, m);
        let i = schubert_ideal(&r, &w, None).unwrap();
        assert_eq!(i, ideal(&r, gens), "{w}");
        assert_eq!(skew_j_ideal(&r, &w).unwrap().to_ideal(), i);
        pairs.push(TransitionPair::monomial(format!("I{}", k + 1), i.as_monomial().unwrap()));
    }
    let system = TransitionSystem::new(pairs).unwrap();
    assert!(verify_axioms(&system, &[], None, false).unwrap().passed);
}

fn classical_two_by_two(order: TermOrder) -> (msv::algebra::Ring, Vec<TransitionPair>) {
    let flavor = Flavor::Classical { m: 2, n: 2 };
    let r = ring_in(flavor, Field::Rational, order);
    let table: [(&[&[i8]], &[&str]); 7] = [
        (&[&[0, 0], &[0, 0]], &["x_1_1", "x_1_2", "x_2_1", "x_2_2"]),
        (&[&[0, 0], &[0, 1]], &["x_1_1", "x_1_2", "x_2_1"]),
        (&[&[0, 0], &[1, 0]], &["x_1_1", "x_1_2"]),
        (&[&[0, 1], &[0, 0]], &["x_1_1", "x_2_1"]),
        (&[&[0, 1], &[1, 0]], &["x_1_1"]),
        (&[&[1, 0], &[0, 1]], &[]),
        (&[&[1, 0], &[0, 0]], &["x_1_1*x_2_2 - x_1_2*x_2_1"]),
    ];
    let mut pairs = Vec::new();
    for (k, (m, gens)) in table.iter().enumerate() {
        let w = index_with_matrix(flavor, m);
        let i = schubert_ideal(&r, &w, None).unwrap();
        assert_eq!(i, ideal(&r, gens), "{w}");
        assert_eq!(minor_ideal(&r, &w).unwrap(), i);
        pairs.push(TransitionPair::new(format!("I{}", k + 1), i.clone(), i.initial_ideal()));
    }
    (r, pairs)
}

pub fn classical_two_by_two_revlex() {
    let (r, pairs) = classical_two_by_two(TermOrder::RevLex);
    assert_eq!(pairs[6].j, MonomialIdeal::parse(&r, &["x_1_2*x_2_1"]).unwrap());
    let system = TransitionSystem::new(pairs).unwrap();
    let x11 = Polynomial::parse(&r, "x_1_1").unwrap();
    let report = verify_axioms(&system, &[witness("I7", &x11, &["I3", "I4"])], None, false).unwrap();
    assert!(report.passed, "{:?}", report.first_failure());
}

pub fn classical_two_by_two_lex_needs_an_extra_pair() {
    let (r, mut pairs) = classical_two_by_two(TermOrder::Lex);
    assert_eq!(pairs[6].j, MonomialIdeal::parse(&r, &["x_1_1*x_2_2"]).unwrap());
    let x11 = Polynomial::parse(&r, "x_1_1").unwrap();
    let x12 = Polynomial::parse(&r, "x_1_2").unwrap();
    let seven = TransitionSystem::new(pairs.clone()).unwrap();
    let report = verify_axioms(&seven, &[witness("I7", &x11, &["I3", "I4"])], None, false).unwrap();
    assert!(report.first_failure().unwrap().contains("T3"));

    let i8 = MonomialIdeal::parse(&r, &["x_1_2", "x_2_2"]).unwrap();
    pairs.push(TransitionPair::monomial("I8", i8));
    let eight = TransitionSystem::new(pairs).unwrap();
    let report = verify_axioms(&eight, &[witness("I7", &x12, &["I3", "I8"])], None, false).unwrap();
    assert!(report.passed, "{:?}", report.first_failure());
}

pub fn symmetric_two_by_two_needs_a_non_radical_pair() {
    let flavor = Flavor::Symmetric { n: 2 };
    let r = ring(flavor);
    let table: [(&[&[i8]], &[&str]); 5] = [
        (&[&[1, 0], &[0, 0]], &["u_2_1^2 - u_1_1*u_2_2"]),
        (&[&[1, 0], &[0, 1]], &[]),
        (&[&[0, 1], &[1, 0]], &["u_1_1"]),
        (&[&[0, 0], &[0, 1]], &["u_1_1", "u_2_1"]),
        (&[&[0, 0], &[0, 0]], &["u_1_1", "u_2_1", "u_2_2"]),
    ];
    let mut pairs = Vec::new();
    for (k, (m, gens)) in table.iter().enumerate() {
        let w = index_with_matrix(flavor, m);
        let i = schubert_ideal(&r, &w, None).unwrap();
        assert_eq!(i, ideal(&r, gens), "{w}");
        pairs.push(TransitionPair::new(format!("I{}", k + 1), i.clone(), i.initial_ideal()));
    }
    assert_eq!(pairs[0].j, MonomialIdeal::parse(&r, &["u_2_1^2"]).unwrap());
    let five = TransitionSystem::new(pairs.clone()).unwrap();
    let report = verify_axioms(&five, &[], None, false).unwrap();
    let fails: Vec<_> = report.pairs.iter().filter(|p| !p.passed()).map(|p| p.label.as_str()).collect();
    assert_eq!(fails, ["I1"]);

    pairs.push(TransitionPair::monomial("I6", MonomialIdeal::parse(&r, &["u_1_1", "u_2_1^2"]).unwrap()));
    let six = TransitionSystem::new(pairs).unwrap();
    let u11 = Polynomial::parse(&r, "u_1_1").unwrap();
    assert!(verify_axioms(&six, &[witness("I1", &u11, &["I6"])], None, false).unwrap().passed);
}

/// Positions `k` (1-based) of the forest's ideals in `reference`, plus its edges.
fn forest_positions(forest: &TransitionForest, reference: &[Ideal]) -> (Vec<usize>, BTreeSet<(usize, usize)>) {
    let pos: Vec<usize> = forest
        .nodes
        .iter()
        .map(|n| {
            reference
                .iter()
                .position(|i| *i == n.ideal)
                .map(|k| k + 1)
                .unwrap_or_else(|| panic!("unexpected node {}", n.ideal))
        })
        .collect();
    let edges = forest.nodes.iter().enumerate().flat_map(|(a, n)| n.children.iter().map(move |&b| (a, b)));
    let edges = edges.map(|(a, b)| (pos[a], pos[b])).collect();
    (pos, edges)
}

fn closure_seeds(flavor: Flavor) -> Vec<(String, Ideal)> {
    let r = ring(flavor);
    enumerate(flavor).iter().map(|w| (w.to_string(), schubert_ideal(&r, w, None).unwrap())).collect()
}

pub fn symmetric_two_by_two_forest() {
    let r = ring(Flavor::Symmetric { n: 2 });
    let reference: Vec<Ideal> = [
        &["u_2_1^2 - u_1_1*u_2_2"][..],
        &[],
        &["u_1_1"],
        &["u_2_1", "u_1_1"],
        &["u_2_2", "u_2_1", "u_1_1"],
        &["u_1_1", "u_2_1^2"],
    ]
    .iter()
    .map(|g| ideal(&r, g))
    .collect();
    let forest = TransitionForest::build(&closure_seeds(Flavor::Symmetric { n: 2 }), &SplitConfig::default()).unwrap();
    let (pos, edges) = forest_positions(&forest, &reference);
    assert_eq!(pos.iter().copied().collect::<BTreeSet<_>>(), (1..=6).collect());
    assert_eq!(edges, [(1, 6), (6, 4), (4, 5), (2, 3), (3, 4)].into_iter().collect());
}

pub fn symmetric_three_by_three_table() {
    let flavor = Flavor::Symmetric { n: 3 };
    let r = ring(flavor);
    let reference = sym3_ideals(&r);
    for k in 1..=14 {
        let w = sym3_index(k);
        let cl = schubert_ideal(&r, &w, None).unwrap();
        assert_eq!(cl, reference[k - 1], "I_{k} = closure of {w}");
        assert_eq!(minor_ideal(&r, &w).unwrap(), cl, "I_{k}");
        assert_eq!(cl.initial_ideal(), antidiagonal_ideal(&r, &w).unwrap(), "I_{k}");
    }
    let i19 = &reference[18];
    let split = i19.add_generator(&Polynomial::parse(&r, "u_2_1").unwrap());
    assert_eq!(reference[10].intersect(&reference[20]).unwrap(), split);
}

pub fn symmetric_three_by_three_forest() {
    let r = ring(Flavor::Symmetric { n: 3 });
    let reference = sym3_ideals(&r);
    let forest = TransitionForest::build(&closure_seeds(Flavor::Symmetric { n: 3 }), &SplitConfig::default()).unwrap();
    let (pos, edges) = forest_positions(&forest, &reference);
    assert_eq!(pos.iter().copied().collect::<BTreeSet<_>>(), (1..=21).collect());
    assert_eq!(pos.len(), 21);
    for (node, &k) in forest.nodes.iter().zip(&pos) {
        assert_eq!(node.seed, k <= 14, "I_{k}");
    }
    assert_eq!(edges, SYM3_EDGES.into_iter().collect());
    let report = verify_axioms(&forest.system().unwrap(), &forest.witnesses(), None, false).unwrap();
    assert!(report.passed, "{:?}", report.first_failure());
}
