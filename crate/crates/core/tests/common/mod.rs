#![allow(dead_code)]

pub mod checks;
pub mod examples;

use msv::algebra::{Ambient, Field, FieldElement, Flavor, Polynomial, Ring, TermOrder};
use msv::comb::{enumerate, SchubertIndex};
use msv::ideal::Ideal;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ring(flavor: Flavor) -> Ring {
    Ambient::new(flavor, Field::Rational).ring(TermOrder::RevLex)
}

pub fn ring_in(flavor: Flavor, field: Field, order: TermOrder) -> Ring {
    Ambient::new(flavor, field).ring(order)
}

pub fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap_or_else(|e| panic!("{gens:?}: {e}"))
}

/// The enumerated index whose orbit representative is `rows`.
pub fn index_with_matrix(flavor: Flavor, rows: &[&[i8]]) -> SchubertIndex {
    let want: Vec<Vec<i8>> = rows.iter().map(|r| r.to_vec()).collect();
    enumerate(flavor)
        .into_iter()
        .find(|w| w.matrix() == want)
        .unwrap_or_else(|| panic!("no {flavor:?} index has matrix {want:?}"))
}

/// Symmetric 3×3 orbit representatives with their published prime ideals.
pub const SYM3_TABLE: [([[i8; 3]; 3], &[&str]); 14] = [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], &[]),
    (
        [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
        &["u_2_2*u_3_1^2 - 2*u_2_1*u_3_1*u_3_2 + u_1_1*u_3_2^2 + u_2_1^2*u_3_3 - u_1_1*u_2_2*u_3_3"],
    ),
    ([[1, 0, 0], [0, 0, 1], [0, 1, 0]], &["u_2_1^2 - u_1_1*u_2_2"]),
    (
        [[1, 0, 0], [0, 0, 0], [0, 0, 1]],
        &["u_2_2*u_3_1 - u_2_1*u_3_2", "u_2_1*u_3_1 - u_1_1*u_3_2", "u_2_1^2 - u_1_1*u_2_2"],
    ),
    (
        [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
        &[
            "u_3_2^2 - u_2_2*u_3_3",
            "u_3_1*u_3_2 - u_2_1*u_3_3",
            "u_3_1^2 - u_1_1*u_3_3",
            "u_2_2*u_3_1 - u_2_1*u_3_2",
            "u_2_1*u_3_1 - u_1_1*u_3_2",
            "u_2_1^2 - u_1_1*u_2_2",
        ],
    ),
    ([[0, 1, 0], [1, 0, 0], [0, 0, 1]], &["u_1_1"]),
    ([[0, 1, 0], [1, 0, 0], [0, 0, 0]], &["u_1_1", "u_2_2*u_3_1^2 - 2*u_2_1*u_3_1*u_3_2 + u_2_1^2*u_3_3"]),
    ([[0, 0, 1], [0, 1, 0], [1, 0, 0]], &["u_2_1", "u_1_1"]),
    ([[0, 0, 1], [0, 0, 0], [1, 0, 0]], &["u_2_2", "u_2_1", "u_1_1"]),
    ([[0, 0, 0], [0, 1, 0], [0, 0, 1]], &["u_3_1", "u_2_1", "u_1_1"]),
    ([[0, 0, 0], [0, 1, 0], [0, 0, 0]], &["u_3_1", "u_2_1", "u_1_1", "u_3_2^2 - u_2_2*u_3_3"]),
    ([[0, 0, 0], [0, 0, 1], [0, 1, 0]], &["u_3_1", "u_2_2", "u_2_1", "u_1_1"]),
    ([[0, 0, 0], [0, 0, 0], [0, 0, 1]], &["u_3_2", "u_3_1", "u_2_2", "u_2_1", "u_1_1"]),
    ([[0, 0, 0], [0, 0, 0], [0, 0, 0]], &["u_3_3", "u_3_2", "u_3_1", "u_2_2", "u_2_1", "u_1_1"]),
];

/// The seven ideals added to the 3×3 family by the forest construction.
pub const SYM3_EXTRA: [&[&str]; 7] = [
    &["u_2_1", "u_1_1", "u_3_1^2"],
    &["u_1_1", "u_2_1^2"],
    &["u_1_1", "u_3_1^2", "u_2_2*u_3_1 - u_2_1*u_3_2", "u_2_1*u_3_1", "u_2_1^2"],
    &["u_2_2", "u_2_1", "u_1_1", "u_3_1^2"],
    &[
        "u_1_1",
        "u_3_2^2 - u_2_2*u_3_3",
        "u_3_1*u_3_2 - u_2_1*u_3_3",
        "u_3_1^2",
        "u_2_2*u_3_1 - u_2_1*u_3_2",
        "u_2_1*u_3_1",
        "u_2_1^2",
    ],
    &["u_3_1", "u_2_2", "u_2_1", "u_1_1", "u_3_2^2"],
    &["u_2_2", "u_2_1", "u_1_1", "u_3_2^2", "u_3_1*u_3_2", "u_3_1^2"],
];

/// Parent-child edges of the published 3×3 forest, by position `I_k`.
pub const SYM3_EDGES: [(usize, usize); 24] = [
    (1, 6),
    (6, 8),
    (8, 10),
    (10, 12),
    (12, 13),
    (13, 14),
    (2, 7),
    (7, 9),
    (7, 15),
    (9, 12),
    (15, 10),
    (3, 16),
    (16, 8),
    (4, 9),
    (4, 17),
    (17, 10),
    (17, 18),
    (18, 12),
    (5, 19),
    (19, 11),
    (19, 21),
    (11, 20),
    (21, 20),
    (20, 13),
];

/// `I_1..I_21` in the symmetric 3×3 ring; position `k - 1` holds `I_k`.
pub fn sym3_ideals(r: &Ring) -> Vec<Ideal> {
    SYM3_TABLE.iter().map(|(_, g)| ideal(r, g)).chain(SYM3_EXTRA.iter().map(|g| ideal(r, g))).collect()
}

pub fn sym3_index(k: usize) -> SchubertIndex {
    let m = SYM3_TABLE[k - 1].0;
    let rows: Vec<&[i8]> = m.iter().map(|r| r.as_slice()).collect();
    index_with_matrix(Flavor::Symmetric { n: 3 }, &rows)
}

/// A random polynomial in the variables `pool` with at most `terms` terms
/// of degree at most `deg` and coefficients in `[-3, 3]`.
pub fn random_poly(r: &Ring, rng: &mut ChaCha8Rng, pool: &[usize], terms: usize, deg: u32) -> Polynomial {
    let mut out = Polynomial::zero(r);
    for _ in 0..rng.gen_range(1..=terms) {
        let mut m = Polynomial::from_i64(r, rng.gen_range(-3..=3));
        for _ in 0..rng.gen_range(0..=deg) {
            m = m.mul(&Polynomial::var_at(r, pool[rng.gen_range(0..pool.len())]));
        }
        out = out.add(&m);
    }
    out
}

/// A random monomial of degree `1..=deg` in the variables `pool`.
pub fn random_monomial(r: &Ring, rng: &mut ChaCha8Rng, pool: &[usize], deg: u32) -> Polynomial {
    let mut m = Polynomial::one(r);
    for _ in 0..rng.gen_range(1..=deg) {
        m = m.mul(&Polynomial::var_at(r, pool[rng.gen_range(0..pool.len())]));
    }
    m
}

/// A random ideal of 1..=3 generators of degree at most 3, all monomial or general.
pub fn random_ideal(r: &Ring, rng: &mut ChaCha8Rng, pool: &[usize], monomial: bool) -> Ideal {
    let k = rng.gen_range(1..=3);
    let gens = (0..k)
        .map(|_| if monomial { random_monomial(r, rng, pool, 3) } else { random_poly(r, rng, pool, 3, 3) })
        .collect();
    Ideal::new(r, gens)
}

/// A random lower-triangular matrix with nonzero diagonal.
pub fn random_borel(field: Field, rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<FieldElement>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = match i.cmp(&j) {
                        std::cmp::Ordering::Less => 0,
                        std::cmp::Ordering::Equal => *[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap(),
                        std::cmp::Ordering::Greater => rng.gen_range(-3..=3),
                    };
                    field.from_i64(v)
                })
                .collect()
        })
        .collect()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
