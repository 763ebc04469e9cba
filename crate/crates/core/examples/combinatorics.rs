//! Orbit representatives, rank tables, dominant components and covers.

use msv::algebra::Flavor;
use msv::comb::{enumerate, CornerConstraint};

fn main() -> msv::Result<()> {
    let flavor = Flavor::Classical { m: 3, n: 3 };
    let all = enumerate(flavor);
    println!("{} classical 3x3 indices", all.len());
    for w in all.iter().take(6) {
        let corners = w.outer_corners(CornerConstraint::Any);
        println!("{w}: length {}, ranks {:?}, corners {corners:?}", w.length(), w.rank_table().rows());
        if let Some((p, _)) = w.canonical_corner() {
            let covers: Vec<String> = w.covers(p)?.iter().map(|v| v.to_string()).collect();
            println!("  covers moving row {p}: {covers:?}");
        }
    }
    for n in 2..=4 {
        println!(
            "skew n = {n}: {} indices, symmetric: {}",
            enumerate(Flavor::Skew { n }).len(),
            enumerate(Flavor::Symmetric { n }).len()
        );
    }
    Ok(())
}
