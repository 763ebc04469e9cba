//! Checks, index by index, that symmetric minors form a Groebner basis
//! with antidiagonal leading terms, over Q and F_3.

use msv::algebra::{Ambient, Field, Flavor, TermOrder};
use msv::comb::enumerate;
use msv::families::{antidiagonal_ideal, minor_ideal};
use msv::transition::{certify_groebner, TransitionPair};

fn main() -> msv::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let flavor = Flavor::Symmetric { n };
    for field in [Field::Rational, Field::prime(3)?] {
        let r = Ambient::new(flavor, field).ring(TermOrder::RevLex);
        let mut good = 0;
        let all = enumerate(flavor);
        for w in &all {
            let minors = minor_ideal(&r, w)?;
            let pair = TransitionPair::new(w.to_string(), minors.clone(), antidiagonal_ideal(&r, w)?);
            if minors.initial_ideal() == pair.j && certify_groebner(&pair, minors.generators())? {
                good += 1;
            } else {
                println!("{w}: minors are not a Groebner basis");
            }
        }
        println!("n = {n} over {field}: {good}/{} indices pass", all.len());
    }
    Ok(())
}
