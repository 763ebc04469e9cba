//! The ideals attached to one index in each flavor.

use msv::algebra::{Ambient, Field, Flavor, TermOrder};
use msv::comb::SchubertIndex;
use msv::families::{antidiagonal_ideal, minor_ideal, point_ideal, schubert_ideal, skew_j_ideal};

fn main() -> msv::Result<()> {
    let sym = Flavor::Symmetric { n: 3 };
    let r = Ambient::new(sym, Field::Rational).ring(TermOrder::RevLex);
    let w = SchubertIndex::parse(sym, "132")?;
    println!("symmetric {w}: matrix {:?}", w.matrix());
    println!("  point    {}", point_ideal(&r, &w)?);
    println!("  closure  {}", schubert_ideal(&r, &w, None)?);
    println!("  minors   {}", minor_ideal(&r, &w)?);
    println!("  adiag    {}", antidiagonal_ideal(&r, &w)?);

    let skew = Flavor::Skew { n: 4 };
    let r = Ambient::new(skew, Field::Rational).ring(TermOrder::RevLex);
    let w = SchubertIndex::parse(skew, "(1,4)(2,3)")?;
    println!("skew {w}: closure {} with initial ideal {}", schubert_ideal(&r, &w, None)?, skew_j_ideal(&r, &w)?);
    Ok(())
}
