//! Reduced Groebner bases and ideal operations in four variables.

use msv::algebra::{Ambient, Field, Flavor, Polynomial, TermOrder};
use msv::ideal::Ideal;

fn main() -> msv::Result<()> {
    let ambient = Ambient::new(Flavor::Classical { m: 2, n: 2 }, Field::Rational);
    for order in [TermOrder::RevLex, TermOrder::Lex] {
        let r = ambient.ring(order);
        let i = Ideal::parse(&r, &["x_1_1*x_2_2 - x_1_2*x_2_1", "x_1_1^2 - x_2_1"])?;
        println!("{order}: basis {:?}", i.canonical_generators());
        println!("{order}: init {}", i.initial_ideal());
    }
    let r = ambient.ring(TermOrder::RevLex);
    let a = Ideal::parse(&r, &["x_1_1", "x_1_2"])?;
    let b = Ideal::parse(&r, &["x_1_1", "x_2_1"])?;
    let x = Polynomial::parse(&r, "x_1_2")?;
    println!("sum {}", a.sum(&b)?);
    println!("intersection {}", a.intersect(&b)?);
    println!("quotient ({} : x_1_2) = {}", a.intersect(&b)?, a.intersect(&b)?.quotient(&x)?);
    Ok(())
}
