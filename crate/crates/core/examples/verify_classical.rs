//! Builds the classical 3x3 transition system and verifies it.

use msv::algebra::{Ambient, Field, Flavor, TermOrder};
use msv::transition::{build_canonical_witnesses, certified_conclusions, classical_system, verify_axioms};

fn main() -> msv::Result<()> {
    let r = Ambient::new(Flavor::Classical { m: 3, n: 3 }, Field::Rational).ring(TermOrder::RevLex);
    let indexed = classical_system(&r)?;
    let witnesses = build_canonical_witnesses(&indexed)?;
    let report = verify_axioms(&indexed.system, &witnesses, None, true)?;
    println!("{} pairs, {} witnesses, passed: {}", indexed.system.len(), witnesses.len(), report.passed);
    for p in report.pairs.iter().take(5) {
        println!("  {}: T1 {} T2 {} T3 {} T4 {}", p.label, p.t1, p.t2, p.t3, p.t4);
    }
    if report.passed {
        for c in certified_conclusions(&indexed.system, &report, false, None)?.iter().take(5) {
            println!("  {}", c.statement);
        }
    }
    Ok(())
}
