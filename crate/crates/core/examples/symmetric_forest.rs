//! Grows the symmetric 3x3 transition forest and prints it as DOT.

use msv::algebra::{Field, Flavor, TermOrder};
use msv::cli::{build_symmetric_forest, RunConfig};
use msv::transition::{forest_dot, verify_axioms};

fn main() -> msv::Result<()> {
    let cfg = RunConfig::new(Flavor::Symmetric { n: 3 }, Field::Rational, TermOrder::RevLex);
    let (forest, seeds, _) = build_symmetric_forest(&cfg)?;
    let report = verify_axioms(&forest.system()?, &forest.witnesses(), None, false)?;
    eprintln!("{} seeds grew into {} nodes; verified: {}", seeds.len(), forest.len(), report.passed);
    print!("{}", forest_dot(&forest));
    Ok(())
}
