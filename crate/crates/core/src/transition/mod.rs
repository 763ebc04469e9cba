//! Transition systems, their verification, and the forest construction
//! used when no closed-form witnesses are known.

mod catalog;
mod export;
mod forest;
mod split;
mod system;

pub use catalog::{build_canonical_witnesses, classical_system, skew_system, IndexedSystem};
pub use export::{forest_dot, forest_json, ForestJson, NodeJson};
pub use forest::{column_major, smallest_outside, ForestNode, TransitionForest};
pub use split::{split_strategy, DecompositionTable, ImportedSplit, Split, SplitConfig, SplitRoute};
pub use system::{
    certified_conclusions, certify_groebner, strong_equalities, verify_axioms, Conclusion, Outcome, PairReport,
    StrongReport, TransitionPair, TransitionSystem, TransitionWitness, VerificationReport,
};
