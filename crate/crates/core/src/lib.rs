//! Numerical semigroups through their Apéry sets, and exhaustive enumeration
//! of ratio-covarieties.
//!
//! * [`semigroup`]: the canonical representation and its invariants.
//! * [`covariety`]: the generic tree engine for any ratio-covariety.
//! * [`rfm`]: the family `R(F, m)` of semigroups with fixed Frobenius number
//!   and multiplicity, with closures, ranks and maximal elements.
//! * [`gencov`]: covarieties generated by a finite family.
//! * [`oracle`]: brute-force references for cross-checking.
//!
//! With the `parallel` feature (on by default) tree levels can be expanded
//! on the rayon pool; see [`EnumerationOptions`].

pub mod covariety;
pub mod error;
pub mod gencov;
pub mod oracle;
mod par;
pub mod record;
pub mod rfm;
pub mod semigroup;

pub use covariety::{
    children, enumerate_tree, ratio_chain, CovarietyDescriptor, CovarietyTree, EnumerationOptions,
    FiniteFamily, PredicateDescriptor, Traversal,
};
pub use error::{Error, Result};
pub use gencov::{generated_covariety, omega_chain, OmegaChain};
pub use par::parallel_available;
pub use record::SemigroupRecord;
pub use rfm::{genus_range, is_mr, maximal_elements, mr_witness, GenusLevel, RSet, RfmFamily};
pub use semigroup::{Classification, Invariants, NumericalSemigroup, MAX_FROBENIUS};
