//! Finite abstract argumentation.
//!
//! Frameworks, extension- and labelling-based semantics (conflict-free,
//! admissible, complete, grounded, preferred, stable, semi-stable, stage,
//! ideal), the order and fixpoint machinery they are defined with, the
//! extension/labelling correspondence, solver file formats, and an
//! exhaustive small-model checker for the meta-theory of the semantics.

pub mod argset;
pub mod correspondence;
pub mod extensions;
pub mod fixtures;
pub mod framework;
pub mod io;
pub mod labellings;
pub mod meta;
pub mod orders;
pub mod random;
pub mod semantics;

pub use argset::ArgSet;
pub use correspondence::{ext_to_lab, lab_to_ext, CorrespondenceReport};
pub use extensions::{Extensions, Strategy};
pub use framework::{ArgId, Framework, FrameworkError};
pub use labellings::{Label, Labelling, Labellings};
pub use semantics::SemanticsId;
