//! Exact computations with G-graded simple algebras `F^αH ⊗ M_n(F)`.

pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod galgebra;
pub mod group;
pub mod linalg;
pub mod par;
pub mod pi;
pub mod presentation;
pub mod schema;
pub mod settings;
pub mod twisted;
pub mod zmod;

pub use error::{Error, ErrorKind, Result};
pub use galgebra::{AlgElement, GradedAlgebra};
pub use group::{CosetMultiset, Elem, Group, Subgroup};
pub use par::Exec;
pub use settings::{Caps, Settings};
pub use presentation::{Classification, InvariantChain, Move, Presentation};
pub use twisted::Cocycle;
