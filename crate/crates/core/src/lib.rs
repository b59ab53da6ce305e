//! Additive Set-realizability of quiver representations over finite fields.

pub mod constructions;
pub mod decomp;
mod error;
pub mod experiment;
pub mod gallery;
pub mod io;
pub mod oracle;
pub mod random;
pub mod linrep;
pub mod realize;
pub mod setrep;
pub mod shape;
pub mod tda;

pub use error::{CoreError, Result};
pub use linrep::{LinRep, Morphism};
pub use realize::{is_add_set_realizable, Limits, Variant, Verdict};
pub use setrep::{Linearization, SetRep};
pub use shape::{Arrow, DiagramShape, Relation};
