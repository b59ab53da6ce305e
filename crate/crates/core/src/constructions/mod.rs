//! Explicit representations and the constructions that transform them.

pub mod atilde;
pub mod classify;
pub mod d4tilde;
pub mod indicator;
pub mod kan;
pub mod reflect;
pub mod vandermonde;
