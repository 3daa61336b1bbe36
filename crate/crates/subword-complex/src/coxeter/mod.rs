//! Finite Coxeter systems with exact root arithmetic.
//!
//! A system is built from a Coxeter matrix by closing the simple roots under
//! the generator action. Everything downstream (elements, words, subword
//! complexes) works with root *indices* into that closed orbit, so group
//! operations are integer permutation lookups with no floating point anywhere.

mod element;
mod matrix;
mod quad;
mod system;
mod word;

pub use element::Element;
pub use matrix::CoxeterMatrix;
pub use quad::Quad;
pub use system::{CoxeterSystem, RootIndex, DEFAULT_ROOT_CAP};
pub use word::Word;

/// Errors from building a system or interpreting user-supplied words.
#[derive(Debug, thiserror::Error)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    /// The orbit of the simple roots did not close within the cap. The matrix
    /// describes an infinite group (or a finite one larger than the cap allows).
    #[error("root orbit exceeded the cap of {cap} positive roots; group is infinite or too large")]
    OrbitBoundExceeded { cap: usize },
    #[error("bad word: {0}")]
    BadWord(String),
}
