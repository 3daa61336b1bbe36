//! Subword complexes on finite Coxeter groups.
//!
//! Fix a word Q in the generators of a finite Coxeter group and a group
//! element ρ. The facets of the subword complex are the sets of word
//! positions whose complement spells a reduced word for ρ. This crate builds
//! the root system exactly (integer and golden-ratio arithmetic, no floats),
//! computes root functions and flips, and enumerates all facets with
//! polynomial delay by walking a greedy flip tree with in-place flips.
//!
//! ```
//! use subword_complex::{CoxeterSystem, SubwordComplex, GreedyFlipIter, Sign};
//! use std::sync::Arc;
//!
//! let sys = Arc::new(CoxeterSystem::from_type("A3")?);
//! let target = sys.element_from_word(&[1, 2, 1, 0])?;
//! let complex = SubwordComplex::new(sys, vec![1, 2, 0, 2, 1, 0, 1, 2, 0], target)?;
//! let facets: Vec<_> = GreedyFlipIter::new(&complex, Sign::Negative).collect();
//! assert_eq!(facets.len(), 12);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod coxeter;
pub mod enumerate;
pub mod network;
pub mod subword;

pub use coxeter::{
    CoxeterError, CoxeterMatrix, CoxeterSystem, Element, Quad, RootIndex, Word, DEFAULT_ROOT_CAP,
};
pub use enumerate::{
    count_facets, euler_characteristic, euler_characteristic_with_cap, flip_graph, greedy_tree,
    Algorithm, FlipGraph, GraphEdge, GreedyFlipIter, GreedyTree, InductiveIter, Sign, TreeArc,
    DEFAULT_FACE_CAP,
};
pub use network::{
    arrangement, embed_root, is_type_a, one_line, render_ascii, render_svg, word_from_one_line,
    Arrangement, Commutator, CommutatorKind, NetworkError,
};
pub use subword::{Facet, SubwordComplex, SubwordError};
