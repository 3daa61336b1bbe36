//! The user guide, compiled. Each module's documentation *is* a chapter of
//! the book in `book/src/`, pulled in verbatim with `include_str!` so that
//! `cargo test --doc` compiles and runs every Rust snippet the book shows.
//! If a chapter drifts from the library, the build breaks here.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/coxeter-systems.md")]
pub mod coxeter_systems {}

#[doc = include_str!("../../../book/src/subword-complexes.md")]
pub mod subword_complexes {}

#[doc = include_str!("../../../book/src/greedy-enumeration.md")]
pub mod greedy_enumeration {}

#[doc = include_str!("../../../book/src/sorting-networks.md")]
pub mod sorting_networks {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
