//! Compiles every Rust listing in the guide under `book/src` as a doc-test.
//!
//! mdbook cannot test listings that depend on an external crate, so each
//! chapter is included as the documentation of an empty module instead and
//! `cargo test` runs them. One module per chapter keeps failures traceable to
//! their source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/clutters.md")]
pub mod clutters {}
#[doc = include_str!("../../../book/src/homology.md")]
pub mod homology {}
#[doc = include_str!("../../../book/src/betti.md")]
pub mod betti {}
#[doc = include_str!("../../../book/src/reductions.md")]
pub mod reductions {}
#[doc = include_str!("../../../book/src/spheres.md")]
pub mod spheres {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
