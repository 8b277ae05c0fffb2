//! Doc-test shims for the guide in `book/`.
//!
//! mdbook renders the chapters but cannot run their code blocks against
//! this crate, so each chapter is also included here as documentation and
//! `cargo test --doc` compiles and runs every snippet. One module per
//! chapter keeps failures attributable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}

#[doc = include_str!("../../../book/src/duality.md")]
pub mod duality {}

#[doc = include_str!("../../../book/src/shapes.md")]
pub mod shapes {}

#[doc = include_str!("../../../book/src/formulas.md")]
pub mod formulas {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
