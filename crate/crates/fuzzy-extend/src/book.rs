//! Chapters of the guide in `book/`, included here so that their code blocks
//! run under `cargo test --doc` and cannot drift from the library.

#[doc = include_str!("../../../README.md")]
pub mod readme {}

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/tnorms.md")]
pub mod tnorms {}

#[doc = include_str!("../../../book/src/adjoints.md")]
pub mod adjoints {}

#[doc = include_str!("../../../book/src/fuzzy-metrics.md")]
pub mod fuzzy_metrics {}

#[doc = include_str!("../../../book/src/extension.md")]
pub mod extension {}

#[doc = include_str!("../../../book/src/pipeline.md")]
pub mod pipeline {}
