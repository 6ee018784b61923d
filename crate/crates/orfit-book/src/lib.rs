//! Doc-test bridge for the book in `book/`.
//!
//! Each module below inlines one chapter via `include_str!`, so every
//! Rust code fence in the book compiles and runs under
//! `cargo test --workspace` as an ordinary doc-test. If a chapter and
//! the library drift apart, this crate fails to build or test.
//!
//! The rendered guide is built separately with `mdbook build book`.

#[doc = include_str!("../../../README.md")]
pub mod readme {}

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/one-pass-learning.md")]
pub mod one_pass_learning {}

#[doc = include_str!("../../../book/src/orthogonal-fitting.md")]
pub mod orthogonal_fitting {}

#[doc = include_str!("../../../book/src/memory.md")]
pub mod memory {}

#[doc = include_str!("../../../book/src/least-squares-views.md")]
pub mod least_squares_views {}

#[doc = include_str!("../../../book/src/nonlinear.md")]
pub mod nonlinear {}

#[doc = include_str!("../../../book/src/experiments.md")]
pub mod experiments {}
