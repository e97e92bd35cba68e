//! The guide chapters from `book/src`, included as module docs so that
//! `cargo test --doc` executes every code block the book displays. The
//! rendered book and these doc-tests are the same markdown files; they
//! cannot drift apart.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/binary-words.md")]
pub mod binary_words {}

#[doc = include_str!("../../../book/src/the-two-curves.md")]
pub mod the_two_curves {}

#[doc = include_str!("../../../book/src/digit-sequences.md")]
pub mod digit_sequences {}

#[doc = include_str!("../../../book/src/geometry.md")]
pub mod geometry {}

#[doc = include_str!("../../../book/src/rendering-and-verification.md")]
pub mod rendering_and_verification {}
