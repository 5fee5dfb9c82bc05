//! Proof nets for intuitionistic multiplicative linear logic (IMLL, no
//! unit): construction, correctness checking, cut elimination, equality of
//! normal nets, enumeration, and a constructive separation theorem.
//!
//! The [`guide`] module mirrors the book in `book/`; every code block in it
//! is compiled and run as a doc-test, keeping the prose and the library in
//! sync.

pub mod analysis;
pub mod formula;
pub mod context;
pub mod lambda;
pub mod net;
pub mod rewrite;
pub mod separate;

/// The user guide, chapter by chapter.  The contents are included from
/// `book/src/` so that `cargo test --doc` exercises every example in the
/// book.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    pub mod formulas {}
    #[doc = include_str!("../../../book/src/nets.md")]
    pub mod nets {}
    #[doc = include_str!("../../../book/src/rewriting.md")]
    pub mod rewriting {}
    #[doc = include_str!("../../../book/src/equality.md")]
    pub mod equality {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    pub mod enumeration {}
    #[doc = include_str!("../../../book/src/separation.md")]
    pub mod separation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
