//! The narrative guide in `book/` doubles as a test suite: every code
//! block in its chapters is compiled and run by `cargo test --doc`
//! through the doc attributes below.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/binary-codes.md")]
pub mod binary_codes {}

#[doc = include_str!("../../../book/src/sign-cocycle.md")]
pub mod sign_cocycle {}

#[doc = include_str!("../../../book/src/module-labels.md")]
pub mod module_labels {}

#[doc = include_str!("../../../book/src/moonshine-codes.md")]
pub mod moonshine_codes {}

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}

#[doc = include_str!("../../../book/src/hypotheses-checker.md")]
pub mod hypotheses_checker {}
