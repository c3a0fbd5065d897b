//! Words, automorphisms and primitive elements of the free group on `x`, `y`.
//!
//! Automorphisms act on the right: `AutoSeq` applies its generators left to
//! right, and exponent pairs transform as row vectors, `E(w θ) = E(w) M(θ)`.

pub mod autom;
pub mod closure;
pub mod construct;
pub mod error;
pub mod normal_form;
pub mod oracle;
pub mod palindrome;
pub mod word;

pub use autom::{AutoGen, AutoSeq, IntMatrix2, Orientation};
pub use error::{Error, Result};
pub use word::{ExponentPair, Generator, Letter, Word};
