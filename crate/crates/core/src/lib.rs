//! Occurrence counts of factors in circular words.
//!
//! * [`words`]: circular words, occurrence counting, runs and block decomposition.
//! * [`debruijn`]: De Bruijn graphs, closed paths of words, flow conservation,
//!   cycle-space size and DOT export.
//! * [`invariants`]: the equal palindromic-pair differences of binary words
//!   and the winding number computed two ways.
//! * [`span`]: exact rank and bases of the space of occurrence functionals.
//! * [`verify`]: exhaustive and random checking driver.

pub mod debruijn;
pub mod dot;
pub mod error;
pub mod invariants;
pub mod matrix;
pub mod span;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Alphabet, CircularWord, Letter, Word};
