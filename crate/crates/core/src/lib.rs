//! Zero-error codes for finite-memory channels whose confusability is given by
//! a graph on windows of `m + 1` consecutive symbols.
//!
//! * [`words`]: words, alphabets, permutations and prefix-units.
//! * [`channel`]: channel graphs, code checking and graph interchangeability.
//! * [`construct`]: the quasi 2-code lower bound and the binary capacity table.
//! * [`surgery`]: replacement and deletion of coordinates in a code.
//! * [`oracle`]: exhaustive maximum-code search for small lengths.
//! * [`format`]: file formats for graphs and word lists.

pub mod channel;
pub mod construct;
pub mod error;
pub mod format;
pub mod oracle;
pub mod report;
pub mod surgery;
pub mod words;

pub use channel::{is_code, ChannelGraph, CodeCheck, CodeSet, SingleEdgeGraph, Transform};
pub use error::{Error, Result};
pub use words::{Alphabet, Permutation, Word};
