//! Quasi 2-codes for one-edge graphs.
//!
//! For `G(u, v)` oriented so that the common prefix is at least as long as the
//! common suffix, let `l` be the common prefix length and let `u_v`, `v_u` be
//! the shortest prefix-units of `u`, `v` of length at least `m + 1 - l`. Every
//! length-`n` concatenation of `u_v` and `v_u`, followed by the common prefix
//! of `u` and `v`, is pairwise distinguishable, so the star language
//! `{u_v, v_u}*` has rate `-log2 x*` with `x^{|u_v|} + x^{|v_u|} = 1`. When
//! one endpoint is a constant word that rate is the capacity.

mod decode;
mod rate;
pub mod table;

use serde::Serialize;

use crate::channel::CodeSet;
use crate::error::{Error, Result};
use crate::words::{self, Word};

pub use decode::{count_star_language, is_uniquely_decodable, star_language, GeneratorSet};
pub use rate::{characteristic_root, BoundStatus, RateBound, ROOT_TOLERANCE};
pub use table::{table1_binary_m2, CapacityStatus, ClosedForm, Table1Report, Table1Row};

fn check_pair(u: &Word, v: &Word) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u == v {
        return Err(Error::IdenticalEndpoints);
    }
    Ok(())
}

/// Reverses both words when their common suffix is longer than their common
/// prefix. Returns the oriented pair and whether it was reversed.
pub fn normalize_orientation(u: &Word, v: &Word) -> Result<(Word, Word, bool)> {
    check_pair(u, v)?;
    let (_, prefix) = words::longest_common_prefix(u, v);
    let (_, suffix) = words::longest_common_suffix(u, v);
    if prefix < suffix {
        Ok((u.reverse(), v.reverse(), true))
    } else {
        Ok((u.clone(), v.clone(), false))
    }
}

/// The generators of the quasi 2-code for an oriented edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorePair {
    /// The oriented endpoints.
    pub u: Word,
    pub v: Word,
    pub u_v: Word,
    pub v_u: Word,
    /// Longest common prefix of the oriented endpoints.
    pub pre: Word,
    pub reversed: bool,
}

impl CorePair {
    /// `l(u, v)`: the common prefix length after orientation.
    pub fn common_len(&self) -> usize {
        self.pre.len()
    }

    pub fn generators(&self) -> GeneratorSet {
        GeneratorSet::new(vec![self.u_v.clone(), self.v_u.clone()])
            .expect("core pair generators are non-empty")
    }

    pub fn lengths(&self) -> (usize, usize) {
        (self.u_v.len(), self.v_u.len())
    }

    pub fn rate(&self) -> Result<RateBound> {
        characteristic_root(&[self.u_v.len(), self.v_u.len()])
    }

    /// Prefix/suffix wrapping that turns the star language into a code for
    /// the oriented edge.
    pub fn wrap(&self) -> QuasiCodeWrap {
        QuasiCodeWrap { prefix: Word::empty(), suffix: self.pre.clone(), body: self.generators() }
    }
}

fn core_pair_oriented(u: Word, v: Word, reversed: bool) -> Result<CorePair> {
    let (pre, common) = words::longest_common_prefix(&u, &v);
    let min_len = u.len() - common;
    let u_v = words::shortest_prefix_unit_min_len(&u, min_len)?;
    let v_u = words::shortest_prefix_unit_min_len(&v, min_len)?;
    Ok(CorePair { u, v, u_v, v_u, pre, reversed })
}

/// Orients the edge and derives `(u_v, v_u)`.
pub fn derive_core_pair(u: &Word, v: &Word) -> Result<CorePair> {
    let (u, v, reversed) = normalize_orientation(u, v)?;
    core_pair_oriented(u, v, reversed)
}

/// Every orientation the construction applies to: one, or both when the
/// common prefix and suffix have equal length.
pub fn core_pair_candidates(u: &Word, v: &Word) -> Result<Vec<CorePair>> {
    let forward = derive_core_pair(u, v)?;
    let (_, prefix) = words::longest_common_prefix(u, v);
    let (_, suffix) = words::longest_common_suffix(u, v);
    if prefix == suffix {
        let backward = core_pair_oriented(u.reverse(), v.reverse(), true)?;
        Ok(vec![forward, backward])
    } else {
        Ok(vec![forward])
    }
}

/// The candidate with the highest rate; ties keep the unreversed orientation.
pub fn best_core_pair(u: &Word, v: &Word) -> Result<(CorePair, RateBound)> {
    let mut best: Option<(CorePair, RateBound)> = None;
    for pair in core_pair_candidates(u, v)? {
        let bound = pair.rate()?;
        if best.as_ref().is_none_or(|(_, b)| bound.rate > b.rate) {
            best = Some((pair, bound));
        }
    }
    Ok(best.expect("at least one orientation"))
}

/// Lower bound on `C(G(u, v))` from the quasi 2-code.
pub fn quasi_two_code_bound(u: &Word, v: &Word) -> Result<RateBound> {
    best_core_pair(u, v).map(|(_, bound)| bound)
}

/// Fixed prefix and suffix added to every word of a star language.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiCodeWrap {
    pub prefix: Word,
    pub suffix: Word,
    pub body: GeneratorSet,
}

impl QuasiCodeWrap {
    /// Length of the wrapped words for body length `n`.
    pub fn total_len(&self, n: usize) -> usize {
        n + self.prefix.len() + self.suffix.len()
    }

    pub fn wrap(&self, n: usize) -> CodeSet {
        let words = star_language(&self.body, n)
            .into_iter()
            .map(|w| self.prefix.concat(&w).concat(&self.suffix))
            .collect();
        CodeSet::from_set(self.total_len(n), words)
    }
}

/// The length-`n + l_p` code `{u_v, v_u}^* ∩ X^n` followed by the common
/// prefix, mapped back to the original orientation of `(u, v)`.
pub fn build_quasi_code(u: &Word, v: &Word, n: usize) -> Result<CodeSet> {
    let (pair, _) = best_core_pair(u, v)?;
    let oriented = pair.wrap().wrap(n);
    if !pair.reversed {
        return Ok(oriented);
    }
    let len = oriented.word_len();
    Ok(CodeSet::from_set(len, oriented.into_words().iter().map(Word::reverse).collect()))
}

/// The quasi 2-code rate marked exact when an endpoint is a constant word,
/// where it equals the capacity; `None` otherwise.
pub fn capacity_if_uniform(u: &Word, v: &Word) -> Result<Option<RateBound>> {
    check_pair(u, v)?;
    if !(u.is_constant() || v.is_constant()) {
        return Ok(None);
    }
    quasi_two_code_bound(u, v).map(|b| Some(b.with_status(BoundStatus::Exact)))
}

const CASE11_WORDS: [&str; 14] = [
    "00100100100",
    "00100101001",
    "00100110010",
    "00110010010",
    "00110011001",
    "01001001001",
    "01001001100",
    "01001100100",
    "10000100001",
    "10010010010",
    "10010011001",
    "10010100100",
    "10011001001",
    "10011001100",
];

/// Fourteen length-11 binary words whose star language is a code for
/// `G(001, 100)` with rate `log2(14) / 11`, above the quasi 2-code's 1/3.
pub fn case11_generators() -> GeneratorSet {
    GeneratorSet::new(CASE11_WORDS.iter().map(|s| s.parse().expect("static word")).collect())
        .expect("static generator set")
}
