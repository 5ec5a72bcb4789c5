//! Local edits of a code that keep it a code.
//!
//! For a coordinate set `S`, the windows touching `S` start at the indices
//! `I = index_window(S, m)`. Two edits are safe:
//!
//! * replacing the symbols of one codeword on `S`, provided every window of
//!   that codeword starting in `I` is an isolated vertex (it then never
//!   separated the word from anything, and windows outside `I` are unchanged);
//! * deleting the coordinates `S` from every codeword, provided no pair of
//!   codewords is separated by a window starting in `I`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::channel::{is_code, ChannelGraph, CodeSet};
use crate::error::{Error, Result};
use crate::words::Word;

/// A set of coordinates in `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordSet {
    n: usize,
    members: BTreeSet<usize>,
}

impl CoordSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&coord) = members.iter().find(|&&c| c >= n) {
            return Err(Error::CoordOutOfRange { coord, n });
        }
        Ok(Self { n, members })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, members: BTreeSet::new() }
    }

    pub fn ambient_len(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, coord: usize) -> bool {
        self.members.contains(&coord)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn union(&self, other: &CoordSet) -> Result<CoordSet> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        Ok(Self { n: self.n, members: self.members.union(&other.members).copied().collect() })
    }
}

/// Start indices of the length-`m + 1` windows that contain a coordinate of
/// `s`: the union over `i` in `s` of `[max(i - m, 0), min(i, n - m - 1)]`.
pub fn index_window(s: &CoordSet, m: usize) -> BTreeSet<usize> {
    let n = s.n;
    if n < m + 1 {
        return BTreeSet::new();
    }
    let last = n - m - 1;
    s.members.iter().flat_map(|&i| i.saturating_sub(m)..=i.min(last)).collect()
}

fn check_len(x: &Word, s: &CoordSet) -> Result<()> {
    if x.len() != s.n {
        return Err(Error::LengthMismatch { left: x.len(), right: s.n });
    }
    Ok(())
}

/// Whether every window of `x` starting in `index_window(s)` has degree zero.
pub fn replacement_admissible(x: &Word, s: &CoordSet, graph: &ChannelGraph) -> Result<bool> {
    check_len(x, s)?;
    let width = graph.vertex_len();
    Ok(index_window(s, graph.memory()).into_iter().all(|j| graph.degree(x.window(j, width)) == 0))
}

/// Replaces codeword `x` by `replacement`, which must agree with `x` off `s`.
pub fn apply_replacement(
    code: &CodeSet,
    x: &Word,
    replacement: &Word,
    s: &CoordSet,
    graph: &ChannelGraph,
) -> Result<CodeSet> {
    if !code.contains(x) {
        return Err(Error::NotInCode(x.to_string()));
    }
    check_len(x, s)?;
    check_len(replacement, s)?;
    graph.alphabet().check(replacement)?;
    if (0..s.n).any(|i| !s.contains(i) && x[i] != replacement[i]) {
        return Err(Error::ChangedOutsideSet { original: x.to_string(), replacement: replacement.to_string() });
    }
    if !replacement_admissible(x, s, graph)? {
        return Err(Error::Inadmissible(format!("{x} has a window of positive degree touching the coordinate set")));
    }
    let mut words = code.words().clone();
    words.remove(x);
    // `replacement` is still separated from every other codeword by a window
    // outside the touched range, so it cannot collide with one.
    let fresh = words.insert(replacement.clone());
    debug_assert!(fresh);
    let out = CodeSet::with_length(code.word_len(), words)?;
    debug_assert!(is_code(&out, graph)?.is_valid(), "replacement broke the code");
    Ok(out)
}

/// The word with the coordinates of `s` removed.
pub fn delete_coords(x: &Word, s: &CoordSet) -> Word {
    Word::new(x.iter().enumerate().filter(|(i, _)| !s.contains(*i)).map(|(_, &c)| c).collect())
}

/// A pair of codewords separated by a window touching `s`, if there is one.
fn deletion_obstruction(code: &CodeSet, s: &CoordSet, graph: &ChannelGraph) -> Result<Option<(Word, Word, usize)>> {
    if code.is_empty() {
        return Ok(None);
    }
    if code.word_len() != s.n {
        return Err(Error::LengthMismatch { left: code.word_len(), right: s.n });
    }
    let touched: Vec<usize> = index_window(s, graph.memory()).into_iter().collect();
    let width = graph.vertex_len();
    let words: Vec<&Word> = code.iter().collect();
    let found = (0..words.len()).into_par_iter().find_map_first(|a| {
        ((a + 1)..words.len()).find_map(|b| {
            touched
                .iter()
                .find(|&&j| graph.has_edge(words[a].window(j, width), words[b].window(j, width)))
                .map(|&j| (words[a].clone(), words[b].clone(), j))
        })
    });
    Ok(found)
}

/// Whether no pair of codewords is separated by a window touching `s`.
pub fn deletion_admissible(code: &CodeSet, s: &CoordSet, graph: &ChannelGraph) -> Result<bool> {
    Ok(deletion_obstruction(code, s, graph)?.is_none())
}

/// Removes the coordinates of `s` from every codeword.
pub fn apply_deletion(code: &CodeSet, s: &CoordSet, graph: &ChannelGraph) -> Result<CodeSet> {
    if let Some((x, y, j)) = deletion_obstruction(code, s, graph)? {
        return Err(Error::Inadmissible(format!("{x} and {y} are separated at window {j}")));
    }
    let len = code.word_len().saturating_sub(s.len());
    let words: BTreeSet<Word> = code.iter().map(|w| delete_coords(w, s)).collect();
    if words.len() != code.len() {
        return Err(Error::SurgeryBrokeCode("two codewords collapsed".into()));
    }
    let out = CodeSet::with_length(len, words)?;
    debug_assert!(is_code(&out, graph)?.is_valid(), "deletion broke the code");
    Ok(out)
}
