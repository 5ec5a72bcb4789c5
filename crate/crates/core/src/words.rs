//! Alphabets, words, and the small amount of combinatorics on words the
//! constructions need: common prefixes/suffixes, units and prefix-units,
//! reversal and symbol permutation.
//!
//! Symbols are `u8` values `0..q`. The text form renders `0..=9` as digits and
//! `10..36` as lowercase letters, so `"001001"` is a binary word and `"0a1"`
//! a word over an alphabet of at least eleven symbols.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest alphabet expressible in the text form.
pub const MAX_ALPHABET: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    q: usize,
}

impl Alphabet {
    pub fn new(q: usize) -> Result<Self> {
        if q == 0 || q > MAX_ALPHABET {
            return Err(Error::AlphabetSize { q, max: MAX_ALPHABET });
        }
        Ok(Self { q })
    }

    pub const fn binary() -> Self {
        Self { q: 2 }
    }

    pub fn size(self) -> usize {
        self.q
    }

    pub fn contains(self, symbol: u8) -> bool {
        (symbol as usize) < self.q
    }

    pub fn check(self, word: &Word) -> Result<()> {
        match word.iter().find(|&&s| !self.contains(s)) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, q: self.q }),
            None => Ok(()),
        }
    }

    /// Parses `text` and rejects symbols outside the alphabet.
    pub fn parse(self, text: &str) -> Result<Word> {
        let word: Word = text.parse()?;
        self.check(&word)?;
        Ok(word)
    }

    /// All words of length `n` in lexicographic order.
    pub fn words(self, n: usize) -> impl Iterator<Item = Word> {
        let q = self.q;
        let total = (q as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        (0..total).map(move |index| Word::from_index(index, q, n))
    }
}

fn symbol_char(symbol: u8) -> char {
    char::from_digit(u32::from(symbol), MAX_ALPHABET as u32).unwrap_or('?')
}

/// A finite string of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Self {
        Self(symbols)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `symbol` repeated `len` times.
    pub fn constant(symbol: u8, len: usize) -> Self {
        Self(vec![symbol; len])
    }

    /// The `index`-th word of length `n` over `q` symbols, most significant
    /// symbol first.
    pub fn from_index(mut index: u64, q: usize, n: usize) -> Self {
        let mut symbols = vec![0u8; n];
        for slot in symbols.iter_mut().rev() {
            *slot = (index % q as u64) as u8;
            index /= q as u64;
        }
        Self(symbols)
    }

    /// Inverse of [`Word::from_index`].
    pub fn index(&self, q: usize) -> u64 {
        self.0.iter().fold(0u64, |acc, &s| acc * q as u64 + u64::from(s))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    /// `self` repeated `times` times.
    pub fn power(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// The length-`width` window starting at `start`.
    pub fn window(&self, start: usize, width: usize) -> &[u8] {
        &self.0[start..start + width]
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|pair| pair[0] == pair[1])
    }

    pub fn max_symbol(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }

    pub fn reverse(&self) -> Word {
        reverse(self)
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&[u8]> for Word {
    fn from(symbols: &[u8]) -> Self {
        Self(symbols.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return Ok(());
        }
        let text: String = self.0.iter().map(|&s| symbol_char(s)).collect();
        f.write_str(&text)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.chars()
            .enumerate()
            .map(|(pos, ch)| match ch.to_digit(MAX_ALPHABET as u32) {
                Some(d) if !ch.is_ascii_uppercase() => Ok(d as u8),
                _ => Err(Error::BadSymbolChar { text: text.to_string(), pos, ch }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A bijection on the symbols `0..q`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(image: Vec<u8>) -> Result<Self> {
        let q = image.len();
        let mut seen = vec![false; q];
        for &s in &image {
            match seen.get_mut(s as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::NotAPermutation { q }),
            }
        }
        Ok(Self(image))
    }

    pub fn identity(q: usize) -> Self {
        Self((0..q as u8).collect())
    }

    /// The permutation `s -> q - 1 - s`; the bit flip when `q = 2`.
    pub fn flip(q: usize) -> Self {
        Self((0..q as u8).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, symbol: u8) -> u8 {
        self.0[symbol as usize]
    }

    pub fn image(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| i == s as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inverse = vec![0u8; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inverse[s as usize] = i as u8;
        }
        Self(inverse)
    }

    /// Every permutation of `0..q` in lexicographic order of image tables.
    pub fn all(q: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(q);
        let mut used = vec![false; q];
        fn rec(q: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == q {
                out.push(Permutation(current.clone()));
                return;
            }
            for s in 0..q {
                if !used[s] {
                    used[s] = true;
                    current.push(s as u8);
                    rec(q, current, used, out);
                    current.pop();
                    used[s] = false;
                }
            }
        }
        rec(q, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.0.iter().map(|&s| symbol_char(s)).collect();
        f.write_str(&text)
    }
}

pub fn reverse(w: &Word) -> Word {
    Word(w.0.iter().rev().copied().collect())
}

/// Applies `pi` symbol-wise. Fails if a symbol is outside the permutation's domain.
pub fn permute(w: &Word, pi: &Permutation) -> Result<Word> {
    w.iter()
        .map(|&s| {
            if (s as usize) < pi.size() {
                Ok(pi.apply(s))
            } else {
                Err(Error::SymbolOutOfRange { symbol: s, q: pi.size() })
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

/// Longest common prefix of `u` and `v`, with its length.
pub fn longest_common_prefix(u: &Word, v: &Word) -> (Word, usize) {
    let len = u.iter().zip(v.iter()).take_while(|(a, b)| a == b).count();
    (u.slice(0, len), len)
}

/// Longest common suffix of `u` and `v`, with its length.
pub fn longest_common_suffix(u: &Word, v: &Word) -> (Word, usize) {
    let len = u.iter().rev().zip(v.iter().rev()).take_while(|(a, b)| a == b).count();
    (u.slice(u.len() - len, u.len()), len)
}

/// Smallest shift `t < len(x)` with `y[i] = x[(i - t) mod len(x)]` for every
/// position of `y`, or `None` if `x` is not a unit of `y` (including when `x`
/// is longer than `y`).
pub fn is_unit(x: &Word, y: &Word) -> Result<Option<usize>> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = x.len();
    if p > y.len() {
        return Ok(None);
    }
    Ok((0..p).find(|&t| y.iter().enumerate().all(|(i, &s)| s == x[(i + p - t) % p])))
}

pub fn is_prefix_unit(x: &Word, y: &Word) -> bool {
    !x.is_empty() && x.len() <= y.len() && has_period(y, x.len()) && y.starts_with(x)
}

/// `y[i] = y[i - p]` for every `i >= p`.
fn has_period(y: &[u8], p: usize) -> bool {
    y.iter().skip(p).zip(y.iter()).all(|(a, b)| a == b)
}

/// The shortest prefix `p` of `y` with `len(p) >= min_len` that is a
/// prefix-unit of `y`. `y` itself always qualifies.
pub fn shortest_prefix_unit_min_len(y: &Word, min_len: usize) -> Result<Word> {
    if min_len == 0 || min_len > y.len() {
        return Err(Error::MinLenOutOfRange { min_len, len: y.len() });
    }
    let len = (min_len..=y.len()).find(|&p| has_period(y, p)).unwrap_or(y.len());
    Ok(y.slice(0, len))
}
