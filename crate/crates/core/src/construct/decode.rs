use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::Word;

use super::rate::{characteristic_root, RateBound};

/// A finite list of non-empty generator words `b_1 .. b_T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    generators: Vec<Word>,
}

impl GeneratorSet {
    pub fn new(generators: Vec<Word>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        if generators.iter().any(|g| g.is_empty()) {
            return Err(Error::EmptyGenerator);
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.len()).collect()
    }

    pub fn max_len(&self) -> usize {
        self.generators.iter().map(|g| g.len()).max().unwrap_or(0)
    }

    /// The characteristic-root rate of the generator lengths.
    pub fn rate(&self) -> Result<RateBound> {
        characteristic_root(&self.lengths())
    }

    fn distinct(&self) -> Vec<&Word> {
        let set: BTreeSet<&Word> = self.generators.iter().collect();
        set.into_iter().collect()
    }
}

/// Sardinas–Patterson test: `true` iff every concatenation of generators has
/// exactly one factorization.
///
/// Repeated generators are reported as [`Error::DuplicateWord`], since they
/// trivially break unique decodability.
pub fn is_uniquely_decodable(gens: &GeneratorSet) -> Result<bool> {
    let mut code: HashSet<&[u8]> = HashSet::with_capacity(gens.len());
    for g in gens.generators() {
        if !code.insert(g.symbols()) {
            return Err(Error::DuplicateWord(g.to_string()));
        }
    }

    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
    let push = |suffix: &[u8], seen: &mut HashSet<Vec<u8>>, queue: &mut VecDeque<Vec<u8>>| {
        if seen.insert(suffix.to_vec()) {
            queue.push_back(suffix.to_vec());
        }
    };

    // First-generation dangling suffixes: b = a w with a, b distinct generators.
    for a in &code {
        for b in &code {
            if b.len() > a.len() && b.starts_with(a) {
                push(&b[a.len()..], &mut seen, &mut queue);
            }
        }
    }

    while let Some(dangling) = queue.pop_front() {
        if code.contains(dangling.as_slice()) {
            return Ok(false);
        }
        for c in &code {
            if dangling.len() > c.len() && dangling.starts_with(c) {
                push(&dangling[c.len()..], &mut seen, &mut queue);
            } else if c.len() > dangling.len() && c.starts_with(&dangling) {
                push(&c[dangling.len()..], &mut seen, &mut queue);
            }
        }
    }
    Ok(true)
}

/// All length-`n` concatenations of generators, deduplicated.
pub fn star_language(gens: &GeneratorSet, n: usize) -> BTreeSet<Word> {
    let distinct = gens.distinct();
    let mut layers: Vec<BTreeSet<Word>> = Vec::with_capacity(n + 1);
    layers.push(BTreeSet::from([Word::empty()]));
    for k in 1..=n {
        let mut layer = BTreeSet::new();
        for g in &distinct {
            if g.len() <= k {
                for prefix in &layers[k - g.len()] {
                    layer.insert(prefix.concat(g));
                }
            }
        }
        layers.push(layer);
    }
    layers.pop().unwrap_or_default()
}

/// Number of distinct length-`n` words in the star language.
///
/// Uses the recurrence `c_k = sum_t c_{k - len_t}` when the generators are
/// uniquely decodable; otherwise the language is enumerated.
pub fn count_star_language(gens: &GeneratorSet, n: usize) -> Result<u128> {
    let distinct: Vec<Word> = gens.distinct().into_iter().cloned().collect();
    let deduped = GeneratorSet::new(distinct)?;
    if !is_uniquely_decodable(&deduped)? {
        return Ok(star_language(&deduped, n).len() as u128);
    }
    let lengths = deduped.lengths();
    let mut counts = vec![0u128; n + 1];
    counts[0] = 1;
    for k in 1..=n {
        let mut total = 0u128;
        for &l in &lengths {
            if l <= k {
                total = total.checked_add(counts[k - l]).ok_or(Error::CountOverflow(k))?;
            }
        }
        counts[k] = total;
    }
    Ok(counts[n])
}
