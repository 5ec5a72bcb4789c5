//! Exhaustive maximum-code search for small lengths, and checks of the size
//! tables it produces.
//!
//! A code of length `n` is a clique in the distinguishability graph on
//! `X^n`. Words with the same window signature (the vertex at every window
//! start, with isolated vertices merged) are indistinguishable from each
//! other and distinguishable from exactly the same words, so the search runs
//! over signature classes. For a single-edge graph `G(u, v)` the signature is
//! the occurrence profile `(S_u, S_v)`.

mod clique;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::channel::{is_code, ChannelGraph, CodeSet};
use crate::error::{Error, Result};
use crate::words::Word;

use clique::BitGraph;

/// Default node budget for [`max_code_exact`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest word space the search will enumerate.
pub const MAX_WORDS: u64 = 1 << 22;

/// Window starts at which `u` and `v` occur in `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Profile {
    pub s_u: BTreeSet<usize>,
    pub s_v: BTreeSet<usize>,
}

impl Profile {
    /// Whether words with these profiles are distinguishable for `G(u, v)`.
    pub fn distinguishes(&self, other: &Profile) -> bool {
        !self.s_u.is_disjoint(&other.s_v) || !self.s_v.is_disjoint(&other.s_u)
    }
}

/// Occurrence profile of `x`; empty when `x` is shorter than `u`.
pub fn profile(x: &Word, u: &Word, v: &Word) -> Profile {
    let width = u.len();
    let mut out = Profile { s_u: BTreeSet::new(), s_v: BTreeSet::new() };
    if width == 0 || x.len() < width {
        return out;
    }
    for (i, window) in x.windows(width).enumerate() {
        if window == u.symbols() {
            out.s_u.insert(i);
        } else if window == v.symbols() {
            out.s_v.insert(i);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchStatus {
    /// `max_size` is the maximum code size.
    Exact,
    /// The budget ran out; `max_size` is the best size found.
    LowerBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Merge words with equal window signatures before searching.
    pub compress: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, compress: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub max_size: usize,
    #[serde(serialize_with = "serialize_code")]
    pub witness: CodeSet,
    /// Vertices of the searched graph (signature classes, or words when
    /// uncompressed).
    pub vertices: usize,
    pub nodes_explored: u64,
    pub status: SearchStatus,
    /// The witness is the lexicographically least optimum. False only when
    /// the budget ran out before the ordered pass finished.
    pub witness_lex_least: bool,
}

fn serialize_code<S: serde::Serializer>(code: &CodeSet, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(code.iter())
}

/// The vertices to search: one representative word per class, in
/// lexicographic order of representatives, with their adjacency.
fn build_graph(graph: &ChannelGraph, n: usize, compress: bool) -> Result<(Vec<Word>, BitGraph)> {
    let alphabet = graph.alphabet();
    let q = alphabet.size();
    let total = (q as u64).checked_pow(n as u32).filter(|&t| t <= MAX_WORDS);
    if total.is_none() {
        return Err(Error::SearchTooLarge { q, n });
    }
    let index = graph.window_index();

    if compress {
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut reps = Vec::new();
        let mut signatures = Vec::new();
        for w in alphabet.words(n) {
            let sig = index.signature(&w);
            if !seen.contains_key(&sig) {
                seen.insert(sig.clone(), reps.len());
                reps.push(w);
                signatures.push(sig);
            }
        }
        let mut bits = BitGraph::new(reps.len());
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                if index.distinguishes(&signatures[a], &signatures[b]) {
                    bits.add_edge(a, b);
                }
            }
        }
        Ok((reps, bits))
    } else {
        // direct window comparison, independent of the signature machinery
        let words: Vec<Word> = alphabet.words(n).collect();
        let width = graph.vertex_len();
        let mut bits = BitGraph::new(words.len());
        for a in 0..words.len() {
            for b in a + 1..words.len() {
                let separated = n >= width
                    && (0..=n - width).any(|i| graph.has_edge(words[a].window(i, width), words[b].window(i, width)));
                if separated {
                    bits.add_edge(a, b);
                }
            }
        }
        Ok((words, bits))
    }
}

/// Maximum size of a length-`n` code for `graph`, with signature compression.
pub fn max_code_exact(graph: &ChannelGraph, n: usize, budget: u64) -> Result<SearchResult> {
    max_code_with(graph, n, SearchOptions { budget, compress: true })
}

/// Maximum code search. A first pass finds the optimum size; a second pass
/// in lexicographic vertex order extracts the least optimal code. Both
/// passes share the node budget.
pub fn max_code_with(graph: &ChannelGraph, n: usize, options: SearchOptions) -> Result<SearchResult> {
    let (reps, bits) = build_graph(graph, n, options.compress)?;
    let first = clique::max_clique(&bits, options.budget);
    let mut nodes = first.nodes;
    let size = first.clique.len();
    let mut witness = first.clique;
    let mut lex_least = false;
    if first.complete {
        match clique::first_clique_of_size(&bits, size, options.budget.saturating_sub(nodes)) {
            Ok((found, spent)) => {
                nodes += spent;
                witness = found.expect("a clique of the optimum size exists");
                lex_least = true;
            }
            Err(spent) => nodes += spent,
        }
    }
    let code = CodeSet::with_length(n, witness.iter().map(|&i| reps[i].clone()))?;
    debug_assert!(is_code(&code, graph)?.is_valid());
    Ok(SearchResult {
        n,
        max_size: size,
        witness: code,
        vertices: reps.len(),
        nodes_explored: nodes,
        status: if first.complete { SearchStatus::Exact } else { SearchStatus::LowerBound },
        witness_lex_least: lex_least,
    })
}

fn size_at(sizes: &BTreeMap<usize, u64>, n: usize) -> Option<u64> {
    sizes.get(&n).copied().or(if n == 0 { Some(1) } else { None })
}

/// Whether `|A_{a+b}| >= |A_a| |A_b|` for every `a, b >= 1` with all three
/// lengths in the table.
pub fn superadditivity_check(sizes: &BTreeMap<usize, u64>) -> bool {
    sizes.keys().all(|&a| {
        sizes.keys().filter(|&&b| b >= a && a > 0).all(|&b| match sizes.get(&(a + b)) {
            Some(&joint) => u128::from(joint) >= u128::from(sizes[&a]) * u128::from(sizes[&b]),
            None => true,
        })
    })
}

/// Whether `|A_{n+1}| >= |A_n|` wherever both are tabulated.
pub fn monotonicity_check(sizes: &BTreeMap<usize, u64>) -> bool {
    sizes.iter().all(|(&n, &size)| sizes.get(&(n + 1)).is_none_or(|&next| next >= size))
}

/// `slack(n) = sum_o |A_{n-o}| - |A_n|` for every tabulated `n` at least the
/// largest offset. `|A_0| = 1` is implied; any other missing index is an error.
pub fn recurrence_residuals(sizes: &BTreeMap<usize, u64>, offsets: &[usize]) -> Result<Vec<(usize, i64)>> {
    let reach = offsets.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    for (&n, &size) in sizes.range(reach..) {
        let mut total: i64 = 0;
        for &o in offsets {
            let earlier = size_at(sizes, n - o).ok_or(Error::MissingIndex(n - o))?;
            total += earlier as i64;
        }
        out.push((n, total - size as i64));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_quasi_code;
    use crate::words::Alphabet;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn single(u: &str, v: &str) -> ChannelGraph {
        ChannelGraph::single_edge(Alphabet::binary(), w(u), w(v)).unwrap()
    }

    fn four_edges() -> ChannelGraph {
        let edges = [("000", "111"), ("010", "101"), ("100", "011"), ("110", "001")];
        ChannelGraph::new(Alphabet::binary(), 2, edges.iter().map(|(a, b)| (w(a), w(b)))).unwrap()
    }

    fn table(graph: &ChannelGraph, max_n: usize) -> BTreeMap<usize, u64> {
        (1..=max_n)
            .map(|n| {
                let r = max_code_exact(graph, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(r.status, SearchStatus::Exact);
                (n, r.max_size as u64)
            })
            .collect()
    }

    #[test]
    fn profile_examples() {
        let (u, v) = (w("000"), w("001"));
        let p = profile(&w("000100"), &u, &v);
        assert_eq!((p.s_u, p.s_v), (BTreeSet::from([0]), BTreeSet::from([1])));
        let p = profile(&u, &u, &v);
        assert_eq!((p.s_u, p.s_v), (BTreeSet::from([0]), BTreeSet::new()));
        assert_eq!(profile(&w("010"), &u, &v), Profile { s_u: BTreeSet::new(), s_v: BTreeSet::new() });
        assert_eq!(profile(&w("00"), &u, &v), Profile { s_u: BTreeSet::new(), s_v: BTreeSet::new() });
    }

    #[test]
    fn profiles_decide_distinguishability() {
        let (u, v) = (w("010"), w("011"));
        let g = single("010", "011");
        let words: Vec<Word> = Alphabet::binary().words(7).collect();
        for x in &words {
            for y in &words {
                let by_profile = profile(x, &u, &v).distinguishes(&profile(y, &u, &v));
                let direct = crate::channel::distinguishable(x, y, &g).unwrap().is_some();
                assert_eq!(by_profile, direct, "{x} {y}");
            }
        }
    }

    #[test]
    fn signature_classes_are_profile_classes() {
        for (u, v) in [("000", "001"), ("001", "100"), ("010", "101")] {
            let g = single(u, v);
            for n in 3..10 {
                let profiles: BTreeSet<Profile> =
                    Alphabet::binary().words(n).map(|x| profile(&x, &w(u), &w(v))).collect();
                let (reps, _) = build_graph(&g, n, true).unwrap();
                assert_eq!(reps.len(), profiles.len(), "{u} {v} {n}");
            }
        }
    }

    #[test]
    fn search_examples() {
        let r = max_code_exact(&single("000", "111"), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.max_size, 2);
        assert_eq!(r.witness, CodeSet::new([w("000"), w("111")]).unwrap());
        assert_eq!(r.status, SearchStatus::Exact);
        assert!(r.witness_lex_least);

        let r = max_code_exact(&single("000", "001"), 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.max_size, 3);
        assert_eq!(r.witness, CodeSet::new([w("0000"), w("0001"), w("0010")]).unwrap());

        assert_eq!(max_code_exact(&four_edges(), 6, DEFAULT_BUDGET).unwrap().max_size, 4);
        for n in 0..3 {
            assert_eq!(max_code_exact(&single("000", "001"), n, DEFAULT_BUDGET).unwrap().max_size, 1);
        }
    }

    #[test]
    fn compression_agrees_with_raw_search() {
        let graphs = [single("000", "001"), single("001", "100"), single("010", "011"), single("000", "111"), four_edges()];
        for g in &graphs {
            for n in 1..=8 {
                let raw = max_code_with(g, n, SearchOptions { compress: false, ..Default::default() }).unwrap();
                let packed = max_code_exact(g, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(raw.max_size, packed.max_size, "{g} n={n}");
                // least optima coincide: the raw least optimum uses class representatives
                assert_eq!(raw.witness, packed.witness, "{g} n={n}");
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_a_lower_bound() {
        let r = max_code_exact(&single("000", "001"), 12, 0).unwrap();
        assert_eq!(r.status, SearchStatus::LowerBound);
        assert!(!r.witness_lex_least);
        assert!(r.max_size >= 1);
        assert!(is_code(&r.witness, &single("000", "001")).unwrap().is_valid());
    }

    #[test]
    fn refuses_huge_spaces() {
        assert!(matches!(max_code_exact(&single("000", "001"), 40, 10), Err(Error::SearchTooLarge { .. })));
    }

    #[test]
    fn constructions_never_beat_the_oracle() {
        let (u, v) = (w("000"), w("001"));
        let g = single("000", "001");
        for n in 1..=10 {
            let best = max_code_exact(&g, n, DEFAULT_BUDGET).unwrap().max_size;
            // no common prefix here, so body length equals total length
            assert!(build_quasi_code(&u, &v, n).unwrap().len() <= best);
        }
    }

    #[test]
    fn table_checks() {
        let case1 = table(&single("000", "001"), 10);
        assert!(superadditivity_check(&case1));
        assert!(monotonicity_check(&case1));
        assert!(recurrence_residuals(&case1, &[1, 3]).unwrap().iter().all(|&(_, s)| s >= 0));

        let four = table(&four_edges(), 9);
        assert!(recurrence_residuals(&four, &[3, 3]).unwrap().iter().all(|&(_, s)| s >= 0));

        let mut corrupted = case1.clone();
        corrupted.insert(8, 1000);
        assert!(!superadditivity_check(&corrupted) || !monotonicity_check(&corrupted));
        assert!(recurrence_residuals(&corrupted, &[1, 3]).unwrap().iter().any(|&(_, s)| s < 0));

        let mut shrunk = case1.clone();
        shrunk.insert(10, 1);
        assert!(!superadditivity_check(&shrunk));
        assert!(superadditivity_check(&BTreeMap::from([(5, 3)])));
    }

    #[test]
    fn residuals_need_every_index() {
        let sizes = BTreeMap::from([(1, 1), (2, 1), (4, 3)]);
        assert_eq!(recurrence_residuals(&sizes, &[1, 3]), Err(Error::MissingIndex(3)));
        // index 0 is implied
        let sizes = BTreeMap::from([(1, 1), (2, 1), (3, 2)]);
        assert_eq!(recurrence_residuals(&sizes, &[1, 3]).unwrap(), vec![(3, 0)]);
    }
}
