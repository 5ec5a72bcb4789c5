//! Channel graphs over `X^{m+1}`, distinguishability of sequences, code
//! validation, and the reversal/permutation symmetries under which capacity
//! is invariant.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{self, Alphabet, Permutation, Word};

/// A channel with `memory` memories: vertices are words of length
/// `memory + 1`, edges are unordered pairs of distinguishable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelGraph {
    alphabet: Alphabet,
    memory: usize,
    edges: BTreeSet<(Word, Word)>,
}

impl ChannelGraph {
    pub fn new<I>(alphabet: Alphabet, memory: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Word)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for w in [&a, &b] {
                if w.len() != memory + 1 {
                    return Err(Error::VertexLength {
                        word: w.to_string(),
                        len: w.len(),
                        expected: memory + 1,
                    });
                }
                alphabet.check(w)?;
            }
            if a == b {
                return Err(Error::SelfLoop(a.to_string()));
            }
            set.insert(if a < b { (a, b) } else { (b, a) });
        }
        Ok(Self { alphabet, memory, edges: set })
    }

    pub fn single_edge(alphabet: Alphabet, u: Word, v: Word) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
        }
        if u.is_empty() {
            return Err(Error::EmptyWord);
        }
        let memory = u.len() - 1;
        Self::new(alphabet, memory, [(u, v)])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn vertex_len(&self) -> usize {
        self.memory + 1
    }

    /// Edges as `(a, b)` pairs with `a < b`, in lexicographic order.
    pub fn edges(&self) -> &BTreeSet<(Word, Word)> {
        &self.edges
    }

    pub fn has_edge(&self, a: &[u8], b: &[u8]) -> bool {
        self.edges.iter().any(|(x, y)| {
            (x.symbols() == a && y.symbols() == b) || (x.symbols() == b && y.symbols() == a)
        })
    }

    pub fn degree(&self, vertex: &[u8]) -> usize {
        self.edges
            .iter()
            .filter(|(x, y)| x.symbols() == vertex || y.symbols() == vertex)
            .count()
    }

    /// The only edge, when there is exactly one.
    pub fn as_single_edge(&self) -> Option<SingleEdgeGraph> {
        match self.edges.iter().collect::<Vec<_>>().as_slice() {
            [(u, v)] => Some(SingleEdgeGraph {
                alphabet: self.alphabet,
                u: u.clone(),
                v: v.clone(),
            }),
            _ => None,
        }
    }

    fn same_parameters(&self, other: &ChannelGraph) -> Result<()> {
        if self.alphabet != other.alphabet || self.memory != other.memory {
            return Err(Error::ParameterMismatch {
                q1: self.alphabet.size(),
                m1: self.memory,
                q2: other.alphabet.size(),
                m2: other.memory,
            });
        }
        Ok(())
    }

    pub(crate) fn window_index(&self) -> WindowIndex {
        WindowIndex::new(self)
    }
}

impl fmt::Display for ChannelGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
        write!(f, "G[q={}, m={}; {}]", self.alphabet.size(), self.memory, edges.join(" "))
    }
}

/// The graph `G(u, v)` whose only edge is `{u, v}`. Endpoints are stored
/// with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingleEdgeGraph {
    alphabet: Alphabet,
    u: Word,
    v: Word,
}

impl SingleEdgeGraph {
    pub fn new(alphabet: Alphabet, u: Word, v: Word) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
        }
        if u.is_empty() {
            return Err(Error::EmptyWord);
        }
        if u == v {
            return Err(Error::IdenticalEndpoints);
        }
        alphabet.check(&u)?;
        alphabet.check(&v)?;
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        Ok(Self { alphabet, u, v })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn memory(&self) -> usize {
        self.u.len() - 1
    }

    pub fn u(&self) -> &Word {
        &self.u
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    pub fn to_graph(&self) -> ChannelGraph {
        ChannelGraph {
            alphabet: self.alphabet,
            memory: self.memory(),
            edges: BTreeSet::from([(self.u.clone(), self.v.clone())]),
        }
    }

    pub fn transform(&self, t: &Transform) -> Result<SingleEdgeGraph> {
        SingleEdgeGraph::new(self.alphabet, t.apply(&self.u)?, t.apply(&self.v)?)
    }
}

impl fmt::Display for SingleEdgeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.u, self.v)
    }
}

/// A set of distinct words of a common length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    n: usize,
    words: BTreeSet<Word>,
}

impl CodeSet {
    /// Builds a code set, rejecting duplicates and mixed lengths. An empty
    /// list gives an empty set of length 0.
    pub fn new<I: IntoIterator<Item = Word>>(words: I) -> Result<Self> {
        let mut iter = words.into_iter().peekable();
        let n = iter.peek().map_or(0, |w| w.len());
        Self::with_length(n, iter)
    }

    pub fn with_length<I: IntoIterator<Item = Word>>(n: usize, words: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for w in words {
            if w.len() != n {
                return Err(Error::MixedLengths { first: n, other: w.len() });
            }
            if let Some(dup) = set.replace(w) {
                return Err(Error::DuplicateWord(dup.to_string()));
            }
        }
        Ok(Self { n, words: set })
    }

    pub(crate) fn from_set(n: usize, words: BTreeSet<Word>) -> Self {
        debug_assert!(words.iter().all(|w| w.len() == n));
        Self { n, words }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Common word length.
    pub fn word_len(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn into_words(self) -> BTreeSet<Word> {
        self.words
    }

    /// Applies `t` to every word.
    pub fn transform(&self, t: &Transform) -> Result<CodeSet> {
        let words = self.words.iter().map(|w| t.apply(w)).collect::<Result<BTreeSet<_>>>()?;
        Ok(Self::from_set(self.n, words))
    }
}

/// Outcome of [`is_code`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeCheck {
    Valid,
    /// The lexicographically first indistinguishable pair.
    Violation(Word, Word),
}

impl CodeCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CodeCheck::Valid)
    }
}

/// Smallest window start `i` at which the length-`m+1` windows of `x` and
/// `y` form an edge of `graph`, or `None` if the words are indistinguishable.
pub fn distinguishable(x: &Word, y: &Word, graph: &ChannelGraph) -> Result<Option<usize>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    let width = graph.vertex_len();
    if x.len() < width {
        return Ok(None);
    }
    Ok((0..=x.len() - width).find(|&i| graph.has_edge(x.window(i, width), y.window(i, width))))
}

/// Checks that the words of `code` are pairwise distinguishable for `graph`.
pub fn is_code(code: &CodeSet, graph: &ChannelGraph) -> Result<CodeCheck> {
    for w in code.iter() {
        graph.alphabet().check(w)?;
    }
    let index = graph.window_index();
    let words: Vec<&Word> = code.iter().collect();
    let signatures: Vec<Vec<u32>> = words.iter().map(|w| index.signature(w)).collect();
    let violation = (0..words.len()).into_par_iter().find_map_first(|i| {
        ((i + 1)..words.len())
            .find(|&j| !index.distinguishes(&signatures[i], &signatures[j]))
            .map(|j| (i, j))
    });
    Ok(match violation {
        Some((i, j)) => CodeCheck::Violation(words[i].clone(), words[j].clone()),
        None => CodeCheck::Valid,
    })
}

/// Dense window lookup: every non-isolated vertex gets a small id, and a
/// word is summarized by the ids of its windows ([`ISOLATED`] for degree-zero
/// windows). Two words are distinguishable iff some position pairs two
/// adjacent ids.
pub(crate) struct WindowIndex {
    q: usize,
    width: usize,
    ids: BTreeMap<u64, u32>,
    adjacent: HashSet<(u32, u32)>,
}

pub(crate) const ISOLATED: u32 = u32::MAX;

impl WindowIndex {
    fn new(graph: &ChannelGraph) -> Self {
        let q = graph.alphabet().size();
        let mut ids = BTreeMap::new();
        for (a, b) in graph.edges() {
            for w in [a, b] {
                let next = ids.len() as u32;
                ids.entry(w.index(q)).or_insert(next);
            }
        }
        let adjacent = graph
            .edges()
            .iter()
            .flat_map(|(a, b)| {
                let (ia, ib) = (ids[&a.index(q)], ids[&b.index(q)]);
                [(ia, ib), (ib, ia)]
            })
            .collect();
        Self { q, width: graph.vertex_len(), ids, adjacent }
    }

    pub(crate) fn signature(&self, w: &[u8]) -> Vec<u32> {
        if w.len() < self.width {
            return Vec::new();
        }
        (0..=w.len() - self.width)
            .map(|i| {
                let key = w[i..i + self.width]
                    .iter()
                    .fold(0u64, |acc, &s| acc * self.q as u64 + u64::from(s));
                self.ids.get(&key).copied().unwrap_or(ISOLATED)
            })
            .collect()
    }

    pub(crate) fn adjacent(&self, a: u32, b: u32) -> bool {
        a != ISOLATED && b != ISOLATED && self.adjacent.contains(&(a, b))
    }

    pub(crate) fn distinguishes(&self, x: &[u32], y: &[u32]) -> bool {
        x.iter().zip(y).any(|(&a, &b)| self.adjacent(a, b))
    }
}

/// An interchange map: optional reversal followed by a symbol permutation.
/// Reversal and permutation commute, so the order is immaterial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transform {
    pub perm: Permutation,
    pub reversed: bool,
}

impl Transform {
    pub fn identity(q: usize) -> Self {
        Self { perm: Permutation::identity(q), reversed: false }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let w = if self.reversed { words::reverse(w) } else { w.clone() };
        words::permute(&w, &self.perm)
    }

    pub fn apply_graph(&self, graph: &ChannelGraph) -> Result<ChannelGraph> {
        let edges = graph
            .edges()
            .iter()
            .map(|(a, b)| Ok((self.apply(a)?, self.apply(b)?)))
            .collect::<Result<Vec<_>>>()?;
        ChannelGraph::new(graph.alphabet(), graph.memory(), edges)
    }

    /// All `2 q!` transforms; plain before reversed, permutations in
    /// lexicographic order, so the identity comes first.
    pub fn all(q: usize) -> Vec<Transform> {
        let perms = Permutation::all(q);
        [false, true]
            .into_iter()
            .flat_map(|reversed| perms.iter().map(move |perm| Transform { perm: perm.clone(), reversed }))
            .collect()
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi={}{}", self.perm, if self.reversed { ", reversed" } else { "" })
    }
}

impl Serialize for Transform {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Transform", 2)?;
        s.serialize_field("perm", &self.perm.to_string())?;
        s.serialize_field("reversed", &self.reversed)?;
        s.end()
    }
}

/// Reverses every vertex of every edge.
pub fn t_reverse(graph: &ChannelGraph) -> ChannelGraph {
    let t = Transform { perm: Permutation::identity(graph.alphabet().size()), reversed: true };
    t.apply_graph(graph).expect("reversal preserves validity")
}

pub fn t_permute(graph: &ChannelGraph, pi: &Permutation) -> Result<ChannelGraph> {
    if pi.size() != graph.alphabet().size() {
        return Err(Error::NotAPermutation { q: graph.alphabet().size() });
    }
    Transform { perm: pi.clone(), reversed: false }.apply_graph(graph)
}

/// Searches the `2 q!` interchange maps for one taking `g1` to `g2`.
pub fn interchangeable(g1: &SingleEdgeGraph, g2: &SingleEdgeGraph) -> Result<Option<Transform>> {
    if g1.alphabet() != g2.alphabet() || g1.memory() != g2.memory() {
        return Err(Error::ParameterMismatch {
            q1: g1.alphabet().size(),
            m1: g1.memory(),
            q2: g2.alphabet().size(),
            m2: g2.memory(),
        });
    }
    for t in Transform::all(g1.alphabet().size()) {
        if &g1.transform(&t)? == g2 {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Same as [`interchangeable`] for arbitrary graphs.
pub fn interchangeable_graphs(g1: &ChannelGraph, g2: &ChannelGraph) -> Result<Option<Transform>> {
    g1.same_parameters(g2)?;
    for t in Transform::all(g1.alphabet().size()) {
        if &t.apply_graph(g1)? == g2 {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Every one-edge graph over `q` symbols with memory `m`, ordered by `(u, v)`.
pub fn enumerate_one_edge_graphs(q: usize, m: usize) -> Result<Vec<SingleEdgeGraph>> {
    let alphabet = Alphabet::new(q)?;
    let vertices: Vec<Word> = alphabet.words(m + 1).collect();
    let mut out = Vec::with_capacity(vertices.len() * vertices.len().saturating_sub(1) / 2);
    for (i, u) in vertices.iter().enumerate() {
        for v in &vertices[i + 1..] {
            out.push(SingleEdgeGraph { alphabet, u: u.clone(), v: v.clone() });
        }
    }
    Ok(out)
}

/// A maximal set of pairwise interchangeable one-edge graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryClass {
    pub canonical: SingleEdgeGraph,
    pub members: Vec<(SingleEdgeGraph, Transform)>,
}

impl SymmetryClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &SingleEdgeGraph) -> bool {
        self.members.iter().any(|(m, _)| m == g)
    }

    pub fn graphs(&self) -> impl Iterator<Item = &SingleEdgeGraph> {
        self.members.iter().map(|(g, _)| g)
    }
}

/// Partitions `graphs` into interchangeability classes. The canonical member
/// of each class is its lexicographically least graph; classes are ordered by
/// canonical member.
pub fn classify_interchangeable(graphs: &[SingleEdgeGraph]) -> Result<Vec<SymmetryClass>> {
    let mut sorted: Vec<SingleEdgeGraph> = graphs.to_vec();
    sorted.sort();
    sorted.dedup();
    if let Some(first) = sorted.first() {
        for g in &sorted[1..] {
            if g.alphabet() != first.alphabet() || g.memory() != first.memory() {
                return Err(Error::ParameterMismatch {
                    q1: first.alphabet().size(),
                    m1: first.memory(),
                    q2: g.alphabet().size(),
                    m2: g.memory(),
                });
            }
        }
    }
    let present: BTreeSet<&SingleEdgeGraph> = sorted.iter().collect();
    let transforms = sorted.first().map(|g| Transform::all(g.alphabet().size())).unwrap_or_default();
    let mut assigned: BTreeSet<SingleEdgeGraph> = BTreeSet::new();
    let mut classes = Vec::new();
    for g in &sorted {
        if assigned.contains(g) {
            continue;
        }
        let mut members = Vec::new();
        for t in &transforms {
            let image = g.transform(t)?;
            if present.contains(&image) && !assigned.contains(&image) {
                assigned.insert(image.clone());
                members.push((image, t.clone()));
            }
        }
        members.sort_by(|a, b| a.0.cmp(&b.0));
        classes.push(SymmetryClass { canonical: g.clone(), members });
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn g(u: &str, v: &str) -> ChannelGraph {
        ChannelGraph::single_edge(Alphabet::binary(), w(u), w(v)).unwrap()
    }

    fn seg(u: &str, v: &str) -> SingleEdgeGraph {
        SingleEdgeGraph::new(Alphabet::binary(), w(u), w(v)).unwrap()
    }

    fn code(words: &[&str]) -> CodeSet {
        CodeSet::new(words.iter().map(|s| w(s))).unwrap()
    }

    #[test]
    fn distinguishable_examples() {
        let graph = g("000", "001");
        assert_eq!(distinguishable(&w("000"), &w("001"), &graph).unwrap(), Some(0));
        assert_eq!(distinguishable(&w("0000"), &w("0001"), &graph).unwrap(), Some(1));
        assert_eq!(distinguishable(&w("010"), &w("001"), &graph).unwrap(), None);
        assert_eq!(distinguishable(&w("00"), &w("01"), &graph).unwrap(), None);
        assert!(matches!(
            distinguishable(&w("00"), &w("001"), &graph),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn is_code_examples() {
        let graph = g("000", "111");
        assert!(is_code(&code(&["000000", "000111", "111000", "111111"]), &graph).unwrap().is_valid());
        assert_eq!(
            is_code(&code(&["000", "010"]), &g("000", "001")).unwrap(),
            CodeCheck::Violation(w("000"), w("010"))
        );
        assert!(is_code(&code(&["0101"]), &graph).unwrap().is_valid());
        assert!(is_code(&code(&[]), &graph).unwrap().is_valid());
    }

    #[test]
    fn code_set_rejects_bad_input() {
        assert!(matches!(CodeSet::new([w("00"), w("000")]), Err(Error::MixedLengths { .. })));
        assert!(matches!(CodeSet::new([w("00"), w("00")]), Err(Error::DuplicateWord(_))));
    }

    #[test]
    fn graph_validation() {
        let bin = Alphabet::binary();
        assert!(matches!(
            ChannelGraph::new(bin, 2, [(w("000"), w("00"))]),
            Err(Error::VertexLength { .. })
        ));
        assert!(matches!(ChannelGraph::new(bin, 2, [(w("000"), w("000"))]), Err(Error::SelfLoop(_))));
        assert!(matches!(
            ChannelGraph::new(bin, 2, [(w("000"), w("002"))]),
            Err(Error::SymbolOutOfRange { .. })
        ));
        let dedup = ChannelGraph::new(bin, 2, [(w("000"), w("001")), (w("001"), w("000"))]).unwrap();
        assert_eq!(dedup.edges().len(), 1);
    }

    #[test]
    fn graph_transforms() {
        assert_eq!(t_reverse(&g("000", "100")), g("000", "001"));
        assert_eq!(t_permute(&g("000", "001"), &Permutation::flip(2)).unwrap(), g("111", "110"));
        assert_eq!(t_permute(&g("010", "011"), &Permutation::identity(2)).unwrap(), g("010", "011"));
        assert!(t_permute(&g("010", "011"), &Permutation::identity(3)).is_err());
    }

    #[test]
    fn interchangeable_examples() {
        let t = interchangeable(&seg("000", "001"), &seg("111", "110")).unwrap().unwrap();
        assert_eq!(t, Transform { perm: Permutation::flip(2), reversed: false });
        assert_eq!(interchangeable(&seg("000", "001"), &seg("000", "010")).unwrap(), None);
        let same = interchangeable(&seg("010", "011"), &seg("010", "011")).unwrap().unwrap();
        assert_eq!(same, Transform::identity(2));
        let other_m = SingleEdgeGraph::new(Alphabet::binary(), w("00"), w("01")).unwrap();
        assert!(interchangeable(&seg("000", "001"), &other_m).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_one_edge_graphs(2, 2).unwrap().len(), 28);
        assert_eq!(enumerate_one_edge_graphs(2, 1).unwrap().len(), 6);
        assert_eq!(enumerate_one_edge_graphs(2, 0).unwrap().len(), 1);
        assert_eq!(enumerate_one_edge_graphs(3, 1).unwrap().len(), 36);
    }

    #[test]
    fn classify_binary_memory_two() {
        let classes = classify_interchangeable(&enumerate_one_edge_graphs(2, 2).unwrap()).unwrap();
        assert_eq!(classes.len(), 11);
        let mut sizes: Vec<usize> = classes.iter().map(SymmetryClass::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2, 2, 2, 4, 4, 4, 4]);
        for class in &classes {
            assert_eq!(class.canonical, *class.graphs().min().unwrap());
            for (member, t) in &class.members {
                assert_eq!(&class.canonical.transform(t).unwrap(), member);
            }
        }
    }

    #[test]
    fn classify_binary_memory_one() {
        // Orbits by hand: {00,01} ~ {00,10} ~ {11,10} ~ {11,01}; {00,11}; {01,10}.
        let classes = classify_interchangeable(&enumerate_one_edge_graphs(2, 1).unwrap()).unwrap();
        let summary: Vec<(String, usize)> =
            classes.iter().map(|c| (c.canonical.to_string(), c.len())).collect();
        assert_eq!(
            summary,
            vec![("G(00,01)".to_string(), 4), ("G(00,11)".to_string(), 1), ("G(01,10)".to_string(), 1)]
        );
        assert_eq!(classify_interchangeable(&[seg("000", "001")]).unwrap().len(), 1);
    }

    #[test]
    fn interchangeability_is_an_equivalence() {
        let graphs = enumerate_one_edge_graphs(2, 2).unwrap();
        let related = |a: &SingleEdgeGraph, b: &SingleEdgeGraph| interchangeable(a, b).unwrap().is_some();
        for a in &graphs {
            assert!(related(a, a));
            for b in &graphs {
                assert_eq!(related(a, b), related(b, a));
                if related(a, b) {
                    for c in &graphs {
                        if related(b, c) {
                            assert!(related(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn short_words_never_form_a_code_of_two() {
        let graph = g("000", "001");
        for n in 0..3 {
            let words: Vec<Word> = Alphabet::binary().words(n).take(2).collect();
            if words.len() == 2 {
                assert!(!is_code(&CodeSet::new(words).unwrap(), &graph).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn block_codes_of_the_edge_are_codes() {
        for sg in enumerate_one_edge_graphs(2, 2).unwrap() {
            let graph = sg.to_graph();
            let mut layer = vec![Word::empty()];
            for _k in 1..=4 {
                layer = layer
                    .iter()
                    .flat_map(|p| [p.concat(sg.u()), p.concat(sg.v())])
                    .collect();
                let code = CodeSet::new(layer.clone()).unwrap();
                assert!(is_code(&code, &graph).unwrap().is_valid(), "{sg}");
            }
        }
    }

    #[test]
    fn codes_map_to_codes_under_interchange() {
        let sg = seg("000", "011");
        let graph = sg.to_graph();
        let block = code(&["000000", "000011", "011000", "011011"]);
        assert!(is_code(&block, &graph).unwrap().is_valid());
        for t in Transform::all(2) {
            let image = t.apply_graph(&graph).unwrap();
            assert!(is_code(&block.transform(&t).unwrap(), &image).unwrap().is_valid());
        }
    }
}
