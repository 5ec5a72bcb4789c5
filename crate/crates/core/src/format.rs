//! File formats.
//!
//! Graphs are JSON objects `{"q": 2, "m": 2, "edges": [["000", "001"]]}`; `q`
//! may be omitted and is then inferred as one more than the largest symbol
//! (at least 2). Word lists hold one word per line; blank lines and anything
//! after `#` are ignored.

use serde::{Deserialize, Serialize};

use crate::channel::{ChannelGraph, CodeSet};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub m: usize,
    pub edges: Vec<(Word, Word)>,
}

/// `1 + max symbol`, but never below 2.
pub fn infer_alphabet<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Result<Alphabet> {
    let max = words.into_iter().filter_map(|w| w.max_symbol()).max().unwrap_or(0);
    Alphabet::new((max as usize + 1).max(2))
}

impl GraphFile {
    pub fn into_graph(self) -> Result<ChannelGraph> {
        let alphabet = match self.q {
            Some(q) => Alphabet::new(q)?,
            None => infer_alphabet(self.edges.iter().flat_map(|(a, b)| [a, b]))?,
        };
        ChannelGraph::new(alphabet, self.m, self.edges)
    }

    pub fn from_graph(graph: &ChannelGraph) -> Self {
        Self { q: Some(graph.alphabet().size()), m: graph.memory(), edges: graph.edges().iter().cloned().collect() }
    }
}

pub fn parse_graph(text: &str) -> Result<ChannelGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph file: {e}")))?;
    file.into_graph()
}

pub fn render_graph(graph: &ChannelGraph) -> String {
    serde_json::to_string(&GraphFile::from_graph(graph)).expect("graph serializes")
}

pub fn parse_word_list(text: &str) -> Result<Vec<Word>> {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty())
        .map(str::parse)
        .collect()
}

/// Parses a code file. An empty file is the empty code of length 0.
pub fn parse_code(text: &str) -> Result<CodeSet> {
    CodeSet::new(parse_word_list(text)?)
}

/// One word per line, preceded by `# ` comment lines.
pub fn render_word_list<'a, I: IntoIterator<Item = &'a Word>>(comments: &[String], words: I) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for w in words {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}
