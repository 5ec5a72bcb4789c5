use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;

use zecap::channel::{classify_interchangeable, enumerate_one_edge_graphs};
use zecap::construct::{
    best_core_pair, build_quasi_code, capacity_if_uniform, core_pair_candidates, is_uniquely_decodable,
    table1_binary_m2, BoundStatus, GeneratorSet, Table1Report,
};
use zecap::format::{infer_alphabet, parse_code, parse_graph, parse_word_list, render_word_list};
use zecap::oracle::{max_code_with, SearchOptions, SearchResult};
use zecap::report::serialize_fixed;
use zecap::{is_code, Alphabet, ChannelGraph, CodeCheck, SingleEdgeGraph, Transform, Word};

use crate::output::{join, Format, Report};
use crate::Command;

/// Failures that stop a command before it produces a verdict (exit 1).
#[derive(Debug)]
pub enum CliError {
    Read { path: PathBuf, source: std::io::Error },
    Write { path: PathBuf, source: std::io::Error },
    Input { path: PathBuf, source: zecap::Error },
    Invalid(zecap::Error),
    Argument(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Read { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            CliError::Write { path, source } => write!(f, "cannot write {}: {source}", path.display()),
            CliError::Input { path, source } => write!(f, "invalid input in {}: {source}", path.display()),
            CliError::Invalid(source) => write!(f, "invalid arguments: {source}"),
            CliError::Argument(reason) => write!(f, "invalid arguments: {reason}"),
        }
    }
}

impl From<zecap::Error> for CliError {
    fn from(e: zecap::Error) -> Self {
        CliError::Invalid(e)
    }
}

/// Rendered report plus, when a check failed, the reason (exit 2).
pub struct Outcome {
    pub text: String,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, failure: None }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn in_file<T>(path: &Path, result: zecap::Result<T>) -> Result<T, CliError> {
    result.map_err(|source| CliError::Input { path: path.to_path_buf(), source })
}

fn edge(u: &Word, v: &Word, q: Option<usize>) -> Result<SingleEdgeGraph, CliError> {
    let alphabet = match q {
        Some(q) => Alphabet::new(q)?,
        None => infer_alphabet([u, v])?,
    };
    Ok(SingleEdgeGraph::new(alphabet, u.clone(), v.clone())?)
}

pub fn run(command: &Command, format: Format) -> Result<Outcome, CliError> {
    match command {
        Command::Bound { u, v, q } => bound(&edge(u, v, *q)?).map(|r| Outcome::ok(r.render(format))),
        Command::Classify { q, m } => classify(*q, *m).map(|r| Outcome::ok(r.render(format))),
        Command::Construct { u, v, n, q, out } => construct(&edge(u, v, *q)?, *n, out.as_deref(), format),
        Command::Search { graph, n, budget } => search(graph, *n, *budget).map(|r| Outcome::ok(r.render(format))),
        Command::Verify { graph, code } => verify(graph, code, format),
        Command::Rate { generators } => rate(generators, format),
        Command::Table1 => Ok(Outcome::ok(table1(format)?)),
    }
}

#[derive(Serialize)]
struct Orientation {
    reversed: bool,
    u_v: Word,
    v_u: Word,
    #[serde(serialize_with = "serialize_fixed")]
    rate_bits: f64,
}

#[derive(Serialize)]
struct BoundReport {
    graph: String,
    q: usize,
    m: usize,
    reversed: bool,
    pre: Word,
    u_v: Word,
    v_u: Word,
    len_uv: usize,
    len_vu: usize,
    #[serde(serialize_with = "serialize_fixed")]
    root: f64,
    #[serde(serialize_with = "serialize_fixed")]
    rate_bits: f64,
    status: BoundStatus,
    orientations: Vec<Orientation>,
}

impl Report for BoundReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["graph", "reversed", "pre", "u_v", "v_u", "len_uv", "len_vu", "root", "rate_bits", "status"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.graph.clone(),
            self.reversed.to_string(),
            self.pre.to_string(),
            self.u_v.to_string(),
            self.v_u.to_string(),
            self.len_uv.to_string(),
            self.len_vu.to_string(),
            zecap::report::fixed(self.root),
            zecap::report::fixed(self.rate_bits),
            status_str(self.status).to_string(),
        ]]
    }
}

fn status_str(status: BoundStatus) -> &'static str {
    match status {
        BoundStatus::Exact => "EXACT",
        BoundStatus::LowerBound => "LOWER_BOUND",
    }
}

fn bound(g: &SingleEdgeGraph) -> Result<BoundReport, CliError> {
    let (pair, rate) = best_core_pair(g.u(), g.v())?;
    let status = match capacity_if_uniform(g.u(), g.v())? {
        Some(_) => BoundStatus::Exact,
        None => BoundStatus::LowerBound,
    };
    let orientations = core_pair_candidates(g.u(), g.v())?
        .into_iter()
        .map(|p| {
            let rate_bits = p.rate()?.rate;
            Ok(Orientation { reversed: p.reversed, u_v: p.u_v, v_u: p.v_u, rate_bits })
        })
        .collect::<zecap::Result<Vec<_>>>()?;
    let (len_uv, len_vu) = pair.lengths();
    Ok(BoundReport {
        graph: g.to_string(),
        q: g.alphabet().size(),
        m: g.memory(),
        reversed: pair.reversed,
        pre: pair.pre,
        u_v: pair.u_v,
        v_u: pair.v_u,
        len_uv,
        len_vu,
        root: rate.root,
        rate_bits: rate.rate,
        status,
        orientations,
    })
}

#[derive(Serialize)]
struct Member {
    graph: String,
    transform: Transform,
}

#[derive(Serialize)]
struct Class {
    canonical: String,
    size: usize,
    members: Vec<Member>,
    #[serde(serialize_with = "serialize_fixed")]
    bound_bits: f64,
    status: BoundStatus,
}

#[derive(Serialize)]
struct ClassifyReport {
    q: usize,
    m: usize,
    graph_count: usize,
    class_count: usize,
    classes: Vec<Class>,
}

impl Report for ClassifyReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["canonical", "size", "members", "bound_bits", "status"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.classes
            .iter()
            .map(|c| {
                vec![
                    c.canonical.clone(),
                    c.size.to_string(),
                    join(c.members.iter().map(|m| &m.graph)),
                    zecap::report::fixed(c.bound_bits),
                    status_str(c.status).to_string(),
                ]
            })
            .collect()
    }
}

fn classify(q: usize, m: usize) -> Result<ClassifyReport, CliError> {
    let graphs = enumerate_one_edge_graphs(q, m)?;
    let classes = classify_interchangeable(&graphs)?
        .into_iter()
        .map(|class| {
            let b = bound(&class.canonical)?;
            Ok(Class {
                canonical: class.canonical.to_string(),
                size: class.len(),
                members: class.members.into_iter().map(|(g, t)| Member { graph: g.to_string(), transform: t }).collect(),
                bound_bits: b.rate_bits,
                status: b.status,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(ClassifyReport { q, m, graph_count: graphs.len(), class_count: classes.len(), classes })
}

#[derive(Serialize)]
struct ConstructReport {
    graph: String,
    q: usize,
    m: usize,
    n: usize,
    size: usize,
    #[serde(serialize_with = "serialize_fixed")]
    bound_bits: f64,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<(Word, Word)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    words: Option<Vec<Word>>,
}

impl Report for ConstructReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["graph", "n", "size", "bound_bits", "valid", "words"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.graph.clone(),
            self.n.to_string(),
            self.size.to_string(),
            zecap::report::fixed(self.bound_bits),
            self.valid.to_string(),
            self.words.as_ref().map(join).or_else(|| self.out.clone()).unwrap_or_default(),
        ]]
    }
}

/// `n` is the length of the emitted words, so the star-language body has
/// length `n` minus the common prefix.
fn construct(g: &SingleEdgeGraph, n: usize, out: Option<&Path>, format: Format) -> Result<Outcome, CliError> {
    let (pair, rate) = best_core_pair(g.u(), g.v())?;
    let body = n.checked_sub(pair.common_len()).ok_or_else(|| {
        CliError::Argument(format!("--n {n} is shorter than the common prefix {} the code words end with", pair.pre))
    })?;
    let code = build_quasi_code(g.u(), g.v(), body)?;
    let violation = match is_code(&code, &g.to_graph())? {
        CodeCheck::Valid => None,
        CodeCheck::Violation(x, y) => Some((x, y)),
    };
    if let Some(path) = out {
        let comments = vec![
            format!("quasi 2-code for {g}, word length {n}, {} words", code.len()),
            format!("core pair {} {}, common prefix {:?}", pair.u_v, pair.v_u, pair.pre.to_string()),
        ];
        std::fs::write(path, render_word_list(&comments, code.iter()))
            .map_err(|source| CliError::Write { path: path.to_path_buf(), source })?;
    }
    let report = ConstructReport {
        graph: g.to_string(),
        q: g.alphabet().size(),
        m: g.memory(),
        n,
        size: code.len(),
        bound_bits: rate.rate,
        valid: violation.is_none(),
        violation: violation.clone(),
        out: out.map(|p| p.display().to_string()),
        words: out.is_none().then(|| code.iter().cloned().collect()),
    };
    let failure = violation.map(|(x, y)| format!("constructed words {x} and {y} are confusable"));
    Ok(Outcome { text: report.render(format), failure })
}

#[derive(Serialize)]
struct SearchReport {
    graph: String,
    q: usize,
    m: usize,
    #[serde(flatten)]
    result: SearchResult,
}

impl Report for SearchReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["graph", "n", "max_size", "status", "witness_lex_least", "vertices", "nodes_explored", "witness"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let r = &self.result;
        let status = serde_json::to_value(r.status).expect("status serializes");
        vec![vec![
            self.graph.clone(),
            r.n.to_string(),
            r.max_size.to_string(),
            status.as_str().unwrap_or_default().to_string(),
            r.witness_lex_least.to_string(),
            r.vertices.to_string(),
            r.nodes_explored.to_string(),
            join(r.witness.iter()),
        ]]
    }
}

fn load_graph(path: &Path) -> Result<ChannelGraph, CliError> {
    in_file(path, parse_graph(&read(path)?))
}

fn search(path: &Path, n: usize, budget: u64) -> Result<SearchReport, CliError> {
    let graph = load_graph(path)?;
    let result = max_code_with(&graph, n, SearchOptions { budget, ..SearchOptions::default() })?;
    Ok(SearchReport { graph: graph.to_string(), q: graph.alphabet().size(), m: graph.memory(), result })
}

#[derive(Serialize)]
struct VerifyReport {
    graph: String,
    q: usize,
    m: usize,
    word_len: usize,
    size: usize,
    valid: bool,
    violation: Option<(Word, Word)>,
}

impl Report for VerifyReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["graph", "word_len", "size", "valid", "violation"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.graph.clone(),
            self.word_len.to_string(),
            self.size.to_string(),
            self.valid.to_string(),
            self.violation.as_ref().map(|(x, y)| format!("{x} {y}")).unwrap_or_default(),
        ]]
    }
}

fn verify(graph_path: &Path, code_path: &Path, format: Format) -> Result<Outcome, CliError> {
    let graph = load_graph(graph_path)?;
    let code = in_file(code_path, parse_code(&read(code_path)?))?;
    if code.len() > 1 && code.word_len() < graph.vertex_len() {
        return Err(CliError::Input {
            path: code_path.to_path_buf(),
            source: zecap::Error::LengthMismatch { left: code.word_len(), right: graph.vertex_len() },
        });
    }
    let check = in_file(code_path, is_code(&code, &graph))?;
    let violation = match check {
        CodeCheck::Valid => None,
        CodeCheck::Violation(x, y) => Some((x, y)),
    };
    let report = VerifyReport {
        graph: graph.to_string(),
        q: graph.alphabet().size(),
        m: graph.memory(),
        word_len: code.word_len(),
        size: code.len(),
        valid: violation.is_none(),
        violation: violation.clone(),
    };
    let failure = violation.map(|(x, y)| format!("{x} and {y} are not distinguishable"));
    Ok(Outcome { text: report.render(format), failure })
}

#[derive(Serialize)]
struct RateReport {
    generators: Vec<Word>,
    lengths: Vec<usize>,
    uniquely_decodable: bool,
    #[serde(serialize_with = "serialize_fixed")]
    root: f64,
    #[serde(serialize_with = "serialize_fixed")]
    rate_bits: f64,
}

impl Report for RateReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["generators", "lengths", "uniquely_decodable", "root", "rate_bits"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            join(&self.generators),
            join(&self.lengths),
            self.uniquely_decodable.to_string(),
            zecap::report::fixed(self.root),
            zecap::report::fixed(self.rate_bits),
        ]]
    }
}

fn rate(path: &Path, format: Format) -> Result<Outcome, CliError> {
    let words = in_file(path, parse_word_list(&read(path)?))?;
    let gens = in_file(path, GeneratorSet::new(words))?;
    let uniquely_decodable = is_uniquely_decodable(&gens)?;
    let (root, rate_bits) = match gens.rate() {
        Ok(r) => (r.root, r.rate),
        // one generator: its powers have root 1 and carry no information
        Err(zecap::Error::DegenerateRate(_)) => (1.0, 0.0),
        Err(e) => return Err(CliError::Input { path: path.to_path_buf(), source: e }),
    };
    let report = RateReport {
        generators: gens.generators().to_vec(),
        lengths: gens.lengths(),
        uniquely_decodable,
        root,
        rate_bits,
    };
    let failure = (!uniquely_decodable)
        .then(|| "generators are not uniquely decodable, so the rate is not achieved by their star language".to_string());
    Ok(Outcome { text: report.render(format), failure })
}

fn table1(format: Format) -> Result<String, CliError> {
    let report: Table1Report = table1_binary_m2()?;
    Ok(match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Md => report.to_markdown(),
    })
}
