//! Bitset maximum-clique search with greedy-colouring bounds.

/// Dense undirected graph with one bitset row per vertex.
#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|b| b.count_ones() as usize).sum()
}

fn is_empty(bits: &[u64]) -> bool {
    bits.iter().all(|&b| b == 0)
}

fn first_one(bits: &[u64]) -> Option<usize> {
    bits.iter().position(|&b| b != 0).map(|k| k * 64 + bits[k].trailing_zeros() as usize)
}

impl BitGraph {
    pub(crate) fn new(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Self { n, stride, rows: vec![0; n * stride] }
    }

    pub(crate) fn len(&self) -> usize {
        self.n
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        let stride = self.stride;
        set(&mut self.rows[a * stride..(a + 1) * stride], b);
        set(&mut self.rows[b * stride..(b + 1) * stride], a);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub(crate) fn adjacent(&self, a: usize, b: usize) -> bool {
        self.row(a)[b / 64] >> (b % 64) & 1 == 1
    }

    fn full(&self) -> Vec<u64> {
        let mut bits = vec![0; self.stride];
        for v in 0..self.n {
            set(&mut bits, v);
        }
        bits
    }

    /// The graph with vertex `order[i]` renamed to `i`.
    fn relabel(&self, order: &[usize]) -> BitGraph {
        let mut out = BitGraph::new(self.n);
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }

    /// Greedy sequential colouring of `candidates`: vertices in colour-class
    /// order with the number of colours used up to each.
    fn colour_order(&self, candidates: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = candidates.to_vec();
        let mut out = Vec::with_capacity(count(candidates));
        let mut colour = 0;
        let mut class = vec![0u64; self.stride];
        while !is_empty(&uncoloured) {
            colour += 1;
            class.copy_from_slice(&uncoloured);
            while let Some(v) = first_one(&class) {
                clear(&mut uncoloured, v);
                clear(&mut class, v);
                for (c, r) in class.iter_mut().zip(self.row(v)) {
                    *c &= !r;
                }
                out.push((v, colour));
            }
        }
        out
    }
}

pub(crate) struct CliqueOutcome {
    pub(crate) clique: Vec<usize>,
    pub(crate) nodes: u64,
    /// The search finished within budget, so `clique` is maximum.
    pub(crate) complete: bool,
}

struct Search<'a> {
    graph: &'a BitGraph,
    best: Vec<usize>,
    /// Size to beat; at least `best.len()`.
    floor: usize,
    /// Stop as soon as a clique this large is found.
    stop_at: usize,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.aborted || self.best.len() >= self.stop_at
    }

    fn expand(&mut self, candidates: Vec<u64>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let order = self.graph.colour_order(&candidates);
        let mut candidates = candidates;
        for &(v, colour) in order.iter().rev() {
            if self.current.len() + colour <= self.floor {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = candidates.iter().zip(self.graph.row(v)).map(|(c, r)| c & r).collect();
            if is_empty(&next) {
                if self.current.len() > self.floor {
                    self.best = self.current.clone();
                    self.floor = self.best.len();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            if self.done() {
                return;
            }
            clear(&mut candidates, v);
        }
    }
}

/// Branch and bound over the subgraph induced by `vertices`, explored in
/// non-increasing degree order. Only cliques larger than `floor` count, and
/// the search stops once one of size `stop_at` is found.
fn search_induced(graph: &BitGraph, vertices: &[usize], floor: usize, stop_at: usize, budget: u64) -> CliqueOutcome {
    let mut order = vertices.to_vec();
    let mask = {
        let mut bits = vec![0u64; graph.stride];
        for &v in vertices {
            set(&mut bits, v);
        }
        bits
    };
    let local_degree = |v: usize| graph.row(v).iter().zip(&mask).map(|(r, m)| (r & m).count_ones()).sum::<u32>();
    order.sort_by_key(|&v| (std::cmp::Reverse(local_degree(v)), v));
    let sub = graph.relabel(&order);

    let mut search =
        Search { graph: &sub, best: Vec::new(), floor, stop_at, current: Vec::new(), nodes: 0, budget, aborted: false };
    if sub.len() > 0 {
        // greedy seed: take vertices in degree order while they extend the clique
        let mut seed: Vec<usize> = Vec::new();
        for v in 0..sub.len() {
            if seed.iter().all(|&s| sub.adjacent(s, v)) {
                seed.push(v);
            }
        }
        if seed.len() > floor {
            search.floor = seed.len();
            search.best = seed;
        }
        if !search.done() {
            search.expand(sub.full());
        }
    }
    let mut clique: Vec<usize> = search.best.iter().map(|&v| order[v]).collect();
    clique.sort_unstable();
    CliqueOutcome { clique, nodes: search.nodes, complete: !search.aborted }
}

/// Maximum clique by branch and bound with greedy-colouring bounds.
pub(crate) fn max_clique(graph: &BitGraph, budget: u64) -> CliqueOutcome {
    let all: Vec<usize> = (0..graph.len()).collect();
    search_induced(graph, &all, 0, usize::MAX, budget)
}

/// The lexicographically least clique of size `target` (as a sorted vertex
/// list). Vertices are decided in index order: each is kept iff the current
/// choice plus it still extends to `target` within the remaining candidates.
/// `Err(nodes)` when the budget runs out first; `Ok(None)` when no clique of
/// that size exists.
pub(crate) fn first_clique_of_size(
    graph: &BitGraph,
    target: usize,
    budget: u64,
) -> Result<(Option<Vec<usize>>, u64), u64> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut candidates: Vec<usize> = (0..graph.len()).collect();
    let mut nodes = 0u64;
    while chosen.len() < target {
        let Some((&v, rest)) = candidates.split_first() else {
            return Ok((None, nodes));
        };
        let need = target - chosen.len() - 1;
        let neighbours: Vec<usize> = rest.iter().copied().filter(|&w| graph.adjacent(v, w)).collect();
        let extends = if need == 0 {
            true
        } else if neighbours.len() < need {
            false
        } else {
            let outcome = search_induced(graph, &neighbours, need - 1, need, budget.saturating_sub(nodes));
            nodes += outcome.nodes;
            if !outcome.complete {
                return Err(nodes);
            }
            outcome.clique.len() >= need
        };
        if extends {
            chosen.push(v);
            candidates = neighbours;
        } else {
            candidates.remove(0);
        }
    }
    Ok((Some(chosen), nodes))
}
#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_force(graph: &BitGraph) -> (usize, Vec<usize>) {
        let n = graph.len();
        let mut best = (0, Vec::new());
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let ok = members.iter().enumerate().all(|(i, &a)| members[i + 1..].iter().all(|&b| graph.adjacent(a, b)));
            // masks in increasing order do not give lexicographic order, so compare lists
            if ok && (members.len() > best.0 || (members.len() == best.0 && members < best.1)) {
                best = (members.len(), members);
            }
        }
        best
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300 {
            let n = rng.gen_range(0..14);
            let p = rng.gen_range(0.1..0.9);
            let mut g = BitGraph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(a, b);
                    }
                }
            }
            let (size, lex_least) = brute_force(&g);
            let outcome = max_clique(&g, u64::MAX);
            assert!(outcome.complete);
            assert_eq!(outcome.clique.len(), size, "trial {trial}");
            let (found, _) = first_clique_of_size(&g, size, u64::MAX).unwrap();
            assert_eq!(found.unwrap(), lex_least, "trial {trial}");
            assert_eq!(first_clique_of_size(&g, size + 1, u64::MAX).unwrap().0, None);
        }
    }

    #[test]
    fn budget_is_reported() {
        let mut g = BitGraph::new(70);
        for a in 0..70 {
            for b in a + 1..70 {
                if (a + b) % 3 != 0 {
                    g.add_edge(a, b);
                }
            }
        }
        let outcome = max_clique(&g, 0);
        assert!(!outcome.complete);
        assert!(!outcome.clique.is_empty());
        assert!(first_clique_of_size(&g, 40, 0).is_err());
    }
}
