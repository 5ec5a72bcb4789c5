//! Cross-module properties: symmetry invariance of code sizes, agreement of
//! constructions with counts and the oracle, and transport of codes along
//! interchange maps.

use std::collections::BTreeMap;

use proptest::prelude::*;

use zecap::channel::{classify_interchangeable, enumerate_one_edge_graphs, interchangeable, Transform};
use zecap::construct::{best_core_pair, build_quasi_code, count_star_language, star_language};
use zecap::oracle::{max_code_exact, recurrence_residuals, superadditivity_check, DEFAULT_BUDGET};
use zecap::{is_code, Alphabet, ChannelGraph, Permutation, SingleEdgeGraph, Word};

fn w(text: &str) -> Word {
    text.parse().unwrap()
}

#[test]
fn oracle_sizes_agree_within_each_class() {
    let graphs = enumerate_one_edge_graphs(2, 2).unwrap();
    for class in classify_interchangeable(&graphs).unwrap() {
        let sizes = |g: &SingleEdgeGraph| -> Vec<usize> {
            (1..=9).map(|n| max_code_exact(&g.to_graph(), n, DEFAULT_BUDGET).unwrap().max_size).collect()
        };
        let reference = sizes(&class.canonical);
        for g in class.graphs() {
            assert_eq!(sizes(g), reference, "{g} vs {}", class.canonical);
        }
    }
}

#[test]
fn codes_travel_along_interchange_maps() {
    let graphs = enumerate_one_edge_graphs(2, 2).unwrap();
    for class in classify_interchangeable(&graphs).unwrap() {
        let c = &class.canonical;
        let code = build_quasi_code(c.u(), c.v(), 9).unwrap();
        for (member, t) in &class.members {
            let image = code.transform(t).unwrap();
            assert!(is_code(&image, &member.to_graph()).unwrap().is_valid(), "{c} -> {member} by {t}");
            assert!(interchangeable(c, member).unwrap().is_some());
        }
    }
}

#[test]
fn construction_sizes_match_counts() {
    for u in Alphabet::binary().words(4) {
        for v in Alphabet::binary().words(4).filter(|v| *v > u) {
            let (pair, _) = best_core_pair(&u, &v).unwrap();
            let gens = pair.generators();
            for n in 0..=14 {
                let built = build_quasi_code(&u, &v, n).unwrap().len() as u128;
                assert_eq!(built, count_star_language(&gens, n).unwrap(), "G({u},{v}) n={n}");
                assert_eq!(built, star_language(&gens, n).len() as u128);
            }
        }
    }
}

#[test]
fn constructions_never_beat_the_oracle_ternary() {
    let q3 = Alphabet::new(3).unwrap();
    for (u, v) in [("00", "01"), ("01", "10"), ("00", "12"), ("02", "20")] {
        let (u, v) = (w(u), w(v));
        let graph = ChannelGraph::single_edge(q3, u.clone(), v.clone()).unwrap();
        let l = best_core_pair(&u, &v).unwrap().0.common_len();
        for n in l.max(1)..=7 {
            let best = max_code_exact(&graph, n, DEFAULT_BUDGET).unwrap();
            assert!(build_quasi_code(&u, &v, n - l).unwrap().len() <= best.max_size, "G({u},{v}) n={n}");
        }
    }
}

#[test]
fn four_edge_graph_tables() {
    let edges = [("000", "111"), ("010", "101"), ("100", "011"), ("110", "001")];
    let graph = ChannelGraph::new(Alphabet::binary(), 2, edges.iter().map(|(a, b)| (w(a), w(b)))).unwrap();
    let sizes: BTreeMap<usize, u64> =
        (1..=10).map(|n| (n, max_code_exact(&graph, n, DEFAULT_BUDGET).unwrap().max_size as u64)).collect();
    assert_eq!(sizes[&3], 2);
    assert_eq!(sizes[&6], 4);
    assert_eq!(sizes[&9], 8);
    assert!(superadditivity_check(&sizes));
    assert!(recurrence_residuals(&sizes, &[3, 3]).unwrap().iter().all(|&(_, s)| s >= 0));
}

fn binary_word(len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, len).prop_map(Word::new)
}

proptest! {
    #[test]
    fn validity_is_invariant_under_symmetries(
        u in binary_word(3),
        v in binary_word(3),
        words in prop::collection::btree_set(binary_word(8), 1..12),
        reversed in any::<bool>(),
        flip in any::<bool>(),
    ) {
        prop_assume!(u != v);
        let graph = ChannelGraph::single_edge(Alphabet::binary(), u, v).unwrap();
        let code = zecap::CodeSet::new(words).unwrap();
        let perm = if flip { Permutation::flip(2) } else { Permutation::identity(2) };
        let t = Transform { perm, reversed };
        let before = is_code(&code, &graph).unwrap().is_valid();
        let after = is_code(&code.transform(&t).unwrap(), &t.apply_graph(&graph).unwrap()).unwrap().is_valid();
        prop_assert_eq!(before, after);
    }
}
