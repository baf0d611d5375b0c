mod common;

use proptest::prelude::*;

use cograph_spectra::cotree::Cotree;
use cograph_spectra::diagonalize::{count_relative, diagonalize, diagonalize_by_selection, spectrum, DeepestLeftmost};
use cograph_spectra::generate::{random_cotree, random_equivalent_pair, random_graph, rng_from_seed, shuffle_children};
use cograph_spectra::graph::Graph;
use cograph_spectra::oracle::{brute_isomorphic, brute_twin_partition, dense_laplacian_spectrum, find_p4};
use cograph_spectra::rational::Rational;
use cograph_spectra::families::{cospectral_family, join_spectrum};
use cograph_spectra::twins::{
    are_equivalent, candidate_edits, lca_distance, reduction, twin_partition, twin_partition_from_cotree,
};
use cograph_spectra::cotree::Kind;

fn cotree(max_n: usize) -> impl Strategy<Value = Cotree> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_cotree(&mut rng_from_seed(seed), n))
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, 0.0..=1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(&mut rng_from_seed(seed), n, p))
}

fn point(n: usize) -> impl Strategy<Value = Rational> {
    (-2..=2 * n as i64 + 2).prop_map(|h| Rational::new(h, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph(14)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_and_union_edge_counts(a in graph(8), b in graph(8)) {
        let (na, nb) = (a.n(), b.n());
        prop_assert_eq!(a.disjoint_union(&b).edge_count(), a.edge_count() + b.edge_count());
        prop_assert_eq!(a.join(&b).edge_count(), a.edge_count() + b.edge_count() + na * nb);
        prop_assert_eq!(a.join(&b).complement(), a.complement().disjoint_union(&b.complement()));
    }

    #[test]
    fn degree_sum_is_twice_edges(g in graph(20)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn edge_list_round_trip(g in graph(15)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list_string()).unwrap(), g);
    }

    #[test]
    fn render_parse_round_trip(t in cotree(40)) {
        let back = Cotree::parse(&t.render()).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_graph(), t.to_graph());
    }

    #[test]
    fn normalization_is_idempotent(t in cotree(40), seed in any::<u64>()) {
        prop_assert!(t.is_normalized());
        prop_assert_eq!(&t.normalize(), &t);
        let s = shuffle_children(&mut rng_from_seed(seed), &t);
        prop_assert!(s.normalize().is_normalized());
        prop_assert_eq!(s.normalize().normalize(), s.normalize());
    }

    #[test]
    fn canonical_form_ignores_child_order_and_labels(t in cotree(30), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = rng_from_seed(seed);
        let shuffled = shuffle_children(&mut rng, &t);
        prop_assert_eq!(shuffled.canonical_form(None), t.canonical_form(None));
        let mut perm: Vec<usize> = (0..t.leaf_count()).collect();
        perm.shuffle(&mut rng);
        let relabeled = t.relabel(|v| perm[v]);
        prop_assert_eq!(relabeled.canonical_form(None), t.canonical_form(None));
    }

    #[test]
    fn recognition_agrees_with_p4_search(g in graph(10)) {
        prop_assume!(g.n() > 0);
        match Cotree::from_graph(&g) {
            Ok(t) => {
                prop_assert_eq!(find_p4(&g), None);
                prop_assert!(t.is_normalized());
                prop_assert_eq!(t.to_graph(), g);
            }
            Err(e) => {
                prop_assert!(find_p4(&g).is_some());
                let [a, b, c, d] = e.witness;
                prop_assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d));
                prop_assert!(!g.has_edge(a, c) && !g.has_edge(b, d) && !g.has_edge(a, d));
            }
        }
    }

    #[test]
    fn cotree_of_cotree_graph(t in cotree(30)) {
        let back = Cotree::from_graph(&t.to_graph()).unwrap();
        prop_assert_eq!(back.canonical_form(None), t.canonical_form(None));
        prop_assert_eq!(back.to_graph(), t.to_graph());
    }

    #[test]
    fn degrees_from_tree_match_graph(t in cotree(40)) {
        prop_assert_eq!(t.leaf_degrees(), t.to_graph().degrees());
    }

    #[test]
    fn twin_partitions_agree(t in cotree(30)) {
        let g = t.to_graph();
        let from_tree = twin_partition_from_cotree(&t);
        prop_assert_eq!(&twin_partition(&g), &from_tree);
        prop_assert_eq!(&brute_twin_partition(&g).unwrap(), &from_tree);
    }

    #[test]
    fn reduction_sizes_and_self_equivalence(t in cotree(30)) {
        let r = reduction(&t);
        prop_assert_eq!(r.graph.n(), r.k());
        prop_assert_eq!(r.twin_numbers().iter().sum::<usize>(), t.leaf_count());
        let again = reduction(&r.cotree);
        // one more round only collapses classes that became twins
        prop_assert!(again.k() <= r.k());
        // a graph is equivalent to itself under any child order
        let s = shuffle_children(&mut rng_from_seed(1), &t);
        prop_assert!(are_equivalent(&t, &s).is_some());
    }

    #[test]
    fn fast_engine_matches_reference((t, x) in cotree(25).prop_flat_map(|t| {
        let n = t.leaf_count();
        (Just(t), point(n))
    })) {
        let fast = diagonalize(&t, &x).unwrap();
        let slow = diagonalize_by_selection(&t, &x, &mut DeepestLeftmost).unwrap();
        prop_assert_eq!(fast.values, slow.values);
    }

    #[test]
    fn counts_match_dense_solver((t, x) in cotree(14).prop_flat_map(|t| {
        let n = t.leaf_count();
        (Just(t), point(n))
    })) {
        let dense = dense_laplacian_spectrum(&t.to_graph()).unwrap();
        prop_assert_eq!(count_relative(&t, &x).unwrap(), dense.count_relative(x.to_f64(), 1e-8));
    }

    #[test]
    fn spectrum_matches_dense_solver(t in cotree(20)) {
        let dense = dense_laplacian_spectrum(&t.to_graph()).unwrap();
        prop_assert_eq!(Some(spectrum(&t).unwrap()), dense.to_integer_spectrum(1e-8));
    }

    #[test]
    fn equivalence_matches_brute_force_on_edits(t in cotree(10)) {
        let g = t.to_graph();
        for candidate in candidate_edits(&t) {
            let fast = are_equivalent(&t, &candidate.tree).is_some();
            prop_assert_eq!(fast, common::brute_equivalent(&g, &candidate.tree.to_graph()), "{} -> {}", t, candidate.tree);
        }
    }

    #[test]
    fn equivalence_matches_brute_force_on_random_pairs(a in cotree(9), b in cotree(9)) {
        let fast = are_equivalent(&a, &b).is_some();
        prop_assert_eq!(fast, common::brute_equivalent(&a.to_graph(), &b.to_graph()));
    }

    #[test]
    fn join_rule_matches_direct_spectrum(a in cotree(15), b in cotree(15)) {
        let (na, nb) = (a.leaf_count(), b.leaf_count());
        let joined = Cotree::combine(Kind::Join, vec![a.clone(), b.clone()]);
        let predicted = join_spectrum(&spectrum(&a).unwrap(), na, &spectrum(&b).unwrap(), nb).unwrap();
        prop_assert_eq!(predicted, spectrum(&joined).unwrap());
    }

    #[test]
    fn prefixed_families_are_not_equivalent(n in 3usize..=8, seed in any::<u64>()) {
        let prefix = random_cotree(&mut rng_from_seed(seed), n);
        let pair = cospectral_family(&prefix, n).unwrap();
        prop_assert!(are_equivalent(&pair.first, &pair.second).is_none());
    }

    #[test]
    fn edits_preserve_lca_types_and_bound_distances(seed in any::<u64>()) {
        let (g, h) = random_equivalent_pair(&mut rng_from_seed(seed), 3, 20);
        let m = are_equivalent(&g, &h).expect("generator yields equivalent pairs");
        let (pg, ph) = (twin_partition_from_cotree(&g), twin_partition_from_cotree(&h));
        let (leaves_g, leaves_h) = (g.leaf_nodes(), h.leaf_nodes());
        let rep_g = |i: usize| pg.classes()[i].members[0];
        let rep_h = |i: usize| ph.classes()[m.class_map[i]].members[0];
        let same = |i: usize| m.identical.contains(&i);
        for i in 0..m.k() {
            for j in i + 1..m.k() {
                let (u, v, u2, v2) = (rep_g(i), rep_g(j), rep_h(i), rep_h(j));
                prop_assert_eq!(
                    g.kind(g.lca(leaves_g[u], leaves_g[v])),
                    h.kind(h.lca(leaves_h[u2], leaves_h[v2]))
                );
                let dg = lca_distance(&g, u, v).unwrap() as i64;
                let dh = lca_distance(&h, u2, v2).unwrap() as i64;
                let diff = (dg - dh).abs();
                match (same(i), same(j)) {
                    (true, true) => prop_assert_eq!(diff, 0),
                    (true, false) | (false, true) => prop_assert_eq!(diff, 1),
                    (false, false) => prop_assert!(diff == 0 || diff == 2, "diff {}", diff),
                }
            }
        }
    }
}

/// Every graph on at most five vertices that is a cograph.
fn small_cographs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            if find_p4(&g).is_none() {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn canonical_forms_decide_isomorphism_exhaustively() {
    let graphs = small_cographs();
    let codes: Vec<String> = graphs
        .iter()
        .map(|g| Cotree::from_graph(g).unwrap().canonical_form(None))
        .collect();
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            if graphs[i].n() != graphs[j].n() {
                continue;
            }
            let iso = brute_isomorphic(&graphs[i], &graphs[j]).unwrap();
            assert_eq!(codes[i] == codes[j], iso, "{:?} / {:?}", graphs[i], graphs[j]);
        }
    }
}

#[test]
fn small_cograph_counts() {
    // labelled cographs on n vertices: 1, 2, 8, 52, 472
    let mut by_n = [0usize; 6];
    for g in small_cographs() {
        by_n[g.n()] += 1;
    }
    assert_eq!(&by_n[1..], &[1, 2, 8, 52, 472]);
}
