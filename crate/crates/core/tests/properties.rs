use ftmd::cotree::all_cotrees;
use ftmd::format::{parse_edge_list, write_edge_list};
use ftmd::oracle::oracle_min_ft;
use ftmd::resolving::{h, is_2nr, is_fault_tolerant};
use ftmd::{build_cotree, dp_run, random_cotree, realize, solve, Cotree, Graph, WeightMap};
use proptest::prelude::*;
use proptest::sample::Index;

/// Random cograph with its vertex ids shuffled, so recognition never sees the
/// generator's left-to-right labelling.
fn cograph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>())
        .prop_flat_map(|(n, seed)| (Just(seed), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_map(|(seed, perm)| relabel(&realize(&random_cotree(perm.len(), seed).unwrap()), &perm))
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

fn connected(g: Graph) -> Graph {
    if g.is_connected() {
        g
    } else {
        g.complement()
    }
}

fn subset(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|v| mask >> (v % 64) & 1 == 1).collect()
}

fn integer_weights(n: usize, raw: &[u8]) -> WeightMap {
    WeightMap::new((0..n).map(|v| f64::from(raw[v % raw.len()] % 11)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn recognition_round_trips(g in cograph(32)) {
        let t = build_cotree(&g).unwrap();
        prop_assert!(t.is_normalized());
        prop_assert_eq!(t.leaf_count(), g.n());
        prop_assert_eq!(realize(&t), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sexpr_round_trips(n in 1usize..=40, seed in any::<u64>()) {
        let t = random_cotree(n, seed).unwrap();
        let text = t.to_string();
        let back: Cotree = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(realize(&back), realize(&t));
    }

    #[test]
    fn complement_is_involution_and_keeps_cographs(g in cograph(24)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert!(build_cotree(&c).is_ok());
    }

    #[test]
    fn connected_cographs_have_diameter_at_most_two(g in cograph(24)) {
        let g = connected(g);
        for row in g.distance_matrix() {
            prop_assert!(row.iter().all(|d| matches!(d, Some(x) if *x <= 2)));
        }
    }

    #[test]
    fn h_is_symmetric_and_monotone(g in cograph(16), a in any::<u64>(), b in any::<u64>(), u in any::<Index>(), v in any::<Index>()) {
        prop_assume!(g.n() >= 2);
        let (u, v) = (u.index(g.n()), v.index(g.n()));
        prop_assume!(u != v);
        let small = subset(g.n(), a & b);
        let big = subset(g.n(), a);
        prop_assert_eq!(h(&g, &big, u, v), h(&g, &big, v, u));
        prop_assert!(h(&g, &small, u, v).unwrap() <= h(&g, &big, u, v).unwrap());
        prop_assert!(h(&g, &big, u, v).unwrap() <= big.len());
    }

    #[test]
    fn edge_list_round_trips(g in cograph(30)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn solution_is_fault_tolerant_and_keeps_twins(g in cograph(40), raw in prop::collection::vec(any::<u8>(), 1..8)) {
        let w = integer_weights(g.n(), &raw);
        let sol = solve(&g, &w).unwrap();
        prop_assert!(is_fault_tolerant(&g, &sol.set));
        prop_assert_eq!(sol.weight, w.total(&sol.set));
        prop_assert!(sol.set.windows(2).all(|p| p[0] < p[1]));
        // twins are told apart only by themselves
        let adj = g.adjacency_matrix();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let open = (0..g.n()).all(|x| x == u || x == v || adj[u][x] == adj[v][x]);
                if open {
                    prop_assert!(sol.set.contains(&u) && sol.set.contains(&v), "twins {} {}", u, v);
                }
            }
        }
    }

    #[test]
    fn connected_solution_is_2nr(g in cograph(40)) {
        let g = connected(g);
        let sol = solve(&g, &WeightMap::uniform(g.n())).unwrap();
        prop_assert!(is_2nr(&g, &sol.set));
    }

    #[test]
    fn scaling_weights_scales_the_optimum(g in cograph(30), raw in prop::collection::vec(any::<u8>(), 1..8), c in 0u8..5) {
        let w = integer_weights(g.n(), &raw);
        let scaled = WeightMap::new(w.as_slice().iter().map(|x| x * f64::from(c)).collect()).unwrap();
        prop_assert_eq!(solve(&g, &scaled).unwrap().weight, f64::from(c) * solve(&g, &w).unwrap().weight);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_oracle_on_small_graphs(g in cograph(10), raw in prop::collection::vec(any::<u8>(), 1..10)) {
        let w = integer_weights(g.n(), &raw);
        prop_assert_eq!(solve(&g, &w).unwrap().weight, oracle_min_ft(&g, &w).unwrap().weight);
    }

    #[test]
    fn components_add_up(a in cograph(7), b in cograph(7), raw in prop::collection::vec(any::<u8>(), 1..10)) {
        let (a, b) = (connected(a), connected(b));
        prop_assume!(a.n() >= 2 && b.n() >= 2);
        let g = a.disjoint_union(&b);
        let w = integer_weights(g.n(), &raw);
        let wa = w.restrict(&(0..a.n()).collect::<Vec<_>>());
        let wb = w.restrict(&(a.n()..g.n()).collect::<Vec<_>>());
        let sum = solve(&a, &wa).unwrap().weight + solve(&b, &wb).unwrap().weight;
        prop_assert_eq!(solve(&g, &w).unwrap().weight, sum);
        prop_assert_eq!(oracle_min_ft(&g, &w).unwrap().weight, sum);
    }

    #[test]
    fn union_is_symmetric_in_child_order(n in 2usize..=12, seed in any::<u64>(), leaf_first in any::<bool>()) {
        // (U L0 T) against (U T L0), with T a random cotree on the other leaves
        let t = random_cotree(n - 1, seed).unwrap();
        let shifted = shift_labels(&t.to_string());
        let (l, r) = if leaf_first { ("L0".to_string(), shifted) } else { (shifted, "L0".to_string()) };
        let one: Cotree = format!("(U {l} {r})").parse().unwrap();
        let other: Cotree = format!("(U {r} {l})").parse().unwrap();
        let w = WeightMap::new((0..n).map(|v| (v * 7 % 5) as f64).collect()).unwrap();
        let (a, b) = (dp_run(&one, &w).unwrap(), dp_run(&other, &w).unwrap());
        let (ta, tb) = (a.root().table().unwrap(), b.root().table().unwrap());
        prop_assert_eq!(ta.projected(), tb.projected());
        prop_assert_eq!(ta.len(), tb.len());
    }
}

/// Renames every `Lk` to `L(k+1)`.
fn shift_labels(sexpr: &str) -> String {
    sexpr
        .split_inclusive([' ', ')', '('])
        .map(|tok| match tok.strip_prefix('L') {
            Some(rest) => {
                let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
                let k: usize = digits.parse().unwrap();
                format!("L{}{}", k + 1, &rest[digits.len()..])
            }
            None => tok.to_string(),
        })
        .collect()
}

#[test]
fn cotree_counts_and_recognition_on_all_small_shapes() {
    let counts: Vec<_> = (1..=6).map(|n| all_cotrees(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 8, 40, 224, 1344]);
    for n in 1..=5 {
        for t in all_cotrees(n) {
            let g = realize(&t);
            assert_eq!(realize(&build_cotree(&g).unwrap()), g);
        }
    }
}

#[test]
fn shift_labels_renames_leaves() {
    assert_eq!(shift_labels("(C (U L0 L10))"), "(C (U L1 L11))");
    assert_eq!(shift_labels("L3"), "L4");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rejection_witness_is_an_induced_p4(n in 4usize..=12, edges in prop::collection::vec((0usize..12, 0usize..12), 0..40)) {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u < v).collect();
        list.sort_unstable();
        list.dedup();
        let g = Graph::from_edges(n, &list).unwrap();
        if let Err(ftmd::Error::NotCograph { witness }) = build_cotree(&g) {
            let [a, b, c, d] = witness.expect("a witness is always reported");
            let e = |x, y| g.has_edge(x, y);
            prop_assert!(e(a, b) && e(b, c) && e(c, d) && !e(a, c) && !e(b, d) && !e(a, d));
        }
    }
}
