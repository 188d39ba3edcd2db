use proptest::prelude::*;
use vertex_visibility::bounds::{bounds_report, BoundsOptions};
use vertex_visibility::io::{parse_graph, write_graph};
use vertex_visibility::solvers::{max_leaf_spanning_tree, vv_exact, vx_exact, vx_greedy};
use vertex_visibility::visibility::is_x_visibility_set;
use vertex_visibility::{Graph, Settings};

/// Connected graph: a random tree (vertex i hangs off some j < i) plus
/// arbitrary extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_certificate_holds(g in connected_graph(12), seed in any::<usize>()) {
        let x = seed % g.n();
        let s = Settings::default();
        let exact = vx_exact(&g, x, &s).unwrap();
        prop_assert_eq!(exact.witness_set.len(), exact.value);
        prop_assert!(is_x_visibility_set(&g, x, &exact.witness_set).unwrap());
        let tree = exact.tree.clone().unwrap();
        prop_assert!(tree.is_shortest_path_tree_of(&g));
        prop_assert_eq!(tree.leaves(), exact.witness_set.clone());

        let greedy = vx_greedy(&g, x).unwrap();
        prop_assert!(greedy.value <= exact.value);
        prop_assert!(is_x_visibility_set(&g, x, &greedy.witness_set).unwrap());
        prop_assert!(exact.value < g.n());
    }

    #[test]
    fn visibility_is_hereditary(g in connected_graph(10), seed in any::<usize>()) {
        let x = seed % g.n();
        let w = vx_exact(&g, x, &Settings::default()).unwrap().witness_set;
        for v in w.iter() {
            let mut smaller = w.clone();
            smaller.remove(v);
            prop_assert!(is_x_visibility_set(&g, x, &smaller).unwrap());
        }
    }

    #[test]
    fn vv_is_the_best_root(g in connected_graph(10)) {
        let s = Settings::default();
        let vv = vv_exact(&g, &s).unwrap();
        let per: Vec<usize> = (0..g.n()).map(|x| vx_exact(&g, x, &s).unwrap().value).collect();
        prop_assert_eq!(vv.value, *per.iter().max().unwrap());
        prop_assert_eq!(per[vv.argmax], vv.value);
        prop_assert_eq!(vv.argmax, per.iter().position(|&v| v == vv.value).unwrap());
        if g.n() >= 3 {
            let ell = max_leaf_spanning_tree(&g, &s).unwrap().value;
            prop_assert!(vv.value <= ell);
        }
    }

    #[test]
    fn report_is_consistent(g in connected_graph(9), seed in any::<usize>()) {
        let opts = BoundsOptions { root: Some(seed % g.n()), compute_mu: true, compute_exact: true };
        let r = bounds_report(&g, &opts, &Settings::default()).unwrap();
        prop_assert!(r.violations().is_empty(), "{:?}", r.violations());
    }

    #[test]
    fn text_format_round_trip(g in connected_graph(15)) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }
}
