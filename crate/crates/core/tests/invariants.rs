//! Property tests over random small graphs and games.

use num_traits::Zero;
use proptest::prelude::*;

use position_centrality::centrality::{
    edge_power, myerson_centrality, position_centrality_dividends, position_centrality_exact,
    position_centrality_mc, Caps, McConfig,
};
use position_centrality::exact::{frac, int, Rational};
use position_centrality::game::{
    all_dividends, shapley_dividends, shapley_marginal, CoalitionGame, TableGame,
};
use position_centrality::graph::{parse_edge_list, EdgeSubset, Graph};
use position_centrality::link::LinkGame;
use position_centrality::SymmetricGame;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn game_strategy() -> impl Strategy<Value = SymmetricGame> {
    prop_oneof![
        Just(SymmetricGame::messages()),
        Just(SymmetricGame::overhead()),
        Just(SymmetricGame::attachment()),
        Just(SymmetricGame::attachment_messages()),
        Just(SymmetricGame::conferences()),
        proptest::collection::vec(-5i64..20, 9).prop_map(|t| {
            let table = std::iter::once(Rational::zero()).chain(t.into_iter().map(int)).collect();
            SymmetricGame::custom("random", table).unwrap()
        }),
    ]
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.node_count(), g.edges().iter().map(|&(a, b)| (perm[a], perm[b]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn edge_powers_sum_to_link_value(g in graph_strategy(7), game in game_strategy()) {
        let phi = edge_power(&g, &game, &Caps::default()).unwrap();
        let link = LinkGame::new(&g, &game).unwrap();
        let total: Rational = phi.exact_values().iter().sum();
        prop_assert_eq!(total, link.value_of(g.all_edges().unwrap()));
    }

    #[test]
    fn engines_agree(g in graph_strategy(6), game in game_strategy()) {
        let a = position_centrality_exact(&g, &game, &Caps::default()).unwrap();
        let b = position_centrality_dividends(&g, &game, &Caps::default()).unwrap();
        prop_assert_eq!(a.exact_values(), b.exact_values());
    }

    #[test]
    fn myerson_is_component_efficient(g in graph_strategy(8), game in game_strategy()) {
        let m = myerson_centrality(&g, &game, &Caps::default()).unwrap();
        for block in g.components().blocks {
            let sum: Rational = block.iter().map(|&v| &m.exact_values()[v]).sum();
            prop_assert_eq!(sum, game.f(block.len()).unwrap());
        }
    }

    #[test]
    fn relabelling_commutes(g in graph_strategy(6), seed in any::<u64>(), game in game_strategy()) {
        let n = g.node_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = permuted(&g, &perm);
        let caps = Caps::default();
        let a = position_centrality_exact(&g, &game, &caps).unwrap();
        let b = position_centrality_exact(&h, &game, &caps).unwrap();
        let ma = myerson_centrality(&g, &game, &caps).unwrap();
        let mb = myerson_centrality(&h, &game, &caps).unwrap();
        for v in 0..n {
            prop_assert_eq!(&a.exact_values()[v], &b.exact_values()[perm[v]]);
            prop_assert_eq!(&ma.exact_values()[v], &mb.exact_values()[perm[v]]);
        }
    }

    #[test]
    fn sampler_is_reproducible(g in graph_strategy(6), seed in any::<u64>()) {
        let cfg = McConfig { samples: 300, seed, workers: 3 };
        let a = position_centrality_mc(&g, &SymmetricGame::messages(), &cfg).unwrap();
        let b = position_centrality_mc(&g, &SymmetricGame::messages(), &cfg).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sampled_totals_are_exact(g in graph_strategy(7), seed in any::<u64>()) {
        // every permutation distributes exactly w(E) over the nodes
        let cfg = McConfig::new(200, seed);
        let pi = position_centrality_mc(&g, &SymmetricGame::attachment(), &cfg).unwrap();
        let total: f64 = pi.as_f64().iter().sum();
        let link = LinkGame::new(&g, &SymmetricGame::attachment()).unwrap();
        let w = position_centrality::exact::to_f64(&link.value_of(g.all_edges().unwrap()));
        prop_assert!((total - w).abs() < 1e-9);
    }

    #[test]
    fn shapley_forms_agree(values in proptest::collection::vec(-30i64..30, 31)) {
        let table: Vec<Rational> = std::iter::once(Rational::zero()).chain(values.into_iter().map(int)).collect();
        let game = TableGame::new(5, table).unwrap();
        let a = shapley_marginal(&game, 20).unwrap();
        let b = shapley_dividends(&game, 20).unwrap();
        prop_assert_eq!(&a, &b);
        let sum: Rational = a.iter().sum();
        prop_assert_eq!(sum, game.value(0b11111));
    }

    #[test]
    fn dividends_invert(values in proptest::collection::vec(-9i64..9, 15)) {
        let table: Vec<Rational> = std::iter::once(Rational::zero()).chain(values.into_iter().map(|v| frac(v, 3))).collect();
        let game = TableGame::new(4, table).unwrap();
        let lambda = all_dividends(&game, 20).unwrap();
        for s in 0u64..16 {
            let mut total = Rational::zero();
            let mut t = s;
            loop {
                total += &lambda[t as usize];
                if t == 0 { break; }
                t = (t - 1) & s;
            }
            prop_assert_eq!(total, game.value(s));
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(9)) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn subset_algebra(a in any::<u32>(), b in any::<u32>()) {
        let (x, y) = (EdgeSubset::from_mask(a as u64), EdgeSubset::from_mask(b as u64));
        let u = x.union(y);
        prop_assert!(x.is_subset_of(u) && y.is_subset_of(u));
        prop_assert_eq!(u.len(), (a | b).count_ones() as usize);
        prop_assert_eq!(x.iter().count(), x.len());
        for e in x.iter() {
            prop_assert!(x.contains(e) && !x.without(e).contains(e));
        }
    }
}
