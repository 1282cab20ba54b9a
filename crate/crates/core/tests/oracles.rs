//! Library results against slow, independent reimplementations.

mod common;

use common::{brute_layout_number, brute_min_colors, consistent_family_order, dp_lis_len, longest_mono_path, pos_cross, pos_nest};

use linlayout::graph::{make_hex_dual, make_star, star_hex_id, Edge, Graph, StarVertex};
use linlayout::hexpath::{GridColoring, HexGrid};
use linlayout::layout::{
    crosses, is_pairwise_crossing, min_queue_colors_for_order, min_stack_colors_for_order, nests, verify_layout,
    LayoutKind, LinearOrder,
};
use linlayout::monotone::{consistent_leaf_family, longest_monotone_subsequence, Direction};
use linlayout::poset::{chain_or_antichain, classify_pair, ramsey_upper_bound, ChainOrAntichain, PairClass, PathFamily};
use linlayout::solver::{queue_number, stack_number, SolveBudget};
use linlayout::witness::extract_crossing_witness;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn layout_numbers_match_double_enumeration() {
    let budget = SolveBudget::default();
    let mut graphs = vec![Graph::complete(3), Graph::complete(4), Graph::complete(5), Graph::cycle(5)];
    graphs.push(make_star(4).unwrap());
    graphs.push(Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 4), (3, 4)]).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..6 {
        let n = rng.gen_range(3..=6);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        graphs.push(Graph::from_edges(n, pairs).unwrap());
    }
    for g in &graphs {
        let sn = stack_number(g, &budget).unwrap();
        let qn = queue_number(g, &budget).unwrap();
        assert_eq!(sn.k, brute_layout_number(g, LayoutKind::Stack), "stack number of {:?}", g.edges());
        assert_eq!(qn.k, brute_layout_number(g, LayoutKind::Queue), "queue number of {:?}", g.edges());
        assert!(verify_layout(g, &sn.layout).unwrap().valid);
        assert!(verify_layout(g, &qn.layout).unwrap().valid);
        assert!(sn.layout.coloring.used_colors() <= sn.k);
    }
}

#[test]
fn per_order_minima_match_backtracking() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let n = rng.gen_range(2..=8);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.4))
            .collect();
        let g = Graph::from_edges(n, pairs).unwrap();
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(&mut rng);
        let order = LinearOrder::from_sequence(seq).unwrap();
        let pos: Vec<usize> = (0..n).map(|v| order.position(v)).collect();
        let s = min_stack_colors_for_order(&g, &order).unwrap();
        let q = min_queue_colors_for_order(&g, &order).unwrap();
        assert_eq!(s.k, brute_min_colors(&g, &pos, LayoutKind::Stack));
        assert_eq!(q.k, brute_min_colors(&g, &pos, LayoutKind::Queue));
        assert!(verify_layout(&g, &s.layout).unwrap().valid);
        assert!(verify_layout(&g, &q.layout).unwrap().valid);
    }
}

#[test]
fn monotone_runs_match_quadratic_dp() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..2000 {
        let len = rng.gen_range(0..40);
        let seq: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..20)).collect();
        let run = longest_monotone_subsequence(&seq);
        let (inc, dec) = (dp_lis_len(&seq, true), dp_lis_len(&seq, false));
        assert_eq!(run.len(), inc.max(dec));
        let want = if dec > inc { Direction::Decreasing } else { Direction::Increasing };
        assert_eq!(run.direction, want);
        for w in run.indices.windows(2) {
            assert!(w[0] < w[1]);
            match run.direction {
                Direction::Increasing => assert!(seq[w[0]] < seq[w[1]]),
                Direction::Decreasing => assert!(seq[w[0]] > seq[w[1]]),
            }
        }
    }
}

#[test]
fn hex_paths_against_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 1..=4 {
        for _ in 0..300 {
            let coloring = GridColoring::random(n, &mut rng).unwrap();
            let grid = HexGrid::new(n).unwrap();
            let path = grid.find_monochromatic_path(&coloring).unwrap();
            let longest = longest_mono_path(&coloring);
            assert!(grid.is_monochromatic_path(&coloring, &path.vertices));
            assert!(path.vertices.len() >= n);
            assert!(path.vertices.len() <= longest);
        }
    }
}

#[test]
fn ramsey_three_three_by_exhaustion() {
    let pairs6: Vec<(usize, usize)> = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
    let idx = |i: usize, j: usize| pairs6.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    for mask in 0u32..1 << 15 {
        let red = |i, j| mask >> idx(i, j) & 1 == 1;
        let has = (0..6).any(|a| {
            (a + 1..6).any(|b| (b + 1..6).any(|c| red(a, b) == red(a, c) && red(a, c) == red(b, c)))
        });
        assert!(has, "coloring {mask:#x} of K_6 avoids monochromatic triangles");
    }
    let pent = |i: usize, j: usize| matches!((j + 5 - i) % 5, 1 | 4);
    let mono = (0..5).any(|a| (a + 1..5).any(|b| (b + 1..5).any(|c| pent(a, b) == pent(a, c) && pent(a, c) == pent(b, c))));
    assert!(!mono);
    assert_eq!(ramsey_upper_bound(3, 3).unwrap(), 6u32.into());
}

#[test]
fn consistent_families_never_have_unclassified_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..300 {
        let b = rng.gen_range(2..10);
        let len = rng.gen_range(1..5);
        let (order, paths) = consistent_family_order(&mut rng, b, len);
        let fam = PathFamily::new(&order, (1..=b).collect(), paths).unwrap();
        for i in 0..b {
            for j in 0..b {
                if i != j {
                    assert_ne!(classify_pair(&fam, i, j).unwrap(), PairClass::Neither);
                }
            }
        }
        let c = rng.gen_range(1..5);
        let d = rng.gen_range(1..5);
        if b > (c - 1) * (d - 1) {
            assert!(chain_or_antichain(&fam, c, d).is_ok());
        }
    }
}

#[test]
fn witness_edges_force_distinct_colors() {
    let (a, n) = (4, 2);
    let g = linlayout::graph::cartesian_product(&make_star(a).unwrap(), &make_hex_dual(n).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..25 {
        let mut seq: Vec<usize> = (0..g.vertex_count()).collect();
        seq.shuffle(&mut rng);
        let order = LinearOrder::from_sequence(seq).unwrap();
        let report = extract_crossing_witness(a, n, &order, 2, 2).unwrap();
        let best = min_stack_colors_for_order(&g, &order).unwrap();
        let colors: std::collections::BTreeSet<usize> =
            report.edges.iter().map(|&e| best.layout.coloring.color(e).unwrap()).collect();
        assert_eq!(colors.len(), report.edges.len());
        assert!(best.k >= report.lower_bound);
        for e in &report.edges {
            assert!(g.has_edge(e.u(), e.v()));
        }
    }
}

#[test]
fn hand_built_nesting_violates_consistency() {
    // R_1 = (1,q)-(1,q') nested inside R_2 = (2,q)-(2,q'): leaf 2 precedes leaf 1
    // at q but follows it at q', so no consistent family contains both.
    let n = 2;
    let (q, q2) = (linlayout::graph::GridCoord::new(1, 1), linlayout::graph::GridCoord::new(2, 1));
    let v = |u, p| star_hex_id(n, StarVertex::Leaf(u), p);
    let head = [v(2, q), v(1, q), v(1, q2), v(2, q2)];
    let mut seq = head.to_vec();
    seq.extend((0..3 * n * n).filter(|x| !head.contains(x)));
    let order = LinearOrder::from_sequence(seq).unwrap();
    let fam = PathFamily::new(&order, vec![1, 2], vec![vec![v(1, q), v(1, q2)], vec![v(2, q), v(2, q2)]]).unwrap();
    assert_eq!(classify_pair(&fam, 0, 1).unwrap(), PairClass::Neither);
    let before = |u1, u2, p| order.position(v(u1, p)) < order.position(v(u2, p));
    assert!(before(2, 1, q) && before(1, 2, q2));
    let fam = consistent_leaf_family(&order, 2, n).unwrap();
    assert_eq!(fam.size(), 2);
    assert_ne!(fam.directions[0], fam.directions[1]);
}

fn arb_order(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (4..=max).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn predicates_match_positions(seq in arb_order(10), picks in prop::collection::vec(any::<prop::sample::Index>(), 4)) {
        let n = seq.len();
        let order = LinearOrder::from_sequence(seq).unwrap();
        let pos: Vec<usize> = (0..n).map(|v| order.position(v)).collect();
        let vs: Vec<usize> = picks.iter().map(|i| i.index(n)).collect();
        prop_assume!(vs[0] != vs[1] && vs[2] != vs[3]);
        let (e, f) = (Edge::new(vs[0], vs[1]), Edge::new(vs[2], vs[3]));
        prop_assume!(e != f);
        let cr = crosses(&order, e, f).unwrap();
        prop_assert_eq!(cr, crosses(&order, f, e).unwrap());
        prop_assert_eq!(cr, pos_cross(&pos, (vs[0], vs[1]), (vs[2], vs[3])));
        let nest_any = pos_nest(&pos, (vs[0], vs[1]), (vs[2], vs[3])) || pos_nest(&pos, (vs[2], vs[3]), (vs[0], vs[1]));
        prop_assert_eq!(nests(&order, e, f).unwrap(), nest_any);
        prop_assert_eq!(nests(&order, f, e).unwrap(), nest_any);
        prop_assert!(!(cr && nest_any));
        if !e.shares_endpoint(&f) {
            let disjoint = pos[vs[0]].max(pos[vs[1]]) < pos[vs[2]].min(pos[vs[3]])
                || pos[vs[2]].max(pos[vs[3]]) < pos[vs[0]].min(pos[vs[1]]);
            prop_assert_eq!(1, [cr, nest_any, disjoint].iter().filter(|&&x| x).count());
        }
    }

    #[test]
    fn per_order_minimum_bounds(seq in arb_order(9), mask in any::<u64>()) {
        let n = seq.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .enumerate()
            .filter(|(k, _)| mask >> (k % 64) & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        let g = Graph::from_edges(n, pairs).unwrap();
        let order = LinearOrder::from_sequence(seq).unwrap();
        let best = min_stack_colors_for_order(&g, &order).unwrap();
        prop_assert!(verify_layout(&g, &best.layout).unwrap().valid);
        // any set of edges sharing a color is crossing-free
        for (e, c) in best.layout.coloring.iter() {
            for (f, d) in best.layout.coloring.iter() {
                if e < f && c == d {
                    prop_assert!(!is_pairwise_crossing(&order, &[e, f]));
                }
            }
        }
        let q = min_queue_colors_for_order(&g, &order).unwrap();
        prop_assert!(verify_layout(&g, &q.layout).unwrap().valid);
    }

    #[test]
    fn erdos_szekeres_bound(seq in prop::collection::vec(-1000i64..1000, 0..200)) {
        let mut distinct = seq.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let run = longest_monotone_subsequence(&distinct.iter().rev().copied().collect::<Vec<_>>());
        prop_assert_eq!(run.len(), distinct.len());
        let run = longest_monotone_subsequence(&seq);
        let mut uniq = seq.clone();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() == seq.len() {
            prop_assert!(run.len() * run.len() >= seq.len());
        }
    }

    #[test]
    fn leaf_families_are_consistent(seed in any::<u64>(), a in 1usize..12, n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seq: Vec<usize> = (0..(a + 1) * n * n).collect();
        seq.shuffle(&mut rng);
        let order = LinearOrder::from_sequence(seq).unwrap();
        let fam = consistent_leaf_family(&order, a, n).unwrap();
        prop_assert!(fam.is_consistent(&order));
        prop_assert_eq!(fam.step_sizes.len(), n * n);
        prop_assert_eq!(fam.step_sizes[0], a);
        for w in fam.step_sizes.windows(2) {
            prop_assert!(w[1] * w[1] >= w[0]);
            prop_assert!(w[1] <= w[0]);
        }
    }

    #[test]
    fn hex_path_always_found(seed in any::<u64>(), n in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coloring = GridColoring::random(n, &mut rng).unwrap();
        let grid = HexGrid::new(n).unwrap();
        let path = grid.find_monochromatic_path(&coloring).unwrap();
        prop_assert!(path.vertices.len() >= n);
        prop_assert!(grid.is_monochromatic_path(&coloring, &path.vertices));
        prop_assert!(path.vertices.iter().all(|&v| coloring.color_of(v) == path.color));
        let flipped = GridColoring::new(n, coloring.colors().iter().map(|c| c.other()).collect()).unwrap();
        let other = grid.find_monochromatic_path(&flipped).unwrap();
        prop_assert!(other.vertices.len() >= n);
    }

    #[test]
    fn separation_is_transitive(seed in any::<u64>(), b in 2usize..9, len in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (order, paths) = consistent_family_order(&mut rng, b, len);
        let fam = PathFamily::new(&order, (1..=b).collect(), paths).unwrap();
        let lt = |i, j| i != j && classify_pair(&fam, i, j).unwrap() == PairClass::SeparatedLt;
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    if lt(i, j) && lt(j, k) {
                        prop_assert!(lt(i, k));
                    }
                }
            }
        }
        match chain_or_antichain(&fam, 3, 3) {
            Ok(ChainOrAntichain::Chain(ch)) => {
                for w in ch.windows(2) {
                    prop_assert!(lt(w[0], w[1]));
                }
            }
            Ok(ChainOrAntichain::Antichain(an)) => {
                for (x, &i) in an.iter().enumerate() {
                    for &j in &an[x + 1..] {
                        prop_assert_eq!(classify_pair(&fam, i, j).unwrap(), PairClass::Crossing);
                    }
                }
            }
            Err(e) => prop_assert!(b <= 4, "failed on {} paths: {}", b, e),
        }
    }

    #[test]
    fn ramsey_bound_is_symmetric(r in 1usize..40, s in 1usize..40) {
        prop_assert_eq!(ramsey_upper_bound(r, s).unwrap(), ramsey_upper_bound(s, r).unwrap());
    }

    #[test]
    fn witnesses_pairwise_cross(seed in any::<u64>(), a in 2usize..8, n in 1usize..4, c in 1usize..4, d in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seq: Vec<usize> = (0..(a + 1) * n * n).collect();
        seq.shuffle(&mut rng);
        let order = LinearOrder::from_sequence(seq).unwrap();
        match extract_crossing_witness(a, n, &order, c, d) {
            Ok(report) => {
                prop_assert!(is_pairwise_crossing(&order, &report.edges));
                prop_assert_eq!(report.lower_bound, report.edges.len());
                prop_assert!(report.trace.leaf_family.is_consistent(&order));
                prop_assert_eq!(report.trace.path.len(), n);
            }
            Err(linlayout::Error::InsufficientScale { paths, .. }) => prop_assert!(paths <= (c - 1) * (d - 1)),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }
}
