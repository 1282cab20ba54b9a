//! Crossing witnesses for vertex orders of `S_a □ H_n`.
//!
//! Given an order, the pipeline selects a consistently ordered leaf family,
//! colors the grid by direction, takes a monochromatic grid path `Q` of `n`
//! vertices, and looks at the leaf paths `{u} × Q`. A long separated chain
//! yields a fan of edges from root copies to the chain; a large crossing
//! antichain yields a bundle of parallel edges crossing one fixed edge.
//! Either way the returned edges pairwise cross, so any stack layout on that
//! order needs at least that many colors.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{hex_coord, star_hex_id, Edge, GridCoord, StarVertex, VertexId};
use crate::hexpath::{find_monochromatic_path, Color, GridColoring};
use crate::layout::{is_pairwise_crossing, LinearOrder};
use crate::monotone::{consistent_leaf_family, Direction, LeafFamily};
use crate::poset::{chain_or_antichain, classification_matrix, ramsey_upper_bound, ChainOrAntichain, PairClass, PathFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    /// Separated chain; the chain's first half lies before the middle root copy.
    SeparatedBefore,
    /// Separated chain; the middle root copy lies before the chain's second half.
    SeparatedAfter,
    Crossing,
}

impl WitnessCase {
    pub fn tag(&self) -> &'static str {
        match self {
            WitnessCase::SeparatedBefore => "I.1",
            WitnessCase::SeparatedAfter => "I.2",
            WitnessCase::Crossing => "II",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "I.1" => Some(WitnessCase::SeparatedBefore),
            "I.2" => Some(WitnessCase::SeparatedAfter),
            "II" => Some(WitnessCase::Crossing),
            _ => None,
        }
    }
}

/// Intermediate artifacts of one pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTrace {
    pub leaf_family: LeafFamily,
    /// Grid path `Q`, truncated to `n` vertices.
    pub path: Vec<GridCoord>,
    pub path_color: Color,
    /// Leaves of the path family, ascending; row `i` classifies path `i`.
    pub family_leaves: Vec<usize>,
    pub classification: Vec<Vec<Option<PairClass>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub case: WitnessCase,
    /// Pairwise crossing edges under the input order.
    pub edges: Vec<Edge>,
    /// Size of the consistent leaf family.
    pub b: usize,
    /// Size of the chain or antichain the case was built from.
    pub selected: usize,
    pub lower_bound: usize,
    pub trace: WitnessTrace,
}

/// Fan of edges between root copies and a separated chain.
///
/// `chain` lists the paths in order (`R_1 ≺ R_2 ≺ ...`), `roots` holds the
/// root copies sorted by position, and `partner(i, root)` is the vertex of
/// path `i` adjacent to `root`.
pub fn case_separated(
    fam: &PathFamily<'_>,
    chain: &[usize],
    roots: &[VertexId],
    partner: impl Fn(usize, VertexId) -> VertexId,
) -> Result<(WitnessCase, Vec<Edge>)> {
    let order = fam.order();
    let n = roots.len();
    let half_n = n.div_ceil(2);
    let h = chain.len() / 2;
    if n == 0 {
        return Ok((WitnessCase::SeparatedBefore, Vec::new()));
    }
    let middle = roots[half_n - 1];
    let before = h == 0 || fam.path(chain[h - 1]).iter().all(|&v| order.precedes(v, middle));
    if before {
        let edges = (0..h.min(half_n))
            .map(|i| {
                let root = roots[half_n + i - 1];
                Edge::new(root, partner(chain[i], root))
            })
            .collect();
        return Ok((WitnessCase::SeparatedBefore, edges));
    }
    if !fam.path(chain[h]).iter().all(|&v| order.precedes(middle, v)) {
        return Err(Error::Invariant("middle root copy lies inside two consecutive chain paths".into()));
    }
    let edges = (0..(chain.len() - h).min(half_n))
        .map(|i| {
            let root = roots[i];
            Edge::new(root, partner(chain[h + i], root))
        })
        .collect();
    Ok((WitnessCase::SeparatedAfter, edges))
}

/// Bundle of edges of the other paths that cross one edge of the first
/// path and agree on the copy of their inside endpoint, the copy of their
/// outside endpoint, and the side of that outside endpoint.
///
/// `copy_of` maps a vertex to its grid vertex.
pub fn case_crossing(fam: &PathFamily<'_>, antichain: &[usize], copy_of: impl Fn(VertexId) -> VertexId) -> Vec<Edge> {
    let order = fam.order();
    let Some((&first, rest)) = antichain.split_first() else {
        return Vec::new();
    };
    let others: Vec<Edge> = rest.iter().flat_map(|&j| fam.edges(j)).collect();

    // crossed edge of the first path with the most crossing edges; ties to the leftmost
    let best = fam
        .edges(first)
        .into_iter()
        .map(|e| {
            let span = order.span(e);
            let crossing: Vec<Edge> = others
                .iter()
                .copied()
                .filter(|&f| span.crosses(&order.span(f)))
                .collect();
            (span, crossing)
        })
        .max_by(|(s, x), (t, y)| x.len().cmp(&y.len()).then(t.lo.cmp(&s.lo)));
    let Some((span, crossing)) = best else {
        return Vec::new();
    };

    // (inside copy, outside copy, outside after) -> edges
    let mut groups: std::collections::BTreeMap<(VertexId, VertexId, bool), Vec<Edge>> = Default::default();
    for f in crossing {
        let (x, y) = f.endpoints();
        let px = order.position(x);
        let (inside, outside) = if span.lo < px && px < span.hi { (x, y) } else { (y, x) };
        let after = order.position(outside) > span.hi;
        groups
            .entry((copy_of(inside), copy_of(outside), after))
            .or_default()
            .push(f);
    }
    // largest group; the map iterates keys ascending so the first maximum wins
    let mut chosen: Vec<Edge> = Vec::new();
    for edges in groups.into_values() {
        if edges.len() > chosen.len() {
            chosen = edges;
        }
    }
    chosen
}

/// Runs the full pipeline on `order` over the vertices of `S_a □ H_n`.
///
/// Fails with `InsufficientScale` when the leaf family holds neither a chain
/// of `c` separated paths nor `d` pairwise crossing ones.
pub fn extract_crossing_witness(a: usize, n: usize, order: &LinearOrder, c: usize, d: usize) -> Result<WitnessReport> {
    if c == 0 || d == 0 {
        return Err(Error::InvalidParameter("c and d must be at least 1".into()));
    }
    let family = consistent_leaf_family(order, a, n)?;
    let coloring = GridColoring::new(
        n,
        family
            .directions
            .iter()
            .map(|dir| match dir {
                Direction::Increasing => Color::Red,
                Direction::Decreasing => Color::Blue,
            })
            .collect(),
    )?;
    let found = find_monochromatic_path(&coloring)?;
    if found.vertices.len() < n {
        return Err(Error::Invariant(format!(
            "monochromatic path has {} vertices, expected at least {n}",
            found.vertices.len()
        )));
    }
    let q: Vec<VertexId> = found.vertices[..n].to_vec();
    let cell = |u: StarVertex, p: VertexId| star_hex_id(n, u, hex_coord(n, p));

    let mut leaves = family.leaves.clone();
    leaves.sort_unstable();
    let paths: Vec<Vec<VertexId>> = leaves
        .iter()
        .map(|&u| q.iter().map(|&p| cell(StarVertex::Leaf(u), p)).collect())
        .collect();
    let fam = PathFamily::new(order, leaves.clone(), paths)?;

    let selection = match chain_or_antichain(&fam, c, d) {
        Err(Error::Precondition(msg)) => {
            return Err(Error::Invariant(format!("consistent family has an unclassifiable pair: {msg}")))
        }
        other => other?,
    };

    let (case, edges, selected) = match &selection {
        ChainOrAntichain::Chain(chain) => {
            let mut roots: Vec<VertexId> = q.iter().map(|&p| cell(StarVertex::Root, p)).collect();
            roots.sort_by_key(|&v| order.position(v));
            let partner = |path: usize, root: VertexId| cell(StarVertex::Leaf(leaves[path]), root % (n * n));
            let (case, edges) = case_separated(&fam, chain, &roots, partner)?;
            (case, edges, chain.len())
        }
        ChainOrAntichain::Antichain(anti) => {
            let edges = case_crossing(&fam, anti, |v| v % (n * n));
            (WitnessCase::Crossing, edges, anti.len())
        }
    };
    if !is_pairwise_crossing(order, &edges) {
        return Err(Error::Invariant(format!("case {} produced edges that do not pairwise cross", case.tag())));
    }

    let trace = WitnessTrace {
        path: q.iter().map(|&p| hex_coord(n, p)).collect(),
        path_color: found.color,
        family_leaves: leaves,
        classification: classification_matrix(&fam),
        leaf_family: family,
    };
    Ok(WitnessReport {
        case,
        lower_bound: edges.len(),
        edges,
        b: fam.len(),
        selected,
        trace,
    })
}

/// Edge count the separated case guarantees for chain parameter `c`.
pub fn separated_guarantee(c: usize, n: usize) -> usize {
    (c / 2).min(n.div_ceil(2))
}

/// Edge count the crossing case guarantees for antichain parameter `d`.
pub fn crossing_guarantee(d: usize, n: usize) -> usize {
    d.saturating_sub(1).div_ceil(4 * n * n)
}

/// Parameters under which every order of `S_a □ H_n` forces `s` stack colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleParameters {
    pub s: usize,
    pub n: usize,
    pub c: usize,
    pub d: usize,
    pub m: BigUint,
    /// Upper bound on the Ramsey number for `(c, d)`; the leaf family size.
    pub b_bound: BigUint,
    /// Number of leaves `a = b_bound^m`, kept as base and exponent.
    pub a_base: BigUint,
    pub a_exponent: BigUint,
    pub a_digits: BigUint,
    pub separated_guarantee: usize,
    pub crossing_guarantee: usize,
}

/// Largest `s` accepted by `required_parameters`.
pub const MAX_SCALE: usize = 64;

pub fn required_parameters(s: usize) -> Result<ScaleParameters> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    if s > MAX_SCALE {
        return Err(Error::ResourceLimit(format!("s = {s} exceeds the supported maximum {MAX_SCALE}")));
    }
    let n = 2 * s;
    let c = 2 * s;
    let d = 4 * n * n * s + 1;
    let squarings = n * n - 1;
    let b_bound = ramsey_upper_bound(c, d)?;
    let a_digits = power_of_two_power_digits(&b_bound, squarings);
    Ok(ScaleParameters {
        s,
        n,
        c,
        d,
        m: BigUint::one() << squarings,
        a_base: b_bound.clone(),
        a_exponent: BigUint::one() << squarings,
        b_bound,
        a_digits,
        separated_guarantee: separated_guarantee(c, n),
        crossing_guarantee: crossing_guarantee(d, n),
    })
}

/// Decimal digit count of `base^(2^k)` for `base >= 1`, without forming the power.
///
/// Tracks the mantissa in `[1, 10)` as an interval of fixed-point numbers
/// through `k` squarings, doubling the precision whenever the interval
/// straddles a power of ten.
pub fn power_of_two_power_digits(base: &BigUint, k: usize) -> BigUint {
    assert!(!base.is_zero(), "base must be positive");
    let mut bits = 2 * k + 64;
    loop {
        if let Some(exp) = mantissa_squarings(base, k, bits) {
            return exp + 1u32;
        }
        bits *= 2;
    }
}

fn mantissa_squarings(base: &BigUint, k: usize, bits: usize) -> Option<BigUint> {
    let one = BigUint::one() << bits;
    let ten = &one * 10u32;
    let base_digits = base.to_string().len();
    let scale = BigUint::from(10u32).pow(base_digits as u32 - 1);
    let scaled = base << bits;
    let mut lo = &scaled / &scale;
    let mut hi = scaled.div_ceil(&scale);
    let mut exp = BigUint::from(base_digits - 1);
    for _ in 0..k {
        lo = (&lo * &lo) >> bits;
        hi = (&hi * &hi + &one - 1u32) >> bits;
        exp <<= 1;
        if lo >= ten {
            lo /= 10u32;
            hi = hi.div_ceil(&BigUint::from(10u32));
            exp += 1u32;
        } else if hi >= ten {
            return None;
        }
    }
    Some(exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GridCoord;

    fn block_order(a: usize, n: usize, reverse_leaves_after_first: bool) -> LinearOrder {
        let mut seq = Vec::new();
        for p in 0..n * n {
            seq.push(star_hex_id(n, StarVertex::Root, hex_coord(n, p)));
            let mut leaves: Vec<usize> = (1..=a).collect();
            if reverse_leaves_after_first && p > 0 {
                leaves.reverse();
            }
            seq.extend(leaves.into_iter().map(|u| star_hex_id(n, StarVertex::Leaf(u), hex_coord(n, p))));
        }
        LinearOrder::from_sequence(seq).unwrap()
    }

    #[test]
    fn leaf_major_order_completes() {
        let (a, n) = (4, 2);
        let order = LinearOrder::identity((a + 1) * n * n);
        let report = extract_crossing_witness(a, n, &order, 2, 2).unwrap();
        assert!(is_pairwise_crossing(&order, &report.edges));
        assert_eq!(report.lower_bound, report.edges.len());
        assert_eq!(report.b, 4);
        // leaf paths occupy disjoint blocks, so they form one long chain
        assert_eq!(report.selected, 4);
        assert!(report.lower_bound >= separated_guarantee(2, n));
    }

    #[test]
    fn reversed_blocks_record_decreasing_directions() {
        let (a, n) = (9, 2);
        let order = block_order(a, n, true);
        let report = extract_crossing_witness(a, n, &order, 2, 2).unwrap();
        let dirs = &report.trace.leaf_family.directions;
        assert_eq!(dirs[0], Direction::Increasing);
        assert!(dirs[1..].iter().all(|&d| d == Direction::Decreasing));
        assert!(report.trace.leaf_family.is_consistent(&order));
        assert!(is_pairwise_crossing(&order, &report.edges));
        assert_eq!(report.trace.path.len(), n);
    }

    #[test]
    fn block_order_gives_crossing_paths() {
        let (a, n) = (6, 3);
        let order = block_order(a, n, false);
        let report = extract_crossing_witness(a, n, &order, 7, 6).unwrap();
        assert_eq!(report.case, WitnessCase::Crossing);
        assert_eq!(report.selected, 6);
        assert!(report.lower_bound >= crossing_guarantee(6, n));
        assert!(is_pairwise_crossing(&order, &report.edges));
    }

    #[test]
    fn separated_subcases() {
        // c = 2, n = 2 with blocks R_1 ≺ t_1 ≺ R_2 ≺ t_2 on the path [1,1] - [2,1]
        let n = 2;
        let v = |u: StarVertex, a: usize| star_hex_id(n, u, GridCoord::new(a, 1));
        let (l1, l2, root) = (StarVertex::Leaf(1), StarVertex::Leaf(2), StarVertex::Root);
        let mut seq = vec![v(l1, 1), v(l1, 2), v(root, 1), v(l2, 1), v(l2, 2), v(root, 2)];
        let used: std::collections::BTreeSet<_> = seq.iter().copied().collect();
        seq.extend((0..3 * n * n).filter(|x| !used.contains(x)));
        let order = LinearOrder::from_sequence(seq).unwrap();
        let paths = vec![vec![v(l1, 1), v(l1, 2)], vec![v(l2, 1), v(l2, 2)]];
        let fam = PathFamily::new(&order, vec![1, 2], paths).unwrap();
        let roots = [v(root, 1), v(root, 2)];
        let partner = |path: usize, r: VertexId| star_hex_id(n, StarVertex::Leaf(path + 1), hex_coord(n, r % 4));
        let (case, edges) = case_separated(&fam, &[0, 1], &roots, partner).unwrap();
        assert_eq!(case, WitnessCase::SeparatedBefore);
        assert_eq!(edges, vec![Edge::new(v(root, 1), v(l1, 1))]);

        // root copies first: second subcase
        let mut seq = vec![v(root, 1), v(root, 2), v(l1, 1), v(l1, 2), v(l2, 1), v(l2, 2)];
        seq.extend((0..3 * n * n).filter(|x| !used.contains(x)));
        let order = LinearOrder::from_sequence(seq).unwrap();
        let paths = vec![vec![v(l1, 1), v(l1, 2)], vec![v(l2, 1), v(l2, 2)]];
        let fam = PathFamily::new(&order, vec![1, 2], paths).unwrap();
        let (case, edges) = case_separated(&fam, &[0, 1], &roots, partner).unwrap();
        assert_eq!(case, WitnessCase::SeparatedAfter);
        assert_eq!(edges, vec![Edge::new(v(root, 1), v(l2, 1))]);
    }

    #[test]
    fn insufficient_scale_is_reported() {
        let (a, n) = (2, 2);
        let order = LinearOrder::identity((a + 1) * n * n);
        match extract_crossing_witness(a, n, &order, 5, 50) {
            Err(Error::InsufficientScale { paths, c, d, .. }) => assert_eq!((paths, c, d), (2, 5, 50)),
            other => panic!("expected insufficient scale, got {other:?}"),
        }
    }

    #[test]
    fn parameters_for_small_scales() {
        let p = required_parameters(1).unwrap();
        assert_eq!((p.n, p.c, p.d), (2, 2, 17));
        assert_eq!(p.m, BigUint::from(8u32));
        assert_eq!(p.b_bound, BigUint::from(17u32));
        assert_eq!(p.a_digits, BigUint::from(17u64.pow(8).to_string().len()));
        assert_eq!((p.separated_guarantee, p.crossing_guarantee), (1, 1));

        let p = required_parameters(2).unwrap();
        assert_eq!(p.m, BigUint::from(32768u32));
        assert_eq!(p.b_bound, BigUint::from(366_145u32));
        let approx = (32768.0 * 366_145f64.log10()).floor() as u64 + 1;
        assert_eq!(p.a_digits, BigUint::from(approx));
        assert_eq!((p.separated_guarantee, p.crossing_guarantee), (2, 2));

        let p = required_parameters(3).unwrap();
        assert_eq!(p.m, BigUint::one() << 35);
        assert!(required_parameters(0).is_err());
    }

    #[test]
    fn digit_counts_match_exact_powers() {
        for base in [1u32, 2, 9, 10, 11, 99, 100, 366_145] {
            for k in 0..8 {
                let exact = BigUint::from(base).pow(1 << k).to_string().len();
                assert_eq!(
                    power_of_two_power_digits(&BigUint::from(base), k),
                    BigUint::from(exact),
                    "base {base}, k {k}"
                );
            }
        }
    }
}
