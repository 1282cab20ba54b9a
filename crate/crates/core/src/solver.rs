//! Exact stack and queue numbers of small graphs by enumerating vertex
//! orders up to symmetry.
//!
//! Crossing is invariant under reversal and rotation of the order, so the
//! stack search fixes vertex 0 first and keeps only orders whose second
//! vertex is smaller than the last. Nesting is invariant under reversal only,
//! so the queue search keeps orders whose first vertex is smaller than the
//! last. Orders are visited in lexicographic order and only strict
//! improvements replace the incumbent, so the returned layout is the first
//! optimal one in that ranking.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{
    min_queue_colors_for_order, nesting_depths, stack_colors_below, EdgeColoring, Layout, LayoutKind, LinearOrder,
    DEFAULT_STACK_EDGE_LIMIT,
};

#[derive(Clone, Debug, PartialEq)]
pub struct SolveBudget {
    pub max_vertices: usize,
    pub max_orders: u64,
    /// Advisory only; not enforced.
    pub time_hint: Option<f64>,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_vertices: 9,
            max_orders: u64::MAX,
            time_hint: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub k: usize,
    pub layout: Layout,
    pub orders_examined: u64,
}

/// Rearranges `xs` into the next lexicographic permutation; false when
/// `xs` was the last one.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Counting bound: every page or queue holds at most `2n - 3` edges.
fn counting_lower_bound(g: &Graph) -> usize {
    let (n, m) = (g.vertex_count(), g.edge_count());
    match m {
        0 => 0,
        _ if n <= 2 => 1,
        _ => m.div_ceil(2 * n - 3),
    }
}

fn check_vertices(g: &Graph, budget: &SolveBudget, kind: LayoutKind) -> Result<()> {
    if budget.max_vertices == 0 {
        return Err(Error::InvalidParameter("max_vertices must be at least 1".into()));
    }
    if g.vertex_count() <= budget.max_vertices {
        return Ok(());
    }
    let identity = LinearOrder::identity(g.vertex_count());
    let upper = match kind {
        LayoutKind::Queue => min_queue_colors_for_order(g, &identity).ok().map(|m| m.k),
        LayoutKind::Stack if g.edge_count() <= DEFAULT_STACK_EDGE_LIMIT => {
            stack_colors_below(g, &identity, None).map(|(k, _)| k)
        }
        LayoutKind::Stack => None,
    };
    Err(Error::BudgetExceeded {
        lower: counting_lower_bound(g),
        upper,
        orders_examined: 0,
    })
}

/// Walks the symmetry-reduced orders for `kind`, calling `visit` on each;
/// `visit` returns true to stop early.
fn for_each_order(
    n: usize,
    kind: LayoutKind,
    max_orders: u64,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> std::result::Result<u64, u64> {
    let mut seq: Vec<usize> = (0..n).collect();
    let mut examined = 0u64;
    loop {
        let canonical = match kind {
            LayoutKind::Stack => n < 3 || seq[1] < seq[n - 1],
            LayoutKind::Queue => n < 2 || seq[0] < seq[n - 1],
        };
        if canonical {
            if examined == max_orders {
                return Err(examined);
            }
            examined += 1;
            if visit(&seq) {
                return Ok(examined);
            }
        }
        let more = match kind {
            LayoutKind::Stack => n > 1 && next_permutation(&mut seq[1..]),
            LayoutKind::Queue => next_permutation(&mut seq),
        };
        if !more {
            return Ok(examined);
        }
    }
}

/// Exact stack number with an optimal layout.
pub fn stack_number(g: &Graph, budget: &SolveBudget) -> Result<Solution> {
    check_vertices(g, budget, LayoutKind::Stack)?;
    let lower = counting_lower_bound(g);
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    let walk = for_each_order(g.vertex_count(), LayoutKind::Stack, budget.max_orders, |seq| {
        let order = LinearOrder::from_sequence(seq.to_vec()).expect("enumerated permutation");
        let cap = best.as_ref().map(|b| b.0);
        if let Some((k, colors)) = stack_colors_below(g, &order, cap) {
            best = Some((k, seq.to_vec(), colors));
        }
        best.as_ref().is_some_and(|b| b.0 <= lower)
    });
    finish(g, LayoutKind::Stack, lower, walk, best)
}

/// Exact queue number with an optimal layout.
pub fn queue_number(g: &Graph, budget: &SolveBudget) -> Result<Solution> {
    check_vertices(g, budget, LayoutKind::Queue)?;
    let lower = counting_lower_bound(g);
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    let walk = for_each_order(g.vertex_count(), LayoutKind::Queue, budget.max_orders, |seq| {
        let order = LinearOrder::from_sequence(seq.to_vec()).expect("enumerated permutation");
        let depth = nesting_depths(g, &order);
        let k = depth.iter().copied().max().unwrap_or(0);
        if best.as_ref().is_none_or(|b| k < b.0) {
            best = Some((k, seq.to_vec(), depth.iter().map(|d| d - 1).collect()));
        }
        best.as_ref().is_some_and(|b| b.0 <= lower)
    });
    finish(g, LayoutKind::Queue, lower, walk, best)
}

fn finish(
    g: &Graph,
    kind: LayoutKind,
    lower: usize,
    walk: std::result::Result<u64, u64>,
    best: Option<(usize, Vec<usize>, Vec<usize>)>,
) -> Result<Solution> {
    let examined = match walk {
        Ok(examined) => examined,
        Err(examined) => {
            return Err(Error::BudgetExceeded {
                lower,
                upper: best.map(|b| b.0),
                orders_examined: examined,
            })
        }
    };
    let (k, seq, colors) = best.ok_or_else(|| Error::Invariant("order enumeration visited nothing".into()))?;
    Ok(Solution {
        k,
        layout: Layout {
            kind,
            order: LinearOrder::from_sequence(seq)?,
            coloring: EdgeColoring::from_edge_colors(g, &colors),
        },
        orders_examined: examined,
    })
}
