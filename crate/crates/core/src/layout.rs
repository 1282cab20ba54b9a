//! Linear orders, the crossing and nesting predicates, layout verification
//! and exact per-order color minima.

use std::collections::BTreeMap;

use crate::coloring::{exact_coloring, ConflictGraph};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// Default cap on the number of edges handed to the exact stack colorer.
pub const DEFAULT_STACK_EDGE_LIMIT: usize = 64;

/// A strict total order on `0..n`, stored both as a sequence and as the
/// inverse position table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    sequence: Vec<VertexId>,
    position: Vec<usize>,
}

impl LinearOrder {
    /// Accepts any permutation of `0..sequence.len()`.
    pub fn from_sequence(sequence: Vec<VertexId>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidParameter(format!("vertex {v} outside 0..{n} in order")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("vertex {v} repeated in order")));
            }
            position[v] = i;
        }
        Ok(LinearOrder { sequence, position })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder {
            sequence: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[VertexId] {
        &self.sequence
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.position[v]
    }

    pub fn precedes(&self, x: VertexId, y: VertexId) -> bool {
        self.position[x] < self.position[y]
    }

    pub fn reversed(&self) -> Self {
        let mut sequence = self.sequence.clone();
        sequence.reverse();
        LinearOrder::from_sequence(sequence).expect("reversal of a permutation")
    }

    pub fn span(&self, e: Edge) -> Span {
        Span::new(self.position[e.u()], self.position[e.v()])
    }
}

/// The positions of an edge's endpoints, `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn new(x: usize, y: usize) -> Self {
        Span { lo: x.min(y), hi: x.max(y) }
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi == self.lo
    }

    /// `x < y < x' < y'` or `y < x < y' < x'`.
    pub fn crosses(&self, other: &Span) -> bool {
        (self.lo < other.lo && other.lo < self.hi && self.hi < other.hi)
            || (other.lo < self.lo && self.lo < other.hi && other.hi < self.hi)
    }

    /// `x < y < y' < x'` or `y < x < x' < y'`.
    pub fn nests(&self, other: &Span) -> bool {
        self.strictly_contains(other) || other.strictly_contains(self)
    }

    pub fn strictly_contains(&self, other: &Span) -> bool {
        self.lo < other.lo && other.hi < self.hi
    }

    /// Containment allowing shared endpoints, for distinct spans.
    pub fn weakly_nests(&self, other: &Span) -> bool {
        self != other
            && ((self.lo <= other.lo && other.hi <= self.hi) || (other.lo <= self.lo && self.hi <= other.hi))
    }
}

fn check_edge_pair(order: &LinearOrder, e: Edge, f: Edge) -> Result<()> {
    if e == f {
        return Err(Error::InvalidParameter(format!("edge {e} compared with itself")));
    }
    for x in [e.u(), e.v(), f.u(), f.v()] {
        if x >= order.len() {
            return Err(Error::InvalidParameter(format!("vertex {x} not covered by the order")));
        }
    }
    Ok(())
}

/// Whether `e` and `f` cross under `order`. Edges sharing an endpoint never cross.
pub fn crosses(order: &LinearOrder, e: Edge, f: Edge) -> Result<bool> {
    check_edge_pair(order, e, f)?;
    Ok(order.span(e).crosses(&order.span(f)))
}

/// Whether `e` and `f` nest under `order`. Edges sharing an endpoint never nest.
pub fn nests(order: &LinearOrder, e: Edge, f: Edge) -> Result<bool> {
    check_edge_pair(order, e, f)?;
    Ok(order.span(e).nests(&order.span(f)))
}

/// True iff every unordered pair of `edges` crosses. Vacuously true for
/// fewer than two edges.
pub fn is_pairwise_crossing(order: &LinearOrder, edges: &[Edge]) -> bool {
    let spans: Vec<Span> = edges.iter().map(|&e| order.span(e)).collect();
    spans
        .iter()
        .enumerate()
        .all(|(i, s)| spans[i + 1..].iter().all(|t| s.crosses(t)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LayoutKind {
    Stack,
    Queue,
}

impl LayoutKind {
    pub fn name(&self) -> &'static str {
        match self {
            LayoutKind::Stack => "stack",
            LayoutKind::Queue => "queue",
        }
    }

    /// The pair relation that same-colored edges must avoid.
    pub fn conflicts(&self, s: &Span, t: &Span) -> bool {
        match self {
            LayoutKind::Stack => s.crosses(t),
            LayoutKind::Queue => s.nests(t),
        }
    }
}

/// Assignment of a color in `0..k` to each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<Edge, usize>,
    k: usize,
}

impl EdgeColoring {
    /// `k` is the declared number of colors; every color must be below it.
    pub fn new(colors: BTreeMap<Edge, usize>, k: usize) -> Result<Self> {
        if let Some((e, c)) = colors.iter().find(|(_, &c)| c >= k) {
            return Err(Error::InvalidParameter(format!("edge {e} has color {c} outside 0..{k}")));
        }
        Ok(EdgeColoring { colors, k })
    }

    /// Colors listed in the graph's edge order; `k` is one more than the largest color.
    pub fn from_edge_colors(g: &Graph, colors: &[usize]) -> Self {
        assert_eq!(colors.len(), g.edge_count());
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        EdgeColoring {
            colors: g.edges().iter().copied().zip(colors.iter().copied()).collect(),
            k,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, e: Edge) -> Option<usize> {
        self.colors.get(&e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut used: Vec<usize> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }
}

/// A vertex order plus edge coloring, interpreted as a stack or queue layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub kind: LayoutKind,
    pub order: LinearOrder,
    pub coloring: EdgeColoring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Every same-colored pair that crosses (stack) or nests (queue).
    pub violations: Vec<(Edge, Edge)>,
}

/// Checks a layout against `g`, listing every violating pair.
pub fn verify_layout(g: &Graph, layout: &Layout) -> Result<VerifyReport> {
    if layout.order.len() != g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "order covers {} vertices, graph has {}",
            layout.order.len(),
            g.vertex_count()
        )));
    }
    if let Some(e) = g.edges().iter().find(|&&e| layout.coloring.color(e).is_none()) {
        return Err(Error::InvalidParameter(format!("edge {e} has no color")));
    }
    if let Some((e, _)) = layout.coloring.iter().find(|&(e, _)| g.edge_index(e).is_none()) {
        return Err(Error::InvalidParameter(format!("colored pair {e} is not an edge of the graph")));
    }
    let mut classes: BTreeMap<usize, Vec<(Edge, Span)>> = BTreeMap::new();
    for &e in g.edges() {
        let c = layout.coloring.color(e).expect("checked above");
        classes.entry(c).or_default().push((e, layout.order.span(e)));
    }
    let mut violations = Vec::new();
    for members in classes.values() {
        for (i, (e, s)) in members.iter().enumerate() {
            for (f, t) in &members[i + 1..] {
                if layout.kind.conflicts(s, t) {
                    violations.push((*e, *f));
                }
            }
        }
    }
    violations.sort_unstable();
    Ok(VerifyReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Minimum number of colors for a fixed order, with a witness layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderMinimum {
    pub k: usize,
    pub layout: Layout,
}

fn check_order(g: &Graph, order: &LinearOrder) -> Result<()> {
    if order.len() != g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "order covers {} vertices, graph has {}",
            order.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

pub(crate) fn crossing_conflicts(g: &Graph, order: &LinearOrder) -> ConflictGraph {
    let spans: Vec<Span> = g.edges().iter().map(|&e| order.span(e)).collect();
    let mut conflicts = ConflictGraph::new(spans.len());
    for i in 0..spans.len() {
        for j in i + 1..spans.len() {
            if spans[i].crosses(&spans[j]) {
                conflicts.add(i, j);
            }
        }
    }
    conflicts
}

/// Exact minimum number of stacks for `order` (chromatic number of the
/// crossing conflict graph) using the default edge limit.
pub fn min_stack_colors_for_order(g: &Graph, order: &LinearOrder) -> Result<OrderMinimum> {
    min_stack_colors_for_order_with_limit(g, order, DEFAULT_STACK_EDGE_LIMIT)
}

pub fn min_stack_colors_for_order_with_limit(g: &Graph, order: &LinearOrder, edge_limit: usize) -> Result<OrderMinimum> {
    check_order(g, order)?;
    if g.edge_count() > edge_limit {
        return Err(Error::ResourceLimit(format!(
            "{} edges exceed the exact stack coloring limit of {edge_limit}",
            g.edge_count()
        )));
    }
    let (k, colors) = stack_colors_below(g, order, None).expect("uncapped coloring always succeeds");
    Ok(OrderMinimum {
        k,
        layout: Layout {
            kind: LayoutKind::Stack,
            order: order.clone(),
            coloring: EdgeColoring::from_edge_colors(g, &colors),
        },
    })
}

/// Optimal stack coloring for `order` using fewer than `cap` colors, if any.
pub(crate) fn stack_colors_below(g: &Graph, order: &LinearOrder, cap: Option<usize>) -> Option<(usize, Vec<usize>)> {
    exact_coloring(&crossing_conflicts(g, order), cap)
}

/// Per-edge nesting depth: 1 + the deepest chain of edges strictly inside.
/// Edges of equal depth never nest, and the maximum depth is the longest
/// chain of pairwise nested edges.
pub(crate) fn nesting_depths(g: &Graph, order: &LinearOrder) -> Vec<usize> {
    let spans: Vec<Span> = g.edges().iter().map(|&e| order.span(e)).collect();
    let mut by_length: Vec<usize> = (0..spans.len()).collect();
    by_length.sort_by_key(|&i| (spans[i].len(), i));
    let mut depth = vec![0usize; spans.len()];
    for (rank, &i) in by_length.iter().enumerate() {
        let inner = by_length[..rank]
            .iter()
            .filter(|&&j| spans[i].strictly_contains(&spans[j]))
            .map(|&j| depth[j])
            .max()
            .unwrap_or(0);
        depth[i] = inner + 1;
    }
    depth
}

/// Exact minimum number of queues for `order`: the longest chain of
/// pairwise nested edges, realized by coloring each edge with its nesting
/// depth.
pub fn min_queue_colors_for_order(g: &Graph, order: &LinearOrder) -> Result<OrderMinimum> {
    check_order(g, order)?;
    let depth = nesting_depths(g, order);
    let colors: Vec<usize> = depth.iter().map(|d| d - 1).collect();
    let coloring = EdgeColoring::from_edge_colors(g, &colors);
    Ok(OrderMinimum {
        k: coloring.k(),
        layout: Layout {
            kind: LayoutKind::Queue,
            order: order.clone(),
            coloring,
        },
    })
}
