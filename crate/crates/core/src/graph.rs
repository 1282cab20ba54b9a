//! Simple undirected graphs with typed vertex labels, the dual hexagonal grid
//! `H_n`, stars, Cartesian products and induced-subgraph traversal.
//!
//! Vertex ids are dense indices `0..|V|`; all layout arithmetic runs on ids
//! while the labels carry the semantic names (grid coordinates, star
//! vertices, product pairs).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Normalizes the endpoint order. Self-loops are representable here but
    /// rejected by [`Graph::new`].
    pub fn new(x: VertexId, y: VertexId) -> Self {
        if x <= y {
            Edge { u: x, v: y }
        } else {
            Edge { u: y, v: x }
        }
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A vertex `[a, b]` of `H_n`, both coordinates in `1..=n`.
///
/// Ordering is lexicographic on `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridCoord {
    pub a: usize,
    pub b: usize,
}

impl GridCoord {
    pub fn new(a: usize, b: usize) -> Self {
        GridCoord { a, b }
    }
}

impl fmt::Display for GridCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// A vertex of the star `S_a`: the root `t` or a leaf with index in `1..=a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StarVertex {
    Root,
    Leaf(usize),
}

impl StarVertex {
    /// Root is 0, leaf `i` is `i`. This is also the vertex id inside [`make_star`].
    pub fn index(&self) -> usize {
        match *self {
            StarVertex::Root => 0,
            StarVertex::Leaf(i) => i,
        }
    }

    pub fn from_index(i: usize) -> Self {
        if i == 0 {
            StarVertex::Root
        } else {
            StarVertex::Leaf(i)
        }
    }
}

/// A vertex `(u, p)` of `S_a □ H_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex {
    pub star: StarVertex,
    pub grid: GridCoord,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Plain(usize),
    /// Generic product vertex `(x, y)` by factor ids.
    Pair(VertexId, VertexId),
    Grid(GridCoord),
    Star(StarVertex),
    Product(ProductVertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Plain,
    Hex { n: usize },
    Star { a: usize },
    Product { a: usize, n: usize },
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Plain => "plain",
            GraphKind::Hex { .. } => "hex",
            GraphKind::Star { .. } => "star",
            GraphKind::Product { .. } => "product",
        }
    }
}

/// Immutable simple undirected graph.
///
/// Edges are kept sorted, so an edge's index in [`Graph::edges`] is a stable
/// id usable for per-edge arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    kind: GraphKind,
    labels: Vec<Label>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges, out-of-range
    /// endpoints and repeated labels.
    pub fn new(kind: GraphKind, labels: Vec<Label>, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let n = labels.len();
        let distinct: BTreeSet<&Label> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidParameter("vertex labels are not injective".into()));
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            if e.u == e.v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {}", e.u)));
            }
            if e.v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {e} references a vertex outside 0..{n}"
                )));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!("parallel edge {}", w[0])));
        }
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            kind,
            labels,
            edges,
            adjacency,
        })
    }

    /// Plain graph on `n` vertices labeled by their ids.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        Graph::new(
            GraphKind::Plain,
            (0..n).map(Label::Plain).collect(),
            edges.into_iter().map(|(x, y)| Edge::new(x, y)),
        )
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Graph::from_edges(n, edges).expect("cycle is simple")
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v]
    }

    /// Sorted edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, x: VertexId, y: VertexId) -> bool {
        x != y && x < self.vertex_count() && y < self.vertex_count() && self.edge_index(Edge::new(x, y)).is_some()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Returns the vertex carrying `label`, if any.
    pub fn find_label(&self, label: &Label) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Id of `[a, b]` in `H_n`: row-major, `(b - 1) * n + (a - 1)`.
pub fn hex_id(n: usize, p: GridCoord) -> VertexId {
    debug_assert!((1..=n).contains(&p.a) && (1..=n).contains(&p.b));
    (p.b - 1) * n + (p.a - 1)
}

pub fn hex_coord(n: usize, id: VertexId) -> GridCoord {
    GridCoord::new(id % n + 1, id / n + 1)
}

/// Adjacency in `H_n`: `|a-c| + |b-d| = 1` or `a - c = b - d ∈ {-1, 1}`.
pub fn hex_adjacent(p: GridCoord, q: GridCoord) -> bool {
    let da = p.a as isize - q.a as isize;
    let db = p.b as isize - q.b as isize;
    da.abs() + db.abs() == 1 || (da == db && da.abs() == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HexEdgeClass {
    /// Same row, `a` differs by one.
    Horizontal,
    /// Same column, `b` differs by one.
    Vertical,
    /// `[a, b] ~ [a + 1, b + 1]`.
    Diagonal,
}

/// Classifies an `H_n` edge given by its endpoint coordinates.
pub fn hex_edge_class(p: GridCoord, q: GridCoord) -> Option<HexEdgeClass> {
    if !hex_adjacent(p, q) {
        return None;
    }
    Some(if p.b == q.b {
        HexEdgeClass::Horizontal
    } else if p.a == q.a {
        HexEdgeClass::Vertical
    } else {
        HexEdgeClass::Diagonal
    })
}

/// The dual hexagonal grid `H_n` on `{1..n}²`, ids row-major.
pub fn make_hex_dual(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("H_n requires n >= 1".into()));
    }
    let labels = (0..n * n).map(|id| Label::Grid(hex_coord(n, id))).collect();
    let mut edges = Vec::with_capacity(3 * n * n);
    for b in 1..=n {
        for a in 1..=n {
            let p = GridCoord::new(a, b);
            let id = hex_id(n, p);
            if a < n {
                edges.push(Edge::new(id, hex_id(n, GridCoord::new(a + 1, b))));
            }
            if b < n {
                edges.push(Edge::new(id, hex_id(n, GridCoord::new(a, b + 1))));
            }
            if a < n && b < n {
                edges.push(Edge::new(id, hex_id(n, GridCoord::new(a + 1, b + 1))));
            }
        }
    }
    Graph::new(GraphKind::Hex { n }, labels, edges)
}

/// The star `S_a`: root id 0, leaf `i` has id `i`.
pub fn make_star(a: usize) -> Result<Graph> {
    if a == 0 {
        return Err(Error::InvalidParameter("S_a requires a >= 1".into()));
    }
    let labels = (0..=a).map(|i| Label::Star(StarVertex::from_index(i))).collect();
    Graph::new(GraphKind::Star { a }, labels, (1..=a).map(|i| Edge::new(0, i)))
}

/// Id of `(x, y)` in `g □ h`: `x * |V(h)| + y`.
pub fn product_id(h_vertices: usize, x: VertexId, y: VertexId) -> VertexId {
    x * h_vertices + y
}

/// Id of `(u, p)` in `S_a □ H_n` as built by [`cartesian_product`].
pub fn star_hex_id(n: usize, u: StarVertex, p: GridCoord) -> VertexId {
    product_id(n * n, u.index(), hex_id(n, p))
}

/// Cartesian product `g □ h`.
///
/// Vertex `(x, y)` gets id `x * |V(h)| + y`. A star times a hex grid yields
/// [`Label::Product`] labels and [`GraphKind::Product`]; any other pair of
/// factors yields [`Label::Pair`] labels.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::InvalidParameter("cartesian product of an empty graph".into()));
    }
    let hv = h.vertex_count();
    let (kind, star_hex) = match (g.kind(), h.kind()) {
        (GraphKind::Star { a }, GraphKind::Hex { n }) => (GraphKind::Product { a, n }, true),
        _ => (GraphKind::Plain, false),
    };
    let mut labels = Vec::with_capacity(g.vertex_count() * hv);
    for x in 0..g.vertex_count() {
        for y in 0..hv {
            let label = match (star_hex, g.label(x), h.label(y)) {
                (true, Label::Star(star), Label::Grid(grid)) => Label::Product(ProductVertex { star, grid }),
                _ => Label::Pair(x, y),
            };
            labels.push(label);
        }
    }
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + hv * g.edge_count());
    for x in 0..g.vertex_count() {
        for e in h.edges() {
            edges.push(Edge::new(product_id(hv, x, e.u), product_id(hv, x, e.v)));
        }
    }
    for y in 0..hv {
        for e in g.edges() {
            edges.push(Edge::new(product_id(hv, e.u, y), product_id(hv, e.v, y)));
        }
    }
    Graph::new(kind, labels, edges)
}

fn restrict_mask(g: &Graph, restrict: &[VertexId]) -> Vec<bool> {
    let mut mask = vec![false; g.vertex_count()];
    for &v in restrict {
        mask[v] = true;
    }
    mask
}

/// Connected components of the subgraph induced by `restrict`.
///
/// Each component is sorted; components are ordered by their smallest vertex.
pub fn connected_components(g: &Graph, restrict: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mask = restrict_mask(g, restrict);
    let mut seen = vec![false; g.vertex_count()];
    let mut components = Vec::new();
    for start in 0..g.vertex_count() {
        if !mask[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Shortest `s`–`t` path inside the subgraph induced by `restrict`, or
/// `None` if they are disconnected there. Neighbors are explored in id
/// order, so the result is deterministic.
pub fn shortest_path(g: &Graph, s: VertexId, t: VertexId, restrict: &[VertexId]) -> Result<Option<Vec<VertexId>>> {
    let mask = restrict_mask(g, restrict);
    if s >= g.vertex_count() || !mask[s] || t >= g.vertex_count() || !mask[t] {
        return Err(Error::InvalidParameter(format!(
            "path endpoints {s}, {t} must lie in the restricted vertex set"
        )));
    }
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            break;
        }
        for &w in g.neighbors(v) {
            if mask[w] && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if parent[t] == usize::MAX {
        return Ok(None);
    }
    let mut path = vec![t];
    let mut v = t;
    while v != s {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    Ok(Some(path))
}
