//! Monochromatic paths in red/blue colorings of `H_n`.
//!
//! Starting from the monochromatic component of `[1,1]`, repeatedly jump to
//! the monochromatic component containing the far boundary of the current
//! one (its neighbours on the side of `[n,n]`). Every component met along
//! the way touches both the left and the bottom path; the last one also
//! touches the top or right path and therefore contains a path that changes
//! one coordinate from 1 to `n`, i.e. has at least `n` vertices.

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{connected_components, hex_coord, hex_id, make_hex_dual, shortest_path, GridCoord, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// A red/blue color for every vertex of `H_n`, indexed by row-major id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridColoring {
    n: usize,
    colors: Vec<Color>,
}

impl GridColoring {
    pub fn new(n: usize, colors: Vec<Color>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("coloring of H_0".into()));
        }
        if colors.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "expected {} colors for H_{n}, got {}",
                n * n,
                colors.len()
            )));
        }
        Ok(GridColoring { n, colors })
    }

    pub fn uniform(n: usize, color: Color) -> Result<Self> {
        GridColoring::new(n, vec![color; n * n])
    }

    pub fn from_fn(n: usize, f: impl Fn(GridCoord) -> Color) -> Result<Self> {
        GridColoring::new(n, (0..n * n).map(|id| f(hex_coord(n, id))).collect())
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        GridColoring::new(
            n,
            (0..n * n)
                .map(|_| if rng.gen::<bool>() { Color::Red } else { Color::Blue })
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color(&self, p: GridCoord) -> Color {
        self.colors[hex_id(self.n, p)]
    }

    pub fn color_of(&self, id: VertexId) -> Color {
        self.colors[id]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }
}

/// One monochromatic component `Y_i` of the sequence, with its far boundary
/// `D_i` (absent for the final component, which reaches the far path).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryStep {
    pub component: Vec<VertexId>,
    pub color: Color,
    pub far_boundary: Option<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonochromaticPath {
    pub color: Color,
    pub vertices: Vec<VertexId>,
}

impl MonochromaticPath {
    pub fn coords(&self, n: usize) -> Vec<GridCoord> {
        self.vertices.iter().map(|&v| hex_coord(n, v)).collect()
    }
}

/// `H_n` together with the boundary-walking algorithm.
#[derive(Clone, Debug)]
pub struct HexGrid {
    n: usize,
    graph: Graph,
}

impl HexGrid {
    pub fn new(n: usize) -> Result<Self> {
        Ok(HexGrid {
            n,
            graph: make_hex_dual(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn far_corner(&self) -> VertexId {
        self.n * self.n - 1
    }

    fn on_left(&self, v: VertexId) -> bool {
        hex_coord(self.n, v).a == 1
    }

    fn on_bottom(&self, v: VertexId) -> bool {
        hex_coord(self.n, v).b == 1
    }

    fn on_right(&self, v: VertexId) -> bool {
        hex_coord(self.n, v).a == self.n
    }

    fn on_top(&self, v: VertexId) -> bool {
        hex_coord(self.n, v).b == self.n
    }

    fn on_far_path(&self, v: VertexId) -> bool {
        self.on_right(v) || self.on_top(v)
    }

    fn is_connected(&self, set: &[VertexId]) -> bool {
        connected_components(&self.graph, set).len() == 1
    }

    /// Neighbours of `x` lying in the component of `H_n - x` that contains
    /// `[n,n]`. Fails if `x` is empty, disconnected or contains `[n,n]`.
    pub fn far_boundary(&self, x: &[VertexId]) -> Result<Vec<VertexId>> {
        let total = self.n * self.n;
        if let Some(&v) = x.iter().find(|&&v| v >= total) {
            return Err(Error::InvalidParameter(format!("vertex {v} not in H_{}", self.n)));
        }
        let mut in_x = vec![false; total];
        for &v in x {
            in_x[v] = true;
        }
        if in_x[self.far_corner()] {
            return Err(Error::InvalidParameter("region contains the far corner [n,n]".into()));
        }
        if !self.is_connected(x) {
            return Err(Error::InvalidParameter("region is empty or disconnected".into()));
        }
        let mut in_z = vec![false; total];
        in_z[self.far_corner()] = true;
        let mut queue = VecDeque::from([self.far_corner()]);
        while let Some(v) = queue.pop_front() {
            for &w in self.graph.neighbors(v) {
                if !in_x[w] && !in_z[w] {
                    in_z[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let boundary: Vec<VertexId> = (0..total)
            .filter(|&v| in_z[v] && self.graph.neighbors(v).iter().any(|&w| in_x[w]))
            .collect();
        if !self.is_connected(&boundary) {
            return Err(Error::Invariant(format!(
                "far boundary {boundary:?} of a connected region is not connected"
            )));
        }
        Ok(boundary)
    }

    fn monochromatic_component(&self, coloring: &GridColoring, start: VertexId) -> Vec<VertexId> {
        let color = coloring.color_of(start);
        let class: Vec<VertexId> = (0..self.n * self.n).filter(|&v| coloring.color_of(v) == color).collect();
        connected_components(&self.graph, &class)
            .into_iter()
            .find(|c| c.binary_search(&start).is_ok())
            .expect("start lies in its own color class")
    }

    fn check_coloring(&self, coloring: &GridColoring) -> Result<()> {
        if coloring.n() != self.n {
            return Err(Error::InvalidParameter(format!(
                "coloring of H_{} used with H_{}",
                coloring.n(),
                self.n
            )));
        }
        Ok(())
    }

    /// The sequence `Y_1, ..., Y_p` of monochromatic components, ending at
    /// the first one that meets the far path.
    pub fn boundary_sequence(&self, coloring: &GridColoring) -> Result<Vec<BoundaryStep>> {
        self.check_coloring(coloring)?;
        let mut steps = Vec::new();
        let mut component = self.monochromatic_component(coloring, 0);
        loop {
            let color = coloring.color_of(component[0]);
            if !component.iter().any(|&v| self.on_left(v)) || !component.iter().any(|&v| self.on_bottom(v)) {
                return Err(Error::Invariant(format!(
                    "component {} misses the left or bottom path",
                    steps.len() + 1
                )));
            }
            if component.iter().any(|&v| self.on_far_path(v)) {
                steps.push(BoundaryStep {
                    component,
                    color,
                    far_boundary: None,
                });
                return Ok(steps);
            }
            if steps.len() >= self.n * self.n {
                return Err(Error::Invariant("boundary sequence does not terminate".into()));
            }
            let boundary = self.far_boundary(&component)?;
            if !boundary.iter().any(|&v| self.on_left(v)) || !boundary.iter().any(|&v| self.on_bottom(v)) {
                return Err(Error::Invariant(format!(
                    "far boundary {boundary:?} misses the left or bottom path"
                )));
            }
            if boundary.iter().any(|&v| coloring.color_of(v) == color) {
                return Err(Error::Invariant("far boundary shares the component's color".into()));
            }
            let next = self.monochromatic_component(coloring, boundary[0]);
            if !boundary.iter().all(|v| next.binary_search(v).is_ok()) {
                return Err(Error::Invariant("far boundary spans several components".into()));
            }
            steps.push(BoundaryStep {
                component,
                color,
                far_boundary: Some(boundary),
            });
            component = next;
        }
    }

    /// A monochromatic path on at least `n` vertices.
    ///
    /// Inside the last component of the boundary sequence, takes a shortest
    /// path from the lexicographically smallest bottom vertex to the smallest
    /// top vertex if the component reaches the top path, and otherwise from
    /// the smallest left vertex to the smallest right vertex.
    pub fn find_monochromatic_path(&self, coloring: &GridColoring) -> Result<MonochromaticPath> {
        self.check_coloring(coloring)?;
        if self.n == 1 {
            return Ok(MonochromaticPath {
                color: coloring.color_of(0),
                vertices: vec![0],
            });
        }
        let steps = self.boundary_sequence(coloring)?;
        let last = steps.last().expect("sequence is nonempty");
        let smallest = |pred: &dyn Fn(VertexId) -> bool| {
            last.component
                .iter()
                .copied()
                .filter(|&v| pred(v))
                .min_by_key(|&v| hex_coord(self.n, v))
        };
        let (s, t) = if last.component.iter().any(|&v| self.on_top(v)) {
            (smallest(&|v| self.on_bottom(v)), smallest(&|v| self.on_top(v)))
        } else {
            (smallest(&|v| self.on_left(v)), smallest(&|v| self.on_right(v)))
        };
        let (Some(s), Some(t)) = (s, t) else {
            return Err(Error::Invariant("final component lacks path terminals".into()));
        };
        let vertices = shortest_path(&self.graph, s, t, &last.component)?
            .ok_or_else(|| Error::Invariant("final component is disconnected".into()))?;
        if vertices.len() < self.n {
            return Err(Error::Invariant(format!(
                "extracted path has {} < {} vertices",
                vertices.len(),
                self.n
            )));
        }
        Ok(MonochromaticPath {
            color: last.color,
            vertices,
        })
    }

    /// True iff `path` is a simple path of `H_n` in one color.
    pub fn is_monochromatic_path(&self, coloring: &GridColoring, path: &[VertexId]) -> bool {
        let Some(&first) = path.first() else {
            return false;
        };
        let mut seen = vec![false; self.n * self.n];
        for &v in path {
            if v >= seen.len() || seen[v] || coloring.color_of(v) != coloring.color_of(first) {
                return false;
            }
            seen[v] = true;
        }
        path.windows(2).all(|w| self.graph.has_edge(w[0], w[1]))
    }
}

pub fn far_boundary(n: usize, x: &[VertexId]) -> Result<Vec<VertexId>> {
    HexGrid::new(n)?.far_boundary(x)
}

pub fn boundary_sequence(coloring: &GridColoring) -> Result<Vec<BoundaryStep>> {
    HexGrid::new(coloring.n())?.boundary_sequence(coloring)
}

pub fn find_monochromatic_path(coloring: &GridColoring) -> Result<MonochromaticPath> {
    HexGrid::new(coloring.n())?.find_monochromatic_path(coloring)
}
