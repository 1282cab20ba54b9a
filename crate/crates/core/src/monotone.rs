//! Longest monotone subsequences and the iterated refinement that selects a
//! family of star leaves ordered consistently at every grid vertex.

use crate::error::{Error, Result};
use crate::graph::{star_hex_id, GridCoord, StarVertex, VertexId};
use crate::layout::LinearOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneRun {
    pub direction: Direction,
    /// Increasing indices into the input sequence.
    pub indices: Vec<usize>,
}

impl MonotoneRun {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Patience sorting over indices. `before(i, j)` must be a strict order on
/// the elements; returns the indices of a longest chain under it.
fn patience(len: usize, before: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    // tops[k]: index ending the best chain of length k + 1 seen so far
    let mut tops: Vec<usize> = Vec::new();
    let mut pred = vec![usize::MAX; len];
    for i in 0..len {
        let k = tops.partition_point(|&t| before(t, i));
        if k > 0 {
            pred[i] = tops[k - 1];
        }
        if k == tops.len() {
            tops.push(i);
        } else {
            tops[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tops.len());
    let mut cur = tops.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = (pred[i] != usize::MAX).then_some(pred[i]);
    }
    out.reverse();
    out
}

/// Indices of a longest strictly increasing subsequence.
pub fn longest_increasing_subsequence<T: Ord>(seq: &[T]) -> Vec<usize> {
    patience(seq.len(), |i, j| seq[i] < seq[j])
}

/// Indices of a longest strictly decreasing subsequence.
pub fn longest_decreasing_subsequence<T: Ord>(seq: &[T]) -> Vec<usize> {
    patience(seq.len(), |i, j| seq[i] > seq[j])
}

/// The longer of the longest increasing and longest decreasing
/// subsequences, preferring increasing on ties. For distinct elements its
/// length is at least `⌈√len⌉`.
pub fn longest_monotone_subsequence<T: Ord>(seq: &[T]) -> MonotoneRun {
    let inc = longest_increasing_subsequence(seq);
    let dec = longest_decreasing_subsequence(seq);
    if dec.len() > inc.len() {
        MonotoneRun {
            direction: Direction::Decreasing,
            indices: dec,
        }
    } else {
        MonotoneRun {
            direction: Direction::Increasing,
            indices: inc,
        }
    }
}

/// Leaves `u_1, ..., u_b` of `S_a` such that at every grid vertex `p` the
/// copies `(u_1, p), ..., (u_b, p)` appear in the order monotonically, in
/// the direction recorded for `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafFamily {
    pub n: usize,
    /// Leaf indices in `1..=a`, listed as `u_1, ..., u_b`.
    pub leaves: Vec<usize>,
    /// Direction per grid vertex, indexed by row-major grid id.
    pub directions: Vec<Direction>,
    /// Family size after each refinement step: `a_1 = a, a_2, ..., a_{n²}`.
    pub step_sizes: Vec<usize>,
}

impl LeafFamily {
    pub fn size(&self) -> usize {
        self.leaves.len()
    }

    pub fn direction(&self, p: GridCoord) -> Direction {
        self.directions[crate::graph::hex_id(self.n, p)]
    }

    fn position(&self, order: &LinearOrder, leaf: usize, grid_id: VertexId) -> usize {
        order.position(leaf * self.n * self.n + grid_id)
    }

    /// Checks the monotonicity invariant against `order` at every grid vertex.
    pub fn is_consistent(&self, order: &LinearOrder) -> bool {
        (0..self.n * self.n).all(|p| {
            self.leaves.windows(2).all(|w| {
                let (x, y) = (self.position(order, w[0], p), self.position(order, w[1], p));
                match self.directions[p] {
                    Direction::Increasing => x < y,
                    Direction::Decreasing => x > y,
                }
            })
        })
    }
}

/// Refines the leaves of `S_a` grid vertex by grid vertex (row-major),
/// keeping at each step a longest monotone subsequence of the copies'
/// positions. Every step keeps at least the square root of the previous size.
pub fn consistent_leaf_family(order: &LinearOrder, a: usize, n: usize) -> Result<LeafFamily> {
    if a == 0 || n == 0 {
        return Err(Error::InvalidParameter("S_a □ H_n needs a, n >= 1".into()));
    }
    if order.len() != (a + 1) * n * n {
        return Err(Error::InvalidParameter(format!(
            "order covers {} vertices, S_{a} □ H_{n} has {}",
            order.len(),
            (a + 1) * n * n
        )));
    }
    let grid = |id: usize| crate::graph::hex_coord(n, id);
    let pos = |leaf: usize, p: usize| order.position(star_hex_id(n, StarVertex::Leaf(leaf), grid(p)));

    let mut leaves: Vec<usize> = (1..=a).collect();
    leaves.sort_by_key(|&u| pos(u, 0));
    let mut directions = vec![Direction::Increasing; n * n];
    let mut step_sizes = vec![leaves.len()];
    for p in 1..n * n {
        let keys: Vec<usize> = leaves.iter().map(|&u| pos(u, p)).collect();
        let run = longest_monotone_subsequence(&keys);
        leaves = run.indices.iter().map(|&i| leaves[i]).collect();
        directions[p] = run.direction;
        step_sizes.push(leaves.len());
    }
    Ok(LeafFamily {
        n,
        leaves,
        directions,
        step_sizes,
    })
}
