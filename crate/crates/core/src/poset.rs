//! Pairs of vertex-disjoint paths under a linear order: separated (one
//! entirely before the other) or crossing (some edge pair crosses). When
//! every pair is one of the two, separation is a strict partial order whose
//! antichains are pairwise crossing, so a long chain or a large antichain
//! always exists once the family has `(c-1)(d-1)+1` members.

use num_bigint::BigUint;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::graph::{Edge, VertexId};
use crate::hexpath::Color;
use crate::layout::{LinearOrder, Span};

/// Paths `R_i` (vertex sequences) under a fixed ambient order.
#[derive(Clone, Debug)]
pub struct PathFamily<'a> {
    order: &'a LinearOrder,
    leaves: Vec<usize>,
    paths: Vec<Vec<VertexId>>,
    bounds: Vec<(usize, usize)>,
    spans: Vec<Vec<Span>>,
}

impl<'a> PathFamily<'a> {
    /// `leaves[i]` names path `i`; paths must be pairwise vertex-disjoint.
    pub fn new(order: &'a LinearOrder, leaves: Vec<usize>, paths: Vec<Vec<VertexId>>) -> Result<Self> {
        if leaves.len() != paths.len() {
            return Err(Error::InvalidParameter("one leaf label per path required".into()));
        }
        let mut seen = vec![false; order.len()];
        for path in &paths {
            if path.is_empty() {
                return Err(Error::InvalidParameter("empty path in family".into()));
            }
            for &v in path {
                if v >= order.len() {
                    return Err(Error::InvalidParameter(format!("vertex {v} not covered by the order")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidParameter(format!("vertex {v} lies on two paths")));
                }
            }
        }
        let bounds = paths
            .iter()
            .map(|p| {
                let positions = p.iter().map(|&v| order.position(v));
                (positions.clone().min().unwrap(), positions.max().unwrap())
            })
            .collect();
        let spans = paths
            .iter()
            .map(|p| p.windows(2).map(|w| order.span(Edge::new(w[0], w[1]))).collect())
            .collect();
        Ok(PathFamily {
            order,
            leaves,
            paths,
            bounds,
            spans,
        })
    }

    pub fn order(&self) -> &LinearOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn leaf(&self, i: usize) -> usize {
        self.leaves[i]
    }

    pub fn path(&self, i: usize) -> &[VertexId] {
        &self.paths[i]
    }

    pub fn edges(&self, i: usize) -> Vec<Edge> {
        self.paths[i].windows(2).map(|w| Edge::new(w[0], w[1])).collect()
    }

    /// Every vertex of path `i` precedes every vertex of path `j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.bounds[i].1 < self.bounds[j].0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairClass {
    SeparatedLt,
    SeparatedGt,
    Crossing,
    Neither,
}

impl PairClass {
    pub fn is_separated(&self) -> bool {
        matches!(self, PairClass::SeparatedLt | PairClass::SeparatedGt)
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            PairClass::SeparatedLt => "<",
            PairClass::SeparatedGt => ">",
            PairClass::Crossing => "x",
            PairClass::Neither => "?",
        }
    }
}

pub fn classify_pair(fam: &PathFamily<'_>, i: usize, j: usize) -> Result<PairClass> {
    if i == j || i >= fam.len() || j >= fam.len() {
        return Err(Error::InvalidParameter(format!("cannot classify path pair ({i}, {j})")));
    }
    if fam.precedes(i, j) {
        return Ok(PairClass::SeparatedLt);
    }
    if fam.precedes(j, i) {
        return Ok(PairClass::SeparatedGt);
    }
    let crossing = fam.spans[i]
        .iter()
        .any(|s| fam.spans[j].iter().any(|t| s.crosses(t)));
    Ok(if crossing { PairClass::Crossing } else { PairClass::Neither })
}

/// Full pairwise classification; the diagonal is `None`.
pub fn classification_matrix(fam: &PathFamily<'_>) -> Vec<Vec<Option<PairClass>>> {
    (0..fam.len())
        .map(|i| {
            (0..fam.len())
                .map(|j| (i != j).then(|| classify_pair(fam, i, j).expect("valid indices")))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainOrAntichain {
    /// Pairwise separated paths, listed in order (`R_1 ≺ R_2 ≺ ...`).
    Chain(Vec<usize>),
    /// Pairwise crossing paths, listed by family index.
    Antichain(Vec<usize>),
}

impl ChainOrAntichain {
    pub fn members(&self) -> &[usize] {
        match self {
            ChainOrAntichain::Chain(m) | ChainOrAntichain::Antichain(m) => m,
        }
    }
}

/// Returns a longest separated chain if it has at least `c` paths, and
/// otherwise the largest layer of the longest-chain layering, which is a
/// pairwise crossing antichain of at least `d` paths whenever the family has
/// `(c-1)(d-1)+1` members.
pub fn chain_or_antichain(fam: &PathFamily<'_>, c: usize, d: usize) -> Result<ChainOrAntichain> {
    if c == 0 || d == 0 {
        return Err(Error::InvalidParameter("c and d must be at least 1".into()));
    }
    let b = fam.len();
    for i in 0..b {
        for j in i + 1..b {
            if classify_pair(fam, i, j)? == PairClass::Neither {
                return Err(Error::Precondition(format!(
                    "paths {i} (leaf {}) and {j} (leaf {}) are neither separated nor crossing",
                    fam.leaf(i),
                    fam.leaf(j)
                )));
            }
        }
    }
    // precedence implies a smaller first position, so this is a linear extension
    let mut topo: Vec<usize> = (0..b).collect();
    topo.sort_by_key(|&i| (fam.bounds[i].0, i));

    let mut up = vec![1usize; b];
    for (k, &i) in topo.iter().enumerate().rev() {
        for &j in &topo[k + 1..] {
            if fam.precedes(i, j) {
                up[i] = up[i].max(up[j] + 1);
            }
        }
    }
    let mut down = vec![1usize; b];
    for (k, &j) in topo.iter().enumerate() {
        for &i in &topo[..k] {
            if fam.precedes(i, j) {
                down[j] = down[j].max(down[i] + 1);
            }
        }
    }
    let longest = up.iter().copied().max().unwrap_or(0);

    if longest >= c {
        // smallest index at every step among those still extending to full length
        let mut chain = Vec::with_capacity(longest);
        let mut cur = (0..b).find(|&i| up[i] == longest).expect("some path attains the maximum");
        chain.push(cur);
        while up[cur] > 1 {
            cur = (0..b)
                .find(|&j| fam.precedes(cur, j) && up[j] == up[cur] - 1)
                .expect("chain continues");
            chain.push(cur);
        }
        return Ok(ChainOrAntichain::Chain(chain));
    }

    let mut layers = vec![Vec::new(); longest + 1];
    for i in 0..b {
        layers[down[i]].push(i);
    }
    let largest = layers
        .iter()
        .enumerate()
        .skip(1)
        .max_by_key(|(layer, members)| (members.len(), std::cmp::Reverse(*layer)))
        .map(|(_, members)| members.clone())
        .unwrap_or_default();
    if largest.len() >= d {
        return Ok(ChainOrAntichain::Antichain(largest));
    }
    Err(Error::InsufficientScale {
        paths: b,
        longest_chain: longest,
        largest_antichain: largest.len(),
        c,
        d,
    })
}

/// `binomial(r + s - 2, r - 1)`, an upper bound on the Ramsey number `R(r, s)`.
pub fn ramsey_upper_bound(r: usize, s: usize) -> Result<BigUint> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter("Ramsey parameters must be at least 1".into()));
    }
    Ok(binomial(BigUint::from(r + s - 2), BigUint::from(r - 1)))
}

/// Red/blue coloring of the edges of `K_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairColoring {
    b: usize,
    colors: Vec<Vec<Color>>,
}

impl PairColoring {
    pub fn from_fn(b: usize, f: impl Fn(usize, usize) -> Color) -> Self {
        let mut colors = vec![vec![Color::Red; b]; b];
        for i in 0..b {
            for j in i + 1..b {
                let c = f(i, j);
                colors[i][j] = c;
                colors[j][i] = c;
            }
        }
        PairColoring { b, colors }
    }

    pub fn size(&self) -> usize {
        self.b
    }

    pub fn color(&self, i: usize, j: usize) -> Color {
        self.colors[i][j]
    }

    /// Whether `vertices` form a clique of color `color`.
    pub fn is_clique(&self, vertices: &[usize], color: Color) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(k, &i)| vertices[k + 1..].iter().all(|&j| i != j && self.colors[i][j] == color))
    }

    fn extend(&self, color: Color, target: usize, clique: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if clique.len() >= target {
            return true;
        }
        if clique.len() + candidates.len() < target {
            return false;
        }
        for (k, &v) in candidates.iter().enumerate() {
            if clique.len() + candidates.len() - k < target {
                return false;
            }
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&w| self.colors[v][w] == color)
                .collect();
            clique.push(v);
            if self.extend(color, target, clique, &next) {
                return true;
            }
            clique.pop();
        }
        false
    }

    /// A clique of `size` vertices in `color`, lexicographically first.
    pub fn find_clique(&self, color: Color, size: usize) -> Option<Vec<usize>> {
        let all: Vec<usize> = (0..self.b).collect();
        let mut clique = Vec::new();
        self.extend(color, size, &mut clique, &all).then_some(clique)
    }

    pub fn largest_clique(&self, color: Color) -> Vec<usize> {
        let mut best = Vec::new();
        for size in 1..=self.b {
            match self.find_clique(color, size) {
                Some(c) => best = c,
                None => break,
            }
        }
        best
    }
}

/// A red `r`-clique or else a blue `s`-clique, by exhaustive search.
pub fn find_monochromatic_clique(coloring: &PairColoring, r: usize, s: usize) -> Option<(Color, Vec<usize>)> {
    coloring
        .find_clique(Color::Red, r)
        .map(|c| (Color::Red, c))
        .or_else(|| coloring.find_clique(Color::Blue, s).map(|c| (Color::Blue, c)))
}
