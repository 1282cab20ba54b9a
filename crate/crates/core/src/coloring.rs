//! Exact vertex coloring of small conflict graphs: DSATUR branch and bound
//! seeded by a greedy DSATUR upper bound and a greedy clique lower bound.

/// Dense symmetric conflict graph.
#[derive(Clone, Debug)]
pub(crate) struct ConflictGraph {
    adj: Vec<Vec<usize>>,
    matrix: Vec<Vec<bool>>,
}

impl ConflictGraph {
    pub(crate) fn new(n: usize) -> Self {
        ConflictGraph {
            adj: vec![Vec::new(); n],
            matrix: vec![vec![false; n]; n],
        }
    }

    pub(crate) fn add(&mut self, x: usize, y: usize) {
        if x != y && !self.matrix[x][y] {
            self.matrix[x][y] = true;
            self.matrix[y][x] = true;
            self.adj[x].push(y);
            self.adj[y].push(x);
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.adj.len()
    }

    /// Largest clique found by a greedy pass from every start vertex.
    pub(crate) fn greedy_clique(&self) -> Vec<usize> {
        let n = self.len();
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(self.adj[v].len()), v));
        let mut best = Vec::new();
        for &start in &by_degree {
            if self.adj[start].len() < best.len() {
                break;
            }
            let mut clique = vec![start];
            for &v in &by_degree {
                if v != start && clique.iter().all(|&w| self.matrix[v][w]) {
                    clique.push(v);
                }
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        best
    }
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    graph: &'a ConflictGraph,
    colors: Vec<usize>,
    // saturation[v][c] = number of colored neighbors of v with color c
    saturation: Vec<Vec<u32>>,
    distinct: Vec<usize>,
    best_k: usize,
    best: Option<Vec<usize>>,
    lower: usize,
}

impl<'a> Search<'a> {
    fn new(graph: &'a ConflictGraph, lower: usize, best_k: usize, best: Option<Vec<usize>>) -> Self {
        let n = graph.len();
        Search {
            graph,
            colors: vec![NONE; n],
            saturation: vec![vec![0; n + 1]; n],
            distinct: vec![0; n],
            best_k,
            best,
            lower,
        }
    }

    /// Uncolored vertex of maximum saturation, lowest id on ties.
    fn select(&self) -> Option<usize> {
        let mut pick: Option<usize> = None;
        for v in 0..self.graph.len() {
            if self.colors[v] != NONE {
                continue;
            }
            match pick {
                Some(p) if self.distinct[p] >= self.distinct[v] => {}
                _ => pick = Some(v),
            }
        }
        pick
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in &self.graph.adj[v] {
            if self.saturation[w][c] == 0 {
                self.distinct[w] += 1;
            }
            self.saturation[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = NONE;
        for &w in &self.graph.adj[v] {
            self.saturation[w][c] -= 1;
            if self.saturation[w][c] == 0 {
                self.distinct[w] -= 1;
            }
        }
    }

    fn run(&mut self, used: usize) {
        if used >= self.best_k {
            return;
        }
        let Some(v) = self.select() else {
            self.best_k = used;
            self.best = Some(self.colors.clone());
            return;
        };
        let limit = (used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if self.saturation[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.run(used.max(c + 1));
            self.unassign(v);
            if self.best_k <= self.lower {
                return;
            }
        }
    }
}

fn greedy_dsatur(graph: &ConflictGraph) -> (usize, Vec<usize>) {
    let mut search = Search::new(graph, 0, usize::MAX, None);
    let mut used = 0;
    while let Some(v) = search.select() {
        let c = (0..).find(|&c| search.saturation[v][c] == 0).unwrap();
        search.assign(v, c);
        used = used.max(c + 1);
    }
    (used, search.colors)
}

/// Exact chromatic number with a witness coloring.
///
/// With `cap = Some(k)`, only colorings using fewer than `k` colors are
/// sought; `None` is returned if none exists.
pub(crate) fn exact_coloring(graph: &ConflictGraph, cap: Option<usize>) -> Option<(usize, Vec<usize>)> {
    let n = graph.len();
    if n == 0 {
        return match cap {
            Some(0) => None,
            _ => Some((0, Vec::new())),
        };
    }
    let lower = graph.greedy_clique().len();
    if let Some(k) = cap {
        if lower >= k {
            return None;
        }
    }
    let (greedy_k, greedy) = greedy_dsatur(graph);
    let (start_k, start) = match cap {
        Some(k) if k <= greedy_k => (k, None),
        _ => (greedy_k, Some(greedy)),
    };
    if start.is_some() && start_k <= lower {
        return start.map(|c| (start_k, c));
    }
    let mut search = Search::new(graph, lower, start_k, start);
    search.run(0);
    let k = search.best_k;
    search.best.map(|c| (k, c))
}
