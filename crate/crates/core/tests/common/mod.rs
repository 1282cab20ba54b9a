//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use linlayout::graph::{connected_components, make_hex_dual, Graph};
use linlayout::hexpath::{Color, GridColoring};
use linlayout::layout::{LayoutKind, LinearOrder};
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

pub fn pos_cross(pos: &[usize], e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = (pos[e.0].min(pos[e.1]), pos[e.0].max(pos[e.1]));
    let inside = |x: usize| a < pos[x] && pos[x] < b;
    let outside = |x: usize| pos[x] < a || pos[x] > b;
    (inside(f.0) && outside(f.1)) || (inside(f.1) && outside(f.0))
}

pub fn pos_nest(pos: &[usize], outer: (usize, usize), inner: (usize, usize)) -> bool {
    let (a, b) = (pos[outer.0].min(pos[outer.1]), pos[outer.0].max(pos[outer.1]));
    let (c, d) = (pos[inner.0].min(pos[inner.1]), pos[inner.0].max(pos[inner.1]));
    a < c && d < b
}

/// Fewest colors for `order` by plain backtracking over edges in order.
pub fn brute_min_colors(g: &Graph, pos: &[usize], kind: LayoutKind) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
    let conflict = |i: usize, j: usize| match kind {
        LayoutKind::Stack => pos_cross(pos, edges[i], edges[j]),
        LayoutKind::Queue => pos_nest(pos, edges[i], edges[j]) || pos_nest(pos, edges[j], edges[i]),
    };
    fn fill(i: usize, k: usize, colors: &mut Vec<usize>, conflict: &dyn Fn(usize, usize) -> bool) -> bool {
        if i == colors.len() {
            return true;
        }
        for c in 0..k {
            if (0..i).all(|j| colors[j] != c || !conflict(i, j)) {
                colors[i] = c;
                if fill(i + 1, k, colors, conflict) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0; edges.len()];
    (0..=edges.len())
        .find(|&k| fill(0, k, &mut colors, &conflict))
        .expect("one color per edge always works")
}

/// Minimum over every vertex order of the brute-force per-order minimum.
pub fn brute_layout_number(g: &Graph, kind: LayoutKind) -> usize {
    let n = g.vertex_count();
    let mut seq: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut seq, 0, &mut |s| {
        let mut pos = vec![0; n];
        for (i, &v) in s.iter().enumerate() {
            pos[v] = i;
        }
        best = best.min(brute_min_colors(g, &pos, kind));
    });
    best
}

pub fn permute(xs: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        visit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, visit);
        xs.swap(k, i);
    }
}

pub fn dp_lis_len(seq: &[i64], increasing: bool) -> usize {
    let mut best = vec![1usize; seq.len()];
    for i in 0..seq.len() {
        for j in 0..i {
            let ok = if increasing { seq[j] < seq[i] } else { seq[j] > seq[i] };
            if ok {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Vertex count of a longest monochromatic simple path, by exhaustive DFS
/// that stops once a path covers a whole component.
pub fn longest_mono_path(coloring: &GridColoring) -> usize {
    let n = coloring.n();
    let g = make_hex_dual(n).unwrap();
    let mut best = 0;
    for color in [Color::Red, Color::Blue] {
        let class: Vec<usize> = (0..n * n).filter(|&v| coloring.color_of(v) == color).collect();
        for comp in connected_components(&g, &class) {
            if comp.len() <= best {
                continue;
            }
            let mut comp_best = 0;
            for &s in &comp {
                let mut seen = vec![false; n * n];
                seen[s] = true;
                dfs(&g, coloring, s, &mut seen, 1, comp.len(), &mut comp_best);
                if comp_best == comp.len() {
                    break;
                }
            }
            best = best.max(comp_best);
        }
    }
    best
}

fn dfs(g: &Graph, coloring: &GridColoring, v: usize, seen: &mut [bool], len: usize, cap: usize, best: &mut usize) {
    *best = (*best).max(len);
    for &w in g.neighbors(v) {
        if *best == cap {
            return;
        }
        if !seen[w] && coloring.color_of(w) == coloring.color_of(v) {
            seen[w] = true;
            dfs(g, coloring, w, seen, len + 1, cap, best);
            seen[w] = false;
        }
    }
}

/// Random order of `S_b □ P_len` whose leaf copies appear in leaf order at
/// every path vertex, with the leaf paths as a family.
pub fn consistent_family_order(rng: &mut ChaCha8Rng, b: usize, len: usize) -> (LinearOrder, Vec<Vec<usize>>) {
    let id = |u: usize, q: usize| u * len + q;
    let mut seq: Vec<usize> = (0..(b + 1) * len).collect();
    seq.shuffle(rng);
    let mut pos = vec![0; seq.len()];
    for (i, &v) in seq.iter().enumerate() {
        pos[v] = i;
    }
    for q in 0..len {
        let mut slots: Vec<usize> = (1..=b).map(|u| pos[id(u, q)]).collect();
        slots.sort_unstable();
        for (u, &slot) in (1..=b).zip(&slots) {
            seq[slot] = id(u, q);
        }
    }
    let paths = (1..=b).map(|u| (0..len).map(|q| id(u, q)).collect()).collect();
    (LinearOrder::from_sequence(seq).unwrap(), paths)
}

