//! Explicit queue layouts: three queues for `H_n` in row-major order and
//! four for `S_a □ H_n` with one block per grid vertex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{hex_coord, hex_edge_class, make_hex_dual, make_star, cartesian_product, Graph, HexEdgeClass, StarVertex};
use crate::layout::{EdgeColoring, Layout, LayoutKind, LinearOrder};

fn class_color(class: HexEdgeClass) -> usize {
    match class {
        HexEdgeClass::Horizontal => 0,
        HexEdgeClass::Vertical => 1,
        HexEdgeClass::Diagonal => 2,
    }
}

/// `H_n` with its row-major 3-queue layout.
pub fn hex_queue_layout(n: usize) -> Result<(Graph, Layout)> {
    let g = make_hex_dual(n)?;
    let mut colors = BTreeMap::new();
    for &e in g.edges() {
        let class = hex_edge_class(hex_coord(n, e.u()), hex_coord(n, e.v()))
            .ok_or_else(|| Error::Invariant(format!("{e} is not a grid edge")))?;
        colors.insert(e, class_color(class));
    }
    let layout = Layout {
        kind: LayoutKind::Queue,
        order: LinearOrder::identity(g.vertex_count()),
        coloring: EdgeColoring::new(colors, 3)?,
    };
    Ok((g, layout))
}

/// Grid vertices in row-major order; within each block the root copy first,
/// then leaves `1..=a`.
pub fn block_order(a: usize, n: usize) -> LinearOrder {
    let cells = n * n;
    let sequence = (0..cells)
        .flat_map(|p| (0..=a).map(move |u| u * cells + p))
        .collect();
    LinearOrder::from_sequence(sequence).expect("block order is a permutation")
}

/// `S_a □ H_n` with its 4-queue layout: star edges inside a block share
/// queue 0, edges between blocks use `1 + ` the class of the grid edge.
pub fn product_queue_layout(a: usize, n: usize) -> Result<(Graph, Layout)> {
    let g = cartesian_product(&make_star(a)?, &make_hex_dual(n)?)?;
    let cells = n * n;
    let mut colors = BTreeMap::new();
    for &e in g.edges() {
        let (x, y) = e.endpoints();
        let (p, q) = (x % cells, y % cells);
        let color = if p == q {
            debug_assert!(StarVertex::from_index(x / cells) == StarVertex::Root);
            0
        } else {
            let class = hex_edge_class(hex_coord(n, p), hex_coord(n, q))
                .ok_or_else(|| Error::Invariant(format!("{e} joins non-adjacent grid vertices")))?;
            1 + class_color(class)
        };
        colors.insert(e, color);
    }
    let layout = Layout {
        kind: LayoutKind::Queue,
        order: block_order(a, n),
        coloring: EdgeColoring::new(colors, 4)?,
    };
    Ok((g, layout))
}

/// No two edges of one queue weakly nest: spans sharing an endpoint count
/// as nested unless they coincide.
pub fn is_strict_queue_layout(layout: &Layout) -> bool {
    let mut by_color: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    for (e, c) in layout.coloring.iter() {
        by_color.entry(c).or_default().push(layout.order.span(e));
    }
    by_color.values().all(|spans| {
        spans
            .iter()
            .enumerate()
            .all(|(i, s)| spans[i + 1..].iter().all(|t| !s.weakly_nests(t) && !t.weakly_nests(s)))
    })
}

const PALETTE: [&str; 8] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
];

/// Graphviz rendering; edges are colored by layout color when a layout is given.
pub fn to_dot(g: &Graph, layout: Option<&Layout>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let label = crate::io::label_text(&g.label(v));
        match layout {
            Some(l) => out.push_str(&format!(
                "  {v} [label=\"{label}\", pos=\"{},0!\"];\n",
                l.order.position(v)
            )),
            None => out.push_str(&format!("  {v} [label=\"{label}\"];\n")),
        }
    }
    for &e in g.edges() {
        match layout.and_then(|l| l.coloring.color(e)) {
            Some(c) => out.push_str(&format!(
                "  {} -- {} [color=\"{}\", label=\"{c}\"];\n",
                e.u(),
                e.v(),
                PALETTE[c % PALETTE.len()]
            )),
            None => out.push_str(&format!("  {} -- {};\n", e.u(), e.v())),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{min_queue_colors_for_order, verify_layout};

    #[test]
    fn hex_layouts() {
        let (g, l) = hex_queue_layout(1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(verify_layout(&g, &l).unwrap().valid);

        let (g, l) = hex_queue_layout(3).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert!(verify_layout(&g, &l).unwrap().violations.is_empty());
        assert!(is_strict_queue_layout(&l));
        for (e, c) in l.coloring.iter() {
            if c == 1 {
                assert_eq!(l.order.span(e).len(), 3);
            }
        }
    }

    #[test]
    fn product_layouts() {
        let (g, l) = product_queue_layout(5, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (54, 141));
        assert_eq!(l.coloring.used_colors(), 4);
        assert!(verify_layout(&g, &l).unwrap().valid);

        let (g, l) = product_queue_layout(1, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(l.coloring.used_colors(), 1);
        assert!(verify_layout(&g, &l).unwrap().valid);

        let (g, l) = product_queue_layout(3, 2).unwrap();
        assert!(verify_layout(&g, &l).unwrap().valid);
        assert!(min_queue_colors_for_order(&g, &l.order).unwrap().k <= 4);
    }

    #[test]
    fn block_positions() {
        let (a, n) = (3, 2);
        let order = block_order(a, n);
        for p in 0..n * n {
            for u in 0..=a {
                assert_eq!(order.position(u * n * n + p), p * (a + 1) + u);
            }
        }
    }

    #[test]
    fn dot_mentions_every_edge() {
        let (g, l) = hex_queue_layout(2).unwrap();
        let dot = to_dot(&g, Some(&l));
        assert_eq!(dot.matches(" -- ").count(), g.edge_count());
        assert!(dot.contains(PALETTE[2]));
    }
}
