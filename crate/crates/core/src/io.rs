//! JSON encodings of graphs, layouts, grid colorings, paths, witness reports
//! and scale parameters.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphKind, GridCoord, Label, ProductVertex, StarVertex};
use crate::hexpath::{BoundaryStep, Color, GridColoring, MonochromaticPath};
use crate::layout::{EdgeColoring, Layout, LayoutKind, LinearOrder};
use crate::monotone::Direction;
use crate::poset::PairClass;
use crate::witness::{ScaleParameters, WitnessReport};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses JSON text, mapping syntax errors to `Error::Parse`.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}

/// Pretty-printed with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn get<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| parse_err(format!("{what} must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn big(x: &BigUint) -> Value {
    serde_json::from_str(&x.to_string()).expect("decimal digits form a JSON number")
}

fn coord_json(p: GridCoord) -> Value {
    json!([p.a, p.b])
}

fn parse_coord(v: &Value) -> Result<GridCoord> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok(GridCoord::new(as_usize(a, "grid coordinate")?, as_usize(b, "grid coordinate")?)),
        _ => Err(parse_err("grid coordinate must be [a, b]")),
    }
}

fn star_json(u: StarVertex) -> Value {
    match u {
        StarVertex::Root => json!("t"),
        StarVertex::Leaf(i) => json!(i),
    }
}

fn parse_star(v: &Value) -> Result<StarVertex> {
    match v {
        Value::String(s) if s == "t" => Ok(StarVertex::Root),
        _ => match as_usize(v, "star vertex")? {
            0 => Err(parse_err("leaf indices start at 1; the root is \"t\"")),
            i => Ok(StarVertex::Leaf(i)),
        },
    }
}

fn label_json(label: &Label) -> Value {
    match *label {
        Label::Plain(i) => json!(i),
        Label::Pair(x, y) => json!([x, y]),
        Label::Grid(p) => coord_json(p),
        Label::Star(u) => star_json(u),
        Label::Product(pv) => json!([star_json(pv.star), coord_json(pv.grid)]),
    }
}

fn parse_label(kind: GraphKind, v: &Value) -> Result<Label> {
    Ok(match kind {
        GraphKind::Hex { .. } => Label::Grid(parse_coord(v)?),
        GraphKind::Star { .. } => Label::Star(parse_star(v)?),
        GraphKind::Product { .. } => match v.as_array().map(Vec::as_slice) {
            Some([u, p]) => Label::Product(ProductVertex {
                star: parse_star(u)?,
                grid: parse_coord(p)?,
            }),
            _ => return Err(parse_err("product label must be [star, [a, b]]")),
        },
        GraphKind::Plain => match v {
            Value::Array(xs) if xs.len() == 2 => Label::Pair(as_usize(&xs[0], "label")?, as_usize(&xs[1], "label")?),
            _ => Label::Plain(as_usize(v, "label")?),
        },
    })
}

/// Short human-readable label text.
pub fn label_text(label: &Label) -> String {
    match *label {
        Label::Plain(i) => i.to_string(),
        Label::Pair(x, y) => format!("({x},{y})"),
        Label::Grid(p) => format!("[{},{}]", p.a, p.b),
        Label::Star(StarVertex::Root) => "t".into(),
        Label::Star(StarVertex::Leaf(i)) => i.to_string(),
        Label::Product(pv) => {
            let u = match pv.star {
                StarVertex::Root => "t".to_string(),
                StarVertex::Leaf(i) => i.to_string(),
            };
            format!("({u},[{},{}])", pv.grid.a, pv.grid.b)
        }
    }
}

pub fn graph_to_json(g: &Graph) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(g.kind().name()));
    match g.kind() {
        GraphKind::Hex { n } => {
            obj.insert("n".into(), json!(n));
        }
        GraphKind::Star { a } => {
            obj.insert("a".into(), json!(a));
        }
        GraphKind::Product { a, n } => {
            obj.insert("a".into(), json!(a));
            obj.insert("n".into(), json!(n));
        }
        GraphKind::Plain => {}
    }
    let vertices: Vec<Value> = (0..g.vertex_count())
        .map(|v| json!({"id": v, "label": label_json(&g.label(v))}))
        .collect();
    obj.insert("vertices".into(), Value::Array(vertices));
    let edges: Vec<Value> = g.edges().iter().map(|e| json!([e.u(), e.v()])).collect();
    obj.insert("edges".into(), Value::Array(edges));
    Value::Object(obj)
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    let kind = match get(v, "kind")?.as_str() {
        Some("plain") => GraphKind::Plain,
        Some("hex") => GraphKind::Hex { n: as_usize(get(v, "n")?, "n")? },
        Some("star") => GraphKind::Star { a: as_usize(get(v, "a")?, "a")? },
        Some("product") => GraphKind::Product {
            a: as_usize(get(v, "a")?, "a")?,
            n: as_usize(get(v, "n")?, "n")?,
        },
        _ => return Err(parse_err("unknown graph kind")),
    };
    let vertices = as_array(get(v, "vertices")?, "vertices")?;
    let mut labels = Vec::with_capacity(vertices.len());
    for (i, vert) in vertices.iter().enumerate() {
        if as_usize(get(vert, "id")?, "vertex id")? != i {
            return Err(parse_err(format!("vertex ids must be 0..n in order (entry {i})")));
        }
        labels.push(parse_label(kind, get(vert, "label")?)?);
    }
    let mut edges = Vec::new();
    for e in as_array(get(v, "edges")?, "edges")? {
        match e.as_array().map(Vec::as_slice) {
            Some([x, y]) => edges.push(Edge::new(as_usize(x, "endpoint")?, as_usize(y, "endpoint")?)),
            _ => return Err(parse_err("edges must be [u, v] pairs")),
        }
    }
    Graph::new(kind, labels, edges).map_err(|e| parse_err(e.to_string()))
}

fn edge_key(e: Edge) -> String {
    format!("{}-{}", e.u(), e.v())
}

fn parse_edge_key(s: &str) -> Result<Edge> {
    let (x, y) = s
        .split_once('-')
        .ok_or_else(|| parse_err(format!("edge key \"{s}\" is not of the form u-v")))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| parse_err(format!("bad edge key \"{s}\"")));
    Ok(Edge::new(num(x)?, num(y)?))
}

pub fn layout_to_json(layout: &Layout) -> Value {
    let colors: Map<String, Value> = layout
        .coloring
        .iter()
        .map(|(e, c)| (edge_key(e), json!(c)))
        .collect();
    json!({
        "kind": layout.kind.name(),
        "k": layout.coloring.k(),
        "order": layout.order.sequence(),
        "colors": colors,
    })
}

pub fn parse_layout_kind(s: &str) -> Result<LayoutKind> {
    match s {
        "stack" => Ok(LayoutKind::Stack),
        "queue" => Ok(LayoutKind::Queue),
        _ => Err(parse_err(format!("layout kind must be stack or queue, got \"{s}\""))),
    }
}

pub fn layout_from_json(v: &Value) -> Result<Layout> {
    let kind = parse_layout_kind(get(v, "kind")?.as_str().unwrap_or(""))?;
    let order = order_from_json(get(v, "order")?)?;
    let colors_obj = get(v, "colors")?
        .as_object()
        .ok_or_else(|| parse_err("colors must be an object"))?;
    let mut colors = BTreeMap::new();
    for (key, c) in colors_obj {
        if colors.insert(parse_edge_key(key)?, as_usize(c, "color")?).is_some() {
            return Err(parse_err(format!("edge {key} colored twice")));
        }
    }
    let k = match v.get("k") {
        Some(k) => as_usize(k, "k")?,
        None => colors.values().map(|&c| c + 1).max().unwrap_or(0),
    };
    Ok(Layout {
        kind,
        order,
        coloring: EdgeColoring::new(colors, k).map_err(|e| parse_err(e.to_string()))?,
    })
}

/// Accepts a bare array of vertex ids or an object with an `order` field.
pub fn order_from_json(v: &Value) -> Result<LinearOrder> {
    let arr = match v {
        Value::Object(_) => as_array(get(v, "order")?, "order")?,
        _ => as_array(v, "order")?,
    };
    let seq = arr.iter().map(|x| as_usize(x, "order entry")).collect::<Result<Vec<_>>>()?;
    LinearOrder::from_sequence(seq).map_err(|e| parse_err(e.to_string()))
}

fn color_symbol(c: Color) -> Value {
    json!(c.symbol().to_string())
}

/// Rows listed bottom-up (`b = 1..n`), each from `a = 1` to `a = n`.
pub fn coloring_to_json(coloring: &GridColoring) -> Value {
    let n = coloring.n();
    let rows: Vec<Value> = (1..=n)
        .map(|b| Value::Array((1..=n).map(|a| color_symbol(coloring.color(GridCoord::new(a, b)))).collect()))
        .collect();
    json!({"n": n, "rows": rows})
}

fn parse_color(v: &Value) -> Result<Color> {
    match v.as_str() {
        Some("R") | Some("r") | Some("red") => Ok(Color::Red),
        Some("B") | Some("b") | Some("blue") => Ok(Color::Blue),
        _ => Err(parse_err("colors must be \"R\" or \"B\"")),
    }
}

pub fn coloring_from_json(v: &Value) -> Result<GridColoring> {
    let n = as_usize(get(v, "n")?, "n")?;
    let rows = as_array(get(v, "rows")?, "rows")?;
    if n == 0 || rows.len() != n {
        return Err(parse_err(format!("expected {n} rows, found {}", rows.len())));
    }
    let mut colors = Vec::with_capacity(n * n);
    for row in rows {
        let row = as_array(row, "row")?;
        if row.len() != n {
            return Err(parse_err(format!("every row needs {n} entries")));
        }
        for c in row {
            colors.push(parse_color(c)?);
        }
    }
    GridColoring::new(n, colors).map_err(|e| parse_err(e.to_string()))
}

fn coords_json(n: usize, ids: &[usize]) -> Value {
    Value::Array(ids.iter().map(|&id| coord_json(crate::graph::hex_coord(n, id))).collect())
}

pub fn path_to_json(n: usize, path: &MonochromaticPath, trace: Option<&[BoundaryStep]>) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(n));
    obj.insert("color".into(), color_symbol(path.color));
    obj.insert("length".into(), json!(path.vertices.len()));
    obj.insert("vertices".into(), coords_json(n, &path.vertices));
    if let Some(steps) = trace {
        let steps: Vec<Value> = steps
            .iter()
            .map(|s| {
                json!({
                    "color": color_symbol(s.color),
                    "component": coords_json(n, &s.component),
                    "far_boundary": s.far_boundary.as_ref().map(|f| coords_json(n, f)),
                })
            })
            .collect();
        obj.insert("trace".into(), Value::Array(steps));
    }
    Value::Object(obj)
}

fn class_symbol(c: &Option<PairClass>) -> Value {
    json!(c.map_or("-", |c| c.symbol()))
}

pub fn witness_to_json(report: &WitnessReport, trace: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("case".into(), json!(report.case.tag()));
    let edges: Vec<Value> = report.edges.iter().map(|e| json!([e.u(), e.v()])).collect();
    obj.insert("edges".into(), Value::Array(edges));
    obj.insert("b".into(), json!(report.b));
    obj.insert("selected".into(), json!(report.selected));
    obj.insert("lower_bound".into(), json!(report.lower_bound));
    if trace {
        let t = &report.trace;
        let dirs: Vec<Value> = t
            .leaf_family
            .directions
            .iter()
            .map(|d| match d {
                Direction::Increasing => json!("inc"),
                Direction::Decreasing => json!("dec"),
            })
            .collect();
        let matrix: Vec<Value> = t
            .classification
            .iter()
            .map(|row| Value::Array(row.iter().map(class_symbol).collect()))
            .collect();
        obj.insert(
            "trace".into(),
            json!({
                "leaf_family": {
                    "leaves": t.leaf_family.leaves,
                    "directions": dirs,
                    "step_sizes": t.leaf_family.step_sizes,
                },
                "path": t.path.iter().map(|&p| coord_json(p)).collect::<Vec<_>>(),
                "path_color": color_symbol(t.path_color),
                "family_leaves": t.family_leaves,
                "classification": matrix,
            }),
        );
    }
    Value::Object(obj)
}

/// Report body for a family too small for the requested chain/antichain sizes.
pub fn insufficient_to_json(err: &Error) -> Option<Value> {
    match *err {
        Error::InsufficientScale {
            paths,
            longest_chain,
            largest_antichain,
            c,
            d,
        } => Some(json!({
            "outcome": "insufficient-scale",
            "b": paths,
            "longest_chain": longest_chain,
            "largest_antichain": largest_antichain,
            "c": c,
            "d": d,
        })),
        _ => None,
    }
}

pub fn params_to_json(p: &ScaleParameters) -> Value {
    json!({
        "s": p.s,
        "n": p.n,
        "c": p.c,
        "d": p.d,
        "m": big(&p.m),
        "b_bound": big(&p.b_bound),
        "a_bound": {"base": big(&p.a_base), "exponent": big(&p.a_exponent), "digits": big(&p.a_digits)},
        "separated_guarantee": p.separated_guarantee,
        "crossing_guarantee": p.crossing_guarantee,
    })
}
