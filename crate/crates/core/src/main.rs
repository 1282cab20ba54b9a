use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use linlayout::graph::{make_star, Graph};
use linlayout::hexpath::{GridColoring, HexGrid};
use linlayout::io;
use linlayout::layout::{verify_layout, Layout, LayoutKind, LinearOrder};
use linlayout::queues::{hex_queue_layout, product_queue_layout, to_dot};
use linlayout::solver::{queue_number, stack_number, SolveBudget};
use linlayout::witness::{extract_crossing_witness, required_parameters};
use linlayout::Error;

#[derive(Parser)]
#[command(name = "linlayout", version, about = "Stack and queue layouts of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Stack,
    Queue,
}

impl From<Kind> for LayoutKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Stack => LayoutKind::Stack,
            Kind::Queue => LayoutKind::Queue,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Hex,
    Star,
    Product,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a dual hex grid, a star or their product.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also write the constructed queue layout (hex and product only).
        #[arg(long)]
        layout_out: Option<PathBuf>,
    },
    /// Check a layout against a graph; exit 0 iff valid.
    Verify {
        graph: PathBuf,
        layout: PathBuf,
        /// Reinterpret the layout as this kind.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Exact stack or queue number of a small graph.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
        #[arg(long)]
        max_orders: Option<u64>,
        /// Where to write the optimal layout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monochromatic path of at least n vertices in a two-colored grid.
    Hexpath {
        coloring: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairwise crossing edges for a vertex order of the star-grid product.
    Witness {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "random")]
        order: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parameter sizes that force s stack colors.
    Params {
        #[arg(long)]
        s: usize,
    },
}

/// Failure carrying the process exit status.
struct Failure {
    code: u8,
    message: String,
    report: Option<Value>,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InvalidParameter(_) | Error::Parse(_) | Error::Precondition(_) => 2,
            Error::BudgetExceeded { .. } | Error::ResourceLimit(_) => 3,
            Error::InsufficientScale { .. } => 4,
            Error::Invariant(_) => 1,
        };
        let report = match &err {
            Error::BudgetExceeded {
                lower,
                upper,
                orders_examined,
            } => Some(json!({
                "outcome": "budget-exceeded",
                "lower": lower,
                "upper": upper,
                "orders_examined": orders_examined,
            })),
            e => io::insufficient_to_json(e),
        };
        Failure {
            code,
            message: err.to_string(),
            report,
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
        report: None,
    }
}

type CmdResult = Result<u8, Failure>;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    io::parse_json(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Writes through a sibling temporary file and renames it into place.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let fail = |e: std::io::Error| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
        report: None,
    };
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = path.with_file_name(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, contents).map_err(fail)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        fail(e)
    })
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn require(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| input_error(format!("--{flag} is required")))
}

fn cmd_gen(
    family: Family,
    n: Option<usize>,
    a: Option<usize>,
    out: Option<&Path>,
    format: Format,
    layout_out: Option<&Path>,
) -> CmdResult {
    let (g, layout): (Graph, Option<Layout>) = match family {
        Family::Hex => {
            let (g, l) = hex_queue_layout(require(n, "n")?)?;
            (g, Some(l))
        }
        Family::Star => (make_star(require(a, "a")?)?, None),
        Family::Product => {
            let (g, l) = product_queue_layout(require(a, "a")?, require(n, "n")?)?;
            (g, Some(l))
        }
    };
    let text = match format {
        Format::Json => io::to_pretty(&io::graph_to_json(&g)),
        Format::Dot => to_dot(&g, layout.as_ref()),
    };
    emit(out, &text)?;
    if let Some(path) = layout_out {
        let layout = layout.ok_or_else(|| input_error("stars have no constructed layout"))?;
        write_atomic(path, &io::to_pretty(&io::layout_to_json(&layout)))?;
    }
    Ok(0)
}

fn cmd_verify(graph: &Path, layout: &Path, kind: Option<Kind>) -> CmdResult {
    let g = io::graph_from_json(&read_json(graph)?)?;
    let mut l = io::layout_from_json(&read_json(layout)?)?;
    if let Some(k) = kind {
        l.kind = k.into();
    }
    let report = verify_layout(&g, &l).map_err(|e| input_error(e.to_string()))?;
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|(e, f)| json!([e.to_string(), f.to_string()]))
        .collect();
    let body = json!({
        "kind": l.kind.name(),
        "k": l.coloring.k(),
        "valid": report.valid,
        "violation_count": violations.len(),
        "violations": violations,
    });
    print!("{}", io::to_pretty(&body));
    Ok(if report.valid { 0 } else { 1 })
}

fn cmd_solve(graph: &Path, kind: Kind, max_vertices: usize, max_orders: Option<u64>, out: Option<&Path>) -> CmdResult {
    let g = io::graph_from_json(&read_json(graph)?)?;
    let budget = SolveBudget {
        max_vertices,
        max_orders: max_orders.unwrap_or(u64::MAX),
        time_hint: None,
    };
    let sol = match kind {
        Kind::Stack => stack_number(&g, &budget)?,
        Kind::Queue => queue_number(&g, &budget)?,
    };
    print!(
        "{}",
        io::to_pretty(&json!({
            "kind": LayoutKind::from(kind).name(),
            "k": sol.k,
            "orders_examined": sol.orders_examined,
        }))
    );
    if let Some(path) = out {
        write_atomic(path, &io::to_pretty(&io::layout_to_json(&sol.layout)))?;
    }
    Ok(0)
}

fn cmd_hexpath(
    file: Option<&Path>,
    random: bool,
    n: Option<usize>,
    seed: u64,
    trace: bool,
    out: Option<&Path>,
) -> CmdResult {
    let coloring = match (file, random) {
        (Some(path), false) => io::coloring_from_json(&read_json(path)?)?,
        (None, true) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            GridColoring::random(require(n, "n")?, &mut rng)?
        }
        _ => return Err(input_error("give either a coloring file or --random")),
    };
    let grid = HexGrid::new(coloring.n())?;
    let path = grid.find_monochromatic_path(&coloring)?;
    let steps = if trace { Some(grid.boundary_sequence(&coloring)?) } else { None };
    emit(out, &io::to_pretty(&io::path_to_json(coloring.n(), &path, steps.as_deref())))?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_witness(
    a: usize,
    n: usize,
    order_file: Option<&Path>,
    random: bool,
    seed: u64,
    c: usize,
    d: usize,
    trace: bool,
    out: Option<&Path>,
) -> CmdResult {
    if a == 0 || n == 0 {
        return Err(input_error("--a and --n must be at least 1"));
    }
    let total = (a + 1) * n * n;
    let order = match order_file {
        Some(path) => {
            let order = io::order_from_json(&read_json(path)?)?;
            if order.len() != total {
                return Err(input_error(format!("order lists {} vertices, the product has {total}", order.len())));
            }
            order
        }
        None if random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut seq: Vec<usize> = (0..total).collect();
            seq.shuffle(&mut rng);
            LinearOrder::from_sequence(seq)?
        }
        None => LinearOrder::identity(total),
    };
    let report = extract_crossing_witness(a, n, &order, c, d)?;
    emit(out, &io::to_pretty(&io::witness_to_json(&report, trace)))?;
    Ok(0)
}

fn cmd_params(s: usize) -> CmdResult {
    let p = required_parameters(s)?;
    print!("{}", io::to_pretty(&io::params_to_json(&p)));
    Ok(0)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen {
            family,
            n,
            a,
            out,
            format,
            layout_out,
        } => cmd_gen(family, n, a, out.as_deref(), format, layout_out.as_deref()),
        Command::Verify { graph, layout, kind } => cmd_verify(&graph, &layout, kind),
        Command::Solve {
            graph,
            kind,
            max_vertices,
            max_orders,
            out,
        } => cmd_solve(&graph, kind, max_vertices, max_orders, out.as_deref()),
        Command::Hexpath {
            coloring,
            random,
            n,
            seed,
            trace,
            out,
        } => cmd_hexpath(coloring.as_deref(), random, n, seed, trace, out.as_deref()),
        Command::Witness {
            a,
            n,
            order,
            random,
            seed,
            c,
            d,
            trace,
            out,
        } => cmd_witness(a, n, order.as_deref(), random, seed, c, d, trace, out.as_deref()),
        Command::Params { s } => cmd_params(s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if let Some(report) = f.report {
                print!("{}", io::to_pretty(&report));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
