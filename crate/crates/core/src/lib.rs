//! Linear layouts of graphs.
//!
//! Stack and queue layouts (verification, exact per-order minima, exact
//! stack/queue numbers of small graphs), the dual hexagonal grid `H_n` and
//! the product `S_a □ H_n` with an explicit 4-queue layout, a monochromatic
//! path finder for two-colored `H_n`, and a pipeline that extracts a set of
//! pairwise crossing edges from any vertex order of `S_a □ H_n`.

mod coloring;
pub mod error;
pub mod graph;
pub mod hexpath;
pub mod io;
pub mod layout;
pub mod monotone;
pub mod poset;
pub mod queues;
pub mod solver;
pub mod witness;

pub use error::{Error, Result};
