use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An exact search ran out of budget. `lower` is a proven lower bound,
    /// `upper` the best value found so far (if any order was completed).
    #[error("search budget exhausted after {orders_examined} orders (bounds: {lower} ..= {})",
        upper.map_or_else(|| "?".to_string(), |u| u.to_string()))]
    BudgetExceeded {
        lower: usize,
        upper: Option<usize>,
        orders_examined: u64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The path family is too small to guarantee either a long chain or a
    /// large antichain.
    #[error(
        "insufficient scale: {paths} paths, longest separated chain {longest_chain} (< c = {c}), \
         largest crossing antichain {largest_antichain} (< d = {d})"
    )]
    InsufficientScale {
        paths: usize,
        longest_chain: usize,
        largest_antichain: usize,
        c: usize,
        d: usize,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
