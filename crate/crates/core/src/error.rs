use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed line in a text graph format.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Invalid graph6 input.
    #[error("graph6 format error: {0}")]
    Graph6(String),

    /// A self-loop "u u" in an edge list.
    #[error("self-loop at vertex {0} (simple graphs only)")]
    SelfLoop(usize),

    /// Vertex index outside 0..n.
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexRange { vertex: usize, n: usize },

    /// Generic parameter violation (bad n, bad family parameters, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Enumeration would exceed the subset-scan budget.
    #[error(
        "graph has {n} vertices, above the enumeration cutoff {max}; \
         split into connected components (domination_polynomial_by_components) \
         or raise the cutoff explicitly"
    )]
    Capacity { n: usize, max: usize },

    /// Requested top coefficient lies outside the binomial band of the graph.
    #[error("k = {k} exceeds the minimum degree {delta}; coefficient is not in the binomial band")]
    OutOfBand { k: usize, delta: usize },

    /// A criterion was invoked outside its hypothesis.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    /// A pair list violates the staircase hypotheses.
    #[error("staircase violation at index {index}: {msg}")]
    Staircase { index: usize, msg: String },

    /// Root iteration did not converge within the iteration budget.
    #[error("root finding did not converge after {iterations} iterations (residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
