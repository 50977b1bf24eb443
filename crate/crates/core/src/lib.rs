//! Exact computation and certification toolkit for domination polynomials
//! of graphs: a brute-force enumeration oracle, closed-form top
//! coefficients, union-bound and overlap-corrected unimodality criteria
//! with exact rational certificates, numerical root-region checks, and the
//! threshold-graph staircase decomposition with its lattice-path
//! log-concavity verification.

pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod polynomial;
pub mod ratio_bounds;
pub mod roots;
pub mod threshold;
pub mod top_coeffs;

pub use combinatorics::Rational;
pub use error::{Error, Result};
pub use graph::{Graph, LocalStatistics};
pub use polynomial::{Polynomial, ShapeReport};
