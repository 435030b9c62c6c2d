//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;

/// Errors produced by graph construction, transforms and spectral routines.
///
/// [`Error::is_input_error`] separates rejections of caller-supplied data
/// from internal numerical failures; the CLI maps the former to exit code 2
/// and the latter to exit code 1.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An edge endpoint is not a valid vertex index.
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered edge appears twice.
    DuplicateEdge { u: usize, v: usize },
    /// Generator parameter below the minimum for the requested family.
    GeneratorTooSmall { min: usize, got: usize },
    /// The transform needs k >= 1.
    InvalidPathCount { k: u64 },
    /// The operation requires at least one edge.
    NoEdges,
    /// The operation requires a connected graph.
    Disconnected,
    /// The normalized Laplacian is undefined for isolated vertices.
    IsolatedVertex { vertex: usize },
    /// Predicted transform output exceeds the vertex budget.
    BudgetExceeded { predicted: BigUint, budget: u64 },
    /// A size computation overflowed the native integer range.
    SizeOverflow,
    /// The Jacobi sweep cap was reached before the off-diagonal norm target.
    NoConvergence { sweeps: usize },
    /// sigma must lie in [0, 2] to be a normalized Laplacian eigenvalue.
    SigmaOutOfRange { sigma: f64 },
    /// Root isolation found the wrong number of sign changes.
    BracketingFailed { expected: usize, found: usize },
    /// A solved root set failed its Vieta product check.
    RootProductMismatch { detail: String },
    /// Total spectrum multiplicity disagrees with the recorded vertex count.
    MultiplicityMismatch { total: u64, expected: u64 },
    /// A spectrum entry lies outside [0, 2] beyond tolerance.
    EntryOutOfRange { value: f64 },
    /// Eigenvalue 2 multiplicity inconsistent with the bipartite flag
    /// (connected graphs have it exactly once iff bipartite).
    BadTwoMultiplicity { multiplicity: u64, bipartite: bool },
    /// Eigenvalue 0 missing or its multiplicity differs from 1.
    BadZeroMultiplicity { multiplicity: u64 },
    /// A nonpositive eigenvalue other than the single zero was encountered.
    NonPositiveEigenvalue { value: f64 },
    /// A closed-form exponent did not reduce to an integer.
    NonIntegerExponent { detail: String },
    /// A closed-form exponent came out negative.
    NegativeExponent { detail: String },
}

impl Error {
    /// True for rejections of caller-supplied data (as opposed to internal
    /// numerical failures).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::VertexOutOfRange { .. }
                | Error::SelfLoop { .. }
                | Error::DuplicateEdge { .. }
                | Error::GeneratorTooSmall { .. }
                | Error::InvalidPathCount { .. }
                | Error::NoEdges
                | Error::Disconnected
                | Error::IsolatedVertex { .. }
                | Error::BudgetExceeded { .. }
                | Error::SizeOverflow
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, num_vertices } => {
                write!(f, "vertex index {vertex} out of range (graph has {num_vertices} vertices)")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::GeneratorTooSmall { min, got } => {
                write!(f, "generator parameter {got} below minimum {min}")
            }
            Error::InvalidPathCount { k } => write!(f, "path count k must be >= 1 (got {k})"),
            Error::NoEdges => write!(f, "graph has no edges"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::IsolatedVertex { vertex } => write!(f, "isolated vertex {vertex}"),
            Error::BudgetExceeded { predicted, budget } => {
                write!(f, "predicted vertex count {predicted} exceeds budget {budget}")
            }
            Error::SizeOverflow => write!(f, "graph size exceeds the native integer range"),
            Error::NoConvergence { sweeps } => {
                write!(f, "Jacobi eigensolver did not converge within {sweeps} sweeps")
            }
            Error::SigmaOutOfRange { sigma } => {
                write!(f, "sigma = {sigma} outside the eigenvalue range [0, 2]")
            }
            Error::BracketingFailed { expected, found } => {
                write!(f, "root bracketing found {found} of {expected} expected roots")
            }
            Error::RootProductMismatch { detail } => write!(f, "root product check failed: {detail}"),
            Error::MultiplicityMismatch { total, expected } => {
                write!(f, "spectrum multiplicity {total} does not equal vertex count {expected}")
            }
            Error::EntryOutOfRange { value } => {
                write!(f, "spectrum entry {value} outside [0, 2]")
            }
            Error::BadTwoMultiplicity { multiplicity, bipartite } => {
                let expected = if *bipartite { 1 } else { 0 };
                write!(
                    f,
                    "eigenvalue 2 has multiplicity {multiplicity}, expected {expected} \
                     (bipartite: {bipartite})"
                )
            }
            Error::BadZeroMultiplicity { multiplicity } => {
                write!(f, "eigenvalue 0 has multiplicity {multiplicity}, expected exactly 1")
            }
            Error::NonPositiveEigenvalue { value } => {
                write!(f, "nonpositive eigenvalue {value} beyond the single zero")
            }
            Error::NonIntegerExponent { detail } => {
                write!(f, "closed-form exponent is not an integer: {detail}")
            }
            Error::NegativeExponent { detail } => {
                write!(f, "closed-form exponent is negative: {detail}")
            }
        }
    }
}
