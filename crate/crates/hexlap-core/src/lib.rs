//! Normalized Laplacian spectra of iterated k-hexagonal graphs.
//!
//! The k-hexagonal transform replaces every edge of a simple connected graph
//! by the edge itself plus `k` internally disjoint paths of length 5, turning
//! each edge into `k` hexagons. Iterating the transform `n` times produces a
//! self-similar graph family whose normalized Laplacian spectrum can be
//! computed without ever building the (exponentially large) graph: every
//! eigenvalue of level `n-1` maps to the real roots of a fixed cubic (`k = 1`)
//! or quintic (`k >= 2`) polynomial, and the remainder of the spectrum comes
//! from closed-form eigenvalue families whose multiplicities depend only on
//! the previous order, size and bipartiteness.
//!
//! The crate provides:
//!
//! - [`graph`]: a small undirected simple graph container plus generators;
//! - [`hex`]: the k-hexagonal transform, its iteration and size formulas;
//! - [`matrix`], [`oracle`]: ground truth via a dense Jacobi eigensolver and
//!   an exact (big integer) matrix-tree spanning-tree count;
//! - [`roots`], [`step`]: the spectral recursion itself;
//! - [`spectrum`]: eigenvalue multisets with multiplicity and family tags;
//! - [`invariants`]: Kemeny's constant, the multiplicative degree-Kirchhoff
//!   index and exact spanning-tree counts, both from spectra and from the
//!   closed-form recursions.
//!
//! The crate is `no_std` (with `alloc`); file formats, JSON reporting and the
//! command-line front end live in the companion `hexlap` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod graph;
pub mod hex;
pub mod invariants;
pub mod matrix;
pub mod oracle;
pub mod roots;
pub mod spectrum;
pub mod step;

pub use error::Error;
pub use graph::{generate, Graph, GraphKind, GraphMeta};
pub use hex::{
    hexagonal, hexagonal_iter, size_after, transformed_degrees_product_log10, TransformParams,
    DEFAULT_VERTEX_BUDGET,
};
pub use invariants::{
    invariants_closed, invariants_spectral, kemeny_from_spectrum, kirchhoff_from_kemeny,
    tau_closed_k, tau_closed_k1, tau_log10_from_spectrum, BigExponentProduct, InvariantReport,
    Method, TauValue,
};
pub use oracle::{normalized_laplacian, spanning_trees_matrix_tree, spectrum_oracle};
pub use roots::{cubic_roots, quintic_roots, RootSet};
pub use spectrum::{compare_spectra, Family, MatchReport, Spectrum, SpectrumEntry};
pub use step::{spectrum_n, step_spectrum};
