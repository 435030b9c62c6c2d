//! Ground truth on explicitly constructed graphs: normalized Laplacian
//! assembly, dense eigendecomposition, and exact spanning-tree counts via
//! the matrix-tree theorem.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Float, One, Signed, Zero};

use crate::error::Error;
use crate::graph::Graph;
use crate::matrix::{eigenvalues_sym, SymMatrix};
use crate::spectrum::Spectrum;

/// The normalized Laplacian: 1 on the diagonal, `-1/sqrt(d_i d_j)` on edges.
pub fn normalized_laplacian(g: &Graph) -> Result<SymMatrix, Error> {
    let deg = g.degrees();
    if let Some(v) = deg.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    let n = g.num_vertices();
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, 1.0);
    }
    for &(u, v) in g.edges() {
        m.set_sym(u, v, -1.0 / Float::sqrt((deg[u] * deg[v]) as f64));
    }
    Ok(m)
}

/// Numerical normalized Laplacian spectrum of a connected graph, with
/// eigenvalues grouped into multiplicity entries.
pub fn spectrum_oracle(g: &Graph) -> Result<Spectrum, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = normalized_laplacian(g)?;
    let eig = eigenvalues_sym(&m)?;
    Spectrum::from_eigenvalues(&eig, g.meta())
}

/// Exact spanning-tree count: the determinant of a principal minor of the
/// combinatorial Laplacian `D - A`, computed by fraction-free (Bareiss)
/// elimination over big integers.
pub fn spanning_trees_matrix_tree(g: &Graph) -> Result<BigUint, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.num_vertices();
    if n <= 1 {
        return Ok(BigUint::one());
    }

    // principal minor: drop the last row and column
    let m = n - 1;
    let deg = g.degrees();
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            let mut row = vec![BigInt::zero(); m];
            row[i] = BigInt::from(deg[i]);
            row
        })
        .collect();
    for &(u, v) in g.edges() {
        if u < m && v < m {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }

    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for p in 0..m.saturating_sub(1) {
        if a[p][p].is_zero() {
            // exact-arithmetic pivot search; cannot fail on a connected minor
            let Some(r) = (p + 1..m).find(|&r| !a[r][p].is_zero()) else {
                return Err(Error::Disconnected);
            };
            a.swap(p, r);
            sign = -sign;
        }
        for i in p + 1..m {
            for j in p + 1..m {
                let num = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = num / &prev; // exact division in Bareiss elimination
            }
        }
        prev = a[p][p].clone();
    }

    let det = if sign < 0 { -a[m - 1][m - 1].clone() } else { a[m - 1][m - 1].clone() };
    if det.is_positive() {
        Ok(det.to_biguint().expect("positive determinant"))
    } else {
        // the minor of a connected graph's Laplacian is positive definite
        Err(Error::Disconnected)
    }
}
