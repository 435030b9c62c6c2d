//! Dense symmetric matrices and a cyclic Jacobi eigensolver.
//!
//! Jacobi rotations are slower than tridiagonalization for large matrices
//! but are robust and simple, which is all that is needed at the scale the
//! oracle runs (a few hundred vertices).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use crate::error::Error;

/// Maximum number of full Jacobi sweeps before giving up.
const MAX_SWEEPS: usize = 100;
/// Convergence target: off-diagonal Frobenius norm relative to its initial value.
const OFF_NORM_REDUCTION: f64 = 1e-12;

/// A dense symmetric matrix in row-major full storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.set(i, j, value);
        self.set(j, i, value);
    }

    /// Frobenius norm of the strictly off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let x = self.get(i, j);
                sum += 2.0 * x * x;
            }
        }
        Float::sqrt(sum)
    }
}

/// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi
/// rotations run until the off-diagonal norm drops below
/// `1e-12 * initial norm`.
pub fn eigenvalues_sym(m: &SymMatrix) -> Result<Vec<f64>, Error> {
    let n = m.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = m.clone();
    let initial_off = a.off_diagonal_norm();
    let target = initial_off * OFF_NORM_REDUCTION;

    let mut converged = initial_off == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
        converged = a.off_diagonal_norm() <= target;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eig.sort_unstable_by(f64::total_cmp);
    Ok(eig)
}

/// One Jacobi rotation annihilating `a[p][q]` (Rutishauser's stable form).
fn rotate(a: &mut SymMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
    let t = if Float::abs(theta) > 1e200 {
        // limiting tangent; avoids overflow in theta^2
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (Float::abs(theta) + Float::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / Float::sqrt(t * t + 1.0);
    let s = t * c;

    let n = a.dim();
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set_sym(p, q, 0.0);
    for i in 0..n {
        if i == p || i == q {
            continue;
        }
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set_sym(i, p, c * aip - s * aiq);
        a.set_sym(i, q, s * aip + c * aiq);
    }
}
