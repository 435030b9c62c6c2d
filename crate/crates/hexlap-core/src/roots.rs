//! Real roots of the spectral step polynomials.
//!
//! For an eigenvalue `sigma` of the previous level, the next level picks up
//! the roots of
//!
//! ```text
//! k = 1:   4 L^3 - (10 + 2 s) L^2 + (5 + 4 s) L - s = 0
//! k >= 2:  (16k+16) L^5 - (80k+64+16s) L^4 + (140k+84+64s) L^3
//!            - (100k+40+84s) L^2 + (25k+5+40s) L - s (k+5) = 0
//! ```
//!
//! All roots are real and lie in [0, 2] (they are normalized Laplacian
//! eigenvalues of a larger graph), and are simple for `sigma` in (0, 2), so
//! sign-change bracketing on a uniform grid followed by bisection and a
//! Newton polish is reliable. The polynomials are evaluated in monic form so
//! residual thresholds are scale-free.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Float;

use crate::error::Error;

const GRID_COARSE: usize = 1_000;
const GRID_FINE: usize = 100_000;
/// Scan slightly past [0, 2] so roots that sit exactly on an endpoint are
/// still bracketed when rounding pushes the polynomial value across zero.
const DOMAIN_PAD: f64 = 1e-9;
const BISECT_WIDTH: f64 = 1e-13;
const RESIDUAL_TOL: f64 = 1e-12;
/// Relative tolerance of the Vieta product self-check.
const PRODUCT_RTOL: f64 = 1e-9;

/// The real roots of one spectral step polynomial, ascending (3 entries for
/// the cubic, 5 for the quintic).
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<f64>,
}

impl RootSet {
    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn product(&self) -> f64 {
        self.roots.iter().product()
    }
}

fn check_sigma(sigma: f64) -> Result<(), Error> {
    if !(sigma >= -1e-12 && sigma <= 2.0 + 1e-12) {
        return Err(Error::SigmaOutOfRange { sigma });
    }
    Ok(())
}

/// Roots of the cubic step polynomial for `sigma` in [0, 2] (endpoints
/// permitted; they factor into the fixed eigenvalue families).
pub fn cubic_roots(sigma: f64) -> Result<RootSet, Error> {
    check_sigma(sigma)?;
    // monic form of 4L^3 - (10+2s)L^2 + (5+4s)L - s
    let coeffs = [
        1.0,
        -(10.0 + 2.0 * sigma) / 4.0,
        (5.0 + 4.0 * sigma) / 4.0,
        -sigma / 4.0,
    ];
    let roots = real_roots_in_unit_interval(&coeffs)?;
    let set = RootSet { roots };
    check_product(&set, sigma / 4.0)?;
    Ok(set)
}

/// Roots of the quintic step polynomial for `sigma` in [0, 2] and `k >= 1`.
///
/// At `k = 1` the quintic factors as the cubic times `(L - 1/2)(L - 3/2)`;
/// this path is kept for that consistency check, while the spectral step
/// itself uses the cubic for `k = 1`.
pub fn quintic_roots(sigma: f64, k: u64) -> Result<RootSet, Error> {
    if k == 0 {
        return Err(Error::InvalidPathCount { k });
    }
    check_sigma(sigma)?;
    let kf = k as f64;
    let lead = 16.0 * kf + 16.0;
    let coeffs = [
        1.0,
        -(80.0 * kf + 64.0 + 16.0 * sigma) / lead,
        (140.0 * kf + 84.0 + 64.0 * sigma) / lead,
        -(100.0 * kf + 40.0 + 84.0 * sigma) / lead,
        (25.0 * kf + 5.0 + 40.0 * sigma) / lead,
        -sigma * (kf + 5.0) / lead,
    ];
    let roots = real_roots_in_unit_interval(&coeffs)?;
    let set = RootSet { roots };
    check_product(&set, sigma * (kf + 5.0) / lead)?;
    Ok(set)
}

fn check_product(set: &RootSet, expected: f64) -> Result<(), Error> {
    let got = set.product();
    let tol = PRODUCT_RTOL * Float::abs(expected);
    if Float::abs(got - expected) > tol && expected != 0.0 {
        return Err(Error::RootProductMismatch {
            detail: format!("product {got:e}, expected {expected:e}"),
        });
    }
    // expected == 0 means sigma == 0; one root must then be (numerically) zero
    if expected == 0.0 && set.roots.iter().all(|r| Float::abs(*r) > 1e-10) {
        return Err(Error::RootProductMismatch {
            detail: format!("sigma = 0 but no root near zero in {:?}", set.roots),
        });
    }
    Ok(())
}

#[inline]
fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

#[inline]
fn horner_deriv(coeffs: &[f64], x: f64) -> f64 {
    let n = coeffs.len() - 1;
    coeffs[..n]
        .iter()
        .enumerate()
        .fold(0.0, |acc, (i, &c)| acc * x + (n - i) as f64 * c)
}

/// All `degree` real roots of a monic polynomial known to lie in [0, 2]:
/// sign-change scan on a uniform grid (with a fine-grid fallback), bisection,
/// then a bracket-guarded Newton polish.
fn real_roots_in_unit_interval(coeffs: &[f64]) -> Result<Vec<f64>, Error> {
    let degree = coeffs.len() - 1;
    let lo = -DOMAIN_PAD;
    let hi = 2.0 + DOMAIN_PAD;
    let mut found = 0;
    for &grid in &[GRID_COARSE, GRID_FINE] {
        let mut roots: Vec<f64> = Vec::with_capacity(degree);
        let mut brackets: Vec<(f64, f64)> = Vec::with_capacity(degree);
        let mut prev_x = lo;
        let mut prev_f = horner(coeffs, lo);
        if prev_f == 0.0 {
            roots.push(lo);
        }
        for i in 1..=grid {
            let x = lo + (hi - lo) * i as f64 / grid as f64;
            let fx = horner(coeffs, x);
            if fx == 0.0 {
                roots.push(x);
            } else if prev_f != 0.0 && (fx > 0.0) != (prev_f > 0.0) {
                brackets.push((prev_x, x));
            }
            prev_x = x;
            prev_f = fx;
        }
        found = roots.len() + brackets.len();
        if found == degree {
            for (blo, bhi) in brackets {
                roots.push(refine(coeffs, blo, bhi));
            }
            roots.sort_unstable_by(f64::total_cmp);
            for &r in &roots {
                let res = Float::abs(horner(coeffs, r));
                if res > RESIDUAL_TOL {
                    return Err(Error::RootProductMismatch {
                        detail: format!("residual {res:e} at root {r}"),
                    });
                }
            }
            return Ok(roots);
        }
    }
    Err(Error::BracketingFailed { expected: degree, found })
}

fn refine(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = horner(coeffs, lo);
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket at floating-point resolution
        }
        let fm = horner(coeffs, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4 {
        let f = horner(coeffs, x);
        if f == 0.0 {
            break;
        }
        let d = horner_deriv(coeffs, x);
        if d == 0.0 {
            break;
        }
        let next = x - f / d;
        if !(lo - BISECT_WIDTH..=hi + BISECT_WIDTH).contains(&next) {
            break;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const SQRT5: f64 = 2.23606797749978969640917366873127624;

    fn assert_roots(set: &RootSet, expected: &[f64], tol: f64) {
        assert_eq!(set.len(), expected.len(), "{:?} vs {expected:?}", set.roots());
        for (r, e) in set.roots().iter().zip(expected) {
            assert!((r - e).abs() < tol, "{:?} vs {expected:?}", set.roots());
        }
    }

    #[test]
    fn cubic_at_sigma_zero() {
        // 4L^3 - 10L^2 + 5L = L (4L^2 - 10L + 5)
        let set = cubic_roots(0.0).unwrap();
        assert_roots(&set, &[0.0, (5.0 - SQRT5) / 4.0, (5.0 + SQRT5) / 4.0], 1e-12);
    }

    #[test]
    fn cubic_at_sigma_two() {
        // dividing by (L - 2) leaves 4L^2 - 6L + 1
        let set = cubic_roots(2.0).unwrap();
        assert_roots(&set, &[(3.0 - SQRT5) / 4.0, (3.0 + SQRT5) / 4.0, 2.0], 1e-12);
    }

    #[test]
    fn cubic_at_sigma_one_vieta() {
        let set = cubic_roots(1.0).unwrap();
        let recip: f64 = set.roots().iter().map(|r| 1.0 / r).sum();
        assert!((recip - 9.0).abs() < 1e-9);
        assert!((set.product() - 0.25).abs() < 1e-10);
    }

    #[test]
    fn quintic_at_sigma_zero_k2() {
        let s37 = 37f64.sqrt();
        let mut expected = vec![
            0.0,
            (5.0 - SQRT5) / 4.0,
            (5.0 + SQRT5) / 4.0,
            (13.0 - s37) / 12.0,
            (13.0 + s37) / 12.0,
        ];
        expected.sort_unstable_by(f64::total_cmp);
        assert_roots(&quintic_roots(0.0, 2).unwrap(), &expected, 1e-10);
    }

    #[test]
    fn quintic_at_sigma_two_k2() {
        let s37 = 37f64.sqrt();
        let mut expected = vec![
            2.0,
            (3.0 - SQRT5) / 4.0,
            (3.0 + SQRT5) / 4.0,
            (11.0 - s37) / 12.0,
            (11.0 + s37) / 12.0,
        ];
        expected.sort_unstable_by(f64::total_cmp);
        assert_roots(&quintic_roots(2.0, 2).unwrap(), &expected, 1e-10);
    }

    #[test]
    fn quintic_at_k1_is_cubic_plus_half_pair() {
        // the k = 1 quintic factors through the cubic times (L-1/2)(L-3/2)
        for i in 0..100 {
            let sigma = 0.01 + 1.98 * i as f64 / 99.0;
            let q = quintic_roots(sigma, 1).unwrap();
            let mut expected = cubic_roots(sigma).unwrap().roots().to_vec();
            expected.push(0.5);
            expected.push(1.5);
            expected.sort_unstable_by(f64::total_cmp);
            assert_roots(&q, &expected, 1e-10);
        }
    }

    #[test]
    fn roots_stay_in_range() {
        for i in 0..=200 {
            let sigma = 2.0 * i as f64 / 200.0;
            for r in cubic_roots(sigma).unwrap().roots() {
                assert!(*r >= -1e-12 && *r <= 2.0 + 1e-12);
            }
            for k in [2u64, 3, 7] {
                for r in quintic_roots(sigma, k).unwrap().roots() {
                    assert!(*r >= -1e-12 && *r <= 2.0 + 1e-12);
                }
            }
        }
    }

    #[test]
    fn smallest_cubic_root_is_increasing_in_sigma() {
        let mut last = -1.0;
        for i in 0..=100 {
            let sigma = 0.01 + 1.98 * i as f64 / 100.0;
            let first = cubic_roots(sigma).unwrap().roots()[0];
            assert!(first > last, "not increasing at sigma = {sigma}");
            last = first;
        }
    }

    #[test]
    fn sigma_out_of_range_is_rejected() {
        assert!(matches!(cubic_roots(-0.5), Err(Error::SigmaOutOfRange { .. })));
        assert!(matches!(cubic_roots(2.5), Err(Error::SigmaOutOfRange { .. })));
        assert!(matches!(quintic_roots(3.0, 2), Err(Error::SigmaOutOfRange { .. })));
        assert!(matches!(quintic_roots(1.0, 0), Err(Error::InvalidPathCount { k: 0 })));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn cubic_vieta_product(sigma in 0.0f64..2.0) {
                let set = cubic_roots(sigma).unwrap();
                let expected = sigma / 4.0;
                prop_assert!((set.product() - expected).abs() <= 1e-10 + 1e-9 * expected.abs());
            }

            #[test]
            fn quintic_vieta_product(sigma in 0.0f64..2.0, k in 1u64..8) {
                let set = quintic_roots(sigma, k).unwrap();
                let expected = sigma * (k as f64 + 5.0) / (16.0 * k as f64 + 16.0);
                prop_assert!((set.product() - expected).abs() <= 1e-10 + 1e-9 * expected.abs());
            }
        }
    }
}
