//! Kemeny's constant, the multiplicative degree-Kirchhoff index and
//! spanning-tree counts of iterated k-hexagonal transforms.
//!
//! Each quantity is available two ways: accumulated from a spectrum, and via
//! closed-form recursions in the base order `N0`, size `E0`, `k` and the
//! iteration depth `n`. Closed forms are evaluated in exact rational
//! arithmetic; spanning-tree counts are exact power products
//! ([`BigExponentProduct`]), never floats.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::graph::Graph;
use crate::hex::{size_after, transformed_degrees_product_log10, TransformParams};
use crate::oracle::{spanning_trees_matrix_tree, spectrum_oracle};
use crate::spectrum::{Family, Spectrum, MERGE_TOL};
use crate::step::spectrum_n;

type Rat = BigRational;

fn rat_u(x: u64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

fn frac(n: i128, d: i128) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn int_pow(base: u64, n: u64) -> BigInt {
    num_traits::pow::pow(BigInt::from(base), n as usize)
}

fn rat_pow(base: &Rat, n: u64) -> Rat {
    num_traits::pow::pow(base.clone(), n as usize)
}

// ---------------------------------------------------------------------------
// Kemeny's constant
// ---------------------------------------------------------------------------

/// Kemeny's constant of a connected graph's spectrum: the sum of reciprocals
/// of the nonzero eigenvalues.
///
/// When family tags are present, the tagged families contribute their exact
/// closed radicals: each multiplicity unit of the (5 +- sqrt 5)/4 pair adds
/// 2, the (3 +- sqrt 5)/4 pair adds 6, {1/2, 3/2} adds 8/3, and the simple
/// extras add 2(5k+3)/(5k+1) resp. 2(3k+5)/(k+5) per pair. Only root-image
/// entries are accumulated in floating point.
pub fn kemeny_from_spectrum(s: &Spectrum) -> Result<f64, Error> {
    let mut exact = Rat::zero();
    let mut float_part = 0.0f64;
    let mut zero_mult = 0u64;
    for e in s.entries() {
        let m = e.multiplicity;
        match e.family {
            Some(Family::Zero) => zero_mult += m,
            Some(Family::Two) => exact += frac(1, 2) * rat_u(m),
            // each pair member carries half the pair's rational reciprocal sum
            Some(Family::HalfPair) => exact += frac(4, 3) * rat_u(m),
            Some(Family::PhiPair) => exact += rat_u(m),
            Some(Family::PsiPair) => exact += frac(3, 1) * rat_u(m),
            Some(Family::Sigma0Extra { k }) => {
                exact += frac(5 * k as i128 + 3, 5 * k as i128 + 1) * rat_u(m)
            }
            Some(Family::Sigma2Extra { k }) => {
                exact += frac(3 * k as i128 + 5, k as i128 + 5) * rat_u(m)
            }
            Some(Family::CubicImage) | Some(Family::QuinticImage) | None => {
                if e.value.abs() <= MERGE_TOL {
                    zero_mult += m;
                } else if e.value < 0.0 {
                    return Err(Error::NonPositiveEigenvalue { value: e.value });
                } else {
                    float_part += m as f64 / e.value;
                }
            }
        }
    }
    if zero_mult != 1 {
        return Err(Error::BadZeroMultiplicity { multiplicity: zero_mult });
    }
    Ok(exact.to_f64().unwrap_or(f64::NAN) + float_part)
}

/// The multiplicative degree-Kirchhoff index from Kemeny's constant:
/// `Kf' = 2 E K`.
pub fn kirchhoff_from_kemeny(num_edges: u64, kemeny: f64) -> f64 {
    2.0 * num_edges as f64 * kemeny
}

/// Closed form for Kemeny's constant after `n` hexagonal steps (k = 1):
///
/// ```text
/// K_n = 5^n K_0 - (1/3)(5^n - 1) N_0 + (104/15)(6^n - 5^n) E_0
///       + (4/15)(5^n - 1) E_0 - (1/2)(5^n - 1)
/// ```
pub fn kemeny_closed_k1_exact(k0: &Rat, n0: u64, e0: u64, n: u64) -> Rat {
    if n == 0 {
        return k0.clone();
    }
    let p5 = Rat::from_integer(int_pow(5, n));
    let p6 = Rat::from_integer(int_pow(6, n));
    let g5 = &p5 - Rat::one();
    k0 * &p5 - frac(1, 3) * &g5 * rat_u(n0) + frac(104, 15) * (&p6 - &p5) * rat_u(e0)
        + frac(4, 15) * &g5 * rat_u(e0)
        - frac(1, 2) * &g5
}

/// One step of the k = 1 Kemeny recursion, producing level `n` from level
/// `n - 1`:
///
/// ```text
/// K_n = 5 K_{n-1} - (4/3) N_0 + ((104/15) 6^{n-1} + 16/15) E_0 - 2
/// ```
pub fn kemeny_step_k1_exact(prev: &Rat, n0: u64, e0: u64, n: u64) -> Rat {
    debug_assert!(n >= 1);
    let p6 = Rat::from_integer(int_pow(6, n - 1));
    prev * rat_u(5) - frac(4, 3) * rat_u(n0) + (frac(104, 15) * p6 + frac(16, 15)) * rat_u(e0)
        - rat_u(2)
}

fn kemeny_closed_k_generic(k0: &Rat, n0: u64, e0: u64, k: u64, n: u64) -> Rat {
    if n == 0 {
        return k0.clone();
    }
    let ki = k as i128;
    let (mu, eta) = mu_eta(k, n);
    let a = frac(25 * ki + 5, ki + 5);
    let growth = Rat::from_integer(int_pow(5 * k + 1, n - 1));
    rat_pow(&a, n) * k0
        + (frac(8 * ki * (5 * ki + 21), 5 * (ki + 5)) * &eta * &growth
            + frac(32 * ki, 5 * (ki + 5)) * &mu)
            * rat_u(e0)
        - frac(8 * ki, ki + 5) * &mu * rat_u(n0)
        + frac(4 * (5 * ki * ki - 23 * ki), (ki + 5) * (5 * ki + 1)) * &mu
}

/// Closed form for Kemeny's constant of the n-fold k-hexagonal transform.
/// Dispatches to the k = 1 form when `k == 1` (the two agree; see the unit
/// tests).
pub fn kemeny_closed_k_exact(k0: &Rat, n0: u64, e0: u64, k: u64, n: u64) -> Rat {
    if k == 1 {
        kemeny_closed_k1_exact(k0, n0, e0, n)
    } else {
        kemeny_closed_k_generic(k0, n0, e0, k, n)
    }
}

/// One step of the general-k Kemeny recursion (at k = 1 it coincides with
/// [`kemeny_step_k1_exact`]).
pub fn kemeny_step_k_exact(prev: &Rat, n0: u64, e0: u64, k: u64, n: u64) -> Rat {
    debug_assert!(n >= 1);
    let ki = k as i128;
    let growth = Rat::from_integer(int_pow(5 * k + 1, n - 1));
    frac(25 * ki + 5, ki + 5) * prev
        + (frac(8 * ki * (5 * ki + 21), 5 * (ki + 5)) * &growth + frac(32 * ki, 5 * (ki + 5)))
            * rat_u(e0)
        - frac(8 * ki, ki + 5) * rat_u(n0)
        + frac(4 * (5 * ki * ki - 23 * ki), (ki + 5) * (5 * ki + 1))
}

/// f64 convenience wrapper over [`kemeny_closed_k1_exact`].
pub fn kemeny_closed_k1(k0: f64, n0: u64, e0: u64, n: u64) -> f64 {
    let seed = Rat::from_float(k0).expect("finite seed");
    kemeny_closed_k1_exact(&seed, n0, e0, n).to_f64().unwrap_or(f64::NAN)
}

/// f64 convenience wrapper over [`kemeny_closed_k_exact`].
pub fn kemeny_closed_k(k0: f64, n0: u64, e0: u64, k: u64, n: u64) -> f64 {
    let seed = Rat::from_float(k0).expect("finite seed");
    kemeny_closed_k_exact(&seed, n0, e0, k, n).to_f64().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// Multiplicative degree-Kirchhoff index
// ---------------------------------------------------------------------------

/// Closed form for the Kirchhoff index after `n` hexagonal steps (k = 1);
/// identically `2 E_n K_n`.
pub fn kirchhoff_closed_k1_exact(kf0: &Rat, n0: u64, e0: u64, n: u64) -> Rat {
    if n == 0 {
        return kf0.clone();
    }
    let p5 = Rat::from_integer(int_pow(5, n));
    let p6 = Rat::from_integer(int_pow(6, n));
    let p6m1 = Rat::from_integer(int_pow(6, n - 1));
    let p30 = Rat::from_integer(int_pow(30, n));
    let g5 = &p5 - Rat::one();
    let e = rat_u(e0);
    kf0 * p30 - rat_u(4) * &p6m1 * &g5 * &e * rat_u(n0)
        + frac(16, 5) * &p6m1 * &g5 * &e * &e
        + frac(416, 5) * &p6m1 * (&p6 - &p5) * &e * &e
        - &p6 * &g5 * &e
}

/// One step of the k = 1 Kirchhoff recursion.
pub fn kirchhoff_step_k1_exact(prev: &Rat, n0: u64, e0: u64, n: u64) -> Rat {
    debug_assert!(n >= 1);
    let p6m1 = Rat::from_integer(int_pow(6, n - 1));
    let p6sq = Rat::from_integer(int_pow(6, 2 * n - 2));
    let e = rat_u(e0);
    rat_u(30) * prev - rat_u(16) * &p6m1 * &e * rat_u(n0)
        + (frac(416, 5) * &p6sq + frac(64, 5) * &p6m1) * &e * &e
        - rat_u(24) * &p6m1 * &e
}

fn kirchhoff_closed_k_generic(kf0: &Rat, n0: u64, e0: u64, k: u64, n: u64) -> Rat {
    if n == 0 {
        return kf0.clone();
    }
    let ki = k as i128;
    let (mu, eta) = mu_eta(k, n);
    let a = frac(5 * (5 * ki + 1) * (5 * ki + 1), ki + 5);
    let g1 = Rat::from_integer(int_pow(5 * k + 1, n));
    let gm1 = Rat::from_integer(int_pow(5 * k + 1, n - 1));
    let g2 = Rat::from_integer(int_pow(5 * k + 1, 2 * n - 1));
    let e = rat_u(e0);
    rat_pow(&a, n) * kf0 - frac(16 * ki, ki + 5) * &g1 * &mu * &e * rat_u(n0)
        + (frac(64 * ki, 5 * (ki + 5)) * &mu * &g1 + frac(16 * ki * (5 * ki + 21), 5 * (ki + 5)) * &eta * &g2)
            * &e
            * &e
        + frac(8 * (5 * ki * ki - 23 * ki), ki + 5) * &mu * &gm1 * &e
}

/// Closed form for the Kirchhoff index of the n-fold k-hexagonal transform;
/// dispatches to the k = 1 form when `k == 1`.
pub fn kirchhoff_closed_k_exact(kf0: &Rat, n0: u64, e0: u64, k: u64, n: u64) -> Rat {
    if k == 1 {
        kirchhoff_closed_k1_exact(kf0, n0, e0, n)
    } else {
        kirchhoff_closed_k_generic(kf0, n0, e0, k, n)
    }
}

/// One step of the general-k Kirchhoff recursion.
pub fn kirchhoff_step_k_exact(prev: &Rat, n0: u64, e0: u64, k: u64, n: u64) -> Rat {
    debug_assert!(n >= 1);
    let ki = k as i128;
    let g1 = Rat::from_integer(int_pow(5 * k + 1, n));
    let gm1 = Rat::from_integer(int_pow(5 * k + 1, n - 1));
    let g2 = Rat::from_integer(int_pow(5 * k + 1, 2 * n - 1));
    let e = rat_u(e0);
    frac(5 * (5 * ki + 1) * (5 * ki + 1), ki + 5) * prev
        - frac(16 * ki, ki + 5) * &g1 * &e * rat_u(n0)
        + (frac(64 * ki, 5 * (ki + 5)) * &g1 + frac(16 * ki * (5 * ki + 21), 5 * (ki + 5)) * &g2) * &e * &e
        + frac(8 * (5 * ki * ki - 23 * ki), ki + 5) * &gm1 * &e
}

/// f64 convenience wrapper over [`kirchhoff_closed_k1_exact`].
pub fn kirchhoff_closed_k1(kf0: f64, n0: u64, e0: u64, n: u64) -> f64 {
    let seed = Rat::from_float(kf0).expect("finite seed");
    kirchhoff_closed_k1_exact(&seed, n0, e0, n).to_f64().unwrap_or(f64::NAN)
}

/// f64 convenience wrapper over [`kirchhoff_closed_k_exact`].
pub fn kirchhoff_closed_k(kf0: f64, n0: u64, e0: u64, k: u64, n: u64) -> f64 {
    let seed = Rat::from_float(kf0).expect("finite seed");
    kirchhoff_closed_k_exact(&seed, n0, e0, k, n).to_f64().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// Spanning trees
// ---------------------------------------------------------------------------

/// `mu` and `eta`, the geometric accumulation factors of the general-k
/// closed forms:
///
/// ```text
/// mu  = (k+5)/(24k) ([5(5k+1)/(k+5)]^n - 1)
/// eta = -(k+5)/k    ([5/(k+5)]^n - 1)
/// ```
///
/// Both are 0 at n = 0 and 1 at n = 1.
pub fn mu_eta(k: u64, n: u64) -> (Rat, Rat) {
    let ki = k as i128;
    let a = frac(5 * (5 * ki + 1), ki + 5);
    let b = frac(5, ki + 5);
    let mu = frac(ki + 5, 24 * ki) * (rat_pow(&a, n) - Rat::one());
    let eta = -frac(ki + 5, ki) * (rat_pow(&b, n) - Rat::one());
    (mu, eta)
}

/// `xi = ((5k+1)^n - 1) / (5k)`, the geometric series
/// `1 + (5k+1) + ... + (5k+1)^(n-1)`. Always an exact integer.
pub fn xi(k: u64, n: u64) -> BigUint {
    let pow = num_traits::pow::pow(BigUint::from(5 * k + 1), n as usize);
    (pow - 1u32) / (5 * k)
}

/// An exact spanning-tree count in the shape `prod base_i^exp_i * cofactor`,
/// for overflow-free arithmetic when the count has hundreds of digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigExponentProduct {
    factors: Vec<(u64, BigUint)>,
    cofactor: BigUint,
}

impl BigExponentProduct {
    pub fn new(factors: Vec<(u64, BigUint)>, cofactor: BigUint) -> Self {
        BigExponentProduct { factors, cofactor }
    }

    pub fn factors(&self) -> &[(u64, BigUint)] {
        &self.factors
    }

    pub fn cofactor(&self) -> &BigUint {
        &self.cofactor
    }

    /// Expands to a single big integer. `None` if an exponent does not even
    /// fit in `usize` (at which point the value has no business being
    /// materialized).
    pub fn value(&self) -> Option<BigUint> {
        let mut out = self.cofactor.clone();
        for (base, exp) in &self.factors {
            let e = exp.to_usize()?;
            out *= num_traits::pow::pow(BigUint::from(*base), e);
        }
        Some(out)
    }

    pub fn log10(&self) -> f64 {
        let mut sum = log10_biguint(&self.cofactor);
        for (base, exp) in &self.factors {
            sum += exp.to_f64().unwrap_or(f64::INFINITY) * Float::log10(*base as f64);
        }
        sum
    }

    /// Approximate number of decimal digits of the expanded value.
    pub fn digits10(&self) -> f64 {
        self.log10() + 1.0
    }
}

impl fmt::Display for BigExponentProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (base, exp) in &self.factors {
            write!(f, "{base}^{exp} * ")?;
        }
        write!(f, "{}", self.cofactor)
    }
}

fn log10_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    if bits <= 53 {
        Float::log10(x.to_f64().unwrap())
    } else {
        let shift = bits - 53;
        let top = (x >> shift).to_f64().unwrap();
        Float::log10(top) + shift as f64 * Float::log10(2.0)
    }
}

fn exponent_to_biguint(r: &Rat, what: &str) -> Result<BigUint, Error> {
    if !r.is_integer() {
        return Err(Error::NonIntegerExponent { detail: format!("{what} = {r}") });
    }
    let int = r.to_integer();
    if int.is_negative() {
        return Err(Error::NegativeExponent { detail: format!("{what} = {int}") });
    }
    Ok(int.to_biguint().expect("non-negative"))
}

/// Exact spanning-tree count of the n-fold hexagonal transform (k = 1):
/// `5^a 6^b tau0` with
///
/// ```text
/// a = n((4/5) E0 - N0 + 1) + (1/25)(6^n - 1) E0
/// b = n(N0 - (4/5) E0 - 1) + (4/25)(6^n - 1) E0
/// ```
pub fn tau_closed_k1(tau0: &BigUint, n0: u64, e0: u64, n: u64) -> Result<BigExponentProduct, Error> {
    let nr = rat_u(n);
    let e = rat_u(e0);
    let geo = Rat::from_integer(int_pow(6, n) - BigInt::one());
    let a = &nr * (frac(4, 5) * &e - rat_u(n0) + Rat::one()) + frac(1, 25) * &geo * &e;
    let b = &nr * (rat_u(n0) - frac(4, 5) * &e - Rat::one()) + frac(4, 25) * &geo * &e;
    let a = exponent_to_biguint(&a, "exponent of 5")?;
    let b = exponent_to_biguint(&b, "exponent of 6")?;
    Ok(BigExponentProduct::new(vec![(5, a), (6, b)], tau0.clone()))
}

fn tau_closed_k_generic(
    tau0: &BigUint,
    n0: u64,
    e0: u64,
    k: u64,
    n: u64,
) -> Result<BigExponentProduct, Error> {
    let nr = rat_u(n);
    let e = rat_u(e0);
    let xi = Rat::from_integer(BigInt::from(xi(k, n)));
    let ki = k as i128;
    let a5 = &nr * (frac(4, 5) * &e - rat_u(n0) + Rat::one()) + frac(5 * ki - 4, 5) * &xi * &e;
    let ak5 = &nr * (rat_u(n0) - frac(4, 5) * &e - Rat::one()) + frac(4, 5) * &xi * &e;
    let a5 = exponent_to_biguint(&a5, "exponent of 5")?;
    let ak5 = exponent_to_biguint(&ak5, "exponent of k+5")?;
    Ok(BigExponentProduct::new(vec![(5, a5), (k + 5, ak5)], tau0.clone()))
}

/// Exact spanning-tree count of the n-fold k-hexagonal transform:
/// `5^a (k+5)^b tau0`. Dispatches to [`tau_closed_k1`] when `k == 1` (the
/// generic exponents coincide there).
pub fn tau_closed_k(
    tau0: &BigUint,
    n0: u64,
    e0: u64,
    k: u64,
    n: u64,
) -> Result<BigExponentProduct, Error> {
    if k == 0 {
        return Err(Error::InvalidPathCount { k });
    }
    if k == 1 {
        tau_closed_k1(tau0, n0, e0, n)
    } else {
        tau_closed_k_generic(tau0, n0, e0, k, n)
    }
}

/// Exponent increments `(on 5, on 6)` of the single k = 1 step producing
/// level `n` from level `n - 1`.
pub fn tau_step_exponents_k1(n0: u64, e0: u64, n: u64) -> Result<(BigUint, BigUint), Error> {
    debug_assert!(n >= 1);
    let p = Rat::from_integer(int_pow(6, n - 1));
    let e = rat_u(e0);
    let a = (frac(1, 5) * &p + frac(4, 5)) * &e - rat_u(n0) + Rat::one();
    let b = rat_u(n0) + frac(4, 5) * (&p - Rat::one()) * &e - Rat::one();
    Ok((
        exponent_to_biguint(&a, "step exponent of 5")?,
        exponent_to_biguint(&b, "step exponent of 6")?,
    ))
}

/// Exponent increments `(on 5, on k+5)` of the single general-k step
/// producing level `n` from level `n - 1`.
pub fn tau_step_exponents_k(
    n0: u64,
    e0: u64,
    k: u64,
    n: u64,
) -> Result<(BigUint, BigUint), Error> {
    debug_assert!(n >= 1);
    let ki = k as i128;
    let p = Rat::from_integer(int_pow(5 * k + 1, n - 1));
    let e = rat_u(e0);
    let a5 = (frac(5 * ki - 4, 5) * &p + frac(4, 5)) * &e - rat_u(n0) + Rat::one();
    let ak5 = rat_u(n0) + frac(4, 5) * (&p - Rat::one()) * &e - Rat::one();
    Ok((
        exponent_to_biguint(&a5, "step exponent of 5")?,
        exponent_to_biguint(&ak5, "step exponent of k+5")?,
    ))
}

/// `log10` of the spectral spanning-tree product
/// `(1/2E) prod d_i prod_{i>=2} lambda_i`, with the degree product supplied
/// by the caller in log10 form.
pub fn tau_log10_from_spectrum(s: &Spectrum, degrees_product_log10: f64) -> Result<f64, Error> {
    let mut zero_mult = 0u64;
    let mut sum = 0.0f64;
    for e in s.entries() {
        if e.value.abs() <= MERGE_TOL || e.family == Some(Family::Zero) {
            zero_mult += e.multiplicity;
        } else if e.value <= 0.0 {
            return Err(Error::NonPositiveEigenvalue { value: e.value });
        } else {
            sum += e.multiplicity as f64 * Float::log10(e.value);
        }
    }
    if zero_mult != 1 {
        return Err(Error::BadZeroMultiplicity { multiplicity: zero_mult });
    }
    Ok(degrees_product_log10 + sum - Float::log10(2.0 * s.meta().num_edges as f64))
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

/// How an [`InvariantReport`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Accumulated from an iteratively derived spectrum.
    Spectrum,
    /// Closed-form recursions seeded with oracle values of the base graph.
    ClosedForm,
    /// Direct computation on an explicitly constructed graph.
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Spectrum => "spectrum",
            Method::ClosedForm => "closed-form",
            Method::Oracle => "oracle",
        }
    }
}

/// A spanning-tree count: exact when a closed form or determinant produced
/// it, otherwise a log10 magnitude from a floating spectrum.
#[derive(Debug, Clone, PartialEq)]
pub enum TauValue {
    Exact(BigExponentProduct),
    Log10(f64),
}

impl TauValue {
    pub fn log10(&self) -> f64 {
        match self {
            TauValue::Exact(p) => p.log10(),
            TauValue::Log10(x) => *x,
        }
    }
}

/// Kemeny's constant, Kirchhoff index and spanning-tree count of one
/// transform level, with the sizes they refer to.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub kemeny: f64,
    pub kirchhoff: f64,
    pub tau: TauValue,
    pub num_vertices: BigUint,
    pub num_edges: BigUint,
    pub method: Method,
}

/// Invariants of the n-fold k-hexagonal transform of `g` via the closed
/// forms, seeded with the dense-oracle Kemeny constant and the exact
/// matrix-tree count of `g` itself.
pub fn invariants_closed(g: &Graph, k: u64, n: u64) -> Result<InvariantReport, Error> {
    if k == 0 {
        return Err(Error::InvalidPathCount { k });
    }
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let s0 = spectrum_oracle(g)?;
    let k0 = kemeny_from_spectrum(&s0)?;
    let tau0 = spanning_trees_matrix_tree(g)?;
    let n0 = g.num_vertices() as u64;
    let e0 = g.num_edges() as u64;

    let seed = Rat::from_float(k0).expect("finite Kemeny seed");
    let kemeny = kemeny_closed_k_exact(&seed, n0, e0, k, n);
    let (nn, en) = size_after(n0, e0, k, n);
    let kirchhoff = rat_u(2) * Rat::from_integer(BigInt::from(en.clone())) * &kemeny;
    let tau = tau_closed_k(&tau0, n0, e0, k, n)?;

    Ok(InvariantReport {
        kemeny: kemeny.to_f64().unwrap_or(f64::NAN),
        kirchhoff: kirchhoff.to_f64().unwrap_or(f64::NAN),
        tau: TauValue::Exact(tau),
        num_vertices: nn,
        num_edges: en,
        method: Method::ClosedForm,
    })
}

/// Invariants of the n-fold k-hexagonal transform of `g` accumulated from
/// the iteratively derived spectrum (the transform is never built; tau is
/// reported as a log10 magnitude).
pub fn invariants_spectral(g: &Graph, params: TransformParams) -> Result<InvariantReport, Error> {
    let s = spectrum_n(g, params)?;
    let kemeny = kemeny_from_spectrum(&s)?;
    let meta = s.meta();
    let kirchhoff = kirchhoff_from_kemeny(meta.num_edges, kemeny);
    let deg_log10 = transformed_degrees_product_log10(g, params.k, params.n);
    let tau = tau_log10_from_spectrum(&s, deg_log10)?;
    Ok(InvariantReport {
        kemeny,
        kirchhoff,
        tau: TauValue::Log10(tau),
        num_vertices: BigUint::from(meta.num_vertices),
        num_edges: BigUint::from(meta.num_edges),
        method: Method::Spectrum,
    })
}

/// Formats a rational as a decimal string with the given number of fraction
/// digits (round half away from zero). Used for fixed-precision comparisons
/// against published tables.
pub fn rational_to_decimal(x: &Rat, fraction_digits: u32) -> String {
    let scale = num_traits::pow::pow(BigInt::from(10), fraction_digits as usize);
    let scaled = x * Rat::from_integer(scale.clone());
    // round half away from zero
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let abs = rounded.abs();
    let (int_part, frac_part) = (abs.clone() / &scale, abs % &scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if fraction_digits == 0 {
        out.push_str(&format!("{int_part}"));
    } else {
        out.push_str(&format!(
            "{int_part}.{frac_part:0width$}",
            width = fraction_digits as usize
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::hex::hexagonal;

    fn k2() -> Graph {
        Graph::new(2, [(0, 1)]).unwrap()
    }

    fn c6() -> Graph {
        generate(GraphKind::Cycle, 6).unwrap()
    }

    fn rat(n: i128, d: i128) -> Rat {
        frac(n, d)
    }

    #[test]
    fn kemeny_of_small_graphs() {
        let s = spectrum_oracle(&k2()).unwrap();
        assert!((kemeny_from_spectrum(&s).unwrap() - 0.5).abs() < 1e-12);

        let s = spectrum_oracle(&c6()).unwrap();
        // 2 + 2 + 2/3 + 2/3 + 1/2
        assert!((kemeny_from_spectrum(&s).unwrap() - 35.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn kemeny_closed_matches_oracle_spectrum_of_transform() {
        let want = kemeny_closed_k1_exact(&rat(35, 6), 6, 6, 1);
        assert_eq!(want, rat(403, 6)); // 5*(35/6) - 8 + 48 - 2
        let s = spectrum_oracle(&hexagonal(&c6(), 1).unwrap()).unwrap();
        let got = kemeny_from_spectrum(&s).unwrap();
        assert!((got - want.to_f64().unwrap()).abs() < 1e-9, "{got}");
    }

    #[test]
    fn kirchhoff_examples() {
        assert_eq!(kirchhoff_from_kemeny(1, 0.5), 1.0);
        assert!((kirchhoff_from_kemeny(6, 35.0 / 6.0) - 70.0).abs() < 1e-12);
        // published reference: Kf' of the first level is 3056 with seed 32/3
        assert_eq!(kirchhoff_closed_k1_exact(&rat(32, 3), 6, 6, 1), rat(3056, 1));
        // and 2 E_1 K_1 with the derived seed
        assert_eq!(kirchhoff_closed_k1_exact(&rat(70, 1), 6, 6, 1), rat(4836, 1));
    }

    #[test]
    fn closed_forms_reproduce_published_rows() {
        // seeds whose two-decimal renderings are the published base values
        let k0 = rat(8, 9);
        let kf0 = rat(32, 3);
        assert_eq!(rational_to_decimal(&kemeny_closed_k1_exact(&k0, 6, 6, 1), 2), "42.44");
        assert_eq!(rational_to_decimal(&kemeny_closed_k_exact(&k0, 6, 6, 2, 1), 2), "87.92");
        assert_eq!(rational_to_decimal(&kirchhoff_closed_k_exact(&kf0, 6, 6, 2, 1), 2), "11605.33");
        assert_eq!(kirchhoff_closed_k1_exact(&kf0, 6, 6, 1), rat(3056, 1));
    }

    #[test]
    fn seeds_are_returned_at_n_zero() {
        let k0 = rat(8, 9);
        assert_eq!(kemeny_closed_k1_exact(&k0, 6, 6, 0), k0);
        assert_eq!(kemeny_closed_k_exact(&k0, 6, 6, 3, 0), k0);
        assert_eq!(kirchhoff_closed_k_exact(&k0, 6, 6, 3, 0), k0);
        let tau0 = BigUint::from(7u32);
        let p = tau_closed_k(&tau0, 6, 6, 2, 0).unwrap();
        assert_eq!(p.value().unwrap(), tau0);
    }

    #[test]
    fn recursion_equals_closed_form_exactly() {
        for (n0, e0) in [(6u64, 6u64), (4, 6), (2, 1), (5, 5), (3, 2)] {
            for k in 1..=5u64 {
                let mut kstep = rat(8, 9);
                let mut kfstep = rat(32, 3);
                for n in 1..=6u64 {
                    kstep = kemeny_step_k_exact(&kstep, n0, e0, k, n);
                    kfstep = kirchhoff_step_k_exact(&kfstep, n0, e0, k, n);
                    assert_eq!(kstep, kemeny_closed_k_exact(&rat(8, 9), n0, e0, k, n), "K k={k} n={n}");
                    assert_eq!(
                        kfstep,
                        kirchhoff_closed_k_exact(&rat(32, 3), n0, e0, k, n),
                        "Kf k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn k1_step_is_the_generic_step_at_k_equal_one() {
        let prev = rat(35, 6);
        for n in 1..=5u64 {
            assert_eq!(
                kemeny_step_k1_exact(&prev, 6, 6, n),
                kemeny_step_k_exact(&prev, 6, 6, 1, n)
            );
        }
    }

    #[test]
    fn generic_forms_at_k1_match_k1_forms() {
        let k0 = rat(35, 6);
        let kf0 = rat(70, 1);
        let tau0 = BigUint::from(6u32);
        for n in 0..=6u64 {
            assert_eq!(
                kemeny_closed_k_generic(&k0, 6, 6, 1, n),
                kemeny_closed_k1_exact(&k0, 6, 6, n)
            );
            assert_eq!(
                kirchhoff_closed_k_generic(&kf0, 6, 6, 1, n),
                kirchhoff_closed_k1_exact(&kf0, 6, 6, n)
            );
            assert_eq!(
                tau_closed_k_generic(&tau0, 6, 6, 1, n).unwrap().value(),
                tau_closed_k1(&tau0, 6, 6, n).unwrap().value()
            );
        }
    }

    #[test]
    fn kirchhoff_is_twice_edges_times_kemeny() {
        for (n0, e0) in [(6u64, 6u64), (4, 6), (2, 1)] {
            for k in 1..=4u64 {
                for n in 0..=5u64 {
                    let kem = kemeny_closed_k_exact(&rat(8, 9), n0, e0, k, n);
                    let kf = kirchhoff_closed_k_exact(&(rat(8, 9) * rat(2 * e0 as i128, 1)), n0, e0, k, n);
                    let (_, en) = size_after(n0, e0, k, n);
                    let expect = rat(2, 1) * Rat::from_integer(BigInt::from(en)) * kem;
                    assert_eq!(kf, expect, "k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn mu_eta_values() {
        for k in 1..=6u64 {
            assert_eq!(mu_eta(k, 0), (Rat::zero(), Rat::zero()));
            assert_eq!(mu_eta(k, 1), (Rat::one(), Rat::one()));
        }
        assert_eq!(mu_eta(2, 2).0, rat(62, 7));
        assert!((mu_eta(2, 2).0.to_f64().unwrap() - 8.857142857).abs() < 1e-8);
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi(4, 0), BigUint::zero());
        assert_eq!(xi(4, 1), BigUint::one());
        assert_eq!(xi(2, 3), BigUint::from(133u32)); // 1 + 11 + 121
        for k in 1..=6u64 {
            assert_eq!(xi(k, 1), BigUint::one());
        }
    }

    #[test]
    fn tau_closed_values() {
        let six = BigUint::from(6u32);
        let p = tau_closed_k1(&six, 6, 6, 1).unwrap();
        assert_eq!(p.value().unwrap(), BigUint::from(233280u64));
        assert_eq!(p.factors(), &[(5, BigUint::one()), (6, BigUint::from(5u32))]);

        let p = tau_closed_k1(&six, 6, 6, 2).unwrap();
        let want = num_traits::pow::pow(BigUint::from(5u32), 8)
            * num_traits::pow::pow(BigUint::from(6u32), 35);
        assert_eq!(p.value().unwrap(), want);

        let p = tau_closed_k(&six, 6, 6, 2, 1).unwrap();
        assert_eq!(p.value().unwrap(), BigUint::from(7_878_281_250u64));

        let p = tau_closed_k(&six, 6, 6, 2, 2).unwrap();
        let want = num_traits::pow::pow(BigUint::from(7u32), 58)
            * num_traits::pow::pow(BigUint::from(5u32), 86)
            * 6u32;
        assert_eq!(p.value().unwrap(), want);
        assert!((p.log10() - 109.905256).abs() < 1e-4);
    }

    #[test]
    fn tau_matches_matrix_tree_on_built_transforms() {
        let g = c6();
        let tau0 = spanning_trees_matrix_tree(&g).unwrap();
        let closed = tau_closed_k(&tau0, 6, 6, 2, 1).unwrap().value().unwrap();
        let built = hexagonal(&g, 2).unwrap();
        assert_eq!(closed, spanning_trees_matrix_tree(&built).unwrap());
    }

    #[test]
    fn tau_step_exponents_accumulate_to_closed_form() {
        for (n0, e0) in [(6u64, 6u64), (4, 6), (2, 1), (3, 2)] {
            for k in 1..=5u64 {
                let mut acc5 = BigUint::zero();
                let mut acck5 = BigUint::zero();
                for n in 1..=6u64 {
                    let (a5, ak5) = if k == 1 {
                        tau_step_exponents_k1(n0, e0, n).unwrap()
                    } else {
                        tau_step_exponents_k(n0, e0, k, n).unwrap()
                    };
                    acc5 += a5;
                    acck5 += ak5;
                    let closed = tau_closed_k(&BigUint::one(), n0, e0, k, n).unwrap();
                    assert_eq!(closed.factors()[0].1, acc5, "5-exponent k={k} n={n}");
                    assert_eq!(closed.factors()[1].1, acck5, "k+5-exponent k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn tau_exponents_are_integral_for_graph_sizes() {
        // exponent integrality holds for any connected graph's (N0, E0)
        for (kind, m) in [
            (GraphKind::Cycle, 5),
            (GraphKind::Cycle, 6),
            (GraphKind::Path, 7),
            (GraphKind::Complete, 5),
        ] {
            let g = generate(kind, m).unwrap();
            let n0 = g.num_vertices() as u64;
            let e0 = g.num_edges() as u64;
            for k in 1..=5u64 {
                for n in 0..=6u64 {
                    assert!(tau_closed_k(&BigUint::one(), n0, e0, k, n).is_ok());
                }
            }
        }
    }

    #[test]
    fn tau_log10_examples() {
        let s = spectrum_oracle(&k2()).unwrap();
        let deg = 0.0; // both degrees are 1
        assert!(tau_log10_from_spectrum(&s, deg).unwrap().abs() < 1e-10);

        let g = c6();
        let s = spectrum_oracle(&g).unwrap();
        let deg = 6.0 * Float::log10(2.0);
        let got = tau_log10_from_spectrum(&s, deg).unwrap();
        assert!((got - Float::log10(6.0)).abs() < 1e-9);

        let h = hexagonal(&g, 1).unwrap();
        let s = spectrum_oracle(&h).unwrap();
        let deg: f64 = h.degrees().iter().map(|&d| Float::log10(d as f64)).sum();
        let got = tau_log10_from_spectrum(&s, deg).unwrap();
        assert!((got - Float::log10(233280.0)).abs() < 1e-6);
    }

    #[test]
    fn report_constructors() {
        let g = c6();
        let closed = invariants_closed(&g, 1, 2).unwrap();
        assert_eq!(closed.method, Method::ClosedForm);
        assert_eq!(closed.num_vertices, BigUint::from(174u32));
        match &closed.tau {
            TauValue::Exact(p) => {
                let want = num_traits::pow::pow(BigUint::from(5u32), 8)
                    * num_traits::pow::pow(BigUint::from(6u32), 35);
                assert_eq!(p.value().unwrap(), want);
            }
            other => panic!("expected exact tau, got {other:?}"),
        }

        let spectral = invariants_spectral(&g, TransformParams::new(1, 2).unwrap()).unwrap();
        assert_eq!(spectral.method, Method::Spectrum);
        let rel = (spectral.kemeny - closed.kemeny).abs() / closed.kemeny;
        assert!(rel < 1e-6, "Kemeny spectral {} vs closed {}", spectral.kemeny, closed.kemeny);
        assert!((spectral.tau.log10() - closed.tau.log10()).abs() < 1e-6);
        // Kf' = 2 E K holds in both reports
        let e = spectral.num_edges.to_f64().unwrap();
        assert!((spectral.kirchhoff - 2.0 * e * spectral.kemeny).abs() < 1e-9 * spectral.kirchhoff);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&rat(8, 9), 2), "0.89");
        assert_eq!(rational_to_decimal(&rat(32, 3), 2), "10.67");
        assert_eq!(rational_to_decimal(&rat(3056, 1), 0), "3056");
        assert_eq!(rational_to_decimal(&rat(-1, 8), 2), "-0.13");
    }
}
