//! The spectral step: maps the spectrum of one transform level to the next
//! without building the graph.
//!
//! Each eigenvalue `sigma` of the previous level other than 0 and 2 maps to
//! the roots of a fixed cubic (k = 1) or quintic (k >= 2), keeping its
//! multiplicity. The rest of the new spectrum is fixed families whose
//! multiplicities depend only on the previous order `N`, size `E` and
//! bipartiteness:
//!
//! - 0 (multiplicity 1), and 2 (multiplicity 1) iff bipartite;
//! - k = 1: 1/2 and 3/2 with multiplicity N; (5 +- sqrt 5)/4 with
//!   multiplicity E - N + 1; (3 +- sqrt 5)/4 with multiplicity E - N + 1
//!   (bipartite) or E - N (otherwise);
//! - k >= 2: two extra simple eigenvalues absorbed from sigma = 0, two more
//!   from sigma = 2 when bipartite, and the same two radical pairs with
//!   multiplicity kE - N + 1 (resp. kE - N).
//!
//! The root images of sigma = 0 and sigma = 2 are *not* added separately:
//! the fixed-family multiplicities already account for them. This is the
//! only reading under which the output multiplicities sum to exactly
//! `N + 4kE`, which [`Spectrum::from_entries`] enforces.

use alloc::vec::Vec;

use num_traits::Float;

use crate::error::Error;
use crate::graph::{Graph, GraphMeta};
use crate::hex::TransformParams;
use crate::oracle::spectrum_oracle;
use crate::roots::{cubic_roots, quintic_roots};
use crate::spectrum::{Family, Spectrum, SpectrumEntry, MERGE_TOL};

/// 1/2 and 3/2.
pub fn half_pair() -> [f64; 2] {
    [0.5, 1.5]
}

/// (5 - sqrt 5)/4 and (5 + sqrt 5)/4.
pub fn phi_pair() -> [f64; 2] {
    let s5 = Float::sqrt(5.0);
    [(5.0 - s5) / 4.0, (5.0 + s5) / 4.0]
}

/// (3 - sqrt 5)/4 and (3 + sqrt 5)/4.
pub fn psi_pair() -> [f64; 2] {
    let s5 = Float::sqrt(5.0);
    [(3.0 - s5) / 4.0, (3.0 + s5) / 4.0]
}

/// (5k + 3 -+ sqrt(5k^2 + 6k + 5)) / (4(k + 1)): the two nonzero quintic
/// images of sigma = 0.
pub fn sigma0_extra_pair(k: u64) -> [f64; 2] {
    let kf = k as f64;
    let s = Float::sqrt(5.0 * kf * kf + 6.0 * kf + 5.0);
    [(5.0 * kf + 3.0 - s) / (4.0 * (kf + 1.0)), (5.0 * kf + 3.0 + s) / (4.0 * (kf + 1.0))]
}

/// (3k + 5 -+ sqrt(5k^2 + 6k + 5)) / (4(k + 1)): the two quintic images of
/// sigma = 2 other than 2 itself.
pub fn sigma2_extra_pair(k: u64) -> [f64; 2] {
    let kf = k as f64;
    let s = Float::sqrt(5.0 * kf * kf + 6.0 * kf + 5.0);
    [(3.0 * kf + 5.0 - s) / (4.0 * (kf + 1.0)), (3.0 * kf + 5.0 + s) / (4.0 * (kf + 1.0))]
}

/// Maps the spectrum of one level to the spectrum of its k-hexagonal
/// transform. Output order is `N + 4kE`, size `(5k+1)E`, bipartiteness
/// unchanged; every entry carries a family tag.
pub fn step_spectrum(prev: &Spectrum, k: u64) -> Result<Spectrum, Error> {
    if k == 0 {
        return Err(Error::InvalidPathCount { k });
    }
    let meta = prev.meta();
    let total = prev.total_multiplicity();
    if total != meta.num_vertices {
        return Err(Error::MultiplicityMismatch { total, expected: meta.num_vertices });
    }

    let mut zero_mult = 0u64;
    let mut two_mult = 0u64;
    let mut regular: Vec<(f64, u64)> = Vec::new();
    for e in prev.entries() {
        let v = e.value;
        if !(-1e-9..=2.0 + 1e-9).contains(&v) {
            return Err(Error::EntryOutOfRange { value: v });
        }
        if v.abs() <= MERGE_TOL {
            zero_mult += e.multiplicity;
        } else if (v - 2.0).abs() <= MERGE_TOL {
            two_mult += e.multiplicity;
        } else {
            regular.push((v, e.multiplicity));
        }
    }
    if zero_mult != 1 {
        return Err(Error::BadZeroMultiplicity { multiplicity: zero_mult });
    }
    let expected_two = if meta.bipartite { 1 } else { 0 };
    if two_mult != expected_two {
        return Err(Error::BadTwoMultiplicity { multiplicity: two_mult, bipartite: meta.bipartite });
    }

    let n = meta.num_vertices;
    let e = meta.num_edges;
    let ke = k.checked_mul(e).ok_or(Error::SizeOverflow)?;
    let new_n = n.checked_add(ke.checked_mul(4).ok_or(Error::SizeOverflow)?).ok_or(Error::SizeOverflow)?;
    let new_e = e.checked_mul(5 * k + 1).ok_or(Error::SizeOverflow)?;

    let mut entries: Vec<SpectrumEntry> = Vec::new();
    let mut push = |value: f64, multiplicity: u64, family: Family| {
        if multiplicity > 0 {
            entries.push(SpectrumEntry { value, multiplicity, family: Some(family) });
        }
    };

    for &(sigma, m) in &regular {
        if k == 1 {
            for &r in cubic_roots(sigma)?.roots() {
                push(r, m, Family::CubicImage);
            }
        } else {
            for &r in quintic_roots(sigma, k)?.roots() {
                push(r, m, Family::QuinticImage);
            }
        }
    }

    push(0.0, 1, Family::Zero);
    if meta.bipartite {
        push(2.0, 1, Family::Two);
    }

    // kE >= N - 1 for connected graphs, so these never underflow
    let pair_full = (ke + 1).checked_sub(n).ok_or(Error::MultiplicityMismatch {
        total: ke + 1,
        expected: n,
    })?;
    let psi_mult = if meta.bipartite { pair_full } else { pair_full.saturating_sub(1) };
    if k == 1 {
        for v in half_pair() {
            push(v, n, Family::HalfPair);
        }
    } else {
        for v in sigma0_extra_pair(k) {
            push(v, 1, Family::Sigma0Extra { k });
        }
        if meta.bipartite {
            for v in sigma2_extra_pair(k) {
                push(v, 1, Family::Sigma2Extra { k });
            }
        }
    }
    for v in phi_pair() {
        push(v, pair_full, Family::PhiPair);
    }
    for v in psi_pair() {
        push(v, psi_mult, Family::PsiPair);
    }

    let new_meta = GraphMeta {
        num_vertices: new_n,
        num_edges: new_e,
        bipartite: meta.bipartite,
    };
    // from_entries enforces the exact cardinality identity N' = N + 4kE
    Spectrum::from_entries(entries, new_meta)
}

/// Spectrum of the n-fold transform, derived iteratively from the base
/// graph's spectrum; the transformed graph is never constructed.
pub fn spectrum_n(g: &Graph, params: TransformParams) -> Result<Spectrum, Error> {
    if params.k == 0 {
        return Err(Error::InvalidPathCount { k: params.k });
    }
    if params.n > 0 && g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let mut s = spectrum_oracle(g)?;
    for _ in 0..params.n {
        s = step_spectrum(&s, params.k)?;
    }
    Ok(s)
}
