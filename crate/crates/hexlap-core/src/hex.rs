//! The k-hexagonal transform and its iteration.
//!
//! `H^k(G)` keeps every edge of `G` and adds, for each edge `{u, v}`, `k`
//! internally disjoint paths `u - j1 - j2 - j3 - j4 - v` of length 5, so each
//! edge becomes `k` hexagons. Order and size evolve as
//!
//! ```text
//! N' = N + 4kE,    E' = (5k + 1) E
//! ```
//!
//! and after `n` iterations
//!
//! ```text
//! N_n = N_0 + (4/5) ((5k+1)^n - 1) E_0,    E_n = (5k+1)^n E_0.
//! ```

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{Float, ToPrimitive};

use crate::error::Error;
use crate::graph::Graph;

/// Default cap on the vertex count of constructed transforms.
pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;

/// Parameters of the iterated transform: `k` added length-5 paths per edge,
/// iterated `n` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformParams {
    pub k: u64,
    pub n: u64,
}

impl TransformParams {
    pub fn new(k: u64, n: u64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidPathCount { k });
        }
        Ok(TransformParams { k, n })
    }
}

fn check_transform_input(g: &Graph, k: u64) -> Result<(), Error> {
    if k == 0 {
        return Err(Error::InvalidPathCount { k });
    }
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Applies the k-hexagonal transform once.
///
/// Original vertices keep their indices; the four interior vertices of each
/// added path are appended in order of (canonical edge rank, path index,
/// position along the path), so repeated runs are bit-identical.
pub fn hexagonal(g: &Graph, k: u64) -> Result<Graph, Error> {
    check_transform_input(g, k)?;
    let n0 = g.num_vertices();
    let e0 = g.num_edges();
    let k = usize::try_from(k).map_err(|_| Error::SizeOverflow)?;
    let added = 4usize
        .checked_mul(k)
        .and_then(|x| x.checked_mul(e0))
        .ok_or(Error::SizeOverflow)?;
    let n1 = n0.checked_add(added).ok_or(Error::SizeOverflow)?;
    let e1 = (5 * k + 1).checked_mul(e0).ok_or(Error::SizeOverflow)?;

    let mut edges = Vec::with_capacity(e1);
    edges.extend_from_slice(g.edges());
    let mut next = n0;
    for &(u, v) in g.edges() {
        for _ in 0..k {
            let j = [next, next + 1, next + 2, next + 3];
            next += 4;
            edges.push((u, j[0]));
            edges.push((j[0], j[1]));
            edges.push((j[1], j[2]));
            edges.push((j[2], j[3]));
            edges.push((j[3], v));
        }
    }
    debug_assert_eq!(next, n1);
    Graph::new(n1, edges)
}

/// Applies the transform `n` times, with a pre-flight size check against
/// `vertex_budget`. `n = 0` returns the input unchanged.
pub fn hexagonal_iter(g: &Graph, params: TransformParams, vertex_budget: u64) -> Result<Graph, Error> {
    check_transform_input(g, params.k)?;
    let (predicted, _) = size_after(
        g.num_vertices() as u64,
        g.num_edges() as u64,
        params.k,
        params.n,
    );
    if predicted > BigUint::from(vertex_budget) {
        return Err(Error::BudgetExceeded { predicted, budget: vertex_budget });
    }
    let mut out = g.clone();
    for _ in 0..params.n {
        out = hexagonal(&out, params.k)?;
    }
    Ok(out)
}

/// Exact order and size of the n-fold transform of a graph with `n0`
/// vertices and `e0` edges, without building anything.
///
/// `(5k+1)^n = 1 (mod 5)`, so the division by 5 below is exact.
pub fn size_after(n0: u64, e0: u64, k: u64, n: u64) -> (BigUint, BigUint) {
    let base = BigUint::from(5 * k + 1);
    let pow = num_traits::pow::pow(base, usize::try_from(n).expect("iteration depth fits usize"));
    let e_n = &pow * e0;
    let n_n = BigUint::from(n0) + (&pow - 1u32) / 5u32 * 4u32 * e0;
    (n_n, e_n)
}

/// `log10` of the product of vertex degrees of the n-fold transform,
/// computed from the transform structure alone: every existing degree is
/// multiplied by `k + 1` per step, and vertices created at step `j` start
/// with degree 2, so they carry `2 (k+1)^(n-j)` at level `n`.
pub fn transformed_degrees_product_log10(g: &Graph, k: u64, n: u64) -> f64 {
    let n0 = g.num_vertices() as u64;
    let e0 = g.num_edges() as u64;
    let log_kp1 = Float::log10((k + 1) as f64);
    let log_2 = Float::log10(2.0);
    let mut sum: f64 = g
        .degrees()
        .iter()
        .map(|&d| Float::log10(d as f64))
        .sum();
    sum += (n as f64) * (n0 as f64) * log_kp1;
    let mut prev_n = BigUint::from(n0);
    for j in 1..=n {
        let (nj, _) = size_after(n0, e0, k, j);
        let created = (&nj - &prev_n).to_f64().unwrap_or(f64::INFINITY);
        sum += created * (log_2 + (n - j) as f64 * log_kp1);
        prev_n = nj;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    fn k2() -> Graph {
        Graph::new(2, [(0, 1)]).unwrap()
    }

    #[test]
    fn single_step_sizes() {
        let p3 = generate(GraphKind::Path, 3).unwrap();
        let h = hexagonal(&p3, 1).unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (11, 12));

        let c6 = generate(GraphKind::Cycle, 6).unwrap();
        let h1 = hexagonal(&c6, 1).unwrap();
        assert_eq!((h1.num_vertices(), h1.num_edges()), (30, 36));
        let h2 = hexagonal(&c6, 2).unwrap();
        assert_eq!((h2.num_vertices(), h2.num_edges()), (54, 66));
    }

    #[test]
    fn transform_of_k2_is_c6() {
        let h = hexagonal(&k2(), 1).unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (6, 6));
        assert_eq!(h.degrees(), alloc::vec![2; 6]);
        assert!(h.is_connected());
        assert!(h.is_bipartite());
    }

    #[test]
    fn iteration_matches_closed_form_sizes() {
        let c6 = generate(GraphKind::Cycle, 6).unwrap();
        let p = TransformParams::new(1, 2).unwrap();
        let g = hexagonal_iter(&c6, p, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (174, 216));

        let p = TransformParams::new(2, 2).unwrap();
        let g = hexagonal_iter(&c6, p, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (582, 726));
    }

    #[test]
    fn zero_iterations_is_identity() {
        let c6 = generate(GraphKind::Cycle, 6).unwrap();
        let p = TransformParams::new(1, 0).unwrap();
        assert_eq!(hexagonal_iter(&c6, p, DEFAULT_VERTEX_BUDGET).unwrap(), c6);
    }

    #[test]
    fn size_after_examples() {
        let as_u64 = |x: &BigUint| x.to_u64().unwrap();
        let (n, e) = size_after(6, 6, 1, 1);
        assert_eq!((as_u64(&n), as_u64(&e)), (30, 36));
        let (n, e) = size_after(6, 6, 2, 1);
        assert_eq!((as_u64(&n), as_u64(&e)), (54, 66));
        let (n, e) = size_after(17, 40, 3, 0);
        assert_eq!((as_u64(&n), as_u64(&e)), (17, 40));
    }

    #[test]
    fn built_sizes_agree_with_size_after() {
        let graphs = [
            generate(GraphKind::Cycle, 5).unwrap(),
            generate(GraphKind::Path, 4).unwrap(),
            generate(GraphKind::Complete, 4).unwrap(),
            k2(),
        ];
        for g in &graphs {
            for k in 1..=3u64 {
                for n in 0..=2u64 {
                    let p = TransformParams::new(k, n).unwrap();
                    let built = hexagonal_iter(g, p, DEFAULT_VERTEX_BUDGET).unwrap();
                    let (nn, ee) = size_after(g.num_vertices() as u64, g.num_edges() as u64, k, n);
                    assert_eq!(BigUint::from(built.num_vertices() as u64), nn);
                    assert_eq!(BigUint::from(built.num_edges() as u64), ee);
                }
            }
        }
    }

    #[test]
    fn transform_preserves_bipartiteness_and_connectivity() {
        for (kind, m) in [
            (GraphKind::Cycle, 5),
            (GraphKind::Cycle, 6),
            (GraphKind::Path, 4),
            (GraphKind::Complete, 4),
        ] {
            let g = generate(kind, m).unwrap();
            for k in 1..=3u64 {
                let h = hexagonal(&g, k).unwrap();
                assert!(h.is_connected());
                assert_eq!(h.is_bipartite(), g.is_bipartite());
            }
        }
    }

    #[test]
    fn transform_degree_structure() {
        let g = generate(GraphKind::Complete, 4).unwrap();
        for k in 1..=3u64 {
            let h = hexagonal(&g, k).unwrap();
            let old = g.degrees();
            let new = h.degrees();
            for v in 0..g.num_vertices() {
                assert_eq!(new[v], (k as usize + 1) * old[v]);
            }
            for v in g.num_vertices()..h.num_vertices() {
                assert_eq!(new[v], 2);
            }
        }
    }

    #[test]
    fn transform_rejects_bad_inputs() {
        let edgeless = Graph::new(3, []).unwrap();
        assert_eq!(hexagonal(&edgeless, 1).unwrap_err(), Error::NoEdges);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(hexagonal(&split, 1).unwrap_err(), Error::Disconnected);
        assert_eq!(hexagonal(&k2(), 0).unwrap_err(), Error::InvalidPathCount { k: 0 });
    }

    #[test]
    fn budget_is_checked_before_building() {
        let c6 = generate(GraphKind::Cycle, 6).unwrap();
        let p = TransformParams::new(1, 8).unwrap();
        match hexagonal_iter(&c6, p, 1000).unwrap_err() {
            Error::BudgetExceeded { predicted, budget } => {
                let (want, _) = size_after(6, 6, 1, 8);
                assert_eq!(predicted, want);
                assert_eq!(budget, 1000);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn degree_product_log10_matches_built_graph() {
        let c6 = generate(GraphKind::Cycle, 6).unwrap();
        for (k, n) in [(1u64, 1u64), (1, 2), (2, 1)] {
            let p = TransformParams::new(k, n).unwrap();
            let built = hexagonal_iter(&c6, p, DEFAULT_VERTEX_BUDGET).unwrap();
            let direct: f64 = built
                .degrees()
                .iter()
                .map(|&d| Float::log10(d as f64))
                .sum();
            let predicted = transformed_degrees_product_log10(&c6, k, n);
            assert!((direct - predicted).abs() < 1e-9, "k={k} n={n}: {direct} vs {predicted}");
        }
    }
}
