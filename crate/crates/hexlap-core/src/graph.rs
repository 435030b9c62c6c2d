//! Undirected simple graphs with dense 0-based vertex indices.
//!
//! Edge lists are canonicalized (smaller endpoint first, lexicographically
//! sorted) so that structural equality is plain `==` and serialization is
//! deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// An undirected simple graph: a vertex count and a canonical edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// Order, size and bipartiteness, as consumed by the spectral recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphMeta {
    pub num_vertices: u64,
    pub num_edges: u64,
    pub bipartite: bool,
}

/// Built-in generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Cycle,
    Path,
    Complete,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list.
    ///
    /// Edges are normalized to `(min, max)` and sorted. Rejects out-of-range
    /// endpoints, self-loops and duplicate (unordered) edges.
    pub fn new<I>(num_vertices: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canonical: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= num_vertices {
                return Err(Error::VertexOutOfRange { vertex: u, num_vertices });
            }
            if v >= num_vertices {
                return Err(Error::VertexOutOfRange { vertex: v, num_vertices });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            canonical.push(if u < v { (u, v) } else { (v, u) });
        }
        canonical.sort_unstable();
        for w in canonical.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        Ok(Graph { num_vertices, edges: canonical })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: each edge `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree sequence indexed by vertex; sums to twice the edge count.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Adjacency lists (neighbors in ascending order).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// True iff a single component covers all vertices (breadth-first
    /// traversal). Vacuously true for the empty and one-vertex graphs.
    pub fn is_connected(&self) -> bool {
        if self.num_vertices <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.num_vertices];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(x) = queue.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push(y);
                }
            }
        }
        reached == self.num_vertices
    }

    /// True iff the graph admits a proper 2-coloring (breadth-first
    /// 2-coloring, per component).
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.num_vertices];
        for start in 0..self.num_vertices {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(x) = queue.pop() {
                for &y in &adj[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Order, size and bipartiteness in one record.
    pub fn meta(&self) -> GraphMeta {
        GraphMeta {
            num_vertices: self.num_vertices as u64,
            num_edges: self.edges.len() as u64,
            bipartite: self.is_bipartite(),
        }
    }
}

/// Generates a standard graph: cycle `C_m` (m >= 3), path `P_m` (m >= 2) or
/// complete graph `K_m` (m >= 2).
pub fn generate(kind: GraphKind, m: usize) -> Result<Graph, Error> {
    match kind {
        GraphKind::Cycle => {
            if m < 3 {
                return Err(Error::GeneratorTooSmall { min: 3, got: m });
            }
            Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
        }
        GraphKind::Path => {
            if m < 2 {
                return Err(Error::GeneratorTooSmall { min: 2, got: m });
            }
            Graph::new(m, (0..m - 1).map(|i| (i, i + 1)))
        }
        GraphKind::Complete => {
            if m < 2 {
                return Err(Error::GeneratorTooSmall { min: 2, got: m });
            }
            Graph::new(m, (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_is_the_smallest_valid_graph() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn edges_are_canonicalized() {
        let g = Graph::new(4, [(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn validation_errors_are_distinct() {
        assert_eq!(Graph::new(3, [(0, 0)]).unwrap_err(), Error::SelfLoop { vertex: 0 });
        assert_eq!(
            Graph::new(2, [(0, 5)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 5, num_vertices: 2 }
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
    }

    #[test]
    fn generators_match_their_definitions() {
        let c6 = generate(GraphKind::Cycle, 6).unwrap();
        assert_eq!((c6.num_vertices(), c6.num_edges()), (6, 6));
        let p3 = generate(GraphKind::Path, 3).unwrap();
        assert_eq!((p3.num_vertices(), p3.num_edges()), (3, 2));
        let k4 = generate(GraphKind::Complete, 4).unwrap();
        assert_eq!((k4.num_vertices(), k4.num_edges()), (4, 6));
        assert_eq!(
            generate(GraphKind::Cycle, 2).unwrap_err(),
            Error::GeneratorTooSmall { min: 3, got: 2 }
        );
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(generate(GraphKind::Cycle, 6).unwrap().degrees(), vec![2; 6]);
        assert_eq!(generate(GraphKind::Path, 3).unwrap().degrees(), vec![1, 2, 1]);
        assert_eq!(generate(GraphKind::Complete, 4).unwrap().degrees(), vec![3; 4]);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for (kind, m) in [
            (GraphKind::Cycle, 7),
            (GraphKind::Path, 9),
            (GraphKind::Complete, 5),
        ] {
            let g = generate(kind, m).unwrap();
            let total: usize = g.degrees().iter().sum();
            assert_eq!(total, 2 * g.num_edges());
        }
    }

    #[test]
    fn connectivity() {
        assert!(generate(GraphKind::Cycle, 6).unwrap().is_connected());
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let lonely = Graph::new(1, []).unwrap();
        assert!(lonely.is_connected());
    }

    #[test]
    fn bipartiteness() {
        assert!(generate(GraphKind::Cycle, 6).unwrap().is_bipartite());
        assert!(!generate(GraphKind::Cycle, 5).unwrap().is_bipartite());
        assert!(!generate(GraphKind::Complete, 4).unwrap().is_bipartite());
        for m in 3..=10 {
            assert!(generate(GraphKind::Cycle, 2 * m).unwrap().is_bipartite());
            assert!(!generate(GraphKind::Cycle, 2 * m + 1).unwrap().is_bipartite());
        }
    }

    #[test]
    fn meta_reports_order_size_bipartiteness() {
        let meta = generate(GraphKind::Cycle, 6).unwrap().meta();
        assert_eq!(meta, GraphMeta { num_vertices: 6, num_edges: 6, bipartite: true });
    }
}
