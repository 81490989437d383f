//! Finite directed graphs and path enumeration.
//!
//! Paths are stored as vertex sequences `(i_0, ..., i_m)`, which requires at
//! most one edge per ordered vertex pair. Following the path-algebra
//! convention used throughout, a path's target is its first vertex and its
//! source is its last, so `p` concatenates with `q` when `source(p) =
//! target(q)`.

use serde::{Deserialize, Serialize};

use crate::wba::AlgebraError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DirectedGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, AlgebraError> {
        let mut seen = std::collections::BTreeSet::new();
        for &(s, t) in &edges {
            if s >= vertices || t >= vertices {
                return Err(AlgebraError::BadStructure(format!(
                    "edge ({s}, {t}) out of range for {vertices} vertices"
                )));
            }
            if !seen.insert((s, t)) {
                return Err(AlgebraError::BadStructure(format!(
                    "duplicate edge ({s}, {t}); paths-as-vertex-sequences need a simple graph"
                )));
            }
        }
        Ok(DirectedGraph { vertices, edges })
    }

    /// The level-`r` line graph: vertices `0..r-2` with one edge in each
    /// direction between consecutive vertices.
    pub fn level_graph(r: usize) -> Result<Self, AlgebraError> {
        if r < 3 {
            return Err(AlgebraError::BadStructure(
                "level graphs need r >= 3".to_string(),
            ));
        }
        let vertices = r - 1;
        let mut edges = Vec::new();
        for j in 0..vertices - 1 {
            edges.push((j, j + 1));
            edges.push((j + 1, j));
        }
        DirectedGraph::new(vertices, edges)
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    /// True when `p` is a walk along edges (a single vertex for `m = 0`).
    pub fn is_path(&self, p: &[usize]) -> bool {
        if p.is_empty() || p.iter().any(|&v| v >= self.vertices) {
            return false;
        }
        p.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

/// All paths of length `m` as vertex sequences, in lexicographic order.
pub fn enumerate_paths(graph: &DirectedGraph, m: usize) -> Vec<Vec<usize>> {
    let mut paths: Vec<Vec<usize>> = (0..graph.vertices).map(|v| vec![v]).collect();
    for _ in 0..m {
        let mut next = Vec::new();
        for p in &paths {
            let last = *p.last().unwrap();
            for &(s, t) in &graph.edges {
                if s == last {
                    let mut q = p.clone();
                    q.push(t);
                    next.push(q);
                }
            }
        }
        paths = next;
    }
    paths.sort();
    paths
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_graph_paths() {
        let g3 = DirectedGraph::level_graph(3).unwrap();
        assert_eq!(enumerate_paths(&g3, 0), vec![vec![0], vec![1]]);
        assert_eq!(
            enumerate_paths(&g3, 2),
            vec![vec![0, 1, 0], vec![1, 0, 1]]
        );
        let g4 = DirectedGraph::level_graph(4).unwrap();
        assert_eq!(enumerate_paths(&g4, 2).len(), 6);
    }

    #[test]
    fn brute_force_walk_oracle() {
        // independent oracle: filter all vertex tuples by the edge predicate
        let g = DirectedGraph::level_graph(4).unwrap();
        for m in 0..=3usize {
            let mut expected = Vec::new();
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..=m {
                let mut next = Vec::new();
                for p in &stack {
                    for v in 0..g.vertices {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
                stack = next;
            }
            for p in stack {
                if g.is_path(&p) {
                    expected.push(p);
                }
            }
            expected.sort();
            assert_eq!(enumerate_paths(&g, m), expected, "m = {m}");
        }
    }

    #[test]
    fn rejects_multigraphs_and_bad_edges() {
        assert!(DirectedGraph::new(2, vec![(0, 1), (0, 1)]).is_err());
        assert!(DirectedGraph::new(2, vec![(0, 2)]).is_err());
    }
}
