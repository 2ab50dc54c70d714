//! Finite simple undirected graphs with indexed adjacency, Cayley and coset
//! graph constructions, s-arc transitivity, normal quotients, and a
//! partition-refinement automorphism backtracker.

mod automorphism;
mod cayley;
mod coset;
mod quotient;
mod sarc;

pub use automorphism::graph_automorphisms;
pub use cayley::{cayley_graph, CayleyGraph};
pub use coset::{coset_graph, CosetGraph};
pub use quotient::{quotient_graph, CoverReport};
pub use sarc::{s_arc_transitivity, SArcReport};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Point;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Point>>,
}

impl Graph {
    /// Builds a simple undirected graph from an edge list; loops are
    /// rejected, duplicate edges collapse.
    pub fn from_edges(vertex_count: usize, edges: &[(Point, Point)]) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::PointOutOfRange {
                    point: u.max(v),
                    degree: vertex_count,
                });
            }
            if u == v {
                return Err(Error::Hypothesis(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    pub fn complete(n: usize) -> Graph {
        let adjacency = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adjacency }
    }

    /// Cycle graph on n >= 3 vertices.
    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<(Point, Point)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Point) -> &[Point] {
        &self.adjacency[v]
    }

    pub fn degree_of(&self, v: Point) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Point, v: Point) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Uniform valency if the graph is regular.
    pub fn regular_valency(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Whether a permutation of the vertices maps edges onto edges.
    pub fn is_automorphism(&self, p: &crate::perm::Permutation) -> bool {
        if p.degree() != self.vertex_count() {
            return false;
        }
        for v in 0..self.vertex_count() {
            for &w in self.neighbors(v) {
                if !self.has_edge(p.apply(v), p.apply(w)) {
                    return false;
                }
            }
        }
        true
    }

    /// Deterministic edge-list export: `p graph <n> <m>` then one `u v` line
    /// per edge with u < v, sorted.
    pub fn export_edge_list(&self) -> String {
        let mut out = format!("p graph {} {}\n", self.vertex_count(), self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }
}

/// A group acting on the vertices of a graph (group degree = vertex count).
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: PermGroup,
}

impl GroupAction {
    pub fn new(group: PermGroup, graph: &Graph) -> Result<GroupAction> {
        if group.degree() != graph.vertex_count() {
            return Err(Error::DegreeMismatch(
                group.degree(),
                graph.vertex_count(),
            ));
        }
        for g in group.gens() {
            if !graph.is_automorphism(g) {
                return Err(Error::Hypothesis(
                    "generator does not preserve the edge set".into(),
                ));
            }
        }
        Ok(GroupAction { group })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_basics() {
        let k8 = Graph::complete(8);
        assert_eq!(k8.vertex_count(), 8);
        assert_eq!(k8.edge_count(), 28);
        assert_eq!(k8.regular_valency(), Some(7));
        assert!(k8.is_connected());
    }

    #[test]
    fn edge_list_export_format() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.export_edge_list(), "p graph 3 2\n0 1\n1 2\n");
    }

    #[test]
    fn loops_rejected_duplicates_collapse() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn undirected_symmetry_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (2, 3)]).unwrap();
        for u in 0..5 {
            for &v in g.neighbors(u) {
                assert!(g.neighbors(v).contains(&u));
            }
        }
    }
}
