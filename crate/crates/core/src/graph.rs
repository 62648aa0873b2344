//! Undirected simple graphs stored as a vertex count plus a positional edge
//! list, the family builders used throughout the crate, and edge subdivision.
//!
//! Edge positions are significant: a labeling is a parallel array over
//! `Graph::edges`, so nothing in this module reorders edges behind the
//! caller's back.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} is a loop at vertex {vertex}")]
    Loop { index: usize, vertex: usize },
    #[error("edge {index} ({u}, {v}) duplicates an earlier edge")]
    DuplicateEdge { index: usize, u: usize, v: usize },
    #[error("edge {index} ({u}, {v}) references a vertex >= {vertex_count}")]
    VertexOutOfRange { index: usize, u: usize, v: usize, vertex_count: usize },
    #[error("edge index {index} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { index: usize, edge_count: usize },
    #[error("{family}: {reason}")]
    Domain { family: &'static str, reason: String },
}

/// An undirected edge between two vertex indices, kept in the orientation it
/// was created with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn touches(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else if self.1 == v {
            self.0
        } else {
            panic!("vertex {v} is not an endpoint of {self:?}")
        }
    }

    fn key(&self) -> (usize, usize) {
        (self.0.min(self.1), self.0.max(self.1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (index, e) in edges.iter().enumerate() {
            if e.0 >= vertex_count || e.1 >= vertex_count {
                return Err(GraphError::VertexOutOfRange { index, u: e.0, v: e.1, vertex_count });
            }
            if e.0 == e.1 {
                return Err(GraphError::Loop { index, vertex: e.0 });
            }
            if !seen.insert(e.key()) {
                return Err(GraphError::DuplicateEdge { index, u: e.0, v: e.1 });
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(vertex_count, pairs.iter().map(|&(u, v)| Edge(u, v)).collect())
    }

    pub fn empty() -> Self {
        Graph { vertex_count: 0, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            deg[e.0] += 1;
            deg[e.1] += 1;
        }
        deg
    }

    /// Edge indices incident to each vertex, in ascending edge order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.0].push(i);
            inc[e.1].push(i);
        }
        inc
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let inc = self.incidence();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &ei in &inc[v] {
                    let w = self.edges[ei].other(v);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Disjoint union: `other`'s vertices are shifted past ours and its edges
    /// are appended after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge(e.0 + shift, e.1 + shift)));
        Graph { vertex_count: shift + other.vertex_count, edges }
    }

    /// Renames vertex `v` to `perm[v]`. Edge positions are unchanged.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(perm.len(), self.vertex_count, "permutation length");
        Graph::new(self.vertex_count, self.edges.iter().map(|e| Edge(perm[e.0], perm[e.1])).collect())
    }

    /// Counts of structural features used by the bounds.
    pub fn summarize_components(&self) -> ComponentSummary {
        let deg = self.degrees();
        let comps = self.components();
        let mut edges_in = vec![0usize; comps.len()];
        let mut comp_of = vec![0usize; self.vertex_count];
        for (ci, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = ci;
            }
        }
        for e in &self.edges {
            edges_in[comp_of[e.0]] += 1;
        }
        let mut summary = ComponentSummary {
            component_count: comps.len(),
            p3_count: 0,
            has_p2: false,
            isolated_vertex_count: 0,
            internal_edge_count: 0,
        };
        for (ci, c) in comps.iter().enumerate() {
            match (c.len(), edges_in[ci]) {
                (1, 0) => summary.isolated_vertex_count += 1,
                (2, 1) => summary.has_p2 = true,
                // a connected 3-vertex graph with 2 edges is always P3
                (3, 2) => summary.p3_count += 1,
                _ => {}
            }
        }
        summary.internal_edge_count =
            self.edges.iter().filter(|e| deg[e.0] >= 2 && deg[e.1] >= 2).count();
        summary
    }

    /// Replaces edge `index` = (u, v) by a path u - w1 - ... - w(p-1) - v.
    ///
    /// The new vertices get the next free indices. The segment touching `v`
    /// keeps position `index`; the remaining segments are appended in path
    /// order starting from `u`. All other edges keep their positions.
    pub fn subdivide(&self, index: usize, p: usize) -> Result<Subdivision, GraphError> {
        if index >= self.edges.len() {
            return Err(GraphError::EdgeOutOfRange { index, edge_count: self.edges.len() });
        }
        if p == 0 {
            return Err(GraphError::Domain { family: "subdivide", reason: "p must be at least 1".into() });
        }
        let Edge(u, v) = self.edges[index];
        let new_vertices: Vec<usize> = (self.vertex_count..self.vertex_count + p - 1).collect();
        let mut chain = Vec::with_capacity(p + 1);
        chain.push(u);
        chain.extend(&new_vertices);
        chain.push(v);

        let mut edges = self.edges.clone();
        let mut segments = Vec::with_capacity(p);
        for w in chain.windows(2).take(p - 1) {
            segments.push(edges.len());
            edges.push(Edge(w[0], w[1]));
        }
        edges[index] = Edge(chain[p - 1], v);
        segments.push(index);

        Ok(Subdivision {
            graph: Graph { vertex_count: self.vertex_count + p - 1, edges },
            new_vertices,
            segments,
            start: u,
            end: v,
        })
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph({} vertices, {} edges)", self.vertex_count, self.edges.len())
    }
}

/// Result of [`Graph::subdivide`].
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    /// Inserted vertices in path order from `start` to `end`.
    pub new_vertices: Vec<usize>,
    /// Edge positions of the path segments, in order from `start` to `end`.
    /// `segments[0]` touches `start`, the last entry touches `end`.
    pub segments: Vec<usize>,
    pub start: usize,
    pub end: usize,
}

impl Subdivision {
    /// Position of the segment incident to endpoint `x` of the original edge.
    pub fn segment_at(&self, x: usize) -> usize {
        if x == self.start {
            self.segments[0]
        } else {
            assert_eq!(x, self.end, "vertex is not an endpoint of the subdivided edge");
            *self.segments.last().unwrap()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub component_count: usize,
    /// Components isomorphic to P3.
    pub p3_count: usize,
    pub has_p2: bool,
    pub isolated_vertex_count: usize,
    /// Edges whose endpoints both have degree at least 2.
    pub internal_edge_count: usize,
}

/// Describes a graph from one of the supported families.
///
/// Canonical orderings:
/// * cycle(n): vertices `0..n`, edges `(i, i+1)` then `(n-1, 0)`.
/// * path(v): edges `(i, i+1)`.
/// * star(n): center 0, edges `(0, i)` for `i in 1..=n`.
/// * double_star(a, b): centers 0 and 1, edge `(0, 1)` first, then the `a`
///   pendants of 0, then the `b` pendants of 1.
/// * jellyfish(k, r): the cycle on `0..k` as above, then pendants grouped by
///   cycle vertex; leaf `k + i*r + j` hangs off cycle vertex `i`.
/// * p3x(t): copy `c` uses vertices `3c, 3c+1, 3c+2` with center `3c+1` and
///   edges `(3c, 3c+1)`, `(3c+1, 3c+2)`.
/// * union: left to right, each operand shifted past the previous ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Star(usize),
    DoubleStar(usize, usize),
    Jellyfish { k: usize, r: usize },
    Paths3(usize),
    Union(Vec<Family>),
    Explicit(Graph),
}

fn domain(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::Domain { family, reason: reason.into() }
}

fn cycle_edges(n: usize, offset: usize, edges: &mut Vec<Edge>) {
    for i in 0..n {
        edges.push(Edge(offset + i, offset + (i + 1) % n));
    }
}

pub fn build(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::Cycle(n) => {
            if n < 3 {
                return Err(domain("cycle", format!("needs at least 3 vertices, got {n}")));
            }
            let mut edges = Vec::with_capacity(n);
            cycle_edges(n, 0, &mut edges);
            Graph::new(n, edges)
        }
        Family::Path(v) => {
            if v < 2 {
                return Err(domain("path", format!("needs at least 2 vertices, got {v}")));
            }
            Graph::new(v, (0..v - 1).map(|i| Edge(i, i + 1)).collect())
        }
        Family::Star(n) => {
            if n < 1 {
                return Err(domain("star", "needs at least 1 edge"));
            }
            Graph::new(n + 1, (1..=n).map(|i| Edge(0, i)).collect())
        }
        Family::DoubleStar(a, b) => {
            if a < 1 || b < 1 {
                return Err(domain("double_star", format!("needs a, b >= 1, got ({a}, {b})")));
            }
            let mut edges = vec![Edge(0, 1)];
            edges.extend((0..a).map(|i| Edge(0, 2 + i)));
            edges.extend((0..b).map(|i| Edge(1, 2 + a + i)));
            Graph::new(a + b + 2, edges)
        }
        Family::Jellyfish { k, r } => {
            if k < 3 || r < 1 {
                return Err(domain("jellyfish", format!("needs k >= 3 and r >= 1, got ({k}, {r})")));
            }
            let mut edges = Vec::with_capacity(k + k * r);
            cycle_edges(k, 0, &mut edges);
            for i in 0..k {
                for j in 0..r {
                    edges.push(Edge(i, k + i * r + j));
                }
            }
            Graph::new(k + k * r, edges)
        }
        Family::Paths3(t) => {
            let mut edges = Vec::with_capacity(2 * t);
            for c in 0..t {
                edges.push(Edge(3 * c, 3 * c + 1));
                edges.push(Edge(3 * c + 1, 3 * c + 2));
            }
            Graph::new(3 * t, edges)
        }
        Family::Union(ref parts) => {
            let mut g = Graph::empty();
            for part in parts {
                g = g.disjoint_union(&build(part)?);
            }
            Ok(g)
        }
        Family::Explicit(ref g) => Ok(g.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn is_cycle(g: &Graph) -> bool {
        g.vertex_count() >= 3
            && g.edge_count() == g.vertex_count()
            && g.degrees().iter().all(|&d| d == 2)
            && g.components().len() == 1
    }

    #[test]
    fn cycle3_edges() {
        let g = build(&Family::Cycle(3)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[Edge(0, 1), Edge(1, 2), Edge(2, 0)]);
    }

    #[test]
    fn jellyfish_counts() {
        let g = build(&Family::Jellyfish { k: 3, r: 11 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (36, 36));
        let s = g.summarize_components();
        assert_eq!((s.component_count, s.p3_count, s.internal_edge_count), (1, 0, 3));
    }

    #[test]
    fn union_with_paths() {
        let g = build(&Family::Union(vec![Family::Cycle(3), Family::Paths3(6)])).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (21, 15));
        assert_eq!(g.edge(3), Edge(3, 4));
    }

    #[test]
    fn summaries() {
        let s = build(&Family::Paths3(2)).unwrap().summarize_components();
        assert_eq!((s.component_count, s.p3_count, s.internal_edge_count), (2, 2, 0));
        let s = build(&Family::DoubleStar(2, 2)).unwrap().summarize_components();
        assert_eq!((s.component_count, s.p3_count, s.internal_edge_count), (1, 0, 1));
        let s = build(&Family::Star(1)).unwrap().summarize_components();
        assert!(s.has_p2);
        let s = Graph::from_pairs(4, &[(0, 1), (1, 2)]).unwrap().summarize_components();
        assert_eq!(s.isolated_vertex_count, 1);
        assert_eq!(s.p3_count, 1);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(build(&Family::Cycle(2)), Err(GraphError::Domain { .. })));
        assert!(build(&Family::Path(1)).is_err());
        assert!(build(&Family::Star(0)).is_err());
        assert!(build(&Family::DoubleStar(0, 3)).is_err());
        assert!(build(&Family::Jellyfish { k: 2, r: 1 }).is_err());
        // degenerate stars are allowed
        assert_eq!(build(&Family::Star(2)).unwrap().summarize_components().p3_count, 1);
    }

    #[test]
    fn invalid_edge_lists() {
        assert!(matches!(Graph::from_pairs(2, &[(0, 0)]), Err(GraphError::Loop { .. })));
        assert!(matches!(
            Graph::from_pairs(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { index: 1, .. })
        ));
        assert!(matches!(Graph::from_pairs(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn subdivide_identity_and_growth() {
        let c3 = build(&Family::Cycle(3)).unwrap();
        for e in 0..3 {
            assert_eq!(c3.subdivide(e, 1).unwrap().graph, c3);
            let c4 = c3.subdivide(e, 2).unwrap();
            assert!(is_cycle(&c4.graph));
            assert_eq!(c4.graph.vertex_count(), 4);
        }
        for n in 4..=8 {
            let s = c3.subdivide(1, n - 2).unwrap();
            assert!(is_cycle(&s.graph), "C{n}");
            assert_eq!(s.graph.vertex_count(), n);
        }
        assert!(matches!(c3.subdivide(3, 2), Err(GraphError::EdgeOutOfRange { .. })));
    }

    #[test]
    fn subdivide_segment_map() {
        let g = build(&Family::Path(3)).unwrap();
        let s = g.subdivide(0, 3).unwrap();
        // 0 - 3 - 4 - 1 - 2
        assert_eq!(s.new_vertices, vec![3, 4]);
        assert_eq!(s.segments, vec![2, 3, 0]);
        assert_eq!(s.graph.edge(2), Edge(0, 3));
        assert_eq!(s.graph.edge(3), Edge(3, 4));
        assert_eq!(s.graph.edge(0), Edge(4, 1));
        assert_eq!(s.graph.edge(1), Edge(1, 2));
        assert_eq!(s.segment_at(0), 2);
        assert_eq!(s.segment_at(1), 0);
    }

    fn family_strategy() -> impl Strategy<Value = Family> {
        let leaf = prop_oneof![
            (3usize..9).prop_map(Family::Cycle),
            (2usize..9).prop_map(Family::Path),
            (1usize..7).prop_map(Family::Star),
            (1usize..5, 1usize..5).prop_map(|(a, b)| Family::DoubleStar(a, b)),
            (3usize..6, 1usize..4).prop_map(|(k, r)| Family::Jellyfish { k, r }),
            (0usize..4).prop_map(Family::Paths3),
        ];
        prop::collection::vec(leaf, 1..4).prop_map(Family::Union)
    }

    proptest! {
        #[test]
        fn handshake(f in family_strategy()) {
            let g = build(&f).unwrap();
            prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }

        #[test]
        fn subdivide_counts(f in family_strategy(), pick in 0usize..1000, p in 1usize..6) {
            let g = build(&f).unwrap();
            prop_assume!(g.edge_count() > 0);
            let s = g.subdivide(pick % g.edge_count(), p).unwrap();
            prop_assert_eq!(s.graph.vertex_count(), g.vertex_count() + p - 1);
            prop_assert_eq!(s.graph.edge_count(), g.edge_count() + p - 1);
        }

        #[test]
        fn summary_is_relabel_invariant(f in family_strategy(), seed in any::<u64>()) {
            let g = build(&f).unwrap();
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            let h = g.relabel_vertices(&perm).unwrap();
            prop_assert_eq!(g.summarize_components(), h.summarize_components());
        }
    }
}
