//! Edge labelings, vertex sums and the antimagic verifier.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::threshold;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("expected {expected} labels, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("label {label} is outside 1..={max}")]
    OutOfRange { label: usize, max: usize },
    #[error("label {label} is used more than once")]
    Duplicate { label: usize },
}

/// A graph with a bijection from its edge positions onto `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeLabeling {
    graph: Graph,
    labels: Vec<usize>,
}

impl EdgeLabeling {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Result<Self, LabelingError> {
        let m = graph.edge_count();
        if labels.len() != m {
            return Err(LabelingError::LengthMismatch { expected: m, got: labels.len() });
        }
        let mut seen = vec![false; m + 1];
        for &label in &labels {
            if label == 0 || label > m {
                return Err(LabelingError::OutOfRange { label, max: m });
            }
            if std::mem::replace(&mut seen[label], true) {
                return Err(LabelingError::Duplicate { label });
            }
        }
        Ok(EdgeLabeling { graph, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> usize {
        self.labels[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    /// Edge position carrying `label`.
    pub fn edge_with_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn into_parts(self) -> (Graph, Vec<usize>) {
        (self.graph, self.labels)
    }

    pub fn phi_profile(&self) -> PhiProfile {
        let mut phi = vec![0u64; self.graph.vertex_count()];
        for (e, &label) in self.graph.edges().iter().zip(&self.labels) {
            phi[e.0] += label as u64;
            phi[e.1] += label as u64;
        }
        PhiProfile { phi }
    }

    pub fn verify_antimagic(&self) -> VerifyReport {
        self.phi_profile().verify()
    }
}

/// Vertex sums, parallel to the vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiProfile {
    pub phi: Vec<u64>,
}

impl PhiProfile {
    pub fn max(&self) -> u64 {
        self.phi.iter().copied().max().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.phi.iter().sum()
    }

    pub fn verify(&self) -> VerifyReport {
        let mut by_value: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (v, &p) in self.phi.iter().enumerate() {
            by_value.entry(p).or_default().push(v);
        }
        let mut duplicate_pairs = Vec::new();
        for (&p, vs) in &by_value {
            for (i, &u) in vs.iter().enumerate() {
                for &w in &vs[i + 1..] {
                    duplicate_pairs.push(DuplicatePair { u, v: w, phi: p });
                }
            }
        }
        duplicate_pairs.sort_by_key(|d| (d.u, d.v));
        VerifyReport { antimagic: duplicate_pairs.is_empty(), duplicate_pairs, max_phi: self.max() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DuplicatePair {
    pub u: usize,
    pub v: usize,
    pub phi: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub antimagic: bool,
    /// Every pair of vertices sharing a vertex sum, ordered by `(u, v)`.
    pub duplicate_pairs: Vec<DuplicatePair>,
    pub max_phi: u64,
}

/// Degree-2 vertices whose two edges carry the labels `m` and `m - 1`,
/// reported only when no vertex sum exceeds `2m - 1`.
///
/// Such a vertex lets the edge labeled `m` be subdivided any number of times
/// while staying antimagic.
pub fn check_two_largest_hypothesis(l: &EdgeLabeling) -> Vec<usize> {
    let m = l.edge_count();
    if m < 2 {
        return Vec::new();
    }
    if l.phi_profile().max() > 2 * m as u64 - 1 {
        return Vec::new();
    }
    let (Some(top), Some(next)) = (l.edge_with_label(m), l.edge_with_label(m - 1)) else {
        return Vec::new();
    };
    let g = l.graph();
    let deg = g.degrees();
    let (a, b) = (g.edge(top), g.edge(next));
    [a.0, a.1].into_iter().filter(|&v| b.touches(v) && deg[v] == 2).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThresholdQualifier {
    pub vertex: usize,
    /// The vertex's two host edges, larger label first.
    pub edges: (usize, usize),
}

/// Host statistics for a labeling of `G ∪ tP3`, where `host_edges` are the
/// positions of `G`'s edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HostShape {
    pub n: usize,
    pub m: usize,
}

pub fn host_shape(g: &Graph, host_edges: &[usize]) -> HostShape {
    let mut vs: Vec<usize> = host_edges.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
    vs.sort_unstable();
    vs.dedup();
    HostShape { n: vs.len(), m: host_edges.len() }
}

/// Degree-2 vertices of the host `G` whose two host edges both carry labels
/// at least `threshold(n, m, t)`. Empty when the host has fewer edges than
/// vertices.
pub fn check_threshold_hypothesis(l: &EdgeLabeling, host_edges: &[usize], t: usize) -> Vec<ThresholdQualifier> {
    let g = l.graph();
    let HostShape { n, m } = host_shape(g, host_edges);
    if m < n {
        return Vec::new();
    }
    let bar = threshold(n as i64, m as i64, t as i64);
    let mut is_host = vec![false; g.edge_count()];
    for &e in host_edges {
        is_host[e] = true;
    }
    let mut out = Vec::new();
    for (v, inc) in g.incidence().iter().enumerate() {
        if let [e1, e2] = inc[..] {
            if is_host[e1] && is_host[e2] && l.label(e1) as i64 >= bar && l.label(e2) as i64 >= bar {
                let edges = if l.label(e1) > l.label(e2) { (e1, e2) } else { (e2, e1) };
                out.push(ThresholdQualifier { vertex: v, edges });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, Family};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn labeled(f: Family, labels: &[usize]) -> EdgeLabeling {
        EdgeLabeling::new(build(&f).unwrap(), labels.to_vec()).unwrap()
    }

    #[test]
    fn c3_phi() {
        let l = labeled(Family::Cycle(3), &[1, 2, 3]);
        assert_eq!(l.phi_profile().phi, vec![4, 3, 5]);
        let r = l.verify_antimagic();
        assert!(r.antimagic);
        assert_eq!(r.max_phi, 5);
        assert_eq!(check_two_largest_hypothesis(&l), vec![2]);
    }

    #[test]
    fn p3_phi() {
        let l = labeled(Family::Paths3(1), &[1, 2]);
        assert_eq!(l.phi_profile().phi, vec![1, 3, 2]);
    }

    #[test]
    fn two_p3_collision() {
        let l = labeled(Family::Paths3(2), &[1, 4, 2, 3]);
        let r = l.verify_antimagic();
        assert!(!r.antimagic);
        assert_eq!(r.duplicate_pairs, vec![DuplicatePair { u: 1, v: 4, phi: 5 }]);
    }

    #[test]
    fn reports_every_pair() {
        // three disjoint copies of P2
        let g = Graph::from_pairs(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let l = EdgeLabeling::new(g, vec![1, 2, 3]).unwrap();
        let r = l.verify_antimagic();
        assert_eq!(r.duplicate_pairs.len(), 3);
        assert_eq!(r.duplicate_pairs[0], DuplicatePair { u: 0, v: 1, phi: 1 });
    }

    #[test]
    fn bijection_errors() {
        let g = build(&Family::Cycle(3)).unwrap();
        assert_eq!(
            EdgeLabeling::new(g.clone(), vec![1, 2]),
            Err(LabelingError::LengthMismatch { expected: 3, got: 2 })
        );
        assert_eq!(EdgeLabeling::new(g.clone(), vec![1, 2, 4]), Err(LabelingError::OutOfRange { label: 4, max: 3 }));
        assert_eq!(EdgeLabeling::new(g.clone(), vec![0, 2, 3]), Err(LabelingError::OutOfRange { label: 0, max: 3 }));
        assert_eq!(EdgeLabeling::new(g, vec![2, 2, 3]), Err(LabelingError::Duplicate { label: 2 }));
    }

    #[test]
    fn threshold_on_c3_base_has_no_qualifier() {
        let l = labeled(Family::Cycle(3), &[1, 2, 3]);
        assert_eq!(threshold(3, 3, 0), 6);
        assert!(check_threshold_hypothesis(&l, &[0, 1, 2], 0).is_empty());
    }

    #[test]
    fn threshold_skips_sparse_hosts() {
        // a path host has m < n
        let l = labeled(Family::Path(4), &[3, 2, 1]);
        assert!(check_threshold_hypothesis(&l, &[0, 1, 2], 0).is_empty());
    }

    #[test]
    fn two_largest_requires_max_phi_bound() {
        let l = labeled(Family::Cycle(4), &[1, 3, 4, 2]);
        // phi: v0 = 1+2 = 3, v1 = 4, v2 = 7, v3 = 6
        assert_eq!(check_two_largest_hypothesis(&l), vec![2]);
        // 4 and 3 not adjacent
        let l = labeled(Family::Cycle(4), &[4, 1, 3, 2]);
        assert!(check_two_largest_hypothesis(&l).is_empty());
        // adjacent but a degree-3 vertex exceeds 2m - 1
        let g = Graph::from_pairs(6, &[(0, 1), (1, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let l = EdgeLabeling::new(g, vec![4, 5, 3, 2, 1]).unwrap();
        assert_eq!(l.phi_profile().phi[..2], [10, 9]);
        assert!(check_two_largest_hypothesis(&l).is_empty());
    }

    proptest! {
        #[test]
        fn conservation_and_leaf_identity(n in 3usize..9, t in 0usize..5, seed in any::<u64>()) {
            let g = build(&Family::Union(vec![Family::Cycle(n), Family::Star(3), Family::Paths3(t)])).unwrap();
            let m = g.edge_count();
            let mut labels: Vec<usize> = (1..=m).collect();
            labels.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            let l = EdgeLabeling::new(g, labels).unwrap();
            let phi = l.phi_profile();
            prop_assert_eq!(phi.total(), (m * (m + 1)) as u64);
            let deg = l.graph().degrees();
            let inc = l.graph().incidence();
            for v in 0..deg.len() {
                if deg[v] == 1 {
                    prop_assert_eq!(phi.phi[v], l.label(inc[v][0]) as u64);
                }
            }
            let r = phi.verify();
            prop_assert_eq!(r.antimagic, r.duplicate_pairs.is_empty());
        }
    }
}
