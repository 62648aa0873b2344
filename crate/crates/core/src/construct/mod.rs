//! Constructive labelings of `G ∪ tP3`.
//!
//! Every public constructor verifies its own output before returning it; a
//! failed check surfaces as [`ConstructError::Internal`].

pub mod extend;
pub mod jellyfish;
pub mod partition;
pub mod tables;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::two_regular_beta;
use crate::graph::{Edge, Graph, GraphError};
use crate::labeling::{check_threshold_hypothesis, check_two_largest_hypothesis, EdgeLabeling};

pub use extend::{extend_threshold, extend_two_largest, prepend_cycle};
pub use jellyfish::build_jellyfish_c3_labeling;
pub use partition::{le_par_partition, BlockFamily, BlockPartition, PartitionError};
pub use tables::{all_rows, cycle_base_for, embedded_table, Hypothesis, TableFamily, TableRow};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("bad table data: {0}")]
    Table(String),
    #[error("no {family:?} table row for n = {n}, t = {t}")]
    MissingRow { family: TableFamily, n: usize, t: usize },
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),
}

/// A labeling of `G ∪ tP3` that remembers which edge positions belong to `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HostedLabeling {
    pub labeling: EdgeLabeling,
    pub host_edges: Vec<usize>,
    pub t: usize,
}

impl HostedLabeling {
    /// Wraps a labeling produced by subdividing a host edge: edges appended
    /// past the old edge count belong to the host.
    pub(crate) fn grown(&self, labeling: EdgeLabeling) -> HostedLabeling {
        let mut host_edges = self.host_edges.clone();
        host_edges.extend(self.labeling.edge_count()..labeling.edge_count());
        HostedLabeling { labeling, host_edges, t: self.t }
    }

    fn host_degrees(&self) -> Vec<usize> {
        let g = self.labeling.graph();
        let mut deg = vec![0; g.vertex_count()];
        for &e in &self.host_edges {
            let Edge(u, v) = g.edge(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn host_is_two_regular(&self) -> bool {
        self.host_degrees().iter().all(|&d| d == 0 || d == 2)
            && !self.host_edges.is_empty()
    }

    /// `(n, m)` of the host graph.
    pub fn host_size(&self) -> (usize, usize) {
        let n = self.host_degrees().iter().filter(|&&d| d > 0).count();
        (n, self.host_edges.len())
    }

    /// Reorders a labeling whose host is 2-regular into the canonical layout:
    /// host cycles first (ordered by their lowest edge position, each walked
    /// from the first endpoint of that edge) and then the paths as
    /// `end - center - end`. Labels travel with their edges.
    pub fn canonicalize(&self) -> HostedLabeling {
        assert!(self.host_is_two_regular(), "canonical layout needs a 2-regular host");
        let g = self.labeling.graph();
        let inc = g.incidence();
        let mut is_host = vec![false; g.edge_count()];
        for &e in &self.host_edges {
            is_host[e] = true;
        }
        let mut seen = vec![false; g.edge_count()];
        let mut new_id = vec![usize::MAX; g.vertex_count()];
        let mut next = 0usize;
        let mut edges = Vec::with_capacity(g.edge_count());
        let mut labels = Vec::with_capacity(g.edge_count());
        let mut fresh = |v: usize, new_id: &mut Vec<usize>| {
            if new_id[v] == usize::MAX {
                new_id[v] = next;
                next += 1;
            }
            new_id[v]
        };

        for start in 0..g.edge_count() {
            if !is_host[start] || seen[start] {
                continue;
            }
            let first = g.edge(start).0;
            let (mut at, mut e) = (first, start);
            loop {
                seen[e] = true;
                let w = g.edge(e).other(at);
                let a = fresh(at, &mut new_id);
                let b = fresh(w, &mut new_id);
                edges.push(Edge(a, b));
                labels.push(self.labeling.label(e));
                at = w;
                match inc[at].iter().find(|&&f| is_host[f] && !seen[f]) {
                    Some(&f) => e = f,
                    None => break,
                }
            }
        }
        let host_m = edges.len();

        for start in 0..g.edge_count() {
            if seen[start] {
                continue;
            }
            let Edge(u, v) = g.edge(start);
            let (end, center) = if inc[v].len() == 2 { (u, v) } else { (v, u) };
            let second = inc[center].iter().copied().find(|&f| f != start).expect("path component has two edges");
            let other_end = g.edge(second).other(center);
            seen[start] = true;
            seen[second] = true;
            let (a, c, b) = (fresh(end, &mut new_id), fresh(center, &mut new_id), fresh(other_end, &mut new_id));
            edges.push(Edge(a, c));
            labels.push(self.labeling.label(start));
            edges.push(Edge(c, b));
            labels.push(self.labeling.label(second));
        }

        let graph = Graph::new(g.vertex_count(), edges).expect("reordering keeps the graph simple");
        let labeling = EdgeLabeling::new(graph, labels).expect("labels are unchanged");
        HostedLabeling { labeling, host_edges: (0..host_m).collect(), t: self.t }
    }
}

pub(crate) fn ensure_antimagic(l: &EdgeLabeling, ctx: &str) -> Result<(), ConstructError> {
    let report = l.verify_antimagic();
    if report.antimagic {
        Ok(())
    } else {
        Err(ConstructError::Internal(format!(
            "{ctx} produced a labeling that is not antimagic ({} colliding pairs)",
            report.duplicate_pairs.len()
        )))
    }
}

fn lowest_threshold_qualifier(h: &HostedLabeling) -> Result<usize, ConstructError> {
    check_threshold_hypothesis(&h.labeling, &h.host_edges, h.t)
        .first()
        .map(|q| q.vertex)
        .ok_or_else(|| ConstructError::Internal("table row has no threshold qualifier".into()))
}

fn lowest_two_largest_qualifier(l: &EdgeLabeling) -> Result<usize, ConstructError> {
    check_two_largest_hypothesis(l)
        .first()
        .copied()
        .ok_or_else(|| ConstructError::Internal("table row has no two-largest qualifier".into()))
}

/// An antimagic labeling of `C_n ∪ tP3` for `n >= 3` and
/// `t <= min(22, β(C_n))`, in canonical layout.
pub fn construct_cycle(n: usize, t: usize) -> Result<HostedLabeling, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain(format!("cycle length must be at least 3, got {n}")));
    }
    let cap = 22.min(two_regular_beta(n as i64) as usize);
    if t > cap {
        return Err(ConstructError::Domain(format!("C_{n} ∪ {t}P3: t must be at most {cap}")));
    }
    let out = if t <= 6 {
        let base = embedded_table(TableFamily::C3, 3, t)?;
        let at = lowest_two_largest_qualifier(&base.labeling)?;
        base.grown(extend_two_largest(&base.labeling, at, n - 2)?)
    } else {
        let n0 = cycle_base_for(t).expect("t in 7..=22 has a window");
        let base = embedded_table(TableFamily::Cycle, n0, t)?;
        let at = lowest_threshold_qualifier(&base)?;
        extend_threshold(&base, at, n - n0 + 1)?
    };
    let out = out.canonicalize();
    ensure_antimagic(&out.labeling, "construct_cycle")?;
    Ok(out)
}

/// An antimagic labeling of `C_n ∪ C3 ∪ tP3` for `n >= 3` and `t <= 15`, in
/// canonical layout.
pub fn construct_union_cycle_c3(n: usize, t: usize) -> Result<HostedLabeling, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain(format!("cycle length must be at least 3, got {n}")));
    }
    let out = match t {
        0..=8 => {
            let base = if t <= 6 {
                embedded_table(TableFamily::C3, 3, t)?
            } else {
                embedded_table(TableFamily::Cycle, 3, t)?
            };
            prepend_cycle(&base, n)?
        }
        9..=13 => {
            let base = embedded_table(TableFamily::TwoC3, 6, t)?;
            let at = lowest_two_largest_qualifier(&base.labeling)?;
            base.grown(extend_two_largest(&base.labeling, at, n - 2)?)
        }
        14..=15 => {
            let base = embedded_table(TableFamily::TwoC3, 6, t)?;
            let at = lowest_threshold_qualifier(&base)?;
            extend_threshold(&base, at, n - 2)?
        }
        _ => {
            return Err(ConstructError::UnsupportedRange(format!(
                "C_n ∪ C3 ∪ tP3 is only constructed for t <= 15, got {t}"
            )))
        }
    };
    let out = out.canonicalize();
    ensure_antimagic(&out.labeling, "construct_union_cycle_c3")?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, Family};

    fn is_cycle_then_paths(h: &HostedLabeling, cycles: &[usize]) -> bool {
        let mut fams: Vec<Family> = cycles.iter().map(|&k| Family::Cycle(k)).collect();
        fams.push(Family::Paths3(h.t));
        let want = build(&Family::Union(fams)).unwrap();
        h.labeling.graph() == &want
    }

    #[test]
    fn cycle_examples() {
        for (n, t) in [(9, 22), (4, 5), (30, 22), (3, 0), (5, 13), (7, 16)] {
            let h = construct_cycle(n, t).unwrap();
            assert!(h.labeling.verify_antimagic().antimagic, "n={n} t={t}");
            assert!(is_cycle_then_paths(&h, &[n]), "n={n} t={t}");
        }
    }

    #[test]
    fn cycle_domain() {
        assert!(matches!(construct_cycle(2, 0), Err(ConstructError::Domain(_))));
        assert!(matches!(construct_cycle(3, 9), Err(ConstructError::Domain(_))));
        assert!(matches!(construct_cycle(12, 23), Err(ConstructError::Domain(_))));
    }

    #[test]
    fn small_cycle_reuses_table_row() {
        let h = construct_cycle(5, 13).unwrap();
        assert_eq!(h.labeling.labels()[..5], [9, 5, 14, 19, 23]);
    }

    #[test]
    fn union_examples() {
        for (n, t) in [(3, 15), (7, 10), (3, 0), (12, 14), (5, 8)] {
            let h = construct_union_cycle_c3(n, t).unwrap();
            assert!(h.labeling.verify_antimagic().antimagic, "n={n} t={t}");
            assert_eq!(h.labeling.edge_count(), n + 3 + 2 * t);
            assert_eq!(h.host_size(), (n + 3, n + 3));
        }
        assert!(matches!(construct_union_cycle_c3(3, 16), Err(ConstructError::UnsupportedRange(_))));
    }

    #[test]
    fn canonical_layout_keeps_phi_multiset() {
        let base = embedded_table(TableFamily::Cycle, 5, 13).unwrap();
        let grown = extend_threshold(&base, lowest_threshold_qualifier(&base).unwrap(), 4).unwrap();
        let canon = grown.canonicalize();
        let mut a = grown.labeling.phi_profile().phi;
        let mut b = canon.labeling.phi_profile().phi;
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        assert!(is_cycle_then_paths(&canon, &[8]));
    }
}
