//! Growing an antimagic labeling by subdividing one edge, and prepending a
//! fresh cycle to a 2-regular host.

use super::{ConstructError, HostedLabeling};
use crate::graph::{build, Family};
use crate::labeling::{check_threshold_hypothesis, check_two_largest_hypothesis, EdgeLabeling};

/// Subdivides `edge` once and gives the half touching `x` the label
/// `fresh`; the other half keeps the old label. The new edge is appended.
fn split_toward(l: &EdgeLabeling, edge: usize, x: usize, fresh: usize) -> (EdgeLabeling, usize) {
    let sub = l.graph().subdivide(edge, 2).expect("edge index comes from the labeling");
    let old = l.label(edge);
    let mut labels = l.labels().to_vec();
    labels.push(0);
    let near = sub.segment_at(x);
    let far = sub.segment_at(l.graph().edge(edge).other(x));
    labels[near] = fresh;
    labels[far] = old;
    let z = sub.new_vertices[0];
    (EdgeLabeling::new(sub.graph, labels).expect("labels stay a bijection"), z)
}

/// One induction step at a vertex incident to the labels `m` and `m - 1`:
/// the edge labeled `m` is split and the half next to `at` gets `m + 1`.
/// Returns the new labeling and the new qualifying vertex.
fn two_largest_step(l: &EdgeLabeling, at: usize) -> (EdgeLabeling, usize) {
    let m = l.edge_count();
    let top = l.edge_with_label(m).expect("bijective labeling has label m");
    split_toward(l, top, at, m + 1)
}

/// Subdivides the edge labeled `m` at the qualifying vertex `at` into `p`
/// edges, giving each new edge the next fresh label. The output again has a
/// qualifying vertex (the newest one), so the step can be repeated.
pub fn extend_two_largest(l: &EdgeLabeling, at: usize, p: usize) -> Result<EdgeLabeling, ConstructError> {
    if p == 0 {
        return Err(ConstructError::Domain("p must be at least 1".into()));
    }
    if !check_two_largest_hypothesis(l).contains(&at) {
        return Err(ConstructError::Hypothesis(format!(
            "vertex {at} is not a degree-2 vertex on labels m, m-1 with max phi <= 2m-1"
        )));
    }
    let mut cur = l.clone();
    let mut at = at;
    for _ in 1..p {
        (cur, at) = two_largest_step(&cur, at);
    }
    super::ensure_antimagic(&cur, "two-largest extension")?;
    Ok(cur)
}

/// Subdivides one of the two qualifying host edges at `at` into `p` edges.
///
/// The smaller-labeled edge is split first and the half next to `at` gets
/// `m' + 1`; for `p >= 3` that new edge is split again with `m' + 2` next to
/// `at`, after which the remaining subdivisions follow the two-largest rule.
///
/// Splitting the larger-labeled edge instead would collide whenever the two
/// labels are consecutive: `at` and the first new vertex would both sum to
/// `b + m' + 2`.
pub fn extend_threshold(h: &HostedLabeling, at: usize, p: usize) -> Result<HostedLabeling, ConstructError> {
    if p == 0 {
        return Err(ConstructError::Domain("p must be at least 1".into()));
    }
    let q = check_threshold_hypothesis(&h.labeling, &h.host_edges, h.t)
        .into_iter()
        .find(|q| q.vertex == at)
        .ok_or_else(|| {
            ConstructError::Hypothesis(format!("vertex {at} has no two host edges labeled at least t + s - l"))
        })?;
    if p == 1 {
        return Ok(h.clone());
    }
    let m0 = h.labeling.edge_count();
    let (mut cur, z) = split_toward(&h.labeling, q.edges.1, at, m0 + 1);
    if p >= 3 {
        let fresh_edge = cur.edge_with_label(m0 + 1).unwrap();
        let (next, z2) = split_toward(&cur, fresh_edge, at, m0 + 2);
        debug_assert!(next.graph().edge(next.edge_with_label(m0 + 1).unwrap()).touches(z));
        cur = next;
        if p > 3 {
            cur = extend_two_largest(&cur, z2, p - 2)?;
        }
    }
    super::ensure_antimagic(&cur, "threshold extension")?;
    Ok(h.grown(cur))
}

/// Adds a cycle `C_q` carrying the largest labels to a labeling of a
/// 2-regular host joined with paths. The new cycle comes first in the output.
pub fn prepend_cycle(h: &HostedLabeling, q: usize) -> Result<HostedLabeling, ConstructError> {
    if q < 3 {
        return Err(ConstructError::Domain(format!("cycle length must be at least 3, got {q}")));
    }
    if !h.host_is_two_regular() {
        return Err(ConstructError::Hypothesis("host graph is not 2-regular".into()));
    }
    super::ensure_antimagic(&h.labeling, "prepend_cycle input")?;
    let m0 = h.labeling.edge_count();
    let tri = build(&Family::Cycle(3)).unwrap();
    let graph = tri.disjoint_union(h.labeling.graph());
    let mut labels = vec![m0 + 1, m0 + 2, m0 + 3];
    labels.extend_from_slice(h.labeling.labels());
    let l = EdgeLabeling::new(graph, labels).expect("fresh labels extend the bijection");
    // vertex 2 sits on the edges labeled m0+2 and m0+3
    let l = if q > 3 { extend_two_largest(&l, 2, q - 2)? } else { l };
    super::ensure_antimagic(&l, "prepend_cycle")?;
    let mut host_edges: Vec<usize> = vec![0, 1, 2];
    host_edges.extend(h.host_edges.iter().map(|e| e + 3));
    host_edges.extend(m0 + 3..l.edge_count());
    Ok(HostedLabeling { labeling: l, host_edges, t: h.t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::tables::{embedded_table, TableFamily};
    use crate::labeling::check_two_largest_hypothesis;

    fn untouched_phi_preserved(before: &EdgeLabeling, after: &EdgeLabeling, touched: &[usize]) {
        let (b, a) = (before.phi_profile().phi, after.phi_profile().phi);
        for v in 0..b.len() {
            if !touched.contains(&v) {
                assert_eq!(b[v], a[v], "vertex {v}");
            }
        }
    }

    #[test]
    fn c3_table_row_grows_to_c4() {
        let base = embedded_table(TableFamily::C3, 3, 6).unwrap();
        let at = check_two_largest_hypothesis(&base.labeling)[0];
        let out = extend_two_largest(&base.labeling, at, 2).unwrap();
        assert!(out.verify_antimagic().antimagic);
        assert_eq!(out.edge_count(), 16);
        assert_eq!(check_two_largest_hypothesis(&out), vec![base.labeling.graph().vertex_count()]);
        untouched_phi_preserved(&base.labeling, &out, &[at]);
    }

    #[test]
    fn iterated_steps_match_single_call() {
        let base = embedded_table(TableFamily::C3, 3, 4).unwrap().labeling;
        let at = check_two_largest_hypothesis(&base)[0];
        let once = extend_two_largest(&base, at, 3).unwrap();
        let step = extend_two_largest(&base, at, 2).unwrap();
        let at2 = check_two_largest_hypothesis(&step)[0];
        let twice = extend_two_largest(&step, at2, 2).unwrap();
        assert_eq!(once, twice);
        assert_eq!(extend_two_largest(&base, at, 1).unwrap(), base);
    }

    #[test]
    fn two_largest_rejects_non_qualifier() {
        let base = embedded_table(TableFamily::C3, 3, 6).unwrap().labeling;
        assert!(matches!(extend_two_largest(&base, 0, 2), Err(ConstructError::Hypothesis(_))));
    }

    #[test]
    fn threshold_extension_on_table_rows() {
        for (fam, n, t) in [(TableFamily::Cycle, 5, 13), (TableFamily::TwoC3, 6, 15), (TableFamily::Cycle, 9, 22)] {
            let base = embedded_table(fam, n, t).unwrap();
            let q = check_threshold_hypothesis(&base.labeling, &base.host_edges, t)[0];
            for p in 1..=6 {
                let out = extend_threshold(&base, q.vertex, p).unwrap();
                assert!(out.labeling.verify_antimagic().antimagic);
                assert_eq!(out.labeling.edge_count(), base.labeling.edge_count() + p - 1);
                assert_eq!(out.host_edges.len(), base.host_edges.len() + p - 1);
                untouched_phi_preserved(&base.labeling, &out.labeling, &[q.vertex]);
            }
        }
    }

    #[test]
    fn threshold_rejects_non_qualifier() {
        let base = embedded_table(TableFamily::Cycle, 5, 13).unwrap();
        assert!(matches!(extend_threshold(&base, 0, 2), Err(ConstructError::Hypothesis(_))));
    }

    #[test]
    fn prepend_on_table_rows() {
        let base = embedded_table(TableFamily::C3, 3, 6).unwrap();
        let out = prepend_cycle(&base, 3).unwrap();
        assert!(out.labeling.verify_antimagic().antimagic);
        assert_eq!(out.labeling.labels()[..3], [16, 17, 18]);
        let base = embedded_table(TableFamily::C3, 3, 0).unwrap();
        let out = prepend_cycle(&base, 5).unwrap();
        assert_eq!(out.labeling.graph().vertex_count(), 8);
        assert!(out.host_is_two_regular());
        let base = embedded_table(TableFamily::Cycle, 3, 8).unwrap();
        assert!(prepend_cycle(&base, 3).unwrap().labeling.verify_antimagic().antimagic);
    }

    #[test]
    fn prepend_rejects_non_two_regular() {
        let g = build(&Family::Star(3)).unwrap();
        let h = HostedLabeling { labeling: EdgeLabeling::new(g, vec![1, 2, 3]).unwrap(), host_edges: vec![0, 1, 2], t: 0 };
        assert!(matches!(prepend_cycle(&h, 3), Err(ConstructError::Hypothesis(_))));
    }
}
