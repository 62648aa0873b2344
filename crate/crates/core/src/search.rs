//! Exhaustive search for antimagic labelings of small graphs.
//!
//! Edges are labeled in a fixed order chosen so that vertices become fully
//! labeled ("closed") as early as possible. A branch dies as soon as a closed
//! vertex repeats the sum of another closed vertex. The top-level label
//! choices can be spread over several threads; they share only a node counter
//! and a stop flag.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{feasibility_filter, Feasibility};
use crate::graph::{build, Family, Graph};
use crate::labeling::EdgeLabeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    Found,
    NotAntimagic,
    BudgetExceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub labeling: Option<EdgeLabeling>,
    pub nodes_explored: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("oracle enumeration needs at most {max} edges, graph has {m}")]
    TooLarge { m: usize, max: usize },
}

/// Largest edge count [`oracle_enumerate`] accepts.
pub const ORACLE_MAX_EDGES: usize = 9;

/// Edge order for the search plus, for each position, the vertices whose
/// last incident edge sits there.
#[derive(Debug, Clone)]
struct Plan {
    order: Vec<usize>,
    closes: Vec<Vec<usize>>,
    isolated: Vec<usize>,
}

fn plan(g: &Graph) -> Plan {
    let m = g.edge_count();
    let inc = g.incidence();
    let mut remaining: Vec<usize> = inc.iter().map(Vec::len).collect();
    let mut placed = vec![false; m];
    let mut touched = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(m);
    let mut closes = Vec::with_capacity(m);

    for comp in g.components() {
        let mut comp_edges: Vec<usize> = comp.iter().flat_map(|&v| inc[v].iter().copied()).collect();
        comp_edges.sort_unstable();
        comp_edges.dedup();
        for _ in 0..comp_edges.len() {
            // most vertices closed, then most endpoints already touched, then lowest index
            let score = |e: usize| {
                let edge = g.edge(e);
                let closed = [edge.0, edge.1].iter().filter(|&&v| remaining[v] == 1).count();
                let near = [edge.0, edge.1].iter().filter(|&&v| touched[v]).count();
                (closed, near)
            };
            let best = comp_edges
                .iter()
                .copied()
                .filter(|&e| !placed[e])
                .fold(None::<usize>, |acc, e| match acc {
                    Some(b) if score(b) >= score(e) => Some(b),
                    _ => Some(e),
                })
                .expect("component still has an unplaced edge");
            placed[best] = true;
            let edge = g.edge(best);
            let mut closed_here = Vec::new();
            for v in [edge.0, edge.1] {
                touched[v] = true;
                remaining[v] -= 1;
                if remaining[v] == 0 {
                    closed_here.push(v);
                }
            }
            order.push(best);
            closes.push(closed_here);
        }
    }
    let isolated = (0..g.vertex_count()).filter(|&v| inc[v].is_empty()).collect();
    Plan { order, closes, isolated }
}

struct Shared<'a> {
    nodes: &'a AtomicU64,
    stop: &'a AtomicBool,
    budget_hit: &'a AtomicBool,
    budget: Option<u64>,
}

enum WorkerResult {
    Found(Vec<usize>),
    Exhausted,
    Stopped,
}

struct Worker<'a> {
    g: &'a Graph,
    plan: &'a Plan,
    shared: &'a Shared<'a>,
    phi: Vec<u64>,
    used: Vec<bool>,
    /// Multiplicity of each sum among closed vertices.
    seen: Vec<u8>,
    labels: Vec<usize>,
}

impl<'a> Worker<'a> {
    fn new(g: &'a Graph, plan: &'a Plan, shared: &'a Shared<'a>) -> Self {
        let m = g.edge_count();
        let mut seen = vec![0u8; m * (m + 1) / 2 + 1];
        if !plan.isolated.is_empty() {
            seen[0] = plan.isolated.len().min(255) as u8;
        }
        Worker { g, plan, shared, phi: vec![0; g.vertex_count()], used: vec![false; m + 1], seen, labels: vec![0; m] }
    }

    /// Counts one node. Returns false once the search has to stop.
    fn tick(&self) -> bool {
        if self.shared.stop.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(b) = self.shared.budget {
            if n > b {
                self.shared.nodes.fetch_sub(1, Ordering::Relaxed);
                self.shared.budget_hit.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    /// Assigns `label` at plan position `pos`. Returns false (and leaves the
    /// state untouched) if a closed vertex would repeat a sum.
    fn assign(&mut self, pos: usize, label: usize) -> bool {
        let e = self.plan.order[pos];
        let edge = self.g.edge(e);
        self.phi[edge.0] += label as u64;
        self.phi[edge.1] += label as u64;
        let closes = &self.plan.closes[pos];
        let mut ok = true;
        let mut marked = 0;
        for &v in closes {
            let s = self.phi[v] as usize;
            if self.seen[s] > 0 {
                ok = false;
                break;
            }
            self.seen[s] += 1;
            marked += 1;
        }
        if !ok {
            for &v in &closes[..marked] {
                self.seen[self.phi[v] as usize] -= 1;
            }
            self.phi[edge.0] -= label as u64;
            self.phi[edge.1] -= label as u64;
            return false;
        }
        self.used[label] = true;
        self.labels[e] = label;
        true
    }

    fn unassign(&mut self, pos: usize, label: usize) {
        let e = self.plan.order[pos];
        let edge = self.g.edge(e);
        for &v in &self.plan.closes[pos] {
            self.seen[self.phi[v] as usize] -= 1;
        }
        self.phi[edge.0] -= label as u64;
        self.phi[edge.1] -= label as u64;
        self.used[label] = false;
        self.labels[e] = 0;
    }

    fn dfs(&mut self, pos: usize) -> WorkerResult {
        let m = self.labels.len();
        if pos == m {
            return WorkerResult::Found(self.labels.clone());
        }
        for label in 1..=m {
            if self.used[label] {
                continue;
            }
            if !self.tick() {
                return WorkerResult::Stopped;
            }
            if self.assign(pos, label) {
                match self.dfs(pos + 1) {
                    WorkerResult::Exhausted => {}
                    done => return done,
                }
                self.unassign(pos, label);
            }
        }
        WorkerResult::Exhausted
    }

    /// Explores the subtrees whose first edge carries one of `first_labels`.
    fn run(&mut self, first_labels: impl Iterator<Item = usize>) -> WorkerResult {
        for label in first_labels {
            if !self.tick() {
                return WorkerResult::Stopped;
            }
            if self.assign(0, label) {
                match self.dfs(1) {
                    WorkerResult::Exhausted => {}
                    done => return done,
                }
                self.unassign(0, label);
            }
        }
        WorkerResult::Exhausted
    }
}

/// Decides whether `g` is antimagic, exploring at most `budget` search-tree
/// nodes (one node per tentative label placement) over `threads` workers.
///
/// With one thread the node count is reproducible. With more, the status is
/// still deterministic when the budget is unlimited, but the witness may vary.
pub fn search_antimagic(g: &Graph, budget: Option<u64>, threads: usize) -> SearchOutcome {
    let not_antimagic = |nodes| SearchOutcome { status: SearchStatus::NotAntimagic, labeling: None, nodes_explored: nodes };
    if let Feasibility::Infeasible { .. } = feasibility_filter(g, 0) {
        return not_antimagic(0);
    }
    let plan = plan(g);
    if plan.isolated.len() > 1 {
        return not_antimagic(0);
    }
    let m = g.edge_count();
    if m == 0 {
        let labeling = EdgeLabeling::new(g.clone(), Vec::new()).expect("empty labeling");
        return SearchOutcome { status: SearchStatus::Found, labeling: Some(labeling), nodes_explored: 0 };
    }

    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let budget_hit = AtomicBool::new(false);
    let shared = Shared { nodes: &nodes, stop: &stop, budget_hit: &budget_hit, budget };
    let threads = threads.clamp(1, m);

    let results: Vec<WorkerResult> = if threads == 1 {
        vec![Worker::new(g, &plan, &shared).run(1..=m)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let (plan, shared) = (&plan, &shared);
                    scope.spawn(move || {
                        let r = Worker::new(g, plan, shared).run((1..=m).skip(w).step_by(threads));
                        if matches!(r, WorkerResult::Found(_)) {
                            shared.stop.store(true, Ordering::Relaxed);
                        }
                        r
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        })
    };

    let nodes_explored = nodes.load(Ordering::Relaxed);
    for r in results {
        if let WorkerResult::Found(labels) = r {
            let labeling = EdgeLabeling::new(g.clone(), labels).expect("search assigns a bijection");
            debug_assert!(labeling.verify_antimagic().antimagic);
            return SearchOutcome { status: SearchStatus::Found, labeling: Some(labeling), nodes_explored };
        }
    }
    if budget_hit.load(Ordering::Relaxed) {
        SearchOutcome { status: SearchStatus::BudgetExceeded, labeling: None, nodes_explored }
    } else {
        not_antimagic(nodes_explored)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TauValue {
    /// `G` itself is not antimagic.
    MinusInfinity,
    Exact(usize),
    /// `G ∪ t'P3` was shown antimagic for every `t' <= t`; nothing more is known.
    LowerBound(usize),
    /// The budget ran out before `G` itself was decided.
    Undetermined,
}

#[derive(Debug, Clone, Serialize)]
pub struct TauResult {
    pub tau: TauValue,
    pub per_t: Vec<SearchOutcome>,
}

/// Searches `G ∪ tP3` for `t = 0, 1, …, t_max`, stopping at the first
/// non-antimagic `t`. `budget` caps the node total over all runs.
pub fn tau_exact(g: &Graph, t_max: usize, budget: Option<u64>) -> TauResult {
    let mut per_t = Vec::new();
    let mut spent = 0u64;
    for t in 0..=t_max {
        let host = build(&Family::Union(vec![Family::Explicit(g.clone()), Family::Paths3(t)]))
            .expect("union of a valid graph with paths is valid");
        let remaining = budget.map(|b| b.saturating_sub(spent));
        let out = search_antimagic(&host, remaining, 1);
        spent += out.nodes_explored;
        let status = out.status;
        per_t.push(out);
        match status {
            SearchStatus::Found => {}
            SearchStatus::NotAntimagic => {
                let tau = if t == 0 { TauValue::MinusInfinity } else { TauValue::Exact(t - 1) };
                return TauResult { tau, per_t };
            }
            SearchStatus::BudgetExceeded => {
                let tau = if t == 0 { TauValue::Undetermined } else { TauValue::LowerBound(t - 1) };
                return TauResult { tau, per_t };
            }
        }
    }
    TauResult { tau: TauValue::LowerBound(t_max), per_t }
}

fn distinct_sums(g: &Graph, labels: &[usize], phi: &mut [u64]) -> bool {
    phi.iter_mut().for_each(|p| *p = 0);
    for (e, &l) in g.edges().iter().zip(labels) {
        phi[e.0] += l as u64;
        phi[e.1] += l as u64;
    }
    let mut sorted = phi.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Tries every labeling in turn (Heap's algorithm). `nodes_explored` is the
/// number of permutations checked.
pub fn oracle_enumerate(g: &Graph) -> Result<SearchOutcome, SearchError> {
    let m = g.edge_count();
    if m > ORACLE_MAX_EDGES {
        return Err(SearchError::TooLarge { m, max: ORACLE_MAX_EDGES });
    }
    let mut labels: Vec<usize> = (1..=m).collect();
    let mut phi = vec![0u64; g.vertex_count()];
    let mut tried = 1u64;
    let found = |labels: &[usize], tried| {
        let labeling = EdgeLabeling::new(g.clone(), labels.to_vec()).expect("permutation of 1..m");
        Ok(SearchOutcome { status: SearchStatus::Found, labeling: Some(labeling), nodes_explored: tried })
    };
    if distinct_sums(g, &labels, &mut phi) {
        return found(&labels, tried);
    }
    let mut c = vec![0usize; m];
    let mut i = 1;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(0, i);
            } else {
                labels.swap(c[i], i);
            }
            tried += 1;
            if distinct_sums(g, &labels, &mut phi) {
                return found(&labels, tried);
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(SearchOutcome { status: SearchStatus::NotAntimagic, labeling: None, nodes_explored: tried })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::beta;

    fn g(f: Family) -> Graph {
        build(&f).unwrap()
    }

    fn corpus() -> Vec<(&'static str, Graph)> {
        vec![
            ("P2", g(Family::Path(2))),
            ("P3", g(Family::Path(3))),
            ("2P3", g(Family::Paths3(2))),
            ("P4", g(Family::Path(4))),
            ("C3", g(Family::Cycle(3))),
            ("C4", g(Family::Cycle(4))),
            ("C3+P3", g(Family::Union(vec![Family::Cycle(3), Family::Paths3(1)]))),
            ("star4", g(Family::Star(4))),
            ("S11", g(Family::DoubleStar(1, 1))),
        ]
    }

    #[test]
    fn search_matches_oracle() {
        for (name, graph) in corpus() {
            let s = search_antimagic(&graph, None, 1);
            let o = oracle_enumerate(&graph).unwrap();
            assert_eq!(s.status, o.status, "{name}");
            if let Some(l) = s.labeling {
                assert!(l.verify_antimagic().antimagic, "{name}");
            }
        }
    }

    #[test]
    fn two_p3_and_p2_are_not_antimagic() {
        assert_eq!(search_antimagic(&g(Family::Paths3(2)), None, 1).status, SearchStatus::NotAntimagic);
        assert_eq!(search_antimagic(&g(Family::Path(2)), None, 1).status, SearchStatus::NotAntimagic);
        let o = oracle_enumerate(&g(Family::Paths3(2))).unwrap();
        assert_eq!((o.status, o.nodes_explored), (SearchStatus::NotAntimagic, 24));
    }

    #[test]
    fn filter_short_circuits() {
        let graph = g(Family::Union(vec![Family::Cycle(3), Family::Paths3(9)]));
        let out = search_antimagic(&graph, None, 1);
        assert_eq!((out.status, out.nodes_explored), (SearchStatus::NotAntimagic, 0));
    }

    #[test]
    fn budget_is_never_reported_as_exhaustion() {
        let graph = g(Family::Union(vec![Family::Cycle(5), Family::Paths3(4)]));
        let out = search_antimagic(&graph, Some(3), 1);
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert_eq!(out.nodes_explored, 3);
    }

    #[test]
    fn thread_count_does_not_change_status() {
        for (name, graph) in corpus() {
            let one = search_antimagic(&graph, None, 1).status;
            for k in [2, 4] {
                assert_eq!(search_antimagic(&graph, None, k).status, one, "{name} k={k}");
            }
        }
    }

    #[test]
    fn single_thread_is_reproducible() {
        let graph = g(Family::Union(vec![Family::Cycle(4), Family::Paths3(3)]));
        let a = search_antimagic(&graph, None, 1);
        let b = search_antimagic(&graph, None, 1);
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.labeling, b.labeling);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_exact(&g(Family::Path(2)), 3, None).tau, TauValue::MinusInfinity);
        assert_eq!(tau_exact(&g(Family::Paths3(2)), 3, None).tau, TauValue::MinusInfinity);
        let c3 = tau_exact(&g(Family::Cycle(3)), 3, None);
        assert_eq!(c3.tau, TauValue::LowerBound(3));
        assert_eq!(c3.per_t.len(), 4);
        assert_eq!(tau_exact(&g(Family::Cycle(3)), 3, Some(0)).tau, TauValue::Undetermined);
    }

    #[test]
    fn found_t_never_exceeds_beta() {
        for base in [Family::Cycle(3), Family::Cycle(4), Family::Star(3), Family::DoubleStar(1, 2)] {
            let graph = g(base);
            let b = beta(&graph);
            let res = tau_exact(&graph, 3, Some(2_000_000));
            for (t, out) in res.per_t.iter().enumerate() {
                if out.status == SearchStatus::Found && b.valid {
                    assert!(t as i64 <= b.beta);
                }
            }
        }
    }

    #[test]
    fn oracle_size_limit() {
        assert_eq!(
            oracle_enumerate(&g(Family::Cycle(10))).unwrap_err(),
            SearchError::TooLarge { m: 10, max: 9 }
        );
    }
}
