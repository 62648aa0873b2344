//! Antimagic labelings of `J(C3, r) ∪ tP3` for `r >= 11` and
//! `0 <= t <= 6r + 22`.
//!
//! Edge layout follows [`Family::Jellyfish`] then [`Family::Paths3`]: the
//! three cycle edges, the `r` pendants of each cycle vertex in turn, then
//! two edges per path. Path `c` has center vertex `3 + 3r + 3c + 1`.

use super::partition::{le_par_partition, BlockFamily};
use super::{ConstructError, HostedLabeling};
use crate::graph::{build, Family};
use crate::labeling::EdgeLabeling;

/// Pendant labels fixed for the even (or `t = 3`) case, per cycle vertex.
/// Each set sums to 59, lifting the partial sums 17, 18, 19 to 76, 77, 78.
const FIXED_PENDANTS: [[usize; 4]; 3] = [[1, 17, 20, 21], [12, 13, 16, 18], [11, 14, 15, 19]];
/// Labels of the first three paths when `t >= 3`; centers get 8, 9, 10.
const FIXED_PATHS: [(usize, usize); 3] = [(2, 6), (4, 5), (3, 7)];

struct Builder {
    r: usize,
    labels: Vec<usize>,
}

impl Builder {
    fn cycle(&mut self, i: usize, label: usize) {
        self.labels[i] = label;
    }

    fn pendants(&mut self, v: usize, labels: &[usize]) {
        let base = 3 + v * self.r;
        for (j, &l) in labels.iter().enumerate() {
            self.labels[base + j] = l;
        }
    }

    fn path(&mut self, c: usize, (a, b): (usize, usize)) {
        let base = 3 + 3 * self.r + 2 * c;
        self.labels[base] = a;
        self.labels[base + 1] = b;
    }

    /// Completes the pendants by pairing the cycle vertices' partial sums
    /// `[first, first + 2]` with consecutive label blocks of width 3 starting
    /// at `from`. Vertex `v` currently has partial sum `partial[v]` and
    /// `filled` pendants already placed.
    fn pendant_blocks(&mut self, partial: [usize; 3], first: usize, from: usize, filled: usize) -> Result<(), ConstructError> {
        let blocks = self.r - filled;
        let mut starts = vec![first as i64];
        starts.extend((0..blocks).map(|b| (from + 3 * b) as i64));
        let part = le_par_partition(&BlockFamily::new(starts, 3))?;
        for (v, &p) in partial.iter().enumerate() {
            let j = part.part_with(0, p as i64).expect("each partial sum lies in the first block");
            let base = 3 + v * self.r + filled;
            for (b, &x) in part.parts[j][1..].iter().enumerate() {
                self.labels[base + b] = x as usize;
            }
        }
        Ok(())
    }
}

pub fn build_jellyfish_c3_labeling(r: usize, t: usize) -> Result<HostedLabeling, ConstructError> {
    if r < 11 {
        return Err(ConstructError::Domain(format!("jellyfish construction needs r >= 11, got {r}")));
    }
    if t > 6 * r + 22 {
        return Err(ConstructError::Domain(format!("t = {t} exceeds 6r + 22 = {}", 6 * r + 22)));
    }
    let graph = build(&Family::Union(vec![Family::Jellyfish { k: 3, r }, Family::Paths3(t)]))?;
    let m = graph.edge_count();
    let mut b = Builder { r, labels: vec![0; m] };

    if t <= 2 {
        // cycle gets m, m-1, m-2; partial sums 2m-2, 2m-1, 2m-3 on v0, v1, v2
        b.cycle(0, m);
        b.cycle(1, m - 1);
        b.cycle(2, m - 2);
        for c in 0..t {
            b.path(c, (m - 4 - 2 * c, m - 3 - 2 * c));
        }
        b.pendant_blocks([2 * m - 2, 2 * m - 1, 2 * m - 3], 2 * m - 3, 1, 0)?;
    } else {
        for (c, &p) in FIXED_PATHS.iter().enumerate() {
            b.path(c, p);
        }
        // partial sums 17, 18, 19 on v0, v1, v2
        b.cycle(0, 8);
        b.cycle(1, 10);
        b.cycle(2, 9);
        let odd = t % 2 == 1 && t != 3;
        if odd {
            b.pendant_blocks([17, 18, 19], 17, 11, 0)?;
        } else {
            for (v, set) in FIXED_PENDANTS.iter().enumerate() {
                b.pendants(v, set);
            }
            b.pendant_blocks([76, 77, 78], 76, 22, 4)?;
        }

        let mut next_path = 3;
        if odd {
            b.path(3, (1, m));
            next_path = 4;
        }
        let (lo, hi) = if odd { (3 * r + 11, 3 * r + t + 7) } else { (3 * r + 10, 3 * r + t + 7) };
        let width = t - next_path;
        if width > 0 {
            let part = le_par_partition(&BlockFamily::new(vec![lo as i64, hi as i64], width))?;
            for (c, pair) in part.parts.iter().enumerate() {
                b.path(next_path + c, (pair[0] as usize, pair[1] as usize));
            }
        }
    }

    let labeling = EdgeLabeling::new(graph, b.labels)
        .map_err(|e| ConstructError::Internal(format!("jellyfish r={r} t={t}: {e}")))?;
    super::ensure_antimagic(&labeling, "jellyfish")?;
    Ok(HostedLabeling { labeling, host_edges: (0..3 + 3 * r).collect(), t })
}

/// Vertex sums `[lo, hi]` the paths paired in the last step must cover.
pub fn paired_path_range(r: usize, t: usize) -> (usize, usize) {
    (6 * r + t + 15 + t.div_ceil(2), 6 * r + 2 * t + 11 + t / 2)
}

/// Cycle vertex sums for `t >= 3`: `(3r² + 19r + 28)/2 ..` when `t` is even
/// or 3, `(3r² + 21r + 34)/2 ..` when `t` is odd.
pub fn cycle_sum_start(r: usize, t: usize) -> usize {
    if t % 2 == 1 && t != 3 {
        (3 * r * r + 21 * r + 34) / 2
    } else {
        (3 * r * r + 19 * r + 28) / 2
    }
}
