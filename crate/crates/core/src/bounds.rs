//! Exact upper bounds on how many disjoint 3-paths an antimagic graph can
//! absorb, and the label-sum quantities they are built from.
//!
//! For a host graph with `n` vertices and `m` edges joined with `t` copies
//! of P3:
//!
//! * `s(m, t)` is the sum of every available label, `1 + 2 + ... + (m + 2t)`.
//! * `l(n, m, t)` is the least possible total of the `t + n - m` vertex sums
//!   that are forced above `m + 2t`.
//!
//! An antimagic labeling needs `s >= l`. No floating point is used here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::graph::Graph;
use crate::sqrt2::SqrtTwoNumber;

/// `2t² + (2m+1)t + m(m+1)/2`, the sum of `1..=m+2t`.
pub fn sum_s(m: i64, t: i64) -> i64 {
    2 * t * t + (2 * m + 1) * t + m * (m + 1) / 2
}

/// `(t+n-m)(5t+n+m+1)/2`. Returned raw, so it is negative when
/// `t + n - m < 0`; callers wanting a clamped sum do that themselves.
pub fn least_l(n: i64, m: i64, t: i64) -> i64 {
    // the two factors differ by 4t+2m+1, so exactly one of them is even
    (t + n - m) * (5 * t + n + m + 1) / 2
}

/// Minimum label on two incident host edges for the threshold extension.
pub fn threshold(n: i64, m: i64, t: i64) -> i64 {
    t + sum_s(m, t) - least_l(n, m, t)
}

/// Largest vertex sum any antimagic labeling of the host joined with `t`
/// copies of P3 can have.
pub fn max_phi_ceiling(n: i64, m: i64, t: i64) -> i64 {
    n + 3 * t + sum_s(m, t) - least_l(n, m, t)
}

pub fn floor_sqrt2(x: &SqrtTwoNumber) -> BigInt {
    x.floor()
}

/// `(3 + 2√2)(m − n) + (1 + √2)(m + ½)`.
pub fn first_bound(n: i64, m: i64) -> SqrtTwoNumber {
    let d = m - n;
    // (3d + m + 1/2) + (2d + m + 1/2)√2
    SqrtTwoNumber::from_fractions(2 * (3 * d + m) + 1, 2, 2 * (2 * d + m) + 1, 2)
}

/// `2m + 5(k − t') + 1`.
pub fn second_bound(m: i64, k: i64, p3_components: i64) -> i64 {
    2 * m + 5 * (k - p3_components) + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvalidReason {
    IsolatedVertex,
    P2Component,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: i64,
    pub m: i64,
    pub k: i64,
    pub p3_components: i64,
    pub bound_first: SqrtTwoNumber,
    pub bound_first_floor: i64,
    pub bound_second: i64,
    pub beta: i64,
    /// False when the graph has an isolated vertex or a P2 component; the
    /// numbers are still filled in but the upper bound does not apply.
    pub valid: bool,
    pub invalid_reasons: Vec<InvalidReason>,
}

impl BoundReport {
    pub fn s_at(&self, t: i64) -> i64 {
        sum_s(self.m, t)
    }

    pub fn l_at(&self, t: i64) -> i64 {
        least_l(self.n, self.m, t)
    }
}

fn to_i64(x: BigInt) -> i64 {
    x.to_i64().expect("bound does not fit in i64")
}

pub fn beta(g: &Graph) -> BoundReport {
    let summary = g.summarize_components();
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let k = summary.internal_edge_count as i64;
    let p3 = summary.p3_count as i64;

    let bound_first = first_bound(n, m);
    let bound_first_floor = to_i64(bound_first.floor());
    let bound_second = second_bound(m, k, p3);

    let mut invalid_reasons = Vec::new();
    if summary.isolated_vertex_count > 0 {
        invalid_reasons.push(InvalidReason::IsolatedVertex);
    }
    if summary.has_p2 {
        invalid_reasons.push(InvalidReason::P2Component);
    }
    BoundReport {
        n,
        m,
        k,
        p3_components: p3,
        bound_first,
        bound_first_floor,
        bound_second,
        beta: bound_first_floor.min(bound_second),
        valid: invalid_reasons.is_empty(),
        invalid_reasons,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Feasibility {
    Feasible,
    /// `s < l`: the union with `t` copies of P3 cannot be antimagic.
    Infeasible { s: i64, l: i64 },
}

pub fn feasibility_filter(g: &Graph, t: i64) -> Feasibility {
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let (s, l) = (sum_s(m, t), least_l(n, m, t));
    if s < l {
        Feasibility::Infeasible { s, l }
    } else {
        Feasibility::Feasible
    }
}

/// `⌊(1 + √2)(n + ½)⌋`, the bound for any 2-regular graph on `n` vertices.
pub fn two_regular_beta(n: i64) -> i64 {
    to_i64(SqrtTwoNumber::from_fractions(2 * n + 1, 2, 2 * n + 1, 2).floor())
}

/// Rational helper for formula checks: `num/den` as a [`BigRational`].
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}
