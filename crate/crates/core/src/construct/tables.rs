//! Hand-found base labelings shipped as labeling files under `data/tables`.
//!
//! Each file carries metadata comments: `source`, `t`, `host-edges` (the
//! host cycles occupy the first that many edge positions), `threshold` (the
//! printed `t + s - l` value, where the table has that column) and
//! `underlined` (the two labels the row marks as satisfying an extension
//! hypothesis).

use serde::Serialize;

use super::{ConstructError, HostedLabeling};
use crate::bounds::threshold;
use crate::io::parse_labeling_with_meta;
use crate::labeling::{check_threshold_hypothesis, check_two_largest_hypothesis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TableFamily {
    /// `C3 ∪ tP3` for `0 <= t <= 6`.
    C3,
    /// `C_n ∪ tP3` for `3 <= n <= 9` and `t` in that cycle's window.
    Cycle,
    /// `2C3 ∪ tP3` for `9 <= t <= 15`.
    TwoC3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Hypothesis {
    TwoLargest,
    Threshold,
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub family: TableFamily,
    /// Host vertex count (3 for `C3`, 6 for `2C3`).
    pub n: usize,
    pub t: usize,
    pub source: String,
    pub printed_threshold: Option<i64>,
    pub underlined: Vec<usize>,
    pub hosted: HostedLabeling,
}

impl TableRow {
    /// Hypotheses the row is annotated with: two-largest when the underlined
    /// labels are `m'` and `m' - 1`, threshold for every row of the cycle
    /// table and the `2C3` rows beyond `t = 13`.
    pub fn annotated_hypotheses(&self) -> Vec<Hypothesis> {
        let m = self.hosted.labeling.edge_count();
        let mut und = self.underlined.clone();
        und.sort_unstable();
        let mut out = Vec::new();
        if und == [m - 1, m] {
            out.push(Hypothesis::TwoLargest);
        }
        if self.family == TableFamily::Cycle || (self.family == TableFamily::TwoC3 && self.t >= 14) {
            out.push(Hypothesis::Threshold);
        }
        out
    }

    /// Problems found when re-validating the row: the labeling must be
    /// antimagic, the printed `t + s - l` must match the formula, and each
    /// annotated hypothesis must hold on the underlined labels. Empty when
    /// the row is sound.
    pub fn check(&self) -> Vec<String> {
        let h = &self.hosted;
        let l = &h.labeling;
        let mut problems = Vec::new();
        if !l.verify_antimagic().antimagic {
            problems.push("labeling is not antimagic".to_string());
        }
        let (n, m) = h.host_size();
        if let Some(p) = self.printed_threshold {
            let want = threshold(n as i64, m as i64, self.t as i64);
            if p != want {
                problems.push(format!("printed threshold {p} differs from t + s - l = {want}"));
            }
        }
        let mut und = self.underlined.clone();
        und.sort_unstable();
        let pair = |e1: usize, e2: usize| {
            let mut v = vec![l.label(e1), l.label(e2)];
            v.sort_unstable();
            v
        };
        let inc = l.graph().incidence();
        for hyp in self.annotated_hypotheses() {
            let ok = match hyp {
                Hypothesis::TwoLargest => {
                    check_two_largest_hypothesis(l).iter().any(|&v| pair(inc[v][0], inc[v][1]) == und)
                }
                Hypothesis::Threshold => check_threshold_hypothesis(l, &h.host_edges, self.t)
                    .iter()
                    .any(|q| pair(q.edges.0, q.edges.1) == und),
            };
            if !ok {
                problems.push(format!("{hyp:?} hypothesis fails on underlined labels {und:?}"));
            }
        }
        problems
    }
}

macro_rules! table_files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/tables/", $name, ".lbl")))),*]
    };
}

/// `(file stem, contents)` for every shipped row.
pub const TABLE_FILES: &[(&str, &str)] = table_files![
    "table1_t0", "table1_t1", "table1_t2", "table1_t3", "table1_t4", "table1_t5", "table1_t6",
    "table2_n3_t7", "table2_n3_t8", "table2_n4_t9", "table2_n4_t10",
    "table2_n5_t11", "table2_n5_t12", "table2_n5_t13", "table2_n6_t14", "table2_n6_t15",
    "table2_n7_t16", "table2_n7_t17", "table2_n7_t18", "table2_n8_t19", "table2_n8_t20",
    "table2_n9_t21", "table2_n9_t22",
    "table3_t9", "table3_t10", "table3_t11", "table3_t12", "table3_t13", "table3_t14", "table3_t15",
];

fn meta<'a>(m: &'a [(String, String)], key: &str) -> Option<&'a str> {
    m.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

fn parse_row(stem: &str, text: &str) -> Result<TableRow, ConstructError> {
    let bad = |what: &str| ConstructError::Table(format!("{stem}: {what}"));
    let (labeling, m) = parse_labeling_with_meta(text).map_err(|e| bad(&e.to_string()))?;
    let num = |key: &str| -> Result<usize, ConstructError> {
        meta(&m, key).ok_or_else(|| bad(&format!("missing `{key}`")))?.parse().map_err(|_| bad(key))
    };
    let t = num("t")?;
    let host_m = num("host-edges")?;
    let family = match stem.split('_').next() {
        Some("table1") => TableFamily::C3,
        Some("table2") => TableFamily::Cycle,
        Some("table3") => TableFamily::TwoC3,
        _ => return Err(bad("unknown table")),
    };
    let printed_threshold = meta(&m, "threshold").map(|v| v.parse().map_err(|_| bad("threshold"))).transpose()?;
    let underlined = meta(&m, "underlined")
        .unwrap_or("")
        .split_whitespace()
        .map(|v| v.parse().map_err(|_| bad("underlined")))
        .collect::<Result<Vec<usize>, _>>()?;
    Ok(TableRow {
        family,
        n: host_m,
        t,
        source: meta(&m, "source").unwrap_or(stem).to_string(),
        printed_threshold,
        underlined,
        hosted: HostedLabeling { labeling, host_edges: (0..host_m).collect(), t },
    })
}

pub fn all_rows() -> Result<Vec<TableRow>, ConstructError> {
    TABLE_FILES.iter().map(|(stem, text)| parse_row(stem, text)).collect()
}

/// The shipped row for `family` with host size `n` and `t` paths. `n` is
/// ignored for `C3` (always 3) and `TwoC3` (always 6).
pub fn embedded_table(family: TableFamily, n: usize, t: usize) -> Result<HostedLabeling, ConstructError> {
    let stem = match family {
        TableFamily::C3 => format!("table1_t{t}"),
        TableFamily::Cycle => format!("table2_n{n}_t{t}"),
        TableFamily::TwoC3 => format!("table3_t{t}"),
    };
    let (_, text) = TABLE_FILES
        .iter()
        .find(|(s, _)| *s == stem)
        .ok_or(ConstructError::MissingRow { family, n, t })?;
    Ok(parse_row(&stem, text)?.hosted)
}

/// Cycle length whose window of the cycle table contains `t`.
pub fn cycle_base_for(t: usize) -> Option<usize> {
    match t {
        7..=8 => Some(3),
        9..=10 => Some(4),
        11..=13 => Some(5),
        14..=15 => Some(6),
        16..=18 => Some(7),
        19..=20 => Some(8),
        21..=22 => Some(9),
        _ => None,
    }
}
