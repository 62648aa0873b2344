//! Fixed inputs shared by the benchmarks.

use antimagic::graph::{build, Family, Graph};

/// Small instances for the exhaustive search, named for reporting.
pub fn search_inputs() -> Vec<(&'static str, Graph)> {
    let union = |parts: Vec<Family>| build(&Family::Union(parts)).expect("valid union");
    vec![
        ("2P3", build(&Family::Paths3(2)).expect("valid")),
        ("C3+2P3", union(vec![Family::Cycle(3), Family::Paths3(2)])),
        ("C4+3P3", union(vec![Family::Cycle(4), Family::Paths3(3)])),
        ("star5+2P3", union(vec![Family::Star(5), Family::Paths3(2)])),
    ]
}
