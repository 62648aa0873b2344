//! Splitting a family of equal-width integer blocks into transversals whose
//! sums are consecutive integers.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("at least one block is required")]
    NoBlocks,
    #[error("block width must be at least 1")]
    ZeroWidth,
    #[error("{blocks} blocks of width {width}: block count and width are both even")]
    BothEven { blocks: usize, width: usize },
}

/// Blocks `[a_i, a_i + width - 1]`, one per start.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockFamily {
    pub starts: Vec<i64>,
    pub width: usize,
}

impl BlockFamily {
    pub fn new(starts: Vec<i64>, width: usize) -> Self {
        BlockFamily { starts, width }
    }

    pub fn block(&self, i: usize) -> std::ops::RangeInclusive<i64> {
        self.starts[i]..=self.starts[i] + self.width as i64 - 1
    }
}

/// `parts[j][i]` is the element part `j` takes from block `i`. Parts are
/// ordered by ascending sum, and the sums are consecutive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    pub parts: Vec<Vec<i64>>,
}

impl BlockPartition {
    pub fn sums(&self) -> Vec<i64> {
        self.parts.iter().map(|p| p.iter().sum()).collect()
    }

    /// Index of the part that took `value` from block `block`.
    pub fn part_with(&self, block: usize, value: i64) -> Option<usize> {
        self.parts.iter().position(|p| p[block] == value)
    }
}

/// Builds the partition from a `blocks × width` matrix: odd rows (1-based)
/// ascending, even rows descending, so consecutive row pairs have constant
/// column sums. With an even number of blocks the second row is rotated to
/// start at `a_2 + (width+1)/2`, which makes the first two rows' column sums
/// consecutive. Columns are the parts.
pub fn le_par_partition(family: &BlockFamily) -> Result<BlockPartition, PartitionError> {
    let n = family.starts.len();
    let k = family.width;
    if n == 0 {
        return Err(PartitionError::NoBlocks);
    }
    if k == 0 {
        return Err(PartitionError::ZeroWidth);
    }
    if n.is_multiple_of(2) && k.is_multiple_of(2) {
        return Err(PartitionError::BothEven { blocks: n, width: k });
    }
    let kk = k as i64;
    let rows: Vec<Vec<i64>> = family
        .starts
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if i == 1 && n.is_multiple_of(2) {
                let half = (kk + 1) / 2;
                (0..kk).map(|j| a + (half + j) % kk).collect()
            } else if i % 2 == 0 {
                (0..kk).map(|j| a + j).collect()
            } else {
                (0..kk).map(|j| a + kk - 1 - j).collect()
            }
        })
        .collect();
    let mut parts: Vec<Vec<i64>> = (0..k).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    parts.sort_by_key(|p| p.iter().sum::<i64>());
    Ok(BlockPartition { parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Expected sum of the j-th part (1-based): a_1 + j - 1 + (sum of the
    /// other blocks) / width.
    fn formula_sum(f: &BlockFamily, j: usize) -> i64 {
        let rest: i64 = (1..f.starts.len()).flat_map(|i| f.block(i)).sum();
        assert_eq!(rest % f.width as i64, 0);
        f.starts[0] + j as i64 - 1 + rest / f.width as i64
    }

    #[test]
    fn two_blocks_of_three() {
        let f = BlockFamily::new(vec![1, 4], 3);
        let p = le_par_partition(&f).unwrap();
        assert_eq!(p.sums(), vec![6, 7, 8]);
        // second row rotated to (6, 4, 5)
        assert_eq!(p.parts, vec![vec![2, 4], vec![1, 6], vec![3, 5]]);
    }

    #[test]
    fn single_block() {
        let p = le_par_partition(&BlockFamily::new(vec![7], 4)).unwrap();
        assert_eq!(p.parts, vec![vec![7], vec![8], vec![9], vec![10]]);
    }

    #[test]
    fn rejects_both_even() {
        assert_eq!(
            le_par_partition(&BlockFamily::new(vec![1, 3], 2)),
            Err(PartitionError::BothEven { blocks: 2, width: 2 })
        );
        assert_eq!(le_par_partition(&BlockFamily::new(vec![], 3)), Err(PartitionError::NoBlocks));
        assert_eq!(le_par_partition(&BlockFamily::new(vec![1], 0)), Err(PartitionError::ZeroWidth));
    }

    #[test]
    fn overlapping_blocks_are_allowed() {
        let f = BlockFamily::new(vec![1, 1, 2], 2);
        let p = le_par_partition(&f).unwrap();
        let sums = p.sums();
        assert_eq!(sums, vec![formula_sum(&f, 1), formula_sum(&f, 2)]);
    }

    fn family() -> impl Strategy<Value = BlockFamily> {
        (1usize..=8, 1usize..=9)
            .prop_filter("not both even", |(n, k)| n % 2 == 1 || k % 2 == 1)
            .prop_flat_map(|(n, k)| (prop::collection::vec(-50i64..=50, n), Just(k)))
            .prop_map(|(starts, k)| BlockFamily::new(starts, k))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn partition_contract(f in family()) {
            let p = le_par_partition(&f).unwrap();
            prop_assert_eq!(p.parts.len(), f.width);
            for part in &p.parts {
                prop_assert_eq!(part.len(), f.starts.len());
                for (i, x) in part.iter().enumerate() {
                    prop_assert!(f.block(i).contains(x));
                }
            }
            let mut got: Vec<i64> = p.parts.iter().flatten().copied().collect();
            let mut want: Vec<i64> = (0..f.starts.len()).flat_map(|i| f.block(i)).collect();
            got.sort_unstable();
            want.sort_unstable();
            prop_assert_eq!(got, want);
            for (j, s) in p.sums().into_iter().enumerate() {
                prop_assert_eq!(s, formula_sum(&f, j + 1));
            }
        }
    }
}
