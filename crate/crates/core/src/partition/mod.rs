//! Set partitions of `[n]`, their arc representation, and arc colorings.
//!
//! A block `{b_1 < b_2 < ... < b_m}` contributes the arcs `(b_1,b_2), ...,
//! (b_{m-1},b_m)`. A colored partition labels every arc with a color in
//! `[r]`; crossings and nestings only count arcs of a single color.

mod count;
mod enumerate;
mod format;
mod stats;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use count::{
    count_ncn_brute, is_symmetric, joint_distribution, joint_distributions_by_endpoints, Histogram,
};
pub use enumerate::{enumerate_colored, set_partitions, EndpointFilter, SetPartitions};
pub(crate) use enumerate::Colorings;
pub(crate) use format::{fields, parse_arc_list};
pub use format::ColoredPartitionJson;
pub use stats::{
    chain_stats, colored_stats, cr_ne_oracle, longest_crossing, longest_nesting, CrossNestStats,
};

/// Set of points of `[n]`.
pub type PointSet = BTreeSet<usize>;

/// An arc `(left, right)` of the standard representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub fn new(left: usize, right: usize) -> Self {
        Arc { left, right }
    }
}

/// A partition of `[n]` in canonical form: blocks sorted by their minimum,
/// elements ascending inside each block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange { point: x, n });
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("{x} appears twice")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("{missing} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// The partition of `[n]` into `n` singletons.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    /// Builds a partition from a restricted growth string (0-based labels).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (idx, &label) in rgs.iter().enumerate() {
            if label == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[label].push(idx + 1);
        }
        SetPartition {
            n: rgs.len(),
            blocks,
        }
    }

    /// Reconstructs the unique partition of `[n]` whose arc set is `arcs`.
    pub fn from_arcs(n: usize, arcs: &[Arc]) -> Result<Self> {
        let mut next = vec![0usize; n + 1];
        let mut has_pred = vec![false; n + 1];
        for a in arcs {
            for p in [a.left, a.right] {
                if p == 0 || p > n {
                    return Err(Error::OutOfRange { point: p, n });
                }
            }
            if a.left >= a.right {
                return Err(Error::InvalidPartition(format!(
                    "arc ({}, {}) is not increasing",
                    a.left, a.right
                )));
            }
            if next[a.left] != 0 {
                return Err(Error::DuplicateEndpoint {
                    side: "left",
                    point: a.left,
                });
            }
            if has_pred[a.right] {
                return Err(Error::DuplicateEndpoint {
                    side: "right",
                    point: a.right,
                });
            }
            next[a.left] = a.right;
            has_pred[a.right] = true;
        }
        let blocks = (1..=n)
            .filter(|&x| !has_pred[x])
            .map(|start| {
                let mut block = vec![start];
                let mut cur = start;
                while next[cur] != 0 {
                    cur = next[cur];
                    block.push(cur);
                }
                block
            })
            .collect();
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Arcs of the standard representation, sorted by left endpoint.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut arcs: Vec<Arc> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| Arc::new(w[0], w[1])))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn arc_count(&self) -> usize {
        self.n - self.blocks.len()
    }

    pub fn min_set(&self) -> PointSet {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn max_set(&self) -> PointSet {
        self.blocks.iter().map(|b| b[b.len() - 1]).collect()
    }

    /// `(min, max)`: the sets of block minima and block maxima.
    pub fn endpoints(&self) -> (PointSet, PointSet) {
        (self.min_set(), self.max_set())
    }

    /// Points that are both a block minimum and maximum.
    pub fn isolated_points(&self) -> PointSet {
        self.blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect()
    }

    pub fn is_matching(&self) -> bool {
        self.blocks.iter().all(|b| b.len() <= 2)
    }
}

/// A set partition together with a coloring of its arcs by `[r]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredSetPartition {
    partition: SetPartition,
    arcs: Vec<Arc>,
    colors: Vec<usize>,
    r: usize,
}

impl ColoredSetPartition {
    /// `colors[t]` is the color of the `t`-th arc of `partition.arcs()`.
    pub fn new(partition: SetPartition, colors: Vec<usize>, r: usize) -> Result<Self> {
        let arcs = partition.arcs();
        if colors.len() != arcs.len() {
            return Err(Error::InvalidPartition(format!(
                "{} colors for {} arcs",
                colors.len(),
                arcs.len()
            )));
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::ColorOutOfRange { color, r });
        }
        Ok(ColoredSetPartition {
            partition,
            arcs,
            colors,
            r,
        })
    }

    /// Every arc colored 1, with `r = 1`.
    pub fn uncolored(partition: SetPartition) -> Self {
        let arcs = partition.arcs();
        let colors = vec![1; arcs.len()];
        ColoredSetPartition {
            partition,
            arcs,
            colors,
            r: 1,
        }
    }

    /// Builds from `(left, right, color)` triples.
    pub fn from_colored_arcs(n: usize, r: usize, triples: &[(usize, usize, usize)]) -> Result<Self> {
        let mut sorted = triples.to_vec();
        sorted.sort_unstable();
        let arcs: Vec<Arc> = sorted.iter().map(|&(i, j, _)| Arc::new(i, j)).collect();
        let partition = SetPartition::from_arcs(n, &arcs)?;
        Self::new(partition, sorted.iter().map(|t| t.2).collect(), r)
    }

    pub(crate) fn from_parts_unchecked(
        partition: SetPartition,
        arcs: Vec<Arc>,
        colors: Vec<usize>,
        r: usize,
    ) -> Self {
        ColoredSetPartition {
            partition,
            arcs,
            colors,
            r,
        }
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn colored_arcs(&self) -> impl Iterator<Item = (Arc, usize)> + '_ {
        self.arcs.iter().copied().zip(self.colors.iter().copied())
    }

    /// Color of `arc`, if it is an arc of the partition.
    pub fn color_of(&self, arc: Arc) -> Option<usize> {
        self.arcs
            .binary_search(&arc)
            .ok()
            .map(|idx| self.colors[idx])
    }

    pub fn min_set(&self) -> PointSet {
        self.partition.min_set()
    }

    pub fn max_set(&self) -> PointSet {
        self.partition.max_set()
    }

    /// Splits into `r` uncolored partitions, component `t` holding the arcs of color `t + 1`.
    pub fn split_colors(&self) -> Vec<SetPartition> {
        (1..=self.r)
            .map(|t| {
                let arcs: Vec<Arc> = self
                    .colored_arcs()
                    .filter(|&(_, c)| c == t)
                    .map(|(a, _)| a)
                    .collect();
                SetPartition::from_arcs(self.n(), &arcs).expect("sub-arc set of a partition")
            })
            .collect()
    }

    /// Inverse of [`split_colors`](Self::split_colors).
    pub fn merge_colors(parts: &[SetPartition]) -> Result<Self> {
        let n = parts.first().map_or(0, |p| p.n);
        if parts.iter().any(|p| p.n != n) {
            return Err(Error::InvalidPartition(
                "components have different ground sets".into(),
            ));
        }
        let mut left_used = vec![false; n + 1];
        let mut right_used = vec![false; n + 1];
        let mut triples = Vec::new();
        for (t, part) in parts.iter().enumerate() {
            for a in part.arcs() {
                if left_used[a.left] {
                    return Err(Error::EndpointClash {
                        side: "left",
                        point: a.left,
                    });
                }
                if right_used[a.right] {
                    return Err(Error::EndpointClash {
                        side: "right",
                        point: a.right,
                    });
                }
                left_used[a.left] = true;
                right_used[a.right] = true;
                triples.push((a.left, a.right, t + 1));
            }
        }
        Self::from_colored_arcs(n, parts.len().max(1), &triples)
    }

    /// Same arcs and colors, viewed with a larger palette.
    pub fn with_r(&self, r: usize) -> Result<Self> {
        Self::new(self.partition.clone(), self.colors.clone(), r)
    }
}
