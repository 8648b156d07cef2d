//! Crossing and nesting numbers computed directly from arcs.
//!
//! A set of arcs is a k-crossing (k-nesting) exactly when there is a cut
//! point `c` with every left endpoint `<= c` and every right endpoint `> c`,
//! and the right endpoints increase (decrease) when the arcs are listed by
//! left endpoint. The largest such set is therefore a longest monotone
//! subsequence of right endpoints among the arcs spanning some cut.

use serde::{Deserialize, Serialize};

use super::{Arc, ColoredSetPartition};

/// Largest crossing and nesting sizes. Both are 0 exactly when there are no arcs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrossNestStats {
    pub cr: usize,
    pub ne: usize,
}

impl CrossNestStats {
    pub fn new(cr: usize, ne: usize) -> Self {
        CrossNestStats { cr, ne }
    }

    pub fn max(self, other: Self) -> Self {
        CrossNestStats {
            cr: self.cr.max(other.cr),
            ne: self.ne.max(other.ne),
        }
    }

    pub fn transpose(self) -> Self {
        CrossNestStats {
            cr: self.ne,
            ne: self.cr,
        }
    }
}

fn longest_monotone(values: &[usize], increasing: bool) -> usize {
    let mut best = vec![1usize; values.len()];
    for i in 0..values.len() {
        for j in 0..i {
            let ok = if increasing {
                values[j] < values[i]
            } else {
                values[j] > values[i]
            };
            if ok && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Crossing/nesting numbers of a single-colored arc set.
///
/// With `relaxed`, the middle inequality becomes `<=`, which is the
/// enhanced statistic (loops `(i, i)` are allowed).
pub fn chain_stats(arcs: &[Arc], relaxed: bool) -> CrossNestStats {
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    let mut stats = CrossNestStats::default();
    for cut in sorted.iter().map(|a| a.left) {
        let rights: Vec<usize> = sorted
            .iter()
            .filter(|a| a.left <= cut && (a.right > cut || (relaxed && a.right == cut)))
            .map(|a| a.right)
            .collect();
        stats.cr = stats.cr.max(longest_monotone(&rights, true));
        stats.ne = stats.ne.max(longest_monotone(&rights, false));
    }
    stats
}

pub fn longest_crossing(arcs: &[Arc]) -> usize {
    chain_stats(arcs, false).cr
}

pub fn longest_nesting(arcs: &[Arc]) -> usize {
    chain_stats(arcs, false).ne
}

/// Statistics of arcs with parallel colors: max over color classes.
pub fn colored_stats(arcs: &[Arc], colors: &[usize], relaxed: bool) -> CrossNestStats {
    let mut palette: Vec<usize> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    palette
        .into_iter()
        .map(|c| {
            let class: Vec<Arc> = arcs
                .iter()
                .zip(colors)
                .filter(|&(_, &col)| col == c)
                .map(|(a, _)| *a)
                .collect();
            chain_stats(&class, relaxed)
        })
        .fold(CrossNestStats::default(), CrossNestStats::max)
}

/// `(cr, ne)` of a colored partition, counting only monochromatic patterns.
pub fn cr_ne_oracle(lambda: &ColoredSetPartition) -> CrossNestStats {
    colored_stats(lambda.arcs(), lambda.colors(), false)
}
