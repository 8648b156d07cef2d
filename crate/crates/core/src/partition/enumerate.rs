//! Deterministic enumeration of (colored) set partitions.
//!
//! Partitions come in restricted-growth-string order; within one partition
//! the color vectors run lexicographically, last arc fastest.

use super::{Arc, ColoredSetPartition, PointSet, SetPartition};

/// Restricts enumeration to partitions with prescribed block minima and maxima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndpointFilter {
    pub min: PointSet,
    pub max: PointSet,
}

impl EndpointFilter {
    pub fn new(min: PointSet, max: PointSet) -> Self {
        EndpointFilter { min, max }
    }

    pub fn accepts(&self, p: &SetPartition) -> bool {
        p.min_set() == self.min && p.max_set() == self.max
    }
}

/// Iterator over all set partitions of `[n]` in restricted-growth order.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[0..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for t in i + 1..n {
                    self.rgs[t] = 0;
                    self.prefix_max[t] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_rgs(&self.rgs);
        self.advance();
        Some(current)
    }
}

pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions::new(n)
}

/// All color vectors in `[r]^len`, lexicographically.
pub(crate) struct Colorings {
    current: Vec<usize>,
    r: usize,
    done: bool,
}

impl Colorings {
    pub(crate) fn new(len: usize, r: usize) -> Self {
        Colorings {
            current: vec![1; len],
            r,
            done: r == 0 && len > 0,
        }
    }
}

impl Iterator for Colorings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = true;
        for slot in self.current.iter_mut().rev() {
            if *slot < self.r {
                *slot += 1;
                self.done = false;
                break;
            }
            *slot = 1;
        }
        Some(out)
    }
}

/// Every colored partition of `[n]` with colors in `[r]`, each exactly once.
pub fn enumerate_colored(
    n: usize,
    r: usize,
    filter: Option<&EndpointFilter>,
) -> impl Iterator<Item = ColoredSetPartition> + '_ {
    set_partitions(n)
        .filter(move |p| filter.is_none_or(|f| f.accepts(p)))
        .flat_map(move |p| colorings_of(p, r))
}

pub(crate) fn colorings_of(p: SetPartition, r: usize) -> impl Iterator<Item = ColoredSetPartition> {
    let arcs: Vec<Arc> = p.arcs();
    Colorings::new(arcs.len(), r)
        .map(move |colors| ColoredSetPartition::from_parts_unchecked(p.clone(), arcs.clone(), colors, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bell numbers from the triangle recurrence.
    fn bell(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let last = *next.last().unwrap();
                next.push(last + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        for n in 0..=9 {
            assert_eq!(set_partitions(n).count() as u64, bell(n), "n={n}");
        }
    }

    #[test]
    fn partitions_are_distinct_and_round_trip_through_arcs() {
        for n in 0..=8 {
            let all: Vec<SetPartition> = set_partitions(n).collect();
            let distinct: std::collections::BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            for p in &all {
                assert_eq!(&SetPartition::from_arcs(n, &p.arcs()).unwrap(), p);
                let rights: PointSet = p.arcs().iter().map(|a| a.right).collect();
                let lefts: PointSet = p.arcs().iter().map(|a| a.left).collect();
                let all_points: PointSet = (1..=n).collect();
                assert_eq!(&all_points - &p.min_set(), rights);
                assert_eq!(&all_points - &p.max_set(), lefts);
            }
        }
    }

    #[test]
    fn first_partitions_in_rgs_order() {
        let first: Vec<Vec<Vec<usize>>> = set_partitions(3).map(|p| p.blocks().to_vec()).collect();
        assert_eq!(
            first,
            vec![
                vec![vec![1, 2, 3]],
                vec![vec![1, 2], vec![3]],
                vec![vec![1, 3], vec![2]],
                vec![vec![1], vec![2, 3]],
                vec![vec![1], vec![2], vec![3]],
            ]
        );
    }

    #[test]
    fn colored_counts() {
        assert_eq!(enumerate_colored(2, 3, None).count(), 4);
        assert_eq!(enumerate_colored(0, 5, None).count(), 1);
        assert_eq!(enumerate_colored(3, 2, None).count(), 11);
        for n in 0..=5 {
            for r in 1..=3usize {
                let expected: usize = set_partitions(n).map(|p| r.pow(p.arc_count() as u32)).sum();
                assert_eq!(enumerate_colored(n, r, None).count(), expected);
            }
        }
    }

    #[test]
    fn filter_selects_endpoint_class() {
        let f = EndpointFilter::new(PointSet::from([1, 2]), PointSet::from([2, 3]));
        let hits: Vec<_> = enumerate_colored(3, 1, Some(&f)).collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].partition().blocks(), &[vec![1, 3], vec![2]]);
        let impossible = EndpointFilter::new(PointSet::new(), PointSet::new());
        assert_eq!(enumerate_colored(3, 2, Some(&impossible)).count(), 0);
    }

    #[test]
    fn split_merge_round_trip() {
        for n in 0..=6 {
            for r in 1..=2 {
                for lam in enumerate_colored(n, r, None) {
                    let parts = lam.split_colors();
                    for a in 0..parts.len() {
                        for b in a + 1..parts.len() {
                            let all: PointSet = (1..=n).collect();
                            assert_eq!(&parts[a].min_set() | &parts[b].min_set(), all);
                            assert_eq!(&parts[a].max_set() | &parts[b].max_set(), all);
                        }
                    }
                    assert_eq!(ColoredSetPartition::merge_colors(&parts).unwrap(), lam);
                }
            }
        }
    }
}
