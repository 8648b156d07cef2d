//! Brute-force counters over the enumeration, parallel across partitions.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::enumerate::Colorings;
use super::{colored_stats, set_partitions, Arc, CrossNestStats, EndpointFilter, PointSet, SetPartition};
use crate::{BigCount, Bound};

/// Joint `(cr, ne)` histogram.
pub type Histogram = BTreeMap<(usize, usize), BigCount>;

/// True when the histogram is invariant under swapping `cr` and `ne`.
pub fn is_symmetric(h: &Histogram) -> bool {
    h.iter().all(|(&(c, e), v)| h.get(&(e, c)) == Some(v))
}

fn stats_per_coloring(p: &SetPartition, r: usize) -> impl Iterator<Item = CrossNestStats> + '_ {
    let arcs: Vec<Arc> = p.arcs();
    Colorings::new(arcs.len(), r).map(move |colors| colored_stats(&arcs, &colors, false))
}

fn partitions_matching(n: usize, filter: Option<&EndpointFilter>) -> Vec<SetPartition> {
    set_partitions(n)
        .filter(|p| filter.is_none_or(|f| f.accepts(p)))
        .collect()
}

/// Number of `r`-colored partitions of `[n]` with `cr < j` and `ne < k`.
pub fn count_ncn_brute(n: usize, r: usize, j: Bound, k: Bound, filter: Option<&EndpointFilter>) -> BigCount {
    let total: u128 = partitions_matching(n, filter)
        .par_iter()
        .map(|p| {
            stats_per_coloring(p, r)
                .filter(|s| j.admits(s.cr) && k.admits(s.ne))
                .count() as u128
        })
        .sum();
    BigCount::from(total)
}

fn histogram_of(p: &SetPartition, r: usize) -> BTreeMap<(usize, usize), u64> {
    let mut h = BTreeMap::new();
    for s in stats_per_coloring(p, r) {
        *h.entry((s.cr, s.ne)).or_insert(0u64) += 1;
    }
    h
}

fn add_into(acc: &mut BTreeMap<(usize, usize), u64>, other: BTreeMap<(usize, usize), u64>) {
    for (key, v) in other {
        *acc.entry(key).or_insert(0) += v;
    }
}

fn to_big(h: BTreeMap<(usize, usize), u64>) -> Histogram {
    h.into_iter().map(|(key, v)| (key, BigCount::from(v))).collect()
}

/// Joint `(cr, ne)` histogram over colored partitions with `min = s`, `max = t`.
pub fn joint_distribution(n: usize, r: usize, s: &PointSet, t: &PointSet) -> Histogram {
    let filter = EndpointFilter::new(s.clone(), t.clone());
    let merged = partitions_matching(n, Some(&filter))
        .par_iter()
        .map(|p| histogram_of(p, r))
        .reduce(BTreeMap::new, |mut a, b| {
            add_into(&mut a, b);
            a
        });
    to_big(merged)
}

/// Histograms for every realized `(min, max)` pair, in one pass.
pub fn joint_distributions_by_endpoints(n: usize, r: usize) -> BTreeMap<(PointSet, PointSet), Histogram> {
    type Acc = BTreeMap<(PointSet, PointSet), BTreeMap<(usize, usize), u64>>;
    let merged: Acc = set_partitions(n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|p| {
            let mut acc = Acc::new();
            acc.insert(p.endpoints(), histogram_of(p, r));
            acc
        })
        .reduce(Acc::new, |mut a, b| {
            for (key, h) in b {
                add_into(a.entry(key).or_default(), h);
            }
            a
        });
    merged.into_iter().map(|(key, h)| (key, to_big(h))).collect()
}
