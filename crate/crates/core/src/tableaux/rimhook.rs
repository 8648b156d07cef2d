//! Diagonal profiles, rim hooks, and the shape-level Fomin–Stanton map.
//!
//! Cell `(a, b)` (row `a`, column `b`, 0-based) lies on diagonal `b - a`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{IntegerPartition, RPartitePartition};
use crate::error::{Error, Result};

/// Number of cells on each diagonal; zero entries are not stored.
pub type DiagonalProfile = BTreeMap<i64, usize>;

pub fn diagonal_profile(lambda: &IntegerPartition) -> DiagonalProfile {
    let mut f = DiagonalProfile::new();
    for (a, b) in lambda.cells() {
        *f.entry(b as i64 - a as i64).or_insert(0) += 1;
    }
    f
}

/// The unique partition with profile `f`.
///
/// Diagonals `d >= 0` where the profile drops give the Frobenius arm
/// lengths; the mirrored drops on `d <= 0` give the leg lengths.
pub fn profile_to_partition(f: &DiagonalProfile) -> Result<IntegerPartition> {
    let at = |d: i64| f.get(&d).copied().unwrap_or(0);
    let hi = f.keys().next_back().copied().unwrap_or(0).max(0);
    let lo = f.keys().next().copied().unwrap_or(0).min(0);
    let arms: Vec<usize> = (0..=hi).rev().filter(|&d| at(d) > at(d + 1)).map(|d| d as usize).collect();
    let legs: Vec<usize> = (0..=-lo).rev().filter(|&d| at(-d) > at(-d - 1)).map(|d| d as usize).collect();
    if arms.len() != at(0) || legs.len() != at(0) {
        return Err(Error::InvalidProfile);
    }
    let rank = arms.len();
    let height = if rank == 0 { 0 } else { rank + legs[rank - 1].max(legs[0]) };
    let mut parts: Vec<usize> = (0..height)
        .map(|i| {
            if i < rank {
                i + 1 + arms[i]
            } else {
                (0..rank).filter(|&c| c + legs[c] >= i).count()
            }
        })
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    let lambda = IntegerPartition::new(parts).map_err(|_| Error::InvalidProfile)?;
    let mut clean = f.clone();
    clean.retain(|_, v| *v > 0);
    if diagonal_profile(&lambda) != clean {
        return Err(Error::InvalidProfile);
    }
    Ok(lambda)
}

/// Image of an r-partite partition in the `r`-rim hook lattice.
///
/// `f_μ(i) = Σ_{k=1..r} f_{λ_k}(⌊(i + k - 1) / r⌋)`.
pub fn fomin_stanton(lambdas: &RPartitePartition) -> IntegerPartition {
    let r = lambdas.r() as i64;
    if lambdas.is_empty() {
        return IntegerPartition::empty();
    }
    let profiles: Vec<DiagonalProfile> = lambdas.components().iter().map(diagonal_profile).collect();
    let lo = profiles.iter().filter_map(|p| p.keys().next()).min().copied().unwrap_or(0);
    let hi = profiles.iter().filter_map(|p| p.keys().next_back()).max().copied().unwrap_or(0);
    let mut mu = DiagonalProfile::new();
    for i in (lo - 1) * r..=(hi + 1) * r {
        let total: usize = profiles
            .iter()
            .enumerate()
            .map(|(k, p)| p.get(&(i + k as i64).div_euclid(r)).copied().unwrap_or(0))
            .sum();
        if total > 0 {
            mu.insert(i, total);
        }
    }
    profile_to_partition(&mu).expect("the profile formula lands in the rim hook lattice")
}

/// True when `outer / inner` is a skew shape of `r` edge-connected cells on distinct diagonals.
pub fn is_rim_hook(inner: &IntegerPartition, outer: &IntegerPartition, r: usize) -> bool {
    if !outer.contains(inner) || outer.size() != inner.size() + r {
        return false;
    }
    let cells: BTreeSet<(usize, usize)> = outer
        .cells()
        .filter(|&(a, b)| inner.parts().get(a).is_none_or(|&len| b >= len))
        .collect();
    let diagonals: BTreeSet<i64> = cells.iter().map(|&(a, b)| b as i64 - a as i64).collect();
    if diagonals.len() != cells.len() {
        return false;
    }
    let Some(&start) = cells.iter().next() else {
        return r == 0;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((a, b)) = queue.pop_front() {
        let neighbours = [
            (a.wrapping_sub(1), b),
            (a + 1, b),
            (a, b.wrapping_sub(1)),
            (a, b + 1),
        ];
        for nb in neighbours {
            if cells.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == cells.len()
}

fn add_boxes(lambda: &IntegerPartition, count: usize) -> BTreeSet<IntegerPartition> {
    let mut layer = BTreeSet::from([lambda.clone()]);
    for _ in 0..count {
        layer = layer.iter().flat_map(IntegerPartition::add_one).collect();
    }
    layer
}

/// Elements of the `r`-rim hook lattice of size at most `max_size`, found
/// by breadth-first search from the empty partition.
pub fn rim_hook_lattice(r: usize, max_size: usize) -> BTreeSet<IntegerPartition> {
    let mut found = BTreeSet::from([IntegerPartition::empty()]);
    let mut frontier = vec![IntegerPartition::empty()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for lambda in &frontier {
            if lambda.size() + r > max_size || r == 0 {
                continue;
            }
            for mu in add_boxes(lambda, r) {
                if is_rim_hook(lambda, &mu, r) && found.insert(mu.clone()) {
                    next.push(mu);
                }
            }
        }
        frontier = next;
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn ip(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn all_partitions(size: usize) -> Vec<IntegerPartition> {
        let mut layer = BTreeSet::from([IntegerPartition::empty()]);
        for _ in 0..size {
            layer = layer.iter().flat_map(IntegerPartition::add_one).collect();
        }
        layer.into_iter().collect()
    }

    fn r_partite(r: usize, total: usize) -> Vec<RPartitePartition> {
        let mut out = vec![RPartitePartition::empty(r)];
        for _ in 0..total {
            let next: BTreeSet<RPartitePartition> = out.iter().flat_map(RPartitePartition::add_one).collect();
            out = next.into_iter().collect();
        }
        out
    }

    #[test]
    fn profile_examples() {
        assert_eq!(diagonal_profile(&ip(&[2])), DiagonalProfile::from([(0, 1), (1, 1)]));
        assert_eq!(diagonal_profile(&ip(&[2, 1])), DiagonalProfile::from([(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(profile_to_partition(&DiagonalProfile::new()).unwrap(), IntegerPartition::empty());
        assert_eq!(
            profile_to_partition(&DiagonalProfile::from([(0, 2)])),
            Err(Error::InvalidProfile)
        );
        assert_eq!(
            profile_to_partition(&DiagonalProfile::from([(1, 1)])),
            Err(Error::InvalidProfile)
        );
        assert_eq!(
            profile_to_partition(&DiagonalProfile::from([(-1, 1), (0, 1), (2, 1)])),
            Err(Error::InvalidProfile)
        );
    }

    #[test]
    fn profile_round_trip() {
        for size in 0..=10 {
            for lambda in all_partitions(size) {
                assert_eq!(profile_to_partition(&diagonal_profile(&lambda)).unwrap(), lambda);
            }
        }
    }

    #[test]
    fn domino_examples() {
        let one = ip(&[1]);
        let e = IntegerPartition::empty();
        assert_eq!(fomin_stanton(&RPartitePartition::new(vec![one.clone(), e.clone()])), ip(&[2]));
        assert_eq!(fomin_stanton(&RPartitePartition::new(vec![e, one])), ip(&[1, 1]));
        assert_eq!(fomin_stanton(&RPartitePartition::empty(3)), IntegerPartition::empty());
    }

    #[test]
    fn rim_hook_recognition() {
        assert!(is_rim_hook(&ip(&[]), &ip(&[2]), 2));
        assert!(!is_rim_hook(&ip(&[1]), &ip(&[2, 1]), 2));
        assert!(is_rim_hook(&ip(&[1]), &ip(&[3]), 2));
        assert!(!is_rim_hook(&ip(&[]), &ip(&[2, 2]), 4));
        assert!(is_rim_hook(&ip(&[2]), &ip(&[2, 2]), 2));
        assert!(is_rim_hook(&ip(&[1, 1]), &ip(&[2, 2]), 2));
        assert!(!is_rim_hook(&ip(&[1]), &ip(&[2, 2]), 2));
    }

    #[test]
    fn rim_hook_lattice_sizes() {
        // 2-cores of size 0 only: RH_2 elements of size 2m are counted by bipartitions of m.
        let rh2 = rim_hook_lattice(2, 8);
        let by_size = rh2.iter().map(IntegerPartition::size).counts();
        assert_eq!(by_size[&0], 1);
        assert_eq!(by_size[&2], 2);
        assert_eq!(by_size[&4], 5);
        assert_eq!(by_size[&6], 10);
        assert_eq!(by_size[&8], 20);
        assert!(rh2.iter().all(|p| p.size() % 2 == 0));
    }

    #[test]
    fn fomin_stanton_is_a_size_matched_bijection_preserving_covers() {
        for r in 2..=3 {
            let lattice = rim_hook_lattice(r, 5 * r);
            for total in 0..=5 {
                let domain = r_partite(r, total);
                let images: BTreeSet<IntegerPartition> = domain.iter().map(fomin_stanton).collect();
                assert_eq!(images.len(), domain.len(), "injective r={r} total={total}");
                let expected: BTreeSet<IntegerPartition> =
                    lattice.iter().filter(|p| p.size() == r * total).cloned().collect();
                assert_eq!(images, expected, "onto r={r} total={total}");
                for lambdas in &domain {
                    let mu = fomin_stanton(lambdas);
                    assert_eq!(mu.size(), r * lambdas.size());
                    assert_eq!(lambdas.max_rows(), mu.rows().div_ceil(r));
                    assert_eq!(lambdas.max_cols(), mu.cols().div_ceil(r));
                    if total < 5 {
                        for bigger in lambdas.add_one() {
                            assert!(is_rim_hook(&mu, &fomin_stanton(&bigger), r));
                        }
                    }
                }
            }
        }
    }
}
