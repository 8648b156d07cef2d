//! Walks in `N^r` with steps `±e_i`, `e_i - e_j` and `r + 1` kinds of zero step.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::BigCount;

type Point = Vec<usize>;

fn moves(r: usize) -> Vec<(usize, usize)> {
    // (from, to) coordinate pairs; `r` stands for "outside", so (r, i) is +e_i,
    // (i, r) is -e_i, and (i, j) moves one unit from coordinate i to j.
    let mut out = Vec::new();
    for a in 0..=r {
        for b in 0..=r {
            if a != b {
                out.push((a, b));
            }
        }
    }
    out
}

fn apply(p: &Point, from: usize, to: usize, r: usize) -> Option<Point> {
    let mut q = p.clone();
    if from < r {
        q[from] = q[from].checked_sub(1)?;
    }
    if to < r {
        q[to] += 1;
    }
    Some(q)
}

/// `C_n(r)` for `n = 0..=max_n`: walks of `n - 1` steps from the origin back
/// to itself in `N^r`, with `C_0 = 1`.
///
/// One forward pass of `max_n - 1` steps serves every `n`; points whose
/// coordinate sum exceeds the remaining number of steps are dropped, since
/// each step changes that sum by at most one.
pub fn colored_nc_sequence(r: usize, max_n: usize) -> Vec<BigCount> {
    let mut out = vec![BigCount::one()];
    if max_n == 0 {
        return out;
    }
    let total_steps = max_n - 1;
    let zero_weight = (r + 1) as u32;
    let origin: Point = vec![0; r];
    let mut current: HashMap<Point, BigCount> = HashMap::from([(origin.clone(), BigCount::one())]);
    out.push(BigCount::one());
    let step_list = moves(r);
    for t in 1..=total_steps {
        let remaining = total_steps - t;
        let mut next: HashMap<Point, BigCount> = HashMap::with_capacity(current.len() * 2);
        for (p, count) in &current {
            let mut add = |q: Point, weight: u32| {
                if q.iter().sum::<usize>() <= remaining {
                    *next.entry(q).or_insert_with(BigCount::zero) += count * weight;
                }
            };
            add(p.clone(), zero_weight);
            for &(from, to) in &step_list {
                if let Some(q) = apply(p, from, to, r) {
                    add(q, 1);
                }
            }
        }
        current = next;
        out.push(current.get(&origin).cloned().unwrap_or_default());
    }
    out
}

pub fn count_colored_nc(r: usize, n: usize) -> BigCount {
    colored_nc_sequence(r, n).pop().expect("at least one term")
}

/// Total weight of all `m`-step walks from the origin, either confined to
/// `N^r` or free in `Z^r`.
pub fn orthant_walk_mass(r: usize, m: usize, confined: bool) -> BigCount {
    let mut current: HashMap<Vec<i64>, BigCount> = HashMap::from([(vec![0; r], BigCount::one())]);
    let step_list = moves(r);
    for _ in 0..m {
        let mut next: HashMap<Vec<i64>, BigCount> = HashMap::new();
        for (p, count) in &current {
            *next.entry(p.clone()).or_insert_with(BigCount::zero) += count * (r as u32 + 1);
            for &(from, to) in &step_list {
                let mut q = p.clone();
                if from < r {
                    q[from] -= 1;
                }
                if to < r {
                    q[to] += 1;
                }
                if !confined || q.iter().all(|&x| x >= 0) {
                    *next.entry(q).or_insert_with(BigCount::zero) += count;
                }
            }
        }
        current = next;
    }
    current.values().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::count_ncn_brute;
    use crate::Bound;
    use num_traits::Pow;

    fn bigs(v: &[u64]) -> Vec<BigCount> {
        v.iter().map(|&x| BigCount::from(x)).collect()
    }

    #[test]
    fn catalan_and_two_colors() {
        assert_eq!(colored_nc_sequence(1, 5), bigs(&[1, 1, 2, 5, 14, 42]));
        assert_eq!(
            colored_nc_sequence(2, 9),
            bigs(&[1, 1, 3, 11, 47, 225, 1173, 6529, 38265, 233795])
        );
        assert_eq!(count_colored_nc(3, 4), BigCount::from(106u32));
        assert_eq!(count_colored_nc(1, 0), BigCount::one());
    }

    #[test]
    fn pruned_prefix_agrees_with_longer_run() {
        let long = colored_nc_sequence(2, 20);
        for (n, value) in long.iter().enumerate() {
            assert_eq!(&count_colored_nc(2, n), value);
        }
    }

    #[test]
    fn matches_brute_force() {
        for n in 0..=6 {
            for r in 1..=2 {
                assert_eq!(
                    count_colored_nc(r, n),
                    count_ncn_brute(n, r, Bound::At(2), Bound::Unbounded, None)
                );
            }
        }
    }

    #[test]
    fn walk_mass() {
        for r in 1..=3usize {
            let mut previous = BigCount::one();
            for m in 0..=6usize {
                let free = orthant_walk_mass(r, m, false);
                assert_eq!(free, BigCount::from(r + 1).pow(2 * m));
                let confined = orthant_walk_mass(r, m, true);
                assert!(confined <= free);
                if m >= 1 {
                    assert!(confined < free);
                    assert!(confined <= &previous * BigCount::from((r + 1) * (r + 1)));
                }
                previous = confined;
            }
        }
    }
}
