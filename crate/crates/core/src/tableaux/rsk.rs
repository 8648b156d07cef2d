//! Schensted shapes and the map from colored partitions to vacillating tableaux.

use std::collections::{BTreeSet, HashMap};

use super::{IntegerPartition, RPartitePartition, RPartiteTableau};
use crate::error::{Error, Result};
use crate::partition::{enumerate_colored, ColoredSetPartition};

/// Shape of the insertion tableau of `seq` under Schensted row insertion.
///
/// The first row has the length of a longest increasing subsequence and the
/// number of rows equals the length of a longest decreasing subsequence.
pub fn rsk_shape(seq: &[usize]) -> Result<IntegerPartition> {
    let mut seen = BTreeSet::new();
    if let Some(&dup) = seq.iter().find(|&&x| !seen.insert(x)) {
        return Err(Error::DuplicateEntry(dup));
    }
    Ok(insertion_shape(seq))
}

fn insertion_shape(seq: &[usize]) -> IntegerPartition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in seq {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y < carry);
            if pos == row.len() {
                row.push(carry);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut carry);
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    IntegerPartition(rows.iter().map(Vec::len).collect())
}

/// The length-`2n` vacillating r-partite tableau of `lam`.
///
/// For color `t`, the word `a^t` has letter `j` at position `2i` when
/// `(i, j)` is an arc of color `t`, and 0 elsewhere. Entry `k` of the
/// tableau is the Schensted shape of the prefix `a^t_1 ... a^t_k` after
/// dropping letters `<= (k + 1) / 2`.
pub fn to_vacillating(lam: &ColoredSetPartition) -> RPartiteTableau {
    let n = lam.n();
    let r = lam.r();
    let mut words = vec![vec![0usize; 2 * n + 1]; r];
    for (arc, color) in lam.colored_arcs() {
        words[color - 1][2 * arc.left] = arc.right;
    }
    let steps = (0..=2 * n)
        .map(|k| {
            let threshold = k.div_ceil(2);
            RPartitePartition(
                words
                    .iter()
                    .map(|w| {
                        let pi: Vec<usize> = w[1..=k].iter().copied().filter(|&x| x > threshold).collect();
                        insertion_shape(&pi)
                    })
                    .collect(),
            )
        })
        .collect();
    RPartiteTableau::from_steps_unchecked(steps)
}

/// Every vacillating tableau of length `2n` with `r` components, keyed to
/// its preimage under [`to_vacillating`].
pub fn vacillating_preimages(n: usize, r: usize) -> HashMap<RPartiteTableau, ColoredSetPartition> {
    enumerate_colored(n, r, None).map(|lam| (to_vacillating(&lam), lam)).collect()
}

/// Preimage of a vacillating tableau, found by searching the enumerated domain.
pub fn from_vacillating(t: &RPartiteTableau) -> Result<ColoredSetPartition> {
    let steps = t.steps();
    if steps.len().is_multiple_of(2) {
        return Err(Error::NotATableau("vacillating tableaux have odd length".into()));
    }
    let n = steps.len() / 2;
    enumerate_colored(n, t.r(), None)
        .find(|lam| to_vacillating(lam) == *t)
        .ok_or_else(|| Error::NotATableau(format!("{t} is not a vacillating tableau")))
}

/// The colored partition whose tableau is the componentwise conjugate of
/// the tableau of `lam`. Swaps `cr` with `ne` and keeps the endpoint sets.
pub fn transpose_partition(lam: &ColoredSetPartition) -> ColoredSetPartition {
    from_vacillating(&to_vacillating(lam).transpose()).expect("conjugation preserves vacillating tableaux")
}

/// Semi-oscillating tableau of length `n` for a colored matching of `[n]`.
pub fn matching_to_semioscillating(m: &ColoredSetPartition) -> Result<RPartiteTableau> {
    if !m.partition().is_matching() {
        return Err(Error::NotAMatching(m.to_string()));
    }
    Ok(to_vacillating(m).even_steps())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{cr_ne_oracle, enumerate_colored, SetPartition};
    use crate::tableaux::{enumerate_tableaux, tableau_stats, TableauClass};

    fn ip(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn longest(seq: &[usize], increasing: bool) -> usize {
        let mut best = vec![1usize; seq.len()];
        for i in 0..seq.len() {
            for j in 0..i {
                if (seq[j] < seq[i]) == increasing && best[j] + 1 > best[i] {
                    best[i] = best[j] + 1;
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    #[test]
    fn shapes_of_small_words() {
        assert_eq!(rsk_shape(&[8, 5, 6]).unwrap(), ip(&[2, 1]));
        assert_eq!(rsk_shape(&[]).unwrap(), IntegerPartition::empty());
        assert_eq!(rsk_shape(&[3, 2, 1]).unwrap(), ip(&[1, 1, 1]));
        assert_eq!(rsk_shape(&[1, 2, 3]).unwrap(), ip(&[3]));
        assert_eq!(rsk_shape(&[1, 2, 1]), Err(Error::DuplicateEntry(1)));
    }

    #[test]
    fn shape_records_monotone_subsequences() {
        use itertools::Itertools;
        for len in 0..=7 {
            for word in (1..=7).permutations(len) {
                let shape = rsk_shape(&word).unwrap();
                assert_eq!(shape.cols(), longest(&word, true), "{word:?}");
                assert_eq!(shape.rows(), longest(&word, false), "{word:?}");
                assert_eq!(shape.size(), len);
            }
        }
    }

    fn worked_example() -> ColoredSetPartition {
        "n=8; arcs=1-4:1,4-5:2,5-8:1,2-6:2,6-7:1".parse().unwrap()
    }

    #[test]
    fn worked_example_table() {
        let e = IntegerPartition::empty();
        let one = ip(&[1]);
        let col = ip(&[1, 1]);
        let first = [
            &e, &e, &one, &one, &one, &one, &one, &e, &e, &e, &one, &one, &col, &one, &one, &e, &e,
        ];
        let second = [
            &e, &e, &e, &e, &one, &one, &one, &one, &col, &one, &one, &e, &e, &e, &e, &e, &e,
        ];
        let t = to_vacillating(&worked_example());
        assert_eq!(t.steps().len(), 17);
        for k in 0..17 {
            assert_eq!(t.steps()[k].components(), &[first[k].clone(), second[k].clone()], "k={k}");
        }
        assert!(t.is(TableauClass::Vacillating));
        assert_eq!(tableau_stats(&t), crate::partition::CrossNestStats::new(1, 2));
    }

    #[test]
    fn transposed_worked_example() {
        let lam = worked_example();
        let mu = transpose_partition(&lam);
        assert_eq!(cr_ne_oracle(&mu), crate::partition::CrossNestStats::new(2, 1));
        assert_eq!(mu.min_set(), lam.min_set());
        assert_eq!(mu.max_set(), lam.max_set());
        assert_eq!(transpose_partition(&mu), lam);
        assert!(from_vacillating(&RPartiteTableau::new(vec![RPartitePartition::empty(1); 2]).unwrap()).is_err());
    }

    #[test]
    fn small_images() {
        let lone = ColoredSetPartition::uncolored(SetPartition::singletons(1));
        let t = to_vacillating(&lone.with_r(3).unwrap());
        assert_eq!(t.steps(), &[RPartitePartition::empty(3), RPartitePartition::empty(3), RPartitePartition::empty(3)]);
        let arc: ColoredSetPartition = "n=2; arcs=1-2".parse().unwrap();
        let shapes: Vec<IntegerPartition> = to_vacillating(&arc)
            .steps()
            .iter()
            .map(|s| s.components()[0].clone())
            .collect();
        assert_eq!(shapes, vec![ip(&[]), ip(&[]), ip(&[1]), ip(&[]), ip(&[])]);
    }

    #[test]
    fn matching_example() {
        let m = ColoredSetPartition::uncolored(
            SetPartition::new(8, vec![vec![1, 8], vec![2, 5], vec![3], vec![4, 6], vec![7]]).unwrap(),
        );
        let t = matching_to_semioscillating(&m).unwrap();
        let shapes: Vec<IntegerPartition> = t.steps().iter().map(|s| s.components()[0].clone()).collect();
        let expected: Vec<IntegerPartition> = [
            &[][..], &[1], &[1, 1], &[1, 1], &[2, 1], &[1, 1], &[1], &[1], &[],
        ]
        .iter()
        .map(|p| ip(p))
        .collect();
        assert_eq!(shapes, expected);
        let singles = ColoredSetPartition::uncolored(SetPartition::singletons(3));
        assert_eq!(matching_to_semioscillating(&singles).unwrap().steps(), &vec![RPartitePartition::empty(1); 4][..]);
        let pair: ColoredSetPartition = "n=2; arcs=1-2".parse().unwrap();
        let t = matching_to_semioscillating(&pair).unwrap();
        assert!(t.is(TableauClass::Oscillating));
        let chain: ColoredSetPartition = "n=3; arcs=1-2,2-3".parse().unwrap();
        assert!(matches!(matching_to_semioscillating(&chain), Err(Error::NotAMatching(_))));
    }

    #[test]
    fn bijection_onto_vacillating_tableaux() {
        for n in 0..=4 {
            for r in 1..=2 {
                let images: BTreeSet<RPartiteTableau> =
                    enumerate_colored(n, r, None).map(|lam| to_vacillating(&lam)).collect();
                let count = enumerate_colored(n, r, None).count();
                assert_eq!(images.len(), count);
                let all: BTreeSet<RPartiteTableau> =
                    enumerate_tableaux(2 * n, r, TableauClass::Vacillating, None, None).into_iter().collect();
                assert_eq!(images, all, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn statistics_and_markers_transport() {
        for n in 0..=5 {
            for r in 1..=2 {
                for lam in enumerate_colored(n, r, None) {
                    let t = to_vacillating(&lam);
                    assert_eq!(tableau_stats(&t), cr_ne_oracle(&lam));
                    let steps = t.steps();
                    for i in 1..=n {
                        assert_eq!(lam.min_set().contains(&i), steps[2 * i - 2] == steps[2 * i - 1]);
                        assert_eq!(lam.max_set().contains(&i), steps[2 * i - 1] == steps[2 * i]);
                    }
                }
            }
        }
    }
}
