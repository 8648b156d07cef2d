//! Integer partitions, r-partite partitions, and tableaux built from them.
//!
//! An r-partite tableau is a walk in the r-fold Young lattice from the
//! empty tuple back to itself, changing at most one box per step.

mod enumerate;
mod format;
mod rimhook;
mod rsk;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::CrossNestStats;

pub use enumerate::enumerate_tableaux;
pub use rimhook::{
    diagonal_profile, fomin_stanton, is_rim_hook, profile_to_partition, rim_hook_lattice,
    DiagonalProfile,
};
pub use rsk::{
    from_vacillating, matching_to_semioscillating, rsk_shape, to_vacillating, transpose_partition, vacillating_preimages,
};

/// A weakly decreasing list of positive parts; the empty list is the empty partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegerPartition(Vec<usize>);

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(IntegerPartition(parts))
    }

    pub fn empty() -> Self {
        IntegerPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn cols(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        IntegerPartition((1..=self.cols()).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Self) -> bool {
        other.rows() <= self.rows() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)`, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(a, &len)| (0..len).map(move |b| (a, b)))
    }

    /// Partitions obtained by adding one box, in increasing row order.
    pub fn add_one(&self) -> Vec<Self> {
        (0..=self.rows())
            .filter(|&i| i == 0 || self.0[i - 1] > self.0.get(i).copied().unwrap_or(0))
            .map(|i| {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                IntegerPartition(parts)
            })
            .collect()
    }

    /// Partitions obtained by removing one box, in increasing row order.
    pub fn remove_one(&self) -> Vec<Self> {
        (0..self.rows())
            .filter(|&i| self.0.get(i + 1).copied().unwrap_or(0) < self.0[i])
            .map(|i| {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                IntegerPartition(parts)
            })
            .collect()
    }
}

/// A tuple of `r` integer partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RPartitePartition(Vec<IntegerPartition>);

impl RPartitePartition {
    pub fn new(components: Vec<IntegerPartition>) -> Self {
        RPartitePartition(components)
    }

    pub fn empty(r: usize) -> Self {
        RPartitePartition(vec![IntegerPartition::empty(); r])
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[IntegerPartition] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(IntegerPartition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(IntegerPartition::is_empty)
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.r() == other.r() && self.0.iter().zip(&other.0).all(|(a, b)| a.contains(b))
    }

    pub fn conjugate(&self) -> Self {
        RPartitePartition(self.0.iter().map(IntegerPartition::conjugate).collect())
    }

    pub fn max_rows(&self) -> usize {
        self.0.iter().map(IntegerPartition::rows).max().unwrap_or(0)
    }

    pub fn max_cols(&self) -> usize {
        self.0.iter().map(IntegerPartition::cols).max().unwrap_or(0)
    }

    fn replace(&self, t: usize, comp: IntegerPartition) -> Self {
        let mut out = self.clone();
        out.0[t] = comp;
        out
    }

    /// All tuples one box larger, ordered by component then row.
    pub fn add_one(&self) -> Vec<Self> {
        (0..self.r())
            .flat_map(|t| self.0[t].add_one().into_iter().map(move |c| (t, c)))
            .map(|(t, c)| self.replace(t, c))
            .collect()
    }

    /// All tuples one box smaller, ordered by component then row.
    pub fn remove_one(&self) -> Vec<Self> {
        (0..self.r())
            .flat_map(|t| self.0[t].remove_one().into_iter().map(move |c| (t, c)))
            .map(|(t, c)| self.replace(t, c))
            .collect()
    }
}

/// One of the step-constraint classes a tableau can satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableauClass {
    /// Any step adds a box, removes a box, or stays.
    SemiOscillating,
    /// Step `i` may only grow when `i` is even and only shrink when `i` is odd.
    Vacillating,
    /// Every step changes exactly one box.
    Oscillating,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Move {
    Stay,
    Add,
    Remove,
}

fn classify_move(prev: &RPartitePartition, next: &RPartitePartition) -> Option<Move> {
    if prev.r() != next.r() {
        return None;
    }
    let (a, b) = (prev.size(), next.size());
    if a == b {
        (prev == next).then_some(Move::Stay)
    } else if b == a + 1 {
        next.contains(prev).then_some(Move::Add)
    } else if a == b + 1 {
        prev.contains(next).then_some(Move::Remove)
    } else {
        None
    }
}

/// The classes satisfied by a step sequence, or `NotATableau`.
pub fn classify(steps: &[RPartitePartition]) -> Result<BTreeSet<TableauClass>> {
    let (first, last) = match (steps.first(), steps.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::NotATableau("no steps".into())),
    };
    if !first.is_empty() || !last.is_empty() {
        return Err(Error::NotATableau("endpoints must be empty".into()));
    }
    let mut moves = Vec::with_capacity(steps.len());
    for (i, w) in steps.windows(2).enumerate() {
        let mv = classify_move(&w[0], &w[1])
            .ok_or_else(|| Error::NotATableau(format!("step {} is not a single-box move", i + 1)))?;
        moves.push(mv);
    }
    let mut classes = BTreeSet::from([TableauClass::SemiOscillating]);
    let vacillating = moves.iter().enumerate().all(|(idx, &mv)| {
        let i = idx + 1;
        if i % 2 == 0 {
            mv != Move::Remove
        } else {
            mv != Move::Add
        }
    });
    if vacillating {
        classes.insert(TableauClass::Vacillating);
    }
    if moves.iter().all(|&mv| mv != Move::Stay) {
        classes.insert(TableauClass::Oscillating);
    }
    Ok(classes)
}

/// A validated sequence `(λ⁰, ..., λᵐ)` of r-partite partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPartiteTableau {
    steps: Vec<RPartitePartition>,
}

impl RPartiteTableau {
    pub fn new(steps: Vec<RPartitePartition>) -> Result<Self> {
        classify(&steps)?;
        Ok(RPartiteTableau { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<RPartitePartition>) -> Self {
        RPartiteTableau { steps }
    }

    pub fn steps(&self) -> &[RPartitePartition] {
        &self.steps
    }

    /// Number of steps `m`; the sequence has `m + 1` entries.
    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn r(&self) -> usize {
        self.steps[0].r()
    }

    pub fn classes(&self) -> BTreeSet<TableauClass> {
        classify(&self.steps).expect("validated on construction")
    }

    pub fn is(&self, class: TableauClass) -> bool {
        self.classes().contains(&class)
    }

    /// Step indices `i` in `1..=m` with `λ^{i-1} = λ^i`.
    pub fn stay_positions(&self) -> BTreeSet<usize> {
        (1..self.steps.len())
            .filter(|&i| self.steps[i - 1] == self.steps[i])
            .collect()
    }

    /// Conjugates every component of every step.
    pub fn transpose(&self) -> Self {
        RPartiteTableau {
            steps: self.steps.iter().map(RPartitePartition::conjugate).collect(),
        }
    }

    /// Every other entry starting at `λ⁰`.
    pub fn even_steps(&self) -> Self {
        RPartiteTableau {
            steps: self.steps.iter().step_by(2).cloned().collect(),
        }
    }
}

/// Widest component (`cr`) and tallest component (`ne`) over all steps.
pub fn tableau_stats(t: &RPartiteTableau) -> CrossNestStats {
    t.steps.iter().fold(CrossNestStats::default(), |acc, s| {
        acc.max(CrossNestStats::new(s.max_cols(), s.max_rows()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ip(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn single(shapes: &[&[usize]]) -> Vec<RPartitePartition> {
        shapes.iter().map(|p| RPartitePartition::new(vec![ip(p)])).collect()
    }

    #[test]
    fn integer_partition_basics() {
        assert!(IntegerPartition::new(vec![1, 2]).is_err());
        assert!(IntegerPartition::new(vec![2, 0]).is_err());
        let p = ip(&[3, 1]);
        assert_eq!(p.size(), 4);
        assert_eq!(p.conjugate(), ip(&[2, 1, 1]));
        assert_eq!(ip(&[3]).conjugate(), ip(&[1, 1, 1]));
        assert_eq!(p.add_one(), vec![ip(&[4, 1]), ip(&[3, 2]), ip(&[3, 1, 1])]);
        assert_eq!(p.remove_one(), vec![ip(&[2, 1]), ip(&[3])]);
        assert_eq!(IntegerPartition::empty().add_one(), vec![ip(&[1])]);
        assert!(IntegerPartition::empty().remove_one().is_empty());
    }

    #[test]
    fn classify_examples() {
        let semi = single(&[&[], &[1], &[1, 1], &[1, 1], &[2, 1], &[1, 1], &[1], &[1], &[]]);
        assert_eq!(classify(&semi).unwrap(), BTreeSet::from([TableauClass::SemiOscillating]));
        assert_eq!(
            classify(&single(&[&[], &[]])).unwrap(),
            BTreeSet::from([TableauClass::SemiOscillating, TableauClass::Vacillating])
        );
        assert!(matches!(classify(&single(&[&[], &[2]])), Err(Error::NotATableau(_))));
        assert!(matches!(classify(&single(&[&[1]])), Err(Error::NotATableau(_))));
        assert!(matches!(classify(&single(&[&[], &[1], &[2]])), Err(Error::NotATableau(_))));
        let osc = single(&[&[], &[1], &[]]);
        assert!(classify(&osc).unwrap().contains(&TableauClass::Oscillating));
    }

    #[test]
    fn stats_of_shapes() {
        let t = RPartiteTableau::new(single(&[&[], &[1], &[2], &[2, 1], &[2], &[1], &[]])).unwrap();
        assert_eq!(tableau_stats(&t), CrossNestStats::new(2, 2));
        let flat = RPartiteTableau::new(single(&[&[], &[], &[]])).unwrap();
        assert_eq!(tableau_stats(&flat), CrossNestStats::new(0, 0));
    }

    #[test]
    fn transpose_examples() {
        let small = RPartiteTableau::new(single(&[&[], &[1], &[1], &[]])).unwrap();
        assert_eq!(small.transpose(), small);
        let tall = RPartiteTableau::new(single(&[&[], &[1], &[2], &[3], &[2], &[1], &[]])).unwrap();
        let transposed = tall.transpose();
        assert_eq!(transposed.steps()[3].components()[0], ip(&[1, 1, 1]));
        assert_eq!(transposed.classes(), tall.classes());
        assert_eq!(tableau_stats(&transposed), tableau_stats(&tall).transpose());
        assert_eq!(transposed.transpose(), tall);
    }
}
