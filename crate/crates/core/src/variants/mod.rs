//! Objects that encode into colored matchings: matchings themselves,
//! enhanced partitions, colored permutations, and tangled diagrams.

mod enhanced;
mod permutation;
mod tangled;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{cr_ne_oracle, enumerate_colored, ColoredSetPartition, CrossNestStats};

pub use enhanced::{enhanced_stats, enhanced_to_matching, enumerate_enhanced, EnhancedColoredPartition};
pub use permutation::{
    enumerate_permutations, is_permutation_pair, matching_pair_to_permutation, permutation_stats, permutation_to_matching_pair,
    ColoredPermutation,
};
pub use tangled::{deflate, enumerate_tangled, inflate, tangled_stats, TangledDiagram};

/// A colored partition whose blocks have at most two elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMatching(ColoredSetPartition);

impl ColoredMatching {
    pub fn new(lam: ColoredSetPartition) -> Result<Self> {
        if lam.partition().is_matching() {
            Ok(ColoredMatching(lam))
        } else {
            Err(Error::NotAMatching(lam.to_string()))
        }
    }

    pub fn from_colored_arcs(n: usize, r: usize, triples: &[(usize, usize, usize)]) -> Result<Self> {
        Self::new(ColoredSetPartition::from_colored_arcs(n, r, triples)?)
    }

    /// Every point is an arc endpoint.
    pub fn is_complete(&self) -> bool {
        self.0.partition().isolated_points().is_empty()
    }

    pub fn into_inner(self) -> ColoredSetPartition {
        self.0
    }
}

impl Deref for ColoredMatching {
    type Target = ColoredSetPartition;

    fn deref(&self) -> &ColoredSetPartition {
        &self.0
    }
}

impl fmt::Display for ColoredMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ColoredMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

/// The matching of `[2n]` with arcs `(2i, 2j - 1)` for each arc `(i, j)`.
pub fn double_partition(lam: &ColoredSetPartition) -> ColoredMatching {
    let triples: Vec<_> = lam
        .colored_arcs()
        .map(|(a, c)| (2 * a.left, 2 * a.right - 1, c))
        .collect();
    ColoredMatching::from_colored_arcs(2 * lam.n(), lam.r(), &triples).expect("doubling yields a matching")
}

/// Families handled by [`enumerate_variant`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariantKind {
    Matching,
    CompleteMatching,
    Enhanced,
    Permutation,
    Tangled,
}

impl FromStr for VariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "matching" => VariantKind::Matching,
            "complete-matching" => VariantKind::CompleteMatching,
            "enhanced" => VariantKind::Enhanced,
            "permutation" => VariantKind::Permutation,
            "tangled" => VariantKind::Tangled,
            other => return Err(Error::Parse(format!("unknown variant `{other}`"))),
        })
    }
}

/// One object of any variant family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Matching(ColoredMatching),
    Enhanced(EnhancedColoredPartition),
    Permutation(ColoredPermutation),
    Tangled(TangledDiagram),
}

impl Variant {
    pub fn stats(&self) -> CrossNestStats {
        match self {
            Variant::Matching(m) => cr_ne_oracle(m),
            Variant::Enhanced(e) => enhanced_stats(e),
            Variant::Permutation(p) => permutation_stats(p),
            Variant::Tangled(t) => tangled_stats(t),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Matching(m) => m.fmt(f),
            Variant::Enhanced(e) => e.fmt(f),
            Variant::Permutation(p) => p.fmt(f),
            Variant::Tangled(t) => t.fmt(f),
        }
    }
}

/// Every object of `kind` on `[n]` with colors in `[r]`, in a fixed order.
pub fn enumerate_variant(kind: VariantKind, n: usize, r: usize) -> Box<dyn Iterator<Item = Variant>> {
    match kind {
        VariantKind::Matching | VariantKind::CompleteMatching => {
            let complete = kind == VariantKind::CompleteMatching;
            Box::new(
                enumerate_colored(n, r, None)
                    .filter(|lam| lam.partition().is_matching())
                    .map(ColoredMatching)
                    .filter(move |m| !complete || m.is_complete())
                    .map(Variant::Matching),
            )
        }
        VariantKind::Enhanced => Box::new(enumerate_enhanced(n, r).map(Variant::Enhanced)),
        VariantKind::Permutation => Box::new(enumerate_permutations(n, r).map(Variant::Permutation)),
        VariantKind::Tangled => Box::new(enumerate_tangled(n, r).into_iter().map(Variant::Tangled)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{PointSet, SetPartition};
    use std::collections::{BTreeMap, BTreeSet};

    #[test]
    fn doubling_examples() {
        let p = SetPartition::new(7, vec![vec![1, 3, 4, 7], vec![2, 6], vec![5]]).unwrap();
        let m = double_partition(&ColoredSetPartition::uncolored(p));
        assert_eq!(m.to_string(), "n=14; arcs=2-5,4-11,6-7,8-13");
        let lone = double_partition(&ColoredSetPartition::uncolored(SetPartition::singletons(1)));
        assert_eq!(lone.n(), 2);
        assert!(lone.arcs().is_empty());
        let crossing: ColoredSetPartition = "n=4; arcs=1-3,2-4".parse().unwrap();
        assert_eq!(cr_ne_oracle(&double_partition(&crossing)).cr, 2);
    }

    #[test]
    fn doubling_image_is_characterized_by_endpoints() {
        for n in 0..=4 {
            for r in 1..=2 {
                let images: BTreeSet<ColoredMatching> = enumerate_colored(n, r, None)
                    .map(|lam| {
                        let m = double_partition(&lam);
                        assert_eq!(cr_ne_oracle(&m), cr_ne_oracle(&lam));
                        m
                    })
                    .collect();
                let expected: BTreeSet<ColoredMatching> = enumerate_variant(VariantKind::Matching, 2 * n, r)
                    .map(|v| match v {
                        Variant::Matching(m) => m,
                        _ => unreachable!(),
                    })
                    .filter(|m| (1..=n).all(|i| m.min_set().contains(&(2 * i)) && m.max_set().contains(&(2 * i - 1))))
                    .collect();
                assert_eq!(images, expected, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn variant_counts() {
        assert_eq!(enumerate_variant(VariantKind::CompleteMatching, 2, 2).count(), 2);
        assert_eq!(enumerate_variant(VariantKind::Permutation, 2, 1).count(), 2);
        assert_eq!(enumerate_variant(VariantKind::Permutation, 2, 2).count(), 8);
        assert_eq!(enumerate_variant(VariantKind::Matching, 3, 1).count(), 4);
        assert_eq!(enumerate_variant(VariantKind::Enhanced, 2, 2).count(), 6);
        assert!(ColoredMatching::from_str("n=3; arcs=1-2,2-3").is_err());
    }

    fn endpoint_key(v: &Variant) -> Vec<PointSet> {
        match v {
            Variant::Matching(m) => vec![m.min_set(), m.max_set()],
            Variant::Enhanced(e) => {
                let m = enhanced_to_matching(e);
                vec![m.min_set(), m.max_set()]
            }
            Variant::Permutation(p) => {
                let (plus, minus) = permutation_to_matching_pair(p);
                vec![plus.min_set(), plus.max_set(), minus.min_set(), minus.max_set()]
            }
            Variant::Tangled(t) => {
                let m = inflate(t);
                vec![m.min_set(), m.max_set()]
            }
        }
    }

    #[test]
    fn joint_distributions_are_symmetric() {
        for kind in [
            VariantKind::Matching,
            VariantKind::CompleteMatching,
            VariantKind::Enhanced,
            VariantKind::Permutation,
            VariantKind::Tangled,
        ] {
            for n in 0..=4 {
                for r in 1..=2 {
                    let mut by_class: BTreeMap<Vec<PointSet>, BTreeMap<(usize, usize), usize>> = BTreeMap::new();
                    let mut total: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                    for v in enumerate_variant(kind, n, r) {
                        let s = v.stats();
                        *by_class.entry(endpoint_key(&v)).or_default().entry((s.cr, s.ne)).or_default() += 1;
                        *total.entry((s.cr, s.ne)).or_default() += 1;
                    }
                    let symmetric = |h: &BTreeMap<(usize, usize), usize>| {
                        h.iter().all(|(&(c, e), v)| h.get(&(e, c)) == Some(v))
                    };
                    assert!(symmetric(&total), "{kind:?} n={n} r={r}");
                    for h in by_class.values() {
                        assert!(symmetric(h), "{kind:?} n={n} r={r}");
                    }
                }
            }
        }
    }
}
