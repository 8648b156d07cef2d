//! Enhanced partitions: isolated points carry colored loops `(i, i)`.

use std::fmt;
use std::str::FromStr;

use super::ColoredMatching;
use crate::error::{Error, Result};
use crate::partition::{
    chain_stats, fields, parse_arc_list, set_partitions, Arc, Colorings, CrossNestStats, PointSet,
    SetPartition,
};

/// A set partition with a color on every enhanced arc.
///
/// `arcs` lists the ordinary arcs and the loops together, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnhancedColoredPartition {
    partition: SetPartition,
    arcs: Vec<Arc>,
    colors: Vec<usize>,
    r: usize,
}

fn enhanced_arcs(p: &SetPartition) -> Vec<Arc> {
    let mut arcs = p.arcs();
    arcs.extend(p.isolated_points().into_iter().map(|i| Arc::new(i, i)));
    arcs.sort_unstable();
    arcs
}

impl EnhancedColoredPartition {
    /// `colors[t]` colors the `t`-th enhanced arc in sorted order.
    pub fn new(partition: SetPartition, colors: Vec<usize>, r: usize) -> Result<Self> {
        let arcs = enhanced_arcs(&partition);
        if colors.len() != arcs.len() {
            return Err(Error::InvalidPartition(format!(
                "{} colors for {} enhanced arcs",
                colors.len(),
                arcs.len()
            )));
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::ColorOutOfRange { color, r });
        }
        Ok(EnhancedColoredPartition {
            partition,
            arcs,
            colors,
            r,
        })
    }

    /// Builds from `(i, j, c)` triples; every isolated point needs its loop `(i, i, c)`.
    pub fn from_colored_arcs(n: usize, r: usize, triples: &[(usize, usize, usize)]) -> Result<Self> {
        let mut sorted = triples.to_vec();
        sorted.sort_unstable();
        let ordinary: Vec<Arc> = sorted
            .iter()
            .filter(|t| t.0 != t.1)
            .map(|&(i, j, _)| Arc::new(i, j))
            .collect();
        let partition = SetPartition::from_arcs(n, &ordinary)?;
        let loops: PointSet = sorted.iter().filter(|t| t.0 == t.1).map(|t| t.0).collect();
        let loop_count = sorted.iter().filter(|t| t.0 == t.1).count();
        if loops != partition.isolated_points() || loop_count != loops.len() {
            return Err(Error::InvalidPartition(
                "loops must sit exactly on the isolated points".into(),
            ));
        }
        Self::new(partition, sorted.iter().map(|t| t.2).collect(), r)
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
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
}

/// The matching of `[2n]` with arcs `(2i - 1, 2j)`; a loop `(i, i)` becomes `(2i - 1, 2i)`.
///
/// The image is exactly the matchings with `2i - 1` a block minimum and
/// `2i` a block maximum for every `i`, where moreover `2i - 1` and `2i` are
/// never both isolated (an isolated `i` always carries its loop).
pub fn enhanced_to_matching(e: &EnhancedColoredPartition) -> ColoredMatching {
    let triples: Vec<_> = e
        .colored_arcs()
        .map(|(a, c)| (2 * a.left - 1, 2 * a.right, c))
        .collect();
    ColoredMatching::from_colored_arcs(2 * e.n(), e.r, &triples).expect("enhanced doubling yields a matching")
}

/// Enhanced crossing and nesting numbers, where the middle inequality is `<=`.
pub fn enhanced_stats(e: &EnhancedColoredPartition) -> CrossNestStats {
    let mut best = CrossNestStats::default();
    for color in 1..=e.r {
        let class: Vec<Arc> = e.colored_arcs().filter(|&(_, c)| c == color).map(|(a, _)| a).collect();
        best = best.max(chain_stats(&class, true));
    }
    best
}

/// Every enhanced partition of `[n]` with colors in `[r]`.
pub fn enumerate_enhanced(n: usize, r: usize) -> impl Iterator<Item = EnhancedColoredPartition> {
    set_partitions(n).flat_map(move |p| {
        let arcs = enhanced_arcs(&p);
        Colorings::new(arcs.len(), r).map(move |colors| EnhancedColoredPartition {
            partition: p.clone(),
            arcs: arcs.clone(),
            colors,
            r,
        })
    })
}

impl fmt::Display for EnhancedColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; r={}; arcs=", self.n(), self.r)?;
        for (idx, (a, c)) in self.colored_arcs().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}:{}", a.left, a.right, c)?;
        }
        Ok(())
    }
}

impl FromStr for EnhancedColoredPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut n, mut r, mut arcs) = (None, None, Vec::new());
        for (key, value) in fields(s)? {
            match key {
                "n" => n = value.parse().ok(),
                "r" => r = value.parse().ok(),
                "arcs" => arcs = parse_arc_list(value)?,
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing or bad `n=`".into()))?;
        let r = r.unwrap_or_else(|| arcs.iter().map(|t| t.2).max().unwrap_or(1));
        Self::from_colored_arcs(n, r, &arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{cr_ne_oracle, enumerate_colored};
    use std::collections::BTreeSet;

    fn e(s: &str) -> EnhancedColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn loops_map_to_adjacent_pairs() {
        let x = e("n=5; arcs=1-2:1,2-3:1,3-4:1,5-5:1");
        assert_eq!(enhanced_to_matching(&x).colored_arcs().last().unwrap().0, Arc::new(9, 10));
        let single = e("n=1; arcs=1-1:1");
        assert_eq!(enhanced_to_matching(&single).to_string(), "n=2; arcs=1-2");
        let nested = e("n=3; arcs=1-3:1,2-2:1");
        assert_eq!(cr_ne_oracle(&enhanced_to_matching(&nested)).ne, 2);
    }

    #[test]
    fn enhanced_stat_examples() {
        assert_eq!(enhanced_stats(&e("n=2; arcs=1-1:1,2-2:1")), CrossNestStats::new(1, 1));
        assert_eq!(enhanced_stats(&e("n=3; arcs=1-3:1,2-2:1")), CrossNestStats::new(1, 2));
        assert_eq!(enhanced_stats(&e("n=1; arcs=1-1:1")), CrossNestStats::new(1, 1));
        assert_eq!(enhanced_stats(&e("n=3; arcs=1-2:1,2-3:1")), CrossNestStats::new(2, 1));
        assert_eq!(enhanced_stats(&e("n=3; arcs=1-2:1,2-3:2")), CrossNestStats::new(1, 1));
    }

    #[test]
    fn loops_must_match_isolated_points() {
        assert!("n=2; arcs=1-2:1,1-1:1".parse::<EnhancedColoredPartition>().is_err());
        assert!("n=2; arcs=1-1:1".parse::<EnhancedColoredPartition>().is_err());
        let x = e("n=3; r=2; arcs=1-3:2,2-2:1");
        assert_eq!(x.to_string().parse::<EnhancedColoredPartition>().unwrap(), x);
    }

    #[test]
    fn image_characterization_and_statistics() {
        for n in 0..=4 {
            for r in 1..=2 {
                let mut images = BTreeSet::new();
                for x in enumerate_enhanced(n, r) {
                    let m = enhanced_to_matching(&x);
                    assert_eq!(enhanced_stats(&x), cr_ne_oracle(&m));
                    images.insert(m.into_inner());
                }
                let expected: BTreeSet<_> = enumerate_colored(2 * n, r, None)
                    .filter(|m| m.partition().is_matching())
                    .filter(|m| {
                        let iso = m.partition().isolated_points();
                        (1..=n).all(|i| {
                            m.min_set().contains(&(2 * i - 1))
                                && m.max_set().contains(&(2 * i))
                                && !(iso.contains(&(2 * i - 1)) && iso.contains(&(2 * i)))
                        })
                    })
                    .collect();
                assert_eq!(images, expected, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn uncolored_enhanced_partitions_are_plain_partitions() {
        // With r = 1 an enhanced partition is a plain partition plus forced loops.
        for n in 0..=6 {
            assert_eq!(enumerate_enhanced(n, 1).count(), set_partitions(n).count());
        }
    }
}
