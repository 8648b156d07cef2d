//! Colored permutations and their pairs of colored matchings.
//!
//! Arcs `(i, σ(i))` with `i <= σ(i)` form the upper set `A⁺` (fixed points
//! give loops); arcs `(σ(i), i)` with `σ(i) < i` form the lower set `A⁻`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::ColoredMatching;
use crate::error::{Error, Result};
use crate::partition::{chain_stats, fields, Arc, Colorings, CrossNestStats, PointSet};

/// A permutation of `[n]` with a color for the arc attached to each `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    sigma: Vec<usize>,
    colors: Vec<usize>,
    r: usize,
}

impl ColoredPermutation {
    /// `sigma[i - 1] = σ(i)`; `colors[i - 1]` colors the arc between `i` and `σ(i)`.
    pub fn new(sigma: Vec<usize>, colors: Vec<usize>, r: usize) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n + 1];
        for &v in &sigma {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("{sigma:?} is not a permutation")));
            }
        }
        if colors.len() != n {
            return Err(Error::InvalidPermutation(format!("{} colors for {n} points", colors.len())));
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::ColorOutOfRange { color, r });
        }
        Ok(ColoredPermutation { sigma, colors, r })
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Colored arcs of `A⁺`, sorted.
    pub fn upper(&self) -> Vec<(Arc, usize)> {
        let mut out: Vec<_> = (1..=self.n())
            .filter(|&i| i <= self.sigma[i - 1])
            .map(|i| (Arc::new(i, self.sigma[i - 1]), self.colors[i - 1]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Colored arcs of `A⁻`, sorted.
    pub fn lower(&self) -> Vec<(Arc, usize)> {
        let mut out: Vec<_> = (1..=self.n())
            .filter(|&i| self.sigma[i - 1] < i)
            .map(|i| (Arc::new(self.sigma[i - 1], i), self.colors[i - 1]))
            .collect();
        out.sort_unstable();
        out
    }
}

/// `(Λ⁺, Λ⁻)`: `A⁺` arcs go to `(2i - 1, 2j)`, `A⁻` arcs to `(2i, 2j - 1)`.
pub fn permutation_to_matching_pair(p: &ColoredPermutation) -> (ColoredMatching, ColoredMatching) {
    let plus: Vec<_> = p.upper().into_iter().map(|(a, c)| (2 * a.left - 1, 2 * a.right, c)).collect();
    let minus: Vec<_> = p.lower().into_iter().map(|(a, c)| (2 * a.left, 2 * a.right - 1, c)).collect();
    let n = 2 * p.n();
    (
        ColoredMatching::from_colored_arcs(n, p.r, &plus).expect("upper arcs form a matching"),
        ColoredMatching::from_colored_arcs(n, p.r, &minus).expect("lower arcs form a matching"),
    )
}

fn check_pair_conditions(plus: &ColoredMatching, minus: &ColoredMatching) -> Result<()> {
    let n2 = plus.n();
    if minus.n() != n2 || n2 % 2 == 1 {
        return Err(Error::NotAPermutationPair("ground sets must agree and be even".into()));
    }
    let only = |a: PointSet, b: PointSet| -> PointSet { &a - &b };
    let odd: PointSet = (1..=n2).step_by(2).collect();
    let even: PointSet = (2..=n2).step_by(2).collect();
    let checks = [
        (odd, only(plus.min_set(), plus.max_set()), only(minus.max_set(), minus.min_set()), "odd"),
        (even, only(plus.max_set(), plus.min_set()), only(minus.min_set(), minus.max_set()), "even"),
    ];
    for (target, a, b, label) in checks {
        if !a.is_disjoint(&b) || &a | &b != target {
            return Err(Error::NotAPermutationPair(format!(
                "{label} positions are not split between the two matchings"
            )));
        }
    }
    Ok(())
}

/// Whether `(plus, minus)` is the matching pair of some colored permutation.
pub fn is_permutation_pair(plus: &ColoredMatching, minus: &ColoredMatching) -> bool {
    check_pair_conditions(plus, minus).is_ok()
}

/// Inverse of [`permutation_to_matching_pair`].
pub fn matching_pair_to_permutation(plus: &ColoredMatching, minus: &ColoredMatching) -> Result<ColoredPermutation> {
    check_pair_conditions(plus, minus)?;
    let n = plus.n() / 2;
    let mut sigma = vec![0usize; n];
    let mut colors = vec![0usize; n];
    for (a, c) in plus.colored_arcs() {
        if a.left % 2 == 0 || a.right % 2 == 1 {
            return Err(Error::NotAPermutationPair(format!("upper arc {}-{} has wrong parity", a.left, a.right)));
        }
        let (i, j) = (a.left.div_ceil(2), a.right / 2);
        sigma[i - 1] = j;
        colors[i - 1] = c;
    }
    for (a, c) in minus.colored_arcs() {
        if a.left % 2 == 1 || a.right % 2 == 0 {
            return Err(Error::NotAPermutationPair(format!("lower arc {}-{} has wrong parity", a.left, a.right)));
        }
        let (j, i) = (a.left / 2, a.right.div_ceil(2));
        if sigma[i - 1] != 0 {
            return Err(Error::NotAPermutationPair(format!("{i} has two images")));
        }
        sigma[i - 1] = j;
        colors[i - 1] = c;
    }
    ColoredPermutation::new(sigma, colors, plus.r().max(minus.r()))
        .map_err(|e| Error::NotAPermutationPair(e.to_string()))
}

/// Largest same-colored crossing/nesting: enhanced among upper arcs, ordinary among lower arcs.
pub fn permutation_stats(p: &ColoredPermutation) -> CrossNestStats {
    let mut best = CrossNestStats::default();
    for color in 1..=p.r {
        let pick = |arcs: Vec<(Arc, usize)>| -> Vec<Arc> {
            arcs.into_iter().filter(|&(_, c)| c == color).map(|(a, _)| a).collect()
        };
        best = best.max(chain_stats(&pick(p.upper()), true));
        best = best.max(chain_stats(&pick(p.lower()), false));
    }
    best
}

/// All `r^n n!` colored permutations, permutations in lexicographic order.
pub fn enumerate_permutations(n: usize, r: usize) -> impl Iterator<Item = ColoredPermutation> {
    (1..=n).permutations(n).flat_map(move |sigma| {
        Colorings::new(n, r).map(move |colors| ColoredPermutation {
            sigma: sigma.clone(),
            colors,
            r,
        })
    })
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upper = self.upper().into_iter().map(|(_, c)| c).join(",");
        let lower = self.lower().into_iter().map(|(_, c)| c).join(",");
        write!(
            f,
            "sigma={}; r={}; upper={upper}; lower={lower}",
            self.sigma.iter().join(","),
            self.r
        )
    }
}

impl FromStr for ColoredPermutation {
    type Err = Error;

    /// `sigma=2,1; r=2; upper=1; lower=2`: colors listed in sorted arc order.
    fn from_str(s: &str) -> Result<Self> {
        let list = |v: &str| -> Result<Vec<usize>> {
            v.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad number `{x}`"))))
                .collect()
        };
        let (mut sigma, mut r, mut upper, mut lower) = (Vec::new(), None, None, None);
        for (key, value) in fields(s)? {
            match key {
                "sigma" => sigma = list(value)?,
                "r" => r = Some(list(value)?.first().copied().unwrap_or(1)),
                "upper" => upper = Some(list(value)?),
                "lower" => lower = Some(list(value)?),
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let n = sigma.len();
        let probe = ColoredPermutation::new(sigma.clone(), vec![1; n], 1)?;
        let upper = upper.unwrap_or_else(|| vec![1; probe.upper().len()]);
        let lower = lower.unwrap_or_else(|| vec![1; probe.lower().len()]);
        if upper.len() != probe.upper().len() || lower.len() != probe.lower().len() {
            return Err(Error::Parse("color lists do not match the arc counts".into()));
        }
        let mut colors = vec![0; n];
        for ((arc, _), c) in probe.upper().into_iter().zip(upper) {
            colors[arc.left - 1] = c;
        }
        for ((arc, _), c) in probe.lower().into_iter().zip(lower) {
            colors[arc.right - 1] = c;
        }
        let r = r.unwrap_or_else(|| colors.iter().copied().max().unwrap_or(1));
        ColoredPermutation::new(sigma, colors, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{cr_ne_oracle, enumerate_colored};
    use std::collections::BTreeSet;

    fn perm(s: &str) -> ColoredPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_pairs() {
        let id = perm("sigma=1; r=3; upper=2");
        let (plus, minus) = permutation_to_matching_pair(&id);
        assert_eq!(plus.to_string(), "n=2; r=3; arcs=1-2:2");
        assert!(minus.arcs().is_empty());
        let swap = perm("sigma=2,1; r=2; upper=1; lower=2");
        let (plus, minus) = permutation_to_matching_pair(&swap);
        assert_eq!(plus.colored_arcs().collect::<Vec<_>>(), vec![(Arc::new(1, 4), 1)]);
        assert_eq!(minus.colored_arcs().collect::<Vec<_>>(), vec![(Arc::new(2, 3), 2)]);
        assert_eq!(matching_pair_to_permutation(&plus, &minus).unwrap(), swap);
        let empty = perm("sigma=; r=1");
        let (p0, m0) = permutation_to_matching_pair(&empty);
        assert_eq!(matching_pair_to_permutation(&p0, &m0).unwrap(), empty);
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        let plus = ColoredMatching::from_colored_arcs(4, 1, &[(1, 2, 1)]).unwrap();
        let minus = ColoredMatching::from_colored_arcs(4, 1, &[(2, 3, 1)]).unwrap();
        assert!(matches!(
            matching_pair_to_permutation(&plus, &minus),
            Err(Error::NotAPermutationPair(_))
        ));
    }

    #[test]
    fn stat_examples() {
        for n in 1..=5 {
            let id = ColoredPermutation::new((1..=n).collect(), vec![1; n], 1).unwrap();
            assert_eq!(permutation_stats(&id), CrossNestStats::new(1, 1));
        }
        assert_eq!(permutation_stats(&perm("sigma=2,1")), CrossNestStats::new(1, 1));
        assert_eq!(permutation_stats(&perm("sigma=")), CrossNestStats::new(0, 0));
        assert_eq!(permutation_stats(&perm("sigma=3,4,1,2")).cr, 2);
    }

    #[test]
    fn round_trip_and_statistics() {
        for n in 0..=3 {
            for r in 1..=2 {
                let mut images = BTreeSet::new();
                for p in enumerate_permutations(n, r) {
                    let (plus, minus) = permutation_to_matching_pair(&p);
                    let pair_stats = cr_ne_oracle(&plus).max(cr_ne_oracle(&minus));
                    assert_eq!(permutation_stats(&p), pair_stats);
                    assert_eq!(matching_pair_to_permutation(&plus, &minus).unwrap(), p);
                    assert_eq!(p.to_string().parse::<ColoredPermutation>().unwrap(), p);
                    images.insert((plus.into_inner(), minus.into_inner()));
                }
                let matchings: Vec<_> = enumerate_colored(2 * n, r, None)
                    .filter(|m| m.partition().is_matching())
                    .map(|m| ColoredMatching::new(m).unwrap())
                    .collect();
                let mut valid = BTreeSet::new();
                for a in &matchings {
                    for b in &matchings {
                        if check_pair_conditions(a, b).is_ok() {
                            valid.insert(((**a).clone(), (**b).clone()));
                        }
                    }
                }
                assert_eq!(images, valid, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn noncrossing_permutations_are_catalan() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate() {
            let count = enumerate_permutations(n, 1).filter(|p| permutation_stats(p).cr < 2).count();
            assert_eq!(count, c, "n={n}");
        }
    }
}
