//! `NCN_{j,k}(n, r)` as an integer polynomial in the number of colors.
//!
//! For a fixed partition, a coloring is bad when some offending arc set (a
//! `j`-crossing or a `k`-nesting) is monochromatic. Inclusion–exclusion over
//! families of offending sets gives `Σ_S (−1)^{|S|} r^{c(S)}`, where `c(S)`
//! counts the classes of arcs once every member of `S` is glued together.
//! The sum is accumulated as a transfer over the offending sets, keyed by
//! the induced set partition of the arcs, so equal gluings share one term.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::poly::IntPoly;
use crate::partition::{count_ncn_brute, set_partitions, Arc, EndpointFilter, SetPartition};
use crate::variants::{enhanced_stats, enumerate_enhanced};
use crate::{BigCount, Bound, Error, Result};

/// Largest `n` accepted by [`ncn_poly_in_r`].
pub const DEFAULT_POLY_LIMIT: usize = 9;

/// Integer polynomial in the color count `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolynomialInR(IntPoly);

impl PolynomialInR {
    pub fn new(p: IntPoly) -> Self {
        PolynomialInR(p)
    }

    pub fn as_poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn is_monic(&self) -> bool {
        self.0.leading().is_one()
    }

    pub fn eval(&self, r: u64) -> BigInt {
        self.0.eval(&BigInt::from(r))
    }
}

/// Ascending powers: `1 - 24r + 176r^2 + r^7`.
impl fmt::Display for PolynomialInR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.0.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "r".to_owned(),
                _ => format!("r^{e}"),
            };
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&var)?;
        }
        Ok(())
    }
}

fn pairwise(arcs: &[&Arc], rel: impl Fn(&Arc, &Arc) -> bool) -> bool {
    arcs.iter().tuple_combinations().all(|(a, b)| rel(a, b))
}

fn crosses(a: &Arc, b: &Arc) -> bool {
    (a.left < b.left && b.left < a.right && a.right < b.right)
        || (b.left < a.left && a.left < b.right && b.right < a.right)
}

fn nests(a: &Arc, b: &Arc) -> bool {
    (a.left < b.left && b.right < a.right) || (b.left < a.left && a.right < b.right)
}

/// Index sets of `j`-crossings and `k`-nestings among `arcs`.
fn offending_sets(arcs: &[Arc], j: Bound, k: Bound) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for (size, rel) in [(j.finite(), crosses as fn(&Arc, &Arc) -> bool), (k.finite(), nests)] {
        if let Some(size) = size {
            for idx in (0..arcs.len()).combinations(size) {
                let chosen: Vec<&Arc> = idx.iter().map(|&i| &arcs[i]).collect();
                if pairwise(&chosen, rel) {
                    out.push(idx);
                }
            }
        }
    }
    out
}

/// Relabels a class assignment to first-occurrence order.
fn canonical(labels: &mut [u8]) {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    for l in labels.iter_mut() {
        if map[*l as usize] == u8::MAX {
            map[*l as usize] = next;
            next += 1;
        }
        *l = map[*l as usize];
    }
}

fn glue(state: &[u8], set: &[usize]) -> Vec<u8> {
    let mut out = state.to_vec();
    if let Some(&first) = set.first() {
        let target = state[first];
        let merged: Vec<u8> = set.iter().map(|&i| state[i]).collect();
        for l in out.iter_mut() {
            if merged.contains(l) {
                *l = target;
            }
        }
    }
    canonical(&mut out);
    out
}

/// `Σ_S (−1)^{|S|} r^{c(S)}` for one partition, as coefficients by power.
fn partition_poly(p: &SetPartition, j: Bound, k: Bound) -> Vec<i64> {
    let arcs = p.arcs();
    let m = arcs.len();
    let mut states: HashMap<Vec<u8>, i64> = HashMap::from([((0..m as u8).collect(), 1)]);
    for set in offending_sets(&arcs, j, k) {
        let mut next = states.clone();
        for (state, c) in &states {
            *next.entry(glue(state, &set)).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        states = next;
    }
    let mut coeffs = vec![0i64; m + 1];
    for (state, c) in states {
        let classes = state.iter().max().map_or(0, |&x| x as usize + 1);
        coeffs[classes] += c;
    }
    coeffs
}

/// `NCN_{j,k}(n, r)` as a polynomial in `r`, for `n ≤ DEFAULT_POLY_LIMIT`.
pub fn ncn_poly_in_r(n: usize, j: Bound, k: Bound) -> Result<PolynomialInR> {
    ncn_poly_in_r_with(n, j, k, None, DEFAULT_POLY_LIMIT)
}

/// As [`ncn_poly_in_r`], restricted to partitions accepted by `filter` and
/// with an explicit size limit.
pub fn ncn_poly_in_r_with(
    n: usize,
    j: Bound,
    k: Bound,
    filter: Option<&EndpointFilter>,
    limit: usize,
) -> Result<PolynomialInR> {
    if n > limit {
        return Err(Error::Infeasible { n, limit });
    }
    let partitions: Vec<SetPartition> = set_partitions(n).filter(|p| filter.is_none_or(|f| f.accepts(p))).collect();
    let total = partitions
        .par_iter()
        .map(|p| partition_poly(p, j, k))
        .reduce(Vec::new, |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
            a
        });
    Ok(PolynomialInR(IntPoly::new(total.into_iter().map(BigInt::from).collect())))
}

/// Number of enhanced `r`-colored partitions of `[n]` with `cr < j`, `ne < k`.
pub fn enhanced_ncn_count(n: usize, r: usize, j: Bound, k: Bound) -> BigCount {
    let count = enumerate_enhanced(n, r)
        .filter(|e| {
            let s = enhanced_stats(e);
            j.admits(s.cr) && k.admits(s.ne)
        })
        .count();
    BigCount::from(count)
}

/// Whether `NCN_{j,k}(n+1, r) = Σ_i C(n,i)·NCN̄_{j,k}(i, r)`, both sides by
/// enumeration.
pub fn enhanced_binomial_check(n: usize, r: usize, j: Bound, k: Bound) -> bool {
    let lhs = count_ncn_brute(n + 1, r, j, k, None);
    let rhs: BigCount = (0..=n)
        .map(|i| binomial(BigCount::from(n), BigCount::from(i)) * enhanced_ncn_count(i, r, j, k))
        .sum();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use Bound::{At, Unbounded};

    /// Lagrange interpolation of the brute counts at `r = 0..=n`, as an
    /// independent route to the same polynomial.
    fn interpolated(n: usize, j: Bound, k: Bound) -> IntPoly {
        use num_rational::BigRational;
        let pts: Vec<(BigInt, BigInt)> = (0..=n)
            .map(|r| (BigInt::from(r), BigInt::from(count_ncn_brute(n, r, j, k, None))))
            .collect();
        let mut acc = vec![BigRational::zero(); pts.len()];
        for (i, (xi, yi)) in pts.iter().enumerate() {
            let mut basis = vec![BigRational::one()];
            let mut denom = BigInt::one();
            for (m, (xm, _)) in pts.iter().enumerate() {
                if m == i {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (e, c) in basis.iter().enumerate() {
                    next[e + 1] += c;
                    next[e] -= c * BigRational::from(xm.clone());
                }
                basis = next;
                denom *= xi - xm;
            }
            for (e, c) in basis.iter().enumerate() {
                acc[e] += c * BigRational::new(yi.clone(), denom.clone());
            }
        }
        IntPoly::new(acc.into_iter().map(|q| q.to_integer()).collect())
    }

    #[test]
    fn printed_table() {
        let table = [
            "1",
            "1 + r",
            "1 + 3r + r^2",
            "1 + 5r + 7r^2 + r^3",
            "1 + 6r + 19r^2 + 15r^3 + r^4",
            "1 + 10r + 22r^2 + 67r^3 + 31r^4 + r^5",
            "1 + 12r + 56r^2 + 67r^3 + 229r^4 + 63r^5 + r^6",
            "1 - 24r + 176r^2 + 159r^3 + 225r^4 + 765r^5 + 127r^6 + r^7",
        ];
        for (i, want) in table.iter().enumerate() {
            let n = i + 1;
            assert_eq!(ncn_poly_in_r(n, At(2), Unbounded).unwrap().to_string(), *want, "n={n}");
        }
    }

    #[test]
    fn agrees_with_interpolated_brute_counts() {
        for n in 0..=5 {
            for (j, k) in [(At(2), At(2)), (At(2), At(3)), (At(3), At(2)), (At(3), Unbounded), (Unbounded, At(2))] {
                assert_eq!(*ncn_poly_in_r(n, j, k).unwrap().as_poly(), interpolated(n, j, k), "n={n} j={j} k={k}");
            }
        }
    }

    #[test]
    fn evaluations_match_brute_counts() {
        for n in 0..=6 {
            for (j, k) in [(At(2), At(2)), (At(2), At(3)), (At(3), At(3))] {
                let p = ncn_poly_in_r(n, j, k).unwrap();
                for r in 1..=3u64 {
                    assert_eq!(p.eval(r), BigInt::from(count_ncn_brute(n, r as usize, j, k, None)));
                }
            }
        }
    }

    #[test]
    fn monic_of_degree_n_minus_one_and_symmetric() {
        for n in 1..=7 {
            for j in 2..=3 {
                for k in 2..=3 {
                    let p = ncn_poly_in_r(n, At(j), At(k)).unwrap();
                    assert_eq!(p.degree(), Some(n - 1));
                    assert!(p.is_monic());
                    assert_eq!(p, ncn_poly_in_r(n, At(k), At(j)).unwrap());
                }
            }
        }
    }

    #[test]
    fn filtered_variant_and_limit() {
        let f = EndpointFilter::new([1, 2].into(), [3, 4].into());
        let p = ncn_poly_in_r_with(4, At(2), Unbounded, Some(&f), 9).unwrap();
        for r in 1..=3 {
            let brute = count_ncn_brute(4, r, At(2), Unbounded, Some(&f));
            assert_eq!(p.eval(r as u64), BigInt::from(brute));
        }
        assert_eq!(ncn_poly_in_r(10, At(2), At(2)), Err(Error::Infeasible { n: 10, limit: 9 }));
    }

    #[test]
    fn display_forms() {
        assert_eq!(PolynomialInR::new(IntPoly::zero()).to_string(), "0");
        assert_eq!(PolynomialInR::new(IntPoly::from_i64(&[0, -1, 0, 2])).to_string(), "-r + 2r^3");
        assert_eq!(PolynomialInR::new(IntPoly::from_i64(&[-3])).to_string(), "-3");
    }

    #[test]
    fn enhanced_binomial_transform() {
        assert!(enhanced_binomial_check(0, 1, At(2), At(2)));
        for n in 0..=4 {
            for r in 1..=2 {
                assert!(enhanced_binomial_check(n, r, At(2), At(2)), "n={n} r={r}");
            }
        }
        for n in 5..=6 {
            assert!(enhanced_binomial_check(n, 1, At(2), At(2)), "n={n}");
        }
    }
}
