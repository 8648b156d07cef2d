//! Sparse bivariate Laurent polynomials and constant-term extraction.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Map from exponent pairs `(a, b)` of `x^a y^b` to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn monomial(a: i64, b: i64) -> Self {
        Self::from_terms([((a, b), BigInt::one())])
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), BigInt)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            *out.entry(e).or_insert_with(BigInt::zero) += c;
        }
        out.retain(|_, c: &mut BigInt| !c.is_zero());
        LaurentPoly2 { terms: out }
    }

    pub fn from_i64(terms: &[((i64, i64), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), BigInt> {
        &self.terms
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    /// Largest `|a| + |b|` over the support.
    pub fn max_degree(&self) -> u64 {
        self.terms.keys().map(|&(a, b)| a.unsigned_abs() + b.unsigned_abs()).max().unwrap_or(0)
    }

    fn clip(&mut self, radius: u64) {
        self.terms.retain(|&(a, b), _| a.unsigned_abs() + b.unsigned_abs() <= radius);
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let rhs_terms: Vec<_> = rhs.terms.iter().collect();
        let partial = self
            .terms
            .par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<(i64, i64), BigInt>, (&(a, b), c)| {
                for &(&(a2, b2), c2) in &rhs_terms {
                    *acc.entry((a + a2, b + b2)).or_insert_with(BigInt::zero) += c * c2;
                }
                acc
            })
            .reduce(BTreeMap::new, |mut x, y| {
                for (e, c) in y {
                    *x.entry(e).or_insert_with(BigInt::zero) += c;
                }
                x
            });
        Self::from_terms(partial)
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        LaurentPoly2::from_terms(self.terms.iter().chain(&rhs.terms).map(|(&e, c)| (e, c.clone())))
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.mul_ref(rhs)
    }
}

/// Constant term of `f · s^n`.
///
/// After `m` multiplications any monomial farther than `(n − m)·maxdeg(s)`
/// from the origin can no longer reach it, so it is dropped.
pub fn ct_power_product(f: &LaurentPoly2, s: &LaurentPoly2, n: usize) -> BigInt {
    let step = s.max_degree();
    let mut acc = f.clone();
    for m in 0..n {
        acc.clip(step * (n - m) as u64);
        acc = &acc * s;
    }
    acc.constant_term()
}

/// The prefactor `1 − x²y⁻¹ + x³ − x²y² + y³ − x⁻¹y²` in the constant-term
/// formula for two-colored noncrossing partitions.
pub fn c2_prefactor() -> LaurentPoly2 {
    LaurentPoly2::from_i64(&[((0, 0), 1), ((2, -1), -1), ((3, 0), 1), ((2, 2), -1), ((0, 3), 1), ((-1, 2), -1)])
}

/// `x + y + x⁻¹ + y⁻¹ + xy⁻¹ + x⁻¹y`, the six steps of the hexagonal walk.
pub fn c2_step_polynomial() -> LaurentPoly2 {
    LaurentPoly2::from_i64(&[((1, 0), 1), ((0, 1), 1), ((-1, 0), 1), ((0, -1), 1), ((1, -1), 1), ((-1, 1), 1)])
}

fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `CT(x^i y^j (S+2)^n)` in closed form as a single sum of binomial products.
///
/// The step set is invariant under the lattice rotation `(i, j) ↦ (−j, i + j)`,
/// which is used to bring any exponent pair into the nonnegative quadrant
/// where the sum applies.
pub fn triple_binomial_ct(i: i64, j: i64, n: usize) -> BigInt {
    let (mut i, mut j) = (i, j);
    while i < 0 || j < 0 {
        (i, j) = (-j, i + j);
    }
    let n = n as i64;
    (0..=n)
        .map(|k| binom(n, k) * binom(n - k, n - j - 2 * k) * binom(2 * n - j - 2 * k, n - i - j - k))
        .sum()
}

/// `b_n = CT(F·(S+2)^n)` for `n ≤ max_n`, using the binomial sum termwise.
pub fn b_sequence(max_n: usize) -> Vec<BigInt> {
    let f = c2_prefactor();
    (0..=max_n)
        .into_par_iter()
        .map(|n| f.terms().iter().map(|(&(a, b), c)| c * triple_binomial_ct(a, b, n)).sum())
        .collect()
}

/// Checks `(n+5)(n+6)b_{n+2} = 8(n+2)(n+1)b_n + (7n²+49n+82)b_{n+1}` wherever
/// the slice has the terms.
pub fn b_recurrence_holds(b: &[BigInt]) -> bool {
    b.windows(3).enumerate().all(|(n, w)| {
        let n = BigInt::from(n);
        let lhs = (&n + 5) * (&n + 6) * &w[2];
        let rhs = 8 * (&n + 2) * (&n + 1) * &w[0] + (7 * &n * &n + 49 * &n + 82) * &w[1];
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::colored_nc_sequence;

    fn shifted(s: &LaurentPoly2, c: i64) -> LaurentPoly2 {
        s + &LaurentPoly2::constant(BigInt::from(c))
    }

    /// Constant term of `g^n` by plain repeated multiplication, no clipping.
    fn naive_ct(f: &LaurentPoly2, s: &LaurentPoly2, n: usize) -> BigInt {
        let mut acc = f.clone();
        for _ in 0..n {
            acc = &acc * s;
        }
        acc.constant_term()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = LaurentPoly2::from_i64(&[((1, 0), 2), ((1, 0), -2), ((0, 0), 3)]);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(c2_step_polynomial().max_degree(), 2);
        assert_eq!(c2_prefactor().constant_term(), BigInt::one());
    }

    #[test]
    fn constant_term_examples() {
        let f = c2_prefactor();
        let s = shifted(&c2_step_polynomial(), 3);
        assert_eq!(ct_power_product(&f, &s, 0), BigInt::from(1));
        assert_eq!(ct_power_product(&f, &s, 1), BigInt::from(3));
        assert_eq!(ct_power_product(&f, &s, 5), BigInt::from(1173));
    }

    #[test]
    fn clipping_preserves_the_constant_term() {
        let f = c2_prefactor();
        let s = shifted(&c2_step_polynomial(), 3);
        for n in 0..=6 {
            assert_eq!(ct_power_product(&f, &s, n), naive_ct(&f, &s, n));
        }
    }

    #[test]
    fn constant_terms_count_two_colored_noncrossing_partitions() {
        let f = c2_prefactor();
        let s = shifted(&c2_step_polynomial(), 3);
        let c = colored_nc_sequence(2, 13);
        for n in 0..=12 {
            assert_eq!(ct_power_product(&f, &s, n), BigInt::from(c[n + 1].clone()), "n={n}");
        }
    }

    #[test]
    fn binomial_sum_matches_constant_terms() {
        assert_eq!(triple_binomial_ct(0, 0, 0), BigInt::from(1));
        assert_eq!(triple_binomial_ct(0, 0, 1), BigInt::from(2));
        assert_eq!(triple_binomial_ct(0, 0, 2), BigInt::from(10));
        let s2 = shifted(&c2_step_polynomial(), 2);
        for i in -3..=3 {
            for j in -3..=3 {
                let f = LaurentPoly2::monomial(i, j);
                for n in 0..=8 {
                    assert_eq!(triple_binomial_ct(i, j, n), ct_power_product(&f, &s2, n), "i={i} j={j} n={n}");
                }
            }
        }
    }

    #[test]
    fn b_sequence_and_its_transform() {
        let b = b_sequence(30);
        assert_eq!(b[..3], [BigInt::from(1), BigInt::from(2), BigInt::from(6)]);
        assert!(b_recurrence_holds(&b));
        let s2 = shifted(&c2_step_polynomial(), 2);
        for (n, bn) in b.iter().enumerate().take(9) {
            assert_eq!(*bn, ct_power_product(&c2_prefactor(), &s2, n));
        }
        let c = colored_nc_sequence(2, 31);
        for n in 0..=30 {
            let transform: BigInt = (0..=n).map(|k| binom(n as i64, k as i64) * &b[k]).sum();
            assert_eq!(transform, BigInt::from(c[n + 1].clone()), "n={n}");
        }
        let mut broken = b.clone();
        broken[7] += 1;
        assert!(!b_recurrence_holds(&broken));
    }
}
