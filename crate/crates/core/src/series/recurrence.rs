//! Linear recurrences with polynomial coefficients: checking and fitting.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::{Error, Result};

/// `Σ_i P_i(n)·a_{n+i} = 0`, with `coeffs[i] = P_i` and `P_d ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PRecurrence {
    coeffs: Vec<IntPoly>,
}

impl PRecurrence {
    pub fn new(coeffs: Vec<IntPoly>) -> Result<Self> {
        match coeffs.last() {
            Some(last) if coeffs.len() >= 2 && !last.is_zero() => Ok(PRecurrence { coeffs }),
            _ => Err(Error::Parse("recurrence needs order >= 1 and a nonzero last coefficient".into())),
        }
    }

    pub fn from_i64(coeffs: &[&[i64]]) -> Self {
        Self::new(coeffs.iter().map(|c| IntPoly::from_i64(c)).collect()).expect("valid recurrence literal")
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// Largest coefficient degree among the `P_i`.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().filter_map(IntPoly::degree).max().unwrap_or(0)
    }

    /// Divides by the overall content and makes the leading coefficient of
    /// `P_d` positive.
    pub fn normalized(&self) -> Self {
        let content = self.coeffs.iter().fold(BigInt::zero(), |g, p| g.gcd(&p.content()));
        let sign = if self.coeffs.last().expect("order >= 1").leading().is_negative() { -1 } else { 1 };
        let d = content * sign;
        PRecurrence {
            coeffs: self.coeffs.iter().map(|p| p.div_exact_scalar(&d).expect("content divides")).collect(),
        }
    }

    fn residual(&self, seq: &[BigInt], n: usize, offset: usize) -> BigInt {
        let x = BigInt::from(n + offset);
        self.coeffs.iter().enumerate().map(|(i, p)| p.eval(&x) * &seq[n + i]).sum()
    }

    fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().flat_map(|p| p.coeffs().iter().map(BigInt::abs)).max().unwrap_or_default()
    }
}

/// True iff the recurrence holds at every `n` for which `seq` supplies
/// `a_n .. a_{n+d}`, where `seq[m] = a_{offset+m}`.
pub fn verify_recurrence(seq: &[BigInt], rec: &PRecurrence, offset: usize) -> Result<bool> {
    let d = rec.order();
    if seq.len() <= d {
        return Err(Error::SequenceTooShort { len: seq.len(), order: d });
    }
    Ok((0..seq.len() - d).all(|n| rec.residual(seq, n, offset).is_zero()))
}

/// Catalan numbers: `2(2n+1)C_n − (n+2)C_{n+1} = 0`.
pub fn catalan_recurrence() -> PRecurrence {
    PRecurrence::from_i64(&[&[2, 4], &[-2, -1]])
}

/// Two-colored noncrossing partitions:
/// `9n(n+3)C_n − 2(5n²+26n+30)C_{n+1} + (n+4)(n+5)C_{n+2} = 0`.
pub fn c2_three_term_recurrence() -> PRecurrence {
    PRecurrence::from_i64(&[&[0, 27, 9], &[-60, -52, -10], &[20, 9, 1]])
}

/// The order-3 companion:
/// `9n(n+3)C_n − (96+97n+19n²)C_{n+1} + (142+81n+11n²)C_{n+2} − (n+5)(n+6)C_{n+3} = 0`.
pub fn c2_four_term_recurrence() -> PRecurrence {
    PRecurrence::from_i64(&[&[0, 27, 9], &[-96, -97, -19], &[142, 81, 11], &[-30, -11, -1]])
}

/// Exact rational nullspace basis of an integer matrix, one vector per free
/// column, via fraction-free reduction to reduced row echelon form.
fn nullspace(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let pivot_row = rows[rank].clone();
        let p = pivot_row[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &p - y * &f;
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                row.iter_mut().for_each(|x| *x /= &g);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); ncols];
            v[free] = BigRational::one();
            for (t, &pc) in pivots.iter().enumerate() {
                v[pc] = -BigRational::new(rows[t][free].clone(), rows[t][pc].clone());
            }
            v
        })
        .collect()
}

fn to_recurrence(v: &[BigRational], order: usize, degree: usize) -> Option<PRecurrence> {
    let lcm = v.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * BigRational::from(lcm.clone())).to_integer()).collect();
    let coeffs: Vec<IntPoly> = ints.chunks(degree + 1).map(|c| IntPoly::new(c.to_vec())).collect();
    debug_assert_eq!(coeffs.len(), order + 1);
    PRecurrence::new(coeffs).ok().map(|r| r.normalized())
}

/// Searches orders `1..=max_order` and degrees `0..=max_degree` (order
/// first) for a recurrence satisfied by `seq` (indexed from `n = 0`).
///
/// Within the first feasible `(order, degree)`, the candidate with the
/// smallest largest coefficient wins, ties going to the lexicographically
/// smaller coefficient list.
pub fn fit_p_recurrence(seq: &[BigInt], max_order: usize, max_degree: usize) -> Result<Option<PRecurrence>> {
    let needed = (max_order + 1) * (max_degree + 1) + max_order;
    if seq.len() <= needed {
        return Err(Error::InsufficientData { len: seq.len(), needed });
    }
    for order in 1..=max_order {
        for degree in 0..=max_degree {
            let ncols = (order + 1) * (degree + 1);
            let rows: Vec<Vec<BigInt>> = (0..seq.len() - order)
                .map(|n| {
                    let powers: Vec<BigInt> = (0..=degree).map(|e| BigInt::from(n).pow(e as u32)).collect();
                    (0..=order).cartesian_product(&powers).map(|(i, pw)| pw * &seq[n + i]).collect()
                })
                .collect();
            let best = nullspace(rows, ncols)
                .iter()
                .filter_map(|v| to_recurrence(v, order, degree))
                .filter(|rec| verify_recurrence(seq, rec, 0).unwrap_or(false))
                .min_by(|a, b| {
                    let key = |r: &PRecurrence| r.coeffs.iter().flat_map(|p| p.coeffs().to_vec()).collect::<Vec<_>>();
                    a.max_abs_coeff().cmp(&b.max_abs_coeff()).then_with(|| key(a).cmp(&key(b)))
                });
            if best.is_some() {
                return Ok(best);
            }
        }
    }
    Ok(None)
}

impl fmt::Display for PRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.coeffs.iter().enumerate().map(|(i, p)| format!("P_{i}={p}"));
        f.write_str(&parts.format("; ").to_string())
    }
}

impl FromStr for PRecurrence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (i, field) in s.split(';').map(str::trim).filter(|f| !f.is_empty()).enumerate() {
            let (name, list) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected P_i=[...], got `{field}`")))?;
            if name.trim() != format!("P_{i}") {
                return Err(Error::Parse(format!("expected P_{i}, got `{name}`")));
            }
            let inner = list
                .trim()
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad coefficient list `{list}`")))?;
            let cs = inner
                .split(',')
                .map(|c| c.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient `{c}`"))))
                .collect::<Result<Vec<_>>>()?;
            coeffs.push(IntPoly::new(cs));
        }
        PRecurrence::new(coeffs)
    }
}
