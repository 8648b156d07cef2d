//! Rational generating functions from the transfer-matrix method.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::counting::StepMultigraph;
use crate::{Error, Result};

/// A power series `num / den` in lowest terms with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    num: IntPoly,
    den: IntPoly,
}

impl RationalGF {
    /// Reduces by the polynomial gcd and scales so that the denominator has
    /// constant term 1. Fails if that scaling would leave the integers.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::InvalidGeneratingFunction(
                "denominator must have a nonzero constant term".into(),
            ));
        }
        let g = num.gcd(&den);
        let g = if g.coeff(0).is_negative() { -&g } else { g };
        let (num, den) = (num.div_exact(&g).unwrap_or(num), den.div_exact(&g).unwrap_or(den));
        let c0 = den.coeff(0);
        match (num.div_exact_scalar(&c0), den.div_exact_scalar(&c0)) {
            (Some(num), Some(den)) => Ok(RationalGF { num, den }),
            _ => Err(Error::InvalidGeneratingFunction(format!(
                "series {num}/{den} does not have integer coefficients"
            ))),
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }
}

/// The first `terms + 1` coefficients of the series.
pub fn expand(gf: &RationalGF, terms: usize) -> Vec<BigInt> {
    let den = gf.den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(terms + 1);
    for n in 0..=terms {
        let mut c = gf.num.coeff(n);
        for (i, d) in den.iter().enumerate().skip(1).take(n) {
            c -= d * &out[n - i];
        }
        out.push(c);
    }
    out
}

/// `1 + x·W(x)` where `W` is the closed-walk series at `origin` for the
/// multigraph with the given adjacency matrix.
pub fn gf_from_adjacency(adjacency: &[Vec<usize>], origin: usize) -> RationalGF {
    let v = adjacency.len();
    assert!(origin < v, "origin outside the vertex range");
    let order: Vec<usize> = (0..v).filter(|&i| i != origin).chain([origin]).collect();
    let mut m: Vec<Vec<IntPoly>> = order
        .iter()
        .map(|&a| {
            order
                .iter()
                .map(|&b| {
                    let e = BigInt::from(adjacency[a][b]);
                    let delta = if a == b { BigInt::one() } else { BigInt::zero() };
                    IntPoly::new(vec![delta, -e])
                })
                .collect()
        })
        .collect();

    // Bareiss elimination: after step k, m[k][k] is the leading principal
    // minor of size k+1, so the last two pivots give the cofactor of the
    // origin and the full determinant.
    let mut prev = IntPoly::one();
    let mut minor = IntPoly::one();
    for k in 0..v {
        if k + 1 == v {
            minor = prev.clone();
            break;
        }
        for i in k + 1..v {
            for j in k + 1..v {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[v - 1][v - 1].clone();
    let num = &det + &minor.shift(1);
    RationalGF::new(num, det).expect("determinant of I - xA has constant term 1")
}

/// Generating function of `NCN_{j,k}(n, r)` for the multigraph `G_{j,k,r}`.
pub fn gf_from_graph(g: &StepMultigraph) -> RationalGF {
    gf_from_adjacency(&g.adjacency_matrix(), g.origin())
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "num={}; den={}", self.num, self.den)
    }
}

fn parse_list(s: &str) -> Result<IntPoly> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got `{s}`")))?;
    inner
        .split(',')
        .map(|c| c.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient `{c}`"))))
        .collect::<Result<Vec<_>>>()
        .map(IntPoly::new)
}

impl FromStr for RationalGF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut num = None;
        let mut den = None;
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            match field.split_once('=') {
                Some(("num", v)) => num = Some(parse_list(v)?),
                Some(("den", v)) => den = Some(parse_list(v)?),
                _ => return Err(Error::Parse(format!("unknown field `{field}`"))),
            }
        }
        match (num, den) {
            (Some(n), Some(d)) => RationalGF::new(n, d),
            _ => Err(Error::Parse("need both num= and den=".into())),
        }
    }
}
