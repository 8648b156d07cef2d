//! Tangled diagrams and their inflation into matchings of `[2n]`.
//!
//! A tangled diagram is a multigraph on `[n]` with colored arcs `(i, j)`,
//! `i <= j`, where at most two arc ends meet at each vertex. When two
//! distinct arc ends meet at a vertex they either cross there or not; that
//! choice is recorded in `crossings`. Two arcs joining the same pair of
//! vertices are listed adjacently, the one leaving the left copy `2i - 1`
//! first, and must carry the same crossing choice at both ends.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::ColoredMatching;
use crate::error::{Error, Result};
use crate::partition::{cr_ne_oracle, fields, parse_arc_list, Colorings, CrossNestStats};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangledDiagram {
    n: usize,
    r: usize,
    arcs: Vec<(usize, usize, usize)>,
    crossings: BTreeSet<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Out,
    In,
}

impl TangledDiagram {
    pub fn new(
        n: usize,
        r: usize,
        arcs: Vec<(usize, usize, usize)>,
        crossings: BTreeSet<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTangledDiagram(msg));
        let mut arcs = arcs;
        arcs.sort_by_key(|&(i, j, _)| (i, j));
        let mut degree = vec![0usize; n + 1];
        for &(i, j, c) in &arcs {
            if i == 0 || j > n || i > j {
                return bad(format!("arc {i}-{j} is not inside [1, {n}] in order"));
            }
            if c == 0 || c > r {
                return Err(Error::ColorOutOfRange { color: c, r });
            }
            degree[i] += 1;
            degree[j] += 1;
        }
        if let Some(v) = (1..=n).find(|&v| degree[v] > 2) {
            return bad(format!("more than two arc ends meet at {v}"));
        }
        for (key, group) in &arcs.iter().chunk_by(|&&(i, j, _)| (i, j)) {
            let count = group.count();
            if key.0 == key.1 && count > 1 || count > 2 {
                return bad(format!("too many arcs join {} and {}", key.0, key.1));
            }
            if count == 2 && crossings.contains(&key.0) != crossings.contains(&key.1) {
                return bad(format!("parallel arcs {}-{} cross at one end only", key.0, key.1));
            }
        }
        let diagram = TangledDiagram { n, r, arcs, crossings };
        for &v in &diagram.crossings {
            let ends = diagram.ends_at(v);
            if v == 0 || v > n || ends.len() != 2 || diagram.arcs[ends[0].0].0 == diagram.arcs[ends[0].0].1 {
                return bad(format!("no pair of arcs can cross at {v}"));
            }
        }
        Ok(diagram)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `(left, right, color)` triples; loops have `left == right`.
    pub fn arcs(&self) -> &[(usize, usize, usize)] {
        &self.arcs
    }

    /// Vertices where the two incident arcs cross.
    pub fn crossings(&self) -> &BTreeSet<usize> {
        &self.crossings
    }

    fn ends_at(&self, v: usize) -> Vec<(usize, Side)> {
        let mut ends = Vec::new();
        for (t, &(i, j, _)) in self.arcs.iter().enumerate() {
            if i == v {
                ends.push((t, Side::Out));
            }
            if j == v {
                ends.push((t, Side::In));
            }
        }
        ends
    }

    fn other_end(&self, t: usize, side: Side) -> usize {
        match side {
            Side::Out => self.arcs[t].1,
            Side::In => self.arcs[t].0,
        }
    }
}

/// Doubles every vertex `v` into `2v - 1, 2v` and reattaches arcs by the local rules.
pub fn inflate(t: &TangledDiagram) -> ColoredMatching {
    let m = t.arcs.len();
    let mut left_copy = vec![0usize; m];
    let mut right_copy = vec![0usize; m];
    let mut place = |idx: usize, side: Side, copy: usize| match side {
        Side::Out => left_copy[idx] = copy,
        Side::In => right_copy[idx] = copy,
    };
    for v in 1..=t.n {
        let (lo, hi) = (2 * v - 1, 2 * v);
        let ends = t.ends_at(v);
        let crossing = t.crossings.contains(&v);
        match ends.as_slice() {
            [] => {}
            [(idx, Side::Out), (same, Side::In)] if idx == same => {
                place(*idx, Side::Out, lo);
                place(*idx, Side::In, hi);
            }
            [(idx, side)] => place(*idx, *side, if *side == Side::Out { hi } else { lo }),
            [(a, sa), (b, sb)] if t.arcs[*a].0 == t.arcs[*b].0 && t.arcs[*a].1 == t.arcs[*b].1 => {
                // Parallel arcs: the first-listed one leaves from the left copy.
                let (first, second) = (a.min(b), a.max(b));
                let first_low = *sa == Side::Out || crossing;
                let (x, y) = if first_low { (lo, hi) } else { (hi, lo) };
                place(*first, *sa, x);
                place(*second, *sb, y);
            }
            [(a, sa), (b, sb)] if sa != sb => {
                let (out, inn) = if *sa == Side::Out { (*a, *b) } else { (*b, *a) };
                if crossing {
                    place(out, Side::Out, lo);
                    place(inn, Side::In, hi);
                } else {
                    place(inn, Side::In, lo);
                    place(out, Side::Out, hi);
                }
            }
            [(a, side), (b, _)] => {
                // Two outgoing or two incoming arcs; `near`/`far` by where the other end lies.
                let (first_by_pos, second_by_pos) = if t.other_end(*a, *side) < t.other_end(*b, *side) {
                    (*a, *b)
                } else {
                    (*b, *a)
                };
                let (x, y) = if crossing {
                    (first_by_pos, second_by_pos)
                } else {
                    (second_by_pos, first_by_pos)
                };
                place(x, *side, lo);
                place(y, *side, hi);
            }
            _ => unreachable!("validated degree"),
        }
    }
    let triples: Vec<_> = (0..m).map(|idx| (left_copy[idx], right_copy[idx], t.arcs[idx].2)).collect();
    ColoredMatching::from_colored_arcs(2 * t.n, t.r, &triples).expect("inflation uses each copy once")
}

/// Inverse of [`inflate`] on its image.
pub fn deflate(m: &ColoredMatching) -> Result<TangledDiagram> {
    let bad = |msg: String| Err(Error::NotAnInflation(msg));
    if m.n() % 2 == 1 {
        return bad(format!("{} points cannot be paired into vertices", m.n()));
    }
    let n = m.n() / 2;
    let isolated = m.partition().isolated_points();
    let (mins, maxs) = (m.min_set(), m.max_set());
    for v in 1..=n {
        if isolated.contains(&(2 * v)) && !maxs.contains(&(2 * v - 1)) {
            return bad(format!("{} is isolated but {} is not a block maximum", 2 * v, 2 * v - 1));
        }
        if isolated.contains(&(2 * v - 1)) && !mins.contains(&(2 * v)) {
            return bad(format!("{} is isolated but {} is not a block minimum", 2 * v - 1, 2 * v));
        }
    }
    let mut at = vec![None; 2 * n + 1];
    for (a, _) in m.colored_arcs() {
        at[a.left] = Some(a);
        at[a.right] = Some(a);
    }
    let mut crossings = BTreeSet::new();
    for v in 1..=n {
        if let (Some(x), Some(y)) = (at[2 * v - 1], at[2 * v]) {
            if x != y && x.left.min(y.left) < x.left.max(y.left) {
                let (p, q) = if x.left < y.left { (x, y) } else { (y, x) };
                if p.left < q.left && q.left < p.right && p.right < q.right {
                    crossings.insert(v);
                }
            }
        }
    }
    let arcs: Vec<_> = m
        .colored_arcs()
        .map(|(a, c)| (a.left.div_ceil(2), a.right.div_ceil(2), c))
        .collect();
    let diagram = TangledDiagram::new(n, m.r(), arcs, crossings).map_err(|e| Error::NotAnInflation(e.to_string()))?;
    if &inflate(&diagram) != m {
        return bad("local configuration has no tangled preimage".into());
    }
    Ok(diagram)
}

pub fn tangled_stats(t: &TangledDiagram) -> CrossNestStats {
    cr_ne_oracle(&inflate(t))
}

fn arc_multisets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let candidates: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut degree = vec![0usize; n + 1];
    let mut chosen = Vec::new();
    fn go(
        idx: usize,
        candidates: &[(usize, usize)],
        degree: &mut [usize],
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if idx == candidates.len() {
            out.push(chosen.clone());
            return;
        }
        let (i, j) = candidates[idx];
        let max_mult = if i == j { 1 } else { 2 };
        go(idx + 1, candidates, degree, chosen, out);
        let mut added = 0;
        for _ in 0..max_mult {
            if degree[i] + 1 > 2 || degree[j] + 1 > 2 || (i == j && degree[i] > 0) {
                break;
            }
            degree[i] += 1;
            degree[j] += 1;
            chosen.push((i, j));
            added += 1;
            go(idx + 1, candidates, degree, chosen, out);
        }
        for _ in 0..added {
            degree[i] -= 1;
            degree[j] -= 1;
            chosen.pop();
        }
    }
    go(0, &candidates, &mut degree, &mut chosen, &mut out);
    out
}

/// Every tangled diagram on `[n]` with colors in `[r]`, built directly from
/// arc multisets, crossing choices, and colorings.
pub fn enumerate_tangled(n: usize, r: usize) -> Vec<TangledDiagram> {
    let mut out = Vec::new();
    for pairs in arc_multisets(n) {
        let mut degree = vec![0usize; n + 1];
        for &(i, j) in &pairs {
            degree[i] += 1;
            degree[j] += 1;
        }
        let loops: BTreeSet<usize> = pairs.iter().filter(|p| p.0 == p.1).map(|p| p.0).collect();
        let flaggable: Vec<usize> = (1..=n).filter(|&v| degree[v] == 2 && !loops.contains(&v)).collect();
        for flags in flaggable.iter().copied().powerset() {
            let crossings: BTreeSet<usize> = flags.into_iter().collect();
            let consistent = pairs
                .iter()
                .tuple_windows()
                .filter(|(a, b)| a == b)
                .all(|(a, _)| crossings.contains(&a.0) == crossings.contains(&a.1));
            if !consistent {
                continue;
            }
            for colors in Colorings::new(pairs.len(), r) {
                let arcs = pairs.iter().zip(&colors).map(|(&(i, j), &c)| (i, j, c)).collect();
                out.push(TangledDiagram {
                    n,
                    r,
                    arcs,
                    crossings: crossings.clone(),
                });
            }
        }
    }
    out
}

impl fmt::Display for TangledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}; r={}; arcs={}; cross={}",
            self.n,
            self.r,
            self.arcs.iter().map(|(i, j, c)| format!("{i}-{j}:{c}")).join(","),
            self.crossings.iter().join(",")
        )
    }
}

impl FromStr for TangledDiagram {
    type Err = Error;

    /// `n=4; r=1; arcs=1-3:1,2-4:1; cross=2` with `r` and `cross` optional.
    fn from_str(s: &str) -> Result<Self> {
        let (mut n, mut r, mut arcs, mut crossings) = (None, None, Vec::new(), BTreeSet::new());
        for (key, value) in fields(s)? {
            match key {
                "n" => n = value.parse().ok(),
                "r" => r = value.parse().ok(),
                "arcs" => arcs = parse_arc_list(value)?,
                "cross" => {
                    for v in value.split(',').map(str::trim).filter(|v| !v.is_empty()) {
                        crossings.insert(v.parse().map_err(|_| Error::Parse(format!("bad vertex `{v}`")))?);
                    }
                }
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing or bad `n=`".into()))?;
        let r = r.unwrap_or_else(|| arcs.iter().map(|t| t.2).max().unwrap_or(1));
        TangledDiagram::new(n, r, arcs, crossings)
    }
}
