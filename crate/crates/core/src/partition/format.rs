//! Text and JSON forms of colored partitions.
//!
//! Text: `n=8; arcs=1-4:1,4-5:2,5-8:1` with arcs sorted by left endpoint.
//! When every arc has color 1 the `:1` suffixes are dropped. An optional
//! `r=<r>` field may appear between `n` and `arcs`; without it `r` is the
//! largest color used (at least 1).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ColoredSetPartition, SetPartition};
use crate::error::{Error, Result};

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} `{}`", s.trim())))
}

/// Parses an `i-j[:c]` list separated by commas.
pub(crate) fn parse_arc_list(s: &str) -> Result<Vec<(usize, usize, usize)>> {
    s.split(',')
        .map(str::trim)
        .filter(|item| !item.is_empty())
        .map(|item| {
            let (pair, color) = match item.split_once(':') {
                Some((pair, c)) => (pair, parse_usize(c, "color")?),
                None => (item, 1),
            };
            let (i, j) = pair
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("arc `{item}` lacks `-`")))?;
            Ok((parse_usize(i, "endpoint")?, parse_usize(j, "endpoint")?, color))
        })
        .collect()
}

pub(crate) fn write_arc_list(
    f: &mut fmt::Formatter<'_>,
    arcs: impl Iterator<Item = (usize, usize, usize)>,
    show_colors: bool,
) -> fmt::Result {
    for (idx, (i, j, c)) in arcs.enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{i}-{j}")?;
        if show_colors {
            write!(f, ":{c}")?;
        }
    }
    Ok(())
}

/// Splits `key=value; key=value` into pairs.
pub(crate) fn fields(s: &str) -> Result<Vec<(&str, &str)>> {
    s.split(';')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| {
            f.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse(format!("field `{f}` lacks `=`")))
        })
        .collect()
}

impl fmt::Display for ColoredSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n())?;
        // `r` is implied by the largest color unless the palette is larger.
        let implied = self.colors().iter().copied().max().unwrap_or(1);
        if self.r() != implied {
            write!(f, "r={}; ", self.r())?;
        }
        f.write_str("arcs=")?;
        let show = self.colors().iter().any(|&c| c != 1);
        write_arc_list(f, self.colored_arcs().map(|(a, c)| (a.left, a.right, c)), show)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; arcs=", self.n())?;
        write_arc_list(f, self.arcs().into_iter().map(|a| (a.left, a.right, 1)), false)
    }
}

impl FromStr for ColoredSetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut r = None;
        let mut arcs = None;
        for (key, value) in fields(s)? {
            match key {
                "n" => n = Some(parse_usize(value, "n")?),
                "r" => r = Some(parse_usize(value, "r")?),
                "arcs" => arcs = Some(parse_arc_list(value)?),
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n=`".into()))?;
        let arcs = arcs.unwrap_or_default();
        let r = r.unwrap_or_else(|| arcs.iter().map(|t| t.2).max().unwrap_or(1).max(1));
        if r == 0 {
            return Err(Error::Parse("r must be positive".into()));
        }
        ColoredSetPartition::from_colored_arcs(n, r, &arcs)
    }
}

/// JSON shape `{"n":8,"r":2,"arcs":[[1,4,1],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredPartitionJson {
    pub n: usize,
    pub r: usize,
    pub arcs: Vec<[usize; 3]>,
}

impl From<&ColoredSetPartition> for ColoredPartitionJson {
    fn from(lam: &ColoredSetPartition) -> Self {
        ColoredPartitionJson {
            n: lam.n(),
            r: lam.r(),
            arcs: lam.colored_arcs().map(|(a, c)| [a.left, a.right, c]).collect(),
        }
    }
}

impl TryFrom<ColoredPartitionJson> for ColoredSetPartition {
    type Error = Error;

    fn try_from(j: ColoredPartitionJson) -> Result<Self> {
        let triples: Vec<_> = j.arcs.iter().map(|a| (a[0], a[1], a[2])).collect();
        ColoredSetPartition::from_colored_arcs(j.n, j.r, &triples)
    }
}

impl ColoredSetPartition {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoredPartitionJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let parsed: ColoredPartitionJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        parsed.try_into()
    }
}
