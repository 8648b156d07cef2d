use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Strict upper bound on a crossing or nesting number.
///
/// `At(j)` admits statistics `< j`; `Unbounded` drops the constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bound {
    At(usize),
    Unbounded,
}

impl Bound {
    pub fn admits(self, value: usize) -> bool {
        match self {
            Bound::At(j) => value < j,
            Bound::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Bound::At(j) => Some(j),
            Bound::Unbounded => None,
        }
    }
}

impl From<usize> for Bound {
    fn from(j: usize) -> Self {
        Bound::At(j)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::At(j) => write!(f, "{j}"),
            Bound::Unbounded => f.write_str("inf"),
        }
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "unbounded" | "none" => Ok(Bound::Unbounded),
            t => t
                .parse()
                .map(Bound::At)
                .map_err(|_| Error::Parse(format!("bad bound `{t}`"))),
        }
    }
}
