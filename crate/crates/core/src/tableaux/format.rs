//! Tableau text: steps separated by `;`, components by `|`, parts by `,`.
//!
//! The empty partition is the empty string, so the two-colored entry
//! `((1), ∅)` reads `1|`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::{IntegerPartition, RPartitePartition, RPartiteTableau};
use crate::error::{Error, Result};

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts().iter().join(","))
    }
}

impl fmt::Display for RPartitePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.components().iter().join("|"))
    }
}

impl fmt::Display for RPartiteTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.steps().iter().join(";"))
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntegerPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{}`", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerPartition::new(parts)
    }
}

impl FromStr for RPartitePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split('|')
            .map(str::parse)
            .collect::<Result<Vec<IntegerPartition>>>()
            .map(RPartitePartition::new)
    }
}

impl FromStr for RPartiteTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s.split(';').map(str::parse).collect::<Result<Vec<RPartitePartition>>>()?;
        if steps.windows(2).any(|w| w[0].r() != w[1].r()) {
            return Err(Error::Parse("steps have different numbers of components".into()));
        }
        RPartiteTableau::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ColoredSetPartition;
    use crate::tableaux::to_vacillating;

    #[test]
    fn worked_example_text() {
        let lam: ColoredSetPartition = "n=8; arcs=1-4:1,4-5:2,5-8:1,2-6:2,6-7:1".parse().unwrap();
        let text = to_vacillating(&lam).to_string();
        assert_eq!(
            text,
            "|;|;1|;1|;1|1;1|1;1|1;|1;|1,1;|1;1|1;1|;1,1|;1|;1|;|;|"
        );
        let parsed: RPartiteTableau = text.parse().unwrap();
        assert_eq!(parsed, to_vacillating(&lam));
    }

    #[test]
    fn single_component_text() {
        let t: RPartiteTableau = ";1;2;2,1;2;1;".parse().unwrap();
        assert_eq!(t.length(), 6);
        assert_eq!(t.to_string(), ";1;2;2,1;2;1;");
        assert!(";2".parse::<RPartiteTableau>().is_err());
        assert!("|;1".parse::<RPartiteTableau>().is_err());
        assert!(";1,2;".parse::<RPartiteTableau>().is_err());
    }
}
