//! Depth-first enumeration of r-partite tableaux of a given class.

use super::{RPartitePartition, RPartiteTableau, TableauClass};

struct Search {
    length: usize,
    class: TableauClass,
    max_rows: Option<usize>,
    max_cols: Option<usize>,
    path: Vec<RPartitePartition>,
    out: Vec<RPartiteTableau>,
}

impl Search {
    fn fits(&self, p: &RPartitePartition) -> bool {
        self.max_rows.is_none_or(|m| p.max_rows() <= m) && self.max_cols.is_none_or(|m| p.max_cols() <= m)
    }

    fn successors(&self, current: &RPartitePartition, step: usize) -> Vec<RPartitePartition> {
        let (stay, grow, shrink) = match self.class {
            TableauClass::SemiOscillating => (true, true, true),
            TableauClass::Oscillating => (false, true, true),
            TableauClass::Vacillating => (true, step.is_multiple_of(2), !step.is_multiple_of(2)),
        };
        let mut next = Vec::new();
        if stay {
            next.push(current.clone());
        }
        if grow {
            next.extend(current.add_one().into_iter().filter(|p| self.fits(p)));
        }
        if shrink {
            next.extend(current.remove_one());
        }
        next
    }

    fn run(&mut self) {
        let depth = self.path.len() - 1;
        let current = self.path[depth].clone();
        if depth == self.length {
            if current.is_empty() {
                self.out.push(RPartiteTableau::from_steps_unchecked(self.path.clone()));
            }
            return;
        }
        let remaining = self.length - depth - 1;
        for p in self.successors(&current, depth + 1) {
            if p.size() <= remaining {
                self.path.push(p);
                self.run();
                self.path.pop();
            }
        }
    }
}

/// All tableaux of `length` steps with `r` components in `class`.
///
/// `max_rows` and `max_cols` are inclusive limits on every component of
/// every entry; `None` leaves that dimension unconstrained. The order is
/// depth-first with "stay" before "add" before "remove" at each step.
pub fn enumerate_tableaux(
    length: usize,
    r: usize,
    class: TableauClass,
    max_rows: Option<usize>,
    max_cols: Option<usize>,
) -> Vec<RPartiteTableau> {
    let mut search = Search {
        length,
        class,
        max_rows,
        max_cols,
        path: vec![RPartitePartition::empty(r)],
        out: Vec::new(),
    };
    search.run();
    search.out
}
