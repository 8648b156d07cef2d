//! Walks with steps `±(1,0)`, `±(0,1)`, `±(1,-1)` in `Z²` and in the quarter plane.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::BigCount;

const STEPS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// Counts per lattice point after a fixed number of steps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WalkTable(BTreeMap<(i64, i64), BigCount>);

impl WalkTable {
    fn origin() -> Self {
        WalkTable(BTreeMap::from([((0, 0), BigCount::one())]))
    }

    pub fn get(&self, i: i64, j: i64) -> BigCount {
        self.0.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), BigCount> {
        &self.0
    }

    pub fn mass(&self) -> BigCount {
        self.0.values().sum()
    }

    fn step(&self, confined: bool) -> Self {
        let mut next = BTreeMap::new();
        for (&(i, j), count) in &self.0 {
            for (di, dj) in STEPS {
                let (a, b) = (i + di, j + dj);
                if !confined || (a >= 0 && b >= 0) {
                    *next.entry((a, b)).or_insert_with(BigCount::zero) += count;
                }
            }
        }
        WalkTable(next)
    }
}

/// `w[n]` counts walks in `Z²`, `q[n]` walks confined to `N²`, for `n = 0..=N`.
#[derive(Clone, Debug)]
pub struct QuarterPlaneTables {
    pub w: Vec<WalkTable>,
    pub q: Vec<WalkTable>,
}

pub fn quarter_plane_tables(max_n: usize) -> QuarterPlaneTables {
    let mut w = vec![WalkTable::origin()];
    let mut q = vec![WalkTable::origin()];
    for n in 0..max_n {
        w.push(w[n].step(false));
        q.push(q[n].step(true));
    }
    QuarterPlaneTables { w, q }
}

/// The reflection identity at step `n`:
/// `q_n(0,0) = w_n(0,0) - w_n(-2,1) + w_n(-3,0) - w_n(-2,-2) + w_n(0,-3) - w_n(1,-2)`.
pub fn reflection_holds(tables: &QuarterPlaneTables, n: usize) -> bool {
    let w = |i: i64, j: i64| BigInt::from(tables.w[n].get(i, j));
    let rhs = w(0, 0) - w(-2, 1) + w(-3, 0) - w(-2, -2) + w(0, -3) - w(1, -2);
    rhs == BigInt::from(tables.q[n].get(0, 0))
}

pub fn reflection_check(n: usize) -> bool {
    reflection_holds(&quarter_plane_tables(n), n)
}
