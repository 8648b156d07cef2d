//! The multigraph whose closed walks count noncrossing, nonnesting colored partitions.
//!
//! Vertices are `r × (k-1)` matrices with weakly decreasing rows and entries
//! in `[0, j-1]`. Distinct vertices are joined by one edge when they differ
//! by `±E` or `E - E'` for unit matrices `E ≠ E'`. The vertex `A` carries
//! `1 + Σ d_i` loops, `d_i` being the number of distinct entries of row `i`
//! that are smaller than `j - 1`. Bounding those entries by `k - 1` instead
//! would break the closed-walk counts already for `G_{2,3,1}`; the `j - 1`
//! reading is the one that agrees with brute-force enumeration.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::BigCount;

/// Row-major `r × (k-1)` matrix.
pub type VertexMatrix = Vec<Vec<usize>>;

#[derive(Clone, Debug)]
pub struct StepMultigraph {
    j: usize,
    k: usize,
    r: usize,
    vertices: Vec<VertexMatrix>,
    /// `(neighbour, multiplicity)` per vertex, loops included, neighbours ascending.
    adjacency: Vec<Vec<(usize, usize)>>,
}

fn decreasing_rows(len: usize, j: usize) -> Vec<Vec<usize>> {
    // Multisets of size `len` from `[0, j-1]`, written in decreasing order.
    (0..j)
        .combinations_with_replacement(len)
        .map(|mut row| {
            row.reverse();
            row
        })
        .sorted()
        .collect()
}

fn is_vertex(a: &VertexMatrix, j: usize) -> bool {
    a.iter().all(|row| row.windows(2).all(|w| w[0] >= w[1]) && row.iter().all(|&x| x < j))
}

fn loop_count(a: &VertexMatrix, j: usize) -> usize {
    1 + a
        .iter()
        .map(|row| row.iter().filter(|&&x| x + 1 < j).unique().count())
        .sum::<usize>()
}

/// `G_{j,k,r}`; requires `j, k >= 2`.
pub fn build_multigraph(j: usize, k: usize, r: usize) -> Result<StepMultigraph> {
    if j < 2 || k < 2 {
        return Err(Error::BoundsTooSmall { j, k });
    }
    let rows = decreasing_rows(k - 1, j);
    let vertices: Vec<VertexMatrix> = (0..r)
        .map(|_| rows.iter().cloned())
        .multi_cartesian_product()
        .collect();
    let vertices = if r == 0 { vec![Vec::new()] } else { vertices };
    let index: HashMap<&VertexMatrix, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let cells: Vec<(usize, usize)> = (0..r).cartesian_product(0..k - 1).collect();
    let adjacency = vertices
        .iter()
        .map(|a| {
            let mut nbrs: Vec<(usize, usize)> = Vec::new();
            let mut push = |b: VertexMatrix| {
                if is_vertex(&b, j) {
                    nbrs.push((index[&b], 1));
                }
            };
            for &(i, l) in &cells {
                let mut up = a.clone();
                up[i][l] += 1;
                push(up);
                if a[i][l] > 0 {
                    let mut down = a.clone();
                    down[i][l] -= 1;
                    push(down);
                    for &(i2, l2) in &cells {
                        if (i2, l2) != (i, l) {
                            let mut shift = a.clone();
                            shift[i][l] -= 1;
                            shift[i2][l2] += 1;
                            push(shift);
                        }
                    }
                }
            }
            nbrs.push((index[a], loop_count(a, j)));
            nbrs.sort_unstable();
            nbrs.dedup();
            nbrs
        })
        .collect();
    Ok(StepMultigraph {
        j,
        k,
        r,
        vertices,
        adjacency,
    })
}

impl StepMultigraph {
    pub fn params(&self) -> (usize, usize, usize) {
        (self.j, self.k, self.r)
    }

    pub fn vertices(&self) -> &[VertexMatrix] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Index of the zero matrix.
    pub fn origin(&self) -> usize {
        0
    }

    pub fn index_of(&self, a: &VertexMatrix) -> Option<usize> {
        self.vertices.binary_search(a).ok()
    }

    /// Edge multiplicity `e(A, A')` between vertex indices.
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.adjacency[a]
            .binary_search_by_key(&b, |&(v, _)| v)
            .map(|pos| self.adjacency[a][pos].1)
            .unwrap_or(0)
    }

    pub fn neighbours(&self, a: usize) -> &[(usize, usize)] {
        &self.adjacency[a]
    }

    /// Dense adjacency matrix with multiplicities.
    pub fn adjacency_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count())
            .map(|a| (0..self.vertex_count()).map(|b| self.multiplicity(a, b)).collect())
            .collect()
    }

    fn step(&self, current: &[BigCount]) -> Vec<BigCount> {
        // The multiplicities are symmetric, so pulling along out-edges is exact.
        (0..self.vertex_count())
            .into_par_iter()
            .map(|v| {
                self.adjacency[v]
                    .iter()
                    .filter(|(u, _)| !current[*u].is_zero())
                    .fold(BigCount::zero(), |acc, &(u, mult)| acc + &current[u] * mult)
            })
            .collect()
    }
}

/// Closed walks of length `0..=max_len` at the zero matrix.
pub fn closed_walk_sequence(g: &StepMultigraph, max_len: usize) -> Vec<BigCount> {
    let mut current = vec![BigCount::zero(); g.vertex_count()];
    current[g.origin()] = BigCount::one();
    let mut out = vec![current[g.origin()].clone()];
    for _ in 0..max_len {
        current = g.step(&current);
        out.push(current[g.origin()].clone());
    }
    out
}

pub fn count_closed_walks(g: &StepMultigraph, m: usize) -> BigCount {
    closed_walk_sequence(g, m).pop().expect("sequence has m + 1 terms")
}

/// `NCN_{j,k}(n, r)` from walks of `n - 1` steps; the empty partition counts once.
pub fn ncn_via_graph(n: usize, r: usize, j: usize, k: usize) -> Result<BigCount> {
    let g = build_multigraph(j, k, r)?;
    Ok(if n == 0 { BigCount::one() } else { count_closed_walks(&g, n - 1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::count_ncn_brute;
    use crate::Bound;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn smallest_graph() {
        let g = build_multigraph(2, 2, 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(0, 0), 2);
        assert_eq!(g.multiplicity(0, 1), 1);
        assert_eq!(g.multiplicity(1, 1), 1);
        assert_eq!(build_multigraph(1, 2, 1).unwrap_err(), Error::BoundsTooSmall { j: 1, k: 2 });
        assert!(build_multigraph(2, 1, 1).is_err());
    }

    #[test]
    fn two_colored_example() {
        let g = build_multigraph(2, 2, 2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let b = g.index_of(&vec![vec![0], vec![0]]).unwrap();
        let b1 = g.index_of(&vec![vec![1], vec![0]]).unwrap();
        let b2 = g.index_of(&vec![vec![0], vec![1]]).unwrap();
        let b3 = g.index_of(&vec![vec![1], vec![1]]).unwrap();
        assert_eq!([b, b1, b2, b3].map(|v| g.multiplicity(v, v)), [3, 2, 2, 1]);
        assert_eq!(g.multiplicity(b, b3), 0);
        for (x, y) in [(b, b1), (b, b2), (b1, b2), (b1, b3), (b2, b3)] {
            assert_eq!(g.multiplicity(x, y), 1);
        }
        assert_eq!(count_closed_walks(&g, 2), big(11));
    }

    #[test]
    fn fibonacci_walks() {
        let g = build_multigraph(2, 2, 1).unwrap();
        assert_eq!(closed_walk_sequence(&g, 3), vec![big(1), big(2), big(5), big(13)]);
        assert_eq!(count_closed_walks(&g, 0), big(1));
    }

    #[test]
    fn multiplicities_are_symmetric() {
        for (j, k, r) in [(2, 2, 1), (3, 2, 2), (2, 3, 2), (3, 3, 1), (4, 3, 2)] {
            let g = build_multigraph(j, k, r).unwrap();
            let a = g.adjacency_matrix();
            for (x, row) in a.iter().enumerate() {
                for (y, &m) in row.iter().enumerate() {
                    assert_eq!(m, a[y][x]);
                }
            }
        }
    }

    #[test]
    fn walks_match_brute_force() {
        for n in 0..=6 {
            for r in 1..=2 {
                for (j, k) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
                    assert_eq!(
                        ncn_via_graph(n, r, j, k).unwrap(),
                        count_ncn_brute(n, r, Bound::At(j), Bound::At(k), None),
                        "n={n} r={r} j={j} k={k}"
                    );
                }
            }
        }
    }
}
