//! Smith normal form over the integers for sparse matrices.
//!
//! Elimination works on sparse rows with a column occupancy index. Each step
//! takes the nonzero entry of least absolute value (ties: lowest row, then
//! lowest column) as pivot and reduces its column by row operations. Once the
//! column is clear the pivot's row is reduced modulo the pivot by column
//! operations, which touch no other row. A step that leaves a nonzero
//! remainder hands over to a strictly smaller pivot, so the loop terminates.
//! The resulting diagonal is brought into divisibility order by gcd/lcm
//! exchanges.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::SparseIntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// `d1 | d2 | ... | dr`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

struct Elimination {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
    active: BTreeSet<usize>,
}

impl Elimination {
    fn new(m: &SparseIntMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.row_count()];
        let mut col_rows = vec![BTreeSet::new(); m.col_count()];
        for (r, c, v) in m.iter() {
            rows[r].insert(c, v.clone());
            col_rows[c].insert(r);
        }
        let active = (0..m.row_count()).filter(|&r| !rows[r].is_empty()).collect();
        Self {
            rows,
            col_rows,
            active,
        }
    }

    fn select_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for &r in &self.active {
            for (&c, v) in &self.rows[r] {
                let better = match best {
                    None => true,
                    Some((_, _, b)) => v.abs() < b.abs(),
                };
                if better {
                    best = Some((r, c, v));
                    if v.abs().is_one() {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    /// `row[target] -= factor · row[source]`.
    fn row_axpy(&mut self, target: usize, source: usize, factor: &BigInt) {
        let src: Vec<(usize, BigInt)> = self.rows[source]
            .iter()
            .map(|(&c, v)| (c, v * factor))
            .collect();
        let row = &mut self.rows[target];
        for (c, delta) in src {
            let entry = row.entry(c).or_default();
            *entry -= delta;
            if entry.is_zero() {
                row.remove(&c);
                self.col_rows[c].remove(&target);
            } else {
                self.col_rows[c].insert(target);
            }
        }
        if self.rows[target].is_empty() {
            self.active.remove(&target);
        }
    }

    fn remove_row(&mut self, r: usize) {
        for (&c, _) in &self.rows[r] {
            self.col_rows[c].remove(&r);
        }
        self.rows[r].clear();
        self.active.remove(&r);
    }

    fn run(mut self) -> Vec<BigInt> {
        let mut pivots = Vec::new();
        while let Some((r, c)) = self.select_pivot() {
            let p = self.rows[r][&c].clone();

            let others: Vec<usize> = self.col_rows[c].iter().copied().filter(|&i| i != r).collect();
            let mut column_clear = true;
            for i in others {
                let a = self.rows[i][&c].clone();
                let q = a.div_floor(&p);
                if !q.is_zero() {
                    self.row_axpy(i, r, &q);
                }
                if self.rows[i].contains_key(&c) {
                    column_clear = false;
                }
            }
            if !column_clear {
                continue;
            }

            let mut row_clear = true;
            let rest: Vec<(usize, BigInt)> = self.rows[r]
                .iter()
                .filter(|(&j, _)| j != c)
                .map(|(&j, v)| (j, v.clone()))
                .collect();
            for (j, a) in rest {
                let rem = a.mod_floor(&p);
                if rem.is_zero() {
                    self.rows[r].remove(&j);
                    self.col_rows[j].remove(&r);
                } else {
                    self.rows[r].insert(j, rem);
                    row_clear = false;
                }
            }
            if row_clear {
                pivots.push(p.abs());
                self.remove_row(r);
            }
        }
        pivots
    }
}

/// Brings a list of positive diagonal entries into divisibility order.
fn normalize_diagonal(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    let units = diag.iter().filter(|d| d.is_one()).count();
    diag.retain(|d| !d.is_one());
    diag.sort();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if !(&diag[j] % &diag[i]).is_zero() {
                let g = diag[i].gcd(&diag[j]);
                let l = diag[i].lcm(&diag[j]);
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    let mut out = vec![BigInt::one(); units];
    out.extend(diag);
    out.sort();
    out
}

pub fn smith_normal_form(m: &SparseIntMatrix) -> SmithForm {
    let pivots = Elimination::new(m).run();
    let rank = pivots.len();
    SmithForm {
        invariant_factors: normalize_diagonal(pivots),
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> (Vec<i64>, usize) {
        let snf = smith_normal_form(&SparseIntMatrix::from_dense(rows));
        let f = snf
            .invariant_factors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect();
        (f, snf.rank)
    }

    #[test]
    fn scalar() {
        assert_eq!(factors(&[vec![2]]), (vec![2], 1));
        assert_eq!(factors(&[vec![-7]]), (vec![7], 1));
        assert_eq!(factors(&[vec![0]]), (vec![], 0));
    }

    #[test]
    fn diagonal_needs_reordering() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), (vec![1, 6], 2));
        assert_eq!(factors(&[vec![4, 0], vec![0, 6]]), (vec![2, 12], 2));
    }

    #[test]
    fn dense_two_by_two() {
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), (vec![2, 4], 2));
    }

    #[test]
    fn rank_deficient() {
        assert_eq!(factors(&[vec![1, 2, 3], vec![2, 4, 6]]), (vec![1], 1));
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), (vec![], 0));
    }

    #[test]
    fn remainder_in_pivot_row() {
        // Column clears immediately but the row leaves a remainder.
        assert_eq!(factors(&[vec![2, 3]]), (vec![1], 1));
        assert_eq!(factors(&[vec![4, 6, 10]]), (vec![2], 1));
    }

    #[test]
    fn empty_matrix() {
        let snf = smith_normal_form(&SparseIntMatrix::new(0, 5));
        assert_eq!(snf.rank, 0);
        assert!(snf.invariant_factors.is_empty());
    }
}
