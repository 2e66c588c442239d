//! Brute-force enumeration of vertex color assignments.
//!
//! These are the independent oracles the state sums and homology are checked
//! against; nothing here touches subgraph states.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const DEFAULT_COLORING_BUDGET: u128 = 100_000_000;

/// `n^k`, saturating at `u128::MAX`.
pub fn assignment_count(k: usize, n: u64) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..k {
        total = total.saturating_mul(n as u128);
    }
    total
}

pub(crate) fn check_budget(needed: u128) -> Result<()> {
    if needed > DEFAULT_COLORING_BUDGET {
        return Err(Error::Budget {
            needed,
            budget: DEFAULT_COLORING_BUDGET,
        });
    }
    Ok(())
}

/// Visits every assignment `0..n` of `slots` values, last slot fastest,
/// with `first` fixed in slot 0.
fn odometer(slots: usize, n: u64, first: u64, mut visit: impl FnMut(&[u64])) {
    let mut colors = vec![0u64; slots];
    colors[0] = first;
    loop {
        visit(&colors);
        let mut i = slots;
        loop {
            if i == 1 {
                return;
            }
            i -= 1;
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
        }
    }
}

/// Runs `visit` over every assignment of `n` values to `slots` positions,
/// partitioned on the value of slot 0, and merges per-partition results with
/// `merge` in partition order.
pub(crate) fn sweep<T, F, M>(slots: usize, n: u64, init: impl Fn() -> T + Sync, visit: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, &[u64]) + Sync,
    M: Fn(T, T) -> T,
{
    if slots == 0 {
        let mut acc = init();
        visit(&mut acc, &[]);
        return acc;
    }
    let parts: Vec<T> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            odometer(slots, n, first, |c| visit(&mut acc, c));
            acc
        })
        .collect();
    parts.into_iter().fold(init(), merge)
}

/// `hist[i]` = number of assignments of `n` colors to the vertices with exactly
/// `i` edges whose endpoints share a color. Loops always count.
pub fn monochromatic_histogram(g: &Multigraph, n: u64) -> Result<Vec<u64>> {
    check_budget(assignment_count(g.vertex_count(), n))?;
    let m = g.edge_count();
    if n == 0 {
        return Ok(vec![0; m + 1]);
    }
    let edges = g.edges();
    Ok(sweep(
        g.vertex_count(),
        n,
        || vec![0u64; m + 1],
        |hist, colors| {
            let mono = edges
                .iter()
                .filter(|&&(a, b)| colors[a] == colors[b])
                .count();
            hist[mono] += 1;
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn single_edge_three_colors() {
        let e1 = catalog("path:1").unwrap();
        assert_eq!(monochromatic_histogram(&e1, 3).unwrap(), vec![6, 3]);
    }

    #[test]
    fn loop_always_improper() {
        let l1 = catalog("loop").unwrap();
        assert_eq!(monochromatic_histogram(&l1, 3).unwrap(), vec![0, 3]);
    }

    #[test]
    fn empty_vertex_set() {
        let g = Multigraph::empty(0);
        assert_eq!(monochromatic_histogram(&g, 5).unwrap(), vec![1]);
    }

    #[test]
    fn budget_exceeded() {
        let g = Multigraph::empty(30);
        assert!(matches!(
            monochromatic_histogram(&g, 3),
            Err(Error::Budget { .. })
        ));
    }
}
