//! Chromatic polynomial and its enhanced-state categorification.
//!
//! Generators of the complex are spanning subgraphs whose components carry a
//! label `1` or `x` of `Z[x]/(x²)`. Homological degree is the edge count and
//! the internal grading `j` is the number of `x` labels. The differential adds
//! one edge at a time, multiplying labels when two components join, with sign
//! `(−1)^{#edges of s before e}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chain::{homology, one_plus, ComplexBuilder, GenId, GradedComplex, HomologySummary, MultiPoly};
use crate::coloring::monochromatic_histogram;
use crate::cube::{edge_string, merge_x_mask, x_label_string, Cube};
use crate::error::{Error, Result};
use crate::graph::{enumerate_states, Multigraph};

pub const LAMBDA: &str = "lambda";
pub const Q: &str = "q";

fn univariate(var: &str, coeffs: &[BigInt]) -> MultiPoly {
    MultiPoly::from_terms(
        &[var],
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (vec![k as u32], c.clone())),
    )
}

/// `Σ_S (−1)^{e(S)} λ^{c(S)}` over all spanning subgraphs.
pub fn chromatic_state_sum(g: &Multigraph) -> Result<MultiPoly> {
    let mut coeffs = vec![BigInt::zero(); g.vertex_count() + 1];
    for s in enumerate_states(g)? {
        if s.edge_count % 2 == 0 {
            coeffs[s.component_count] += 1;
        } else {
            coeffs[s.component_count] -= 1;
        }
    }
    Ok(univariate(LAMBDA, &coeffs))
}

/// Structural key: isolated vertices removed, vertices relabeled by first
/// occurrence in edge order, endpoint pairs normalized and sorted.
type DcKey = (usize, Vec<(usize, usize)>);

fn canonical(vertex_count: usize, edges: &[(usize, usize)]) -> (usize, DcKey) {
    let mut relabel = vec![usize::MAX; vertex_count];
    let mut next = 0;
    let mut out = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        for v in [a, b] {
            if relabel[v] == usize::MAX {
                relabel[v] = next;
                next += 1;
            }
        }
        let (x, y) = (relabel[a], relabel[b]);
        out.push((x.min(y), x.max(y)));
    }
    out.sort_unstable();
    (vertex_count - next, (next, out))
}

fn poly_mul_lambda_pow(p: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); k];
    out.extend(p.iter().cloned());
    out
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    out
}

fn dc(key: &DcKey, memo: &mut HashMap<DcKey, Vec<BigInt>>) -> Vec<BigInt> {
    let (n, edges) = key;
    if edges.iter().any(|&(a, b)| a == b) {
        return vec![];
    }
    if edges.is_empty() {
        let mut p = vec![BigInt::zero(); *n + 1];
        p[*n] = BigInt::one();
        return p;
    }
    if let Some(p) = memo.get(key) {
        return p.clone();
    }
    let (a, b) = edges[0];
    // A parallel copy becomes a loop under contraction, so only deletion survives.
    let result = if edges[1..].contains(&(a, b)) {
        let (iso, k) = canonical(*n, &edges[1..]);
        poly_mul_lambda_pow(&dc(&k, memo), iso)
    } else {
        let (iso_d, kd) = canonical(*n, &edges[1..]);
        let deleted = poly_mul_lambda_pow(&dc(&kd, memo), iso_d);
        let merged: Vec<(usize, usize)> = edges[1..]
            .iter()
            .map(|&(u, v)| {
                let f = |x: usize| match x.cmp(&b) {
                    std::cmp::Ordering::Less => x,
                    std::cmp::Ordering::Equal => a,
                    std::cmp::Ordering::Greater => x - 1,
                };
                (f(u), f(v))
            })
            .collect();
        let (iso_c, kc) = canonical(n - 1, &merged);
        let contracted = poly_mul_lambda_pow(&dc(&kc, memo), iso_c);
        poly_sub(&deleted, &contracted)
    };
    memo.insert(key.clone(), result.clone());
    result
}

/// Chromatic polynomial in `lambda` by memoized deletion–contraction.
pub fn chromatic_poly_dc(g: &Multigraph) -> MultiPoly {
    let (iso, key) = canonical(g.vertex_count(), g.edges());
    let mut memo = HashMap::new();
    let p = poly_mul_lambda_pow(&dc(&key, &mut memo), iso);
    univariate(LAMBDA, &p)
}

/// Number of proper colorings with `n` colors, by exhaustive enumeration.
pub fn brute_force_proper_colorings(g: &Multigraph, n: u64) -> Result<u64> {
    Ok(monochromatic_histogram(g, n)?[0])
}

/// Enhanced-state complex graded by `j`, the number of `x` labels.
pub fn build_chromatic_complex(g: &Multigraph) -> Result<GradedComplex> {
    let cube = Cube::new(g)?;
    let m = g.edge_count();
    let mut builder = ComplexBuilder::new(1);
    let mut first: Vec<usize> = Vec::with_capacity(cube.states.len());
    let mut ids: Vec<GenId> = Vec::new();
    for (bits, s) in cube.states.iter().enumerate() {
        first.push(ids.len());
        let es = edge_string(bits, m);
        for mask in 0..1usize << s.component_count {
            let j = mask.count_ones();
            let label = format!("e:{es} c:{}", x_label_string(mask, s.component_count));
            ids.push(builder.add_generator(s.edge_count, vec![j], label));
        }
    }
    for (bits, s) in cube.states.iter().enumerate() {
        for e in (0..m).filter(|&e| !s.edge_set.contains(e)) {
            let add = cube.add_edge(bits, e);
            let sign = cube.edge_sign(bits, e);
            for mask in 0..1usize << s.component_count {
                if let Some(t) = merge_x_mask(mask, &add) {
                    builder.add_entry(ids[first[bits] + mask], ids[first[add.target] + t], sign)?;
                }
            }
        }
    }
    builder.build()
}

#[derive(Debug, Clone)]
pub struct ChromaticHomology {
    pub summary: HomologySummary,
    /// `Σ_j q^j χ(H^{*,j})`.
    pub graded_euler: MultiPoly,
    /// The state sum with `λ = 1 + q`.
    pub polynomial_q: MultiPoly,
}

pub fn chromatic_homology_report(g: &Multigraph) -> Result<ChromaticHomology> {
    let complex = build_chromatic_complex(g)?;
    let summary = homology(&complex)?;
    let graded_euler = summary.euler_polynomial(&[Q]);
    let polynomial_q = chromatic_state_sum(g)?.substitute(LAMBDA, &one_plus(Q))?;
    if graded_euler != polynomial_q {
        return Err(Error::TheoryViolation(format!(
            "graded Euler characteristic {graded_euler} differs from C(1+q) = {polynomial_q}"
        )));
    }
    Ok(ChromaticHomology {
        summary,
        graded_euler,
        polynomial_q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn lam_poly(coeffs: &[i64]) -> MultiPoly {
        univariate(LAMBDA, &coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
    }

    fn q_poly(coeffs: &[i64]) -> MultiPoly {
        univariate(Q, &coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn deletion_contraction_examples() {
        assert_eq!(chromatic_poly_dc(&catalog("path:1").unwrap()), lam_poly(&[0, -1, 1]));
        assert_eq!(chromatic_poly_dc(&catalog("complete:3").unwrap()), lam_poly(&[0, 2, -3, 1]));
        assert!(chromatic_poly_dc(&catalog("loop").unwrap()).is_zero());
        assert_eq!(chromatic_poly_dc(&Multigraph::empty(3)), lam_poly(&[0, 0, 0, 1]));
        // parallel edges do not change the polynomial
        assert_eq!(chromatic_poly_dc(&catalog("theta").unwrap()), lam_poly(&[0, -1, 1]));
    }

    #[test]
    fn state_sum_examples() {
        assert_eq!(chromatic_state_sum(&catalog("path:1").unwrap()).unwrap(), lam_poly(&[0, -1, 1]));
        assert_eq!(chromatic_state_sum(&catalog("path:2").unwrap()).unwrap(), lam_poly(&[0, 1, -2, 1]));
        assert_eq!(
            chromatic_state_sum(&catalog("complete:3").unwrap()).unwrap(),
            lam_poly(&[0, 2, -3, 1])
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_proper_colorings(&catalog("path:1").unwrap(), 3).unwrap(), 6);
        assert_eq!(brute_force_proper_colorings(&catalog("complete:3").unwrap(), 3).unwrap(), 6);
        for n in 1..5 {
            assert_eq!(brute_force_proper_colorings(&catalog("loop").unwrap(), n).unwrap(), 0);
        }
    }

    #[test]
    fn single_edge_chain_ranks() {
        let c = build_chromatic_complex(&catalog("path:1").unwrap()).unwrap();
        let ranks = c.chain_ranks();
        let r = |j: u32, k: usize| ranks.get(&(vec![j], k)).copied().unwrap_or(0);
        assert_eq!((r(0, 0), r(1, 0), r(2, 0)), (1, 2, 1));
        assert_eq!((r(0, 1), r(1, 1), r(2, 1)), (1, 1, 0));
    }

    #[test]
    fn single_edge_homology() {
        let rep = chromatic_homology_report(&catalog("path:1").unwrap()).unwrap();
        let nonzero: Vec<_> = rep.summary.nonzero_groups().map(|(k, h)| (k.clone(), h.betti)).collect();
        assert_eq!(nonzero, vec![((vec![1], 0), 1), ((vec![2], 0), 1)]);
        assert!(rep.summary.groups().values().all(|h| h.torsion.is_empty()));
        assert_eq!(rep.graded_euler, q_poly(&[0, 1, 1]));
    }

    #[test]
    fn loop_is_acyclic() {
        let l1 = catalog("loop").unwrap();
        let c = build_chromatic_complex(&l1).unwrap();
        assert_eq!(c.generator_count(), 4);
        let rep = chromatic_homology_report(&l1).unwrap();
        assert_eq!(rep.summary.nonzero_groups().count(), 0);
        assert!(rep.graded_euler.is_zero());
    }

    #[test]
    fn triangle_graded_euler() {
        let rep = chromatic_homology_report(&catalog("complete:3").unwrap()).unwrap();
        assert_eq!(rep.graded_euler, q_poly(&[0, -1, 0, 1]));
    }

    #[test]
    fn canonical_key_strips_isolated_vertices() {
        let (iso, (n, edges)) = canonical(5, &[(3, 4), (4, 3)]);
        assert_eq!(iso, 3);
        assert_eq!(n, 2);
        assert_eq!(edges, vec![(0, 1), (0, 1)]);
    }
}
