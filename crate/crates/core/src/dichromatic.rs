//! Dichromatic polynomial, its bigraded categorification, and impropriety
//! polynomials.
//!
//! Two conventions are exposed. [`dichromatic_poly`] is the plain state sum
//! `Z(v, λ) = Σ_S v^{e(S)} λ^{c(S)}`. [`signed_dichromatic`] is
//! `Z(p, q) = Σ_S (−1)^{e(S)} (1+p)^{e(S)} (1+q)^{c(S)}`, the form that is the
//! graded Euler characteristic of the complex; the two agree under
//! `v = −(1+p)`, `λ = 1+q`.
//!
//! Refined enhanced states label components with `1`/`x` and edges with
//! `1`/`y`. Edge labels are inert: a newly added edge is labeled `1`, and only
//! the grading `i = #y` reads them.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chain::{homology, one_plus, ComplexBuilder, GenId, GradedComplex, HomologySummary, MultiPoly};
use crate::chromatic::LAMBDA;
use crate::coloring::monochromatic_histogram;
use crate::cube::{compress, edge_string, expand, merge_x_mask, x_label_string, Cube};
use crate::error::{Error, Result};
use crate::graph::{enumerate_states, Multigraph, Reduction};

pub const V: &str = "v";
pub const P: &str = "p";
pub const Q: &str = "q";
pub const ALPHA: &str = "alpha";

/// `counts[e][c]` = number of states with `e` edges and `c` components.
fn state_counts(g: &Multigraph) -> Result<Vec<Vec<BigInt>>> {
    let mut counts = vec![vec![BigInt::zero(); g.vertex_count() + 1]; g.edge_count() + 1];
    for s in enumerate_states(g)? {
        counts[s.edge_count][s.component_count] += 1;
    }
    Ok(counts)
}

/// `Z(v, λ) = Σ_S v^{e(S)} λ^{c(S)}`.
pub fn dichromatic_poly(g: &Multigraph) -> Result<MultiPoly> {
    let counts = state_counts(g)?;
    let terms = counts.iter().enumerate().flat_map(|(e, row)| {
        row.iter()
            .enumerate()
            .map(move |(c, n)| (vec![c as u32, e as u32], n.clone()))
    });
    Ok(MultiPoly::from_terms(&[LAMBDA, V], terms))
}

/// `Z(v, λ)` from `Z_G = Z_{G−e} + v·Z_{G/e}` and `Z_{•^m} = λ^m`. Exponential;
/// intended as a cross-check on small graphs.
pub fn dichromatic_poly_recursive(g: &Multigraph) -> MultiPoly {
    if g.edge_count() == 0 {
        return MultiPoly::var(LAMBDA).pow(g.vertex_count() as u32);
    }
    let last = g.edge_count() - 1;
    let deleted = dichromatic_poly_recursive(&g.reduce(last, Reduction::Delete));
    let (a, b) = g.edge(last);
    let contracted = if a == b {
        // a loop contributes a factor (1 + v)
        deleted.clone()
    } else {
        dichromatic_poly_recursive(&g.reduce(last, Reduction::Contract))
    };
    &deleted + &(&MultiPoly::var(V) * &contracted)
}

/// `Z(p, q) = Σ_S (−1)^{e(S)} (1+p)^{e(S)} (1+q)^{c(S)}`, declared over `[q, p]`.
pub fn signed_dichromatic(g: &Multigraph) -> Result<MultiPoly> {
    let counts = state_counts(g)?;
    let minus_one_plus_p = -one_plus(P);
    let one_plus_q = one_plus(Q);
    let mut total = MultiPoly::zero(&[Q, P]);
    for (e, row) in counts.iter().enumerate() {
        let edge_factor = minus_one_plus_p.pow(e as u32);
        for (c, n) in row.iter().enumerate().filter(|(_, n)| !n.is_zero()) {
            let term = (&edge_factor * &one_plus_q.pow(c as u32)).scale(n);
            total = &total + &term;
        }
    }
    total.with_vars(&[Q, P])
}

/// Rewrites `Z(v, λ)` in the signed convention via `v = −(1+p)`, `λ = 1+q`.
pub fn to_signed_convention(z: &MultiPoly) -> Result<MultiPoly> {
    z.substitute_all(&[(V, &-one_plus(P)), (LAMBDA, &one_plus(Q))])?
        .with_vars(&[Q, P])
}

/// Refined enhanced-state complex graded by `(i, j) = (#y edges, #x components)`.
pub fn build_dichromatic_complex(g: &Multigraph) -> Result<GradedComplex> {
    let cube = Cube::new(g)?;
    let m = g.edge_count();
    let mut builder = ComplexBuilder::new(2);
    let mut first = Vec::with_capacity(cube.states.len());
    let mut ids: Vec<GenId> = Vec::new();
    for (bits, s) in cube.states.iter().enumerate() {
        first.push(ids.len());
        let es = edge_string(bits, m);
        for packed in 0..1usize << s.edge_count {
            let y = expand(packed, bits);
            let ys = edge_string(y, m);
            for x in 0..1usize << s.component_count {
                let grading = vec![y.count_ones(), x.count_ones()];
                let label = format!(
                    "e:{es} y:{ys} c:{}",
                    x_label_string(x, s.component_count)
                );
                ids.push(builder.add_generator(s.edge_count, grading, label));
            }
        }
    }
    for (bits, s) in cube.states.iter().enumerate() {
        let width = 1usize << s.component_count;
        for e in (0..m).filter(|&e| !s.edge_set.contains(e)) {
            let add = cube.add_edge(bits, e);
            let target_width = 1usize << cube.states[add.target].component_count;
            let sign = cube.edge_sign(bits, e);
            for packed in 0..1usize << s.edge_count {
                let y = expand(packed, bits);
                let packed_t = compress(y, add.target);
                for x in 0..width {
                    if let Some(xt) = merge_x_mask(x, &add) {
                        let src = ids[first[bits] + packed * width + x];
                        let dst = ids[first[add.target] + packed_t * target_width + xt];
                        builder.add_entry(src, dst, sign)?;
                    }
                }
            }
        }
    }
    builder.build()
}

#[derive(Debug, Clone)]
pub struct DichromaticHomology {
    pub summary: HomologySummary,
    /// `Σ_{i,j} p^i q^j χ(H^{*,i,j})`.
    pub graded_euler: MultiPoly,
}

impl DichromaticHomology {
    /// `C^i(λ) = (−1)^i Σ_j (λ−1)^j χ(H^{*,i,j})`.
    pub fn impropriety(&self, level: u32) -> MultiPoly {
        let lam_minus_one = &MultiPoly::var(LAMBDA) - &MultiPoly::one(&[LAMBDA]);
        let mut total = MultiPoly::zero(&[LAMBDA]);
        for (g, &chi) in self.summary.euler_map() {
            if g[0] == level && chi != 0 {
                total = &total + &lam_minus_one.pow(g[1]).scale(&BigInt::from(chi));
            }
        }
        if level % 2 == 1 {
            total = -total;
        }
        total
    }
}

/// Homology of the refined complex; checks the graded Euler characteristic
/// against [`signed_dichromatic`].
pub fn dichromatic_homology(g: &Multigraph) -> Result<DichromaticHomology> {
    let complex = build_dichromatic_complex(g)?;
    let summary = homology(&complex)?;
    let graded_euler = summary.euler_polynomial(&[P, Q]).with_vars(&[Q, P])?;
    let expected = signed_dichromatic(g)?;
    if graded_euler != expected {
        return Err(Error::TheoryViolation(format!(
            "graded Euler characteristic {graded_euler} differs from Z(p,q) = {expected}"
        )));
    }
    Ok(DichromaticHomology {
        summary,
        graded_euler,
    })
}

/// `hist[i]` = colorings with `n` colors having exactly `i` improper edges,
/// dense over `0..=e(G)`.
pub fn impropriety_counts_oracle(g: &Multigraph, n: u64) -> Result<Vec<u64>> {
    monochromatic_histogram(g, n)
}

/// Impropriety polynomials `C^i(λ)` for `i = 0..=e(G)`: the coefficients of
/// `α^i` in `Z(v = α−1, λ)`.
pub fn impropriety_polys_from_dichromatic(g: &Multigraph) -> Result<Vec<MultiPoly>> {
    let z = dichromatic_poly(g)?;
    let alpha_minus_one = &MultiPoly::var(ALPHA) - &MultiPoly::one(&[ALPHA]);
    let za = z.substitute(V, &alpha_minus_one)?;
    let mut levels: Vec<MultiPoly> = if za.vars().iter().any(|v| v == ALPHA) {
        za.coefficients_in(ALPHA)?
    } else {
        vec![za]
    };
    let levels_len = g.edge_count() + 1;
    levels.resize(levels_len, MultiPoly::zero(&[LAMBDA]));
    levels
        .into_iter()
        .map(|p| p.with_vars(&[LAMBDA]))
        .collect()
}

/// `C^i(λ)` recovered from the bigraded homology, checked against the
/// dichromatic expansion.
pub fn impropriety_from_homology(g: &Multigraph, level: u32) -> Result<MultiPoly> {
    let h = dichromatic_homology(g)?;
    let from_homology = h.impropriety(level);
    let polys = impropriety_polys_from_dichromatic(g)?;
    let expected = polys
        .get(level as usize)
        .cloned()
        .unwrap_or_else(|| MultiPoly::zero(&[LAMBDA]));
    if from_homology != expected {
        return Err(Error::TheoryViolation(format!(
            "impropriety level {level}: homology gives {from_homology}, dichromatic gives {expected}"
        )));
    }
    Ok(from_homology)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn parse_terms(vars: &[&str], terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(vars, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn plain_state_sums() {
        let lv = [LAMBDA, V];
        assert_eq!(
            dichromatic_poly(&catalog("path:1").unwrap()).unwrap(),
            parse_terms(&lv, &[(&[2, 0], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            dichromatic_poly(&catalog("loop").unwrap()).unwrap(),
            parse_terms(&lv, &[(&[1, 0], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            dichromatic_poly(&catalog("complete:3").unwrap()).unwrap(),
            parse_terms(&lv, &[(&[3, 0], 1), (&[2, 1], 3), (&[1, 2], 3), (&[1, 3], 1)])
        );
    }

    #[test]
    fn recursion_agrees_with_state_sum() {
        for spec in ["path:3", "cycle:4", "complete:4", "theta", "loop", "cycle:2"] {
            let g = catalog(spec).unwrap();
            assert_eq!(dichromatic_poly_recursive(&g), dichromatic_poly(&g).unwrap(), "{spec}");
        }
    }

    #[test]
    fn signed_examples() {
        let qp = [Q, P];
        assert_eq!(
            signed_dichromatic(&catalog("path:1").unwrap()).unwrap(),
            parse_terms(&qp, &[(&[2, 0], 1), (&[1, 0], 1), (&[0, 1], -1), (&[1, 1], -1)])
        );
        assert_eq!(
            signed_dichromatic(&Multigraph::empty(1)).unwrap(),
            parse_terms(&qp, &[(&[0, 0], 1), (&[1, 0], 1)])
        );
        assert_eq!(
            signed_dichromatic(&catalog("loop").unwrap()).unwrap(),
            parse_terms(&qp, &[(&[0, 1], -1), (&[1, 1], -1)])
        );
    }

    #[test]
    fn conventions_agree() {
        for g in crate::graph::standard_suite(5) {
            let via = to_signed_convention(&dichromatic_poly(&g).unwrap()).unwrap();
            assert_eq!(via, signed_dichromatic(&g).unwrap(), "{g}");
        }
    }

    #[test]
    fn single_edge_euler_and_homology() {
        let h = dichromatic_homology(&catalog("path:1").unwrap()).unwrap();
        let chi: Vec<(Vec<u32>, i64)> = h
            .summary
            .euler_map()
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(g, &c)| (g.clone(), c))
            .collect();
        assert_eq!(
            chi,
            vec![(vec![0, 1], 1), (vec![0, 2], 1), (vec![1, 0], -1), (vec![1, 1], -1)]
        );
        let nonzero: Vec<_> = h
            .summary
            .nonzero_groups()
            .map(|((g, k), grp)| (g.clone(), *k, grp.betti))
            .collect();
        assert_eq!(
            nonzero,
            vec![(vec![0, 1], 0, 1), (vec![0, 2], 0, 1), (vec![1, 0], 1, 1), (vec![1, 1], 1, 1)]
        );
    }

    #[test]
    fn isolated_vertex_complex() {
        let h = dichromatic_homology(&Multigraph::empty(1)).unwrap();
        let nonzero: Vec<_> = h.summary.nonzero_groups().map(|((g, k), _)| (g.clone(), *k)).collect();
        assert_eq!(nonzero, vec![(vec![0, 0], 0), (vec![0, 1], 0)]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(impropriety_counts_oracle(&catalog("path:1").unwrap(), 3).unwrap(), vec![6, 3]);
        assert_eq!(impropriety_counts_oracle(&catalog("path:2").unwrap(), 3).unwrap(), vec![12, 12, 3]);
        assert_eq!(impropriety_counts_oracle(&catalog("loop").unwrap(), 3).unwrap(), vec![0, 3]);
    }

    #[test]
    fn impropriety_single_edge() {
        let lam = MultiPoly::var(LAMBDA);
        let levels = impropriety_polys_from_dichromatic(&catalog("path:1").unwrap()).unwrap();
        assert_eq!(levels, vec![&lam.pow(2) - &lam, lam.clone()]);
        assert_eq!(impropriety_from_homology(&catalog("path:1").unwrap(), 0).unwrap(), &lam.pow(2) - &lam);
        assert_eq!(impropriety_from_homology(&catalog("path:1").unwrap(), 1).unwrap(), lam.clone());
        assert_eq!(impropriety_from_homology(&catalog("loop").unwrap(), 1).unwrap(), lam);
    }

    #[test]
    fn impropriety_levels_are_dense() {
        let levels = impropriety_polys_from_dichromatic(&catalog("complete:3").unwrap()).unwrap();
        assert_eq!(levels.len(), 4);
        // no coloring of a triangle has exactly two improper edges
        assert!(levels[2].is_zero());
        let empty = impropriety_polys_from_dichromatic(&Multigraph::empty(2)).unwrap();
        assert_eq!(empty, vec![MultiPoly::var(LAMBDA).pow(2)]);
    }
}
