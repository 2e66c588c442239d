//! The color complex: spanning subgraphs with one algebra generator per
//! component, differentiated by adding edges and multiplying colors.

use super::algebra::ColorAlgebra;
use crate::chain::{homology, ComplexBuilder, GenId, GradedComplex, HomologySummary};
use crate::chromatic::{brute_force_proper_colorings, chromatic_poly_dc, LAMBDA};
use crate::cube::{edge_string, Cube};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph};

pub const DEFAULT_GENERATOR_BUDGET: u128 = 2_000_000;

/// The complex together with the number of partial-differential terms that
/// vanished because a product was zero.
#[derive(Debug, Clone)]
pub struct ColorComplex {
    pub complex: GradedComplex,
    pub dropped_terms: usize,
}

fn decode(mut index: usize, n: usize, c: usize) -> Vec<usize> {
    (0..c)
        .map(|_| {
            let d = index % n;
            index /= n;
            d
        })
        .collect()
}

fn encode(colors: &[usize], n: usize) -> usize {
    colors.iter().rev().fold(0, |acc, &d| acc * n + d)
}

/// `(−1)^{#edges outside s preceding e}`.
fn complement_sign(s: usize, e: usize) -> i64 {
    let outside = e - EdgeSet(s as u64).count_below(e);
    if outside % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn build_color_complex(g: &Multigraph, a: &ColorAlgebra) -> Result<ColorComplex> {
    let cube = Cube::new(g)?;
    let n = a.size();
    let needed = cube
        .states
        .iter()
        .map(|s| (n as u128).saturating_pow(s.component_count as u32))
        .fold(0u128, u128::saturating_add);
    if needed > DEFAULT_GENERATOR_BUDGET {
        return Err(Error::Budget {
            needed,
            budget: DEFAULT_GENERATOR_BUDGET,
        });
    }
    let m = g.edge_count();
    let mut builder = ComplexBuilder::new(0);
    let mut first = Vec::with_capacity(cube.states.len());
    let mut ids: Vec<GenId> = Vec::new();
    for (bits, s) in cube.states.iter().enumerate() {
        first.push(ids.len());
        let es = edge_string(bits, m);
        for idx in 0..n.pow(s.component_count as u32) {
            let colors: Vec<&str> = decode(idx, n, s.component_count)
                .into_iter()
                .map(|k| a.color_name(k))
                .collect();
            let label = format!("e:{es} c:{}", colors.join(","));
            ids.push(builder.add_generator(s.edge_count, vec![], label));
        }
    }
    let mut dropped_terms = 0;
    for (bits, s) in cube.states.iter().enumerate() {
        for e in (0..m).filter(|&e| !s.edge_set.contains(e)) {
            let add = cube.add_edge(bits, e);
            let sign = complement_sign(bits, e);
            let target_c = cube.states[add.target].component_count;
            for idx in 0..n.pow(s.component_count as u32) {
                let colors = decode(idx, n, s.component_count);
                let mut out = vec![usize::MAX; target_c];
                for (c, &col) in colors.iter().enumerate() {
                    out[add.new_of[c]] = col;
                }
                if let Some((x, y)) = add.joined {
                    match a.product(colors[x], colors[y]) {
                        Some(p) => out[add.new_of[x]] = p,
                        None => {
                            dropped_terms += 1;
                            continue;
                        }
                    }
                }
                builder.add_entry(ids[first[bits] + idx], ids[first[add.target] + encode(&out, n)], sign)?;
            }
        }
    }
    Ok(ColorComplex {
        complex: builder.build()?,
        dropped_terms,
    })
}

#[derive(Debug, Clone)]
pub struct ColorHomology {
    pub summary: HomologySummary,
    pub euler: i64,
    pub dropped_terms: usize,
    pub generator_count: usize,
}

/// Homology of the color complex; checks `χ = C_G(n)` via deletion–contraction.
pub fn color_homology(g: &Multigraph, a: &ColorAlgebra) -> Result<ColorHomology> {
    let cc = build_color_complex(g, a)?;
    let summary = homology(&cc.complex)?;
    let euler = summary.total_euler();
    let expected = chromatic_poly_dc(g).eval_integer(&[(LAMBDA, a.size() as i64)])?;
    if num_bigint::BigInt::from(euler) != expected {
        return Err(Error::TheoryViolation(format!(
            "Euler characteristic {euler} differs from C_G({}) = {expected}",
            a.size()
        )));
    }
    Ok(ColorHomology {
        summary,
        euler,
        dropped_terms: cc.dropped_terms,
        generator_count: cc.complex.generator_count(),
    })
}

pub fn euler_check(g: &Multigraph, a: &ColorAlgebra) -> Result<i64> {
    Ok(color_homology(g, a)?.euler)
}

/// With `A(n)`: `H⁰` is free of rank equal to the number of proper
/// colorings, and everything above degree 0 vanishes.
pub fn verify_proposition(g: &Multigraph, n: usize) -> Result<HomologySummary> {
    let h = color_homology(g, &ColorAlgebra::orthogonal(n)?)?;
    let proper = brute_force_proper_colorings(g, n as u64)? as usize;
    let h0 = h.summary.group(0, &[]);
    if h0.betti != proper || !h0.torsion.is_empty() {
        return Err(Error::TheoryViolation(format!(
            "H⁰ has rank {} and torsion {:?}; expected free of rank {proper}",
            h0.betti, h0.torsion
        )));
    }
    if let Some(((_, k), grp)) = h.summary.nonzero_groups().find(|((_, k), _)| *k > 0) {
        return Err(Error::TheoryViolation(format!(
            "H^{k} is nonzero (rank {}, torsion {:?})",
            grp.betti, grp.torsion
        )));
    }
    Ok(h.summary)
}
