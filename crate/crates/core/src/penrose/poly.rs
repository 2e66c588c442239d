//! The PK polynomial, its dichromatic refinement, and the coloring oracles.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::matched::MatchedCubicGraph;
use super::state::{check_sites, trace_components, Resolution};
use crate::chain::{one_plus, MultiPoly};
use crate::chromatic::LAMBDA;
use crate::coloring::{assignment_count, check_budget, sweep};
use crate::dichromatic::{ALPHA, P, Q, V};
use crate::error::Result;

pub const W: &str = "w";
pub const R: &str = "r";

fn pow3(m: usize) -> usize {
    3usize.pow(m as u32)
}

/// Unlabeled states: Parallel, Crossed, or a node (recorded as Node0).
fn unlabeled(index: usize, m: usize) -> Vec<Resolution> {
    let mut i = index;
    (0..m)
        .map(|_| {
            let d = i % 3;
            i /= 3;
            Resolution::from_digit(d)
        })
        .collect()
}

/// `PK(λ) = Σ_S (−1)^{n(S)} 2^{n(S)} λ^{c(S)}` over the `3^{|M|}` states
/// without node labels.
pub fn pk_polynomial(g: &MatchedCubicGraph) -> Result<MultiPoly> {
    check_sites(g)?;
    let m = g.sites().len();
    let max_c = g.halfedge_count() / 2 + 1;
    let coeffs = (0..pow3(m))
        .into_par_iter()
        .fold(
            || vec![BigInt::zero(); max_c + 1],
            |mut acc, i| {
                let s = trace_components(g, &unlabeled(i, m));
                let n = s.nodal_count() as u32;
                let w = BigInt::from(-2).pow(n);
                acc[s.component_count] += w;
                acc
            },
        )
        .reduce(
            || vec![BigInt::zero(); max_c + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(MultiPoly::from_terms(
        &[LAMBDA],
        coeffs.into_iter().enumerate().map(|(c, k)| (vec![c as u32], k)),
    ))
}

/// `Σ_S (−1)^{n(S)} v^{n0(S)} w^{n1(S)} λ^{c(S)}` over all labeled states,
/// declared over `[v, w, lambda]`.
pub fn pk_dichromatic_polynomial(g: &MatchedCubicGraph) -> Result<MultiPoly> {
    labeled_sum(g, &[V, W, LAMBDA], |s| {
        let sign = if s.nodal_count() % 2 == 0 { 1 } else { -1 };
        (vec![s.node0_count() as u32, s.node1_count() as u32, s.component_count as u32], sign)
    })
}

/// `Σ_S (−1)^{n(S)} (1+q)^{c(S)} (1+p)^{n0(S)} (1+r)^{n1(S)}`, declared over
/// `[q, p, r]`: the form matched by the triply graded Euler characteristic.
pub fn pk_dichromatic_signed(g: &MatchedCubicGraph) -> Result<MultiPoly> {
    let counts = labeled_sum(g, &["c", "n0", "n1"], |s| {
        let sign = if s.nodal_count() % 2 == 0 { 1 } else { -1 };
        (vec![s.component_count as u32, s.node0_count() as u32, s.node1_count() as u32], sign)
    })?;
    let (oq, op, or) = (one_plus(Q), one_plus(P), one_plus(R));
    let mut total = MultiPoly::zero(&[Q, P, R]);
    for (exps, coeff) in counts.terms() {
        let term = &(&oq.pow(exps[0]) * &op.pow(exps[1])) * &or.pow(exps[2]);
        total = &total + &term.scale(coeff);
    }
    total.with_vars(&[Q, P, R])
}

fn labeled_sum<F>(g: &MatchedCubicGraph, vars: &[&str], term: F) -> Result<MultiPoly>
where
    F: Fn(&super::state::PKState) -> (Vec<u32>, i64) + Sync,
{
    check_sites(g)?;
    let m = g.sites().len();
    let terms: Vec<(Vec<u32>, i64)> = (0..1usize << (2 * m))
        .into_par_iter()
        .map(|i| term(&trace_components(g, &super::state::resolutions_of(i, m))))
        .collect();
    Ok(MultiPoly::from_terms(
        vars,
        terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
    ))
}

/// The `α` form `Σ_S (α−2)^{n(S)} λ^{c(S)}` over unlabeled states, obtained
/// from the dichromatic form by `v = 2 − α`, `w = 0`. Declared over
/// `[alpha, lambda]`.
pub fn pk_alpha_polynomial(g: &MatchedCubicGraph) -> Result<MultiPoly> {
    let z = pk_dichromatic_polynomial(g)?;
    let two_minus_alpha = &MultiPoly::constant(&[ALPHA], 2u32) - &MultiPoly::var(ALPHA);
    z.substitute_all(&[(V, &two_minus_alpha), (W, &MultiPoly::zero(&[ALPHA]))])?
        .with_vars(&[ALPHA, LAMBDA])
}

/// Coefficients of `α^i` in [`pk_alpha_polynomial`], dense over `0..=|M|`.
pub fn pk_impropriety_polys(g: &MatchedCubicGraph) -> Result<Vec<MultiPoly>> {
    let za = pk_alpha_polynomial(g)?;
    let mut levels = za.coefficients_in(ALPHA)?;
    levels.resize(g.sites().len() + 1, MultiPoly::zero(&[LAMBDA]));
    levels
        .into_iter()
        .map(|p| p.with_vars(&[LAMBDA]))
        .collect()
}

enum SiteColoring {
    Proper,
    Improper,
    Forbidden,
}

fn classify(a: u64, b: u64, c: u64, d: u64) -> SiteColoring {
    if a == b && b == c && c == d {
        SiteColoring::Improper
    } else if a != b && c != d && ((a == c && b == d) || (a == d && b == c)) {
        SiteColoring::Proper
    } else {
        SiteColoring::Forbidden
    }
}

/// Histogram of improper-site counts over assignments of `n` colors to the
/// non-matching edges; assignments with a forbidden site are dropped.
fn site_histogram(g: &MatchedCubicGraph, n: u64) -> Result<Vec<u64>> {
    let free = g.free_edges();
    check_budget(assignment_count(free.len(), n))?;
    let mut slot_of_edge = vec![usize::MAX; g.edge_count()];
    for (slot, &e) in free.iter().enumerate() {
        slot_of_edge[e] = slot;
    }
    let slot = |h: usize| slot_of_edge[g.edge_of(h)];
    let sites: Vec<[usize; 4]> = g
        .sites()
        .iter()
        .map(|s| [slot(s.u_legs[0]), slot(s.u_legs[1]), slot(s.v_legs[0]), slot(s.v_legs[1])])
        .collect();
    let m = sites.len();
    Ok(sweep(
        free.len(),
        n,
        || vec![0u64; m + 1],
        |hist, colors| {
            let mut improper = 0;
            for &[a, b, c, d] in &sites {
                match classify(colors[a], colors[b], colors[c], colors[d]) {
                    SiteColoring::Proper => {}
                    SiteColoring::Improper => improper += 1,
                    SiteColoring::Forbidden => return,
                }
            }
            hist[improper] += 1;
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    ))
}

/// Colorings of the non-matching edges with `n` colors in which, at every
/// matching edge, the two legs at each end differ and both ends carry the
/// same pair of colors.
pub fn pk_coloring_oracle(g: &MatchedCubicGraph, n: u64) -> Result<u64> {
    Ok(site_histogram(g, n)?[0])
}

/// `hist[i]` = colorings where every matching edge is either proper or
/// improper (all four leg colors equal), with exactly `i` improper.
pub fn pk_impropriety_oracle(g: &MatchedCubicGraph, n: u64) -> Result<Vec<u64>> {
    site_histogram(g, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::penrose::matched::{matched_catalog, matched_suite};

    fn lam(coeffs: &[i64]) -> MultiPoly {
        MultiPoly::from_terms(
            &[LAMBDA],
            coeffs.iter().enumerate().map(|(i, &c)| (vec![i as u32], BigInt::from(c))),
        )
    }

    #[test]
    fn theta_polynomial() {
        let t = matched_catalog("theta").unwrap();
        let pk = pk_polynomial(&t).unwrap();
        assert_eq!(pk, lam(&[0, -1, 1]));
        assert_eq!(pk.eval_integer(&[(LAMBDA, 3)]).unwrap(), BigInt::from(6));
    }

    #[test]
    fn theta_pair_is_a_square() {
        let pk = pk_polynomial(&matched_catalog("theta-pair").unwrap()).unwrap();
        assert_eq!(pk, lam(&[0, -1, 1]).pow(2));
    }

    #[test]
    fn theta_colorings() {
        let t = matched_catalog("theta").unwrap();
        assert_eq!(pk_coloring_oracle(&t, 3).unwrap(), 6);
        assert_eq!(pk_coloring_oracle(&t, 2).unwrap(), 2);
    }

    #[test]
    fn oracle_matches_state_sum() {
        for g in matched_suite() {
            let pk = pk_polynomial(&g).unwrap();
            for n in 2..=4u64 {
                let at_n = pk.eval_integer(&[(LAMBDA, n as i64)]).unwrap();
                assert_eq!(at_n, BigInt::from(pk_coloring_oracle(&g, n).unwrap()), "{:?} n={n}", g.name());
            }
        }
    }

    #[test]
    fn dichromatic_theta() {
        let t = matched_catalog("theta").unwrap();
        let z = pk_dichromatic_polynomial(&t).unwrap();
        let l = MultiPoly::var(LAMBDA);
        let expected = &(&(&l * &l) + &l) - &(&(&MultiPoly::var(V) + &MultiPoly::var(W)) * &l);
        assert_eq!(z, expected);
    }

    #[test]
    fn dichromatic_specializes() {
        for g in matched_suite() {
            let z = pk_dichromatic_polynomial(&g).unwrap();
            let one = MultiPoly::one(&[LAMBDA]);
            let at_one = z.substitute_all(&[(V, &one), (W, &one)]).unwrap();
            assert_eq!(at_one, pk_polynomial(&g).unwrap());
            let at_zero = z.substitute(LAMBDA, &MultiPoly::zero(&[V])).unwrap();
            assert!(at_zero.is_zero());
        }
    }

    #[test]
    fn signed_form_is_a_substitution() {
        for g in matched_suite() {
            let z = pk_dichromatic_polynomial(&g).unwrap();
            let sub = z
                .substitute_all(&[(LAMBDA, &one_plus(Q)), (V, &one_plus(P)), (W, &one_plus(R))])
                .unwrap();
            assert_eq!(sub, pk_dichromatic_signed(&g).unwrap());
        }
    }

    #[test]
    fn theta_alpha_form() {
        let t = matched_catalog("theta").unwrap();
        let levels = pk_impropriety_polys(&t).unwrap();
        assert_eq!(levels, vec![lam(&[0, -1, 1]), lam(&[0, 1])]);
        assert_eq!(pk_impropriety_oracle(&t, 2).unwrap(), vec![2, 2]);
    }

    #[test]
    fn alpha_levels_count_improper_sites() {
        for g in matched_suite() {
            let levels = pk_impropriety_polys(&g).unwrap();
            for n in 1..=3u64 {
                let hist = pk_impropriety_oracle(&g, n).unwrap();
                let from_poly: Vec<BigInt> = levels
                    .iter()
                    .map(|p| p.eval_integer(&[(LAMBDA, n as i64)]).unwrap())
                    .collect();
                let expected: Vec<BigInt> = hist.into_iter().map(BigInt::from).collect();
                assert_eq!(from_poly, expected, "{:?} n={n}", g.name());
            }
        }
    }
}
