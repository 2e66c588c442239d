//! Potts partition function, computed three independent ways.
//!
//! Each route first produces an exact integer polynomial in the Boltzmann
//! weight `x = e^{−β}` and evaluates it as a double only at the end:
//!
//! * brute force over spin assignments, `Σ_σ x^{E(σ)}`;
//! * the dichromatic polynomial at `v = x − 1`, `λ = n`;
//! * the bigraded Euler characteristics,
//!   `Σ_{i,j} (−1)^i x^i (n−1)^j χ(H^{*,i,j})`.
//!
//! The energy `E(σ)` counts edges whose endpoints share a spin, so the
//! coefficient of `x^i` is the impropriety count `C^i_G(n)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::chain::{HomologySummary, MultiPoly, Number};
use crate::chromatic::LAMBDA;
use crate::coloring::{assignment_count, check_budget, monochromatic_histogram, sweep};
use crate::dichromatic::{dichromatic_homology, dichromatic_poly, V};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const X: &str = "x";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PottsParams {
    spins: u64,
    beta: f64,
}

impl PottsParams {
    /// `beta = 1/kT ≥ 0`; `beta = 0` is the infinite-temperature point `x = 1`.
    pub fn new(spins: u64, beta: f64) -> Result<Self> {
        if spins == 0 {
            return Err(Error::Validation("spin count must be at least 1".into()));
        }
        if !(beta.is_finite() && beta >= 0.0) {
            return Err(Error::Validation(format!("beta must be finite and ≥ 0, got {beta}")));
        }
        Ok(Self { spins, beta })
    }

    pub fn spins(&self) -> u64 {
        self.spins
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Boltzmann weight of one monochromatic edge, `e^{−β}`.
    pub fn weight(&self) -> f64 {
        (-self.beta).exp()
    }
}

fn eval_x(p: &MultiPoly, x: f64) -> f64 {
    p.eval(&[(X, Number::Float(x))])
        .expect("polynomial in x only")
        .to_f64()
}

/// `Σ_σ x^{E(σ)}` with integer coefficients, by enumerating spin assignments.
pub fn energy_polynomial(g: &Multigraph, spins: u64) -> Result<MultiPoly> {
    let hist = monochromatic_histogram(g, spins)?;
    Ok(MultiPoly::from_terms(
        &[X],
        hist.iter()
            .enumerate()
            .map(|(e, &c)| (vec![e as u32], BigInt::from(c))),
    ))
}

pub fn potts_brute(g: &Multigraph, params: &PottsParams) -> Result<f64> {
    Ok(eval_x(&energy_polynomial(g, params.spins)?, params.weight()))
}

/// `Z(v = x − 1, λ = n)` as a polynomial in `x`.
pub fn dichromatic_potts_polynomial(g: &Multigraph, spins: u64) -> Result<MultiPoly> {
    let z = dichromatic_poly(g)?;
    let x_minus_one = &MultiPoly::var(X) - &MultiPoly::one(&[X]);
    let n = MultiPoly::constant(&[X], spins);
    z.substitute_all(&[(V, &x_minus_one), (LAMBDA, &n)])?
        .with_vars(&[X])
}

pub fn potts_via_dichromatic(g: &Multigraph, params: &PottsParams) -> Result<f64> {
    Ok(eval_x(&dichromatic_potts_polynomial(g, params.spins)?, params.weight()))
}

/// `Σ_{i,j} (−1)^i x^i (n−1)^j χ(H^{*,i,j})` from a dichromatic homology summary.
pub fn homology_potts_polynomial(summary: &HomologySummary, spins: u64) -> MultiPoly {
    let q: BigInt = BigInt::from(spins) - 1;
    let terms: BTreeMap<u32, BigInt> =
        summary
            .euler_map()
            .iter()
            .fold(BTreeMap::new(), |mut acc, (g, &chi)| {
                let (i, j) = (g[0], g[1]);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                *acc.entry(i).or_default() += BigInt::from(sign * chi) * num_traits::pow(q.clone(), j as usize);
                acc
            });
    MultiPoly::from_terms(&[X], terms.into_iter().map(|(i, c)| (vec![i], c)))
}

pub fn potts_via_homology(g: &Multigraph, params: &PottsParams) -> Result<f64> {
    let h = dichromatic_homology(g)?;
    Ok(eval_x(
        &homology_potts_polynomial(&h.summary, params.spins),
        params.weight(),
    ))
}

/// `x^{E(σ)} / Z` for a total assignment of spins `0..n` to vertices.
pub fn potts_probability(g: &Multigraph, params: &PottsParams, assignment: &[u64]) -> Result<f64> {
    if assignment.len() != g.vertex_count() {
        return Err(Error::Validation(format!(
            "assignment covers {} vertices, graph has {}",
            assignment.len(),
            g.vertex_count()
        )));
    }
    if let Some(&s) = assignment.iter().find(|&&s| s >= params.spins) {
        return Err(Error::Validation(format!("spin {s} out of range 0..{}", params.spins)));
    }
    let energy = g
        .edges()
        .iter()
        .filter(|&&(a, b)| assignment[a] == assignment[b])
        .count();
    let z = potts_brute(g, params)?;
    Ok(params.weight().powi(energy as i32) / z)
}

/// `Σ_σ P(σ)` accumulated one assignment at a time; `1` up to rounding.
pub fn potts_probability_sum(g: &Multigraph, params: &PottsParams) -> Result<f64> {
    check_budget(assignment_count(g.vertex_count(), params.spins))?;
    let z = potts_brute(g, params)?;
    let x = params.weight();
    let edges = g.edges();
    Ok(sweep(
        g.vertex_count(),
        params.spins,
        || 0.0f64,
        |acc, sigma| {
            let energy = edges.iter().filter(|&&(a, b)| sigma[a] == sigma[b]).count();
            *acc += x.powi(energy as i32) / z;
        },
        |a, b| a + b,
    ))
}

/// Energy level → number of spin assignments at that energy (nonzero levels only).
pub fn energy_histogram(g: &Multigraph, spins: u64) -> Result<BTreeMap<usize, u64>> {
    Ok(monochromatic_histogram(g, spins)?
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn x_poly(coeffs: &[i64]) -> MultiPoly {
        MultiPoly::from_terms(
            &[X],
            coeffs.iter().enumerate().map(|(i, &c)| (vec![i as u32], BigInt::from(c))),
        )
    }

    #[test]
    fn brute_polynomials() {
        assert_eq!(energy_polynomial(&catalog("path:1").unwrap(), 2).unwrap(), x_poly(&[2, 2]));
        assert_eq!(energy_polynomial(&catalog("complete:3").unwrap(), 2).unwrap(), x_poly(&[0, 6, 0, 2]));
        assert_eq!(energy_polynomial(&catalog("loop").unwrap(), 3).unwrap(), x_poly(&[0, 3]));
    }

    #[test]
    fn dichromatic_route() {
        assert_eq!(dichromatic_potts_polynomial(&catalog("path:1").unwrap(), 2).unwrap(), x_poly(&[2, 2]));
        assert_eq!(
            dichromatic_potts_polynomial(&catalog("complete:3").unwrap(), 2).unwrap(),
            x_poly(&[0, 6, 0, 2])
        );
        let k4 = catalog("complete:4").unwrap();
        let at_one = potts_via_dichromatic(&k4, &PottsParams::new(3, 0.0).unwrap()).unwrap();
        assert_eq!(at_one, 81.0);
    }

    #[test]
    fn homology_route() {
        let e1 = catalog("path:1").unwrap();
        let h = dichromatic_homology(&e1).unwrap();
        assert_eq!(homology_potts_polynomial(&h.summary, 2), x_poly(&[2, 2]));
        assert_eq!(homology_potts_polynomial(&h.summary, 1), x_poly(&[0, 1]));
        let k3 = catalog("complete:3").unwrap();
        let h = dichromatic_homology(&k3).unwrap();
        assert_eq!(homology_potts_polynomial(&h.summary, 2), x_poly(&[0, 6, 0, 2]));
    }

    #[test]
    fn probabilities_single_edge() {
        let e1 = catalog("path:1").unwrap();
        let params = PottsParams::new(2, std::f64::consts::LN_2).unwrap();
        let proper = potts_probability(&e1, &params, &[0, 1]).unwrap();
        let mono = potts_probability(&e1, &params, &[1, 1]).unwrap();
        assert!((proper - 1.0 / 3.0).abs() < 1e-15);
        assert!((mono - 1.0 / 6.0).abs() < 1e-15);
        let total: f64 = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|a| potts_probability(&e1, &params, a).unwrap())
            .sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn probabilities_sum_to_one() {
        for spec in ["path:2", "complete:3", "loop", "theta"] {
            let g = catalog(spec).unwrap();
            for beta in [0.1, 1.0, 10.0] {
                let total = potts_probability_sum(&g, &PottsParams::new(3, beta).unwrap()).unwrap();
                assert!((total - 1.0).abs() < 1e-12, "{spec} {beta}: {total}");
            }
        }
    }

    #[test]
    fn probability_input_errors() {
        let e1 = catalog("path:1").unwrap();
        let params = PottsParams::new(2, 1.0).unwrap();
        assert!(potts_probability(&e1, &params, &[0]).is_err());
        assert!(potts_probability(&e1, &params, &[0, 2]).is_err());
    }

    #[test]
    fn histograms() {
        let h = |spec: &str, n| energy_histogram(&catalog(spec).unwrap(), n).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(h("path:1", 3), vec![(0, 6), (1, 3)]);
        assert_eq!(h("complete:3", 2), vec![(1, 6), (3, 2)]);
        assert_eq!(h("loop", 2), vec![(1, 2)]);
    }

    #[test]
    fn parameter_validation() {
        assert!(PottsParams::new(0, 1.0).is_err());
        assert!(PottsParams::new(2, -1.0).is_err());
        assert!(PottsParams::new(2, f64::NAN).is_err());
        assert_eq!(PottsParams::new(2, 0.0).unwrap().weight(), 1.0);
    }
}
