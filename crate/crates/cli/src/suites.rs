//! `verify`: fixed batteries of identities and oracle comparisons. A check
//! that errors is recorded as failed rather than aborting the suite.

use chromahom::chain::{homology, one_plus, MultiPoly};
use chromahom::chromatic::{
    brute_force_proper_colorings, build_chromatic_complex, chromatic_poly_dc, chromatic_state_sum, LAMBDA, Q,
};
use chromahom::color::{build_color_complex, euler_check, verify_proposition, ColorAlgebra};
use chromahom::dichromatic::{
    build_dichromatic_complex, dichromatic_homology, dichromatic_poly, dichromatic_poly_recursive,
    impropriety_counts_oracle, impropriety_polys_from_dichromatic, signed_dichromatic, to_signed_convention, P, V,
};
use chromahom::graph::{fixed_permutations, Multigraph};
use chromahom::penrose::{
    build_pk_complex, build_pk_dichromatic_complex, pk_coloring_oracle, pk_dichromatic_polynomial,
    pk_dichromatic_signed, pk_homology, pk_impropriety_oracle, pk_impropriety_polys, pk_polynomial,
    MatchedCubicGraph, R, W,
};
use chromahom::potts::{
    dichromatic_potts_polynomial, energy_polynomial, homology_potts_polynomial, potts_probability_sum, PottsParams, X,
};
use chromahom::{Error, Result};

use crate::args::{Suite, VerifyArgs};
use crate::commands::{graph_info, list, matched_info, relative_diff, POTTS_REL_TOL};
use crate::input::{load_graph, load_matched};
use crate::report::{Check, Report};
use crate::CliError;

pub const POTTS_SPINS: [u64; 3] = [2, 3, 4];
pub const POTTS_BETAS: [f64; 3] = [0.1, 1.0, 10.0];
pub const PERMUTATIONS: usize = 5;
const PROBABILITY_TOL: f64 = 1e-12;

fn run(checks: &mut Vec<Check>, name: &str, f: impl FnOnce() -> Result<(bool, String, String)>) {
    checks.push(match f() {
        Ok((pass, lhs, rhs)) => Check::new(name, pass, lhs, rhs),
        Err(e) => Check::failed(name, e),
    });
}

fn same<T: PartialEq + ToString>(a: T, b: T) -> (bool, String, String) {
    (a == b, a.to_string(), b.to_string())
}

fn verified() -> (bool, String, String) {
    (true, "verified".into(), String::new())
}

fn chromatic_suite(g: &Multigraph, out: &mut Vec<Check>) {
    run(out, "chromatic: deletion-contraction = state sum", || {
        Ok(same(chromatic_poly_dc(g), chromatic_state_sum(g)?))
    });
    run(out, "chromatic: C(n) = proper colorings, n = 1..4", || {
        let dc = chromatic_poly_dc(g);
        let evals = (1..=4)
            .map(|n| dc.eval_integer(&[(LAMBDA, n)]).map(|v| v.to_string()))
            .collect::<Result<Vec<_>>>()?;
        let brute = (1..=4)
            .map(|n| brute_force_proper_colorings(g, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(same(list(&evals), list(&brute)))
    });
    run(out, "chromatic: d∘d = 0", || {
        build_chromatic_complex(g)?.verify_d_squared()?;
        Ok(verified())
    });
    run(out, "chromatic: graded Euler characteristic = C(1+q)", || {
        let h = homology(&build_chromatic_complex(g)?)?;
        let expected = chromatic_state_sum(g)?.substitute(LAMBDA, &one_plus(Q))?;
        Ok(same(h.euler_polynomial(&[Q]), expected))
    });
}

fn dichromatic_suite(g: &Multigraph, out: &mut Vec<Check>) {
    run(out, "dichromatic: state sum = deletion-contraction recursion", || {
        Ok(same(dichromatic_poly(g)?, dichromatic_poly_recursive(g)))
    });
    run(out, "dichromatic: v = -(1+p), lambda = 1+q gives the signed form", || {
        Ok(same(to_signed_convention(&dichromatic_poly(g)?)?, signed_dichromatic(g)?))
    });
    run(out, "dichromatic: d∘d = 0", || {
        build_dichromatic_complex(g)?.verify_d_squared()?;
        Ok(verified())
    });
    run(out, "dichromatic: graded Euler characteristic = Z(p,q)", || {
        let h = homology(&build_dichromatic_complex(g)?)?;
        Ok(same(h.euler_polynomial(&[P, Q]).with_vars(&[Q, P])?, signed_dichromatic(g)?))
    });
    run(out, "dichromatic: p = 0 recovers C(1+q)", || {
        let zero = MultiPoly::zero(&[Q]);
        let at_p0 = signed_dichromatic(g)?.substitute(P, &zero)?.with_vars(&[Q])?;
        let expected = chromatic_state_sum(g)?.substitute(LAMBDA, &one_plus(Q))?;
        Ok(same(at_p0, expected))
    });
}

fn impropriety_suite(g: &Multigraph, out: &mut Vec<Check>) {
    for n in [2u64, 3, 4] {
        run(out, &format!("impropriety: levels at lambda = {n} = brute-force counts"), || {
            let counts = impropriety_polys_from_dichromatic(g)?
                .iter()
                .map(|p| p.eval_integer(&[(LAMBDA, n as i64)]).map(|v| v.to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(same(list(&counts), list(&impropriety_counts_oracle(g, n)?)))
        });
    }
    run(out, "impropriety: every level from dichromatic homology", || {
        let h = dichromatic_homology(g)?;
        let levels = impropriety_polys_from_dichromatic(g)?;
        let from_h: Vec<MultiPoly> = (0..levels.len()).map(|i| h.impropriety(i as u32)).collect();
        Ok((from_h == levels, list(&from_h), list(&levels)))
    });
}

fn potts_suite(g: &Multigraph, out: &mut Vec<Check>) {
    let summary = dichromatic_homology(g).map(|h| h.summary);
    for n in POTTS_SPINS {
        run(out, &format!("potts: n = {n}: brute = dichromatic = homology (x-polynomials)"), || {
            let brute = energy_polynomial(g, n)?;
            let dich = dichromatic_potts_polynomial(g, n)?;
            let hom = homology_potts_polynomial(summary.as_ref().map_err(Clone::clone)?, n);
            let pass = brute == dich && dich == hom;
            Ok((pass, brute.to_string(), format!("{dich} | {hom}")))
        });
        run(out, &format!("potts: n = {n}: numeric agreement at beta in {POTTS_BETAS:?}"), || {
            let brute = energy_polynomial(g, n)?;
            let dich = dichromatic_potts_polynomial(g, n)?;
            let hom = homology_potts_polynomial(summary.as_ref().map_err(Clone::clone)?, n);
            let mut worst: f64 = 0.0;
            for beta in POTTS_BETAS {
                let x = PottsParams::new(n, beta)?.weight();
                let at = |p: &MultiPoly| -> Result<f64> {
                    Ok(p.eval(&[(X, chromahom::chain::Number::Float(x))])?.to_f64())
                };
                let z = at(&brute)?;
                worst = worst.max(relative_diff(at(&dich)?, z)).max(relative_diff(at(&hom)?, z));
            }
            Ok((worst <= POTTS_REL_TOL, format!("max relative difference {worst:e}"), format!("<= {POTTS_REL_TOL:e}")))
        });
        run(out, &format!("potts: n = {n}: Z at x = 0 = proper colorings"), || {
            let at_zero = energy_polynomial(g, n)?.eval_integer(&[(X, 0)])?;
            Ok(same(at_zero, chromatic_poly_dc(g).eval_integer(&[(LAMBDA, n as i64)])?))
        });
        run(out, &format!("potts: n = {n}: probabilities sum to 1"), || {
            let mut worst: f64 = 0.0;
            for beta in POTTS_BETAS {
                worst = worst.max((potts_probability_sum(g, &PottsParams::new(n, beta)?)? - 1.0).abs());
            }
            Ok((worst <= PROBABILITY_TOL, format!("max |sum - 1| = {worst:e}"), format!("<= {PROBABILITY_TOL:e}")))
        });
    }
}

fn color_suite(g: &Multigraph, out: &mut Vec<Check>) {
    for n in 1..=4usize {
        let name = format!("color: A({n}): H^0 free on proper colorings, higher homology zero");
        match verify_proposition(g, n) {
            Err(Error::Budget { needed, budget }) => out.push(Check::new(
                name,
                true,
                format!("skipped: {needed} generators exceed budget {budget}"),
                "",
            )),
            r => run(out, &name, || r.map(|_| verified())),
        }
    }
    let expected = chromatic_poly_dc(g).eval_integer(&[(LAMBDA, 4)]);
    for alg in [ColorAlgebra::klein4(), ColorAlgebra::cyclic(4).expect("cyclic:4")] {
        run(out, &format!("color: {}: Euler characteristic = C_G(4)", alg.name()), || {
            Ok(same(euler_check(g, &alg)?.into(), expected.clone()?))
        });
        run(out, &format!("color: {}: no partial differential vanishes", alg.name()), || {
            Ok(same(build_color_complex(g, &alg)?.dropped_terms, 0))
        });
    }
}

fn structure_suite(g: &Multigraph, out: &mut Vec<Check>) {
    let perms = fixed_permutations(g.edge_count(), PERMUTATIONS);
    run(out, "structure: chromatic homology invariant under edge reordering", || {
        let base = homology(&build_chromatic_complex(g)?)?;
        let mut differing = 0;
        for p in &perms {
            if homology(&build_chromatic_complex(&g.permute_edges(p))?)?.groups() != base.groups() {
                differing += 1;
            }
        }
        Ok(same(format!("{differing} of {} orders differ", perms.len()), format!("0 of {} orders differ", perms.len())))
    });
    run(out, "structure: dichromatic homology invariant under edge reordering", || {
        let base = homology(&build_dichromatic_complex(g)?)?;
        let mut differing = 0;
        for p in &perms {
            if homology(&build_dichromatic_complex(&g.permute_edges(p))?)?.groups() != base.groups() {
                differing += 1;
            }
        }
        Ok(same(format!("{differing} of {} orders differ", perms.len()), format!("0 of {} orders differ", perms.len())))
    });
    run(out, "structure: d∘d = 0 in every reordered complex", || {
        for p in &perms {
            let h = g.permute_edges(p);
            build_chromatic_complex(&h)?.verify_d_squared()?;
            build_dichromatic_complex(&h)?.verify_d_squared()?;
        }
        Ok(verified())
    });
}

fn penrose_suite(g: &MatchedCubicGraph, out: &mut Vec<Check>) {
    for n in [2u64, 3, 4] {
        run(out, &format!("penrose: PK({n}) = coloring count"), || {
            Ok(same(pk_polynomial(g)?.eval_integer(&[(LAMBDA, n as i64)])?, pk_coloring_oracle(g, n)?.into()))
        });
    }
    run(out, "penrose: d∘d = 0", || {
        build_pk_complex(g)?.verify_d_squared()?;
        build_pk_dichromatic_complex(g)?.verify_d_squared()?;
        Ok(verified())
    });
    run(out, "penrose: graded Euler characteristic = PK(1+q)", || {
        let h = homology(&build_pk_complex(g)?)?;
        let expected = pk_polynomial(g)?.substitute(LAMBDA, &one_plus(Q))?;
        Ok(same(h.euler_polynomial(&[Q]), expected))
    });
    run(out, "penrose: triply graded Euler characteristic = signed state sum", || {
        let h = homology(&build_pk_dichromatic_complex(g)?)?;
        Ok(same(h.euler_polynomial(&[Q, P, R]), pk_dichromatic_signed(g)?))
    });
    run(out, "penrose: v = w = 1 recovers PK", || {
        let one = MultiPoly::one(&[LAMBDA]);
        let z = pk_dichromatic_polynomial(g)?.substitute_all(&[(V, &one), (W, &one)])?;
        Ok(same(z, pk_polynomial(g)?))
    });
    run(out, "penrose: impropriety levels at lambda = 2 = brute-force counts", || {
        let counts = pk_impropriety_polys(g)?
            .iter()
            .map(|p| p.eval_integer(&[(LAMBDA, 2)]).map(|v| v.to_string()))
            .collect::<Result<Vec<_>>>()?;
        Ok(same(list(&counts), list(&pk_impropriety_oracle(g, 2)?)))
    });
    run(out, "penrose: invariant under swapping legs at any site end", || {
        let base = pk_homology(g)?;
        let pk = pk_polynomial(g)?;
        let mut differing = 0;
        let mut total = 0;
        for site in 0..g.sites().len() {
            for at_v in [false, true] {
                let h = g.swap_legs(site, at_v);
                total += 1;
                let hh = pk_homology(&h)?;
                if pk_polynomial(&h)? != pk || hh.summary.betti_multiset() != base.summary.betti_multiset() {
                    differing += 1;
                }
            }
        }
        Ok(same(format!("{differing} of {total} swaps differ"), format!("0 of {total} swaps differ")))
    });
}

pub fn verify(a: &VerifyArgs, r: &mut Report) -> Result<(), CliError> {
    let mut checks = Vec::new();
    if let Some(spec) = &a.matched {
        if !matches!(a.suite, Suite::Penrose | Suite::All) {
            return Err(CliError::Usage("--matched only supports the penrose suite".into()));
        }
        let g = load_matched(spec, r)?;
        r.result("graph", matched_info(&g));
        penrose_suite(&g, &mut checks);
    } else {
        let spec = a.graph.as_deref().expect("clap enforces one target");
        if a.suite == Suite::Penrose {
            return Err(CliError::Usage("the penrose suite needs --matched".into()));
        }
        let g = load_graph(spec, r)?;
        r.result("graph", graph_info(&g));
        let all = a.suite == Suite::All;
        if all || a.suite == Suite::Chromatic {
            chromatic_suite(&g, &mut checks);
        }
        if all || a.suite == Suite::Dichromatic {
            dichromatic_suite(&g, &mut checks);
        }
        if all || a.suite == Suite::Impropriety {
            impropriety_suite(&g, &mut checks);
        }
        if all || a.suite == Suite::Potts {
            potts_suite(&g, &mut checks);
        }
        if all || a.suite == Suite::Color {
            color_suite(&g, &mut checks);
        }
        if all || a.suite == Suite::Structure {
            structure_suite(&g, &mut checks);
        }
    }
    r.result("checks_run", checks.len());
    r.checks.extend(checks);
    Ok(())
}
