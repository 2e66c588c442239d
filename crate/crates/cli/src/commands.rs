use serde_json::{json, Map, Value};

use chromahom::chain::{homology, one_plus, GradedComplex, HomologySummary, MultiPoly, Number};
use chromahom::chromatic::{
    brute_force_proper_colorings, build_chromatic_complex, chromatic_poly_dc, chromatic_state_sum, LAMBDA, Q,
};
use chromahom::color::{build_color_complex, ColorAlgebra};
use chromahom::dichromatic::{
    build_dichromatic_complex, dichromatic_poly, dichromatic_poly_recursive, impropriety_counts_oracle,
    impropriety_polys_from_dichromatic, signed_dichromatic, to_signed_convention, DichromaticHomology, P,
};
use chromahom::graph::{standard_suite, Multigraph, HARD_EDGE_CAP};
use chromahom::penrose::{
    build_pk_complex, build_pk_dichromatic_complex, matched_suite, pk_coloring_oracle, pk_dichromatic_polynomial,
    pk_dichromatic_signed, pk_polynomial, MatchedCubicGraph, R, W,
};
use chromahom::potts::{dichromatic_potts_polynomial, energy_polynomial, homology_potts_polynomial, PottsParams, X};
use chromahom::dichromatic::V;

use crate::args::*;
use crate::input::{load_algebra, load_graph, load_matched};
use crate::report::{Check, Report};
use crate::CliError;

pub(crate) fn list<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub(crate) fn poly_check(name: impl Into<String>, lhs: &MultiPoly, rhs: &MultiPoly) -> Check {
    Check::new(name, lhs == rhs, lhs, rhs)
}

pub(crate) fn graph_info(g: &Multigraph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
    })
}

pub(crate) fn matched_info(g: &MatchedCubicGraph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "matching": g.matching(),
    })
}

/// Records the d∘d check and, when it holds, returns the homology.
pub(crate) fn checked_homology(
    label: &str,
    built: chromahom::Result<GradedComplex>,
    checks: &mut Vec<Check>,
) -> Result<Option<(GradedComplex, HomologySummary)>, CliError> {
    let complex = match built {
        Ok(c) => c,
        Err(e @ chromahom::Error::Integrity { .. }) => {
            checks.push(Check::failed(format!("{label}: d∘d = 0"), e));
            return Ok(None);
        }
        Err(e) => return Err(e.into()),
    };
    checks.push(Check::new(format!("{label}: d∘d = 0"), true, "verified", ""));
    match homology(&complex) {
        Ok(h) => Ok(Some((complex, h))),
        Err(e @ chromahom::Error::TheoryViolation(_)) => {
            checks.push(Check::failed(format!("{label}: Euler characteristic from ranks"), e));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn chromatic(a: &ChromaticArgs, r: &mut Report) -> Result<(), CliError> {
    let g = load_graph(&a.input, r)?;
    let dc = chromatic_poly_dc(&g);
    let sum = chromatic_state_sum(&g)?;
    let at_q = sum.substitute(LAMBDA, &one_plus(Q))?;
    r.result("graph", graph_info(&g));
    let shown = match a.var {
        ChromaticVar::Lambda => &dc,
        ChromaticVar::Q => &at_q,
    };
    r.result("polynomial", shown.to_string());
    r.check(poly_check("deletion-contraction = state sum", &dc, &sum));
    for &n in &a.colors {
        let at = dc.eval_integer(&[(LAMBDA, n as i64)])?;
        let brute = brute_force_proper_colorings(&g, n)?;
        r.check(Check::equal(format!("C({n}) = proper {n}-colorings"), at, brute));
    }
    if a.homology {
        let mut checks = Vec::new();
        if let Some((c, h)) = checked_homology("chromatic complex", build_chromatic_complex(&g), &mut checks)? {
            let ge = h.euler_polynomial(&[Q]);
            checks.push(poly_check("graded Euler characteristic = C(1+q)", &ge, &at_q));
            r.result("generators", c.generator_count());
            r.result("graded_euler", ge.to_string());
            r.result("homology", h.to_json());
        }
        r.checks.extend(checks);
    }
    Ok(())
}

fn dichromatic_summary(g: &Multigraph, checks: &mut Vec<Check>) -> Result<Option<DichromaticHomology>, CliError> {
    let Some((_, summary)) = checked_homology("dichromatic complex", build_dichromatic_complex(g), checks)? else {
        return Ok(None);
    };
    let graded_euler = summary.euler_polynomial(&[P, Q]).with_vars(&[Q, P])?;
    Ok(Some(DichromaticHomology { summary, graded_euler }))
}

pub fn dichromatic(a: &DichromaticArgs, r: &mut Report) -> Result<(), CliError> {
    let g = load_graph(&a.input, r)?;
    let z = dichromatic_poly(&g)?;
    let signed = signed_dichromatic(&g)?;
    r.result("graph", graph_info(&g));
    r.result(
        "polynomial",
        match a.convention {
            Convention::VLambda => z.to_string(),
            Convention::PQ => signed.to_string(),
        },
    );
    r.check(poly_check("state sum = deletion-contraction recursion", &z, &dichromatic_poly_recursive(&g)));
    r.check(poly_check("v = -(1+p), lambda = 1+q gives the signed form", &to_signed_convention(&z)?, &signed));
    if a.homology {
        let mut checks = Vec::new();
        if let Some(h) = dichromatic_summary(&g, &mut checks)? {
            checks.push(poly_check("graded Euler characteristic = Z(p,q)", &h.graded_euler, &signed));
            r.result("graded_euler", h.graded_euler.to_string());
            r.result("homology", h.summary.to_json());
        }
        r.checks.extend(checks);
    }
    Ok(())
}

pub fn impropriety(a: &ImproprietyArgs, r: &mut Report) -> Result<(), CliError> {
    let g = load_graph(&a.input, r)?;
    let n = a.colors;
    let levels = impropriety_polys_from_dichromatic(&g)?;
    let counts: Vec<num_bigint::BigInt> = levels
        .iter()
        .map(|p| p.eval_integer(&[(LAMBDA, n as i64)]))
        .collect::<chromahom::Result<_>>()?;
    r.result("graph", graph_info(&g));
    r.result("colors", n);
    r.result(
        "levels",
        levels
            .iter()
            .enumerate()
            .map(|(i, p)| json!({ "level": i, "poly": p.to_string() }))
            .collect::<Vec<_>>(),
    );
    r.result("counts", list(&counts));
    let total: num_bigint::BigInt = counts.iter().sum();
    let all = num_bigint::BigInt::from(n).pow(g.vertex_count() as u32);
    r.check(Check::equal(format!("sum of levels at {n} = {n}^|V|"), total, all));
    if a.oracle {
        let hist = impropriety_counts_oracle(&g, n)?;
        r.check(Check::equal("levels at lambda = n match brute-force counts", list(&counts), list(&hist)));
    }
    if a.homology {
        let mut checks = Vec::new();
        if let Some(h) = dichromatic_summary(&g, &mut checks)? {
            for (i, p) in levels.iter().enumerate() {
                checks.push(poly_check(format!("level {i} from homology"), &h.impropriety(i as u32), p));
            }
        }
        r.checks.extend(checks);
    }
    Ok(())
}

fn eval_x(p: &MultiPoly, x: f64) -> Result<f64, CliError> {
    Ok(p.eval(&[(X, Number::Float(x))])?.to_f64())
}

fn parse_sweep(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("--sweep expects b0:b1:steps, got `{spec}`"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [b0, b1, steps] = parts[..] else {
        return Err(bad());
    };
    let (b0, b1): (f64, f64) = (b0.parse().map_err(|_| bad())?, b1.parse().map_err(|_| bad())?);
    let steps: usize = steps.parse().map_err(|_| bad())?;
    if steps == 0 {
        return Err(bad());
    }
    if steps == 1 {
        return Ok(vec![b0]);
    }
    Ok((0..steps)
        .map(|k| b0 + (b1 - b0) * k as f64 / (steps - 1) as f64)
        .collect())
}

pub(crate) fn relative_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

pub const POTTS_REL_TOL: f64 = 1e-9;

pub fn potts(a: &PottsArgs, r: &mut Report) -> Result<(), CliError> {
    let g = load_graph(&a.input, r)?;
    let n = a.spins;
    let betas = match (&a.sweep, a.beta) {
        (Some(s), _) => parse_sweep(s)?,
        (None, Some(b)) => vec![b],
        (None, None) => unreachable!("clap requires --beta or --sweep"),
    };
    for &b in &betas {
        PottsParams::new(n, b).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let methods: Vec<&str> = match a.method {
        PottsMethod::Brute => vec!["brute"],
        PottsMethod::Dichromatic => vec!["dichromatic"],
        PottsMethod::Homology => vec!["homology"],
        PottsMethod::All => vec!["brute", "dichromatic", "homology"],
    };
    let mut polys: Vec<(&str, MultiPoly)> = Vec::new();
    for &m in &methods {
        let p = match m {
            "brute" => energy_polynomial(&g, n)?,
            "dichromatic" => dichromatic_potts_polynomial(&g, n)?,
            _ => {
                let mut checks = Vec::new();
                let h = dichromatic_summary(&g, &mut checks)?;
                r.checks.extend(checks);
                match h {
                    Some(h) => homology_potts_polynomial(&h.summary, n),
                    None => continue,
                }
            }
        };
        polys.push((m, p));
    }
    r.result("graph", graph_info(&g));
    r.result("spins", n);
    r.result(
        "polynomial_x",
        polys
            .iter()
            .map(|(m, p)| (m.to_string(), Value::String(p.to_string())))
            .collect::<Map<_, _>>(),
    );
    if let Some((first, p0)) = polys.first() {
        for (m, p) in &polys[1..] {
            r.check(poly_check(format!("x-polynomial: {m} = {first}"), p, p0));
        }
        let proper = chromatic_poly_dc(&g).eval_integer(&[(LAMBDA, n as i64)])?;
        let at_zero = p0.eval_integer(&[(X, 0)])?;
        r.check(Check::equal("Z at x = 0 = proper colorings", at_zero, proper));
    }
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for &b in &betas {
        let x = (-b).exp();
        let mut row = vec![b.to_string()];
        let mut obj = Map::new();
        obj.insert("beta".into(), json!(b));
        let mut values = Vec::new();
        for (m, p) in &polys {
            let z = eval_x(p, x)?;
            row.push(z.to_string());
            obj.insert(m.to_string(), json!(z));
            values.push((*m, z));
        }
        if let Some(&(m0, z0)) = values.first() {
            for &(m, z) in &values[1..] {
                let d = relative_diff(z, z0);
                r.check(Check::new(
                    format!("beta = {b}: |{m} - {m0}| relative <= {POTTS_REL_TOL:e}"),
                    d <= POTTS_REL_TOL,
                    format!("{z}"),
                    format!("{z0}"),
                ));
            }
        }
        rows.push(row);
        json_rows.push(Value::Object(obj));
    }
    if a.sweep.is_some() {
        r.result("sweep", json_rows);
    } else {
        r.result("partition_function", json_rows.into_iter().next().unwrap_or(Value::Null));
    }
    let mut header = vec!["beta".to_string()];
    header.extend(polys.iter().map(|(m, _)| m.to_string()));
    r.table = Some((header, rows));
    Ok(())
}

pub fn penrose(a: &PenroseArgs, r: &mut Report) -> Result<(), CliError> {
    let g = load_matched(&a.input, r)?;
    let pk = pk_polynomial(&g)?;
    r.result("graph", matched_info(&g));
    r.result("pk", pk.to_string());
    for &n in &a.colors {
        let at = pk.eval_integer(&[(LAMBDA, n as i64)])?;
        let oracle = pk_coloring_oracle(&g, n)?;
        r.check(Check::equal(format!("PK({n}) = coloring count"), at, oracle));
    }
    if a.dichromatic {
        let z = pk_dichromatic_polynomial(&g)?;
        let one = MultiPoly::one(&[LAMBDA]);
        r.result("pk_dichromatic", z.to_string());
        r.check(poly_check("v = w = 1 recovers PK", &z.substitute_all(&[(V, &one), (W, &one)])?, &pk));
    }
    if a.homology {
        let mut checks = Vec::new();
        if a.dichromatic {
            if let Some((c, h)) = checked_homology("PK dichromatic complex", build_pk_dichromatic_complex(&g), &mut checks)? {
                let ge = h.euler_polynomial(&[Q, P, R]);
                checks.push(poly_check("graded Euler characteristic = state sum", &ge, &pk_dichromatic_signed(&g)?));
                r.result("generators", c.generator_count());
                r.result("graded_euler", ge.to_string());
                r.result("homology", h.to_json());
            }
        } else if let Some((c, h)) = checked_homology("PK complex", build_pk_complex(&g), &mut checks)? {
            let ge = h.euler_polynomial(&[Q]);
            checks.push(poly_check("graded Euler characteristic = PK(1+q)", &ge, &pk.substitute(LAMBDA, &one_plus(Q))?));
            r.result("generators", c.generator_count());
            r.result("graded_euler", ge.to_string());
            r.result("homology", h.to_json());
        }
        r.checks.extend(checks);
    }
    Ok(())
}

pub(crate) fn algebra_table(a: &ColorAlgebra) -> Value {
    a.table()
        .iter()
        .map(|row| row.iter().map(|c| c.map_or(0, |k| k + 1)).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into()
}

pub fn color_homology(a: &ColorArgs, r: &mut Report) -> Result<(), CliError> {
    let g = load_graph(&a.input, r)?;
    let alg = load_algebra(&a.algebra, r)?;
    let n = alg.size();
    r.result("graph", graph_info(&g));
    r.result("algebra", json!({ "name": alg.name(), "size": n, "table": algebra_table(&alg) }));
    let cc = build_color_complex(&g, &alg);
    let dropped = cc.as_ref().map(|c| c.dropped_terms).ok();
    let mut checks = Vec::new();
    if let Some((c, h)) = checked_homology("color complex", cc.map(|c| c.complex), &mut checks)? {
        let euler = h.total_euler();
        let expected = chromatic_poly_dc(&g).eval_integer(&[(LAMBDA, n as i64)])?;
        checks.push(Check::equal(format!("Euler characteristic = C_G({n})"), euler, &expected));
        if alg.table() == ColorAlgebra::orthogonal(n)?.table() {
            let proper = brute_force_proper_colorings(&g, n as u64)?;
            let h0 = h.group(0, &[]);
            checks.push(Check::new(
                "H^0 is free on the proper colorings",
                h0.betti as u64 == proper && h0.torsion.is_empty(),
                format!("rank {} torsion {}", h0.betti, list(&h0.torsion)),
                format!("rank {proper}"),
            ));
            let higher = h.nonzero_groups().filter(|((_, k), _)| *k > 0).count();
            checks.push(Check::equal("higher homology vanishes", format!("{higher} nonzero groups"), "0 nonzero groups"));
        }
        if !alg.has_zero_products() {
            checks.push(Check::equal("no partial differential vanishes", dropped.unwrap_or(0), 0));
        }
        r.result("generators", c.generator_count());
        r.result("dropped_terms", dropped.unwrap_or(0));
        r.result("euler", euler);
        r.result("homology", h.to_json());
    }
    r.checks.extend(checks);
    Ok(())
}

pub fn catalog(a: &CatalogArgs, r: &mut Report) -> Result<(), CliError> {
    if a.matched {
        let items: Vec<Value> = matched_suite()
            .iter()
            .map(|g| {
                let mut v = matched_info(g);
                v["spec"] = json!(format!("catalog:{}", g.name().unwrap_or("")));
                v
            })
            .collect();
        r.result("matched_graphs", items);
    } else {
        let items: Vec<Value> = standard_suite(HARD_EDGE_CAP)
            .iter()
            .map(|g| {
                let mut v = graph_info(g);
                v["spec"] = json!(format!("catalog:{}", g.name().unwrap_or("")));
                v
            })
            .collect();
        r.result("graphs", items);
    }
    Ok(())
}
