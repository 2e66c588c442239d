use std::fs;

use chromahom::color::ColorAlgebra;
use chromahom::graph::{catalog, Multigraph};
use chromahom::penrose::{matched_catalog, MatchedCubicGraph};

use crate::report::{InputDigest, Report};
use crate::CliError;

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CliError::Usage(format!("file not found: {path}")),
        _ => CliError::Usage(format!("cannot read {path}: {e}")),
    })
}

fn in_file(path: &str, e: chromahom::Error) -> CliError {
    CliError::Usage(format!("{path}: {e}"))
}

/// A file in the graph text format, or `catalog:<spec>`. Catalog inputs are
/// digested by their canonical text form.
pub fn load_graph(arg: &str, report: &mut Report) -> Result<Multigraph, CliError> {
    if let Some(spec) = arg.strip_prefix("catalog:") {
        let g = catalog(spec).map_err(|e| CliError::Usage(e.to_string()))?;
        report.inputs.push(InputDigest::new(arg, g.to_text().as_bytes()));
        return Ok(g);
    }
    let text = read(arg)?;
    report.inputs.push(InputDigest::new(arg, text.as_bytes()));
    Ok(Multigraph::parse(&text).map_err(|e| in_file(arg, e))?.with_name(arg))
}

pub fn load_matched(arg: &str, report: &mut Report) -> Result<MatchedCubicGraph, CliError> {
    if let Some(spec) = arg.strip_prefix("catalog:") {
        let g = matched_catalog(spec).map_err(|e| CliError::Usage(e.to_string()))?;
        report.inputs.push(InputDigest::new(arg, g.to_json().as_bytes()));
        return Ok(g);
    }
    let text = read(arg)?;
    report.inputs.push(InputDigest::new(arg, text.as_bytes()));
    Ok(MatchedCubicGraph::parse_json(&text).map_err(|e| in_file(arg, e))?.with_name(arg))
}

pub fn load_algebra(spec: &str, report: &mut Report) -> Result<ColorAlgebra, CliError> {
    if let Some(path) = spec.strip_prefix("table:") {
        let text = read(path)?;
        report.inputs.push(InputDigest::new(path, text.as_bytes()));
        return ColorAlgebra::parse_table(spec, &text).map_err(|e| in_file(path, e));
    }
    ColorAlgebra::from_spec(spec).map_err(|e| CliError::Usage(e.to_string()))
}
