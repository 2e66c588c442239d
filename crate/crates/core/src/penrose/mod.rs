//! Cubic graphs with a perfect matching: the Penrose–Kauffman polynomial, its
//! coloring oracle, and its categorifications.

mod complex;
mod matched;
mod poly;
mod state;

pub use complex::{build_pk_complex, build_pk_dichromatic_complex, pk_dichromatic_homology, pk_homology, PKHomology};
pub use matched::{blowup, matched_catalog, matched_suite, MatchedCubicGraph, Site};
pub use poly::{
    pk_alpha_polynomial, pk_coloring_oracle, pk_dichromatic_polynomial, pk_dichromatic_signed, pk_impropriety_oracle,
    pk_impropriety_polys, pk_polynomial, R, W,
};
pub use state::{pk_state_table, resolutions_of, state_index, trace_components, PKState, Resolution, MAX_SITES};
