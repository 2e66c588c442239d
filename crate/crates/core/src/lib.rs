//! Categorified graph polynomials.
//!
//! Chain complexes generated by enhanced states of graphs, their integer
//! homology, and the graded Euler characteristic identities that tie them to
//! the chromatic, dichromatic and Penrose–Kauffman polynomials, the Potts
//! partition function and chromatic evaluations.

pub mod chain;
pub mod chromatic;
pub mod color;
pub mod coloring;
mod cube;
pub mod dichromatic;
pub mod error;
pub mod graph;
pub mod penrose;
pub mod potts;

pub use error::{Error, Result};
