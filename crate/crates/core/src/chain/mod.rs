//! Exact algebra shared by every theory: polynomials, sparse integer
//! matrices, Smith normal form and graded complexes.

mod complex;
mod matrix;
mod poly;
mod snf;

pub use complex::{
    homology, ComplexBlock, ComplexBuilder, GenId, GradedComplex, Grading, HomologyGroup,
    HomologySummary,
};
pub use matrix::SparseIntMatrix;
pub use poly::{one_plus, MultiPoly, Number};
pub use snf::{smith_normal_form, SmithForm};
