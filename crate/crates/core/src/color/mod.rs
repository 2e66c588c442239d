//! Categorified chromatic evaluations over finite color algebras.

mod algebra;
mod complex;

pub use algebra::ColorAlgebra;
pub use complex::{
    build_color_complex, color_homology, euler_check, verify_proposition, ColorComplex, ColorHomology,
    DEFAULT_GENERATOR_BUDGET,
};
