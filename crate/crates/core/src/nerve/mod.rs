//! Duskin nerves of finite 2-categories, the matrix model of `N(ΣP)`, and the comparison maps
//! for suspension and wedge.

mod duskin;
mod matrix;
mod wedge;

pub use duskin::{coskeletal_check, duskin_model, duskin_nerve, DuskinModel, DuskinSimplex, MarkingPolicy};
pub use matrix::{
    matrix_duskin_map, matrix_model, matrix_model_complex, matrix_to_duskin, susp_comparison, MatrixModel, MatrixSimplex,
};
pub use wedge::{wedge_nerve_pairs, wedge_nerve_pairs_checked, wedge_nerve_pairs_unchecked, WedgeNerve, WedgePairModel};
