//! Finite, dimension-truncated simplicial sets with marking.

mod complex;
mod constructions;
mod generators;
mod iso;
mod lifting;
mod map;
mod model;

pub use complex::{CellId, Cell, DegeneracyWord, MarkedSimplicialSet, SimplexRef, Violation};
pub use constructions::{
    join, join_model, point_map, product, product_model, pushout, suspend, suspend_map, suspend_model, wedge_ss,
    wedge_ss_pushout, JoinModel, JoinSimplex, Product, ProductModel, Pushout, SuspModel, SuspSimplex, BOTTOM, TOP,
    WEDGE_POINT,
};
pub use generators::{generator_model, make_generator, GeneratorShape, SubsetModel};
pub use iso::{find_isomorphism, isomorphic};
pub use lifting::{has_extension, inclusion};
pub use map::SimplicialMap;
pub use model::{ModelComplex, SimplexModel};
