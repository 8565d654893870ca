//! Finite categories and strict 2-categories with explicit composition tables.

mod build;
mod category;
mod collapse;
mod functor;
mod twocat;
mod wedge;

pub use build::{
    check_sieve, classify_cells, from_category, full_sub, interval2, oriental2, oriental_subset, point2, product2,
    pullback_over_corner, suspend2, CellClasses, SieveKind,
};
pub use category::{BaseSpec, FinCategory, Morphism};
pub use collapse::{collapse_map, CollapseReport};
pub use functor::{all_functors, enumerate_functors, find_2iso, TwoFunctor};
pub use twocat::{Fin2Category, OneCell, TwoCell};
pub use wedge::{check_universal_property, theta2, wedge2, Wedge, WedgePresentation};

/// Axiom report for a 2-category; empty iff valid.
pub fn validate_2cat(a: &Fin2Category) -> Vec<String> {
    a.validate()
}
