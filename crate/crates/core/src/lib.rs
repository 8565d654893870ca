//! Finite marked simplicial sets, finite strict 2-categories and their nerves, together with
//! builders and a replay checker for explicit horn-filling certificates of inner anodyne maps.

pub mod anodyne;
pub mod cat2;
pub mod error;
pub mod msset;
pub mod nerve;
pub mod ordinal;

pub use error::{Error, Result};
