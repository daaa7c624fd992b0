//! Finite truncated simplicial sets and simplicial objects given levelwise.

pub mod complex;
pub mod levelwise;
pub mod maps;
pub mod product;
pub mod standard;
pub mod word;

pub use complex::{validate_complex, FiniteSimplicialSet, Op, SimplexId, SimplexRef};
pub use levelwise::{materialize, validate_levelwise, FiniteLevels, Materialized, SimplicialObject};
pub use maps::{enumerate_simplicial_maps, evaluate, map_of_simplex, validate_map, SimplicialMap};
pub use product::{product_with_interval, Cylinder, Product};
pub use standard::{standard_simplex, top_simplex};
pub use word::DegeneracyWord;
