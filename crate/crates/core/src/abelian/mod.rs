//! Exact integer linear algebra and finitely generated abelian groups.

pub mod coefficients;
pub mod complex;
pub mod echelon;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod simplicial;
pub mod snf;

pub use coefficients::{CoefficientSystem, OGGroup, PiModule};
pub use complex::{cohomology_at, CochainComplex};
pub use group::{AbHom, FgAbGroup, NormalForm};
pub use lattice::Lattice;
pub use matrix::IntMatrix;
pub use simplicial::{OGSimplicialAbGroup, SimplicialAbGroup};
pub use snf::{smith_normal_form, SmithForm};
