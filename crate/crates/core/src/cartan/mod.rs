//! Cartan cohomology theories, their lift complexes over a twisted space, and
//! the comparison with twisted Bredon cohomology.

pub mod lift;
pub mod oracle;
pub mod theory;

pub use lift::{canonical_for, crosscheck, theory_cohomology, Crosscheck, CrosscheckRow, Layout, LiftComplex};
pub use oracle::{compare_with_image, vertical_homotopy_oracle, Homotopy, HomotopyComparison};
pub use theory::{automorphisms, check_axioms, AxiomReport, CartanTheory, PsiOverride};
