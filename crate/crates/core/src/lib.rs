pub mod abelian;
pub mod cartan;
pub mod cli;
pub mod cohomology;
pub mod em;
pub mod equivariant;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod orbit;
pub mod report;
pub mod simplicial;
pub mod twisting;

pub use error::{Error, Result};
