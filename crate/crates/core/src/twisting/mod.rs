//! Twisting functions, classifying complexes, twisted cartesian products,
//! and the twisted coefficient data consumed by the cochain engines.

pub mod function;
pub mod kappa;
pub mod tcp;
pub mod twist;
pub mod w;
pub mod wbar;

pub use function::{validate_twisting_identities, Automorphisms, GroupLike, TwistingFunction};
pub use kappa::{EdgeAction, EdgeStep, EdgeWord, Kappa};
pub use tcp::TwistedProduct;
pub use twist::{EdgeTwist, GroupTwist, Twist, Untwisted};
pub use w::{OGWConstruction, WConstruction};
pub use wbar::{OGWBar, WBar};
