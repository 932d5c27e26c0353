//! Symbolic calculus for the wheeled PROP 𝓔 of Ext groups between tensor
//! powers of the abelianization functor, in its diagram basis.

pub mod diagrams;
pub mod error;
pub mod koszul;
pub mod wheeled_prop;

pub use diagrams::{Coefficient, Element, WheeledDiagram};
pub use error::Error;
pub use koszul::{Permutation, Sign};
