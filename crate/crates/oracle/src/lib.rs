//! Independent computation of Ext groups between tensor and exterior powers of
//! the abelianization functor, by exact linear algebra on bar resolutions.

pub mod action;
pub mod cohomology;
pub mod compare;
pub mod complex;
pub mod error;
pub mod matrix;
pub mod report;
pub mod yoneda;

pub use action::{
    action_on_cohomology, character_table, closed_form_action, CharacterTable, ClassSpace, Side,
};
pub use cohomology::{
    ext_dimensions, ext_lambda_dimensions, ext_lambda_lambda, ext_mixed_dimensions, ClassBasis,
    Idempotent, TopCohomology,
};
pub use compare::{compare_characters, compare_with_engine, CharacterComparison, ComparisonReport};
pub use complex::{build_complex, BarCochainComplex, Cochain, Limits};
pub use error::OracleError;
pub use matrix::{Rational, RationalMatrix, SparseVec};
pub use report::{ext_report, lambda_lambda_report, OracleReport};
pub use yoneda::{composition_sign, yoneda_product, ExtClass, LiftChoice};
