//! Exact computational workbench for cyclotomic quiver Hecke (KLR) algebras
//! under arbitrary weightings.
//!
//! The crate is organised around three layers:
//!
//! * weighted multipartition combinatorics (loadings, dominance, tableaux,
//!   degrees, good nodes, label sets),
//! * an exact rewriting engine for the diagrammatic presentation of the
//!   algebra, normalising products into the graded cellular basis,
//! * exact graded linear algebra over the rationals and prime fields
//!   (Gram matrices, simple characters, graded decomposition matrices).
//!
//! Everything is integer/rational exact; there is no floating point anywhere.

pub mod params;
pub mod boxes;
pub mod multipartition;
pub mod tableau;
pub mod laurent;
pub mod uglov;
pub mod cyclic;
pub mod diagram;
pub mod extract;
pub mod klr;
pub mod field;
pub mod matrix;
pub mod algebra;
pub mod cellular;
pub mod quotient;
pub mod par;
pub mod json;

pub use boxes::{BoxPos, Loading, Residue};
pub use multipartition::{BoxConfiguration, DomOrdering, Multipartition};
pub use params::{Params, ParamsError};
pub use tableau::{SemistandardTableau, StandardTableau};
