//! Garside-theoretic braid engine: left normal forms in the standard and
//! dual structures, cyclic sliding and sliding circuits, recognition of
//! products of two conjugates of atom powers, and a quasipositivity solver
//! for 3-braids.

pub mod conjugacy;
pub mod error;
pub mod normal_form;
pub mod perm;
pub mod qp3;
pub mod recognition;
pub mod structure;
pub mod words;

pub use error::{BraidError, Result};
pub use normal_form::NormalForm;
pub use perm::Perm;
pub use structure::{structure_by_name, GarsideStructure, StructureId, StructureKind};
pub use words::{parse_word, BraidWord};
