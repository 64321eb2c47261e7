//! Subgroup perfect codes of finite groups.

pub mod analysis;
pub mod catalog;
pub mod codes;
pub mod error;
pub mod field;
pub mod group;
pub mod lattice;
pub mod limits;
pub mod numtheory;
pub mod shape;
pub mod subgroup;
pub mod theorems;
pub mod verify;

pub use error::{GroupError, Result};
pub use group::{ElementId, GroupTable};
pub use limits::Limits;
pub use subgroup::Subgroup;
