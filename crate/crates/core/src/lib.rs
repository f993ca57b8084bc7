//! Repetitive categories of monomial bound quiver algebras, their jump
//! automorphisms, a cycle criterion for isomorphic orbit categories, and
//! explicit graded orbit algebras with verified isomorphisms.

pub mod algebra;
pub mod cli;
pub mod criterion;
pub mod error;
pub mod oracle;
pub mod orbit;
pub mod problem;
pub mod quiver;
pub mod repetitive;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;
