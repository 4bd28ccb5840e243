//! Algebraic invariants of pseudo-isotopies: Whitehead-group obstructions
//! computed from combinatorial one-parameter families over free products
//! of groups.

pub mod cli;
pub mod error;
pub mod format;
pub mod group;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod ring;
pub mod schedule;
pub mod steinberg;
pub mod whitehead;

pub use error::Error;
