//! Divisor theory of `TL_n`: the Picard lattice model and the cone catalog.

pub mod cones;
pub mod picard;

pub use cones::*;
pub use picard::*;
