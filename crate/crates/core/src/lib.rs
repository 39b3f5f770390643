//! Exact polyhedral computations for the divisor and curve cones of the
//! compactifications `TL_n` of Lagrangian Grassmannians and of the pointed
//! conic spaces.

mod error;

pub mod cone;
pub mod conics;
pub mod dd;
pub mod gkz;
pub mod invariants;
pub mod linalg;
pub mod lp;
pub mod report;
pub mod selftest;
pub mod tl;

pub use cone::Cone;
pub use error::{Error, Result};
pub use linalg::{RationalMatrix, RationalVector};
