//! Integral Kostant sections for split reductive groups over p-adic fields.
//!
//! The crate builds Chevalley Lie algebras from root data, computes the
//! integral section `Y + Xi` together with its excluded primes, tests
//! topological nilpotence through characteristic-polynomial valuations, and
//! conjugates elements of `Y + g_{x,0+}` into the section with a checkable
//! certificate.

pub mod chevalley;
pub mod error;
pub mod linalg;
pub mod padic;
pub mod reduction;
pub mod rootdata;
pub mod sampling;
pub mod sections;

pub use error::{Error, Result};
