//! Exact verification engine for duality, Laplace and Dirac operators on
//! alternating and symmetric powers of graded rational vector spaces.

pub mod error;
pub mod check;
pub mod exactnum;
pub mod exec;

pub use error::{Error, Result};
pub mod gvect;
pub mod symalg;
pub mod powers;
pub mod laplace;
pub mod dirac;
pub mod quat;
pub mod functor;
pub mod runner;
