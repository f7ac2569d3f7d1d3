//! Exact symbolic engine for the Jacobi algebra G2: structure constants,
//! Verma modules and singular vectors, differential-operator realizations
//! and the intertwining operators built from them.

pub mod actions;
pub mod error;
pub mod intertwine;
pub mod jacobi;
pub mod scalars;
pub mod singvec;
pub mod verma;
pub mod weyl;

pub use error::{Error, ParseError};
pub use scalars::{Bindings, Param, ParamPoly, Rational};
