//! Differential operators with polynomial coefficients in six variables,
//! over the parameter polynomials, and the change of frame.

pub mod format;
mod frame;
mod op;
mod polyfn;
pub mod transform;

pub use format::{parse_machine, parse_plain, serialize, to_latex, to_machine, to_plain, Format};
pub use frame::Frame;
pub use op::{DiffOp, OpKey};
pub use polyfn::PolyFunction;
pub use transform::{transform_to_final, transform_to_original, FrameMap};

/// Exponents of the six coordinates, in frame order.
pub type Exponents = [u8; 6];
