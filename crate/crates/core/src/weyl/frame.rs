use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// Coordinate system on the raising subgroup.
///
/// `Original` uses `(x1, x2, y1, y2, z, w)` from the product of exponentials;
/// `Final` uses `(xi1, xi2, eta1, eta2, zeta, omega)` after the polynomial
/// change of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Frame {
    Original,
    Final,
}

const ORIGINAL_NAMES: [&str; 6] = ["x1", "x2", "y1", "y2", "z", "w"];
const FINAL_NAMES: [&str; 6] = ["xi1", "xi2", "eta1", "eta2", "zeta", "omega"];
const ORIGINAL_DERIVS: [&str; 6] = ["Dx1", "Dx2", "Dy1", "Dy2", "Dz", "Dw"];
const FINAL_DERIVS: [&str; 6] = ["Dxi1", "Dxi2", "Deta1", "Deta2", "Dzeta", "Domega"];
const ORIGINAL_LATEX: [&str; 6] = ["x_1", "x_2", "y_1", "y_2", "z", "w"];
const FINAL_LATEX: [&str; 6] = [
    r"\xi_1",
    r"\xi_2",
    r"\eta_1",
    r"\eta_2",
    r"\zeta",
    r"\omega",
];

impl Frame {
    pub const BOTH: [Frame; 2] = [Frame::Original, Frame::Final];

    pub fn var_names(self) -> &'static [&'static str; 6] {
        match self {
            Frame::Original => &ORIGINAL_NAMES,
            Frame::Final => &FINAL_NAMES,
        }
    }

    pub fn deriv_names(self) -> &'static [&'static str; 6] {
        match self {
            Frame::Original => &ORIGINAL_DERIVS,
            Frame::Final => &FINAL_DERIVS,
        }
    }

    pub fn latex_names(self) -> &'static [&'static str; 6] {
        match self {
            Frame::Original => &ORIGINAL_LATEX,
            Frame::Final => &FINAL_LATEX,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Frame::Original => "original",
            Frame::Final => "final",
        }
    }

    /// Index of a variable name in this frame.
    pub fn var_index(self, name: &str) -> Option<usize> {
        self.var_names().iter().position(|n| *n == name)
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Frame {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "original" => Ok(Frame::Original),
            "final" => Ok(Frame::Final),
            other => Err(ParseError::new(format!("unknown frame `{other}`"))),
        }
    }
}
