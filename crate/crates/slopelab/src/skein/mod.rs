//! Kauffman bracket skein theory: Temperley-Lieb algebra, Jones-Wenzl projectors and
//! a brute force colored Jones oracle for cabled standard diagrams.

pub mod jw;
pub mod oracle;
pub mod qfrac;
pub mod statesum;

pub use statesum::{jones_color_two, kauffman_bracket};
pub mod tl;

pub use jw::{delta_n, jw_projector, theta, ThetaError};
pub use oracle::{colored_jones, colored_jones_of_row, colored_jones_of_tangle, standard_row, Oracle, OracleConfig, OracleError, Projection};
pub use qfrac::QFrac;
pub use tl::{Matching, TLElement};
