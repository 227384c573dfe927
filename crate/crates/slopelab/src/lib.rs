//! Degree of the colored Jones polynomial of pretzel and Montesinos knots, the
//! Hatcher-Oertel surfaces that realize it, and a Temperley-Lieb oracle to check both.

pub mod degree;
pub mod exact;
pub mod knot;
pub mod qip;
pub mod skein;
pub mod surface;
pub mod verify;

pub use exact::{LaurentPoly, Rational};
