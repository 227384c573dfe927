//! Exact arithmetic: rationals, continued fractions and Laurent polynomials in `v`.

pub mod cfe;
pub mod laurent;
pub mod rational;

pub use cfe::{
    bracket_sums, eval_cfe, even_length_cfe, negative_cfe, positive_cfe, BracketSums, CfeError,
    ContinuedFraction, Flavor,
};
pub use laurent::{Degree, LaurentPoly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
