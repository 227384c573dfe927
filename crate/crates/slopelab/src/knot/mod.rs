//! Montesinos and pretzel knots, their standard diagrams and writhes.

pub mod diagram;
pub mod model;
pub mod tangle;

pub use diagram::{Diagram, DiagramError, PdCrossing};
pub use model::{
    associated_pretzel, classify, normalize_reduced, AssociatedPretzelData, KnotError, KnotSpec,
    LinkType, MontesinosKnot, PretzelKnot,
};
pub use tangle::Tangle;
