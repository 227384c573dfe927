//! Hatcher-Oertel edge-path systems and the two candidate surfaces `S(M, x*)` and `R`.

pub mod candidate;
pub mod farey;
pub mod state;

pub use candidate::{
    boundary_slope, build_reference_surface, build_sstar_surface, endpoint_coords, euler_over_sheets,
    incompressibility_check, sstar_vector, twist_number, CandidateSurface, CurveCoords, SurfaceKind, Verdict,
};
pub use farey::{edgepath_from_negative_cfe, EdgePath, FareyVertex, SurfaceError};
pub use state::{reference_slope, state_surface_slope};
