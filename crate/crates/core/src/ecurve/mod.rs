//! Weierstrass models over `Q`, their invariants, the group law, reduction
//! types and the Frey construction.

mod frey;
mod group;
mod model;
mod reduction;

pub use frey::{frey_curve, FreyData};
pub use group::{
    add_points, is_on_curve, negate_point, scalar_mul, two_torsion, CurveField, CurveLaw,
    CurvePoint, FpCurve, TwoTorsion, TwoTorsionStructure, COMPLEX_ZERO_TOL,
};
pub use model::{Invariants, WeierstrassModel};
pub use reduction::{
    conductor, reduction_type, root_coincidence, Conductor, ConductorFactor, ReductionType,
    RootCoincidence,
};
