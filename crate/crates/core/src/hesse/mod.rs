//! The Hesse pencil of cubics invariant under the Heisenberg action.

pub mod flex;
pub mod pencil;
pub mod polar;

pub use flex::{
    base_points, exception_partition, flex_data, flex_meeting_points, listed_exceptions, nine_line_incidence,
    orbit_sizes, structural_equianharmonic, tangent_line, ExceptionRow, FlexData, MeetingPoint, MeetingPoints,
    StructuralTest,
};
pub use pencil::{
    hesse_cubic, hesse_cubic_generic, hesse_member, hessian_curve, hessian_form, hessian_identity_scalar, nu_generic,
    ParamClass, PencilParam,
};
pub use polar::{
    concurrency_cubic, conic_matrix, homological_locus, polar_conic, polar_determinant_is_hessian_member,
    polar_pencil_determinant, polar_pencil_target, rank3, LinePencilPair, PolarConic,
};
